//! Error type shared by the whole library.

use thiserror::Error;

/// Coarse classification of an error, used by callers (e.g. the CLI) to
/// decide how to report it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// Malformed or out-of-domain user input.
    Input,
    /// The input is well-formed but a mathematical precondition fails
    /// (non-coprime twist weights, undefined mirror, ...).
    Obstruction,
    /// An internal consistency check failed; this signals a bug.
    Internal,
}

#[derive(Debug, Error)]
pub enum Error {
    // ---- parsing / construction ----
    #[error("expected a square system: {monomials} monomials over {variables} variables")]
    NonSquare { monomials: usize, variables: usize },
    #[error("duplicate monomial `{0}`")]
    DuplicateMonomial(String),
    #[error("exponent matrix is singular: {0}")]
    SingularMatrix(String),
    #[error("malformed or negative exponent: {0}")]
    NegativeOrMalformedExponent(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    // ---- weight systems ----
    #[error("charge q_{index} = {value} is not positive; the potential does not define a weighted hypersurface")]
    NonPositiveCharge { index: usize, value: String },
    #[error("potential does not satisfy the Calabi-Yau condition: weight sum {weight_sum} != degree {degree}")]
    NotCalabiYau { weight_sum: i64, degree: i64 },

    // ---- symmetry groups ----
    #[error("group of order {order} exceeds the enumeration cap {cap}")]
    EnumerationCapExceeded { order: u128, cap: u64 },
    #[error(
        "order formula mismatch for {group}: enumerated {enumerated}, formula gives {expected}"
    )]
    OrderFormulaMismatch {
        group: &'static str,
        enumerated: u64,
        expected: String,
    },
    #[error("element ({0}) is not a member of the group")]
    NotAMember(String),
    #[error("phase vector has {got} entries, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },

    // ---- twist construction ----
    #[error("gcd({u0}, {v0}) != 1: twist parameters are undefined")]
    NotCoprime { u0: i64, v0: i64 },
    #[error("potential is not of the required split shape: {0}")]
    FirstMonomialNotPureSquare(String),
    #[error("weight obstruction: {0}")]
    WeightObstruction(String),
    #[error("factor is not Calabi-Yau: {0}")]
    NotCalabiYauFactor(String),
    #[error("transposed weights obstruction: gcd({u0t}, {v0t}) != 1")]
    TransposedGcdObstruction { u0t: i64, v0t: i64 },

    // ---- splitting isomorphism ----
    #[error("no determinant-one representative found for class ({0})")]
    NoDeterminantOneRepresentative(String),
    #[error("split element ({0}) is not in the image of the splitting isomorphism")]
    NotInImage(String),
    #[error("not a subgroup: {0}")]
    NotASubgroup(String),

    // ---- Nikulin triples ----
    #[error("fixed locus is not defined for the exceptional triple ({r},{a},{delta})")]
    ExceptionalTriple { r: i64, a: i64, delta: u8 },
    #[error("parity violation: {0}")]
    ParityViolation(String),
    #[error("value out of range: {0}")]
    OutOfRange(String),
    #[error("lattice mirror undefined for ({r},{a},{delta})")]
    MirrorUndefined { r: i64, a: i64, delta: u8 },

    // ---- fixtures / verification ----
    #[error("table row {row} mismatch in {field}: expected {expected}, got {got}")]
    RowMismatch {
        row: usize,
        field: &'static str,
        expected: String,
        got: String,
    },

    #[error("search space too large: n = {n} exceeds the permutation-search limit {limit}")]
    SearchSpaceTooLarge { n: usize, limit: usize },
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    /// Which class the error belongs to; mirrors the CLI exit-code contract.
    pub fn kind(&self) -> ErrorKind {
        use Error::*;
        match self {
            NonSquare { .. }
            | DuplicateMonomial(_)
            | SingularMatrix(_)
            | NegativeOrMalformedExponent(_)
            | UnknownVariable(_)
            | DimensionMismatch { .. }
            | OutOfRange(_)
            | ParityViolation(_)
            | SearchSpaceTooLarge { .. } => ErrorKind::Input,

            NonPositiveCharge { .. }
            | NotCalabiYau { .. }
            | EnumerationCapExceeded { .. }
            | NotAMember(_)
            | NotCoprime { .. }
            | FirstMonomialNotPureSquare(_)
            | WeightObstruction(_)
            | NotCalabiYauFactor(_)
            | TransposedGcdObstruction { .. }
            | NotASubgroup(_)
            | ExceptionalTriple { .. }
            | MirrorUndefined { .. } => ErrorKind::Obstruction,

            OrderFormulaMismatch { .. }
            | NoDeterminantOneRepresentative(_)
            | NotInImage(_)
            | RowMismatch { .. }
            | Internal(_) => ErrorKind::Internal,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
