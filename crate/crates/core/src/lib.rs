//! Exact-arithmetic toolkit for invertible Delsarte-type potentials and the
//! mirror constructions built on them.
//!
//! The library covers, with no floating point anywhere:
//!
//! - parsing and structural classification of Delsarte potentials
//!   ([`delsarte`], [`atoms`]);
//! - charges, weights and the Calabi-Yau / normalisation predicates
//!   ([`weights`]);
//! - the finite abelian groups of diagonal symmetries, their
//!   determinant-one subgroups and projective quotients ([`symmetry`]);
//! - the transposition pairing and orthogonal-complement (transposed)
//!   groups ([`duality`]);
//! - the twist construction gluing a split curve and surface potential into
//!   a product model, with its weight identities ([`twist`]);
//! - the splitting isomorphism between the product quotient and the factor
//!   quotients, and its compatibility with transposition ([`splitting`]);
//! - the (r, a, delta) invariants of K3 involutions, fixed-locus and Hodge
//!   formulas, lattice mirrors and the family catalog ([`nikulin`]);
//! - embedded fixtures shared by tests and the CLI ([`fixtures`]).
//!
//! All values are immutable after construction and every operation is a
//! pure function, so the whole API is safe for concurrent use.

pub mod atoms;
pub mod delsarte;
pub mod duality;
pub mod error;
pub mod fixtures;
mod matrix;
pub mod nikulin;
pub mod parse;
pub mod rational;
pub mod splitting;
pub mod symmetry;
pub mod twist;
pub mod weights;

pub use atoms::{atomic_decomposition, Atom, AtomicDecomposition};
pub use delsarte::DelsartePolynomial;
pub use duality::{pairing, transposed_group, PairingValue};
pub use error::{Error, ErrorKind, Result};
pub use nikulin::{Availability, NikulinTriple};
pub use parse::{parse, parse_with_variables, ParseOutcome};
pub use splitting::{
    verify_transposed_splitting, verify_transposed_splitting_with, SplitElement, SplittingCheck,
    ThetaMap,
};
pub use symmetry::{j_element, DiagonalSymmetry, GroupKind, SymmetryGroup, DEFAULT_ENUM_CAP};
pub use twist::{build_twist_model, twist_parameters, TwistModel, TwistParameters};
pub use weights::WeightSystem;
