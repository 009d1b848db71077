//! Diagonal symmetries of a potential and their finite abelian groups.
//!
//! A diagonal symmetry is written additively as a vector of phases
//! v in [0,1)^n: the corresponding automorphism multiplies the j-th
//! coordinate by exp(2 pi i v_j). The full diagonal symmetry group of a
//! potential with exponent matrix A is A^{-1}Z^n / Z^n, of order |det A|;
//! the determinant-one subgroup is cut out by an integral phase sum, and the
//! projective quotient divides by the cyclic subgroup generated by the
//! charge vector. Groups are stored by explicit enumeration with canonical
//! (lexicographically least) coset representatives, which keeps orthogonal
//! complements and quotient arithmetic straightforward and deterministic.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use num_traits::Zero;

use crate::delsarte::DelsartePolynomial;
use crate::error::{Error, Result};
use crate::matrix;
use crate::rational::{self, is_integral, reduce_mod_one, Rat};
use crate::weights;

/// Default cap on group enumeration; override per call, or through
/// `BHCR_ENUM_CAP` in the command-line tool.
pub const DEFAULT_ENUM_CAP: u64 = 1_000_000;

/// An element of the diagonal symmetry group, canonicalised into [0,1)^n
/// with reduced fractions.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DiagonalSymmetry {
    phases: Vec<Rat>,
}

impl DiagonalSymmetry {
    /// Canonicalise arbitrary rational phases into [0,1).
    pub fn new(phases: Vec<Rat>) -> Self {
        Self {
            phases: phases.into_iter().map(reduce_mod_one).collect(),
        }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            phases: vec![Rat::zero(); n],
        }
    }

    pub fn phases(&self) -> &[Rat] {
        &self.phases
    }

    pub fn n(&self) -> usize {
        self.phases.len()
    }

    pub fn is_identity(&self) -> bool {
        self.phases.iter().all(|p| p.is_zero())
    }

    /// Group law: componentwise addition mod 1.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::DimensionMismatch {
                expected: self.n(),
                got: other.n(),
            });
        }
        Ok(Self::new(
            self.phases
                .iter()
                .zip(&other.phases)
                .map(|(a, b)| a + b)
                .collect(),
        ))
    }

    /// k-fold sum (k may be negative).
    pub fn scale(&self, k: i64) -> Self {
        Self::new(
            self.phases
                .iter()
                .map(|p| p * Rat::from_integer(k))
                .collect(),
        )
    }

    pub fn inverse(&self) -> Self {
        self.scale(-1)
    }

    /// Order in the group: the lcm of the phase denominators.
    pub fn order(&self) -> i64 {
        rational::denominator_lcm(&self.phases)
    }

    pub fn phase_sum(&self) -> Rat {
        self.phases.iter().sum()
    }

    /// Determinant-one condition in phase language.
    pub fn has_integral_sum(&self) -> bool {
        is_integral(self.phase_sum())
    }
}

impl fmt::Display for DiagonalSymmetry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .phases
            .iter()
            .map(|p| rational::to_string(*p))
            .collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// The distinguished symmetry with phases equal to the charges mod 1; it
/// generates the subgroup acting trivially on the weighted projective space,
/// and its order equals the degree of the potential.
pub fn j_element(p: &DelsartePolynomial) -> Result<DiagonalSymmetry> {
    Ok(DiagonalSymmetry::new(weights::charges(p)?))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupKind {
    /// All diagonal symmetries.
    Aut,
    /// Determinant-one symmetries (integral phase sum).
    Sl,
    /// Determinant-one symmetries modulo the distinguished cyclic subgroup;
    /// elements are canonical coset representatives.
    SlTilde,
}

/// A finite abelian group (or subgroup) of diagonal symmetries, enumerated
/// explicitly. Immutable after construction.
#[derive(Debug, Clone)]
pub struct SymmetryGroup {
    kind: GroupKind,
    polynomial: DelsartePolynomial,
    /// Elements of the distinguished cyclic subgroup, used to canonicalise
    /// coset representatives when `kind == SlTilde`.
    j_orbit: Vec<DiagonalSymmetry>,
    /// Sorted canonical elements.
    elements: Vec<DiagonalSymmetry>,
}

impl SymmetryGroup {
    /// The full diagonal symmetry group, of order |det A|.
    pub fn aut(p: &DelsartePolynomial) -> Result<Self> {
        Self::aut_with_cap(p, DEFAULT_ENUM_CAP)
    }

    pub fn aut_with_cap(p: &DelsartePolynomial, cap: u64) -> Result<Self> {
        let order = p.determinant()?.unsigned_abs();
        if order > cap as u128 {
            return Err(Error::EnumerationCapExceeded { order, cap });
        }
        let elements = enumerate_aut(p)?;
        if elements.len() as u128 != order {
            return Err(Error::Internal(format!(
                "enumerated {} elements but |det A| = {order}",
                elements.len()
            )));
        }
        Ok(Self {
            kind: GroupKind::Aut,
            polynomial: p.clone(),
            j_orbit: j_orbit(p)?,
            elements,
        })
    }

    /// The determinant-one subgroup, with its order verified against
    /// |det A| / d^T where d^T is the degree of the transposed potential.
    pub fn sl(p: &DelsartePolynomial) -> Result<Self> {
        Self::sl_with_cap(p, DEFAULT_ENUM_CAP)
    }

    pub fn sl_with_cap(p: &DelsartePolynomial, cap: u64) -> Result<Self> {
        let aut = Self::aut_with_cap(p, cap)?;
        let elements: Vec<DiagonalSymmetry> = aut
            .elements
            .into_iter()
            .filter(|v| v.has_integral_sum())
            .collect();
        let det = p.determinant()?.unsigned_abs();
        let dual_degree = transposed_degree(p)?;
        let expected = det / dual_degree as u128;
        if expected * dual_degree as u128 != det || elements.len() as u128 != expected {
            return Err(Error::OrderFormulaMismatch {
                group: "SL",
                enumerated: elements.len() as u64,
                expected: format!("{det}/{dual_degree}"),
            });
        }
        Ok(Self {
            kind: GroupKind::Sl,
            polynomial: p.clone(),
            j_orbit: aut.j_orbit,
            elements,
        })
    }

    /// The projective quotient of the determinant-one subgroup: one
    /// lexicographically least representative per coset of the distinguished
    /// cyclic subgroup. Its order is verified against
    /// |det A| / (d * d^T).
    pub fn sl_tilde(p: &DelsartePolynomial) -> Result<Self> {
        Self::sl_tilde_with_cap(p, DEFAULT_ENUM_CAP)
    }

    pub fn sl_tilde_with_cap(p: &DelsartePolynomial, cap: u64) -> Result<Self> {
        let sl = Self::sl_with_cap(p, cap)?;
        let j = j_element(p)?;
        if !j.has_integral_sum() {
            // The distinguished subgroup must sit inside the determinant-one
            // group for the quotient to exist; equivalent to the Calabi-Yau
            // condition for the potentials in scope.
            let d = j.order();
            let q = weights::charges(p)?;
            let weight_sum: Rat = q.iter().map(|qi| qi * Rat::from_integer(d)).sum();
            return Err(Error::NotCalabiYau {
                weight_sum: weight_sum.to_integer(),
                degree: d,
            });
        }
        let mut assigned: BTreeSet<DiagonalSymmetry> = BTreeSet::new();
        let mut representatives = Vec::new();
        for element in &sl.elements {
            if assigned.contains(element) {
                continue;
            }
            let coset: Vec<DiagonalSymmetry> = sl
                .j_orbit
                .iter()
                .map(|jk| element.add(jk).expect("same dimension"))
                .collect();
            let representative = coset.iter().min().expect("nonempty coset").clone();
            for member in coset {
                assigned.insert(member);
            }
            representatives.push(representative);
        }
        representatives.sort();

        let det = p.determinant()?.unsigned_abs();
        let degree = j.order() as u128;
        let dual_degree = transposed_degree(p)? as u128;
        let expected = det / (degree * dual_degree);
        if expected * degree * dual_degree != det || representatives.len() as u128 != expected {
            return Err(Error::OrderFormulaMismatch {
                group: "SL/J",
                enumerated: representatives.len() as u64,
                expected: format!("{det}/({degree}*{dual_degree})"),
            });
        }
        Ok(Self {
            kind: GroupKind::SlTilde,
            polynomial: p.clone(),
            j_orbit: sl.j_orbit,
            elements: representatives,
        })
    }

    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    pub fn polynomial(&self) -> &DelsartePolynomial {
        &self.polynomial
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn elements(&self) -> &[DiagonalSymmetry] {
        &self.elements
    }

    pub fn identity(&self) -> DiagonalSymmetry {
        DiagonalSymmetry::identity(self.polynomial.n())
    }

    pub fn contains(&self, element: &DiagonalSymmetry) -> bool {
        self.elements.binary_search(element).is_ok()
    }

    /// Canonicalise an arbitrary phase vector to its representative in this
    /// group.
    ///
    /// # Errors
    /// `NotAMember` when the vector does not define an element of the group
    /// (or, for subgroups, lies outside them); `DimensionMismatch` on length
    /// mismatch.
    pub fn class_of(&self, raw: &DiagonalSymmetry) -> Result<DiagonalSymmetry> {
        if raw.n() != self.polynomial.n() {
            return Err(Error::DimensionMismatch {
                expected: self.polynomial.n(),
                got: raw.n(),
            });
        }
        let canonical = DiagonalSymmetry::new(raw.phases().to_vec());
        if !in_ambient_aut(&self.polynomial, &canonical) {
            return Err(Error::NotAMember(canonical.to_string()));
        }
        let reduced = match self.kind {
            GroupKind::Aut => canonical,
            GroupKind::Sl => {
                if !canonical.has_integral_sum() {
                    return Err(Error::NotAMember(canonical.to_string()));
                }
                canonical
            }
            GroupKind::SlTilde => {
                if !canonical.has_integral_sum() {
                    return Err(Error::NotAMember(canonical.to_string()));
                }
                self.coset_representative(&canonical)
            }
        };
        if !self.contains(&reduced) {
            return Err(Error::NotAMember(reduced.to_string()));
        }
        Ok(reduced)
    }

    /// Group law in canonical representatives.
    pub fn compose(&self, a: &DiagonalSymmetry, b: &DiagonalSymmetry) -> Result<DiagonalSymmetry> {
        let sum = a.add(b)?;
        Ok(match self.kind {
            GroupKind::SlTilde => self.coset_representative(&sum),
            _ => sum,
        })
    }

    fn coset_representative(&self, element: &DiagonalSymmetry) -> DiagonalSymmetry {
        self.j_orbit
            .iter()
            .map(|jk| element.add(jk).expect("same dimension"))
            .min()
            .expect("distinguished orbit is nonempty")
    }

    /// The subgroup generated by `generators` (closure under the group law).
    ///
    /// # Errors
    /// `NotAMember` when a generator lies outside this group.
    pub fn subgroup_generated(&self, generators: &[DiagonalSymmetry]) -> Result<SymmetryGroup> {
        let canonical: Vec<DiagonalSymmetry> = generators
            .iter()
            .map(|g| self.class_of(g))
            .collect::<Result<_>>()?;
        let mut closed: BTreeSet<DiagonalSymmetry> = BTreeSet::new();
        closed.insert(self.identity());
        let mut queue: VecDeque<DiagonalSymmetry> = closed.iter().cloned().collect();
        while let Some(current) = queue.pop_front() {
            for g in &canonical {
                let next = self.compose(&current, g)?;
                if closed.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        Ok(SymmetryGroup {
            kind: self.kind,
            polynomial: self.polynomial.clone(),
            j_orbit: self.j_orbit.clone(),
            elements: closed.into_iter().collect(),
        })
    }

    /// Build the subgroup with exactly these elements; validates closure.
    pub fn subgroup_from_elements(&self, elements: &[DiagonalSymmetry]) -> Result<SymmetryGroup> {
        let group = self.subgroup_generated(elements)?;
        if group.order() as usize != elements.len() {
            return Err(Error::NotASubgroup(format!(
                "{} elements generate a group of order {}",
                elements.len(),
                group.order()
            )));
        }
        Ok(group)
    }

    /// All subgroups, by breadth-first extension of the subgroup lattice.
    /// Practical for the small groups in scope.
    pub fn all_subgroups(&self) -> Result<Vec<SymmetryGroup>> {
        let trivial = self.subgroup_generated(&[])?;
        let mut seen: BTreeSet<Vec<DiagonalSymmetry>> = BTreeSet::new();
        seen.insert(trivial.elements.clone());
        let mut result = vec![trivial];
        let mut frontier = 0usize;
        while frontier < result.len() {
            let current = result[frontier].clone();
            frontier += 1;
            for g in &self.elements {
                if current.contains(g) {
                    continue;
                }
                let mut gens = current.elements.clone();
                gens.push(g.clone());
                let extended = self.subgroup_generated(&gens)?;
                if seen.insert(extended.elements.clone()) {
                    result.push(extended);
                }
            }
        }
        result.sort_by_key(|g| (g.order(), g.elements.clone()));
        Ok(result)
    }

    /// Same underlying element set (and ambient potential).
    pub fn same_elements(&self, other: &SymmetryGroup) -> bool {
        self.polynomial == other.polynomial && self.elements == other.elements
    }
}

/// Membership of a canonical phase vector in the ambient symmetry group:
/// A v must be integral.
fn in_ambient_aut(p: &DelsartePolynomial, v: &DiagonalSymmetry) -> bool {
    p.exponents().iter().all(|row| {
        let sum: Rat = row
            .iter()
            .zip(v.phases())
            .map(|(&e, phase)| Rat::from_integer(e as i64) * phase)
            .sum();
        is_integral(sum)
    })
}

fn j_orbit(p: &DelsartePolynomial) -> Result<Vec<DiagonalSymmetry>> {
    let j = j_element(p)?;
    let order = j.order();
    Ok((0..order).map(|k| j.scale(k)).collect())
}

/// lcm of the denominators of the transposed charges; equals the degree of
/// the transposed potential whenever that weight system exists, and is the
/// quantity entering the order formulas in general.
fn transposed_degree(p: &DelsartePolynomial) -> Result<i64> {
    let dual_charges = weights::charges(&p.transpose())?;
    Ok(rational::denominator_lcm(&dual_charges))
}

fn enumerate_aut(p: &DelsartePolynomial) -> Result<Vec<DiagonalSymmetry>> {
    let columns = matrix::inverse_columns(&p.matrix_i128())?
        .ok_or_else(|| Error::Internal("exponent matrix became singular".into()))?;
    let generators: Vec<DiagonalSymmetry> =
        columns.into_iter().map(DiagonalSymmetry::new).collect();
    let mut closed: BTreeSet<DiagonalSymmetry> = BTreeSet::new();
    closed.insert(DiagonalSymmetry::identity(p.n()));
    let mut queue: VecDeque<DiagonalSymmetry> = closed.iter().cloned().collect();
    while let Some(current) = queue.pop_front() {
        for g in &generators {
            let next = current.add(g)?;
            if closed.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    Ok(closed.into_iter().collect())
}
