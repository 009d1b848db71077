//! Potentials of Delsarte type: n monomials in n variables, characterised by
//! a square invertible exponent matrix A (row i = exponent vector of
//! monomial i). Coefficients are normalised away; everything downstream
//! works on A alone.
//!
//! Monomials are stored in presentation order, because transposition pairs
//! monomial i with variable i and is an involution only on presented
//! matrices. Serialisation (`Display`, `canonical_exponents`) sorts
//! monomials descending-lexicographically for stable output.

use std::fmt;

use crate::error::{Error, Result};
use crate::matrix;

/// Hard limit for the permutation-equivalence search; every object in scope
/// has n <= 6.
const PERMUTATION_SEARCH_LIMIT: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DelsartePolynomial {
    var_names: Vec<String>,
    exponents: Vec<Vec<u64>>,
}

impl DelsartePolynomial {
    /// Build and validate a potential.
    ///
    /// # Errors
    /// `NonSquare`, `DuplicateMonomial`, `SingularMatrix` when the exponent
    /// data does not describe an invertible Delsarte potential.
    pub fn new(var_names: Vec<String>, exponents: Vec<Vec<u64>>) -> Result<Self> {
        let n = var_names.len();
        if n == 0 || exponents.iter().any(|row| row.len() != n) {
            return Err(Error::NonSquare {
                monomials: exponents.len(),
                variables: n,
            });
        }
        // a duplicated monomial is the more precise complaint, so it is
        // checked before the monomial count
        for (i, row) in exponents.iter().enumerate() {
            if exponents[i + 1..].contains(row) {
                return Err(Error::DuplicateMonomial(monomial_text(&var_names, row)));
            }
        }
        if exponents.len() != n {
            return Err(Error::NonSquare {
                monomials: exponents.len(),
                variables: n,
            });
        }
        if exponents.iter().any(|row| row.iter().all(|&e| e == 0)) {
            return Err(Error::SingularMatrix("a monomial has no variables".into()));
        }
        for j in 0..n {
            if exponents.iter().all(|row| row[j] == 0) {
                return Err(Error::SingularMatrix(format!(
                    "variable `{}` appears in no monomial",
                    var_names[j]
                )));
            }
        }
        let poly = Self {
            var_names,
            exponents,
        };
        if poly.determinant()? == 0 {
            return Err(Error::SingularMatrix("det A = 0".into()));
        }
        Ok(poly)
    }

    /// Number of variables (= number of monomials).
    pub fn n(&self) -> usize {
        self.var_names.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.var_names
    }

    /// Exponent rows in presentation order.
    pub fn exponents(&self) -> &[Vec<u64>] {
        &self.exponents
    }

    /// Exponent rows sorted descending-lexicographically; the stable order
    /// used for serialisation.
    pub fn canonical_exponents(&self) -> Vec<Vec<u64>> {
        let mut rows = self.exponents.clone();
        rows.sort_by(|a, b| b.cmp(a));
        rows
    }

    /// The exponent matrix converted for exact linear algebra.
    pub fn matrix_i128(&self) -> Vec<Vec<i128>> {
        self.exponents
            .iter()
            .map(|row| row.iter().map(|&e| e as i128).collect())
            .collect()
    }

    pub fn determinant(&self) -> Result<i128> {
        matrix::determinant(&self.matrix_i128())
    }

    /// The potential of the transposed exponent matrix, over the same
    /// variables. An involution.
    pub fn transpose(&self) -> Self {
        let n = self.n();
        let mut rows = vec![vec![0u64; n]; n];
        for (i, row) in self.exponents.iter().enumerate() {
            for (j, &e) in row.iter().enumerate() {
                rows[j][i] = e;
            }
        }
        // Columns of an invertible matrix are distinct and nonzero, so the
        // transpose always validates.
        Self::new(self.var_names.clone(), rows).expect("transpose of a valid potential is valid")
    }

    /// Text of a single monomial in presentation order.
    pub fn monomial(&self, index: usize) -> String {
        monomial_text(&self.var_names, &self.exponents[index])
    }

    /// All monomial texts in presentation order.
    pub fn monomials(&self) -> Vec<String> {
        (0..self.n()).map(|i| self.monomial(i)).collect()
    }

    /// Search for permutations `(rows, cols)` with
    /// `self.exponents[rows[i]][cols[j]] == other.exponents[i][j]`.
    ///
    /// Exhaustive over column permutations; rows are then matched by
    /// sorting, which is exact because monomial rows are pairwise distinct.
    /// Absence of a permutation is a normal `None`.
    pub fn equivalent_up_to_permutation(
        &self,
        other: &Self,
    ) -> Result<Option<(Vec<usize>, Vec<usize>)>> {
        let n = self.n();
        if n != other.n() {
            return Ok(None);
        }
        if n > PERMUTATION_SEARCH_LIMIT {
            return Err(Error::SearchSpaceTooLarge {
                n,
                limit: PERMUTATION_SEARCH_LIMIT,
            });
        }
        // Entry multisets must agree; cheap pruning before the factorial scan.
        let mut ours: Vec<u64> = self.exponents.iter().flatten().copied().collect();
        let mut theirs: Vec<u64> = other.exponents.iter().flatten().copied().collect();
        ours.sort_unstable();
        theirs.sort_unstable();
        if ours != theirs {
            return Ok(None);
        }
        let mut target: Vec<(Vec<u64>, usize)> = other
            .exponents
            .iter()
            .enumerate()
            .map(|(i, row)| (row.clone(), i))
            .collect();
        target.sort();
        for cols in permutations(n) {
            let mut candidate: Vec<(Vec<u64>, usize)> = self
                .exponents
                .iter()
                .enumerate()
                .map(|(i, row)| {
                    let permuted: Vec<u64> = cols.iter().map(|&c| row[c]).collect();
                    (permuted, i)
                })
                .collect();
            candidate.sort();
            if candidate
                .iter()
                .zip(&target)
                .all(|((row, _), (goal, _))| row == goal)
            {
                let mut rows = vec![0usize; n];
                for ((_, self_idx), (_, other_idx)) in candidate.iter().zip(&target) {
                    rows[*other_idx] = *self_idx;
                }
                return Ok(Some((rows, cols)));
            }
        }
        Ok(None)
    }
}

impl fmt::Display for DelsartePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text: Vec<String> = self
            .canonical_exponents()
            .iter()
            .map(|row| monomial_text(&self.var_names, row))
            .collect();
        write!(f, "{}", text.join("+"))
    }
}

pub(crate) fn monomial_text(var_names: &[String], row: &[u64]) -> String {
    let factors: Vec<String> = row
        .iter()
        .enumerate()
        .filter(|&(_, &e)| e > 0)
        .map(|(j, &e)| {
            if e == 1 {
                var_names[j].clone()
            } else {
                format!("{}^{}", var_names[j], e)
            }
        })
        .collect();
    if factors.is_empty() {
        "1".to_string()
    } else {
        factors.join("*")
    }
}

/// All permutations of 0..n in lexicographic order.
pub(crate) fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut result = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    let mut used = vec![false; n];
    fn rec(
        n: usize,
        depth: usize,
        current: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if depth == n {
            out.push(current[..n].to_vec());
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                current[depth] = v;
                rec(n, depth + 1, current, used, out);
                used[v] = false;
            }
        }
    }
    rec(n, 0, &mut current, &mut used, &mut result);
    result
}
