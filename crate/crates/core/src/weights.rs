//! Charges, weights and degree of a potential.
//!
//! The charge vector is q = A^{-1} 1. The degree d is the smallest positive
//! integer with d*q integral, and the weights are w = d*q, so every monomial
//! is w-homogeneous of degree d. Two predicates matter downstream: the
//! normalisation of w (gcd of any n-1 weights is 1) and the Calabi-Yau
//! condition (sum of weights equals the degree).

use num_integer::Integer;
use num_traits::Zero;

use crate::delsarte::DelsartePolynomial;
use crate::error::{Error, Result};
use crate::matrix;
use crate::rational::{self, Rat};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightSystem {
    charges: Vec<Rat>,
    weights: Vec<i64>,
    degree: i64,
}

impl WeightSystem {
    /// Compute the weight system of a potential in exact arithmetic.
    ///
    /// # Errors
    /// `NonPositiveCharge` when some entry of A^{-1} 1 is zero or negative.
    pub fn of(p: &DelsartePolynomial) -> Result<Self> {
        let charges = charges(p)?;
        for (index, q) in charges.iter().enumerate() {
            if *q <= Rat::zero() {
                return Err(Error::NonPositiveCharge {
                    index,
                    value: rational::to_string(*q),
                });
            }
        }
        let degree = rational::denominator_lcm(&charges);
        let weights: Vec<i64> = charges
            .iter()
            .map(|q| (q * Rat::from_integer(degree)).to_integer())
            .collect();
        debug_assert_eq!(weights.iter().fold(0, |acc: i64, w| acc.gcd(w)), 1);
        Ok(Self {
            charges,
            weights,
            degree,
        })
    }

    pub fn charges(&self) -> &[Rat] {
        &self.charges
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    /// True when the gcd of the weights with any single entry omitted is 1.
    pub fn is_normalized(&self) -> bool {
        is_normalized_weights(&self.weights)
    }

    /// True when the weights sum to the degree.
    pub fn is_calabi_yau(&self) -> bool {
        self.weights.iter().sum::<i64>() == self.degree
    }

    /// Error unless the Calabi-Yau condition holds.
    pub fn require_calabi_yau(&self) -> Result<()> {
        if self.is_calabi_yau() {
            Ok(())
        } else {
            Err(Error::NotCalabiYau {
                weight_sum: self.weights.iter().sum(),
                degree: self.degree,
            })
        }
    }
}

/// The raw charge vector A^{-1} 1. Available even when some entries are not
/// positive (the weight system then does not exist, but the phases of the
/// distinguished symmetry still do).
pub fn charges(p: &DelsartePolynomial) -> Result<Vec<Rat>> {
    let a = p.matrix_i128();
    let ones = vec![1i128; p.n()];
    matrix::solve(&a, &ones)?
        .ok_or_else(|| Error::Internal("exponent matrix became singular".into()))
}

/// Normalisation check on a raw weight vector.
pub fn is_normalized_weights(weights: &[i64]) -> bool {
    if weights.len() == 1 {
        return weights[0] == 1;
    }
    (0..weights.len()).all(|omit| {
        weights
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != omit)
            .fold(0i64, |acc, (_, w)| acc.gcd(w))
            == 1
    })
}

/// Degree of each monomial under the weight vector; by construction all
/// entries equal the degree, which tests assert.
pub fn degrees_of_monomials(p: &DelsartePolynomial, ws: &WeightSystem) -> Vec<i64> {
    p.exponents()
        .iter()
        .map(|row| {
            row.iter()
                .zip(ws.weights())
                .map(|(&e, &w)| e as i64 * w)
                .sum()
        })
        .collect()
}
