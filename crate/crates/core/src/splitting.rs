//! The splitting isomorphism between the projective symmetry quotient of a
//! product model and the quotients of its two factors.
//!
//! Every class in the product quotient has a representative whose curve
//! phases and surface phases separately sum to integers (multiply by the
//! distinguished element if they do not; its two halves each have phase sum
//! 1/2). Prepending a zero phase to each half then lands in the respective
//! factor quotients:
//!
//! ```text
//! theta [(a1,a2,b1,b2,b3)] = ([(0,a1,a2)], [(0,b1,b2,b3)])
//! ```
//!
//! The inverse drops the first phase of the factor representatives chosen
//! with first phase zero and concatenates. Both directions are verified
//! exhaustively in the test suite; the map is only available when the
//! transposed split weights are coprime, which is exactly when the order
//! identity |Q(product)| = |Q(curve)| * |Q(surface)| holds.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rational::{is_integral, Rat};
use crate::symmetry::{j_element, DiagonalSymmetry, SymmetryGroup, DEFAULT_ENUM_CAP};
use crate::twist::TwistModel;
use crate::{duality, weights};

/// Image of a product class under the splitting map.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct SplitElement {
    pub curve_part: DiagonalSymmetry,
    pub surface_part: DiagonalSymmetry,
}

impl std::fmt::Display for SplitElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.curve_part, self.surface_part)
    }
}

/// The splitting isomorphism for one product model, with the three quotient
/// groups it connects enumerated up front.
#[derive(Debug, Clone)]
pub struct ThetaMap {
    product_quotient: SymmetryGroup,
    curve_quotient: SymmetryGroup,
    surface_quotient: SymmetryGroup,
    product_j: DiagonalSymmetry,
    curve_j: DiagonalSymmetry,
    surface_j: DiagonalSymmetry,
}

impl ThetaMap {
    pub fn new(model: &TwistModel) -> Result<Self> {
        Self::with_cap(model, DEFAULT_ENUM_CAP)
    }

    pub fn with_cap(model: &TwistModel, cap: u64) -> Result<Self> {
        // The transposed split weights must be coprime for the map to be an
        // isomorphism; surface the obstruction before enumerating anything.
        let u0t = first_weight(&model.curve().transpose())?;
        let v0t = first_weight(&model.surface().transpose())?;
        if num_integer::gcd(u0t, v0t) != 1 {
            return Err(Error::TransposedGcdObstruction { u0t, v0t });
        }

        let product_quotient = SymmetryGroup::sl_tilde_with_cap(model.product(), cap)?;
        let curve_quotient = SymmetryGroup::sl_tilde_with_cap(model.curve(), cap)?;
        let surface_quotient = SymmetryGroup::sl_tilde_with_cap(model.surface(), cap)?;
        if product_quotient.order() != curve_quotient.order() * surface_quotient.order() {
            return Err(Error::Internal(format!(
                "quotient orders do not split: {} != {} * {}",
                product_quotient.order(),
                curve_quotient.order(),
                surface_quotient.order()
            )));
        }
        let product_j = j_element(model.product())?;
        let curve_j = j_element(model.curve())?;
        let surface_j = j_element(model.surface())?;
        Ok(Self {
            product_quotient,
            curve_quotient,
            surface_quotient,
            product_j,
            curve_j,
            surface_j,
        })
    }

    pub fn product_quotient(&self) -> &SymmetryGroup {
        &self.product_quotient
    }

    pub fn curve_quotient(&self) -> &SymmetryGroup {
        &self.curve_quotient
    }

    pub fn surface_quotient(&self) -> &SymmetryGroup {
        &self.surface_quotient
    }

    /// Split a product class into its factor classes.
    pub fn apply(&self, element: &DiagonalSymmetry) -> Result<SplitElement> {
        let class = self.product_quotient.class_of(element)?;
        let order = self.product_j.order();
        for k in 0..order {
            let representative = class.add(&self.product_j.scale(k))?;
            let curve_sum: Rat = representative.phases()[..2].iter().sum();
            if !is_integral(curve_sum) {
                continue;
            }
            // total sum is integral, so the surface half is integral too
            debug_assert!(is_integral(representative.phases()[2..].iter().sum()));
            let curve_part =
                self.factor_class(&self.curve_quotient, &representative.phases()[..2])?;
            let surface_part =
                self.factor_class(&self.surface_quotient, &representative.phases()[2..])?;
            return Ok(SplitElement {
                curve_part,
                surface_part,
            });
        }
        Err(Error::NoDeterminantOneRepresentative(class.to_string()))
    }

    fn factor_class(
        &self,
        quotient: &SymmetryGroup,
        tail_phases: &[Rat],
    ) -> Result<DiagonalSymmetry> {
        let mut phases = Vec::with_capacity(tail_phases.len() + 1);
        phases.push(Rat::zero());
        phases.extend_from_slice(tail_phases);
        quotient
            .class_of(&DiagonalSymmetry::new(phases))
            .map_err(|e| Error::Internal(format!("split half left its quotient: {e}")))
    }

    /// Reassemble a product class from factor classes.
    pub fn invert(&self, split: &SplitElement) -> Result<DiagonalSymmetry> {
        let curve = self.curve_quotient.class_of(&split.curve_part)?;
        let surface = self.surface_quotient.class_of(&split.surface_part)?;
        let alpha = self.zero_first_representative(&curve, &self.curve_j)?;
        let beta = self.zero_first_representative(&surface, &self.surface_j)?;
        let mut phases = alpha.phases()[1..].to_vec();
        phases.extend_from_slice(&beta.phases()[1..]);
        self.product_quotient
            .class_of(&DiagonalSymmetry::new(phases))
            .map_err(|_| Error::NotInImage(split.to_string()))
    }

    fn zero_first_representative(
        &self,
        class: &DiagonalSymmetry,
        j: &DiagonalSymmetry,
    ) -> Result<DiagonalSymmetry> {
        for k in 0..j.order() {
            let candidate = class.add(&j.scale(k))?;
            if candidate.phases()[0].is_zero() {
                return Ok(candidate);
            }
        }
        Err(Error::NotInImage(class.to_string()))
    }

    /// The preimage of `curve_group` x `surface_group` inside the product
    /// quotient; a subgroup of order |curve_group| * |surface_group|.
    pub fn product_group(
        &self,
        curve_group: &SymmetryGroup,
        surface_group: &SymmetryGroup,
    ) -> Result<SymmetryGroup> {
        self.check_factor_subgroup(curve_group, &self.curve_quotient, "curve")?;
        self.check_factor_subgroup(surface_group, &self.surface_quotient, "surface")?;
        let mut elements = Vec::new();
        for a in curve_group.elements() {
            for b in surface_group.elements() {
                elements.push(self.invert(&SplitElement {
                    curve_part: a.clone(),
                    surface_part: b.clone(),
                })?);
            }
        }
        let group = self.product_quotient.subgroup_from_elements(&elements)?;
        if group.order() != curve_group.order() * surface_group.order() {
            return Err(Error::Internal(format!(
                "product group order {} != {} * {}",
                group.order(),
                curve_group.order(),
                surface_group.order()
            )));
        }
        Ok(group)
    }

    fn check_factor_subgroup(
        &self,
        group: &SymmetryGroup,
        ambient: &SymmetryGroup,
        role: &str,
    ) -> Result<()> {
        if group.polynomial() != ambient.polynomial()
            || !group.elements().iter().all(|e| ambient.contains(e))
        {
            return Err(Error::NotASubgroup(format!(
                "{role} group is not a subgroup of the {role} quotient"
            )));
        }
        Ok(())
    }
}

/// Both sides of the transposed-splitting identity, computed explicitly.
#[derive(Debug, Clone)]
pub struct SplittingCheck {
    /// The transposed product group, pushed through the transposed split.
    pub left: Vec<SplitElement>,
    /// The product of the factor transposed groups.
    pub right: Vec<SplitElement>,
    pub holds: bool,
}

/// Verify that transposing the product group splits into the transposed
/// factor groups: the split image of (G_{E,S})^T must equal
/// G_E^T x G_S^T elementwise.
pub fn verify_transposed_splitting(
    model: &TwistModel,
    curve_group: &SymmetryGroup,
    surface_group: &SymmetryGroup,
) -> Result<SplittingCheck> {
    let theta = ThetaMap::new(model)?;
    let transposed_model = model.transposed()?;
    let theta_t = ThetaMap::new(&transposed_model)?;
    verify_transposed_splitting_with(&theta, &theta_t, curve_group, surface_group)
}

/// As [`verify_transposed_splitting`], reusing already-built maps; use this
/// when sweeping many subgroup pairs of one model.
pub fn verify_transposed_splitting_with(
    theta: &ThetaMap,
    theta_t: &ThetaMap,
    curve_group: &SymmetryGroup,
    surface_group: &SymmetryGroup,
) -> Result<SplittingCheck> {
    let product_group = theta.product_group(curve_group, surface_group)?;
    let product_transposed = duality::transposed_group(&product_group, theta_t.product_quotient())?;
    let mut left: Vec<SplitElement> = product_transposed
        .elements()
        .iter()
        .map(|u| theta_t.apply(u))
        .collect::<Result<_>>()?;
    left.sort();

    let curve_transposed = duality::transposed_group(curve_group, theta_t.curve_quotient())?;
    let surface_transposed = duality::transposed_group(surface_group, theta_t.surface_quotient())?;
    let mut right = Vec::new();
    for a in curve_transposed.elements() {
        for b in surface_transposed.elements() {
            right.push(SplitElement {
                curve_part: a.clone(),
                surface_part: b.clone(),
            });
        }
    }
    right.sort();

    let holds = left == right;
    Ok(SplittingCheck { left, right, holds })
}

fn first_weight(p: &crate::delsarte::DelsartePolynomial) -> Result<i64> {
    Ok(weights::WeightSystem::of(p)?.weights()[0])
}
