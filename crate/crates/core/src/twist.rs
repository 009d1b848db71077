//! The twist construction: gluing a split curve potential x0^2 + f(x1,x2)
//! and a split surface potential y0^2 + g(y1,y2,y3) into the birational
//! product model f - g.
//!
//! With the curve in P(u0,u1,u2) and the surface in P(v0,v1,v2,v3), both
//! Calabi-Yau, normalised and with gcd(u0,v0) = 1, the product potential
//! lives in P(v0*u, u0*v) with degree 2*u0*v0 and is again Calabi-Yau. Its
//! exponent matrix is the block diagonal of the two hatted factor matrices
//! (first row and column of each factor deleted), so transposition commutes
//! with the construction whenever the transposed splitting weights are also
//! coprime.

use num_integer::Integer;

use crate::delsarte::DelsartePolynomial;
use crate::error::{Error, Result};
use crate::weights::WeightSystem;

/// Solution of the two twist congruences for coprime (u0, v0).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TwistParameters {
    pub ell: i64,
    pub u0: i64,
    pub v0: i64,
    /// 0 <= s0 < v0 with s0*u0 + 1 = 0 mod v0.
    pub s0: i64,
    /// 0 <= t0 < u0 with t0*v0 + 1 = 0 mod u0.
    pub t0: i64,
    /// (s0*u0 + 1) / v0, exactly.
    pub s: i64,
    /// (t0*v0 + 1) / u0, exactly.
    pub t: i64,
}

/// Solve the twist congruences.
///
/// # Errors
/// `NotCoprime` when gcd(u0, v0) != 1; `OutOfRange` for non-positive inputs
/// or ell < 2.
pub fn twist_parameters(ell: i64, u0: i64, v0: i64) -> Result<TwistParameters> {
    if ell < 2 {
        return Err(Error::OutOfRange(format!("twist exponent {ell} < 2")));
    }
    if u0 < 1 || v0 < 1 {
        return Err(Error::OutOfRange(format!(
            "split weights must be positive, got ({u0}, {v0})"
        )));
    }
    if u0.gcd(&v0) != 1 {
        return Err(Error::NotCoprime { u0, v0 });
    }
    let s0 = (-invert_mod(u0, v0)).rem_euclid(v0);
    let t0 = (-invert_mod(v0, u0)).rem_euclid(u0);
    let s = (s0 * u0 + 1) / v0;
    let t = (t0 * v0 + 1) / u0;
    debug_assert_eq!((s0 * u0 + 1) % v0, 0);
    debug_assert_eq!((t0 * v0 + 1) % u0, 0);
    Ok(TwistParameters {
        ell,
        u0,
        v0,
        s0,
        t0,
        s,
        t,
    })
}

/// Multiplicative inverse of `a` modulo `m` (m >= 1, gcd(a, m) = 1).
fn invert_mod(a: i64, m: i64) -> i64 {
    if m == 1 {
        return 0;
    }
    let gcd = a.extended_gcd(&m);
    debug_assert_eq!(gcd.gcd, 1);
    gcd.x.rem_euclid(m)
}

/// A validated birational product model for a curve/surface pair.
#[derive(Debug, Clone)]
pub struct TwistModel {
    curve: DelsartePolynomial,
    surface: DelsartePolynomial,
    curve_weights: WeightSystem,
    surface_weights: WeightSystem,
    product: DelsartePolynomial,
    product_weights: WeightSystem,
    parameters: TwistParameters,
    /// Product monomials from this index on carry the coefficient -1; the
    /// exponent matrix itself is coefficient-free.
    negated_from: usize,
}

/// Check the split shape c * e_0 + (monomials avoiding the first variable)
/// and return the exponent c of the pure power.
fn split_exponent(p: &DelsartePolynomial, role: &str) -> Result<u64> {
    let rows = p.exponents();
    let with_first: Vec<usize> = (0..p.n()).filter(|&i| rows[i][0] != 0).collect();
    let ok = with_first.len() == 1
        && rows[with_first[0]].iter().skip(1).all(|&e| e == 0)
        && rows[with_first[0]][0] >= 2;
    if !ok {
        return Err(Error::FirstMonomialNotPureSquare(format!(
            "{role} must be a pure power of its first variable plus monomials \
             in the remaining variables, got `{p}`"
        )));
    }
    Ok(rows[with_first[0]][0])
}

/// Delete the first row and first column (the hatted matrix), renaming the
/// remaining variables.
fn hatted(p: &DelsartePolynomial, names: &[&str]) -> Result<DelsartePolynomial> {
    let rows: Vec<Vec<u64>> = p
        .exponents()
        .iter()
        .filter(|row| row[0] == 0)
        .map(|row| row[1..].to_vec())
        .collect();
    DelsartePolynomial::new(names.iter().map(|s| s.to_string()).collect(), rows)
}

/// Build and validate the product model of a split curve and surface.
pub fn build_twist_model(
    curve: &DelsartePolynomial,
    surface: &DelsartePolynomial,
) -> Result<TwistModel> {
    if curve.n() != 3 {
        return Err(Error::FirstMonomialNotPureSquare(format!(
            "curve potential must have 3 variables, got {}",
            curve.n()
        )));
    }
    if surface.n() != 4 {
        return Err(Error::FirstMonomialNotPureSquare(format!(
            "surface potential must have 4 variables, got {}",
            surface.n()
        )));
    }
    let curve_ell = split_exponent(curve, "curve potential")?;
    let surface_ell = split_exponent(surface, "surface potential")?;
    if curve_ell != 2 || surface_ell != 2 {
        return Err(Error::FirstMonomialNotPureSquare(format!(
            "both split exponents must be 2 (Calabi-Yau case), got {curve_ell} and {surface_ell}"
        )));
    }

    let curve_weights = WeightSystem::of(curve)?;
    let surface_weights = WeightSystem::of(surface)?;
    if !curve_weights.is_calabi_yau() {
        return Err(Error::NotCalabiYauFactor(format!(
            "curve weights {:?} of degree {} violate the Calabi-Yau condition",
            curve_weights.weights(),
            curve_weights.degree()
        )));
    }
    if !surface_weights.is_calabi_yau() {
        return Err(Error::NotCalabiYauFactor(format!(
            "surface weights {:?} of degree {} violate the Calabi-Yau condition",
            surface_weights.weights(),
            surface_weights.degree()
        )));
    }
    if !curve_weights.is_normalized() || !surface_weights.is_normalized() {
        return Err(Error::WeightObstruction(
            "factor weight systems must be normalized".into(),
        ));
    }

    let u0 = curve_weights.weights()[0];
    let mut u_sorted = curve_weights.weights()[1..].to_vec();
    u_sorted.sort_unstable();
    let elliptic_triple = (u0 == 2 && u_sorted == [1, 1]) || (u0 == 3 && u_sorted == [1, 2]);
    if !elliptic_triple {
        return Err(Error::WeightObstruction(format!(
            "curve weights {:?} are not of elliptic type (2,1,1) or (3,2,1)",
            curve_weights.weights()
        )));
    }

    let v0 = surface_weights.weights()[0];
    if u0.gcd(&v0) != 1 {
        let hint = if v0 % 6 == 0 {
            " (v0 is divisible by 6, so no split elliptic curve is compatible)"
        } else {
            ""
        };
        return Err(Error::WeightObstruction(format!(
            "gcd(u0, v0) = gcd({u0}, {v0}) != 1{hint}"
        )));
    }
    let parameters = twist_parameters(2, u0, v0)?;

    // Block-diagonal product over fixed coordinate names.
    let curve_hat = hatted(curve, &["x1", "x2"])?;
    let surface_hat = hatted(surface, &["y1", "y2", "y3"])?;
    let mut rows: Vec<Vec<u64>> = Vec::with_capacity(5);
    for row in curve_hat.exponents() {
        let mut r = row.clone();
        r.extend([0, 0, 0]);
        rows.push(r);
    }
    for row in surface_hat.exponents() {
        let mut r = vec![0, 0];
        r.extend(row.iter().copied());
        rows.push(r);
    }
    let product = DelsartePolynomial::new(
        ["x1", "x2", "y1", "y2", "y3"]
            .iter()
            .map(|s| s.to_string())
            .collect(),
        rows,
    )?;
    // Canonical ordering keeps every curve monomial ahead of every surface
    // monomial (curve rows are nonzero in the first two columns).
    let negated_from = 2usize;
    debug_assert!(product.exponents()[..2].iter().all(|r| r[0] + r[1] > 0));
    debug_assert!(product.exponents()[2..].iter().all(|r| r[0] + r[1] == 0));

    let product_weights = WeightSystem::of(&product)?;
    let mut expected: Vec<i64> = curve_weights.weights()[1..]
        .iter()
        .map(|&w| v0 * w)
        .collect();
    expected.extend(surface_weights.weights()[1..].iter().map(|&w| u0 * w));
    if product_weights.weights() != expected.as_slice()
        || product_weights.degree() != 2 * u0 * v0
        || !product_weights.is_calabi_yau()
    {
        return Err(Error::Internal(format!(
            "product weights {:?} (degree {}) do not match the split formula {:?} (degree {})",
            product_weights.weights(),
            product_weights.degree(),
            expected,
            2 * u0 * v0
        )));
    }

    Ok(TwistModel {
        curve: curve.clone(),
        surface: surface.clone(),
        curve_weights,
        surface_weights,
        product,
        product_weights,
        parameters,
        negated_from,
    })
}

impl TwistModel {
    pub fn curve(&self) -> &DelsartePolynomial {
        &self.curve
    }

    pub fn surface(&self) -> &DelsartePolynomial {
        &self.surface
    }

    pub fn product(&self) -> &DelsartePolynomial {
        &self.product
    }

    pub fn curve_weights(&self) -> &WeightSystem {
        &self.curve_weights
    }

    pub fn surface_weights(&self) -> &WeightSystem {
        &self.surface_weights
    }

    pub fn product_weights(&self) -> &WeightSystem {
        &self.product_weights
    }

    pub fn parameters(&self) -> &TwistParameters {
        &self.parameters
    }

    pub fn u0(&self) -> i64 {
        self.parameters.u0
    }

    pub fn v0(&self) -> i64 {
        self.parameters.v0
    }

    /// The product potential rendered with its sign annotation, f - g.
    pub fn product_display(&self) -> String {
        let monomials = self.product.monomials();
        let mut out = String::new();
        for (i, m) in monomials.iter().enumerate() {
            if i == 0 {
                out.push_str(m);
            } else if i < self.negated_from {
                out.push('+');
                out.push_str(m);
            } else {
                out.push('-');
                out.push_str(m);
            }
        }
        out
    }

    /// The model built from the transposed factors. By the block structure
    /// its product potential equals the transpose of this model's product.
    ///
    /// # Errors
    /// `TransposedGcdObstruction` when the transposed split weights are not
    /// coprime.
    pub fn transposed(&self) -> Result<TwistModel> {
        let curve_t = self.curve.transpose();
        let surface_t = self.surface.transpose();
        let u0t = WeightSystem::of(&curve_t)?.weights()[0];
        let v0t = WeightSystem::of(&surface_t)?.weights()[0];
        if u0t.gcd(&v0t) != 1 {
            return Err(Error::TransposedGcdObstruction { u0t, v0t });
        }
        let model = build_twist_model(&curve_t, &surface_t)?;
        if model.product != self.product.transpose() {
            return Err(Error::Internal(
                "transposed factors did not reproduce the transposed product".into(),
            ));
        }
        Ok(model)
    }

    /// Weight system of the transposed product, cross-checked against the
    /// split formula (v0^T * u^T, u0^T * v^T) with degree 2 * u0^T * v0^T.
    pub fn transposed_weights(&self) -> Result<WeightSystem> {
        let transposed_model = self.transposed()?;
        let direct = WeightSystem::of(&self.product.transpose())?;
        if &direct != transposed_model.product_weights() {
            return Err(Error::Internal(
                "transposed product weights disagree with the split formula".into(),
            ));
        }
        Ok(direct)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse;

    fn poly(text: &str) -> DelsartePolynomial {
        parse(text).unwrap().polynomial
    }

    fn example_model() -> TwistModel {
        build_twist_model(&poly("x0^2+x1^4+x2^4"), &poly("y0^2+y1^5*y2+y2^5*y3+y3^6")).unwrap()
    }

    #[test]
    fn congruence_parameters() {
        // oracle: exhaustive scan over the admissible ranges
        let scan = |u0: i64, v0: i64| {
            let s0 = (0..v0).find(|s0| (s0 * u0 + 1) % v0 == 0).unwrap();
            let t0 = (0..u0).find(|t0| (t0 * v0 + 1) % u0 == 0).unwrap();
            (s0, (s0 * u0 + 1) / v0, t0, (t0 * v0 + 1) / u0)
        };
        for (u0, v0) in [(2, 3), (1, 1), (3, 2), (2, 25), (3, 5), (5, 7)] {
            let p = twist_parameters(2, u0, v0).unwrap();
            assert_eq!((p.s0, p.s, p.t0, p.t), scan(u0, v0), "u0={u0} v0={v0}");
        }
        let p = twist_parameters(2, 2, 3).unwrap();
        assert_eq!((p.s0, p.s, p.t0, p.t), (1, 1, 1, 2));
        let p = twist_parameters(2, 1, 1).unwrap();
        assert_eq!((p.s0, p.s, p.t0, p.t), (0, 1, 0, 1));
        let p = twist_parameters(2, 3, 2).unwrap();
        assert_eq!((p.s0, p.s, p.t0, p.t), (1, 2, 1, 1));
    }

    #[test]
    fn non_coprime_parameters_rejected() {
        assert!(matches!(
            twist_parameters(2, 2, 4),
            Err(Error::NotCoprime { u0: 2, v0: 4 })
        ));
    }

    #[test]
    fn quartic_curve_times_double_sextic() {
        let model = example_model();
        assert_eq!(model.product_weights().weights(), &[3, 3, 2, 2, 2]);
        assert_eq!(model.product_weights().degree(), 12);
        assert!(model.product_weights().is_calabi_yau());
        assert_eq!(model.product_display(), "x1^4+x2^4-y1^5*y2-y2^5*y3-y3^6");
        assert_eq!((model.u0(), model.v0()), (2, 3));
    }

    #[test]
    fn product_matrix_is_block_diagonal() {
        let model = example_model();
        assert_eq!(
            model.product().exponents(),
            &[
                vec![4, 0, 0, 0, 0],
                vec![0, 4, 0, 0, 0],
                vec![0, 0, 5, 1, 0],
                vec![0, 0, 0, 5, 1],
                vec![0, 0, 0, 0, 6],
            ]
        );
    }

    #[test]
    fn transposed_product_weights() {
        let model = example_model();
        let wt = model.transposed_weights().unwrap();
        assert_eq!(wt.weights(), &[25, 25, 20, 16, 14]);
        assert_eq!(wt.degree(), 100);
        // the transposed model is itself a valid split model
        let t = model.transposed().unwrap();
        assert_eq!((t.u0(), t.v0()), (2, 25));
    }

    #[test]
    fn cubic_type_curve_also_builds() {
        // curve with weights (3,2,1) against a surface with v0 = 5
        let model = build_twist_model(
            &poly("x0^2+x1^3+x1*x2^4"),
            &poly("y0^2+y1^3*y2+y2^9*y3+y3^10"),
        )
        .unwrap();
        assert_eq!(model.curve_weights().weights(), &[3, 2, 1]);
        assert_eq!(model.surface_weights().weights(), &[5, 3, 1, 1]);
        assert_eq!(model.product_weights().weights(), &[10, 5, 9, 3, 3]);
        assert_eq!(model.product_weights().degree(), 30);
        assert!(model.product_weights().is_calabi_yau());
    }

    #[test]
    fn divisible_by_six_is_obstructed() {
        let err =
            build_twist_model(&poly("x0^2+x1^4+x2^4"), &poly("y0^2+y1^4+y2^6+y3^12")).unwrap_err();
        match err {
            Error::WeightObstruction(msg) => assert!(msg.contains("divisible by 6"), "{msg}"),
            other => panic!("expected WeightObstruction, got {other:?}"),
        }
    }

    #[test]
    fn even_transposed_split_weight_is_obstructed() {
        // primal gcd(2,7) = 1 but the transposed surface lands in weight 4
        let model =
            build_twist_model(&poly("x0^2+x1^4+x2^4"), &poly("y0^2+y1^4*y2+y2^6*y3+y3^7")).unwrap();
        assert_eq!(model.surface_weights().weights(), &[7, 3, 2, 2]);
        let err = model.transposed().unwrap_err();
        assert!(matches!(
            err,
            Error::TransposedGcdObstruction { u0t: 2, v0t: 4 }
        ));
        assert!(model.transposed_weights().is_err());
    }

    #[test]
    fn transposed_split_weight_divisible_by_three_is_obstructed() {
        // curve 8 transposes to the (3,2,1) type, surface transposes to v0 = 15
        let model = build_twist_model(
            &poly("x0^2+x1^3*x2+x2^4"),
            &poly("y0^2+y1^3*y2+y2^5*y3+y3^26"),
        )
        .unwrap();
        assert_eq!(model.surface_weights().weights(), &[13, 7, 5, 1]);
        let err = model.transposed().unwrap_err();
        assert!(matches!(
            err,
            Error::TransposedGcdObstruction { u0t: 3, v0t: 15 }
        ));
    }

    #[test]
    fn non_split_shapes_are_rejected() {
        // no pure square at all
        let err = build_twist_model(&poly("x0^2*x1+x1^2*x2+x2^3"), &poly("y0^2+y1^6+y2^6+y3^6"))
            .unwrap_err();
        assert!(matches!(err, Error::FirstMonomialNotPureSquare(_)));
        // pure square present but the first variable reappears
        let err = build_twist_model(&poly("x0^2+x0*x1^2+x2^4"), &poly("y0^2+y1^6+y2^6+y3^6"))
            .unwrap_err();
        assert!(matches!(err, Error::FirstMonomialNotPureSquare(_)));
        // cube of the first variable
        let err = build_twist_model(&poly("x0^3+x1^2*x2+x2^3"), &poly("y0^2+y1^6+y2^6+y3^6"))
            .unwrap_err();
        assert!(matches!(err, Error::FirstMonomialNotPureSquare(_)));
    }

    #[test]
    fn non_calabi_yau_factor_is_rejected() {
        // y0^2+y1^4+y2^4+y3^4 has weights (2,1,1,1) of degree 4: sum is 5
        let err =
            build_twist_model(&poly("x0^2+x1^4+x2^4"), &poly("y0^2+y1^4+y2^4+y3^4")).unwrap_err();
        assert!(matches!(err, Error::NotCalabiYauFactor(_)));
    }
}
