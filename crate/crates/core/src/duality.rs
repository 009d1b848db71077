//! The transposition pairing between the projective symmetry quotients of a
//! potential and of its transpose, and orthogonal-complement (transposed)
//! groups.
//!
//! For u in the quotient over W^T and v in the quotient over W the pairing
//! is (u, v) -> u^T A v mod 1. It is independent of the chosen coset
//! representatives: shifting u by the dual charge vector changes the value
//! by the phase sum of v, shifting v by the charge vector changes it by the
//! phase sum of u, and both sums are integral on determinant-one elements.

use crate::delsarte::DelsartePolynomial;
use crate::error::{Error, Result};
use crate::rational::{reduce_mod_one, Rat};
use crate::symmetry::{DiagonalSymmetry, GroupKind, SymmetryGroup};

/// A pairing value in [0, 1), i.e. an element of Q/Z.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct PairingValue(Rat);

impl PairingValue {
    pub fn value(&self) -> Rat {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0 == Rat::from_integer(0)
    }
}

/// Evaluate the pairing u^T A v mod 1, where `A` is the exponent matrix of
/// the primal potential, `u` lives on the transposed side and `v` on the
/// primal side.
pub fn pairing(
    primal: &DelsartePolynomial,
    u: &DiagonalSymmetry,
    v: &DiagonalSymmetry,
) -> Result<PairingValue> {
    let n = primal.n();
    if u.n() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: u.n(),
        });
    }
    if v.n() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: v.n(),
        });
    }
    let mut total = Rat::from_integer(0);
    for (i, row) in primal.exponents().iter().enumerate() {
        for (j, &a) in row.iter().enumerate() {
            if a != 0 {
                total += u.phases()[i] * Rat::from_integer(a as i64) * v.phases()[j];
            }
        }
    }
    Ok(PairingValue(reduce_mod_one(total)))
}

/// The transposed group of `group`: the orthogonal complement of its
/// elements inside `dual_ambient`, computed by exhaustive filtering.
///
/// `group` must live in the projective quotient over some potential W and
/// `dual_ambient` must be the full quotient over W^T.
pub fn transposed_group(
    group: &SymmetryGroup,
    dual_ambient: &SymmetryGroup,
) -> Result<SymmetryGroup> {
    if group.kind() != GroupKind::SlTilde || dual_ambient.kind() != GroupKind::SlTilde {
        return Err(Error::Internal(
            "transposed groups are defined on projective quotients".into(),
        ));
    }
    if dual_ambient.polynomial() != &group.polynomial().transpose() {
        return Err(Error::Internal(
            "dual ambient group does not live over the transposed potential".into(),
        ));
    }
    let primal = group.polynomial();
    let mut complement = Vec::new();
    for u in dual_ambient.elements() {
        let mut orthogonal = true;
        for v in group.elements() {
            if !pairing(primal, u, v)?.is_zero() {
                orthogonal = false;
                break;
            }
        }
        if orthogonal {
            complement.push(u.clone());
        }
    }
    dual_ambient.subgroup_from_elements(&complement)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse;

    fn poly(text: &str) -> DelsartePolynomial {
        parse(text).unwrap().polynomial
    }

    fn sym(phases: &[(i64, i64)]) -> DiagonalSymmetry {
        DiagonalSymmetry::new(phases.iter().map(|&(n, d)| Rat::new(n, d)).collect())
    }

    #[test]
    fn pairing_with_identity_vanishes() {
        let p = poly("x0^2+x1^4+x2^4");
        let id = DiagonalSymmetry::identity(3);
        let iota = sym(&[(0, 1), (1, 4), (3, 4)]);
        assert!(pairing(&p, &id, &iota).unwrap().is_zero());
        assert!(pairing(&p, &iota, &id).unwrap().is_zero());
    }

    #[test]
    fn self_pairing_of_the_involution_class() {
        // u = v = (0, 1/4, 3/4) over the self-transposed quartic curve:
        // u^T A v = 4/16 + 4*9/16 = 5/2, so the value mod 1 is 1/2.
        // Nonzero self-pairing is exactly what makes the complement of the
        // full group trivial.
        let p = poly("x0^2+x1^4+x2^4");
        let iota = sym(&[(0, 1), (1, 4), (3, 4)]);
        assert_eq!(pairing(&p, &iota, &iota).unwrap().value(), Rat::new(1, 2));
    }

    #[test]
    fn pairing_is_bilinear_on_fermat_cubic_groups() {
        let p = poly("x0^3+x1^3+x2^3");
        let st = SymmetryGroup::sl_tilde(&p).unwrap();
        let st_t = SymmetryGroup::sl_tilde(&p.transpose()).unwrap();
        for u in st_t.elements() {
            for v in st.elements() {
                for w in st.elements() {
                    let lhs = pairing(&p, u, &v.add(w).unwrap()).unwrap().value();
                    let rhs = reduce_mod_one(
                        pairing(&p, u, v).unwrap().value() + pairing(&p, u, w).unwrap().value(),
                    );
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn pairing_denominator_divides_group_exponents() {
        let p = poly("x0^2+x1^4+x2^4");
        let st = SymmetryGroup::sl_tilde(&p).unwrap();
        let st_t = SymmetryGroup::sl_tilde(&p.transpose()).unwrap();
        let exponent = |g: &SymmetryGroup| {
            g.elements()
                .iter()
                .map(|e| e.order())
                .fold(1i64, num_integer::lcm)
        };
        let (e1, e2) = (exponent(&st), exponent(&st_t));
        for u in st_t.elements() {
            for v in st.elements() {
                let value = pairing(&p, u, v).unwrap().value();
                assert_eq!(e1 % value.denom(), 0);
                assert_eq!(e2 % value.denom(), 0);
            }
        }
    }

    #[test]
    fn complement_of_trivial_group_is_everything() {
        let p = poly("x0^2+x1^4+x2^4");
        let st = SymmetryGroup::sl_tilde(&p).unwrap();
        let st_t = SymmetryGroup::sl_tilde(&p.transpose()).unwrap();
        let trivial = st.subgroup_generated(&[]).unwrap();
        let complement = transposed_group(&trivial, &st_t).unwrap();
        assert!(complement.same_elements(&st_t));
        assert_eq!(complement.order(), 2);
    }

    #[test]
    fn trivial_complement_on_a_trivial_dual_quotient() {
        // the double-sextic surface has a trivial transposed quotient, so
        // even the complement of the trivial group is trivial
        let p = poly("x0^2+x1^5*x2+x2^5*x3+x3^6");
        let st = SymmetryGroup::sl_tilde(&p).unwrap();
        let st_t = SymmetryGroup::sl_tilde(&p.transpose()).unwrap();
        assert_eq!(st_t.order(), 1);
        let trivial = st.subgroup_generated(&[]).unwrap();
        let complement = transposed_group(&trivial, &st_t).unwrap();
        assert_eq!(complement.order(), 1);
    }

    #[test]
    fn complement_of_everything_is_trivial() {
        let p = poly("x0^2+x1^4+x2^4");
        let st = SymmetryGroup::sl_tilde(&p).unwrap();
        let st_t = SymmetryGroup::sl_tilde(&p.transpose()).unwrap();
        let complement = transposed_group(&st, &st_t).unwrap();
        assert_eq!(complement.order(), 1);
    }

    #[test]
    fn double_transpose_on_the_quartic_curve() {
        let p = poly("x0^2+x1^4+x2^4");
        let st = SymmetryGroup::sl_tilde(&p).unwrap();
        let st_t = SymmetryGroup::sl_tilde(&p.transpose()).unwrap();
        for g in st.all_subgroups().unwrap() {
            let gt = transposed_group(&g, &st_t).unwrap();
            let gtt = transposed_group(&gt, &st).unwrap();
            assert!(gtt.same_elements(&g));
        }
    }

    #[test]
    fn representative_shifts_do_not_change_values() {
        let p = poly("x0^2+x1^5*x2+x2^5*x3+x3^6");
        let st = SymmetryGroup::sl_tilde(&p).unwrap();
        let st_t = SymmetryGroup::sl_tilde(&p.transpose()).unwrap();
        let j = crate::symmetry::j_element(&p).unwrap();
        let j_t = crate::symmetry::j_element(&p.transpose()).unwrap();
        for u in st_t.elements() {
            for v in st.elements() {
                let base = pairing(&p, u, v).unwrap();
                for k in 0..j_t.order() {
                    for l in 0..j.order() {
                        let u_shift = u.add(&j_t.scale(k)).unwrap();
                        let v_shift = v.add(&j.scale(l)).unwrap();
                        assert_eq!(pairing(&p, &u_shift, &v_shift).unwrap(), base);
                    }
                }
            }
        }
    }
}
