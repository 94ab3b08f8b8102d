//! Factoring the genus-3 L-polynomial through its elliptic quotient.
//!
//! The degree-2 quotient map X -> E_1 = X/<tau> splits L(X/K) as
//! L(E_1/K) * L_chi.  The chi-factor's linear coefficient rho_1 equals the
//! difference between split and inert fibers over the affine K-points of
//! E_1, which ties the arithmetic of the cover to the polynomial data.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::TwistError;
use crate::curves::{count_points, quotient_curves, weil_data, CurveSpec, Family};
use crate::intpoly::IntPoly;

/// The elliptic factor and chi-factor of a genus-3 L-polynomial, together
/// with the fiber census of the degree-2 cover that produced them.
#[derive(Debug, Clone)]
pub struct ChiFactorData {
    /// L-polynomial of the elliptic quotient E_1 over the base field.
    pub l_z: IntPoly,
    /// Exact quotient L(X) / L(E_1), of degree 4.
    pub l_chi: IntPoly,
    /// Coefficient of T in `l_chi`.
    pub rho1: i64,
    /// Affine K-points of E_1 with two rational preimages.
    pub s1: u64,
    /// Affine K-points of E_1 with no rational preimage.
    pub i1: u64,
    /// Branch points of the cover (the single point at infinity).
    pub ramified: u64,
    /// Number of K-rational involutions among the deck transformations
    /// tau, upsilon, upsilon*tau: 3 when h is rational, else 1.
    pub gamma: u32,
}

/// Divides one L-polynomial by another, using that both have constant
/// term 1; errors if the division leaves a remainder.
pub(crate) fn lpoly_div_exact(num: &IntPoly, den: &IntPoly) -> Result<IntPoly, TwistError> {
    assert!(den.coeff(0).is_one(), "divisor must be an L-polynomial");
    let n = num.deg().expect("numerator is nonzero");
    let m = den.deg().expect("denominator is nonzero");
    if n < m {
        return Err(TwistError::NonExactDivision);
    }
    let mut q = vec![BigInt::zero(); n - m + 1];
    for k in 0..=(n - m) {
        let mut acc = num.coeff(k).clone();
        for i in 0..k {
            acc -= &q[i] * den.coeff(k - i);
        }
        q[k] = acc;
    }
    let quot = IntPoly::new(q);
    if &(&quot * den) == num {
        Ok(quot)
    } else {
        Err(TwistError::NonExactDivision)
    }
}

/// Computes the elliptic/chi factorization of L(X/K) for a member of the
/// genus-3 family, verifying the split/inert fiber identity rho_1 = S_1 -
/// I_1 and, when only tau is rational, that rho_1 vanishes.
pub fn chi_factor(spec: &CurveSpec) -> Result<ChiFactorData, TwistError> {
    let Family::ArtinSchreier34 { c, d } = spec.family else {
        return Err(TwistError::PreconditionFailed(
            "chi factorization requires the quartic Artin-Schreier family".into(),
        ));
    };
    let field = &spec.field;
    let l_x = weil_data(spec)?.lpoly;
    let quot = quotient_curves(spec)?;
    let l_z = weil_data(&quot.e1)?.lpoly;
    let l_chi = lpoly_div_exact(&l_x, &l_z)?;
    assert_eq!(l_chi.deg(), Some(4));

    // Classify affine K-points of E_1 in the model w^2 + cw = ds^3; the
    // fiber Z^2 + Z = w of the covering map splits exactly when Tr(w) = 0.
    let (mut s1, mut i1) = (0u64, 0u64);
    for s in 0..field.q {
        let rhs = field.mul(d, field.mul(s, field.mul(s, s)));
        for w in 0..field.q {
            if field.add(field.mul(w, w), field.mul(c, w)) == rhs {
                if field.trace(w) == 0 {
                    s1 += 1;
                } else {
                    i1 += 1;
                }
            }
        }
    }
    let ramified = 1u64; // the cover is ramified only above infinity
    assert_eq!(2 * s1 + ramified, count_points(spec, 1)?);
    assert_eq!(s1 + i1 + ramified, count_points(&quot.e1, 1)?);

    let rho1: i64 = i64::try_from(l_chi.coeff(1)).expect("chi coefficient fits in i64");
    assert_eq!(rho1, s1 as i64 - i1 as i64);
    let gamma = if quot.h_in_base { 3 } else { 1 };
    if gamma == 1 {
        assert_eq!(rho1, 0, "a lone rational involution forces rho_1 = 0");
    }
    Ok(ChiFactorData { l_z, l_chi, rho1, s1, i1, ramified, gamma })
}

/// L-polynomial of the quadratic twist along tau: the elliptic factor is
/// kept and the roots of the chi-factor are negated.
pub fn twist_chi_negate(data: &ChiFactorData) -> IntPoly {
    // for an even-degree L-polynomial, negating roots is the substitution
    // T -> -T, which keeps the constant term 1
    &data.l_z * &data.l_chi.subst_neg_x()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curves::CurveSpec;
    use crate::finitefield::make_field;
    use crate::intpoly::weil_data_from_lpoly;

    fn as34(r: u32, c: u64, d: u64) -> CurveSpec {
        let field = make_field(2, r).unwrap();
        CurveSpec::new(field, Family::ArtinSchreier34 { c, d }).unwrap()
    }

    #[test]
    fn base_field_example_degrees_and_rho() {
        let data = chi_factor(&as34(1, 1, 1)).unwrap();
        assert_eq!(data.l_z.deg(), Some(2));
        assert_eq!(data.l_chi.deg(), Some(4));
        assert_eq!(data.rho1, 0);
        assert_eq!((data.s1, data.i1, data.ramified), (1, 1, 1));
        assert_eq!(data.gamma, 1);
        let l_x = weil_data(&as34(1, 1, 1)).unwrap().lpoly;
        assert_eq!(&data.l_z * &data.l_chi, l_x);
    }

    #[test]
    fn factorization_is_exact_across_small_fields() {
        for r in [1u32, 2, 3] {
            let field = make_field(2, r).unwrap();
            for c in 1..field.q {
                for d in 1..field.q {
                    let spec = as34(r, c, d);
                    let data = chi_factor(&spec).unwrap();
                    let l_x = weil_data(&spec).unwrap().lpoly;
                    assert_eq!(&data.l_z * &data.l_chi, l_x, "r={r} c={c} d={d}");
                    assert_eq!(data.rho1, data.s1 as i64 - data.i1 as i64);
                }
            }
        }
    }

    #[test]
    fn quadratic_twist_changes_l_and_e_vector() {
        // c = 1 over F_4: h is rational, all three involutions are defined
        // over the base
        let spec = as34(2, 1, 1);
        let data = chi_factor(&spec).unwrap();
        assert_eq!(data.gamma, 3);
        let l_x = weil_data(&spec).unwrap().lpoly;
        let twisted = twist_chi_negate(&data);
        assert_ne!(twisted, l_x);
        assert_eq!(twisted.coeff(0), BigInt::from(1));
        let wd = weil_data_from_lpoly(&twisted, 4, 3, None);
        assert_eq!(wd.e_vector.unwrap(), vec![0, 0, 1]);
        // untwisted curve sits at {1,1,1}
        let wd0 = weil_data_from_lpoly(&l_x, 4, 3, None);
        assert_eq!(wd0.e_vector.unwrap(), vec![1, 1, 1]);
    }

    #[test]
    fn division_rejects_non_factor() {
        let l_x = weil_data(&as34(1, 1, 1)).unwrap().lpoly;
        let wrong = IntPoly::new(vec![BigInt::from(1), BigInt::from(1), BigInt::from(2)]);
        assert!(matches!(lpoly_div_exact(&l_x, &wrong), Err(TwistError::NonExactDivision)));
    }
}
