//! Exact arithmetic in real quadratic extensions Q(sqrt(base)).
//!
//! Used to normalize Weil numbers when q is an odd power of p: dividing
//! by sqrt(q) lands the coefficients in Q(sqrt(p)). base = 0 encodes a
//! plain rational; a nonzero base is a prime, so sqrt(base) is irrational
//! and (a, b) coordinates are unique.

use crate::poly::FieldScalar;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadElt {
    a: BigRational,
    b: BigRational,
    /// 0 for rationals; prime p for elements of Q(sqrt(p)).
    /// Invariant: b = 0 implies base = 0.
    base: u64,
}

impl QuadElt {
    pub fn new(a: BigRational, b: BigRational, base: u64) -> Self {
        let mut e = QuadElt { a, b, base };
        e.normalize();
        e
    }

    fn normalize(&mut self) {
        if self.b.is_zero() {
            self.base = 0;
        }
    }

    pub fn from_rational(a: BigRational) -> Self {
        QuadElt {
            a,
            b: BigRational::zero(),
            base: 0,
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(n.into()))
    }

    /// sqrt(base) itself.
    pub fn sqrt(base: u64) -> Self {
        QuadElt {
            a: BigRational::zero(),
            b: BigRational::one(),
            base,
        }
    }

    pub fn is_rational(&self) -> bool {
        self.base == 0
    }

    pub fn to_rational(&self) -> Option<&BigRational> {
        if self.base == 0 {
            Some(&self.a)
        } else {
            None
        }
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    pub fn radical_part(&self) -> &BigRational {
        &self.b
    }

    /// Galois conjugate a - b*sqrt(base).
    pub fn conj(&self) -> Self {
        QuadElt {
            a: self.a.clone(),
            b: -self.b.clone(),
            base: self.base,
        }
    }

    /// Field norm a^2 - base*b^2, a rational.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - BigRational::from_integer(self.base.into()) * &self.b * &self.b
    }

    fn joint_base(&self, other: &Self) -> u64 {
        match (self.base, other.base) {
            (0, b) | (b, 0) => b,
            (b1, b2) => {
                assert_eq!(b1, b2, "arithmetic across distinct quadratic fields");
                b1
            }
        }
    }
}

impl Add for QuadElt {
    type Output = QuadElt;
    fn add(self, rhs: Self) -> Self {
        let base = self.joint_base(&rhs);
        QuadElt::new(self.a + rhs.a, self.b + rhs.b, base)
    }
}

impl Sub for QuadElt {
    type Output = QuadElt;
    fn sub(self, rhs: Self) -> Self {
        let base = self.joint_base(&rhs);
        QuadElt::new(self.a - rhs.a, self.b - rhs.b, base)
    }
}

impl Neg for QuadElt {
    type Output = QuadElt;
    fn neg(self) -> Self {
        QuadElt {
            a: -self.a,
            b: -self.b,
            base: self.base,
        }
    }
}

impl Mul for QuadElt {
    type Output = QuadElt;
    fn mul(self, rhs: Self) -> Self {
        let base = self.joint_base(&rhs);
        let rad = BigRational::from_integer(base.into());
        let a = &self.a * &rhs.a + &rad * &self.b * &rhs.b;
        let b = &self.a * &rhs.b + &self.b * &rhs.a;
        QuadElt::new(a, b, base)
    }
}

impl Div for QuadElt {
    type Output = QuadElt;
    fn div(self, rhs: Self) -> Self {
        let n = rhs.norm();
        assert!(!n.is_zero(), "division by zero in quadratic field");
        let conj = rhs.conj();
        let prod = self * conj;
        QuadElt::new(prod.a / &n, prod.b / &n, prod.base)
    }
}

impl Zero for QuadElt {
    fn zero() -> Self {
        QuadElt::from_rational(BigRational::zero())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for QuadElt {
    fn one() -> Self {
        QuadElt::from_rational(BigRational::one())
    }
}

impl FieldScalar for QuadElt {}

impl fmt::Debug for QuadElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.base == 0 {
            write!(f, "{}", self.a)
        } else {
            write!(f, "({} + {}*sqrt({}))", self.a, self.b, self.base)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn sqrt2_squares_to_2() {
        let s = QuadElt::sqrt(2);
        let two = s.clone() * s;
        assert!(two.is_rational());
        assert_eq!(two.to_rational().unwrap(), &q(2, 1));
    }

    #[test]
    fn inverse_of_1_plus_sqrt2() {
        // (1 + sqrt 2)^-1 = sqrt(2) - 1
        let x = QuadElt::new(q(1, 1), q(1, 1), 2);
        let inv = QuadElt::one() / x.clone();
        assert_eq!(inv, QuadElt::new(q(-1, 1), q(1, 1), 2));
        assert!((x * inv).is_one());
    }

    #[test]
    fn rational_collapse() {
        let z = QuadElt::new(q(3, 1), q(0, 1), 5);
        assert!(z.is_rational());
        let w = z + QuadElt::sqrt(7);
        assert_eq!(w, QuadElt::new(q(3, 1), q(1, 1), 7));
    }
}
