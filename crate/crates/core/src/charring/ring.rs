//! Coefficient rings for characters.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Shorthand for an exact rational.
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Formats a rational as `p` or `p/q`.
pub fn rat_string(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// A commutative coefficient ring carried as a value, so that elements can
/// be created without global state.
pub trait CoeffRing: Clone + fmt::Debug + PartialEq + Send + Sync {
    type Elem: Clone + fmt::Debug + PartialEq + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn from_rational(&self, r: &Rational) -> Self::Elem;
    /// `q_e^k` in the generic ring, `ζ_e^k` after specialization.
    fn qe_pow(&self, k: i64) -> Self::Elem;
    /// Inverse of `a` if it is a unit.
    fn unit_inverse(&self, a: &Self::Elem) -> Option<Self::Elem>;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn from_int(&self, n: i64) -> Self::Elem {
        self.from_rational(&rat(n))
    }

    fn mul_qe_pow(&self, a: &Self::Elem, k: i64) -> Self::Elem {
        self.mul(a, &self.qe_pow(k))
    }

    fn pow(&self, a: &Self::Elem, n: u32) -> Self::Elem {
        let mut result = self.one();
        let mut base = a.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = self.mul(&result, &base);
            }
            n >>= 1;
            if n > 0 {
                base = self.mul(&base, &base);
            }
        }
        result
    }

    /// Rational value if the element is a constant.
    fn as_rational(&self, a: &Self::Elem) -> Option<Rational>;
}

/// The field of rational numbers, with `q_e` specialized to 1.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct RationalField;

impl CoeffRing for RationalField {
    type Elem = Rational;

    fn zero(&self) -> Rational {
        Rational::zero()
    }
    fn one(&self) -> Rational {
        Rational::one()
    }
    fn is_zero(&self, a: &Rational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a + b
    }
    fn neg(&self, a: &Rational) -> Rational {
        -a
    }
    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }
    fn from_rational(&self, r: &Rational) -> Rational {
        r.clone()
    }
    fn qe_pow(&self, _k: i64) -> Rational {
        Rational::one()
    }
    fn unit_inverse(&self, a: &Rational) -> Option<Rational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
    fn as_rational(&self, a: &Rational) -> Option<Rational> {
        Some(a.clone())
    }
}
