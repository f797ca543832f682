//! Laurent polynomials in `q_e` with rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::ring::{rat, rat_string, CoeffRing, Rational};

/// A finitely supported map from exponents of `q_e` to rationals.
#[derive(Clone, PartialEq, Eq, Default, Hash)]
pub struct QLaurent {
    terms: BTreeMap<i64, Rational>,
}

impl QLaurent {
    pub fn zero() -> Self {
        QLaurent::default()
    }

    pub fn one() -> Self {
        Self::monomial(rat(1), 0)
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    /// `c · q_e^k`.
    pub fn monomial(c: Rational, k: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(k, c);
        }
        QLaurent { terms }
    }

    /// `q^k = q_e^{e k}`.
    pub fn q_pow(k: i64, e: i64) -> Self {
        Self::monomial(rat(1), k * e)
    }

    pub fn from_terms(it: impl IntoIterator<Item = (i64, Rational)>) -> Self {
        let mut out = QLaurent::zero();
        for (k, c) in it {
            out.add_term(k, &c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &Rational)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, k: i64, c: &Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(k).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Multiplies by `q_e^k`.
    pub fn shift(&self, k: i64) -> Self {
        QLaurent { terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return QLaurent::zero();
        }
        QLaurent { terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect() }
    }

    /// Value at `q_e = 1`.
    pub fn at_one(&self) -> Rational {
        self.terms.values().fold(Rational::zero(), |a, b| a + b)
    }

    /// The constant if the element has no nonzero `q_e`-exponents.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }

    /// Exact quotient `self / other`, or `None` when it does not exist.
    pub fn div_exact(&self, other: &QLaurent) -> Option<QLaurent> {
        let (dlo, dhi) = (other.min_exp()?, other.max_exp()?);
        let lead = other.terms[&dhi].clone();
        let mut rem = self.clone();
        let mut quot = QLaurent::zero();
        let floor = match self.min_exp() {
            Some(m) => m - dlo,
            None => return Some(QLaurent::zero()),
        };
        while let Some(top) = rem.max_exp() {
            let k = top - dhi;
            if k < floor {
                return None;
            }
            let c = &rem.terms[&top] / &lead;
            for (e, x) in &other.terms {
                rem.add_term(e + k, &-(x * &c));
            }
            quot.add_term(k, &c);
        }
        Some(quot)
    }
}

impl Add for &QLaurent {
    type Output = QLaurent;
    fn add(self, rhs: &QLaurent) -> QLaurent {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, c);
        }
        out
    }
}

impl Sub for &QLaurent {
    type Output = QLaurent;
    fn sub(self, rhs: &QLaurent) -> QLaurent {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, &-c);
        }
        out
    }
}

impl Neg for &QLaurent {
    type Output = QLaurent;
    fn neg(self) -> QLaurent {
        QLaurent { terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect() }
    }
}

impl Mul for &QLaurent {
    type Output = QLaurent;
    fn mul(self, rhs: &QLaurent) -> QLaurent {
        let mut out = QLaurent::zero();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a + b, &(x * y));
            }
        }
        out
    }
}

impl fmt::Debug for QLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for QLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.terms.iter().rev() {
            let neg = c < &Rational::zero();
            let mag = if neg { -c } else { c.clone() };
            let sign = match (first, neg) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            let coeff = if mag.is_one() && *k != 0 { String::new() } else { rat_string(&mag) };
            let var = match *k {
                0 => String::new(),
                1 => "q_e".to_string(),
                _ => format!("q_e^{k}"),
            };
            write!(f, "{sign}{coeff}{var}")?;
            first = false;
        }
        Ok(())
    }
}

/// The generic coefficient ring `Q[q_e^{±1}]`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LaurentRing;

impl CoeffRing for LaurentRing {
    type Elem = QLaurent;

    fn zero(&self) -> QLaurent {
        QLaurent::zero()
    }
    fn one(&self) -> QLaurent {
        QLaurent::one()
    }
    fn is_zero(&self, a: &QLaurent) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &QLaurent, b: &QLaurent) -> QLaurent {
        a + b
    }
    fn neg(&self, a: &QLaurent) -> QLaurent {
        -a
    }
    fn sub(&self, a: &QLaurent, b: &QLaurent) -> QLaurent {
        a - b
    }
    fn mul(&self, a: &QLaurent, b: &QLaurent) -> QLaurent {
        a * b
    }
    fn from_rational(&self, r: &Rational) -> QLaurent {
        QLaurent::constant(r.clone())
    }
    fn qe_pow(&self, k: i64) -> QLaurent {
        QLaurent::monomial(rat(1), k)
    }
    fn mul_qe_pow(&self, a: &QLaurent, k: i64) -> QLaurent {
        a.shift(k)
    }
    fn unit_inverse(&self, a: &QLaurent) -> Option<QLaurent> {
        if a.terms.len() == 1 {
            let (k, c) = a.terms.iter().next().unwrap();
            Some(QLaurent::monomial(c.recip(), -k))
        } else {
            None
        }
    }
    fn as_rational(&self, a: &QLaurent) -> Option<Rational> {
        a.as_constant()
    }
}
