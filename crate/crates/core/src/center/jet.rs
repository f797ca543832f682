//! Truncated power series in one variable and truncated multivariate
//! polynomials, used for local computations at a point of `T/W`.

use std::collections::BTreeMap;
use std::fmt;

use crate::charring::{CoeffRing, Rational, TorusChar};
use crate::error::{Error, Result};
use crate::root_datum::RootDatum;
use crate::weight::Weight;

use num_traits::One;

/// `Σ_{i<prec} c_i ε^i`, known modulo `ε^prec`.
#[derive(Clone, PartialEq)]
pub struct Jet<R: CoeffRing> {
    ring: R,
    coeffs: Vec<R::Elem>,
}

impl<R: CoeffRing> fmt::Debug for Jet<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.coeffs.iter()).finish()
    }
}

impl<R: CoeffRing> Jet<R> {
    pub fn zero(ring: &R, prec: usize) -> Self {
        Jet { ring: ring.clone(), coeffs: vec![ring.zero(); prec] }
    }

    pub fn constant(ring: &R, c: R::Elem, prec: usize) -> Self {
        let mut j = Self::zero(ring, prec);
        if prec > 0 {
            j.coeffs[0] = c;
        }
        j
    }

    /// `c · exp(s ε)`.
    pub fn exponential(ring: &R, c: &R::Elem, s: i64, prec: usize) -> Self {
        let mut coeffs = Vec::with_capacity(prec);
        let mut factor = Rational::one();
        for j in 0..prec {
            if j > 0 {
                factor = factor * Rational::from_integer(s.into()) / Rational::from_integer((j as i64).into());
            }
            coeffs.push(ring.mul(c, &ring.from_rational(&factor)));
        }
        Jet { ring: ring.clone(), coeffs }
    }

    pub fn precision(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, i: usize) -> &R::Elem {
        &self.coeffs[i]
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    /// Index of the first nonzero coefficient, `None` if zero to this precision.
    pub fn order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !self.ring.is_zero(c))
    }

    pub fn add(&self, other: &Self) -> Self {
        let prec = self.precision().min(other.precision());
        let coeffs = (0..prec).map(|i| self.ring.add(&self.coeffs[i], &other.coeffs[i])).collect();
        Jet { ring: self.ring.clone(), coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let prec = self.precision().min(other.precision());
        let coeffs = (0..prec).map(|i| self.ring.sub(&self.coeffs[i], &other.coeffs[i])).collect();
        Jet { ring: self.ring.clone(), coeffs }
    }

    pub fn scale(&self, c: &R::Elem) -> Self {
        Jet { ring: self.ring.clone(), coeffs: self.coeffs.iter().map(|x| self.ring.mul(x, c)).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let prec = self.precision().min(other.precision());
        let r = &self.ring;
        let mut coeffs = vec![r.zero(); prec];
        for (i, a) in self.coeffs.iter().enumerate().take(prec) {
            if r.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(prec - i) {
                if !r.is_zero(b) {
                    coeffs[i + j] = r.add(&coeffs[i + j], &r.mul(a, b));
                }
            }
        }
        Jet { ring: r.clone(), coeffs }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::constant(&self.ring, self.ring.one(), self.precision());
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// `self / den` where `den` may vanish at `ε = 0`; the quotient must
    /// be a power series. Precision drops by the order of `den`.
    pub fn quotient(&self, den: &Self) -> Result<Self> {
        let k = den.order().ok_or(Error::InsufficientTruncation(den.precision()))?;
        let prec = self.precision().min(den.precision());
        if self.coeffs[..k].iter().any(|c| !self.ring.is_zero(c)) {
            return Err(Error::NonExactDivision);
        }
        let r = &self.ring;
        let inv = r.unit_inverse(&den.coeffs[k]).ok_or(Error::NonExactDivision)?;
        let mut q: Vec<R::Elem> = Vec::with_capacity(prec - k);
        for i in 0..prec - k {
            let mut acc = self.coeffs[i + k].clone();
            for (j, qj) in q.iter().enumerate() {
                let b = &den.coeffs[k + i - j];
                if !r.is_zero(b) {
                    acc = r.sub(&acc, &r.mul(qj, b));
                }
            }
            q.push(r.mul(&acc, &inv));
        }
        Ok(Jet { ring: r.clone(), coeffs: q })
    }
}

/// The linear form `λ ↦ e·ht(λ)` giving the direction of the curves.
pub fn curve_slope(d: &RootDatum, lambda: &Weight) -> i64 {
    d.e_root_coords(lambda).iter().sum()
}

/// `f` restricted to the curve `ε ↦ q^{2(μ+ρ)} exp(ε ρ̌-direction)`.
pub fn on_curve<R: CoeffRing>(d: &RootDatum, f: &TorusChar<R>, mu: &Weight, prec: usize) -> Jet<R> {
    let ring = f.ring();
    let point = mu + &d.rho;
    let mut out = Jet::zero(ring, prec);
    for (lambda, c) in f.terms() {
        let base = ring.mul_qe_pow(c, 2 * d.e_pairing(lambda, &point));
        out = out.add(&Jet::exponential(ring, &base, curve_slope(d, lambda), prec));
    }
    out
}

/// Polynomial in `rank` variables truncated above total degree `max_degree`.
#[derive(Clone, PartialEq)]
pub struct TruncPoly<R: CoeffRing> {
    ring: R,
    rank: usize,
    max_degree: u32,
    terms: BTreeMap<Vec<u32>, R::Elem>,
}

impl<R: CoeffRing> fmt::Debug for TruncPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

impl<R: CoeffRing> TruncPoly<R> {
    pub fn constant(ring: &R, rank: usize, max_degree: u32, c: R::Elem) -> Self {
        let mut p = TruncPoly { ring: ring.clone(), rank, max_degree, terms: BTreeMap::new() };
        p.add_term(vec![0; rank], c);
        p
    }

    /// `y_i + c`.
    pub fn shifted_variable(ring: &R, rank: usize, max_degree: u32, i: usize, c: R::Elem) -> Self {
        let mut p = Self::constant(ring, rank, max_degree, c);
        let mut e = vec![0; rank];
        e[i] = 1;
        p.add_term(e, ring.one());
        p
    }

    fn add_term(&mut self, e: Vec<u32>, c: R::Elem) {
        if self.ring.is_zero(&c) || e.iter().sum::<u32>() > self.max_degree {
            return;
        }
        let s = match self.terms.remove(&e) {
            Some(old) => self.ring.add(&old, &c),
            None => c,
        };
        if !self.ring.is_zero(&s) {
            self.terms.insert(e, s);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &R::Elem) -> Self {
        let mut out = TruncPoly { ring: self.ring.clone(), rank: self.rank, max_degree: self.max_degree, terms: BTreeMap::new() };
        for (e, x) in &self.terms {
            out.add_term(e.clone(), self.ring.mul(x, c));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let max_degree = self.max_degree.min(other.max_degree);
        let mut out = TruncPoly { ring: self.ring.clone(), rank: self.rank, max_degree, terms: BTreeMap::new() };
        for (ea, a) in &self.terms {
            let da: u32 = ea.iter().sum();
            for (eb, b) in &other.terms {
                if da + eb.iter().sum::<u32>() > max_degree {
                    continue;
                }
                let e = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, self.ring.mul(a, b));
            }
        }
        out
    }

    /// Lowest total degree present; `None` when zero up to the truncation.
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).min()
    }
}

/// The few operations the idempotent formula needs.
pub trait LocalAlgebra: Clone {
    type Scalar;
    fn constant_like(&self, c: &Self::Scalar) -> Self;
    fn plus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;

    fn power(&self, n: u32, one: &Self) -> Self {
        (0..n).fold(one.clone(), |acc, _| acc.times(self))
    }
}

impl<R: CoeffRing> LocalAlgebra for Jet<R> {
    type Scalar = R::Elem;
    fn constant_like(&self, c: &R::Elem) -> Self {
        Jet::constant(&self.ring, c.clone(), self.precision())
    }
    fn plus(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn times(&self, other: &Self) -> Self {
        self.mul(other)
    }
}

impl<R: CoeffRing> LocalAlgebra for TruncPoly<R> {
    type Scalar = R::Elem;
    fn constant_like(&self, c: &R::Elem) -> Self {
        TruncPoly::constant(&self.ring, self.rank, self.max_degree, c.clone())
    }
    fn plus(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn times(&self, other: &Self) -> Self {
        self.mul(other)
    }
}
