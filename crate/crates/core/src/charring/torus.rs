//! Characters of the torus: finite sums `Σ c_λ K_λ`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::root_datum::RootDatum;
use crate::weight::Weight;
use crate::weyl::FiniteWeylElement;

use super::ring::CoeffRing;

/// An element of the group algebra of the weight lattice with coefficients
/// in `R`. No zero coefficients are stored.
#[derive(Clone, PartialEq)]
pub struct TorusChar<R: CoeffRing> {
    ring: R,
    terms: BTreeMap<Weight, R::Elem>,
}

impl<R: CoeffRing> fmt::Debug for TorusChar<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

impl<R: CoeffRing> TorusChar<R> {
    pub fn zero(ring: &R) -> Self {
        TorusChar { ring: ring.clone(), terms: BTreeMap::new() }
    }

    /// `c · K_λ`.
    pub fn monomial(ring: &R, lambda: Weight, c: R::Elem) -> Self {
        let mut out = Self::zero(ring);
        out.add_term(lambda, &c);
        out
    }

    /// `K_λ`.
    pub fn k(ring: &R, lambda: Weight) -> Self {
        Self::monomial(ring, lambda, ring.one())
    }

    pub fn constant(ring: &R, rank: usize, c: R::Elem) -> Self {
        Self::monomial(ring, Weight::zero(rank), c)
    }

    pub fn one(ring: &R, rank: usize) -> Self {
        Self::constant(ring, rank, ring.one())
    }

    pub fn from_terms(ring: &R, it: impl IntoIterator<Item = (Weight, R::Elem)>) -> Self {
        let mut out = Self::zero(ring);
        for (w, c) in it {
            out.add_term(w, &c);
        }
        out
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Weight, &R::Elem)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, lambda: &Weight) -> R::Elem {
        self.terms.get(lambda).cloned().unwrap_or_else(|| self.ring.zero())
    }

    pub fn add_term(&mut self, lambda: Weight, c: &R::Elem) {
        if self.ring.is_zero(c) {
            return;
        }
        match self.terms.get_mut(&lambda) {
            Some(x) => {
                let s = self.ring.add(x, c);
                if self.ring.is_zero(&s) {
                    self.terms.remove(&lambda);
                } else {
                    *x = s;
                }
            }
            None => {
                self.terms.insert(lambda, c.clone());
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), &self.ring.neg(c));
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|c| self.ring.neg(c))
    }

    pub fn scale(&self, c: &R::Elem) -> Self {
        self.map_coeffs(|x| self.ring.mul(x, c))
    }

    /// Applies a coefficientwise map, dropping zeros.
    pub fn map_coeffs(&self, f: impl Fn(&R::Elem) -> R::Elem) -> Self {
        let mut out = Self::zero(&self.ring);
        for (w, c) in &self.terms {
            out.add_term(w.clone(), &f(c));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut acc: HashMap<Weight, R::Elem> = HashMap::new();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let p = self.ring.mul(x, y);
                let key = a + b;
                match acc.get_mut(&key) {
                    Some(v) => *v = self.ring.add(v, &p),
                    None => {
                        acc.insert(key, p);
                    }
                }
            }
        }
        let terms = acc.into_iter().filter(|(_, c)| !self.ring.is_zero(c)).collect();
        TorusChar { ring: self.ring.clone(), terms }
    }

    pub fn pow(&self, n: u32, rank: usize) -> Self {
        let mut out = Self::one(&self.ring, rank);
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// `w · f`, sending `K_λ` to `K_{wλ}`.
    pub fn weyl_act(&self, w: &FiniteWeylElement) -> Self {
        TorusChar {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(l, c)| (w.apply(l), c.clone())).collect(),
        }
    }

    /// Invariance under every simple reflection.
    pub fn is_weyl_invariant(&self, d: &RootDatum) -> bool {
        (0..d.rank).all(|i| {
            self.terms.iter().all(|(l, c)| {
                let img = crate::weyl::simple_reflect(d, i, l);
                self.terms.get(&img) == Some(c)
            })
        })
    }

    /// `s_i f = −f` for every simple reflection.
    pub fn is_weyl_anti_invariant(&self, d: &RootDatum) -> bool {
        (0..d.rank).all(|i| {
            self.terms.iter().all(|(l, c)| {
                let img = crate::weyl::simple_reflect(d, i, l);
                self.terms.get(&img) == Some(&self.ring.neg(c))
            })
        })
    }

    /// Changes the coefficient ring through a homomorphism.
    pub fn convert<S: CoeffRing>(&self, target: &S, f: impl Fn(&R::Elem) -> S::Elem) -> TorusChar<S> {
        let mut out = TorusChar::zero(target);
        for (w, c) in &self.terms {
            out.add_term(w.clone(), &f(c));
        }
        out
    }
}

fn order_key(w: &Weight) -> (i64, Weight) {
    (w.degree(), w.clone())
}

/// Exact quotient `f / g` by leading-term elimination in graded
/// lexicographic order. The quotient support must lie in the box between
/// the coordinatewise extremes, which bounds the elimination.
pub fn exact_divide<R: CoeffRing>(f: &TorusChar<R>, g: &TorusChar<R>) -> Result<TorusChar<R>> {
    let ring = f.ring.clone();
    let (g_lead, g_lead_c) = g
        .terms
        .iter()
        .max_by_key(|(w, _)| order_key(w))
        .map(|(w, c)| (w.clone(), c.clone()))
        .ok_or(Error::NonExactDivision)?;
    let inv = ring.unit_inverse(&g_lead_c).ok_or(Error::NonExactDivision)?;
    if f.is_zero() {
        return Ok(TorusChar::zero(&ring));
    }
    let rank = g_lead.rank();
    let extreme = |t: &TorusChar<R>, pick_max: bool| -> Vec<i64> {
        (0..rank)
            .map(|i| {
                let it = t.terms.keys().map(|w| w.0[i]);
                if pick_max {
                    it.max().unwrap()
                } else {
                    it.min().unwrap()
                }
            })
            .collect()
    };
    let (fmin, fmax) = (extreme(f, false), extreme(f, true));
    let (gmin, gmax) = (extreme(g, false), extreme(g, true));
    let lo: Vec<i64> = (0..rank).map(|i| fmin[i] - gmin[i]).collect();
    let hi: Vec<i64> = (0..rank).map(|i| fmax[i] - gmax[i]).collect();

    let mut rem: BTreeMap<(i64, Weight), R::Elem> =
        f.terms.iter().map(|(w, c)| (order_key(w), c.clone())).collect();
    let mut quot = TorusChar::zero(&ring);
    while let Some(((_, top), c)) = rem.iter().next_back().map(|(k, c)| (k.clone(), c.clone())) {
        let shift = &top - &g_lead;
        if (0..rank).any(|i| shift.0[i] < lo[i] || shift.0[i] > hi[i]) {
            return Err(Error::NonExactDivision);
        }
        let factor = ring.mul(&c, &inv);
        for (w, x) in &g.terms {
            let key = order_key(&(w + &shift));
            let delta = ring.neg(&ring.mul(x, &factor));
            let remove = match rem.get_mut(&key) {
                Some(v) => {
                    *v = ring.add(v, &delta);
                    ring.is_zero(v)
                }
                None => {
                    rem.insert(key.clone(), delta);
                    false
                }
            };
            if remove {
                rem.remove(&key);
            }
        }
        quot.add_term(shift, &factor);
    }
    Ok(quot)
}
