//! Polynomials in the fundamental characters `e_i = ch V(ϖ_i)`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::root_datum::RootDatum;
use crate::weight::Weight;

use super::character::fundamental_character;
use super::ring::CoeffRing;
use super::torus::TorusChar;

/// `Σ c_a e_1^{a_1} ⋯ e_r^{a_r}`.
#[derive(Clone, PartialEq)]
pub struct InvariantPoly<R: CoeffRing> {
    ring: R,
    rank: usize,
    terms: BTreeMap<Vec<u32>, R::Elem>,
}

impl<R: CoeffRing> fmt::Debug for InvariantPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

impl<R: CoeffRing> fmt::Display for InvariantPoly<R>
where
    R::Elem: fmt::Display,
{
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (exps, c) in self.terms.iter().rev() {
            let mono: Vec<String> = exps
                .iter()
                .enumerate()
                .filter(|(_, &a)| a > 0)
                .map(|(i, &a)| if a == 1 { format!("e_{}", i + 1) } else { format!("e_{}^{}", i + 1, a) })
                .collect();
            let cs = c.to_string();
            let (neg, body) = match cs.strip_prefix('-') {
                Some(rest) if !rest.contains([' ', '+']) => (true, rest.to_string()),
                _ => (false, cs.clone()),
            };
            let body = if body.contains([' ', '+', '-']) { format!("({body})") } else { body };
            let term = match (mono.is_empty(), body.as_str()) {
                (true, _) => body.clone(),
                (false, "1") => mono.join(" "),
                (false, _) => format!("{body} {}", mono.join(" ")),
            };
            match (first, neg) {
                (true, true) => write!(f, "-{term}")?,
                (true, false) => write!(f, "{term}")?,
                (false, true) => write!(f, " - {term}")?,
                (false, false) => write!(f, " + {term}")?,
            }
            first = false;
        }
        Ok(())
    }
}

impl<R: CoeffRing> InvariantPoly<R> {
    pub fn zero(ring: &R, rank: usize) -> Self {
        InvariantPoly { ring: ring.clone(), rank, terms: BTreeMap::new() }
    }

    pub fn constant(ring: &R, rank: usize, c: R::Elem) -> Self {
        let mut p = Self::zero(ring, rank);
        p.add_term(vec![0; rank], &c);
        p
    }

    /// `e_i` (0-based index).
    pub fn variable(ring: &R, rank: usize, i: usize) -> Self {
        let mut exps = vec![0; rank];
        exps[i] = 1;
        let mut p = Self::zero(ring, rank);
        p.add_term(exps, &ring.one());
        p
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &R::Elem)> {
        self.terms.iter()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: &R::Elem) {
        if self.ring.is_zero(c) {
            return;
        }
        let s = match self.terms.remove(&exps) {
            Some(old) => self.ring.add(&old, c),
            None => c.clone(),
        };
        if !self.ring.is_zero(&s) {
            self.terms.insert(exps, s);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), &self.ring.neg(c));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(&self.ring, self.rank);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, &self.ring.mul(ca, cb));
            }
        }
        out
    }

    /// Evaluates with `e_i ↦ values[i]`.
    pub fn eval(&self, values: &[R::Elem]) -> R::Elem {
        let r = &self.ring;
        self.terms.iter().fold(r.zero(), |acc, (exps, c)| {
            let m = exps
                .iter()
                .zip(values)
                .fold(c.clone(), |m, (&a, v)| r.mul(&m, &r.pow(v, a)));
            r.add(&acc, &m)
        })
    }

    /// Rewrites as an honest torus character.
    pub fn expand(&self, d: &RootDatum) -> TorusChar<R> {
        let mut cache = MonomialCache::new(d, &self.ring);
        let mut out = TorusChar::zero(&self.ring);
        for (exps, c) in &self.terms {
            out = out.add(&cache.get(exps).scale(c));
        }
        out
    }
}

/// Memoized products `∏ e_i^{a_i}`.
struct MonomialCache<'a, R: CoeffRing> {
    d: &'a RootDatum,
    fundamentals: Vec<TorusChar<R>>,
    memo: HashMap<Vec<u32>, TorusChar<R>>,
}

impl<'a, R: CoeffRing> MonomialCache<'a, R> {
    fn new(d: &'a RootDatum, ring: &R) -> Self {
        let fundamentals = (0..d.rank).map(|i| fundamental_character(d, ring, i)).collect();
        let mut memo = HashMap::new();
        memo.insert(vec![0; d.rank], TorusChar::one(ring, d.rank));
        MonomialCache { d, fundamentals, memo }
    }

    fn get(&mut self, exps: &[u32]) -> TorusChar<R> {
        if let Some(m) = self.memo.get(exps) {
            return m.clone();
        }
        let i = exps.iter().position(|&a| a > 0).expect("zero exponent is memoized");
        let mut smaller = exps.to_vec();
        smaller[i] -= 1;
        let m = self.get(&smaller).mul(&self.fundamentals[i]);
        self.memo.insert(exps.to_vec(), m.clone());
        debug_assert!(self.d.rank == exps.len());
        m
    }
}

/// Writes a `W`-invariant character as a polynomial in the fundamental
/// characters, peeling off highest dominant terms.
pub fn to_fundamental_basis<R: CoeffRing>(d: &RootDatum, f: &TorusChar<R>) -> Result<InvariantPoly<R>> {
    if !f.is_weyl_invariant(d) {
        return Err(Error::NotInvariant);
    }
    let ring = f.ring().clone();
    let mut cache = MonomialCache::new(d, &ring);
    let mut rest = f.clone();
    let mut out = InvariantPoly::zero(&ring, d.rank);
    while !rest.is_zero() {
        let top: Weight = rest
            .terms()
            .map(|(w, _)| w)
            .filter(|w| w.is_dominant())
            .max_by_key(|w| (d.e_root_coords(w).iter().sum::<i64>(), (*w).clone()))
            .ok_or(Error::NotInvariant)?
            .clone();
        let c = rest.coeff(&top);
        let exps: Vec<u32> = top.coords().iter().map(|&a| a as u32).collect();
        rest = rest.sub(&cache.get(&exps).scale(&c));
        out.add_term(exps, &c);
    }
    Ok(out)
}
