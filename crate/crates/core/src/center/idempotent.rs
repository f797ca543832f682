//! Block idempotents by congruence interpolation on `T/W ≅ A^r`.
//!
//! The element is kept as a formula in the fundamental characters and only
//! expanded on request: for each other point a single coordinate `e_i`
//! that separates it from the target is chosen, `p₀ = ∏ ((e_i − b)/(a − b))^n`
//! and `p = 1 − (1 − p₀)^n`.

use crate::charring::{CoeffRing, CycScalar, CyclotomicRing, InvariantPoly};
use crate::error::{Error, Result};
use crate::root_datum::RootDatum;
use crate::weight::Weight;

use super::element::{coordinates_with, fundamental_characters, CentralElement, CentralFunction};
use super::jet::{on_curve, Jet, LocalAlgebra, TruncPoly};
use crate::charring::TorusChar;

/// Target and other points, each a weight `μ` standing for `W(ζ^{2(μ+ρ)})`.
#[derive(Clone, Debug)]
pub struct IdempotentSpec {
    pub target: Weight,
    pub others: Vec<Weight>,
    pub n: u32,
}

#[derive(Clone, Debug)]
struct Separator {
    index: usize,
    value: CycScalar,
    scale: CycScalar,
}

/// `p ≡ 1 mod m_target^n`, `p ≡ 0 mod m_other^n`.
#[derive(Clone, Debug)]
pub struct BlockIdempotent {
    field: CyclotomicRing,
    rank: usize,
    fundamentals: Vec<TorusChar<CyclotomicRing>>,
    target: Weight,
    n: u32,
    separators: Vec<Separator>,
}

pub fn build_block_idempotent(d: &RootDatum, field: &CyclotomicRing, spec: &IdempotentSpec) -> Result<BlockIdempotent> {
    let fundamentals = fundamental_characters(d, field);
    let target = coordinates_with(d, &fundamentals, &spec.target);
    let mut seen: Vec<Vec<CycScalar>> = Vec::new();
    let mut separators = Vec::new();
    for other in &spec.others {
        let coords = coordinates_with(d, &fundamentals, other);
        if seen.contains(&coords) {
            continue;
        }
        let index = (0..d.rank)
            .find(|&i| coords[i] != target[i])
            .ok_or_else(|| Error::PointsNotSeparated(spec.target.0.clone(), other.0.clone()))?;
        let gap = field.sub(&target[index], &coords[index]);
        let scale = field.unit_inverse(&gap).expect("nonzero in a field");
        separators.push(Separator { index, value: coords[index].clone(), scale });
        seen.push(coords);
    }
    Ok(BlockIdempotent { field: field.clone(), rank: d.rank, fundamentals, target: spec.target.clone(), n: spec.n, separators })
}

impl BlockIdempotent {
    pub fn target(&self) -> &Weight {
        &self.target
    }

    pub fn multiplicity(&self) -> u32 {
        self.n
    }

    /// Number of distinct points the element vanishes at.
    pub fn other_count(&self) -> usize {
        self.separators.len()
    }

    fn formula<T: LocalAlgebra<Scalar = CycScalar>>(&self, coords: &[T]) -> T {
        let f = &self.field;
        let one = coords[0].constant_like(&f.one());
        let minus_one = coords[0].constant_like(&f.from_int(-1));
        let mut p0 = one.clone();
        for s in &self.separators {
            let lin = coords[s.index]
                .plus(&coords[0].constant_like(&f.neg(&s.value)))
                .times(&coords[0].constant_like(&s.scale));
            p0 = p0.times(&lin.power(self.n, &one));
        }
        let q = one.plus(&p0.times(&minus_one));
        one.plus(&q.power(self.n, &one).times(&minus_one))
    }

    /// Restriction to the curve through the point of `μ`.
    pub fn on_curve(&self, d: &RootDatum, mu: &Weight, prec: usize) -> Jet<CyclotomicRing> {
        let coords: Vec<Jet<CyclotomicRing>> = self.fundamentals.iter().map(|e| on_curve(d, e, mu, prec)).collect();
        self.formula(&coords)
    }

    /// `p(ζ^{2(μ+ρ)})`.
    pub fn value_at(&self, d: &RootDatum, mu: &Weight) -> CycScalar {
        self.on_curve(d, mu, 1).coeff(0).clone()
    }

    /// Order of vanishing at the point of `μ`, capped.
    pub fn membership_order(&self, d: &RootDatum, mu: &Weight, cap: u32) -> u32 {
        self.shifted_taylor(d, mu, cap).order().map_or(cap, |o| o.min(cap))
    }

    /// Order of `p − 1` at the point of `μ`, capped.
    pub fn unit_order(&self, d: &RootDatum, mu: &Weight, cap: u32) -> u32 {
        let t = self.shifted_taylor(d, mu, cap);
        let minus_one = t.constant_like(&self.field.from_int(-1));
        t.add(&minus_one).order().map_or(cap, |o| o.min(cap))
    }

    fn shifted_taylor(&self, d: &RootDatum, mu: &Weight, cap: u32) -> TruncPoly<CyclotomicRing> {
        let coords: Vec<TruncPoly<CyclotomicRing>> = coordinates_with(d, &self.fundamentals, mu)
            .into_iter()
            .enumerate()
            .map(|(i, c)| TruncPoly::shifted_variable(&self.field, self.rank, cap, i, c))
            .collect();
        self.formula(&coords)
    }

    /// The polynomial in the fundamental characters.
    pub fn to_invariant(&self) -> InvariantPoly<CyclotomicRing> {
        let coords: Vec<InvariantPoly<CyclotomicRing>> =
            (0..self.rank).map(|i| InvariantPoly::variable(&self.field, self.rank, i)).collect();
        self.formula(&coords)
    }

    /// Fully expanded element; only sensible for small rank and few points.
    pub fn to_central(&self, d: &RootDatum) -> CentralElement<CyclotomicRing> {
        CentralElement::from_invariant(d, self.to_invariant())
    }

    pub fn central_function(&self, d: &RootDatum, domain: &[Weight]) -> CentralFunction {
        CentralFunction { values: domain.iter().map(|w| (w.clone(), self.value_at(d, w))).collect() }
    }
}

impl LocalAlgebra for InvariantPoly<CyclotomicRing> {
    type Scalar = CycScalar;
    fn constant_like(&self, c: &CycScalar) -> Self {
        InvariantPoly::constant(self.ring(), self.rank(), c.clone())
    }
    fn plus(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn times(&self, other: &Self) -> Self {
        self.mul(other)
    }
}
