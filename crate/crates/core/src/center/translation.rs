//! The scalar `tr_V(p_[0] · tr_{V*}(p_[ω]))(ζ^{2(ω+ρ)})` attached to a
//! translation to and from the principal block.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::charring::{CoeffRing, factorize_denominator, weight_multiset, weyl_denominator, CycScalar, CyclotomicRing, TorusChar};
use crate::error::{Error, Result};
use crate::linkage::{extreme_module_highest_weight, BlockLabel};
use crate::root_datum::RootDatum;
use crate::weight::Weight;

use super::element::{coordinates_with, fundamental_characters};
use super::idempotent::{build_block_idempotent, BlockIdempotent, IdempotentSpec};
use super::jet::{on_curve, Jet};

pub const DEFAULT_MULTIPLICITY: u32 = 3;
pub const MULTIPLICITY_CAP: u32 = 6;

#[derive(Clone, Debug)]
pub struct TraceScalar {
    pub omega: Weight,
    pub value: CycScalar,
    /// Multiplicity at which the value was read.
    pub n: u32,
    /// Whether the value agreed with the one at `n + 1`.
    pub stable: bool,
    pub expected: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct TraceReport {
    pub omega: Vec<i64>,
    pub scalar: String,
    pub expected: usize,
    pub stable: bool,
    pub n: u32,
}

impl TraceScalar {
    pub fn matches_expected(&self) -> bool {
        self.stable && self.value.as_rational() == Some(crate::charring::rat(self.expected as i64))
    }

    pub fn report(&self) -> TraceReport {
        TraceReport {
            omega: self.omega.0.clone(),
            scalar: self.value.to_string(),
            expected: self.expected,
            stable: self.stable,
            n: self.n,
        }
    }
}

fn multiset_counts(weights: &[Weight]) -> BTreeMap<Weight, i64> {
    let mut m = BTreeMap::new();
    for w in weights {
        *m.entry(w.clone()).or_insert(0) += 1;
    }
    m
}

/// Idempotent at `target` vanishing at every listed point not equal to it.
fn separating_idempotent(
    d: &RootDatum,
    field: &CyclotomicRing,
    target: &Weight,
    points: impl IntoIterator<Item = Weight>,
    n: u32,
) -> Result<BlockIdempotent> {
    let fundamentals = fundamental_characters(d, field);
    let here = coordinates_with(d, &fundamentals, target);
    let mut others: Vec<Weight> = points.into_iter().collect();
    others.sort();
    others.dedup();
    others.retain(|p| coordinates_with(d, &fundamentals, p) != here);
    build_block_idempotent(d, field, &IdempotentSpec { target: target.clone(), others, n })
}

/// The weights of `V` (highest weight `−w₀ω`) and of its dual.
pub fn translation_modules(d: &RootDatum, omega: &Weight) -> Result<(Vec<Weight>, Vec<Weight>)> {
    let v = weight_multiset(d, &extreme_module_highest_weight(d, omega))?;
    let dual = v.iter().map(|x| -x).collect();
    Ok((v, dual))
}

/// The scalar at a fixed multiplicity `n`.
pub fn translation_trace_at(d: &RootDatum, field: &CyclotomicRing, omega: &Weight, n: u32) -> Result<CycScalar> {
    let (v, dual) = translation_modules(d, omega)?;
    let v = multiset_counts(&v);
    let dual = multiset_counts(&dual);
    let l = weyl_denominator(d, field);
    let probe = on_curve(d, &l, omega, d.positive_roots.len() + 1);
    let prec = probe.order().ok_or(Error::InsufficientTruncation(probe.precision()))? + 1;

    let zero = d.zero();
    let p_zero = separating_idempotent(d, field, &zero, v.keys().map(|nu| omega + nu), n)?;
    let mut second = Vec::new();
    for nu in v.keys() {
        for nu2 in dual.keys() {
            second.push(&(omega + nu) + nu2);
        }
    }
    let p_omega = separating_idempotent(d, field, omega, second, n)?;

    let mut inner_cache: HashMap<Weight, Jet<CyclotomicRing>> = HashMap::new();
    let mut numerator = Jet::zero(field, prec);
    for (nu, m) in &v {
        let x = omega + nu;
        let mut inner = Jet::zero(field, prec);
        for (nu2, m2) in &dual {
            let y = &x + nu2;
            let term = inner_cache
                .entry(y.clone())
                .or_insert_with(|| p_omega.on_curve(d, &y, prec).mul(&on_curve(d, &l, &y, prec)));
            inner = inner.add(&term.scale(&field.from_int(*m2)));
        }
        let outer = p_zero.on_curve(d, &x, prec).mul(&inner);
        numerator = numerator.add(&outer.scale(&field.from_int(*m)));
    }
    let den = on_curve(d, &l, omega, prec);
    Ok(numerator.quotient(&den)?.coeff(0).clone())
}

/// Runs from `n` upward until two consecutive multiplicities agree or the
/// cap is reached.
pub fn translation_trace_scalar(d: &RootDatum, block: &BlockLabel, n: u32) -> Result<TraceScalar> {
    let field = CyclotomicRing::new(block.l as u64);
    let mut cur_n = n.max(1);
    let mut cur = translation_trace_at(d, &field, &block.omega, cur_n)?;
    let mut stable = false;
    while cur_n < MULTIPLICITY_CAP.max(n) {
        let next = translation_trace_at(d, &field, &block.omega, cur_n + 1)?;
        if next == cur {
            stable = true;
            break;
        }
        cur = next;
        cur_n += 1;
    }
    Ok(TraceScalar { omega: block.omega.clone(), value: cur, n: cur_n, stable, expected: block.stabilizer_order() })
}

/// `Σ_{x∈W_ω} τ²_{xν}(p·f·L_ω) / L_ω` at the point of `ω`: the inner sum
/// that must vanish when `p` vanishes to high order at `[ω+ν]`.
pub fn alcove_sum_at_block(
    d: &RootDatum,
    block: &BlockLabel,
    nu: &Weight,
    p: &BlockIdempotent,
    f: &TorusChar<CyclotomicRing>,
) -> Result<CycScalar> {
    let field = f.ring();
    let (inner, _) = factorize_denominator(d, field, block);
    let probe = on_curve(d, &inner, &block.omega, d.positive_roots.len() + 1);
    let prec = probe.order().ok_or(Error::InsufficientTruncation(probe.precision()))? + 1;
    let mut num = Jet::zero(field, prec);
    for x in &block.stabilizer {
        let y = &block.omega + &x.apply(nu);
        let term = p.on_curve(d, &y, prec).mul(&on_curve(d, f, &y, prec)).mul(&on_curve(d, &inner, &y, prec));
        num = num.add(&term);
    }
    Ok(num.quotient(&on_curve(d, &inner, &block.omega, prec))?.coeff(0).clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linkage::{block_label, enumerate_blocks};
    use crate::root_datum::root_datum_from_str;

    fn w(v: &[i64]) -> Weight {
        Weight(v.to_vec())
    }

    #[test]
    fn a1_values() {
        let d = root_datum_from_str("A1").unwrap();
        for (om, expected) in [(0, 1), (-1, 2), (2, 2), (1, 1)] {
            let b = block_label(&d, 3, &w(&[om]));
            let t = translation_trace_scalar(&d, &b, DEFAULT_MULTIPLICITY).unwrap();
            assert_eq!(t.expected, expected);
            assert!(t.matches_expected(), "{om}: {:?}", t);
        }
    }

    #[test]
    fn a2_all_blocks() {
        let d = root_datum_from_str("A2").unwrap();
        for b in enumerate_blocks(&d, 5).unwrap() {
            let t = translation_trace_scalar(&d, &b, DEFAULT_MULTIPLICITY).unwrap();
            assert!(t.matches_expected(), "{:?}", t);
        }
    }
}
