//! The trace `tr_V : f ↦ (Σ_{ν∈P(V)} τ²_ν(f·L)) / L` and its pointwise oracle.

use std::collections::BTreeMap;

use crate::charring::{
    evaluate_at, exact_divide, quantum_dimension, tau_twist, weight_multiset, weyl_denominator, CoeffRing,
    LaurentRing, QLaurent, TorusChar,
};
use crate::error::{Error, Result};
use crate::root_datum::RootDatum;
use crate::weight::Weight;

use super::element::CentralElement;

fn counted(weights: &[Weight]) -> BTreeMap<&Weight, i64> {
    let mut m = BTreeMap::new();
    for w in weights {
        *m.entry(w).or_insert(0) += 1;
    }
    m
}

/// `tr` over an arbitrary weight multiset.
pub fn bernstein_trace_multiset<R: CoeffRing>(
    d: &RootDatum,
    weights: &[Weight],
    f: &CentralElement<R>,
) -> Result<CentralElement<R>> {
    let chr = f.character();
    if !chr.is_weyl_invariant(d) {
        return Err(Error::NotInvariant);
    }
    let ring = chr.ring();
    let l = weyl_denominator(d, ring);
    let fl = chr.mul(&l);
    let mut sum = TorusChar::zero(ring);
    for (nu, m) in counted(weights) {
        sum = sum.add(&tau_twist(d, nu, &fl, 2).scale(&ring.from_int(m)));
    }
    CentralElement::new(d, exact_divide(&sum, &l)?)
}

/// `tr_V` for the Weyl module `V = V(λ_V)`.
pub fn bernstein_trace<R: CoeffRing>(
    d: &RootDatum,
    v_highest: &Weight,
    f: &CentralElement<R>,
) -> Result<CentralElement<R>> {
    bernstein_trace_multiset(d, &weight_multiset(d, v_highest)?, f)
}

/// `Σ_{ν∈P(V)} χ_{μ+ν}(q^{2ρ}) · f(q^{2(μ+ν+ρ)})`, the trace of `f` on
/// `V(μ) ⊗ V` computed from the tensor identity.
pub fn quantum_trace_oracle(
    d: &RootDatum,
    mu: &Weight,
    v_highest: &Weight,
    f: &CentralElement<LaurentRing>,
) -> Result<QLaurent> {
    let mut out = QLaurent::zero();
    for (nu, m) in counted(&weight_multiset(d, v_highest)?) {
        let shifted = mu + nu;
        let term = &quantum_dimension(d, &shifted) * &evaluate_at(d, f.character(), &shifted, 2);
        out = &out + &term.scale(&crate::charring::rat(m));
    }
    Ok(out)
}
