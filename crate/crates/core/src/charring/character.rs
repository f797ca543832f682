//! Weyl characters, the Weyl denominator, twists and evaluations.

use crate::error::{Error, Result};
use crate::linkage::BlockLabel;
use crate::root_datum::RootDatum;
use crate::weight::Weight;
use crate::weyl::reflection_element;

use super::cyclotomic::CyclotomicRing;
use super::laurent::{LaurentRing, QLaurent};
use super::ring::CoeffRing;
use super::torus::{exact_divide, TorusChar};

/// `1 − K_{−α}`.
fn one_minus_inverse<R: CoeffRing>(ring: &R, alpha: &Weight) -> TorusChar<R> {
    let mut f = TorusChar::one(ring, alpha.rank());
    f.add_term(-alpha, &ring.from_int(-1));
    f
}

/// `L = K_ρ ∏_{α>0} (1 − K_{−α})`.
pub fn weyl_denominator<R: CoeffRing>(d: &RootDatum, ring: &R) -> TorusChar<R> {
    d.positive_roots
        .iter()
        .fold(TorusChar::k(ring, d.rho.clone()), |acc, a| acc.mul(&one_minus_inverse(ring, a)))
}

/// `Σ_w (−1)^{l(w)} K_{wλ}`.
pub fn alternating_sum<R: CoeffRing>(d: &RootDatum, ring: &R, lambda: &Weight) -> TorusChar<R> {
    let mut out = TorusChar::zero(ring);
    for w in d.weyl_group().expect("rank within cap") {
        out.add_term(w.apply(lambda), &ring.from_int(w.sign()));
    }
    out
}

/// The character of the Weyl module `V(λ)`, by the alternating-sum formula.
pub fn weyl_character<R: CoeffRing>(d: &RootDatum, ring: &R, lambda: &Weight) -> Result<TorusChar<R>> {
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.0.clone()));
    }
    let num = alternating_sum(d, ring, &(lambda + &d.rho));
    exact_divide(&num, &weyl_denominator(d, ring))
}

/// Weights of `V(λ)` repeated according to multiplicity, sorted.
pub fn weight_multiset(d: &RootDatum, lambda: &Weight) -> Result<Vec<Weight>> {
    let ch = weyl_character(d, &LaurentRing, lambda)?;
    let mut out = Vec::new();
    for (w, c) in ch.terms() {
        let m = c.as_constant().expect("integral multiplicities");
        assert!(m.is_integer());
        let m: i64 = m.to_integer().try_into().unwrap();
        for _ in 0..m {
            out.push(w.clone());
        }
    }
    Ok(out)
}

/// Multiplicities of Weyl modules in a `W`-invariant character with
/// integer coefficients, found by peeling off highest dominant terms.
pub fn decompose_character(d: &RootDatum, chr: &TorusChar<LaurentRing>) -> Result<Vec<(Weight, i64)>> {
    let ring = LaurentRing;
    let mut rest = chr.clone();
    let mut out = Vec::new();
    while !rest.is_zero() {
        let top = rest
            .terms()
            .map(|(w, _)| w)
            .filter(|w| w.is_dominant())
            .max_by_key(|w| (d.e_root_coords(w).iter().sum::<i64>(), (*w).clone()))
            .ok_or(Error::NotInvariant)?
            .clone();
        let c = rest.coeff(&top);
        let m = c.as_constant().filter(|m| m.is_integer()).ok_or(Error::NotInvariant)?;
        let m: i64 = m.to_integer().try_into().map_err(|_| Error::NotInvariant)?;
        rest = rest.sub(&weyl_character(d, &ring, &top)?.scale(&c));
        out.push((top, m));
    }
    out.sort();
    Ok(out)
}

/// The `i`-th fundamental character `ch V(ϖ_i)`.
pub fn fundamental_character<R: CoeffRing>(d: &RootDatum, ring: &R, i: usize) -> TorusChar<R> {
    weyl_character(d, ring, &d.fundamental(i)).expect("fundamental weights are dominant")
}

/// `τ_ν^{power}`: `K_λ ↦ q^{power·(ν,λ)} K_λ`, realised as a power of `q_e`.
pub fn tau_twist<R: CoeffRing>(d: &RootDatum, nu: &Weight, f: &TorusChar<R>, power: i64) -> TorusChar<R> {
    let ring = f.ring().clone();
    let mut out = TorusChar::zero(&ring);
    for (lambda, c) in f.terms() {
        out.add_term(lambda.clone(), &ring.mul_qe_pow(c, power * d.e_pairing(nu, lambda)));
    }
    out
}

/// `K_λ ↦ q^{shift·(λ, μ+ρ)}`; `shift = 2` gives `f(q^{2(μ+ρ)})`.
pub fn evaluate_at<R: CoeffRing>(d: &RootDatum, f: &TorusChar<R>, mu: &Weight, shift: i64) -> R::Elem {
    let ring = f.ring();
    let point = mu + &d.rho;
    f.terms().fold(ring.zero(), |acc, (lambda, c)| {
        ring.add(&acc, &ring.mul_qe_pow(c, shift * d.e_pairing(lambda, &point)))
    })
}

/// `L(q^{2(λ+ρ)}) / L(q^{2ρ})`, zero when `λ + ρ` is singular.
pub fn quantum_dimension(d: &RootDatum, lambda: &Weight) -> QLaurent {
    let l = weyl_denominator(d, &LaurentRing);
    let num = evaluate_at(d, &l, lambda, 2);
    let den = evaluate_at(d, &l, &d.zero(), 2);
    num.div_exact(&den).expect("Weyl dimension quotient is a Laurent polynomial")
}

/// Splits `L = L_ω · L′_ω` according to whether `s_α` lies in the
/// stabilizer of `ω`.
pub fn factorize_denominator<R: CoeffRing>(
    d: &RootDatum,
    ring: &R,
    block: &BlockLabel,
) -> (TorusChar<R>, TorusChar<R>) {
    let mut inner = TorusChar::k(ring, d.rho.clone());
    let mut outer = TorusChar::one(ring, d.rank);
    for (k, alpha) in d.positive_roots.iter().enumerate() {
        let s = reflection_element(d, k);
        if block.stabilizer.contains(&s) {
            inner = inner.mul(&one_minus_inverse(ring, alpha));
        } else {
            outer = outer.mul(&one_minus_inverse(ring, alpha));
        }
    }
    (inner, outer)
}

/// Positive roots whose reflections lie in the stabilizer of `ω`.
pub fn stabilizer_roots(d: &RootDatum, block: &BlockLabel) -> Vec<usize> {
    (0..d.positive_roots.len())
        .filter(|&k| block.stabilizer.contains(&reflection_element(d, k)))
        .collect()
}

/// Coefficientwise `q_e ↦ ζ_e`.
pub fn specialize(f: &TorusChar<LaurentRing>, field: &CyclotomicRing) -> TorusChar<CyclotomicRing> {
    f.convert(field, |c| field.specialize(c))
}
