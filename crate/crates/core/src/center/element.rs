//! Elements of the Harish-Chandra center, modelled as `W`-invariant
//! characters of the torus, and their central characters.

use std::collections::BTreeMap;

use crate::charring::{
    evaluate_at, fundamental_character, to_fundamental_basis, CoeffRing, CycScalar, CyclotomicRing,
    InvariantPoly, TorusChar,
};
use crate::error::{Error, Result};
use crate::root_datum::RootDatum;
use crate::weight::Weight;

use super::jet::TruncPoly;

/// A `W`-invariant character, with its fundamental-basis form once known.
#[derive(Clone, Debug, PartialEq)]
pub struct CentralElement<R: CoeffRing> {
    chr: TorusChar<R>,
    basis: Option<InvariantPoly<R>>,
}

impl<R: CoeffRing> CentralElement<R> {
    pub fn new(d: &RootDatum, chr: TorusChar<R>) -> Result<Self> {
        if !chr.is_weyl_invariant(d) {
            return Err(Error::NotInvariant);
        }
        Ok(CentralElement { chr, basis: None })
    }

    pub fn from_invariant(d: &RootDatum, poly: InvariantPoly<R>) -> Self {
        CentralElement { chr: poly.expand(d), basis: Some(poly) }
    }

    pub fn one(ring: &R, rank: usize) -> Self {
        CentralElement { chr: TorusChar::one(ring, rank), basis: None }
    }

    /// The fundamental character `e_i`.
    pub fn fundamental(d: &RootDatum, ring: &R, i: usize) -> Self {
        CentralElement { chr: fundamental_character(d, ring, i), basis: Some(InvariantPoly::variable(ring, d.rank, i)) }
    }

    pub fn character(&self) -> &TorusChar<R> {
        &self.chr
    }

    pub fn fundamental_form(&self, d: &RootDatum) -> Result<InvariantPoly<R>> {
        match &self.basis {
            Some(p) => Ok(p.clone()),
            None => to_fundamental_basis(d, &self.chr),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        CentralElement { chr: self.chr.add(&other.chr), basis: None }
    }

    pub fn sub(&self, other: &Self) -> Self {
        CentralElement { chr: self.chr.sub(&other.chr), basis: None }
    }

    pub fn mul(&self, other: &Self) -> Self {
        CentralElement { chr: self.chr.mul(&other.chr), basis: None }
    }

    pub fn scale(&self, c: &R::Elem) -> Self {
        CentralElement { chr: self.chr.scale(c), basis: None }
    }
}

/// The scalar by which `f` acts on the Verma module `M(λ)`.
pub fn central_character<R: CoeffRing>(d: &RootDatum, f: &CentralElement<R>, lambda: &Weight) -> R::Elem {
    evaluate_at(d, &f.chr, lambda, 2)
}

/// Values `e_i(q^{2(μ+ρ)})` of the fundamental characters: coordinates of
/// the point of `T/W` attached to `μ`.
pub fn point_coordinates<R: CoeffRing>(d: &RootDatum, ring: &R, mu: &Weight) -> Vec<R::Elem> {
    coordinates_with(d, &fundamental_characters(d, ring), mu)
}

pub fn fundamental_characters<R: CoeffRing>(d: &RootDatum, ring: &R) -> Vec<TorusChar<R>> {
    (0..d.rank).map(|i| fundamental_character(d, ring, i)).collect()
}

/// As [`point_coordinates`] with the fundamental characters precomputed.
pub fn coordinates_with<R: CoeffRing>(d: &RootDatum, fundamentals: &[TorusChar<R>], mu: &Weight) -> Vec<R::Elem> {
    fundamentals.iter().map(|e| evaluate_at(d, e, mu, 2)).collect()
}

/// Largest `n ≤ cap` with `f ∈ m_pt^n`, read off from the Taylor expansion
/// in the shifted fundamental coordinates.
pub fn membership_order(d: &RootDatum, f: &CentralElement<CyclotomicRing>, mu: &Weight, cap: u32) -> Result<u32> {
    let poly = f.fundamental_form(d)?;
    let ring = f.chr.ring();
    let coords = point_coordinates(d, ring, mu);
    let vars: Vec<TruncPoly<CyclotomicRing>> = coords
        .iter()
        .enumerate()
        .map(|(i, c)| TruncPoly::shifted_variable(ring, d.rank, cap, i, c.clone()))
        .collect();
    let one = TruncPoly::constant(ring, d.rank, cap, ring.one());
    let mut powers: Vec<Vec<TruncPoly<CyclotomicRing>>> = vars.iter().map(|v| vec![one.clone(), v.clone()]).collect();
    let mut total = TruncPoly::constant(ring, d.rank, cap, ring.zero());
    for (exps, c) in poly.terms() {
        let mut m = one.scale(c);
        for (i, &a) in exps.iter().enumerate() {
            while powers[i].len() <= a as usize {
                let next = powers[i].last().unwrap().mul(&vars[i]);
                powers[i].push(next);
            }
            m = m.mul(&powers[i][a as usize]);
        }
        total = total.add(&m);
    }
    Ok(total.order().map_or(cap, |o| o.min(cap)))
}

/// A function on a finite set of weights, the image of a central element
/// under the Verma central characters.
#[derive(Clone, Debug, PartialEq)]
pub struct CentralFunction {
    pub values: BTreeMap<Weight, CycScalar>,
}

impl CentralFunction {
    pub fn get(&self, lambda: &Weight) -> Option<&CycScalar> {
        self.values.get(lambda)
    }
}

pub fn central_function_from_invariant(
    d: &RootDatum,
    f: &CentralElement<CyclotomicRing>,
    domain: &[Weight],
) -> CentralFunction {
    let values = domain.iter().map(|w| (w.clone(), central_character(d, f, w))).collect();
    CentralFunction { values }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charring::rat;
    use crate::root_datum::root_datum_from_str;

    fn w(v: &[i64]) -> Weight {
        Weight(v.to_vec())
    }

    #[test]
    fn characters_a1() {
        let d = root_datum_from_str("A1").unwrap();
        let f = CyclotomicRing::new(3);
        let one = CentralElement::one(&f, 1);
        assert_eq!(central_character(&d, &one, &w(&[5])), f.one());
        let e1 = CentralElement::fundamental(&d, &f, 0);
        // ζ + ζ^{-1} = −1 in Q(ζ_3)
        assert_eq!(central_character(&d, &e1, &w(&[0])), f.from_int(-1));
        let expected = f.add(&f.zeta_pow(2), &f.zeta_pow(-2));
        assert_eq!(central_character(&d, &e1, &w(&[0])), expected);
        assert!(CentralElement::new(&d, TorusChar::k(&f, w(&[1]))).is_err());
    }

    #[test]
    fn orders() {
        let d = root_datum_from_str("A2").unwrap();
        let f = CyclotomicRing::new(5);
        let mu = w(&[1, 0]);
        let coords = point_coordinates(&d, &f, &mu);
        let e1 = CentralElement::fundamental(&d, &f, 0);
        let shifted = e1.sub(&CentralElement::one(&f, 2).scale(&coords[0]));
        assert_eq!(membership_order(&d, &e1, &mu, 4).unwrap(), 0);
        assert_eq!(membership_order(&d, &shifted, &mu, 4).unwrap(), 1);
        assert_eq!(membership_order(&d, &shifted.mul(&shifted), &mu, 4).unwrap(), 2);
        let zero = CentralElement::one(&f, 2).scale(&f.from_rational(&rat(0)));
        assert_eq!(membership_order(&d, &zero, &mu, 4).unwrap(), 4);
    }
}
