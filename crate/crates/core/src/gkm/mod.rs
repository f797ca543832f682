//! Fixed-point models of torus-equivariant cohomology of partial affine
//! flag varieties.
//!
//! Polynomials live in `k[t][ħ]`: variables `x_1..x_r` are the fundamental
//! weights viewed as linear forms, the last variable is `ħ`. A finite `w`
//! acts linearly, a translation by `τ_μ(λ) = λ − (λ, μ)ħ`.

pub mod poly;

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use crate::charring::{rat, rat_frac, Rational};
use crate::error::{Error, Result};
use crate::linkage::BlockLabel;
use crate::root_datum::RootDatum;
use crate::weight::Weight;
use crate::weyl::{
    affine_elements_by_length, affine_simple_reflections, min_coset_reps, reflection_element, AffineElement,
    FiniteWeylElement, GradedSeries, LatticeTag, ParabolicType,
};

pub use poly::Poly;

/// Number of variables of `k[t][ħ]` for rank `r`.
pub fn cartan_vars(d: &RootDatum) -> usize {
    d.rank + 1
}

pub fn hbar(d: &RootDatum) -> Poly {
    Poly::var(cartan_vars(d), d.rank)
}

/// A weight as a linear form.
pub fn weight_form(lambda: &Weight) -> Poly {
    let coeffs: Vec<Rational> = lambda.coords().iter().map(|&c| rat(c)).chain([rat(0)]).collect();
    Poly::linear(&coeffs, rat(0))
}

/// Images of the variables under `y = w τ_μ`.
fn affine_images(d: &RootDatum, y: &AffineElement) -> Vec<Poly> {
    let h = hbar(d);
    let mut out: Vec<Poly> = (0..d.rank)
        .map(|i| {
            let fw = d.fundamental(i);
            let shift = rat_frac(d.e_pairing(&fw, &y.translation), d.e());
            weight_form(&y.finite.apply(&fw)).sub(&h.scale(&shift))
        })
        .collect();
    out.push(h);
    out
}

pub fn act_affine(d: &RootDatum, y: &AffineElement, f: &Poly) -> Poly {
    f.substitute(&affine_images(d, y))
}

pub fn act_finite(d: &RootDatum, w: &FiniteWeylElement, f: &Poly) -> Poly {
    act_affine(d, &AffineElement::from_finite(w, d, LatticeTag::Q, 1), f)
}

/// `Λ_ω`: product of the positive roots whose reflections fix `ω`.
pub fn lambda_omega(d: &RootDatum, block: &BlockLabel) -> Poly {
    let mut out = Poly::one(cartan_vars(d));
    for (k, alpha) in d.positive_roots.iter().enumerate() {
        if block.stabilizer.contains(&reflection_element(d, k)) {
            out = out.mul(&weight_form(alpha));
        }
    }
    out
}

fn alternating_sum(d: &RootDatum, block: &BlockLabel, f: &Poly) -> Poly {
    block
        .stabilizer
        .iter()
        .fold(Poly::zero(f.nvars()), |acc, x| acc.add(&act_finite(d, x, f).scale(&rat(x.sign()))))
}

/// `π′_*(f) = Σ_{x∈W_ω} (−1)^{l(x)} x(f) / Λ_ω`.
pub fn pi_star_poly(d: &RootDatum, block: &BlockLabel, f: &Poly) -> Result<Poly> {
    alternating_sum(d, block, f)
        .div_exact(&lambda_omega(d, block))
        .ok_or(Error::NonExactDivision)
}

/// A quotient of polynomials, compared by cross-multiplication.
#[derive(Clone, Debug)]
pub struct Fraction {
    pub num: Poly,
    pub den: Poly,
}

impl Fraction {
    pub fn poly(p: Poly) -> Self {
        let n = p.nvars();
        Fraction { num: p, den: Poly::one(n) }
    }

    pub fn add(&self, other: &Fraction) -> Fraction {
        if self.den == other.den {
            return Fraction { num: self.num.add(&other.num), den: self.den.clone() };
        }
        Fraction {
            num: self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            den: self.den.mul(&other.den),
        }
    }

    pub fn scale(&self, c: &Rational) -> Fraction {
        Fraction { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn divide_by(&self, p: &Poly) -> Fraction {
        Fraction { num: self.num.clone(), den: self.den.mul(p) }
    }

    pub fn same_as(&self, other: &Fraction) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }
}

/// Values on fixed points of length at most `truncation`.
#[derive(Clone, Debug)]
pub struct FixedPointFamily {
    pub values: HashMap<AffineElement, Fraction>,
    pub truncation: usize,
}

impl FixedPointFamily {
    pub fn get(&self, y: &AffineElement) -> Option<&Fraction> {
        self.values.get(y)
    }
}

fn stabilizer_type(d: &RootDatum, block: &BlockLabel) -> Result<ParabolicType> {
    if block.parahoric_type.contains(&0) {
        return Err(Error::InfiniteParabolic(block.parahoric_type.iter().copied().collect()));
    }
    ParabolicType::new(d, block.parahoric_type.iter().copied(), 1)
}

/// Minimal representatives of `W_af / W_ω` up to the given length.
pub fn fixed_points(d: &RootDatum, block: &BlockLabel, truncation: usize) -> Result<Vec<AffineElement>> {
    Ok(min_coset_reps(d, &stabilizer_type(d, block)?, truncation))
}

/// All of `W_af` up to the given length.
pub fn all_fixed_points(d: &RootDatum, truncation: usize) -> Vec<AffineElement> {
    affine_elements_by_length(d, 1, truncation).into_iter().flatten().collect()
}

/// `g ⊗ f ↦ (g · x(f))_x` on the listed fixed points.
pub fn restrict_invariant(
    d: &RootDatum,
    block: &BlockLabel,
    g: &Poly,
    f: &Poly,
    reps: &[AffineElement],
    truncation: usize,
) -> Result<FixedPointFamily> {
    restrict_under(d, &block.stabilizer, g, f, reps, truncation)
}

fn restrict_under(
    d: &RootDatum,
    stabilizer: &[FiniteWeylElement],
    g: &Poly,
    f: &Poly,
    reps: &[AffineElement],
    truncation: usize,
) -> Result<FixedPointFamily> {
    if stabilizer.iter().any(|x| act_finite(d, x, f) != *f) {
        return Err(Error::NotInvariant);
    }
    let values = reps.iter().map(|x| (x.clone(), Fraction::poly(g.mul(&act_affine(d, x, f))))).collect();
    Ok(FixedPointFamily { values, truncation })
}

/// `(f_y) ↦ (Σ_{x∈W_ω} (−1)^{l(x)} f_{yx} / y(Λ_ω))_y`.
pub fn pi_star_fixed(d: &RootDatum, block: &BlockLabel, fam: &FixedPointFamily) -> Result<FixedPointFamily> {
    let longest = block.stabilizer.iter().map(|x| x.length).max().unwrap_or(0);
    let out_trunc = fam.truncation.checked_sub(longest).ok_or(Error::InsufficientTruncation(fam.truncation))?;
    let lam = lambda_omega(d, block);
    let mut values = HashMap::new();
    for y in fixed_points(d, block, out_trunc)? {
        let mut acc = Fraction::poly(Poly::zero(lam.nvars()));
        for x in &block.stabilizer {
            let yx = y.compose(&AffineElement::from_finite(x, d, LatticeTag::Q, 1), d);
            let v = fam.get(&yx).ok_or(Error::InsufficientTruncation(fam.truncation))?;
            acc = acc.add(&v.scale(&rat(x.sign())));
        }
        let den = act_affine(d, &y, &lam);
        values.insert(y, acc.divide_by(&den));
    }
    Ok(FixedPointFamily { values, truncation: out_trunc })
}

#[derive(Clone, Debug, Serialize)]
pub struct MonomialCheck {
    pub monomial: String,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CommutationReport {
    pub omega: Vec<i64>,
    pub checks: Vec<MonomialCheck>,
    pub fixed_points: usize,
    pub pass: bool,
}

/// Compares `restrict ∘ π′_*` with `π″_* ∘ restrict` on every monomial of
/// `k[t][ħ]` up to `degree_bound`, over fixed points up to `truncation`.
pub fn check_pushforward_commutation(d: &RootDatum, block: &BlockLabel, degree_bound: u32, truncation: usize) -> Result<CommutationReport> {
    let longest = block.stabilizer.iter().map(|x| x.length).max().unwrap_or(0);
    let source_trunc = truncation + longest;
    let source = all_fixed_points(d, source_trunc);
    let targets = fixed_points(d, block, truncation)?;
    let one = Poly::one(cartan_vars(d));
    let mut checks = Vec::new();
    for m in Poly::monomials_up_to(cartan_vars(d), degree_bound) {
        let pushed = pi_star_poly(d, block, &m)?;
        let lhs = restrict_invariant(d, block, &one, &pushed, &targets, truncation)?;
        let fam = restrict_under(d, &[], &one, &m, &source, source_trunc)?;
        let rhs = pi_star_fixed(d, block, &fam)?;
        let pass = rhs.values.len() == targets.len()
            && targets.iter().all(|y| match (lhs.get(y), rhs.get(y)) {
                (Some(a), Some(b)) => a.same_as(b),
                _ => false,
            });
        checks.push(MonomialCheck { monomial: m.to_string(), pass });
    }
    let pass = checks.iter().all(|c| c.pass);
    Ok(CommutationReport { omega: block.omega.0.clone(), checks, fixed_points: targets.len(), pass })
}

/// The linear form cut out by the reflection `r`: every `r(x_i) − x_i` is a
/// multiple of it.
pub fn reflection_form(d: &RootDatum, r: &AffineElement) -> Option<Poly> {
    let n = cartan_vars(d);
    (0..n).map(|i| act_affine(d, r, &Poly::var(n, i)).sub(&Poly::var(n, i))).find(|p| !p.is_zero())
}

/// GKM edge condition between `y` and `y s_i` for the affine simple reflections
/// wherever both endpoints carry a value.
pub fn edge_condition_holds(d: &RootDatum, fam: &FixedPointFamily) -> bool {
    let gens = affine_simple_reflections(d, 1);
    for (y, fy) in &fam.values {
        for s in &gens {
            let ys = y.compose(s, d);
            let Some(fys) = fam.get(&ys) else { continue };
            let form = reflection_form(d, s).expect("reflections move some coordinate");
            let diff = fy.num.mul(&fys.den).sub(&fys.num.mul(&fy.den));
            if diff.div_exact(&act_affine(d, y, &form)).is_none() {
                return false;
            }
        }
    }
    true
}

/// `Σ_k ħ^{−k} g_k`; membership asks `g_k ∈ I^k` for `k > 0`.
#[derive(Clone, Debug)]
pub struct NormalConeElement {
    pub parts: Vec<(u32, Poly)>,
    pub generators: Vec<Poly>,
}

/// Common zero of linear generators, if they cut out a single point.
fn point_of_ideal(generators: &[Poly], nvars: usize) -> Result<Vec<Rational>> {
    if generators.iter().any(|g| g.degree().is_some_and(|k| k > 1)) {
        return Err(Error::IdealTooComplex(generators.len()));
    }
    // Gaussian elimination on rows [a_1..a_n | -c]
    let mut rows: Vec<Vec<Rational>> = generators
        .iter()
        .map(|g| {
            let mut row: Vec<Rational> = (0..nvars)
                .map(|i| {
                    let mut e = vec![0; nvars];
                    e[i] = 1;
                    g.coeff(&e)
                })
                .collect();
            row.push(-g.coeff(&vec![0; nvars]));
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..nvars {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != rat(0)) else { continue };
        rows.swap(r, p);
        let lead = rows[r][c].clone();
        rows[r].iter_mut().for_each(|x| *x = &*x / &lead);
        for i in 0..rows.len() {
            if i != r && rows[i][c] != rat(0) {
                let f = rows[i][c].clone();
                let pivot_row = rows[r].clone();
                rows[i].iter_mut().zip(&pivot_row).for_each(|(x, y)| *x = &*x - &f * y);
            }
        }
        pivots.push(c);
        r += 1;
    }
    if pivots.len() != nvars || rows[r..].iter().any(|row| row[nvars] != rat(0)) {
        return Err(Error::IdealTooComplex(generators.len()));
    }
    Ok((0..nvars).map(|i| rows[i][nvars].clone()).collect())
}

/// Decides `g_k ∈ I^k` by the order of vanishing at the point cut out by `I`.
pub fn nc_membership(elt: &NormalConeElement) -> Result<bool> {
    let Some(nvars) = elt.parts.first().map(|(_, g)| g.nvars()) else { return Ok(true) };
    if elt.parts.iter().all(|(k, _)| *k == 0) {
        return Ok(true);
    }
    let point = point_of_ideal(&elt.generators, nvars)?;
    let shift: Vec<Poly> = point
        .iter()
        .enumerate()
        .map(|(i, c)| Poly::var(nvars, i).add(&Poly::constant(nvars, c.clone())))
        .collect();
    Ok(elt
        .parts
        .iter()
        .all(|(k, g)| *k == 0 || g.substitute(&shift).min_degree().is_none_or(|m| m >= *k)))
}

/// `∏_i 1/(1 − t^{2m_i})`, truncated.
pub fn poincare_gr_exponents(d: &RootDatum, truncation: usize) -> GradedSeries {
    let mut out = GradedSeries { coeffs: vec![0; truncation + 1] };
    out.coeffs[0] = 1;
    for &m in &d.exponents {
        let mut geo = vec![0; truncation + 1];
        for k in (0..=truncation).step_by(m as usize) {
            geo[k] = 1;
        }
        out = out.mul_truncated(&GradedSeries { coeffs: geo });
    }
    out
}

/// Finite nodes `{1..r}`: the parabolic type of the affine Grassmannian.
pub fn grassmannian_type(d: &RootDatum) -> ParabolicType {
    ParabolicType::new(d, (1..=d.rank).collect::<BTreeSet<_>>(), 1).expect("finite Weyl group")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linkage::{block_label, enumerate_minus_blocks};
    use crate::root_datum::root_datum_from_str;
    use crate::weyl::poincare_series;

    fn w(v: &[i64]) -> Weight {
        Weight(v.to_vec())
    }

    #[test]
    fn lambda_examples() {
        let d = root_datum_from_str("A2").unwrap();
        let regular = block_label(&d, 5, &w(&[0, 0]));
        assert_eq!(lambda_omega(&d, &regular), Poly::one(3));
        let full = block_label(&d, 5, &w(&[-1, -1]));
        let all = d.positive_roots.iter().fold(Poly::one(3), |acc, a| acc.mul(&weight_form(a)));
        assert_eq!(lambda_omega(&d, &full), all);
        let wall = block_label(&d, 5, &w(&[-1, 0]));
        assert_eq!(lambda_omega(&d, &wall), weight_form(&d.simple_root(0)));
        for x in &full.stabilizer {
            assert_eq!(act_finite(&d, x, &all), all.scale(&rat(x.sign())));
        }
    }

    #[test]
    fn pushforward_examples() {
        let d = root_datum_from_str("A1").unwrap();
        let full = block_label(&d, 3, &w(&[-1]));
        assert!(pi_star_poly(&d, &full, &Poly::one(2)).unwrap().is_zero());
        let alpha = weight_form(&d.simple_root(0));
        assert_eq!(pi_star_poly(&d, &full, &alpha).unwrap(), Poly::constant(2, rat(2)));
        let regular = block_label(&d, 3, &w(&[0]));
        let f = Poly::var(2, 0).mul(&hbar(&d));
        assert_eq!(pi_star_poly(&d, &regular, &f).unwrap(), f);
    }

    #[test]
    fn restriction_examples() {
        let d = root_datum_from_str("A1").unwrap();
        let full = block_label(&d, 3, &w(&[-1]));
        let reps: Vec<AffineElement> = d
            .weyl_group()
            .unwrap()
            .iter()
            .map(|x| AffineElement::from_finite(x, &d, LatticeTag::Q, 1))
            .collect();
        let x = Poly::var(2, 0);
        let x2 = x.mul(&x);
        let fam = restrict_invariant(&d, &full, &Poly::one(2), &x2, &reps, 1).unwrap();
        assert!(fam.values.values().all(|v| v.num == x2));
        assert!(matches!(
            restrict_invariant(&d, &full, &Poly::one(2), &x, &reps, 1),
            Err(Error::NotInvariant)
        ));
        let fam = restrict_invariant(&d, &full, &x, &Poly::one(2), &reps, 1).unwrap();
        assert!(fam.values.values().all(|v| v.num == x));
    }

    #[test]
    fn fixed_pushforward_examples() {
        let d = root_datum_from_str("A1").unwrap();
        let full = block_label(&d, 3, &w(&[-1]));
        let trivial = block_label(&d, 3, &w(&[0]));
        let pts = all_fixed_points(&d, 4);
        let ones = restrict_invariant(&d, &trivial, &Poly::one(2), &Poly::one(2), &pts, 4).unwrap();
        let pushed = pi_star_fixed(&d, &full, &ones).unwrap();
        assert_eq!(pushed.truncation, 3);
        assert!(pushed.values.values().all(|v| v.num.is_zero()));
        let alpha = weight_form(&d.simple_root(0));
        let fam = restrict_invariant(&d, &trivial, &Poly::one(2), &alpha, &pts, 4).unwrap();
        let pushed = pi_star_fixed(&d, &full, &fam).unwrap();
        let two = Fraction::poly(Poly::constant(2, rat(2)));
        assert!(pushed.values.values().all(|v| v.same_as(&two)));
        let same = pi_star_fixed(&d, &trivial, &fam).unwrap();
        assert!(pts.iter().all(|y| same.get(y).unwrap().same_as(fam.get(y).unwrap())));
    }

    #[test]
    fn commutation_small() {
        let d = root_datum_from_str("A1").unwrap();
        let full = block_label(&d, 3, &w(&[-1]));
        let r = check_pushforward_commutation(&d, &full, 0, 2).unwrap();
        assert!(r.pass);
        let r = check_pushforward_commutation(&d, &full, 4, 4).unwrap();
        assert!(r.pass && r.checks.len() == 15);
        let a2 = root_datum_from_str("A2").unwrap();
        for b in enumerate_minus_blocks(&a2, 5).unwrap().into_iter().filter(|b| b.stabilizer_order() == 2) {
            assert!(check_pushforward_commutation(&a2, &b, 3, 3).unwrap().pass);
        }
    }

    #[test]
    fn edge_conditions() {
        let d = root_datum_from_str("A2").unwrap();
        let b = block_label(&d, 5, &w(&[-1, 0]));
        let pts = fixed_points(&d, &b, 3).unwrap();
        let x = Poly::var(3, 0);
        let y = Poly::var(3, 1);
        // invariant under s_1: x_1 ↦ x_2 − x_1 fixes x_1(x_1 − x_2)
        let f = x.mul(&x.sub(&y)).add(&y);
        let fam = restrict_invariant(&d, &b, &Poly::one(3), &f, &pts, 3).unwrap();
        assert!(edge_condition_holds(&d, &fam));
    }

    #[test]
    fn normal_cone() {
        let x = Poly::var(2, 0);
        let y = Poly::var(2, 1);
        let gens = vec![x.sub(&Poly::constant(2, rat(1))), y.clone()];
        let g = gens[0].clone();
        assert!(nc_membership(&NormalConeElement { parts: vec![(0, x.clone())], generators: gens.clone() }).unwrap());
        assert!(nc_membership(&NormalConeElement { parts: vec![(1, g.clone())], generators: gens.clone() }).unwrap());
        assert!(!nc_membership(&NormalConeElement { parts: vec![(2, g.clone())], generators: gens.clone() }).unwrap());
        assert!(nc_membership(&NormalConeElement { parts: vec![(2, g.mul(&y))], generators: gens.clone() }).unwrap());
        let bad = vec![x.mul(&x)];
        assert!(matches!(
            nc_membership(&NormalConeElement { parts: vec![(1, x)], generators: bad }),
            Err(Error::IdealTooComplex(_))
        ));
    }

    #[test]
    fn grassmannian_series() {
        for t in ["A1", "A2", "B2"] {
            let d = root_datum_from_str(t).unwrap();
            assert_eq!(poincare_gr_exponents(&d, 12), poincare_series(&d, &grassmannian_type(&d), 12), "{t}");
        }
        let a1 = root_datum_from_str("A1").unwrap();
        assert_eq!(poincare_gr_exponents(&a1, 5).coeffs, vec![1; 6]);
        assert_eq!(poincare_gr_exponents(&a1, 0).coeffs, vec![1]);
        let a2 = root_datum_from_str("A2").unwrap();
        assert_eq!(poincare_gr_exponents(&a2, 6).coeffs, vec![1, 1, 2, 2, 3, 3, 4]);
    }
}
