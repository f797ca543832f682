//! Blocks of category O at a root of unity of order `l`.
//!
//! A block is labelled by `ω` with `ω + ρ` in the closed fundamental
//! `l`-alcove. Membership is decided by walking a weight into that alcove
//! with the simple reflections of `W ⋉ lQ` under the dot action.

use std::collections::{BTreeSet, HashSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::root_datum::RootDatum;
use crate::weight::Weight;
use crate::weyl::{affine_simple_reflections, AffineElement, FiniteWeylElement, LatticeTag};

/// A block label `ω` with its finite stabilizer and parahoric type.
#[derive(Clone, Debug)]
pub struct BlockLabel {
    pub omega: Weight,
    pub l: i64,
    /// `{w ∈ W : w(ω+ρ) − (ω+ρ) ∈ lΛ}`.
    pub stabilizer: Vec<FiniteWeylElement>,
    /// Affine nodes whose walls contain `ω + ρ` (0 is the `l`-wall of `θ̌`).
    pub parahoric_type: BTreeSet<usize>,
}

impl PartialEq for BlockLabel {
    fn eq(&self, other: &Self) -> bool {
        self.omega == other.omega && self.l == other.l
    }
}

impl Eq for BlockLabel {}

#[derive(Clone, Debug, Serialize)]
pub struct BlockSummary {
    pub omega: Vec<i64>,
    pub stabilizer_order: usize,
    pub parahoric_type: Vec<usize>,
}

impl BlockLabel {
    pub fn stabilizer_order(&self) -> usize {
        self.stabilizer.len()
    }

    pub fn is_regular(&self) -> bool {
        self.stabilizer.len() == 1
    }

    pub fn summary(&self) -> BlockSummary {
        BlockSummary {
            omega: self.omega.0.clone(),
            stabilizer_order: self.stabilizer.len(),
            parahoric_type: self.parahoric_type.iter().copied().collect(),
        }
    }
}

fn check_l(d: &RootDatum, l: i64) -> Result<()> {
    if d.validate_l(l) {
        Ok(())
    } else {
        Err(Error::InvalidL { l })
    }
}

/// `0 ≤ ⟨ω+ρ, α̌⟩ ≤ l` for every positive root.
pub fn in_closed_alcove(d: &RootDatum, l: i64, omega: &Weight) -> bool {
    let nu = omega + &d.rho;
    nu.is_dominant() && d.highest_coroot_pairing(&nu) <= l
}

/// The strict version `⟨ω+ρ, α̌⟩ < l` defining the minus part.
pub fn in_minus_part(d: &RootDatum, l: i64, omega: &Weight) -> bool {
    let nu = omega + &d.rho;
    nu.is_dominant() && d.highest_coroot_pairing(&nu) < l
}

fn divisible(v: &Weight, l: i64) -> bool {
    v.0.iter().all(|c| c % l == 0)
}

/// The finite stabilizer modulo `lΛ` of `ω + ρ`.
pub fn finite_stabilizer(d: &RootDatum, l: i64, omega: &Weight) -> Vec<FiniteWeylElement> {
    let nu = omega + &d.rho;
    d.weyl_group()
        .expect("rank within cap")
        .iter()
        .filter(|w| divisible(&(&w.apply(&nu) - &nu), l))
        .cloned()
        .collect()
}

/// Builds the label of `ω`, which must lie in the closed alcove.
pub fn block_label(d: &RootDatum, l: i64, omega: &Weight) -> BlockLabel {
    debug_assert!(in_closed_alcove(d, l, omega));
    let nu = omega + &d.rho;
    let mut parahoric_type: BTreeSet<usize> =
        (0..d.rank).filter(|&i| nu.0[i] == 0).map(|i| i + 1).collect();
    if d.highest_coroot_pairing(&nu) == l {
        parahoric_type.insert(0);
    }
    BlockLabel {
        omega: omega.clone(),
        l,
        stabilizer: finite_stabilizer(d, l, omega),
        parahoric_type,
    }
}

/// All `ω` with `ω + ρ` in the closed fundamental `l`-alcove, in
/// lexicographic order of `ω + ρ`.
pub fn enumerate_blocks(d: &RootDatum, l: i64) -> Result<Vec<BlockLabel>> {
    check_l(d, l)?;
    let mut out = Vec::new();
    let mut nu = vec![0i64; d.rank];
    loop {
        let w = Weight(nu.clone());
        if d.highest_coroot_pairing(&w) <= l {
            out.push(block_label(d, l, &(&w - &d.rho)));
        }
        // odometer over [0, l]^rank
        let mut i = d.rank;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            if nu[i] < l {
                nu[i] += 1;
                break;
            }
            nu[i] = 0;
        }
    }
}

/// Blocks in the minus part (strict inequality at the `l`-wall).
pub fn enumerate_minus_blocks(d: &RootDatum, l: i64) -> Result<Vec<BlockLabel>> {
    Ok(enumerate_blocks(d, l)?
        .into_iter()
        .filter(|b| in_minus_part(d, l, &b.omega))
        .collect())
}

/// The dot-stabilizer of `ω` inside `W ⋉ lQ`: one element `(w, w⁻¹ν − ν)`
/// for each `w` in the finite stabilizer, where `ν = ω + ρ`.
pub fn affine_stabilizer(d: &RootDatum, block: &BlockLabel) -> Vec<AffineElement> {
    let nu = &block.omega + &d.rho;
    let mut out: Vec<AffineElement> = block
        .stabilizer
        .iter()
        .map(|w| AffineElement {
            finite: w.clone(),
            translation: &w.inverse(d).apply(&nu) - &nu,
            tag: LatticeTag::LQ,
            level: block.l,
        })
        .collect();
    out.sort_by_key(|x| (x.length(d), x.finite.matrix.clone(), x.translation.clone()));
    out
}

/// Finds `ω` in the closed alcove and the minimal-length `x ∈ W ⋉ lQ`
/// with `x•ω = λ`.
pub fn block_of(d: &RootDatum, lambda: &Weight, l: i64) -> Result<(BlockLabel, AffineElement)> {
    check_l(d, l)?;
    let gens = affine_simple_reflections(d, l);
    let mut y = AffineElement::identity(d, LatticeTag::LQ, l);
    let mut nu = lambda + &d.rho;
    loop {
        let step = if let Some(i) = nu.0.iter().position(|&c| c < 0) {
            i + 1
        } else if d.highest_coroot_pairing(&nu) > l {
            0
        } else {
            break;
        };
        y = gens[step].compose(&y, d);
        nu = gens[step].act(&nu);
    }
    let omega = &nu - &d.rho;
    let block = block_label(d, l, &omega);
    let x = y.inverse(d);
    let best = affine_stabilizer(d, &block)
        .iter()
        .map(|s| x.compose(s, d))
        .min_by_key(|z| (z.length(d), z.finite.matrix.clone(), z.translation.clone()))
        .expect("stabilizer contains the identity");
    debug_assert_eq!(best.dot(&omega, d), *lambda);
    Ok((block, best))
}

/// Same block of `W ⋉ lQ` under the dot action.
pub fn same_block(d: &RootDatum, lambda: &Weight, mu: &Weight, l: i64) -> Result<bool> {
    let (a, _) = block_of(d, lambda, l)?;
    let (b, _) = block_of(d, mu, l)?;
    Ok(a.omega == b.omega && d.in_root_lattice(&(lambda - mu)))
}

/// A canonical key for the class of `λ` under `W ⋉ lΛ` with the dot
/// action, equivalently for the point `W(ζ^{2(λ+ρ)})` of `T/W`.
pub fn extended_class_key(d: &RootDatum, lambda: &Weight, l: i64) -> Vec<i64> {
    let nu = lambda + &d.rho;
    d.weyl_group()
        .expect("rank within cap")
        .iter()
        .map(|w| w.apply(&nu).0.iter().map(|c| c.rem_euclid(l)).collect::<Vec<i64>>())
        .min()
        .unwrap()
}

/// Brute-force extended equivalence: some `w` has `w(λ+ρ) − (μ+ρ) ∈ lΛ`.
pub fn same_extended_block(d: &RootDatum, lambda: &Weight, mu: &Weight, l: i64) -> bool {
    let a = lambda + &d.rho;
    let b = mu + &d.rho;
    d.weyl_group()
        .expect("rank within cap")
        .iter()
        .any(|w| divisible(&(&w.apply(&a) - &b), l))
}

/// One-step raisings `s•μ > μ` by affine reflections `s` of `W ⋉ lQ`,
/// restricted to weights with all coordinates in `[-bound, bound]`.
pub fn linkage_raises(d: &RootDatum, mu: &Weight, l: i64, bound: i64) -> Result<Vec<Weight>> {
    check_l(d, l)?;
    let nu = mu + &d.rho;
    let reach = bound + mu.0.iter().map(|c| c.abs()).max().unwrap_or(0);
    let mut out = BTreeSet::new();
    for (k, alpha) in d.positive_roots.iter().enumerate() {
        let n = d.coroot_pairing_pos(k, &nu);
        // s_{α, jl}•μ = μ + (jl − n) α, a raise when jl − n > 0
        let mut t = (n.div_euclid(l) + 1) * l - n;
        while t <= reach {
            let cand = mu + &alpha.scale(t);
            if cand.0.iter().all(|c| c.abs() <= bound) {
                out.insert(cand);
            }
            t += l;
        }
    }
    Ok(out.into_iter().collect())
}

/// Verma factors `xy•ω₂` of the translation of `M(x•ω₁)`, with `y` over
/// minimal-length representatives of `W_{l,ω₁}/(W_{l,ω₁} ∩ W_{l,ω₂})`.
pub fn translation_verma_factors(
    d: &RootDatum,
    omega1: &BlockLabel,
    omega2: &BlockLabel,
    x: &AffineElement,
) -> Vec<Weight> {
    let stab1 = affine_stabilizer(d, omega1);
    let common: Vec<&AffineElement> =
        stab1.iter().filter(|s| s.dot(&omega2.omega, d) == omega2.omega).collect();
    let mut covered: HashSet<AffineElement> = HashSet::new();
    let mut out = Vec::new();
    for y in &stab1 {
        if covered.contains(y) {
            continue;
        }
        for h in &common {
            covered.insert(y.compose(h, d));
        }
        out.push(x.compose(y, d).dot(&omega2.omega, d));
    }
    out.sort();
    out
}

/// Highest weight of the Weyl module with extreme weight `−ω`.
pub fn extreme_module_highest_weight(d: &RootDatum, omega: &Weight) -> Weight {
    d.dominant_conjugate(&-omega)
}

/// Whether `ν ∈ W_{ζ^ω}·(−ω)`, which decides `[ω+ν] = [0]` for weights of
/// the Weyl module with extreme weight `−ω`.
pub fn jantzen_block_criterion(block: &BlockLabel, nu: &Weight) -> bool {
    let minus = -&block.omega;
    block.stabilizer.iter().any(|w| w.apply(&minus) == *nu)
}
