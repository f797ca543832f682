//! Finite, affine, extended and level-`l` affine Weyl groups.
//!
//! Affine elements are pairs `(w, μ)` standing for `w τ_μ`, so they act by
//! `λ ↦ w(λ + μ)` and compose by `(w₁,μ₁)(w₂,μ₂) = (w₁w₂, w₂⁻¹μ₁ + μ₂)`.
//! Lengths come from counting the affine hyperplanes separating the base
//! alcove from its image.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::hash::{Hash, Hasher};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::root_datum::RootDatum;
use crate::weight::Weight;

/// An element of the finite Weyl group, acting on fundamental-weight
/// coordinates by an integer matrix.
#[derive(Clone)]
pub struct FiniteWeylElement {
    /// Row-major `rank × rank` matrix.
    pub matrix: Vec<i64>,
    pub length: usize,
    /// A reduced word in the simple reflections (0-based indices).
    pub word: Vec<usize>,
}

impl PartialEq for FiniteWeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix
    }
}

impl Eq for FiniteWeylElement {}

impl Hash for FiniteWeylElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.matrix.hash(state);
    }
}

impl fmt::Debug for FiniteWeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return write!(f, "e");
        }
        let w: Vec<String> = self.word.iter().map(|i| format!("s{}", i + 1)).collect();
        write!(f, "{}", w.join(""))
    }
}

fn rank_of(matrix: &[i64]) -> usize {
    (matrix.len() as f64).sqrt().round() as usize
}

fn mat_mul(a: &[i64], b: &[i64], r: usize) -> Vec<i64> {
    let mut c = vec![0; r * r];
    for i in 0..r {
        for k in 0..r {
            let aik = a[i * r + k];
            if aik != 0 {
                for j in 0..r {
                    c[i * r + j] += aik * b[k * r + j];
                }
            }
        }
    }
    c
}

impl FiniteWeylElement {
    pub fn rank(&self) -> usize {
        rank_of(&self.matrix)
    }

    /// Linear action on a weight.
    pub fn apply(&self, lambda: &Weight) -> Weight {
        let r = self.rank();
        Weight(
            (0..r)
                .map(|i| (0..r).map(|j| self.matrix[i * r + j] * lambda.0[j]).sum())
                .collect(),
        )
    }

    /// `self · other`.
    pub fn compose<'a>(&self, other: &FiniteWeylElement, d: &'a RootDatum) -> &'a FiniteWeylElement {
        d.weyl_element(&mat_mul(&self.matrix, &other.matrix, self.rank()))
    }

    pub fn inverse<'a>(&self, d: &'a RootDatum) -> &'a FiniteWeylElement {
        // the reversed word, built by left multiplication
        let mut inv = d.identity().matrix.clone();
        for &i in &self.word {
            inv = mat_mul(&simple_matrix(d, i), &inv, d.rank);
        }
        d.weyl_element(&inv)
    }

    /// `(-1)^{l(w)}`, the determinant.
    pub fn sign(&self) -> i64 {
        if self.length.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn is_identity(&self) -> bool {
        self.length == 0
    }
}

/// The matrix of the `i`-th simple reflection.
pub fn simple_matrix(d: &RootDatum, i: usize) -> Vec<i64> {
    let r = d.rank;
    let mut m = vec![0; r * r];
    for k in 0..r {
        m[k * r + k] = 1;
        // (s_i λ)_k = λ_k - λ_i a_{ki}
        m[k * r + i] -= d.cartan[k][i];
    }
    m
}

/// `s_i(λ) = λ - ⟨α̌_i, λ⟩ α_i`.
pub fn simple_reflect(d: &RootDatum, i: usize, lambda: &Weight) -> Weight {
    let c = lambda.0[i];
    Weight((0..d.rank).map(|k| lambda.0[k] - c * d.cartan[k][i]).collect())
}

/// Reflection in the root `α` (given in weight coordinates, positive index `k`).
pub fn root_reflect(d: &RootDatum, k: usize, lambda: &Weight) -> Weight {
    let c = d.coroot_pairing_pos(k, lambda);
    lambda - &d.positive_roots[k].scale(c)
}

/// Breadth-first enumeration of `W`, sorted by length; the identity is
/// first and the longest element last.
pub(crate) fn enumerate_finite_weyl(d: &RootDatum) -> Vec<FiniteWeylElement> {
    let r = d.rank;
    let gens: Vec<Vec<i64>> = (0..r).map(|i| simple_matrix(d, i)).collect();
    let mut ident = vec![0; r * r];
    for i in 0..r {
        ident[i * r + i] = 1;
    }
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    seen.insert(ident.clone());
    let mut all = vec![FiniteWeylElement { matrix: ident, length: 0, word: vec![] }];
    let mut start = 0;
    loop {
        let end = all.len();
        let mut next = Vec::new();
        for idx in start..end {
            for (i, g) in gens.iter().enumerate() {
                let m = mat_mul(g, &all[idx].matrix, r);
                if seen.insert(m.clone()) {
                    let mut word = vec![i];
                    word.extend_from_slice(&all[idx].word);
                    next.push(FiniteWeylElement { matrix: m, length: all[idx].length + 1, word });
                }
            }
        }
        if next.is_empty() {
            break;
        }
        start = end;
        all.extend(next);
    }
    all
}

/// All elements of the finite Weyl group.
pub fn generate_finite_weyl(d: &RootDatum) -> Result<Vec<FiniteWeylElement>> {
    Ok(d.weyl_group()?.to_vec())
}

/// Which lattice the translation part lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LatticeTag {
    /// `W_af = W ⋉ Q`.
    Q,
    /// `W_ex = W ⋉ Λ`.
    Lambda,
    /// `W_{l,af} = W ⋉ lQ`.
    LQ,
    /// `W_{l,ex} = W ⋉ lΛ`.
    LLambda,
}

impl LatticeTag {
    pub fn is_scaled(self) -> bool {
        matches!(self, LatticeTag::LQ | LatticeTag::LLambda)
    }

    pub fn label(self) -> &'static str {
        match self {
            LatticeTag::Q => "Q",
            LatticeTag::Lambda => "Lambda",
            LatticeTag::LQ => "lQ",
            LatticeTag::LLambda => "lLambda",
        }
    }
}

/// `w τ_μ` in one of the four affine-type groups.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AffineElement {
    pub finite: FiniteWeylElement,
    pub translation: Weight,
    pub tag: LatticeTag,
    /// The scaling `l` for the tags `lQ`, `lΛ`; 1 otherwise.
    pub level: i64,
}

impl fmt::Debug for AffineElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}·τ{}", self.finite, self.translation)
    }
}

impl AffineElement {
    pub fn identity(d: &RootDatum, tag: LatticeTag, level: i64) -> Self {
        AffineElement {
            finite: d.identity().clone(),
            translation: d.zero(),
            tag,
            level: if tag.is_scaled() { level } else { 1 },
        }
    }

    pub fn from_finite(w: &FiniteWeylElement, d: &RootDatum, tag: LatticeTag, level: i64) -> Self {
        AffineElement { finite: w.clone(), ..Self::identity(d, tag, level) }
    }

    /// The translation `τ_μ`; `μ` is the actual weight (already scaled).
    pub fn translation(d: &RootDatum, mu: Weight, tag: LatticeTag, level: i64) -> Self {
        AffineElement { translation: mu, ..Self::identity(d, tag, level) }
    }

    /// `λ ↦ w(λ + μ)`.
    pub fn act(&self, lambda: &Weight) -> Weight {
        self.finite.apply(&(lambda + &self.translation))
    }

    /// `x•λ = x(λ+ρ) − ρ`.
    pub fn dot(&self, lambda: &Weight, d: &RootDatum) -> Weight {
        &self.act(&(lambda + &d.rho)) - &d.rho
    }

    pub fn compose(&self, other: &AffineElement, d: &RootDatum) -> AffineElement {
        debug_assert_eq!(self.tag, other.tag);
        let w2inv = other.finite.inverse(d);
        AffineElement {
            finite: self.finite.compose(&other.finite, d).clone(),
            translation: &w2inv.apply(&self.translation) + &other.translation,
            tag: self.tag,
            level: self.level,
        }
    }

    /// `(w, μ)⁻¹ = (w⁻¹, −wμ)`.
    pub fn inverse(&self, d: &RootDatum) -> AffineElement {
        AffineElement {
            finite: self.finite.inverse(d).clone(),
            translation: -self.finite.apply(&self.translation),
            tag: self.tag,
            level: self.level,
        }
    }

    /// Length by counting separating hyperplanes; the π1 part of extended
    /// elements contributes nothing.
    pub fn length(&self, d: &RootDatum) -> usize {
        let n = 1 + d.highest_coroot_pairing(&d.rho);
        let mu = if self.level != 1 {
            debug_assert!(self.translation.0.iter().all(|c| c % self.level == 0));
            Weight(self.translation.0.iter().map(|c| c / self.level).collect())
        } else {
            self.translation.clone()
        };
        let point = self.finite.apply(&(&d.rho + &mu.scale(n)));
        (0..d.positive_roots.len())
            .map(|k| d.coroot_pairing_pos(k, &point).div_euclid(n).unsigned_abs() as usize)
            .sum()
    }

    /// Sign `(-1)^{l(x)}`.
    pub fn sign(&self, d: &RootDatum) -> i64 {
        if self.length(d).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// True when the translation lies in the tagged lattice.
    pub fn is_well_tagged(&self, d: &RootDatum) -> bool {
        let t = &self.translation;
        match self.tag {
            LatticeTag::Q => d.in_root_lattice(t),
            LatticeTag::Lambda => true,
            LatticeTag::LQ => {
                t.0.iter().all(|c| c % self.level == 0)
                    && d.in_root_lattice(&Weight(t.0.iter().map(|c| c / self.level).collect()))
            }
            LatticeTag::LLambda => t.0.iter().all(|c| c % self.level == 0),
        }
    }
}

/// Simple reflections of `W ⋉ level·Q`: index 0 is the affine reflection in
/// the wall `⟨·, θ̌⟩ = level`, index `i + 1` is the finite `s_i`.
pub fn affine_simple_reflections(d: &RootDatum, level: i64) -> Vec<AffineElement> {
    let tag = if level == 1 { LatticeTag::Q } else { LatticeTag::LQ };
    let theta = d.highest_coroot_root();
    let k = d.positive_root_index(theta);
    let s_theta = reflection_element(d, k);
    let mut out = vec![AffineElement {
        finite: s_theta,
        translation: -theta.scale(level),
        tag,
        level,
    }];
    for i in 0..d.rank {
        let m = simple_matrix(d, i);
        out.push(AffineElement::from_finite(d.weyl_element(&m), d, tag, level));
    }
    out
}

/// The finite reflection in the `k`-th positive root.
pub fn reflection_element(d: &RootDatum, k: usize) -> FiniteWeylElement {
    let r = d.rank;
    let mut m = vec![0; r * r];
    for j in 0..r {
        let img = root_reflect(d, k, &d.fundamental(j));
        for i in 0..r {
            m[i * r + j] = img.0[i];
        }
    }
    d.weyl_element(&m).clone()
}

/// Elements of `W ⋉ level·Q` grouped by length, up to `bound`.
pub fn affine_elements_by_length(d: &RootDatum, level: i64, bound: usize) -> Vec<Vec<AffineElement>> {
    let gens = affine_simple_reflections(d, level);
    let tag = gens[0].tag;
    let mut layers = vec![vec![AffineElement::identity(d, tag, level)]];
    let mut seen: HashSet<AffineElement> = layers[0].iter().cloned().collect();
    for k in 0..bound {
        let mut next = Vec::new();
        for x in &layers[k] {
            for s in &gens {
                let y = s.compose(x, d);
                if y.length(d) == k + 1 && seen.insert(y.clone()) {
                    next.push(y);
                }
            }
        }
        layers.push(next);
    }
    layers
}

/// A subset of the affine simple reflections; node 0 is the affine node and
/// node `i + 1` is the finite simple reflection `s_i`.
#[derive(Clone, Debug)]
pub struct ParabolicType {
    pub nodes: BTreeSet<usize>,
    pub level: i64,
    /// Elements of the generated subgroup.
    pub elements: Vec<AffineElement>,
}

const PARABOLIC_CAP: usize = 1 << 20;

impl ParabolicType {
    pub fn new(d: &RootDatum, nodes: impl IntoIterator<Item = usize>, level: i64) -> Result<Self> {
        let nodes: BTreeSet<usize> = nodes.into_iter().collect();
        if nodes.len() == d.rank + 1 {
            return Err(Error::InfiniteParabolic(nodes.into_iter().collect()));
        }
        let all = affine_simple_reflections(d, level);
        let gens: Vec<&AffineElement> = nodes.iter().map(|&n| &all[n]).collect();
        let id = AffineElement::identity(d, all[0].tag, level);
        let mut seen: HashSet<AffineElement> = HashSet::new();
        seen.insert(id.clone());
        let mut elements = vec![id];
        let mut i = 0;
        while i < elements.len() {
            for g in &gens {
                let y = g.compose(&elements[i], d);
                if seen.insert(y.clone()) {
                    elements.push(y);
                    if elements.len() > PARABOLIC_CAP {
                        return Err(Error::InfiniteParabolic(nodes.into_iter().collect()));
                    }
                }
            }
            i += 1;
        }
        elements.sort_by_key(|x| x.length(d));
        Ok(ParabolicType { nodes, level, elements })
    }

    /// The parabolic type of the finite Weyl group (all finite nodes).
    pub fn finite(d: &RootDatum, level: i64) -> Result<Self> {
        Self::new(d, 1..=d.rank, level)
    }

    pub fn empty(d: &RootDatum, level: i64) -> Self {
        Self::new(d, [], level).expect("trivial subgroup")
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }
}

/// Minimal length representatives of `W_af / W_J` with length at most `bound`.
pub fn min_coset_reps(d: &RootDatum, j: &ParabolicType, bound: usize) -> Vec<AffineElement> {
    let gens = affine_simple_reflections(d, j.level);
    let layers = affine_elements_by_length(d, j.level, bound);
    let mut out = Vec::new();
    for (k, layer) in layers.iter().enumerate() {
        for x in layer {
            if j.nodes.iter().all(|&n| x.compose(&gens[n], d).length(d) > k) {
                out.push(x.clone());
            }
        }
    }
    out
}

/// A power series in `t²`, truncated; `coeffs[k]` is the coefficient of `t^{2k}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedSeries {
    pub coeffs: Vec<i64>,
}

impl GradedSeries {
    pub fn truncation(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Product truncated to the shorter of the two series.
    pub fn mul_truncated(&self, other: &GradedSeries) -> GradedSeries {
        let n = self.coeffs.len().min(other.coeffs.len());
        let mut c = vec![0; n];
        for (i, a) in self.coeffs.iter().enumerate().take(n) {
            for (j, b) in other.coeffs.iter().enumerate().take(n - i) {
                c[i + j] += a * b;
            }
        }
        GradedSeries { coeffs: c }
    }
}

impl fmt::Display for GradedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            parts.push(match (k, c) {
                (0, _) => c.to_string(),
                (1, 1) => "t^2".to_string(),
                (1, _) => format!("{c}t^2"),
                (_, 1) => format!("t^{}", 2 * k),
                _ => format!("{c}t^{}", 2 * k),
            });
        }
        if parts.is_empty() {
            parts.push("0".into());
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// Graded count of `W^J_af` by length, up to `truncation`.
pub fn poincare_series(d: &RootDatum, j: &ParabolicType, truncation: usize) -> GradedSeries {
    let mut coeffs = vec![0; truncation + 1];
    for x in min_coset_reps(d, j, truncation) {
        coeffs[x.length(d)] += 1;
    }
    GradedSeries { coeffs }
}

/// `Σ_{w ∈ W} t^{2 l(w)}`, the Poincaré polynomial of the finite flag variety.
pub fn finite_flag_series(d: &RootDatum, truncation: usize) -> GradedSeries {
    let mut coeffs = vec![0; truncation + 1];
    for w in d.weyl_group().expect("rank within cap") {
        if w.length <= truncation {
            coeffs[w.length] += 1;
        }
    }
    GradedSeries { coeffs }
}

/// Length-indexed lookup of finite elements by their matrices.
pub fn finite_index(d: &RootDatum) -> HashMap<Vec<i64>, usize> {
    d.weyl_group()
        .unwrap_or(&[])
        .iter()
        .enumerate()
        .map(|(i, w)| (w.matrix.clone(), i))
        .collect()
}
