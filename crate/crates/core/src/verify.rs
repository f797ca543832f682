//! Named verification suites and their machine-readable reports.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::center::{bernstein_trace, bernstein_trace_multiset, quantum_trace_oracle, translation_trace_scalar, CentralElement};
use crate::charring::{
    decompose_character, evaluate_at, quantum_dimension, rat, rat_string, weight_multiset, weyl_character, CycScalar,
    CyclotomicRing, InvariantPoly, LaurentRing, QLaurent, Rational,
};
use crate::error::{Error, Result};
use crate::gkm::{check_pushforward_commutation, grassmannian_type, poincare_gr_exponents};
use crate::linkage::{
    enumerate_blocks, enumerate_minus_blocks, extreme_module_highest_weight, jantzen_block_criterion,
    same_extended_block, translation_verma_factors, BlockLabel,
};
use crate::root_datum::{root_datum_from_str, RootDatum};
use crate::weight::Weight;
use crate::weyl::{affine_simple_reflections, finite_flag_series, poincare_series, AffineElement, LatticeTag, ParabolicType};

pub const SCHEMA: &str = "alcove-center/1";

#[derive(Clone, Debug, Serialize)]
pub struct VerifyCase {
    pub name: String,
    pub input: Value,
    pub expected: Value,
    pub computed: Value,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub schema: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub suite: Option<String>,
    pub cases: Vec<VerifyCase>,
    pub pass: bool,
}

impl Default for VerifyReport {
    fn default() -> Self {
        VerifyReport { schema: SCHEMA, suite: None, cases: Vec::new(), pass: true }
    }
}

impl VerifyReport {
    pub fn new(suite: &str) -> Self {
        VerifyReport { suite: Some(suite.to_string()), ..Default::default() }
    }

    pub fn push(&mut self, case: VerifyCase) {
        self.pass &= case.pass;
        self.cases.push(case);
    }

    pub fn extend(&mut self, other: VerifyReport) {
        for c in other.cases {
            self.push(c);
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }

    pub fn failures(&self) -> impl Iterator<Item = &VerifyCase> {
        self.cases.iter().filter(|c| !c.pass)
    }
}

pub fn rational_json(r: &Rational) -> Value {
    json!({"num": r.numer().to_string(), "den": r.denom().to_string()})
}

pub fn cyc_json(field: &CyclotomicRing, x: &CycScalar) -> Value {
    json!({"cyc": field.padded(x).iter().map(rat_string).collect::<Vec<_>>()})
}

/// A single `{"num","den","qpow"}` object for monomials, a list otherwise.
pub fn laurent_json(x: &QLaurent) -> Value {
    let mut terms: Vec<Value> = x
        .terms()
        .map(|(k, c)| json!({"num": c.numer().to_string(), "den": c.denom().to_string(), "qpow": k}))
        .collect();
    match terms.len() {
        0 => json!({"num": "0", "den": "1", "qpow": 0}),
        1 => terms.pop().unwrap(),
        _ => Value::Array(terms),
    }
}

/// Parameters shared by the suites.
#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub type_name: Option<String>,
    pub l: Option<i64>,
    pub seed: u64,
    pub deg: u32,
    pub trunc: usize,
    pub n: u32,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { type_name: None, l: None, seed: 0, deg: 4, trunc: 4, n: crate::center::DEFAULT_MULTIPLICITY }
    }
}

/// Smallest admissible `l ≥ h`.
pub fn default_l(d: &RootDatum) -> i64 {
    (d.coxeter_number.max(2)..).find(|&l| l > 2 && d.validate_l(l)).expect("admissible l exists")
}

impl SuiteConfig {
    /// `(datum, l)` pairs; A1 at 3 and A2 at 5 unless a type is given.
    pub fn instances(&self) -> Result<Vec<(RootDatum, i64)>> {
        match &self.type_name {
            None => Ok(vec![(root_datum_from_str("A1")?, self.l.unwrap_or(3)), (root_datum_from_str("A2")?, self.l.unwrap_or(5))]),
            Some(t) => {
                let d = root_datum_from_str(t)?;
                let l = self.l.unwrap_or_else(|| default_l(&d));
                if !d.validate_l(l) {
                    return Err(Error::InvalidL { l });
                }
                Ok(vec![(d, l)])
            }
        }
    }
}

fn weight_json(w: &Weight) -> Value {
    json!(w.0)
}

/// A random invariant of fundamental-basis degree at most 2 with small
/// Laurent coefficients.
pub fn random_invariant(d: &RootDatum, rng: &mut ChaCha8Rng) -> CentralElement<LaurentRing> {
    let r = LaurentRing;
    let mut p = InvariantPoly::zero(&r, d.rank);
    for _ in 0..rng.gen_range(1..=3) {
        let mut exps = vec![0u32; d.rank];
        for _ in 0..rng.gen_range(0..=2) {
            exps[rng.gen_range(0..d.rank)] += 1;
        }
        let c = QLaurent::monomial(rat(rng.gen_range(1..=3) * if rng.gen_bool(0.5) { 1 } else { -1 }), rng.gen_range(-2..=2));
        p.add_term(exps, &c);
    }
    CentralElement::from_invariant(d, p)
}

fn dominant_box(d: &RootDatum, bound: i64) -> Vec<Weight> {
    let mut out = vec![Vec::new()];
    for _ in 0..d.rank {
        out = out
            .into_iter()
            .flat_map(|v: Vec<i64>| (0..=bound).map(move |c| [v.clone(), vec![c]].concat()))
            .collect();
    }
    out.into_iter().map(Weight).collect()
}

/// Trace modules `V(ϖ_i)` and `V(ρ)`.
fn trace_modules(d: &RootDatum) -> Vec<Weight> {
    let mut out: Vec<Weight> = (0..d.rank).map(|i| d.fundamental(i)).collect();
    if d.rank > 1 {
        out.push(d.rho.clone());
    }
    out
}

/// `dim_q V(μ) · tr_V(f)(q^{2(μ+ρ)})` against the tensor-identity oracle.
pub fn suite_d2(cfg: &SuiteConfig) -> Result<VerifyReport> {
    let mut report = VerifyReport::new("d2");
    for (d, _) in cfg.instances()? {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        let fs: Vec<CentralElement<LaurentRing>> = (0..20).map(|_| random_invariant(&d, &mut rng)).collect();
        let mus = dominant_box(&d, 4);
        let qdims: Vec<QLaurent> = mus.iter().map(|mu| quantum_dimension(&d, mu)).collect();
        let jobs: Vec<(Weight, usize)> =
            trace_modules(&d).into_iter().flat_map(|v| (0..fs.len()).map(move |i| (v.clone(), i))).collect();
        let cases: Vec<Result<VerifyCase>> = jobs
            .par_iter()
            .map(|(v, i)| {
                let t = bernstein_trace(&d, v, &fs[*i])?;
                let mut agree = 0;
                for (mu, qd) in mus.iter().zip(&qdims) {
                    let lhs = qd * &evaluate_at(&d, t.character(), mu, 2);
                    if lhs == quantum_trace_oracle(&d, mu, v, &fs[*i])? {
                        agree += 1;
                    }
                }
                Ok(VerifyCase {
                    name: format!("{} V{} f#{i}", d.type_name(), v),
                    input: json!({"type": d.type_name(), "v": weight_json(v), "f": i, "mu_box": 4}),
                    expected: json!(mus.len()),
                    computed: json!(agree),
                    pass: agree == mus.len(),
                })
            })
            .collect();
        for c in cases {
            report.push(c?);
        }
    }
    Ok(report)
}

/// Trace depends only on the weight multiset, and composes as a Minkowski sum.
pub fn suite_d1(cfg: &SuiteConfig) -> Result<VerifyReport> {
    let mut report = VerifyReport::new("d1");
    for (d, _) in cfg.instances()? {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0xd1);
        let pairs: Vec<(Weight, Weight)> = if d.rank == 1 {
            vec![(d.fundamental(0), d.fundamental(0)), (d.fundamental(0), d.fundamental(0).scale(2))]
        } else {
            vec![
                (d.fundamental(0), d.fundamental(1)),
                (d.fundamental(0), d.fundamental(0)),
                (d.rho.clone(), d.fundamental(0)),
            ]
        };
        let r = LaurentRing;
        for (a, b) in pairs {
            let pa = weight_multiset(&d, &a)?;
            let pb = weight_multiset(&d, &b)?;
            let sums: Vec<Weight> = pa.iter().flat_map(|x| pb.iter().map(move |y| x + y)).collect();
            let product = weyl_character(&d, &r, &a)?.mul(&weyl_character(&d, &r, &b)?);
            let parts = decompose_character(&d, &product)?;
            let mut dep_ok = 0;
            let mut mult_ok = 0;
            for _ in 0..10 {
                let f = random_invariant(&d, &mut rng);
                let direct = bernstein_trace_multiset(&d, &sums, &f)?;
                let mut by_parts = CentralElement::one(&r, d.rank).scale(&QLaurent::zero());
                for (k, m) in &parts {
                    by_parts = by_parts.add(&bernstein_trace(&d, k, &f)?.scale(&QLaurent::constant(rat(*m))));
                }
                dep_ok += (by_parts.character() == direct.character()) as usize;
                let iterated = bernstein_trace(&d, &b, &bernstein_trace(&d, &a, &f)?)?;
                mult_ok += (iterated.character() == direct.character()) as usize;
            }
            let input = json!({"type": d.type_name(), "v": weight_json(&a), "v2": weight_json(&b)});
            report.push(VerifyCase {
                name: format!("{} multiset V{}⊗V{}", d.type_name(), a, b),
                input: input.clone(),
                expected: json!(10),
                computed: json!(dep_ok),
                pass: dep_ok == 10,
            });
            report.push(VerifyCase {
                name: format!("{} composition V{} then V{}", d.type_name(), a, b),
                input,
                expected: json!(10),
                computed: json!(mult_ok),
                pass: mult_ok == 10,
            });
        }
    }
    Ok(report)
}

/// The translation scalar equals `|W_{l,ω}|` on every block.
pub fn suite_l514(cfg: &SuiteConfig) -> Result<VerifyReport> {
    let mut report = VerifyReport::new("l514");
    for (d, l) in cfg.instances()? {
        let field = CyclotomicRing::new(l as u64);
        let blocks = enumerate_blocks(&d, l)?;
        let results: Vec<Result<VerifyCase>> = blocks
            .par_iter()
            .map(|b| {
                let t = translation_trace_scalar(&d, b, cfg.n)?;
                Ok(VerifyCase {
                    name: format!("{} l={l} ω={}", d.type_name(), b.omega),
                    input: json!({"type": d.type_name(), "l": l, "omega": weight_json(&b.omega), "n": t.n}),
                    expected: json!(t.expected),
                    computed: json!({"scalar": cyc_json(&field, &t.value), "stable": t.stable}),
                    pass: t.matches_expected(),
                })
            })
            .collect();
        for c in results {
            report.push(c?);
        }
    }
    Ok(report)
}

/// Both pushforwards agree on monomials, for every block of the minus part.
pub fn suite_b5(cfg: &SuiteConfig) -> Result<VerifyReport> {
    let mut report = VerifyReport::new("b5");
    for (d, l) in cfg.instances()? {
        let blocks = enumerate_minus_blocks(&d, l)?;
        let results: Vec<Result<VerifyCase>> = blocks
            .par_iter()
            .map(|b| {
                let r = check_pushforward_commutation(&d, b, cfg.deg, cfg.trunc)?;
                let agreeing = r.checks.iter().filter(|c| c.pass).count();
                Ok(VerifyCase {
                    name: format!("{} l={l} ω={}", d.type_name(), b.omega),
                    input: json!({"type": d.type_name(), "l": l, "omega": weight_json(&b.omega), "deg": cfg.deg, "trunc": cfg.trunc}),
                    expected: json!(r.checks.len()),
                    computed: json!({"agreeing": agreeing, "fixed_points": r.fixed_points}),
                    pass: r.pass,
                })
            })
            .collect();
        for c in results {
            report.push(c?);
        }
    }
    Ok(report)
}

/// Flag factorization and the exponent series, by default for A1, A2, B2.
pub fn suite_poincare(cfg: &SuiteConfig) -> Result<VerifyReport> {
    let mut report = VerifyReport::new("poincare");
    let trunc = if cfg.trunc == SuiteConfig::default().trunc { 12 } else { cfg.trunc };
    let types: Vec<String> = match &cfg.type_name {
        Some(t) => vec![t.clone()],
        None => vec!["A1".into(), "A2".into(), "B2".into()],
    };
    for t in types {
        let d = root_datum_from_str(&t)?;
        let gr = poincare_series(&d, &grassmannian_type(&d), trunc);
        let fl = poincare_series(&d, &ParabolicType::empty(&d, 1), trunc);
        let product = finite_flag_series(&d, trunc).mul_truncated(&gr);
        report.push(VerifyCase {
            name: format!("{t} flag = finite flag × grassmannian"),
            input: json!({"type": t, "trunc": trunc}),
            expected: json!(product.coeffs),
            computed: json!(fl.coeffs),
            pass: fl == product,
        });
        let ex = poincare_gr_exponents(&d, trunc);
        report.push(VerifyCase {
            name: format!("{t} grassmannian = exponent series"),
            input: json!({"type": t, "trunc": trunc, "exponents": d.exponents}),
            expected: json!(ex.coeffs),
            computed: json!(gr.coeffs),
            pass: gr == ex,
        });
    }
    Ok(report)
}

fn random_affine(d: &RootDatum, l: i64, rng: &mut ChaCha8Rng) -> AffineElement {
    let gens = affine_simple_reflections(d, l);
    let mut x = AffineElement::identity(d, LatticeTag::LQ, l);
    for _ in 0..rng.gen_range(0..=6) {
        x = gens[rng.gen_range(0..gens.len())].compose(&x, d);
    }
    x
}

/// `{x•ω₁ + ν : ν ∈ P(V)}` restricted to the extended block of `ω₂`.
pub fn filtered_tensor_shifts(d: &RootDatum, l: i64, b1: &BlockLabel, b2: &BlockLabel, x: &AffineElement) -> Result<Vec<Weight>> {
    let v = d.dominant_conjugate(&(&b2.omega - &b1.omega));
    let start = x.dot(&b1.omega, d);
    let mut out: Vec<Weight> = weight_multiset(d, &v)?
        .iter()
        .map(|nu| &start + nu)
        .filter(|w| same_extended_block(d, w, &b2.omega, l))
        .collect();
    out.sort();
    Ok(out)
}

/// Translation Verma factors and the block criterion against brute force.
pub fn suite_linkage(cfg: &SuiteConfig) -> Result<VerifyReport> {
    let mut report = VerifyReport::new("linkage");
    for (d, l) in cfg.instances()? {
        let blocks = enumerate_blocks(&d, l)?;
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x11);
        for _ in 0..50 {
            let b1 = &blocks[rng.gen_range(0..blocks.len())];
            let b2 = &blocks[rng.gen_range(0..blocks.len())];
            let x = random_affine(&d, l, &mut rng);
            let filtered = filtered_tensor_shifts(&d, l, b1, b2, &x)?;
            let factors = translation_verma_factors(&d, b1, b2, &x);
            report.push(VerifyCase {
                name: format!("{} l={l} translation {}→{} x={:?}", d.type_name(), b1.omega, b2.omega, x),
                input: json!({"type": d.type_name(), "l": l, "omega1": weight_json(&b1.omega), "omega2": weight_json(&b2.omega),
                    "x_finite": x.finite.word, "x_translation": weight_json(&x.translation)}),
                expected: json!(factors.iter().map(|w| w.0.clone()).collect::<Vec<_>>()),
                computed: json!(filtered.iter().map(|w| w.0.clone()).collect::<Vec<_>>()),
                pass: filtered == factors,
            });
        }
        for b in &blocks {
            let v = extreme_module_highest_weight(&d, &b.omega);
            let mut nus = weight_multiset(&d, &v)?;
            nus.dedup();
            let disagreements: Vec<Vec<i64>> = nus
                .iter()
                .filter(|nu| jantzen_block_criterion(b, nu) != same_extended_block(&d, &(&b.omega + *nu), &d.zero(), l))
                .map(|nu| nu.0.clone())
                .collect();
            report.push(VerifyCase {
                name: format!("{} l={l} block criterion ω={}", d.type_name(), b.omega),
                input: json!({"type": d.type_name(), "l": l, "omega": weight_json(&b.omega), "weights": nus.len()}),
                expected: json!([]),
                computed: json!(disagreements),
                pass: disagreements.is_empty(),
            });
        }
    }
    Ok(report)
}

pub const SUITES: [&str; 6] = ["d2", "d1", "l514", "b5", "poincare", "linkage"];

pub fn run_suite(name: &str, cfg: &SuiteConfig) -> Result<VerifyReport> {
    match name {
        "d2" => suite_d2(cfg),
        "d1" => suite_d1(cfg),
        "l514" => suite_l514(cfg),
        "b5" => suite_b5(cfg),
        "poincare" => suite_poincare(cfg),
        "linkage" => suite_linkage(cfg),
        "all" => {
            let mut report = VerifyReport::new("all");
            for s in SUITES {
                report.extend(run_suite(s, cfg)?);
            }
            Ok(report)
        }
        other => Err(Error::UnknownSuite(other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_report() {
        assert_eq!(VerifyReport::default().to_json(), r#"{"schema":"alcove-center/1","cases":[],"pass":true}"#);
        let mut r = VerifyReport::default();
        r.push(VerifyCase { name: "x".into(), input: json!(null), expected: json!(1), computed: json!(1), pass: true });
        assert!(r.pass && r.cases.len() == 1);
    }

    #[test]
    fn scalar_encoding() {
        let f = CyclotomicRing::new(3);
        assert_eq!(cyc_json(&f, &crate::charring::CoeffRing::from_int(&f, 2)), json!({"cyc": ["2", "0"]}));
        assert_eq!(rational_json(&crate::charring::rat_frac(-3, 6)), json!({"num": "-1", "den": "2"}));
    }

    #[test]
    fn small_suites_pass() {
        let cfg = SuiteConfig { type_name: Some("A1".into()), l: Some(3), ..Default::default() };
        for s in ["d1", "l514", "poincare", "linkage"] {
            let r = run_suite(s, &cfg).unwrap();
            assert!(r.pass, "{s}: {:?}", r.failures().collect::<Vec<_>>());
        }
    }
}
