//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits non-zero when any of them fails.

mod common;

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use alcove_core::center::{
    alcove_sum_at_block, bernstein_trace, build_block_idempotent, translation_trace_scalar, CentralElement,
    IdempotentSpec, DEFAULT_MULTIPLICITY,
};
use alcove_core::charring::{
    alternating_sum, exact_divide, specialize, to_fundamental_basis, weyl_character, weyl_denominator, CoeffRing,
    CyclotomicRing, InvariantPoly, LaurentRing, QLaurent, TorusChar,
};
use alcove_core::gkm::{check_pushforward_commutation, grassmannian_type, poincare_gr_exponents};
use alcove_core::linkage::{
    enumerate_blocks, enumerate_minus_blocks, extreme_module_highest_weight, jantzen_block_criterion,
    translation_verma_factors,
};
use alcove_core::verify::{random_invariant, run_suite, SuiteConfig};
use alcove_core::weyl::{affine_simple_reflections, finite_flag_series, poincare_series};
use alcove_core::{root_datum_from_str, AffineElement, LatticeTag, ParabolicType, RootDatum, Weight};

use common::{box_points, exponent_series, model, poly_mul, power, Model};

type Outcome = Result<(), String>;

fn datum(t: &str) -> RootDatum {
    root_datum_from_str(t).unwrap()
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn suite_passes(name: &str) -> Outcome {
    let report = run_suite(name, &SuiteConfig::default()).map_err(|e| e.to_string())?;
    let failed: Vec<String> = report.failures().map(|c| c.name.clone()).collect();
    check(report.pass && !report.cases.is_empty(), || format!("{name} suite failures: {failed:?}"))
}

fn laurent_at(x: &QLaurent, at: &BigRational) -> BigRational {
    x.terms().fold(BigRational::zero(), |acc, (k, c)| acc + c * power(at, *k))
}

/// `f(q^{2(μ+ρ)})` at `q_e = at`, using only the oracle's form.
fn char_at(m: &Model, f: &TorusChar<LaurentRing>, mu: &[i64], at: &BigRational) -> BigRational {
    let point = common::add(mu, &m.rho());
    f.terms().fold(BigRational::zero(), |acc, (lambda, c)| {
        acc + laurent_at(c, at) * power(at, 2 * m.e_form(&lambda.0, &point))
    })
}

/// Trace identity against the oracle `Σ_ν dim_q V(μ+ν) f(μ+ν)` built from
/// Freudenthal weights and the product q-dimension.
fn criterion_1() -> Outcome {
    suite_passes("d2")?;
    let at = BigRational::new(BigInt::from(2), BigInt::from(1));
    for t in ["A1", "A2"] {
        let d = datum(t);
        let m = model(t);
        let mut modules: Vec<Vec<i64>> = (0..m.rank()).map(|i| Weight::fundamental(m.rank(), i).0).collect();
        if m.rank() > 1 {
            modules.push(m.rho());
        }
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for v in &modules {
            let weights = m.weight_list(v);
            for k in 0..20 {
                let f = random_invariant(&d, &mut rng);
                let tr = bernstein_trace(&d, &Weight(v.clone()), &f).map_err(|e| e.to_string())?;
                for mu in box_points(4, m.rank()) {
                    let lhs = m.q_dimension_at(&mu, &at) * char_at(&m, tr.character(), &mu, &at);
                    let rhs = weights.iter().fold(BigRational::zero(), |acc, nu| {
                        let x = common::add(&mu, nu);
                        acc + m.q_dimension_at(&x, &at) * char_at(&m, f.character(), &x, &at)
                    });
                    check(lhs == rhs, || format!("{t} V{v:?} f#{k} μ={mu:?}: {lhs} vs {rhs}"))?;
                }
            }
        }
    }
    Ok(())
}

/// The scalar is the stabilizer order counted by the oracle, and stable.
fn criterion_2() -> Outcome {
    suite_passes("l514")?;
    let frozen: BTreeMap<i64, i64> = [(-1, 2), (0, 1), (1, 1), (2, 2)].into();
    for (t, l) in [("A1", 3), ("A2", 5)] {
        let d = datum(t);
        let m = model(t);
        let mut pattern: BTreeMap<usize, usize> = BTreeMap::new();
        for b in enumerate_blocks(&d, l).map_err(|e| e.to_string())? {
            let want = m.stabilizer_order(&b.omega.0, l);
            if t == "A1" {
                check(frozen[&b.omega.0[0]] == want as i64, || format!("A1 stabilizer at {:?}", b.omega))?;
            }
            *pattern.entry(want).or_default() += 1;
            let s = translation_trace_scalar(&d, &b, DEFAULT_MULTIPLICITY).map_err(|e| e.to_string())?;
            let field = CyclotomicRing::new(l as u64);
            check(s.stable && s.value == field.from_int(want as i64), || {
                format!("{t} ω={:?}: scalar {} (stable {}) vs {want}", b.omega, s.value, s.stable)
            })?;
        }
        if t == "A2" {
            // three vertices, twelve wall points, six interior points
            let expected: BTreeMap<usize, usize> = [(1, 6), (2, 12), (6, 3)].into();
            check(pattern == expected, || format!("A2 stabilizer pattern {pattern:?}"))?;
        }
    }
    Ok(())
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn criterion_3() -> Outcome {
    suite_passes("b5")?;
    for (t, l) in [("A1", 3), ("A2", 5)] {
        let d = datum(t);
        let blocks = enumerate_minus_blocks(&d, l).map_err(|e| e.to_string())?;
        for b in &blocks {
            let r = check_pushforward_commutation(&d, b, 4, 4).map_err(|e| e.to_string())?;
            let vars = d.rank as u64 + 1;
            check(r.checks.len() as u64 == binomial(4 + vars, vars), || format!("{t} ω={:?}: monomial count", b.omega))?;
            check(r.pass, || format!("{t} ω={:?}: failing monomials", b.omega))?;
        }
    }
    Ok(())
}

fn criterion_4() -> Outcome {
    suite_passes("linkage")?;
    for (t, l) in [("A1", 3), ("A2", 5)] {
        let d = datum(t);
        let m = model(t);
        let blocks = enumerate_blocks(&d, l).map_err(|e| e.to_string())?;
        let gens = affine_simple_reflections(&d, l);
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        for _ in 0..50 {
            let b1 = &blocks[rng.gen_range(0..blocks.len())];
            let b2 = &blocks[rng.gen_range(0..blocks.len())];
            let mut x = AffineElement::identity(&d, LatticeTag::LQ, l);
            for _ in 0..rng.gen_range(0..=6) {
                x = gens[rng.gen_range(0..gens.len())].compose(&x, &d);
            }
            let start = x.dot(&b1.omega, &d);
            let v = m.dominant_conjugate(&common::sub(&b2.omega.0, &b1.omega.0));
            let mut filtered: Vec<Weight> = m
                .weight_list(&v)
                .iter()
                .map(|nu| Weight(common::add(&start.0, nu)))
                .filter(|w| m.same_extended_block(&w.0, &b2.omega.0, l))
                .collect();
            filtered.sort();
            let mut factors = translation_verma_factors(&d, b1, b2, &x);
            factors.sort();
            check(filtered == factors, || format!("{t} {:?}→{:?} x={x:?}", b1.omega, b2.omega))?;
        }
    }
    Ok(())
}

fn criterion_5() -> Outcome {
    for (t, l) in [("A1", 3), ("A2", 5)] {
        let d = datum(t);
        let m = model(t);
        let zero = vec![0; m.rank()];
        for b in enumerate_blocks(&d, l).map_err(|e| e.to_string())? {
            let v = extreme_module_highest_weight(&d, &b.omega);
            for nu in m.freudenthal(&v.0).keys() {
                let brute = m.same_extended_block(&common::add(&b.omega.0, nu), &zero, l);
                check(jantzen_block_criterion(&b, &Weight(nu.clone())) == brute, || {
                    format!("{t} ω={:?} ν={nu:?}", b.omega)
                })?;
            }
        }
    }
    Ok(())
}

fn criterion_6() -> Outcome {
    suite_passes("poincare")?;
    // coefficients of t^{2k}, k ≤ 6, so up to t^12
    let n = 6;
    let frozen: [(&str, Vec<usize>, Vec<i64>); 3] = [
        ("A1", vec![1], vec![1, 1]),
        ("A2", vec![1, 2], vec![1, 2, 2, 1]),
        ("B2", vec![1, 3], vec![1, 2, 2, 2, 1]),
    ];
    for (t, exponents, finite) in frozen {
        let d = datum(t);
        let gr = exponent_series(&exponents, n);
        let fl = poly_mul(&finite, &gr, n);
        check(poincare_series(&d, &grassmannian_type(&d), n).coeffs == gr, || format!("{t} grassmannian"))?;
        check(poincare_gr_exponents(&d, n).coeffs == gr, || format!("{t} exponent series"))?;
        check(poincare_series(&d, &ParabolicType::empty(&d, 1), n).coeffs == fl, || format!("{t} affine flag"))?;
        check(finite_flag_series(&d, n).coeffs == poly_mul(&finite, &[1], n), || format!("{t} finite flag"))?;
    }
    Ok(())
}

fn random_poly(rank: usize, rng: &mut ChaCha8Rng) -> InvariantPoly<LaurentRing> {
    let mut p = InvariantPoly::zero(&LaurentRing, rank);
    for _ in 0..rng.gen_range(1..=4) {
        let mut exps = vec![0u32; rank];
        for _ in 0..rng.gen_range(0..=3) {
            exps[rng.gen_range(0..rank)] += 1;
        }
        let c = QLaurent::monomial(alcove_core::charring::rat(rng.gen_range(-4..=4)), rng.gen_range(-3..=3));
        p.add_term(exps, &c);
    }
    p
}

fn criterion_7() -> Outcome {
    let r = LaurentRing;
    for (t, bound) in [("A1", 6), ("A2", 3), ("B2", 2)] {
        let d = datum(t);
        let m = model(t);
        check(d.cartan == m.cartan, || format!("{t} Cartan matrix"))?;
        for lambda in box_points(bound, m.rank()) {
            let ch = weyl_character(&d, &r, &Weight(lambda.clone())).map_err(|e| e.to_string())?;
            let oracle = m.freudenthal(&lambda);
            let lib: BTreeMap<Vec<i64>, i64> = ch
                .terms()
                .map(|(w, c)| {
                    let c = c.as_constant().unwrap();
                    (w.0.clone(), i64::try_from(c.to_integer()).unwrap())
                })
                .collect();
            check(lib == oracle, || format!("{t} V{lambda:?}: multiplicities differ"))?;
            for i in 0..m.rank() {
                let alpha = m.simple_root(i);
                for (w, c) in &lib {
                    let s: Vec<i64> = w.iter().zip(&alpha).map(|(x, a)| x - w[i] * a).collect();
                    check(lib.get(&s) == Some(c), || format!("{t} V{lambda:?}: s_{i} moves {w:?}"))?;
                }
            }
        }
        // denominator identity, with the product taken over the oracle's roots
        let mut product = TorusChar::k(&r, Weight(m.rho()));
        for a in &m.positive {
            let mut f = TorusChar::one(&r, m.rank());
            f.add_term(Weight(a.iter().map(|c| -c).collect()), &r.from_int(-1));
            product = product.mul(&f);
        }
        let den = weyl_denominator(&d, &r);
        check(product == den && alternating_sum(&d, &r, &d.rho) == den, || format!("{t} denominator identity"))?;
        // anti-invariants divide exactly
        let mut rng = ChaCha8Rng::seed_from_u64(0xa7);
        for lambda in box_points(2, m.rank()) {
            let g = random_invariant(&d, &mut rng);
            let anti = alternating_sum(&d, &r, &(&Weight(lambda.clone()) + &d.rho)).mul(g.character());
            let q = exact_divide(&anti, &den).map_err(|e| format!("{t} V{lambda:?}: {e}"))?;
            let want = weyl_character(&d, &r, &Weight(lambda.clone())).unwrap().mul(g.character());
            check(q == want, || format!("{t} V{lambda:?}: quotient"))?;
        }
        // fundamental-basis round trip
        for k in 0..100 {
            let p = random_poly(m.rank(), &mut rng);
            let back = to_fundamental_basis(&d, &p.expand(&d)).map_err(|e| e.to_string())?;
            check(back == p, || format!("{t} round trip #{k}: {p} became {back}"))?;
        }
    }
    Ok(())
}

/// `p` is 1 to order `n` at `[0]` and vanishes to order `n` at `[ω+ν]`,
/// a block different from `[0]`. The inner alcove sum must vanish once
/// `n` exceeds the order of the stabilizer part of the denominator.
fn criterion_8() -> Outcome {
    let mut pairs = 0;
    for (t, l) in [("A1", 3), ("A2", 5)] {
        let d = datum(t);
        let m = model(t);
        let field = CyclotomicRing::new(l as u64);
        let zero = vec![0; m.rank()];
        let mut rng = ChaCha8Rng::seed_from_u64(0xc1a1);
        for b in enumerate_blocks(&d, l).map_err(|e| e.to_string())? {
            if b.is_regular() && t == "A2" {
                continue;
            }
            let threshold = m.singular_roots(&b.omega.0, l) as u32 + 1;
            let v = extreme_module_highest_weight(&d, &b.omega);
            let nus: Vec<Vec<i64>> = m
                .freudenthal(&v.0)
                .into_keys()
                .filter(|nu| !m.same_extended_block(&common::add(&b.omega.0, nu), &zero, l))
                .take(2)
                .collect();
            for nu in nus {
                let nu = Weight(nu);
                let target = &b.omega + &nu;
                let f = specialize(random_invariant(&d, &mut rng).character(), &field);
                for n in [threshold, threshold + 1] {
                    let spec = IdempotentSpec { target: d.zero(), others: vec![target.clone()], n };
                    let p = build_block_idempotent(&d, &field, &spec).map_err(|e| e.to_string())?;
                    check(p.membership_order(&d, &target, n + 1) >= n, || format!("{t} ω={:?} ν={nu}: p ∉ m^{n}", b.omega))?;
                    check(CentralElement::new(&d, p.to_central(&d).character().clone()).is_ok(), || "p invariant".into())?;
                    let s = alcove_sum_at_block(&d, &b, &nu, &p, &f).map_err(|e| e.to_string())?;
                    check(s.is_zero(), || format!("{t} ω={:?} ν={nu} n={n}: sum {s}", b.omega))?;
                }
                pairs += 1;
            }
        }
    }
    check(pairs >= 5, || format!("only {pairs} pairs"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome, u64); 8] = [
        ("trace identity against the tensor oracle", criterion_1, 60),
        ("translation scalar equals the stabilizer order", criterion_2, 120),
        ("fixed-point pushforwards commute", criterion_3, 30),
        ("translated Verma factors", criterion_4, 30),
        ("block criterion against brute force", criterion_5, 10),
        ("Poincaré factorization and exponent series", criterion_6, 10),
        ("character ring invariants", criterion_7, 30),
        ("vanishing at non-conjugate blocks", criterion_8, 60),
    ];
    let mut all = true;
    for (i, (name, run, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let outcome = outcome.and_then(|_| {
            check(took <= Duration::from_secs(*budget), || format!("took {:.1}s, budget {budget}s", took.as_secs_f64()))
        });
        match outcome {
            Ok(()) => println!("criterion {}: PASS  {name} ({:.2}s)", i + 1, took.as_secs_f64()),
            Err(e) => {
                all = false;
                println!("criterion {}: FAIL  {name} ({:.2}s): {e}", i + 1, took.as_secs_f64());
            }
        }
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
