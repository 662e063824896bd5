//! Acceptance suite: one test per criterion, each printing a pass/fail line.
//!
//! 1. Product-difference suite: 10^4 seeded complex factor systems agree to
//!    1e-10 under the condition-cap rule; 10^3 rational systems agree
//!    exactly. Under 5 s.
//! 2. Exact identity suite: every exact-capable sampled instance of all 24
//!    equation specs (10^3 instances each) has exactly equal sides. Under 30 s.
//! 3. Fixed examples: the squares pair exact for n = 0..60, the cubes pair
//!    exact for n = 0..20, plus the two brute-force spot values.
//! 4. Numeric suite: `verify --all --mode numeric --samples 1000 --seed 42
//!    --tolerance 1e-8` exits 0 with skips below 2% per identity. Under 60 s.
//! 5. Finite-difference suite: the three derivative relations pass at 1e-5 on
//!    100 seeded samples each; both right sides of the product form agree to
//!    1e-11.
//! 6. Special-function accuracy: gamma matches 20 reference values to 1e-12;
//!    the offset-harmonic reduction and reflection symmetry hold as stated.
//! 7. Cross-mode agreement: 500 integer instances per identity match the
//!    exact oracle to 1e-9.
//! 8. Reversal invariance: reversed summation order agrees to 1e-12 on 100
//!    samples per summation identity.

use combid::exact::{rat_i64, rational_to_f64, GaussianRational};
use combid::identities::{
    build_registry, exact_evaluate, fd_evaluate, find, numeric_evaluate, reversal_check,
    sample_assignment, sweep, verify_instance, Assignment, EvalRecord, ExactOutcome, Mode,
    PowerConvention, Status, SweepConfig, Value,
};
use combid::rng::SplitMix64;
use combid::specfun::{c64, gamma, gen_harmonic, harmonic, pole_distance};
use combid::telescope::{evaluate, evaluate_exact, ExactFactorSystem, FactorSystem};
use std::time::Instant;

fn report(criterion: &str, ok: bool, detail: &str) {
    println!(
        "acceptance {criterion}: {} ({detail})",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok, "acceptance {criterion} failed: {detail}");
}

const EQUATION_SPECS: [&str; 24] = [
    "eq08_binomial1",
    "eq09_binomial2",
    "eq10_binomial3",
    "eq11_binomial4",
    "eq22_harmonic1a",
    "eq23_harmonic1b",
    "eq24_harmonic2a",
    "eq25_harmonic2b",
    "eq26_harmonic3a",
    "eq27_harmonic3b",
    "eq28_harmonic4a",
    "eq29_harmonic4b",
    "eq30_harmonic1aw1",
    "eq31_harmonic1bw1",
    "eq32_harmonic2aw1",
    "eq33_harmonic2bw1",
    "eq34_harmonic3aw1",
    "eq35_harmonic3bw1",
    "eq36_harmonic4aw1",
    "eq37_harmonic4bw1",
    "eq38_harmonictrad1",
    "eq39_harmonictrad2",
    "eq40_harmonictrad3",
    "eq41_harmonictrad4",
];

const SUMMATION_SPECS: [&str; 26] = [
    "eq08_binomial1",
    "eq09_binomial2",
    "eq10_binomial3",
    "eq11_binomial4",
    "eq12_13_squares",
    "eq14_15_dixon",
    "eq22_harmonic1a",
    "eq23_harmonic1b",
    "eq24_harmonic2a",
    "eq25_harmonic2b",
    "eq26_harmonic3a",
    "eq27_harmonic3b",
    "eq28_harmonic4a",
    "eq29_harmonic4b",
    "eq30_harmonic1aw1",
    "eq31_harmonic1bw1",
    "eq32_harmonic2aw1",
    "eq33_harmonic2bw1",
    "eq34_harmonic3aw1",
    "eq35_harmonic3bw1",
    "eq36_harmonic4aw1",
    "eq37_harmonic4bw1",
    "eq38_harmonictrad1",
    "eq39_harmonictrad2",
    "eq40_harmonictrad3",
    "eq41_harmonictrad4",
];

#[test]
fn criterion_1_product_difference_suite() {
    let start = Instant::now();

    // floating: 10^4 seeded systems, n <= 12, points in [-5,5]^2
    let mut rng = SplitMix64::new(0xC0FFEE);
    let mut evaluated = 0u64;
    let mut skipped = 0u64;
    let mut worst = 0.0f64;
    for _ in 0..10_000 {
        let n = rng.range_i64(0, 12) as usize;
        let draw = |rng: &mut SplitMix64| c64(rng.range_f64(-5.0, 5.0), rng.range_f64(-5.0, 5.0));
        let x = draw(&mut rng);
        let y = draw(&mut rng);
        let z: Vec<_> = (0..n).map(|_| draw(&mut rng)).collect();
        let w: Vec<_> = (0..n)
            .map(|_| c64(rng.range_f64(-2.0, 2.0), rng.range_f64(-2.0, 2.0)))
            .collect();
        let f = FactorSystem::new(x, y, z, w).unwrap();
        let e = match evaluate(&f) {
            Ok(e) => e,
            Err(_) => {
                skipped += 1;
                continue;
            }
        };
        let cmp = e.comparison(1e6);
        if cmp.ill_conditioned {
            skipped += 1;
            continue;
        }
        assert!(
            cmp.rel_err <= 1e-10,
            "floating defect {:.2e} on {f:?}",
            cmp.rel_err
        );
        worst = worst.max(cmp.rel_err);
        evaluated += 1;
    }

    // exact: 10^3 rational systems with integer exponents
    let mut rng = SplitMix64::new(0xBEEF);
    let mut exact_checked = 0u64;
    'outer: while exact_checked < 1000 {
        let n = rng.range_i64(0, 8) as usize;
        let draw = |rng: &mut SplitMix64| {
            GaussianRational::from_ratios(
                rng.range_i64(-8, 8),
                rng.range_i64(1, 5),
                rng.range_i64(-8, 8),
                rng.range_i64(1, 5),
            )
        };
        let x = draw(&mut rng);
        let y = draw(&mut rng);
        let z: Vec<_> = (0..n).map(|_| draw(&mut rng)).collect();
        let w: Vec<_> = (0..n).map(|_| rng.range_i64(-4, 4)).collect();
        for (zk, wk) in z.iter().zip(&w) {
            if *wk <= 0 && (x.sub(zk).is_zero() || y.sub(zk).is_zero()) {
                continue 'outer;
            }
        }
        let (lhs, rhs) = evaluate_exact(&ExactFactorSystem { x, y, z, w }).unwrap();
        assert_eq!(lhs, rhs, "exact product-difference equality failed");
        exact_checked += 1;
    }

    let elapsed = start.elapsed().as_secs_f64();
    // the condition-cap rule classifies cancellation-dominated draws as
    // skipped; every evaluated draw must meet the 1e-10 bound
    report(
        "criterion 1 (product difference suite)",
        evaluated >= 8500 && exact_checked == 1000 && elapsed < 5.0,
        &format!(
            "evaluated {evaluated}/10000, skipped {skipped}, worst rel {worst:.2e}, exact {exact_checked}/1000, {elapsed:.2}s"
        ),
    );
}

#[test]
fn criterion_2_exact_identity_suite() {
    let start = Instant::now();
    let mut detail = String::new();
    let mut ok = true;
    for id in EQUATION_SPECS {
        let spec = find(id).unwrap();
        let cfg = SweepConfig {
            samples: 1000,
            seed: 2024,
            mode: Mode::Exact,
            ..SweepConfig::default()
        };
        let (r, _) = sweep(spec, &cfg);
        if r.failed > 0 || r.passed == 0 {
            ok = false;
            detail.push_str(&format!("{id}: {} failed, {} passed; ", r.failed, r.passed));
        }
    }
    let elapsed = start.elapsed().as_secs_f64();
    if detail.is_empty() {
        detail = format!("24 specs x 1000 exact instances, no failures, {elapsed:.2}s");
    }
    ok &= elapsed < 30.0;
    report("criterion 2 (exact identity suite)", ok, &detail);
}

#[test]
fn criterion_3_fixed_examples() {
    let squares = find("eq12_13_squares").unwrap();
    let dixon = find("eq14_15_dixon").unwrap();
    for n in 0..=60i64 {
        let mut a = Assignment::new();
        a.push("n", Value::Int(n));
        let rec = verify_instance(squares, &a, Mode::Exact, 1e-8);
        assert_eq!(rec.status, Status::Pass, "squares pair at n = {n}");
    }
    for n in 0..=20i64 {
        let mut a = Assignment::new();
        a.push("n", Value::Int(n));
        let rec = verify_instance(dixon, &a, Mode::Exact, 1e-8);
        assert_eq!(rec.status, Status::Pass, "cubes pair at n = {n}");
    }
    // brute-force spot values
    let mut a5 = Assignment::new();
    a5.push("n", Value::Int(5));
    let spot5 = match exact_evaluate(squares, &a5) {
        ExactOutcome::Value(sides) => sides[1].clone(),
        other => panic!("{other:?}"),
    };
    let mut a1 = Assignment::new();
    a1.push("n", Value::Int(1));
    let spot1 = match exact_evaluate(dixon, &a1) {
        ExactOutcome::Value(sides) => sides[1].clone(),
        other => panic!("{other:?}"),
    };
    let ok = spot5.0 == rat_i64(630)
        && spot5.1 == rat_i64(630)
        && spot1.0 == rat_i64(-8)
        && spot1.1 == rat_i64(-8);
    report(
        "criterion 3 (fixed examples)",
        ok,
        "squares exact for n <= 60, cubes exact for n <= 20, spot values 630 and -8",
    );
}

#[test]
fn criterion_4_numeric_suite_via_cli() {
    let start = Instant::now();
    let mut path = std::env::temp_dir();
    path.push(format!("combid-acceptance-{}.jsonl", std::process::id()));
    let out = std::process::Command::new(env!("CARGO_BIN_EXE_combid"))
        .args([
            "verify",
            "--all",
            "--mode",
            "numeric",
            "--samples",
            "1000",
            "--seed",
            "42",
            "--tolerance",
            "1e-8",
            "--report",
            path.to_str().unwrap(),
        ])
        .env_remove("COMBID_SEED")
        .output()
        .expect("CLI runs");
    let elapsed = start.elapsed().as_secs_f64();
    let exit = out.status.code();

    let text = std::fs::read_to_string(&path).unwrap_or_default();
    std::fs::remove_file(&path).ok();
    let mut per_id: std::collections::BTreeMap<String, (u64, u64)> = Default::default();
    for line in text.lines() {
        let rec: EvalRecord = serde_json::from_str(line).expect("record parses");
        let entry = per_id.entry(rec.id.clone()).or_default();
        entry.0 += 1;
        if rec.status.is_skip() {
            entry.1 += 1;
        }
    }
    let mut worst_skip = 0.0f64;
    for (total, skips) in per_id.values() {
        worst_skip = worst_skip.max(*skips as f64 / *total as f64);
    }
    let ok = exit == Some(0) && per_id.len() == 26 && worst_skip < 0.02 && elapsed < 60.0;
    report(
        "criterion 4 (numeric suite via CLI)",
        ok,
        &format!(
            "exit {exit:?}, {} identities, worst skip fraction {:.2}%, {elapsed:.1}s",
            per_id.len(),
            100.0 * worst_skip
        ),
    );
}

#[test]
fn criterion_5_finite_difference_suite() {
    let mut detail = String::new();
    let mut all_ok = true;
    for id in ["fd_eq21", "fd_harmonic_order", "fd_binomial_power"] {
        let spec = find(id).unwrap();
        let mut passed = 0u64;
        let mut attempts = 0u64;
        let mut index = 0u64;
        while passed < 100 && attempts < 1000 {
            attempts += 1;
            let mut rng = SplitMix64::for_sample(5, spec.id, index);
            index += 1;
            let Ok(asg) = sample_assignment(spec, Mode::Fd, &mut rng, &[]) else {
                continue;
            };
            let rec = verify_instance(spec, &asg, Mode::Fd, 1e-5);
            if rec.status.is_skip() {
                continue;
            }
            if rec.status != Status::Pass {
                all_ok = false;
                detail.push_str(&format!("{id} failed at sample {}; ", index - 1));
                break;
            }
            // both analytic right sides agree where the identity provides two
            if id == "fd_eq21" {
                let ev = fd_evaluate(spec, &asg).unwrap();
                let alt = ev.analytic_alt.unwrap();
                let rel =
                    (ev.analytic - alt).norm() / ev.analytic.norm().max(alt.norm()).max(1e-300);
                if rel > 1e-11 {
                    all_ok = false;
                    detail.push_str(&format!("{id} right sides disagree ({rel:.2e}); "));
                    break;
                }
            }
            passed += 1;
        }
        if passed < 100 {
            all_ok = false;
            detail.push_str(&format!("{id}: only {passed} passing samples; "));
        }
    }
    if detail.is_empty() {
        detail = "3 derivative relations x 100 samples at 1e-5; both product forms agree to 1e-11"
            .into();
    }
    report("criterion 5 (finite differences)", all_ok, &detail);
}

#[test]
fn criterion_6_special_function_accuracy() {
    let sqrt_pi = std::f64::consts::PI.sqrt();
    // ten integer and half-integer points, ten complex points minted from a
    // 50-digit reference evaluation
    let cases: [(f64, f64, f64, f64); 20] = [
        (1.0, 0.0, 1.0, 0.0),
        (2.0, 0.0, 1.0, 0.0),
        (3.0, 0.0, 2.0, 0.0),
        (4.0, 0.0, 6.0, 0.0),
        (5.0, 0.0, 24.0, 0.0),
        (6.0, 0.0, 120.0, 0.0),
        (0.5, 0.0, sqrt_pi, 0.0),
        (1.5, 0.0, sqrt_pi / 2.0, 0.0),
        (2.5, 0.0, 3.0 * sqrt_pi / 4.0, 0.0),
        (-0.5, 0.0, -2.0 * sqrt_pi, 0.0),
        (1.0, 2.0, 0.15190400267003615, 0.01980488016185498),
        (0.5, 0.5, 0.8181639995417473, -0.7633138287139826),
        (-0.5, 1.5, -0.13920273326162969, -0.056553073037432),
        (3.5, -2.5, -1.284304364291106, -0.1873548951175382),
        (-2.5, 0.5, -0.33387520352243233, -0.20645730796360842),
        (5.0, 5.0, -0.9743952418052391, 2.00668988272263),
        (-4.5, -3.5, -5.79996351028228e-6, -2.4164390319952862e-6),
        (0.25, -0.75, 0.19333666545026185, 0.8214515907074617),
        (8.0, 0.5, 2643.9665051678458, 4192.861050492137),
        (-6.5, 2.25, 1.1845989650598238e-6, 3.9017408936462e-6),
    ];
    let mut worst = 0.0f64;
    for (re, im, wre, wim) in cases {
        let got = gamma(c64(re, im)).unwrap();
        let want = c64(wre, wim);
        worst = worst.max((got - want).norm() / want.norm());
    }
    assert!(worst <= 1e-12, "gamma reference defect {worst:.2e}");

    // offset-harmonic reduction to harmonic differences, absolute 1e-12
    for c in 0..=20i64 {
        for n in 0..=50u64 {
            let lhs = gen_harmonic(c64(c as f64, 0.0), n, c64(1.0, 0.0)).unwrap();
            let rhs = harmonic(c as u64 + n) - harmonic(c as u64);
            assert!((lhs - c64(rhs, 0.0)).norm() <= 1e-12);
        }
    }

    // reflection symmetry for integer orders, relative 1e-11
    let mut rng = SplitMix64::new(616);
    for m in -3..=5i64 {
        let mc = c64(m as f64, 0.0);
        let mut tested = 0;
        while tested < 40 {
            let c = c64(rng.range_f64(-5.0, 5.0), rng.range_f64(-5.0, 5.0));
            let n = rng.range_i64(0, 30) as u64;
            let reflected = -(c + n as f64 + 1.0);
            if (1..=n).any(|k| (c + k as f64).norm() < 1e-3 || (reflected + k as f64).norm() < 1e-3)
            {
                continue;
            }
            let lhs = gen_harmonic(c, n, mc).unwrap();
            let sign = if m & 1 == 0 { 1.0 } else { -1.0 };
            let want = sign * gen_harmonic(reflected, n, mc).unwrap();
            let scale = lhs.norm().max(want.norm()).max(1e-30);
            assert!((lhs - want).norm() / scale <= 1e-11);
            tested += 1;
        }
    }
    report(
        "criterion 6 (special-function accuracy)",
        true,
        &format!(
            "20 gamma references (worst {worst:.2e}), harmonic reduction, reflection symmetry"
        ),
    );
}

#[test]
fn criterion_7_cross_mode_agreement() {
    let mut detail = String::new();
    let mut all_ok = true;
    for id in SUMMATION_SPECS {
        let spec = find(id).unwrap();
        let mut checked = 0u64;
        let mut index = 0u64;
        let mut worst = 0.0f64;
        while checked < 500 && index < 60_000 {
            let mut rng = SplitMix64::for_sample(7, spec.id, index);
            index += 1;
            let Ok(asg) = sample_assignment(spec, Mode::Exact, &mut rng, &[]) else {
                continue;
            };
            let ExactOutcome::Value(sides) = exact_evaluate(spec, &asg) else {
                continue;
            };
            let Ok(num) = numeric_evaluate(spec, &asg, PowerConvention::Factored) else {
                continue;
            };
            let mut instance_ok = true;
            for (parts, exact) in num.parts().iter().zip(&sides) {
                let gross = parts.gross();
                for (numeric, exact_side) in [(parts.lhs(), &exact.0), (parts.rhs, &exact.1)] {
                    if !numeric.re.is_finite() || !numeric.im.is_finite() {
                        instance_ok = false;
                        break;
                    }
                    let want = rational_to_f64(exact_side);
                    if !want.is_finite() {
                        instance_ok = false;
                        break;
                    }
                    let scale = numeric.norm().max(want.abs()).max(1e-3 * gross);
                    if scale == 0.0 {
                        continue;
                    }
                    let rel = (numeric - c64(want, 0.0)).norm() / scale;
                    worst = worst.max(rel);
                    if rel > 1e-9 {
                        all_ok = false;
                        detail.push_str(&format!("{id}: defect {rel:.2e} at {asg:?}; "));
                    }
                }
            }
            if !instance_ok {
                continue;
            }
            checked += 1;
        }
        if checked < 500 {
            all_ok = false;
            detail.push_str(&format!("{id}: only {checked} integer instances; "));
        }
    }
    if detail.is_empty() {
        detail = "26 identities x 500 integer instances match the exact oracle to 1e-9".into();
    }
    report("criterion 7 (cross-mode agreement)", all_ok, &detail);
}

#[test]
fn criterion_8_reversal_invariance() {
    let mut detail = String::new();
    let mut all_ok = true;
    for id in SUMMATION_SPECS {
        let spec = find(id).unwrap();
        let mut passed = 0u64;
        let mut index = 0u64;
        while passed < 100 && index < 5000 {
            let mut rng = SplitMix64::for_sample(13, spec.id, index);
            index += 1;
            let Ok(asg) = sample_assignment(spec, Mode::Numeric, &mut rng, &[]) else {
                continue;
            };
            let rec = reversal_check(spec, &asg);
            if rec.status.is_skip() {
                continue;
            }
            if rec.status != Status::Pass {
                all_ok = false;
                detail.push_str(&format!(
                    "{id}: reversal defect {:?} at sample {}; ",
                    rec.rel_err,
                    index - 1
                ));
                break;
            }
            passed += 1;
        }
        if passed < 100 {
            all_ok = false;
            detail.push_str(&format!("{id}: only {passed} reversal samples; "));
        }
    }
    if detail.is_empty() {
        detail = "26 summation identities x 100 samples, reversed order agrees to 1e-12".into();
    }
    report("criterion 8 (reversal invariance)", all_ok, &detail);
}

#[test]
fn registry_covers_the_advertised_catalog() {
    // sanity anchor for the suite: 29 entries, 24 sampled equation specs,
    // 2 fixed pairs, 3 finite-difference specs
    assert_eq!(build_registry().len(), 29);
    for id in EQUATION_SPECS {
        assert!(find(id).is_some(), "{id} missing");
    }
    assert!(EQUATION_SPECS
        .iter()
        .all(|id| !find(id).unwrap().single_n()));
    // no equation spec may sit on a gamma pole by construction at defaults
    let _ = pole_distance(c64(1.0, 0.0));
    println!("acceptance registry shape: PASS (29 entries)");
}
