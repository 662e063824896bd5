//! Property and reference tests for the special-function layer.

use combid::exact::{binomial_exact, harmonic_exact, rational_to_f64};
use combid::rng::SplitMix64;
use combid::specfun::{
    binomial, c64, complex_pow, falling_product, gamma, gen_harmonic, harmonic, log_gamma,
    pole_distance, powi, ComplexScalar,
};
use proptest::prelude::*;

fn rel_err(got: ComplexScalar, want: ComplexScalar) -> f64 {
    (got - want).norm() / want.norm().max(1e-300)
}

/// 20 gamma reference values: integers and half-integers plus ten complex
/// points minted with a 50-digit arbitrary-precision evaluation.
#[test]
fn gamma_matches_reference_set_to_1e12() {
    let sqrt_pi = std::f64::consts::PI.sqrt();
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
    for (re, im, wre, wim) in cases {
        let got = gamma(c64(re, im)).unwrap();
        let want = c64(wre, wim);
        assert!(
            rel_err(got, want) <= 1e-12,
            "gamma({re}+{im}i): got {got}, want {want}, rel {:.2e}",
            rel_err(got, want)
        );
    }
}

/// gamma(s+1) = s gamma(s) over the sampling rectangle.
#[test]
fn gamma_recurrence_over_rectangle() {
    let mut rng = SplitMix64::new(20240801);
    let mut tested = 0;
    while tested < 1000 {
        let s = c64(rng.range_f64(-10.0, 10.0), rng.range_f64(-10.0, 10.0));
        if pole_distance(s) < 1e-3 || pole_distance(s + 1.0) < 1e-3 {
            continue;
        }
        // keep the product representable
        let (g1, g) = match (gamma(s + 1.0), gamma(s)) {
            (Ok(a), Ok(b)) => (a, b),
            _ => continue,
        };
        let defect = (g1 - s * g).norm() / g1.norm();
        assert!(defect <= 1e-11, "recurrence defect {defect:.2e} at s = {s}");
        tested += 1;
    }
}

/// log_gamma recurrence holds additively with the principal log.
#[test]
fn log_gamma_recurrence_additive() {
    let mut rng = SplitMix64::new(7);
    for _ in 0..500 {
        let s = c64(rng.range_f64(-10.0, 10.0), rng.range_f64(0.05, 10.0));
        let d = log_gamma(s + 1.0).unwrap() - log_gamma(s).unwrap() - s.ln();
        assert!(d.norm() < 1e-12, "defect {d} at {s}");
    }
}

/// The falling product equals both gamma-ratio routes where defined.
#[test]
fn falling_product_matches_both_gamma_routes() {
    let mut rng = SplitMix64::new(99);
    let mut tested = 0;
    while tested < 400 {
        let s = c64(rng.range_f64(-8.0, 8.0), rng.range_f64(-8.0, 8.0));
        let a = rng.range_i64(-10, 10);
        let b = a + rng.range_i64(0, 20);
        let args = [
            s - a as f64 + 1.0,
            s - b as f64 + 1.0,
            c64(b as f64, 0.0) - s,
            c64(a as f64, 0.0) - s,
        ];
        if args.iter().any(|&z| pole_distance(z) < 1e-3) {
            continue;
        }
        let direct = falling_product(s, a, b).unwrap();
        let route1 = (log_gamma(args[0]).unwrap() - log_gamma(args[1]).unwrap()).exp();
        let sign = if (b - a) % 2 == 0 { 1.0 } else { -1.0 };
        let route2 = sign * (log_gamma(args[2]).unwrap() - log_gamma(args[3]).unwrap()).exp();
        assert!(
            rel_err(direct, route1) <= 1e-10,
            "route1 at s={s} a={a} b={b}"
        );
        assert!(
            rel_err(direct, route2) <= 1e-10,
            "route2 at s={s} a={a} b={b}"
        );
        tested += 1;
    }
}

/// Offset harmonic numbers with integer offset reduce to harmonic
/// differences: H1(c, n) = H_{c+n} - H_c, checked absolutely.
#[test]
fn offset_harmonic_reduces_to_harmonic_difference() {
    for c in 0..=20i64 {
        for n in 0..=50u64 {
            let lhs = gen_harmonic(c64(c as f64, 0.0), n, c64(1.0, 0.0)).unwrap();
            let rhs = harmonic(c as u64 + n) - harmonic(c as u64);
            assert!(
                (lhs - c64(rhs, 0.0)).norm() <= 1e-12,
                "c={c} n={n}: {lhs} vs {rhs}"
            );
        }
    }
}

/// Symmetry under offset reflection for integer orders:
/// H(m; c, n) = (-1)^m H(m; -(c+n+1), n).
#[test]
fn gen_harmonic_symmetry_integer_orders() {
    let mut rng = SplitMix64::new(4242);
    for m in -3..=5i64 {
        let mc = c64(m as f64, 0.0);
        let mut tested = 0;
        while tested < 60 {
            let c = c64(rng.range_f64(-5.0, 5.0), rng.range_f64(-5.0, 5.0));
            let n = rng.range_i64(0, 30) as u64;
            let reflected = -(c + n as f64 + 1.0);
            let near_pole = (1..=n)
                .any(|k| (c + k as f64).norm() < 1e-3 || (reflected + k as f64).norm() < 1e-3);
            if near_pole {
                continue;
            }
            let lhs = gen_harmonic(c, n, mc).unwrap();
            let rhs = gen_harmonic(reflected, n, mc).unwrap();
            let sign = if m & 1 == 0 { 1.0 } else { -1.0 };
            let want = sign * rhs;
            let scale = lhs.norm().max(want.norm()).max(1e-30);
            assert!(
                (lhs - want).norm() / scale <= 1e-11,
                "m={m} c={c} n={n}: {lhs} vs {want}"
            );
            tested += 1;
        }
    }
}

/// Floating binomials agree with the exact oracle on the Pascal triangle.
#[test]
fn binomial_matches_exact_oracle_to_1e12() {
    for x in 0..=40i64 {
        for y in 0..=x {
            let got = binomial(c64(x as f64, 0.0), c64(y as f64, 0.0)).unwrap();
            let want = rational_to_f64(&binomial_exact(x, y).unwrap());
            assert!(
                (got.re - want).abs() <= 1e-12 * want.max(1.0)
                    && got.im.abs() < 1e-12 * want.max(1.0),
                "C({x},{y}): got {got}, want {want}"
            );
        }
    }
}

/// Compensated harmonic sums agree with the exact oracle. Larger n are
/// covered against a frozen arbitrary-precision value in the summation
/// tests; exact rationals beyond n ~ 10^3 grow to thousands of digits.
#[test]
fn harmonic_matches_exact_oracle() {
    for n in [10u64, 100, 1000] {
        let got = harmonic(n);
        let want = rational_to_f64(&harmonic_exact(n));
        assert!((got - want).abs() <= 1e-13 * want, "H_{n}: {got} vs {want}");
    }
}

proptest! {
    /// Integer exponents agree with repeated multiplication/division.
    #[test]
    fn complex_pow_integer_exponents(re in -3.0f64..3.0, im in -3.0f64..3.0, e in -8i64..=8) {
        let base = c64(re, im);
        prop_assume!(base.norm() > 1e-3);
        let got = complex_pow(base, c64(e as f64, 0.0)).unwrap();
        let mut want = c64(1.0, 0.0);
        for _ in 0..e.unsigned_abs() {
            want *= base;
        }
        if e < 0 {
            want = c64(1.0, 0.0) / want;
        }
        let rel = (got - want).norm() / want.norm();
        prop_assert!(rel <= 1e-13, "base {base} e {e}: rel {rel:.2e}");
    }

    /// powi is multiplicative: z^(a+b) = z^a z^b to rounding.
    #[test]
    fn powi_is_multiplicative(re in -2.0f64..2.0, im in -2.0f64..2.0, a in -5i64..=5, b in -5i64..=5) {
        let z = c64(re, im);
        prop_assume!(z.norm() > 1e-2);
        let lhs = powi(z, a + b);
        let rhs = powi(z, a) * powi(z, b);
        let rel = (lhs - rhs).norm() / lhs.norm().max(rhs.norm()).max(1e-300);
        prop_assert!(rel <= 1e-12);
    }
}
