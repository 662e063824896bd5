//! Property tests for the exact rational layer.

use combid::exact::{
    binomial_exact, binomial_general, gen_harmonic_exact, harmonic_exact, rat, rat_i64,
    rational_to_f64, GaussianRational,
};
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;

#[test]
fn pascal_rule_up_to_60() {
    for n in 1..=60i64 {
        for k in 0..=n {
            let lhs = binomial_exact(n, k).unwrap();
            let rhs = binomial_exact(n - 1, k - 1).unwrap() + binomial_exact(n - 1, k).unwrap();
            assert_eq!(lhs, rhs, "Pascal fails at ({n},{k})");
        }
    }
}

#[test]
fn harmonic_differences_are_reciprocals() {
    let mut prev = BigRational::zero();
    for n in 1..=200u64 {
        let h = harmonic_exact(n);
        assert_eq!(&h - &prev, rat(1, n as i64), "H_{n} - H_{} != 1/{n}", n - 1);
        prev = h;
    }
}

#[test]
fn gen_harmonic_negative_order_is_power_sum() {
    // m = -2: sum of squares of (c+k)
    assert_eq!(gen_harmonic_exact(1, 3, -2).unwrap(), rat_i64(4 + 9 + 16));
}

proptest! {
    /// Pascal's rule for the integer extension holds for every integer pair
    /// under the zero-for-negative-lower-index convention.
    #[test]
    fn general_pascal_rule(u in -40i64..=40, v in -10i64..=50) {
        let lhs = binomial_general(u, v);
        let rhs = binomial_general(u - 1, v - 1) + binomial_general(u - 1, v);
        prop_assert_eq!(lhs, rhs);
    }

    /// Upper negation: C(u,v) = (-1)^v C(v-u-1, v) for v >= 0.
    #[test]
    fn upper_negation(u in -30i64..=30, v in 0i64..=20) {
        let sign = if v % 2 == 0 { rat_i64(1) } else { rat_i64(-1) };
        prop_assert_eq!(binomial_general(u, v), sign * binomial_general(v - u - 1, v));
    }

    /// Gaussian rationals form a field: distributivity and division
    /// round-trip.
    #[test]
    fn gaussian_rational_field_ops(
        a in (-9i64..=9, 1i64..=5, -9i64..=9, 1i64..=5),
        b in (-9i64..=9, 1i64..=5, -9i64..=9, 1i64..=5),
        c in (-9i64..=9, 1i64..=5, -9i64..=9, 1i64..=5),
    ) {
        let g = |t: (i64, i64, i64, i64)| GaussianRational::from_ratios(t.0, t.1, t.2, t.3);
        let (a, b, c) = (g(a), g(b), g(c));
        prop_assert_eq!(
            a.mul(&b.add(&c)),
            a.mul(&b).add(&a.mul(&c))
        );
        if !b.is_zero() {
            let q = a.div(&b).unwrap();
            prop_assert_eq!(q.mul(&b), a.clone());
        }
        // integer powers multiply
        if !a.is_zero() {
            prop_assert_eq!(
                a.powi(3).unwrap().mul(&a.powi(-2).unwrap()),
                a.clone()
            );
        }
    }

    /// rational_to_f64 agrees with direct division on representable values.
    #[test]
    fn rational_to_f64_agrees_small(p in -100_000i64..=100_000, q in 1i64..=100_000) {
        let r = rat(p, q);
        let direct = p as f64 / q as f64;
        let via = rational_to_f64(&r);
        prop_assert!((via - direct).abs() <= 1e-15 * direct.abs().max(1.0));
    }
}
