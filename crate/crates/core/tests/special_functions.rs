mod common;

use std::f64::consts::PI;

use regprod::special::{hurwitz_zeta, hurwitz_zeta_ds, log_gamma, riemann_zeta};

const GRID_X: [f64; 4] = [0.25, 1.0 / 3.0, 0.75, 1.0];

#[test]
fn reference_log_gamma_is_sound() {
    assert!((common::ln_gamma(0.25).exp() - 3.625_609_908_221_908).abs() < 1e-13);
    assert!((common::ln_gamma(0.5) - 0.5 * PI.ln()).abs() < 1e-14);
    assert!((common::ln_gamma(5.0) - 24f64.ln()).abs() < 1e-13);
}

#[test]
fn euler_maclaurin_matches_direct_summation() {
    for s in [1.5, 2.0, 3.0] {
        for x in [0.25, 1.0 / 3.0, 0.5, 1.0] {
            let em = hurwitz_zeta(s, x).unwrap();
            let (direct, half_width) = common::hurwitz_direct(s, x, 1_000_000);
            let r = (em.value - direct).abs();
            assert!(
                r <= em.tail_bound + half_width,
                "s={s} x={x}: {r:e} > {:e}",
                em.tail_bound + half_width
            );
        }
    }
}

#[test]
fn derivative_matches_central_differences_on_grid() {
    let h = 1e-6;
    for i in 0..50 {
        let s = -2.0 + 5.0 * i as f64 / 49.0;
        let x = GRID_X[i % 4];
        let fd = (hurwitz_zeta(s + h, x).unwrap().value - hurwitz_zeta(s - h, x).unwrap().value)
            / (2.0 * h);
        let d = hurwitz_zeta_ds(s, x).unwrap().value;
        let rel = (d - fd).abs() / d.abs();
        assert!(
            rel < 1e-7,
            "s={s} x={x}: analytic {d} vs difference {fd} ({rel:e})"
        );
    }
}

#[test]
fn lerch_formula() {
    for x in [0.25, 1.0 / 3.0, 0.5, 2.0 / 3.0, 0.75, 1.0] {
        let d = hurwitz_zeta_ds(0.0, x).unwrap().value;
        let oracle = common::ln_gamma(x) - common::half_ln_2pi();
        assert!((d - oracle).abs() < 1e-10, "x={x}");
        let own = log_gamma(x).unwrap() - 0.5 * (2.0 * PI).ln();
        assert!((d - own).abs() < 1e-10, "x={x}");
    }
}

#[test]
fn linear_special_value_at_zero() {
    for x in [0.25, 1.0 / 3.0, 0.5, 2.0 / 3.0, 0.75, 1.0] {
        let v = hurwitz_zeta(0.0, x).unwrap().value;
        assert!((v - (0.5 - x)).abs() < 1e-12, "x={x}");
    }
}

#[test]
fn log_gamma_reflection() {
    for x in [0.25, 1.0 / 3.0, 0.5] {
        let lhs = log_gamma(x).unwrap() + log_gamma(1.0 - x).unwrap();
        assert!((lhs - (PI / (PI * x).sin()).ln()).abs() < 1e-11, "x={x}");
    }
}

#[test]
fn log_gamma_agrees_with_reference_over_a_range() {
    for k in 1..400 {
        let x = 0.05 * k as f64;
        let a = log_gamma(x).unwrap();
        let b = common::ln_gamma(x);
        assert!(
            (a - b).abs() <= 1e-12 * b.abs().max(1.0),
            "x={x}: {a} vs {b}"
        );
    }
}

#[test]
fn riemann_zeta_at_negative_odd_integers() {
    // ζ(1-2k) = -B_{2k}/(2k)
    for (s, v) in [
        (-1.0, -1.0 / 12.0),
        (-3.0, 1.0 / 120.0),
        (-5.0, -1.0 / 252.0),
        (-7.0, 1.0 / 240.0),
    ] {
        let z = riemann_zeta(s).unwrap().value;
        assert!((z - v).abs() < 1e-12, "s={s}: {z}");
    }
}

#[test]
fn riemann_zeta_trivial_zeros() {
    for s in [-2.0, -4.0, -6.0] {
        assert!(riemann_zeta(s).unwrap().value.abs() < 1e-11, "s={s}");
    }
}
