use super::require_convergent;
use crate::error::{usage, Result};
use crate::rings::QuadraticRing;
use crate::special::{
    neumaier_sum, riemann_zeta_ds_with, riemann_zeta_with, EulerMaclaurin, EvalResult, Truncation,
};

use super::dirichlet::{dirichlet_l_ds_with, dirichlet_l_with};

/// `ζ_K(s) = u · ζ(s) · L(s, χ)` with `u` the number of units.
pub fn dedekind_zeta(ring: QuadraticRing, s: f64) -> Result<EvalResult> {
    dedekind_zeta_with(ring, s, &EulerMaclaurin::default())
}

pub fn dedekind_zeta_with(ring: QuadraticRing, s: f64, em: &EulerMaclaurin) -> Result<EvalResult> {
    let zeta = riemann_zeta_with(s, em)?;
    let l = dirichlet_l_with(ring.character_modulus(), s, em)?;
    Ok(zeta.times(&l).scaled(ring.unit_count() as f64))
}

/// `ζ_K'(s) = u (ζ'(s) L(s) + ζ(s) L'(s))`.
pub fn dedekind_zeta_ds(ring: QuadraticRing, s: f64) -> Result<EvalResult> {
    dedekind_zeta_ds_with(ring, s, &EulerMaclaurin::default())
}

pub fn dedekind_zeta_ds_with(
    ring: QuadraticRing,
    s: f64,
    em: &EulerMaclaurin,
) -> Result<EvalResult> {
    let q = ring.character_modulus();
    let zeta = riemann_zeta_with(s, em)?;
    let zeta_d = riemann_zeta_ds_with(s, em)?;
    let l = dirichlet_l_with(q, s, em)?;
    let l_d = dirichlet_l_ds_with(q, s, em)?;
    let first = zeta_d.times(&l);
    let second = zeta.times(&l_d);
    let u = ring.unit_count() as f64;
    Ok(EvalResult::new(
        u * (first.value + second.value),
        u * (first.tail_bound + second.tail_bound),
        Truncation::composite([first.params, second.params]),
    ))
}

/// Truncated lattice sum `Σ_{0 < N(z) <= radius²} N(z)^{-s}`.
///
/// The tail bound compares each omitted lattice point with its Voronoi cell
/// of area `A` and circumradius `δ`:
/// `Σ_{|z|>R} |z|^{-2s} <= (2π/A) [ (R-2δ)^{2-2s}/(2s-2) + δ (R-2δ)^{1-2s}/(2s-1) ]`.
pub fn dedekind_zeta_lattice(ring: QuadraticRing, s: f64, radius: u64) -> Result<EvalResult> {
    require_convergent(s, 1.2, "lattice sum")?;
    if radius < 10 {
        return Err(usage(format!(
            "lattice radius must be at least 10, got {radius}"
        )));
    }
    let max_norm = radius * radius;
    let counts = representation_counts(ring, max_norm);
    let value = neumaier_sum(
        counts
            .iter()
            .enumerate()
            .skip(1)
            .filter(|(_, &c)| c > 0)
            .map(|(n, &c)| c as f64 * (n as f64).powf(-s)),
    );
    let (area, delta) = match ring {
        QuadraticRing::Gauss => (1.0, std::f64::consts::FRAC_1_SQRT_2),
        QuadraticRing::Eisenstein => (0.5 * 3f64.sqrt(), 1.0 / 3f64.sqrt()),
    };
    let r = radius as f64 - 2.0 * delta;
    let tail = 2.0 * std::f64::consts::PI / area
        * (r.powf(2.0 - 2.0 * s) / (2.0 * s - 2.0)
            + delta * r.powf(1.0 - 2.0 * s) / (2.0 * s - 1.0));
    Ok(EvalResult::new(value, tail, Truncation::Lattice { radius }))
}

/// `r(n)` = number of `(a, b)` of norm `n`, for `n <= max_norm`.
fn representation_counts(ring: QuadraticRing, max_norm: u64) -> Vec<u32> {
    let mut counts = vec![0u32; max_norm as usize + 1];
    let bound = match ring {
        QuadraticRing::Gauss => (max_norm as f64).sqrt() as i64 + 1,
        QuadraticRing::Eisenstein => (2.0 * (max_norm as f64 / 3.0).sqrt()) as i64 + 1,
    };
    for a in -bound..=bound {
        for b in -bound..=bound {
            let n = ring.norm_form(a, b);
            if n <= max_norm {
                counts[n as usize] += 1;
            }
        }
    }
    counts
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::log_gamma;
    use std::f64::consts::PI;

    #[test]
    fn values_at_zero() {
        for ring in QuadraticRing::ALL {
            assert!((dedekind_zeta(ring, 0.0).unwrap().value + 1.0).abs() < 1e-12);
        }
        let lg = |x: f64| log_gamma(x).unwrap();
        let g = (2.0f64).ln() + 2.0 * lg(0.75) - PI.ln() - 2.0 * lg(0.25);
        assert!((dedekind_zeta_ds(QuadraticRing::Gauss, 0.0).unwrap().value - g).abs() < 1e-12);
        let e = 3f64.ln() + 3.0 * lg(2.0 / 3.0) - (2.0 * PI).ln() - 3.0 * lg(1.0 / 3.0);
        assert!(
            (dedekind_zeta_ds(QuadraticRing::Eisenstein, 0.0)
                .unwrap()
                .value
                - e)
                .abs()
                < 1e-12
        );
    }

    #[test]
    fn small_representation_counts() {
        let g = representation_counts(QuadraticRing::Gauss, 25);
        assert_eq!(&g[..6], &[1, 4, 4, 0, 4, 8]);
        assert_eq!(g[25], 12);
        let e = representation_counts(QuadraticRing::Eisenstein, 7);
        assert_eq!(&e[..8], &[1, 6, 0, 6, 6, 0, 0, 12]);
    }

    #[test]
    fn lattice_agrees_with_factorization() {
        for ring in QuadraticRing::ALL {
            for s in [1.5, 2.0, 3.0] {
                let lat = dedekind_zeta_lattice(ring, s, 100).unwrap();
                let fac = dedekind_zeta(ring, s).unwrap();
                let diff = fac.value - lat.value;
                assert!(
                    diff >= 0.0,
                    "{ring} s={s}: truncated sum exceeds full value"
                );
                assert!(
                    diff <= lat.tail_bound,
                    "{ring} s={s}: {diff} > {}",
                    lat.tail_bound
                );
            }
        }
    }

    #[test]
    fn guards() {
        assert!(dedekind_zeta_lattice(QuadraticRing::Gauss, 1.2, 50).is_err());
        assert!(dedekind_zeta_lattice(QuadraticRing::Gauss, 2.0, 9).is_err());
        assert!(dedekind_zeta(QuadraticRing::Gauss, 1.0).is_err());
    }
}
