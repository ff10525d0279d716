use super::id::ring_for_modulus;
use super::primes::partial_prime_zeta;
use super::require_convergent;
use crate::arith::SieveTables;
use crate::error::Result;
use crate::special::{hurwitz_difference, hurwitz_difference_ds, EulerMaclaurin, EvalResult};

fn shifts(modulus: u64) -> Result<(f64, f64, f64)> {
    ring_for_modulus(modulus)?;
    let q = modulus as f64;
    Ok((q, 1.0 / q, (q - 1.0) / q))
}

/// `L(s, χ_q) = q^{-s} (ζ(s, 1/q) - ζ(s, (q-1)/q))` for `q ∈ {3, 4}`.
///
/// The pole terms of the two Hurwitz values cancel analytically, so `s = 1`
/// is allowed.
pub fn dirichlet_l(modulus: u64, s: f64) -> Result<EvalResult> {
    dirichlet_l_with(modulus, s, &EulerMaclaurin::default())
}

pub fn dirichlet_l_with(modulus: u64, s: f64, em: &EulerMaclaurin) -> Result<EvalResult> {
    let (q, a, b) = shifts(modulus)?;
    let diff = hurwitz_difference(s, a, b, em)?;
    Ok(diff.scaled(q.powf(-s)))
}

/// `dL/ds = q^{-s} (D'(s) - ln q · D(s))` with `D` the Hurwitz difference.
pub fn dirichlet_l_ds(modulus: u64, s: f64) -> Result<EvalResult> {
    dirichlet_l_ds_with(modulus, s, &EulerMaclaurin::default())
}

pub fn dirichlet_l_ds_with(modulus: u64, s: f64, em: &EulerMaclaurin) -> Result<EvalResult> {
    let (q, a, b) = shifts(modulus)?;
    let d = hurwitz_difference(s, a, b, em)?;
    let dd = hurwitz_difference_ds(s, a, b, em)?;
    let scale = q.powf(-s);
    let ln_q = q.ln();
    Ok(EvalResult::new(
        scale * (dd.value - ln_q * d.value),
        scale * (dd.tail_bound + ln_q * d.tail_bound),
        dd.params,
    ))
}

/// `L(s) = ζ_{q,1}(s) ζ_{q,r}(2s) / ζ_{q,r}(s)` from truncated Euler
/// products, `r` the inert residue (3 mod 4, 2 mod 3).
pub fn l_euler_product(
    modulus: u64,
    s: f64,
    prime_cutoff: u64,
    sieve: &SieveTables,
) -> Result<EvalResult> {
    require_convergent(s, 1.0, "Euler product of L")?;
    let ring = ring_for_modulus(modulus)?;
    let r = ring.inert_residue();
    let split = partial_prime_zeta(modulus, 1, s, prime_cutoff, sieve)?;
    let inert_2s = partial_prime_zeta(modulus, r, 2.0 * s, prime_cutoff, sieve)?;
    let inert_s = partial_prime_zeta(modulus, r, s, prime_cutoff, sieve)?;
    Ok(split.times(&inert_2s).divided_by(&inert_s))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::build_sieve;
    use crate::special::log_gamma;
    use std::f64::consts::PI;

    // Σ_m χ(m) m^{-s} summed in (q-periodic) blocks, alternating-series tail
    fn alternating_oracle(q: u64, s: f64, blocks: u64) -> f64 {
        let mut sum = 0.0;
        for m in (0..blocks).rev() {
            let base = (q * m) as f64;
            sum += (base + 1.0).powf(-s) - (base + q as f64 - 1.0).powf(-s);
        }
        sum
    }

    #[test]
    fn values_at_zero() {
        assert!((dirichlet_l(4, 0.0).unwrap().value - 0.5).abs() < 1e-13);
        assert!((dirichlet_l(3, 0.0).unwrap().value - 1.0 / 3.0).abs() < 1e-13);
    }

    #[test]
    fn values_at_two_match_direct_series() {
        let catalan = alternating_oracle(4, 2.0, 2_000_000);
        assert!((catalan - 0.915_965_594_2).abs() < 1e-10);
        assert!((dirichlet_l(4, 2.0).unwrap().value - catalan).abs() < 1e-12);
        let l3 = alternating_oracle(3, 2.0, 2_000_000);
        assert!((l3 - 0.781_302_412_9).abs() < 1e-10);
        assert!((dirichlet_l(3, 2.0).unwrap().value - l3).abs() < 1e-12);
    }

    #[test]
    fn values_at_one() {
        assert!((dirichlet_l(4, 1.0).unwrap().value - PI / 4.0).abs() < 1e-14);
        assert!((dirichlet_l(3, 1.0).unwrap().value - PI / (3.0 * 3f64.sqrt())).abs() < 1e-14);
    }

    #[test]
    fn derivatives_at_zero() {
        let lg = |x: f64| log_gamma(x).unwrap();
        let l4 = lg(0.25) - 2f64.ln() - lg(0.75);
        assert!((dirichlet_l_ds(4, 0.0).unwrap().value - l4).abs() < 1e-12);
        let l3 = lg(1.0 / 3.0) - 3f64.ln() / 3.0 - lg(2.0 / 3.0);
        assert!((dirichlet_l_ds(3, 0.0).unwrap().value - l3).abs() < 1e-12);
    }

    #[test]
    fn derivative_matches_central_difference() {
        let h = 1e-6;
        for q in [3, 4] {
            for s in [-1.5, 0.5, 1.0, 2.0, 3.0] {
                let fd = (dirichlet_l(q, s + h).unwrap().value
                    - dirichlet_l(q, s - h).unwrap().value)
                    / (2.0 * h);
                let d = dirichlet_l_ds(q, s).unwrap().value;
                assert!((d - fd).abs() <= 1e-7 * d.abs().max(1e-2), "q={q} s={s}");
            }
        }
    }

    #[test]
    fn bad_modulus() {
        assert!(dirichlet_l(5, 2.0).is_err());
        assert!(dirichlet_l_ds(2, 0.0).is_err());
    }

    #[test]
    fn euler_product_route() {
        let sieve = build_sieve(100_000).unwrap();
        for (q, s, tol) in [
            (4, 2.0, 1e-4),
            (3, 2.0, 1e-4),
            (4, 3.0, 1e-6),
            (3, 3.0, 1e-6),
        ] {
            let e = l_euler_product(q, s, 100_000, &sieve).unwrap();
            let h = dirichlet_l(q, s).unwrap();
            assert!((e.value - h.value).abs() < tol, "q={q} s={s}");
            assert!(
                (e.value - h.value).abs() <= e.tail_bound + h.tail_bound,
                "q={q} s={s}"
            );
        }
        assert!(l_euler_product(4, 1.0, 1000, &sieve).is_err());
    }
}
