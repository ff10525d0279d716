use super::dedekind::dedekind_zeta;
use super::prime_tail::prime_sum_tail;
use super::require_convergent;
use crate::arith::SieveTables;
use crate::error::{usage, Result};
use crate::rings::{enumerate_ring_primes_with, QuadraticRing};
use crate::special::{neumaier_sum, EvalResult, Truncation};

/// `∏_{π prime, N(π) <= norm_cutoff} (1 - N(π)^{-s})^{-1}`, one factor per
/// ring prime (associates counted separately).
///
/// Omitted ring primes are split primes `p > c` (`2u` each), inert primes
/// with `p > √c` (`u` each, norm `p²`) and possibly the ramified prime.
pub fn bold_z_product(
    ring: QuadraticRing,
    s: f64,
    norm_cutoff: u64,
    sieve: &SieveTables,
) -> Result<EvalResult> {
    require_convergent(s, 1.0, "bold-Z product")?;
    if norm_cutoff < 2 {
        return Err(usage("norm cutoff must be at least 2"));
    }
    let primes = enumerate_ring_primes_with(ring, norm_cutoff, sieve)?;
    let log = neumaier_sum(
        primes
            .iter()
            .rev()
            .map(|p| -(-(p.norm as f64).powf(-s)).ln_1p()),
    );
    let value = log.exp();

    let u = ring.unit_count() as f64;
    let c = norm_cutoff as f64;
    let mut omitted = 2.0 * u * prime_sum_tail(s, norm_cutoff, sieve).upper
        + u * prime_sum_tail(2.0 * s, norm_cutoff.isqrt(), sieve).upper;
    let ram = ring.ramified_prime();
    if ram > norm_cutoff {
        omitted += u * (ram as f64).powf(-s);
    }
    let log_tail = omitted / (1.0 - (c + 1.0).powf(-s));
    Ok(EvalResult::new(
        value,
        value * log_tail.exp_m1(),
        Truncation::Series {
            cutoff: norm_cutoff,
        },
    ))
}

/// `(ζ₄(s)/4)⁴` or `(ζ₃(s)/6)⁶`.
pub fn bold_z_closed(ring: QuadraticRing, s: f64) -> Result<EvalResult> {
    let u = ring.unit_count();
    let zk = dedekind_zeta(ring, s)?;
    Ok(zk.scaled(1.0 / u as f64).powi(u as i32))
}
