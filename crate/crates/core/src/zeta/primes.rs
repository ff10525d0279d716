use super::id::ring_for_modulus;
use super::prime_tail::prime_sum_tail;
use super::require_convergent;
use crate::arith::SieveTables;
use crate::error::{usage, Result};
use crate::special::{hurwitz_zeta, neumaier_sum, EvalResult, Truncation};

fn check_cutoff(cutoff: u64, sieve: &SieveTables) -> Result<()> {
    if cutoff as usize > sieve.limit() {
        return Err(usage(format!(
            "prime cutoff {cutoff} exceeds sieve limit {}",
            sieve.limit()
        )));
    }
    Ok(())
}

/// `∏_{p <= cutoff, keep(p)} (1 - p^{-s})^{-1}`, with the omitted factors
/// bounded by `exp(T/(1 - c^{-s})) - 1`, `T` the prime-tail upper bound.
fn truncated_euler_product(
    s: f64,
    prime_cutoff: u64,
    sieve: &SieveTables,
    keep: impl Fn(u64) -> bool,
) -> EvalResult {
    let log = neumaier_sum(
        sieve
            .primes_up_to(prime_cutoff as usize)
            .iter()
            .map(|&p| p as u64)
            .filter(|&p| keep(p))
            .map(|p| -(-(p as f64).powf(-s)).ln_1p()),
    );
    let value = log.exp();
    let c = (prime_cutoff.max(1)) as f64;
    let log_tail = prime_sum_tail(s, prime_cutoff, sieve).upper / (1.0 - (c + 1.0).powf(-s));
    EvalResult::new(
        value,
        value * log_tail.exp_m1(),
        Truncation::Series {
            cutoff: prime_cutoff,
        },
    )
}

/// `ζ_{q,r}(s) = ∏_{p ≡ r (mod q)} (1 - p^{-s})^{-1}` truncated at `prime_cutoff`.
pub fn partial_prime_zeta(
    modulus: u64,
    class: u64,
    s: f64,
    prime_cutoff: u64,
    sieve: &SieveTables,
) -> Result<EvalResult> {
    let ring = ring_for_modulus(modulus)?;
    if class != 1 && class != ring.inert_residue() {
        return Err(usage(format!(
            "residue class {class} is not a valid class modulo {modulus}"
        )));
    }
    require_convergent(s, 1.0, "partial prime zeta")?;
    check_cutoff(prime_cutoff, sieve)?;
    Ok(truncated_euler_product(s, prime_cutoff, sieve, |p| {
        p % modulus == class
    }))
}

/// `ζ(s) = ∏_p (1 - p^{-s})^{-1}` truncated at `prime_cutoff`.
pub fn euler_product_zeta(s: f64, prime_cutoff: u64, sieve: &SieveTables) -> Result<EvalResult> {
    require_convergent(s, 1.0, "Euler product")?;
    check_cutoff(prime_cutoff, sieve)?;
    Ok(truncated_euler_product(s, prime_cutoff, sieve, |_| true))
}

/// `Z(s) = Σ_p p^{-s}` from the sieved primes up to `prime_cutoff`, plus the
/// midpoint of the bracket on the omitted primes. `tail_bound` is the half
/// width of that bracket.
pub fn prime_zeta_direct(s: f64, prime_cutoff: u64, sieve: &SieveTables) -> Result<EvalResult> {
    require_convergent(s, 1.0, "prime zeta")?;
    check_cutoff(prime_cutoff, sieve)?;
    let partial = neumaier_sum(
        sieve
            .primes_up_to(prime_cutoff as usize)
            .iter()
            .rev()
            .map(|&p| (p as f64).powf(-s)),
    );
    let tail = prime_sum_tail(s, prime_cutoff, sieve);
    Ok(EvalResult::new(
        partial + tail.midpoint(),
        tail.half_width(),
        Truncation::Series {
            cutoff: prime_cutoff,
        },
    ))
}

/// `Z(s) = Σ_{n <= n_max} μ(n)/n · ln ζ(ns)`.
///
/// `ln ζ(t)` is taken as `ln(1 + ζ(t, 2))` so that large `t` keep full
/// relative precision. The omitted terms are bounded through
/// `ln ζ(t) <= ζ(t) - 1 <= 2^{-t}(1 + 2/(t-1))`.
pub fn prime_zeta_mobius(s: f64, n_max: u64, sieve: &SieveTables) -> Result<EvalResult> {
    require_convergent(s, 1.0, "prime zeta")?;
    if n_max == 0 {
        return Err(usage("n_max must be positive"));
    }
    check_cutoff(n_max, sieve)?;
    let mut terms = Vec::with_capacity(n_max as usize);
    let mut em_tail = 0.0;
    let mut em_params = Vec::new();
    for n in 1..=n_max {
        let mu = sieve.mobius(n as usize);
        if mu == 0 {
            continue;
        }
        let t = n as f64 * s;
        let zm1 = hurwitz_zeta(t, 2.0)?;
        let weight = mu as f64 / n as f64;
        terms.push(weight * zm1.value.ln_1p());
        em_tail += weight.abs() * zm1.tail_bound;
        em_params.push(zm1.params);
    }
    // smallest terms first
    let value = neumaier_sum(terms.into_iter().rev());
    let next = (n_max + 1) as f64;
    let t = next * s;
    let mobius_tail = 2f64.powf(-t) * (1.0 + 2.0 / (t - 1.0)) / (1.0 - 2f64.powf(-s)) / next;
    Ok(EvalResult::new(
        value,
        mobius_tail + em_tail,
        Truncation::composite(
            std::iter::once(Truncation::Series { cutoff: n_max }).chain(em_params),
        ),
    ))
}
