use crate::error::{usage, Result};

/// Sieve limit used when callers do not pick one.
pub const DEFAULT_SIEVE_LIMIT: usize = 1_000_000;

/// Primality and Möbius tables up to `limit`, built by a linear sieve.
#[derive(Debug, Clone)]
pub struct SieveTables {
    limit: usize,
    is_prime: Vec<bool>,
    mobius: Vec<i8>,
    primes: Vec<u32>,
}

/// Builds the tables for `0..=limit`.
pub fn build_sieve(limit: usize) -> Result<SieveTables> {
    if limit < 2 {
        return Err(usage(format!(
            "sieve limit must be at least 2, got {limit}"
        )));
    }
    if limit > u32::MAX as usize {
        return Err(usage(format!("sieve limit {limit} exceeds u32 range")));
    }
    let mut is_prime = vec![false; limit + 1];
    let mut composite = vec![false; limit + 1];
    let mut mobius = vec![0i8; limit + 1];
    let mut primes: Vec<u32> = Vec::new();
    mobius[1] = 1;
    for i in 2..=limit {
        if !composite[i] {
            is_prime[i] = true;
            mobius[i] = -1;
            primes.push(i as u32);
        }
        for &p in &primes {
            let p = p as usize;
            let Some(m) = i.checked_mul(p) else { break };
            if m > limit {
                break;
            }
            composite[m] = true;
            if i % p == 0 {
                mobius[m] = 0;
                break;
            }
            mobius[m] = -mobius[i];
        }
    }
    Ok(SieveTables {
        limit,
        is_prime,
        mobius,
        primes,
    })
}

impl SieveTables {
    pub fn limit(&self) -> usize {
        self.limit
    }

    /// `false` for every `n > limit`.
    pub fn is_prime(&self, n: usize) -> bool {
        self.is_prime.get(n).copied().unwrap_or(false)
    }

    /// μ(n) for `1 <= n <= limit`.
    pub fn mobius(&self, n: usize) -> i8 {
        assert!(
            (1..=self.limit).contains(&n),
            "mobius index {n} outside 1..={}",
            self.limit
        );
        self.mobius[n]
    }

    /// All primes up to the limit, ascending.
    pub fn primes(&self) -> &[u32] {
        &self.primes
    }

    /// Primes `<= bound` (clamped to the limit).
    pub fn primes_up_to(&self, bound: usize) -> &[u32] {
        let end = self.primes.partition_point(|&p| (p as usize) <= bound);
        &self.primes[..end]
    }

    /// Number of primes `<= bound`, for `bound <= limit`.
    pub fn prime_count(&self, bound: usize) -> usize {
        self.primes_up_to(bound).len()
    }
}
