//! Integer arithmetic foundations.

mod bernoulli;
mod character;
mod series;
mod sieve;

pub use bernoulli::{bernoulli, bernoulli_f64, BernoulliTable, MAX_BERNOULLI_ORDER};
pub use character::{character, DirichletCharacter};
pub use series::{artin_hasse_series, exp_series, RationalSeries};
pub use sieve::{build_sieve, SieveTables, DEFAULT_SIEVE_LIMIT};

/// Deterministic trial-division primality test for small arguments.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) || n.is_multiple_of(3) {
        return false;
    }
    let mut d = 5u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) || n.is_multiple_of(d + 2) {
            return false;
        }
        d += 6;
    }
    true
}
