//! Zeta-regularized products of integers and primes.
//!
//! The crate evaluates the regularized products
//!
//! * `P = ∏ n = √(2π)` and `Π = ∏ p = 4π²` over the natural numbers,
//! * `|P₄|`, `|Π₄|` over the Gauss integers `ℤ[i]`,
//! * `|P₃|`, `|Π₃|` over the Eisenstein integers `ℤ[ω]`,
//!
//! through an explicit analytic-continuation pipeline: Hurwitz zeta by
//! Euler–Maclaurin summation, Dirichlet L-functions for `χ₃` and `χ₄`,
//! Dedekind zeta functions by factorization, and the Möbius-regularized
//! prime zeta functions. Every continued value has an independent
//! truncated-sum or Euler-product counterpart in [`zeta`] so that the two
//! routes can be compared within reported tail bounds.
//!
//! Module map:
//!
//! * [`arith`]: sieve, Möbius function, Dirichlet characters, Bernoulli
//!   numbers and exact rational power series.
//! * [`special`]: Hurwitz zeta and its s-derivative, log-gamma.
//! * [`zeta`]: L-functions, Dedekind zetas, partial and prime zetas, bold-Z products.
//! * [`rings`]: Gauss and Eisenstein integer arithmetic and prime enumeration.
//! * [`regularization`]: the regularized products and the power identities.
//! * [`verify`]: named identity suites used by the CLI.
//! * [`cli`]: the command-line frontend.

pub mod arith;
pub mod cli;
mod error;
pub mod regularization;
pub mod rings;
pub mod special;
pub mod verify;
pub mod zeta;

pub use error::{Error, Result};
pub use special::{EvalResult, Truncation};
