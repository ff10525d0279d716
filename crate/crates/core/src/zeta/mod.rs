//! L-functions and zeta functions assembled from the Hurwitz zeta, each
//! paired with a truncated sum or Euler product over primes.
//!
//! Continued values ([`dirichlet_l`], [`dedekind_zeta`]) come from the
//! Euler–Maclaurin kernel. Defining-domain routes ([`dedekind_zeta_lattice`],
//! [`partial_prime_zeta`], [`prime_zeta_direct`], [`bold_z_product`]) only
//! accept `s` where the series or product converges and serve as oracles.

mod bold;
mod dedekind;
mod dirichlet;
mod id;
mod prime_tail;
mod primes;

pub use bold::{bold_z_closed, bold_z_product};
pub use dedekind::{
    dedekind_zeta, dedekind_zeta_ds, dedekind_zeta_ds_with, dedekind_zeta_lattice,
    dedekind_zeta_with,
};
pub use dirichlet::{
    dirichlet_l, dirichlet_l_ds, dirichlet_l_ds_with, dirichlet_l_with, l_euler_product,
};
pub use id::{RingKind, ZetaId, ZetaKind};
pub use prime_tail::{exp_integral_e1, prime_sum_tail, PrimeTail};
pub use primes::{euler_product_zeta, partial_prime_zeta, prime_zeta_direct, prime_zeta_mobius};

use crate::error::{Error, Result};

pub(crate) fn require_convergent(s: f64, threshold: f64, what: &str) -> Result<()> {
    if s.is_nan() || s <= threshold || !s.is_finite() {
        return Err(Error::Divergent(format!(
            "{what} needs s > {threshold}, got {s}"
        )));
    }
    Ok(())
}
