//! Regularized products `∏ a = exp(-ζ_A'(0))` over integers and primes.
//!
//! Integer products use the continued zeta function of each ring. Prime
//! products follow the Möbius expansion `Z(s) = Σ μ(n)/n · ln 𝐙(ns)` and
//! keep its unsimplified form at `s = 0`:
//!
//! ```text
//! Z'(0) = (Σ μ(n)) · 𝐙'(0)/𝐙(0),   Σ μ(n) := 1/ζ(0)
//! ```
//!
//! with `𝐙 = ζ` over the naturals and `𝐙 = (ζ_K/u)^u` over a ring with `u`
//! units, so `𝐙'(0)/𝐙(0) = u ζ_K'(0)/ζ_K(0)`.
//!
//! Ring products are reported as squared moduli `|P|²`, `|Π|²`; the phase
//! is left undefined.

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::Result;
use crate::special::{log_gamma, riemann_zeta_ds_with, riemann_zeta_with, EulerMaclaurin};
use crate::zeta::{dedekind_zeta_ds_with, dedekind_zeta_with, RingKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ProductTarget {
    Integers,
    Primes,
}

impl std::str::FromStr for ProductTarget {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "integers" => Ok(ProductTarget::Integers),
            "primes" => Ok(ProductTarget::Primes),
            other => Err(crate::Error::Usage(format!("unknown target '{other}'"))),
        }
    }
}

/// A regularized product and its gamma-function closed form.
///
/// For the Gauss and Eisenstein rings `numeric_value` is the squared
/// modulus; [`RegularizedProduct::modulus`] takes the square root.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RegularizedProduct {
    pub ring: RingKind,
    pub target: ProductTarget,
    pub log_value: f64,
    pub numeric_value: f64,
    pub closed_form_value: f64,
    pub discrepancy: f64,
}

impl RegularizedProduct {
    fn new(ring: RingKind, target: ProductTarget, log_value: f64, closed_log: f64) -> Self {
        let numeric_value = log_value.exp();
        let closed_form_value = closed_log.exp();
        Self {
            ring,
            target,
            log_value,
            numeric_value,
            closed_form_value,
            discrepancy: (numeric_value - closed_form_value).abs(),
        }
    }

    fn squared(&self) -> bool {
        self.ring != RingKind::Natural
    }

    /// `|P|` (or `P` itself over the naturals).
    pub fn modulus(&self) -> f64 {
        if self.squared() {
            self.numeric_value.sqrt()
        } else {
            self.numeric_value
        }
    }

    pub fn closed_form_modulus(&self) -> f64 {
        if self.squared() {
            self.closed_form_value.sqrt()
        } else {
            self.closed_form_value
        }
    }

    /// `ln |P|`.
    pub fn log_modulus(&self) -> f64 {
        if self.squared() {
            0.5 * self.log_value
        } else {
            self.log_value
        }
    }

    pub fn relative_discrepancy(&self) -> f64 {
        self.discrepancy / self.closed_form_value.abs()
    }
}

fn lg(x: f64) -> f64 {
    log_gamma(x).expect("positive argument")
}

/// `ln` of the closed forms `√(2π)`, `πΓ(1/4)²/(2Γ(3/4)²)`, `2πΓ(1/3)³/(3Γ(2/3)³)`.
pub fn closed_form_integer_log(ring: RingKind) -> f64 {
    match ring {
        RingKind::Natural => 0.5 * (2.0 * PI).ln(),
        RingKind::Gauss => PI.ln() + 2.0 * lg(0.25) - 2f64.ln() - 2.0 * lg(0.75),
        RingKind::Eisenstein => {
            (2.0 * PI).ln() + 3.0 * lg(1.0 / 3.0) - 3f64.ln() - 3.0 * lg(2.0 / 3.0)
        }
    }
}

/// `ln` of `4π²`, `(|P₄|²)⁸`, `(|P₃|²)¹²` from the gamma-function closed forms.
pub fn closed_form_prime_log(ring: RingKind) -> f64 {
    match ring {
        RingKind::Natural => (4.0 * PI * PI).ln(),
        RingKind::Gauss => 8.0 * closed_form_integer_log(ring),
        RingKind::Eisenstein => 12.0 * closed_form_integer_log(ring),
    }
}

/// `(ζ_A(0), ζ_A'(0))` for `A` = naturals or a ring.
fn zeta_at_zero(ring: RingKind, em: &EulerMaclaurin) -> Result<(f64, f64)> {
    Ok(match ring.quadratic() {
        None => (
            riemann_zeta_with(0.0, em)?.value,
            riemann_zeta_ds_with(0.0, em)?.value,
        ),
        Some(q) => (
            dedekind_zeta_with(q, 0.0, em)?.value,
            dedekind_zeta_ds_with(q, 0.0, em)?.value,
        ),
    })
}

pub fn regularized_integer_product(ring: RingKind) -> Result<RegularizedProduct> {
    regularized_integer_product_with(ring, &EulerMaclaurin::default())
}

/// `-ζ'(0)`, `-ζ₄'(0)` or `-ζ₃'(0)` through the Euler–Maclaurin pipeline.
pub fn regularized_integer_product_with(
    ring: RingKind,
    em: &EulerMaclaurin,
) -> Result<RegularizedProduct> {
    let (_, derivative) = zeta_at_zero(ring, em)?;
    Ok(RegularizedProduct::new(
        ring,
        ProductTarget::Integers,
        -derivative,
        closed_form_integer_log(ring),
    ))
}

/// `Z'(0)`, `Z₄'(0)` or `Z₃'(0)` from the unsimplified ratio formula.
pub fn prime_zeta_derivative_at_zero(ring: RingKind, em: &EulerMaclaurin) -> Result<f64> {
    let mobius_sum = regularized_mobius_sum_with(em)?;
    let (value, derivative) = zeta_at_zero(ring, em)?;
    let log_derivative = match ring.quadratic() {
        None => derivative / value,
        Some(q) => q.unit_count() as f64 * derivative / value,
    };
    Ok(mobius_sum * log_derivative)
}

pub fn regularized_prime_product(ring: RingKind) -> Result<RegularizedProduct> {
    regularized_prime_product_with(ring, &EulerMaclaurin::default())
}

pub fn regularized_prime_product_with(
    ring: RingKind,
    em: &EulerMaclaurin,
) -> Result<RegularizedProduct> {
    let zp = prime_zeta_derivative_at_zero(ring, em)?;
    Ok(RegularizedProduct::new(
        ring,
        ProductTarget::Primes,
        -zp,
        closed_form_prime_log(ring),
    ))
}

pub fn regularized_product(ring: RingKind, target: ProductTarget) -> Result<RegularizedProduct> {
    match target {
        ProductTarget::Integers => regularized_integer_product(ring),
        ProductTarget::Primes => regularized_prime_product(ring),
    }
}

/// `Σ_{n>=1} μ(n)` regularized as `1/ζ(0)`.
pub fn regularized_mobius_sum() -> Result<f64> {
    regularized_mobius_sum_with(&EulerMaclaurin::default())
}

pub fn regularized_mobius_sum_with(em: &EulerMaclaurin) -> Result<f64> {
    Ok(1.0 / riemann_zeta_with(0.0, em)?.value)
}

/// Outcome of comparing `ln |Π|` with `k ln |P|`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PowerIdentityReport {
    pub ring: RingKind,
    pub exponent: u32,
    pub log_prime_product: f64,
    pub log_integer_product: f64,
    pub residual: f64,
    pub tolerance: f64,
    pub passed: bool,
}

pub const POWER_IDENTITY_TOLERANCE: f64 = 1e-10;

/// The exponent `k` in `|Π| = |P|^k`: 4, 8 or 12.
pub fn power_identity_exponent(ring: RingKind) -> u32 {
    match ring {
        RingKind::Natural => 4,
        RingKind::Gauss => 8,
        RingKind::Eisenstein => 12,
    }
}

pub fn power_identity_check(ring: RingKind) -> Result<PowerIdentityReport> {
    power_identity_check_with(ring, POWER_IDENTITY_TOLERANCE)
}

pub fn power_identity_check_with(ring: RingKind, tolerance: f64) -> Result<PowerIdentityReport> {
    let integers = regularized_integer_product(ring)?;
    let primes = regularized_prime_product(ring)?;
    let k = power_identity_exponent(ring);
    let log_p = integers.log_modulus();
    let log_pi = primes.log_modulus();
    let residual = (log_pi - k as f64 * log_p).abs();
    Ok(PowerIdentityReport {
        ring,
        exponent: k,
        log_prime_product: log_pi,
        log_integer_product: log_p,
        residual,
        tolerance,
        passed: residual <= tolerance,
    })
}
