//! Gauss integers `ℤ[i]` and Eisenstein integers `ℤ[ω]`.
//!
//! Elements are integer pairs `(a, b)` meaning `a + b·i` or `a + b·ω`;
//! arithmetic stays exact and `ω` is only materialized as a float to order
//! elements by angle.

mod element;
mod primes;

pub use element::{unit_orbit, RingElement};
pub use primes::{
    classify_prime, enumerate_ring_primes, enumerate_ring_primes_with, is_ring_prime,
    split_representation, PrimeClass, RingPrime, Splitting,
};

use serde::Serialize;

/// The two imaginary quadratic rings handled here.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum QuadraticRing {
    Gauss,
    Eisenstein,
}

impl QuadraticRing {
    pub const ALL: [QuadraticRing; 2] = [QuadraticRing::Gauss, QuadraticRing::Eisenstein];

    pub fn unit_count(self) -> u64 {
        match self {
            QuadraticRing::Gauss => 4,
            QuadraticRing::Eisenstein => 6,
        }
    }

    /// The prime that ramifies: 2 in `ℤ[i]`, 3 in `ℤ[ω]`.
    pub fn ramified_prime(self) -> u64 {
        match self {
            QuadraticRing::Gauss => 2,
            QuadraticRing::Eisenstein => 3,
        }
    }

    /// Modulus of the attached character (4 for `ℤ[i]`, 3 for `ℤ[ω]`).
    pub fn character_modulus(self) -> u64 {
        match self {
            QuadraticRing::Gauss => 4,
            QuadraticRing::Eisenstein => 3,
        }
    }

    /// Residue of the inert primes modulo [`Self::character_modulus`].
    pub fn inert_residue(self) -> u64 {
        match self {
            QuadraticRing::Gauss => 3,
            QuadraticRing::Eisenstein => 2,
        }
    }

    /// `a² + b²` or `a² - ab + b²`.
    pub fn norm_form(self, a: i64, b: i64) -> u64 {
        let (a, b) = (a as i128, b as i128);
        let n = match self {
            QuadraticRing::Gauss => a * a + b * b,
            QuadraticRing::Eisenstein => a * a - a * b + b * b,
        };
        u64::try_from(n).expect("norm overflows u64")
    }

    /// Number of lattice points per unit of norm: `π` or `2π/√3`.
    pub fn lattice_density(self) -> f64 {
        match self {
            QuadraticRing::Gauss => std::f64::consts::PI,
            QuadraticRing::Eisenstein => 2.0 * std::f64::consts::PI / 3f64.sqrt(),
        }
    }

    /// Position of `a + b·(i or ω)` in the complex plane.
    pub fn embed(self, a: i64, b: i64) -> (f64, f64) {
        match self {
            QuadraticRing::Gauss => (a as f64, b as f64),
            QuadraticRing::Eisenstein => (a as f64 - 0.5 * b as f64, 0.5 * 3f64.sqrt() * b as f64),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            QuadraticRing::Gauss => "gauss",
            QuadraticRing::Eisenstein => "eisenstein",
        }
    }
}

impl std::fmt::Display for QuadraticRing {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for QuadraticRing {
    type Err = crate::Error;

    fn from_str(s: &str) -> crate::Result<Self> {
        match s {
            "gauss" => Ok(QuadraticRing::Gauss),
            "eisenstein" => Ok(QuadraticRing::Eisenstein),
            other => Err(crate::Error::Usage(format!("unknown ring '{other}'"))),
        }
    }
}
