use std::ops::Mul;

use serde::Serialize;

use super::QuadraticRing;
use crate::error::{domain, Result};

/// `a + b·i` (Gauss) or `a + b·ω` (Eisenstein).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct RingElement {
    #[serde(skip)]
    pub ring: QuadraticRing,
    pub a: i64,
    pub b: i64,
}

impl RingElement {
    pub fn new(ring: QuadraticRing, a: i64, b: i64) -> Self {
        Self { ring, a, b }
    }

    pub fn gauss(a: i64, b: i64) -> Self {
        Self::new(QuadraticRing::Gauss, a, b)
    }

    pub fn eisenstein(a: i64, b: i64) -> Self {
        Self::new(QuadraticRing::Eisenstein, a, b)
    }

    pub fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0
    }

    pub fn norm(&self) -> u64 {
        self.ring.norm_form(self.a, self.b)
    }

    pub fn is_unit(&self) -> bool {
        self.norm() == 1
    }

    /// Complex conjugate: `a - b·i`, or `a + b·ω̄ = (a - b) - b·ω`.
    pub fn conj(&self) -> Self {
        match self.ring {
            QuadraticRing::Gauss => Self::new(self.ring, self.a, -self.b),
            QuadraticRing::Eisenstein => Self::new(self.ring, self.a - self.b, -self.b),
        }
    }

    /// Multiplication by the unit generator `i` or `ρ = 1 + ω`.
    pub fn rotate(&self) -> Self {
        match self.ring {
            QuadraticRing::Gauss => Self::new(self.ring, -self.b, self.a),
            QuadraticRing::Eisenstein => Self::new(self.ring, self.a - self.b, self.a),
        }
    }

    /// Exact quotient `self / rhs` if it lies in the ring.
    pub fn checked_div(&self, rhs: &RingElement) -> Option<RingElement> {
        assert_eq!(self.ring, rhs.ring);
        let n = rhs.norm() as i64;
        if n == 0 {
            return None;
        }
        let num = *self * rhs.conj();
        if num.a % n == 0 && num.b % n == 0 {
            Some(Self::new(self.ring, num.a / n, num.b / n))
        } else {
            None
        }
    }

    /// Polar angle in `[0, 2π)` of the embedded point.
    pub fn angle(&self) -> f64 {
        let (x, y) = self.ring.embed(self.a, self.b);
        let t = y.atan2(x);
        if t < 0.0 {
            t + 2.0 * std::f64::consts::PI
        } else {
            t
        }
    }
}

impl Mul for RingElement {
    type Output = RingElement;

    fn mul(self, rhs: RingElement) -> RingElement {
        assert_eq!(self.ring, rhs.ring, "mixed-ring multiplication");
        let (a, b, c, d) = (self.a, self.b, rhs.a, rhs.b);
        match self.ring {
            QuadraticRing::Gauss => Self::new(self.ring, a * c - b * d, a * d + b * c),
            // ω² = -1 - ω
            QuadraticRing::Eisenstein => Self::new(self.ring, a * c - b * d, a * d + b * c - b * d),
        }
    }
}

impl std::fmt::Display for RingElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let unit = match self.ring {
            QuadraticRing::Gauss => "i",
            QuadraticRing::Eisenstein => "ω",
        };
        if self.b < 0 {
            write!(f, "{} - {}{}", self.a, -self.b, unit)
        } else {
            write!(f, "{} + {}{}", self.a, self.b, unit)
        }
    }
}

/// The associates of `z`, starting with `z` itself.
pub fn unit_orbit(z: &RingElement) -> Result<Vec<RingElement>> {
    if z.is_zero() {
        return Err(domain("zero has no unit orbit"));
    }
    let count = z.ring.unit_count() as usize;
    let mut orbit = Vec::with_capacity(count);
    let mut w = *z;
    for _ in 0..count {
        orbit.push(w);
        w = w.rotate();
    }
    debug_assert_eq!(w, *z);
    Ok(orbit)
}
