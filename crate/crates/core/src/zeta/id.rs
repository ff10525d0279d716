use std::fmt;

use serde::Serialize;

use crate::error::{usage, Result};
use crate::rings::QuadraticRing;

/// Natural numbers or one of the two quadratic rings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RingKind {
    Natural,
    Gauss,
    Eisenstein,
}

impl RingKind {
    pub const ALL: [RingKind; 3] = [RingKind::Natural, RingKind::Gauss, RingKind::Eisenstein];

    pub fn quadratic(self) -> Option<QuadraticRing> {
        match self {
            RingKind::Natural => None,
            RingKind::Gauss => Some(QuadraticRing::Gauss),
            RingKind::Eisenstein => Some(QuadraticRing::Eisenstein),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            RingKind::Natural => "natural",
            RingKind::Gauss => "gauss",
            RingKind::Eisenstein => "eisenstein",
        }
    }
}

impl From<QuadraticRing> for RingKind {
    fn from(r: QuadraticRing) -> Self {
        match r {
            QuadraticRing::Gauss => RingKind::Gauss,
            QuadraticRing::Eisenstein => RingKind::Eisenstein,
        }
    }
}

impl fmt::Display for RingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for RingKind {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "natural" => Ok(RingKind::Natural),
            "gauss" => Ok(RingKind::Gauss),
            "eisenstein" => Ok(RingKind::Eisenstein),
            other => Err(usage(format!("unknown ring '{other}'"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ZetaKind {
    Riemann,
    DirichletL,
    Dedekind,
    PartialPrime,
    PrimeZeta,
    BoldZ,
}

/// Names one of the zeta-type functions: `ζ`, `L₄`, `ζ₃`, `ζ₄,₁`, `Z₄`, bold `Z₃`, ...
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct ZetaId {
    kind: ZetaKind,
    ring: RingKind,
    residue_class: Option<u64>,
}

impl ZetaId {
    pub fn riemann() -> Self {
        Self {
            kind: ZetaKind::Riemann,
            ring: RingKind::Natural,
            residue_class: None,
        }
    }

    /// `L₃` or `L₄`.
    pub fn dirichlet_l(modulus: u64) -> Result<Self> {
        Ok(Self {
            kind: ZetaKind::DirichletL,
            ring: ring_for_modulus(modulus)?.into(),
            residue_class: None,
        })
    }

    pub fn dedekind(ring: QuadraticRing) -> Self {
        Self {
            kind: ZetaKind::Dedekind,
            ring: ring.into(),
            residue_class: None,
        }
    }

    /// `ζ_{q,r}`: class 1 or 3 modulo 4, class 1 or 2 modulo 3.
    pub fn partial_prime(modulus: u64, class: u64) -> Result<Self> {
        let ring = ring_for_modulus(modulus)?;
        if class != 1 && class != ring.inert_residue() {
            return Err(usage(format!(
                "residue class {class} is not a valid class modulo {modulus}"
            )));
        }
        Ok(Self {
            kind: ZetaKind::PartialPrime,
            ring: ring.into(),
            residue_class: Some(class),
        })
    }

    /// `Z`, `Z₄` or `Z₃`.
    pub fn prime_zeta(ring: RingKind) -> Self {
        Self {
            kind: ZetaKind::PrimeZeta,
            ring,
            residue_class: None,
        }
    }

    pub fn bold_z(ring: QuadraticRing) -> Self {
        Self {
            kind: ZetaKind::BoldZ,
            ring: ring.into(),
            residue_class: None,
        }
    }

    pub fn kind(&self) -> ZetaKind {
        self.kind
    }

    pub fn ring(&self) -> RingKind {
        self.ring
    }

    pub fn residue_class(&self) -> Option<u64> {
        self.residue_class
    }

    pub fn modulus(&self) -> Option<u64> {
        self.ring.quadratic().map(QuadraticRing::character_modulus)
    }
}

pub(crate) fn ring_for_modulus(modulus: u64) -> Result<QuadraticRing> {
    match modulus {
        4 => Ok(QuadraticRing::Gauss),
        3 => Ok(QuadraticRing::Eisenstein),
        other => Err(usage(format!("modulus must be 3 or 4, got {other}"))),
    }
}

fn subscript(n: u64) -> char {
    ['₀', '₁', '₂', '₃', '₄', '₅', '₆', '₇', '₈', '₉'][n as usize]
}

impl fmt::Display for ZetaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let q = self.modulus().map(subscript);
        match (self.kind, q) {
            (ZetaKind::Riemann, _) => write!(f, "ζ"),
            (ZetaKind::DirichletL, Some(q)) => write!(f, "L{q}"),
            (ZetaKind::Dedekind, Some(q)) => write!(f, "ζ{q}"),
            (ZetaKind::PartialPrime, Some(q)) => {
                write!(f, "ζ{q},{}", subscript(self.residue_class.unwrap_or(0)))
            }
            (ZetaKind::PrimeZeta, None) => write!(f, "Z"),
            (ZetaKind::PrimeZeta, Some(q)) => write!(f, "Z{q}"),
            (ZetaKind::BoldZ, Some(q)) => write!(f, "𝐙{q}"),
            _ => write!(f, "?"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symbols() {
        assert_eq!(ZetaId::riemann().to_string(), "ζ");
        assert_eq!(ZetaId::dirichlet_l(4).unwrap().to_string(), "L₄");
        assert_eq!(
            ZetaId::dedekind(QuadraticRing::Eisenstein).to_string(),
            "ζ₃"
        );
        assert_eq!(ZetaId::partial_prime(4, 3).unwrap().to_string(), "ζ₄,₃");
        assert_eq!(ZetaId::prime_zeta(RingKind::Natural).to_string(), "Z");
        assert_eq!(ZetaId::bold_z(QuadraticRing::Gauss).to_string(), "𝐙₄");
    }

    #[test]
    fn class_validation() {
        assert!(ZetaId::partial_prime(4, 1).is_ok());
        assert!(ZetaId::partial_prime(4, 3).is_ok());
        assert!(ZetaId::partial_prime(4, 2).is_err());
        assert!(ZetaId::partial_prime(3, 2).is_ok());
        assert!(ZetaId::partial_prime(3, 3).is_err());
        assert!(ZetaId::partial_prime(5, 1).is_err());
        assert!(ZetaId::partial_prime(4, 1).unwrap().residue_class() == Some(1));
        assert!(ZetaId::dedekind(QuadraticRing::Gauss)
            .residue_class()
            .is_none());
    }
}
