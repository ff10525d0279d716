use serde::Serialize;

use super::{QuadraticRing, RingElement};
use crate::arith::{build_sieve, is_prime_u64, SieveTables};
use crate::error::{domain, usage, Result};

/// Splitting type of a rational prime in `ℤ[i]` or `ℤ[ω]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Splitting {
    Inert,
    Split,
    Ramified,
}

impl Splitting {
    pub fn name(self) -> &'static str {
        match self {
            Splitting::Inert => "inert",
            Splitting::Split => "split",
            Splitting::Ramified => "ramified",
        }
    }
}

/// How a rational prime decomposes, counting associates individually.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PrimeClass {
    pub rational_prime: u64,
    pub kind: Splitting,
    pub ring_prime_count: u64,
    pub ring_prime_norm: u64,
}

fn splitting_of(ring: QuadraticRing, p: u64) -> Splitting {
    if p == ring.ramified_prime() {
        Splitting::Ramified
    } else if p % ring.character_modulus() == ring.inert_residue() {
        Splitting::Inert
    } else {
        Splitting::Split
    }
}

pub fn classify_prime(ring: QuadraticRing, p: u64) -> Result<PrimeClass> {
    if !is_prime_u64(p) {
        return Err(usage(format!("{p} is not a prime")));
    }
    let u = ring.unit_count();
    let kind = splitting_of(ring, p);
    let (ring_prime_count, ring_prime_norm) = match kind {
        Splitting::Inert => (u, p * p),
        Splitting::Split => (2 * u, p),
        Splitting::Ramified => (u, p),
    };
    Ok(PrimeClass {
        rational_prime: p,
        kind,
        ring_prime_count,
        ring_prime_norm,
    })
}

fn is_associate_of_rational(z: &RingElement, p: u64) -> bool {
    let p = p as i64;
    // associates of p are p times a unit
    z.checked_div(&RingElement::new(z.ring, p, 0))
        .is_some_and(|u| u.is_unit())
}

fn ring_prime_kind(z: &RingElement, is_prime: impl Fn(u64) -> bool) -> Option<Splitting> {
    let ring = z.ring;
    let n = z.norm();
    if is_prime(n) {
        if n % ring.character_modulus() == ring.inert_residue() {
            return None;
        }
        return Some(splitting_of(ring, n));
    }
    let r = n.isqrt();
    if r * r == n
        && is_prime(r)
        && splitting_of(ring, r) == Splitting::Inert
        && is_associate_of_rational(z, r)
    {
        return Some(Splitting::Inert);
    }
    None
}

/// Whether `z` is a prime of its ring.
pub fn is_ring_prime(z: &RingElement) -> Result<bool> {
    if z.is_zero() {
        return Err(domain("zero is neither prime nor composite"));
    }
    Ok(ring_prime_kind(z, is_prime_u64).is_some())
}

/// A ring prime together with its norm and the splitting type of the
/// rational prime below it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RingPrime {
    #[serde(flatten)]
    pub element: RingElement,
    pub norm: u64,
    pub class: Splitting,
}

fn box_bound(ring: QuadraticRing, max_norm: u64) -> i64 {
    let n = max_norm as f64;
    match ring {
        QuadraticRing::Gauss => n.sqrt() as i64 + 1,
        QuadraticRing::Eisenstein => (2.0 * (n / 3.0).sqrt()) as i64 + 1,
    }
}

/// Every ring prime of norm `<= max_norm`, associates included, ordered by
/// norm and then by polar angle in `[0, 2π)`.
pub fn enumerate_ring_primes(ring: QuadraticRing, max_norm: u64) -> Vec<RingPrime> {
    if max_norm < 2 {
        return Vec::new();
    }
    let sieve = build_sieve(max_norm as usize).expect("limit >= 2");
    enumerate_ring_primes_with(ring, max_norm, &sieve).expect("sieve covers max_norm")
}

/// As [`enumerate_ring_primes`], reusing a sieve that covers `max_norm`.
pub fn enumerate_ring_primes_with(
    ring: QuadraticRing,
    max_norm: u64,
    sieve: &SieveTables,
) -> Result<Vec<RingPrime>> {
    if max_norm as usize > sieve.limit() {
        return Err(usage(format!(
            "max norm {max_norm} exceeds sieve limit {}",
            sieve.limit()
        )));
    }
    let bound = box_bound(ring, max_norm);
    let is_prime = |n: u64| sieve.is_prime(n as usize);
    let mut out: Vec<(RingPrime, f64)> = Vec::new();
    for a in -bound..=bound {
        for b in -bound..=bound {
            let norm = ring.norm_form(a, b);
            if norm < 2 || norm > max_norm {
                continue;
            }
            let z = RingElement::new(ring, a, b);
            if let Some(class) = ring_prime_kind(&z, is_prime) {
                out.push((
                    RingPrime {
                        element: z,
                        norm,
                        class,
                    },
                    z.angle(),
                ));
            }
        }
    }
    out.sort_by(|x, y| x.0.norm.cmp(&y.0.norm).then(x.1.total_cmp(&y.1)));
    Ok(out.into_iter().map(|(p, _)| p).collect())
}

/// The element of norm `p` with `a > 0` and the smallest `b > 0`.
pub fn split_representation(ring: QuadraticRing, p: u64) -> Result<RingElement> {
    let class = classify_prime(ring, p)?;
    if class.kind != Splitting::Split {
        return Err(usage(format!("{p} is not split in the {ring} ring")));
    }
    let bound = box_bound(ring, p);
    for b in 1..=bound {
        for a in 1..=bound {
            if ring.norm_form(a, b) == p {
                return Ok(RingElement::new(ring, a, b));
            }
        }
    }
    unreachable!("split prime {p} has a representative")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classification_examples() {
        let c = classify_prime(QuadraticRing::Gauss, 5).unwrap();
        assert_eq!(
            (c.kind, c.ring_prime_count, c.ring_prime_norm),
            (Splitting::Split, 8, 5)
        );
        let c = classify_prime(QuadraticRing::Gauss, 7).unwrap();
        assert_eq!(
            (c.kind, c.ring_prime_count, c.ring_prime_norm),
            (Splitting::Inert, 4, 49)
        );
        let c = classify_prime(QuadraticRing::Gauss, 2).unwrap();
        assert_eq!(
            (c.kind, c.ring_prime_count, c.ring_prime_norm),
            (Splitting::Ramified, 4, 2)
        );
        let c = classify_prime(QuadraticRing::Eisenstein, 3).unwrap();
        assert_eq!(
            (c.kind, c.ring_prime_count, c.ring_prime_norm),
            (Splitting::Ramified, 6, 3)
        );
        let c = classify_prime(QuadraticRing::Eisenstein, 7).unwrap();
        assert_eq!((c.kind, c.ring_prime_count), (Splitting::Split, 12));
        let c = classify_prime(QuadraticRing::Eisenstein, 2).unwrap();
        assert_eq!(
            (c.kind, c.ring_prime_count, c.ring_prime_norm),
            (Splitting::Inert, 6, 4)
        );
        assert!(classify_prime(QuadraticRing::Gauss, 9).is_err());
        assert!(classify_prime(QuadraticRing::Gauss, 1).is_err());
    }

    #[test]
    fn prime_test_examples() {
        assert!(is_ring_prime(&RingElement::gauss(2, 1)).unwrap());
        assert!(!is_ring_prime(&RingElement::gauss(1, 0)).unwrap());
        assert!(is_ring_prime(&RingElement::gauss(3, 0)).unwrap());
        assert!(is_ring_prime(&RingElement::gauss(0, -3)).unwrap());
        assert!(!is_ring_prime(&RingElement::gauss(2, 0)).unwrap());
        assert!(!is_ring_prime(&RingElement::gauss(5, 0)).unwrap());
        assert!(is_ring_prime(&RingElement::eisenstein(1, -1)).unwrap());
        assert!(is_ring_prime(&RingElement::eisenstein(2, 0)).unwrap());
        assert!(!is_ring_prime(&RingElement::eisenstein(3, 0)).unwrap());
        assert!(is_ring_prime(&RingElement::gauss(0, 0)).is_err());
    }

    #[test]
    fn small_enumerations() {
        let g = enumerate_ring_primes(QuadraticRing::Gauss, 5);
        assert_eq!(g.len(), 12);
        assert_eq!(g.iter().filter(|p| p.norm == 2).count(), 4);
        assert_eq!(g.iter().filter(|p| p.norm == 5).count(), 8);
        assert_eq!(g[0].element, RingElement::gauss(1, 1));
        let e = enumerate_ring_primes(QuadraticRing::Eisenstein, 3);
        assert_eq!(e.len(), 6);
        assert!(e
            .iter()
            .all(|p| p.norm == 3 && p.class == Splitting::Ramified));
        assert!(enumerate_ring_primes(QuadraticRing::Gauss, 1).is_empty());
    }

    #[test]
    fn ordering_is_by_norm_then_angle() {
        let g = enumerate_ring_primes(QuadraticRing::Gauss, 200);
        for w in g.windows(2) {
            let key = |p: &RingPrime| (p.norm, p.element.angle());
            let (n0, a0) = key(&w[0]);
            let (n1, a1) = key(&w[1]);
            assert!(n0 < n1 || (n0 == n1 && a0 < a1));
        }
    }

    #[test]
    fn split_representatives() {
        assert_eq!(
            split_representation(QuadraticRing::Gauss, 5).unwrap(),
            RingElement::gauss(2, 1)
        );
        assert_eq!(
            split_representation(QuadraticRing::Gauss, 13).unwrap(),
            RingElement::gauss(3, 2)
        );
        assert_eq!(
            split_representation(QuadraticRing::Eisenstein, 7).unwrap(),
            RingElement::eisenstein(3, 1)
        );
        assert!(split_representation(QuadraticRing::Gauss, 7).is_err());
        assert!(split_representation(QuadraticRing::Gauss, 2).is_err());
        assert!(split_representation(QuadraticRing::Eisenstein, 5).is_err());
        for p in [17u64, 29, 37, 41, 101, 9973] {
            let z = split_representation(QuadraticRing::Gauss, p).unwrap();
            assert_eq!(z.norm(), p);
        }
        for p in [13u64, 19, 31, 37, 9967] {
            let z = split_representation(QuadraticRing::Eisenstein, p).unwrap();
            assert_eq!(z.norm(), p);
            assert!(z.a > 0 && z.b > 0);
        }
    }
}
