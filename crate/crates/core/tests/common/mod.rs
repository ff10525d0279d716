//! Independent reference values for the integration tests. Nothing here
//! calls into the library.

#![allow(dead_code, clippy::excessive_precision)]

use std::f64::consts::PI;

pub const CATALAN: f64 = 0.915_965_594_177_219_015;
pub const APERY: f64 = 1.202_056_903_159_594_285;
/// L(2, χ₃), from a 50-digit reference evaluation.
pub const L3_AT_2: f64 = 0.781_302_412_896_486_296_9;

pub fn zeta2() -> f64 {
    PI * PI / 6.0
}

pub fn zeta3() -> f64 {
    APERY
}

/// L(s, χ₄) at s = 2, 3.
pub fn l4(s: u32) -> f64 {
    match s {
        2 => CATALAN,
        3 => PI.powi(3) / 32.0,
        _ => panic!("no reference for L4({s})"),
    }
}

/// L(s, χ₃) at s = 2, 3.
pub fn l3(s: u32) -> f64 {
    match s {
        2 => L3_AT_2,
        3 => 4.0 * PI.powi(3) / (81.0 * 3f64.sqrt()),
        _ => panic!("no reference for L3({s})"),
    }
}

pub fn riemann(s: u32) -> f64 {
    match s {
        2 => zeta2(),
        3 => zeta3(),
        _ => panic!("no reference for zeta({s})"),
    }
}

/// ln Γ(x) for x > 0 by the Lanczos approximation (g = 7, 9 terms) with
/// reflection below 1/2.
pub fn ln_gamma(x: f64) -> f64 {
    const G: f64 = 7.0;
    const C: [f64; 9] = [
        0.999_999_999_999_809_93,
        676.520_368_121_885_1,
        -1_259.139_216_722_402_8,
        771.323_428_777_653_13,
        -176.615_029_162_140_59,
        12.507_343_278_686_905,
        -0.138_571_095_265_720_12,
        9.984_369_578_019_571_6e-6,
        1.505_632_735_149_311_6e-7,
    ];
    assert!(x > 0.0);
    if x < 0.5 {
        return (PI / (PI * x).sin()).ln() - ln_gamma(1.0 - x);
    }
    let x = x - 1.0;
    let mut a = C[0];
    let t = x + G + 0.5;
    for (i, c) in C.iter().enumerate().skip(1) {
        a += c / (x + i as f64);
    }
    0.5 * (2.0 * PI).ln() + (x + 0.5) * t.ln() - t + a.ln()
}

pub fn half_ln_2pi() -> f64 {
    0.5 * (2.0 * PI).ln()
}

/// Kahan–Babuška summation.
pub fn ksum<I: IntoIterator<Item = f64>>(terms: I) -> f64 {
    let mut s = 0.0f64;
    let mut c = 0.0f64;
    for t in terms {
        let n = s + t;
        if s.abs() >= t.abs() {
            c += (s - n) + t;
        } else {
            c += (t - n) + s;
        }
        s = n;
    }
    s + c
}

/// `Σ_{m>=0} (m+x)^{-s}` for s > 1 from `terms` explicit terms and the
/// integral tail, as (midpoint, half-width). The remainder of a
/// decreasing sum lies between `∫_K^∞ f` and `f(K) + ∫_K^∞ f`.
pub fn hurwitz_direct(s: f64, x: f64, terms: u64) -> (f64, f64) {
    assert!(s > 1.0);
    let head = ksum((0..terms).map(|m| (m as f64 + x).powf(-s)));
    let k = terms as f64 + x;
    let integral = k.powf(1.0 - s) / (s - 1.0);
    let fk = k.powf(-s);
    (head + integral + 0.5 * fk, 0.5 * fk + 1e-15 * head)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub fn primes_up_to(n: u64) -> Vec<u64> {
    let mut composite = vec![false; n as usize + 1];
    let mut out = Vec::new();
    for p in 2..=n as usize {
        if !composite[p] {
            out.push(p as u64);
            let mut q = p * p;
            while q <= n as usize {
                composite[q] = true;
                q += p;
            }
        }
    }
    out
}

pub fn mobius(mut n: u64) -> i64 {
    let mut result = 1;
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            n /= d;
            if n.is_multiple_of(d) {
                return 0;
            }
            result = -result;
        }
        d += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// Reference arithmetic in ℤ[i] (`eisenstein = false`) or ℤ[ω].
#[derive(Debug, Clone, Copy)]
pub struct Ring {
    pub eisenstein: bool,
}

impl Ring {
    pub const GAUSS: Ring = Ring { eisenstein: false };
    pub const EISENSTEIN: Ring = Ring { eisenstein: true };

    pub fn units(self) -> u64 {
        if self.eisenstein {
            6
        } else {
            4
        }
    }

    /// Complex embedding, ω = (-1 + i√3)/2.
    pub fn embed(self, a: i64, b: i64) -> (f64, f64) {
        if self.eisenstein {
            (a as f64 - 0.5 * b as f64, b as f64 * 3f64.sqrt() / 2.0)
        } else {
            (a as f64, b as f64)
        }
    }

    /// Squared absolute value of the embedding, rounded.
    pub fn norm(self, a: i64, b: i64) -> u64 {
        let (x, y) = self.embed(a, b);
        (x * x + y * y).round() as u64
    }

    fn to_lattice(self, x: f64, y: f64) -> (i64, i64) {
        if self.eisenstein {
            let b = (y / (3f64.sqrt() / 2.0)).round();
            let a = (x + 0.5 * b).round();
            (a as i64, b as i64)
        } else {
            (x.round() as i64, y.round() as i64)
        }
    }

    /// Product via the complex embedding, rounded back to the lattice.
    pub fn mul(self, z: (i64, i64), w: (i64, i64)) -> (i64, i64) {
        let (zx, zy) = self.embed(z.0, z.1);
        let (wx, wy) = self.embed(w.0, w.1);
        self.to_lattice(zx * wx - zy * wy, zx * wy + zy * wx)
    }

    /// `z / w` when it lies in the ring.
    pub fn div(self, z: (i64, i64), w: (i64, i64)) -> Option<(i64, i64)> {
        let (zx, zy) = self.embed(z.0, z.1);
        let (wx, wy) = self.embed(w.0, w.1);
        let d = wx * wx + wy * wy;
        let q = self.to_lattice((zx * wx + zy * wy) / d, (zy * wx - zx * wy) / d);
        (self.mul(q, w) == z).then_some(q)
    }

    /// Every nonzero element with norm at most `max_norm`.
    pub fn elements(self, max_norm: u64) -> Vec<(i64, i64)> {
        let r = (2.0 * (max_norm as f64).sqrt()).ceil() as i64 + 1;
        let mut out = Vec::new();
        for a in -r..=r {
            for b in -r..=r {
                let n = self.norm(a, b);
                if n > 0 && n <= max_norm {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Irreducible: not a unit and no factorization into two non-units.
    pub fn irreducible(self, z: (i64, i64)) -> bool {
        let n = self.norm(z.0, z.1);
        if n <= 1 {
            return false;
        }
        for w in self.elements(n - 1) {
            let m = self.norm(w.0, w.1);
            if m > 1 && n.is_multiple_of(m) && self.div(z, w).is_some() {
                return false;
            }
        }
        true
    }
}

/// Exact `1/k!`.
pub fn inverse_factorial(k: u32) -> num_rational::BigRational {
    use num_bigint::BigInt;
    let mut f = BigInt::from(1);
    for i in 2..=k {
        f *= i;
    }
    num_rational::BigRational::new(BigInt::from(1), f)
}
