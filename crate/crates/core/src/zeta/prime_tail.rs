//! Tails `Σ_{p > c} p^{-s}` of prime sums, bracketed with explicit bounds on
//! the prime-counting function:
//!
//! ```text
//! (x/ln x)(1 + 1/ln x) <= π(x)   for x >= 599
//! π(x) <= (x/ln x)(1 + 1.2762/ln x)   for x > 1
//! ```
//!
//! Partial summation gives `Σ_{p>c} p^{-s} = -π(c)c^{-s} + s∫_c^∞ π(x) x^{-s-1} dx`,
//! and the two integrals that appear reduce to the exponential integral `E₁`.

use crate::arith::SieveTables;

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
const UPPER_COEFF: f64 = 1.2762;
const LOWER_COEFF: f64 = 1.0;
const LOWER_VALID_FROM: u64 = 599;

/// Exponential integral `E₁(x) = ∫_x^∞ e^{-t}/t dt` for `x > 0`.
pub fn exp_integral_e1(x: f64) -> f64 {
    assert!(x > 0.0, "E1 needs x > 0, got {x}");
    if x <= 1.0 {
        let mut sum = 0.0;
        let mut term = 1.0;
        for k in 1..60 {
            term *= -x / k as f64;
            let add = -term / k as f64;
            sum += add;
            if add.abs() < 1e-18 * sum.abs() {
                break;
            }
        }
        -EULER_GAMMA - x.ln() + sum
    } else {
        // modified Lentz on the continued fraction
        let tiny = 1e-300;
        let mut b = x + 1.0;
        let mut c = 1.0 / tiny;
        let mut d = 1.0 / b;
        let mut h = d;
        for i in 1..10_000 {
            let an = -((i * i) as f64);
            b += 2.0;
            d = 1.0 / (an * d + b);
            c = b + an / c;
            let del = c * d;
            h *= del;
            if (del - 1.0).abs() < 1e-16 {
                break;
            }
        }
        h * (-x).exp()
    }
}

/// Bracket for `Σ_{p > cutoff} p^{-s}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PrimeTail {
    pub lower: f64,
    pub upper: f64,
}

impl PrimeTail {
    pub fn midpoint(&self) -> f64 {
        0.5 * (self.lower + self.upper)
    }

    pub fn half_width(&self) -> f64 {
        0.5 * (self.upper - self.lower)
    }
}

/// Bracket for the prime tail beyond `cutoff`; needs `s > 1` and
/// `cutoff <= sieve.limit()`.
pub fn prime_sum_tail(s: f64, cutoff: u64, sieve: &SieveTables) -> PrimeTail {
    assert!(s > 1.0);
    assert!(cutoff as usize <= sieve.limit());
    if cutoff < 2 {
        // every prime; Σ_{n>=2} n^{-s} <= 2^{-s}(1 + 2/(s-1))
        let upper = 2f64.powf(-s) * (1.0 + 2.0 / (s - 1.0));
        return PrimeTail {
            lower: 2f64.powf(-s),
            upper,
        };
    }
    let c = cutoff as f64;
    let ln_c = c.ln();
    let a = s - 1.0;
    let e1 = exp_integral_e1(a * ln_c);
    // ∫_c^∞ x^{-s}/ln x dx and ∫_c^∞ x^{-s}/ln² x dx
    let i1 = e1;
    let i2 = (-a * ln_c).exp() / ln_c - a * e1;
    let boundary = sieve.prime_count(cutoff as usize) as f64 * c.powf(-s);
    let upper = -boundary + s * (i1 + UPPER_COEFF * i2);
    let lower = if cutoff >= LOWER_VALID_FROM {
        (-boundary + s * (i1 + LOWER_COEFF * i2)).max(0.0)
    } else {
        0.0
    };
    PrimeTail {
        lower,
        upper: upper.max(lower),
    }
}
