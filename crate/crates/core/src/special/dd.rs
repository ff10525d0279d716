//! Minimal double-double arithmetic (value = hi + lo, |lo| <= ulp(hi)/2).
//!
//! Only what the Euler–Maclaurin sums need: the direct powers cancel
//! against the pole term for s < 1, and plain binary64 powers leave
//! rounding noise that swamps finite-difference checks.

use std::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub(crate) struct Dd {
    pub hi: f64,
    pub lo: f64,
}

const LN2: Dd = Dd {
    hi: std::f64::consts::LN_2,
    lo: 2.319_046_813_846_299_6e-17,
};

fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };

    pub fn new(x: f64) -> Self {
        Dd { hi: x, lo: 0.0 }
    }

    /// `a + b` without rounding.
    pub fn sum(a: f64, b: f64) -> Self {
        let (hi, lo) = two_sum(a, b);
        Dd { hi, lo }
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    /// `e^self`, accurate to a few units in 2^-104 for |self| < 700.
    pub fn exp(self) -> Dd {
        if self.hi > 709.0 {
            return Dd::new(f64::INFINITY);
        }
        if self.hi < -745.0 {
            return Dd::ZERO;
        }
        let k = (self.hi / LN2.hi).round();
        let r = self - LN2 * k;
        // e^r = (e^{r/2^10})^{2^10}, squared in the form (1+m)^2 - 1 = m(m+2)
        // so that the leading 1 does not eat the low-order bits
        let r = r * (1.0 / 1024.0);
        let mut term = r;
        let mut m = r;
        for n in 2..=14 {
            term = term * r / n as f64;
            m = m + term;
            if term.hi.abs() < 1e-36 {
                break;
            }
        }
        for _ in 0..10 {
            m = m * (m + 2.0);
        }
        let sum = m + 1.0;
        let scale = 2f64.powi(k as i32);
        Dd {
            hi: sum.hi * scale,
            lo: sum.lo * scale,
        }
    }

    /// Natural log of a positive finite value, by one Newton step on `exp`.
    pub fn ln(self) -> Dd {
        debug_assert!(self.hi > 0.0 && self.hi.is_finite());
        let y = Dd::new(self.hi.ln());
        // y + x e^{-y} - 1
        y + (self * (-y).exp() - 1.0)
    }
}

impl Add for Dd {
    type Output = Dd;
    fn add(self, o: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, o.hi);
        let (t, f) = two_sum(self.lo, o.lo);
        let (s, e) = quick_two_sum(s, e + t);
        let (hi, lo) = quick_two_sum(s, e + f);
        Dd { hi, lo }
    }
}

impl Add<f64> for Dd {
    type Output = Dd;
    fn add(self, o: f64) -> Dd {
        self + Dd::new(o)
    }
}

impl Sub for Dd {
    type Output = Dd;
    fn sub(self, o: Dd) -> Dd {
        self + (-o)
    }
}

impl Sub<f64> for Dd {
    type Output = Dd;
    fn sub(self, o: f64) -> Dd {
        self + Dd::new(-o)
    }
}

impl Neg for Dd {
    type Output = Dd;
    fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }
}

impl Mul for Dd {
    type Output = Dd;
    fn mul(self, o: Dd) -> Dd {
        let p = self.hi * o.hi;
        let e = self.hi.mul_add(o.hi, -p);
        let e = e + (self.hi * o.lo + self.lo * o.hi);
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }
}

impl Mul<f64> for Dd {
    type Output = Dd;
    fn mul(self, o: f64) -> Dd {
        self * Dd::new(o)
    }
}

impl Div<f64> for Dd {
    type Output = Dd;
    fn div(self, o: f64) -> Dd {
        let q1 = self.hi / o;
        let r = self - Dd::new(o) * q1;
        let q2 = r.hi / o;
        let r = r - Dd::new(o) * q2;
        let q3 = r.hi / o;
        let (hi, lo) = quick_two_sum(q1, q2);
        Dd { hi, lo } + q3
    }
}

impl Div for Dd {
    type Output = Dd;
    fn div(self, o: Dd) -> Dd {
        let q1 = self.hi / o.hi;
        let r = self - o * q1;
        let q2 = r.hi / o.hi;
        let r = r - o * q2;
        let q3 = r.hi / o.hi;
        let (hi, lo) = quick_two_sum(q1, q2);
        Dd { hi, lo } + q3
    }
}

impl std::iter::Sum for Dd {
    fn sum<I: Iterator<Item = Dd>>(iter: I) -> Dd {
        iter.fold(Dd::ZERO, |a, b| a + b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: Dd, hi: f64, lo: f64, tol: f64) -> bool {
        ((a.hi - hi) + (a.lo - lo)).abs() <= tol * hi.abs()
    }

    #[test]
    fn exp_and_ln_constants() {
        // e = 2.718281828459045 + 1.4456468917292502e-16
        assert!(close(
            Dd::new(1.0).exp(),
            std::f64::consts::E,
            1.4456468917292502e-16,
            1e-30
        ));
        // ln 10 = 2.302585092994046 - 2.1707562233822494e-16
        assert!(close(
            Dd::new(10.0).ln(),
            std::f64::consts::LN_10,
            -2.1707562233822494e-16,
            1e-30
        ));
        assert!(close(Dd::new(2.0).ln(), LN2.hi, LN2.lo, 1e-31));
    }

    #[test]
    fn roundtrip() {
        for x in [1e-8, 0.3, 1.0, 7.5, 1234.5, 1e200] {
            let back = Dd::new(x).ln().exp();
            let err = ((back.hi - x) + back.lo).abs() / x;
            assert!(err <= 2e-30 * x.ln().abs().max(1.0), "{x}: {err:e}");
        }
    }

    #[test]
    fn division_recovers_product() {
        let a = Dd::new(1.0) / 3.0;
        let b = a * 3.0 - 1.0;
        assert!(b.to_f64().abs() < 1e-31);
        let c = Dd::new(1.0) / Dd::sum(3.0, 1e-20);
        let d = c * Dd::sum(3.0, 1e-20) - 1.0;
        assert!(d.to_f64().abs() < 1e-31);
    }
}
