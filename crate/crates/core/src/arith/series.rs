use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::SieveTables;
use crate::error::{usage, Result};

/// Formal power series `c₀ + c₁x + … + c_N x^N + O(x^{N+1})` with exact
/// rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalSeries {
    coeffs: Vec<BigRational>,
}

fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl RationalSeries {
    /// Pads or truncates `coeffs` to `order + 1` entries.
    pub fn new(mut coeffs: Vec<BigRational>, order: usize) -> Self {
        coeffs.resize(order + 1, BigRational::zero());
        Self { coeffs }
    }

    pub fn one(order: usize) -> Self {
        Self::new(vec![BigRational::one()], order)
    }

    /// The polynomial `1 - x^n`, truncated at `order`.
    pub fn one_minus_power(n: usize, order: usize) -> Self {
        let mut s = Self::one(order);
        if n <= order {
            s.coeffs[n] = -BigRational::one();
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &BigRational {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn scale(&self, factor: &BigRational) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    /// `exp(self)`; requires a zero constant term.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(usage("exp of a series needs a zero constant term"));
        }
        // g = exp(f): n g_n = Σ_{k=1}^{n} k f_k g_{n-k}
        let n_max = self.order();
        let mut g = vec![BigRational::zero(); n_max + 1];
        g[0] = BigRational::one();
        for n in 1..=n_max {
            let mut acc = BigRational::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    acc += &self.coeffs[k] * &g[n - k] * int(k as i64);
                }
            }
            g[n] = acc / int(n as i64);
        }
        Ok(Self { coeffs: g })
    }

    /// `log(self)`; requires constant term 1.
    pub fn log(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(usage("log of a series needs constant term 1"));
        }
        // f = log g: n f_n = n g_n - Σ_{k=1}^{n-1} k f_k g_{n-k}
        let n_max = self.order();
        let mut f = vec![BigRational::zero(); n_max + 1];
        for n in 1..=n_max {
            let mut acc = &self.coeffs[n] * int(n as i64);
            for (k, fk) in f.iter().enumerate().take(n).skip(1) {
                if !fk.is_zero() && !self.coeffs[n - k].is_zero() {
                    acc -= fk * &self.coeffs[n - k] * int(k as i64);
                }
            }
            f[n] = acc / int(n as i64);
        }
        Ok(Self { coeffs: f })
    }

    /// `self^exponent` as `exp(exponent · log(self))`; requires constant term 1.
    pub fn pow_rational(&self, exponent: &BigRational) -> Result<Self> {
        self.log()?.scale(exponent).exp()
    }
}

impl Add for &RationalSeries {
    type Output = RationalSeries;

    fn add(self, rhs: &RationalSeries) -> RationalSeries {
        let order = self.order().min(rhs.order());
        RationalSeries {
            coeffs: (0..=order)
                .map(|k| &self.coeffs[k] + &rhs.coeffs[k])
                .collect(),
        }
    }
}

impl Mul for &RationalSeries {
    type Output = RationalSeries;

    fn mul(self, rhs: &RationalSeries) -> RationalSeries {
        let order = self.order().min(rhs.order());
        let mut out = vec![BigRational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        RationalSeries { coeffs: out }
    }
}

/// `Σ x^k / k!` through `order`.
pub fn exp_series(order: usize) -> RationalSeries {
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut term = BigRational::one();
    coeffs.push(term.clone());
    for k in 1..=order {
        term /= int(k as i64);
        coeffs.push(term.clone());
    }
    RationalSeries { coeffs }
}

/// `∏_{n<=order} (1 - x^n)^{-μ(n)/n}` through `x^order`.
pub fn artin_hasse_series(order: usize, tables: &SieveTables) -> Result<RationalSeries> {
    if order > tables.limit() {
        return Err(usage(format!(
            "Artin-Hasse order {order} exceeds sieve limit {}",
            tables.limit()
        )));
    }
    let mut product = RationalSeries::one(order);
    for n in 1..=order {
        let mu = tables.mobius(n);
        if mu == 0 {
            continue;
        }
        let exponent = BigRational::new(BigInt::from(-mu), BigInt::from(n));
        let factor = RationalSeries::one_minus_power(n, order).pow_rational(&exponent)?;
        product = &product * &factor;
    }
    Ok(product)
}
