use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::error::{usage, Result};

/// Largest even index kept in the shared table.
pub const MAX_BERNOULLI_ORDER: usize = 60;

/// Even-index Bernoulli numbers `B₂ … B_{2J}`, exact and as `f64`.
#[derive(Debug, Clone)]
pub struct BernoulliTable {
    exact: Vec<BigRational>,
    float: Vec<f64>,
}

impl BernoulliTable {
    /// Table through `B_{max_order}` from `Σ_{k<=n} C(n+1,k) B_k = 0`.
    pub fn new(max_order: usize) -> Self {
        let mut all: Vec<BigRational> = Vec::with_capacity(max_order + 1);
        all.push(BigRational::from_integer(BigInt::from(1)));
        for n in 1..=max_order {
            // binomial row C(n+1, k) built incrementally
            let mut binom = BigInt::from(1);
            let mut acc = BigRational::zero();
            for (k, b) in all.iter().enumerate() {
                acc += b * BigRational::from_integer(binom.clone());
                binom = binom * BigInt::from(n + 1 - k) / BigInt::from(k + 1);
            }
            // binom is now C(n+1, n) = n+1
            all.push(-acc / BigRational::from_integer(binom));
        }
        let exact: Vec<BigRational> = all.into_iter().skip(2).step_by(2).collect();
        let float = exact
            .iter()
            .map(|r| r.to_f64().expect("Bernoulli numbers are finite"))
            .collect();
        Self { exact, float }
    }

    pub fn shared() -> &'static BernoulliTable {
        static TABLE: OnceLock<BernoulliTable> = OnceLock::new();
        TABLE.get_or_init(|| BernoulliTable::new(MAX_BERNOULLI_ORDER))
    }

    pub fn max_order(&self) -> usize {
        2 * self.exact.len()
    }

    /// `B_order`, for even `order` in `2..=max_order`.
    pub fn exact(&self, order: usize) -> Result<&BigRational> {
        self.index(order).map(|i| &self.exact[i])
    }

    pub fn float(&self, order: usize) -> Result<f64> {
        self.index(order).map(|i| self.float[i])
    }

    /// `B_{2j}` as `f64` for `j >= 1`; panics past the table.
    pub(crate) fn b2j(&self, j: usize) -> f64 {
        self.float[j - 1]
    }

    fn index(&self, order: usize) -> Result<usize> {
        if !order.is_multiple_of(2) || order < 2 || order > self.max_order() {
            return Err(usage(format!(
                "Bernoulli order must be even in 2..={}, got {order}",
                self.max_order()
            )));
        }
        Ok(order / 2 - 1)
    }
}

/// Exact `B_order` from the shared table.
pub fn bernoulli(order: usize) -> Result<BigRational> {
    BernoulliTable::shared().exact(order).cloned()
}

pub fn bernoulli_f64(order: usize) -> Result<f64> {
    BernoulliTable::shared().float(order)
}
