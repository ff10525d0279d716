use serde::Serialize;

/// Truncation parameters that produced an [`EvalResult`].
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Truncation {
    /// Euler–Maclaurin with `cutoff` explicit terms and `terms` Bernoulli corrections.
    EulerMaclaurin { cutoff: u64, terms: usize },
    /// Truncated sum or product over indices (or primes, or norms) up to `cutoff`.
    Series { cutoff: u64 },
    /// Lattice sum over `0 < norm <= radius²`.
    Lattice { radius: u64 },
    /// Value assembled from several independently truncated parts.
    Composite { parts: Vec<Truncation> },
}

impl Truncation {
    pub(crate) fn composite(parts: impl IntoIterator<Item = Truncation>) -> Self {
        let mut flat = Vec::new();
        for p in parts {
            match p {
                Truncation::Composite { parts } => flat.extend(parts),
                other => flat.push(other),
            }
        }
        flat.dedup();
        if flat.len() == 1 {
            flat.pop().unwrap()
        } else {
            Truncation::Composite { parts: flat }
        }
    }
}

/// A numeric value with an estimate of its truncation error.
///
/// `tail_bound` is never negative.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EvalResult {
    pub value: f64,
    pub tail_bound: f64,
    pub params: Truncation,
}

impl EvalResult {
    pub fn new(value: f64, tail_bound: f64, params: Truncation) -> Self {
        debug_assert!(tail_bound >= 0.0 || tail_bound.is_nan());
        Self {
            value,
            tail_bound: tail_bound.abs(),
            params,
        }
    }

    /// Interval check `|value - other| <= tail_bound + slack`.
    pub fn agrees_with(&self, other: f64, slack: f64) -> bool {
        (self.value - other).abs() <= self.tail_bound + slack
    }

    pub(crate) fn scaled(self, factor: f64) -> Self {
        Self {
            value: self.value * factor,
            tail_bound: self.tail_bound * factor.abs(),
            params: self.params,
        }
    }

    /// Product with worst-case propagation of both tails.
    pub(crate) fn times(&self, rhs: &EvalResult) -> Self {
        let value = self.value * rhs.value;
        let tail = (self.value.abs() + self.tail_bound) * (rhs.value.abs() + rhs.tail_bound)
            - (self.value * rhs.value).abs();
        Self::new(
            value,
            tail.max(0.0),
            Truncation::composite([self.params.clone(), rhs.params.clone()]),
        )
    }

    /// Quotient; infinite tail if the divisor interval contains zero.
    pub(crate) fn divided_by(&self, rhs: &EvalResult) -> Self {
        let value = self.value / rhs.value;
        let lo = rhs.value.abs() - rhs.tail_bound;
        let tail = if lo > 0.0 {
            (self.value.abs() + self.tail_bound) / lo - value.abs()
        } else {
            f64::INFINITY
        };
        Self::new(
            value,
            tail.max(0.0),
            Truncation::composite([self.params.clone(), rhs.params.clone()]),
        )
    }

    pub(crate) fn powi(&self, n: i32) -> Self {
        let value = self.value.powi(n);
        let tail = (self.value.abs() + self.tail_bound).powi(n) - value.abs();
        Self::new(value, tail.max(0.0), self.params.clone())
    }
}

/// Compensated (Neumaier) summation in iteration order.
pub(crate) fn neumaier_sum(values: impl IntoIterator<Item = f64>) -> f64 {
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    for v in values {
        let t = sum + v;
        if sum.abs() >= v.abs() {
            comp += (sum - t) + v;
        } else {
            comp += (v - t) + sum;
        }
        sum = t;
    }
    sum + comp
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn neumaier_recovers_small_terms() {
        let s = neumaier_sum([1.0, 1e100, 1.0, -1e100]);
        assert_eq!(s, 2.0);
    }

    #[test]
    fn product_tail_contains_perturbed_product() {
        let a = EvalResult::new(2.0, 0.1, Truncation::Series { cutoff: 10 });
        let b = EvalResult::new(-3.0, 0.2, Truncation::Series { cutoff: 10 });
        let p = a.times(&b);
        assert_eq!(p.params, Truncation::Series { cutoff: 10 });
        for (da, db) in [(0.1, 0.2), (-0.1, 0.2), (0.1, -0.2), (-0.1, -0.2)] {
            assert!(((2.0 + da) * (-3.0 + db) - p.value).abs() <= p.tail_bound + 1e-15);
        }
        let q = a.divided_by(&b);
        for (da, db) in [(0.1, 0.2), (-0.1, 0.2), (0.1, -0.2), (-0.1, -0.2)] {
            assert!(((2.0 + da) / (-3.0 + db) - q.value).abs() <= q.tail_bound + 1e-15);
        }
        let z = EvalResult::new(0.1, 0.2, Truncation::Series { cutoff: 1 });
        assert!(a.divided_by(&z).tail_bound.is_infinite());
    }

    #[test]
    fn composite_flattens() {
        let t = Truncation::composite([
            Truncation::Series { cutoff: 1 },
            Truncation::composite([
                Truncation::Series { cutoff: 2 },
                Truncation::Lattice { radius: 3 },
            ]),
        ]);
        match t {
            Truncation::Composite { parts } => assert_eq!(parts.len(), 3),
            _ => panic!("expected composite"),
        }
    }
}
