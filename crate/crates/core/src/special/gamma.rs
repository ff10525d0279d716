use super::dd::Dd;
use crate::arith::BernoulliTable;
use crate::error::{domain, Result};

const SHIFT_TARGET: f64 = 10.0;
const STIRLING_TERMS: usize = 12;
const HALF_LN_2PI: Dd = Dd {
    hi: 0.918_938_533_204_672_8,
    lo: -3.878_294_158_067_241_4e-17,
};

/// `ln Γ(x)` for `x > 0` from the Stirling series, after shifting the
/// argument up to at least 10 with `ln Γ(x) = ln Γ(x+n) - ln Π_{k<n} (x+k)`.
///
/// The shifted argument and the leading terms, which cancel to a few
/// digits for small `x`, are kept in double-double.
pub fn log_gamma(x: f64) -> Result<f64> {
    if !(x > 0.0 && x.is_finite()) {
        return Err(domain(format!("log_gamma needs finite x > 0, got {x}")));
    }
    let shift = (SHIFT_TARGET - x).ceil().max(0.0);
    let mut shift_product = Dd::new(1.0);
    for k in 0..shift as u32 {
        shift_product = shift_product * Dd::sum(x, k as f64);
    }
    let z = Dd::sum(x, shift);
    let bern = BernoulliTable::shared();
    let inv = 1.0 / z.hi;
    let inv2 = inv * inv;
    let mut power = inv;
    let mut series = 0.0;
    for j in 1..=STIRLING_TERMS {
        let k = (2 * j) as f64;
        series += bern.b2j(j) / (k * (k - 1.0)) * power;
        power *= inv2;
    }
    let stirling = (z - 0.5) * z.ln() - z + HALF_LN_2PI + series;
    Ok((stirling - shift_product.ln()).to_f64())
}

#[cfg(test)]
mod tests {
    use std::f64::consts::PI;

    use super::*;

    #[test]
    fn exact_points() {
        assert!(log_gamma(1.0).unwrap().abs() < 1e-14);
        assert!(log_gamma(2.0).unwrap().abs() < 1e-14);
        assert!((log_gamma(0.5).unwrap() - 0.5 * PI.ln()).abs() < 1e-14);
        let fact10: f64 = (1..=10).map(f64::from).product();
        assert!((log_gamma(11.0).unwrap() - fact10.ln()).abs() < 1e-13);
    }

    #[test]
    fn quarter() {
        assert!((log_gamma(0.25).unwrap() - 3.625_609_908_221_908_f64.ln()).abs() < 1e-13);
    }

    #[test]
    fn reflection() {
        for x in [0.25, 1.0 / 3.0, 0.5, 0.1, 0.9] {
            let lhs = log_gamma(x).unwrap() + log_gamma(1.0 - x).unwrap();
            let rhs = (PI / (PI * x).sin()).ln();
            assert!((lhs - rhs).abs() < 1e-12, "x = {x}");
        }
    }

    #[test]
    fn recurrence() {
        for x in [0.01, 0.3, 2.7, 9.5, 42.0] {
            let lhs = log_gamma(x + 1.0).unwrap();
            let rhs = log_gamma(x).unwrap() + f64::ln(x);
            assert!((lhs - rhs).abs() < 1e-12 * lhs.abs().max(1.0), "x = {x}");
        }
    }

    #[test]
    fn domain() {
        assert!(log_gamma(0.0).is_err());
        assert!(log_gamma(-1.5).is_err());
        assert!(log_gamma(f64::INFINITY).is_err());
    }
}
