//! Hurwitz zeta `ζ(s, x) = Σ_{m>=0} (m + x)^{-s}` continued to all real
//! `s != 1` by Euler–Maclaurin summation:
//!
//! ```text
//! ζ(s, x) = Σ_{m<M} (m+x)^{-s} + N^{1-s}/(s-1) + N^{-s}/2
//!         + Σ_{j=1}^{J} B_{2j}/(2j)! · (s)_{2j-1} · N^{-s-2j+1},   N = M + x
//! ```
//!
//! The s-derivative differentiates every term in closed form; the
//! Pochhammer factors carry their derivatives through the running product.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

use super::dd::Dd;
use super::eval::{EvalResult, Truncation};
use crate::arith::BernoulliTable;
use crate::error::{domain, Error, Result};

const POLE_GUARD: f64 = 1e-8;

/// Euler–Maclaurin parameters.
///
/// The explicit sum stops at the smallest `M` with
/// `M + x >= max(min_shift, |s| + 10)`; `terms` Bernoulli corrections follow.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EulerMaclaurin {
    pub min_shift: f64,
    pub terms: usize,
}

impl Default for EulerMaclaurin {
    fn default() -> Self {
        Self {
            min_shift: 15.0,
            terms: 15,
        }
    }
}

impl EulerMaclaurin {
    pub fn with_min_shift(min_shift: f64) -> Self {
        Self {
            min_shift,
            ..Self::default()
        }
    }

    fn cutoff(&self, s: f64, x: f64) -> u64 {
        let target = self.min_shift.max(s.abs() + 10.0);
        (target - x).ceil().max(0.0) as u64
    }

    fn check(&self) -> Result<()> {
        // one extra coefficient is needed for the tail estimate
        let max = BernoulliTable::shared().max_order() / 2 - 1;
        if self.terms == 0 || self.terms > max {
            return Err(Error::Usage(format!(
                "Euler-Maclaurin terms must be in 1..={max}, got {}",
                self.terms
            )));
        }
        if !(self.min_shift.is_finite() && self.min_shift >= 1.0) {
            return Err(Error::Usage(format!(
                "Euler-Maclaurin min_shift must be >= 1, got {}",
                self.min_shift
            )));
        }
        Ok(())
    }
}

/// Everything but the pole term `N^{1-s}/(s-1)`, with derivatives.
///
/// Values and derivatives are carried in double-double: for `s < 1` the
/// direct sum cancels against the pole term and binary64 powers would leave
/// rounding noise far above the truncation error.
struct Parts {
    value: Dd,
    deriv: Dd,
    tail: f64,
    tail_deriv: f64,
}

fn check_args(s: f64, x: f64) -> Result<()> {
    if !s.is_finite() {
        return Err(domain(format!("s must be finite, got {s}")));
    }
    if !(x > 0.0 && x.is_finite()) {
        return Err(domain(format!("Hurwitz zeta needs x > 0, got {x}")));
    }
    Ok(())
}

/// `B_{2j}/(2j)!` for `j = 1, 2, ...`, rounded from the exact rationals.
fn correction_coefficients() -> &'static [Dd] {
    static COEFFS: OnceLock<Vec<Dd>> = OnceLock::new();
    COEFFS.get_or_init(|| {
        let table = BernoulliTable::shared();
        let mut factorial = BigInt::one();
        (1..=table.max_order() / 2)
            .map(|j| {
                factorial *= BigInt::from((2 * j - 1) * 2 * j);
                let b = table.exact(2 * j).expect("order within table");
                let r = b / BigRational::from_integer(factorial.clone());
                let hi = r.to_f64().expect("finite");
                let rest = r - BigRational::from_float(hi).expect("finite");
                Dd::sum(hi, rest.to_f64().expect("finite"))
            })
            .collect()
    })
}

fn regular_parts(s: f64, x: f64, cutoff: u64, terms: usize) -> Parts {
    let mut value = Dd::ZERO;
    let mut deriv = Dd::ZERO;
    for m in 0..cutoff {
        let ln_t = Dd::sum(m as f64, x).ln();
        let p = (ln_t * -s).exp();
        value = value + p;
        deriv = deriv - ln_t * p;
    }

    let n = Dd::sum(cutoff as f64, x);
    let ln_n = n.ln();
    let n_pow = (ln_n * -s).exp(); // N^{-s}
    value = value + n_pow * 0.5;
    deriv = deriv - ln_n * n_pow * 0.5;

    // P_j = (s)_{2j-1}; P_1 = s
    let mut poch = Dd::new(s);
    let mut poch_d = Dd::new(1.0);
    let mut power = n_pow / n; // N^{-s-2j+1}, j = 1
    let mut tail = 0.0;
    let mut tail_d = 0.0;
    let coeffs = correction_coefficients();
    for (i, &c) in coeffs.iter().enumerate().take(terms + 1) {
        let j = i + 1;
        let term = c * poch * power;
        let term_d = c * (poch_d - ln_n * poch) * power;
        if j <= terms {
            value = value + term;
            deriv = deriv + term_d;
        } else {
            tail = term.hi.abs();
            tail_d = term_d.hi.abs();
        }
        let k = (2 * j) as f64;
        // multiply by (s + 2j - 1)(s + 2j)
        for a in [Dd::sum(s, k - 1.0), Dd::sum(s, k)] {
            poch_d = poch_d * a + poch;
            poch = poch * a;
        }
        power = power / n / n;
    }

    Parts {
        value,
        deriv,
        tail,
        tail_deriv: tail_d,
    }
}

fn hurwitz_pair(s: f64, x: f64, em: &EulerMaclaurin) -> Result<(EvalResult, EvalResult)> {
    check_args(s, x)?;
    em.check()?;
    if (s - 1.0).abs() < POLE_GUARD {
        return Err(Error::Pole(s));
    }
    let cutoff = em.cutoff(s, x);
    let parts = regular_parts(s, x, cutoff, em.terms);
    let ln_n = Dd::sum(cutoff as f64, x).ln();
    // 1 - s is formed exactly; its rounding would otherwise jump when s
    // crosses a binade
    let one_minus_s = Dd::sum(1.0, -s);
    // pole = N^{1-s}/(s-1), d/ds pole = -ln N · pole + pole/(1-s)
    let pole = -((ln_n * one_minus_s).exp() / one_minus_s);
    let pole_d = pole / one_minus_s - ln_n * pole;
    let params = Truncation::EulerMaclaurin {
        cutoff,
        terms: em.terms,
    };
    Ok((
        EvalResult::new((parts.value + pole).to_f64(), parts.tail, params.clone()),
        EvalResult::new((parts.deriv + pole_d).to_f64(), parts.tail_deriv, params),
    ))
}

/// `ζ(s, x)` for `x > 0`, `|s - 1| >= 1e-8`.
pub fn hurwitz_zeta(s: f64, x: f64) -> Result<EvalResult> {
    hurwitz_zeta_with(s, x, &EulerMaclaurin::default())
}

pub fn hurwitz_zeta_with(s: f64, x: f64, em: &EulerMaclaurin) -> Result<EvalResult> {
    hurwitz_pair(s, x, em).map(|(v, _)| v)
}

/// `∂ζ(s, x)/∂s`.
pub fn hurwitz_zeta_ds(s: f64, x: f64) -> Result<EvalResult> {
    hurwitz_zeta_ds_with(s, x, &EulerMaclaurin::default())
}

pub fn hurwitz_zeta_ds_with(s: f64, x: f64, em: &EulerMaclaurin) -> Result<EvalResult> {
    hurwitz_pair(s, x, em).map(|(_, d)| d)
}

pub fn riemann_zeta(s: f64) -> Result<EvalResult> {
    hurwitz_zeta(s, 1.0)
}

pub fn riemann_zeta_with(s: f64, em: &EulerMaclaurin) -> Result<EvalResult> {
    hurwitz_zeta_with(s, 1.0, em)
}

pub fn riemann_zeta_ds(s: f64) -> Result<EvalResult> {
    hurwitz_zeta_ds(s, 1.0)
}

pub fn riemann_zeta_ds_with(s: f64, em: &EulerMaclaurin) -> Result<EvalResult> {
    hurwitz_zeta_ds_with(s, 1.0, em)
}

/// `h(u) = (A^u - B^u)/u` and `h'(u)`, finite at `u = 0`.
fn pole_difference(ln_a: Dd, ln_b: Dd, u: Dd) -> (Dd, Dd) {
    if u.hi.abs() < 0.5 {
        // h(u) = Σ_k c_k u^k,  c_k = (ln^{k+1}A - ln^{k+1}B)/(k+1)!
        let mut pa = ln_a;
        let mut pb = ln_b;
        let mut fact = 1.0;
        let mut uk = Dd::new(1.0); // u^k
        let mut uk1 = Dd::ZERO; // u^{k-1}
        let mut h = Dd::ZERO;
        let mut hd = Dd::ZERO;
        for k in 0..60 {
            let c = (pa - pb) / fact;
            h = h + c * uk;
            hd = hd + c * uk1 * k as f64;
            pa = pa * ln_a;
            pb = pb * ln_b;
            fact *= (k + 2) as f64;
            uk1 = uk;
            uk = uk * u;
        }
        (h, hd)
    } else {
        let au = (ln_a * u).exp();
        let bu = (ln_b * u).exp();
        let h = (au - bu) / u;
        // h' = ((ln A · A^u - ln B · B^u) - h)/u
        let hd = (ln_a * au - ln_b * bu - h) / u;
        (h, hd)
    }
}

fn difference_pair(
    s: f64,
    a: f64,
    b: f64,
    em: &EulerMaclaurin,
) -> Result<(EvalResult, EvalResult)> {
    check_args(s, a)?;
    check_args(s, b)?;
    em.check()?;
    let cutoff = em.cutoff(s, a).max(em.cutoff(s, b));
    let pa = regular_parts(s, a, cutoff, em.terms);
    let pb = regular_parts(s, b, cutoff, em.terms);
    let ln_a = Dd::sum(cutoff as f64, a).ln();
    let ln_b = Dd::sum(cutoff as f64, b).ln();
    // N_a^{1-s}/(s-1) - N_b^{1-s}/(s-1) = -h(1-s); d/ds = h'(1-s)
    let (h, hd) = pole_difference(ln_a, ln_b, Dd::sum(1.0, -s));
    let params = Truncation::EulerMaclaurin {
        cutoff,
        terms: em.terms,
    };
    Ok((
        EvalResult::new(
            (pa.value - pb.value - h).to_f64(),
            pa.tail + pb.tail,
            params.clone(),
        ),
        EvalResult::new(
            (pa.deriv - pb.deriv + hd).to_f64(),
            pa.tail_deriv + pb.tail_deriv,
            params,
        ),
    ))
}

/// `ζ(s, a) - ζ(s, b)`, entire in `s`: the two poles at `s = 1` cancel.
pub fn hurwitz_difference(s: f64, a: f64, b: f64, em: &EulerMaclaurin) -> Result<EvalResult> {
    difference_pair(s, a, b, em).map(|(v, _)| v)
}

/// `∂/∂s [ζ(s, a) - ζ(s, b)]`.
pub fn hurwitz_difference_ds(s: f64, a: f64, b: f64, em: &EulerMaclaurin) -> Result<EvalResult> {
    difference_pair(s, a, b, em).map(|(_, d)| d)
}
