//! Named identity suites: each check compares two independent routes (or a
//! route and a closed form) and passes iff the residual is within tolerance.

use std::f64::consts::PI;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::arith::{artin_hasse_series, build_sieve, exp_series, SieveTables};
use crate::error::{usage, Result};
use crate::regularization::{power_identity_check_with, POWER_IDENTITY_TOLERANCE};
use crate::rings::QuadraticRing;
use crate::special::{
    hurwitz_zeta, hurwitz_zeta_ds, log_gamma, riemann_zeta, riemann_zeta_ds, EvalResult,
};
use crate::zeta::{
    bold_z_closed, bold_z_product, dedekind_zeta, dedekind_zeta_ds, dedekind_zeta_lattice,
    dirichlet_l, dirichlet_l_ds, euler_product_zeta, l_euler_product, partial_prime_zeta,
    prime_zeta_direct, prime_zeta_mobius, RingKind,
};

pub const LATTICE_RADIUS: u64 = 300;
pub const PRIME_CUTOFF: u64 = 100_000;
pub const PRIME_ZETA_CUTOFF: u64 = 1_000_000;
pub const MOBIUS_TERMS: u64 = 40;
pub const BOLD_Z_NORM_CUTOFF: u64 = 100_000;
pub const ARTIN_HASSE_ORDER: usize = 30;
pub const SPECIAL_VALUE_TOLERANCE: f64 = 1e-10;
pub const LERCH_TOLERANCE: f64 = 1e-10;
pub const L_EULER_TOLERANCE_S2: f64 = 1e-4;
pub const PRIME_ZETA_TOLERANCE: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    EulerProduct,
    Factorization,
    PartialZeta,
    ArtinHasse,
    Lerch,
    BoldZ,
    PowerIdentity,
    All,
}

impl Suite {
    pub const EACH: [Suite; 7] = [
        Suite::EulerProduct,
        Suite::Factorization,
        Suite::PartialZeta,
        Suite::ArtinHasse,
        Suite::Lerch,
        Suite::BoldZ,
        Suite::PowerIdentity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::EulerProduct => "euler-product",
            Suite::Factorization => "factorization",
            Suite::PartialZeta => "partial-zeta",
            Suite::ArtinHasse => "artin-hasse",
            Suite::Lerch => "lerch",
            Suite::BoldZ => "bold-z",
            Suite::PowerIdentity => "power-identity",
            Suite::All => "all",
        }
    }
}

impl std::str::FromStr for Suite {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|suite| suite.name() == s)
            .ok_or_else(|| usage(format!("unknown suite '{s}'")))
    }
}

/// One pass/fail line.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub suite: Suite,
    pub name: String,
    pub value: f64,
    pub reference: f64,
    pub residual: f64,
    pub tolerance: f64,
    pub passed: bool,
}

struct Builder {
    suite: Suite,
    tolerance_override: Option<f64>,
    checks: Vec<Check>,
}

impl Builder {
    fn push(&mut self, name: impl Into<String>, value: f64, reference: f64, tolerance: f64) {
        let residual = (value - reference).abs();
        let tolerance = self.tolerance_override.unwrap_or(tolerance);
        self.checks.push(Check {
            suite: self.suite,
            name: name.into(),
            value,
            reference,
            residual,
            tolerance,
            passed: residual <= tolerance,
        });
    }

    fn routes(&mut self, name: impl Into<String>, a: &EvalResult, b: &EvalResult) {
        self.push(name, a.value, b.value, a.tail_bound + b.tail_bound);
    }
}

/// Runs `suite`; `tolerance` replaces every per-check default when given.
pub fn run_suite(suite: Suite, tolerance: Option<f64>) -> Result<Vec<Check>> {
    if let Some(t) = tolerance {
        if t.is_nan() || t < 0.0 {
            return Err(usage(format!("tolerance must be non-negative, got {t}")));
        }
    }
    let needs_sieve = matches!(
        suite,
        Suite::All | Suite::EulerProduct | Suite::PartialZeta | Suite::BoldZ | Suite::ArtinHasse
    );
    let sieve = if needs_sieve {
        Some(build_sieve(PRIME_ZETA_CUTOFF as usize)?)
    } else {
        None
    };
    let suites: Vec<Suite> = match suite {
        Suite::All => Suite::EACH.to_vec(),
        one => vec![one],
    };
    let mut out = Vec::new();
    for s in suites {
        let mut b = Builder {
            suite: s,
            tolerance_override: tolerance,
            checks: Vec::new(),
        };
        match s {
            Suite::EulerProduct => euler_product(&mut b, sieve.as_ref().unwrap())?,
            Suite::Factorization => factorization(&mut b)?,
            Suite::PartialZeta => partial_zeta(&mut b, sieve.as_ref().unwrap())?,
            Suite::ArtinHasse => artin_hasse(&mut b, sieve.as_ref().unwrap())?,
            Suite::Lerch => lerch(&mut b)?,
            Suite::BoldZ => bold_z(&mut b, sieve.as_ref().unwrap())?,
            Suite::PowerIdentity => power_identity(&mut b)?,
            Suite::All => unreachable!(),
        }
        out.extend(b.checks);
    }
    Ok(out)
}

fn euler_product(b: &mut Builder, sieve: &SieveTables) -> Result<()> {
    for s in [2.0, 3.0] {
        let e = euler_product_zeta(s, PRIME_CUTOFF, sieve)?;
        let z = riemann_zeta(s)?;
        b.routes(format!("zeta Euler product s={s}"), &e, &z);
    }
    for q in [4u64, 3] {
        let e = l_euler_product(q, 2.0, PRIME_CUTOFF, sieve)?;
        let h = dirichlet_l(q, 2.0)?;
        b.push(
            format!("L{q} Euler product vs Hurwitz s=2"),
            e.value,
            h.value,
            L_EULER_TOLERANCE_S2,
        );
        let e3 = l_euler_product(q, 3.0, PRIME_CUTOFF, sieve)?;
        let h3 = dirichlet_l(q, 3.0)?;
        b.routes(format!("L{q} Euler product vs Hurwitz s=3"), &e3, &h3);
    }
    let m = prime_zeta_mobius(2.0, MOBIUS_TERMS, sieve)?;
    let d = prime_zeta_direct(2.0, PRIME_ZETA_CUTOFF, sieve)?;
    b.push(
        "prime zeta Mobius vs direct s=2",
        m.value,
        d.value,
        PRIME_ZETA_TOLERANCE,
    );
    let m3 = prime_zeta_mobius(3.0, MOBIUS_TERMS, sieve)?;
    let d3 = prime_zeta_direct(3.0, PRIME_ZETA_CUTOFF, sieve)?;
    b.routes("prime zeta Mobius vs direct s=3", &m3, &d3);
    Ok(())
}

fn factorization(b: &mut Builder) -> Result<()> {
    for ring in QuadraticRing::ALL {
        for s in [1.5, 2.0, 3.0] {
            let lattice = dedekind_zeta_lattice(ring, s, LATTICE_RADIUS)?;
            let factored = dedekind_zeta(ring, s)?;
            b.routes(
                format!("{ring} lattice sum vs u*zeta*L s={s}"),
                &lattice,
                &factored,
            );
        }
    }
    Ok(())
}

fn partial_zeta(b: &mut Builder, sieve: &SieveTables) -> Result<()> {
    for ring in QuadraticRing::ALL {
        let q = ring.character_modulus();
        let r = ring.inert_residue();
        let ram = ring.ramified_prime() as f64;
        for s in [2.0, 3.0] {
            let split = partial_prime_zeta(q, 1, s, PRIME_CUTOFF, sieve)?;
            let inert = partial_prime_zeta(q, r, s, PRIME_CUTOFF, sieve)?;
            let product = split.times(&inert);
            let target = riemann_zeta(s)?.scaled(1.0 - ram.powf(-s));
            b.routes(
                format!("zeta{q},1 * zeta{q},{r} vs (1-{ram}^-s) zeta s={s}"),
                &product,
                &target,
            );
        }
    }
    Ok(())
}

fn artin_hasse(b: &mut Builder, sieve: &SieveTables) -> Result<()> {
    let ah = artin_hasse_series(ARTIN_HASSE_ORDER, sieve)?;
    let exp = exp_series(ARTIN_HASSE_ORDER);
    let mismatches = (0..=ARTIN_HASSE_ORDER)
        .filter(|&k| ah.coeff(k) != exp.coeff(k))
        .count();
    let last = ah.coeff(ARTIN_HASSE_ORDER);
    let expected = BigRational::new(
        BigInt::from(1),
        (1..=ARTIN_HASSE_ORDER as u64).map(BigInt::from).product(),
    );
    b.push(
        format!("Artin-Hasse coefficient mismatches through x^{ARTIN_HASSE_ORDER}"),
        mismatches as f64,
        0.0,
        0.0,
    );
    b.push(
        format!("Artin-Hasse x^{ARTIN_HASSE_ORDER} coefficient is 1/{ARTIN_HASSE_ORDER}!"),
        f64::from(u8::from(*last != expected)),
        0.0,
        0.0,
    );
    Ok(())
}

fn lerch(b: &mut Builder) -> Result<()> {
    let half_ln_2pi = 0.5 * (2.0 * PI).ln();
    for (label, x) in [
        ("1/4", 0.25),
        ("1/3", 1.0 / 3.0),
        ("1/2", 0.5),
        ("2/3", 2.0 / 3.0),
        ("3/4", 0.75),
        ("1", 1.0),
    ] {
        let d = hurwitz_zeta_ds(0.0, x)?.value;
        b.push(
            format!("Lerch zeta'(0,{label})"),
            d,
            log_gamma(x)? - half_ln_2pi,
            LERCH_TOLERANCE,
        );
        let v = hurwitz_zeta(0.0, x)?.value;
        b.push(
            format!("zeta(0,{label}) = 1/2 - x"),
            v,
            0.5 - x,
            SPECIAL_VALUE_TOLERANCE,
        );
    }
    let lg = |x: f64| log_gamma(x);
    let tol = SPECIAL_VALUE_TOLERANCE;
    b.push("zeta(0)", riemann_zeta(0.0)?.value, -0.5, tol);
    b.push("zeta'(0)", riemann_zeta_ds(0.0)?.value, -half_ln_2pi, tol);
    b.push("L4(0)", dirichlet_l(4, 0.0)?.value, 0.5, tol);
    b.push("L3(0)", dirichlet_l(3, 0.0)?.value, 1.0 / 3.0, tol);
    b.push(
        "zeta4(0)",
        dedekind_zeta(QuadraticRing::Gauss, 0.0)?.value,
        -1.0,
        tol,
    );
    b.push(
        "zeta3(0)",
        dedekind_zeta(QuadraticRing::Eisenstein, 0.0)?.value,
        -1.0,
        tol,
    );
    b.push(
        "L4'(0)",
        dirichlet_l_ds(4, 0.0)?.value,
        lg(0.25)? - 2f64.ln() - lg(0.75)?,
        tol,
    );
    b.push(
        "L3'(0)",
        dirichlet_l_ds(3, 0.0)?.value,
        lg(1.0 / 3.0)? - 3f64.ln() / 3.0 - lg(2.0 / 3.0)?,
        tol,
    );
    b.push(
        "zeta4'(0)",
        dedekind_zeta_ds(QuadraticRing::Gauss, 0.0)?.value,
        2f64.ln() + 2.0 * lg(0.75)? - PI.ln() - 2.0 * lg(0.25)?,
        tol,
    );
    b.push(
        "zeta3'(0)",
        dedekind_zeta_ds(QuadraticRing::Eisenstein, 0.0)?.value,
        3f64.ln() + 3.0 * lg(2.0 / 3.0)? - (2.0 * PI).ln() - 3.0 * lg(1.0 / 3.0)?,
        tol,
    );
    Ok(())
}

fn bold_z(b: &mut Builder, sieve: &SieveTables) -> Result<()> {
    for ring in QuadraticRing::ALL {
        let product = bold_z_product(ring, 2.0, BOLD_Z_NORM_CUTOFF, sieve)?;
        let closed = bold_z_closed(ring, 2.0)?;
        b.routes(
            format!("{ring} bold-Z product vs closed form s=2"),
            &product,
            &closed,
        );
    }
    Ok(())
}

fn power_identity(b: &mut Builder) -> Result<()> {
    for ring in RingKind::ALL {
        let r = power_identity_check_with(ring, POWER_IDENTITY_TOLERANCE)?;
        b.push(
            format!("{ring} log|Pi| = {} log|P|", r.exponent),
            r.log_prime_product,
            r.exponent as f64 * r.log_integer_product,
            POWER_IDENTITY_TOLERANCE,
        );
    }
    Ok(())
}
