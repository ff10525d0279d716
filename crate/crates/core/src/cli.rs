//! Command-line frontend.
//!
//! ```text
//! regprod values --ring R --target {integers|primes}
//! regprod eval --function F [--s S] [--x X] [--modulus Q] [--ring R] [--class C] [--cutoff N]
//! regprod primes --ring R --max-norm N
//! regprod verify --suite S [--tolerance T]
//! ```
//!
//! Every command takes `--format {json|csv|text}` (JSON by default). Exit
//! codes: 0 success, 1 verification failure, 2 usage or domain error.

use std::ffi::OsString;
use std::io::Write;

use clap::{CommandFactory, Parser, Subcommand, ValueEnum};
use serde::{Serialize, Serializer};
use serde_json::value::RawValue;

use crate::arith::build_sieve;
use crate::error::{usage, Error, Result};
use crate::regularization::{regularized_product, ProductTarget};
use crate::rings::{enumerate_ring_primes, QuadraticRing};
use crate::special::{
    hurwitz_zeta, hurwitz_zeta_ds, log_gamma, riemann_zeta, riemann_zeta_ds, EvalResult, Truncation,
};
use crate::verify::{run_suite, Suite};
use crate::zeta::{self, RingKind};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "regprod",
    version,
    about = "Zeta-regularized products of integers and primes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum RingArg {
    Natural,
    Gauss,
    Eisenstein,
}

impl From<RingArg> for RingKind {
    fn from(r: RingArg) -> Self {
        match r {
            RingArg::Natural => RingKind::Natural,
            RingArg::Gauss => RingKind::Gauss,
            RingArg::Eisenstein => RingKind::Eisenstein,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum QuadraticArg {
    Gauss,
    Eisenstein,
}

impl From<QuadraticArg> for QuadraticRing {
    fn from(r: QuadraticArg) -> Self {
        match r {
            QuadraticArg::Gauss => QuadraticRing::Gauss,
            QuadraticArg::Eisenstein => QuadraticRing::Eisenstein,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TargetArg {
    Integers,
    Primes,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Function {
    Hurwitz,
    HurwitzDs,
    Riemann,
    RiemannDs,
    LogGamma,
    DirichletL,
    DirichletLDs,
    Dedekind,
    DedekindDs,
    DedekindLattice,
    PartialPrimeZeta,
    LEulerProduct,
    EulerProduct,
    PrimeZetaMobius,
    PrimeZetaDirect,
    BoldZProduct,
    BoldZClosed,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SuiteArg {
    EulerProduct,
    Factorization,
    PartialZeta,
    ArtinHasse,
    Lerch,
    BoldZ,
    PowerIdentity,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::EulerProduct => Suite::EulerProduct,
            SuiteArg::Factorization => Suite::Factorization,
            SuiteArg::PartialZeta => Suite::PartialZeta,
            SuiteArg::ArtinHasse => Suite::ArtinHasse,
            SuiteArg::Lerch => Suite::Lerch,
            SuiteArg::BoldZ => Suite::BoldZ,
            SuiteArg::PowerIdentity => Suite::PowerIdentity,
            SuiteArg::All => Suite::All,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Regularized product of integers or primes of a ring.
    Values {
        #[arg(long, value_enum)]
        ring: RingArg,
        #[arg(long, value_enum, default_value = "integers")]
        target: TargetArg,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Evaluate one function with its truncation data.
    Eval {
        #[arg(long, value_enum)]
        function: Function,
        #[arg(long, allow_negative_numbers = true)]
        s: Option<f64>,
        #[arg(long, allow_negative_numbers = true)]
        x: Option<f64>,
        #[arg(long)]
        modulus: Option<u64>,
        #[arg(long, value_enum)]
        ring: Option<QuadraticArg>,
        #[arg(long)]
        class: Option<u64>,
        /// Lattice radius, prime cutoff, Möbius terms or norm cutoff, by function.
        #[arg(long)]
        cutoff: Option<u64>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Enumerate ring primes by norm.
    Primes {
        #[arg(long, value_enum)]
        ring: QuadraticArg,
        #[arg(long)]
        max_norm: u64,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Run a named identity suite.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: SuiteArg,
        #[arg(long)]
        tolerance: Option<f64>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

/// A float written with 17 significant digits.
#[derive(Debug, Clone, Copy)]
struct Num(f64);

impl Serialize for Num {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        if !self.0.is_finite() {
            return serializer.serialize_none();
        }
        let raw = RawValue::from_string(format_num(self.0)).map_err(serde::ser::Error::custom)?;
        raw.serialize(serializer)
    }
}

fn format_num(v: f64) -> String {
    format!("{v:.16e}")
}

#[derive(Serialize)]
struct ValuesOut {
    ring: RingKind,
    target: ProductTarget,
    log_value: Num,
    numeric_value: Num,
    closed_form_value: Num,
    discrepancy: Num,
    modulus: Num,
    closed_form_modulus: Num,
}

#[derive(Serialize)]
struct EvalOut<'a> {
    function: &'a str,
    s: Option<Num>,
    x: Option<Num>,
    value: Num,
    tail_bound: Num,
    params: &'a Truncation,
}

#[derive(Serialize)]
struct PrimeRow {
    a: i64,
    b: i64,
    norm: u64,
    class: &'static str,
}

#[derive(Serialize)]
struct PrimesOut {
    ring: QuadraticRing,
    max_norm: u64,
    count: usize,
    primes: Vec<PrimeRow>,
}

#[derive(Serialize)]
struct CheckOut<'a> {
    suite: &'a str,
    name: &'a str,
    value: Num,
    reference: Num,
    residual: Num,
    tolerance: Num,
    passed: bool,
}

#[derive(Serialize)]
struct VerifyOut<'a> {
    suite: &'a str,
    passed: bool,
    checks: Vec<CheckOut<'a>>,
}

/// Parses `args` (program name first) and runs the command on the process
/// streams; returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

/// As [`run`], writing to the given streams.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let mut rendered = e.render().to_string();
            if e.use_stderr() && !rendered.contains("Usage:") {
                rendered.push_str(&format!("\n{}\n", Cli::command().render_usage()));
            }
            let _ = if e.use_stderr() {
                err.write_all(rendered.as_bytes())
            } else {
                out.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Values {
            ring,
            target,
            format,
        } => values(ring.into(), target, format, out),
        Command::Eval {
            function,
            s,
            x,
            modulus,
            ring,
            class,
            cutoff,
            format,
        } => {
            let args = EvalArgs {
                s,
                x,
                modulus,
                ring: ring.map(Into::into),
                class,
                cutoff,
            };
            eval(function, &args, format, out)
        }
        Command::Primes {
            ring,
            max_norm,
            format,
        } => primes(ring.into(), max_norm, format, out),
        Command::Verify {
            suite,
            tolerance,
            format,
        } => verify(suite.into(), tolerance, format, out),
    }
}

fn io(e: std::io::Error) -> Error {
    Error::Usage(format!("write failed: {e}"))
}

fn write_json<T: Serialize>(value: &T, out: &mut dyn Write) -> Result<()> {
    let text = serde_json::to_string_pretty(value).map_err(|e| usage(e.to_string()))?;
    writeln!(out, "{text}").map_err(io)
}

fn values(ring: RingKind, target: TargetArg, format: Format, out: &mut dyn Write) -> Result<i32> {
    let target = match target {
        TargetArg::Integers => ProductTarget::Integers,
        TargetArg::Primes => ProductTarget::Primes,
    };
    let p = regularized_product(ring, target)?;
    let o = ValuesOut {
        ring: p.ring,
        target: p.target,
        log_value: Num(p.log_value),
        numeric_value: Num(p.numeric_value),
        closed_form_value: Num(p.closed_form_value),
        discrepancy: Num(p.discrepancy),
        modulus: Num(p.modulus()),
        closed_form_modulus: Num(p.closed_form_modulus()),
    };
    let target_name = match target {
        ProductTarget::Integers => "integers",
        ProductTarget::Primes => "primes",
    };
    match format {
        Format::Json => write_json(&o, out)?,
        Format::Csv => {
            writeln!(
                out,
                "ring,target,log_value,numeric_value,closed_form_value,discrepancy,modulus,closed_form_modulus"
            )
            .map_err(io)?;
            writeln!(
                out,
                "{},{},{},{},{},{},{},{}",
                ring,
                target_name,
                format_num(p.log_value),
                format_num(p.numeric_value),
                format_num(p.closed_form_value),
                format_num(p.discrepancy),
                format_num(p.modulus()),
                format_num(p.closed_form_modulus())
            )
            .map_err(io)?;
        }
        Format::Text => {
            writeln!(out, "{ring} {target_name}").map_err(io)?;
            writeln!(out, "  log value          {}", format_num(p.log_value)).map_err(io)?;
            writeln!(out, "  numeric value      {}", format_num(p.numeric_value)).map_err(io)?;
            writeln!(
                out,
                "  closed form        {}",
                format_num(p.closed_form_value)
            )
            .map_err(io)?;
            writeln!(out, "  discrepancy        {}", format_num(p.discrepancy)).map_err(io)?;
            writeln!(out, "  modulus            {}", format_num(p.modulus())).map_err(io)?;
        }
    }
    Ok(EXIT_OK)
}

struct EvalArgs {
    s: Option<f64>,
    x: Option<f64>,
    modulus: Option<u64>,
    ring: Option<QuadraticRing>,
    class: Option<u64>,
    cutoff: Option<u64>,
}

fn need<T>(v: Option<T>, flag: &str, function: Function) -> Result<T> {
    v.ok_or_else(|| {
        let name = function
            .to_possible_value()
            .map(|p| p.get_name().to_owned())
            .unwrap_or_default();
        usage(format!("--{flag} is required for {name}"))
    })
}

fn evaluate(f: Function, a: &EvalArgs) -> Result<EvalResult> {
    let s = || need(a.s, "s", f);
    let x = || need(a.x, "x", f);
    let modulus = || need(a.modulus, "modulus", f);
    let ring = || need(a.ring, "ring", f);
    let sieve_for = |cutoff: u64| build_sieve((cutoff as usize).max(2));
    match f {
        Function::Hurwitz => hurwitz_zeta(s()?, x()?),
        Function::HurwitzDs => hurwitz_zeta_ds(s()?, x()?),
        Function::Riemann => riemann_zeta(s()?),
        Function::RiemannDs => riemann_zeta_ds(s()?),
        Function::LogGamma => Ok(EvalResult::new(
            log_gamma(x()?)?,
            0.0,
            Truncation::Series { cutoff: 12 },
        )),
        Function::DirichletL => zeta::dirichlet_l(modulus()?, s()?),
        Function::DirichletLDs => zeta::dirichlet_l_ds(modulus()?, s()?),
        Function::Dedekind => zeta::dedekind_zeta(ring()?, s()?),
        Function::DedekindDs => zeta::dedekind_zeta_ds(ring()?, s()?),
        Function::DedekindLattice => {
            zeta::dedekind_zeta_lattice(ring()?, s()?, a.cutoff.unwrap_or(300))
        }
        Function::PartialPrimeZeta => {
            let cutoff = a.cutoff.unwrap_or(100_000);
            zeta::partial_prime_zeta(
                modulus()?,
                need(a.class, "class", f)?,
                s()?,
                cutoff,
                &sieve_for(cutoff)?,
            )
        }
        Function::LEulerProduct => {
            let cutoff = a.cutoff.unwrap_or(100_000);
            zeta::l_euler_product(modulus()?, s()?, cutoff, &sieve_for(cutoff)?)
        }
        Function::EulerProduct => {
            let cutoff = a.cutoff.unwrap_or(100_000);
            zeta::euler_product_zeta(s()?, cutoff, &sieve_for(cutoff)?)
        }
        Function::PrimeZetaMobius => {
            let n_max = a.cutoff.unwrap_or(40);
            zeta::prime_zeta_mobius(s()?, n_max, &sieve_for(n_max)?)
        }
        Function::PrimeZetaDirect => {
            let cutoff = a.cutoff.unwrap_or(1_000_000);
            zeta::prime_zeta_direct(s()?, cutoff, &sieve_for(cutoff)?)
        }
        Function::BoldZProduct => {
            let cutoff = a.cutoff.unwrap_or(100_000);
            zeta::bold_z_product(ring()?, s()?, cutoff, &sieve_for(cutoff)?)
        }
        Function::BoldZClosed => zeta::bold_z_closed(ring()?, s()?),
    }
}

fn eval(f: Function, args: &EvalArgs, format: Format, out: &mut dyn Write) -> Result<i32> {
    let r = evaluate(f, args)?;
    let name = f
        .to_possible_value()
        .map(|p| p.get_name().to_owned())
        .unwrap_or_default();
    match format {
        Format::Json => write_json(
            &EvalOut {
                function: &name,
                s: args.s.map(Num),
                x: args.x.map(Num),
                value: Num(r.value),
                tail_bound: Num(r.tail_bound),
                params: &r.params,
            },
            out,
        )?,
        Format::Csv => {
            writeln!(out, "function,value,tail_bound").map_err(io)?;
            writeln!(
                out,
                "{name},{},{}",
                format_num(r.value),
                format_num(r.tail_bound)
            )
            .map_err(io)?;
        }
        Format::Text => {
            writeln!(
                out,
                "{name} = {} ± {}",
                format_num(r.value),
                format_num(r.tail_bound)
            )
            .map_err(io)?;
        }
    }
    Ok(EXIT_OK)
}

fn primes(ring: QuadraticRing, max_norm: u64, format: Format, out: &mut dyn Write) -> Result<i32> {
    if max_norm > 100_000_000 {
        return Err(usage(format!(
            "--max-norm {max_norm} is too large (limit 10^8)"
        )));
    }
    let list = enumerate_ring_primes(ring, max_norm);
    let rows: Vec<PrimeRow> = list
        .iter()
        .map(|p| PrimeRow {
            a: p.element.a,
            b: p.element.b,
            norm: p.norm,
            class: p.class.name(),
        })
        .collect();
    match format {
        Format::Json => write_json(
            &PrimesOut {
                ring,
                max_norm,
                count: rows.len(),
                primes: rows,
            },
            out,
        )?,
        Format::Csv => {
            writeln!(out, "a,b,norm,class").map_err(io)?;
            for r in &rows {
                writeln!(out, "{},{},{},{}", r.a, r.b, r.norm, r.class).map_err(io)?;
            }
        }
        Format::Text => {
            for p in &list {
                writeln!(
                    out,
                    "{:>24}  norm {:>8}  {}",
                    p.element.to_string(),
                    p.norm,
                    p.class.name()
                )
                .map_err(io)?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn verify(
    suite: Suite,
    tolerance: Option<f64>,
    format: Format,
    out: &mut dyn Write,
) -> Result<i32> {
    let checks = run_suite(suite, tolerance)?;
    let all_passed = checks.iter().all(|c| c.passed);
    match format {
        Format::Json => write_json(
            &VerifyOut {
                suite: suite.name(),
                passed: all_passed,
                checks: checks
                    .iter()
                    .map(|c| CheckOut {
                        suite: c.suite.name(),
                        name: &c.name,
                        value: Num(c.value),
                        reference: Num(c.reference),
                        residual: Num(c.residual),
                        tolerance: Num(c.tolerance),
                        passed: c.passed,
                    })
                    .collect(),
            },
            out,
        )?,
        Format::Csv => {
            writeln!(out, "suite,name,residual,tolerance,passed").map_err(io)?;
            for c in &checks {
                writeln!(
                    out,
                    "{},\"{}\",{},{},{}",
                    c.suite.name(),
                    c.name,
                    format_num(c.residual),
                    format_num(c.tolerance),
                    c.passed
                )
                .map_err(io)?;
            }
        }
        Format::Text => {
            for c in &checks {
                writeln!(
                    out,
                    "{} [{}] {}: residual {:.3e} (tolerance {:.3e})",
                    if c.passed { "PASS" } else { "FAIL" },
                    c.suite.name(),
                    c.name,
                    c.residual,
                    c.tolerance
                )
                .map_err(io)?;
            }
        }
    }
    Ok(if all_passed {
        EXIT_OK
    } else {
        EXIT_VERIFY_FAILED
    })
}
