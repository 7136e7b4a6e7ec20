//! Command-line front end: function evaluation, constants, and the identity
//! suite with table or JSON reports.
//!
//! Exit codes: 0 on success with every identity passing, 1 when any identity
//! fails, 2 on a usage error. Numbers are printed with 17 significant digits.

use crate::bernoulli::{bernoulli_number, bernoulli_poly, euler_poly};
use crate::constants::Constants;
use crate::error::{Error, Result};
use crate::gamma::{
    alexeiewsky, digamma, gamma, log_barnes_g_zeta, log_gamma, log_gamma_hasse, log_gamma_kummer,
    trigamma,
};
use crate::identities::{run_suite, select, GridSpec, IdentityReport, Selection};
use crate::numerics::EvalOptions;
use crate::trig::{clausen, log_sine_integral, si_ci};
use crate::zeta::{
    alt_hurwitz_zeta, hurwitz_zeta, hurwitz_zeta_fourier, hurwitz_zeta_hasse, hurwitz_zeta_sderiv,
    riemann_zeta,
};
use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use std::ffi::OsString;
use std::io::Write;

#[derive(Debug, Parser)]
#[command(
    name = "kummer",
    version,
    about = "Special functions and identity checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate a function; `eval --list` shows the available names.
    Eval {
        /// Function name.
        #[arg(required_unless_present = "list")]
        function: Option<String>,
        /// Numeric arguments.
        #[arg(allow_negative_numbers = true)]
        args: Vec<f64>,
        /// List the evaluators and their arguments.
        #[arg(long)]
        list: bool,
        #[command(flatten)]
        tuning: Tuning,
    },
    /// Print the internally computed constants.
    Constants,
    /// Run the identity suite.
    Verify {
        /// Comma-separated ids; an id also selects its `@` variants.
        #[arg(long, value_delimiter = ',')]
        ids: Option<Vec<String>>,
        /// Comma-separated grid points in (0, 1).
        #[arg(long, value_delimiter = ',')]
        grid: Option<Vec<f64>>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        #[command(flatten)]
        tuning: Tuning,
    },
    /// Run the quadrature-based checks for one id.
    Integrals {
        id: String,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        #[command(flatten)]
        tuning: Tuning,
    },
}

#[derive(Debug, clap::Args)]
struct Tuning {
    /// Absolute tolerance for truncation and quadrature.
    #[arg(long)]
    abs_tol: Option<f64>,
    /// Cap on explicit series terms.
    #[arg(long)]
    max_terms: Option<usize>,
}

impl Tuning {
    fn options(&self) -> Result<EvalOptions> {
        let mut o = EvalOptions::default();
        if let Some(t) = self.abs_tol {
            o = o.with_abs_tol(t);
        }
        if let Some(n) = self.max_terms {
            o = o.with_max_terms(n);
        }
        o.validate()?;
        Ok(o)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

type EvalFn = fn(&[f64], &EvalOptions) -> Result<f64>;

/// One entry of the evaluator list.
pub struct Evaluator {
    pub name: &'static str,
    pub args: &'static [&'static str],
    run: EvalFn,
}

fn index(v: f64, what: &'static str) -> Result<usize> {
    if v >= 0.0 && v.fract() == 0.0 && v <= 1e6 {
        Ok(v as usize)
    } else {
        Err(Error::Options(format!(
            "{what} must be a non-negative integer, got {v}"
        )))
    }
}

/// Functions reachable through `eval`.
pub const EVALUATORS: &[Evaluator] = &[
    Evaluator {
        name: "log_gamma",
        args: &["t"],
        run: |a, _| log_gamma(a[0]),
    },
    Evaluator {
        name: "gamma",
        args: &["x"],
        run: |a, _| gamma(a[0]),
    },
    Evaluator {
        name: "digamma",
        args: &["t"],
        run: |a, _| digamma(a[0]),
    },
    Evaluator {
        name: "trigamma",
        args: &["t"],
        run: |a, _| trigamma(a[0]),
    },
    Evaluator {
        name: "log_gamma_kummer",
        args: &["t"],
        run: |a, o| Ok(log_gamma_kummer(a[0], o)?.value),
    },
    Evaluator {
        name: "log_gamma_hasse",
        args: &["t"],
        run: |a, o| Ok(log_gamma_hasse(a[0], o)?.value),
    },
    Evaluator {
        name: "log_barnes_g",
        args: &["t"],
        run: |a, _| log_barnes_g_zeta(a[0]),
    },
    Evaluator {
        name: "alexeiewsky",
        args: &["x"],
        run: |a, _| alexeiewsky(a[0]),
    },
    Evaluator {
        name: "riemann_zeta",
        args: &["s"],
        run: |a, _| riemann_zeta(a[0]),
    },
    Evaluator {
        name: "hurwitz_zeta",
        args: &["s", "t"],
        run: |a, _| hurwitz_zeta(a[0], a[1]),
    },
    Evaluator {
        name: "hurwitz_zeta_hasse",
        args: &["s", "t"],
        run: |a, o| Ok(hurwitz_zeta_hasse(a[0], a[1], o)?.value),
    },
    Evaluator {
        name: "hurwitz_zeta_fourier",
        args: &["s", "t"],
        run: |a, o| Ok(hurwitz_zeta_fourier(a[0], a[1], o)?.value),
    },
    Evaluator {
        name: "hurwitz_zeta_deriv",
        args: &["order", "s", "t"],
        run: |a, _| hurwitz_zeta_sderiv(index(a[0], "order")? as u32, a[1], a[2]),
    },
    Evaluator {
        name: "alt_hurwitz_zeta",
        args: &["s", "t"],
        run: |a, _| alt_hurwitz_zeta(a[0], a[1]),
    },
    Evaluator {
        name: "bernoulli_number",
        args: &["n"],
        run: |a, _| bernoulli_number(index(a[0], "n")?),
    },
    Evaluator {
        name: "bernoulli_poly",
        args: &["m", "t"],
        run: |a, _| bernoulli_poly(index(a[0], "m")?, a[1]),
    },
    Evaluator {
        name: "euler_poly",
        args: &["m", "t"],
        run: |a, _| euler_poly(index(a[0], "m")?, a[1]),
    },
    Evaluator {
        name: "clausen",
        args: &["order", "x"],
        run: |a, o| Ok(clausen(index(a[0], "order")? as u32, a[1], o)?.value),
    },
    Evaluator {
        name: "log_sine_integral",
        args: &["n", "theta"],
        run: |a, _| log_sine_integral(index(a[0], "n")? as u32, a[1]),
    },
    Evaluator {
        name: "si",
        args: &["x"],
        run: |a, _| Ok(si_ci(a[0])?.si_cap),
    },
    Evaluator {
        name: "ci",
        args: &["x"],
        run: |a, _| Ok(si_ci(a[0])?.ci),
    },
];

/// Runs the command line `args` (program name first) and returns the exit
/// code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    0
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    2
                }
            };
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            let _ = writeln!(
                err,
                "usage: kummer <eval|constants|verify|integrals> ... (see --help)"
            );
            2
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Eval {
            function,
            args,
            list,
            tuning,
        } => {
            if list {
                for e in EVALUATORS {
                    emit(out, format_args!("{} {}\n", e.name, e.args.join(" ")));
                }
                return Ok(0);
            }
            let name = function.unwrap_or_default();
            let e = EVALUATORS.iter().find(|e| e.name == name).ok_or_else(|| {
                Error::Options(format!("unknown function `{name}`; try `eval --list`"))
            })?;
            if args.len() != e.args.len() {
                return Err(Error::Options(format!(
                    "`{}` takes {} argument(s): {}",
                    e.name,
                    e.args.len(),
                    e.args.join(" ")
                )));
            }
            let v = (e.run)(&args, &tuning.options()?)?;
            emit(out, format_args!("{v:.16e}\n"));
            Ok(0)
        }
        Command::Constants => {
            for (name, v, route) in Constants::get().entries() {
                emit(out, format_args!("{name:<18} {v:>24.16e}  {route}\n"));
            }
            Ok(0)
        }
        Command::Verify {
            ids,
            grid,
            format,
            tuning,
        } => {
            let opts = tuning.options()?;
            let grid = match grid {
                Some(p) => GridSpec::new(p)?,
                None => GridSpec::default(),
            };
            let selection = match ids {
                Some(ids) => Selection::Ids(ids.into_iter().filter(|s| !s.is_empty()).collect()),
                None => Selection::All,
            };
            let reports = run_suite(&selection, &grid, &opts)?;
            report(out, &reports, format)
        }
        Command::Integrals { id, format, tuning } => {
            let opts = tuning.options()?;
            let selection = Selection::Ids(vec![id.clone()]);
            let integral: Vec<String> = select(&selection)?
                .into_iter()
                .filter(|c| c.integral)
                .map(|c| c.id)
                .collect();
            if integral.is_empty() {
                return Err(Error::Options(format!(
                    "`{id}` is not a quadrature-based identity"
                )));
            }
            let reports = run_suite(&Selection::Ids(integral), &GridSpec::default(), &opts)?;
            report(out, &reports, format)
        }
    }
}

fn emit(out: &mut dyn Write, args: std::fmt::Arguments<'_>) {
    // A closed pipe is not worth a panic.
    let _ = out.write_fmt(args);
}

fn report(out: &mut dyn Write, reports: &[IdentityReport], format: Format) -> Result<i32> {
    match format {
        Format::Json => {
            let s =
                serde_json::to_string_pretty(reports).map_err(|e| Error::Options(e.to_string()))?;
            emit(out, format_args!("{s}\n"));
        }
        Format::Table => write_table(out, reports),
    }
    Ok(if reports.iter().all(|r| r.pass) { 0 } else { 1 })
}

fn write_table(out: &mut dyn Write, reports: &[IdentityReport]) {
    let width = reports.iter().map(|r| r.id.len()).max().unwrap_or(2).max(2);
    emit(
        out,
        format_args!(
            "{:<width$}  {:>6}  {:>24}  {:>24}  {:>9}  {:>7}  result\n",
            "id", "point", "lhs", "rhs", "residual", "tol"
        ),
    );
    for r in reports {
        let point = r
            .grid_point
            .map_or_else(|| "-".to_string(), |p| format!("{p}"));
        emit(
            out,
            format_args!(
                "{:<width$}  {:>6}  {:>24.16e}  {:>24.16e}  {:>9.2e}  {:>7.0e}  {}\n",
                r.id,
                point,
                r.lhs,
                r.rhs,
                r.abs_residual,
                r.tolerance,
                if r.pass { "PASS" } else { "FAIL" }
            ),
        );
    }
    let failed = reports.iter().filter(|r| !r.pass).count();
    emit(
        out,
        format_args!("{} checks, {} failed\n", reports.len(), failed),
    );
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let (mut o, mut e) = (Vec::new(), Vec::new());
        let code = run(
            std::iter::once("kummer").chain(args.iter().copied()),
            &mut o,
            &mut e,
        );
        (
            code,
            String::from_utf8(o).unwrap(),
            String::from_utf8(e).unwrap(),
        )
    }

    #[test]
    fn evaluator_names_are_unique() {
        let mut names: Vec<_> = EVALUATORS.iter().map(|e| e.name).collect();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), EVALUATORS.len());
    }

    #[test]
    fn eval_prints_seventeen_digits() {
        let (code, out, _) = call(&["eval", "log_gamma", "0.5"]);
        assert_eq!(code, 0);
        let v: f64 = out.trim().parse().unwrap();
        assert!((v - 0.5 * std::f64::consts::PI.ln()).abs() < 4e-15);
        assert_eq!(out.trim().split('e').next().unwrap().len(), 18);
    }

    #[test]
    fn usage_errors() {
        assert_eq!(call(&["eval", "nope", "1"]).0, 2);
        assert_eq!(call(&["eval", "hurwitz_zeta", "2"]).0, 2);
        assert_eq!(call(&["eval", "log_gamma", "-1"]).0, 2);
        assert_eq!(call(&["frobnicate"]).0, 2);
        assert_eq!(call(&["verify", "--grid", "1.5"]).0, 2);
        assert_eq!(call(&["integrals", "EQ-2.16"]).0, 2);
        let (code, _, err) = call(&["verify", "--ids", "NO-SUCH"]);
        assert_eq!(code, 2);
        assert!(err.contains("EQ-3.5"));
        assert_eq!(call(&["--help"]).0, 0);
    }

    #[test]
    fn negative_arguments_parse() {
        let (code, out, _) = call(&["eval", "hurwitz_zeta", "-1", "1"]);
        assert_eq!(code, 0);
        assert!((out.trim().parse::<f64>().unwrap() + 1.0 / 12.0).abs() < 1e-15);
    }
}
