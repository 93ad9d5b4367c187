mod expr;

use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hecke_core::combinatorics::{enumerate_good, enumerate_separated};
use hecke_core::verify::{self, closed_form_coefficient, Suite};
use hecke_core::{cyclotomic, w_nk, BivarPoly, HeckeElement};
use thiserror::Error;

/// Largest rank the engine-backed commands accept.
const ENGINE_MAX_RANK: usize = 7;

#[derive(Parser)]
#[command(name = "heckeb", version, about = "Exact computations in type-B Hecke algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Direct,
    Recurrence,
    Separated,
}

#[derive(Subcommand)]
enum Command {
    /// Print T_{w_{0,k}}^2 in the T-basis.
    SquareW0k {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        json: bool,
    },
    /// Print the polynomial f_k(p, q).
    Fk {
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value = "direct")]
        method: Method,
        /// Reduce modulo the k-th cyclotomic polynomial in q.
        #[arg(long)]
        mod_cyclotomic: bool,
    },
    /// Tabulate the good involutions of B_k with their statistics.
    Good {
        #[arg(long)]
        k: usize,
    },
    /// Tabulate the separated k-sets.
    Sep {
        #[arg(long)]
        k: usize,
    },
    /// Evaluate a word expression in H(B_rank).
    Mult {
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        expr: String,
        #[arg(long)]
        json: bool,
    },
    /// Run the identity checks.
    Verify {
        #[arg(long, default_value = "all", value_parser = parse_suite)]
        suite: Suite,
        #[arg(long, default_value_t = 6)]
        max_rank: usize,
        #[arg(long)]
        json: bool,
    },
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: hecke_core::Error| e.to_string())
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] hecke_core::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error("{0} check(s) failed")]
    Failed(usize),
}

fn require(cond: bool, message: impl FnOnce() -> String) -> Result<(), CliError> {
    if cond {
        Ok(())
    } else {
        Err(CliError::Usage(message()))
    }
}

fn print_element(out: &mut impl Write, h: &HeckeElement, json: bool) -> Result<(), CliError> {
    if json {
        writeln!(out, "{}", serde_json::to_string_pretty(&h.to_json())?)?;
    } else {
        for (w, c) in h.sorted_terms() {
            writeln!(out, "{w}\t{c}")?;
        }
    }
    Ok(())
}

fn run(cli: Cli, out: &mut impl Write) -> Result<(), CliError> {
    match cli.command {
        Command::SquareW0k { k, json } => {
            require((1..=ENGINE_MAX_RANK).contains(&k), || {
                format!("--k must be between 1 and {ENGINE_MAX_RANK}")
            })?;
            let tw = HeckeElement::t_of(&w_nk(0, k));
            print_element(out, &tw.mul(&tw)?, json)?;
        }
        Command::Fk {
            k,
            method,
            mod_cyclotomic,
        } => {
            require(k >= 1, || "--k must be at least 1".into())?;
            let f = match method {
                Method::Direct => verify::f_k_direct(k),
                Method::Recurrence => verify::f_k_recurrence(k),
                Method::Separated => verify::f_k_separated(k),
            };
            let f: BivarPoly = if mod_cyclotomic {
                cyclotomic(k)?.reduce(&f)
            } else {
                f
            };
            writeln!(out, "{f}")?;
        }
        Command::Good { k } => {
            require(k >= 1, || "--k must be at least 1".into())?;
            writeln!(out, "w\ta\ta(-w)\tc\tcoefficient")?;
            for w in enumerate_good(k) {
                let coeff = closed_form_coefficient(k, &w)?;
                writeln!(out, "{w}\t{}\t{}\t{}\t{coeff}", w.a(), w.a_neg(), w.c())?;
            }
        }
        Command::Sep { k } => {
            require(k >= 1, || "--k must be at least 1".into())?;
            writeln!(out, "set\tsize")?;
            for s in enumerate_separated(k) {
                writeln!(out, "{s}\t{}", s.len())?;
            }
        }
        Command::Mult { rank, expr, json } => {
            let parsed = expr::parse_expression(&expr, rank).map_err(|e| match e {
                hecke_core::Error::Parse { offset, message } => CliError::Usage(format!(
                    "{message}\n  {expr}\n  {:>width$}",
                    "^",
                    width = offset + 1
                )),
                other => CliError::Core(other),
            })?;
            print_element(out, &parsed.evaluate(rank)?, json)?;
        }
        Command::Verify {
            suite,
            max_rank,
            json,
        } => {
            require((1..=ENGINE_MAX_RANK).contains(&max_rank), || {
                format!("--max-rank must be between 1 and {ENGINE_MAX_RANK}")
            })?;
            let reports = verify::run_suite(suite, max_rank);
            let failed = reports.iter().filter(|r| !r.passed()).count();
            if json {
                writeln!(out, "{}", serde_json::to_string_pretty(&reports)?)?;
            } else {
                for r in &reports {
                    writeln!(out, "{r}")?;
                }
                writeln!(out, "{} passed, {failed} failed", reports.len() - failed)?;
            }
            if failed > 0 {
                out.flush()?;
                return Err(CliError::Failed(failed));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = BufWriter::new(io::stdout().lock());
    match run(cli, &mut out).and_then(|()| Ok(out.flush()?)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(CliError::Failed(n)) => {
            eprintln!("heckeb: {n} check(s) failed");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("heckeb: {e}");
            ExitCode::from(2)
        }
    }
}
