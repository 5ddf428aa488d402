//! The `hcchar` command line: characters, tables, spin bitraces and
//! verification suites over `hcchar-core`.

pub mod cache;
pub mod format;
pub mod verify;

use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use hcchar_core::bitrace::sbtr;
use hcchar_core::{CharTable, Engine, Method, Partition, QPoly, Rat, StrictPartition};

use cache::Cache;
use format::Format;
use verify::Suite;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Bad input: unparsable text, mismatched weights, or a method outside its domain.
    #[error("{0}")]
    Usage(String),
    /// A computed value failed an exactness invariant.
    #[error("internal error: {0}")]
    Internal(String),
    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Internal(_) => 3,
            CliError::Io(_) => 4,
        }
    }
}

impl From<hcchar_core::Error> for CliError {
    fn from(e: hcchar_core::Error) -> Self {
        use hcchar_core::Error as E;
        match e {
            E::NonDivisible { .. } | E::NonIntegral(_) | E::OddSize(_) => CliError::Internal(e.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Auto,
    Oracle,
    Recursive,
    Pfaffian,
    Combinatorial,
    Pieri,
}

impl MethodArg {
    fn explicit(self) -> Option<Method> {
        match self {
            MethodArg::Auto => None,
            MethodArg::Oracle => Some(Method::Oracle),
            MethodArg::Recursive => Some(Method::Recursive),
            MethodArg::Pfaffian => Some(Method::Pfaffian),
            MethodArg::Combinatorial => Some(Method::Combinatorial),
            MethodArg::Pieri => Some(Method::Pieri),
        }
    }
}

/// Characters of the Hecke-Clifford algebra as exact polynomials in q.
#[derive(Debug, Parser)]
#[command(name = "hcchar", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print one character value zeta^lambda_mu(q).
    Char {
        /// Strict partition, e.g. 4,2,1.
        #[arg(long)]
        lambda: String,
        /// Partition of the same size, e.g. 3,3,1.
        #[arg(long)]
        mu: String,
        #[arg(long, value_enum, default_value = "auto")]
        method: MethodArg,
    },
    /// Print or write the full table for n: rows odd mu, columns strict lambda.
    Table {
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "auto")]
        method: MethodArg,
    },
    /// Print the spin bitrace sbtr(mu, nu), optionally evaluated at q.
    Sbtr {
        #[arg(long)]
        mu: String,
        #[arg(long)]
        nu: String,
        /// Rational point such as 1 or -1/2.
        #[arg(long, allow_hyphen_values = true)]
        at_q: Option<String>,
    },
    /// Run verification suites and report one line per check.
    Verify {
        #[arg(long, default_value_t = 7)]
        n_max: u32,
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
    },
}

/// What a successful invocation prints, and whether it counts as success.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub success: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, success: true }
    }
}

fn parse<T: FromStr<Err = hcchar_core::Error>>(what: &str, text: &str) -> Result<T, CliError> {
    text.parse()
        .map_err(|e: hcchar_core::Error| CliError::Usage(format!("--{what} {text:?}: {e}")))
}

pub fn run(cli: Cli, cache: &Cache) -> Result<Output, CliError> {
    let engine = Engine::shared();
    match cli.command {
        Command::Char { lambda, mu, method } => {
            let lambda: StrictPartition = parse("lambda", &lambda)?;
            let mu: Partition = parse("mu", &mu)?;
            let value = character(engine, cache, method, &lambda, &mu)?;
            Ok(Output::ok(format!("{value}\n")))
        }
        Command::Table { n, format, out, method } => {
            if n == 0 {
                return Err(CliError::Usage("--n must be at least 1".into()));
            }
            let table = table(engine, cache, n, method)?;
            let text = format::render(&table, format);
            match out {
                Some(path) => {
                    std::fs::write(&path, text)?;
                    Ok(Output::ok(String::new()))
                }
                None => Ok(Output::ok(text)),
            }
        }
        Command::Sbtr { mu, nu, at_q } => {
            let mu: Partition = parse("mu", &mu)?;
            let nu: Partition = parse("nu", &nu)?;
            let value = sbtr(mu.parts(), nu.parts())?;
            let text = match at_q {
                None => value.to_string(),
                Some(q) => {
                    let q = Rat::from_str(q.trim())
                        .map_err(|e| CliError::Usage(format!("--at-q {q:?}: {e}")))?;
                    value.eval_at(&q).to_string()
                }
            };
            Ok(Output::ok(format!("{text}\n")))
        }
        Command::Verify { n_max, suite } => {
            let checks = verify::run(suite, n_max, engine);
            let mut text: String = checks.iter().map(|c| format!("{c}\n")).collect();
            let success = verify::all_passed(&checks);
            let failed = checks.iter().filter(|c| !c.passed).count();
            text.push_str(&if success {
                format!("verify: {} checks passed\n", checks.len())
            } else {
                format!("verify: {failed} of {} checks failed\n", checks.len())
            });
            Ok(Output { text, success })
        }
    }
}

/// `auto` answers odd `μ` from a cached table when one exists, and otherwise
/// uses the recursive method, which accepts any `μ`.
fn character(
    engine: &Engine,
    cache: &Cache,
    method: MethodArg,
    lambda: &StrictPartition,
    mu: &Partition,
) -> Result<QPoly, CliError> {
    if let Some(m) = method.explicit() {
        return Ok(engine.character(m, lambda, mu)?);
    }
    if lambda.weight() == mu.weight() && mu.is_odd() {
        if let Some(v) = cache.load(mu.weight()).and_then(|t| t.get(lambda, mu).cloned()) {
            return Ok(v);
        }
    }
    Ok(engine.character(Method::Recursive, lambda, mu)?)
}

/// `auto` reads the cache, and on a miss computes the table twice (recursive
/// and Pfaffian) and stores it only if the two agree.
fn table(engine: &Engine, cache: &Cache, n: u32, method: MethodArg) -> Result<CharTable, CliError> {
    if let Some(m) = method.explicit() {
        return Ok(engine.char_table(n, m)?);
    }
    if let Some(t) = cache.load(n) {
        return Ok(t);
    }
    let table = engine.char_table(n, Method::Recursive)?;
    if cache.is_enabled() {
        let check = engine.char_table(n, Method::Pfaffian)?;
        if check != table {
            return Err(CliError::Internal(format!("recursive and pfaffian tables differ for n={n}")));
        }
        cache.store(&table)?;
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Result<Output, CliError> {
        let cli = Cli::try_parse_from(std::iter::once("hcchar").chain(args.iter().copied())).unwrap();
        run(cli, &Cache::disabled())
    }

    #[test]
    fn char_values() {
        let out = run_args(&["char", "--lambda", "4,2", "--mu", "3,3"]).unwrap();
        assert_eq!(out.text, "4*q^4 - 16*q^3 + 28*q^2 - 16*q + 4\n");
        let out = run_args(&["char", "--lambda", "3", "--mu", "1,1,1", "--method", "pieri"]).unwrap();
        assert_eq!(out.text, "8\n");
    }

    #[test]
    fn error_codes() {
        let e = run_args(&["char", "--lambda", "2,2", "--mu", "3,1"]).unwrap_err();
        assert_eq!(e.exit_code(), 2);
        let e = run_args(&["char", "--lambda", "4", "--mu", "2,2", "--method", "pieri"]).unwrap_err();
        assert_eq!(e.exit_code(), 2);
        let e = run_args(&["sbtr", "--mu", "3", "--nu", "2", "--at-q", "1"]).unwrap_err();
        assert_eq!(e.exit_code(), 2);
        let e = run_args(&["sbtr", "--mu", "3", "--nu", "3", "--at-q", "x"]).unwrap_err();
        assert_eq!(e.exit_code(), 2);
        let nd = CliError::from(hcchar_core::Error::NonDivisible {
            poly: "q".into(),
            power: 1,
        });
        assert_eq!(nd.exit_code(), 3);
    }

    #[test]
    fn sbtr_at_points() {
        let out = run_args(&["sbtr", "--mu", "1,1", "--nu", "1,1", "--at-q", "1"]).unwrap();
        assert_eq!(out.text, "8\n");
        let out = run_args(&["sbtr", "--mu", "1", "--nu", "1", "--at-q", "-1/2"]).unwrap();
        assert_eq!(out.text, "2\n");
    }
}
