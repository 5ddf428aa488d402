//! Verification suites behind `hcchar verify`.

use std::fmt;

use hcchar_core::bitrace::{orthogonality_lhs, regular_char, sbtr, sbtr_matrix};
use hcchar_core::characters::is_well_shaped;
use hcchar_core::golden::{golden_sizes, golden_table, parse_table_poly};
use hcchar_core::partitions::{odd_partitions, strict_partitions, z_lambda};
use hcchar_core::polyring::rat_int;
use hcchar_core::{Engine, Method, Rat};

use crate::format::{latex_cells, to_latex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Tables,
    Cross,
    Symmetry,
    Ortho,
    All,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{tag} {}: {}", self.name, self.detail)
    }
}

/// Tallies one check: the first failure is kept as the detail.
struct Tally {
    name: String,
    count: usize,
    first_failure: Option<String>,
}

impl Tally {
    fn new(name: String) -> Self {
        Tally {
            name,
            count: 0,
            first_failure: None,
        }
    }

    fn expect(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.count += 1;
        if !ok && self.first_failure.is_none() {
            self.first_failure = Some(what());
        }
    }

    fn fail(&mut self, what: String) {
        self.expect(false, || what);
    }

    fn finish(self, unit: &str) -> Check {
        match self.first_failure {
            None => Check {
                name: self.name,
                passed: true,
                detail: format!("{} {unit}", self.count),
            },
            Some(f) => Check {
                name: self.name,
                passed: false,
                detail: f,
            },
        }
    }
}

pub fn run(suite: Suite, n_max: u32, engine: &Engine) -> Vec<Check> {
    match suite {
        Suite::Tables => tables(n_max, engine),
        Suite::Cross => cross(n_max, engine),
        Suite::Symmetry => symmetry(n_max, engine),
        Suite::Ortho => ortho(n_max, engine),
        Suite::All => [Suite::Tables, Suite::Cross, Suite::Symmetry, Suite::Ortho]
            .into_iter()
            .flat_map(|s| run(s, n_max, engine))
            .collect(),
    }
}

fn tables(n_max: u32, engine: &Engine) -> Vec<Check> {
    let mut out = Vec::new();
    for n in golden_sizes().filter(|&n| n <= n_max) {
        let golden = golden_table(n).expect("listed size");
        let mut cells = Tally::new(format!("tables n={n}"));
        let mut latex = Tally::new(format!("latex n={n}"));
        let want = match golden.values() {
            Ok(v) => v,
            Err(e) => {
                cells.fail(e.to_string());
                out.push(cells.finish("cells"));
                continue;
            }
        };
        match engine.char_table(n, Method::Recursive) {
            Ok(table) => {
                for (r, row) in want.iter().enumerate() {
                    for (c, w) in row.iter().enumerate() {
                        let got = &table.values[r][c];
                        cells.expect(got == w, || {
                            format!("{}/{}: {got} vs {w}", golden.lambdas[c], golden.mus[r])
                        });
                    }
                }
                let rendered = latex_cells(&to_latex(&table));
                for (r, row) in want.iter().enumerate() {
                    for (c, w) in row.iter().enumerate() {
                        let text = rendered.get(r).and_then(|row| row.get(c)).cloned().unwrap_or_default();
                        let parsed = parse_table_poly(&text).ok();
                        latex.expect(parsed.as_ref() == Some(w), || format!("cell ({r},{c}) rendered as {text}"));
                    }
                }
            }
            Err(e) => cells.fail(e.to_string()),
        }
        out.push(cells.finish("cells"));
        out.push(latex.finish("cells"));
    }
    out
}

fn cross(n_max: u32, engine: &Engine) -> Vec<Check> {
    (1..=n_max)
        .map(|n| {
            let mut t = Tally::new(format!("cross n={n}"));
            for mu in odd_partitions(n) {
                for lambda in strict_partitions(n) {
                    let values: Vec<_> = Method::ALL.iter().map(|&m| engine.character(m, &lambda, &mu)).collect();
                    let agree = values[0].is_ok() && values.iter().all(|v| v == &values[0]);
                    t.expect(agree, || format!("methods disagree at {lambda}/{mu}"));
                }
            }
            t.finish("cells x 5 methods")
        })
        .collect()
}

fn symmetry(n_max: u32, engine: &Engine) -> Vec<Check> {
    (1..=n_max)
        .map(|n| {
            let mut t = Tally::new(format!("symmetry n={n}"));
            for mu in odd_partitions(n) {
                for lambda in strict_partitions(n) {
                    match engine.character(Method::Recursive, &lambda, &mu) {
                        Ok(z) => t.expect(is_well_shaped(&z, &mu), || format!("{lambda}/{mu}: {z}")),
                        Err(e) => t.fail(e.to_string()),
                    }
                }
            }
            t.finish("characters palindromic with degree <= n - l(mu)")
        })
        .collect()
}

fn ortho(n_max: u32, engine: &Engine) -> Vec<Check> {
    let mut out = Vec::new();
    let one = rat_int(1);
    for n in 1..=n_max {
        let ops = odd_partitions(n);
        let mut t = Tally::new(format!("ortho n={n}"));
        for mu in &ops {
            for nu in &ops {
                let sides = (
                    orthogonality_lhs(engine, mu, nu),
                    sbtr(mu.parts(), nu.parts()),
                    sbtr_matrix(mu.parts(), nu.parts()),
                );
                match sides {
                    (Ok(a), Ok(b), Ok(c)) => {
                        t.expect(a == b && b == c, || format!("{mu},{nu}: {a} | {b} | {c}"));
                        let want = if mu == nu {
                            Rat::from_integer(z_lambda(mu) << mu.len())
                        } else {
                            rat_int(0)
                        };
                        t.expect(b.eval_at(&one) == want, || format!("{mu},{nu} at q=1"));
                    }
                    (a, b, c) => t.fail(format!("{mu},{nu}: {a:?} {b:?} {c:?}")),
                }
            }
        }
        out.push(t.finish("identities"));
        let mut reg = Tally::new(format!("regular n={n}"));
        let ones = vec![1; n as usize];
        for mu in &ops {
            let closed = regular_char(mu);
            let traced = sbtr(mu.parts(), &ones);
            let ok = matches!((&closed, &traced), (Ok(a), Ok(b)) if a == b);
            reg.expect(ok, || format!("{mu}: {closed:?} vs {traced:?}"));
        }
        out.push(reg.finish("odd mu"));
    }
    out
}

/// True iff every check passed.
pub fn all_passed(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.passed)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_pass_on_small_sizes() {
        let engine = Engine::new();
        for suite in [Suite::Tables, Suite::Cross, Suite::Symmetry, Suite::Ortho] {
            let checks = run(suite, 5, &engine);
            assert!(!checks.is_empty());
            assert!(all_passed(&checks), "{checks:?}");
        }
        assert_eq!(run(Suite::Tables, 4, &engine).len(), 4);
        assert!(run(Suite::Tables, 2, &engine).is_empty());
    }

    #[test]
    fn check_lines() {
        let c = Check {
            name: "cross n=3".into(),
            passed: false,
            detail: "x".into(),
        };
        assert_eq!(c.to_string(), "FAIL cross n=3: x");
    }
}
