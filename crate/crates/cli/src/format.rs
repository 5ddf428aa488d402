//! Table renderers: JSON (round-trippable), CSV and LaTeX.

use std::fmt::Write as _;

use hcchar_core::{CharTable, Partition, QPoly, StrictPartition};
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Latex,
}

#[derive(Debug, Serialize, Deserialize)]
struct JsonCell {
    lambda: StrictPartition,
    mu: Partition,
    poly: QPoly,
}

#[derive(Debug, Serialize, Deserialize)]
struct JsonTable {
    n: u32,
    cells: Vec<JsonCell>,
    version: u32,
}

pub fn render(table: &CharTable, format: Format) -> String {
    match format {
        Format::Json => to_json(table),
        Format::Csv => to_csv(table),
        Format::Latex => to_latex(table),
    }
}

pub fn to_json(table: &CharTable) -> String {
    let doc = JsonTable {
        n: table.n,
        cells: table
            .cells()
            .map(|(lambda, mu, poly)| JsonCell {
                lambda: lambda.clone(),
                mu: mu.clone(),
                poly: poly.clone(),
            })
            .collect(),
        version: SCHEMA_VERSION,
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("table serializes");
    s.push('\n');
    s
}

/// Reads a table written by [`to_json`]. Rows and columns are rebuilt from the
/// order in which cells appear.
pub fn from_json(text: &str) -> Result<CharTable, String> {
    let doc: JsonTable = serde_json::from_str(text).map_err(|e| e.to_string())?;
    if doc.version != SCHEMA_VERSION {
        return Err(format!("unsupported schema version {}", doc.version));
    }
    let mut lambdas: Vec<StrictPartition> = Vec::new();
    let mut mus: Vec<Partition> = Vec::new();
    for cell in &doc.cells {
        if !lambdas.contains(&cell.lambda) {
            lambdas.push(cell.lambda.clone());
        }
        if !mus.contains(&cell.mu) {
            mus.push(cell.mu.clone());
        }
    }
    if doc.cells.len() != lambdas.len() * mus.len() {
        return Err("table is not rectangular".into());
    }
    let mut values = vec![vec![QPoly::zero(); lambdas.len()]; mus.len()];
    for (i, cell) in doc.cells.into_iter().enumerate() {
        let (r, c) = (i / lambdas.len(), i % lambdas.len());
        if lambdas[c] != cell.lambda || mus[r] != cell.mu {
            return Err(format!("cell {i} is out of row-major order"));
        }
        values[r][c] = cell.poly;
    }
    Ok(CharTable {
        n: doc.n,
        lambdas,
        mus,
        values,
    })
}

pub fn to_csv(table: &CharTable) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    let header = std::iter::once("mu\\lambda".to_string()).chain(table.lambdas.iter().map(|l| l.to_string()));
    w.write_record(header).expect("in-memory write");
    for (mu, row) in table.mus.iter().zip(&table.values) {
        let record = std::iter::once(mu.to_string()).chain(row.iter().map(|p| p.to_string()));
        w.write_record(record).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 csv")
}

/// `(3,1^2)`-style label with repeated parts written as powers.
pub fn latex_partition(parts: &[u32]) -> String {
    if parts.is_empty() {
        return "\\emptyset".into();
    }
    let mut groups: Vec<(u32, usize)> = Vec::new();
    for &p in parts {
        match groups.last_mut() {
            Some((q, m)) if *q == p => *m += 1,
            _ => groups.push((p, 1)),
        }
    }
    let body: Vec<String> = groups
        .into_iter()
        .map(|(p, m)| if m == 1 { p.to_string() } else { format!("{p}^{{{m}}}") })
        .collect();
    format!("({})", body.join(","))
}

/// Polynomial in LaTeX math: `4q^{4}-16q^{3}+28q^{2}-16q+4`.
pub fn latex_poly(p: &QPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (deg, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let negative = c.is_negative();
        let abs = c.abs();
        if negative {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        let coeff = if abs.is_integer() {
            abs.to_integer().to_string()
        } else {
            format!("\\frac{{{}}}{{{}}}", abs.numer(), abs.denom())
        };
        let unit = abs.is_one();
        match deg {
            0 => out.push_str(&coeff),
            _ => {
                if !unit {
                    out.push_str(&coeff);
                }
                out.push('q');
                if deg > 1 {
                    let _ = write!(out, "^{{{deg}}}");
                }
            }
        }
    }
    out
}

pub fn to_latex(table: &CharTable) -> String {
    let mut s = String::new();
    let cols = "|c".repeat(table.lambdas.len() + 1);
    let _ = writeln!(s, "\\begin{{tabular}}{{{cols}|}}");
    s.push_str("\\hline\n$\\mu\\backslash\\lambda$");
    for l in &table.lambdas {
        let _ = write!(s, " & ${}$", latex_partition(l.parts()));
    }
    s.push_str(" \\\\\n\\hline\n");
    for (mu, row) in table.mus.iter().zip(&table.values) {
        let _ = write!(s, "${}$", latex_partition(mu.parts()));
        for p in row {
            let _ = write!(s, " & ${}$", latex_poly(p));
        }
        s.push_str(" \\\\\n\\hline\n");
    }
    s.push_str("\\end{tabular}\n");
    s
}

/// Cell bodies of a table produced by [`to_latex`], row-major, without `$`.
pub fn latex_cells(latex: &str) -> Vec<Vec<String>> {
    latex
        .lines()
        .filter(|l| l.ends_with("\\\\") && !l.starts_with("$\\mu"))
        .map(|l| {
            l.trim_end_matches("\\\\")
                .split('&')
                .skip(1)
                .map(|c| c.trim().trim_matches('$').to_string())
                .collect()
        })
        .collect()
}
