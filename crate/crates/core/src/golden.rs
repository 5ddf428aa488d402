//! Reference character tables for `n = 3..=7`, kept in factored notation.
//!
//! Cells are written as products such as `2^2(3)_q(q^2-3q+1)` or
//! `3\cdot2^5(q-1)^2`, where `(k)_q` is the alternating bracket
//! [`round_bracket`]. [`parse_table_poly`] turns them into [`QPoly`] values.

use crate::error::{Error, Result};
use crate::partitions::{Partition, StrictPartition};
use crate::polyring::{round_bracket, QPoly};

/// One reference table: rows are odd `μ`, columns strict `λ`, both reverse-lex.
#[derive(Debug, Clone)]
pub struct GoldenTable {
    pub n: u32,
    pub lambdas: Vec<StrictPartition>,
    pub mus: Vec<Partition>,
    pub cells: Vec<Vec<&'static str>>,
}

impl GoldenTable {
    /// Parsed cell values, `values[row][col]`.
    pub fn values(&self) -> Result<Vec<Vec<QPoly>>> {
        self.cells
            .iter()
            .map(|row| row.iter().map(|c| parse_table_poly(c)).collect())
            .collect()
    }
}

struct RawTable {
    n: u32,
    lambdas: &'static [&'static [u32]],
    rows: &'static [(&'static [u32], &'static [&'static str])],
}

const TABLES: &[RawTable] = &[
    RawTable {
        n: 3,
        lambdas: &[&[3], &[2, 1]],
        rows: &[(&[3], &["2(3)_q", "-2q"]), (&[1, 1, 1], &["2^3", "2^2"])],
    },
    RawTable {
        n: 4,
        lambdas: &[&[4], &[3, 1]],
        rows: &[(&[3, 1], &["2^2(3)_q", "2(q^2-3q+1)"]), (&[1, 1, 1, 1], &["2^4", "2^4"])],
    },
    RawTable {
        n: 5,
        lambdas: &[&[5], &[4, 1], &[3, 2]],
        rows: &[
            (&[5], &["2(5)_q", "-2q(3)_q", "2q^2"]),
            (&[3, 1, 1], &["2^3(3)_q", "2^3(q-1)^2", "2^2(q^2-3q+1)"]),
            (&[1, 1, 1, 1, 1], &["2^5", "3\\cdot2^4", "2^5"]),
        ],
    },
    RawTable {
        n: 6,
        lambdas: &[&[6], &[5, 1], &[4, 2], &[3, 2, 1]],
        rows: &[
            (&[5, 1], &["2^2(5)_q", "2(q^4-3q^3+3q^2-3q+1)", "-2^2q(q-1)^2", "2^2q^2"]),
            (
                &[3, 3],
                &["2^2(3)_q(3)_q", "2^2(3)_q(q^2-3q+1)", "2^2(q^4-4q^3+7q^2-4q+1)", "-2^3q(3)_q"],
            ),
            (&[3, 1, 1, 1], &["2^4(3)_q", "2^3(3q^2-5q+3)", "2^3(3q^2-7q+3)", "2^3(q^2-3q+1)"]),
            (&[1, 1, 1, 1, 1, 1], &["2^6", "2^7", "5\\cdot2^5", "2^6"]),
        ],
    },
    RawTable {
        n: 7,
        lambdas: &[&[7], &[6, 1], &[5, 2], &[4, 3], &[4, 2, 1]],
        rows: &[
            (&[7], &["2(7)_q", "-2q(5)_q", "2q^2(3)_q", "-2q^3", "0"]),
            (
                &[5, 1, 1],
                &[
                    "2^3(5)_q",
                    "2^3(q-1)(4)_q",
                    "2^2(q^4-5q^3+7q^2-5q+1)",
                    "-2^3q(q-1)^2",
                    "-2^3q(q^2-3q+1)",
                ],
            ),
            (
                &[3, 3, 1],
                &[
                    "2^3(3)_q(3)_q",
                    "2^2(3)_q(3q^2-7q+3)",
                    "2^4(q-1)^4",
                    "2^3(q^4-4q^3+7q^2-4q+1)",
                    "2^3(q^4-6q^3+9q^2-6q+1)",
                ],
            ),
            (
                &[3, 1, 1, 1, 1],
                &["2^5(3)_q", "2^5(2q^2-3q+2)", "3\\cdot2^5(q-1)^2", "2^4(3q^2-7q+3)", "2^5(2q^2-5q+2)"],
            ),
            (&[1, 1, 1, 1, 1, 1, 1], &["2^7", "5\\cdot2^6", "2^6\\cdot3^2", "5\\cdot2^6", "7\\cdot2^6"]),
        ],
    },
];

/// The sizes with a reference table.
pub fn golden_sizes() -> impl Iterator<Item = u32> {
    TABLES.iter().map(|t| t.n)
}

pub fn golden_table(n: u32) -> Option<GoldenTable> {
    let raw = TABLES.iter().find(|t| t.n == n)?;
    Some(GoldenTable {
        n,
        lambdas: raw
            .lambdas
            .iter()
            .map(|l| StrictPartition::new(l.to_vec()).expect("strict column label"))
            .collect(),
        mus: raw
            .rows
            .iter()
            .map(|(m, _)| Partition::new(m.to_vec()).expect("row label"))
            .collect(),
        cells: raw.rows.iter().map(|(_, c)| c.to_vec()).collect(),
    })
}

/// Parses the table notation: sums and implicit products of integers, `q`,
/// `(k)_q`, parenthesised subexpressions, `^` powers (optionally braced) and
/// `\cdot`.
pub fn parse_table_poly(text: &str) -> Result<QPoly> {
    let cleaned: String = text
        .replace("\\cdot", "*")
        .replace("\\\\", "")
        .chars()
        .filter(|c| !c.is_whitespace() && *c != '$')
        .collect();
    let mut p = Parser {
        src: cleaned.as_bytes(),
        pos: 0,
    };
    let v = p.expr()?;
    if p.pos != p.src.len() {
        return Err(p.error("trailing input"));
    }
    Ok(v)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn error(&self, what: &str) -> Error {
        Error::Parse(format!(
            "{what} at byte {} of {:?}",
            self.pos,
            String::from_utf8_lossy(self.src)
        ))
    }

    fn expr(&mut self) -> Result<QPoly> {
        let mut acc = QPoly::zero();
        let mut first = true;
        loop {
            let negative = match self.peek() {
                Some(b'-') => {
                    self.pos += 1;
                    true
                }
                Some(b'+') => {
                    self.pos += 1;
                    false
                }
                _ if first => false,
                _ => return Ok(acc),
            };
            let term = self.product()?;
            acc = if negative { acc - term } else { acc + term };
            first = false;
        }
    }

    fn product(&mut self) -> Result<QPoly> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = acc * self.factor()?;
                }
                Some(b'0'..=b'9' | b'q' | b'(') => acc = acc * self.factor()?,
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<QPoly> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let braced = self.peek() == Some(b'{');
            if braced {
                self.pos += 1;
            }
            let e = self.integer()?;
            if braced {
                if self.peek() != Some(b'}') {
                    return Err(self.error("expected '}'"));
                }
                self.pos += 1;
            }
            let e = u32::try_from(e).map_err(|_| self.error("exponent too large"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<QPoly> {
        match self.peek() {
            Some(b'0'..=b'9') => {
                let k = self.integer()?;
                Ok(QPoly::from_int(k))
            }
            Some(b'q') => {
                self.pos += 1;
                Ok(QPoly::q())
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                if self.src[self.pos..].starts_with(b"_q") {
                    self.pos += 2;
                    let k = inner
                        .to_i64_coeffs()
                        .filter(|c| c.len() <= 1)
                        .map(|c| c.first().copied().unwrap_or(0))
                        .ok_or_else(|| self.error("(k)_q needs an integer k"))?;
                    return Ok(round_bracket(k));
                }
                Ok(inner)
            }
            _ => Err(self.error("expected a number, q or '('")),
        }
    }

    fn integer(&mut self) -> Result<i64> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .expect("ascii digits")
            .parse()
            .map_err(|_| self.error("integer overflow"))
    }
}
