//! Partitions, compositions, shifted diagrams and skew-shape analysis.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polyring::QPoly;

/// Fixed-length vector of nonnegative parts; zeros are significant.
pub type Composition = Vec<u32>;

fn parse_parts(s: &str) -> Result<Vec<u32>> {
    let s = s.trim();
    if s.is_empty() || s == "-" {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<u32>()
                .map_err(|_| Error::Parse(format!("bad part {tok:?} in {s:?}")))
        })
        .collect()
}

fn write_parts(f: &mut fmt::Formatter<'_>, parts: &[u32]) -> fmt::Result {
    if parts.is_empty() {
        return f.write_str("-");
    }
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{p}")?;
    }
    Ok(())
}

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// `(1^n)`.
    pub fn ones(n: u32) -> Self {
        Partition { parts: vec![1; n as usize] }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn is_odd(&self) -> bool {
        self.parts.iter().all(|p| p % 2 == 1)
    }

    pub fn is_strict(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    /// Part value to multiplicity.
    pub fn multiplicities(&self) -> BTreeMap<u32, u32> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    /// Union of multisets, re-sorted.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn to_strict(&self) -> Result<StrictPartition> {
        StrictPartition::new(self.parts.clone())
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.parts
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_parts(s)?)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.parts)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// A strictly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct StrictPartition {
    parts: Vec<u32>,
}

impl StrictPartition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not strictly decreasing")));
        }
        Ok(StrictPartition { parts })
    }

    /// Drops trailing zeros; the rest must already be strict.
    pub fn from_padded(parts: &[u32]) -> Result<Self> {
        let end = parts.iter().rposition(|&p| p != 0).map_or(0, |i| i + 1);
        Self::new(parts[..end].to_vec())
    }

    pub fn empty() -> Self {
        StrictPartition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Part `i` (0-indexed), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// `⌊l/2⌋`.
    pub fn epsilon(&self) -> u32 {
        (self.len() / 2) as u32
    }

    /// `l mod 2`.
    pub fn delta(&self) -> u32 {
        (self.len() % 2) as u32
    }

    /// Entrywise containment `other ⊆ self`.
    pub fn contains(&self, other: &StrictPartition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// The partition without its first part.
    pub fn tail(&self) -> StrictPartition {
        StrictPartition {
            parts: self.parts.get(1..).unwrap_or_default().to_vec(),
        }
    }

    pub fn as_partition(&self) -> Partition {
        Partition { parts: self.parts.clone() }
    }
}

impl TryFrom<Vec<u32>> for StrictPartition {
    type Error = Error;
    fn try_from(parts: Vec<u32>) -> Result<Self> {
        StrictPartition::new(parts)
    }
}

impl From<StrictPartition> for Vec<u32> {
    fn from(p: StrictPartition) -> Vec<u32> {
        p.parts
    }
}

impl FromStr for StrictPartition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        StrictPartition::new(parse_parts(s)?)
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.parts)
    }
}

impl fmt::Debug for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PartitionClass {
    All,
    Strict,
    Odd,
}

/// All partitions of `n` in the class, reverse-lexicographic (largest first).
pub fn enumerate_partitions(n: u32, class: PartitionClass) -> Vec<Partition> {
    fn rec(rest: u32, max: u32, class: PartitionClass, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=max.min(rest)).rev() {
            if class == PartitionClass::Odd && p % 2 == 0 {
                continue;
            }
            cur.push(p);
            let next_max = if class == PartitionClass::Strict { p - 1 } else { p };
            rec(rest - p, next_max, class, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, class, &mut Vec::new(), &mut out);
    out
}

pub fn strict_partitions(n: u32) -> Vec<StrictPartition> {
    enumerate_partitions(n, PartitionClass::Strict)
        .into_iter()
        .map(|p| StrictPartition { parts: p.parts })
        .collect()
}

pub fn odd_partitions(n: u32) -> Vec<Partition> {
    enumerate_partitions(n, PartitionClass::Odd)
}

/// Strict partitions of every weight up to `max_weight`, by weight then reverse-lex.
pub fn strict_partitions_up_to(max_weight: u32) -> Vec<StrictPartition> {
    (0..=max_weight).flat_map(strict_partitions).collect()
}

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `z_λ = Π i^{m_i} m_i!`.
pub fn z_lambda(lambda: &Partition) -> BigInt {
    lambda
        .multiplicities()
        .into_iter()
        .fold(BigInt::one(), |acc, (i, m)| acc * BigInt::from(i).pow(m) * factorial(m))
}

/// `Π (1 - t^{λ_i})`.
pub fn zt_denominator(lambda: &Partition) -> QPoly {
    lambda
        .parts()
        .iter()
        .map(|&p| QPoly::one() - QPoly::one().shift(p as usize))
        .product()
}

/// All `τ` with `0 <= τ_i <= bounds_i` and `Σ τ_i = k`.
pub fn bounded_compositions(k: u32, bounds: &[u32]) -> Vec<Composition> {
    fn rec(i: usize, rest: u32, bounds: &[u32], suffix_cap: &[u32], cur: &mut Vec<u32>, out: &mut Vec<Composition>) {
        if i == bounds.len() {
            if rest == 0 {
                out.push(cur.clone());
            }
            return;
        }
        if suffix_cap[i] < rest {
            return;
        }
        for v in (0..=bounds[i].min(rest)).rev() {
            cur.push(v);
            rec(i + 1, rest - v, bounds, suffix_cap, cur, out);
            cur.pop();
        }
    }
    let mut suffix_cap = vec![0u32; bounds.len() + 1];
    for i in (0..bounds.len()).rev() {
        suffix_cap[i] = suffix_cap[i + 1].saturating_add(bounds[i]);
    }
    let mut out = Vec::new();
    rec(0, k, bounds, &suffix_cap, &mut Vec::new(), &mut out);
    out
}

/// All length-`len` nonnegative vectors summing to `k`.
pub fn all_compositions(k: u32, len: usize) -> Vec<Composition> {
    bounded_compositions(k, &vec![k; len])
}

/// Every composition obtained by merging adjacent parts of `rho`, including `rho`.
pub fn coarsenings(rho: &[u32]) -> Vec<Composition> {
    if rho.is_empty() {
        return vec![Vec::new()];
    }
    let gaps = rho.len() - 1;
    (0u64..1 << gaps)
        .map(|mask| {
            let mut out = vec![rho[0]];
            for (g, &r) in rho[1..].iter().enumerate() {
                if mask >> g & 1 == 1 {
                    *out.last_mut().unwrap() += r;
                } else {
                    out.push(r);
                }
            }
            out
        })
        .collect()
}

/// Cells `(row, col)` of the shifted diagram, 1-indexed; row `i` starts at column `i`.
pub fn shifted_cells(lambda: &StrictPartition) -> Vec<(u32, u32)> {
    skew_shifted_cells(lambda, &StrictPartition::empty())
}

/// Cells of the shifted skew diagram `λ*/μ*`.
pub fn skew_shifted_cells(lambda: &StrictPartition, mu: &StrictPartition) -> Vec<(u32, u32)> {
    let mut cells = Vec::new();
    for (i, &l) in lambda.parts().iter().enumerate() {
        let row = i as u32 + 1;
        for d in mu.part(i)..l {
            cells.push((row, row + d));
        }
    }
    cells
}

/// `g^λ`, the number of standard shifted tableaux, from the product formula.
pub fn shifted_syt_count(lambda: &StrictPartition) -> BigInt {
    let p = lambda.parts();
    let mut acc = BigRational::from_integer(factorial(lambda.weight()));
    for (i, &a) in p.iter().enumerate() {
        acc /= BigRational::from_integer(factorial(a));
        for &b in &p[i + 1..] {
            acc *= BigRational::new(BigInt::from(a - b), BigInt::from(a + b));
        }
    }
    debug_assert!(acc.is_integer());
    acc.to_integer()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SkewKind {
    NotGds,
    GeneralizedStrip,
    ShiftedBorderStrip,
    DoubleStrip,
    GeneralizedDoubleStrip,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewClassification {
    pub kind: SkewKind,
    /// Number of diagonals holding exactly two cells.
    pub c: u32,
    /// Row-count compositions (top to bottom) of the components formed by
    /// cells on single-cell diagonals.
    pub beta_components: Vec<Composition>,
    /// `l(λ) - l(μ)`.
    pub l_jump: i64,
}

impl SkewClassification {
    pub fn is_gds(&self) -> bool {
        self.kind != SkewKind::NotGds
    }

    /// Number of β components.
    pub fn m(&self) -> usize {
        self.beta_components.len()
    }

    fn not_gds(l_jump: i64) -> Self {
        SkewClassification {
            kind: SkewKind::NotGds,
            c: 0,
            beta_components: Vec::new(),
            l_jump,
        }
    }
}

/// Row intervals `[first, last]` of shifted columns, one per nonempty row.
fn skew_rows(outer: &[u32], inner: &[u32]) -> Vec<Option<(u32, u32)>> {
    outer
        .iter()
        .enumerate()
        .map(|(i, &o)| {
            let inn = inner.get(i).copied().unwrap_or(0);
            let row = i as u32 + 1;
            (o > inn).then(|| (row + inn, row + o - 1))
        })
        .collect()
}

fn has_2x2_block(outer: &[u32], inner: &[u32]) -> bool {
    let rows = skew_rows(outer, inner);
    rows.windows(2).any(|w| match (w[0], w[1]) {
        (Some((a0, b0)), Some((a1, b1))) => a0.max(a1) < b0.min(b1),
        _ => false,
    })
}

/// Whether some strict `ν` with `μ ⊆ ν ⊆ λ` splits the skew into two
/// generalized strips.
fn gds_witness_exists(lambda: &StrictPartition, mu: &StrictPartition) -> bool {
    fn rec(i: usize, lambda: &[u32], mu: &StrictPartition, nu: &mut Vec<u32>) -> bool {
        if i == lambda.len() {
            return !has_2x2_block(lambda, nu) && !has_2x2_block(nu, mu.parts());
        }
        let lo = mu.part(i);
        let prev = if i == 0 { u32::MAX } else { nu[i - 1] };
        // Strictness: once a row is empty the rest must be too.
        let hi = if prev == 0 { 0 } else { lambda[i].min(prev.saturating_sub(1)) };
        if lo > hi {
            return false;
        }
        for v in (lo..=hi).rev() {
            nu.push(v);
            if rec(i + 1, lambda, mu, nu) {
                return true;
            }
            nu.pop();
        }
        false
    }
    rec(0, lambda.parts(), mu, &mut Vec::new())
}

/// Classifies the shifted skew `λ*/μ*`.
pub fn classify_skew(lambda: &StrictPartition, mu: &StrictPartition) -> SkewClassification {
    let l_jump = lambda.len() as i64 - mu.len() as i64;
    if !lambda.contains(mu) {
        return SkewClassification::not_gds(l_jump);
    }
    // Row i (1-indexed) covers diagonals col-row in [μ_i, λ_i).
    let top = lambda.part(0);
    let mut diag_count = vec![0u32; top as usize];
    for (i, &l) in lambda.parts().iter().enumerate() {
        for d in mu.part(i)..l {
            diag_count[d as usize] += 1;
        }
    }
    if diag_count.iter().any(|&n| n > 2) || !(0..=2).contains(&l_jump) {
        return SkewClassification::not_gds(l_jump);
    }
    if !gds_witness_exists(lambda, mu) {
        return SkewClassification::not_gds(l_jump);
    }
    let c = diag_count.iter().filter(|&&n| n == 2).count() as u32;
    let beta: Vec<(u32, u32)> = skew_shifted_cells(lambda, mu)
        .into_iter()
        .filter(|&(r, col)| diag_count[(col - r) as usize] == 1)
        .collect();
    let beta_components = edge_components(&beta)
        .into_iter()
        .map(|comp| {
            let mut rows: BTreeMap<u32, u32> = BTreeMap::new();
            for (r, _) in comp {
                *rows.entry(r).or_insert(0) += 1;
            }
            rows.into_values().collect()
        })
        .collect::<Vec<Composition>>();
    let m = beta_components.len();
    let kind = match (c, m) {
        (0, 1) => SkewKind::ShiftedBorderStrip,
        (0, _) => SkewKind::GeneralizedStrip,
        (_, 1) => SkewKind::DoubleStrip,
        _ => SkewKind::GeneralizedDoubleStrip,
    };
    SkewClassification {
        kind,
        c,
        beta_components,
        l_jump,
    }
}

/// Edge-connected components, each sorted, ordered by their first cell.
fn edge_components(cells: &[(u32, u32)]) -> Vec<Vec<(u32, u32)>> {
    let index: BTreeMap<(u32, u32), usize> = cells.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let mut seen = vec![false; cells.len()];
    let mut comps = Vec::new();
    for start in 0..cells.len() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut stack = vec![start];
        let mut comp = Vec::new();
        while let Some(i) = stack.pop() {
            let (r, c) = cells[i];
            comp.push((r, c));
            let neighbours = [(r.wrapping_sub(1), c), (r + 1, c), (r, c.wrapping_sub(1)), (r, c + 1)];
            for nb in neighbours {
                if let Some(&j) = index.get(&nb) {
                    if !seen[j] {
                        seen[j] = true;
                        stack.push(j);
                    }
                }
            }
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    comps.sort();
    comps
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PieriMode {
    /// Strict `λ ⊃ κ` with `λ/κ` a horizontal strip.
    Add,
    /// Strict `ξ ⊂ κ` with `κ/ξ` a horizontal strip.
    Remove,
}

/// Number of columns `i >= 1` of the ordinary skew diagram `outer/inner` that
/// hold a cell while column `i + 1` does not.
pub fn pieri_a(outer: &StrictPartition, inner: &StrictPartition) -> u32 {
    let width = outer.part(0);
    // Column j (1-indexed) holds a skew cell iff some row has inner_i < j <= outer_i.
    let occupied = |j: u32| {
        outer
            .parts()
            .iter()
            .enumerate()
            .any(|(i, &o)| inner.part(i) < j && j <= o)
    };
    (1..=width).filter(|&j| occupied(j) && !occupied(j + 1)).count() as u32
}

/// Horizontal `r`-strips on the ordinary diagram of `kappa`, with their `a`-statistic.
pub fn pieri_strips(kappa: &StrictPartition, r: u32, mode: PieriMode) -> Vec<(StrictPartition, u32)> {
    let k = kappa.parts();
    let mut out = Vec::new();
    match mode {
        PieriMode::Remove => {
            // Interlacing κ_1 >= ξ_1 >= κ_2 >= ξ_2 >= ...
            let bounds: Vec<(u32, u32)> = (0..k.len())
                .map(|i| (k.get(i + 1).copied().unwrap_or(0), k[i]))
                .collect();
            for xi in interlacing(&bounds, kappa.weight().checked_sub(r)) {
                if let Ok(xi) = StrictPartition::from_padded(&xi) {
                    let a = pieri_a(kappa, &xi);
                    out.push((xi, a));
                }
            }
        }
        PieriMode::Add => {
            // λ_1 >= κ_1 >= λ_2 >= κ_2 >= ... >= λ_{l+1} >= 0
            let mut bounds: Vec<(u32, u32)> = Vec::with_capacity(k.len() + 1);
            for i in 0..=k.len() {
                let lo = k.get(i).copied().unwrap_or(0);
                let hi = if i == 0 { lo + r } else { k[i - 1] };
                bounds.push((lo, hi));
            }
            for lam in interlacing(&bounds, Some(kappa.weight() + r)) {
                if let Ok(lam) = StrictPartition::from_padded(&lam) {
                    let a = pieri_a(&lam, kappa);
                    out.push((lam, a));
                }
            }
        }
    }
    out.sort_by(|a, b| b.0.cmp(&a.0));
    out
}

/// Vectors with entries in the given inclusive ranges summing to `total`.
fn interlacing(bounds: &[(u32, u32)], total: Option<u32>) -> Vec<Vec<u32>> {
    let Some(total) = total else { return Vec::new() };
    let lo_sum: u32 = bounds.iter().map(|b| b.0).sum();
    if total < lo_sum {
        return Vec::new();
    }
    let extra: Vec<u32> = bounds.iter().map(|&(lo, hi)| hi.saturating_sub(lo)).collect();
    bounded_compositions(total - lo_sum, &extra)
        .into_iter()
        .map(|e| e.iter().zip(bounds).map(|(x, b)| x + b.0).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sp(p: &[u32]) -> StrictPartition {
        StrictPartition::new(p.to_vec()).unwrap()
    }

    fn pt(p: &[u32]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(strict_partitions(3), vec![sp(&[3]), sp(&[2, 1])]);
        for class in [PartitionClass::All, PartitionClass::Strict, PartitionClass::Odd] {
            assert_eq!(enumerate_partitions(0, class), vec![Partition::empty()]);
        }
        assert_eq!(
            odd_partitions(6),
            vec![pt(&[5, 1]), pt(&[3, 3]), pt(&[3, 1, 1, 1]), Partition::ones(6)]
        );
        assert_eq!(enumerate_partitions(5, PartitionClass::All).len(), 7);
    }

    #[test]
    fn euler_identity() {
        for n in 0..=20 {
            assert_eq!(strict_partitions(n).len(), odd_partitions(n).len(), "n = {n}");
        }
    }

    #[test]
    fn z_values() {
        assert_eq!(z_lambda(&pt(&[3])), BigInt::from(3));
        assert_eq!(z_lambda(&pt(&[1, 1, 1])), BigInt::from(6));
        assert_eq!(z_lambda(&pt(&[3, 3, 1])), BigInt::from(18));
        assert_eq!(z_lambda(&Partition::empty()), BigInt::from(1));
    }

    #[test]
    fn zt_values() {
        assert_eq!(zt_denominator(&pt(&[1])), QPoly::from_ints(&[1, -1]));
        assert_eq!(
            zt_denominator(&pt(&[3, 1])),
            QPoly::from_ints(&[1, 0, 0, -1]) * QPoly::from_ints(&[1, -1])
        );
        assert_eq!(zt_denominator(&Partition::empty()), QPoly::one());
    }

    #[test]
    fn composition_examples() {
        assert_eq!(bounded_compositions(1, &[3, 1]), vec![vec![1, 0], vec![0, 1]]);
        assert_eq!(bounded_compositions(4, &[3, 1]), vec![vec![3, 1]]);
        let mut got = bounded_compositions(2, &[3, 3, 1]);
        got.sort();
        let mut want = vec![vec![2, 0, 0], vec![1, 1, 0], vec![1, 0, 1], vec![0, 2, 0], vec![0, 1, 1]];
        want.sort();
        assert_eq!(got, want);
        assert_eq!(all_compositions(2, 2), vec![vec![2, 0], vec![1, 1], vec![0, 2]]);
        assert_eq!(all_compositions(0, 3), vec![vec![0, 0, 0]]);
        assert_eq!(all_compositions(3, 2).len(), 4);
        assert_eq!(all_compositions(3, 0).len(), 0);
        assert_eq!(all_compositions(0, 0), vec![Vec::<u32>::new()]);
    }

    #[test]
    fn coarsening_examples() {
        let mut c = coarsenings(&[1, 1]);
        c.sort();
        assert_eq!(c, vec![vec![1, 1], vec![2]]);
        let mut c = coarsenings(&[1, 2, 1]);
        c.sort();
        assert_eq!(c, vec![vec![1, 2, 1], vec![1, 3], vec![3, 1], vec![4]]);
        assert_eq!(coarsenings(&[1; 5]).len(), 16);
    }

    #[test]
    fn shifted_diagrams() {
        assert_eq!(shifted_cells(&sp(&[2, 1])), vec![(1, 1), (1, 2), (2, 2)]);
        assert_eq!(shifted_cells(&sp(&[3])), vec![(1, 1), (1, 2), (1, 3)]);
        assert_eq!(shifted_cells(&sp(&[6, 5, 4, 3, 2])).len(), 20);
    }

    #[test]
    fn double_strip_example() {
        let cl = classify_skew(&sp(&[6, 5, 4, 3, 2]), &sp(&[5, 4, 2]));
        assert_eq!(cl.kind, SkewKind::DoubleStrip);
        assert_eq!(cl.c, 3);
        assert_eq!(cl.beta_components, vec![vec![1, 1, 1]]);
        assert_eq!(cl.l_jump, 2);
    }

    #[test]
    fn large_gds_example() {
        let cl = classify_skew(
            &sp(&[15, 14, 10, 8, 7, 6, 5, 3, 1]),
            &sp(&[13, 11, 8, 6, 5, 4, 2, 1]),
        );
        assert_eq!(cl.kind, SkewKind::GeneralizedDoubleStrip);
        assert_eq!(cl.c, 5);
        assert_eq!(cl.m(), 5);
    }

    #[test]
    fn trivial_and_rejected_skews() {
        let cl = classify_skew(&sp(&[4, 2]), &sp(&[4, 2]));
        assert_eq!(cl.kind, SkewKind::GeneralizedStrip);
        assert_eq!((cl.c, cl.m()), (0, 0));
        assert!(!classify_skew(&sp(&[2]), &sp(&[3])).is_gds());
        // (3,2)/∅ has diagonal 1 holding two cells and no 2x2 block.
        assert!(classify_skew(&sp(&[3, 2]), &StrictPartition::empty()).is_gds());
        // (3,2,1)/∅: the main diagonal has three cells.
        assert!(!classify_skew(&sp(&[3, 2, 1]), &StrictPartition::empty()).is_gds());
        let one_box = classify_skew(&sp(&[3, 1]), &sp(&[3]));
        assert_eq!(one_box.kind, SkewKind::ShiftedBorderStrip);
        assert_eq!(one_box.beta_components, vec![vec![1]]);
    }

    #[test]
    fn border_strips_are_connected_without_blocks() {
        for n in 0..=8 {
            for lam in strict_partitions(n) {
                for k in 0..=n {
                    for mu in strict_partitions(n - k) {
                        let cl = classify_skew(&lam, &mu);
                        if cl.kind == SkewKind::ShiftedBorderStrip {
                            assert_eq!(cl.c, 0);
                            assert!(!has_2x2_block(lam.parts(), mu.parts()));
                            let cells = skew_shifted_cells(&lam, &mu);
                            assert_eq!(edge_components(&cells).len(), 1, "{lam:?}/{mu:?}");
                        }
                        if cl.is_gds() && cl.l_jump == 2 {
                            // Both main-diagonal cells sit on a length-2 diagonal.
                            let diag0 = skew_shifted_cells(&lam, &mu)
                                .into_iter()
                                .filter(|&(r, c)| r == c)
                                .count();
                            assert_eq!(diag0, 2, "{lam:?}/{mu:?}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn pieri_examples() {
        assert_eq!(pieri_strips(&sp(&[2]), 1, PieriMode::Remove), vec![(sp(&[1]), 1)]);
        assert_eq!(
            pieri_strips(&StrictPartition::empty(), 0, PieriMode::Remove),
            vec![(StrictPartition::empty(), 0)]
        );
        assert_eq!(
            pieri_strips(&StrictPartition::empty(), 0, PieriMode::Add),
            vec![(StrictPartition::empty(), 0)]
        );
        let got: Vec<StrictPartition> = pieri_strips(&sp(&[3, 1]), 2, PieriMode::Remove)
            .into_iter()
            .map(|(x, _)| x)
            .collect();
        assert_eq!(got, vec![sp(&[2])]);
    }

    #[test]
    fn add_and_remove_are_inverse() {
        for n in 0..=7 {
            for kappa in strict_partitions(n) {
                for r in 0..=4 {
                    for (lam, a) in pieri_strips(&kappa, r, PieriMode::Add) {
                        let back = pieri_strips(&lam, r, PieriMode::Remove);
                        assert!(back.contains(&(kappa.clone(), a)), "{kappa:?} + {r} -> {lam:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn syt_counts() {
        assert_eq!(shifted_syt_count(&sp(&[5])), BigInt::from(1));
        assert_eq!(shifted_syt_count(&sp(&[2, 1])), BigInt::from(1));
        assert_eq!(shifted_syt_count(&sp(&[3, 2, 1])), BigInt::from(2));
        assert_eq!(shifted_syt_count(&StrictPartition::empty()), BigInt::from(1));
    }

    #[test]
    fn parsing_and_display() {
        assert_eq!("4,2,1".parse::<StrictPartition>().unwrap(), sp(&[4, 2, 1]));
        assert_eq!("-".parse::<StrictPartition>().unwrap(), StrictPartition::empty());
        assert_eq!(StrictPartition::empty().to_string(), "-");
        assert_eq!(sp(&[4, 2, 1]).to_string(), "4,2,1");
        assert!("2,2".parse::<StrictPartition>().is_err());
        assert!("1,2".parse::<Partition>().is_err());
        assert!("3,x".parse::<Partition>().is_err());
        assert_eq!("3, 3 ,1".parse::<Partition>().unwrap(), pt(&[3, 3, 1]));
        let json = serde_json::to_string(&sp(&[5, 2])).unwrap();
        assert_eq!(json, "[5,2]");
        assert!(serde_json::from_str::<StrictPartition>("[2,5]").is_err());
    }

    #[test]
    fn statistics() {
        let l = sp(&[5, 3, 1]);
        assert_eq!((l.epsilon(), l.delta()), (1, 1));
        assert_eq!(sp(&[4, 2]).epsilon(), 1);
        assert_eq!(sp(&[4, 2]).delta(), 0);
        assert!(sp(&[4, 2]).contains(&sp(&[3])));
        assert!(!sp(&[4, 2]).contains(&sp(&[3, 2, 1])));
    }

    proptest! {
        #[test]
        fn coarsening_count(rho in prop::collection::vec(1u32..4, 1..8)) {
            let c = coarsenings(&rho);
            prop_assert_eq!(c.len(), 1usize << (rho.len() - 1));
            for tau in &c {
                prop_assert_eq!(tau.iter().sum::<u32>(), rho.iter().sum::<u32>());
            }
        }

        #[test]
        fn compositions_respect_bounds(k in 0u32..7, bounds in prop::collection::vec(0u32..4, 0..5)) {
            for tau in bounded_compositions(k, &bounds) {
                prop_assert_eq!(tau.iter().sum::<u32>(), k);
                prop_assert!(tau.iter().zip(&bounds).all(|(a, b)| a <= b));
            }
        }
    }
}
