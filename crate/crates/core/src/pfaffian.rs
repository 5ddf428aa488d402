//! Pfaffians over `QPoly` and the principal specialization `Q_{λ/μ}(t,-1)`.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::partitions::StrictPartition;
use crate::polyring::QPoly;
use crate::vertex::{f_pair, f_single};

/// An antisymmetric matrix stored by its strictly upper triangle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AntisymMatrix {
    size: usize,
    upper: Vec<QPoly>,
}

impl AntisymMatrix {
    pub fn zeros(size: usize) -> Self {
        AntisymMatrix {
            size,
            upper: vec![QPoly::zero(); size * size.saturating_sub(1) / 2],
        }
    }

    /// Builds from a full square matrix, reading only the upper triangle.
    pub fn from_rows(rows: &[Vec<QPoly>]) -> Self {
        let mut m = Self::zeros(rows.len());
        for (i, row) in rows.iter().enumerate() {
            for (j, v) in row.iter().enumerate().skip(i + 1) {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn size(&self) -> usize {
        self.size
    }

    fn index(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < j && j < self.size);
        i * self.size - i * (i + 1) / 2 + (j - i - 1)
    }

    /// Sets `a_ij = v` (and implicitly `a_ji = -v`); requires `i < j`.
    pub fn set(&mut self, i: usize, j: usize, v: QPoly) {
        let k = self.index(i, j);
        self.upper[k] = v;
    }

    pub fn get(&self, i: usize, j: usize) -> QPoly {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Equal => QPoly::zero(),
            Less => self.upper[self.index(i, j)].clone(),
            Greater => -&self.upper[self.index(j, i)],
        }
    }

    fn get_ref(&self, i: usize, j: usize) -> &QPoly {
        &self.upper[self.index(i, j)]
    }

    pub fn to_rows(&self) -> Vec<Vec<QPoly>> {
        (0..self.size)
            .map(|i| (0..self.size).map(|j| self.get(i, j)).collect())
            .collect()
    }
}

/// Pf(A) by first-row Laplace expansion, memoized on the set of live indices.
pub fn pfaffian(a: &AntisymMatrix) -> Result<QPoly> {
    let n = a.size();
    if n % 2 == 1 {
        return Err(Error::OddSize(n));
    }
    assert!(n < 64, "pfaffian size {n} exceeds the bitmask memo");
    let mut memo = HashMap::new();
    let full = if n == 0 { 0 } else { u64::MAX >> (64 - n) };
    Ok(pf_rec(a, full, &mut memo))
}

fn pf_rec(a: &AntisymMatrix, live: u64, memo: &mut HashMap<u64, QPoly>) -> QPoly {
    if live == 0 {
        return QPoly::one();
    }
    if let Some(v) = memo.get(&live) {
        return v.clone();
    }
    let i = live.trailing_zeros() as usize;
    let rest = live & !(1 << i);
    let mut acc = QPoly::zero();
    let mut bits = rest;
    let mut pos = 0;
    while bits != 0 {
        let j = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        let aij = a.get_ref(i, j);
        if !aij.is_zero() {
            let minor = pf_rec(a, rest & !(1 << j), memo);
            if !minor.is_zero() {
                let term = aij * &minor;
                if pos % 2 == 0 {
                    acc += term;
                } else {
                    acc -= &term;
                }
            }
        }
        pos += 1;
    }
    memo.insert(live, acc.clone());
    acc
}

/// The matrix `M̂(λ/μ)` whose Pfaffian is `Q_{λ/μ}(t,-1)`.
///
/// With `s = l(λ)` and `μ` padded by one zero part when `l(λ) + l(μ)` is odd,
/// the upper-left block holds `f_{(λ_i, λ_j)}`, the upper-right block holds
/// `f_{λ_i - μ_{r-j+1}}` and the lower-right block vanishes.
pub fn build_skew_matrix(lambda: &StrictPartition, mu: &StrictPartition) -> Result<AntisymMatrix> {
    if !lambda.contains(mu) {
        return Err(Error::NotContained {
            outer: lambda.to_string(),
            inner: mu.to_string(),
        });
    }
    let lam = lambda.parts();
    let mut mu_parts = mu.parts().to_vec();
    if (lam.len() + mu_parts.len()) % 2 == 1 {
        mu_parts.push(0);
    }
    let s = lam.len();
    let r = mu_parts.len();
    let mut m = AntisymMatrix::zeros(s + r);
    for i in 0..s {
        for j in i + 1..s {
            m.set(i, j, f_pair(lam[i] as i64, lam[j] as i64));
        }
        for j in 0..r {
            m.set(i, s + j, f_single(lam[i] as i64 - mu_parts[r - 1 - j] as i64));
        }
    }
    Ok(m)
}

/// `Q_{λ/μ}(t,-1) = Pf(M̂(λ/μ))`.
pub fn skew_q_principal(lambda: &StrictPartition, mu: &StrictPartition) -> Result<QPoly> {
    pfaffian(&build_skew_matrix(lambda, mu)?)
}
