//! The spin bitrace `sbtr(μ,ν) = (q-1)^{-l(μ)-l(ν)} ⟨g_μ, g_ν⟩`.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::One;

use crate::characters::{Engine, Method};
use crate::error::{Error, Result};
use crate::partitions::{bounded_compositions, odd_partitions, strict_partitions, z_lambda, Partition};
use crate::polyring::{QPoly, Rat};

/// `α_0, α_1, ...` from the four-term recursion, grown on demand.
#[derive(Debug, Default)]
pub struct AlphaTable {
    values: RwLock<Vec<QPoly>>,
}

impl AlphaTable {
    pub fn shared() -> &'static AlphaTable {
        static SHARED: OnceLock<AlphaTable> = OnceLock::new();
        SHARED.get_or_init(AlphaTable::default)
    }

    /// `α_n`, zero for negative `n`.
    pub fn get(&self, n: i64) -> QPoly {
        if n < 0 {
            return QPoly::zero();
        }
        let n = n as usize;
        if let Some(v) = self.values.read().expect("alpha lock").get(n) {
            return v.clone();
        }
        let mut values = self.values.write().expect("alpha lock");
        while values.len() <= n {
            let next = alpha_step(&values);
            values.push(next);
        }
        values[n].clone()
    }
}

/// `α_n` given `α_0 .. α_{n-1}`:
///
/// ```text
/// α_1 = 2(t-1)^2 α_0          α_2 = (t-1)^2 α_1
/// α_3 = (t-1)^2 α_2 + 2t(t^2-t+1) α_1 + 2t^2(t-1)^2 α_0
/// α_4 = (t-1)^2 α_3 + 2t(t^2-t+1) α_2 + t^2(t-1)^2 α_1
/// α_n = (t-1)^2 α_{n-1} + 2t(t^2-t+1) α_{n-2} + t^2(t-1)^2 α_{n-3} - t^4 α_{n-4}
/// ```
fn alpha_step(prev: &[QPoly]) -> QPoly {
    let n = prev.len();
    let back = |k: usize| &prev[n - k];
    let sq = QPoly::from_ints(&[1, -2, 1]);
    let c2 = QPoly::from_ints(&[0, 2, -2, 2]);
    let c3 = sq.shift(2);
    let c4 = QPoly::from_ints(&[0, 0, 0, 0, 1]);
    match n {
        0 => QPoly::one(),
        1 => sq.scale_int(2),
        2 => &sq * back(1),
        3 => &sq * back(1) + &c2 * back(2) + (&c3 * back(3)).scale_int(2),
        4 => &sq * back(1) + &c2 * back(2) + &c3 * back(3),
        _ => &sq * back(1) + &c2 * back(2) + &c3 * back(3) - &c4 * back(4),
    }
}

/// `α_n` by the recursion.
pub fn alpha(n: i64) -> QPoly {
    AlphaTable::shared().get(n)
}

/// `α_n = Σ_{ρ ∈ OP_n} 2^{l(ρ)} Π (t^{ρ_i} - 1)^2 / z_ρ`, summed with rational
/// coefficients.
pub fn alpha_direct(n: u32) -> QPoly {
    odd_partitions(n)
        .into_iter()
        .map(|rho| {
            let prod: QPoly = rho
                .parts()
                .iter()
                .map(|&r| (QPoly::one().shift(r as usize) - QPoly::one()).pow(2))
                .product();
            let c = Rat::new(BigInt::one() << rho.len(), z_lambda(&rho));
            prod.scale(&c)
        })
        .sum()
}

fn check_weights(mu: &[u32], nu: &[u32]) -> Result<()> {
    let (a, b): (u32, u32) = (mu.iter().sum(), nu.iter().sum());
    if a != b {
        return Err(Error::WeightMismatch {
            left: format!("{mu:?}"),
            left_weight: a,
            right: format!("{nu:?}"),
            right_weight: b,
        });
    }
    Ok(())
}

fn nonzero_len(mu: &[u32]) -> usize {
    mu.iter().filter(|&&m| m != 0).count()
}

/// `T^μ_ν = ⟨g_μ, g_ν⟩`, by `T^μ_ν = Σ_{τ ⊨ μ_1, τ ≤ ν} α_τ T^{μ^{(1)}}_{ν-τ}`.
pub fn t_mu_nu(mu: &[u32], nu: &[u32]) -> Result<QPoly> {
    check_weights(mu, nu)?;
    let mut memo = HashMap::new();
    Ok(t_rec(mu, nu.to_vec(), &mut memo))
}

fn t_rec(mu: &[u32], nu: Vec<u32>, memo: &mut HashMap<(usize, Vec<u32>), QPoly>) -> QPoly {
    let Some((&first, rest)) = mu.split_first() else {
        return if nu.iter().all(|&x| x == 0) { QPoly::one() } else { QPoly::zero() };
    };
    let key = (mu.len(), nu.clone());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let alphas = AlphaTable::shared();
    let mut acc = QPoly::zero();
    for tau in bounded_compositions(first, &nu) {
        let weight: QPoly = tau.iter().map(|&a| alphas.get(a as i64)).product();
        let next: Vec<u32> = nu.iter().zip(&tau).map(|(a, b)| a - b).collect();
        let sub = t_rec(rest, next, memo);
        if !sub.is_zero() {
            acc += weight * sub;
        }
    }
    memo.insert(key, acc.clone());
    acc
}

/// `sbtr(μ,ν) = (q-1)^{-l(μ)-l(ν)} T^μ_ν`.
pub fn sbtr(mu: &[u32], nu: &[u32]) -> Result<QPoly> {
    let t = t_mu_nu(mu, nu)?;
    t.exact_div_qminus1_pow(nonzero_len(mu) + nonzero_len(nu))
}

/// `(q-1)^{-l(μ)-l(ν)} Σ_A Π α_{a_ij}` over nonnegative integer matrices with
/// row sums `μ` and column sums `ν`.
pub fn sbtr_matrix(mu: &[u32], nu: &[u32]) -> Result<QPoly> {
    check_weights(mu, nu)?;
    let alphas = AlphaTable::shared();
    let mut total = QPoly::zero();
    let mut cols = nu.to_vec();
    contingency(mu, &mut cols, QPoly::one(), &mut |w| total += w, alphas);
    total.exact_div_qminus1_pow(nonzero_len(mu) + nonzero_len(nu))
}

/// Fills the matrix row by row, tracking remaining column capacities.
fn contingency(rows: &[u32], cols: &mut Vec<u32>, acc: QPoly, emit: &mut dyn FnMut(QPoly), alphas: &AlphaTable) {
    let Some((&first, rest)) = rows.split_first() else {
        if cols.iter().all(|&c| c == 0) {
            emit(acc);
        }
        return;
    };
    for row in bounded_compositions(first, cols) {
        let w: QPoly = row.iter().map(|&a| alphas.get(a as i64)).product();
        for (c, a) in cols.iter_mut().zip(&row) {
            *c -= a;
        }
        contingency(rest, cols, &acc * &w, emit, alphas);
        for (c, a) in cols.iter_mut().zip(&row) {
            *c += a;
        }
    }
}

/// `Σ_{λ ∈ SP_n} 2^{-δ(λ)} ζ^λ_μ ζ^λ_ν`.
pub fn orthogonality_lhs(engine: &Engine, mu: &Partition, nu: &Partition) -> Result<QPoly> {
    check_weights(mu.parts(), nu.parts())?;
    let mut acc = QPoly::zero();
    for lambda in strict_partitions(mu.weight()) {
        let a = engine.character(Method::Recursive, &lambda, mu)?;
        let b = engine.character(Method::Recursive, &lambda, nu)?;
        let term = a * b;
        acc += if lambda.delta() == 1 {
            term.scale(&Rat::new(BigInt::one(), BigInt::from(2)))
        } else {
            term
        };
    }
    Ok(acc)
}

/// `ζ^reg(μ) = 2^n (q-1)^{n-l(μ)} n! / Π μ_i!`.
pub fn regular_char(mu: &Partition) -> Result<QPoly> {
    if !mu.is_odd() {
        return Err(Error::Domain {
            method: "regular",
            requirement: "an odd partition mu",
        });
    }
    let n = mu.weight();
    let fact = |k: u32| (1..=k).fold(BigInt::one(), |a, i| a * i);
    let multinomial = mu.parts().iter().fold(fact(n), |a, &m| a / fact(m));
    let c = multinomial << n;
    Ok(QPoly::from_bigint(c) * QPoly::q_minus_one().pow(n - mu.len() as u32))
}
