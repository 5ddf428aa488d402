//! Irreducible characters `ζ^λ_μ(q)` by five independent routes, plus the
//! closed forms for one-row, two-row, column and hook cases.
//!
//! Every route computes the pure polynomial `G^λ_μ(t) = ⟨g_μ, Q_λ.1⟩`; the
//! normalization `ζ = 2^{-ε(λ)} (q-1)^{-l(μ)} G` is applied once, in
//! [`normalize`].

use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;
use std::str::FromStr;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gamma::{expand_g_mu, inner_product, GammaElement};
use crate::partitions::{
    bounded_compositions, classify_skew, coarsenings, odd_partitions, pieri_strips, shifted_syt_count,
    strict_partitions, Partition, PieriMode, StrictPartition,
};
use crate::pfaffian::skew_q_principal;
use crate::polyring::{rat_int, round_bracket, QPoly, Rat};
use crate::vertex::{f_coeff, g_star_on_basis, q_lambda_vacuum, QBasisElement};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    /// Inner product in the power-sum basis.
    Oracle,
    /// Repeated `g*_k` on the Q-basis with Clifford straightening.
    Recursive,
    /// Peeling one part at a time with skew Pfaffians.
    Pfaffian,
    /// Chains of generalized double strips weighted by `wt_t`.
    Combinatorial,
    /// Removal of the first row through the Pieri rule.
    Pieri,
}

impl Method {
    pub const ALL: [Method; 5] = [
        Method::Oracle,
        Method::Recursive,
        Method::Pfaffian,
        Method::Combinatorial,
        Method::Pieri,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Oracle => "oracle",
            Method::Recursive => "recursive",
            Method::Pfaffian => "pfaffian",
            Method::Combinatorial => "combinatorial",
            Method::Pieri => "pieri",
        }
    }

    /// Whether the public entry point insists on an odd `μ`.
    pub fn requires_odd_mu(self) -> bool {
        matches!(self, Method::Combinatorial | Method::Pieri)
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown method {s:?}")))
    }
}

/// `Σ_{τ coarsening rows} (-1)^{l(rows) - l(τ)} f_τ`: the principal
/// specialization of a shifted border strip with the given row lengths.
pub fn sbs_principal(rows: &[u32]) -> QPoly {
    coarsenings(rows)
        .into_iter()
        .map(|tau| {
            let f = f_coeff(&tau);
            if (rows.len() - tau.len()).is_multiple_of(2) {
                f
            } else {
                -f
            }
        })
        .sum()
}

/// `wt_t(λ/ν) = (-t)^c · 2^{[l(λ) = l(ν) + 2]} · Π_components sbs(rows)`.
pub fn wt_gds(lambda: &StrictPartition, nu: &StrictPartition) -> Result<QPoly> {
    let cl = classify_skew(lambda, nu);
    if !cl.is_gds() {
        return Err(Error::NotGds {
            outer: lambda.to_string(),
            inner: nu.to_string(),
        });
    }
    let sign = if cl.c.is_multiple_of(2) { 1 } else { -1 };
    let mut w = QPoly::from_int(sign).shift(cl.c as usize);
    if cl.l_jump == 2 {
        w = w.scale_int(2);
    }
    for rows in &cl.beta_components {
        w = w * sbs_principal(rows);
    }
    Ok(w)
}

fn sorted_partition(mu: &[u32]) -> Partition {
    let mut parts: Vec<u32> = mu.iter().copied().filter(|&m| m != 0).collect();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Partition::new(parts).expect("positive sorted parts")
}

/// `ζ = 2^{-ε(λ)} (q-1)^{-l(μ)} G`, checking divisibility and integrality.
pub fn normalize(g: &QPoly, lambda: &StrictPartition, mu_len: usize) -> Result<QPoly> {
    let scaled = g.scale(&Rat::new(BigInt::from(1), BigInt::from(1) << lambda.epsilon()));
    let zeta = scaled.exact_div_qminus1_pow(mu_len)?;
    if !zeta.is_integral() {
        return Err(Error::NonIntegral(zeta.to_string()));
    }
    Ok(zeta)
}

type Memo<K, V> = RwLock<HashMap<K, V>>;

fn memo_get<K: Eq + Hash, V: Clone>(memo: &Memo<K, V>, key: &K) -> Option<V> {
    memo.read().expect("memo lock").get(key).cloned()
}

fn memo_put<K: Eq + Hash, V>(memo: &Memo<K, V>, key: K, value: V) {
    memo.write().expect("memo lock").insert(key, value);
}

/// Computation context holding memo tables shared across cells.
///
/// All caches are keyed by pure inputs, so concurrent inserts of the same
/// key store the same value.
#[derive(Default)]
pub struct Engine {
    g_values: Memo<(Method, StrictPartition, Partition), QPoly>,
    g_star: Memo<(u32, StrictPartition), Arc<QBasisElement>>,
    skew_q: Memo<(StrictPartition, StrictPartition), QPoly>,
    weights: Memo<(StrictPartition, StrictPartition), Option<QPoly>>,
    q_vacuum: Memo<StrictPartition, Arc<GammaElement>>,
    g_mu: Memo<Partition, Arc<GammaElement>>,
}

impl Engine {
    pub fn new() -> Self {
        Engine::default()
    }

    /// A process-wide engine used by the free functions.
    pub fn shared() -> &'static Engine {
        static SHARED: OnceLock<Engine> = OnceLock::new();
        SHARED.get_or_init(Engine::new)
    }

    /// `ζ^λ_μ(q)` by the chosen method.
    pub fn character(&self, method: Method, lambda: &StrictPartition, mu: &Partition) -> Result<QPoly> {
        check_weights(lambda, mu)?;
        if method.requires_odd_mu() && !mu.is_odd() {
            return Err(Error::Domain {
                method: method.name(),
                requirement: "an odd partition mu",
            });
        }
        let g = self.g_value(method, lambda, mu.parts());
        normalize(&g, lambda, mu.len())
    }

    /// `G^λ_μ(t) = ⟨g_μ, Q_λ.1⟩` for any composition `μ`, with no domain checks.
    pub fn g_value(&self, method: Method, lambda: &StrictPartition, mu: &[u32]) -> QPoly {
        let weight: u32 = mu.iter().sum();
        if weight != lambda.weight() {
            return QPoly::zero();
        }
        let mu = sorted_partition(mu);
        let key = (method, lambda.clone(), mu.clone());
        if let Some(v) = memo_get(&self.g_values, &key) {
            return v;
        }
        let v = match method {
            Method::Oracle => self.g_oracle(lambda, &mu),
            Method::Recursive => self.g_chain(method, lambda, &mu, |k, lam| self.recursive_step(k, lam)),
            Method::Pfaffian => self.g_chain(method, lambda, &mu, |k, lam| self.pfaffian_step(k, lam)),
            Method::Combinatorial => {
                self.g_chain(method, lambda, &mu, |k, lam| self.combinatorial_step(k, lam))
            }
            Method::Pieri => self.g_pieri(lambda, &mu),
        };
        memo_put(&self.g_values, key, v.clone());
        v
    }

    fn g_oracle(&self, lambda: &StrictPartition, mu: &Partition) -> QPoly {
        let q = match memo_get(&self.q_vacuum, lambda) {
            Some(q) => q,
            None => {
                let q = Arc::new(q_lambda_vacuum(lambda));
                memo_put(&self.q_vacuum, lambda.clone(), q.clone());
                q
            }
        };
        let g = match memo_get(&self.g_mu, mu) {
            Some(g) => g,
            None => {
                let g = Arc::new(expand_g_mu(mu.parts()));
                memo_put(&self.g_mu, mu.clone(), g.clone());
                g
            }
        };
        inner_product(&g, &q)
    }

    /// `G^λ_μ = Σ_ν c(λ, ν) G^ν_{μ without μ_1}` where `step` lists the
    /// coefficients of `g*_{μ_1} Q_λ.1`.
    fn g_chain<F>(&self, method: Method, lambda: &StrictPartition, mu: &Partition, step: F) -> QPoly
    where
        F: Fn(u32, &StrictPartition) -> Vec<(StrictPartition, QPoly)>,
    {
        let Some((&first, rest)) = mu.parts().split_first() else {
            return if lambda.is_empty() { QPoly::one() } else { QPoly::zero() };
        };
        step(first, lambda)
            .into_iter()
            .map(|(nu, c)| c * self.g_value(method, &nu, rest))
            .sum()
    }

    /// Coefficients of `g*_k Q_λ.1` from Clifford straightening.
    pub fn g_star(&self, k: u32, lambda: &StrictPartition) -> Arc<QBasisElement> {
        let key = (k, lambda.clone());
        if let Some(v) = memo_get(&self.g_star, &key) {
            return v;
        }
        let v = Arc::new(g_star_on_basis(k, lambda));
        memo_put(&self.g_star, key, v.clone());
        v
    }

    fn recursive_step(&self, k: u32, lambda: &StrictPartition) -> Vec<(StrictPartition, QPoly)> {
        self.g_star(k, lambda)
            .terms()
            .iter()
            .map(|(nu, c)| (nu.clone(), c.clone()))
            .collect()
    }

    /// `Q_{λ/ν}(t,-1)` through the Pfaffian, memoized.
    pub fn skew_q(&self, lambda: &StrictPartition, nu: &StrictPartition) -> QPoly {
        let key = (lambda.clone(), nu.clone());
        if let Some(v) = memo_get(&self.skew_q, &key) {
            return v;
        }
        let v = skew_q_principal(lambda, nu).unwrap_or_default();
        memo_put(&self.skew_q, key, v.clone());
        v
    }

    fn pfaffian_step(&self, k: u32, lambda: &StrictPartition) -> Vec<(StrictPartition, QPoly)> {
        sub_shapes(lambda, k)
            .into_iter()
            .map(|nu| {
                let c = self.skew_q(lambda, &nu);
                (nu, c)
            })
            .filter(|(_, c)| !c.is_zero())
            .collect()
    }

    /// `wt_t(λ/ν)`, or `None` off generalized double strips.
    pub fn weight(&self, lambda: &StrictPartition, nu: &StrictPartition) -> Option<QPoly> {
        let key = (lambda.clone(), nu.clone());
        if let Some(v) = memo_get(&self.weights, &key) {
            return v;
        }
        let v = wt_gds(lambda, nu).ok();
        memo_put(&self.weights, key, v.clone());
        v
    }

    fn combinatorial_step(&self, k: u32, lambda: &StrictPartition) -> Vec<(StrictPartition, QPoly)> {
        sub_shapes(lambda, k)
            .into_iter()
            .filter_map(|nu| self.weight(lambda, &nu).map(|w| (nu, w)))
            .collect()
    }

    /// `G^λ_μ = Σ_i Σ_{τ ⊆ μ, |τ| = i} Σ_ξ (-1)^{i-λ_1} 2^{a(λ^{[1]}/ξ)} f_τ G^ξ_{μ-τ}`
    /// over `ξ ⊂ λ^{[1]}` with `λ^{[1]}/ξ` a horizontal `(i - λ_1)`-strip.
    fn g_pieri(&self, lambda: &StrictPartition, mu: &Partition) -> QPoly {
        if lambda.is_empty() {
            return if mu.is_empty() { QPoly::one() } else { QPoly::zero() };
        }
        let n = mu.weight();
        let first = lambda.part(0);
        let kappa = lambda.tail();
        let mut acc = QPoly::zero();
        for i in first..=n {
            let strips = pieri_strips(&kappa, i - first, PieriMode::Remove);
            if strips.is_empty() {
                continue;
            }
            for tau in bounded_compositions(i, mu.parts()) {
                let f = f_coeff(&tau);
                let rest: Vec<u32> = mu.parts().iter().zip(&tau).map(|(m, t)| m - t).collect();
                for (xi, a) in &strips {
                    let g = self.g_value(Method::Pieri, xi, &rest);
                    if g.is_zero() {
                        continue;
                    }
                    let sign: i64 = if (i - first).is_multiple_of(2) { 1 } else { -1 };
                    acc += (&f * &g).scale_int(sign << a);
                }
            }
        }
        acc
    }

    /// Every cell of the table for `n`, rows `μ ∈ OP_n`, columns `λ ∈ SP_n`.
    pub fn char_table(&self, n: u32, method: Method) -> Result<CharTable> {
        let lambdas = strict_partitions(n);
        let mus = odd_partitions(n);
        let cells: Vec<(usize, usize)> = (0..mus.len())
            .flat_map(|r| (0..lambdas.len()).map(move |c| (r, c)))
            .collect();
        let values = cells
            .par_iter()
            .map(|&(r, c)| self.character(method, &lambdas[c], &mus[r]))
            .collect::<Result<Vec<QPoly>>>()?;
        let cols = lambdas.len();
        let rows = values.chunks(cols.max(1)).map(<[QPoly]>::to_vec).collect();
        Ok(CharTable {
            n,
            lambdas,
            mus,
            values: rows,
        })
    }
}

fn check_weights(lambda: &StrictPartition, mu: &Partition) -> Result<()> {
    if lambda.weight() != mu.weight() {
        return Err(Error::WeightMismatch {
            left: lambda.to_string(),
            left_weight: lambda.weight(),
            right: mu.to_string(),
            right_weight: mu.weight(),
        });
    }
    Ok(())
}

/// Strict `ν ⊆ λ` with `|ν| = |λ| - k`.
fn sub_shapes(lambda: &StrictPartition, k: u32) -> Vec<StrictPartition> {
    let Some(w) = lambda.weight().checked_sub(k) else {
        return Vec::new();
    };
    strict_partitions(w).into_iter().filter(|nu| lambda.contains(nu)).collect()
}

/// A character table: `values[r][c] = ζ^{lambdas[c]}_{mus[r]}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharTable {
    pub n: u32,
    pub lambdas: Vec<StrictPartition>,
    pub mus: Vec<Partition>,
    pub values: Vec<Vec<QPoly>>,
}

impl CharTable {
    pub fn get(&self, lambda: &StrictPartition, mu: &Partition) -> Option<&QPoly> {
        let c = self.lambdas.iter().position(|l| l == lambda)?;
        let r = self.mus.iter().position(|m| m == mu)?;
        Some(&self.values[r][c])
    }

    /// `(λ, μ, value)` in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = (&StrictPartition, &Partition, &QPoly)> {
        self.mus.iter().enumerate().flat_map(move |(r, mu)| {
            self.lambdas
                .iter()
                .enumerate()
                .map(move |(c, lambda)| (lambda, mu, &self.values[r][c]))
        })
    }
}

pub fn char_oracle(lambda: &StrictPartition, mu: &Partition) -> Result<QPoly> {
    Engine::shared().character(Method::Oracle, lambda, mu)
}

pub fn char_recursive(lambda: &StrictPartition, mu: &Partition) -> Result<QPoly> {
    Engine::shared().character(Method::Recursive, lambda, mu)
}

pub fn char_pfaffian(lambda: &StrictPartition, mu: &Partition) -> Result<QPoly> {
    Engine::shared().character(Method::Pfaffian, lambda, mu)
}

pub fn char_combinatorial(lambda: &StrictPartition, mu: &Partition) -> Result<QPoly> {
    Engine::shared().character(Method::Combinatorial, lambda, mu)
}

pub fn char_pieri(lambda: &StrictPartition, mu: &Partition) -> Result<QPoly> {
    Engine::shared().character(Method::Pieri, lambda, mu)
}

pub fn char_table(n: u32, method: Method) -> Result<CharTable> {
    Engine::shared().char_table(n, method)
}

fn require_odd(mu: &Partition, method: &'static str) -> Result<()> {
    if mu.is_odd() {
        Ok(())
    } else {
        Err(Error::Domain {
            method,
            requirement: "an odd partition mu",
        })
    }
}

/// `ζ^{(n)}_μ = 2^{l(μ)} Π (μ_i)_q`.
pub fn char_one_row(mu: &Partition) -> Result<QPoly> {
    require_odd(mu, "one-row")?;
    let prod: QPoly = mu.parts().iter().map(|&m| round_bracket(m as i64)).product();
    Ok(prod.scale_int(1 << mu.len()))
}

/// `ζ^{(k, n-k)}_μ` from the generating function
/// `C(v) = (2t-2)^r Π_i ((μ_i)_t + 2(t-1) Σ_{j=1}^{μ_i-1} (j)_t (μ_i-j)_t v^j + (μ_i)_t v^{μ_i})`
/// as `G = (-1)^k ([C]_k + [C]_{k+1})|_{v=-1}`.
pub fn char_two_row(k: u32, mu: &Partition) -> Result<QPoly> {
    require_odd(mu, "two-row")?;
    let n = mu.weight();
    if !(2 * k > n && k < n) {
        return Err(Error::BadShape(format!("({k},{}) is not a two-row strict partition", n.saturating_sub(k))));
    }
    // C(v) as a list of QPoly coefficients indexed by the power of v.
    let mut c: Vec<QPoly> = vec![QPoly::from_ints(&[-2, 2]).pow(mu.len() as u32)];
    for &m in mu.parts() {
        let m = m as usize;
        let mut factor = vec![QPoly::zero(); m + 1];
        factor[0] = round_bracket(m as i64);
        factor[m] = round_bracket(m as i64);
        for (j, slot) in factor.iter_mut().enumerate().take(m).skip(1) {
            *slot = QPoly::from_ints(&[-2, 2]) * round_bracket(j as i64) * round_bracket((m - j) as i64);
        }
        let mut next = vec![QPoly::zero(); c.len() + m];
        for (a, ca) in c.iter().enumerate() {
            for (b, fb) in factor.iter().enumerate() {
                next[a + b] += ca * fb;
            }
        }
        c = next;
    }
    let tail_at_minus_one = |from: usize| -> QPoly {
        c.iter()
            .enumerate()
            .skip(from)
            .map(|(i, ci)| if i % 2 == 0 { ci.clone() } else { -ci })
            .sum()
    };
    let k = k as usize;
    let mut g = tail_at_minus_one(k) + tail_at_minus_one(k + 1);
    if k % 2 == 1 {
        g = -g;
    }
    let lambda = StrictPartition::new(vec![k as u32, n - k as u32])?;
    normalize(&g, &lambda, mu.len())
}

/// `ζ^λ_{(1^n)} = 2^{n - ε(λ)} g^λ`.
pub fn char_column(lambda: &StrictPartition) -> QPoly {
    let n = lambda.weight();
    let g = shifted_syt_count(lambda);
    QPoly::from_bigint(g << (n - lambda.epsilon()))
}

/// `ζ^λ_{(k, 1^{n-k})} = 2^{n-k-ε(λ)} (q-1)^{-1} Σ_ν wt_q(λ/ν) g^ν` over
/// `ν` with `λ/ν` a `k`-generalized double strip.
pub fn char_hook_mu(lambda: &StrictPartition, k: u32) -> Result<QPoly> {
    let n = lambda.weight();
    if k.is_multiple_of(2) || k > n || k == 0 {
        return Err(Error::Domain {
            method: "hook",
            requirement: "an odd k with 1 <= k <= n",
        });
    }
    let sum: QPoly = sub_shapes(lambda, k)
        .into_iter()
        .filter_map(|nu| {
            let w = wt_gds(lambda, &nu).ok()?;
            Some(w.scale(&Rat::from_integer(shifted_syt_count(&nu))))
        })
        .sum();
    let exp = (n - k) as i64 - lambda.epsilon() as i64;
    let scaled = if exp >= 0 {
        sum.scale(&Rat::from_integer(BigInt::from(1) << exp))
    } else {
        sum.scale(&Rat::new(BigInt::from(1), BigInt::from(1) << -exp))
    };
    let zeta = scaled.exact_div_qminus1_pow(1)?;
    if !zeta.is_integral() {
        return Err(Error::NonIntegral(zeta.to_string()));
    }
    Ok(zeta)
}

/// Degree bound `n - l(μ)` check and palindromicity, shared by tests and the CLI.
pub fn is_well_shaped(zeta: &QPoly, mu: &Partition) -> bool {
    let bound = mu.weight() as usize - mu.len();
    zeta.is_palindromic() && zeta.degree().is_none_or(|d| d <= bound)
}

/// `ζ` evaluated at `q = 1`.
pub fn at_q_one(zeta: &QPoly) -> Rat {
    zeta.eval_at(&rat_int(1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vertex::f_single;

    fn sp(p: &[u32]) -> StrictPartition {
        StrictPartition::new(p.to_vec()).unwrap()
    }

    fn pt(p: &[u32]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    fn q(c: &[i64]) -> QPoly {
        QPoly::from_ints(c)
    }

    #[test]
    fn small_values_by_every_method() {
        let cases = [
            (sp(&[3]), pt(&[3]), q(&[2, -2, 2])),
            (sp(&[2, 1]), pt(&[3]), q(&[0, -2])),
            (sp(&[1]), pt(&[1]), q(&[2])),
            (sp(&[2, 1]), pt(&[1, 1, 1]), q(&[4])),
            (sp(&[4, 2]), pt(&[3, 3]), q(&[4, -16, 28, -16, 4])),
            (sp(&[4, 3]), pt(&[7]), q(&[0, 0, 0, -2])),
            (sp(&[4, 2, 1]), pt(&[3, 3, 1]), q(&[8, -48, 72, -48, 8])),
            (sp(&[4, 2, 1]), pt(&[7]), QPoly::zero()),
            (sp(&[5, 1]), pt(&[3, 1, 1, 1]), q(&[24, -40, 24])),
        ];
        let engine = Engine::new();
        for (lambda, mu, want) in &cases {
            for m in Method::ALL {
                let got = engine.character(m, lambda, mu).unwrap();
                assert_eq!(&got, want, "{m} {lambda:?} {mu:?}");
            }
        }
    }

    #[test]
    fn domain_errors() {
        let e = Engine::new();
        assert!(matches!(
            e.character(Method::Pieri, &sp(&[3, 1]), &pt(&[2, 2])),
            Err(Error::Domain { .. })
        ));
        assert!(matches!(
            e.character(Method::Oracle, &sp(&[3]), &pt(&[1])),
            Err(Error::WeightMismatch { .. })
        ));
        assert!(e.character(Method::Oracle, &sp(&[3, 1]), &pt(&[2, 2])).is_ok());
        assert!(matches!(char_two_row(2, &pt(&[3, 1])), Err(Error::BadShape(_))));
        assert!(matches!(char_hook_mu(&sp(&[3, 1]), 2), Err(Error::Domain { .. })));
    }

    #[test]
    fn method_names_round_trip() {
        for m in Method::ALL {
            assert_eq!(m.name().parse::<Method>().unwrap(), m);
        }
        assert!("fast".parse::<Method>().is_err());
    }

    #[test]
    fn weight_examples() {
        let f1 = f_single(1);
        assert_eq!(wt_gds(&sp(&[3, 1]), &sp(&[3])).unwrap(), f1);
        for n in 1..=6 {
            assert_eq!(wt_gds(&sp(&[n]), &StrictPartition::empty()).unwrap(), f_single(n as i64));
        }
        for (a, b) in [(3u32, 1u32), (5, 2), (4, 3)] {
            let sign = if b % 2 == 0 { 2 } else { -2 };
            let want = f_single((a - b) as i64).shift(b as usize).scale_int(sign);
            assert_eq!(wt_gds(&sp(&[a, b]), &StrictPartition::empty()).unwrap(), want);
        }
        assert_eq!(wt_gds(&sp(&[4, 2]), &sp(&[4, 2])).unwrap(), QPoly::one());
        assert!(matches!(
            wt_gds(&sp(&[3, 2, 1]), &StrictPartition::empty()),
            Err(Error::NotGds { .. })
        ));
    }

    #[test]
    fn large_gds_weight() {
        // -2^5 t^5 (t-1)^7 (t^2 - 3t + 1)
        let want = (q(&[-1, 1]).pow(7) * q(&[1, -3, 1])).shift(5).scale_int(-32);
        let got = wt_gds(&sp(&[15, 14, 10, 8, 7, 6, 5, 3, 1]), &sp(&[13, 11, 8, 6, 5, 4, 2, 1])).unwrap();
        assert_eq!(got, want);
    }

    #[test]
    fn sbs_examples() {
        assert_eq!(sbs_principal(&[4]), f_single(4));
        assert_eq!(sbs_principal(&[1, 1]), f_single(1).pow(2) - f_single(2));
        for total in 1..=8u32 {
            for rows in crate::partitions::enumerate_partitions(total, crate::partitions::PartitionClass::All) {
                let v = sbs_principal(rows.parts());
                assert!(v.exact_div_qminus1_pow(1).is_ok(), "{rows:?}");
            }
        }
    }

    #[test]
    fn closed_forms() {
        assert_eq!(char_one_row(&pt(&[3, 1])).unwrap(), q(&[1, -1, 1]).scale_int(4));
        assert_eq!(char_one_row(&Partition::ones(5)).unwrap(), q(&[32]));
        assert_eq!(char_one_row(&pt(&[5, 1, 1])).unwrap(), round_bracket(5).scale_int(8));
        assert_eq!(char_two_row(4, &pt(&[3, 3])).unwrap(), q(&[4, -16, 28, -16, 4]));
        assert_eq!(char_two_row(5, &pt(&[7])).unwrap(), round_bracket(3).shift(2).scale_int(2));
        assert_eq!(char_two_row(3, &Partition::ones(5)).unwrap(), q(&[32]));
        assert_eq!(char_column(&sp(&[3, 2, 1])), q(&[64]));
        assert_eq!(char_column(&sp(&[4])), q(&[16]));
        assert_eq!(char_column(&sp(&[5, 2])), q(&[576]));
        assert_eq!(char_hook_mu(&sp(&[5, 1]), 3).unwrap(), q(&[24, -40, 24]));
        assert_eq!(char_hook_mu(&sp(&[6, 1]), 3).unwrap(), q(&[64, -96, 64]));
        assert_eq!(char_hook_mu(&sp(&[4, 2]), 1).unwrap(), char_column(&sp(&[4, 2])));
    }

    #[test]
    fn tables_are_well_shaped() {
        for n in 1..=6 {
            let t = char_table(n, Method::Recursive).unwrap();
            for (_, mu, v) in t.cells() {
                assert!(is_well_shaped(v, mu));
            }
        }
    }

    #[test]
    fn table_layout() {
        let t = char_table(3, Method::Combinatorial).unwrap();
        assert_eq!(t.lambdas, vec![sp(&[3]), sp(&[2, 1])]);
        assert_eq!(t.mus, vec![pt(&[3]), pt(&[1, 1, 1])]);
        assert_eq!(t.get(&sp(&[3]), &pt(&[1, 1, 1])), Some(&q(&[8])));
        assert_eq!(t.cells().count(), 4);
        let one = char_table(1, Method::Oracle).unwrap();
        assert_eq!(one.values, vec![vec![q(&[2])]]);
    }
}
