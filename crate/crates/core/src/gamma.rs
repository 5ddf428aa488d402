//! The ring Γ = Q[p_1, p_3, p_5, ...] in the power-sum basis.
//!
//! This is the brute-force layer: every other algorithm is checked against
//! inner products computed here.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::partitions::{odd_partitions, z_lambda, zt_denominator, Partition};
use crate::polyring::{QPoly, Rat};

/// A finite sum `Σ c_ρ p_ρ` over odd partitions `ρ`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct GammaElement {
    terms: BTreeMap<Partition, QPoly>,
}

impl GammaElement {
    pub fn zero() -> Self {
        GammaElement::default()
    }

    pub fn one() -> Self {
        Self::monomial(Partition::empty(), QPoly::one())
    }

    /// `c · p_ρ`.
    pub fn monomial(rho: Partition, c: QPoly) -> Self {
        let mut g = GammaElement::zero();
        g.add_term(rho, c);
        g
    }

    /// `p_ρ`.
    pub fn power_sum(rho: Partition) -> Self {
        Self::monomial(rho, QPoly::one())
    }

    pub fn terms(&self) -> &BTreeMap<Partition, QPoly> {
        &self.terms
    }

    pub fn coeff(&self, rho: &Partition) -> QPoly {
        self.terms.get(rho).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, rho: Partition, c: QPoly) {
        debug_assert!(rho.is_odd(), "p_{rho} is not in Γ");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(rho) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &GammaElement) -> GammaElement {
        let mut out = self.clone();
        for (rho, c) in &other.terms {
            out.add_term(rho.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &QPoly) -> GammaElement {
        let mut out = GammaElement::zero();
        for (rho, a) in &self.terms {
            out.add_term(rho.clone(), a * c);
        }
        out
    }

    /// Product in Γ; `p_λ p_μ = p_{λ ∪ μ}`.
    pub fn mul(&self, other: &GammaElement) -> GammaElement {
        let mut out = GammaElement::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a.union(b), ca * cb);
            }
        }
        out
    }

    /// The degree-`d` homogeneous component.
    pub fn homogeneous_part(&self, d: u32) -> GammaElement {
        GammaElement {
            terms: self
                .terms
                .iter()
                .filter(|(rho, _)| rho.weight() == d)
                .map(|(rho, c)| (rho.clone(), c.clone()))
                .collect(),
        }
    }

    /// Largest weight of any term, `None` for zero.
    pub fn max_degree(&self) -> Option<u32> {
        self.terms.keys().map(Partition::weight).max()
    }

    /// Applies `Σ_{σ ⊢ k odd} Π_i w(σ_i) · Π_n C(m_n(ρ), m_n(σ)) · p_{ρ∖σ}` to every term.
    ///
    /// This is the degree-`k` part of `exp(Σ_n w(n) ∂/∂p_n)`: the `1/m!`
    /// factors of the exponential cancel against the falling factorials of
    /// the repeated derivatives, leaving binomial coefficients.
    pub fn apply_derivation(&self, k: u32, weight: &dyn Fn(u32) -> QPoly) -> GammaElement {
        let mut out = GammaElement::zero();
        for (rho, c) in &self.terms {
            let mults: Vec<(u32, u32)> = rho.multiplicities().into_iter().collect();
            for_each_submultiset(&mults, k, &mut |taken, binom| {
                let mut coeff = c.scale(&Rat::from_integer(binom.clone()));
                let mut rest = Vec::new();
                for (&(part, m), &s) in mults.iter().zip(taken) {
                    for _ in 0..s {
                        coeff = &coeff * &weight(part);
                    }
                    rest.extend(std::iter::repeat_n(part, (m - s) as usize));
                }
                rest.sort_unstable_by(|a, b| b.cmp(a));
                out.add_term(Partition::new(rest).expect("sorted positive parts"), coeff);
            });
        }
        out
    }
}

/// Calls `f(counts, Π C(m, s))` for every choice of counts `s_i <= m_i` with
/// `Σ s_i · part_i = k`.
fn for_each_submultiset(mults: &[(u32, u32)], k: u32, f: &mut dyn FnMut(&[u32], &BigInt)) {
    fn rec(
        i: usize,
        rest: u32,
        mults: &[(u32, u32)],
        taken: &mut Vec<u32>,
        binom: BigInt,
        f: &mut dyn FnMut(&[u32], &BigInt),
    ) {
        if i == mults.len() {
            if rest == 0 {
                f(taken, &binom);
            }
            return;
        }
        let (part, m) = mults[i];
        let mut b = BigInt::one();
        for s in 0..=m {
            if s * part > rest {
                break;
            }
            taken.push(s);
            rec(i + 1, rest - s * part, mults, taken, &binom * &b, f);
            taken.pop();
            // C(m, s+1) = C(m, s) · (m - s) / (s + 1)
            b = b * (m - s) / (s + 1);
        }
    }
    rec(0, k, mults, &mut Vec::new(), BigInt::one(), f);
}

impl fmt::Debug for GammaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (rho, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c}) · p[{rho}]")?;
        }
        Ok(())
    }
}

fn rat_of(n: &BigInt) -> Rat {
    Rat::from_integer(n.clone())
}

/// `⟨p_λ, p_μ⟩ = 2^{-l(λ)} z_λ δ_{λμ}`, extended bilinearly.
pub fn inner_product(a: &GammaElement, b: &GammaElement) -> QPoly {
    let mut acc = QPoly::zero();
    for (rho, ca) in &a.terms {
        if let Some(cb) = b.terms.get(rho) {
            let w = rat_of(&z_lambda(rho)) / rat_of(&(BigInt::one() << rho.len()));
            acc += (ca * cb).scale(&w);
        }
    }
    acc
}

/// `q_n = Σ_{ρ ∈ OP_n} 2^{l(ρ)} / z_ρ · p_ρ`.
pub fn expand_q_n(n: u32) -> GammaElement {
    let mut g = GammaElement::zero();
    for rho in odd_partitions(n) {
        let c = rat_of(&(BigInt::one() << rho.len())) / rat_of(&z_lambda(&rho));
        g.add_term(rho, QPoly::constant(c));
    }
    g
}

/// `g_n = Σ_{ρ ∈ OP_n} (-2)^{l(ρ)} Π(1 - t^{ρ_i}) / z_ρ · p_ρ`.
pub fn expand_g_n(n: u32) -> GammaElement {
    let mut g = GammaElement::zero();
    for rho in odd_partitions(n) {
        let sign = if rho.len() % 2 == 0 { 1 } else { -1 };
        let c = rat_of(&(BigInt::from(sign) << rho.len())) / rat_of(&z_lambda(&rho));
        let poly = zt_denominator(&rho).scale(&c);
        g.add_term(rho, poly);
    }
    g
}

/// `g_μ = Π g_{μ_i}`; zero parts contribute `g_0 = 1`.
pub fn expand_g_mu(mu: &[u32]) -> GammaElement {
    mu.iter()
        .fold(GammaElement::one(), |acc, &m| acc.mul(&expand_g_n(m)))
}

/// Degree-`k` component of `g*(z) = exp(Σ (t^n - 1) ∂/∂p_n z^{-n})`.
pub fn apply_g_star_pbasis(k: u32, a: &GammaElement) -> GammaElement {
    a.apply_derivation(k, &|n| QPoly::one().shift(n as usize) - QPoly::one())
}

/// Substitutes `p_r ↦ t^r - 1`.
pub fn principal_specialize(a: &GammaElement) -> QPoly {
    a.terms
        .iter()
        .map(|(rho, c)| {
            let spec: QPoly = rho
                .parts()
                .iter()
                .map(|&r| QPoly::one().shift(r as usize) - QPoly::one())
                .product();
            c * &spec
        })
        .sum()
}

/// Substitutes `p_r ↦ 1`, i.e. evaluates at the single variable `x = (1)`.
pub fn specialize_one_variable(a: &GammaElement) -> QPoly {
    a.terms.values().cloned().sum()
}

/// Degree-`n` coefficient of `exp(Σ_{r odd} w(r)/r · p_r z^r)`, by truncated
/// exponential series. Used to cross-check the closed expansions.
pub fn exp_series_coefficient(n: u32, w: &dyn Fn(u32) -> QPoly) -> GammaElement {
    let mut x = GammaElement::zero();
    for r in (1..=n).step_by(2) {
        x.add_term(Partition::new(vec![r]).unwrap(), w(r).scale(&Rat::new(BigInt::one(), BigInt::from(r))));
    }
    let mut acc = GammaElement::zero();
    let mut power = GammaElement::one();
    let mut fact = BigInt::one();
    for j in 0..=n {
        if j > 0 {
            power = power.mul(&x);
            fact *= j;
            // Terms of weight above n can never come back down.
            power = GammaElement {
                terms: power.terms.into_iter().filter(|(rho, _)| rho.weight() <= n).collect(),
            };
        }
        let part = power.homogeneous_part(n).scale(&QPoly::constant(Rat::new(BigInt::one(), fact.clone())));
        acc = acc.add(&part);
    }
    acc
}
