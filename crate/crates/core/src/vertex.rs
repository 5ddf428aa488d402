//! Vertex operators on Γ, the Q-basis and its Clifford straightening, and the
//! action of `g*_k` on Q-functions.

use std::collections::BTreeMap;
use std::fmt;

use crate::gamma::{expand_q_n, GammaElement};
use crate::partitions::{all_compositions, StrictPartition};
use crate::polyring::{round_bracket, QPoly};

/// `Q_m a = Σ_{i >= 0} q_{m+i} · D_i(a)` where `D_i` is the degree-`i` part of
/// `exp(-Σ_n ∂/∂p_n)`.
pub fn apply_q_m(m: i64, a: &GammaElement) -> GammaElement {
    let Some(top) = a.max_degree() else {
        return GammaElement::zero();
    };
    let mut out = GammaElement::zero();
    for i in 0..=top {
        let idx = m + i as i64;
        if idx < 0 {
            continue;
        }
        let d = a.apply_derivation(i, &|_| QPoly::from_int(-1));
        if d.is_zero() {
            continue;
        }
        out = out.add(&expand_q_n(idx as u32).mul(&d));
    }
    out
}

/// `Q_{λ_1} Q_{λ_2} ... Q_{λ_l} . 1`.
pub fn q_lambda_vacuum(lambda: &StrictPartition) -> GammaElement {
    q_sequence_vacuum(&lambda.parts().iter().map(|&p| p as i64).collect::<Vec<_>>())
}

/// `Q_{a_1} ... Q_{a_s} . 1` for an arbitrary integer sequence.
pub fn q_sequence_vacuum(seq: &[i64]) -> GammaElement {
    seq.iter()
        .rev()
        .fold(GammaElement::one(), |acc, &a| apply_q_m(a, &acc))
}

/// A finite sum `Σ c_λ Q_λ.1` over strict partitions, the empty partition
/// standing for the vacuum.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct QBasisElement {
    terms: BTreeMap<StrictPartition, QPoly>,
}

impl QBasisElement {
    pub fn zero() -> Self {
        QBasisElement::default()
    }

    pub fn basis(lambda: StrictPartition) -> Self {
        let mut out = QBasisElement::zero();
        out.add_term(lambda, QPoly::one());
        out
    }

    pub fn terms(&self) -> &BTreeMap<StrictPartition, QPoly> {
        &self.terms
    }

    pub fn coeff(&self, lambda: &StrictPartition) -> QPoly {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, lambda: StrictPartition, c: QPoly) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(lambda.clone()).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&lambda);
        }
    }

    pub fn add_scaled(&mut self, other: &QBasisElement, c: &QPoly) {
        for (lambda, a) in &other.terms {
            self.add_term(lambda.clone(), a * c);
        }
    }

    /// Expands into the power-sum basis.
    pub fn to_gamma(&self) -> GammaElement {
        self.terms.iter().fold(GammaElement::zero(), |acc, (lambda, c)| {
            acc.add(&q_lambda_vacuum(lambda).scale(c))
        })
    }
}

impl fmt::Debug for QBasisElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (lambda, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c}) · Q[{lambda}]")?;
        }
        Ok(())
    }
}

/// Rewrites `Q_{a_1} ... Q_{a_s}.1` as an integer combination of `Q_ν.1`.
///
/// Adjacent out-of-order pairs are swapped with
/// `Q_a Q_b = -Q_b Q_a + (-1)^b 2 δ_{a,-b}`; once the sequence is strictly
/// decreasing a negative last index kills the vacuum and a zero is dropped.
pub fn straighten_int(seq: &[i64]) -> BTreeMap<StrictPartition, i64> {
    let mut out = BTreeMap::new();
    straighten_into(seq.to_vec(), 1, &mut out);
    out.retain(|_, c| *c != 0);
    out
}

fn straighten_into(mut seq: Vec<i64>, coeff: i64, out: &mut BTreeMap<StrictPartition, i64>) {
    loop {
        if coeff == 0 {
            return;
        }
        let Some(i) = (0..seq.len().saturating_sub(1)).find(|&i| seq[i] <= seq[i + 1]) else {
            break;
        };
        let (a, b) = (seq[i], seq[i + 1]);
        if a == b {
            if a != 0 {
                return;
            }
            // Q_0^2 = 1
            seq.drain(i..i + 2);
            continue;
        }
        if a == -b {
            let sign = if b % 2 == 0 { 2 } else { -2 };
            let mut shorter = seq.clone();
            shorter.drain(i..i + 2);
            straighten_into(shorter, coeff * sign, out);
        }
        seq.swap(i, i + 1);
        return straighten_into(seq, -coeff, out);
    }
    match seq.last() {
        Some(&last) if last < 0 => {}
        Some(&0) => {
            seq.pop();
            straighten_into(seq, coeff, out);
        }
        _ => {
            let parts = seq.into_iter().map(|x| x as u32).collect();
            let nu = StrictPartition::new(parts).expect("strictly decreasing positive sequence");
            *out.entry(nu).or_insert(0) += coeff;
        }
    }
}

/// [`straighten_int`] with polynomial coefficients.
pub fn straighten(seq: &[i64]) -> QBasisElement {
    let mut out = QBasisElement::zero();
    for (nu, c) in straighten_int(seq) {
        out.add_term(nu, QPoly::from_int(c));
    }
    out
}

/// `f_i = 2(t-1)(i)_t`, with `f_0 = 1` and `f_i = 0` for `i < 0`.
pub fn f_single(i: i64) -> QPoly {
    match i {
        i if i < 0 => QPoly::zero(),
        0 => QPoly::one(),
        i => QPoly::from_ints(&[-2, 2]) * round_bracket(i),
    }
}

/// `f_τ = Π_i f_{τ_i}`.
pub fn f_coeff(tau: &[u32]) -> QPoly {
    tau.iter().map(|&a| f_single(a as i64)).product()
}

/// `f_{(m,n)} = f_m f_n + 2 Σ_{a=1}^{n} (-1)^a f_{m+a} f_{n-a}`.
pub fn f_pair(m: i64, n: i64) -> QPoly {
    let mut acc = f_single(m) * f_single(n);
    for a in 1..=n {
        let term = (f_single(m + a) * f_single(n - a)).scale_int(2);
        if a % 2 == 0 {
            acc += term;
        } else {
            acc -= &term;
        }
    }
    acc
}

/// `g*_k Q_λ.1 = Σ_{τ ⊨ k, l(τ) = l(λ)} f_τ Q_{λ-τ}.1`, extended linearly.
pub fn apply_g_star_qbasis(k: u32, a: &QBasisElement) -> QBasisElement {
    let mut out = QBasisElement::zero();
    for (lambda, c) in a.terms() {
        out.add_scaled(&g_star_on_basis(k, lambda), c);
    }
    out
}

/// `g*_k Q_λ.1` for a single basis vector.
pub fn g_star_on_basis(k: u32, lambda: &StrictPartition) -> QBasisElement {
    let mut out = QBasisElement::zero();
    if k == 0 {
        out.add_term(lambda.clone(), QPoly::one());
        return out;
    }
    let mut acc: BTreeMap<StrictPartition, QPoly> = BTreeMap::new();
    for tau in all_compositions(k, lambda.len()) {
        let seq: Vec<i64> = lambda
            .parts()
            .iter()
            .zip(&tau)
            .map(|(&l, &t)| l as i64 - t as i64)
            .collect();
        let straightened = straighten_int(&seq);
        if straightened.is_empty() {
            continue;
        }
        let f = f_coeff(&tau);
        for (nu, c) in straightened {
            let slot = acc.entry(nu).or_default();
            *slot += f.scale_int(c);
        }
    }
    for (nu, c) in acc {
        if !c.is_zero() {
            out.add_term(nu, c);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gamma::inner_product;
    use crate::partitions::{odd_partitions, strict_partitions, Partition};
    use proptest::prelude::*;

    fn sp(p: &[u32]) -> StrictPartition {
        StrictPartition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn vacuum_actions() {
        assert_eq!(apply_q_m(1, &GammaElement::one()), expand_q_n(1));
        assert!(apply_q_m(-3, &GammaElement::one()).is_zero());
        assert_eq!(apply_q_m(0, &GammaElement::one()), GammaElement::one());
        assert_eq!(q_lambda_vacuum(&sp(&[1])), expand_q_n(1));
        assert_eq!(q_lambda_vacuum(&StrictPartition::empty()), GammaElement::one());
        let q21 = q_lambda_vacuum(&sp(&[2, 1]));
        assert_eq!(inner_product(&q21, &q21), QPoly::from_int(4));
    }

    #[test]
    fn straighten_examples() {
        assert_eq!(straighten(&[2, 3]), {
            let mut e = QBasisElement::zero();
            e.add_term(sp(&[3, 2]), QPoly::from_int(-1));
            e
        });
        assert!(straighten(&[3, 3]).is_zero());
        let mut want = QBasisElement::zero();
        want.add_term(sp(&[3]), QPoly::from_int(-2));
        assert_eq!(straighten(&[3, -1, 1]), want);
        assert_eq!(straighten(&[0, 0]), QBasisElement::basis(StrictPartition::empty()));
        assert_eq!(straighten(&[4, 0]), QBasisElement::basis(sp(&[4])));
    }

    #[test]
    fn straighten_matches_power_sum_oracle() {
        let range: Vec<i64> = (-3..=6).collect();
        let mut seqs: Vec<Vec<i64>> = vec![vec![]];
        for _ in 0..3 {
            let mut next = Vec::new();
            for s in &seqs {
                for &x in &range {
                    let mut t = s.clone();
                    t.push(x);
                    next.push(t);
                }
            }
            seqs.extend(next.iter().cloned());
            seqs.retain(|s| s.len() <= 3);
            seqs.sort();
            seqs.dedup();
        }
        for s in &seqs {
            assert_eq!(straighten(s).to_gamma(), q_sequence_vacuum(s), "{s:?}");
        }
    }

    #[test]
    fn q_basis_is_orthogonal() {
        let all: Vec<StrictPartition> = (0..=7).flat_map(strict_partitions).collect();
        let vac: Vec<GammaElement> = all.iter().map(q_lambda_vacuum).collect();
        for (i, a) in vac.iter().enumerate() {
            for (j, b) in vac.iter().enumerate() {
                if all[i].weight() != all[j].weight() {
                    continue;
                }
                let want = if i == j { QPoly::from_int(1 << all[i].len()) } else { QPoly::zero() };
                assert_eq!(inner_product(a, b), want, "{:?} {:?}", all[i], all[j]);
            }
        }
    }

    #[test]
    fn dual_q_n_expansion() {
        // ⟨Q_n.1, p_ρ⟩ = 1 for every odd ρ ⊢ n, which pins down
        // Q*_n.1 = Σ (-2)^{l(ρ)} / z_ρ p_ρ through the inner product.
        for n in 1..=8u32 {
            let qn = q_lambda_vacuum(&sp(&[n]));
            for rho in odd_partitions(n) {
                let got = inner_product(&qn, &GammaElement::power_sum(rho.clone()));
                assert_eq!(got, QPoly::one(), "n = {n}, ρ = {rho:?}");
                let lowered = apply_q_m(-(n as i64), &GammaElement::power_sum(rho.clone()));
                let sign = if n % 2 == 0 { 1 } else { -1 };
                assert_eq!(lowered.coeff(&Partition::empty()), QPoly::from_int(sign), "n = {n}");
            }
        }
    }

    #[test]
    fn f_values() {
        let t1 = QPoly::from_ints(&[-1, 1]);
        assert_eq!(f_coeff(&[3]), t1.scale_int(2) * QPoly::from_ints(&[1, -1, 1]));
        assert_eq!(f_coeff(&[0]), QPoly::one());
        assert_eq!(f_coeff(&[1, 1]), t1.pow(2).scale_int(4));
        assert_eq!(f_pair(3, 1), (t1.pow(2) * QPoly::q()).scale_int(-4));
        assert!(f_pair(2, 2).is_zero());
        assert_eq!(f_pair(5, 0), f_single(5));
    }

    #[test]
    fn f_pair_closed_forms() {
        for m in 0..=12i64 {
            for n in 0..=12i64 {
                let v = f_pair(m, n);
                if m > n && n > 0 {
                    let sign = if n % 2 == 0 { 2 } else { -2 };
                    assert_eq!(v, f_single(m - n).shift(n as usize).scale_int(sign), "({m},{n})");
                }
                if (m, n) != (0, 0) {
                    assert_eq!(v, -f_pair(n, m), "({m},{n})");
                }
                if m == n && n != 0 {
                    assert!(v.is_zero());
                }
            }
        }
    }

    #[test]
    fn g_star_examples() {
        let out = apply_g_star_qbasis(1, &QBasisElement::basis(sp(&[1])));
        let mut want = QBasisElement::zero();
        want.add_term(StrictPartition::empty(), f_single(1));
        assert_eq!(out, want);
        let out = apply_g_star_qbasis(5, &QBasisElement::basis(sp(&[5])));
        assert_eq!(out.coeff(&StrictPartition::empty()), f_single(5));
        assert!(apply_g_star_qbasis(2, &QBasisElement::basis(StrictPartition::empty())).is_zero());
    }

    #[test]
    fn g_star_agrees_with_power_sum_action() {
        for w in 1..=7 {
            for lambda in strict_partitions(w) {
                let gamma = q_lambda_vacuum(&lambda);
                for k in 1..=w {
                    let via_q = apply_g_star_qbasis(k, &QBasisElement::basis(lambda.clone()));
                    let via_p = crate::gamma::apply_g_star_pbasis(k, &gamma);
                    for mu in strict_partitions(w - k) {
                        let lhs = inner_product(&via_p, &q_lambda_vacuum(&mu));
                        let rhs = via_q.coeff(&mu).scale_int(1 << mu.len());
                        assert_eq!(lhs, rhs, "g*_{k} Q_{lambda:?} at {mu:?}");
                    }
                }
            }
        }
    }

    fn small_gamma() -> impl Strategy<Value = GammaElement> {
        let keys: Vec<Partition> = (0..=4).flat_map(odd_partitions).collect();
        prop::collection::vec((0..keys.len(), -3i64..=3), 1..4).prop_map(move |terms| {
            let mut g = GammaElement::zero();
            for (i, c) in terms {
                g.add_term(keys[i].clone(), QPoly::from_int(c));
            }
            g
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn clifford_anticommutator(a in small_gamma(), m in -5i64..=5, n in -5i64..=5) {
            let lhs = apply_q_m(m, &apply_q_m(n, &a)).add(&apply_q_m(n, &apply_q_m(m, &a)));
            let rhs = if m == -n {
                a.scale(&QPoly::from_int(if n % 2 == 0 { 2 } else { -2 }))
            } else {
                GammaElement::zero()
            };
            prop_assert_eq!(lhs, rhs);
        }
    }
}
