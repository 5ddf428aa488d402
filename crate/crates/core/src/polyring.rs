//! Dense univariate polynomials in `q` over arbitrary-precision rationals.
//!
//! Every character value, Pfaffian entry and bitrace value in this crate is a
//! [`QPoly`]. The same indeterminate plays the role of both `q` (character
//! values) and `t` (the Hall-Littlewood parameter of `g_n`).
//!
//! Coefficients are kept rational because power-sum expansions carry
//! `1/z_rho` denominators; final character values are integral and this is
//! checked where they are produced.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Deserializer};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exact rational number, always in lowest terms with positive denominator.
pub type Rat = BigRational;

/// Builds a rational from machine integers.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Builds an integral rational.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// A polynomial `sum_i coeffs[i] * q^i` in canonical form: no trailing zero
/// coefficient, so the zero polynomial has no coefficients at all.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QPoly {
    coeffs: Vec<Rat>,
}

impl QPoly {
    /// Canonicalizes an ascending coefficient list.
    pub fn from_coeffs(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    /// Ascending integer coefficients: `from_ints(&[1, -2, 1])` is `q^2 - 2q + 1`.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(rat_int(c))
    }

    pub fn from_bigint(c: BigInt) -> Self {
        Self::constant(Rat::from_integer(c))
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self::monomial(Rat::one(), 1)
    }

    /// `q - 1`.
    pub fn q_minus_one() -> Self {
        Self::from_ints(&[-1, 1])
    }

    /// `c * q^deg`.
    pub fn monomial(c: Rat, deg: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); deg + 1];
        coeffs[deg] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        QPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.scale(&rat_int(c))
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rat::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        QPoly { coeffs }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Horner evaluation at an exact rational point.
    pub fn eval_at(&self, x: &Rat) -> Rat {
        self.coeffs
            .iter()
            .rev()
            .fold(Rat::zero(), |acc, c| acc * x + c)
    }

    /// `f(-q)`.
    pub fn negate_variable(&self) -> Self {
        QPoly {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        }
    }

    /// Synthetic division by `q - 1`; returns quotient and remainder `f(1)`.
    fn div_rem_qminus1(&self) -> (Self, Rat) {
        let Some(d) = self.degree() else {
            return (Self::zero(), Rat::zero());
        };
        let mut quot = vec![Rat::zero(); d];
        let mut carry = Rat::zero();
        for i in (1..=d).rev() {
            carry += &self.coeffs[i];
            quot[i - 1] = carry.clone();
        }
        let rem = carry + &self.coeffs[0];
        (Self::from_coeffs(quot), rem)
    }

    /// Divides by `(q - 1)^m`, failing unless the division is exact.
    pub fn exact_div_qminus1_pow(&self, m: usize) -> Result<Self> {
        let mut cur = self.clone();
        for _ in 0..m {
            let (quot, rem) = cur.div_rem_qminus1();
            if !rem.is_zero() {
                return Err(Error::NonDivisible {
                    poly: self.to_string(),
                    power: m,
                });
            }
            cur = quot;
        }
        Ok(cur)
    }

    /// True iff the coefficients between the valuation and the degree read the
    /// same in both directions, i.e. `f(q) = q^m f(1/q)` for some `m`.
    pub fn is_palindromic(&self) -> bool {
        let (Some(lo), Some(hi)) = (self.valuation(), self.degree()) else {
            return true;
        };
        let window = &self.coeffs[lo..=hi];
        window.iter().eq(window.iter().rev())
    }

    /// Converts integral coefficients to `i64`, if they all fit.
    pub fn to_i64_coeffs(&self) -> Option<Vec<i64>> {
        self.coeffs
            .iter()
            .map(|c| if c.is_integer() { c.to_integer().to_i64() } else { None })
            .collect()
    }
}

/// `(k)_t = t^{k-1} - t^{k-2} + ... + (-1)^{k-1}`, with `(0)_t = 1` and
/// `(k)_t = 0` for negative `k`.
pub fn round_bracket(k: i64) -> QPoly {
    match k {
        k if k < 0 => QPoly::zero(),
        0 => QPoly::one(),
        k => {
            let k = k as usize;
            QPoly::from_coeffs(
                (0..k)
                    .map(|i| if (k - 1 - i).is_multiple_of(2) { rat_int(1) } else { rat_int(-1) })
                    .collect(),
            )
        }
    }
}

/// `[k]_t = t^{k-1} + ... + t + 1` for `k >= 1`; zero for `k == 0`.
pub fn square_bracket(k: u32) -> QPoly {
    QPoly::from_coeffs(vec![rat_int(1); k as usize])
}

impl fmt::Display for QPoly {
    /// Canonical text: descending exponents, explicit `*` and `^`, e.g.
    /// `4*q^4 - 16*q^3 + 28*q^2 - 16*q + 4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            let mag = c.abs();
            if first {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            first = false;
            let var = match d {
                0 => String::new(),
                1 => "q".to_string(),
                d => format!("q^{d}"),
            };
            if d == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                f.write_str(&var)?;
            } else {
                write!(f, "{mag}*{var}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QPoly({self})")
    }
}

// ---- arithmetic ----

impl Add<&QPoly> for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (a, b) in coeffs.iter_mut().zip(&short.coeffs) {
            *a += b;
        }
        QPoly::from_coeffs(coeffs)
    }
}

impl Sub<&QPoly> for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        QPoly::from_coeffs(coeffs)
    }
}

impl Mul<&QPoly> for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        QPoly::from_coeffs(coeffs)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        -&self
    }
}

macro_rules! forward_binop {
    ($Trait:ident, $method:ident) => {
        impl $Trait<QPoly> for QPoly {
            type Output = QPoly;
            fn $method(self, rhs: QPoly) -> QPoly {
                (&self).$method(&rhs)
            }
        }
        impl $Trait<&QPoly> for QPoly {
            type Output = QPoly;
            fn $method(self, rhs: &QPoly) -> QPoly {
                (&self).$method(rhs)
            }
        }
        impl $Trait<QPoly> for &QPoly {
            type Output = QPoly;
            fn $method(self, rhs: QPoly) -> QPoly {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl AddAssign<&QPoly> for QPoly {
    fn add_assign(&mut self, rhs: &QPoly) {
        *self = &*self + rhs;
    }
}

impl AddAssign<QPoly> for QPoly {
    fn add_assign(&mut self, rhs: QPoly) {
        *self = &*self + &rhs;
    }
}

impl SubAssign<&QPoly> for QPoly {
    fn sub_assign(&mut self, rhs: &QPoly) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&QPoly> for QPoly {
    fn mul_assign(&mut self, rhs: &QPoly) {
        *self = &*self * rhs;
    }
}

impl std::iter::Sum for QPoly {
    fn sum<I: Iterator<Item = QPoly>>(iter: I) -> QPoly {
        iter.fold(QPoly::zero(), |acc, p| acc + p)
    }
}

impl std::iter::Product for QPoly {
    fn product<I: Iterator<Item = QPoly>>(iter: I) -> QPoly {
        iter.fold(QPoly::one(), |acc, p| acc * p)
    }
}

// ---- JSON: {"var":"q","coeffs":[[num,den],...]} ascending ----

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum JsonInt {
    Small(i64),
    Big(String),
}

impl JsonInt {
    fn from_bigint(n: &BigInt) -> Self {
        match n.to_i64() {
            Some(v) => JsonInt::Small(v),
            None => JsonInt::Big(n.to_string()),
        }
    }

    fn to_bigint(&self) -> std::result::Result<BigInt, String> {
        match self {
            JsonInt::Small(v) => Ok(BigInt::from(*v)),
            JsonInt::Big(s) => s.parse().map_err(|_| format!("bad integer {s:?}")),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct JsonPoly {
    var: String,
    coeffs: Vec<(JsonInt, JsonInt)>,
}

impl Serialize for QPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        JsonPoly {
            var: "q".to_string(),
            coeffs: self
                .coeffs
                .iter()
                .map(|c| (JsonInt::from_bigint(c.numer()), JsonInt::from_bigint(c.denom())))
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for QPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = JsonPoly::deserialize(deserializer)?;
        if raw.var != "q" {
            return Err(de::Error::custom(format!("unexpected variable {:?}", raw.var)));
        }
        let mut coeffs = Vec::with_capacity(raw.coeffs.len());
        for (n, d) in &raw.coeffs {
            let n = n.to_bigint().map_err(de::Error::custom)?;
            let d = d.to_bigint().map_err(de::Error::custom)?;
            if d.is_zero() {
                return Err(de::Error::custom("zero denominator"));
            }
            coeffs.push(Rat::new(n, d));
        }
        Ok(QPoly::from_coeffs(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> QPoly {
        QPoly::from_ints(c)
    }

    #[test]
    fn binomial_square() {
        let qm1 = QPoly::q_minus_one();
        assert_eq!(&qm1 * &qm1, p(&[1, -2, 1]));
    }

    #[test]
    fn additive_identity() {
        let f = p(&[3, 0, -7, 2]);
        assert_eq!(&f + &QPoly::zero(), f);
    }

    #[test]
    fn long_multiplication() {
        // 2(q-1)(q^2-q+1) = 2q^3 - 4q^2 + 4q - 2
        let f = QPoly::q_minus_one().scale_int(2) * p(&[1, -1, 1]);
        assert_eq!(f, p(&[-2, 4, -4, 2]));
    }

    #[test]
    fn canonical_form_trims_zeros() {
        let f = p(&[1, 2, 0, 0]);
        assert_eq!(f.coeffs().len(), 2);
        assert_eq!(p(&[0, 0]), QPoly::zero());
        assert_eq!(QPoly::zero().degree(), None);
        assert_eq!((p(&[1, 1]) - p(&[1, 1])).coeffs().len(), 0);
    }

    #[test]
    fn exact_division_examples() {
        let f = p(&[1, -2, 1]).scale_int(2);
        assert_eq!(f.exact_div_qminus1_pow(1).unwrap(), p(&[-2, 2]));
        assert_eq!(p(&[1, -2, 1]).exact_div_qminus1_pow(2).unwrap(), QPoly::one());
        // q^2 - 1 = (q-1)(q+1); q+1 leaves remainder 2.
        assert!(matches!(
            p(&[-1, 0, 1]).exact_div_qminus1_pow(2),
            Err(Error::NonDivisible { power: 2, .. })
        ));
        assert_eq!(QPoly::zero().exact_div_qminus1_pow(3).unwrap(), QPoly::zero());
    }

    #[test]
    fn evaluation() {
        assert_eq!(p(&[1, -1, 1]).eval_at(&rat_int(1)), rat_int(1));
        assert_eq!(p(&[2, -4, 2]).eval_at(&rat_int(1)), rat_int(0));
        assert_eq!(p(&[4, -16, 28, -16, 4]).eval_at(&rat_int(1)), rat_int(4));
        assert_eq!(p(&[1, 1]).eval_at(&rat(1, 2)), rat(3, 2));
    }

    #[test]
    fn palindromes() {
        assert!(p(&[1, -3, 1]).is_palindromic());
        assert!(p(&[0, -2]).is_palindromic());
        assert!(!p(&[0, -3, 1]).is_palindromic());
        assert!(QPoly::zero().is_palindromic());
        assert!(p(&[0, 0, 2, 3, 2]).is_palindromic());
    }

    #[test]
    fn brackets() {
        assert_eq!(round_bracket(3), p(&[1, -1, 1]));
        assert_eq!(round_bracket(0), QPoly::one());
        assert_eq!(round_bracket(-2), QPoly::zero());
        assert_eq!(round_bracket(2), p(&[-1, 1]));
        assert_eq!(square_bracket(1), QPoly::one());
        assert_eq!(square_bracket(3), p(&[1, 1, 1]));
        let lhs = round_bracket(3) + (round_bracket(1) + round_bracket(2)).scale_int(2);
        assert_eq!(lhs, square_bracket(3));
    }

    #[test]
    fn bracket_identities_up_to_50() {
        for k in 1..=50i64 {
            let partial: QPoly = (1..k).map(round_bracket).sum();
            assert_eq!(
                round_bracket(k) + partial.scale_int(2),
                square_bracket(k as u32),
                "k = {k}"
            );
            let sign = if (k - 1) % 2 == 0 { 1 } else { -1 };
            assert_eq!(
                round_bracket(k),
                square_bracket(k as u32).negate_variable().scale_int(sign),
                "k = {k}"
            );
        }
    }

    #[test]
    fn rendering() {
        assert_eq!(p(&[4, -16, 28, -16, 4]).to_string(), "4*q^4 - 16*q^3 + 28*q^2 - 16*q + 4");
        assert_eq!(p(&[8]).to_string(), "8");
        assert_eq!(QPoly::zero().to_string(), "0");
        assert_eq!(p(&[0, -2]).to_string(), "-2*q");
        assert_eq!(p(&[1, -1, 1]).to_string(), "q^2 - q + 1");
        assert_eq!(QPoly::constant(rat(-3, 4)).shift(2).to_string(), "-3/4*q^2");
    }

    #[test]
    fn json_shape() {
        let f = QPoly::from_coeffs(vec![rat(1, 2), rat_int(0), rat_int(-3)]);
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(s, r#"{"var":"q","coeffs":[[1,2],[0,1],[-3,1]]}"#);
        let back: QPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, f);
        assert!(serde_json::from_str::<QPoly>(r#"{"var":"x","coeffs":[]}"#).is_err());
        assert!(serde_json::from_str::<QPoly>(r#"{"var":"q","coeffs":[[1,0]]}"#).is_err());
    }

    fn small_poly() -> impl Strategy<Value = QPoly> {
        prop::collection::vec(-20i64..20, 0..7).prop_map(|c| QPoly::from_ints(&c))
    }

    proptest! {
        #[test]
        fn ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&(&a - &b) + &b, a.clone());
        }

        #[test]
        fn division_undoes_multiplication(f in small_poly(), m in 0usize..=5) {
            let g = &f * &QPoly::q_minus_one().pow(m as u32);
            prop_assert_eq!(g.exact_div_qminus1_pow(m).unwrap(), f);
        }

        #[test]
        fn json_round_trip(f in small_poly(), d in 1i64..9) {
            let f = f.scale(&rat(1, d));
            let back: QPoly = serde_json::from_str(&serde_json::to_string(&f).unwrap()).unwrap();
            prop_assert_eq!(back, f);
        }
    }
}
