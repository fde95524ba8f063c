//! Sparse bivariate Laurent polynomials over arbitrary-precision integers.
//!
//! Monomials are keyed by [`ExponentPair`], whose ordering is graded
//! lexicographic: total degree first, then the power of `q`. That order is
//! compatible with multiplication on all of `Z^2`, which is what the exact
//! binomial division in [`super::rational`] relies on.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::univariate::QPoly;

/// Exponents of a monomial `q^q_exp t^t_exp`. Both may be negative.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ExponentPair {
    pub q_exp: i64,
    pub t_exp: i64,
}

impl ExponentPair {
    pub const ZERO: ExponentPair = ExponentPair { q_exp: 0, t_exp: 0 };

    pub const fn new(q_exp: i64, t_exp: i64) -> Self {
        ExponentPair { q_exp, t_exp }
    }

    pub fn degree(self) -> i64 {
        self.q_exp + self.t_exp
    }

    /// Exchange the roles of `q` and `t`.
    pub fn transpose(self) -> Self {
        ExponentPair::new(self.t_exp, self.q_exp)
    }

    pub fn is_zero(self) -> bool {
        self.q_exp == 0 && self.t_exp == 0
    }

    /// Strictly above the unit monomial in the graded lexicographic order.
    pub fn is_positive(self) -> bool {
        self > ExponentPair::ZERO
    }
}

impl Ord for ExponentPair {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then(self.q_exp.cmp(&other.q_exp))
    }
}

impl PartialOrd for ExponentPair {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for ExponentPair {
    type Output = ExponentPair;
    fn add(self, rhs: Self) -> Self {
        ExponentPair::new(self.q_exp + rhs.q_exp, self.t_exp + rhs.t_exp)
    }
}

impl Sub for ExponentPair {
    type Output = ExponentPair;
    fn sub(self, rhs: Self) -> Self {
        ExponentPair::new(self.q_exp - rhs.q_exp, self.t_exp - rhs.t_exp)
    }
}

impl Neg for ExponentPair {
    type Output = ExponentPair;
    fn neg(self) -> Self {
        ExponentPair::new(-self.q_exp, -self.t_exp)
    }
}

impl Mul<i64> for ExponentPair {
    type Output = ExponentPair;
    fn mul(self, k: i64) -> Self {
        ExponentPair::new(self.q_exp * k, self.t_exp * k)
    }
}

/// An element of `Z[q, q^-1, t, t^-1]` in canonical sparse form: no stored
/// coefficient is zero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<ExponentPair, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(0, 0, 1)
    }

    pub fn q() -> Self {
        LaurentPoly::monomial(1, 0, 1)
    }

    pub fn t() -> Self {
        LaurentPoly::monomial(0, 1, 1)
    }

    pub fn monomial(q_exp: i64, t_exp: i64, coeff: impl Into<BigInt>) -> Self {
        LaurentPoly::from_term(ExponentPair::new(q_exp, t_exp), coeff.into())
    }

    pub fn from_term(e: ExponentPair, coeff: BigInt) -> Self {
        let mut p = LaurentPoly::zero();
        p.add_term(e, coeff);
        p
    }

    /// Build from `(q_exp, t_exp, coeff)` triples; repeated monomials are summed.
    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (i64, i64, C)>) -> Self {
        let mut p = LaurentPoly::zero();
        for (q, t, c) in terms {
            p.add_term(ExponentPair::new(q, t), c.into());
        }
        p
    }

    /// `(q t)^k`.
    pub fn qt_power(k: i64) -> Self {
        LaurentPoly::monomial(k, k, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in increasing graded lexicographic order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (ExponentPair, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    /// Terms in the display order: `q` exponent descending, then `t` ascending.
    pub fn terms_display_order(&self) -> Vec<(ExponentPair, &BigInt)> {
        let mut v: Vec<_> = self.terms().collect();
        v.sort_by(|(a, _), (b, _)| b.q_exp.cmp(&a.q_exp).then(a.t_exp.cmp(&b.t_exp)));
        v
    }

    pub fn coeff(&self, q_exp: i64, t_exp: i64) -> BigInt {
        self.terms
            .get(&ExponentPair::new(q_exp, t_exp))
            .cloned()
            .unwrap_or_default()
    }

    /// Largest monomial in the graded lexicographic order.
    pub fn leading(&self) -> Option<(ExponentPair, &BigInt)> {
        self.terms.last_key_value().map(|(e, c)| (*e, c))
    }

    /// Smallest monomial in the graded lexicographic order.
    pub fn trailing(&self) -> Option<(ExponentPair, &BigInt)> {
        self.terms.first_key_value().map(|(e, c)| (*e, c))
    }

    pub fn add_term(&mut self, e: ExponentPair, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub(crate) fn remove_term(&mut self, e: ExponentPair) -> Option<BigInt> {
        self.terms.remove(&e)
    }

    /// Multiply by the monomial `q^e.q_exp t^e.t_exp`.
    pub fn shift(&self, e: ExponentPair) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(k, c)| (*k + e, c.clone())).collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect(),
        }
    }

    /// Multiply by the binomial `1 - q^e.q_exp t^e.t_exp`.
    pub fn mul_one_minus(&self, e: ExponentPair) -> Self {
        let mut out = self.clone();
        for (k, c) in &self.terms {
            out.add_term(*k + e, -c);
        }
        out
    }

    /// Exchange `q` and `t` in every term.
    pub fn swap_qt(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (e.transpose(), c.clone())).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = LaurentPoly::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.swap_qt()
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    pub fn negative_terms(&self) -> impl Iterator<Item = (ExponentPair, &BigInt)> + '_ {
        self.terms().filter(|(_, c)| c.is_negative())
    }

    /// True if every exponent is nonnegative.
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|e| e.q_exp >= 0 && e.t_exp >= 0)
    }

    /// Sum of coefficients (the value at `q = t = 1`).
    pub fn eval_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Substitute `t = 1`.
    pub fn specialize_t_one(&self) -> QPoly {
        QPoly::from_terms(self.terms.iter().map(|(e, c)| (e.q_exp, c.clone())))
    }

    /// Substitute `t = q^-1`.
    pub fn specialize_t_qinv(&self) -> QPoly {
        QPoly::from_terms(self.terms.iter().map(|(e, c)| (e.q_exp - e.t_exp, c.clone())))
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c);
        }
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self -= &rhs;
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let (small, large) = if self.num_terms() <= rhs.num_terms() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut acc: std::collections::HashMap<ExponentPair, BigInt> =
            std::collections::HashMap::with_capacity(large.num_terms() * 2);
        for (e1, c1) in &small.terms {
            for (e2, c2) in &large.terms {
                *acc.entry(*e1 + *e2).or_default() += c1 * c2;
            }
        }
        LaurentPoly {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        let mut acc = LaurentPoly::zero();
        for p in iter {
            acc += &p;
        }
        acc
    }
}

fn fmt_power(var: &str, e: i64) -> String {
    match e {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{e}"),
    }
}

/// Plain-text rendering, e.g. `q^4 + q^3*t - q*t`, in display order.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.terms_display_order().into_iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let vars: Vec<String> = [fmt_power("q", e.q_exp), fmt_power("t", e.t_exp)]
                .into_iter()
                .filter(|s| !s.is_empty())
                .collect();
            if vars.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{mag}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(i64, i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn additive_cancellation() {
        let sum = &p(&[(1, 0, 1), (0, 1, 1)]) + &p(&[(0, 1, -1)]);
        assert_eq!(sum, LaurentPoly::q());
        assert_eq!(sum.num_terms(), 1);
    }

    #[test]
    fn difference_of_squares() {
        let prod = &p(&[(0, 0, 1), (1, 0, -1)]) * &p(&[(0, 0, 1), (1, 0, 1)]);
        assert_eq!(prod, p(&[(0, 0, 1), (2, 0, -1)]));
    }

    #[test]
    fn laurent_inverse_monomials() {
        let prod = &p(&[(-1, 1, 1)]) * &p(&[(1, -1, 1)]);
        assert_eq!(prod, LaurentPoly::one());
    }

    #[test]
    fn grlex_order() {
        let mut v = vec![
            ExponentPair::new(0, 2),
            ExponentPair::new(1, 0),
            ExponentPair::new(2, -1),
            ExponentPair::new(-1, 0),
        ];
        v.sort();
        assert_eq!(
            v,
            vec![
                ExponentPair::new(-1, 0),
                ExponentPair::new(1, 0),
                ExponentPair::new(2, -1),
                ExponentPair::new(0, 2)
            ]
        );
    }

    #[test]
    fn display_order_q_descending_t_ascending() {
        let f = p(&[(0, 1, 1), (1, 0, 1), (1, 1, -2), (0, 0, 3)]);
        assert_eq!(f.to_string(), "q - 2*q*t + 3 + t");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(p(&[(-2, 1, -1)]).to_string(), "-q^-2*t");
    }

    #[test]
    fn mul_one_minus_matches_general_product() {
        let f = p(&[(2, 1, 3), (-1, 0, -2), (0, 0, 1)]);
        let e = ExponentPair::new(1, -1);
        let direct = &f * &p(&[(0, 0, 1), (1, -1, -1)]);
        assert_eq!(f.mul_one_minus(e), direct);
    }
}
