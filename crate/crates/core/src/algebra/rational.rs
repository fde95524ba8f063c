//! Rational functions whose denominators are products of binomials
//! `1 - q^alpha t^beta`.
//!
//! Every factor is stored with `(alpha, beta)` positive in the graded
//! lexicographic order. A factor written the other way round is flipped using
//! `1 - x^-1 = -x^-1 (1 - x)` and the unit goes into the numerator, so equal
//! factors always share a multiset key.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::poly::{ExponentPair, LaurentPoly};
use crate::error::{QtcError, Result};

/// The factor `1 - q^alpha t^beta` with `(alpha, beta)` positive in graded
/// lexicographic order (in particular never `(0, 0)`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinomialFactor {
    exp: ExponentPair,
}

/// A signed monomial `sign * q^a t^b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Unit {
    pub negative: bool,
    pub exp: ExponentPair,
}

impl Unit {
    pub const ONE: Unit = Unit {
        negative: false,
        exp: ExponentPair::ZERO,
    };

    pub fn inverse(self) -> Unit {
        Unit {
            negative: self.negative,
            exp: -self.exp,
        }
    }

    pub fn to_poly(self) -> LaurentPoly {
        LaurentPoly::from_term(self.exp, BigInt::from(if self.negative { -1 } else { 1 }))
    }
}

impl BinomialFactor {
    /// Write `1 - q^alpha t^beta` as `unit * factor`. Returns `None` for the
    /// identically zero factor `alpha = beta = 0`.
    pub fn normalize(alpha: i64, beta: i64) -> Option<(Unit, BinomialFactor)> {
        let e = ExponentPair::new(alpha, beta);
        if e.is_zero() {
            None
        } else if e.is_positive() {
            Some((Unit::ONE, BinomialFactor { exp: e }))
        } else {
            // 1 - x = -x (1 - x^-1)
            Some((Unit { negative: true, exp: e }, BinomialFactor { exp: -e }))
        }
    }

    /// The factor `1 - q^alpha t^beta`, which must already be in canonical
    /// orientation.
    pub fn new(alpha: i64, beta: i64) -> Result<BinomialFactor> {
        match Self::normalize(alpha, beta) {
            Some((Unit::ONE, f)) => Ok(f),
            Some(_) => Err(QtcError::Domain(format!(
                "factor (1 - q^{alpha} t^{beta}) is not in canonical orientation"
            ))),
            None => Err(QtcError::Domain("factor (1 - q^0 t^0) vanishes".into())),
        }
    }

    pub fn alpha(self) -> i64 {
        self.exp.q_exp
    }

    pub fn beta(self) -> i64 {
        self.exp.t_exp
    }

    pub fn exponent(self) -> ExponentPair {
        self.exp
    }

    pub fn to_poly(self) -> LaurentPoly {
        LaurentPoly::one().mul_one_minus(self.exp)
    }
}

/// Exact quotient `p / (1 - m)` where `m = q^e`, `e` positive.
///
/// Long division from the leading term. If `p = (1 - m) Q` then the Newton
/// polytope of `Q` lies inside that of `p`, so every quotient monomial must
/// fall in the bounding box of the support of `p`; leaving the box means the
/// division is not exact.
pub fn divide_one_minus(p: &LaurentPoly, e: ExponentPair) -> Option<LaurentPoly> {
    debug_assert!(e.is_positive());
    if p.is_zero() {
        return Some(LaurentPoly::zero());
    }
    let (mut qlo, mut qhi, mut tlo, mut thi) = (i64::MAX, i64::MIN, i64::MAX, i64::MIN);
    for (x, _) in p.terms() {
        qlo = qlo.min(x.q_exp);
        qhi = qhi.max(x.q_exp);
        tlo = tlo.min(x.t_exp);
        thi = thi.max(x.t_exp);
    }
    let mut rem = p.clone();
    let mut quot = LaurentPoly::zero();
    while let Some((lead, _)) = rem.leading() {
        let qexp = lead - e;
        if qexp.q_exp < qlo || qexp.q_exp > qhi || qexp.t_exp < tlo || qexp.t_exp > thi {
            return None;
        }
        let c = rem.remove_term(lead).expect("leading term present");
        // rem - (1 - m) * (-c q^qexp) = rem + c q^qexp - c q^lead
        quot.add_term(qexp, -c.clone());
        rem.add_term(qexp, c);
    }
    Some(quot)
}

/// `numerator / prod (1 - q^alpha t^beta)`, not necessarily reduced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredRational {
    numerator: LaurentPoly,
    denominator: BTreeMap<BinomialFactor, u32>,
}

impl FactoredRational {
    pub fn from_poly(p: LaurentPoly) -> Self {
        FactoredRational {
            numerator: p,
            denominator: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn new(numerator: LaurentPoly, denominator: impl IntoIterator<Item = BinomialFactor>) -> Self {
        let mut den = BTreeMap::new();
        for f in denominator {
            *den.entry(f).or_insert(0) += 1;
        }
        FactoredRational {
            numerator,
            denominator: den,
        }
    }

    /// `prefactor * prod(1 - x_num) / prod(1 - x_den)` with factors given as raw
    /// exponent pairs. Vanishing factors `(0, 0)` are dropped on either side and
    /// factors common to both sides cancel.
    pub fn from_binomials(prefactor: LaurentPoly, num: &[ExponentPair], den: &[ExponentPair]) -> Self {
        let mut unit_neg = false;
        let mut unit_exp = ExponentPair::ZERO;
        let mut counts: BTreeMap<BinomialFactor, i64> = BTreeMap::new();
        for e in num {
            if let Some((u, f)) = BinomialFactor::normalize(e.q_exp, e.t_exp) {
                unit_neg ^= u.negative;
                unit_exp = unit_exp + u.exp;
                *counts.entry(f).or_insert(0) += 1;
            }
        }
        for e in den {
            if let Some((u, f)) = BinomialFactor::normalize(e.q_exp, e.t_exp) {
                let u = u.inverse();
                unit_neg ^= u.negative;
                unit_exp = unit_exp + u.exp;
                *counts.entry(f).or_insert(0) -= 1;
            }
        }
        let mut numerator = prefactor.shift(unit_exp);
        if unit_neg {
            numerator = -numerator;
        }
        let mut denominator = BTreeMap::new();
        for (f, k) in counts {
            if k > 0 {
                for _ in 0..k {
                    numerator = numerator.mul_one_minus(f.exp);
                }
            } else if k < 0 {
                denominator.insert(f, (-k) as u32);
            }
        }
        FactoredRational { numerator, denominator }
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.numerator
    }

    pub fn denominator(&self) -> impl Iterator<Item = (BinomialFactor, u32)> + '_ {
        self.denominator.iter().map(|(f, k)| (*f, *k))
    }

    pub fn denominator_degree(&self) -> u32 {
        self.denominator.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    pub fn mul_poly(&self, p: &LaurentPoly) -> Self {
        FactoredRational {
            numerator: &self.numerator * p,
            denominator: self.denominator.clone(),
        }
    }

    /// Divide out every denominator factor that divides the numerator exactly.
    pub fn reduce(&self) -> Self {
        let mut numerator = self.numerator.clone();
        let mut denominator = BTreeMap::new();
        for (f, k) in &self.denominator {
            let mut left = *k;
            while left > 0 {
                match divide_one_minus(&numerator, f.exp) {
                    Some(q) => {
                        numerator = q;
                        left -= 1;
                    }
                    None => break,
                }
            }
            if left > 0 {
                denominator.insert(*f, left);
            }
        }
        FactoredRational { numerator, denominator }
    }

    /// Value equality by cross-multiplication.
    pub fn same_value(&self, other: &FactoredRational) -> bool {
        let mut lhs = self.numerator.clone();
        for (f, k) in &other.denominator {
            for _ in 0..*k {
                lhs = lhs.mul_one_minus(f.exp);
            }
        }
        let mut rhs = other.numerator.clone();
        for (f, k) in &self.denominator {
            for _ in 0..*k {
                rhs = rhs.mul_one_minus(f.exp);
            }
        }
        lhs == rhs
    }
}

pub fn rat_mul(x: &FactoredRational, y: &FactoredRational) -> FactoredRational {
    let mut denominator = x.denominator.clone();
    for (f, k) in &y.denominator {
        *denominator.entry(*f).or_insert(0) += k;
    }
    FactoredRational {
        numerator: &x.numerator * &y.numerator,
        denominator,
    }
}

/// Sum over the least common multiple of the two factor multisets.
pub fn rat_add(x: &FactoredRational, y: &FactoredRational) -> FactoredRational {
    if x.is_zero() {
        return y.clone();
    }
    if y.is_zero() {
        return x.clone();
    }
    let mut denominator = x.denominator.clone();
    for (f, k) in &y.denominator {
        let slot = denominator.entry(*f).or_insert(0);
        *slot = (*slot).max(*k);
    }
    let lift = |r: &FactoredRational| {
        let mut n = r.numerator.clone();
        for (f, k) in &denominator {
            let have = r.denominator.get(f).copied().unwrap_or(0);
            for _ in have..*k {
                n = n.mul_one_minus(f.exp);
            }
        }
        n
    };
    let mut numerator = lift(x);
    numerator += &lift(y);
    if numerator.is_zero() {
        return FactoredRational::from_poly(LaurentPoly::zero());
    }
    FactoredRational { numerator, denominator }
}

/// Divide the numerator by every denominator factor; fails with
/// `NotPolynomial` if any division leaves a remainder.
pub fn rat_to_poly(x: &FactoredRational) -> Result<LaurentPoly> {
    let mut n = x.numerator.clone();
    for (f, k) in &x.denominator {
        for _ in 0..*k {
            n = divide_one_minus(&n, f.exp).ok_or_else(|| {
                QtcError::NotPolynomial(format!(
                    "numerator not divisible by (1 - q^{} t^{})",
                    f.alpha(),
                    f.beta()
                ))
            })?;
        }
    }
    Ok(n)
}

impl Zero for FactoredRational {
    fn zero() -> Self {
        FactoredRational::from_poly(LaurentPoly::zero())
    }
    fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }
}

impl std::ops::Add for FactoredRational {
    type Output = FactoredRational;
    fn add(self, rhs: Self) -> Self {
        rat_add(&self, &rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(i64, i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    fn ep(q: i64, t: i64) -> ExponentPair {
        ExponentPair::new(q, t)
    }

    #[test]
    fn normalization_flips_negative_orientation() {
        assert!(BinomialFactor::normalize(0, 0).is_none());
        let (u, f) = BinomialFactor::normalize(-1, 1).unwrap();
        assert_eq!((f.alpha(), f.beta()), (1, -1));
        // (1 - t/q) == u * (1 - q/t)
        assert_eq!(&u.to_poly() * &f.to_poly(), p(&[(0, 0, 1), (-1, 1, -1)]));
        assert!(BinomialFactor::new(-1, 0).is_err());
    }

    #[test]
    fn multiplicative_identity() {
        let x = FactoredRational::from_binomials(p(&[(2, 1, 3)]), &[], &[ep(1, 0), ep(0, -1)]);
        assert_eq!(rat_mul(&x, &FactoredRational::one()), x);
    }

    #[test]
    fn like_denominators() {
        let one_minus_q = BinomialFactor::new(1, 0).unwrap();
        let x = FactoredRational::new(LaurentPoly::one(), [one_minus_q]);
        let y = FactoredRational::new(-LaurentPoly::q(), [one_minus_q]);
        let s = rat_add(&x, &y);
        assert_eq!(s.numerator(), &p(&[(0, 0, 1), (1, 0, -1)]));
        assert_eq!(s.denominator().collect::<Vec<_>>(), vec![(one_minus_q, 1)]);
        assert_eq!(rat_to_poly(&s).unwrap(), LaurentPoly::one());
    }

    #[test]
    fn opposite_ratio_sum_is_one() {
        // 1/(1 - t/q) + 1/(1 - q/t) = 1
        let x = FactoredRational::from_binomials(LaurentPoly::one(), &[], &[ep(-1, 1)]);
        let y = FactoredRational::from_binomials(LaurentPoly::one(), &[], &[ep(1, -1)]);
        let s = rat_add(&x, &y);
        // Oracle: clear denominators by hand. With u = q/t the sum is
        // 1/(1 - 1/u) + 1/(1 - u) = -u/(1 - u) + 1/(1 - u) = 1.
        assert_eq!(rat_to_poly(&s).unwrap(), LaurentPoly::one());
        assert!(s.reduce().same_value(&FactoredRational::one()));
    }

    #[test]
    fn geometric_factor() {
        let x = FactoredRational::new(p(&[(0, 0, 1), (2, 0, -1)]), [BinomialFactor::new(1, 0).unwrap()]);
        assert_eq!(rat_to_poly(&x).unwrap(), p(&[(0, 0, 1), (1, 0, 1)]));
    }

    #[test]
    fn difference_of_squares_over_ratio() {
        // q^2 - t^2 = (1 - t/q) * q * (q + t), expanded by hand
        let by_hand = &(&p(&[(0, 0, 1), (-1, 1, -1)]) * &LaurentPoly::q()) * &p(&[(1, 0, 1), (0, 1, 1)]);
        assert_eq!(by_hand, p(&[(2, 0, 1), (0, 2, -1)]));
        let x = FactoredRational::from_binomials(p(&[(2, 0, 1), (0, 2, -1)]), &[], &[ep(-1, 1)]);
        assert_eq!(rat_to_poly(&x).unwrap(), p(&[(2, 0, 1), (1, 1, 1)]));
    }

    #[test]
    fn non_terminating_division_is_rejected() {
        let x = FactoredRational::new(LaurentPoly::one(), [BinomialFactor::new(1, 0).unwrap()]);
        assert!(matches!(rat_to_poly(&x), Err(QtcError::NotPolynomial(_))));
        let y = FactoredRational::new(
            p(&[(3, 0, 1), (0, 0, -1), (1, 1, 2)]),
            [BinomialFactor::new(0, 1).unwrap()],
        );
        assert!(rat_to_poly(&y).is_err());
    }

    #[test]
    fn division_inverts_multiplication() {
        let f = p(&[(3, -2, 4), (0, 0, -1), (-1, 5, 7), (2, 2, 2)]);
        for e in [ep(1, 0), ep(0, 1), ep(1, -1), ep(-1, 2), ep(2, 3)] {
            let g = f.mul_one_minus(e);
            assert_eq!(divide_one_minus(&g, e), Some(f.clone()), "e = {e:?}");
        }
    }
}
