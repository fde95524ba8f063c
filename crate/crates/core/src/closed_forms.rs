//! Closed forms for `F` with one and two arguments, and two recursions for
//! three arguments.

use std::collections::HashMap;
use std::fmt;
use std::sync::{OnceLock, RwLock};

use crate::algebra::{bracket, LaurentPoly};
use crate::error::{domain, Result};

/// `ceil(num / den)` for `den > 0`, rounding toward positive infinity.
pub fn ceil_div(num: i64, den: i64) -> i64 {
    debug_assert!(den > 0);
    let q = num.div_euclid(den);
    if num.rem_euclid(den) == 0 {
        q
    } else {
        q + 1
    }
}

/// The three arguments of `F(a,b,c)`, restricted to
/// `a + 1 >= b`, `a + 1 >= c`, `b + 1 >= c`, `c >= 0` and `a, b >= 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ABCParams {
    a: i64,
    b: i64,
    c: i64,
}

impl ABCParams {
    pub fn new(a: i64, b: i64, c: i64) -> Result<Self> {
        if Self::in_region(a, b, c) {
            Ok(ABCParams { a, b, c })
        } else {
            domain(format!(
                "({a},{b},{c}) is outside the region a+1 >= b, a+1 >= c, b+1 >= c, c >= 0, a,b >= 0"
            ))
        }
    }

    /// Only nonnegativity is checked. Index sets and maps are well defined
    /// here, but the chain theorems are not claimed.
    pub fn unrestricted(a: i64, b: i64, c: i64) -> Result<Self> {
        if a < 0 || b < 0 || c < 0 {
            return domain(format!("({a},{b},{c}) must be nonnegative"));
        }
        Ok(ABCParams { a, b, c })
    }

    pub fn in_region(a: i64, b: i64, c: i64) -> bool {
        a >= 0 && b >= 0 && c >= 0 && a + 1 >= b && a + 1 >= c && b + 1 >= c
    }

    /// Every valid triple with all entries at most `max`, in lexicographic order.
    pub fn grid(max: i64) -> Vec<ABCParams> {
        let mut out = Vec::new();
        for a in 0..=max {
            for b in 0..=max {
                for c in 0..=max {
                    if let Ok(p) = ABCParams::new(a, b, c) {
                        out.push(p);
                    }
                }
            }
        }
        out
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    pub fn c(&self) -> i64 {
        self.c
    }

    /// `A = a + 2b + 3c`, the size of `lambda(a,b,c)`.
    pub fn big_a(&self) -> i64 {
        self.a + 2 * self.b + 3 * self.c
    }

    /// `L = a + b + c`, the first part of `lambda(a,b,c)`.
    pub fn big_l(&self) -> i64 {
        self.a + self.b + self.c
    }

    pub fn as_vec(&self) -> Vec<i64> {
        vec![self.a, self.b, self.c]
    }
}

impl fmt::Display for ABCParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.a, self.b, self.c)
    }
}

/// `F(a)` for any integer `a`: `[a+1]` for `a >= 0`, zero at `-1`, and
/// `F(-a) = -(qt)^{-(a-1)} F(a-2)` below that.
pub fn f1(a: i64) -> LaurentPoly {
    match a {
        a if a >= 0 => bracket(a + 1).expect("a + 1 > 0"),
        -1 => LaurentPoly::zero(),
        a => {
            let k = -a;
            -(&LaurentPoly::qt_power(-(k - 1)) * &f1(k - 2))
        }
    }
}

fn check_two(a: i64, b: i64) -> Result<()> {
    if b < -1 || a < b - 1 {
        return domain(format!("F({a},{b}) needs b >= -1 and a >= b-1"));
    }
    Ok(())
}

/// `F(a,b) = sum_{i=0}^{b} sum_{j=i}^{a+2b-2i} q^j t^{a+2b-i-j}`.
pub fn f2(a: i64, b: i64) -> Result<LaurentPoly> {
    check_two(a, b)?;
    let mut out = LaurentPoly::zero();
    for i in 0..=b {
        for j in i..=a + 2 * b - 2 * i {
            out.add_term(crate::ExponentPair::new(j, a + 2 * b - i - j), 1.into());
        }
    }
    Ok(out)
}

/// `F(a,b) = sum_{i=0}^{b} (qt)^i [a+2b+1-3i]`.
pub fn f2_chain_form(a: i64, b: i64) -> Result<LaurentPoly> {
    check_two(a, b)?;
    let mut out = LaurentPoly::zero();
    for i in 0..=b {
        out += &(&LaurentPoly::qt_power(i) * &bracket(a + 2 * b + 1 - 3 * i)?);
    }
    Ok(out)
}

/// `H(a) = q^a`.
pub fn h2(a: i64) -> LaurentPoly {
    LaurentPoly::monomial(a, 0, 1)
}

/// `H(a,b) = q^a sum_{i=0}^{b} q^{2(b-i)} t^i` for `b >= -1`.
pub fn h3(a: i64, b: i64) -> Result<LaurentPoly> {
    if b < -1 {
        return domain(format!("H({a},{b}) needs b >= -1"));
    }
    Ok(LaurentPoly::from_terms((0..=b).map(|i| (a + 2 * (b - i), i, 1))))
}

/// Memo table for [`f3_recursive`].
#[derive(Default)]
pub struct RecursionMemo {
    table: RwLock<HashMap<(i64, i64, i64), LaurentPoly>>,
}

impl RecursionMemo {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.table.read().expect("memo lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `F(a,b,c) = F(a+1,b+1,c-1) + (qt)^c F(a+c,b-c)
    ///   + sum_{i=0}^{c-1} (qt)^{b+2c-2i} F(a-b-2c+4i)`, with `F(a,b,0) = F(a,b)`.
    pub fn f3(&self, p: ABCParams) -> Result<LaurentPoly> {
        let key = (p.a, p.b, p.c);
        if let Some(v) = self.table.read().expect("memo lock").get(&key) {
            return Ok(v.clone());
        }
        let (a, b, c) = key;
        let value = if c == 0 {
            f2(a, b)?
        } else {
            let mut v = self.f3(ABCParams::new(a + 1, b + 1, c - 1)?)?;
            v += &(&LaurentPoly::qt_power(c) * &f2(a + c, b - c)?);
            for i in 0..c {
                v += &(&LaurentPoly::qt_power(b + 2 * c - 2 * i) * &f1(a - b - 2 * c + 4 * i));
            }
            v
        };
        self.table
            .write()
            .expect("memo lock")
            .entry(key)
            .or_insert_with(|| value.clone());
        Ok(value)
    }
}

fn shared_memo() -> &'static RecursionMemo {
    static MEMO: OnceLock<RecursionMemo> = OnceLock::new();
    MEMO.get_or_init(RecursionMemo::new)
}

/// `F(a,b,c)` by the one-step recursion, memoized process-wide.
pub fn f3_recursive(p: ABCParams) -> Result<LaurentPoly> {
    shared_memo().f3(p)
}

/// `F(a,b,c)` by the two-step recursion; requires `c >= 1`.
pub fn f3_two_step(p: ABCParams) -> Result<LaurentPoly> {
    let (a, b, c) = (p.a, p.b, p.c);
    if c < 1 {
        return domain(format!("two-step recursion needs c >= 1, got {p}"));
    }
    let qt = LaurentPoly::qt_power;
    let mut v = match c - 2 {
        -1 => LaurentPoly::zero(),
        0 => f2(a + 2, b + 2)?,
        _ => f3_two_step(ABCParams::new(a + 2, b + 2, c - 2)?)?,
    };
    v += &(&qt(c) * &f2(a + c, b - c)?);
    v += &(&qt(c - 1) * &f2(a + c, b - c + 2)?);
    for j in 2..=(a - b).min(2 * c) {
        v += &(&qt(b + j) * &f1(a - b + 2 * c - 2 * j));
    }
    for j in a - b + 1..=1 {
        v -= &(&qt(b + j) * &f1(a - b + 2 * c - 2 * j));
    }
    Ok(v)
}

/// `S_i(m,n) = ceil(im/n) - ceil((i-1)m/n)` for `i = 1..n`.
pub fn slope_sequence(m: i64, n: i64) -> Result<Vec<i64>> {
    if m < 1 || n < 1 {
        return domain(format!("slope sequence needs m, n >= 1, got ({m},{n})"));
    }
    Ok((1..=n).map(|i| ceil_div(i * m, n) - ceil_div((i - 1) * m, n)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(i64, i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn ceilings() {
        assert_eq!(ceil_div(-1, 2), 0);
        assert_eq!(ceil_div(-2, 2), -1);
        assert_eq!(ceil_div(-3, 2), -1);
        assert_eq!(ceil_div(3, 2), 2);
        assert_eq!(ceil_div(4, 2), 2);
        assert_eq!(ceil_div(0, 3), 0);
        for n in -20..20 {
            assert_eq!(ceil_div(n, 2), (n as f64 / 2.0).ceil() as i64);
        }
    }

    #[test]
    fn region() {
        assert!(ABCParams::new(1, 1, 2).is_ok());
        assert!(ABCParams::new(0, 0, 0).is_ok());
        assert!(ABCParams::new(0, 2, 0).is_err());
        assert!(ABCParams::new(1, 1, 3).is_err());
        assert!(ABCParams::new(1, 1, -1).is_err());
        assert!(ABCParams::new(2, 3, 4).is_err());
        let p = ABCParams::unrestricted(2, 3, 4).unwrap();
        assert_eq!((p.big_a(), p.big_l()), (20, 9));
        assert!(ABCParams::unrestricted(0, -1, 0).is_err());
    }

    #[test]
    fn one_argument() {
        assert_eq!(f1(3), p(&[(3, 0, 1), (2, 1, 1), (1, 2, 1), (0, 3, 1)]));
        assert!(f1(-1).is_zero());
        assert_eq!(f1(-3), p(&[(-1, -2, -1), (-2, -1, -1)]));
        assert_eq!(f1(-2), -LaurentPoly::qt_power(-1));
    }

    #[test]
    fn reflection() {
        for a in 1..=10 {
            let lhs = &f1(-a) + &(&LaurentPoly::qt_power(-(a - 1)) * &f1(a - 2));
            assert!(lhs.is_zero(), "a = {a}");
        }
    }

    #[test]
    fn two_arguments() {
        for a in 0..6 {
            assert!(f2(a, -1).unwrap().is_zero());
        }
        assert_eq!(
            f2(1, 1).unwrap(),
            p(&[(3, 0, 1), (2, 1, 1), (1, 2, 1), (0, 3, 1), (1, 1, 1)])
        );
        assert_eq!(f2(0, 0).unwrap(), LaurentPoly::one());
        assert!(f2(0, 2).is_err());
        assert!(f2(0, -2).is_err());
        for b in -1..7 {
            for a in (b - 1).max(-2)..9 {
                assert_eq!(f2(a, b).unwrap(), f2_chain_form(a, b).unwrap(), "({a},{b})");
            }
        }
    }

    #[test]
    fn h_closed_forms() {
        assert_eq!(h2(-2), p(&[(-2, 0, 1)]));
        assert_eq!(h3(0, 2).unwrap(), p(&[(4, 0, 1), (2, 1, 1), (0, 2, 1)]));
        assert!(h3(5, -1).unwrap().is_zero());
        assert!(h3(0, -2).is_err());
    }

    #[test]
    fn h3_combines_to_f2() {
        for b in -1..=6 {
            for a in b - 1..=8 {
                let f = crate::tableaux::h_to_f(&h3(a, b).unwrap()).unwrap();
                assert_eq!(f, f2(a, b).unwrap(), "({a},{b})");
            }
        }
    }

    #[test]
    fn recursion_base_and_chain_sums() {
        let r = |a, b, c| f3_recursive(ABCParams::new(a, b, c).unwrap()).unwrap();
        assert_eq!(r(1, 1, 0), f2(1, 1).unwrap());
        let mut t1 = LaurentPoly::zero();
        for (k, l) in [(0, 6), (1, 4), (1, 3)] {
            t1 += &crate::algebra::sym_chain(k, l).unwrap();
        }
        assert_eq!(r(1, 1, 1), t1);
        let mut t2 = LaurentPoly::zero();
        for (k, l) in [(0, 9), (1, 7), (1, 6), (2, 5), (3, 3)] {
            t2 += &crate::algebra::sym_chain(k, l).unwrap();
        }
        assert_eq!(r(1, 1, 2), t2);
        assert_eq!(t2.eval_one(), 28.into());
    }

    #[test]
    fn two_step_agrees() {
        for p in ABCParams::grid(8).into_iter().filter(|p| p.c() >= 1) {
            assert_eq!(f3_two_step(p).unwrap(), f3_recursive(p).unwrap(), "{p}");
        }
        assert!(f3_two_step(ABCParams::new(1, 1, 0).unwrap()).is_err());
    }

    #[test]
    fn memo_is_reusable() {
        let memo = RecursionMemo::new();
        let p = ABCParams::new(3, 2, 2).unwrap();
        let first = memo.f3(p).unwrap();
        let size = memo.len();
        assert!(size >= 3);
        assert_eq!(memo.f3(p).unwrap(), first);
        assert_eq!(memo.len(), size);
    }

    #[test]
    fn slopes() {
        assert_eq!(slope_sequence(4, 3).unwrap(), vec![2, 1, 1]);
        assert_eq!(slope_sequence(3, 2).unwrap(), vec![2, 1]);
        assert_eq!(slope_sequence(5, 3).unwrap(), vec![2, 2, 1]);
        assert_eq!(slope_sequence(1, 1).unwrap(), vec![1]);
        assert!(slope_sequence(0, 3).is_err());
        for m in 1..10 {
            for n in 1..10 {
                assert_eq!(slope_sequence(m, n).unwrap().iter().sum::<i64>(), m);
            }
        }
    }
}
