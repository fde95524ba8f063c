//! The `t`-statistic and the chain formulas for `F(a,b,c)` and `H_comb`.

use crate::algebra::{sym_chain, ExponentPair, LaurentPoly};
use crate::closed_forms::{ceil_div, h3, ABCParams};
use crate::error::Result;

use super::decomposition::{classify, CaseLabel};
use super::index::{enumerate_quasiheads, quasihead_conditions, subpartitions, Partition3};

/// The case-defined statistic of `lam = (x,y,z)`.
pub fn stat(p: &ABCParams, lam: &Partition3) -> Result<i64> {
    let case = classify(p, lam)?;
    let Partition3 { x, y, z } = *lam;
    let (a, b, c, l) = (p.a(), p.b(), p.c(), p.big_l());
    Ok(match case {
        CaseLabel::OneA => {
            x + 0
                .max(ceil_div(y - a, 2))
                .max(y + z - b - c)
                .max(ceil_div(2 * y + z - l, 2))
        }
        CaseLabel::OneBI => -l + 2 * x + y - z + 0.max(ceil_div(l + z - x - a, 2)),
        CaseLabel::OneBII => {
            2 * x + 3 * y + z - (a + 3 * b + 3 * c)
                + 0.max(ceil_div(2 * b + 2 * c - x - y, 2))
                    .max(a + 2 * b + 2 * c - x - 2 * y)
        }
        CaseLabel::Two => y + z,
    })
}

/// `F(a,b,c) = sum over quasiheads of [s + epsilon_{st}, A - 2s - t]`.
pub fn f_chains(p: &ABCParams) -> LaurentPoly {
    enumerate_quasiheads(p)
        .iter()
        .map(|q| {
            let r = q.area_range();
            sym_chain(r.lo, r.hi).expect("quasihead ranges are nonempty")
        })
        .sum()
}

/// `F(a,b,c) = sum_{lam} q^area t^stat`.
pub fn f_stat(p: &ABCParams) -> Result<LaurentPoly> {
    let mut out = LaurentPoly::zero();
    for lam in subpartitions(p) {
        out.add_term(ExponentPair::new(lam.area(p), stat(p, &lam)?), 1.into());
    }
    Ok(out)
}

/// `sum over quasiheads (s,t) of q^{A-2s-t} t^{s+epsilon_{st}}` for arbitrary
/// integers; the quasihead set is empty when `c < 0`.
pub fn h_comb_at(a: i64, b: i64, c: i64) -> LaurentPoly {
    let big_a = a + 2 * b + 3 * c;
    let mut out = LaurentPoly::zero();
    for t in 0..=c {
        for s in t..=b + c {
            if quasihead_conditions(a, b, c, s, t) {
                let ep = (s + t - b - c).max(0);
                out.add_term(ExponentPair::new(big_a - 2 * s - t, s + ep), 1.into());
            }
        }
    }
    out
}

/// `H_comb(a,b,c)`.
pub fn h_comb(p: &ABCParams) -> LaurentPoly {
    h_comb_at(p.a(), p.b(), p.c())
}

/// Right-hand side of the two-step recursion satisfied by `H_comb`, for
/// `c >= 1`:
/// `H_comb(a+2,b+2,c-2) + (qt)^c H(a+c,b-c) + (qt)^{c-1} H(a+c,b-c+2)
///  + sum_{2 <= l <= min(2c,a-b)} q^{a+2c-l} t^{l+b}
///  - [a = b-1] q^{a+2c} t^b - ([a = b] + [a = b-1]) q^{a+2c-1} t^{b+1}`.
pub fn h_comb_recursion_rhs(p: &ABCParams) -> Result<LaurentPoly> {
    let (a, b, c) = (p.a(), p.b(), p.c());
    let qt = LaurentPoly::qt_power;
    let mut v = h_comb_at(a + 2, b + 2, c - 2);
    v += &(&qt(c) * &h3(a + c, b - c)?);
    v += &(&qt(c - 1) * &h3(a + c, b - c + 2)?);
    for l in 2..=(2 * c).min(a - b) {
        v.add_term(ExponentPair::new(a + 2 * c - l, l + b), 1.into());
    }
    let kron = |x: bool| if x { 1 } else { 0 };
    let d_eq = kron(a == b);
    let d_below = kron(a == b - 1);
    v.add_term(ExponentPair::new(a + 2 * c, b), (-d_below).into());
    v.add_term(ExponentPair::new(a + 2 * c - 1, b + 1), (-(d_eq + d_below)).into());
    Ok(v)
}
