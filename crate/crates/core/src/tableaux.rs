//! Standard Young tableaux, their `(q,t)`-contents and weights, and `F` and
//! `H` as sums over tableaux.
//!
//! Cells are addressed by their content exponents: the cell in row `r`
//! (counted from the bottom) and column `c` has content `q^(c-1) t^(r-1)`,
//! stored as `ExponentPair::new(c - 1, r - 1)`.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::algebra::{rat_add, rat_to_poly, ExponentPair, FactoredRational, LaurentPoly};
use crate::error::{domain, QtcError, Result};

/// Largest tableau size accepted by the exhaustive sums.
pub const MAX_TABLEAU_SIZE: usize = 8;

/// A weakly decreasing list of positive parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<i64>,
}

impl Partition {
    /// Trailing zeros are stripped.
    pub fn new(mut parts: Vec<i64>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.iter().any(|&p| p < 0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return domain(format!("{parts:?} is not a partition"));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// `lambda(a) = (a_2 + ... + a_n, a_3 + ... + a_n, ..., a_n)` for `a = (a_2, ..., a_n)`.
    pub fn staircase(a: &[i64]) -> Result<Self> {
        let mut parts = vec![0; a.len()];
        let mut acc = 0;
        for (i, &x) in a.iter().enumerate().rev() {
            acc += x;
            parts[i] = acc;
        }
        Partition::new(parts)
    }

    pub fn parts(&self) -> &[i64] {
        &self.parts
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> i64 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn size(&self) -> i64 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// All partitions contained in `self`, in lexicographic order of parts.
    pub fn subpartitions(&self) -> Vec<Partition> {
        fn go(bound: &[i64], prev: i64, cur: &mut Vec<i64>, out: &mut Vec<Partition>) {
            let i = cur.len();
            if i == bound.len() {
                let mut parts = cur.clone();
                while parts.last() == Some(&0) {
                    parts.pop();
                }
                out.push(Partition { parts });
                return;
            }
            for v in 0..=bound[i].min(prev) {
                cur.push(v);
                go(bound, v, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(&self.parts, i64::MAX, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Exponent vector `(a_2, ..., a_n)`, parsed from comma-separated integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntVector(pub Vec<i64>);

impl FromStr for IntVector {
    type Err = QtcError;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(QtcError::Parse("empty vector".into()));
        }
        s.split(',')
            .map(|x| {
                x.trim()
                    .parse::<i64>()
                    .map_err(|e| QtcError::Parse(format!("bad entry {x:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(IntVector)
    }
}

impl fmt::Display for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A standard tableau stored as its growth sequence: `cells[i]` is the
/// content of the box labeled `i + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StandardTableau {
    cells: Vec<ExponentPair>,
}

impl StandardTableau {
    /// Validate a growth sequence given as content exponents.
    pub fn from_contents(cells: Vec<ExponentPair>) -> Result<Self> {
        let mut rows: Vec<i64> = Vec::new();
        for (i, c) in cells.iter().enumerate() {
            let (col, row) = (c.q_exp, c.t_exp);
            let ok = row >= 0
                && col >= 0
                && (row as usize) <= rows.len()
                && rows.get(row as usize).copied().unwrap_or(0) == col
                && (row == 0 || rows[row as usize - 1] > col);
            if !ok {
                return domain(format!("cell {} at {c:?} breaks the growth condition", i + 1));
            }
            if row as usize == rows.len() {
                rows.push(1);
            } else {
                rows[row as usize] += 1;
            }
        }
        Ok(StandardTableau { cells })
    }

    pub fn size(&self) -> usize {
        self.cells.len()
    }

    /// The content vector `z(T)`.
    pub fn z(&self) -> &[ExponentPair] {
        &self.cells
    }

    pub fn shape(&self) -> Partition {
        let mut rows: Vec<i64> = Vec::new();
        for c in &self.cells {
            let r = c.t_exp as usize;
            if r == rows.len() {
                rows.push(0);
            }
            rows[r] += 1;
        }
        Partition { parts: rows }
    }

    /// `z_2 = q`.
    pub fn is_head_like(&self) -> bool {
        self.cells.get(1) == Some(&ExponentPair::new(1, 0))
    }

    /// Binomial factors of `wt(T)` as raw exponents, before the vanishing
    /// convention and cancellation are applied.
    fn weight_factors(&self) -> (Vec<ExponentPair>, Vec<ExponentPair>) {
        let z = &self.cells;
        let qt = ExponentPair::new(1, 1);
        let q = ExponentPair::new(1, 0);
        let t = ExponentPair::new(0, 1);
        let mut num = Vec::new();
        let mut den = Vec::new();
        for i in 1..z.len() {
            den.push(-z[i]);
            den.push(qt + z[i - 1] - z[i]);
        }
        for i in 0..z.len() {
            for j in i + 1..z.len() {
                let x = z[i] - z[j];
                num.push(x);
                num.push(qt + x);
                den.push(q + x);
                den.push(t + x);
            }
        }
        (num, den)
    }

    /// `z_2^{a_2} ... z_n^{a_n}` as an exponent pair.
    fn line_bundle(&self, a: &[i64]) -> ExponentPair {
        self.cells
            .iter()
            .skip(1)
            .zip(a)
            .fold(ExponentPair::ZERO, |acc, (z, &k)| acc + *z * k)
    }
}

/// All standard tableaux of size `n`, ordered lexicographically by growth
/// sequence with lower rows tried first.
pub fn enumerate_syt(n: usize) -> Result<Vec<StandardTableau>> {
    if n == 0 {
        return domain("tableau size must be at least 1");
    }
    fn go(n: usize, rows: &mut Vec<i64>, cells: &mut Vec<ExponentPair>, out: &mut Vec<StandardTableau>) {
        if cells.len() == n {
            out.push(StandardTableau { cells: cells.clone() });
            return;
        }
        for r in 0..=rows.len() {
            let len = rows.get(r).copied().unwrap_or(0);
            if r > 0 && rows[r - 1] <= len {
                continue;
            }
            cells.push(ExponentPair::new(len, r as i64));
            if r == rows.len() {
                rows.push(1);
            } else {
                rows[r] += 1;
            }
            go(n, rows, cells, out);
            if rows[r] == 1 && r == rows.len() - 1 {
                rows.pop();
            } else {
                rows[r] -= 1;
            }
            cells.pop();
        }
    }
    let mut out = Vec::new();
    go(n, &mut Vec::new(), &mut Vec::new(), &mut out);
    Ok(out)
}

/// `omega(x) = (1-x)(1-qtx) / ((1-qx)(1-tx))` at the monomial `x`, with
/// vanishing factors dropped.
pub fn omega_at(x: ExponentPair) -> FactoredRational {
    let qt = ExponentPair::new(1, 1);
    FactoredRational::from_binomials(
        LaurentPoly::one(),
        &[x, qt + x],
        &[ExponentPair::new(1, 0) + x, ExponentPair::new(0, 1) + x],
    )
}

/// `wt(T)` with vanishing factors ignored on both sides.
pub fn tableau_weight(tab: &StandardTableau) -> FactoredRational {
    let (num, den) = tab.weight_factors();
    FactoredRational::from_binomials(LaurentPoly::one(), &num, &den)
}

/// Reduced weight `(1 - t/q) wt(T)` of a head-like tableau.
pub fn reduced_weight(tab: &StandardTableau) -> FactoredRational {
    let (mut num, den) = tab.weight_factors();
    num.push(ExponentPair::new(-1, 1));
    FactoredRational::from_binomials(LaurentPoly::one(), &num, &den)
}

fn tableau_sum(
    a: &[i64],
    filter: impl Fn(&StandardTableau) -> bool + Sync,
    weight: impl Fn(&StandardTableau) -> FactoredRational + Sync,
) -> Result<LaurentPoly> {
    let n = a.len() + 1;
    if n > MAX_TABLEAU_SIZE {
        return domain(format!(
            "tableau sums are limited to n <= {MAX_TABLEAU_SIZE} (got n = {n})"
        ));
    }
    let total = enumerate_syt(n)?
        .par_iter()
        .filter(|t| filter(t))
        .map(|t| {
            let w = weight(t);
            let mono = LaurentPoly::from_term(t.line_bundle(a), 1.into());
            w.mul_poly(&mono).reduce()
        })
        .reduce(FactoredRational::one_zero, |x, y| rat_add(&x, &y).reduce());
    rat_to_poly(&total)
}

impl FactoredRational {
    fn one_zero() -> Self {
        FactoredRational::from_poly(LaurentPoly::zero())
    }
}

/// `F(a_2, ..., a_n) = sum_T z_2^{a_2} ... z_n^{a_n} wt(T)`. An empty vector
/// gives the single one-box tableau and `F() = 1`.
pub fn f_tableaux(a: &[i64]) -> Result<LaurentPoly> {
    tableau_sum(a, |_| true, tableau_weight)
}

/// `H(a_2, ..., a_n)`: the same sum restricted to head-like tableaux, with
/// reduced weights.
pub fn h_tableaux(a: &[i64]) -> Result<LaurentPoly> {
    if a.is_empty() {
        return domain("H needs at least one argument");
    }
    tableau_sum(a, StandardTableau::is_head_like, reduced_weight)
}

/// `F = H(q,t)/(1 - t/q) + H(t,q)/(1 - q/t)` for a given `H`.
pub fn h_to_f(h: &LaurentPoly) -> Result<LaurentPoly> {
    let left = FactoredRational::from_binomials(h.clone(), &[], &[ExponentPair::new(-1, 1)]);
    let right = FactoredRational::from_binomials(h.swap_qt(), &[], &[ExponentPair::new(1, -1)]);
    rat_to_poly(&rat_add(&left, &right))
}

/// Apply [`h_to_f`] to `h(a)`.
pub fn combine_h_to_f(h: impl Fn(&[i64]) -> Result<LaurentPoly>, a: &[i64]) -> Result<LaurentPoly> {
    h_to_f(&h(a)?)
}

/// All coefficients nonnegative and every monomial `q^i t^j` has `i >= j`.
pub fn positivity_premise_check(h: &LaurentPoly) -> bool {
    h.terms().all(|(e, c)| *c >= 0.into() && e.q_exp >= e.t_exp)
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

    fn tab(z: &[(i64, i64)]) -> StandardTableau {
        StandardTableau::from_contents(z.iter().map(|&(q, t)| ep(q, t)).collect()).unwrap()
    }

    /// `1/prod(1 - x)` for the listed monomials, as an independent target.
    fn inv_binomials(xs: &[(i64, i64)]) -> FactoredRational {
        let den: Vec<_> = xs.iter().map(|&(q, t)| ep(q, t)).collect();
        FactoredRational::from_binomials(LaurentPoly::one(), &[], &den)
    }

    #[test]
    fn syt_counts() {
        // involution numbers: brute force over growth sequences
        let counts: Vec<usize> = (1..=7).map(|n| enumerate_syt(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 10, 26, 76, 232]);
        assert!(enumerate_syt(0).is_err());
    }

    #[test]
    fn syt_are_distinct_and_valid() {
        let all = enumerate_syt(6).unwrap();
        let set: std::collections::HashSet<_> = all.iter().cloned().collect();
        assert_eq!(set.len(), all.len());
        for t in &all {
            assert_eq!(t.z()[0], ExponentPair::ZERO);
            StandardTableau::from_contents(t.z().to_vec()).unwrap();
        }
    }

    #[test]
    fn contains_displayed_tableau() {
        let target = vec![ep(0, 0), ep(1, 0), ep(0, 1), ep(0, 2), ep(1, 1), ep(2, 0), ep(3, 0)];
        let all = enumerate_syt(7).unwrap();
        let found = all
            .iter()
            .find(|t| t.z() == target.as_slice())
            .expect("tableau present");
        assert_eq!(found.shape().parts(), &[4, 2, 1]);
    }

    #[test]
    fn growth_condition_rejected() {
        assert!(StandardTableau::from_contents(vec![ep(0, 0), ep(0, 1), ep(0, 2)]).is_ok());
        assert!(StandardTableau::from_contents(vec![ep(0, 0), ep(1, 1)]).is_err());
        assert!(StandardTableau::from_contents(vec![ep(1, 0)]).is_err());
    }

    #[test]
    fn omega_vanishing_conventions() {
        let at_one = omega_at(ep(0, 0));
        assert!(at_one.same_value(&FactoredRational::from_binomials(
            LaurentPoly::one(),
            &[ep(1, 1)],
            &[ep(1, 0), ep(0, 1)]
        )));
        let at_inv = omega_at(ep(-1, -1));
        assert!(at_inv.same_value(&FactoredRational::from_binomials(
            LaurentPoly::one(),
            &[ep(-1, -1)],
            &[ep(0, -1), ep(-1, 0)]
        )));
        let at_q = omega_at(ep(1, 0));
        assert!(at_q.same_value(&FactoredRational::from_binomials(
            LaurentPoly::one(),
            &[ep(1, 0), ep(2, 1)],
            &[ep(2, 0), ep(1, 1)]
        )));
    }

    #[test]
    fn small_weights() {
        assert!(tableau_weight(&tab(&[(0, 0), (1, 0)])).same_value(&inv_binomials(&[(-1, 1)])));
        assert!(tableau_weight(&tab(&[(0, 0), (1, 0), (2, 0)])).same_value(&inv_binomials(&[(-1, 1), (-2, 1)])));
        assert!(tableau_weight(&tab(&[(0, 0), (1, 0), (0, 1)])).same_value(&inv_binomials(&[(-1, 1), (2, -1)])));
    }

    /// Cell contents, then numerator and denominator binomial exponents.
    type WeightCase = (Vec<(i64, i64)>, Vec<ExponentPair>, Vec<ExponentPair>);

    #[test]
    fn reduced_weights_for_four_boxes() {
        let cases: Vec<WeightCase> = vec![
            (vec![(0, 0), (1, 0), (2, 0), (3, 0)], vec![], vec![ep(-2, 1), ep(-3, 1)]),
            (vec![(0, 0), (1, 0), (2, 0), (0, 1)], vec![], vec![ep(-2, 1), ep(3, -1)]),
            (
                vec![(0, 0), (1, 0), (0, 1), (2, 0)],
                vec![ep(0, 1)],
                vec![ep(-2, 2), ep(2, -1), ep(-1, 1)],
            ),
            (vec![(0, 0), (1, 0), (0, 1), (0, 2)], vec![], vec![ep(2, -2), ep(1, -1)]),
            (
                vec![(0, 0), (1, 0), (0, 1), (1, 1)],
                vec![ep(1, 0)],
                vec![ep(2, -1), ep(1, -1), ep(-1, 1)],
            ),
        ];
        for (z, num, den) in cases {
            let expected = FactoredRational::from_binomials(LaurentPoly::one(), &num, &den);
            assert!(reduced_weight(&tab(&z)).same_value(&expected), "z = {z:?}");
        }
    }

    #[test]
    fn two_box_values() {
        assert_eq!(f_tableaux(&[1]).unwrap(), p(&[(1, 0, 1), (0, 1, 1)]));
        assert_eq!(f_tableaux(&[]).unwrap(), LaurentPoly::one());
        assert_eq!(h_tableaux(&[3]).unwrap(), p(&[(3, 0, 1)]));
    }

    #[test]
    fn f_0_2_has_one_negative_term() {
        let expected = p(&[
            (4, 0, 1),
            (3, 1, 1),
            (2, 2, 1),
            (1, 3, 1),
            (0, 4, 1),
            (2, 1, 1),
            (1, 2, 1),
            (1, 1, -1),
        ]);
        assert_eq!(f_tableaux(&[0, 2]).unwrap(), expected);
    }

    #[test]
    fn three_box_h_values() {
        assert_eq!(h_tableaux(&[1, 1]).unwrap(), p(&[(3, 0, 1), (1, 1, 1)]));
        for a in -3..4 {
            assert!(h_tableaux(&[a, -1]).unwrap().is_zero());
        }
    }

    #[test]
    fn h_combination_recovers_f() {
        assert_eq!(
            combine_h_to_f(h_tableaux, &[1, 1]).unwrap(),
            p(&[(3, 0, 1), (2, 1, 1), (1, 2, 1), (0, 3, 1), (1, 1, 1)])
        );
        assert_eq!(h_to_f(&LaurentPoly::q()).unwrap(), p(&[(1, 0, 1), (0, 1, 1)]));
        assert!(h_to_f(&LaurentPoly::zero()).unwrap().is_zero());
    }

    #[test]
    fn premise_check() {
        assert!(positivity_premise_check(&p(&[(3, 0, 1), (1, 1, 1)])));
        assert!(!positivity_premise_check(&p(&[(1, 0, 1), (0, 1, 2)])));
        assert!(!positivity_premise_check(&p(&[(1, 0, -1)])));
        assert!(positivity_premise_check(&LaurentPoly::zero()));
    }

    #[test]
    fn size_bound_enforced() {
        assert!(matches!(f_tableaux(&[0; 8]), Err(QtcError::Domain(_))));
    }

    #[test]
    fn partitions() {
        assert_eq!(Partition::staircase(&[1, 1, 1]).unwrap().parts(), &[3, 2, 1]);
        assert_eq!(Partition::new(vec![2, 1, 0, 0]).unwrap().parts(), &[2, 1]);
        assert!(Partition::new(vec![1, 2]).is_err());
        let lam = Partition::new(vec![3, 2, 1]).unwrap();
        let subs = lam.subpartitions();
        assert_eq!(subs.len(), 14);
        assert!(subs.iter().all(|m| lam.contains(m)));
        assert_eq!(Partition::empty().subpartitions(), vec![Partition::empty()]);
    }

    #[test]
    fn parse_vectors() {
        assert_eq!("0, 1,-2".parse::<IntVector>().unwrap(), IntVector(vec![0, 1, -2]));
        assert!("1,,2".parse::<IntVector>().is_err());
        assert!("".parse::<IntVector>().is_err());
    }
}
