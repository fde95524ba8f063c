//! Tesler matrices with prescribed hook sums, the Tesler-matrix formula for
//! `F`, and the `t = 1` subdiagram generating function.

use std::collections::HashMap;

use crate::algebra::{coeff_a, coeff_b, LaurentPoly, QPoly};
use crate::error::{domain, Result};
use crate::tableaux::Partition;

/// Upper-triangular nonnegative matrix whose hook sums are `a`.
/// Indices are 0-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TeslerMatrix {
    a: Vec<i64>,
    m: Vec<Vec<i64>>,
}

impl TeslerMatrix {
    /// Check the hook equations and nonnegativity. Entries below the
    /// diagonal must be zero.
    pub fn new(a: Vec<i64>, m: Vec<Vec<i64>>) -> Result<Self> {
        let n = a.len();
        if m.len() != n || m.iter().any(|r| r.len() != n) {
            return domain(format!("matrix must be {n} x {n}"));
        }
        for i in 0..n {
            for (j, &x) in m[i].iter().enumerate() {
                if (j < i && x != 0) || x < 0 {
                    return domain(format!("bad entry m[{i}][{j}] = {x}"));
                }
            }
            let hook = m[i][i] + (0..i).map(|j| m[j][i]).sum::<i64>() - (i + 1..n).map(|j| m[i][j]).sum::<i64>();
            if hook != a[i] {
                return domain(format!("hook sum {i} is {hook}, expected {}", a[i]));
            }
        }
        Ok(TeslerMatrix { a, m })
    }

    pub fn n(&self) -> usize {
        self.a.len()
    }

    pub fn hook_vector(&self) -> &[i64] {
        &self.a
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.m[i][j]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.m
    }

    /// Off-diagonal entries in row-major order.
    pub fn off_diagonal(&self) -> Vec<i64> {
        let n = self.n();
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .map(|(i, j)| self.m[i][j])
            .collect()
    }

    /// Zero beyond the first superdiagonal.
    pub fn is_two_diagonal(&self) -> bool {
        let n = self.n();
        (0..n).all(|i| (i + 2..n).all(|j| self.m[i][j] == 0))
    }

    /// `prod_i B(m_{i,i+1}) prod_{j>i+1} A(m_{ij})`.
    pub fn weight(&self) -> LaurentPoly {
        let n = self.n();
        let mut w = LaurentPoly::one();
        for i in 0..n {
            for j in i + 1..n {
                let x = self.m[i][j];
                let f = if j == i + 1 { coeff_b(x) } else { coeff_a(x) };
                w = &w * &f.expect("entries are nonnegative");
            }
        }
        w
    }
}

fn check_hooks(a: &[i64]) -> Result<()> {
    if a.is_empty() {
        return domain("hook vector must be nonempty");
    }
    if let Some(x) = a.iter().find(|&&x| x < 0) {
        return domain(format!("hook sums must be nonnegative, got {x}"));
    }
    Ok(())
}

fn suffix_sums(a: &[i64]) -> Vec<i64> {
    let mut s = vec![0; a.len() + 1];
    for i in (0..a.len()).rev() {
        s[i] = s[i + 1] + a[i];
    }
    s
}

/// Crossing bound: the inflow `next[k..]` owed to rows `base+k..` may not
/// exceed `a_{base+k} + ... + a_n`.
fn feasible(next: &[i64], suffix: &[i64], base: usize) -> bool {
    let mut acc = 0;
    for k in (0..next.len()).rev() {
        acc += next[k];
        if acc > suffix[base + k] {
            return false;
        }
    }
    true
}

/// Enumerates the off-diagonal part of row `i` given the inflow still owed to
/// rows `i..n`. `emit` receives the row entries `m_{i,i+1..n}` and the updated
/// inflow vector for rows `i+1..n`.
fn for_each_row(i: usize, a: &[i64], suffix: &[i64], inflow: &[i64], emit: &mut dyn FnMut(&[i64], &[i64])) {
    let n = a.len();
    let need = inflow[0] - a[i];
    let mut row = vec![0; n - i - 1];
    let mut next = inflow[1..].to_vec();

    fn go(
        pos: usize,
        need: i64,
        i: usize,
        suffix: &[i64],
        row: &mut Vec<i64>,
        next: &mut Vec<i64>,
        emit: &mut dyn FnMut(&[i64], &[i64]),
    ) {
        if pos == row.len() {
            if need <= 0 {
                emit(row, next);
            }
            return;
        }
        let cap = suffix[i + 1 + pos];
        for v in 0..=cap {
            row[pos] = v;
            next[pos] += v;
            if feasible(next, suffix, i + 1) {
                go(pos + 1, need - v, i, suffix, row, next, emit);
                next[pos] -= v;
            } else {
                next[pos] -= v;
                break;
            }
        }
        row[pos] = 0;
    }

    if row.is_empty() {
        if need <= 0 {
            emit(&row, &next);
        }
        return;
    }
    go(0, need, i, suffix, &mut row, &mut next, emit);
}

/// All Tesler matrices with hook sums `a`, in lexicographic order of the
/// row-major off-diagonal vector.
pub fn enumerate_tesler(a: &[i64]) -> Result<Vec<TeslerMatrix>> {
    check_hooks(a)?;
    let n = a.len();
    let suffix = suffix_sums(a);
    let mut out = Vec::new();

    fn go(i: usize, a: &[i64], suffix: &[i64], inflow: &[i64], m: &mut Vec<Vec<i64>>, out: &mut Vec<TeslerMatrix>) {
        let n = a.len();
        for_each_row(i, a, suffix, inflow, &mut |row, next| {
            m[i][i] = a[i] + row.iter().sum::<i64>() - inflow[0];
            m[i][i + 1..].copy_from_slice(row);
            if i + 1 == n {
                out.push(TeslerMatrix {
                    a: a.to_vec(),
                    m: m.clone(),
                });
            } else {
                go(i + 1, a, suffix, next, m, out);
            }
        });
        m[i].iter_mut().for_each(|x| *x = 0);
    }

    let mut m = vec![vec![0; n]; n];
    go(0, a, &suffix, &vec![0; n], &mut m, &mut out);
    Ok(out)
}

struct WeightTable {
    a: Vec<LaurentPoly>,
    b: Vec<LaurentPoly>,
}

impl WeightTable {
    fn new(max: i64) -> Self {
        WeightTable {
            a: (0..=max).map(|m| coeff_a(m).expect("m >= 0")).collect(),
            b: (0..=max).map(|m| coeff_b(m).expect("m >= 0")).collect(),
        }
    }
}

/// Coefficient ring for the Tesler dynamic program.
trait Ring: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    /// `self += w * r`; `None` on overflow.
    fn add_mul(&mut self, w: &Self, r: &Self) -> Option<()>;
}

impl Ring for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn one() -> Self {
        LaurentPoly::one()
    }
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
    fn add_mul(&mut self, w: &Self, r: &Self) -> Option<()> {
        *self += &(w * r);
        Some(())
    }
}

/// Dense polynomial in `q, t` with nonnegative exponents and `i128`
/// coefficients, stored row-major by `q` exponent.
#[derive(Clone, Debug)]
struct DensePoly {
    dq: usize,
    dt: usize,
    c: Vec<i128>,
}

impl DensePoly {
    fn from_poly(p: &LaurentPoly) -> Option<Self> {
        let mut dq = 0;
        let mut dt = 0;
        for (e, _) in p.terms() {
            if e.q_exp < 0 || e.t_exp < 0 {
                return None;
            }
            dq = dq.max(e.q_exp as usize + 1);
            dt = dt.max(e.t_exp as usize + 1);
        }
        let mut c = vec![0; dq * dt];
        for (e, v) in p.terms() {
            c[e.q_exp as usize * dt + e.t_exp as usize] = i128::try_from(v).ok()?;
        }
        Some(DensePoly { dq, dt, c })
    }

    fn to_poly(&self) -> LaurentPoly {
        let mut p = LaurentPoly::zero();
        for i in 0..self.dq {
            for j in 0..self.dt {
                let v = self.c[i * self.dt + j];
                if v != 0 {
                    p.add_term(crate::algebra::ExponentPair::new(i as i64, j as i64), v.into());
                }
            }
        }
        p
    }

    fn grow(&mut self, dq: usize, dt: usize) {
        if dq <= self.dq && dt <= self.dt {
            return;
        }
        let (nq, nt) = (dq.max(self.dq), dt.max(self.dt));
        let mut c = vec![0; nq * nt];
        for i in 0..self.dq {
            c[i * nt..i * nt + self.dt].copy_from_slice(&self.c[i * self.dt..(i + 1) * self.dt]);
        }
        *self = DensePoly { dq: nq, dt: nt, c };
    }
}

impl Ring for DensePoly {
    fn zero() -> Self {
        DensePoly {
            dq: 0,
            dt: 0,
            c: Vec::new(),
        }
    }
    fn one() -> Self {
        DensePoly {
            dq: 1,
            dt: 1,
            c: vec![1],
        }
    }
    fn is_zero(&self) -> bool {
        self.c.iter().all(|&x| x == 0)
    }
    fn add_mul(&mut self, w: &Self, r: &Self) -> Option<()> {
        if w.c.is_empty() || r.c.is_empty() {
            return Some(());
        }
        self.grow(w.dq + r.dq - 1, w.dt + r.dt - 1);
        let dt = self.dt;
        for i1 in 0..w.dq {
            for j1 in 0..w.dt {
                let x = w.c[i1 * w.dt + j1];
                if x == 0 {
                    continue;
                }
                for i2 in 0..r.dq {
                    let base = (i1 + i2) * dt + j1;
                    let row = &r.c[i2 * r.dt..(i2 + 1) * r.dt];
                    for (j2, &y) in row.iter().enumerate() {
                        if y != 0 {
                            let slot = &mut self.c[base + j2];
                            *slot = slot.checked_add(x.checked_mul(y)?)?;
                        }
                    }
                }
            }
        }
        Some(())
    }
}

struct TeslerDp<'a, R> {
    a: &'a [i64],
    suffix: &'a [i64],
    wa: Vec<R>,
    wb: Vec<R>,
    memo: HashMap<Vec<i64>, R>,
}

impl<R: Ring> TeslerDp<'_, R> {
    /// Sum over completions of row `i` from column `i+1+pos` onwards, where
    /// `need` is how much the rest of the row must still contribute.
    fn go(&mut self, i: usize, pos: usize, need: i64, next: &mut Vec<i64>) -> Option<R> {
        let n = self.a.len();
        if pos == next.len() {
            if need > 0 {
                return Some(R::zero());
            }
            if i + 1 == n {
                return Some(R::one());
            }
            let inflow = next[0];
            let mut rest = next[1..].to_vec();
            return self.go(i + 1, 0, inflow - self.a[i + 1], &mut rest);
        }
        let mut key = Vec::with_capacity(next.len() + 3);
        key.extend([i as i64, pos as i64, need.max(0)]);
        key.extend_from_slice(next);
        if let Some(v) = self.memo.get(&key) {
            return Some(v.clone());
        }
        let mut total = R::zero();
        for v in 0..=self.suffix[i + 1 + pos] {
            next[pos] += v;
            let ok = feasible(next, self.suffix, i + 1);
            if ok {
                let rest = self.go(i, pos + 1, need - v, next)?;
                if !rest.is_zero() {
                    let w = if pos == 0 {
                        &self.wb[v as usize]
                    } else {
                        &self.wa[v as usize]
                    };
                    total.add_mul(w, &rest)?;
                }
            }
            next[pos] -= v;
            if !ok {
                break;
            }
        }
        self.memo.insert(key, total.clone());
        Some(total)
    }

    fn run(a: &[i64], suffix: &[i64], wa: Vec<R>, wb: Vec<R>) -> Option<R> {
        if a.len() == 1 {
            return Some(R::one());
        }
        let mut dp = TeslerDp {
            a,
            suffix,
            wa,
            wb,
            memo: HashMap::new(),
        };
        dp.go(0, 0, -a[0], &mut vec![0; a.len() - 1])
    }
}

/// `F(a_2, ..., a_n)` as the weighted sum over Tesler matrices with hook sums
/// `(a_1, ..., a_n)`. Entries are summed out one at a time in row-major order,
/// memoized on the position, the diagonal deficit still to be covered and the
/// inflow owed to the later rows. The sum runs in machine integers and is
/// redone with big integers if it overflows.
pub fn f_tesler(a: &[i64]) -> Result<LaurentPoly> {
    check_hooks(a)?;
    let suffix = suffix_sums(a);
    let table = WeightTable::new(suffix[0]);
    let dense = |v: &[LaurentPoly]| v.iter().map(DensePoly::from_poly).collect::<Option<Vec<_>>>();
    if let (Some(wa), Some(wb)) = (dense(&table.a), dense(&table.b)) {
        if let Some(r) = TeslerDp::run(a, &suffix, wa, wb) {
            return Ok(r.to_poly());
        }
    }
    Ok(TeslerDp::run(a, &suffix, table.a, table.b).expect("big integers do not overflow"))
}

/// Direct sum of matrix weights over [`enumerate_tesler`].
pub fn f_tesler_bruteforce(a: &[i64]) -> Result<LaurentPoly> {
    Ok(enumerate_tesler(a)?.iter().map(TeslerMatrix::weight).sum())
}

/// Two-diagonal Tesler matrices paired with the subdiagram
/// `mu_{i-1} = m_ii + ... + m_nn` of `lambda(a_2, ..., a_n)`.
pub fn two_diagonal_subdiagrams(a: &[i64]) -> Result<Vec<(TeslerMatrix, Partition)>> {
    let n = a.len();
    enumerate_tesler(a)?
        .into_iter()
        .filter(TeslerMatrix::is_two_diagonal)
        .map(|m| {
            let parts: Vec<i64> = (1..n).map(|i| (i..n).map(|k| m.get(k, k)).sum()).collect();
            Partition::new(parts).map(|mu| (m, mu))
        })
        .collect()
}

/// `sum_{mu <= lambda} q^{|lambda| - |mu|}`.
pub fn subdiagram_area_gf(lambda: &Partition) -> QPoly {
    let size = lambda.size();
    QPoly::from_terms(lambda.subpartitions().iter().map(|mu| (size - mu.size(), 1)))
}
