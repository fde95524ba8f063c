//! Partitions inside `lambda(a,b,c)` and the four index families for chains.

use std::fmt;

use crate::closed_forms::{ceil_div, ABCParams};
use crate::error::{domain, Result};

/// A partition `(x, y, z)` with at most three parts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition3 {
    pub x: i64,
    pub y: i64,
    pub z: i64,
}

impl Partition3 {
    pub fn new(x: i64, y: i64, z: i64) -> Result<Self> {
        if !(x >= y && y >= z && z >= 0) {
            return domain(format!("({x},{y},{z}) is not a partition"));
        }
        Ok(Partition3 { x, y, z })
    }

    pub fn size(&self) -> i64 {
        self.x + self.y + self.z
    }

    /// `x <= a+b+c`, `y <= b+c`, `z <= c`.
    pub fn fits(&self, p: &ABCParams) -> bool {
        self.x <= p.big_l() && self.y <= p.b() + p.c() && self.z <= p.c()
    }

    /// `|lambda(a,b,c)| - |lambda|`.
    pub fn area(&self, p: &ABCParams) -> i64 {
        p.big_a() - self.size()
    }

    pub(crate) fn checked(&self, p: &ABCParams) -> Result<()> {
        if self.x >= self.y && self.y >= self.z && self.z >= 0 && self.fits(p) {
            Ok(())
        } else {
            domain(format!("{self} is not contained in lambda{p}"))
        }
    }
}

impl fmt::Display for Partition3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.x, self.y, self.z)
    }
}

/// All subpartitions of `lambda(a,b,c)` in lexicographic order.
pub fn subpartitions(p: &ABCParams) -> Vec<Partition3> {
    let mut out = Vec::new();
    for x in 0..=p.big_l() {
        for y in 0..=x.min(p.b() + p.c()) {
            for z in 0..=y.min(p.c()) {
                out.push(Partition3 { x, y, z });
            }
        }
    }
    out
}

/// The closed integer interval `[lo, hi]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AreaRange {
    pub lo: i64,
    pub hi: i64,
}

impl AreaRange {
    pub fn len(&self) -> usize {
        (self.hi - self.lo + 1).max(0) as usize
    }

    pub fn is_empty(&self) -> bool {
        self.hi < self.lo
    }

    pub fn contains(&self, m: i64) -> bool {
        self.lo <= m && m <= self.hi
    }
}

impl fmt::Display for AreaRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.lo, self.hi)
    }
}

/// `epsilon_{ij} = max(0, i + j - (b + c))`.
pub fn eps(p: &ABCParams, i: i64, j: i64) -> i64 {
    (i + j - p.b() - p.c()).max(0)
}

/// `epsilon^{EF} = max(0, E + 2F - b - c)`.
pub fn eps_tail(p: &ABCParams, e: i64, f: i64) -> i64 {
    (e + 2 * f - p.b() - p.c()).max(0)
}

/// `delta_{ij} = ceil((i + epsilon_{ij} - a) / 2)`.
pub fn delta(p: &ABCParams, i: i64, j: i64) -> i64 {
    ceil_div(i + eps(p, i, j) - p.a(), 2)
}

/// `delta^{EF} = ceil((E + F - a) / 2)`.
pub fn delta_tail(p: &ABCParams, e: i64, f: i64) -> i64 {
    ceil_div(e + f - p.a(), 2)
}

/// `m_{ct} = (c - t) mod 2`.
pub fn parity_offset(c: i64, t: i64) -> i64 {
    (c - t).rem_euclid(2)
}

/// Tail `T^{EF} = (L - E, b + c - F, c)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Tail {
    pub params: ABCParams,
    pub e: i64,
    pub f: i64,
}

impl Tail {
    pub fn new(params: ABCParams, e: i64, f: i64) -> Result<Self> {
        let t = Tail { params, e, f };
        if t.is_valid() {
            Ok(t)
        } else {
            domain(format!("(E,F) = ({e},{f}) is not a tail for {params}"))
        }
    }

    pub fn eps(&self) -> i64 {
        eps_tail(&self.params, self.e, self.f)
    }

    pub fn delta(&self) -> i64 {
        delta_tail(&self.params, self.e, self.f)
    }

    pub fn is_valid(&self) -> bool {
        let p = &self.params;
        let (e, f, ep) = (self.e, self.f, self.eps());
        0 <= f
            && f <= p.c() - ep
            && 2 * ep <= e
            && e <= f + p.a()
            && 4 * e + 5 * f - 3 * ep <= p.a() + 3 * p.b() + 3 * p.c()
    }

    pub fn partition(&self) -> Partition3 {
        let p = &self.params;
        Partition3 {
            x: p.big_l() - self.e,
            y: p.b() + p.c() - self.f,
            z: p.c(),
        }
    }

    pub fn area_range(&self) -> AreaRange {
        let (e, f) = (self.e, self.f);
        AreaRange {
            lo: e + f,
            hi: self.params.big_a() - 2 * e - 3 * f + self.eps().max(self.delta()),
        }
    }
}

/// Pseudohead `P_{ij} = (i, i, j)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Pseudohead {
    pub params: ABCParams,
    pub i: i64,
    pub j: i64,
}

impl Pseudohead {
    pub fn new(params: ABCParams, i: i64, j: i64) -> Result<Self> {
        let ph = Pseudohead { params, i, j };
        if ph.is_valid() {
            Ok(ph)
        } else {
            domain(format!("(i,j) = ({i},{j}) is not a pseudohead for {params}"))
        }
    }

    pub fn eps(&self) -> i64 {
        eps(&self.params, self.i, self.j)
    }

    pub fn delta(&self) -> i64 {
        delta(&self.params, self.i, self.j)
    }

    pub fn is_valid(&self) -> bool {
        let p = &self.params;
        let (i, j) = (self.i, self.j);
        0 <= j
            && j <= p.c()
            && j <= i
            && i <= p.b() + p.c()
            && 4 * i + j <= p.a() + 3 * p.b() + 3 * p.c()
            && i - 2 * j <= p.a()
    }

    /// In `P^-`, i.e. `delta_{ij} <= epsilon_{ij}`.
    pub fn is_negative(&self) -> bool {
        self.delta() <= self.eps()
    }

    pub fn partition(&self) -> Partition3 {
        Partition3 {
            x: self.i,
            y: self.i,
            z: self.j,
        }
    }

    pub fn area_range(&self) -> AreaRange {
        let (i, j) = (self.i, self.j);
        AreaRange {
            lo: i + self.eps(),
            hi: self.params.big_a() - 2 * i - j + (self.delta() - self.eps()).max(0),
        }
    }
}

/// Head: a negative pseudohead, or a positive head `H_k^l = (k, l, 0)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Head {
    Negative(Pseudohead),
    Positive { params: ABCParams, k: i64, l: i64 },
}

impl Head {
    pub fn positive(params: ABCParams, k: i64, l: i64) -> Result<Self> {
        if params.a() < l && l <= k && k < params.b() + params.c() {
            Ok(Head::Positive { params, k, l })
        } else {
            domain(format!("(k,l) = ({k},{l}) is not a positive head for {params}"))
        }
    }

    pub fn params(&self) -> ABCParams {
        match self {
            Head::Negative(ph) => ph.params,
            Head::Positive { params, .. } => *params,
        }
    }

    pub fn is_positive(&self) -> bool {
        matches!(self, Head::Positive { .. })
    }

    pub fn partition(&self) -> Partition3 {
        match *self {
            Head::Negative(ph) => ph.partition(),
            Head::Positive { k, l, .. } => Partition3 { x: k, y: l, z: 0 },
        }
    }

    pub fn area_range(&self) -> AreaRange {
        match *self {
            Head::Negative(ph) => ph.area_range(),
            Head::Positive { params, k, l } => AreaRange {
                lo: l,
                hi: params.big_a() - k - l,
            },
        }
    }
}

/// Quasihead `Q_{st} = (s, s, t)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Quasihead {
    pub params: ABCParams,
    pub s: i64,
    pub t: i64,
}

impl Quasihead {
    pub fn new(params: ABCParams, s: i64, t: i64) -> Result<Self> {
        let q = Quasihead { params, s, t };
        if q.is_valid() {
            Ok(q)
        } else {
            domain(format!("(s,t) = ({s},{t}) is not a quasihead for {params}"))
        }
    }

    pub fn eps(&self) -> i64 {
        eps(&self.params, self.s, self.t)
    }

    pub fn is_valid(&self) -> bool {
        quasihead_conditions(self.params.a(), self.params.b(), self.params.c(), self.s, self.t)
    }

    pub fn partition(&self) -> Partition3 {
        Partition3 {
            x: self.s,
            y: self.s,
            z: self.t,
        }
    }

    pub fn area_range(&self) -> AreaRange {
        AreaRange {
            lo: self.s + self.eps(),
            hi: self.params.big_a() - 2 * self.s - self.t,
        }
    }
}

/// Conditions on `(s, t)` defining the quasihead set, for arbitrary integers
/// `a, b, c`.
pub fn quasihead_conditions(a: i64, b: i64, c: i64, s: i64, t: i64) -> bool {
    0 <= t && t <= c && t <= s && s <= b + c && 2 * s + 2 * t <= a + b + 2 * c - parity_offset(c, t)
}

/// Tails ordered by `(F, E)`.
pub fn enumerate_tails(p: &ABCParams) -> Vec<Tail> {
    let mut out = Vec::new();
    for f in 0..=p.c() {
        for e in 0..=f + p.a() {
            let t = Tail { params: *p, e, f };
            if t.is_valid() {
                out.push(t);
            }
        }
    }
    out
}

/// Pseudoheads ordered lexicographically by `(i, j)`.
pub fn enumerate_pseudoheads(p: &ABCParams) -> Vec<Pseudohead> {
    let mut out = Vec::new();
    for i in 0..=p.b() + p.c() {
        for j in 0..=i.min(p.c()) {
            let ph = Pseudohead { params: *p, i, j };
            if ph.is_valid() {
                out.push(ph);
            }
        }
    }
    out
}

/// Negative pseudoheads in `(i, j)` order, then positive heads in `(k, l)` order.
pub fn enumerate_heads(p: &ABCParams) -> Vec<Head> {
    let mut out: Vec<Head> = enumerate_pseudoheads(p)
        .into_iter()
        .filter(Pseudohead::is_negative)
        .map(Head::Negative)
        .collect();
    for k in 0..p.b() + p.c() {
        for l in p.a() + 1..=k {
            out.push(Head::Positive { params: *p, k, l });
        }
    }
    out
}

/// Quasiheads ordered lexicographically by `(s, t)`.
pub fn enumerate_quasiheads(p: &ABCParams) -> Vec<Quasihead> {
    let mut out = Vec::new();
    for s in 0..=p.b() + p.c() {
        for t in 0..=s.min(p.c()) {
            let q = Quasihead { params: *p, s, t };
            if q.is_valid() {
                out.push(q);
            }
        }
    }
    out
}
