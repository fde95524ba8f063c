//! Strings, appendages and chains, and the partition of the subpartition
//! lattice of `lambda(a,b,c)` into chains.

use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;

use crate::closed_forms::{ceil_div, ABCParams};
use crate::error::{domain, QtcError, Result};

use super::index::{enumerate_tails, eps, AreaRange, Head, Partition3, Pseudohead, Quasihead, Tail};
use super::maps::{psi_inv, theta_inv};

/// `S(P_ij)`, listed from the pseudohead up to the tail (decreasing area).
pub fn string_of(ph: &Pseudohead) -> Vec<Partition3> {
    let tail = ph.to_tail().partition();
    let (i, j) = (ph.i, ph.j);
    let (p, q, c) = (tail.x, tail.y, tail.z);
    let mut out = Vec::new();
    for x in i..p {
        out.push(Partition3 { x, y: i, z: j });
    }
    for y in i..q {
        out.push(Partition3 { x: p, y, z: j });
    }
    for z in j..=c {
        out.push(Partition3 { x: p, y: q, z });
    }
    out
}

/// `A(H_k^l) = {(k, l, z) : z < min(b + c - k, ceil((l - a)/2))}`, listed by
/// increasing `z`.
pub fn appendage_of(h: &Head) -> Result<Vec<Partition3>> {
    match *h {
        Head::Negative(_) => domain("appendages are only defined for positive heads"),
        Head::Positive { params, k, l } => {
            let bound = (params.b() + params.c() - k).min(ceil_div(l - params.a(), 2));
            Ok((0..bound).map(|z| Partition3 { x: k, y: l, z }).collect())
        }
    }
}

/// One chain with all four of its indices. Members are sorted by increasing
/// area, so the tail comes first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainRecord {
    pub tail: Tail,
    pub pseudohead: Pseudohead,
    pub head: Head,
    pub quasihead: Quasihead,
    pub members: Vec<Partition3>,
    pub area_range: AreaRange,
}

impl ChainRecord {
    pub fn params(&self) -> ABCParams {
        self.tail.params
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Role of a member within the chain, for tabular output.
    pub fn role_of(&self, lam: &Partition3) -> &'static str {
        let in_string = string_of(&self.pseudohead).contains(lam);
        if *lam == self.tail.partition() {
            "tail"
        } else if *lam == self.head.partition() {
            "head"
        } else if *lam == self.pseudohead.partition() {
            "pseudohead"
        } else if in_string {
            "string"
        } else {
            "appendage"
        }
    }
}

/// `C(T^{EF})`: the string of `Psi(E,F)`, plus the appendage of its head when
/// the pseudohead is positive.
pub fn chain_of(tail: &Tail) -> ChainRecord {
    let pseudohead = tail.to_pseudohead();
    let head = pseudohead.to_head();
    let mut members = string_of(&pseudohead);
    if let Ok(app) = appendage_of(&head) {
        members.extend(app);
    }
    let p = tail.params;
    members.sort_by_key(|m| m.area(&p));
    ChainRecord {
        tail: *tail,
        pseudohead,
        head,
        quasihead: head.to_quasihead(),
        members,
        area_range: tail.area_range(),
    }
}

/// The case split that determines chain membership and the statistic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CaseLabel {
    OneA,
    OneBI,
    OneBII,
    Two,
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CaseLabel::OneA => "1a",
            CaseLabel::OneBI => "1bi",
            CaseLabel::OneBII => "1bii",
            CaseLabel::Two => "2",
        })
    }
}

/// Classify `lam = (x,y,z)`: Case 2 iff `z < min(b+c-x, ceil((y-a)/2))`,
/// otherwise Case 1 split by `x + y - z + 2 epsilon_{yz}` against `L` and
/// `y + z` against `b + c`.
pub fn classify(p: &ABCParams, lam: &Partition3) -> Result<CaseLabel> {
    lam.checked(p)?;
    let Partition3 { x, y, z } = *lam;
    let bc = p.b() + p.c();
    if z < (bc - x).min(ceil_div(y - p.a(), 2)) {
        return Ok(CaseLabel::Two);
    }
    let big_e = y - z + 2 * eps(p, y, z);
    Ok(if x + big_e < p.big_l() {
        CaseLabel::OneA
    } else if y + z < bc {
        CaseLabel::OneBI
    } else {
        CaseLabel::OneBII
    })
}

/// The tail of the chain containing `lam`, read off from its case.
pub fn predicted_tail(p: &ABCParams, lam: &Partition3) -> Result<Tail> {
    let Partition3 { x, y, z } = *lam;
    let (e, f) = match classify(p, lam)? {
        CaseLabel::OneA => psi_inv(p, y, z),
        CaseLabel::OneBI => psi_inv(p, p.big_l() + z - x, z),
        CaseLabel::OneBII => (p.big_l() - x, p.b() + p.c() - y),
        CaseLabel::Two => {
            let (i, j) = theta_inv(p, x, y);
            psi_inv(p, i, j)
        }
    };
    Tail::new(*p, e, f)
}

/// The full chain decomposition of the subpartitions of `lambda(a,b,c)`,
/// with chains in tail order `(F, E)`.
#[derive(Clone, Debug)]
pub struct ChainDecomposition {
    params: ABCParams,
    chains: Vec<ChainRecord>,
    owner: HashMap<Partition3, usize>,
}

impl ChainDecomposition {
    /// Fails if two chains share a member.
    pub fn new(params: ABCParams) -> Result<Self> {
        let chains: Vec<ChainRecord> = enumerate_tails(&params).par_iter().map(chain_of).collect();
        let mut owner = HashMap::new();
        for (idx, ch) in chains.iter().enumerate() {
            for m in &ch.members {
                if let Some(prev) = owner.insert(*m, idx) {
                    return Err(QtcError::Domain(format!(
                        "{m} lies in chains {prev} and {idx} for {params}"
                    )));
                }
            }
        }
        Ok(ChainDecomposition { params, chains, owner })
    }

    pub fn params(&self) -> ABCParams {
        self.params
    }

    pub fn chains(&self) -> &[ChainRecord] {
        &self.chains
    }

    pub fn num_members(&self) -> usize {
        self.owner.len()
    }

    /// Index of the chain containing `lam`.
    pub fn chain_index(&self, lam: &Partition3) -> Result<usize> {
        lam.checked(&self.params)?;
        self.owner
            .get(lam)
            .copied()
            .ok_or_else(|| QtcError::Domain(format!("{lam} lies in no chain for {}", self.params)))
    }

    pub fn locate(&self, lam: &Partition3) -> Result<&ChainRecord> {
        Ok(&self.chains[self.chain_index(lam)?])
    }
}
