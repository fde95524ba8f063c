//! Area-range preserving bijections between tails, pseudoheads, heads and
//! quasiheads. The raw maps act on all of `Z^2`; the typed conversions
//! restrict them to the index sets.

use crate::closed_forms::{ceil_div, ABCParams};

use super::index::{eps, eps_tail, Head, Pseudohead, Quasihead, Tail};

/// `Psi(E,F) = (E + F - epsilon^{EF}, F + epsilon^{EF})`.
pub fn psi(p: &ABCParams, e: i64, f: i64) -> (i64, i64) {
    let ep = eps_tail(p, e, f);
    (e + f - ep, f + ep)
}

/// `Psi^{-1}(i,j) = (i - j + 2 epsilon_{ij}, j - epsilon_{ij})`.
pub fn psi_inv(p: &ABCParams, i: i64, j: i64) -> (i64, i64) {
    let ep = eps(p, i, j);
    (i - j + 2 * ep, j - ep)
}

/// `Theta(i,j) = (i + j - delta_{ij}, i + epsilon_{ij})`.
pub fn theta(p: &ABCParams, i: i64, j: i64) -> (i64, i64) {
    let ep = eps(p, i, j);
    let de = ceil_div(i + ep - p.a(), 2);
    (i + j - de, i + ep)
}

/// `Theta^{-1}(k,l) = (l - epsilon_k^l, k - l + epsilon_k^l + delta_k^l)` with
/// `delta_k^l = ceil((l - a)/2)` and `epsilon_k^l = max(k + delta_k^l - b - c, 0)`.
pub fn theta_inv(p: &ABCParams, k: i64, l: i64) -> (i64, i64) {
    let de = ceil_div(l - p.a(), 2);
    let ep = (k + de - p.b() - p.c()).max(0);
    (l - ep, k - l + ep + de)
}

/// `omega_{ij} = max(0, ceil((2i + j - L)/2))`.
fn omega_offset(p: &ABCParams, i: i64, j: i64) -> i64 {
    ceil_div(2 * i + j - p.big_l(), 2).max(0)
}

/// `Phi(i,j) = (i + omega_{ij}, j - 2 omega_{ij})`.
pub fn phi(p: &ABCParams, i: i64, j: i64) -> (i64, i64) {
    let w = omega_offset(p, i, j);
    (i + w, j - 2 * w)
}

/// `Phi^{-1}(s,t) = (s - omega_{st}, t + 2 omega_{st})`.
pub fn phi_inv(p: &ABCParams, s: i64, t: i64) -> (i64, i64) {
    let w = omega_offset(p, s, t);
    (s - w, t + 2 * w)
}

/// `Omega(k,l) = (l, k - l)`.
pub fn omega_map(k: i64, l: i64) -> (i64, i64) {
    (l, k - l)
}

/// `Omega^{-1}(s,t) = (s + t, s)`.
pub fn omega_inv(s: i64, t: i64) -> (i64, i64) {
    (s + t, s)
}

impl Tail {
    pub fn to_pseudohead(&self) -> Pseudohead {
        let (i, j) = psi(&self.params, self.e, self.f);
        Pseudohead {
            params: self.params,
            i,
            j,
        }
    }
}

impl Pseudohead {
    pub fn to_tail(&self) -> Tail {
        let (e, f) = psi_inv(&self.params, self.i, self.j);
        Tail {
            params: self.params,
            e,
            f,
        }
    }

    /// Identity on negative pseudoheads, `Theta` on positive ones.
    pub fn to_head(&self) -> Head {
        if self.is_negative() {
            Head::Negative(*self)
        } else {
            let (k, l) = theta(&self.params, self.i, self.j);
            Head::Positive {
                params: self.params,
                k,
                l,
            }
        }
    }
}

impl Head {
    pub fn to_pseudohead(&self) -> Pseudohead {
        match *self {
            Head::Negative(ph) => ph,
            Head::Positive { params, k, l } => {
                let (i, j) = theta_inv(&params, k, l);
                Pseudohead { params, i, j }
            }
        }
    }

    /// Identity when `i + j <= b + c`, `Phi` on the remaining negative heads,
    /// and `Omega` on positive heads.
    pub fn to_quasihead(&self) -> Quasihead {
        match *self {
            Head::Negative(ph) => {
                let p = ph.params;
                let (s, t) = if ph.i + ph.j <= p.b() + p.c() {
                    (ph.i, ph.j)
                } else {
                    phi(&p, ph.i, ph.j)
                };
                Quasihead { params: p, s, t }
            }
            Head::Positive { params, k, l } => {
                let (s, t) = omega_map(k, l);
                Quasihead { params, s, t }
            }
        }
    }
}

impl Quasihead {
    pub fn to_head(&self) -> Head {
        let p = self.params;
        let (s, t) = (self.s, self.t);
        let bc = p.b() + p.c();
        if s + t < bc && s > p.a() {
            let (k, l) = omega_inv(s, t);
            Head::Positive { params: p, k, l }
        } else if s + t <= bc && s <= p.a() {
            Head::Negative(Pseudohead { params: p, i: s, j: t })
        } else {
            let (i, j) = phi_inv(&p, s, t);
            Head::Negative(Pseudohead { params: p, i, j })
        }
    }
}
