use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Univariate Laurent polynomial in `q`, the target of the `t = 1` and
/// `t = q^-1` specializations.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QPoly {
    coeffs: BTreeMap<i64, BigInt>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly::default()
    }

    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (i64, C)>) -> Self {
        let mut p = QPoly::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    pub fn add_term(&mut self, e: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(e).or_default();
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&e);
        }
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        self.coeffs.get(&e).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn eval_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    /// Coefficients of the exponents with the given parity, from the lowest to
    /// the highest such exponent in the support, zeros included.
    pub fn parity_sequence(&self, odd: bool) -> Vec<BigInt> {
        let exps: Vec<i64> = self
            .coeffs
            .keys()
            .copied()
            .filter(|e| (e.rem_euclid(2) == 1) == odd)
            .collect();
        let (Some(&lo), Some(&hi)) = (exps.first(), exps.last()) else {
            return Vec::new();
        };
        (lo..=hi).step_by(2).map(|e| self.coeff(e)).collect()
    }
}

/// Weakly increasing, then weakly decreasing.
pub fn is_unimodal(seq: &[BigInt]) -> bool {
    let mut i = 1;
    while i < seq.len() && seq[i] >= seq[i - 1] {
        i += 1;
    }
    while i < seq.len() && seq[i] <= seq[i - 1] {
        i += 1;
    }
    i >= seq.len()
}

/// True iff the coefficients in even degrees form a unimodal sequence and
/// likewise for odd degrees.
pub fn unimodality_check(p: &QPoly) -> bool {
    is_unimodal(&p.parity_sequence(false)) && is_unimodal(&p.parity_sequence(true))
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.coeffs.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let var = match *e {
                0 => String::new(),
                1 => "q".to_string(),
                e => format!("q^{e}"),
            };
            match (var.is_empty(), mag.is_one()) {
                (true, _) => write!(f, "{mag}")?,
                (false, true) => write!(f, "{var}")?,
                (false, false) => write!(f, "{mag}*{var}")?,
            }
        }
        Ok(())
    }
}
