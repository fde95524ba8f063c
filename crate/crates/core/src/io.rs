//! Rendering polynomials as text, JSON, LaTeX and CSV, and parsing the JSON
//! form back.
//!
//! Terms are always emitted with the `q` exponent descending and then the `t`
//! exponent ascending. JSON coefficients are decimal strings.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::algebra::{ExponentPair, LaurentPoly};
use crate::error::{QtcError, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub q: i64,
    pub t: i64,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyRecord {
    pub params: Vec<i64>,
    pub terms: Vec<TermRecord>,
}

impl PolyRecord {
    pub fn new(params: &[i64], p: &LaurentPoly) -> Self {
        PolyRecord {
            params: params.to_vec(),
            terms: p
                .terms_display_order()
                .into_iter()
                .map(|(e, c)| TermRecord {
                    q: e.q_exp,
                    t: e.t_exp,
                    coeff: c.to_string(),
                })
                .collect(),
        }
    }

    pub fn to_poly(&self) -> Result<LaurentPoly> {
        let mut p = LaurentPoly::zero();
        for term in &self.terms {
            let c: BigInt = term
                .coeff
                .parse()
                .map_err(|e| QtcError::Parse(format!("bad coefficient {:?}: {e}", term.coeff)))?;
            p.add_term(ExponentPair::new(term.q, term.t), c);
        }
        Ok(p)
    }
}

pub fn render_json(params: &[i64], p: &LaurentPoly) -> String {
    serde_json::to_string_pretty(&PolyRecord::new(params, p)).expect("plain data serializes")
}

pub fn parse_json(s: &str) -> Result<(Vec<i64>, LaurentPoly)> {
    let rec: PolyRecord = serde_json::from_str(s).map_err(|e| QtcError::Parse(e.to_string()))?;
    let p = rec.to_poly()?;
    Ok((rec.params, p))
}

pub fn render_text(p: &LaurentPoly) -> String {
    p.to_string()
}

fn latex_power(out: &mut String, var: char, e: i64) {
    match e {
        0 => {}
        1 => out.push(var),
        e if (0..10).contains(&e) => {
            let _ = write!(out, "{var}^{e}");
        }
        e => {
            let _ = write!(out, "{var}^{{{e}}}");
        }
    }
}

/// `q^8 + q^7t + 2q^4t^2 - qt`, in display order.
pub fn render_latex(p: &LaurentPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (idx, (e, c)) in p.terms_display_order().into_iter().enumerate() {
        let neg = c.is_negative();
        if idx == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mag = c.abs();
        let constant = e.q_exp == 0 && e.t_exp == 0;
        if !mag.is_one() || constant {
            let _ = write!(out, "{mag}");
        }
        latex_power(&mut out, 'q', e.q_exp);
        latex_power(&mut out, 't', e.t_exp);
    }
    out
}

/// One `q,t,coeff` row per term after a header line.
pub fn render_csv(p: &LaurentPoly) -> String {
    let mut out = String::from("q,t,coeff\n");
    for (e, c) in p.terms_display_order() {
        let _ = writeln!(out, "{},{},{}", e.q_exp, e.t_exp, c);
    }
    out
}
