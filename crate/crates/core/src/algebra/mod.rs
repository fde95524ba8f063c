//! Exact arithmetic in `Z[q^±1, t^±1]` and the binomial-denominator fractions
//! needed to sum tableau weights.

pub mod poly;
pub mod rational;
pub mod special;
pub mod univariate;

pub use poly::{ExponentPair, LaurentPoly};
pub use rational::{divide_one_minus, rat_add, rat_mul, rat_to_poly, BinomialFactor, FactoredRational, Unit};
pub use special::{bracket, coeff_a, coeff_b, sym_chain};
pub use univariate::{is_unimodal, unimodality_check, QPoly};

pub fn poly_add(p: &LaurentPoly, r: &LaurentPoly) -> LaurentPoly {
    p + r
}

pub fn poly_mul(p: &LaurentPoly, r: &LaurentPoly) -> LaurentPoly {
    p * r
}

pub fn poly_neg(p: &LaurentPoly) -> LaurentPoly {
    -p
}

pub fn specialize_t_one(p: &LaurentPoly) -> QPoly {
    p.specialize_t_one()
}

pub fn specialize_t_qinv(p: &LaurentPoly) -> QPoly {
    p.specialize_t_qinv()
}
