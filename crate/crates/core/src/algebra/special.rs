//! Named polynomials: `(q,t)`-brackets, symmetric chains and the Tesler
//! weights `A(m)`, `B(m)`.

use crate::error::{domain, Result};

use super::poly::LaurentPoly;

/// `[m]_{q,t} = q^{m-1} + q^{m-2} t + ... + t^{m-1}`; `[0] = 0`.
pub fn bracket(m: i64) -> Result<LaurentPoly> {
    if m < 0 {
        return domain(format!("bracket [{m}] needs m >= 0"));
    }
    Ok(LaurentPoly::from_terms((0..m).map(|i| (m - 1 - i, i, 1))))
}

/// Symmetric chain `[k,l]_{q,t} = q^l t^k + q^{l-1} t^{k+1} + ... + q^k t^l`.
pub fn sym_chain(k: i64, l: i64) -> Result<LaurentPoly> {
    if k > l {
        return domain(format!("symmetric chain [{k},{l}] needs k <= l"));
    }
    Ok(LaurentPoly::from_terms((0..=l - k).map(|i| (l - i, k + i, 1))))
}

/// Coefficient of `z^m` in `(1-z)(1-qtz)/((1-qz)(1-tz))`.
pub fn coeff_a(m: i64) -> Result<LaurentPoly> {
    if m < 0 {
        return domain(format!("A({m}) needs m >= 0"));
    }
    if m == 0 {
        return Ok(LaurentPoly::one());
    }
    // -(1-q)(1-t)[m]
    let factor = LaurentPoly::from_terms([(0, 0, -1), (1, 0, 1), (0, 1, 1), (1, 1, -1)]);
    Ok(&factor * &bracket(m)?)
}

/// Coefficient of `z^m` in `(1-z)/((1-qz)(1-tz))`, i.e. `[m+1] - [m]`.
pub fn coeff_b(m: i64) -> Result<LaurentPoly> {
    if m < 0 {
        return domain(format!("B({m}) needs m >= 0"));
    }
    Ok(&bracket(m + 1)? - &bracket(m)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(i64, i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn brackets() {
        assert!(bracket(0).unwrap().is_zero());
        assert_eq!(bracket(2).unwrap(), p(&[(1, 0, 1), (0, 1, 1)]));
        assert_eq!(bracket(4).unwrap(), p(&[(3, 0, 1), (2, 1, 1), (1, 2, 1), (0, 3, 1)]));
        assert!(bracket(-1).is_err());
    }

    #[test]
    fn chains() {
        assert_eq!(sym_chain(0, 0).unwrap(), LaurentPoly::one());
        assert_eq!(sym_chain(1, 3).unwrap(), p(&[(3, 1, 1), (2, 2, 1), (1, 3, 1)]));
        let c06 = sym_chain(0, 6).unwrap();
        assert_eq!(c06.num_terms(), 7);
        assert!(c06.terms().all(|(e, c)| e.degree() == 6 && *c == 1.into()));
        assert!(sym_chain(2, 1).is_err());
    }

    #[test]
    fn chains_are_symmetric_and_homogeneous() {
        for k in 0..6 {
            for l in k..9 {
                let c = sym_chain(k, l).unwrap();
                assert!(c.is_symmetric());
                assert_eq!(c.num_terms() as i64, l - k + 1);
                assert!(c.terms().all(|(e, _)| e.degree() == k + l));
            }
        }
    }

    #[test]
    fn tesler_weights() {
        assert_eq!(coeff_a(0).unwrap(), LaurentPoly::one());
        assert_eq!(coeff_b(0).unwrap(), LaurentPoly::one());
        assert_eq!(coeff_b(1).unwrap(), p(&[(1, 0, 1), (0, 1, 1), (0, 0, -1)]));
        assert_eq!(coeff_a(1).unwrap(), p(&[(0, 0, -1), (1, 0, 1), (0, 1, 1), (1, 1, -1)]));
    }

    #[test]
    fn bracket_difference_is_b() {
        for m in 0..=20 {
            assert_eq!(&bracket(m + 1).unwrap() - &bracket(m).unwrap(), coeff_b(m).unwrap());
        }
    }

    /// Independent oracle: expand `(1-z)(1-qtz)/((1-qz)(1-tz))` as a power
    /// series in `z` by formal long division with polynomial coefficients.
    fn series_oracle(order: usize) -> Vec<LaurentPoly> {
        let num = [
            LaurentPoly::one(),
            -&p(&[(0, 0, 1), (1, 1, 1)]),
            LaurentPoly::qt_power(1),
        ];
        // (1 - qz)(1 - tz) = 1 - (q + t) z + qt z^2
        let den = [
            LaurentPoly::one(),
            -&p(&[(1, 0, 1), (0, 1, 1)]),
            LaurentPoly::qt_power(1),
        ];
        let mut out: Vec<LaurentPoly> = Vec::new();
        for m in 0..=order {
            let mut c = num.get(m).cloned().unwrap_or_default();
            for k in 1..=2.min(m) {
                c -= &(&den[k] * &out[m - k]);
            }
            out.push(c);
        }
        out
    }

    #[test]
    fn a_matches_power_series_division() {
        let oracle = series_oracle(10);
        for (m, expected) in oracle.iter().enumerate() {
            assert_eq!(&coeff_a(m as i64).unwrap(), expected, "m = {m}");
        }
    }
}
