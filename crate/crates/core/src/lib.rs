//! Exact computation of the `(q,t)`-polynomials `F(a_2, ..., a_n)` attached to
//! integer vectors, by tableau sums, Tesler matrices, recursions and (for
//! three arguments) explicit symmetric chain decompositions.

pub mod algebra;
pub mod chains;
pub mod cli;
pub mod closed_forms;
pub mod error;
pub mod io;
pub mod tableaux;
pub mod tesler;

pub use algebra::{ExponentPair, LaurentPoly};
pub use error::{QtcError, Result};
