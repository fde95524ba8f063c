//! Symmetric chain decompositions for three arguments.
//!
//! The subpartitions of `lambda(a,b,c) = (a+b+c, b+c, c)` split into chains
//! whose area statistics fill integer intervals. Each chain can be indexed by
//! its tail (largest partition), pseudohead, head (smallest partition) or
//! quasihead, and the four index families are in area-range preserving
//! bijection.

pub mod decomposition;
pub mod index;
pub mod maps;
pub mod statistic;

pub use decomposition::{
    appendage_of, chain_of, classify, predicted_tail, string_of, CaseLabel, ChainDecomposition, ChainRecord,
};
pub use index::{
    enumerate_heads, enumerate_pseudoheads, enumerate_quasiheads, enumerate_tails, subpartitions, AreaRange, Head,
    Partition3, Pseudohead, Quasihead, Tail,
};
pub use maps::{omega_inv, omega_map, phi, phi_inv, psi, psi_inv, theta, theta_inv};
pub use statistic::{f_chains, f_stat, h_comb, h_comb_at, h_comb_recursion_rhs, stat};
