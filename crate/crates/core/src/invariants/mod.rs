//! Exact algebraic invariants of finite simplicial sets.

mod chain;
mod group_pres;
mod matrix;
mod pi;
mod sparse;

pub use chain::{
    chain_complex, chain_complex_upto, homology, homology_of, homology_upto, reduce,
    reduced_homology, relative_homology, relative_homology_upto, AbelianGroup, ChainComplex,
};
pub use group_pres::{
    cyclic_reduce, free_reduce, invert, tietze, GroupPresentation, Simplified, Word,
};
pub use matrix::{invariant_factors, smith_normal_form, IntMatrix, Smith};
pub use pi::{component, pi0, pi1, Components, FundamentalGroup};
pub use sparse::{sparse_invariant_factors, SparseMatrix};
