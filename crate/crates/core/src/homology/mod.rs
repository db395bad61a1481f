//! Integer homology of truncated simplicial sets.
//!
//! Boundary matrices are sparse; ranks and torsion come from unit-pivot
//! elimination followed by a dense Smith normal form of the remainder. All
//! arithmetic is checked and overflow is reported as an error.

mod chain;
mod matrix;
mod report;
mod sparse;

use thiserror::Error;

pub use chain::{induced_chain_map, normalized_chains, ChainComplex, ChainMap};
pub use matrix::{invariant_factors, smith_normal_form, IntMatrix, SmithForm};
pub use report::{
    components, homology, is_homology_equivalence, simplicial_homology, EquivalenceReport, HomologyGroup,
    HomologyReport, PROXY_NOTE,
};
pub use sparse::SparseMatrix;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HomologyError {
    #[error("integer overflow during exact arithmetic")]
    Overflow,
    #[error("matrix shape mismatch: {0}")]
    Shape(String),
    #[error("boundary squares to a nonzero map in degree {0}")]
    NotAComplex(usize),
    #[error("map does not commute with the boundary in degree {0}")]
    NotAChainMap(usize),
    #[error("equivalence requested through degree {up_to} but the window is {window}; need up_to < window")]
    Window { up_to: usize, window: usize },
}

#[cfg(test)]
pub(crate) mod tests;
