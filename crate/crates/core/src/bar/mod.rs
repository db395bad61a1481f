//! Discrete homotopy groupoids and their bar construction `EG → BG`.
//!
//! Hom-spaces are finite sets, so every axiom is checked exhaustively and the
//! bar construction is a simplicial set in each horizontal degree.

use thiserror::Error;

use crate::homology::HomologyError;
use crate::sset::SimplicialError;

mod construction;
mod groupoid;

pub use construction::{
    bar_construction, bwe_diagonal, check_extra_degeneracy, inclusion_compare, BarDiagonals, BarPair, BarSimplex,
    ExtraDegeneracyReport, InclusionReport,
};
pub use groupoid::{from_group, validate_groupoid, GroupoidData, RawGroupoid};

#[derive(Debug, Error)]
pub enum GroupoidError {
    #[error("{0}")]
    Data(String),
    #[error("associativity fails for ({0}) * {1} * ({2})")]
    Associativity(String, String, String),
    #[error("unit law fails: {0}")]
    Unit(String),
    #[error("left composition with `{x}` is not a bijection {from} -> {to}")]
    Bijectivity { x: String, from: String, to: String },
    #[error("extra degeneracy law {law} fails at {tuple}")]
    ExtraDegeneracy { law: String, tuple: String },
    #[error("{0}")]
    Precondition(String),
    #[error(transparent)]
    Simplicial(#[from] SimplicialError),
    #[error(transparent)]
    Homology(#[from] HomologyError),
}

#[cfg(test)]
mod tests;
