use thiserror::Error;

use crate::bar::GroupoidError;
use crate::diagram::DiagramError;
use crate::fincat::CategoryError;
use crate::homology::HomologyError;
use crate::sset::SimplicialError;
use crate::text::ParseError;

/// Crate-wide error type; each subsystem has its own more specific enum.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Category(#[from] CategoryError),
    #[error(transparent)]
    Simplicial(#[from] SimplicialError),
    #[error(transparent)]
    Homology(#[from] HomologyError),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Groupoid(#[from] GroupoidError),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
