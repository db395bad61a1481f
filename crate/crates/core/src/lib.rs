//! Exact, desk-scale constructions on finite categories and truncated
//! simplicial sets.
//!
//! The crate is organised by subsystem:
//!
//! * [`fincat`]: finite categories, functors, natural transformations,
//!   comma categories, `π0` and Grothendieck constructions.
//! * [`sset`]: truncated simplicial sets in Eilenberg–Zilber normal form,
//!   nerves, simplex categories, subdivision and finite (co)limits.
//! * [`homology`]: integer chain complexes, Smith normal form and the
//!   homology-equivalence check used wherever a weak equivalence is claimed.
//! * [`diagram`]: functor-level constructions (the `ε` functor, bounded
//!   functors, Kan extensions, homotopy colimits, clutching, decomposition).
//! * [`bar`]: discrete homotopy groupoids and their bar construction.
//! * [`text`]: the plain-text document formats shared by the command line.
//!
//! Everything works inside an explicit dimension window; results that depend
//! on the truncation carry the range of degrees in which they are valid.

pub mod bar;
pub mod diagram;
pub mod fincat;
pub mod homology;
pub mod sset;
pub mod text;

mod error;
mod labels;

pub use error::{Error, Result};
