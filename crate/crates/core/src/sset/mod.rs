//! Truncated simplicial sets in Eilenberg–Zilber normal form.
//!
//! A [`FiniteSimplicialSet`] lists its nondegenerate simplices up to a
//! window `D` together with their faces; every other simplex is a
//! [`Simplex`], a nondegenerate simplex pulled back along a surjection of
//! `Δ`. Constructions that need explicit degenerate simplices work on a
//! [`SimplicialTable`] and normalize afterwards.

mod basic;
mod bisimplicial;
mod colimit;
mod delta;
mod map;
mod nerve;
mod set;
mod simplex;
mod simplex_category;
mod table;

pub use basic::{
    boundary, delta_map_of, delta_simplex, disjoint_union, empty, fold, point, product, simplex_map, standard_simplex,
};
pub use bisimplicial::{diagonal, BisimplicialSet};
pub use colimit::{finite_colimit, pullback_along_simplex, pushout, Colimit, Origin, Pullback, PushoutSquare};
pub use delta::DeltaMap;
pub use map::SimplicialMap;
pub use nerve::{nerve, nerve_map, Nerve};
pub use set::{FiniteSimplicialSet, SimplicialError};
pub use simplex::{format_word, parse_word, word_to_surjection, Simplex};
pub use simplex_category::{subdivision, subdivision_map, Generator, SimplexCategory, Subdivision};
pub use table::{materialize, Materialized, Normalized, SimplicialTable};

/// `true` iff `f` sends nondegenerate simplices to nondegenerate simplices.
pub fn is_reduced(f: &SimplicialMap) -> bool {
    f.is_reduced()
}
