//! Finite categories and the constructions built from them.
//!
//! Objects and morphisms are addressed by dense indices ([`Ob`], [`Mor`]) and
//! carry unique string labels. Identity morphisms are always labelled
//! `id_<object>`. Composition is written `compose(g, f) = g ∘ f` (apply `f`
//! first) throughout.

mod category;
mod comma;
mod functor;
mod grothendieck;
mod natural;
mod search;
mod system;

pub(crate) use category::identity_label as identity_label_for;
pub use category::{CategoryError, FiniteCategory, Morphism, RawCategory};
pub use comma::{
    over_category, pi0, under_category, under_functor_of_morphism, under_system, CommaCategory,
    Components,
};
pub use functor::Functor;
pub use grothendieck::{gr_of_under_system, grothendieck, Grothendieck, UnderGrothendieck};
pub use natural::NaturalTransformation;
pub use search::{
    enumerate_functors, enumerate_nat_trans, find_isomorphism, homotopic_within, Direction,
    ZigZagStep, DEFAULT_HOMOTOPY_BUDGET,
};
pub use system::CategorySystem;

/// Object index inside a [`FiniteCategory`].
pub type Ob = usize;
/// Morphism index inside a [`FiniteCategory`].
pub type Mor = usize;
