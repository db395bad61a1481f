//! Diagrams indexed by finite categories and by simplex categories.
//!
//! Space-valued diagrams carry a variance flag; category-valued functors live
//! on simplex categories. The constructions here are the functor-level ones:
//! `ε`, bounded functors, left Kan extensions, homotopy colimits by simplicial
//! replacement, the Thomason and Quillen comparisons, clutching, and
//! decomposition/assembly of maps.

mod clutch;
mod decompose;
mod epsilon;
mod hocolim;
mod kan;
mod quillen;

use std::sync::Arc;

use thiserror::Error;

use crate::fincat::{CategoryError, FiniteCategory, Functor, Mor, Ob};
use crate::homology::HomologyError;
use crate::sset::{simplex_map, standard_simplex, FiniteSimplicialSet, SimplexCategory, SimplicialError, SimplicialMap};

pub use clutch::{clutch, square_categories, universal_clutch, ClutchReport, Clutching, SquareCategories, UniversalClutch};
pub use decompose::{assemble, decompose, round_trip, Assembly, Decomposition, RoundTrip};
pub use epsilon::{epsilon_functor, Epsilon};
pub use hocolim::{simplicial_replacement, simplicial_replacement_hocolim, thomason_compare, ThomasonReport};
pub use kan::{left_kan_extension, KanExtension};
pub use quillen::{quasi_fibration_check, MorphismCheck, QuasiFibrationReport, TheoremACheck};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error(transparent)]
    Category(#[from] CategoryError),
    #[error(transparent)]
    Simplicial(#[from] SimplicialError),
    #[error(transparent)]
    Homology(#[from] HomologyError),
    #[error("diagram is not a functor: {0}")]
    Functoriality(String),
    #[error("invalid clutching data: {0}")]
    Clutch(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variance {
    /// `α : i1 → i0` gives `X(i1) → X(i0)`
    Covariant,
    /// `α : i1 → i0` gives `X(i0) → X(i1)`
    Contravariant,
}

impl Variance {
    pub fn flip(self) -> Self {
        match self {
            Variance::Covariant => Variance::Contravariant,
            Variance::Contravariant => Variance::Covariant,
        }
    }
}

/// A diagram of simplicial sets over a finite category, all values sharing
/// one window.
#[derive(Clone, Debug, PartialEq)]
pub struct SpaceDiagram {
    index: Arc<FiniteCategory>,
    values: Vec<Arc<FiniteSimplicialSet>>,
    maps: Vec<SimplicialMap>,
    variance: Variance,
    window: usize,
}

impl SpaceDiagram {
    /// Checks typing, identities and composites.
    pub fn new(
        index: Arc<FiniteCategory>,
        values: Vec<Arc<FiniteSimplicialSet>>,
        maps: Vec<SimplicialMap>,
        variance: Variance,
        window: usize,
    ) -> Result<Self, DiagramError> {
        let bad = |w: String| Err(DiagramError::Functoriality(w));
        if values.len() != index.object_count() || maps.len() != index.morphism_count() {
            return bad("value and map counts must match the index category".into());
        }
        if let Some(v) = values.iter().find(|v| v.window() != window) {
            return bad(format!("value window {} differs from the diagram window {window}", v.window()));
        }
        let d = SpaceDiagram { index, values, maps, variance, window };
        let c = &d.index;
        for m in 0..c.morphism_count() {
            let (from, to) = d.ends(m);
            if d.maps[m].domain() != &d.values[from] || d.maps[m].codomain() != &d.values[to] {
                return bad(format!("map for `{}` has the wrong type", c.label(m)));
            }
        }
        for o in 0..c.object_count() {
            if d.maps[c.identity(o)] != SimplicialMap::identity(&d.values[o]) {
                return bad(format!("identity of `{}` is not sent to the identity", c.object_label(o)));
            }
        }
        for g in 0..c.morphism_count() {
            for &f in c.incoming(c.source(g)) {
                let h = c.compose(g, f);
                let composite = match variance {
                    Variance::Covariant => d.maps[g].after(&d.maps[f])?,
                    Variance::Contravariant => d.maps[f].after(&d.maps[g])?,
                };
                if d.maps[h] != composite {
                    return bad(format!("composite `{} . {}` not respected", c.label(g), c.label(f)));
                }
            }
        }
        Ok(d)
    }

    /// The constant diagram.
    pub fn constant(index: Arc<FiniteCategory>, value: Arc<FiniteSimplicialSet>, variance: Variance) -> Self {
        let window = value.window();
        let maps = vec![SimplicialMap::identity(&value); index.morphism_count()];
        SpaceDiagram { values: vec![value; index.object_count()], index, maps, variance, window }
    }

    /// `(from, to)` objects of the map attached to `m`.
    pub fn ends(&self, m: Mor) -> (Ob, Ob) {
        let (s, t) = (self.index.source(m), self.index.target(m));
        match self.variance {
            Variance::Covariant => (s, t),
            Variance::Contravariant => (t, s),
        }
    }

    pub fn index(&self) -> &Arc<FiniteCategory> {
        &self.index
    }

    pub fn values(&self) -> &[Arc<FiniteSimplicialSet>] {
        &self.values
    }

    pub fn value(&self, o: Ob) -> &Arc<FiniteSimplicialSet> {
        &self.values[o]
    }

    pub fn maps(&self) -> &[SimplicialMap] {
        &self.maps
    }

    pub fn map(&self, m: Mor) -> &SimplicialMap {
        &self.maps[m]
    }

    pub fn variance(&self) -> Variance {
        self.variance
    }

    pub fn window(&self) -> usize {
        self.window
    }

    /// The same data over the opposite index category.
    pub fn opposite(&self) -> SpaceDiagram {
        SpaceDiagram {
            index: Arc::new(self.index.opposite()),
            values: self.values.clone(),
            maps: self.maps.clone(),
            variance: self.variance.flip(),
            window: self.window,
        }
    }

    /// Restriction `X ∘ f` along a functor into the index.
    pub fn restrict(&self, f: &Functor) -> Result<SpaceDiagram, DiagramError> {
        if **f.codomain() != *self.index {
            return Err(DiagramError::Precondition("functor does not land in the index category".into()));
        }
        Ok(SpaceDiagram {
            index: f.domain().clone(),
            values: f.object_map().iter().map(|&o| self.values[o].clone()).collect(),
            maps: f.morphism_map().iter().map(|&m| self.maps[m].clone()).collect(),
            variance: self.variance,
            window: self.window,
        })
    }

    /// Every value truncated to a smaller window.
    pub fn truncate(&self, window: usize) -> Result<SpaceDiagram, DiagramError> {
        if window > self.window {
            return Err(DiagramError::Precondition(format!("cannot extend the window from {} to {window}", self.window)));
        }
        if window == self.window {
            return Ok(self.clone());
        }
        let values: Vec<Arc<FiniteSimplicialSet>> = self.values.iter().map(|v| Arc::new(v.truncate(window))).collect();
        let maps = (0..self.index.morphism_count())
            .map(|m| {
                let (from, to) = self.ends(m);
                let images = self.maps[m].images()[..=window].to_vec();
                SimplicialMap::new(values[from].clone(), values[to].clone(), images)
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(SpaceDiagram { index: self.index.clone(), values, maps, variance: self.variance, window })
    }
}

/// A functor from the simplex category of a space to a finite category.
#[derive(Clone, Debug, PartialEq)]
pub struct CatValuedFunctor {
    pub simplex_category: Arc<SimplexCategory>,
    pub functor: Functor,
}

impl CatValuedFunctor {
    pub fn new(simplex_category: Arc<SimplexCategory>, functor: Functor) -> Result<Self, DiagramError> {
        if **functor.domain() != *simplex_category.category {
            return Err(DiagramError::Precondition("functor is not indexed by the simplex category".into()));
        }
        Ok(CatValuedFunctor { simplex_category, functor })
    }

    /// The constant functor at an object of `target`.
    pub fn constant(simplex_category: Arc<SimplexCategory>, target: &Arc<FiniteCategory>, object: Ob) -> Self {
        let functor = Functor::constant(&simplex_category.category, target, object);
        CatValuedFunctor { simplex_category, functor }
    }

    pub fn target(&self) -> &Arc<FiniteCategory> {
        self.functor.codomain()
    }

    /// Restriction `f*F` along a simplicial map into the space.
    pub fn restrict(&self, f: &SimplicialMap, source: &Arc<SimplexCategory>) -> Result<CatValuedFunctor, DiagramError> {
        let along = SimplexCategory::functor_of_map(f, source, &self.simplex_category)?;
        Ok(CatValuedFunctor { simplex_category: source.clone(), functor: self.functor.after(&along)? })
    }

    pub fn is_bounded(&self) -> bool {
        is_bounded(self)
    }
}

/// Whether every degeneracy morphism goes to an isomorphism.
pub fn is_bounded(f: &CatValuedFunctor) -> bool {
    let sc = &f.simplex_category;
    let target = f.functor.codomain();
    (0..sc.category.morphism_count()).filter(|&m| sc.is_degeneracy(m)).all(|m| target.is_isomorphism(f.functor.morphism(m)))
}

/// A diagram `G` over the simplex category of `X` with a transformation
/// `G → Δ_X`, where `Δ_X(σ) = Δ[dim σ]`.
#[derive(Clone, Debug)]
pub struct AugmentedDiagram {
    pub simplex_category: Arc<SimplexCategory>,
    pub diagram: SpaceDiagram,
    pub augmentation: Vec<SimplicialMap>,
}

impl AugmentedDiagram {
    /// Checks that `diagram` is covariant over the simplex category and that
    /// every naturality square `Δ[α] g_τ = g_σ G(α)` commutes.
    pub fn new(
        simplex_category: Arc<SimplexCategory>,
        diagram: SpaceDiagram,
        augmentation: Vec<SimplicialMap>,
    ) -> Result<Self, DiagramError> {
        let sc = &simplex_category;
        if *diagram.index != *sc.category || diagram.variance != Variance::Covariant {
            return Err(DiagramError::Precondition("augmented diagrams are covariant over the simplex category".into()));
        }
        let w = diagram.window;
        if augmentation.len() != sc.simplices().len() {
            return Err(DiagramError::Precondition("one augmentation map per simplex".into()));
        }
        for (o, g) in augmentation.iter().enumerate() {
            let n = sc.simplex(o).dim();
            if g.domain() != &diagram.values[o] || **g.codomain() != standard_simplex(n, w)? {
                return Err(DiagramError::Precondition(format!("augmentation at `{}` has the wrong type", sc.category.object_label(o))));
            }
        }
        for m in 0..sc.category.morphism_count() {
            let (alpha, s) = sc.arrow(m);
            let t = sc.category.source(m);
            let left = simplex_map(alpha, w)?.after(&augmentation[t])?;
            let right = augmentation[s].after(&diagram.maps[m])?;
            if left != right {
                return Err(DiagramError::Functoriality(format!("augmentation not natural at `{}`", sc.category.label(m))));
            }
        }
        Ok(AugmentedDiagram { simplex_category, diagram, augmentation })
    }
}
