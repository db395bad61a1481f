use std::sync::Arc;

use super::{AugmentedDiagram, DiagramError, SpaceDiagram, Variance};
use crate::sset::{
    delta_map_of, finite_colimit, pullback_along_simplex, Colimit, FiniteSimplicialSet, Pullback, SimplexCategory,
    SimplicialMap,
};

/// `df : σ ↦ f⁻¹(σ)` over the simplex category of `X`, augmented over `Δ_X`.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub augmented: AugmentedDiagram,
    pub pullbacks: Vec<Pullback>,
    pub map: SimplicialMap,
}

/// The decomposition of `f : E → X`: the pullback of `f` along every
/// simplex of `X`, with `(θ, e) ↦ (αθ, e)` along `α : τ → σ`.
pub fn decompose(f: &SimplicialMap) -> Result<Decomposition, DiagramError> {
    let x = f.codomain();
    let w = f.domain().window();
    if x.window() != w {
        return Err(DiagramError::Precondition("decomposition needs a shared window".into()));
    }
    let sc = Arc::new(SimplexCategory::new(x, w)?);
    let pullbacks: Vec<Pullback> =
        sc.simplices().iter().map(|s| pullback_along_simplex(s, f)).collect::<Result<_, _>>()?;
    let maps = (0..sc.category.morphism_count())
        .map(|m| {
            let (alpha, s) = sc.arrow(m);
            pullbacks[sc.category.source(m)].map_along(alpha, &pullbacks[s])
        })
        .collect::<Result<Vec<_>, _>>()?;
    let values = pullbacks.iter().map(|p| p.set.clone()).collect();
    let diagram = SpaceDiagram::new(sc.category.clone(), values, maps, Variance::Covariant, w)?;
    let augmentation = pullbacks.iter().map(|p| p.to_simplex.clone()).collect();
    let augmented = AugmentedDiagram::new(sc, diagram, augmentation)?;
    Ok(Decomposition { augmented, pullbacks, map: f.clone() })
}

/// The colimit of an augmented diagram with its map to `X`.
#[derive(Clone, Debug)]
pub struct Assembly {
    pub colimit: Colimit,
    pub map: SimplicialMap,
}

/// `colim G → colim Δ_X ≅ X`. A simplex represented by `s` in `G(σ)` goes
/// to `σ·θ`, where `θ = g_σ(s)` read as a map of `Δ`.
pub fn assemble(g: &AugmentedDiagram) -> Result<Assembly, DiagramError> {
    let sc = &g.simplex_category;
    let x = &sc.space;
    let d = &g.diagram;
    let colimit = finite_colimit(d.index(), d.values(), d.maps(), d.window())?;
    let images = colimit
        .representatives
        .iter()
        .map(|dim| {
            dim.iter()
                .map(|(o, s)| {
                    let sigma = sc.simplex(*o);
                    let theta = delta_map_of(sigma.dim(), &g.augmentation[*o].apply(s));
                    x.apply(sigma, &theta)
                })
                .collect()
        })
        .collect();
    let map = SimplicialMap::new(colimit.set.clone(), x.clone(), images)?;
    Ok(Assembly { colimit, map })
}

/// `assemble(decompose(f))` with the comparison `colim df → E` induced by
/// the projections of the pullbacks.
#[derive(Clone, Debug)]
pub struct RoundTrip {
    pub decomposition: Decomposition,
    pub assembly: Assembly,
    pub comparison: SimplicialMap,
    /// the comparison is an isomorphism of simplicial sets
    pub is_isomorphism: bool,
    /// `f ∘ comparison` equals the assembled map
    pub over_base: bool,
}

impl RoundTrip {
    pub fn holds(&self) -> bool {
        self.is_isomorphism && self.over_base
    }
}

pub fn round_trip(f: &SimplicialMap) -> Result<RoundTrip, DiagramError> {
    let decomposition = decompose(f)?;
    let assembly = assemble(&decomposition.augmented)?;
    let legs: Vec<SimplicialMap> = decomposition.pullbacks.iter().map(|p| p.to_total.clone()).collect();
    let e: &Arc<FiniteSimplicialSet> = f.domain();
    let comparison = assembly.colimit.induced(e, &legs)?;
    let is_isomorphism = comparison.is_isomorphism();
    let over_base = f.after(&comparison)? == assembly.map;
    Ok(RoundTrip { decomposition, assembly, comparison, is_isomorphism, over_base })
}
