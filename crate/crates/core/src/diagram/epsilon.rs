use std::sync::Arc;

use super::{CatValuedFunctor, DiagramError};
use crate::fincat::{FiniteCategory, Functor};
use crate::sset::{Nerve, SimplexCategory};

/// `ε : simplex category of N(I) → I` with the nerve it is built on.
#[derive(Clone, Debug)]
pub struct Epsilon {
    pub nerve: Nerve,
    pub functor: CatValuedFunctor,
}

impl Epsilon {
    /// `ε*G = G ∘ ε`.
    pub fn pull_back(&self, g: &Functor) -> Result<CatValuedFunctor, DiagramError> {
        Ok(CatValuedFunctor {
            simplex_category: self.functor.simplex_category.clone(),
            functor: g.after(&self.functor.functor)?,
        })
    }
}

/// `ε(i_n → … → i_0) = i_0`; a morphism `α : σα → σ` goes to the composite
/// `i_{α(0)} → i_0` along the chain of `σ`. In particular degeneracies go to
/// identities, `d_0` to `α_1` and the other faces to identities.
pub fn epsilon_functor(i: &Arc<FiniteCategory>, window: usize) -> Result<Epsilon, DiagramError> {
    let nerve = Nerve::new(i, window);
    let sc = Arc::new(SimplexCategory::new(&nerve.set, window)?);
    let objects = sc.simplices().iter().map(|s| nerve.vertex(s, 0)).collect();
    let morphisms = (0..sc.category.morphism_count())
        .map(|m| {
            let (alpha, t) = sc.arrow(m);
            let (_, chain) = nerve.chain_of(sc.simplex(t));
            let k = alpha.at(0);
            let start = nerve.vertex(sc.simplex(t), k);
            let path: Vec<_> = chain[..k].iter().rev().copied().collect();
            i.compose_path(start, &path)
        })
        .collect();
    let functor = Functor::new(sc.category.clone(), i.clone(), objects, morphisms)?;
    Ok(Epsilon { nerve, functor: CatValuedFunctor { simplex_category: sc, functor } })
}
