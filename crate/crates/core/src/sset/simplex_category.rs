use std::collections::HashMap;
use std::sync::Arc;

use super::{nerve_map, DeltaMap, FiniteSimplicialSet, Nerve, Simplex, SimplicialError, SimplicialMap};
use crate::fincat::{CategoryError, FiniteCategory, Functor, Mor, Ob};

/// The simplex category of a simplicial set: objects are all simplices
/// (degenerate included) up to a window, and a morphism `τ → σ` is a
/// monotone `α` with `τ = σ·α`.
#[derive(Clone, Debug)]
pub struct SimplexCategory {
    pub category: Arc<FiniteCategory>,
    pub space: Arc<FiniteSimplicialSet>,
    pub window: usize,
    simplices: Vec<Simplex>,
    index: HashMap<Simplex, Ob>,
    arrows: Vec<(DeltaMap, Ob)>,
    arrow_index: HashMap<(DeltaMap, Ob), Mor>,
}

impl PartialEq for SimplexCategory {
    fn eq(&self, other: &Self) -> bool {
        self.window == other.window && self.space == other.space
    }
}

/// An elementary morphism `d_i σ → σ` or `s_i σ → σ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    Face(usize),
    Degeneracy(usize),
}

impl SimplexCategory {
    pub fn new(space: &Arc<FiniteSimplicialSet>, window: usize) -> Result<Self, SimplicialError> {
        if window > space.window() {
            return Err(SimplicialError::Window(format!(
                "simplex category window {window} exceeds the space window {}",
                space.window()
            )));
        }
        let simplices: Vec<Simplex> = (0..=window).flat_map(|n| space.simplices(n)).collect();
        let index: HashMap<Simplex, Ob> = simplices.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
        let labels: Vec<String> = simplices.iter().map(|s| space.display_label(s)).collect();
        let mut morphisms = Vec::new();
        let mut identities = Vec::with_capacity(simplices.len());
        for (t, sigma) in simplices.iter().enumerate() {
            let n = sigma.dim();
            for m in 0..=window {
                for alpha in DeltaMap::all(m, n) {
                    let src = index[&space.apply(sigma, &alpha)];
                    let label = if alpha.is_identity() {
                        identities.push((alpha.clone(), t));
                        crate::fincat::identity_label_for(&labels[t])
                    } else {
                        format!("{}@{}", alpha.label(), labels[t])
                    };
                    morphisms.push(((alpha, t), label, src, t));
                }
            }
        }
        identities.sort_by_key(|(_, t)| *t);
        let identities: Vec<(DeltaMap, Ob)> = identities;
        let arrows: Vec<(DeltaMap, Ob)> = morphisms.iter().map(|(k, _, _, _)| k.clone()).collect();
        let arrow_index = arrows.iter().enumerate().map(|(i, k)| (k.clone(), i)).collect();
        let category = FiniteCategory::from_parts(labels, morphisms, identities, |g, f| {
            let (beta, rho) = g;
            let (alpha, sigma) = f;
            if simplices[*sigma] != space.apply(&simplices[*rho], beta) {
                return None;
            }
            Some((beta.after(alpha), *rho))
        })
        .map_err(|e: CategoryError| SimplicialError::Construction(e.to_string()))?;
        Ok(SimplexCategory {
            category: Arc::new(category),
            space: space.clone(),
            window,
            simplices,
            index,
            arrows,
            arrow_index,
        })
    }

    pub fn simplex(&self, ob: Ob) -> &Simplex {
        &self.simplices[ob]
    }

    pub fn simplices(&self) -> &[Simplex] {
        &self.simplices
    }

    pub fn object_of(&self, s: &Simplex) -> Option<Ob> {
        self.index.get(s).copied()
    }

    /// `(α, σ)` for the morphism `σα → σ`.
    pub fn arrow(&self, m: Mor) -> (&DeltaMap, Ob) {
        let (a, t) = &self.arrows[m];
        (a, *t)
    }

    pub fn morphism_of(&self, alpha: &DeltaMap, target: Ob) -> Option<Mor> {
        self.arrow_index.get(&(alpha.clone(), target)).copied()
    }

    /// Morphisms whose `α` is surjective (composites of degeneracies).
    pub fn is_degeneracy(&self, m: Mor) -> bool {
        self.arrows[m].0.is_surjective()
    }

    /// The generator morphism `d_i σ → σ` or `s_i σ → σ`, if it lies in the
    /// window.
    pub fn generator(&self, g: Generator, target: Ob) -> Option<Mor> {
        let n = self.simplices[target].dim();
        let alpha = match g {
            Generator::Face(i) if n >= 1 && i <= n => DeltaMap::face(n, i),
            Generator::Degeneracy(i) if i <= n && n < self.window => DeltaMap::degeneracy(n, i),
            _ => return None,
        };
        self.morphism_of(&alpha, target)
    }

    /// Decomposes a morphism into generators, listed in application order
    /// (first applied first); identities decompose into the empty list.
    pub fn generators_of(&self, m: Mor) -> Vec<(Generator, Ob)> {
        let (alpha, sigma) = (self.arrows[m].0.clone(), self.arrows[m].1);
        let (epi, mono) = alpha.factor();
        let mut outer = Vec::new();
        // (mono, σ) = (d^i, σ) ∘ (mono'', d_iσ) ∘ …
        let mut delta = mono;
        let mut target = sigma;
        while !delta.is_identity() {
            let n = delta.target();
            let i = *delta.missing().last().unwrap();
            outer.push((Generator::Face(i), target));
            target = self.index[&self.space.face(&self.simplices[target], i)];
            delta = DeltaMap::new(n - 1, delta.values().iter().map(|&v| if v < i { v } else { v - 1 }).collect());
        }
        // (ε, ρ) = (ε'', ρ) ∘ (σ^j, ρε'')
        let mut eps = epi;
        let mut inner = Vec::new();
        while !eps.is_identity() {
            let j = eps.repeats()[0];
            let m = eps.source();
            let rest = DeltaMap::new(eps.target(), (0..m).map(|k| eps.at(if k <= j { k } else { k + 1 })).collect());
            let base = self.index[&self.space.apply(&self.simplices[target], &rest)];
            inner.push((Generator::Degeneracy(j), base));
            eps = rest;
        }
        let mut out = inner;
        out.extend(outer.into_iter().rev());
        out
    }

    /// The functor induced by a simplicial map between the spaces.
    pub fn functor_of_map(
        f: &SimplicialMap,
        source: &SimplexCategory,
        target: &SimplexCategory,
    ) -> Result<Functor, SimplicialError> {
        if source.window > target.window {
            return Err(SimplicialError::Window("target simplex category window too small".into()));
        }
        let objects: Vec<Ob> = source.simplices.iter().map(|s| target.index[&f.apply(s)]).collect();
        let morphisms = source
            .arrows
            .iter()
            .map(|(alpha, t)| target.arrow_index[&(alpha.clone(), objects[*t])])
            .collect();
        Functor::new(source.category.clone(), target.category.clone(), objects, morphisms)
            .map_err(|e| SimplicialError::Map(e.to_string()))
    }
}

/// The subdivision `N(simplex category)` with its parts.
#[derive(Clone, Debug)]
pub struct Subdivision {
    pub simplex_category: SimplexCategory,
    pub nerve: Nerve,
}

impl Subdivision {
    pub fn set(&self) -> &Arc<FiniteSimplicialSet> {
        &self.nerve.set
    }
}

pub fn subdivision(a: &Arc<FiniteSimplicialSet>, category_window: usize, window: usize) -> Result<Subdivision, SimplicialError> {
    let sc = SimplexCategory::new(a, category_window)?;
    let nerve = Nerve::new(&sc.category, window);
    Ok(Subdivision { simplex_category: sc, nerve })
}

/// `sd(f)`, the nerve of the induced functor of simplex categories.
pub fn subdivision_map(f: &SimplicialMap, source: &Subdivision, target: &Subdivision) -> Result<SimplicialMap, SimplicialError> {
    let functor = SimplexCategory::functor_of_map(f, &source.simplex_category, &target.simplex_category)?;
    nerve_map(&functor, &source.nerve, &target.nerve)
}
