use std::sync::Arc;

use super::{CategoryError, FiniteCategory, Mor, Ob};

/// A functor between finite categories, stored as object and morphism tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Functor {
    domain: Arc<FiniteCategory>,
    codomain: Arc<FiniteCategory>,
    objects: Vec<Ob>,
    morphisms: Vec<Mor>,
}

impl Functor {
    /// Checks source/target compatibility, identities and composition.
    pub fn new(
        domain: Arc<FiniteCategory>,
        codomain: Arc<FiniteCategory>,
        objects: Vec<Ob>,
        morphisms: Vec<Mor>,
    ) -> Result<Self, CategoryError> {
        let f = Functor { domain, codomain, objects, morphisms };
        f.check()?;
        Ok(f)
    }

    fn check(&self) -> Result<(), CategoryError> {
        let (d, c) = (&*self.domain, &*self.codomain);
        if self.objects.len() != d.object_count() || self.morphisms.len() != d.morphism_count() {
            return Err(CategoryError::Functor("table sizes do not match the domain".into()));
        }
        if self.objects.iter().any(|&o| o >= c.object_count())
            || self.morphisms.iter().any(|&m| m >= c.morphism_count())
        {
            return Err(CategoryError::Functor("image outside the codomain".into()));
        }
        for m in 0..d.morphism_count() {
            let fm = self.morphisms[m];
            if c.source(fm) != self.objects[d.source(m)] || c.target(fm) != self.objects[d.target(m)] {
                return Err(CategoryError::Functor(format!(
                    "image of `{}` has the wrong source or target",
                    d.label(m)
                )));
            }
        }
        for o in 0..d.object_count() {
            if self.morphisms[d.identity(o)] != c.identity(self.objects[o]) {
                return Err(CategoryError::Functor(format!("identity of `{}` not preserved", d.object_label(o))));
            }
        }
        for g in 0..d.morphism_count() {
            for &f in d.incoming(d.source(g)) {
                let lhs = self.morphisms[d.compose(g, f)];
                let rhs = c.compose(self.morphisms[g], self.morphisms[f]);
                if lhs != rhs {
                    return Err(CategoryError::Functor(format!(
                        "composite `{} . {}` not preserved",
                        d.label(g),
                        d.label(f)
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn identity(c: &Arc<FiniteCategory>) -> Self {
        Functor {
            domain: c.clone(),
            codomain: c.clone(),
            objects: (0..c.object_count()).collect(),
            morphisms: (0..c.morphism_count()).collect(),
        }
    }

    /// The constant functor at `ob`.
    pub fn constant(domain: &Arc<FiniteCategory>, codomain: &Arc<FiniteCategory>, ob: Ob) -> Self {
        Functor {
            domain: domain.clone(),
            codomain: codomain.clone(),
            objects: vec![ob; domain.object_count()],
            morphisms: vec![codomain.identity(ob); domain.morphism_count()],
        }
    }

    /// A functor out of a thin domain into a thin codomain (for instance
    /// between posets), determined by its object map.
    pub fn between_thin(
        domain: &Arc<FiniteCategory>,
        codomain: &Arc<FiniteCategory>,
        objects: Vec<Ob>,
    ) -> Result<Self, CategoryError> {
        let mut morphisms = Vec::with_capacity(domain.morphism_count());
        for m in 0..domain.morphism_count() {
            let (s, t) = (objects[domain.source(m)], objects[domain.target(m)]);
            match codomain.hom(s, t) {
                [single] => morphisms.push(*single),
                _ => {
                    return Err(CategoryError::Functor(format!(
                        "no unique image for `{}` in a thin codomain",
                        domain.label(m)
                    )))
                }
            }
        }
        Functor::new(domain.clone(), codomain.clone(), objects, morphisms)
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &Functor) -> Result<Functor, CategoryError> {
        if *first.codomain != *self.domain {
            return Err(CategoryError::Functor("functors are not composable".into()));
        }
        Ok(Functor {
            domain: first.domain.clone(),
            codomain: self.codomain.clone(),
            objects: first.objects.iter().map(|&o| self.objects[o]).collect(),
            morphisms: first.morphisms.iter().map(|&m| self.morphisms[m]).collect(),
        })
    }

    pub fn domain(&self) -> &Arc<FiniteCategory> {
        &self.domain
    }

    pub fn codomain(&self) -> &Arc<FiniteCategory> {
        &self.codomain
    }

    pub fn object(&self, ob: Ob) -> Ob {
        self.objects[ob]
    }

    pub fn morphism(&self, m: Mor) -> Mor {
        self.morphisms[m]
    }

    pub fn object_map(&self) -> &[Ob] {
        &self.objects
    }

    pub fn morphism_map(&self) -> &[Mor] {
        &self.morphisms
    }

    pub fn is_parallel(&self, other: &Functor) -> bool {
        self.domain == other.domain && self.codomain == other.codomain
    }

    /// Same functor viewed between the opposite categories.
    pub fn opposite(&self) -> Functor {
        Functor {
            domain: Arc::new(self.domain.opposite()),
            codomain: Arc::new(self.codomain.opposite()),
            objects: self.objects.clone(),
            morphisms: self.morphisms.clone(),
        }
    }

    pub fn is_injective_on_objects(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.objects.iter().all(|o| seen.insert(*o))
    }
}
