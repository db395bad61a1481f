use super::{CategoryError, Functor, Mor, Ob};

/// A natural transformation `source ⇒ target` between parallel functors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NaturalTransformation {
    source: Functor,
    target: Functor,
    components: Vec<Mor>,
}

impl NaturalTransformation {
    /// Checks that each component `φ_b : source(b) → target(b)` is typed
    /// correctly and that `target(β) ∘ φ_{b1} = φ_{b0} ∘ source(β)` for every
    /// `β : b1 → b0`.
    pub fn new(source: Functor, target: Functor, components: Vec<Mor>) -> Result<Self, CategoryError> {
        if !source.is_parallel(&target) {
            return Err(CategoryError::NotParallel);
        }
        let t = NaturalTransformation { source, target, components };
        t.check()?;
        Ok(t)
    }

    fn check(&self) -> Result<(), CategoryError> {
        let dom = self.source.domain();
        let cod = self.source.codomain();
        if self.components.len() != dom.object_count() {
            return Err(CategoryError::Naturality("<component count>".into()));
        }
        for b in 0..dom.object_count() {
            let c = self.components[b];
            if c >= cod.morphism_count()
                || cod.source(c) != self.source.object(b)
                || cod.target(c) != self.target.object(b)
            {
                return Err(CategoryError::Naturality(format!("component at `{}`", dom.object_label(b))));
            }
        }
        for beta in 0..dom.morphism_count() {
            if !self.square_commutes(beta) {
                return Err(CategoryError::Naturality(dom.label(beta).to_string()));
            }
        }
        Ok(())
    }

    pub(crate) fn square_commutes_for(source: &Functor, target: &Functor, components: &[Mor], beta: Mor) -> bool {
        let dom = source.domain();
        let cod = source.codomain();
        let (b1, b0) = (dom.source(beta), dom.target(beta));
        cod.compose(target.morphism(beta), components[b1]) == cod.compose(components[b0], source.morphism(beta))
    }

    fn square_commutes(&self, beta: Mor) -> bool {
        Self::square_commutes_for(&self.source, &self.target, &self.components, beta)
    }

    pub fn identity(f: &Functor) -> Self {
        let cod = f.codomain();
        let components = f.object_map().iter().map(|&o| cod.identity(o)).collect();
        NaturalTransformation { source: f.clone(), target: f.clone(), components }
    }

    /// Vertical composite `other ∘ self`.
    pub fn then(&self, other: &NaturalTransformation) -> Result<Self, CategoryError> {
        if self.target != other.source {
            return Err(CategoryError::NotParallel);
        }
        let cod = self.source.codomain();
        let components = self.components.iter().zip(&other.components).map(|(&a, &b)| cod.compose(b, a)).collect();
        Ok(NaturalTransformation { source: self.source.clone(), target: other.target.clone(), components })
    }

    /// Whiskering `φ h` along a functor `h` into the common domain.
    pub fn precompose(&self, h: &Functor) -> Result<Self, CategoryError> {
        let source = self.source.after(h)?;
        let target = self.target.after(h)?;
        let components = h.object_map().iter().map(|&o| self.components[o]).collect();
        Ok(NaturalTransformation { source, target, components })
    }

    pub fn source(&self) -> &Functor {
        &self.source
    }

    pub fn target(&self) -> &Functor {
        &self.target
    }

    pub fn component(&self, ob: Ob) -> Mor {
        self.components[ob]
    }

    pub fn components(&self) -> &[Mor] {
        &self.components
    }

    pub fn is_isomorphism(&self) -> bool {
        let cod = self.source.codomain();
        self.components.iter().all(|&c| cod.is_isomorphism(c))
    }
}
