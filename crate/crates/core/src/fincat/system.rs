use std::sync::Arc;

use super::{CategoryError, FiniteCategory, Functor, Mor, Ob};

/// A contravariant system of categories over an index category `C`: a
/// category `F_c` per object and, for `α : c1 → c0`, a functor
/// `F_α : F_{c0} → F_{c1}`.
#[derive(Clone, Debug)]
pub struct CategorySystem {
    index: Arc<FiniteCategory>,
    fibers: Vec<Arc<FiniteCategory>>,
    transitions: Vec<Functor>,
}

impl CategorySystem {
    /// Checks typing, `F_id = id` and `F_{αα'} = F_{α'} F_α`.
    pub fn new(
        index: Arc<FiniteCategory>,
        fibers: Vec<Arc<FiniteCategory>>,
        transitions: Vec<Functor>,
    ) -> Result<Self, CategoryError> {
        if fibers.len() != index.object_count() || transitions.len() != index.morphism_count() {
            return Err(CategoryError::System("table sizes do not match the index category".into()));
        }
        for (alpha, t) in transitions.iter().enumerate() {
            if **t.domain() != *fibers[index.target(alpha)] || **t.codomain() != *fibers[index.source(alpha)] {
                return Err(CategoryError::System(format!("functor for `{}` has the wrong type", index.label(alpha))));
            }
        }
        for c in 0..index.object_count() {
            if transitions[index.identity(c)] != Functor::identity(&fibers[c]) {
                return Err(CategoryError::System(format!(
                    "identity of `{}` is not sent to the identity",
                    index.object_label(c)
                )));
            }
        }
        for a in 0..index.morphism_count() {
            for &a2 in index.incoming(index.source(a)) {
                let lhs = &transitions[index.compose(a, a2)];
                let rhs = transitions[a2].after(&transitions[a])?;
                if *lhs != rhs {
                    return Err(CategoryError::System(format!(
                        "composite `{} . {}` not respected",
                        index.label(a),
                        index.label(a2)
                    )));
                }
            }
        }
        Ok(CategorySystem { index, fibers, transitions })
    }

    /// The constant system with every fibre equal to `fiber`.
    pub fn constant(index: Arc<FiniteCategory>, fiber: Arc<FiniteCategory>) -> Self {
        let fibers = vec![fiber.clone(); index.object_count()];
        let transitions = vec![Functor::identity(&fiber); index.morphism_count()];
        CategorySystem { index, fibers, transitions }
    }

    pub fn index(&self) -> &Arc<FiniteCategory> {
        &self.index
    }

    pub fn fiber(&self, c: Ob) -> &Arc<FiniteCategory> {
        &self.fibers[c]
    }

    pub fn fibers(&self) -> &[Arc<FiniteCategory>] {
        &self.fibers
    }

    pub fn transition(&self, alpha: Mor) -> &Functor {
        &self.transitions[alpha]
    }
}
