use std::sync::Arc;

use super::{CategoryError, CategorySystem, FiniteCategory, Functor, Mor, Ob};
use crate::fincat::category::identity_label;

/// An under category `a↑f` or over category `f↓a` together with its
/// forgetful functor to the domain of `f`.
#[derive(Clone, Debug)]
pub struct CommaCategory {
    pub category: Arc<FiniteCategory>,
    pub forget: Functor,
    /// `(b, α)` for each object, in index order.
    pub objects: Vec<(Ob, Mor)>,
}

impl CommaCategory {
    pub fn object_of(&self, b: Ob, alpha: Mor) -> Option<Ob> {
        self.objects.iter().position(|&p| p == (b, alpha))
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Side {
    Under,
    Over,
}

fn comma(a: Ob, f: &Functor, side: Side) -> Result<CommaCategory, CategoryError> {
    let (base, target) = (f.domain(), f.codomain());
    if a >= target.object_count() {
        return Err(CategoryError::UnknownObject(format!("#{a}")));
    }
    let mut objects = Vec::new();
    for b in 0..base.object_count() {
        let hom = match side {
            Side::Under => target.hom(a, f.object(b)),
            Side::Over => target.hom(f.object(b), a),
        };
        for &alpha in hom {
            objects.push((b, alpha));
        }
    }
    let labels: Vec<String> = objects
        .iter()
        .map(|&(b, alpha)| format!("({},{})", base.object_label(b), target.label(alpha)))
        .collect();
    let mut morphisms = Vec::new();
    let mut identities = Vec::new();
    for (i1, &(b1, a1)) in objects.iter().enumerate() {
        for (i0, &(b0, a0)) in objects.iter().enumerate() {
            for &beta in base.hom(b1, b0) {
                let fb = f.morphism(beta);
                let ok = match side {
                    Side::Under => target.compose(fb, a1) == a0,
                    Side::Over => target.compose(a0, fb) == a1,
                };
                if !ok {
                    continue;
                }
                let label = if i1 == i0 && base.is_identity(beta) {
                    identities.push((i1, beta));
                    identity_label(&labels[i1])
                } else {
                    format!("{}@{}", base.label(beta), labels[i1])
                };
                morphisms.push(((i1, beta), label, i1, i0));
            }
        }
    }
    let targets: std::collections::HashMap<(usize, Mor), Ob> =
        morphisms.iter().map(|(k, _, _, t)| (*k, *t)).collect();
    let category = FiniteCategory::from_parts(labels, morphisms.clone(), identities, |g, f_| {
        let (src, fb) = *f_;
        let (_, gb) = *g;
        if targets[f_] != g.0 {
            return None;
        }
        Some((src, base.compose(gb, fb)))
    })?;
    let category = Arc::new(category);
    let forget_objects = objects.iter().map(|&(b, _)| b).collect();
    let forget_morphisms = morphisms.iter().map(|((_, beta), _, _, _)| *beta).collect();
    let forget = Functor::new(category.clone(), base.clone(), forget_objects, forget_morphisms)?;
    Ok(CommaCategory { category, forget, objects })
}

/// The under category `a↑f`: objects `(b, α : a → f(b))`, morphisms
/// `β : b1 → b0` with `f(β)∘α1 = α0`.
pub fn under_category(a: Ob, f: &Functor) -> Result<CommaCategory, CategoryError> {
    comma(a, f, Side::Under)
}

/// The over category `f↓a`: objects `(b, α : f(b) → a)`, morphisms
/// `β : b1 → b0` with `α0∘f(β) = α1`.
pub fn over_category(f: &Functor, a: Ob) -> Result<CommaCategory, CategoryError> {
    comma(a, f, Side::Over)
}

/// For `γ : a1 → a0`, the functor `γ↑f : a0↑f → a1↑f` sending `(b, α)` to
/// `(b, αγ)`.
pub fn under_functor_of_morphism(gamma: Mor, f: &Functor) -> Result<Functor, CategoryError> {
    let target = f.codomain();
    if gamma >= target.morphism_count() {
        return Err(CategoryError::UnknownMorphism(format!("#{gamma}")));
    }
    let from = under_category(target.target(gamma), f)?;
    let to = under_category(target.source(gamma), f)?;
    under_functor_between(gamma, f, &from, &to)
}

fn under_functor_between(
    gamma: Mor,
    f: &Functor,
    from: &CommaCategory,
    to: &CommaCategory,
) -> Result<Functor, CategoryError> {
    let target = f.codomain();
    let objects: Vec<Ob> = from
        .objects
        .iter()
        .map(|&(b, alpha)| to.object_of(b, target.compose(alpha, gamma)).expect("image lies in the under category"))
        .collect();
    let (dom, cod) = (&from.category, &to.category);
    let morphisms = (0..dom.morphism_count())
        .map(|m| {
            let beta = from.forget.morphism(m);
            let (s, t) = (objects[dom.source(m)], objects[dom.target(m)]);
            *cod.hom(s, t)
                .iter()
                .find(|&&n| to.forget.morphism(n) == beta)
                .expect("image morphism exists")
        })
        .collect();
    Functor::new(dom.clone(), cod.clone(), objects, morphisms)
}

/// The system `a ↦ a↑f`, `γ ↦ γ↑f` indexed by the codomain of `f`.
pub fn under_system(f: &Functor) -> Result<(CategorySystem, Vec<CommaCategory>), CategoryError> {
    let target = f.codomain();
    let unders: Vec<CommaCategory> =
        (0..target.object_count()).map(|a| under_category(a, f)).collect::<Result<_, _>>()?;
    let transitions = (0..target.morphism_count())
        .map(|g| under_functor_between(g, f, &unders[target.target(g)], &unders[target.source(g)]))
        .collect::<Result<Vec<_>, _>>()?;
    let fibers = unders.iter().map(|u| u.category.clone()).collect();
    let system = CategorySystem::new(target.clone(), fibers, transitions)?;
    Ok((system, unders))
}

/// Connected components of a category.
#[derive(Clone, Debug)]
pub struct Components {
    pub category: Arc<FiniteCategory>,
    pub quotient: Functor,
    /// component index of each object
    pub component_of: Vec<usize>,
}

/// `π0(C)`: the discrete category of connected components and the quotient
/// functor.
pub fn pi0(c: &Arc<FiniteCategory>) -> Components {
    let n = c.object_count();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        let mut y = x;
        while parent[y] != r {
            let next = parent[y];
            parent[y] = r;
            y = next;
        }
        r
    }
    for m in 0..c.morphism_count() {
        let (a, b) = (find(&mut parent, c.source(m)), find(&mut parent, c.target(m)));
        if a != b {
            parent[a.max(b)] = a.min(b);
        }
    }
    let mut index = vec![usize::MAX; n];
    let mut component_of = vec![0; n];
    let mut labels = Vec::new();
    for o in 0..n {
        let r = find(&mut parent, o);
        if index[r] == usize::MAX {
            index[r] = labels.len();
            labels.push(format!("[{}]", c.object_label(r)));
        }
        component_of[o] = index[r];
    }
    let category = Arc::new(FiniteCategory::discrete(&labels));
    let morphisms = (0..c.morphism_count()).map(|m| category.identity(component_of[c.source(m)])).collect();
    let quotient = Functor::new(c.clone(), category.clone(), component_of.clone(), morphisms)
        .expect("quotient to components is a functor");
    Components { category, quotient, component_of }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::find_isomorphism;

    fn interval() -> Arc<FiniteCategory> {
        Arc::new(FiniteCategory::ordinal(1))
    }

    #[test]
    fn under_terminal_object_is_trivial() {
        let c = interval();
        let u = under_category(1, &Functor::identity(&c)).unwrap();
        assert_eq!(u.category.object_count(), 1);
        assert_eq!(u.category.morphism_count(), 1);
    }

    #[test]
    fn under_initial_object_is_interval() {
        let c = interval();
        let u = under_category(0, &Functor::identity(&c)).unwrap();
        assert_eq!(u.category.object_count(), 2);
        assert_eq!(u.category.morphism_count(), 3);
        assert!(find_isomorphism(&u.category, &c).is_some());
    }

    #[test]
    fn under_a_selecting_functor() {
        let c = interval();
        let pt = Arc::new(FiniteCategory::ordinal(0));
        let sel = Functor::between_thin(&pt, &c, vec![1]).unwrap();
        let u = under_category(0, &sel).unwrap();
        assert_eq!(u.objects, vec![(0, c.hom(0, 1)[0])]);
    }

    #[test]
    fn over_categories() {
        let c = interval();
        let o = over_category(&Functor::identity(&c), 1).unwrap();
        assert!(find_isomorphism(&o.category, &c).is_some());
        let pt = Arc::new(FiniteCategory::ordinal(0));
        let o = over_category(&Functor::identity(&pt), 0).unwrap();
        assert_eq!((o.category.object_count(), o.category.morphism_count()), (1, 1));
        let sel0 = Functor::between_thin(&pt, &c, vec![0]).unwrap();
        assert_eq!(over_category(&sel0, 1).unwrap().category.object_count(), 1);
    }

    #[test]
    fn under_functor_of_arrow() {
        let c = interval();
        let id = Functor::identity(&c);
        let gamma = c.hom(0, 1)[0];
        let g = under_functor_of_morphism(gamma, &id).unwrap();
        assert_eq!(g.domain().object_count(), 1);
        let u0 = under_category(0, &id).unwrap();
        assert_eq!(u0.objects[g.object(0)], (1, gamma));
        let ident = under_functor_of_morphism(c.identity(0), &id).unwrap();
        assert_eq!(ident, Functor::identity(&u0.category));
    }

    #[test]
    fn components() {
        let zz = Arc::new(FiniteCategory::poset(&["a", "b", "c"], |i, j| i == j || (i, j) == (0, 1) || (i, j) == (2, 1)).unwrap());
        assert_eq!(pi0(&zz).category.object_count(), 1);
        assert_eq!(pi0(&interval()).category.object_count(), 1);
        let d = Arc::new(FiniteCategory::discrete(&["x", "y", "z"]));
        assert_eq!(pi0(&d).category.object_count(), 3);
        assert_eq!(pi0(&Arc::new(FiniteCategory::empty())).category.object_count(), 0);
    }
}
