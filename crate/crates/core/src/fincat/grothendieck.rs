use std::collections::HashMap;
use std::sync::Arc;

use super::category::identity_label;
use super::{under_system, CategoryError, CategorySystem, FiniteCategory, Functor, Mor, NaturalTransformation, Ob};

/// The Grothendieck construction of a system, with its projection and the
/// standard inclusions of the fibres.
#[derive(Clone, Debug)]
pub struct Grothendieck {
    pub category: Arc<FiniteCategory>,
    pub projection: Functor,
    /// `inclusions[c] : F_c → Gr`, `x ↦ (c, x)`
    pub inclusions: Vec<Functor>,
    /// `(c, x)` per object
    pub objects: Vec<(Ob, Ob)>,
    /// `(α, β)` per morphism
    pub morphisms: Vec<(Mor, Mor)>,
}

impl Grothendieck {
    pub fn object_of(&self, c: Ob, x: Ob) -> Option<Ob> {
        self.objects.iter().position(|&p| p == (c, x))
    }

    /// The morphism `(α, β)` into the object `target`.
    pub fn morphism_of(&self, alpha: Mor, beta: Mor, target: Ob) -> Option<Mor> {
        (0..self.morphisms.len()).find(|&m| self.morphisms[m] == (alpha, beta) && self.category.target(m) == target)
    }
}

/// Objects `(c, x)` with `x` in `F_c`; a morphism `(c1,x1) → (c0,x0)` is a
/// pair `(α : c1 → c0, β : x1 → F_α(x0))`, and
/// `(α, β)(α', β') = (αα', F_{α'}(β) β')`.
pub fn grothendieck(system: &CategorySystem) -> Result<Grothendieck, CategoryError> {
    let index = system.index();
    let mut objects = Vec::new();
    for c in 0..index.object_count() {
        for x in 0..system.fiber(c).object_count() {
            objects.push((c, x));
        }
    }
    let position: HashMap<(Ob, Ob), usize> = objects.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let labels: Vec<String> = objects
        .iter()
        .map(|&(c, x)| format!("({},{})", index.object_label(c), system.fiber(c).object_label(x)))
        .collect();
    let mut morphisms = Vec::new();
    let mut identities = vec![(0, 0, 0); objects.len()];
    for (i1, &(c1, x1)) in objects.iter().enumerate() {
        let fiber = system.fiber(c1);
        for &alpha in index.outgoing(c1) {
            let c0 = index.target(alpha);
            let t = system.transition(alpha);
            for x0 in 0..system.fiber(c0).object_count() {
                let i0 = position[&(c0, x0)];
                for &beta in fiber.hom(x1, t.object(x0)) {
                    let label = if index.is_identity(alpha) && fiber.is_identity(beta) {
                        identities[i1] = (alpha, beta, x0);
                        identity_label(&labels[i1])
                    } else if t.is_injective_on_objects() {
                        format!("({},{})", index.label(alpha), fiber.label(beta))
                    } else {
                        format!("({},{}):{}", index.label(alpha), fiber.label(beta), labels[i0])
                    };
                    morphisms.push(((alpha, beta, x0), label, i1, i0));
                }
            }
        }
    }
    let category = FiniteCategory::from_parts(labels, morphisms.clone(), identities, |g, f| {
        let (alpha, beta, x0) = *g;
        let (alpha2, beta2, _) = *f;
        let c2 = index.source(alpha2);
        let moved = system.transition(alpha2).morphism(beta);
        Some((index.try_compose(alpha, alpha2)?, system.fiber(c2).try_compose(moved, beta2)?, x0))
    })?;
    let category = Arc::new(category);
    let pairs: Vec<(Mor, Mor)> = morphisms.iter().map(|(k, _, _, _)| (k.0, k.1)).collect();
    let pair_index: HashMap<(Mor, Mor, usize), Mor> =
        morphisms.iter().enumerate().map(|(i, (k, _, s, _))| ((k.0, k.1, *s), i)).collect();
    let projection = Functor::new(
        category.clone(),
        index.clone(),
        objects.iter().map(|&(c, _)| c).collect(),
        pairs.iter().map(|&(a, _)| a).collect(),
    )?;
    let mut inclusions = Vec::new();
    for c in 0..index.object_count() {
        let fiber = system.fiber(c);
        let obs: Vec<Ob> = (0..fiber.object_count()).map(|x| position[&(c, x)]).collect();
        let mors = (0..fiber.morphism_count())
            .map(|b| pair_index[&(index.identity(c), b, obs[fiber.source(b)])])
            .collect();
        inclusions.push(Functor::new(fiber.clone(), category.clone(), obs, mors)?);
    }
    Ok(Grothendieck { category, projection, inclusions, objects, morphisms: pairs })
}

/// `Gr_𝒜(−↑f)` with `π̂ : Gr → ℬ`, the section `f̂ : ℬ → Gr`,
/// `b ↦ (f(b), (b, id))`, and the transformation `id ⇒ f̂π̂` whose component
/// at `(a, (b, α))` is the morphism `(α, id_b)`.
#[derive(Clone, Debug)]
pub struct UnderGrothendieck {
    pub gr: Grothendieck,
    pub pi_hat: Functor,
    pub f_hat: Functor,
    pub unit: NaturalTransformation,
}

pub fn gr_of_under_system(f: &Functor) -> Result<UnderGrothendieck, CategoryError> {
    let (system, unders) = under_system(f)?;
    let gr = grothendieck(&system)?;
    let base = f.domain();
    let target = f.codomain();
    let cat = gr.category.clone();
    let pi_hat = {
        let objects = gr.objects.iter().map(|&(a, x)| unders[a].objects[x].0).collect();
        let morphisms = gr
            .morphisms
            .iter()
            .zip(0..)
            .map(|(&(_, beta), m)| unders[gr.objects[cat.source(m)].0].forget.morphism(beta))
            .collect();
        Functor::new(cat.clone(), base.clone(), objects, morphisms)?
    };
    let f_hat = {
        let objects: Vec<Ob> = (0..base.object_count())
            .map(|b| {
                let a = f.object(b);
                let x = unders[a].object_of(b, target.identity(a)).expect("identity object");
                gr.object_of(a, x).expect("object of Gr")
            })
            .collect();
        let morphisms = (0..base.morphism_count())
            .map(|beta| find_over(&cat, &pi_hat, objects[base.source(beta)], objects[base.target(beta)], beta, |m| {
                gr.morphisms[m].0 == f.morphism(beta)
            }))
            .collect();
        Functor::new(base.clone(), cat.clone(), objects, morphisms)?
    };
    let composite = f_hat.after(&pi_hat)?;
    let components = (0..cat.object_count())
        .map(|o| {
            let (_, x) = gr.objects[o];
            let (b, alpha) = unders[gr.objects[o].0].objects[x];
            find_over(&cat, &pi_hat, o, composite.object(o), base.identity(b), |m| gr.morphisms[m].0 == alpha)
        })
        .collect();
    let unit = NaturalTransformation::new(Functor::identity(&cat), composite, components)?;
    Ok(UnderGrothendieck { gr, pi_hat, f_hat, unit })
}

fn find_over(
    cat: &FiniteCategory,
    pi_hat: &Functor,
    s: Ob,
    t: Ob,
    beta: Mor,
    extra: impl Fn(Mor) -> bool,
) -> Mor {
    *cat.hom(s, t)
        .iter()
        .find(|&&m| pi_hat.morphism(m) == beta && extra(m))
        .expect("morphism of Gr exists")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::find_isomorphism;

    #[test]
    fn trivial_index_gives_fibre() {
        let g = Arc::new(FiniteCategory::one_object("*", &["e", "t"], 0, &[vec![0, 1], vec![1, 0]]).unwrap());
        let s = CategorySystem::constant(Arc::new(FiniteCategory::ordinal(0)), g.clone());
        let gr = grothendieck(&s).unwrap();
        assert!(find_isomorphism(&gr.category, &g).is_some());
    }

    #[test]
    fn constant_point_over_interval() {
        let one = Arc::new(FiniteCategory::ordinal(1));
        let s = CategorySystem::constant(one.clone(), Arc::new(FiniteCategory::ordinal(0)));
        let gr = grothendieck(&s).unwrap();
        assert!(find_isomorphism(&gr.category, &one).is_some());
    }

    #[test]
    fn under_system_of_identity() {
        let one = Arc::new(FiniteCategory::ordinal(1));
        let u = gr_of_under_system(&Functor::identity(&one)).unwrap();
        assert_eq!(u.gr.category.object_count(), 3);
        assert_eq!(u.pi_hat.after(&u.f_hat).unwrap(), Functor::identity(&one));
        assert!(u.f_hat.is_injective_on_objects());
    }

    #[test]
    fn collapsing_transition_keeps_parallel_morphisms() {
        // [1] with fibres Z/2 over 0 and [1] over 1, both objects of [1] sent to *
        let one = Arc::new(FiniteCategory::ordinal(1));
        let g = Arc::new(FiniteCategory::one_object("*", &["e", "t"], 0, &[vec![0, 1], vec![1, 0]]).unwrap());
        let arrow = one.hom(0, 1)[0];
        let transitions = (0..one.morphism_count())
            .map(|m| match (m == arrow, one.source(m)) {
                (true, _) => Functor::constant(&one, &g, 0),
                (false, 0) => Functor::identity(&g),
                _ => Functor::identity(&one),
            })
            .collect();
        let s = CategorySystem::new(one.clone(), vec![g.clone(), one.clone()], transitions).unwrap();
        let gr = grothendieck(&s).unwrap();
        let star = gr.object_of(0, 0).unwrap();
        for x in 0..2 {
            assert_eq!(gr.category.hom(star, gr.object_of(1, x).unwrap()).len(), 2);
        }
        assert_eq!(gr.category.morphism_count(), 2 + 3 + 4);
        gr.category.verify_laws().unwrap();
    }

    #[test]
    fn under_system_of_empty_functor() {
        let e = Arc::new(FiniteCategory::empty());
        let one = Arc::new(FiniteCategory::ordinal(1));
        let f = Functor::new(e.clone(), one, vec![], vec![]).unwrap();
        let u = gr_of_under_system(&f).unwrap();
        assert_eq!(u.gr.category.object_count(), 0);
        assert_eq!(u.f_hat.object_map().len(), 0);
    }
}
