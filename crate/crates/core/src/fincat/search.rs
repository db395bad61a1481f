//! Exhaustive searches over functors and natural transformations. These are
//! backtracking enumerations intended for categories with a handful of
//! objects.

use std::collections::{HashMap, VecDeque};
use std::sync::Arc;

use super::{FiniteCategory, Functor, Mor, NaturalTransformation, Ob};

/// Default zig-zag length for [`homotopic_within`].
pub const DEFAULT_HOMOTOPY_BUDGET: usize = 4;

struct FunctorSearch<'a> {
    dom: &'a FiniteCategory,
    cod: &'a FiniteCategory,
    bijective: bool,
    objects: Vec<Option<Ob>>,
    morphisms: Vec<Option<Mor>>,
    used_objects: Vec<bool>,
    used_morphisms: Vec<bool>,
    found: Vec<(Vec<Ob>, Vec<Mor>)>,
    limit: usize,
}

impl FunctorSearch<'_> {
    fn objects_step(&mut self, o: usize) {
        if self.found.len() >= self.limit {
            return;
        }
        if o == self.dom.object_count() {
            self.morphisms_step(0);
            return;
        }
        for t in 0..self.cod.object_count() {
            if self.bijective && self.used_objects[t] {
                continue;
            }
            // loops must land on objects with at least as many endomorphisms
            if self.bijective && self.cod.hom(t, t).len() != self.dom.hom(o, o).len() {
                continue;
            }
            self.objects[o] = Some(t);
            self.used_objects[t] = true;
            if self.objects_consistent(o) {
                self.objects_step(o + 1);
            }
            self.used_objects[t] = false;
            self.objects[o] = None;
        }
    }

    fn objects_consistent(&self, o: usize) -> bool {
        let fo = self.objects[o].unwrap();
        (0..=o).all(|p| {
            let fp = self.objects[p].unwrap();
            let ok = |a: Ob, b: Ob, fa: Ob, fb: Ob| {
                let (d, c) = (self.dom.hom(a, b).len(), self.cod.hom(fa, fb).len());
                if self.bijective {
                    d == c
                } else {
                    d == 0 || c > 0
                }
            };
            ok(o, p, fo, fp) && ok(p, o, fp, fo)
        })
    }

    fn morphisms_step(&mut self, m: usize) {
        if self.found.len() >= self.limit {
            return;
        }
        if m == self.dom.morphism_count() {
            let objects = self.objects.iter().map(|o| o.unwrap()).collect();
            let morphisms = self.morphisms.iter().map(|m| m.unwrap()).collect();
            self.found.push((objects, morphisms));
            return;
        }
        let (s, t) = (self.objects[self.dom.source(m)].unwrap(), self.objects[self.dom.target(m)].unwrap());
        let candidates: Vec<Mor> = if self.dom.is_identity(m) {
            vec![self.cod.identity(s)]
        } else {
            self.cod.hom(s, t).to_vec()
        };
        for c in candidates {
            if self.bijective && self.used_morphisms[c] {
                continue;
            }
            self.morphisms[m] = Some(c);
            self.used_morphisms[c] = true;
            if self.composition_consistent(m) {
                self.morphisms_step(m + 1);
            }
            self.used_morphisms[c] = false;
            self.morphisms[m] = None;
        }
    }

    /// Checks every composable pair involving `m` whose factors and
    /// composite are already assigned.
    fn composition_consistent(&self, m: Mor) -> bool {
        let d = self.dom;
        let check = |g: Mor, f: Mor| -> bool {
            let h = d.compose(g, f);
            match (self.morphisms[g], self.morphisms[f], self.morphisms[h]) {
                (Some(fg), Some(ff), Some(fh)) => self.cod.compose(fg, ff) == fh,
                _ => true,
            }
        };
        for &f in d.incoming(d.source(m)) {
            if !check(m, f) {
                return false;
            }
        }
        for &g in d.outgoing(d.target(m)) {
            if !check(g, m) {
                return false;
            }
        }
        // `m` may itself be the composite of assigned factors
        for g in 0..m {
            for &f in d.incoming(d.source(g)) {
                if f <= m && d.compose(g, f) == m && !check(g, f) {
                    return false;
                }
            }
        }
        true
    }
}

fn search(dom: &Arc<FiniteCategory>, cod: &Arc<FiniteCategory>, bijective: bool, limit: usize) -> Vec<Functor> {
    let mut s = FunctorSearch {
        dom,
        cod,
        bijective,
        objects: vec![None; dom.object_count()],
        morphisms: vec![None; dom.morphism_count()],
        used_objects: vec![false; cod.object_count()],
        used_morphisms: vec![false; cod.morphism_count()],
        found: Vec::new(),
        limit,
    };
    s.objects_step(0);
    s.found
        .into_iter()
        .map(|(o, m)| Functor::new(dom.clone(), cod.clone(), o, m).expect("search produces functors"))
        .collect()
}

/// Every functor `dom → cod`.
pub fn enumerate_functors(dom: &Arc<FiniteCategory>, cod: &Arc<FiniteCategory>) -> Vec<Functor> {
    search(dom, cod, false, usize::MAX)
}

/// An isomorphism `a → b`, if one exists.
pub fn find_isomorphism(a: &Arc<FiniteCategory>, b: &Arc<FiniteCategory>) -> Option<Functor> {
    if a.object_count() != b.object_count() || a.morphism_count() != b.morphism_count() {
        return None;
    }
    search(a, b, true, 1).into_iter().next()
}

/// Every natural transformation `f ⇒ g`.
pub fn enumerate_nat_trans(f: &Functor, g: &Functor) -> Vec<NaturalTransformation> {
    if !f.is_parallel(g) {
        return Vec::new();
    }
    let dom = f.domain();
    let cod = f.codomain();
    let n = dom.object_count();
    let mut out = Vec::new();
    let mut components: Vec<Mor> = vec![0; n];
    fn rec(
        b: usize,
        f: &Functor,
        g: &Functor,
        components: &mut Vec<Mor>,
        out: &mut Vec<Vec<Mor>>,
    ) {
        let dom = f.domain();
        let cod = f.codomain();
        if b == dom.object_count() {
            out.push(components.clone());
            return;
        }
        for &c in cod.hom(f.object(b), g.object(b)) {
            components[b] = c;
            let ok = (0..dom.morphism_count()).all(|beta| {
                let (s, t) = (dom.source(beta), dom.target(beta));
                s > b || t > b || (s != b && t != b) || NaturalTransformation::square_commutes_for(f, g, components, beta)
            });
            if ok {
                rec(b + 1, f, g, components, out);
            }
        }
    }
    let _ = cod;
    let mut raw = Vec::new();
    rec(0, f, g, &mut components, &mut raw);
    for c in raw {
        out.push(NaturalTransformation::new(f.clone(), g.clone(), c).expect("search produces natural transformations"));
    }
    out
}

/// Orientation of the step between `h_i` and `h_{i+1}` in a zig-zag.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// `h_i ⇒ h_{i+1}`
    Forward,
    /// `h_i ⇐ h_{i+1}`
    Backward,
}

/// One step of a zig-zag; `functor` is the functor reached by the step.
#[derive(Clone, Debug)]
pub struct ZigZagStep {
    pub direction: Direction,
    pub functor: Functor,
    pub transformation: NaturalTransformation,
}

/// Breadth-first search for a zig-zag of natural transformations from `f`
/// to `g` of length at most `budget`, over all functors between the common
/// domain and codomain. A `None` result only means that no zig-zag within
/// the budget exists; it does not prove that `f` and `g` are not homotopic.
pub fn homotopic_within(f: &Functor, g: &Functor, budget: usize) -> Option<Vec<ZigZagStep>> {
    if !f.is_parallel(g) {
        return None;
    }
    if f == g {
        return Some(Vec::new());
    }
    if budget == 0 {
        return None;
    }
    let all = enumerate_functors(f.domain(), f.codomain());
    let key = |h: &Functor| (h.object_map().to_vec(), h.morphism_map().to_vec());
    let index: HashMap<(Vec<Ob>, Vec<Mor>), usize> = all.iter().enumerate().map(|(i, h)| (key(h), i)).collect();
    let start = index[&key(f)];
    let goal = index[&key(g)];
    let mut prev: Vec<Option<(usize, ZigZagStep)>> = vec![None; all.len()];
    let mut depth = vec![usize::MAX; all.len()];
    depth[start] = 0;
    let mut queue = VecDeque::from([start]);
    while let Some(i) = queue.pop_front() {
        if i == goal {
            break;
        }
        if depth[i] == budget {
            continue;
        }
        for (j, h) in all.iter().enumerate() {
            if depth[j] != usize::MAX {
                continue;
            }
            let step = if let Some(t) = enumerate_nat_trans(&all[i], h).into_iter().next() {
                Some((Direction::Forward, t))
            } else {
                enumerate_nat_trans(h, &all[i]).into_iter().next().map(|t| (Direction::Backward, t))
            };
            if let Some((direction, transformation)) = step {
                depth[j] = depth[i] + 1;
                prev[j] = Some((i, ZigZagStep { direction, functor: h.clone(), transformation }));
                queue.push_back(j);
            }
        }
    }
    if depth[goal] == usize::MAX {
        return None;
    }
    let mut steps = Vec::new();
    let mut at = goal;
    while let Some((p, step)) = prev[at].take() {
        steps.push(step);
        at = p;
    }
    steps.reverse();
    Some(steps)
}
