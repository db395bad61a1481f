use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;

use thiserror::Error;

use super::{Mor, Ob};
use crate::labels;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CategoryError {
    #[error("duplicate object label `{0}`")]
    DuplicateObject(String),
    #[error("duplicate morphism label `{0}`")]
    DuplicateMorphism(String),
    #[error("invalid label `{0}`")]
    InvalidLabel(String),
    #[error("unknown object `{0}`")]
    UnknownObject(String),
    #[error("unknown morphism `{0}`")]
    UnknownMorphism(String),
    #[error("object `{0}` has no identity morphism")]
    MissingIdentity(String),
    #[error("declared identity `{morphism}` of `{object}` is not an endomorphism of it")]
    IdentityNotEndomorphism { object: String, morphism: String },
    #[error("composite `{g} . {f}` is not defined")]
    MissingComposite { g: String, f: String },
    #[error("composite `{g} . {f}` given although `{f}` and `{g}` are not composable")]
    NotComposable { g: String, f: String },
    #[error("composite `{g} . {f}` given twice with different values `{first}` and `{second}`")]
    ConflictingComposite { g: String, f: String, first: String, second: String },
    #[error("composite `{g} . {f} = {h}` has the wrong source or target")]
    IllTypedComposite { g: String, f: String, h: String },
    #[error("associativity fails on the triple ({h}, {g}, {f})")]
    Associativity { h: String, g: String, f: String },
    #[error("unit law fails for identity `{identity}` and morphism `{morphism}`")]
    UnitLaw { identity: String, morphism: String },
    #[error("functor law violated: {0}")]
    Functor(String),
    #[error("naturality fails at morphism `{0}`")]
    Naturality(String),
    #[error("functors are not parallel")]
    NotParallel,
    #[error("system of categories violates its laws: {0}")]
    System(String),
}

/// A morphism record: label, source object and target object.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Morphism {
    pub label: String,
    pub source: Ob,
    pub target: Ob,
}

/// Unvalidated category tables, as read from a document.
///
/// With `implicit_identities` set (the default for the text format) every
/// object receives an identity `id_<object>` and compositions involving an
/// identity are filled in automatically. Otherwise `identities` must name
/// one declared endomorphism per object and `compose` must list every
/// composable pair.
#[derive(Clone, Debug, Default)]
pub struct RawCategory {
    pub objects: Vec<String>,
    /// `(name, source, target)`
    pub morphisms: Vec<(String, String, String)>,
    /// `(object, identity morphism)`; only read when identities are explicit.
    pub identities: Vec<(String, String)>,
    /// `(g, f, h)` meaning `g . f = h`
    pub compose: Vec<(String, String, String)>,
    pub implicit_identities: bool,
}

/// A validated finite category with a total composition table.
#[derive(Clone)]
pub struct FiniteCategory {
    objects: Vec<String>,
    morphisms: Vec<Morphism>,
    identities: Vec<Mor>,
    incoming: Vec<Vec<Mor>>,
    outgoing: Vec<Vec<Mor>>,
    /// position of a morphism inside `incoming[target]`
    slot: Vec<usize>,
    /// `table[g][slot[f]] = g ∘ f` for every `f` in `incoming[source(g)]`
    table: Vec<Vec<Mor>>,
    homs: Vec<Vec<Vec<Mor>>>,
    object_index: HashMap<String, Ob>,
    morphism_index: HashMap<String, Mor>,
}

impl PartialEq for FiniteCategory {
    fn eq(&self, other: &Self) -> bool {
        self.objects == other.objects
            && self.morphisms == other.morphisms
            && self.identities == other.identities
            && self.table == other.table
    }
}

impl Eq for FiniteCategory {}

impl fmt::Debug for FiniteCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteCategory")
            .field("objects", &self.objects.len())
            .field("morphisms", &self.morphisms.len())
            .finish()
    }
}

pub(crate) fn identity_label(object: &str) -> String {
    format!("id_{object}")
}

impl FiniteCategory {
    /// Builds a category from keyed morphisms and a composition rule.
    ///
    /// `morphisms` must contain the identities (named by `identities`, one per
    /// object). `compose(g, f)` is queried for every composable pair and must
    /// return a key of a listed morphism. Labels are made unique by priming;
    /// identity labels keep priority. All category laws are checked.
    pub fn from_parts<K, F>(
        objects: Vec<String>,
        morphisms: Vec<(K, String, Ob, Ob)>,
        identities: Vec<K>,
        mut compose: F,
    ) -> Result<Self, CategoryError>
    where
        K: Eq + Hash + Clone,
        F: FnMut(&K, &K) -> Option<K>,
    {
        let mut objects = objects;
        labels::uniquify(&mut objects);

        let key_index: HashMap<K, Mor> =
            morphisms.iter().enumerate().map(|(i, (k, ..))| (k.clone(), i)).collect();
        if key_index.len() != morphisms.len() {
            return Err(CategoryError::DuplicateMorphism("<constructed key>".into()));
        }
        let mut identity_ids = Vec::with_capacity(objects.len());
        for (ob, key) in identities.iter().enumerate() {
            let id = *key_index
                .get(key)
                .ok_or_else(|| CategoryError::MissingIdentity(objects[ob].clone()))?;
            if morphisms[id].2 != ob || morphisms[id].3 != ob {
                return Err(CategoryError::IdentityNotEndomorphism {
                    object: objects[ob].clone(),
                    morphism: morphisms[id].1.clone(),
                });
            }
            identity_ids.push(id);
        }
        if identity_ids.len() != objects.len() {
            return Err(CategoryError::MissingIdentity(
                objects.get(identity_ids.len()).cloned().unwrap_or_default(),
            ));
        }

        // identity labels first, then the rest primed against them
        let mut labels_out: Vec<String> = morphisms.iter().map(|m| m.1.clone()).collect();
        let mut seen = std::collections::HashSet::new();
        for &id in &identity_ids {
            while !seen.insert(labels_out[id].clone()) {
                labels_out[id].push('\'');
            }
        }
        let is_id: Vec<bool> = {
            let mut v = vec![false; morphisms.len()];
            for &id in &identity_ids {
                v[id] = true;
            }
            v
        };
        for (i, label) in labels_out.iter_mut().enumerate() {
            if is_id[i] {
                continue;
            }
            while !seen.insert(label.clone()) {
                label.push('\'');
            }
        }

        let records: Vec<Morphism> = morphisms
            .iter()
            .zip(labels_out)
            .map(|((_, _, s, t), label)| Morphism { label, source: *s, target: *t })
            .collect();
        for m in &records {
            if m.source >= objects.len() || m.target >= objects.len() {
                return Err(CategoryError::UnknownObject(format!("#{}", m.source.max(m.target))));
            }
        }

        let n_obj = objects.len();
        let mut incoming = vec![Vec::new(); n_obj];
        let mut outgoing = vec![Vec::new(); n_obj];
        let mut slot = vec![0; records.len()];
        let mut homs = vec![vec![Vec::new(); n_obj]; n_obj];
        for (i, m) in records.iter().enumerate() {
            slot[i] = incoming[m.target].len();
            incoming[m.target].push(i);
            outgoing[m.source].push(i);
            homs[m.source][m.target].push(i);
        }

        let mut table = Vec::with_capacity(records.len());
        for (g, gm) in records.iter().enumerate() {
            let mut row = Vec::with_capacity(incoming[gm.source].len());
            for &f in &incoming[gm.source] {
                let key = compose(&morphisms[g].0, &morphisms[f].0).ok_or_else(|| {
                    CategoryError::MissingComposite {
                        g: records[g].label.clone(),
                        f: records[f].label.clone(),
                    }
                })?;
                let h = *key_index.get(&key).ok_or_else(|| CategoryError::MissingComposite {
                    g: records[g].label.clone(),
                    f: records[f].label.clone(),
                })?;
                if records[h].source != records[f].source || records[h].target != gm.target {
                    return Err(CategoryError::IllTypedComposite {
                        g: records[g].label.clone(),
                        f: records[f].label.clone(),
                        h: records[h].label.clone(),
                    });
                }
                row.push(h);
            }
            table.push(row);
        }

        let object_index = objects.iter().enumerate().map(|(i, l)| (l.clone(), i)).collect();
        let morphism_index = records.iter().enumerate().map(|(i, m)| (m.label.clone(), i)).collect();
        let category = FiniteCategory {
            objects,
            morphisms: records,
            identities: identity_ids,
            incoming,
            outgoing,
            slot,
            table,
            homs,
            object_index,
            morphism_index,
        };
        category.check_laws()?;
        Ok(category)
    }

    /// Validates raw tables, reporting the first violated law with a witness.
    pub fn validate(raw: &RawCategory) -> Result<Self, CategoryError> {
        let mut object_index = HashMap::new();
        for (i, o) in raw.objects.iter().enumerate() {
            if !labels::is_valid_label(o) {
                return Err(CategoryError::InvalidLabel(o.clone()));
            }
            if object_index.insert(o.clone(), i).is_some() {
                return Err(CategoryError::DuplicateObject(o.clone()));
            }
        }
        let lookup_ob = |name: &str| {
            object_index.get(name).copied().ok_or_else(|| CategoryError::UnknownObject(name.to_string()))
        };

        let mut morphisms: Vec<(String, String, Ob, Ob)> = Vec::new();
        let mut identities: Vec<String> = Vec::with_capacity(raw.objects.len());
        if raw.implicit_identities {
            for o in &raw.objects {
                let id = identity_label(o);
                morphisms.push((id.clone(), id.clone(), lookup_ob(o)?, lookup_ob(o)?));
                identities.push(id);
            }
        }
        for (name, s, t) in &raw.morphisms {
            if !labels::is_valid_label(name) {
                return Err(CategoryError::InvalidLabel(name.clone()));
            }
            morphisms.push((name.clone(), name.clone(), lookup_ob(s)?, lookup_ob(t)?));
        }
        let mut names = HashMap::new();
        for (i, m) in morphisms.iter().enumerate() {
            if names.insert(m.0.clone(), i).is_some() {
                return Err(CategoryError::DuplicateMorphism(m.0.clone()));
            }
        }
        if !raw.implicit_identities {
            let declared: HashMap<&str, &str> =
                raw.identities.iter().map(|(o, m)| (o.as_str(), m.as_str())).collect();
            for o in &raw.objects {
                let m = declared.get(o.as_str()).ok_or_else(|| CategoryError::MissingIdentity(o.clone()))?;
                let idx = *names.get(*m).ok_or_else(|| CategoryError::UnknownMorphism(m.to_string()))?;
                let ob = lookup_ob(o)?;
                if morphisms[idx].2 != ob || morphisms[idx].3 != ob {
                    return Err(CategoryError::IdentityNotEndomorphism {
                        object: o.clone(),
                        morphism: m.to_string(),
                    });
                }
                identities.push(m.to_string());
            }
        }
        let identity_set: std::collections::HashSet<&str> = identities.iter().map(|s| s.as_str()).collect();

        let mut table: HashMap<(String, String), String> = HashMap::new();
        for (g, f, h) in &raw.compose {
            let gi = *names.get(g).ok_or_else(|| CategoryError::UnknownMorphism(g.clone()))?;
            let fi = *names.get(f).ok_or_else(|| CategoryError::UnknownMorphism(f.clone()))?;
            if !names.contains_key(h) {
                return Err(CategoryError::UnknownMorphism(h.clone()));
            }
            if morphisms[gi].2 != morphisms[fi].3 {
                return Err(CategoryError::NotComposable { g: g.clone(), f: f.clone() });
            }
            if raw.implicit_identities && (identity_set.contains(g.as_str()) || identity_set.contains(f.as_str())) {
                let expected = if identity_set.contains(g.as_str()) { f } else { g };
                if expected != h {
                    return Err(CategoryError::UnitLaw {
                        identity: if identity_set.contains(g.as_str()) { g.clone() } else { f.clone() },
                        morphism: expected.clone(),
                    });
                }
            }
            if let Some(prev) = table.insert((g.clone(), f.clone()), h.clone()) {
                if &prev != h {
                    return Err(CategoryError::ConflictingComposite {
                        g: g.clone(),
                        f: f.clone(),
                        first: prev,
                        second: h.clone(),
                    });
                }
            }
        }
        let implicit = raw.implicit_identities;
        FiniteCategory::from_parts(raw.objects.clone(), morphisms, identities.clone(), |g, f| {
            if implicit {
                if identity_set.contains(g.as_str()) {
                    return Some(f.clone());
                }
                if identity_set.contains(f.as_str()) {
                    return Some(g.clone());
                }
            }
            table.get(&(g.clone(), f.clone())).cloned()
        })
    }

    fn check_laws(&self) -> Result<(), CategoryError> {
        for (m, rec) in self.morphisms.iter().enumerate() {
            let left = self.compose(self.identities[rec.target], m);
            let right = self.compose(m, self.identities[rec.source]);
            if left != m {
                return Err(CategoryError::UnitLaw {
                    identity: self.label(self.identities[rec.target]).to_string(),
                    morphism: rec.label.clone(),
                });
            }
            if right != m {
                return Err(CategoryError::UnitLaw {
                    identity: self.label(self.identities[rec.source]).to_string(),
                    morphism: rec.label.clone(),
                });
            }
        }
        for g in 0..self.morphisms.len() {
            let (gs, gt) = (self.morphisms[g].source, self.morphisms[g].target);
            for &f in &self.incoming[gs] {
                let gf = self.compose(g, f);
                for &h in &self.outgoing[gt] {
                    let hg = self.compose(h, g);
                    if self.compose(h, gf) != self.compose(hg, f) {
                        return Err(CategoryError::Associativity {
                            h: self.label(h).to_string(),
                            g: self.label(g).to_string(),
                            f: self.label(f).to_string(),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// The empty category.
    pub fn empty() -> Self {
        Self::from_parts::<usize, _>(Vec::new(), Vec::new(), Vec::new(), |_, _| None)
            .expect("empty category is valid")
    }

    /// A discrete category: only identities.
    pub fn discrete<S: AsRef<str>>(labels: &[S]) -> Self {
        let objects: Vec<String> = labels.iter().map(|s| s.as_ref().to_string()).collect();
        let morphisms = (0..objects.len()).map(|i| (i, identity_label(&objects[i]), i, i)).collect();
        Self::from_parts(objects, morphisms, (0..labels.len()).collect(), |g, f| (g == f).then_some(*g))
            .expect("discrete category is valid")
    }

    /// A finite poset as a category. `leq(i, j)` must be a partial order; an
    /// arrow `i -> j` exists iff `i ≤ j`, labelled `i<j`.
    pub fn poset<S: AsRef<str>>(labels: &[S], leq: impl Fn(usize, usize) -> bool) -> Result<Self, CategoryError> {
        let objects: Vec<String> = labels.iter().map(|s| s.as_ref().to_string()).collect();
        let n = objects.len();
        let mut morphisms = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if leq(i, j) {
                    let label = if i == j {
                        identity_label(&objects[i])
                    } else {
                        format!("{}<{}", objects[i], objects[j])
                    };
                    morphisms.push(((i, j), label, i, j));
                }
            }
        }
        let identities = (0..n).map(|i| (i, i)).collect();
        Self::from_parts(objects, morphisms, identities, |g, f| {
            (g.0 == f.1).then_some((f.0, g.1))
        })
    }

    /// The linear order `[n] = {0 < 1 < … < n}`.
    pub fn ordinal(n: usize) -> Self {
        let labels: Vec<String> = (0..=n).map(|i| i.to_string()).collect();
        Self::poset(&labels, |i, j| i <= j).expect("ordinal is a poset")
    }

    /// The one-object category of a finite monoid given by its
    /// multiplication table; `mul[a][b]` is the composite `a ∘ b`.
    pub fn one_object<S: AsRef<str>>(
        object: &str,
        elements: &[S],
        unit: usize,
        mul: &[Vec<usize>],
    ) -> Result<Self, CategoryError> {
        let morphisms = elements
            .iter()
            .enumerate()
            .map(|(i, e)| {
                let label = if i == unit { identity_label(object) } else { e.as_ref().to_string() };
                (i, label, 0, 0)
            })
            .collect();
        Self::from_parts(vec![object.to_string()], morphisms, vec![unit], |g, f| {
            mul.get(*g).and_then(|row| row.get(*f)).copied()
        })
    }

    /// The product category; objects `(c,d)`, morphisms `(f,g)`.
    pub fn product(left: &FiniteCategory, right: &FiniteCategory) -> Self {
        let mut objects = Vec::new();
        for a in &left.objects {
            for b in &right.objects {
                objects.push(format!("({a},{b})"));
            }
        }
        let nr = right.object_count();
        let mut morphisms = Vec::new();
        for (f, fm) in left.morphisms.iter().enumerate() {
            for (g, gm) in right.morphisms.iter().enumerate() {
                let label = if left.is_identity(f) && right.is_identity(g) {
                    identity_label(&objects[fm.source * nr + gm.source])
                } else {
                    format!("({},{})", fm.label, gm.label)
                };
                morphisms.push(((f, g), label, fm.source * nr + gm.source, fm.target * nr + gm.target));
            }
        }
        let mut identities = Vec::new();
        for a in 0..left.object_count() {
            for b in 0..nr {
                identities.push((left.identity(a), right.identity(b)));
            }
        }
        Self::from_parts(objects, morphisms, identities, |x, y| {
            Some((left.try_compose(x.0, y.0)?, right.try_compose(x.1, y.1)?))
        })
        .expect("product of categories is a category")
    }

    /// The opposite category: same labels, sources and targets swapped.
    pub fn opposite(&self) -> Self {
        let morphisms = self
            .morphisms
            .iter()
            .enumerate()
            .map(|(i, m)| (i, m.label.clone(), m.target, m.source))
            .collect();
        Self::from_parts(self.objects.clone(), morphisms, self.identities.clone(), |g, f| {
            self.try_compose(*f, *g)
        })
        .expect("opposite of a category is a category")
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn morphism_count(&self) -> usize {
        self.morphisms.len()
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn morphisms(&self) -> &[Morphism] {
        &self.morphisms
    }

    pub fn object_label(&self, ob: Ob) -> &str {
        &self.objects[ob]
    }

    pub fn label(&self, m: Mor) -> &str {
        &self.morphisms[m].label
    }

    pub fn source(&self, m: Mor) -> Ob {
        self.morphisms[m].source
    }

    pub fn target(&self, m: Mor) -> Ob {
        self.morphisms[m].target
    }

    pub fn identity(&self, ob: Ob) -> Mor {
        self.identities[ob]
    }

    pub fn is_identity(&self, m: Mor) -> bool {
        self.identities[self.morphisms[m].source] == m
    }

    pub fn object_by_label(&self, label: &str) -> Option<Ob> {
        self.object_index.get(label).copied()
    }

    pub fn morphism_by_label(&self, label: &str) -> Option<Mor> {
        self.morphism_index.get(label).copied()
    }

    /// `Hom(a, b)` in construction order.
    pub fn hom(&self, a: Ob, b: Ob) -> &[Mor] {
        &self.homs[a][b]
    }

    /// Morphisms with target `ob`.
    pub fn incoming(&self, ob: Ob) -> &[Mor] {
        &self.incoming[ob]
    }

    /// Morphisms with source `ob`.
    pub fn outgoing(&self, ob: Ob) -> &[Mor] {
        &self.outgoing[ob]
    }

    /// `g ∘ f`.
    ///
    /// # Panics
    /// If `target(f) != source(g)`.
    pub fn compose(&self, g: Mor, f: Mor) -> Mor {
        self.try_compose(g, f).unwrap_or_else(|| {
            panic!("`{}` and `{}` are not composable", self.label(g), self.label(f))
        })
    }

    pub fn try_compose(&self, g: Mor, f: Mor) -> Option<Mor> {
        (self.morphisms[f].target == self.morphisms[g].source).then(|| self.table[g][self.slot[f]])
    }

    /// Composes a path listed in application order (`path[0]` first).
    pub fn compose_path(&self, start: Ob, path: &[Mor]) -> Mor {
        path.iter().fold(self.identity(start), |acc, &m| self.compose(m, acc))
    }

    pub fn is_isomorphism(&self, m: Mor) -> bool {
        let (s, t) = (self.source(m), self.target(m));
        self.hom(t, s).iter().any(|&inv| {
            self.compose(inv, m) == self.identity(s) && self.compose(m, inv) == self.identity(t)
        })
    }

    /// Non-identity morphisms.
    pub fn proper_morphisms(&self) -> impl Iterator<Item = Mor> + '_ {
        (0..self.morphisms.len()).filter(move |&m| !self.is_identity(m))
    }

    /// Exhaustive re-check of the unit and associativity laws.
    pub fn verify_laws(&self) -> Result<(), CategoryError> {
        self.check_laws()
    }

    /// Exports the tables in raw form (identities implicit).
    pub fn to_raw(&self) -> RawCategory {
        let mut raw = RawCategory { implicit_identities: true, objects: self.objects.clone(), ..Default::default() };
        for m in self.proper_morphisms() {
            let rec = &self.morphisms[m];
            raw.morphisms.push((rec.label.clone(), self.objects[rec.source].clone(), self.objects[rec.target].clone()));
        }
        for g in self.proper_morphisms() {
            for &f in &self.incoming[self.source(g)] {
                if self.is_identity(f) {
                    continue;
                }
                let h = self.compose(g, f);
                raw.compose.push((self.label(g).to_string(), self.label(f).to_string(), self.label(h).to_string()));
            }
        }
        raw
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn raw(objects: &[&str], morphisms: &[(&str, &str, &str)], compose: &[(&str, &str, &str)]) -> RawCategory {
        RawCategory {
            objects: objects.iter().map(|s| s.to_string()).collect(),
            morphisms: morphisms.iter().map(|(a, b, c)| (a.to_string(), b.to_string(), c.to_string())).collect(),
            identities: Vec::new(),
            compose: compose.iter().map(|(a, b, c)| (a.to_string(), b.to_string(), c.to_string())).collect(),
            implicit_identities: true,
        }
    }

    #[test]
    fn interval_is_valid() {
        let c = FiniteCategory::validate(&raw(&["0", "1"], &[("a", "0", "1")], &[])).unwrap();
        assert_eq!(c.object_count(), 2);
        assert_eq!(c.morphism_count(), 3);
        let a = c.morphism_by_label("a").unwrap();
        assert_eq!((c.source(a), c.target(a)), (0, 1));
        assert!(!c.is_isomorphism(a));
    }

    #[test]
    fn z2_is_valid() {
        let c = FiniteCategory::validate(&raw(&["*"], &[("t", "*", "*")], &[("t", "t", "id_*")])).unwrap();
        assert_eq!(c.morphism_count(), 2);
        let t = c.morphism_by_label("t").unwrap();
        assert!(c.is_isomorphism(t));
    }

    #[test]
    fn associativity_failure_names_triple() {
        // one object, morphisms {x, y}; x.x = y, x.y = x, y.x = y, y.y = y
        // (x.x).y = y.y = y but x.(x.y) = x.x = y ... pick a table that breaks it:
        // x.x = x, x.y = y, y.x = x, y.y = x
        let r = raw(
            &["*"],
            &[("x", "*", "*"), ("y", "*", "*")],
            &[("x", "x", "x"), ("x", "y", "y"), ("y", "x", "x"), ("y", "y", "x")],
        );
        let err = FiniteCategory::validate(&r).unwrap_err();
        assert!(matches!(err, CategoryError::Associativity { .. }), "{err:?}");
    }

    #[test]
    fn missing_composite_is_reported() {
        let r = raw(&["*"], &[("t", "*", "*")], &[]);
        assert_eq!(
            FiniteCategory::validate(&r).unwrap_err(),
            CategoryError::MissingComposite { g: "t".into(), f: "t".into() }
        );
    }

    #[test]
    fn explicit_identities_must_exist() {
        let mut r = raw(&["a"], &[], &[]);
        r.implicit_identities = false;
        assert_eq!(FiniteCategory::validate(&r).unwrap_err(), CategoryError::MissingIdentity("a".into()));
    }

    #[test]
    fn explicit_identity_unit_law_checked() {
        let mut r = raw(&["a"], &[("e", "a", "a"), ("t", "a", "a")], &[
            ("e", "e", "e"),
            ("e", "t", "t"),
            ("t", "e", "e"),
            ("t", "t", "e"),
        ]);
        r.implicit_identities = false;
        r.identities = vec![("a".into(), "e".into())];
        assert!(matches!(FiniteCategory::validate(&r).unwrap_err(), CategoryError::UnitLaw { .. }));
    }

    #[test]
    fn ill_typed_composite_rejected() {
        let r = raw(&["0", "1", "2"], &[("a", "0", "1"), ("b", "1", "2")], &[("b", "a", "b")]);
        assert!(matches!(FiniteCategory::validate(&r).unwrap_err(), CategoryError::IllTypedComposite { .. }));
    }

    #[test]
    fn opposite_is_involutive_and_fixes_terminal() {
        let one = FiniteCategory::ordinal(1);
        assert_eq!(one.opposite().opposite(), one);
        let pt = FiniteCategory::ordinal(0);
        assert_eq!(pt.opposite(), pt);
        let op = one.opposite();
        let a = op.morphism_by_label("0<1").unwrap();
        assert_eq!((op.source(a), op.target(a)), (1, 0));
    }

    #[test]
    fn product_counts() {
        let p = FiniteCategory::product(&FiniteCategory::ordinal(1), &FiniteCategory::ordinal(1));
        assert_eq!(p.object_count(), 4);
        assert_eq!(p.morphism_count(), 9);
    }

    #[test]
    fn empty_category() {
        let e = FiniteCategory::empty();
        assert_eq!(e.object_count(), 0);
        assert_eq!(e.morphism_count(), 0);
    }
}
