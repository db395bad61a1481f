use std::collections::HashMap;
use std::sync::Arc;

use super::basic::delta_simplex;
use super::{
    materialize, standard_simplex, DeltaMap, FiniteSimplicialSet, Materialized, Simplex, SimplicialError, SimplicialMap,
    SimplicialTable,
};
use crate::fincat::FiniteCategory;

/// Where a simplex of a pushout comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Origin {
    /// row of the materialized `B`
    B(usize),
    /// row of the materialized `C`, outside the image of `i`
    C(usize),
}

/// A pushout square `B ←f– A –i→ C`, `B –j→ D ←g– C` with `i` injective,
/// together with the simplex-level decomposition `D = j(B) ⊔ g(C ∖ i(A))`.
#[derive(Clone, Debug)]
pub struct PushoutSquare {
    pub f: SimplicialMap,
    pub i: SimplicialMap,
    pub j: SimplicialMap,
    pub g: SimplicialMap,
    pub mat_a: Materialized,
    pub mat_b: Materialized,
    pub mat_c: Materialized,
    pub mat_d: Materialized,
    origin: Vec<Vec<Origin>>,
    /// `i_rows[n][a]` is the row of `i(a)` in `C`
    i_rows: Vec<Vec<usize>>,
    /// `c_to_a[n][c]` is the `A` row with `i(a) = c`, if any
    c_to_a: Vec<Vec<Option<usize>>>,
}

impl PushoutSquare {
    pub fn a(&self) -> &Arc<FiniteSimplicialSet> {
        self.f.domain()
    }
    pub fn b(&self) -> &Arc<FiniteSimplicialSet> {
        self.f.codomain()
    }
    pub fn c(&self) -> &Arc<FiniteSimplicialSet> {
        self.i.codomain()
    }
    pub fn d(&self) -> &Arc<FiniteSimplicialSet> {
        self.j.codomain()
    }

    pub fn origin(&self, sigma: &Simplex) -> Origin {
        self.origin[sigma.dim()][self.mat_d.row(sigma)]
    }

    /// `σ'` with `j(σ') = σ`, when `σ` lies in the image of `j`.
    pub fn b_preimage(&self, sigma: &Simplex) -> Option<Simplex> {
        match self.origin(sigma) {
            Origin::B(r) => Some(self.mat_b.simplices[sigma.dim()][r].clone()),
            Origin::C(_) => None,
        }
    }

    /// The unique `σ̄` outside `i(A)` with `g(σ̄) = σ`, when `σ` is not in
    /// the image of `j`.
    pub fn c_preimage(&self, sigma: &Simplex) -> Option<Simplex> {
        match self.origin(sigma) {
            Origin::C(r) => Some(self.mat_c.simplices[sigma.dim()][r].clone()),
            Origin::B(_) => None,
        }
    }

    /// The `a` with `i(a) = c`, if `c` lies in the image of `i`.
    pub fn a_preimage(&self, c: &Simplex) -> Option<Simplex> {
        let n = c.dim();
        self.c_to_a[n][self.mat_c.row(c)].map(|r| self.mat_a.simplices[n][r].clone())
    }

    pub fn in_image_of_i(&self, c: &Simplex) -> bool {
        self.a_preimage(c).is_some()
    }

    /// The map `D → T` induced by a cocone `u : B → T`, `v : C → T` with
    /// `u f = v i`.
    pub fn induced(&self, u: &SimplicialMap, v: &SimplicialMap) -> Result<SimplicialMap, SimplicialError> {
        if u.after(&self.f)? != v.after(&self.i)? {
            return Err(SimplicialError::Map("cocone does not commute over A".into()));
        }
        let d = self.d();
        let images = (0..=d.window())
            .map(|n| {
                (0..d.count(n))
                    .map(|x| {
                        let s = Simplex::nondegenerate(n, x);
                        match self.origin(&s) {
                            Origin::B(r) => u.apply(&self.mat_b.simplices[n][r]),
                            Origin::C(r) => v.apply(&self.mat_c.simplices[n][r]),
                        }
                    })
                    .collect()
            })
            .collect();
        SimplicialMap::new(d.clone(), u.codomain().clone(), images)
    }

    /// Row of `i(a)` in the materialized `C`.
    pub fn i_row(&self, n: usize, a: usize) -> usize {
        self.i_rows[n][a]
    }
}

/// The pushout of `f : A → B` along an injective `i : A → C`.
pub fn pushout(f: &SimplicialMap, i: &SimplicialMap) -> Result<PushoutSquare, SimplicialError> {
    if f.domain() != i.domain() {
        return Err(SimplicialError::Map("f and i have different domains".into()));
    }
    let w = f.domain().window();
    if f.codomain().window() != w || i.codomain().window() != w {
        return Err(SimplicialError::Window("pushout data must share one window".into()));
    }
    if !i.is_injective() {
        return Err(SimplicialError::NotInjective("i".into()));
    }
    let (mat_a, mat_b, f_rows) = f.materialize();
    let mat_c = materialize(i.codomain());
    let i_rows = i.row_map(&mat_a, &mat_c);
    let mut c_to_a: Vec<Vec<Option<usize>>> = (0..=w).map(|n| vec![None; mat_c.table.count(n)]).collect();
    for n in 0..=w {
        for (a, &c) in i_rows[n].iter().enumerate() {
            c_to_a[n][c] = Some(a);
        }
    }
    // rows of D: all B rows, then C rows outside i(A)
    let mut row_of_c: Vec<Vec<usize>> = Vec::with_capacity(w + 1);
    let mut origin: Vec<Vec<Origin>> = Vec::with_capacity(w + 1);
    for n in 0..=w {
        let nb = mat_b.table.count(n);
        let mut o: Vec<Origin> = (0..nb).map(Origin::B).collect();
        let mut rc = Vec::with_capacity(mat_c.table.count(n));
        for c in 0..mat_c.table.count(n) {
            match c_to_a[n][c] {
                Some(a) => rc.push(f_rows[n][a]),
                None => {
                    rc.push(o.len());
                    o.push(Origin::C(c));
                }
            }
        }
        row_of_c.push(rc);
        origin.push(o);
    }
    let mut t = SimplicialTable { window: w, ..Default::default() };
    for n in 0..=w {
        let mut labels = Vec::new();
        let mut faces = Vec::new();
        let mut degens = Vec::new();
        for o in &origin[n] {
            match *o {
                Origin::B(r) => {
                    labels.push(mat_b.table.labels[n][r].clone());
                    faces.push(mat_b.table.faces[n][r].clone());
                    degens.push(mat_b.table.degeneracies[n][r].clone());
                }
                Origin::C(r) => {
                    labels.push(mat_c.table.labels[n][r].clone());
                    faces.push(mat_c.table.faces[n][r].iter().map(|&x| row_of_c[n - 1][x]).collect());
                    degens.push(mat_c.table.degeneracies[n][r].iter().map(|&x| row_of_c[n + 1][x]).collect());
                }
            }
        }
        t.labels.push(labels);
        t.faces.push(faces);
        t.degeneracies.push(degens);
    }
    let norm_d = t.normalize();
    let set_d = Arc::new(norm_d.set.clone());
    let b = f.codomain().clone();
    let c = i.codomain().clone();
    let j_images = (0..=w)
        .map(|n| (0..b.count(n)).map(|x| norm_d.normal_forms[n][mat_b.row(&Simplex::nondegenerate(n, x))].clone()).collect())
        .collect();
    let g_images = (0..=w)
        .map(|n| {
            (0..c.count(n))
                .map(|x| norm_d.normal_forms[n][row_of_c[n][mat_c.row(&Simplex::nondegenerate(n, x))]].clone())
                .collect()
        })
        .collect();
    let j = SimplicialMap::from_trusted(b, set_d.clone(), j_images);
    let g = SimplicialMap::from_trusted(c, set_d.clone(), g_images);
    let mat_d = materialize(&set_d);
    // rows of D's own materialization agree with the table rows only up to
    // renumbering; translate the origin table
    let mut origin_d: Vec<Vec<Origin>> = Vec::with_capacity(w + 1);
    for n in 0..=w {
        let mut o = vec![Origin::B(0); mat_d.table.count(n)];
        for (row, nf) in norm_d.normal_forms[n].iter().enumerate() {
            o[mat_d.row(nf)] = origin[n][row];
        }
        origin_d.push(o);
    }
    Ok(PushoutSquare {
        f: f.clone(),
        i: i.clone(),
        j,
        g,
        mat_a,
        mat_b,
        mat_c,
        mat_d,
        origin: origin_d,
        i_rows,
        c_to_a,
    })
}

/// A colimit with its cocone.
#[derive(Clone, Debug)]
pub struct Colimit {
    pub set: Arc<FiniteSimplicialSet>,
    pub cocone: Vec<SimplicialMap>,
    /// `(object, simplex)` representing each nondegenerate simplex
    pub representatives: Vec<Vec<(usize, Simplex)>>,
}

/// The colimit of a covariant diagram `values` over `index`, with
/// `maps[m] : values[source m] → values[target m]`.
pub fn finite_colimit(
    index: &FiniteCategory,
    values: &[Arc<FiniteSimplicialSet>],
    maps: &[SimplicialMap],
    window: usize,
) -> Result<Colimit, SimplicialError> {
    if values.len() != index.object_count() || maps.len() != index.morphism_count() {
        return Err(SimplicialError::Construction("diagram does not match its index".into()));
    }
    if values.iter().any(|v| v.window() != window) {
        return Err(SimplicialError::Window("diagram values must share the colimit window".into()));
    }
    let mats: Vec<Materialized> = values.iter().map(|v| materialize(v)).collect();
    let mut offsets = vec![vec![0usize; values.len() + 1]; window + 1];
    for n in 0..=window {
        for (o, m) in mats.iter().enumerate() {
            offsets[n][o + 1] = offsets[n][o] + m.table.count(n);
        }
    }
    let mut parent: Vec<Vec<usize>> = (0..=window).map(|n| (0..offsets[n][values.len()]).collect()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let nx = p[y];
            p[y] = r;
            y = nx;
        }
        r
    }
    for (m, map) in maps.iter().enumerate() {
        let (s, t) = (index.source(m), index.target(m));
        if map.domain() != &values[s] || map.codomain() != &values[t] {
            return Err(SimplicialError::Map(format!("map for `{}` has the wrong type", index.label(m))));
        }
        let rows = map.row_map(&mats[s], &mats[t]);
        for n in 0..=window {
            for (r, &tr) in rows[n].iter().enumerate() {
                let (a, b) = (find(&mut parent[n], offsets[n][s] + r), find(&mut parent[n], offsets[n][t] + tr));
                if a != b {
                    parent[n][a.max(b)] = a.min(b);
                }
            }
        }
    }
    let locate = |n: usize, g: usize| -> (usize, usize) {
        let o = offsets[n].partition_point(|&x| x <= g) - 1;
        (o, g - offsets[n][o])
    };
    let mut class: Vec<Vec<usize>> = Vec::with_capacity(window + 1);
    let mut reps: Vec<Vec<usize>> = Vec::with_capacity(window + 1);
    for n in 0..=window {
        let total = parent[n].len();
        let mut cls = vec![usize::MAX; total];
        let mut rep = Vec::new();
        for g in 0..total {
            let r = find(&mut parent[n], g);
            if cls[r] == usize::MAX {
                cls[r] = rep.len();
                rep.push(r);
            }
            cls[g] = cls[r];
        }
        class.push(cls);
        reps.push(rep);
    }
    let mut t = SimplicialTable { window, ..Default::default() };
    for n in 0..=window {
        let mut labels = Vec::new();
        let mut faces = Vec::new();
        let mut degens = Vec::new();
        for &g in &reps[n] {
            let (o, r) = locate(n, g);
            labels.push(mats[o].table.labels[n][r].clone());
            faces.push(mats[o].table.faces[n][r].iter().map(|&x| class[n - 1][offsets[n - 1][o] + x]).collect());
            degens.push(mats[o].table.degeneracies[n][r].iter().map(|&x| class[n + 1][offsets[n + 1][o] + x]).collect());
        }
        t.labels.push(labels);
        t.faces.push(faces);
        t.degeneracies.push(degens);
    }
    let norm = t.normalize();
    let set = Arc::new(norm.set.clone());
    let cocone = values
        .iter()
        .enumerate()
        .map(|(o, v)| {
            let images = (0..=window)
                .map(|n| {
                    (0..v.count(n))
                        .map(|x| {
                            let r = mats[o].row(&Simplex::nondegenerate(n, x));
                            norm.normal_forms[n][class[n][offsets[n][o] + r]].clone()
                        })
                        .collect()
                })
                .collect();
            SimplicialMap::from_trusted(v.clone(), set.clone(), images)
        })
        .collect();
    let representatives = (0..=window)
        .map(|n| {
            norm.rows[n]
                .iter()
                .map(|&c| {
                    let (o, r) = locate(n, reps[n][c]);
                    (o, mats[o].simplices[n][r].clone())
                })
                .collect()
        })
        .collect();
    Ok(Colimit { set, cocone, representatives })
}

impl Colimit {
    /// The map out of the colimit induced by a cocone `legs[o] : values[o] → target`.
    /// The legs are assumed compatible; the result is checked against the
    /// simplicial operators.
    pub fn induced(&self, target: &Arc<FiniteSimplicialSet>, legs: &[SimplicialMap]) -> Result<SimplicialMap, SimplicialError> {
        if legs.len() != self.cocone.len() {
            return Err(SimplicialError::Map("one cocone leg per diagram object".into()));
        }
        for (leg, c) in legs.iter().zip(&self.cocone) {
            if leg.domain() != c.domain() || leg.codomain() != target {
                return Err(SimplicialError::Map("cocone legs have the wrong type".into()));
            }
        }
        let images = self
            .representatives
            .iter()
            .map(|dim| dim.iter().map(|(o, s)| legs[*o].apply(s)).collect())
            .collect();
        SimplicialMap::new(self.set.clone(), target.clone(), images)
    }
}

/// The pullback of `f : E → X` along `σ : Δ[n] → X`.
#[derive(Clone, Debug)]
pub struct Pullback {
    pub set: Arc<FiniteSimplicialSet>,
    pub simplex: Simplex,
    /// projection to `Δ[n]`
    pub to_simplex: SimplicialMap,
    /// projection to `E`
    pub to_total: SimplicialMap,
    /// `(θ, e)` for each nondegenerate simplex
    pub pairs: Vec<Vec<(DeltaMap, Simplex)>>,
}

pub fn pullback_along_simplex(sigma: &Simplex, f: &SimplicialMap) -> Result<Pullback, SimplicialError> {
    let x = f.codomain();
    let w = f.domain().window();
    let n = sigma.dim();
    if n > w || sigma.base >= x.count(sigma.base_dim) {
        return Err(SimplicialError::Window("simplex outside the window".into()));
    }
    let delta = Arc::new(standard_simplex(n, w)?);
    let (mat_e, _, rows) = {
        let (me, mx, rows) = f.materialize();
        (me, mx, rows)
    };
    let mat_x = materialize(x);
    let mut fibre: Vec<HashMap<usize, Vec<usize>>> = vec![HashMap::new(); w + 1];
    for m in 0..=w {
        for (e, &xr) in rows[m].iter().enumerate() {
            fibre[m].entry(xr).or_default().push(e);
        }
    }
    let mut pairs_rows: Vec<Vec<(DeltaMap, usize)>> = Vec::with_capacity(w + 1);
    let mut lookup: Vec<HashMap<(DeltaMap, usize), usize>> = Vec::with_capacity(w + 1);
    for m in 0..=w {
        let mut p = Vec::new();
        for theta in DeltaMap::all(m, n) {
            let xr = mat_x.row(&x.apply(sigma, &theta));
            for &e in fibre[m].get(&xr).map(Vec::as_slice).unwrap_or(&[]) {
                p.push((theta.clone(), e));
            }
        }
        lookup.push(p.iter().enumerate().map(|(i, k)| (k.clone(), i)).collect());
        pairs_rows.push(p);
    }
    let mut t = SimplicialTable { window: w, ..Default::default() };
    for m in 0..=w {
        let mut labels = Vec::new();
        let mut faces = Vec::new();
        let mut degens = Vec::new();
        for (theta, e) in &pairs_rows[m] {
            labels.push(format!("({},{})", theta.label(), mat_e.table.labels[m][*e]));
            faces.push(if m == 0 {
                Vec::new()
            } else {
                (0..=m)
                    .map(|i| lookup[m - 1][&(theta.after(&DeltaMap::face(m, i)), mat_e.table.faces[m][*e][i])])
                    .collect()
            });
            degens.push(if m == w {
                Vec::new()
            } else {
                (0..=m)
                    .map(|i| lookup[m + 1][&(theta.after(&DeltaMap::degeneracy(m, i)), mat_e.table.degeneracies[m][*e][i])])
                    .collect()
            });
        }
        t.labels.push(labels);
        t.faces.push(faces);
        t.degeneracies.push(degens);
    }
    let norm = t.normalize();
    let set = Arc::new(norm.set.clone());
    let pairs: Vec<Vec<(DeltaMap, Simplex)>> = (0..=w)
        .map(|m| {
            norm.rows[m]
                .iter()
                .map(|&r| {
                    let (theta, e) = &pairs_rows[m][r];
                    (theta.clone(), mat_e.simplices[m][*e].clone())
                })
                .collect()
        })
        .collect();
    let to_simplex = SimplicialMap::from_trusted(
        set.clone(),
        delta.clone(),
        pairs.iter().map(|dim| dim.iter().map(|(theta, _)| delta_simplex(n, theta)).collect()).collect(),
    );
    let to_total = SimplicialMap::from_trusted(
        set.clone(),
        f.domain().clone(),
        pairs.iter().map(|dim| dim.iter().map(|(_, e)| e.clone()).collect()).collect(),
    );
    Ok(Pullback { set, simplex: sigma.clone(), to_simplex, to_total, pairs })
}

impl Pullback {
    /// The map `df(τ) → df(σ)` induced by `α : τ → σ` (`τ = σα`), sending
    /// `(θ, e)` to `(αθ, e)`.
    pub fn map_along(&self, alpha: &DeltaMap, target: &Pullback) -> Result<SimplicialMap, SimplicialError> {
        let index: HashMap<(&DeltaMap, &Simplex), usize> = target
            .pairs
            .iter()
            .flat_map(|dim| dim.iter().enumerate().map(|(i, (t, e))| ((t, e), i)))
            .collect();
        let images = self
            .pairs
            .iter()
            .map(|dim| {
                dim.iter()
                    .map(|(theta, e)| {
                        target_pair_simplex(&index, &alpha.after(theta), e)
                    })
                    .collect()
            })
            .collect();
        SimplicialMap::new(self.set.clone(), target.set.clone(), images)
    }
}

/// The simplex `(θ, e)` of a pullback in normal form.
fn target_pair_simplex(index: &HashMap<(&DeltaMap, &Simplex), usize>, theta: &DeltaMap, e: &Simplex) -> Simplex {
    // (θ, e) = (θ', e')·η where η is the common degeneracy of both coordinates
    let eta = common_degeneracy(theta, &e.degeneracy);
    let k = eta.target();
    // a section of η picks the nondegenerate coordinates
    let section: Vec<usize> = (0..=k).map(|v| eta.values().iter().position(|&x| x == v).unwrap()).collect();
    let section = DeltaMap::new(theta.source(), section);
    let theta0 = theta.after(&section);
    let e0 = Simplex { base_dim: e.base_dim, base: e.base, degeneracy: e.degeneracy.after(&section) };
    let row = index[&(&theta0, &e0)];
    Simplex::nondegenerate(k, row).degenerate_along(&eta)
}

/// The finest surjection through which both maps factor.
fn common_degeneracy(a: &DeltaMap, b: &DeltaMap) -> DeltaMap {
    let m = a.source();
    let mut values = vec![0];
    for j in 0..m {
        let same = a.at(j) == a.at(j + 1) && b.at(j) == b.at(j + 1);
        values.push(values[j] + usize::from(!same));
    }
    let k = values[m];
    DeltaMap::new(k, values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sset::{boundary, disjoint_union, fold, point};

    fn endpoints_into_edge() -> SimplicialMap {
        let a = Arc::new(boundary(1, 2).unwrap());
        let c = Arc::new(standard_simplex(1, 2).unwrap());
        let images = vec![vec![Simplex::nondegenerate(0, 0), Simplex::nondegenerate(0, 1)], vec![], vec![]];
        SimplicialMap::new(a, c, images).unwrap()
    }

    #[test]
    fn gluing_two_edges_gives_a_circle() {
        let i = endpoints_into_edge();
        let p = pushout(&i, &i).unwrap();
        assert_eq!(p.d().counts(), vec![2, 2, 0]);
        for n in 0..=2 {
            assert_eq!(p.d().count(n), p.b().count(n) + p.c().count(n) - p.a().count(n));
        }
        p.d().check_identities().unwrap();
        assert_eq!(p.j.after(&p.f).unwrap(), p.g.after(&p.i).unwrap());
    }

    #[test]
    fn pushout_along_empty_and_identity() {
        let b = Arc::new(standard_simplex(1, 2).unwrap());
        let c = Arc::new(boundary(2, 2).unwrap());
        let e = Arc::new(FiniteSimplicialSet::empty(2));
        let f = SimplicialMap::new(e.clone(), b.clone(), vec![]).unwrap();
        let i = SimplicialMap::new(e, c.clone(), vec![]).unwrap();
        let p = pushout(&f, &i).unwrap();
        assert_eq!(p.d().counts(), vec![5, 4, 0]);
        let id = SimplicialMap::identity(&b);
        let p = pushout(&id, &id).unwrap();
        assert_eq!(p.d().counts(), b.counts());
    }

    #[test]
    fn non_injective_leg_rejected() {
        let i = fold(&Arc::new(point(1)), 2).unwrap();
        assert!(matches!(pushout(&i, &i), Err(SimplicialError::NotInjective(_))));
    }

    #[test]
    fn induced_map_from_cocone() {
        let i = endpoints_into_edge();
        let p = pushout(&i, &i).unwrap();
        let pt = Arc::new(point(2));
        let u = SimplicialMap::constant_to(p.b(), &pt, 0);
        let v = SimplicialMap::constant_to(p.c(), &pt, 0);
        let h = p.induced(&u, &v).unwrap();
        assert_eq!(h.after(&p.j).unwrap(), u);
    }

    fn span() -> FiniteCategory {
        FiniteCategory::poset(&["l", "m", "r"], |a, b| a == b || (a, b) == (1, 0) || (a, b) == (1, 2)).unwrap()
    }

    fn span_colimit(leg: &SimplicialMap) -> Colimit {
        let span = span();
        let values = vec![leg.codomain().clone(), leg.domain().clone(), leg.codomain().clone()];
        let maps: Vec<SimplicialMap> = (0..span.morphism_count())
            .map(|m| if span.is_identity(m) { SimplicialMap::identity(&values[span.source(m)]) } else { leg.clone() })
            .collect();
        finite_colimit(&span, &values, &maps, leg.domain().window()).unwrap()
    }

    #[test]
    fn colimit_of_point_span_is_a_point() {
        let pt = Arc::new(point(1));
        let two = Arc::new(boundary(1, 1).unwrap());
        let col = span_colimit(&SimplicialMap::constant_to(&two, &pt, 0));
        assert_eq!(col.set.counts(), vec![1, 0]);
    }

    #[test]
    fn colimit_of_span_matches_pushout() {
        let i = endpoints_into_edge();
        let col = span_colimit(&i);
        let p = pushout(&i, &i).unwrap();
        assert_eq!(p.d().counts(), col.set.counts());
        for c in &col.cocone {
            c.check_operators().unwrap();
        }
    }

    #[test]
    fn pullbacks() {
        let x = Arc::new(standard_simplex(1, 2).unwrap());
        let top = Simplex::nondegenerate(1, 0);
        let id = SimplicialMap::identity(&x);
        assert_eq!(pullback_along_simplex(&top, &id).unwrap().set.counts(), vec![2, 1, 0]);
        let f = fold(&x, 2).unwrap();
        let pb = pullback_along_simplex(&top, &f).unwrap();
        assert_eq!(pb.set.counts(), vec![4, 2, 0]);
        pb.to_simplex.check_operators().unwrap();
        pb.to_total.check_operators().unwrap();
        let e = Arc::new(FiniteSimplicialSet::empty(2));
        let from_empty = SimplicialMap::new(e, x.clone(), vec![]).unwrap();
        assert!(pullback_along_simplex(&top, &from_empty).unwrap().set.is_empty());
        let (u, _) = disjoint_union(&[x.clone()]).unwrap();
        assert_eq!(u.counts(), x.counts());
    }

    #[test]
    fn pullback_functoriality() {
        let x = Arc::new(standard_simplex(2, 2).unwrap());
        let f = fold(&x, 2).unwrap();
        let top = Simplex::nondegenerate(2, 0);
        let alpha = DeltaMap::face(2, 1);
        let tau = x.apply(&top, &alpha);
        let (p_top, p_tau) = (pullback_along_simplex(&top, &f).unwrap(), pullback_along_simplex(&tau, &f).unwrap());
        let m = p_tau.map_along(&alpha, &p_top).unwrap();
        assert_eq!(p_top.to_total.after(&m).unwrap(), p_tau.to_total);
        // degeneracy direction: the degenerate 2-simplex over an edge
        let edge = Simplex::nondegenerate(1, 0);
        let s0 = DeltaMap::degeneracy(1, 0);
        let degen = x.apply(&edge, &s0);
        let p_edge = pullback_along_simplex(&edge, &f).unwrap();
        let p_deg = pullback_along_simplex(&degen, &f).unwrap();
        p_deg.map_along(&s0, &p_edge).unwrap();
    }
}
