use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use super::{GroupoidData, GroupoidError};
use crate::homology::{is_homology_equivalence, simplicial_homology, EquivalenceReport, HomologyReport};
use crate::sset::{BisimplicialSet, DeltaMap, FiniteSimplicialSet, Normalized, SimplicialMap, SimplicialTable};

/// A simplex of `BG` or `EG` in horizontal degree `n`: objects
/// `t_0, …, t_n` and elements `g_k ∈ G(t_k, t_{k-1})`. For `BG` the
/// elements are `g_1, …, g_n`; for `EG` they are `g_0, …, g_n` with
/// `t_{-1}` the basepoint.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BarSimplex {
    pub objects: Vec<usize>,
    pub elements: Vec<usize>,
}

#[derive(Clone, Debug)]
struct Level {
    simplices: Vec<Vec<BarSimplex>>,
    index: Vec<HashMap<BarSimplex, usize>>,
    table: SimplicialTable,
}

/// `π : EG → BG`, both constant in the vertical direction.
#[derive(Clone, Debug)]
pub struct BarPair {
    pub data: GroupoidData,
    pub window: usize,
    pub eg: BisimplicialSet,
    pub bg: BisimplicialSet,
    /// `projection[n][x]` is the `BG` row of `EG` row `x`
    pub projection: Vec<Vec<usize>>,
    e_level: Level,
    b_level: Level,
}

impl BarPair {
    pub fn eg_simplices(&self, n: usize) -> &[BarSimplex] {
        &self.e_level.simplices[n]
    }

    pub fn bg_simplices(&self, n: usize) -> &[BarSimplex] {
        &self.b_level.simplices[n]
    }

    pub fn bg_row(&self, s: &BarSimplex) -> Option<usize> {
        self.b_level.index.get(s.objects.len() - 1)?.get(s).copied()
    }

    pub fn eg_row(&self, s: &BarSimplex) -> Option<usize> {
        self.e_level.index.get(s.objects.len() - 1)?.get(s).copied()
    }
}

/// `g_b ∘ … ∘ g_a`, or the identity of `t_b` when `a > b`. Index `k` of
/// `objects` is `t_{k-1}`, so `objects[0]` is `t_{-1}`.
fn composite(data: &GroupoidData, objects: &[usize], g: impl Fn(usize) -> usize, a: usize, b: usize) -> usize {
    if a > b {
        return data.identity(objects[b + 1]);
    }
    let t = |k: usize| objects[k + 1];
    let mut acc = g(b);
    for k in (a..b).rev() {
        // acc ∈ G(t_b, t_k), g_k ∈ G(t_k, t_{k-1})
        acc = data.compose(t(b), t(k), objects[k], acc, g(k));
    }
    acc
}

/// The operator `φ^*` on a single simplex.
fn act(data: &GroupoidData, x: &BarSimplex, phi: &DeltaMap, total: bool) -> BarSimplex {
    let mut ext = Vec::with_capacity(x.objects.len() + 1);
    ext.push(data.basepoint());
    ext.extend_from_slice(&x.objects);
    let g = |k: usize| if total { x.elements[k] } else { x.elements[k - 1] };
    let m = phi.source();
    let objects = (0..=m).map(|i| x.objects[phi.at(i)]).collect();
    let first = if total { 0 } else { 1 };
    let elements = (first..=m)
        .map(|i| {
            let lo = if i == 0 { 0 } else { phi.at(i - 1) + 1 };
            composite(data, &ext, g, lo, phi.at(i))
        })
        .collect();
    BarSimplex { objects, elements }
}

fn enumerate(data: &GroupoidData, n: usize, total: bool) -> Vec<BarSimplex> {
    let s = data.object_count();
    let mut out = Vec::new();
    let mut objects = vec![0; n + 1];
    loop {
        let mut homs: Vec<usize> = Vec::new();
        if total {
            homs.push(data.hom_size(objects[0], data.basepoint()));
        }
        homs.extend((1..=n).map(|k| data.hom_size(objects[k], objects[k - 1])));
        if homs.iter().all(|&h| h > 0) {
            let mut elements = vec![0; homs.len()];
            loop {
                out.push(BarSimplex { objects: objects.clone(), elements: elements.clone() });
                let Some(k) = (0..homs.len()).rev().find(|&k| elements[k] + 1 < homs[k]) else { break };
                elements[k] += 1;
                elements[k + 1..].iter_mut().for_each(|e| *e = 0);
            }
        }
        let Some(k) = (0..=n).rev().find(|&k| objects[k] + 1 < s) else { break };
        objects[k] += 1;
        objects[k + 1..].iter_mut().for_each(|o| *o = 0);
    }
    out
}

fn label(data: &GroupoidData, x: &BarSimplex, total: bool) -> String {
    let (objs, n) = (data.objects(), x.objects.len() - 1);
    if !total && n == 0 {
        return objs[x.objects[0]].clone();
    }
    let names: Vec<&str> = (0..x.elements.len())
        .rev()
        .map(|j| {
            let k = if total { j } else { j + 1 };
            let target = if k == 0 { data.basepoint() } else { x.objects[k - 1] };
            data.hom(x.objects[k], target)[x.elements[j]].as_str()
        })
        .collect();
    names.join("|")
}

fn build_level(data: &GroupoidData, window: usize, total: bool) -> Level {
    let simplices: Vec<Vec<BarSimplex>> = (0..=window).map(|n| enumerate(data, n, total)).collect();
    let index: Vec<HashMap<BarSimplex, usize>> = simplices
        .iter()
        .map(|lv| lv.iter().enumerate().map(|(i, x)| (x.clone(), i)).collect())
        .collect();
    let mut table = SimplicialTable { window, ..Default::default() };
    for n in 0..=window {
        table.labels.push(simplices[n].iter().map(|x| label(data, x, total)).collect());
        table.faces.push(
            simplices[n]
                .iter()
                .map(|x| {
                    if n == 0 {
                        Vec::new()
                    } else {
                        (0..=n).map(|i| index[n - 1][&act(data, x, &DeltaMap::face(n, i), total)]).collect()
                    }
                })
                .collect(),
        );
        table.degeneracies.push(
            simplices[n]
                .iter()
                .map(|x| {
                    if n == window {
                        Vec::new()
                    } else {
                        (0..=n).map(|i| index[n + 1][&act(data, x, &DeltaMap::degeneracy(n, i), total)]).collect()
                    }
                })
                .collect(),
        );
    }
    Level { simplices, index, table }
}

/// The bar construction truncated at `window` in each direction. Each
/// horizontal level is a discrete space, so the vertical operators are
/// identities.
pub fn bar_construction(data: &GroupoidData, window: usize) -> BarPair {
    let e_level = build_level(data, window, true);
    let b_level = build_level(data, window, false);
    let projection = e_level
        .simplices
        .iter()
        .enumerate()
        .map(|(n, lv)| {
            lv.iter()
                .map(|x| b_level.index[n][&BarSimplex { objects: x.objects.clone(), elements: x.elements[1..].to_vec() }])
                .collect()
        })
        .collect();
    BarPair {
        data: data.clone(),
        window,
        eg: BisimplicialSet::constant_rows(&e_level.table, window).transpose(),
        bg: BisimplicialSet::constant_rows(&b_level.table, window).transpose(),
        projection,
        e_level,
        b_level,
    }
}

/// The diagonals of `EG` and `BG` with the diagonal of `π`.
#[derive(Clone, Debug)]
pub struct BarDiagonals {
    pub eg: Arc<FiniteSimplicialSet>,
    pub bg: Arc<FiniteSimplicialSet>,
    pub projection: SimplicialMap,
    eg_normal: Normalized,
    bg_normal: Normalized,
}

impl BarDiagonals {
    pub fn eg_normalized(&self) -> &Normalized {
        &self.eg_normal
    }

    pub fn bg_normalized(&self) -> &Normalized {
        &self.bg_normal
    }
}

pub fn bwe_diagonal(pair: &BarPair) -> Result<BarDiagonals, GroupoidError> {
    let eg_normal = pair.eg.diagonal()?;
    let bg_normal = pair.bg.diagonal()?;
    let projection = SimplicialMap::from_rows(&eg_normal, &bg_normal, &pair.projection);
    projection.check_operators()?;
    Ok(BarDiagonals {
        eg: projection.domain().clone(),
        bg: projection.codomain().clone(),
        projection,
        eg_normal,
        bg_normal,
    })
}

/// The outcome of the extra-degeneracy check on `EG`.
#[derive(Clone, Debug, Serialize)]
pub struct ExtraDegeneracyReport {
    pub basepoint: String,
    pub window: usize,
    pub laws_checked: usize,
    pub homology: HomologyReport,
    pub reduced_vanishes: bool,
}

impl ExtraDegeneracyReport {
    pub fn holds(&self) -> bool {
        self.reduced_vanishes
    }
}

impl fmt::Display for ExtraDegeneracyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "basepoint: {}", self.basepoint)?;
        writeln!(f, "extra degeneracy laws checked: {}", self.laws_checked)?;
        writeln!(f, "diag EG:")?;
        for g in &self.homology.groups {
            writeln!(f, "  {g}")?;
        }
        let through = self.window.saturating_sub(1);
        if self.reduced_vanishes {
            write!(f, "CONTRACTIBLE (reduced homology vanishes through degree {through})")
        } else {
            write!(f, "NOT CONTRACTIBLE through degree {through}")
        }
    }
}

/// Builds `s : EG_n → EG_{n+1}` by appending `e_{t_{-1}}`, checks
/// `d_0 s = id` and `d_i s = s d_{i-1}` on every simplex below the window,
/// then computes the homology of `diag EG`.
pub fn check_extra_degeneracy(pair: &BarPair) -> Result<ExtraDegeneracyReport, GroupoidError> {
    let data = &pair.data;
    let base = data.basepoint();
    let s = |x: &BarSimplex| -> BarSimplex {
        let mut objects = vec![base];
        objects.extend_from_slice(&x.objects);
        let mut elements = vec![data.identity(base)];
        elements.extend_from_slice(&x.elements);
        BarSimplex { objects, elements }
    };
    let s_of_point = BarSimplex { objects: vec![base], elements: vec![data.identity(base)] };
    let describe = |x: &BarSimplex| {
        let objs: Vec<&str> = x.objects.iter().rev().map(|&o| data.objects()[o].as_str()).collect();
        format!("({}) `{}`", objs.join(", "), label(data, x, true))
    };
    let mut laws = 0;
    for n in 0..pair.window {
        for x in &pair.e_level.simplices[n] {
            let sx = s(x);
            if act(data, &sx, &DeltaMap::face(n + 1, 0), true) != *x {
                return Err(GroupoidError::ExtraDegeneracy { law: "d_0 s = id".into(), tuple: describe(x) });
            }
            laws += 1;
            for i in 1..=n + 1 {
                let lhs = act(data, &sx, &DeltaMap::face(n + 1, i), true);
                let rhs = if n == 0 { s_of_point.clone() } else { s(&act(data, x, &DeltaMap::face(n, i - 1), true)) };
                if lhs != rhs {
                    return Err(GroupoidError::ExtraDegeneracy { law: format!("d_{i} s = s d_{}", i - 1), tuple: describe(x) });
                }
                laws += 1;
            }
        }
    }
    let diagonals = bwe_diagonal(pair)?;
    let homology = simplicial_homology(&diagonals.eg)?;
    let reduced_vanishes = homology.reduced_vanishes_through(pair.window.saturating_sub(1));
    Ok(ExtraDegeneracyReport {
        basepoint: data.objects()[base].clone(),
        window: pair.window,
        laws_checked: laws,
        homology,
        reduced_vanishes,
    })
}

/// `diag BG(S') → diag BG(S)` for a sub-collection of objects.
#[derive(Clone, Debug, Serialize)]
pub struct InclusionReport {
    pub subset: Vec<String>,
    pub objects: Vec<String>,
    pub equivalence: EquivalenceReport,
}

impl InclusionReport {
    pub fn holds(&self) -> bool {
        self.equivalence.holds
    }
}

impl fmt::Display for InclusionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "inclusion of {{{}}} into {{{}}}", self.subset.join(", "), self.objects.join(", "))?;
        let e = &self.equivalence;
        for k in 0..=e.up_to {
            let (a, b) = (&e.source.groups[k], &e.target.groups[k]);
            let same = a.betti == b.betti && a.torsion == b.torsion;
            writeln!(f, "degree {k}: {a} -> {b} {}", if same { "pass" } else { "fail" })?;
        }
        write!(f, "{e}")
    }
}

/// Compares `diag BG` over `subset` with `diag BG` over all objects through
/// degree `up_to`, using window `up_to + 1`. The data must be connected.
pub fn inclusion_compare(data: &GroupoidData, subset: &[&str], up_to: usize) -> Result<InclusionReport, GroupoidError> {
    if !data.is_connected() {
        return Err(GroupoidError::Precondition("the groupoid is not connected: some hom-set is empty".into()));
    }
    let idx: Vec<usize> = subset
        .iter()
        .map(|name| data.object_index(name).ok_or_else(|| GroupoidError::Precondition(format!("unknown object `{name}`"))))
        .collect::<Result<_, _>>()?;
    let sub = data.restrict(&idx)?;
    let window = up_to + 1;
    let small = bar_construction(&sub, window);
    let large = bar_construction(data, window);
    let ds = bwe_diagonal(&small)?;
    let dl = bwe_diagonal(&large)?;
    let rows: Vec<Vec<usize>> = (0..=window)
        .map(|n| {
            small.b_level.simplices[n]
                .iter()
                .map(|x| {
                    let y = BarSimplex { objects: x.objects.iter().map(|&o| idx[o]).collect(), elements: x.elements.clone() };
                    large.b_level.index[n][&y]
                })
                .collect()
        })
        .collect();
    let map = SimplicialMap::from_rows(ds.bg_normalized(), dl.bg_normalized(), &rows);
    map.check_operators()?;
    let equivalence = is_homology_equivalence(&map, up_to)?;
    Ok(InclusionReport {
        subset: sub.objects().to_vec(),
        objects: data.objects().to_vec(),
        equivalence,
    })
}
