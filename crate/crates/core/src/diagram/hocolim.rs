use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use super::{DiagramError, SpaceDiagram, Variance};
use crate::fincat::{grothendieck, CategorySystem, FiniteCategory, Mor, Ob};
use crate::homology::{simplicial_homology, HomologyReport};
use crate::sset::{materialize, nerve, nerve_map, BisimplicialSet, FiniteSimplicialSet, Materialized, Nerve};

/// All chains `i_p → … → i_0` (identities allowed) as `(i_0, [α_1, …, α_p])`.
fn chains(c: &FiniteCategory, p: usize) -> Vec<(Ob, Vec<Mor>)> {
    let mut out: Vec<(Ob, Vec<Mor>)> = (0..c.object_count()).map(|o| (o, Vec::new())).collect();
    for _ in 0..p {
        let mut next = Vec::new();
        for (v0, ch) in &out {
            let last = ch.last().map_or(*v0, |&m| c.source(m));
            for &m in c.incoming(last) {
                let mut e = ch.clone();
                e.push(m);
                next.push((*v0, e));
            }
        }
        out = next;
    }
    out
}

fn chain_label(c: &FiniteCategory, v0: Ob, ch: &[Mor]) -> String {
    if ch.is_empty() {
        c.object_label(v0).to_string()
    } else {
        ch.iter().rev().map(|&m| c.label(m)).collect::<Vec<_>>().join("|")
    }
}

/// The simplicial replacement of a contravariant diagram `X` over `I`: the
/// `(p, q)`-bisimplices are pairs of a chain `i_p → … → i_0` and a
/// `q`-simplex of `X(i_0)`. Horizontal `d_0` drops `i_0` and applies
/// `X(α_1)`, the other faces compose or drop, degeneracies insert
/// identities. A covariant diagram is read as a contravariant one over the
/// opposite category.
pub fn simplicial_replacement(x: &SpaceDiagram, window: usize) -> Result<BisimplicialSet, DiagramError> {
    let x = match x.variance() {
        Variance::Contravariant => x.truncate(window)?,
        Variance::Covariant => x.opposite().truncate(window)?,
    };
    let c = x.index().clone();
    let mats: Vec<Materialized> = x.values().iter().map(|v| materialize(v)).collect();
    let rows: Vec<Vec<Vec<usize>>> = (0..c.morphism_count())
        .map(|m| {
            let (from, to) = x.ends(m);
            x.map(m).row_map(&mats[from], &mats[to])
        })
        .collect();
    let all: Vec<Vec<(Ob, Vec<Mor>)>> = (0..=window).map(|p| chains(&c, p)).collect();
    let lookup: Vec<HashMap<&(Ob, Vec<Mor>), usize>> =
        all.iter().map(|dim| dim.iter().enumerate().map(|(i, k)| (k, i)).collect()).collect();
    // offsets[p][q][chain] = first bisimplex of that chain
    let offsets: Vec<Vec<Vec<usize>>> = (0..=window)
        .map(|p| {
            (0..=window)
                .map(|q| {
                    let mut acc = 0;
                    let mut v: Vec<usize> = all[p]
                        .iter()
                        .map(|(v0, _)| {
                            let start = acc;
                            acc += mats[*v0].table.count(q);
                            start
                        })
                        .collect();
                    v.push(acc);
                    v
                })
                .collect()
        })
        .collect();
    let vertex = |v0: Ob, ch: &[Mor], k: usize| if k == 0 { v0 } else { c.source(ch[k - 1]) };
    let mut b = BisimplicialSet { window: (window, window), ..Default::default() };
    for p in 0..=window {
        let (mut labels, mut hf, mut vf, mut hs, mut vs) = (vec![], vec![], vec![], vec![], vec![]);
        for q in 0..=window {
            let (mut l, mut hf_q, mut vf_q, mut hs_q, mut vs_q) = (vec![], vec![], vec![], vec![], vec![]);
            for (ci, (v0, ch)) in all[p].iter().enumerate() {
                let mat = &mats[*v0];
                let name = chain_label(&c, *v0, ch);
                let face_keys: Vec<(Ob, Vec<Mor>, Option<Mor>)> = if p == 0 {
                    Vec::new()
                } else {
                    (0..=p)
                        .map(|k| {
                            if k == 0 {
                                (c.source(ch[0]), ch[1..].to_vec(), Some(ch[0]))
                            } else if k == p {
                                (*v0, ch[..p - 1].to_vec(), None)
                            } else {
                                let mut r = ch.clone();
                                let comp = c.compose(r[k - 1], r[k]);
                                r.splice(k - 1..=k, [comp]);
                                (*v0, r, None)
                            }
                        })
                        .collect()
                };
                let face_chains: Vec<(usize, Option<Mor>)> = face_keys
                    .into_iter()
                    .map(|(v, r, m)| (lookup[p - 1][&(v, r)], m))
                    .collect();
                let degen_chains: Vec<usize> = if p == window {
                    Vec::new()
                } else {
                    (0..=p)
                        .map(|k| {
                            let mut r = ch.clone();
                            r.insert(k, c.identity(vertex(*v0, ch, k)));
                            lookup[p + 1][&(*v0, r)]
                        })
                        .collect()
                };
                for r in 0..mat.table.count(q) {
                    l.push(format!("{name}:{}", mat.table.labels[q][r]));
                    hf_q.push(
                        face_chains
                            .iter()
                            .map(|&(fc, m)| offsets[p - 1][q][fc] + m.map_or(r, |m| rows[m][q][r]))
                            .collect(),
                    );
                    hs_q.push(degen_chains.iter().map(|&dc| offsets[p + 1][q][dc] + r).collect());
                    let me = |q2: usize| offsets[p][q2][ci];
                    vf_q.push(if q == 0 { Vec::new() } else { mat.table.faces[q][r].iter().map(|&y| me(q - 1) + y).collect() });
                    vs_q.push(if q == window {
                        Vec::new()
                    } else {
                        mat.table.degeneracies[q][r].iter().map(|&y| me(q + 1) + y).collect()
                    });
                }
            }
            labels.push(l);
            hf.push(hf_q);
            vf.push(vf_q);
            hs.push(hs_q);
            vs.push(vs_q);
        }
        b.labels.push(labels);
        b.h_faces.push(hf);
        b.v_faces.push(vf);
        b.h_degeneracies.push(hs);
        b.v_degeneracies.push(vs);
    }
    Ok(b)
}

/// The homotopy colimit as the diagonal of the simplicial replacement.
pub fn simplicial_replacement_hocolim(x: &SpaceDiagram, window: usize) -> Result<FiniteSimplicialSet, DiagramError> {
    Ok(simplicial_replacement(x, window)?.diagonal()?.set)
}

/// Homology of `N(Gr F)` against the homotopy colimit of the contravariant
/// diagram `c ↦ N(F_c)`.
#[derive(Clone, Debug, Serialize)]
pub struct ThomasonReport {
    pub window: usize,
    pub grothendieck: HomologyReport,
    pub hocolim: HomologyReport,
    pub equal: bool,
}

impl ThomasonReport {
    pub fn valid_through(&self) -> Option<usize> {
        self.window.checked_sub(1)
    }
}

impl fmt::Display for ThomasonReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "nerve of the Grothendieck construction:")?;
        for g in &self.grothendieck.groups {
            writeln!(f, "  {g}")?;
        }
        writeln!(f, "homotopy colimit of the fibre nerves:")?;
        for g in &self.hocolim.groups {
            writeln!(f, "  {g}")?;
        }
        match (self.valid_through(), self.equal) {
            (Some(k), true) => write!(f, "EQUAL through degree {k}"),
            (Some(k), false) => write!(f, "DIFFERENT within degrees 0..={k}"),
            (None, _) => write!(f, "no valid degrees (window 0)"),
        }
    }
}

pub fn thomason_compare(system: &CategorySystem, window: usize) -> Result<ThomasonReport, DiagramError> {
    let gr = grothendieck(system)?;
    let left = simplicial_homology(&nerve(&gr.category, window))?;
    let index = system.index();
    let nerves: Vec<Nerve> = system.fibers().iter().map(|f| Nerve::new(f, window)).collect();
    let maps = (0..index.morphism_count())
        .map(|a| nerve_map(system.transition(a), &nerves[index.target(a)], &nerves[index.source(a)]))
        .collect::<Result<Vec<_>, _>>()?;
    let values: Vec<Arc<FiniteSimplicialSet>> = nerves.iter().map(|n| n.set.clone()).collect();
    let diagram = SpaceDiagram::new(index.clone(), values, maps, Variance::Contravariant, window)?;
    let right = simplicial_homology(&simplicial_replacement_hocolim(&diagram, window)?)?;
    let equal = left.groups == right.groups;
    Ok(ThomasonReport { window, grothendieck: left, hocolim: right, equal })
}
