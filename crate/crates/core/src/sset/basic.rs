use std::sync::Arc;

use super::{materialize, DeltaMap, FiniteSimplicialSet, Simplex, SimplicialError, SimplicialMap, SimplicialTable};

fn vertex_word(vs: &[usize], n: usize) -> String {
    let parts: Vec<String> = vs.iter().map(|v| v.to_string()).collect();
    parts.join(if n < 10 { "" } else { "," })
}

fn simplex_faces(n: usize, top: bool, window: usize) -> FiniteSimplicialSet {
    let max = if top { n } else { n.saturating_sub(1) };
    let mut labels = vec![Vec::new(); window + 1];
    let mut faces = vec![Vec::new(); window + 1];
    let mut index: Vec<std::collections::HashMap<Vec<usize>, usize>> = vec![Default::default(); window + 1];
    if !(n == 0 && !top) {
        for k in 0..=max.min(window) {
            for subset in subsets(n + 1, k + 1) {
                index[k].insert(subset.clone(), labels[k].len());
                labels[k].push(vertex_word(&subset, n));
                if k > 0 {
                    let fs = (0..=k)
                        .map(|i| {
                            let mut s = subset.clone();
                            s.remove(i);
                            Simplex::nondegenerate(k - 1, index[k - 1][&s])
                        })
                        .collect();
                    faces[k].push(fs);
                }
            }
        }
    }
    FiniteSimplicialSet::from_trusted(window, labels, faces)
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            rec(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// `Δ[n]` truncated at `window`; simplices are labelled by their vertices.
pub fn standard_simplex(n: usize, window: usize) -> Result<FiniteSimplicialSet, SimplicialError> {
    if n > window {
        return Err(SimplicialError::Window(format!("Δ[{n}] does not fit in window {window}")));
    }
    Ok(simplex_faces(n, true, window))
}

/// `∂Δ[n]` truncated at `window`.
pub fn boundary(n: usize, window: usize) -> Result<FiniteSimplicialSet, SimplicialError> {
    if n > window + 1 {
        return Err(SimplicialError::Window(format!("∂Δ[{n}] does not fit in window {window}")));
    }
    Ok(simplex_faces(n, false, window))
}

pub fn point(window: usize) -> FiniteSimplicialSet {
    simplex_faces(0, true, window)
}

pub fn empty(window: usize) -> FiniteSimplicialSet {
    FiniteSimplicialSet::empty(window)
}

/// A disjoint union with its summand inclusions.
pub fn disjoint_union(parts: &[Arc<FiniteSimplicialSet>]) -> Result<(Arc<FiniteSimplicialSet>, Vec<SimplicialMap>), SimplicialError> {
    let window = parts.first().map_or(0, |p| p.window());
    if parts.iter().any(|p| p.window() != window) {
        return Err(SimplicialError::Window("summands have different windows".into()));
    }
    let mut labels = vec![Vec::new(); window + 1];
    let mut faces = vec![Vec::new(); window + 1];
    let mut offsets = Vec::new();
    for p in parts {
        let off: Vec<usize> = (0..=window).map(|n| labels[n].len()).collect();
        for n in 0..=window {
            for x in 0..p.count(n) {
                labels[n].push(p.label(n, x).to_string());
                let fs: Vec<Simplex> = if n == 0 {
                    Vec::new()
                } else {
                    (0..=n)
                        .map(|i| {
                            let mut f = p.nondegenerate_face(n, x, i).clone();
                            f.base += off[f.base_dim];
                            f
                        })
                        .collect()
                };
                faces[n].push(fs);
            }
        }
        offsets.push(off);
    }
    let sum = Arc::new(FiniteSimplicialSet::from_trusted(window, labels, faces));
    let inclusions = parts
        .iter()
        .zip(&offsets)
        .map(|(p, off)| {
            let images = (0..=window).map(|n| (0..p.count(n)).map(|x| Simplex::nondegenerate(n, x + off[n])).collect()).collect();
            SimplicialMap::from_trusted(p.clone(), sum.clone(), images)
        })
        .collect();
    Ok((sum, inclusions))
}

/// The fold map `X ⊔ … ⊔ X → X` (`copies` summands).
pub fn fold(x: &Arc<FiniteSimplicialSet>, copies: usize) -> Result<SimplicialMap, SimplicialError> {
    let (sum, _) = disjoint_union(&vec![x.clone(); copies])?;
    let images = (0..=x.window())
        .map(|n| (0..copies).flat_map(|_| (0..x.count(n)).map(move |i| Simplex::nondegenerate(n, i))).collect())
        .collect();
    Ok(SimplicialMap::from_trusted(sum, x.clone(), images))
}

/// The product `A × B` with its two projections.
pub fn product(
    a: &Arc<FiniteSimplicialSet>,
    b: &Arc<FiniteSimplicialSet>,
) -> Result<(Arc<FiniteSimplicialSet>, SimplicialMap, SimplicialMap), SimplicialError> {
    if a.window() != b.window() {
        return Err(SimplicialError::Window("factors have different windows".into()));
    }
    let d = a.window();
    let (ma, mb) = (materialize(a), materialize(b));
    let nb = |n: usize| mb.table.count(n);
    let mut t = SimplicialTable { window: d, ..Default::default() };
    for n in 0..=d {
        let (ca, cb) = (ma.table.count(n), nb(n));
        let mut labels = Vec::with_capacity(ca * cb);
        let mut faces = Vec::with_capacity(ca * cb);
        let mut degens = Vec::with_capacity(ca * cb);
        for x in 0..ca {
            for y in 0..cb {
                labels.push(format!("({},{})", ma.table.labels[n][x], mb.table.labels[n][y]));
                faces.push(if n == 0 {
                    Vec::new()
                } else {
                    (0..=n).map(|i| ma.table.faces[n][x][i] * nb(n - 1) + mb.table.faces[n][y][i]).collect()
                });
                degens.push(if n == d {
                    Vec::new()
                } else {
                    (0..=n).map(|i| ma.table.degeneracies[n][x][i] * nb(n + 1) + mb.table.degeneracies[n][y][i]).collect()
                });
            }
        }
        t.labels.push(labels);
        t.faces.push(faces);
        t.degeneracies.push(degens);
    }
    let norm = t.normalize();
    let set = Arc::new(norm.set.clone());
    let project = |which: usize| {
        let images = (0..=d)
            .map(|n| {
                norm.rows[n]
                    .iter()
                    .map(|&r| if which == 0 { ma.simplices[n][r / nb(n)].clone() } else { mb.simplices[n][r % nb(n)].clone() })
                    .collect()
            })
            .collect();
        SimplicialMap::from_trusted(set.clone(), if which == 0 { a.clone() } else { b.clone() }, images)
    };
    let (pa, pb) = (project(0), project(1));
    Ok((set, pa, pb))
}


/// The monotone map `[m] → [n]` of an `m`-simplex of `Δ[n]`; inverse to
/// [`delta_simplex`].
pub fn delta_map_of(n: usize, s: &Simplex) -> DeltaMap {
    let mono = &subsets(n + 1, s.base_dim + 1)[s.base];
    DeltaMap::new(n, s.degeneracy.values().iter().map(|&v| mono[v]).collect())
}

/// The simplicial map `Δ[m] → Δ[n]` induced by `α : [m] → [n]`.
pub fn simplex_map(alpha: &DeltaMap, window: usize) -> Result<SimplicialMap, SimplicialError> {
    let (m, n) = (alpha.source(), alpha.target());
    let dom = Arc::new(standard_simplex(m, window)?);
    let cod = Arc::new(standard_simplex(n, window)?);
    let images = (0..=window)
        .map(|k| {
            subsets(m + 1, k + 1)
                .into_iter()
                .map(|face| delta_simplex(n, &alpha.after(&DeltaMap::new(m, face))))
                .collect()
        })
        .collect();
    SimplicialMap::new(dom, cod, images)
}

/// The simplex of `Δ[n]` given by a monotone map `θ : [m] → [n]`, in the
/// presentation of [`standard_simplex`].
pub fn delta_simplex(n: usize, theta: &DeltaMap) -> Simplex {
    let (epi, mono) = theta.factor();
    let k = mono.source();
    let base = subsets(n + 1, k + 1).iter().position(|s| s.as_slice() == mono.values()).expect("face of Δ[n]");
    Simplex { base_dim: k, base, degeneracy: epi }
}
