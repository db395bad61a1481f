use std::collections::HashMap;
use std::sync::Arc;

use super::{DeltaMap, FiniteSimplicialSet, Simplex, SimplicialError, SimplicialMap};
use crate::fincat::{FiniteCategory, Functor, Mor, Ob};

/// The nerve of a finite category truncated at a window, with the
/// correspondence between simplices and chains of morphisms.
///
/// An `n`-simplex is a chain `i_n → … → i_0`, stored as `[α_1, …, α_n]` with
/// `α_k : i_k → i_{k-1}`; vertex `k` is `i_k`. Nondegenerate simplices are
/// the chains without identities.
#[derive(Clone, Debug)]
pub struct Nerve {
    pub set: Arc<FiniteSimplicialSet>,
    pub category: Arc<FiniteCategory>,
    chains: Vec<Vec<Vec<Mor>>>,
    index: Vec<HashMap<Vec<Mor>, usize>>,
}

impl Nerve {
    pub fn new(category: &Arc<FiniteCategory>, window: usize) -> Self {
        let c = category;
        let mut chains: Vec<Vec<Vec<Mor>>> = vec![Vec::new(); window + 1];
        chains[0] = (0..c.object_count()).map(|_| Vec::new()).collect();
        if window >= 1 {
            chains[1] = c.proper_morphisms().map(|m| vec![m]).collect();
        }
        for n in 2..=window {
            let mut next = Vec::new();
            for ch in &chains[n - 1] {
                let last = *ch.last().unwrap();
                for &m in c.incoming(c.source(last)) {
                    if !c.is_identity(m) {
                        let mut e = ch.clone();
                        e.push(m);
                        next.push(e);
                    }
                }
            }
            chains[n] = next;
        }
        let index: Vec<HashMap<Vec<Mor>, usize>> = chains
            .iter()
            .map(|dim| dim.iter().enumerate().map(|(i, ch)| (ch.clone(), i)).collect())
            .collect();
        let mut nerve = Nerve { set: Arc::new(FiniteSimplicialSet::empty(window)), category: c.clone(), chains, index };
        let mut labels = vec![Vec::new(); window + 1];
        let mut faces = vec![Vec::new(); window + 1];
        labels[0] = c.objects().to_vec();
        faces[0] = vec![Vec::new(); c.object_count()];
        for n in 1..=window {
            for ch in &nerve.chains[n] {
                let names: Vec<&str> = ch.iter().rev().map(|&m| c.label(m)).collect();
                labels[n].push(names.join("|"));
                faces[n].push((0..=n).map(|i| nerve.face_of_chain(c.target(ch[0]), ch, i)).collect());
            }
        }
        nerve.set = Arc::new(FiniteSimplicialSet::from_trusted(window, labels, faces));
        nerve
    }

    fn face_of_chain(&self, vertex0: Ob, chain: &[Mor], i: usize) -> Simplex {
        let c = &self.category;
        let n = chain.len();
        let (v0, reduced): (Ob, Vec<Mor>) = if i == 0 {
            (c.source(chain[0]), chain[1..].to_vec())
        } else if i == n {
            (vertex0, chain[..n - 1].to_vec())
        } else {
            let mut r = chain.to_vec();
            let composite = c.compose(r[i - 1], r[i]);
            r.splice(i - 1..=i, [composite]);
            (vertex0, r)
        };
        self.simplex_of(v0, &reduced)
    }

    /// The simplex of an arbitrary chain (identities allowed). `vertex0` is
    /// `i_0` and only matters when the chain is empty.
    pub fn simplex_of(&self, vertex0: Ob, chain: &[Mor]) -> Simplex {
        let c = &self.category;
        let n = chain.len();
        let proper: Vec<Mor> = chain.iter().copied().filter(|&m| !c.is_identity(m)).collect();
        let k = proper.len();
        let mut eta = Vec::with_capacity(n + 1);
        let mut count = 0;
        eta.push(0);
        for &m in chain {
            if !c.is_identity(m) {
                count += 1;
            }
            eta.push(count);
        }
        let base = if k == 0 {
            chain.first().map_or(vertex0, |&m| c.target(m))
        } else {
            self.index[k][&proper]
        };
        Simplex { base_dim: k, base, degeneracy: DeltaMap::new(k, eta) }
    }

    /// `(i_0, [α_1, …, α_n])` of a simplex, identities included.
    pub fn chain_of(&self, s: &Simplex) -> (Ob, Vec<Mor>) {
        let c = &self.category;
        let base: &[Mor] = if s.base_dim == 0 { &[] } else { &self.chains[s.base_dim][s.base] };
        let vertex = |p: usize| -> Ob {
            if s.base_dim == 0 {
                s.base
            } else if p == 0 {
                c.target(base[0])
            } else {
                c.source(base[p - 1])
            }
        };
        let eta = s.degeneracy.values();
        let chain = (1..eta.len())
            .map(|j| if eta[j] == eta[j - 1] { c.identity(vertex(eta[j])) } else { base[eta[j] - 1] })
            .collect();
        (vertex(0), chain)
    }

    /// Vertex `k` of a simplex.
    pub fn vertex(&self, s: &Simplex, k: usize) -> Ob {
        let (v0, chain) = self.chain_of(s);
        if k == 0 {
            v0
        } else {
            self.category.source(chain[k - 1])
        }
    }

    /// The nondegenerate chain at `(n, x)`.
    pub fn chain(&self, n: usize, x: usize) -> &[Mor] {
        &self.chains[n][x]
    }
}

/// `N(C)` truncated at `window`.
pub fn nerve(c: &Arc<FiniteCategory>, window: usize) -> FiniteSimplicialSet {
    (*Nerve::new(c, window).set).clone()
}

/// `N(F) : N(A) → N(B)` for nerves built with compatible windows.
pub fn nerve_map(f: &Functor, source: &Nerve, target: &Nerve) -> Result<SimplicialMap, SimplicialError> {
    if *source.category != **f.domain() || *target.category != **f.codomain() {
        return Err(SimplicialError::Map("nerves do not match the functor".into()));
    }
    if source.set.window() > target.set.window() {
        return Err(SimplicialError::Window("target nerve window is too small".into()));
    }
    let d = source.set.window();
    let images = (0..=d)
        .map(|n| {
            (0..source.set.count(n))
                .map(|x| {
                    let (v0, ch) = source.chain_of(&Simplex::nondegenerate(n, x));
                    let mapped: Vec<Mor> = ch.iter().map(|&m| f.morphism(m)).collect();
                    target.simplex_of(f.object(v0), &mapped)
                })
                .collect()
        })
        .collect();
    Ok(SimplicialMap::from_trusted(source.set.clone(), target.set.clone(), images))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z2() -> Arc<FiniteCategory> {
        Arc::new(FiniteCategory::one_object("*", &["e", "t"], 0, &[vec![0, 1], vec![1, 0]]).unwrap())
    }

    #[test]
    fn nerve_counts() {
        assert_eq!(nerve(&Arc::new(FiniteCategory::ordinal(0)), 3).counts(), vec![1, 0, 0, 0]);
        assert_eq!(nerve(&Arc::new(FiniteCategory::ordinal(1)), 3).counts(), vec![2, 1, 0, 0]);
        assert_eq!(nerve(&z2(), 3).counts(), vec![1, 1, 1, 1]);
        assert_eq!(nerve(&Arc::new(FiniteCategory::ordinal(2)), 3).counts(), vec![3, 3, 1, 0]);
    }

    #[test]
    fn nerve_satisfies_identities() {
        for c in [z2(), Arc::new(FiniteCategory::ordinal(2))] {
            nerve(&c, 4).check_identities().unwrap();
        }
    }

    #[test]
    fn faces_compose_and_truncate() {
        let c = z2();
        let n = Nerve::new(&c, 3);
        let t = c.morphism_by_label("t").unwrap();
        let tt = Simplex::nondegenerate(2, 0);
        assert_eq!(n.chain(2, 0), &[t, t]);
        // d_1 composes t∘t = e: a degenerate edge
        let d1 = n.set.face(&tt, 1);
        assert!(d1.is_degenerate());
        assert_eq!(n.chain_of(&d1), (0, vec![c.identity(0)]));
        assert_eq!(n.set.face(&tt, 0), Simplex::nondegenerate(1, 0));
    }

    #[test]
    fn chain_round_trip() {
        let c = Arc::new(FiniteCategory::ordinal(2));
        let n = Nerve::new(&c, 3);
        for dim in 0..=3 {
            for s in n.set.simplices(dim) {
                let (v0, ch) = n.chain_of(&s);
                assert_eq!(n.simplex_of(v0, &ch), s);
            }
        }
    }

    #[test]
    fn nerve_is_functorial() {
        let one = Arc::new(FiniteCategory::ordinal(1));
        let two = Arc::new(FiniteCategory::ordinal(2));
        let f = Functor::between_thin(&one, &two, vec![0, 2]).unwrap();
        let g = Functor::between_thin(&two, &one, vec![0, 1, 1]).unwrap();
        let (n1, n2) = (Nerve::new(&one, 3), Nerve::new(&two, 3));
        let nf = nerve_map(&f, &n1, &n2).unwrap();
        let ng = nerve_map(&g, &n2, &n1).unwrap();
        nf.check_operators().unwrap();
        ng.check_operators().unwrap();
        let gf = g.after(&f).unwrap();
        assert_eq!(nerve_map(&gf, &n1, &n1).unwrap(), ng.after(&nf).unwrap());
    }
}
