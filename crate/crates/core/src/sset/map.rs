use std::sync::Arc;

use super::{materialize, FiniteSimplicialSet, Materialized, Normalized, Simplex, SimplicialError};

/// A simplicial map, given by the image of each nondegenerate simplex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialMap {
    domain: Arc<FiniteSimplicialSet>,
    codomain: Arc<FiniteSimplicialSet>,
    images: Vec<Vec<Simplex>>,
}

impl SimplicialMap {
    /// Checks dimensions and `f(d_i x) = d_i f(x)` on nondegenerate `x`.
    pub fn new(
        domain: Arc<FiniteSimplicialSet>,
        codomain: Arc<FiniteSimplicialSet>,
        images: Vec<Vec<Simplex>>,
    ) -> Result<Self, SimplicialError> {
        if domain.window() > codomain.window() {
            return Err(SimplicialError::Window("domain window exceeds codomain window".into()));
        }
        let mut images = images;
        images.resize(domain.window() + 1, Vec::new());
        for n in 0..=domain.window() {
            if images[n].len() != domain.count(n) {
                return Err(SimplicialError::Map(format!("expected {} images in dimension {n}", domain.count(n))));
            }
            for (x, im) in images[n].iter().enumerate() {
                if im.dim() != n || im.base >= codomain.count(im.base_dim) || !im.degeneracy.is_surjective() {
                    return Err(SimplicialError::Map(format!("image of `{}` is malformed", domain.label(n, x))));
                }
            }
        }
        let f = SimplicialMap { domain, codomain, images };
        for n in 1..=f.domain.window() {
            for x in 0..f.domain.count(n) {
                let s = Simplex::nondegenerate(n, x);
                for i in 0..=n {
                    let l = f.apply(&f.domain.face(&s, i));
                    let r = f.codomain.face(&f.apply(&s), i);
                    if l != r {
                        return Err(SimplicialError::Map(format!(
                            "d_{i} not preserved on `{}`",
                            f.domain.label(n, x)
                        )));
                    }
                }
            }
        }
        Ok(f)
    }

    pub(crate) fn from_trusted(
        domain: Arc<FiniteSimplicialSet>,
        codomain: Arc<FiniteSimplicialSet>,
        images: Vec<Vec<Simplex>>,
    ) -> Self {
        SimplicialMap { domain, codomain, images }
    }

    /// The map induced by a row map between tables, where `rows[n][r]` is
    /// the codomain row of domain row `r`.
    pub(crate) fn from_rows(
        domain: &Normalized,
        codomain: &Normalized,
        rows: &[Vec<usize>],
    ) -> Self {
        let images = (0..=domain.set.window())
            .map(|n| domain.rows[n].iter().map(|&r| codomain.normal_forms[n][rows[n][r]].clone()).collect())
            .collect();
        SimplicialMap {
            domain: Arc::new(domain.set.clone()),
            codomain: Arc::new(codomain.set.clone()),
            images,
        }
    }

    pub fn identity(x: &Arc<FiniteSimplicialSet>) -> Self {
        let images = (0..=x.window()).map(|n| (0..x.count(n)).map(|i| Simplex::nondegenerate(n, i)).collect()).collect();
        SimplicialMap { domain: x.clone(), codomain: x.clone(), images }
    }

    /// The unique map out of the empty set, or into the point.
    pub fn constant_to(domain: &Arc<FiniteSimplicialSet>, codomain: &Arc<FiniteSimplicialSet>, vertex: usize) -> Self {
        let v = Simplex::nondegenerate(0, vertex);
        let images = (0..=domain.window())
            .map(|n| (0..domain.count(n)).map(|_| v.degenerate_along(&super::DeltaMap::new(0, vec![0; n + 1]))).collect())
            .collect();
        SimplicialMap { domain: domain.clone(), codomain: codomain.clone(), images }
    }

    /// The same map between the spaces re-windowed with
    /// [`FiniteSimplicialSet::with_window`].
    pub fn with_window(&self, window: usize) -> Self {
        let mut images = self.images.clone();
        images.resize(window + 1, Vec::new());
        SimplicialMap {
            domain: Arc::new(self.domain.with_window(window)),
            codomain: Arc::new(self.codomain.with_window(window)),
            images,
        }
    }

    pub fn domain(&self) -> &Arc<FiniteSimplicialSet> {
        &self.domain
    }

    pub fn codomain(&self) -> &Arc<FiniteSimplicialSet> {
        &self.codomain
    }

    pub fn image(&self, n: usize, x: usize) -> &Simplex {
        &self.images[n][x]
    }

    pub fn images(&self) -> &[Vec<Simplex>] {
        &self.images
    }

    /// Image of an arbitrary simplex: `f(y·η) = f(y)·η`.
    pub fn apply(&self, x: &Simplex) -> Simplex {
        self.images[x.base_dim][x.base].degenerate_along(&x.degeneracy)
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &SimplicialMap) -> Result<SimplicialMap, SimplicialError> {
        if *first.codomain != *self.domain {
            return Err(SimplicialError::Map("maps are not composable".into()));
        }
        let images = first.images.iter().map(|dim| dim.iter().map(|s| self.apply(s)).collect()).collect();
        Ok(SimplicialMap { domain: first.domain.clone(), codomain: self.codomain.clone(), images })
    }

    /// Every nondegenerate simplex goes to a nondegenerate simplex.
    pub fn is_reduced(&self) -> bool {
        self.images.iter().flatten().all(|s| !s.is_degenerate())
    }

    /// Injective on all simplices of the window.
    pub fn is_injective(&self) -> bool {
        if !self.is_reduced() {
            return false;
        }
        self.images.iter().all(|dim| {
            let mut seen = std::collections::HashSet::new();
            dim.iter().all(|s| seen.insert(s.base))
        })
    }

    /// Bijective on simplices of every dimension.
    pub fn is_isomorphism(&self) -> bool {
        self.is_injective() && (0..=self.domain.window()).all(|n| self.domain.count(n) == self.codomain.count(n))
    }

    /// Table form: `rows[n][r]` is the codomain row of domain row `r`.
    pub fn row_map(&self, dom: &Materialized, cod: &Materialized) -> Vec<Vec<usize>> {
        dom.simplices.iter().map(|dim| dim.iter().map(|s| cod.row(&self.apply(s))).collect()).collect()
    }

    /// Both materializations plus the row map.
    pub fn materialize(&self) -> (Materialized, Materialized, Vec<Vec<usize>>) {
        let dom = materialize(&self.domain);
        let cod = materialize(&self.codomain);
        let rows = self.row_map(&dom, &cod);
        (dom, cod, rows)
    }

    /// Exhaustive check that the map commutes with every face and degeneracy
    /// on every simplex of the domain window.
    pub fn check_operators(&self) -> Result<(), SimplicialError> {
        let (dom, cod, rows) = self.materialize();
        let d = self.domain.window();
        for n in 0..=d {
            for x in 0..dom.table.count(n) {
                if n > 0 {
                    for (i, &f) in dom.table.faces[n][x].iter().enumerate() {
                        if rows[n - 1][f] != cod.table.faces[n][rows[n][x]][i] {
                            return Err(SimplicialError::Map(format!("d_{i} in dimension {n}")));
                        }
                    }
                }
                if n < d {
                    for (i, &s) in dom.table.degeneracies[n][x].iter().enumerate() {
                        if rows[n + 1][s] != cod.table.degeneracies[n][rows[n][x]][i] {
                            return Err(SimplicialError::Map(format!("s_{i} in dimension {n}")));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}
