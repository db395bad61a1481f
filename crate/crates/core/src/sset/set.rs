use std::collections::HashMap;

use thiserror::Error;

use super::simplex::format_word;
use super::{materialize, DeltaMap, Simplex};
use crate::labels;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SimplicialError {
    #[error("invalid simplex label `{0}`")]
    InvalidLabel(String),
    #[error("duplicate simplex label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown simplex `{0}`")]
    UnknownSimplex(String),
    #[error("window violation: {0}")]
    Window(String),
    #[error("bad face data for `{simplex}`: {reason}")]
    Face { simplex: String, reason: String },
    #[error("simplicial identity fails: {0}")]
    Identity(String),
    #[error("not a simplicial map: {0}")]
    Map(String),
    #[error("map is not injective: {0}")]
    NotInjective(String),
    #[error("degeneracy word `{0}` is not normalized")]
    BadWord(String),
    #[error("{0}")]
    Construction(String),
}

/// A simplicial set truncated at dimension `window`, presented by its
/// nondegenerate simplices and their faces in normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteSimplicialSet {
    window: usize,
    labels: Vec<Vec<String>>,
    /// `faces[n][x][i] = d_i x` for `n ≥ 1`
    faces: Vec<Vec<Vec<Simplex>>>,
    index: HashMap<String, (usize, usize)>,
}

impl FiniteSimplicialSet {
    /// Validates the presentation: labels, face typing, normal forms and
    /// `d_i d_j = d_{j-1} d_i` on every nondegenerate simplex.
    pub fn new(
        window: usize,
        mut labels: Vec<Vec<String>>,
        mut faces: Vec<Vec<Vec<Simplex>>>,
    ) -> Result<Self, SimplicialError> {
        if labels.len() > window + 1 {
            if labels[window + 1..].iter().any(|l| !l.is_empty()) {
                return Err(SimplicialError::Window(format!("simplices above dimension {window}")));
            }
            labels.truncate(window + 1);
        }
        labels.resize(window + 1, Vec::new());
        faces.resize(window + 1, Vec::new());
        if faces[0].iter().any(|f| !f.is_empty()) {
            return Err(SimplicialError::Window("vertices have no faces".into()));
        }
        faces[0] = vec![Vec::new(); labels[0].len()];
        let mut index = HashMap::new();
        for (n, dim) in labels.iter().enumerate() {
            for (x, l) in dim.iter().enumerate() {
                if !labels::is_valid_label(l) {
                    return Err(SimplicialError::InvalidLabel(l.clone()));
                }
                if index.insert(l.clone(), (n, x)).is_some() {
                    return Err(SimplicialError::DuplicateLabel(l.clone()));
                }
            }
        }
        let set = FiniteSimplicialSet { window, labels, faces, index };
        set.check_faces()?;
        Ok(set)
    }

    /// Builds from data already known to be valid, priming duplicate labels.
    pub(crate) fn from_trusted(
        window: usize,
        mut labels: Vec<Vec<String>>,
        mut faces: Vec<Vec<Vec<Simplex>>>,
    ) -> Self {
        labels.resize(window + 1, Vec::new());
        faces.resize(window + 1, Vec::new());
        faces[0] = vec![Vec::new(); labels[0].len()];
        let mut flat: Vec<String> = labels.iter().flatten().map(|l| sanitize(l)).collect();
        labels::uniquify(&mut flat);
        let mut it = flat.into_iter();
        for dim in labels.iter_mut() {
            for l in dim.iter_mut() {
                *l = it.next().unwrap();
            }
        }
        let mut index = HashMap::new();
        for (n, dim) in labels.iter().enumerate() {
            for (x, l) in dim.iter().enumerate() {
                index.insert(l.clone(), (n, x));
            }
        }
        let set = FiniteSimplicialSet { window, labels, faces, index };
        debug_assert!(set.check_faces().is_ok(), "{:?}", set.check_faces());
        set
    }

    fn check_faces(&self) -> Result<(), SimplicialError> {
        for n in 1..=self.window {
            if self.faces[n].len() != self.labels[n].len() {
                return Err(SimplicialError::Face {
                    simplex: format!("dimension {n}"),
                    reason: "face table size mismatch".into(),
                });
            }
            for x in 0..self.labels[n].len() {
                let fs = &self.faces[n][x];
                let bad = |reason: &str| SimplicialError::Face { simplex: self.labels[n][x].clone(), reason: reason.into() };
                if fs.len() != n + 1 {
                    return Err(bad("wrong number of faces"));
                }
                for f in fs {
                    if f.dim() != n - 1 || !f.degeneracy.is_surjective() {
                        return Err(bad("face has the wrong dimension"));
                    }
                    if f.base >= self.labels[f.base_dim].len() {
                        return Err(bad("face refers to a missing simplex"));
                    }
                }
            }
        }
        for n in 2..=self.window {
            for x in 0..self.labels[n].len() {
                let s = Simplex::nondegenerate(n, x);
                for j in 0..=n {
                    for i in 0..j {
                        let l = self.face(&self.face(&s, j), i);
                        let r = self.face(&self.face(&s, i), j - 1);
                        if l != r {
                            return Err(SimplicialError::Identity(format!(
                                "d_{i} d_{j} != d_{} d_{i} on `{}`",
                                j - 1,
                                self.labels[n][x]
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn empty(window: usize) -> Self {
        FiniteSimplicialSet::from_trusted(window, vec![Vec::new(); window + 1], vec![Vec::new(); window + 1])
    }

    pub fn window(&self) -> usize {
        self.window
    }

    /// Number of nondegenerate simplices in dimension `n` (0 above the window).
    pub fn count(&self, n: usize) -> usize {
        self.labels.get(n).map_or(0, Vec::len)
    }

    pub fn counts(&self) -> Vec<usize> {
        self.labels.iter().map(Vec::len).collect()
    }

    pub fn total_count(&self) -> usize {
        self.labels.iter().map(Vec::len).sum()
    }

    pub fn label(&self, n: usize, x: usize) -> &str {
        &self.labels[n][x]
    }

    pub fn labels(&self, n: usize) -> &[String] {
        &self.labels[n]
    }

    pub fn lookup(&self, label: &str) -> Option<(usize, usize)> {
        self.index.get(label).copied()
    }

    /// `d_i` of a nondegenerate simplex, from the table.
    pub fn nondegenerate_face(&self, n: usize, x: usize, i: usize) -> &Simplex {
        &self.faces[n][x][i]
    }

    pub fn is_empty(&self) -> bool {
        self.labels.iter().all(Vec::is_empty)
    }

    /// `x · θ` for a monotone `θ : [m] → [dim x]`.
    pub fn apply(&self, x: &Simplex, theta: &DeltaMap) -> Simplex {
        let rho = x.degeneracy.after(theta);
        let (epi, mono) = rho.factor();
        let y = self.restrict(x.base_dim, x.base, &mono);
        y.degenerate_along(&epi)
    }

    /// `x · δ` for a nondegenerate `x` and an injective `δ`.
    fn restrict(&self, n: usize, x: usize, delta: &DeltaMap) -> Simplex {
        if delta.source() == n {
            return Simplex::nondegenerate(n, x);
        }
        let i = *delta.missing().last().expect("non-identity injection misses an index");
        let rest = DeltaMap::new(n - 1, delta.values().iter().map(|&v| if v < i { v } else { v - 1 }).collect());
        self.apply(&self.faces[n][x][i], &rest)
    }

    pub fn face(&self, x: &Simplex, i: usize) -> Simplex {
        self.apply(x, &DeltaMap::face(x.dim(), i))
    }

    /// `s_i x`; the result may lie above the window, in which case it is
    /// still a valid normal form but not part of the truncated set.
    pub fn degeneracy(&self, x: &Simplex, i: usize) -> Simplex {
        x.degenerate_along(&DeltaMap::degeneracy(x.dim(), i))
    }

    /// Every simplex (degenerate ones included) of dimension `n`:
    /// nondegenerate simplices first, then by decreasing base dimension.
    pub fn simplices(&self, n: usize) -> Vec<Simplex> {
        let mut out = Vec::new();
        for k in (0..=n.min(self.window)).rev() {
            let surj = DeltaMap::surjections(n, k);
            for x in 0..self.count(k) {
                for s in &surj {
                    out.push(Simplex { base_dim: k, base: x, degeneracy: s.clone() });
                }
            }
        }
        out
    }

    /// Number of all simplices (degenerate included) in dimension `n`.
    pub fn all_count(&self, n: usize) -> usize {
        (0..=n.min(self.window)).map(|k| self.count(k) * binomial(n, k)).sum()
    }

    /// Renders a simplex as `s_1s_0·x` (just `x` when nondegenerate).
    pub fn display(&self, x: &Simplex) -> String {
        let w = x.word();
        let l = &self.labels[x.base_dim][x.base];
        if w.is_empty() {
            l.clone()
        } else {
            format!("{}·{}", format_word(&w), l)
        }
    }

    /// A label-safe rendering such as `s_1s_0(x)`.
    pub fn display_label(&self, x: &Simplex) -> String {
        let w = x.word();
        let l = &self.labels[x.base_dim][x.base];
        if w.is_empty() {
            l.clone()
        } else {
            format!("{}({})", format_word(&w), l)
        }
    }

    /// Exhaustive check of all simplicial identities on every simplex of
    /// the window, degenerate ones included.
    pub fn check_identities(&self) -> Result<(), SimplicialError> {
        materialize(self).table.check_identities()
    }

    /// `Σ (-1)^n · #nondegenerate n-simplices` over the window.
    pub fn euler_characteristic(&self) -> i64 {
        self.labels.iter().enumerate().map(|(n, l)| if n % 2 == 0 { l.len() as i64 } else { -(l.len() as i64) }).sum()
    }

    /// Same set with window `window`: truncated, or padded with empty
    /// dimensions when the window grows.
    pub fn with_window(&self, window: usize) -> Self {
        if window <= self.window {
            return self.truncate(window);
        }
        let mut labels = self.labels.clone();
        let mut faces = self.faces.clone();
        labels.resize(window + 1, Vec::new());
        faces.resize(window + 1, Vec::new());
        FiniteSimplicialSet::from_trusted(window, labels, faces)
    }

    /// Same set with the window lowered to `window`.
    pub fn truncate(&self, window: usize) -> Self {
        let window = window.min(self.window);
        let mut labels = self.labels.clone();
        let mut faces = self.faces.clone();
        labels.truncate(window + 1);
        faces.truncate(window + 1);
        FiniteSimplicialSet::from_trusted(window, labels, faces)
    }
}

pub(crate) fn sanitize(label: &str) -> String {
    let s: String = label.chars().map(|c| if c.is_whitespace() || c == '·' { '_' } else { c }).collect();
    if s.is_empty() {
        "_".into()
    } else {
        s
    }
}

pub(crate) fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn interval_presentation() -> (Vec<Vec<String>>, Vec<Vec<Vec<Simplex>>>) {
        let labels = vec![vec!["a".into(), "b".into()], vec!["e".into()]];
        let faces = vec![vec![], vec![vec![Simplex::nondegenerate(0, 1), Simplex::nondegenerate(0, 0)]]];
        (labels, faces)
    }

    #[test]
    fn interval_faces() {
        let (l, f) = interval_presentation();
        let x = FiniteSimplicialSet::new(2, l, f).unwrap();
        let e = Simplex::nondegenerate(1, 0);
        assert_eq!(x.face(&e, 0), Simplex::nondegenerate(0, 1));
        let s0 = x.degeneracy(&e, 0);
        assert_eq!(x.face(&s0, 0), e);
        assert_eq!(x.face(&s0, 1), e);
        assert_eq!(x.display(&x.face(&s0, 2)), "s_0·a");
        assert_eq!(x.all_count(2), 2 + 2);
        x.check_identities().unwrap();
    }

    #[test]
    fn inconsistent_faces_rejected() {
        // a 2-simplex whose faces do not close up
        let labels = vec![vec!["a".into(), "b".into()], vec!["e".into()], vec!["t".into()]];
        let v = |i| Simplex::nondegenerate(0, i);
        let e = Simplex::nondegenerate(1, 0);
        let faces = vec![vec![], vec![vec![v(1), v(0)]], vec![vec![e.clone(), e.clone(), e.clone()]]];
        let err = FiniteSimplicialSet::new(2, labels, faces).unwrap_err();
        assert!(matches!(err, SimplicialError::Identity(_)));
    }

    #[test]
    fn labels_validated() {
        let (mut l, f) = interval_presentation();
        l[1][0] = "a".into();
        assert!(matches!(FiniteSimplicialSet::new(1, l, f), Err(SimplicialError::DuplicateLabel(_))));
        let (mut l, f) = interval_presentation();
        l[0][0] = "x y".into();
        assert!(matches!(FiniteSimplicialSet::new(1, l, f), Err(SimplicialError::InvalidLabel(_))));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(binomial(3, 0), 1);
        assert_eq!(binomial(2, 3), 0);
    }
}
