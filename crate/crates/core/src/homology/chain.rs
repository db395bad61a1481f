use super::{HomologyError, SparseMatrix};
use crate::sset::{FiniteSimplicialSet, Simplex, SimplicialMap};

/// A chain complex of free abelian groups in degrees `0..=window`;
/// `boundaries[n] : C_n → C_{n-1}` (with `boundaries[0]` the zero map to
/// the zero group).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplex {
    pub ranks: Vec<usize>,
    pub boundaries: Vec<SparseMatrix>,
}

impl ChainComplex {
    pub fn new(ranks: Vec<usize>, boundaries: Vec<SparseMatrix>) -> Result<Self, HomologyError> {
        if ranks.is_empty() || boundaries.len() != ranks.len() {
            return Err(HomologyError::Shape("one boundary per degree".into()));
        }
        for (n, b) in boundaries.iter().enumerate() {
            let rows = if n == 0 { 0 } else { ranks[n - 1] };
            if b.cols != ranks[n] || b.rows != rows {
                return Err(HomologyError::Shape(format!("boundary in degree {n} has the wrong size")));
            }
        }
        let c = ChainComplex { ranks, boundaries };
        c.check_square_zero()?;
        Ok(c)
    }

    pub fn window(&self) -> usize {
        self.ranks.len() - 1
    }

    /// `∂_{n-1} ∂_n = 0` in every degree.
    pub fn check_square_zero(&self) -> Result<(), HomologyError> {
        for n in 2..self.ranks.len() {
            if !self.boundaries[n - 1].mul(&self.boundaries[n])?.is_zero() {
                return Err(HomologyError::NotAComplex(n));
            }
        }
        Ok(())
    }

    /// The same complex with the basis of every degree permuted.
    pub fn permuted(&self, perms: &[Vec<usize>]) -> ChainComplex {
        let boundaries = (0..self.ranks.len())
            .map(|n| {
                let rows: Vec<usize> = if n == 0 { Vec::new() } else { perms[n - 1].clone() };
                self.boundaries[n].permuted(&rows, &perms[n])
            })
            .collect();
        ChainComplex { ranks: self.ranks.clone(), boundaries }
    }
}

/// A chain map given by one matrix per degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainMap {
    pub source: ChainComplex,
    pub target: ChainComplex,
    pub matrices: Vec<SparseMatrix>,
}

impl ChainMap {
    pub fn new(source: ChainComplex, target: ChainComplex, matrices: Vec<SparseMatrix>) -> Result<Self, HomologyError> {
        let f = ChainMap { source, target, matrices };
        f.check()?;
        Ok(f)
    }

    fn check(&self) -> Result<(), HomologyError> {
        let d = self.source.window().min(self.target.window());
        if self.matrices.len() != d + 1 {
            return Err(HomologyError::Shape("one matrix per common degree".into()));
        }
        for n in 1..=d {
            let l = self.target.boundaries[n].mul(&self.matrices[n])?;
            let r = self.matrices[n - 1].mul(&self.source.boundaries[n])?;
            if l != r {
                return Err(HomologyError::NotAChainMap(n));
            }
        }
        Ok(())
    }

    /// The mapping cone: `C_n = A_{n-1} ⊕ B_n`, `∂(a, b) = (-∂a, f a + ∂b)`.
    pub fn cone(&self) -> Result<ChainComplex, HomologyError> {
        let d = self.matrices.len() - 1;
        let a = |n: usize| if n == 0 { 0 } else { self.source.ranks[n - 1] };
        let b = |n: usize| self.target.ranks[n];
        let ranks: Vec<usize> = (0..=d).map(|n| a(n) + b(n)).collect();
        let mut boundaries = vec![SparseMatrix::zeros(0, ranks[0])];
        for n in 1..=d {
            let (ra, rb) = (a(n - 1), b(n - 1));
            let mut entries = Vec::new();
            // columns 0..a(n): an (n-1)-chain a ↦ (-∂a, f a)
            if n >= 2 {
                for (c, col) in self.source.boundaries[n - 1].columns.iter().enumerate() {
                    for &(r, v) in col {
                        entries.push((r, c, -v));
                    }
                }
            }
            for (c, col) in self.matrices[n - 1].columns.iter().enumerate() {
                for &(r, v) in col {
                    entries.push((ra + r, c, v));
                }
            }
            // columns a(n)..: b ↦ ∂b
            for (c, col) in self.target.boundaries[n].columns.iter().enumerate() {
                for &(r, v) in col {
                    entries.push((ra + r, a(n) + c, v));
                }
            }
            boundaries.push(SparseMatrix::from_entries(ra + rb, ranks[n], entries)?);
        }
        ChainComplex::new(ranks, boundaries)
    }
}

/// Normalized chains: nondegenerate simplices, `∂ = Σ (-1)^i d_i` with
/// degenerate faces dropped.
pub fn normalized_chains(x: &FiniteSimplicialSet) -> ChainComplex {
    let d = x.window();
    let ranks: Vec<usize> = (0..=d).map(|n| x.count(n)).collect();
    let mut boundaries = vec![SparseMatrix::zeros(0, ranks[0])];
    for n in 1..=d {
        let mut entries = Vec::new();
        for s in 0..ranks[n] {
            for i in 0..=n {
                let f = x.nondegenerate_face(n, s, i);
                if !f.is_degenerate() {
                    entries.push((f.base, s, if i % 2 == 0 { 1 } else { -1 }));
                }
            }
        }
        boundaries.push(SparseMatrix::from_entries(ranks[n - 1], ranks[n], entries).expect("small coefficients"));
    }
    ChainComplex { ranks, boundaries }
}

/// The chain map of a simplicial map: a nondegenerate simplex goes to its
/// image when that is nondegenerate, and to zero otherwise.
pub fn induced_chain_map(f: &SimplicialMap) -> Result<ChainMap, HomologyError> {
    let source = normalized_chains(f.domain());
    let target = normalized_chains(f.codomain());
    let d = f.domain().window();
    let matrices = (0..=d)
        .map(|n| {
            let entries = (0..f.domain().count(n)).filter_map(|x| {
                let s: &Simplex = f.image(n, x);
                (!s.is_degenerate()).then_some((s.base, x, 1))
            });
            SparseMatrix::from_entries(f.codomain().count(n), f.domain().count(n), entries)
        })
        .collect::<Result<Vec<_>, _>>()?;
    let mut target = target;
    target.ranks.truncate(d + 1);
    target.boundaries.truncate(d + 1);
    ChainMap::new(source, target, matrices)
}
