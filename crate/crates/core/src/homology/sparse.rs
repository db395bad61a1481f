use std::collections::{BTreeMap, BTreeSet};

use super::matrix::{add, invariant_factors, mul, IntMatrix};
use super::HomologyError;

/// A sparse integer matrix stored by columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    pub rows: usize,
    pub cols: usize,
    /// `columns[c]` lists `(row, value)` with nonzero values, sorted by row
    pub columns: Vec<Vec<(usize, i64)>>,
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix { rows, cols, columns: vec![Vec::new(); cols] }
    }

    /// Builds from unsorted entries, summing duplicates.
    pub fn from_entries(rows: usize, cols: usize, entries: impl IntoIterator<Item = (usize, usize, i64)>) -> Result<Self, HomologyError> {
        let mut acc: Vec<BTreeMap<usize, i64>> = vec![BTreeMap::new(); cols];
        for (r, c, v) in entries {
            assert!(r < rows && c < cols, "entry outside the matrix");
            let e = acc[c].entry(r).or_insert(0);
            *e = add(*e, v)?;
        }
        let columns = acc.into_iter().map(|m| m.into_iter().filter(|&(_, v)| v != 0).collect()).collect();
        Ok(SparseMatrix { rows, cols, columns })
    }

    pub fn identity(n: usize) -> Self {
        SparseMatrix { rows: n, cols: n, columns: (0..n).map(|i| vec![(i, 1)]).collect() }
    }

    pub fn to_dense(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.rows, self.cols);
        for (c, col) in self.columns.iter().enumerate() {
            for &(r, v) in col {
                m.set(r, c, v);
            }
        }
        m
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    /// `self · other`
    pub fn mul(&self, other: &SparseMatrix) -> Result<SparseMatrix, HomologyError> {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut entries = Vec::new();
        for (c, col) in other.columns.iter().enumerate() {
            for &(k, b) in col {
                for &(r, a) in &self.columns[k] {
                    entries.push((r, c, mul(a, b)?));
                }
            }
        }
        SparseMatrix::from_entries(self.rows, other.cols, entries)
    }

    pub fn add(&self, other: &SparseMatrix) -> Result<SparseMatrix, HomologyError> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "dimension mismatch");
        let entries = self
            .columns
            .iter()
            .chain(&other.columns)
            .enumerate()
            .flat_map(|(i, col)| col.iter().map(move |&(r, v)| (r, i % self.cols, v)));
        SparseMatrix::from_entries(self.rows, self.cols, entries)
    }

    pub fn negate(&self) -> SparseMatrix {
        let columns = self.columns.iter().map(|col| col.iter().map(|&(r, v)| (r, -v)).collect()).collect();
        SparseMatrix { rows: self.rows, cols: self.cols, columns }
    }

    /// The same matrix with rows and columns permuted (`row_perm[old] = new`).
    pub fn permuted(&self, row_perm: &[usize], col_perm: &[usize]) -> SparseMatrix {
        let entries = self
            .columns
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |&(r, v)| (row_perm[r], col_perm[c], v)));
        SparseMatrix::from_entries(self.rows, self.cols, entries).expect("no new sums")
    }

    /// Rank and the invariant factors greater than one, computed by unit
    /// pivot elimination followed by a dense Smith normal form of what is
    /// left.
    pub fn elementary_divisors(&self) -> Result<(usize, Vec<i64>), HomologyError> {
        let mut rows: Vec<BTreeMap<usize, i64>> = vec![BTreeMap::new(); self.rows];
        let mut col_rows: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); self.cols];
        for (c, col) in self.columns.iter().enumerate() {
            for &(r, v) in col {
                if v == i64::MIN {
                    return Err(HomologyError::Overflow);
                }
                rows[r].insert(c, v);
                col_rows[c].insert(r);
            }
        }
        let mut rank = 0;
        loop {
            let mut progress = false;
            for c in 0..self.cols {
                let pivot = col_rows[c]
                    .iter()
                    .filter(|&&r| rows[r][&c].abs() == 1)
                    .min_by_key(|&&r| rows[r].len())
                    .copied();
                let Some(r) = pivot else { continue };
                let a = rows[r][&c];
                let pivot_row: Vec<(usize, i64)> = rows[r].iter().map(|(&j, &v)| (j, v)).collect();
                let others: Vec<usize> = col_rows[c].iter().copied().filter(|&x| x != r).collect();
                for o in others {
                    let f = mul(rows[o][&c], a)?;
                    for &(j, v) in &pivot_row {
                        let cur = rows[o].get(&j).copied().unwrap_or(0);
                        let new = add(cur, mul(-f, v)?)?;
                        if new == 0 {
                            rows[o].remove(&j);
                            col_rows[j].remove(&o);
                        } else {
                            rows[o].insert(j, new);
                            col_rows[j].insert(o);
                        }
                    }
                }
                for &(j, _) in &pivot_row {
                    col_rows[j].remove(&r);
                }
                rows[r].clear();
                rank += 1;
                progress = true;
            }
            if !progress {
                break;
            }
        }
        let live_rows: Vec<usize> = (0..self.rows).filter(|&r| !rows[r].is_empty()).collect();
        let live_cols: Vec<usize> = (0..self.cols).filter(|&c| !col_rows[c].is_empty()).collect();
        if live_rows.is_empty() {
            return Ok((rank, Vec::new()));
        }
        let col_pos: BTreeMap<usize, usize> = live_cols.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let mut dense = IntMatrix::zeros(live_rows.len(), live_cols.len());
        for (i, &r) in live_rows.iter().enumerate() {
            for (&c, &v) in &rows[r] {
                dense.set(i, col_pos[&c], v);
            }
        }
        let factors = invariant_factors(&dense)?;
        rank += factors.len();
        Ok((rank, factors.into_iter().filter(|&d| d > 1).collect()))
    }
}
