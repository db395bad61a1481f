use std::collections::HashMap;

use super::{DeltaMap, FiniteSimplicialSet, Simplex, SimplicialError};

/// A truncated simplicial set with every simplex listed explicitly,
/// degenerate ones included. Constructions (products, colimits, pullbacks,
/// diagonals) are carried out on tables and then normalized.
#[derive(Clone, Debug, Default)]
pub struct SimplicialTable {
    pub window: usize,
    /// a label per simplex; only the labels of nondegenerate simplices survive
    pub labels: Vec<Vec<String>>,
    /// `faces[n][x][i]`, an index in dimension `n-1`
    pub faces: Vec<Vec<Vec<usize>>>,
    /// `degeneracies[n][x][i]`, an index in dimension `n+1`; empty at the window
    pub degeneracies: Vec<Vec<Vec<usize>>>,
}

/// The result of normalizing a table.
#[derive(Clone, Debug)]
pub struct Normalized {
    pub set: FiniteSimplicialSet,
    /// normal form of every table row
    pub normal_forms: Vec<Vec<Simplex>>,
    /// table row of every nondegenerate simplex
    pub rows: Vec<Vec<usize>>,
}

/// A simplicial set together with its full table of simplices.
#[derive(Clone, Debug)]
pub struct Materialized {
    pub table: SimplicialTable,
    pub simplices: Vec<Vec<Simplex>>,
    pub index: Vec<HashMap<Simplex, usize>>,
}

impl Materialized {
    pub fn row(&self, x: &Simplex) -> usize {
        self.index[x.dim()][x]
    }
}

impl SimplicialTable {
    pub fn count(&self, n: usize) -> usize {
        self.labels.get(n).map_or(0, Vec::len)
    }

    /// Checks every simplicial identity on every row.
    pub fn check_identities(&self) -> Result<(), SimplicialError> {
        let d = self.window;
        let fail = |what: String| Err(SimplicialError::Identity(what));
        for n in 0..=d {
            if self.faces[n].len() != self.count(n) || self.degeneracies[n].len() != self.count(n) {
                return fail(format!("table size mismatch in dimension {n}"));
            }
            for x in 0..self.count(n) {
                let nf = if n == 0 { 0 } else { n + 1 };
                let nd = if n == d { 0 } else { n + 1 };
                if self.faces[n][x].len() != nf || self.degeneracies[n][x].len() != nd {
                    return fail(format!("operator count at row {x} of dimension {n}"));
                }
            }
        }
        let face = |n: usize, x: usize, i: usize| self.faces[n][x][i];
        let degen = |n: usize, x: usize, i: usize| self.degeneracies[n][x][i];
        for n in 2..=d {
            for x in 0..self.count(n) {
                for j in 0..=n {
                    for i in 0..j {
                        if face(n - 1, face(n, x, j), i) != face(n - 1, face(n, x, i), j - 1) {
                            return fail(format!("d_{i} d_{j} in dimension {n}, row {x}"));
                        }
                    }
                }
            }
        }
        for n in 0..d {
            for x in 0..self.count(n) {
                for j in 0..=n {
                    let y = degen(n, x, j);
                    for i in 0..=n + 1 {
                        let l = face(n + 1, y, i);
                        let ok = if i == j || i == j + 1 {
                            l == x
                        } else if i < j {
                            l == degen(n - 1, face(n, x, i), j - 1)
                        } else {
                            l == degen(n - 1, face(n, x, i - 1), j)
                        };
                        if !ok {
                            return fail(format!("d_{i} s_{j} in dimension {n}, row {x}"));
                        }
                    }
                }
            }
        }
        for n in 0..d.saturating_sub(1) {
            for x in 0..self.count(n) {
                for j in 0..=n {
                    for i in 0..=j {
                        if degen(n + 1, degen(n, x, j), i) != degen(n + 1, degen(n, x, i), j + 1) {
                            return fail(format!("s_{i} s_{j} in dimension {n}, row {x}"));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Eilenberg–Zilber normalization: a row is degenerate when it is
    /// `s_i` of a lower row; the remaining rows become the nondegenerate
    /// simplices, in row order.
    pub fn normalize(&self) -> Normalized {
        let d = self.window;
        let mut normal_forms: Vec<Vec<Simplex>> = Vec::with_capacity(d + 1);
        let mut rows: Vec<Vec<usize>> = Vec::with_capacity(d + 1);
        let mut labels = Vec::with_capacity(d + 1);
        let mut faces = Vec::with_capacity(d + 1);
        for n in 0..=d {
            let mut origin: Vec<Option<(usize, usize)>> = vec![None; self.count(n)];
            if n > 0 {
                for y in 0..self.count(n - 1) {
                    for (i, &x) in self.degeneracies[n - 1][y].iter().enumerate() {
                        if origin[x].is_none() {
                            origin[x] = Some((y, i));
                        }
                    }
                }
            }
            let mut nf = Vec::with_capacity(self.count(n));
            let mut nd_rows = Vec::new();
            let mut nd_labels = Vec::new();
            for (x, o) in origin.iter().enumerate() {
                match o {
                    Some((y, i)) => {
                        let below: &Simplex = &normal_forms[n - 1][*y];
                        nf.push(below.degenerate_along(&DeltaMap::degeneracy(n - 1, *i)));
                    }
                    None => {
                        nf.push(Simplex::nondegenerate(n, nd_rows.len()));
                        nd_rows.push(x);
                        nd_labels.push(self.labels[n][x].clone());
                    }
                }
            }
            let nd_faces: Vec<Vec<Simplex>> = if n == 0 {
                vec![Vec::new(); nd_rows.len()]
            } else {
                nd_rows
                    .iter()
                    .map(|&x| self.faces[n][x].iter().map(|&f| normal_forms[n - 1][f].clone()).collect())
                    .collect()
            };
            normal_forms.push(nf);
            rows.push(nd_rows);
            labels.push(nd_labels);
            faces.push(nd_faces);
        }
        let set = FiniteSimplicialSet::from_trusted(d, labels, faces);
        Normalized { set, normal_forms, rows }
    }
}

/// Lists every simplex of the window with its face and degeneracy rows.
pub fn materialize(x: &FiniteSimplicialSet) -> Materialized {
    let d = x.window();
    let simplices: Vec<Vec<Simplex>> = (0..=d).map(|n| x.simplices(n)).collect();
    let index: Vec<HashMap<Simplex, usize>> = simplices
        .iter()
        .map(|v| v.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect())
        .collect();
    let mut table = SimplicialTable { window: d, ..Default::default() };
    for n in 0..=d {
        table.labels.push(simplices[n].iter().map(|s| x.display_label(s)).collect());
        table.faces.push(
            simplices[n]
                .iter()
                .map(|s| if n == 0 { Vec::new() } else { (0..=n).map(|i| index[n - 1][&x.face(s, i)]).collect() })
                .collect(),
        );
        table.degeneracies.push(
            simplices[n]
                .iter()
                .map(|s| if n == d { Vec::new() } else { (0..=n).map(|i| index[n + 1][&x.degeneracy(s, i)]).collect() })
                .collect(),
        );
    }
    Materialized { table, simplices, index }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sset::{boundary, standard_simplex};

    #[test]
    fn normalization_is_idempotent() {
        for x in [standard_simplex(2, 3).unwrap(), boundary(2, 3).unwrap(), standard_simplex(1, 4).unwrap()] {
            let m = materialize(&x);
            m.table.check_identities().unwrap();
            let n = m.table.normalize();
            assert_eq!(n.set, x);
            for (dim, row) in n.normal_forms.iter().enumerate() {
                assert_eq!(row, &m.simplices[dim]);
            }
        }
    }

    #[test]
    fn broken_table_detected() {
        let mut m = materialize(&standard_simplex(1, 2).unwrap()).table;
        m.faces[1][0].swap(0, 1);
        assert!(m.check_identities().is_err());
    }
}
