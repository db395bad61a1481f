use super::{FiniteSimplicialSet, Normalized, SimplicialError, SimplicialTable};

/// A bisimplicial set truncated at `(window, window)`, with every
/// bisimplex listed. Index order is `[p][q][x]`; `p` is horizontal.
#[derive(Clone, Debug, Default)]
pub struct BisimplicialSet {
    pub window: (usize, usize),
    pub labels: Vec<Vec<Vec<String>>>,
    /// `(p, q) → (p-1, q)`
    pub h_faces: Vec<Vec<Vec<Vec<usize>>>>,
    /// `(p, q) → (p, q-1)`
    pub v_faces: Vec<Vec<Vec<Vec<usize>>>>,
    /// `(p, q) → (p+1, q)`, empty at the horizontal window
    pub h_degeneracies: Vec<Vec<Vec<Vec<usize>>>>,
    /// `(p, q) → (p, q+1)`, empty at the vertical window
    pub v_degeneracies: Vec<Vec<Vec<Vec<usize>>>>,
}

impl BisimplicialSet {
    pub fn count(&self, p: usize, q: usize) -> usize {
        self.labels[p][q].len()
    }

    /// The constant bisimplicial set with every row equal to `table`.
    pub fn constant_rows(table: &SimplicialTable, horizontal_window: usize) -> Self {
        let d = table.window;
        let mut b = BisimplicialSet { window: (horizontal_window, d), ..Default::default() };
        for p in 0..=horizontal_window {
            b.labels.push(table.labels.clone());
            b.v_faces.push(table.faces.clone());
            b.v_degeneracies.push(table.degeneracies.clone());
            let ident = |q: usize, k: usize| -> Vec<Vec<usize>> { (0..table.count(q)).map(|x| vec![x; k]).collect() };
            b.h_faces.push((0..=d).map(|q| ident(q, if p == 0 { 0 } else { p + 1 })).collect());
            b.h_degeneracies.push((0..=d).map(|q| ident(q, if p == horizontal_window { 0 } else { p + 1 })).collect());
        }
        b
    }

    /// Swaps the horizontal and vertical directions.
    pub fn transpose(&self) -> Self {
        let (dh, dv) = self.window;
        let swap = |t: &Vec<Vec<Vec<Vec<usize>>>>| -> Vec<Vec<Vec<Vec<usize>>>> {
            (0..=dv).map(|q| (0..=dh).map(|p| t[p][q].clone()).collect()).collect()
        };
        BisimplicialSet {
            window: (dv, dh),
            labels: (0..=dv).map(|q| (0..=dh).map(|p| self.labels[p][q].clone()).collect()).collect(),
            h_faces: swap(&self.v_faces),
            v_faces: swap(&self.h_faces),
            h_degeneracies: swap(&self.v_degeneracies),
            v_degeneracies: swap(&self.h_degeneracies),
        }
    }

    /// Vertical simplicial set at horizontal level `p`.
    pub fn vertical(&self, p: usize) -> SimplicialTable {
        SimplicialTable {
            window: self.window.1,
            labels: self.labels[p].clone(),
            faces: self.v_faces[p].clone(),
            degeneracies: self.v_degeneracies[p].clone(),
        }
    }

    /// Horizontal simplicial set at vertical level `q`.
    pub fn horizontal(&self, q: usize) -> SimplicialTable {
        let d = self.window.0;
        SimplicialTable {
            window: d,
            labels: (0..=d).map(|p| self.labels[p][q].clone()).collect(),
            faces: (0..=d).map(|p| self.h_faces[p][q].clone()).collect(),
            degeneracies: (0..=d).map(|p| self.h_degeneracies[p][q].clone()).collect(),
        }
    }

    /// Simplicial identities in both directions and commutation of the
    /// horizontal and vertical operators.
    pub fn check_identities(&self) -> Result<(), SimplicialError> {
        let (dh, dv) = self.window;
        for p in 0..=dh {
            self.vertical(p).check_identities().map_err(|e| SimplicialError::Identity(format!("vertical, p = {p}: {e}")))?;
        }
        for q in 0..=dv {
            self.horizontal(q).check_identities().map_err(|e| SimplicialError::Identity(format!("horizontal, q = {q}: {e}")))?;
        }
        let fail = |w: String| Err(SimplicialError::Identity(format!("operators do not commute: {w}")));
        for p in 0..=dh {
            for q in 0..=dv {
                for x in 0..self.count(p, q) {
                    let hf = |p: usize, q: usize, x: usize, i: usize| self.h_faces[p][q][x][i];
                    let vf = |p: usize, q: usize, x: usize, i: usize| self.v_faces[p][q][x][i];
                    let hs = |p: usize, q: usize, x: usize, i: usize| self.h_degeneracies[p][q][x][i];
                    let vs = |p: usize, q: usize, x: usize, i: usize| self.v_degeneracies[p][q][x][i];
                    for i in 0..=p {
                        for j in 0..=q {
                            if p > 0 && q > 0 && hf(p, q - 1, vf(p, q, x, j), i) != vf(p - 1, q, hf(p, q, x, i), j) {
                                return fail(format!("d^h_{i} d^v_{j} at ({p},{q})"));
                            }
                            if p < dh && q > 0 && hs(p, q - 1, vf(p, q, x, j), i) != vf(p + 1, q, hs(p, q, x, i), j) {
                                return fail(format!("s^h_{i} d^v_{j} at ({p},{q})"));
                            }
                            if p > 0 && q < dv && hf(p, q + 1, vs(p, q, x, j), i) != vs(p - 1, q, hf(p, q, x, i), j) {
                                return fail(format!("d^h_{i} s^v_{j} at ({p},{q})"));
                            }
                            if p < dh && q < dv && hs(p, q + 1, vs(p, q, x, j), i) != vs(p + 1, q, hs(p, q, x, i), j) {
                                return fail(format!("s^h_{i} s^v_{j} at ({p},{q})"));
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// The diagonal table: `n`-simplices are the `(n, n)` bisimplices with
    /// `d_i = d^h_i d^v_i` and `s_i = s^h_i s^v_i`.
    pub fn diagonal_table(&self) -> Result<SimplicialTable, SimplicialError> {
        let (dh, dv) = self.window;
        if dh != dv {
            return Err(SimplicialError::Window(format!("diagonal needs a square window, got ({dh}, {dv})")));
        }
        let mut t = SimplicialTable { window: dh, ..Default::default() };
        for n in 0..=dh {
            t.labels.push(self.labels[n][n].clone());
            t.faces.push(
                (0..self.count(n, n))
                    .map(|x| {
                        if n == 0 {
                            Vec::new()
                        } else {
                            (0..=n).map(|i| self.h_faces[n][n - 1][self.v_faces[n][n][x][i]][i]).collect()
                        }
                    })
                    .collect(),
            );
            t.degeneracies.push(
                (0..self.count(n, n))
                    .map(|x| {
                        if n == dh {
                            Vec::new()
                        } else {
                            (0..=n).map(|i| self.h_degeneracies[n][n + 1][self.v_degeneracies[n][n][x][i]][i]).collect()
                        }
                    })
                    .collect(),
            );
        }
        Ok(t)
    }

    pub fn diagonal(&self) -> Result<Normalized, SimplicialError> {
        Ok(self.diagonal_table()?.normalize())
    }
}

/// The diagonal of a bisimplicial set as a simplicial set.
pub fn diagonal(b: &BisimplicialSet) -> Result<FiniteSimplicialSet, SimplicialError> {
    Ok(b.diagonal()?.set)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sset::{materialize, standard_simplex};

    #[test]
    fn constant_diagonal_is_the_value() {
        let x = standard_simplex(2, 3).unwrap();
        let b = BisimplicialSet::constant_rows(&materialize(&x).table, 3);
        b.check_identities().unwrap();
        assert_eq!(diagonal(&b).unwrap(), x);
        let t = b.transpose();
        t.check_identities().unwrap();
        assert_eq!(diagonal(&t).unwrap(), x);
    }

    #[test]
    fn non_square_window_rejected() {
        let x = standard_simplex(1, 2).unwrap();
        let b = BisimplicialSet::constant_rows(&materialize(&x).table, 3);
        assert!(diagonal(&b).is_err());
    }
}
