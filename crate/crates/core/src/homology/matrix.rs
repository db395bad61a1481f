use std::fmt;

use super::HomologyError;

/// A dense integer matrix, row-major, with overflow-checked arithmetic.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<&[i64]> = (0..self.rows).map(|r| self.row(r)).collect();
        write!(f, "{rows:?}")
    }
}

pub(crate) fn add(a: i64, b: i64) -> Result<i64, HomologyError> {
    a.checked_add(b).ok_or(HomologyError::Overflow)
}

pub(crate) fn mul(a: i64, b: i64) -> Result<i64, HomologyError> {
    a.checked_mul(b).ok_or(HomologyError::Overflow)
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// # Panics
    /// If the rows have different lengths.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        IntMatrix { rows: rows.len(), cols, data: rows.concat() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[i64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix, HomologyError> {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let v = add(out.get(i, j), mul(a, other.get(k, j))?)?;
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.data.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for r in 0..self.rows {
                self.data.swap(r * self.cols + a, r * self.cols + b);
            }
        }
    }

    /// `(row[a], row[b]) ← (p·row[a] + q·row[b], r·row[a] + s·row[b])`
    fn mix_rows(&mut self, a: usize, b: usize, [p, q, r, s]: [i64; 4]) -> Result<(), HomologyError> {
        for c in 0..self.cols {
            let (x, y) = (self.get(a, c), self.get(b, c));
            self.set(a, c, add(mul(p, x)?, mul(q, y)?)?);
            self.set(b, c, add(mul(r, x)?, mul(s, y)?)?);
        }
        Ok(())
    }

    /// `(col[a], col[b]) ← (p·col[a] + q·col[b], r·col[a] + s·col[b])`
    fn mix_cols(&mut self, a: usize, b: usize, [p, q, r, s]: [i64; 4]) -> Result<(), HomologyError> {
        for row in 0..self.rows {
            let (x, y) = (self.get(row, a), self.get(row, b));
            self.set(row, a, add(mul(p, x)?, mul(q, y)?)?);
            self.set(row, b, add(mul(r, x)?, mul(s, y)?)?);
        }
        Ok(())
    }

    /// `row[dst] += k · row[src]`
    fn add_row(&mut self, dst: usize, src: usize, k: i64) -> Result<(), HomologyError> {
        for c in 0..self.cols {
            let v = add(self.get(dst, c), mul(k, self.get(src, c))?)?;
            self.set(dst, c, v);
        }
        Ok(())
    }

    /// `col[dst] += k · col[src]`
    fn add_col(&mut self, dst: usize, src: usize, k: i64) -> Result<(), HomologyError> {
        for r in 0..self.rows {
            let v = add(self.get(r, dst), mul(k, self.get(r, src))?)?;
            self.set(r, dst, v);
        }
        Ok(())
    }

    fn negate_row(&mut self, r: usize) {
        for c in 0..self.cols {
            let v = -self.get(r, c);
            self.set(r, c, v);
        }
    }

    fn negate_col(&mut self, c: usize) {
        for r in 0..self.rows {
            let v = -self.get(r, c);
            self.set(r, c, v);
        }
    }

    /// Exact determinant by fraction-free (Bareiss) elimination in `i128`.
    pub fn determinant(&self) -> Result<i64, HomologyError> {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        let mut a: Vec<Vec<i128>> = (0..n).map(|r| self.row(r).iter().map(|&v| v as i128).collect()).collect();
        let mut sign = 1i128;
        let mut prev = 1i128;
        for k in 0..n {
            if a[k][k] == 0 {
                match (k + 1..n).find(|&r| a[r][k] != 0) {
                    Some(r) => {
                        a.swap(k, r);
                        sign = -sign;
                    }
                    None => return Ok(0),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = a[i][j]
                        .checked_mul(a[k][k])
                        .and_then(|x| x.checked_sub(a[i][k].checked_mul(a[k][j])?))
                        .ok_or(HomologyError::Overflow)?;
                    a[i][j] = v / prev;
                }
            }
            prev = a[k][k];
        }
        let det = if n == 0 { 1 } else { sign * a[n - 1][n - 1] };
        i64::try_from(det).map_err(|_| HomologyError::Overflow)
    }
}

/// `U · S · V = M` with `S` diagonal, non-negative, each diagonal entry
/// dividing the next, and `U`, `V` unimodular.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub u: IntMatrix,
    pub s: IntMatrix,
    pub v: IntMatrix,
}

impl SmithForm {
    /// Nonzero diagonal entries of `S`.
    pub fn invariant_factors(&self) -> Vec<i64> {
        (0..self.s.rows.min(self.s.cols)).map(|i| self.s.get(i, i)).filter(|&d| d != 0).collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

/// `(g, x, y)` with `x·a + y·b = g = gcd(a, b)`.
fn extended_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let (mut r0, mut r1) = (a, b);
    let (mut x0, mut x1) = (1i64, 0i64);
    let (mut y0, mut y1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (x0, x1) = (x1, x0 - q * x1);
        (y0, y1) = (y1, y0 - q * y1);
    }
    (r0, x0, y0)
}

/// `a / p` rounded to the nearest integer.
fn nearest_quotient(a: i64, p: i64) -> i64 {
    let q = a / p;
    let r = a - q * p;
    if 2 * r.unsigned_abs() > p.unsigned_abs() {
        q + r.signum() * p.signum()
    } else {
        q
    }
}

struct Reducer {
    s: IntMatrix,
    u: Option<IntMatrix>,
    v: Option<IntMatrix>,
}

impl Reducer {
    // each row operation on S is mirrored on U's columns, each column
    // operation on S on V's rows, keeping U·S·V fixed
    fn swap_rows(&mut self, a: usize, b: usize) {
        self.s.swap_rows(a, b);
        if let Some(u) = &mut self.u {
            u.swap_cols(a, b);
        }
    }
    fn swap_cols(&mut self, a: usize, b: usize) {
        self.s.swap_cols(a, b);
        if let Some(v) = &mut self.v {
            v.swap_rows(a, b);
        }
    }
    fn add_row(&mut self, dst: usize, src: usize, k: i64) -> Result<(), HomologyError> {
        self.s.add_row(dst, src, k)?;
        if let Some(u) = &mut self.u {
            u.add_col(src, dst, k.checked_neg().ok_or(HomologyError::Overflow)?)?;
        }
        Ok(())
    }
    fn add_col(&mut self, dst: usize, src: usize, k: i64) -> Result<(), HomologyError> {
        self.s.add_col(dst, src, k)?;
        if let Some(v) = &mut self.v {
            v.add_row(src, dst, k.checked_neg().ok_or(HomologyError::Overflow)?)?;
        }
        Ok(())
    }
    fn negate_row(&mut self, r: usize) {
        self.s.negate_row(r);
        if let Some(u) = &mut self.u {
            u.negate_col(r);
        }
    }

    fn run(&mut self) -> Result<(), HomologyError> {
        let rank = self.diagonalize()?;
        for i in 0..rank {
            for j in i + 1..rank {
                self.gcd_lcm(i, j)?;
            }
        }
        for t in 0..rank {
            if self.s.get(t, t) < 0 {
                self.negate_row(t);
            }
        }
        Ok(())
    }

    /// Brings `S` to diagonal form by Euclidean steps on the smallest entry
    /// and returns the number of nonzero diagonal entries.
    fn diagonalize(&mut self) -> Result<usize, HomologyError> {
        let (m, n) = (self.s.rows, self.s.cols);
        for t in 0..m.min(n) {
            loop {
                let Some((pr, pc)) = self.min_entry(t) else { return Ok(t) };
                self.swap_rows(t, pr);
                self.swap_cols(t, pc);
                let p = self.s.get(t, t);
                let mut clean = true;
                for i in t + 1..m {
                    let q = nearest_quotient(self.s.get(i, t), p);
                    if q != 0 {
                        self.add_row(i, t, -q)?;
                    }
                    clean &= self.s.get(i, t) == 0;
                }
                for j in t + 1..n {
                    let q = nearest_quotient(self.s.get(t, j), p);
                    if q != 0 {
                        self.add_col(j, t, -q)?;
                    }
                    clean &= self.s.get(t, j) == 0;
                }
                if clean {
                    break;
                }
            }
        }
        Ok(m.min(n))
    }

    /// Replaces the diagonal pair `(a, b)` at `i < j` by `(gcd, ab / gcd)`.
    fn gcd_lcm(&mut self, i: usize, j: usize) -> Result<(), HomologyError> {
        let (a, b) = (self.s.get(i, i), self.s.get(j, j));
        if b % a == 0 {
            return Ok(());
        }
        let (g, x, y) = extended_gcd(a, b);
        self.s.set(i, i, g);
        self.s.set(j, j, mul(a / g, b)?);
        if let Some(u) = &mut self.u {
            u.mix_cols(i, j, [a / g, b / g, -y, x])?;
        }
        if let Some(v) = &mut self.v {
            v.mix_rows(i, j, [mul(x, a / g)?, mul(y, b / g)?, -1, 1])?;
        }
        Ok(())
    }

    fn min_entry(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, i64)> = None;
        for i in t..self.s.rows {
            for j in t..self.s.cols {
                let v = self.s.get(i, j).unsigned_abs() as i64;
                if v != 0 && best.is_none_or(|(_, _, b)| v < b) {
                    best = Some((i, j, v));
                    if v == 1 {
                        return Some((i, j));
                    }
                }
            }
        }
        best.map(|(i, j, _)| (i, j))
    }
}

/// Smith normal form with transformation matrices.
pub fn smith_normal_form(m: &IntMatrix) -> Result<SmithForm, HomologyError> {
    if m.data.contains(&i64::MIN) {
        return Err(HomologyError::Overflow);
    }
    let mut r = Reducer { s: m.clone(), u: Some(IntMatrix::identity(m.rows)), v: Some(IntMatrix::identity(m.cols)) };
    r.run()?;
    Ok(SmithForm { u: r.u.unwrap(), s: r.s, v: r.v.unwrap() })
}

/// Invariant factors only (no transformation matrices).
pub fn invariant_factors(m: &IntMatrix) -> Result<Vec<i64>, HomologyError> {
    if m.data.contains(&i64::MIN) {
        return Err(HomologyError::Overflow);
    }
    let mut r = Reducer { s: m.clone(), u: None, v: None };
    r.run()?;
    Ok((0..m.rows.min(m.cols)).map(|i| r.s.get(i, i)).filter(|&d| d != 0).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(m: &IntMatrix) -> SmithForm {
        let f = smith_normal_form(m).unwrap();
        assert_eq!(f.u.mul(&f.s).unwrap().mul(&f.v).unwrap(), *m);
        assert_eq!(f.u.determinant().unwrap().abs(), 1);
        assert_eq!(f.v.determinant().unwrap().abs(), 1);
        f
    }

    #[test]
    fn two_by_two() {
        let m = IntMatrix::from_rows(&[vec![2, 4], vec![6, 8]]);
        let f = check(&m);
        assert_eq!(f.invariant_factors(), vec![2, 4]);
    }

    #[test]
    fn zero_and_identity() {
        let z = IntMatrix::zeros(3, 2);
        assert!(check(&z).s.is_zero());
        let i = IntMatrix::identity(4);
        assert_eq!(check(&i).s, i);
    }

    #[test]
    fn divisibility_fix_up() {
        // diag(2, 3) is not in normal form: the factors are 1, 6
        let m = IntMatrix::from_rows(&[vec![2, 0], vec![0, 3]]);
        assert_eq!(check(&m).invariant_factors(), vec![1, 6]);
    }

    #[test]
    fn determinants() {
        assert_eq!(IntMatrix::from_rows(&[vec![2, 4], vec![6, 8]]).determinant().unwrap(), -8);
        assert_eq!(IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]]).determinant().unwrap(), -1);
        assert_eq!(IntMatrix::identity(0).determinant().unwrap(), 1);
    }

    #[test]
    fn overflow_is_reported() {
        let big = IntMatrix::from_rows(&[vec![i64::MAX, 1], vec![i64::MAX, i64::MAX]]);
        assert!(matches!(big.mul(&big), Err(HomologyError::Overflow)));
        assert!(matches!(smith_normal_form(&IntMatrix::from_rows(&[vec![i64::MIN]])), Err(HomologyError::Overflow)));
    }
}
