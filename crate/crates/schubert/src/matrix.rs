//! Dense row-major matrices over one of the supported fields, with exact
//! Gauss-Jordan elimination. Reduced row echelon form is the canonical
//! representative used everywhere: two row spaces are equal iff their RREF
//! matrices agree entrywise.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn new(field: FieldSpec, rows: usize, cols: usize, entries: Vec<Scalar>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::ShapeMismatch(rows, cols, entries.len(), 1));
        }
        for e in &entries {
            if e.field() != field {
                return Err(Error::FieldMismatch(field.name(), e.field().name()));
            }
        }
        Ok(Matrix {
            field,
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            entries: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |v| v.len());
        for row in &rows {
            if row.len() != c {
                return Err(Error::ShapeMismatch(r, c, 1, row.len()));
            }
        }
        Matrix::new(field, r, c, rows.into_iter().flatten().collect())
    }

    /// Integer-entried convenience constructor, used heavily in tests.
    pub fn from_i64(field: FieldSpec, rows: &[&[i64]]) -> Self {
        let c = rows.first().map_or(0, |v| v.len());
        let entries = rows
            .iter()
            .flat_map(|r| {
                assert_eq!(r.len(), c, "ragged rows");
                r.iter().map(|&n| field.from_i64(n))
            })
            .collect();
        Matrix::new(field, rows.len(), c, entries).unwrap()
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        assert_eq!(v.field(), self.field, "mixed fields");
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vec(&self, i: usize) -> Vec<Scalar> {
        self.row(i).to_vec()
    }

    pub fn iter_rows(&self) -> impl Iterator<Item = &[Scalar]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(
                self.rows, self.cols, other.rows, other.cols,
            ));
        }
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field.name(), other.field.name()));
        }
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j).add(&a.mul(other.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    /// Vertical concatenation.
    pub fn stack(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.cols {
            return Err(Error::ShapeMismatch(
                self.rows, self.cols, other.rows, other.cols,
            ));
        }
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field.name(), other.field.name()));
        }
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Ok(Matrix {
            field: self.field,
            rows: self.rows + other.rows,
            cols: self.cols,
            entries,
        })
    }

    /// Reduced row echelon form together with its pivot columns. The result
    /// is the unique RREF of the row space, independent of row order.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, pr);
            let inv = m.get(r, c).inv().expect("pivot is nonzero");
            m.scale_row(r, &inv);
            for i in 0..m.rows {
                if i != r && !m.get(i, c).is_zero() {
                    let factor = m.get(i, c).clone();
                    m.sub_scaled_row(i, r, &factor);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{v : self * v = 0}` as rows of the returned matrix, in
    /// canonical (RREF) form. `kernel` of an `m x n` matrix has
    /// `n - rank` rows.
    pub fn kernel(&self) -> Matrix {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut rows = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vec![self.field.zero(); self.cols];
            v[f] = self.field.one();
            for (j, &p) in pivots.iter().enumerate() {
                v[p] = r.get(j, f).neg();
            }
            rows.push(v);
        }
        if rows.is_empty() {
            return Matrix::zeros(self.field, 0, self.cols);
        }
        let m = Matrix::from_rows(self.field, rows).expect("rows share a length");
        let (canon, _) = m.rref();
        canon.drop_zero_rows()
    }

    /// Inverse of a square matrix, or `None` when singular.
    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let aug = self.stack_horizontal(&Matrix::identity(self.field, n));
        let (r, pivots) = aug.rref();
        if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| i != p) {
            return None;
        }
        let mut out = Matrix::zeros(self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, r.get(i, n + j).clone());
            }
        }
        Some(out)
    }

    /// Horizontal concatenation.
    pub fn stack_horizontal(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows, "row count mismatch");
        assert_eq!(self.field, other.field, "mixed fields");
        let mut rows = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let mut row = self.row_vec(i);
            row.extend(other.row(i).iter().cloned());
            rows.push(row);
        }
        Matrix::from_rows(self.field, rows).expect("consistent shape")
    }

    pub fn drop_zero_rows(&self) -> Matrix {
        let rows: Vec<Vec<Scalar>> = self
            .iter_rows()
            .filter(|r| !r.iter().all(|e| e.is_zero()))
            .map(|r| r.to_vec())
            .collect();
        if rows.is_empty() {
            Matrix::zeros(self.field, 0, self.cols)
        } else {
            Matrix::from_rows(self.field, rows).unwrap()
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn scale_row(&mut self, i: usize, by: &Scalar) {
        for j in 0..self.cols {
            let v = self.get(i, j).mul(by);
            self.set(i, j, v);
        }
    }

    /// row_i -= factor * row_k
    fn sub_scaled_row(&mut self, i: usize, k: usize, factor: &Scalar) {
        for j in 0..self.cols {
            let v = self.get(i, j).sub(&factor.mul(self.get(k, j)));
            self.set(i, j, v);
        }
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let line: Vec<String> = self.row(i).iter().map(|e| e.to_string()).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rational;
    const F7: FieldSpec = FieldSpec::Prime(7);

    #[test]
    fn rank_of_identity_and_zero() {
        assert_eq!(Matrix::identity(Q, 4).rank(), 4);
        assert_eq!(Matrix::zeros(Q, 3, 5).rank(), 0);
    }

    // Hand elimination: row2 = 2*row1, so the only pivots sit in
    // columns 0 and 1.
    #[test]
    fn rank_with_dependent_row() {
        let m = Matrix::from_i64(Q, &[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        assert_eq!(m.rank(), 2);
        let m7 = Matrix::from_i64(F7, &[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        assert_eq!(m7.rank(), 2);
    }

    #[test]
    fn rref_is_canonical() {
        let a = Matrix::from_i64(Q, &[&[1, 2, 3], &[0, 1, 1]]);
        let b = Matrix::from_i64(Q, &[&[2, 5, 7], &[1, 2, 3]]);
        // same row space, different presentations
        assert_eq!(a.rref().0, b.rref().0);
    }

    #[test]
    fn kernel_dimension_and_membership() {
        let m = Matrix::from_i64(Q, &[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        let k = m.kernel();
        assert_eq!(k.rows(), 1); // cols - rank = 3 - 2
        for i in 0..k.rows() {
            let v = Matrix::from_rows(Q, vec![k.row_vec(i)]).unwrap();
            assert!(m.mul(&v.transpose()).unwrap().is_zero());
        }
        assert_eq!(Matrix::identity(Q, 3).kernel().rows(), 0);
        assert_eq!(Matrix::zeros(Q, 2, 3).kernel().rows(), 3);
    }

    #[test]
    fn rank_equals_rank_of_transpose() {
        let m = Matrix::from_i64(F7, &[&[1, 2, 3, 4], &[5, 6, 0, 1], &[6, 1, 3, 5]]);
        assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn rational_elimination_keeps_lowest_terms() {
        let m = Matrix::from_i64(Q, &[&[2, 3], &[5, 7]]);
        let (r, p) = m.rref();
        assert_eq!(r, Matrix::identity(Q, 2));
        assert_eq!(p, vec![0, 1]);
    }

    #[test]
    fn inverse_round_trip() {
        let m = Matrix::from_i64(Q, &[&[2, 3, 1], &[5, 7, 0], &[0, 1, 4]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(Q, 3));
        assert_eq!(inv.mul(&m).unwrap(), Matrix::identity(Q, 3));
        // singular: second row is a multiple of the first
        let s = Matrix::from_i64(F7, &[&[1, 2], &[2, 4]]);
        assert!(s.inverse().is_none());
    }
}
