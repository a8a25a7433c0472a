//! Dense matrices over a [`Field`], read as linear maps between coordinate
//! spaces: a `rows x cols` matrix maps `F^cols -> F^rows`.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use crate::error::{Error, Result};
use crate::field::{Field, Scalar, Vector};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearMap {
    field: Field,
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

/// Result of Gauss-Jordan elimination.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub reduced: LinearMap,
    pub rank: usize,
    pub pivot_cols: Vec<usize>,
}

impl LinearMap {
    pub fn new(field: Field, rows: usize, cols: usize, entries: Vec<Scalar>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        if let Some(bad) = entries.iter().find(|e| !field.owns(e)) {
            return Err(Error::Parse(format!("entry {bad} is not an element of {field}")));
        }
        Ok(LinearMap { field, rows, cols, entries })
    }

    /// Row-major integer data, reduced into the field. Panics if
    /// `data.len() != rows * cols`.
    pub fn from_ints(field: Field, rows: usize, cols: usize, data: &[i64]) -> Self {
        assert_eq!(data.len(), rows * cols, "from_ints: wrong number of entries");
        let entries = data.iter().map(|&x| field.from_i64(x)).collect();
        LinearMap { field, rows, cols, entries }
    }

    /// Builds a matrix from row vectors, each of length `cols`.
    pub fn from_rows(field: Field, cols: usize, rows: Vec<Vector>) -> Self {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "from_rows: ragged rows");
            entries.extend(r);
        }
        LinearMap { field, rows: n, cols, entries }
    }

    /// Builds a matrix whose columns are the given vectors (each of length `rows`).
    pub fn from_columns(field: Field, rows: usize, columns: &[Vector]) -> Self {
        let cols = columns.len();
        let mut m = LinearMap::zero(field, rows, cols);
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows, "from_columns: ragged columns");
            for (i, x) in c.iter().enumerate() {
                m.entries[i * cols + j] = x.clone();
            }
        }
        m
    }

    pub fn zero(field: Field, rows: usize, cols: usize) -> Self {
        LinearMap { field, rows, cols, entries: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = LinearMap::zero(field, n, n);
        for i in 0..n {
            m.entries[i * n + i] = field.one();
        }
        m
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// Codomain dimension.
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Domain dimension.
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Scalar) {
        assert!(self.field.owns(&value));
        self.entries[r * self.cols + c] = value;
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<Vector> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn column(&self, c: usize) -> Vector {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vector> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.field.is_zero_vector(&self.entries)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_identity(&self) -> bool {
        *self == LinearMap::identity(self.field, self.rows) && self.is_square()
    }

    pub fn apply(&self, v: &[Scalar]) -> Vector {
        assert_eq!(v.len(), self.cols, "apply: vector has wrong length");
        (0..self.rows).map(|r| self.field.dot(self.row(r), v)).collect()
    }

    /// `self . inner`, i.e. first apply `inner`, then `self`.
    pub fn compose(&self, inner: &LinearMap) -> Result<LinearMap> {
        self.check_field(inner)?;
        if self.cols != inner.rows {
            return Err(Error::Dimension(format!(
                "cannot compose {}x{} after {}x{}",
                self.rows, self.cols, inner.rows, inner.cols
            )));
        }
        let f = self.field;
        let mut out = LinearMap::zero(f, self.rows, inner.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if f.is_zero(a) {
                    continue;
                }
                let (lo, hi) = (i * inner.cols, (i + 1) * inner.cols);
                f.axpy(&mut out.entries[lo..hi], a, inner.row(k));
            }
        }
        Ok(out)
    }

    pub fn try_add(&self, other: &LinearMap) -> Result<LinearMap> {
        self.check_field(other)?;
        self.check_same_shape(other)?;
        let entries = self.field.add_vectors(&self.entries, &other.entries);
        Ok(LinearMap { entries, ..self.clone() })
    }

    pub fn scale(&self, c: &Scalar) -> LinearMap {
        let entries = self.entries.iter().map(|x| self.field.mul(c, x)).collect();
        LinearMap { entries, ..self.clone() }
    }

    pub fn neg(&self) -> LinearMap {
        self.scale(&self.field.neg(&self.field.one()))
    }

    pub fn transpose(&self) -> LinearMap {
        let mut out = LinearMap::zero(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.entries[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        out
    }

    /// `[self | other]`
    pub fn hstack(&self, other: &LinearMap) -> Result<LinearMap> {
        self.check_field(other)?;
        if self.rows != other.rows {
            return Err(Error::Dimension(format!(
                "hstack of {} and {} rows",
                self.rows, other.rows
            )));
        }
        let rows = (0..self.rows)
            .map(|r| [self.row(r), other.row(r)].concat())
            .collect();
        Ok(LinearMap::from_rows(self.field, self.cols + other.cols, rows))
    }

    /// `[self ; other]`
    pub fn vstack(&self, other: &LinearMap) -> Result<LinearMap> {
        self.check_field(other)?;
        if self.cols != other.cols {
            return Err(Error::Dimension(format!(
                "vstack of {} and {} columns",
                self.cols, other.cols
            )));
        }
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        Ok(LinearMap { field: self.field, rows: self.rows + other.rows, cols: self.cols, entries })
    }

    /// Block diagonal `diag(self, other)`.
    pub fn direct_sum(&self, other: &LinearMap) -> LinearMap {
        assert_eq!(self.field, other.field);
        let mut out = LinearMap::zero(self.field, self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.entries[i * out.cols + j] = self.get(i, j).clone();
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                out.entries[(self.rows + i) * out.cols + self.cols + j] = other.get(i, j).clone();
            }
        }
        out
    }

    /// Sub-matrix of the given rows and columns, in the given order.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> LinearMap {
        let mut entries = Vec::with_capacity(rows.len() * cols.len());
        for &r in rows {
            for &c in cols {
                entries.push(self.get(r, c).clone());
            }
        }
        LinearMap { field: self.field, rows: rows.len(), cols: cols.len(), entries }
    }

    pub fn rref(&self) -> Rref {
        let f = self.field;
        let mut m = self.clone();
        let mut pivot_cols = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !f.is_zero(m.get(i, c))) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = f.inv(m.get(r, c));
            m.scale_row(r, &inv);
            let pivot_row = m.row(r).to_vec();
            for i in 0..m.rows {
                if i != r {
                    let factor = f.neg(m.get(i, c));
                    let (lo, hi) = (i * m.cols, (i + 1) * m.cols);
                    f.axpy(&mut m.entries[lo..hi], &factor, &pivot_row);
                }
            }
            pivot_cols.push(c);
            r += 1;
        }
        Rref { reduced: m, rank: r, pivot_cols }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.cols
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.rows
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Inverse of a square invertible matrix.
    pub fn inverse(&self) -> Option<LinearMap> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(self.clone());
        }
        let aug = self.hstack(&LinearMap::identity(self.field, n)).ok()?;
        let Rref { reduced, rank: _, pivot_cols } = aug.rref();
        if pivot_cols.len() < n || pivot_cols[n - 1] >= n {
            return None;
        }
        let rows: Vec<usize> = (0..n).collect();
        let cols: Vec<usize> = (n..2 * n).collect();
        Some(reduced.select(&rows, &cols))
    }

    /// One solution `x` of `self . x = b`, with every free variable set to
    /// zero; `None` when the system is inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vector> {
        assert_eq!(b.len(), self.rows, "solve: right-hand side has wrong length");
        let f = self.field;
        let column = LinearMap::from_columns(f, self.rows, &[b.to_vec()]);
        let aug = self.hstack(&column).expect("same row count");
        let Rref { reduced, rank, pivot_cols } = aug.rref();
        if pivot_cols.last() == Some(&self.cols) {
            return None;
        }
        let mut x = f.zero_vector(self.cols);
        for (i, &pc) in pivot_cols.iter().enumerate().take(rank) {
            x[pc] = reduced.get(i, self.cols).clone();
        }
        Some(x)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn scale_row(&mut self, r: usize, c: &Scalar) {
        for j in 0..self.cols {
            let idx = r * self.cols + j;
            self.entries[idx] = self.field.mul(c, &self.entries[idx]);
        }
    }

    fn check_field(&self, other: &LinearMap) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field, other.field));
        }
        Ok(())
    }

    fn check_same_shape(&self, other: &LinearMap) -> Result<()> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::Dimension(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }
}

/// Free-function form of [`LinearMap::rref`].
pub fn rref(m: &LinearMap) -> Rref {
    m.rref()
}

impl Mul for &LinearMap {
    type Output = LinearMap;

    /// Panics on a dimension or field mismatch; use [`LinearMap::compose`]
    /// for a checked product.
    fn mul(self, rhs: &LinearMap) -> LinearMap {
        self.compose(rhs).expect("matrix product")
    }
}

impl Add for &LinearMap {
    type Output = LinearMap;

    fn add(self, rhs: &LinearMap) -> LinearMap {
        self.try_add(rhs).expect("matrix sum")
    }
}

impl Sub for &LinearMap {
    type Output = LinearMap;

    fn sub(self, rhs: &LinearMap) -> LinearMap {
        self.try_add(&rhs.neg()).expect("matrix difference")
    }
}

impl fmt::Display for LinearMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows == 0 || self.cols == 0 {
            return write!(f, "[{}x{} empty]", self.rows, self.cols);
        }
        for r in 0..self.rows {
            let cells: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> Field {
        Field::prime(2).unwrap()
    }

    #[test]
    fn rref_zero_matrix() {
        let m = LinearMap::zero(f2(), 2, 2);
        let r = m.rref();
        assert_eq!(r.reduced, m);
        assert_eq!(r.rank, 0);
        assert!(r.pivot_cols.is_empty());
    }

    #[test]
    fn rref_identity_f5() {
        let f5 = Field::prime(5).unwrap();
        let id = LinearMap::identity(f5, 3);
        let r = id.rref();
        assert_eq!(r.reduced, id);
        assert_eq!(r.rank, 3);
        assert_eq!(r.pivot_cols, vec![0, 1, 2]);
    }

    #[test]
    fn rref_all_ones_f2() {
        let m = LinearMap::from_ints(f2(), 2, 2, &[1, 1, 1, 1]);
        let r = m.rref();
        assert_eq!(r.reduced, LinearMap::from_ints(f2(), 2, 2, &[1, 1, 0, 0]));
        assert_eq!(r.rank, 1);
        assert_eq!(r.pivot_cols, vec![0]);
    }

    #[test]
    fn rref_over_rationals() {
        let q = Field::rationals();
        let m = LinearMap::from_ints(q, 2, 3, &[2, 4, 6, 1, 3, 5]);
        let r = m.rref();
        assert_eq!(r.reduced, LinearMap::from_ints(q, 2, 3, &[1, 0, -1, 0, 1, 2]));
        assert_eq!(r.pivot_cols, vec![0, 1]);
    }

    #[test]
    fn empty_matrices_are_first_class() {
        let f = f2();
        let a = LinearMap::zero(f, 0, 3);
        let b = LinearMap::zero(f, 3, 0);
        assert_eq!((&b * &a).rows(), 3);
        assert_eq!((&a * &b).rows(), 0);
        assert_eq!(a.rref().rank, 0);
        assert_eq!(b.rank(), 0);
        assert!(LinearMap::identity(f, 0).inverse().is_some());
    }

    #[test]
    fn solve_sets_free_variables_to_zero() {
        let f5 = Field::prime(5).unwrap();
        let m = LinearMap::from_ints(f5, 1, 3, &[0, 2, 1]);
        let x = m.solve(&[f5.from_i64(4)]).unwrap();
        assert_eq!(x, vec![f5.zero(), f5.from_i64(2), f5.zero()]);
        let z = LinearMap::zero(f5, 1, 2);
        assert!(z.solve(&[f5.one()]).is_none());
    }

    #[test]
    fn inverse_roundtrip() {
        let f5 = Field::prime(5).unwrap();
        let m = LinearMap::from_ints(f5, 2, 2, &[1, 2, 3, 4]);
        let inv = m.inverse().unwrap();
        assert!((&m * &inv).is_identity());
        let singular = LinearMap::from_ints(f5, 2, 2, &[1, 2, 2, 4]);
        assert!(singular.inverse().is_none());
    }

    #[test]
    fn compose_dimension_error() {
        let f = f2();
        let a = LinearMap::zero(f, 2, 3);
        assert!(matches!(a.compose(&a), Err(Error::Dimension(_))));
    }
}
