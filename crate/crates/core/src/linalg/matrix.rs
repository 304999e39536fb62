//! Dense row-major matrices over GF(p) and Gaussian elimination.

use std::fmt;
use std::ops::{Index, IndexMut};

use super::field::{Gf, Vector};
use super::subspace::Subspace;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Gf,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

/// Output of [`Matrix::rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Echelon {
    pub reduced: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn new(field: Gf, rows: usize, cols: usize, data: Vec<u32>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::dim(rows * cols, data.len()));
        }
        if let Some(&bad) = data.iter().find(|&&v| v >= field.p()) {
            return Err(Error::input(format!("entry {bad} not reduced mod {}", field.p())));
        }
        Ok(Matrix { field, rows, cols, data })
    }

    pub fn zeros(field: Gf, rows: usize, cols: usize) -> Self {
        Matrix { field, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(field: Gf, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    /// Stacks the given vectors as rows. Every row must have length `cols`.
    pub fn from_rows(field: Gf, cols: usize, rows: &[Vector]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::dim(cols, r.len()));
            }
            data.extend_from_slice(r);
        }
        Ok(Matrix { field, rows: rows.len(), cols, data })
    }

    /// Places the given vectors as columns.
    pub fn from_columns(field: Gf, rows: usize, columns: &[Vector]) -> Result<Self> {
        let mut m = Matrix::zeros(field, rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            if c.len() != rows {
                return Err(Error::dim(rows, c.len()));
            }
            for (i, &v) in c.iter().enumerate() {
                m.data[i * m.cols + j] = v;
            }
        }
        Ok(m)
    }

    /// A single column vector.
    pub fn column_vector(field: Gf, v: &[u32]) -> Self {
        Matrix { field, rows: v.len(), cols: 1, data: v.to_vec() }
    }

    #[inline]
    pub fn field(&self) -> Gf {
        self.field
    }
    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }
    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn data(&self) -> &[u32] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.data[i * self.cols + j]).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.data[i * self.cols + j];
            }
        }
        t
    }

    fn check_field(&self, other: &Matrix) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch { left: self.field.p(), right: other.field.p() });
        }
        Ok(())
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        self.check_field(other)?;
        if self.cols != other.rows {
            return Err(Error::dim(self.cols, other.rows));
        }
        let f = self.field;
        let p = f.p() as u64;
        let mut out = vec![0u64; self.rows * other.cols];
        for i in 0..self.rows {
            let acc = &mut out[i * other.cols..(i + 1) * other.cols];
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k] as u64;
                if a == 0 {
                    continue;
                }
                let brow = &other.data[k * other.cols..(k + 1) * other.cols];
                for (o, &b) in acc.iter_mut().zip(brow) {
                    if b != 0 {
                        *o = (*o + a * b as u64) % p;
                    }
                }
            }
        }
        Ok(Matrix {
            field: f,
            rows: self.rows,
            cols: other.cols,
            data: out.into_iter().map(|v| v as u32).collect(),
        })
    }

    pub fn mul_vec(&self, v: &[u32]) -> Result<Vector> {
        if v.len() != self.cols {
            return Err(Error::dim(self.cols, v.len()));
        }
        Ok((0..self.rows).map(|i| self.field.dot(self.row(i), v)).collect())
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.check_field(other)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::dim(self.rows * self.cols, other.rows * other.cols));
        }
        let f = self.field;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.add(a, b)).collect();
        Ok(Matrix { field: f, rows: self.rows, cols: self.cols, data })
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.add(&other.scale(self.field.neg(1)))
    }

    pub fn scale(&self, c: u32) -> Matrix {
        let f = self.field;
        Matrix {
            field: f,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&a| f.mul(c, a)).collect(),
        }
    }

    pub fn pow(&self, n: u64) -> Result<Matrix> {
        if self.rows != self.cols {
            return Err(Error::dim(self.rows, self.cols));
        }
        let mut acc = Matrix::identity(self.field, self.rows);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Kronecker product `self ⊗ other` in row-major tensor coordinates.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let f = self.field;
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut out = Matrix::zeros(f, rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.data[i * self.cols + j];
                if a == 0 {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.data[k * other.cols + l];
                        if b != 0 {
                            out.data[(i * other.rows + k) * cols + j * other.cols + l] = f.mul(a, b);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        self.check_field(other)?;
        if self.cols != other.cols {
            return Err(Error::dim(self.cols, other.cols));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Matrix { field: self.field, rows: self.rows + other.rows, cols: self.cols, data })
    }

    pub fn hstack(&self, other: &Matrix) -> Result<Matrix> {
        self.check_field(other)?;
        if self.rows != other.rows {
            return Err(Error::dim(self.rows, other.rows));
        }
        let cols = self.cols + other.cols;
        let mut data = Vec::with_capacity(self.rows * cols);
        for i in 0..self.rows {
            data.extend_from_slice(self.row(i));
            data.extend_from_slice(other.row(i));
        }
        Ok(Matrix { field: self.field, rows: self.rows, cols, data })
    }

    /// Reduced row-echelon form. Pivots are taken as the first nonzero entry
    /// in column order, so the result is fully deterministic.
    pub fn rref(&self) -> Echelon {
        let f = self.field;
        let (rows, cols) = (self.rows, self.cols);
        let mut d = self.data.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        let mut nz: Vec<usize> = Vec::with_capacity(cols);
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(sel) = (r..rows).find(|&i| d[i * cols + c] != 0) else {
                continue;
            };
            if sel != r {
                for j in c..cols {
                    d.swap(sel * cols + j, r * cols + j);
                }
            }
            let inv = f.inv(d[r * cols + c]);
            nz.clear();
            for j in c..cols {
                let v = d[r * cols + j];
                if v != 0 {
                    d[r * cols + j] = f.mul(v, inv);
                    nz.push(j);
                }
            }
            for i in 0..rows {
                if i == r {
                    continue;
                }
                let a = d[i * cols + c];
                if a == 0 {
                    continue;
                }
                let na = f.neg(a);
                for &j in &nz {
                    let pv = d[r * cols + j];
                    let cell = &mut d[i * cols + j];
                    *cell = f.add(*cell, f.mul(na, pv));
                }
            }
            pivots.push(c);
            r += 1;
        }
        Echelon {
            reduced: Matrix { field: f, rows, cols, data: d },
            rank: r,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Null space of the map `v ↦ self · v` on column vectors.
    pub fn kernel(&self) -> Subspace {
        let e = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &c in &e.pivots {
            is_pivot[c] = true;
        }
        let f = self.field;
        let mut vecs = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![0; self.cols];
            v[free] = 1;
            for (r, &pc) in e.pivots.iter().enumerate() {
                v[pc] = f.neg(e.reduced[(r, free)]);
            }
            vecs.push(v);
        }
        Subspace::span(f, self.cols, &vecs).expect("kernel vectors have ambient length")
    }

    /// Column space, as a subspace of the target.
    pub fn image(&self) -> Subspace {
        Subspace::from_matrix(&self.transpose())
    }

    /// Solves `self · x = b`. Free variables are set to zero; `None` when the
    /// system is inconsistent.
    pub fn solve(&self, b: &[u32]) -> Result<Option<Vector>> {
        if b.len() != self.rows {
            return Err(Error::dim(self.rows, b.len()));
        }
        let aug = self.hstack(&Matrix::column_vector(self.field, b))?;
        let e = aug.rref();
        if e.pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![0; self.cols];
        for (r, &pc) in e.pivots.iter().enumerate() {
            x[pc] = e.reduced[(r, self.cols)];
        }
        Ok(Some(x))
    }

    /// Inverse of a square matrix, `None` when singular.
    pub fn inverse(&self) -> Result<Option<Matrix>> {
        if self.rows != self.cols {
            return Err(Error::dim(self.rows, self.cols));
        }
        let n = self.rows;
        let e = self.hstack(&Matrix::identity(self.field, n))?.rref();
        if n > 0 && e.pivots.get(n - 1) != Some(&(n - 1)) {
            return Ok(None);
        }
        let mut inv = Matrix::zeros(self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = e.reduced[(i, n + j)];
            }
        }
        Ok(Some(inv))
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = u32;
    fn index(&self, (i, j): (usize, usize)) -> &u32 {
        assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut u32 {
        assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over GF({})", self.rows, self.cols, self.field.p())?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u32) -> Gf {
        Gf::new(p).unwrap()
    }

    #[test]
    fn rref_identity_and_zero() {
        let f = gf(5);
        let id = Matrix::identity(f, 3);
        let e = id.rref();
        assert_eq!(e.reduced, id);
        assert_eq!(e.rank, 3);
        assert_eq!(e.pivots, vec![0, 1, 2]);

        let z = Matrix::zeros(f, 2, 4);
        let e = z.rref();
        assert_eq!(e.reduced, z);
        assert_eq!(e.rank, 0);
        assert!(e.pivots.is_empty());
    }

    #[test]
    fn rref_rank_one() {
        let f = gf(5);
        let m = Matrix::new(f, 2, 2, vec![1, 2, 2, 4]).unwrap();
        let e = m.rref();
        assert_eq!(e.reduced.data(), &[1, 2, 0, 0]);
        assert_eq!(e.rank, 1);
    }

    #[test]
    fn kernel_examples() {
        let f = gf(3);
        assert_eq!(Matrix::identity(f, 3).kernel().dim(), 0);
        assert_eq!(Matrix::zeros(f, 2, 3).kernel().dim(), 3);
        let k = Matrix::new(f, 1, 2, vec![1, 1]).unwrap().kernel();
        assert_eq!(k.basis_vectors(), vec![vec![1, 2]]);
    }

    #[test]
    fn solve_examples() {
        let f = gf(2);
        let id = Matrix::identity(f, 3);
        assert_eq!(id.solve(&[1, 0, 1]).unwrap(), Some(vec![1, 0, 1]));
        let a = Matrix::new(f, 1, 2, vec![1, 1]).unwrap();
        assert_eq!(a.solve(&[0]).unwrap(), Some(vec![0, 0]));
        let z = Matrix::new(f, 1, 1, vec![0]).unwrap();
        assert_eq!(z.solve(&[1]).unwrap(), None);
    }

    #[test]
    fn inverse_round_trip() {
        let f = gf(7);
        let m = Matrix::new(f, 2, 2, vec![2, 3, 1, 4]).unwrap();
        let inv = m.inverse().unwrap().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(f, 2));
        let sing = Matrix::new(f, 2, 2, vec![1, 2, 2, 4]).unwrap();
        assert!(sing.inverse().unwrap().is_none());
    }

    #[test]
    fn kron_shape() {
        let f = gf(3);
        let a = Matrix::new(f, 1, 2, vec![1, 2]).unwrap();
        let b = Matrix::identity(f, 2);
        let k = a.kron(&b);
        assert_eq!((k.rows(), k.cols()), (2, 4));
        assert_eq!(k.data(), &[1, 0, 2, 0, 0, 1, 0, 2]);
    }
}
