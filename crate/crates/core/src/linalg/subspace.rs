//! Subspaces of GF(p)^n held in canonical reduced row-echelon form.
//!
//! Two subspaces are equal exactly when their representations are equal, so
//! `PartialEq` is subspace equality.

use super::field::{Gf, Vector};
use super::matrix::Matrix;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    /// RREF rows, no zero rows.
    basis: Matrix,
    pivots: Vec<usize>,
}

/// A complement of `W` inside `V` together with the coordinate map onto it.
#[derive(Clone, Debug)]
pub struct QuotientBasis {
    /// Vectors of `V` whose images form a basis of `V / W`.
    pub complement: Vec<Vector>,
    /// `complement.len() × ambient` matrix. For `v ∈ V`, `projection · v`
    /// gives the coefficients of `v` along `complement`, modulo `W`.
    pub projection: Matrix,
}

impl Subspace {
    pub fn zero(field: Gf, ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::zeros(field, 0, ambient), pivots: Vec::new() }
    }

    pub fn full(field: Gf, ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::identity(field, ambient), pivots: (0..ambient).collect() }
    }

    /// Subspace spanned by the rows of `m`.
    pub fn from_matrix(m: &Matrix) -> Self {
        let e = m.rref();
        let rows: Vec<Vector> = (0..e.rank).map(|i| e.reduced.row(i).to_vec()).collect();
        Subspace {
            ambient: m.cols(),
            basis: Matrix::from_rows(m.field(), m.cols(), &rows).expect("rows have ambient length"),
            pivots: e.pivots,
        }
    }

    /// Span of the given vectors.
    pub fn span(field: Gf, ambient: usize, vectors: &[Vector]) -> Result<Self> {
        Ok(Subspace::from_matrix(&Matrix::from_rows(field, ambient, vectors)?))
    }

    pub fn field(&self) -> Gf {
        self.basis.field()
    }
    pub fn ambient(&self) -> usize {
        self.ambient
    }
    pub fn dim(&self) -> usize {
        self.basis.rows()
    }
    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }
    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }
    /// Canonical basis as a matrix (one row per basis vector).
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }
    pub fn basis_vectors(&self) -> Vec<Vector> {
        self.basis.row_vectors()
    }

    fn check(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::dim(self.ambient, other.ambient));
        }
        if self.field() != other.field() {
            return Err(Error::FieldMismatch { left: self.field().p(), right: other.field().p() });
        }
        Ok(())
    }

    /// Reduces `v` against the echelon basis; the remainder is zero iff `v`
    /// lies in the subspace.
    pub fn reduce(&self, v: &[u32]) -> Vector {
        let f = self.field();
        let mut r = v.to_vec();
        for (i, &pc) in self.pivots.iter().enumerate() {
            let c = r[pc];
            if c != 0 {
                f.axpy(&mut r, f.neg(c), self.basis.row(i));
            }
        }
        r
    }

    pub fn contains_vector(&self, v: &[u32]) -> Result<bool> {
        if v.len() != self.ambient {
            return Err(Error::dim(self.ambient, v.len()));
        }
        Ok(self.reduce(v).iter().all(|&x| x == 0))
    }

    /// `other ⊆ self`
    pub fn contains(&self, other: &Subspace) -> Result<bool> {
        self.check(other)?;
        Ok((0..other.dim()).all(|i| self.reduce(other.basis.row(i)).iter().all(|&x| x == 0)))
    }

    /// Coordinates of `v` in the canonical basis, `None` if `v ∉ self`.
    pub fn coordinates(&self, v: &[u32]) -> Result<Option<Vector>> {
        if !self.contains_vector(v)? {
            return Ok(None);
        }
        // For RREF rows the coordinate of row i is the entry at its pivot.
        Ok(Some(self.pivots.iter().map(|&pc| v[pc]).collect()))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        Ok(Subspace::from_matrix(&self.basis.vstack(&other.basis)?))
    }

    /// Adds extra vectors to the span.
    pub fn extend(&self, vectors: &[Vector]) -> Result<Subspace> {
        let extra = Matrix::from_rows(self.field(), self.ambient, vectors)?;
        Ok(Subspace::from_matrix(&self.basis.vstack(&extra)?))
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        let ann = self.annihilator().sum(&other.annihilator())?;
        Ok(ann.annihilator())
    }

    /// Vectors pairing to zero with every element, under the standard dot
    /// product identifying the ambient space with its dual.
    pub fn annihilator(&self) -> Subspace {
        if self.dim() == 0 {
            return Subspace::full(self.field(), self.ambient);
        }
        self.basis.kernel()
    }

    /// Image of the subspace under a linear map (matrix acting on columns).
    pub fn image_under(&self, map: &Matrix) -> Result<Subspace> {
        if map.cols() != self.ambient {
            return Err(Error::dim(self.ambient, map.cols()));
        }
        let images: Vec<Vector> =
            self.basis_vectors().iter().map(|v| map.mul_vec(v)).collect::<Result<_>>()?;
        Subspace::span(self.field(), map.rows(), &images)
    }

    /// Preimage `{v : map · v ∈ self}`.
    pub fn preimage_under(&self, map: &Matrix) -> Result<Subspace> {
        if map.rows() != self.ambient {
            return Err(Error::dim(self.ambient, map.rows()));
        }
        let ann = self.annihilator();
        if ann.dim() == 0 {
            return Ok(Subspace::full(self.field(), map.cols()));
        }
        Ok(ann.basis.mul(map)?.kernel())
    }

    /// Complement of `self` inside `outer` (which must contain `self`), built
    /// greedily from `outer`'s canonical basis, plus the projection onto it.
    pub fn quotient_basis(&self, outer: &Subspace) -> Result<QuotientBasis> {
        self.check(outer)?;
        if !outer.contains(self)? {
            return Err(Error::input("quotient_basis: subspace is not contained in the outer space"));
        }
        let f = self.field();
        let n = self.ambient;
        let mut acc = self.clone();
        let mut complement = Vec::new();
        for v in outer.basis_vectors() {
            if !acc.contains_vector(&v)? {
                acc = acc.extend(std::slice::from_ref(&v))?;
                complement.push(v);
            }
        }
        // Full basis [self; complement; standard completion] of the ambient
        // space; the complement rows of its inverse give the projection.
        let mut rows = self.basis_vectors();
        rows.extend(complement.iter().cloned());
        let mut span = outer.clone();
        for j in 0..n {
            let e = f.basis_vec(n, j);
            if !span.contains_vector(&e)? {
                span = span.extend(std::slice::from_ref(&e))?;
                rows.push(e);
            }
        }
        let b = Matrix::from_columns(f, n, &rows)?;
        let inv = b
            .inverse()?
            .ok_or_else(|| Error::Internal("completed basis is singular".into()))?;
        let start = self.dim();
        let proj_rows: Vec<Vector> =
            (start..start + complement.len()).map(|i| inv.row(i).to_vec()).collect();
        let projection = Matrix::from_rows(f, n, &proj_rows)?;
        Ok(QuotientBasis { complement, projection })
    }
}
