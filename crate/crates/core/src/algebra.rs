//! Finite-dimensional associative unital algebras given by structure
//! constants.

use crate::error::{Error, Result};
use crate::linalg::{Gf, Matrix, Subspace, Vector};
use crate::report::Report;

/// Sparse coefficient list `[(index, coeff)]` with nonzero coefficients.
pub type SparseVec = Vec<(usize, u32)>;

pub(crate) fn sparse_from_dense(v: &[u32]) -> SparseVec {
    v.iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, &c)| (i, c)).collect()
}

pub(crate) fn dense_from_sparse(dim: usize, s: &SparseVec) -> Vector {
    let mut v = vec![0; dim];
    for &(i, c) in s {
        v[i] = c;
    }
    v
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraData {
    field: Gf,
    labels: Vec<String>,
    /// `mult[i * dim + j]` holds `e_i · e_j`.
    mult: Vec<SparseVec>,
    unit: Vector,
}

impl AlgebraData {
    pub fn new(field: Gf, labels: Vec<String>, mult: Vec<SparseVec>, unit: Vector) -> Result<Self> {
        let dim = labels.len();
        if mult.len() != dim * dim {
            return Err(Error::dim(dim * dim, mult.len()));
        }
        if unit.len() != dim {
            return Err(Error::dim(dim, unit.len()));
        }
        for entry in &mult {
            for &(k, c) in entry {
                if k >= dim || c >= field.p() {
                    return Err(Error::input(format!("bad product entry ({k}, {c})")));
                }
            }
        }
        let mult = mult
            .into_iter()
            .map(|s| sparse_from_dense(&dense_from_sparse(dim, &s)))
            .collect();
        Ok(AlgebraData { field, labels, mult, unit })
    }

    /// Builds the table from a closure returning the dense product `e_i · e_j`.
    pub fn from_fn(
        field: Gf,
        labels: Vec<String>,
        unit: Vector,
        mut product: impl FnMut(usize, usize) -> Vector,
    ) -> Result<Self> {
        let dim = labels.len();
        let mut mult = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let v = product(i, j);
                if v.len() != dim {
                    return Err(Error::dim(dim, v.len()));
                }
                mult.push(sparse_from_dense(&v));
            }
        }
        AlgebraData::new(field, labels, mult, unit)
    }

    /// The ground field viewed as a one-dimensional algebra.
    pub fn ground(field: Gf) -> Self {
        AlgebraData { field, labels: vec!["1".into()], mult: vec![vec![(0, 1)]], unit: vec![1] }
    }

    pub fn field(&self) -> Gf {
        self.field
    }
    pub fn dim(&self) -> usize {
        self.labels.len()
    }
    pub fn labels(&self) -> &[String] {
        &self.labels
    }
    pub fn unit(&self) -> &[u32] {
        &self.unit
    }
    pub fn basis_product(&self, i: usize, j: usize) -> &SparseVec {
        &self.mult[i * self.dim() + j]
    }

    pub(crate) fn set_labels(&mut self, labels: Vec<String>) {
        assert_eq!(labels.len(), self.dim());
        self.labels = labels;
    }

    fn check_len(&self, v: &[u32]) -> Result<()> {
        self.check_ambient(v.len())
    }

    fn check_ambient(&self, n: usize) -> Result<()> {
        if n != self.dim() {
            return Err(Error::dim(self.dim(), n));
        }
        Ok(())
    }

    /// Product of two coordinate vectors.
    pub fn multiply(&self, u: &[u32], v: &[u32]) -> Result<Vector> {
        self.check_len(u)?;
        self.check_len(v)?;
        Ok(self.mul_unchecked(u, v))
    }

    pub(crate) fn mul_unchecked(&self, u: &[u32], v: &[u32]) -> Vector {
        let f = self.field;
        let n = self.dim();
        let mut out = vec![0u32; n];
        for (i, &a) in u.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in v.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                let ab = f.mul(a, b);
                for &(k, c) in &self.mult[i * n + j] {
                    out[k] = f.add(out[k], f.mul(ab, c));
                }
            }
        }
        out
    }

    pub fn power(&self, u: &[u32], n: u64) -> Result<Vector> {
        self.check_len(u)?;
        let mut acc = self.unit.clone();
        let mut base = u.to_vec();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_unchecked(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul_unchecked(&base, &base);
            }
        }
        Ok(acc)
    }

    /// `uv - vu`
    pub fn commutator(&self, u: &[u32], v: &[u32]) -> Result<Vector> {
        let uv = self.multiply(u, v)?;
        let vu = self.multiply(v, u)?;
        Ok(self.field.sub_vec(&uv, &vu))
    }

    /// Matrix of `v ↦ u·v`.
    pub fn left_mult_matrix(&self, u: &[u32]) -> Result<Matrix> {
        self.check_len(u)?;
        let n = self.dim();
        let cols: Vec<Vector> =
            (0..n).map(|j| self.mul_unchecked(u, &self.field.basis_vec(n, j))).collect();
        Matrix::from_columns(self.field, n, &cols)
    }

    /// Matrix of `v ↦ v·u`.
    pub fn right_mult_matrix(&self, u: &[u32]) -> Result<Matrix> {
        self.check_len(u)?;
        let n = self.dim();
        let cols: Vec<Vector> =
            (0..n).map(|j| self.mul_unchecked(&self.field.basis_vec(n, j), u)).collect();
        Matrix::from_columns(self.field, n, &cols)
    }

    /// The multiplication map `A ⊗ A → A` as a `dim × dim²` matrix.
    pub fn mult_matrix(&self) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(self.field, n, n * n);
        for ij in 0..n * n {
            for &(k, c) in &self.mult[ij] {
                m[(k, ij)] = c;
            }
        }
        m
    }

    /// Verifies associativity on every basis triple and both unit laws.
    pub fn check_algebra(&self) -> Report {
        let mut report = Report::new("algebra");
        let n = self.dim();
        let f = self.field;
        let mut assoc = None;
        'outer: for i in 0..n {
            for j in 0..n {
                let ij = dense_from_sparse(n, &self.mult[i * n + j]);
                for k in 0..n {
                    let left = self.mul_unchecked(&ij, &f.basis_vec(n, k));
                    let jk = dense_from_sparse(n, &self.mult[j * n + k]);
                    let right = self.mul_unchecked(&f.basis_vec(n, i), &jk);
                    if left != right {
                        assoc = Some(format!(
                            "({0}·{1})·{2} ≠ {0}·({1}·{2}) at basis triple ({i}, {j}, {k})",
                            self.labels[i], self.labels[j], self.labels[k]
                        ));
                        break 'outer;
                    }
                }
            }
        }
        report.outcome("associativity", assoc);
        let mut unit = None;
        for i in 0..n {
            let e = f.basis_vec(n, i);
            if self.mul_unchecked(&self.unit, &e) != e || self.mul_unchecked(&e, &self.unit) != e {
                unit = Some(format!("unit fails on basis element {}", self.labels[i]));
                break;
            }
        }
        report.outcome("unit", unit);
        report
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (i + 1..n).all(|j| self.mult[i * n + j] == self.mult[j * n + i]))
    }

    /// Span of all products `v·w` with `v ∈ V`, `w ∈ W`.
    pub fn subspace_product(&self, v: &Subspace, w: &Subspace) -> Result<Subspace> {
        let mut vecs = Vec::new();
        for a in v.basis_vectors() {
            for b in w.basis_vectors() {
                vecs.push(self.multiply(&a, &b)?);
            }
        }
        Subspace::span(self.field, self.dim(), &vecs)
    }

    /// Smallest two-sided ideal containing `s`.
    pub fn ideal_generated(&self, s: &Subspace) -> Result<Subspace> {
        self.check_ambient(s.ambient())?;
        let n = self.dim();
        let mut ideal = s.clone();
        loop {
            let mut vecs = Vec::new();
            for v in ideal.basis_vectors() {
                for k in 0..n {
                    let e = self.field.basis_vec(n, k);
                    vecs.push(self.mul_unchecked(&e, &v));
                    vecs.push(self.mul_unchecked(&v, &e));
                }
            }
            let next = ideal.extend(&vecs)?;
            if next.dim() == ideal.dim() {
                return Ok(ideal);
            }
            ideal = next;
        }
    }

    /// Smallest subalgebra containing `s` and the unit.
    pub fn subalgebra_generated(&self, s: &Subspace) -> Result<Subspace> {
        self.check_ambient(s.ambient())?;
        let mut sub = s.extend(&[self.unit.clone()])?;
        loop {
            let next = sub.sum(&self.subspace_product(&sub, &sub)?)?;
            if next.dim() == sub.dim() {
                return Ok(sub);
            }
            sub = next;
        }
    }

    pub fn is_ideal(&self, s: &Subspace) -> Result<bool> {
        Ok(self.ideal_generated(s)?.dim() == s.dim())
    }

    /// Nilpotency index of `V` (least `k` with `V^k = 0`), or `None` when
    /// the powers never vanish. The zero subspace has index 1.
    pub fn is_nilpotent_subspace(&self, v: &Subspace) -> Result<Option<usize>> {
        self.check_ambient(v.ambient())?;
        let mut power = v.clone();
        let mut k = 1;
        // A nilpotent (non-unital) algebra of dimension d satisfies N^{d+1} = 0.
        while k <= self.dim() + 1 {
            if power.is_zero() {
                return Ok(Some(k));
            }
            let next = self.subspace_product(&power, v)?;
            if next == power {
                return Ok(None);
            }
            power = next;
            k += 1;
        }
        Ok(None)
    }

    /// Kernel of the stacked commutator maps `v ↦ v·e_i − e_i·v`.
    pub fn center(&self) -> Subspace {
        let n = self.dim();
        let f = self.field;
        let mut rows = Vec::with_capacity(n * n);
        for i in 0..n {
            let e = f.basis_vec(n, i);
            let cols: Vec<Vector> = (0..n)
                .map(|j| {
                    let b = f.basis_vec(n, j);
                    f.sub_vec(&self.mul_unchecked(&b, &e), &self.mul_unchecked(&e, &b))
                })
                .collect();
            let m = Matrix::from_columns(f, n, &cols).expect("square");
            rows.extend(m.row_vectors());
        }
        Matrix::from_rows(f, n, &rows).expect("rows have length dim").kernel()
    }

    /// Matrix of the p-th power map. Linear over GF(p) for commutative
    /// algebras (Frobenius fixes prime-field scalars).
    pub fn frobenius_matrix(&self) -> Result<Matrix> {
        if !self.is_commutative() {
            return Err(Error::unsupported("p-power map is not linear on a noncommutative algebra"));
        }
        let n = self.dim();
        let p = self.field.p() as u64;
        let cols: Vec<Vector> =
            (0..n).map(|j| self.power(&self.field.basis_vec(n, j), p)).collect::<Result<_>>()?;
        Matrix::from_columns(self.field, n, &cols)
    }

    /// Nilradical of a commutative algebra: kernel of the `m`-th iterate of
    /// the p-power map with `p^m ≥ dim`.
    pub fn commutative_nilradical(&self) -> Result<Subspace> {
        let frob = self.frobenius_matrix()?;
        let p = self.field.p() as usize;
        let (mut m, mut pm) = (0u64, 1usize);
        while pm < self.dim() {
            pm = pm.saturating_mul(p);
            m += 1;
        }
        Ok(frob.pow(m.max(1))?.kernel())
    }

    /// Whether `aug` is an algebra map onto the ground field.
    pub fn is_character(&self, aug: &[u32]) -> Result<bool> {
        self.check_len(aug)?;
        let f = self.field;
        let n = self.dim();
        if f.dot(aug, &self.unit) != 1 {
            return Ok(false);
        }
        for i in 0..n {
            for j in 0..n {
                let prod = dense_from_sparse(n, &self.mult[i * n + j]);
                if f.dot(aug, &prod) != f.mul(aug[i], aug[j]) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Local test relative to an augmentation: `ker(aug)` is nilpotent.
    pub fn is_local(&self, aug: &[u32]) -> Result<bool> {
        if !self.is_character(aug)? {
            return Err(Error::input("augmentation is not multiplicative"));
        }
        let ker = Subspace::span(self.field, self.dim(), &[aug.to_vec()])?.annihilator();
        Ok(self.is_nilpotent_subspace(&ker)?.is_some())
    }

    /// Structure constants of a subalgebra `sub` (which must be closed under
    /// multiplication and contain the unit) in its canonical basis.
    pub fn restrict(&self, sub: &Subspace) -> Result<AlgebraData> {
        let basis = sub.basis_vectors();
        let coords = |v: &[u32]| -> Result<Vector> {
            sub.coordinates(v)?.ok_or_else(|| Error::input("subspace is not a subalgebra"))
        };
        let unit = coords(&self.unit)?;
        let labels: Vec<String> = (0..basis.len()).map(|i| format!("b{i}")).collect();
        let mut mult = Vec::with_capacity(basis.len() * basis.len());
        for a in &basis {
            for b in &basis {
                mult.push(sparse_from_dense(&coords(&self.mul_unchecked(a, b))?));
            }
        }
        AlgebraData::new(self.field, labels, mult, unit)
    }
}
