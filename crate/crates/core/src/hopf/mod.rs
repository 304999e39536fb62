//! Coalgebra and Hopf-algebra structure on top of [`AlgebraData`].
//!
//! A presentation stores the comultiplication sparsely as
//! `Δ(e_i) = Σ c · e_j ⊗ e_k`. Tensors in `H ⊗ H` are flattened row-major,
//! so `e_j ⊗ e_k` sits at index `j * dim + k`.

mod cocomm;
mod filtration;
mod graded;
mod sub;

pub use cocomm::{
    center_contains_primitives, locality_criterion, normal_series_cocomm, LocalityReport,
    NormalSeries,
};
pub use filtration::{commutator_filtration_check, FiltrationResult};
pub use graded::{assoc_graded, check_graded_truncated, GradedHopf};
pub(crate) use sub::p_index_of_dims;
pub use sub::{
    free_basis_minrel, ladder_subcoalgebras, lemma_p_index_bound, normality_bracket_criterion,
    p_index, p_power_coproduct_in, FirstOrder, FreeBasisWitness, PPolynomialRelation, Quotient,
};

use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;

use crate::algebra::{dense_from_sparse, AlgebraData};
use crate::error::{Error, Result};
use crate::linalg::tensor::{kron_vec, tensor_subspace};
use crate::linalg::{Gf, Matrix, Subspace, Vector};
use crate::report::Report;

/// One comultiplication term `c · e_left ⊗ e_right`.
pub type CoTerm = (usize, usize, u32);

/// Cooperative cancellation flag for long-running computations.
#[derive(Clone, Debug, Default)]
pub struct Interrupt(Arc<AtomicBool>);

impl Interrupt {
    pub fn new() -> Self {
        Interrupt::default()
    }
    pub fn cancel(&self) {
        self.0.store(true, Ordering::Relaxed);
    }
    pub fn is_cancelled(&self) -> bool {
        self.0.load(Ordering::Relaxed)
    }
    pub(crate) fn check(&self) -> Result<()> {
        if self.is_cancelled() {
            Err(Error::Cancelled)
        } else {
            Ok(())
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfPresentation {
    algebra: AlgebraData,
    comult: Vec<Vec<CoTerm>>,
    counit: Vector,
    antipode: Option<Matrix>,
}

impl HopfPresentation {
    /// Assembles a presentation after shape validation. Axioms are checked
    /// separately by [`HopfPresentation::check_hopf`].
    pub fn new(
        algebra: AlgebraData,
        comult: Vec<Vec<CoTerm>>,
        counit: Vector,
        antipode: Option<Matrix>,
    ) -> Result<Self> {
        let n = algebra.dim();
        let f = algebra.field();
        if comult.len() != n {
            return Err(Error::dim(n, comult.len()));
        }
        if counit.len() != n {
            return Err(Error::dim(n, counit.len()));
        }
        let mut canonical = Vec::with_capacity(n);
        for terms in &comult {
            let mut dense = vec![0u32; n * n];
            for &(j, k, c) in terms {
                if j >= n || k >= n || c >= f.p() {
                    return Err(Error::input(format!("bad comultiplication term ({j}, {k}, {c})")));
                }
                dense[j * n + k] = f.add(dense[j * n + k], c);
            }
            canonical.push(coterms_from_dense(n, &dense));
        }
        if let Some(s) = &antipode {
            if s.rows() != n || s.cols() != n {
                return Err(Error::dim(n * n, s.rows() * s.cols()));
            }
        }
        Ok(HopfPresentation { algebra, comult: canonical, counit, antipode })
    }

    /// Builds a presentation from dense coproducts `Δ(e_i)` in flattened
    /// `H ⊗ H` coordinates.
    pub fn from_dense_coproducts(
        algebra: AlgebraData,
        coproducts: &[Vector],
        counit: Vector,
        antipode: Option<Matrix>,
    ) -> Result<Self> {
        let n = algebra.dim();
        let comult = coproducts
            .iter()
            .map(|t| {
                if t.len() != n * n {
                    Err(Error::dim(n * n, t.len()))
                } else {
                    Ok(coterms_from_dense(n, t))
                }
            })
            .collect::<Result<_>>()?;
        HopfPresentation::new(algebra, comult, counit, antipode)
    }

    /// The ground field as a Hopf algebra.
    pub fn ground(field: Gf) -> Self {
        HopfPresentation {
            algebra: AlgebraData::ground(field),
            comult: vec![vec![(0, 0, 1)]],
            counit: vec![1],
            antipode: Some(Matrix::identity(field, 1)),
        }
    }

    pub fn field(&self) -> Gf {
        self.algebra.field()
    }
    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }
    pub fn algebra(&self) -> &AlgebraData {
        &self.algebra
    }
    pub fn labels(&self) -> &[String] {
        self.algebra.labels()
    }
    pub fn unit(&self) -> &[u32] {
        self.algebra.unit()
    }
    pub fn counit(&self) -> &[u32] {
        &self.counit
    }
    pub fn coterms(&self, i: usize) -> &[CoTerm] {
        &self.comult[i]
    }
    pub fn antipode(&self) -> Option<&Matrix> {
        self.antipode.as_ref()
    }

    pub fn multiply(&self, u: &[u32], v: &[u32]) -> Result<Vector> {
        self.algebra.multiply(u, v)
    }

    pub fn basis_vec(&self, i: usize) -> Vector {
        self.field().basis_vec(self.dim(), i)
    }

    /// Index of the basis element with the given label.
    pub fn label_index(&self, label: &str) -> Option<usize> {
        self.labels().iter().position(|l| l == label)
    }

    /// Basis vector for a label; panics when the label is unknown.
    pub fn element(&self, label: &str) -> Vector {
        let i = self.label_index(label).unwrap_or_else(|| panic!("no basis element {label}"));
        self.basis_vec(i)
    }

    /// `Δ(v)` in flattened `H ⊗ H` coordinates.
    pub fn comultiply(&self, v: &[u32]) -> Result<Vector> {
        let n = self.dim();
        if v.len() != n {
            return Err(Error::dim(n, v.len()));
        }
        let f = self.field();
        let mut out = vec![0; n * n];
        for (i, &a) in v.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for &(j, k, c) in &self.comult[i] {
                out[j * n + k] = f.add(out[j * n + k], f.mul(a, c));
            }
        }
        Ok(out)
    }

    /// Δ as a `dim² × dim` matrix.
    pub fn comult_matrix(&self) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(self.field(), n * n, n);
        for i in 0..n {
            for &(j, k, c) in &self.comult[i] {
                m[(j * n + k, i)] = c;
            }
        }
        m
    }

    pub fn counit_of(&self, v: &[u32]) -> u32 {
        self.field().dot(&self.counit, v)
    }

    /// Product in the tensor-square algebra `H ⊗ H`.
    pub fn tensor_multiply(&self, s: &[u32], t: &[u32]) -> Vector {
        tensor_mul(&self.algebra, s, t)
    }

    /// `x ⊗ 1 + 1 ⊗ x`
    pub fn primitive_part(&self, x: &[u32]) -> Vector {
        let f = self.field();
        f.add_vec(&kron_vec(f, x, self.unit()), &kron_vec(f, self.unit(), x))
    }

    /// `Δ(x) − x ⊗ 1 − 1 ⊗ x`
    pub fn reduced_coproduct(&self, x: &[u32]) -> Result<Vector> {
        Ok(self.field().sub_vec(&self.comultiply(x)?, &self.primitive_part(x)))
    }

    pub fn is_cocommutative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| {
            let d = self.comultiply(&self.basis_vec(i)).expect("basis vector");
            crate::linalg::tensor::flip(&d, n) == d
        })
    }

    pub fn is_commutative(&self) -> bool {
        self.algebra.is_commutative()
    }

    /// Kernel of the counit.
    pub fn augmentation_ideal(&self) -> Subspace {
        Subspace::span(self.field(), self.dim(), &[self.counit.clone()])
            .expect("counit has length dim")
            .annihilator()
    }

    pub fn unit_line(&self) -> Subspace {
        Subspace::span(self.field(), self.dim(), &[self.unit().to_vec()]).expect("unit has length dim")
    }

    /// Local: the augmentation ideal is nilpotent.
    pub fn is_local(&self) -> Result<bool> {
        self.algebra.is_local(&self.counit)
    }

    /// Applies `S`, computing the antipode on the fly when absent.
    pub fn apply_antipode(&self, v: &[u32]) -> Result<Vector> {
        match &self.antipode {
            Some(s) => s.mul_vec(v),
            None => self.compute_antipode()?.mul_vec(v),
        }
    }

    /// Returns `self` with the antipode filled in.
    pub fn with_antipode(mut self) -> Result<Self> {
        if self.antipode.is_none() {
            self.antipode = Some(self.compute_antipode()?);
        }
        Ok(self)
    }

    /// Antipode matrix (stored or freshly solved).
    pub fn antipode_matrix(&self) -> Result<Matrix> {
        match &self.antipode {
            Some(s) => Ok(s.clone()),
            None => self.compute_antipode(),
        }
    }

    /// Full axiom suite: algebra, coassociativity, counit, bialgebra
    /// compatibility and (when stored) both antipode laws.
    pub fn check_hopf(&self) -> Report {
        let mut report = Report::new("hopf");
        report.absorb("algebra", self.algebra.check_algebra());
        report.outcome("coassociativity", self.coassociativity_violation());
        report.outcome("counit", self.counit_violation());
        report.outcome("bialgebra", self.bialgebra_violation());
        if let Some(s) = &self.antipode {
            report.outcome("antipode", self.antipode_violation(s));
        }
        report
    }

    fn coassociativity_violation(&self) -> Option<String> {
        let n = self.dim();
        let f = self.field();
        for i in 0..n {
            let mut left = vec![0u32; n * n * n];
            let mut right = vec![0u32; n * n * n];
            for &(j, k, c) in &self.comult[i] {
                for &(a, b, d) in &self.comult[j] {
                    let idx = (a * n + b) * n + k;
                    left[idx] = f.add(left[idx], f.mul(c, d));
                }
                for &(a, b, d) in &self.comult[k] {
                    let idx = (j * n + a) * n + b;
                    right[idx] = f.add(right[idx], f.mul(c, d));
                }
            }
            if left != right {
                return Some(format!("(Δ⊗I)Δ ≠ (I⊗Δ)Δ on {}", self.labels()[i]));
            }
        }
        None
    }

    fn counit_violation(&self) -> Option<String> {
        let n = self.dim();
        let f = self.field();
        for i in 0..n {
            let mut left = vec![0u32; n];
            let mut right = vec![0u32; n];
            for &(j, k, c) in &self.comult[i] {
                left[k] = f.add(left[k], f.mul(c, self.counit[j]));
                right[j] = f.add(right[j], f.mul(c, self.counit[k]));
            }
            let e = self.basis_vec(i);
            if left != e || right != e {
                return Some(format!("counit law fails on {}", self.labels()[i]));
            }
        }
        None
    }

    fn bialgebra_violation(&self) -> Option<String> {
        let n = self.dim();
        let f = self.field();
        let unit = self.unit();
        let one_one = kron_vec(f, unit, unit);
        if self.comultiply(unit).ok()? != one_one {
            return Some("Δ(1) ≠ 1⊗1".into());
        }
        if self.counit_of(unit) != 1 {
            return Some("ε(1) ≠ 1".into());
        }
        let deltas: Vec<Vector> = (0..n).map(|i| self.comultiply(&self.basis_vec(i)).unwrap()).collect();
        for i in 0..n {
            for j in 0..n {
                let prod = dense_from_sparse(n, self.algebra.basis_product(i, j));
                let lhs = self.comultiply(&prod).unwrap();
                let rhs = self.tensor_multiply(&deltas[i], &deltas[j]);
                if lhs != rhs {
                    return Some(format!(
                        "Δ({0}·{1}) ≠ Δ({0})Δ({1})",
                        self.labels()[i],
                        self.labels()[j]
                    ));
                }
                if self.counit_of(&prod) != f.mul(self.counit[i], self.counit[j]) {
                    return Some(format!(
                        "ε({0}·{1}) ≠ ε({0})ε({1})",
                        self.labels()[i],
                        self.labels()[j]
                    ));
                }
            }
        }
        None
    }

    fn antipode_violation(&self, s: &Matrix) -> Option<String> {
        let n = self.dim();
        let f = self.field();
        let images: Vec<Vector> = (0..n).map(|j| s.column(j)).collect();
        for i in 0..n {
            let mut left = vec![0u32; n];
            let mut right = vec![0u32; n];
            for &(j, k, c) in &self.comult[i] {
                let sl = self.algebra.mul_unchecked(&images[j], &self.basis_vec(k));
                f.axpy(&mut left, c, &sl);
                let sr = self.algebra.mul_unchecked(&self.basis_vec(j), &images[k]);
                f.axpy(&mut right, c, &sr);
            }
            let expected = f.scale(self.counit[i], self.unit());
            if left != expected {
                return Some(format!("m(S⊗I)Δ ≠ ηε on {}", self.labels()[i]));
            }
            if right != expected {
                return Some(format!("m(I⊗S)Δ ≠ ηε on {}", self.labels()[i]));
            }
        }
        None
    }

    /// Solves `m ∘ (S ⊗ id) ∘ Δ = η ∘ ε` for the matrix of `S`, then checks
    /// the right-sided law.
    pub fn compute_antipode(&self) -> Result<Matrix> {
        let n = self.dim();
        let f = self.field();
        // unknown (a, j) ↦ column a * n + j is the coefficient of e_a in S(e_j);
        // equation (c, l) ↦ row c * n + l is coordinate l of the law on e_c.
        let mut system = Matrix::zeros(f, n * n, n * n);
        let mut rhs = vec![0u32; n * n];
        for c in 0..n {
            for &(j, k, coef) in &self.comult[c] {
                for a in 0..n {
                    for &(l, m) in self.algebra.basis_product(a, k) {
                        let cell = &mut system[(c * n + l, a * n + j)];
                        *cell = f.add(*cell, f.mul(coef, m));
                    }
                }
            }
            for l in 0..n {
                rhs[c * n + l] = f.mul(self.counit[c], self.unit()[l]);
            }
        }
        let sol = system
            .solve(&rhs)?
            .ok_or_else(|| Error::NotHopf("antipode equation has no solution".into()))?;
        let s = Matrix::new(f, n, n, sol)?;
        if let Some(v) = self.antipode_violation(&s) {
            return Err(Error::NotHopf(v));
        }
        Ok(s)
    }

    /// Dual Hopf algebra on the dual basis `{e_i*}`.
    pub fn dual(&self) -> Result<HopfPresentation> {
        let n = self.dim();
        let f = self.field();
        let s = self.antipode_matrix()?;
        // e_i* · e_j* = Σ_k (coefficient of e_i⊗e_j in Δ(e_k)) e_k*
        let mut mult = vec![Vec::new(); n * n];
        for k in 0..n {
            for &(i, j, c) in &self.comult[k] {
                mult[i * n + j].push((k, c));
            }
        }
        // Δ(e_k*) = Σ_{a,b} (coefficient of e_k in e_a e_b) e_a* ⊗ e_b*
        let mut comult = vec![Vec::new(); n];
        for a in 0..n {
            for b in 0..n {
                for &(k, c) in self.algebra.basis_product(a, b) {
                    comult[k].push((a, b, c));
                }
            }
        }
        let labels = self.labels().iter().map(|l| format!("({l})*")).collect();
        let algebra = AlgebraData::new(f, labels, mult, self.counit.clone())?;
        HopfPresentation::new(algebra, comult, self.unit().to_vec(), Some(s.transpose()))
    }

    /// Primitive elements: kernel of `x ↦ Δ(x) − x⊗1 − 1⊗x`.
    pub fn primitives(&self) -> Subspace {
        let n = self.dim();
        let f = self.field();
        let cols: Vec<Vector> =
            (0..n).map(|i| self.reduced_coproduct(&self.basis_vec(i)).unwrap()).collect();
        Matrix::from_columns(f, n * n, &cols).expect("columns have length dim²").kernel()
    }

    /// `Δ(D) ⊆ D ⊗ D`
    pub fn is_subcoalgebra(&self, d: &Subspace) -> Result<bool> {
        let dd = tensor_subspace(d, d)?;
        for v in d.basis_vectors() {
            if !dd.contains_vector(&self.comultiply(&v)?)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Closure of `s` and the unit under multiplication.
    pub fn subalgebra_generated(&self, s: &Subspace) -> Result<Subspace> {
        self.algebra.subalgebra_generated(s)
    }

    /// Hopf subalgebra test: unit, products, `Δ(K) ⊆ K⊗K`, `S(K) ⊆ K`.
    pub fn is_hopf_subalgebra(&self, k: &Subspace) -> Result<bool> {
        if !k.contains_vector(self.unit())? {
            return Ok(false);
        }
        if !k.contains(&self.algebra.subspace_product(k, k)?)? {
            return Ok(false);
        }
        if !self.is_subcoalgebra(k)? {
            return Ok(false);
        }
        let s = self.antipode_matrix()?;
        k.contains(&k.image_under(&s)?)
    }

    /// Restricts the structure to a Hopf subalgebra, expressed in the
    /// canonical basis of `k`.
    pub fn restrict(&self, k: &Subspace) -> Result<HopfPresentation> {
        if !self.is_hopf_subalgebra(k)? {
            return Err(Error::input("restrict: subspace is not a Hopf subalgebra"));
        }
        let n = self.dim();
        let f = self.field();
        let basis = k.basis_vectors();
        let piv = k.pivots();
        let mut algebra = self.algebra.restrict(k)?;
        let mut comult = Vec::with_capacity(basis.len());
        for b in &basis {
            let d = self.comultiply(b)?;
            let mut terms = Vec::new();
            for (r, &pr) in piv.iter().enumerate() {
                for (s, &ps) in piv.iter().enumerate() {
                    let c = d[pr * n + ps];
                    if c != 0 {
                        terms.push((r, s, c));
                    }
                }
            }
            comult.push(terms);
        }
        let counit: Vector = basis.iter().map(|b| self.counit_of(b)).collect();
        let s = self.antipode_matrix()?;
        let mut cols = Vec::with_capacity(basis.len());
        for b in &basis {
            cols.push(k.coordinates(&s.mul_vec(b)?)?.expect("K is antipode-stable"));
        }
        let antipode = Matrix::from_columns(f, basis.len(), &cols)?;
        let labels: Vec<String> = basis
            .iter()
            .enumerate()
            .map(|(i, b)| standard_label(self.labels(), b).unwrap_or_else(|| format!("b{i}")))
            .collect();
        algebra.set_labels(labels);
        HopfPresentation::new(algebra, comult, counit, Some(antipode))
    }

    /// Inclusion matrix (`dim × dim K`) of the canonical basis of `k`.
    pub fn inclusion_matrix(&self, k: &Subspace) -> Matrix {
        k.basis().transpose()
    }
}

/// Product in `A ⊗ A` of flattened tensors.
pub(crate) fn tensor_mul(alg: &AlgebraData, s: &[u32], t: &[u32]) -> Vector {
    let n = alg.dim();
    let f = alg.field();
    let mut out = vec![0; n * n];
    for (st_a, &c1) in s.iter().enumerate() {
        if c1 == 0 {
            continue;
        }
        let (a, b) = (st_a / n, st_a % n);
        for (st_c, &c2) in t.iter().enumerate() {
            if c2 == 0 {
                continue;
            }
            let (c, d) = (st_c / n, st_c % n);
            let coeff = f.mul(c1, c2);
            for &(l, x) in alg.basis_product(a, c) {
                let lx = f.mul(coeff, x);
                for &(r, y) in alg.basis_product(b, d) {
                    let idx = l * n + r;
                    out[idx] = f.add(out[idx], f.mul(lx, y));
                }
            }
        }
    }
    out
}

/// Extends coproducts of generators multiplicatively: basis element `i` is
/// the ordered product of the generators listed in `words[i]` (empty word =
/// unit), and `generator_coproducts[g]` is `Δ` of generator `g`.
pub(crate) fn coproducts_from_words(
    alg: &AlgebraData,
    generator_coproducts: &[Vector],
    words: &[Vec<usize>],
) -> Vec<Vector> {
    let f = alg.field();
    let one_one = kron_vec(f, alg.unit(), alg.unit());
    words
        .iter()
        .map(|w| {
            w.iter().fold(one_one.clone(), |acc, &g| tensor_mul(alg, &acc, &generator_coproducts[g]))
        })
        .collect()
}

fn coterms_from_dense(n: usize, t: &[u32]) -> Vec<CoTerm> {
    t.iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(idx, &c)| (idx / n, idx % n, c))
        .collect()
}

/// Label of `v` when it is a standard basis vector.
pub(crate) fn standard_label(labels: &[String], v: &[u32]) -> Option<String> {
    let mut nz = v.iter().enumerate().filter(|(_, &c)| c != 0);
    match (nz.next(), nz.next()) {
        (Some((i, &1)), None) => Some(labels[i].clone()),
        _ => None,
    }
}
