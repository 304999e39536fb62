//! The cobar complex of a Hopf algebra and its low-degree cohomology.
//!
//! Degree `n` cochains are flattened elements of `H^{⊗n}` (`H^{⊗0} = k`),
//! with differential
//! `d^n = 1⊗I_n + Σ_{i<n} (−1)^{i+1} I_i⊗Δ⊗I_{n−i−1} + (−1)^{n+1} I_n⊗1`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hopf::{FirstOrder, HopfPresentation, Interrupt};
use crate::linalg::tensor::{kron_vec, sandwich};
use crate::linalg::{Matrix, Subspace, Vector};
use crate::rlie::RestrictedLie;

/// Default bound on `dim^max_degree`.
pub const DEFAULT_MAX_TENSOR: usize = 20_000;
/// Highest tensor power the complex materializes.
pub const MAX_DEGREE: u32 = 3;

#[derive(Clone, Debug)]
pub struct CochainComplex {
    hopf: HopfPresentation,
    max_degree: u32,
    /// `differentials[n] = d^n : H^{⊗n} → H^{⊗(n+1)}`
    differentials: Vec<Matrix>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CohomologyClass {
    pub degree: u32,
    pub representative: Vector,
}

#[derive(Clone, Debug, Serialize)]
pub struct Cohomology {
    pub degree: u32,
    pub dimension: usize,
    pub classes: Vec<CohomologyClass>,
}

impl Cohomology {
    /// `{"degree", "dimension", "representatives": [[[index, coeff]…]…]}`
    pub fn to_json(&self) -> serde_json::Value {
        let reps: Vec<Vec<(usize, u32)>> = self
            .classes
            .iter()
            .map(|c| {
                c.representative
                    .iter()
                    .enumerate()
                    .filter(|(_, &x)| x != 0)
                    .map(|(i, &x)| (i, x))
                    .collect()
            })
            .collect();
        serde_json::json!({
            "degree": self.degree,
            "dimension": self.dimension,
            "representatives": reps,
        })
    }
}

/// `Σ_{i=1}^{p−1} c_i x^i ⊗ x^{p−i}` with `c_i = binom(p, i) / p`.
pub fn omega(h: &HopfPresentation, x: &[u32]) -> Result<Vector> {
    let f = h.field();
    let n = h.dim();
    if x.len() != n {
        return Err(Error::dim(n, x.len()));
    }
    let p = f.p() as usize;
    let mut powers = vec![h.unit().to_vec()];
    for _ in 1..p {
        powers.push(h.multiply(powers.last().unwrap(), x)?);
    }
    let mut out = vec![0; n * n];
    for (i, c) in (1..p).zip(f.divided_binomials()) {
        f.axpy(&mut out, c, &kron_vec(f, &powers[i], &powers[p - i]));
    }
    Ok(out)
}

/// `d^n` assembled directly on basis tensors.
pub fn differential(h: &HopfPresentation, n: u32) -> Result<Matrix> {
    let f = h.field();
    let dim = h.dim();
    let src = dim
        .checked_pow(n)
        .ok_or_else(|| Error::Resource("tensor power overflows".into()))?;
    let dst = src * dim;
    let mut m = Matrix::zeros(f, dst, src);
    if n == 0 {
        return Ok(m);
    }
    let unit = h.unit();
    let last_sign = if n % 2 == 1 { 1 } else { f.neg(1) };
    for col in 0..src {
        // digits of the source basis tensor, first factor first
        let mut digits = vec![0usize; n as usize];
        let mut rest = col;
        for k in (0..n as usize).rev() {
            digits[k] = rest % dim;
            rest /= dim;
        }
        // 1 ⊗ t: the unit occupies the most significant slot
        for (u, &c) in unit.iter().enumerate() {
            if c != 0 {
                let row = u * src + col;
                m[(row, col)] = f.add(m[(row, col)], c);
            }
        }
        // t ⊗ 1
        for (u, &c) in unit.iter().enumerate() {
            if c != 0 {
                let row = col * dim + u;
                m[(row, col)] = f.add(m[(row, col)], f.mul(last_sign, c));
            }
        }
        for i in 0..n as usize {
            let sign = if i % 2 == 0 { f.neg(1) } else { 1 };
            let before = digits[..i].iter().fold(0usize, |acc, &d| acc * dim + d);
            let after_len = n as usize - i - 1;
            let after = digits[i + 1..].iter().fold(0usize, |acc, &d| acc * dim + d);
            let after_size = dim.pow(after_len as u32);
            for &(a, b, c) in h.coterms(digits[i]) {
                let row = ((before * dim + a) * dim + b) * after_size + after;
                m[(row, col)] = f.add(m[(row, col)], f.mul(sign, c));
            }
        }
    }
    Ok(m)
}

/// `d^n` assembled from Kronecker products; slower, used as a cross-check.
pub fn differential_by_kron(h: &HopfPresentation, n: u32) -> Result<Matrix> {
    let f = h.field();
    let dim = h.dim();
    let src = dim.pow(n);
    if n == 0 {
        return Ok(Matrix::zeros(f, dim, 1));
    }
    let unit_col = Matrix::column_vector(f, h.unit());
    let mut d = unit_col.kron(&Matrix::identity(f, src));
    let delta = h.comult_matrix();
    for i in 0..n {
        let term = sandwich(&delta, dim.pow(i), dim.pow(n - i - 1));
        let term = if i % 2 == 0 { term.scale(f.neg(1)) } else { term };
        d = d.add(&term)?;
    }
    let tail = Matrix::identity(f, src).kron(&unit_col);
    let tail = if n % 2 == 1 { tail } else { tail.scale(f.neg(1)) };
    d.add(&tail)
}

impl CochainComplex {
    /// Materializes `d^0 … d^{max_degree − 1}`, refusing when
    /// `dim^max_degree` exceeds `max_tensor`.
    pub fn build_with(
        h: &HopfPresentation,
        max_degree: u32,
        max_tensor: usize,
        interrupt: &Interrupt,
    ) -> Result<Self> {
        if max_degree == 0 || max_degree > MAX_DEGREE {
            return Err(Error::unsupported(format!("max_degree must be 1..={MAX_DEGREE}")));
        }
        let size = h.dim().checked_pow(max_degree);
        if size.map_or(true, |s| s > max_tensor) {
            return Err(Error::Resource(format!(
                "dim^{max_degree} = {}^{max_degree} exceeds the tensor limit {max_tensor}",
                h.dim()
            )));
        }
        let mut differentials = Vec::with_capacity(max_degree as usize);
        for n in 0..max_degree {
            interrupt.check()?;
            differentials.push(differential(h, n)?);
        }
        for n in 1..differentials.len() {
            interrupt.check()?;
            if !differentials[n].mul(&differentials[n - 1])?.is_zero() {
                return Err(Error::Internal(format!("d^{n} ∘ d^{} ≠ 0", n - 1)));
            }
        }
        Ok(CochainComplex { hopf: h.clone(), max_degree, differentials })
    }

    pub fn build(h: &HopfPresentation, max_degree: u32) -> Result<Self> {
        CochainComplex::build_with(h, max_degree, DEFAULT_MAX_TENSOR, &Interrupt::new())
    }

    pub fn hopf(&self) -> &HopfPresentation {
        &self.hopf
    }
    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }
    pub fn d(&self, n: u32) -> &Matrix {
        &self.differentials[n as usize]
    }

    fn check_degree(&self, n: u32) -> Result<()> {
        if n >= self.max_degree {
            return Err(Error::input(format!(
                "degree {n} needs a complex built to degree {}",
                n + 1
            )));
        }
        Ok(())
    }

    pub fn cocycles(&self, n: u32) -> Result<Subspace> {
        self.check_degree(n)?;
        Ok(self.d(n).kernel())
    }

    pub fn coboundaries(&self, n: u32) -> Result<Subspace> {
        self.check_degree(n)?;
        if n == 0 {
            return Ok(Subspace::zero(self.hopf.field(), 1));
        }
        Ok(self.d(n - 1).image())
    }

    /// `H^n = ker d^n / im d^{n−1}` with representatives completing
    /// `im d^{n−1}` inside `ker d^n`.
    pub fn cohomology(&self, n: u32) -> Result<Cohomology> {
        let z = self.cocycles(n)?;
        let b = self.coboundaries(n)?;
        let q = b.quotient_basis(&z)?;
        let classes = q
            .complement
            .into_iter()
            .map(|representative| CohomologyClass { degree: n, representative })
            .collect::<Vec<_>>();
        Ok(Cohomology { degree: n, dimension: classes.len(), classes })
    }

    /// Solves `d¹Θ = t` for a 2-cocycle `t`.
    pub fn is_coboundary(&self, t: &[u32]) -> Result<Option<Vector>> {
        self.check_degree(2)?;
        if !self.d(2).mul_vec(t)?.iter().all(|&c| c == 0) {
            return Err(Error::input("tensor is not a 2-cocycle"));
        }
        self.d(1).solve(t)
    }

    /// `d^n T^n = T^{n+1} d^n` for every `n` below the top degree.
    pub fn chain_map_check(&self, x: &[u32]) -> Result<bool> {
        for n in 0..self.max_degree {
            let tn = adjoint_t(&self.hopf, x, n)?;
            let tn1 = adjoint_t(&self.hopf, x, n + 1)?;
            if self.d(n).mul(&tn)? != tn1.mul(self.d(n))? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// `T^n_x = Σ_i I_i ⊗ ad(x) ⊗ I_{n−i−1}` on `H^{⊗n}`, for primitive `x`.
pub fn adjoint_t(h: &HopfPresentation, x: &[u32], n: u32) -> Result<Matrix> {
    if !h.primitives().contains_vector(x)? {
        return Err(Error::input("adjoint map needs a primitive element"));
    }
    let f = h.field();
    let dim = h.dim();
    let alg = h.algebra();
    let ad = alg.left_mult_matrix(x)?.sub(&alg.right_mult_matrix(x)?)?;
    let size = dim.pow(n);
    let mut t = Matrix::zeros(f, size, size);
    for i in 0..n {
        t = t.add(&sandwich(&ad, dim.pow(i), dim.pow(n - i - 1)))?;
    }
    Ok(t)
}

/// `[T_x, T_y] = T_{[x,y]}` and `(T_x)^p = T_{x^p}` on tensor degrees
/// `1..=max_n`.
pub fn adjoint_module_laws(h: &HopfPresentation, x: &[u32], y: &[u32], max_n: u32) -> Result<bool> {
    let alg = h.algebra();
    let p = u64::from(h.field().p());
    let xy = alg.commutator(x, y)?;
    let xp = alg.power(x, p)?;
    for n in 1..=max_n {
        let tx = adjoint_t(h, x, n)?;
        let ty = adjoint_t(h, y, n)?;
        let comm = tx.mul(&ty)?.sub(&ty.mul(&tx)?)?;
        if comm != adjoint_t(h, &xy, n)? {
            return Ok(false);
        }
        if tx.pow(p)? != adjoint_t(h, &xp, n)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `Σ α_i^p ω(x_i) − ω(Σ α_i x_i)`
pub fn omega_defect(h: &HopfPresentation, xs: &[Vector], alpha: &[u32]) -> Result<Vector> {
    let f = h.field();
    let n = h.dim();
    if xs.len() != alpha.len() {
        return Err(Error::dim(xs.len(), alpha.len()));
    }
    let mut sum = vec![0; n];
    let mut t = vec![0; n * n];
    for (x, &a) in xs.iter().zip(alpha) {
        f.axpy(&mut sum, a, x);
        f.axpy(&mut t, f.pow(a, u64::from(f.p())), &omega(h, x)?);
    }
    Ok(f.sub_vec(&t, &omega(h, &sum)?))
}

#[derive(Clone, Debug, Serialize)]
pub struct H2Basis {
    pub n: usize,
    pub dimension: usize,
    pub expected: usize,
    /// Labels and representatives of `ω(x_i)` and `x_j ⊗ x_k` (`j < k`).
    pub classes: Vec<(String, Vector)>,
    pub cocycles: bool,
    pub independent: bool,
    pub spanning: bool,
}

impl H2Basis {
    pub fn passed(&self) -> bool {
        self.dimension == self.expected && self.cocycles && self.independent && self.spanning
    }
}

/// Checks that `ω(x_i)` and `x_j ⊗ x_k` (`j < k`) form a basis of
/// `H²(k, u(g))`.
pub fn h2_basis_ug(g: &RestrictedLie, max_tensor: usize) -> Result<H2Basis> {
    let u = g.enveloping()?;
    let c = CochainComplex::build_with(&u, 3, max_tensor, &Interrupt::new())?;
    let f = u.field();
    let n = g.dim();
    let gens: Vec<Vector> = (0..n).map(|k| u.basis_vec(g.generator_index(k))).collect();
    let mut classes = Vec::new();
    for (k, x) in gens.iter().enumerate() {
        classes.push((format!("ω({})", g.labels()[k]), omega(&u, x)?));
    }
    for j in 0..n {
        for k in j + 1..n {
            classes.push((
                format!("{}⊗{}", g.labels()[j], g.labels()[k]),
                kron_vec(f, &gens[j], &gens[k]),
            ));
        }
    }
    let z = c.cocycles(2)?;
    let b = c.coboundaries(2)?;
    let cocycles = classes.iter().all(|(_, v)| z.contains_vector(v).unwrap_or(false));
    let reps: Vec<Vector> = classes.iter().map(|(_, v)| v.clone()).collect();
    let spanned = b.extend(&reps)?;
    let independent = spanned.dim() == b.dim() + reps.len();
    let dimension = z.dim() - b.dim();
    let spanning = spanned == z;
    Ok(H2Basis { n, dimension, expected: n * (n + 1) / 2, classes, cocycles, independent, spanning })
}

/// Image of `H_n / K_n` in `H²(k, K)` under `d¹`, `n` the first order.
#[derive(Clone, Debug, Serialize)]
pub struct InducedInjection {
    pub first_order: usize,
    pub quotient_dim: usize,
    /// `d¹` of each complement vector, in `K ⊗ K` coordinates.
    pub images: Vec<Vector>,
    pub injective: bool,
    pub equivariant: bool,
}

/// Coordinates in `K ⊗ K` (canonical basis of `K`) of a tensor in `K ⊗ K`.
fn tensor_coords(k: &Subspace, dim: usize, t: &[u32]) -> Vector {
    let piv = k.pivots();
    let mut out = Vec::with_capacity(piv.len() * piv.len());
    for &a in piv {
        for &b in piv {
            out.push(t[a * dim + b]);
        }
    }
    out
}

pub fn induced_injection(h: &HopfPresentation, k: &Subspace, max_tensor: usize) -> Result<InducedInjection> {
    let n = match h.first_order(k)? {
        FirstOrder::Finite(n) if n >= 2 => n,
        other => {
            return Err(Error::unsupported(format!("needs first order ≥ 2, found {other:?}")))
        }
    };
    let prim = h.primitives();
    if !k.contains(&prim)? {
        return Err(Error::unsupported("K must contain every primitive of H"));
    }
    let dim = h.dim();
    let kh = h.restrict(k)?;
    let ck = CochainComplex::build_with(&kh, 3, max_tensor, &Interrupt::new())?;
    let bk = ck.coboundaries(2)?;
    let zk = ck.cocycles(2)?;
    let filt = h.coradical_filtration()?;
    let hn = filt.term(n);
    let kn = k.intersect(hn)?;
    let q = kn.quotient_basis(hn)?;
    let d1 = differential(h, 1)?;
    let kk = crate::linalg::tensor::tensor_subspace(k, k)?;
    let phi = |v: &[u32]| -> Result<Vector> {
        let t = d1.mul_vec(v)?;
        if !kk.contains_vector(&t)? {
            return Err(Error::TheoremViolation("d¹ of H_n leaves K ⊗ K".into()));
        }
        let tk = tensor_coords(k, dim, &t);
        if !zk.contains_vector(&tk)? {
            return Err(Error::Internal("image is not a cocycle of K".into()));
        }
        Ok(tk)
    };
    let images: Vec<Vector> = q.complement.iter().map(|v| phi(v)).collect::<Result<_>>()?;
    let injective = bk.extend(&images)?.dim() == bk.dim() + images.len();

    // φ([x, v]) = T_x φ(v) modulo coboundaries of K.
    let f = h.field();
    let mut equivariant = true;
    for x in prim.basis_vectors() {
        let xk = k.coordinates(&x)?.expect("primitives lie in K");
        let tx = adjoint_t(&kh, &xk, 2)?;
        for v in &q.complement {
            let bracket = h.algebra().commutator(&x, v)?;
            let lhs = phi(&bracket)?;
            let rhs = tx.mul_vec(&phi(v)?)?;
            if !bk.contains_vector(&f.sub_vec(&lhs, &rhs))? {
                equivariant = false;
            }
        }
    }
    Ok(InducedInjection { first_order: n, quotient_dim: images.len(), images, injective, equivariant })
}

/// An element `x ∉ K` with
/// `Δ(x) = x⊗1 + 1⊗x + ω(Σ α_i x_i) + Σ_{j<k} α_{jk} x_j⊗x_k`.
#[derive(Clone, Debug, Serialize)]
pub struct ExtensionElement {
    pub x: Vector,
    pub first_order: usize,
    /// Basis `x_1 … x_m` of the primitives the coefficients refer to.
    pub primitives: Vec<Vector>,
    pub alpha: Vec<u32>,
    pub alpha_jk: Vec<(usize, usize, u32)>,
    pub verified: bool,
}

pub fn extension_element(h: &HopfPresentation, k: &Subspace) -> Result<ExtensionElement> {
    if k.is_full() {
        return Err(Error::input("extension element needs K ≠ H"));
    }
    if !h.is_hopf_subalgebra(k)? {
        return Err(Error::input("K is not a Hopf subalgebra"));
    }
    let f = h.field();
    let dim = h.dim();
    let prim_h = h.primitives();
    let prim_k = prim_h.intersect(k)?;
    if &h.subalgebra_generated(&prim_k)? != k {
        return Err(Error::unsupported("K is not generated by its primitives"));
    }
    let d = h
        .first_order(k)?
        .finite()
        .expect("K ≠ H has a finite first order");
    if d == 1 {
        let x = prim_h
            .basis_vectors()
            .into_iter()
            .find(|v| !k.contains_vector(v).unwrap_or(true))
            .ok_or_else(|| Error::Internal("first order 1 without a new primitive".into()))?;
        return Ok(ExtensionElement {
            x,
            first_order: 1,
            primitives: Vec::new(),
            alpha: Vec::new(),
            alpha_jk: Vec::new(),
            verified: true,
        });
    }
    let xs = prim_k.basis_vectors();
    let m = xs.len();
    let filt = h.coradical_filtration()?;
    let hd = filt.term(d);
    let x0 = k.intersect(hd)?.quotient_basis(hd)?.complement.remove(0);
    let d1 = differential(h, 1)?;

    // −d¹x0 = Σ α_i ω(x_i) + Σ α_jk x_j⊗x_k + d¹Θ with Θ ∈ K
    let mut cols = Vec::new();
    for x in &xs {
        cols.push(omega(h, x)?);
    }
    let mut pairs = Vec::new();
    for j in 0..m {
        for l in j + 1..m {
            cols.push(kron_vec(f, &xs[j], &xs[l]));
            pairs.push((j, l));
        }
    }
    let kbasis = k.basis_vectors();
    for v in &kbasis {
        cols.push(d1.mul_vec(v)?);
    }
    let system = Matrix::from_columns(f, dim * dim, &cols)?;
    let target = f.neg_vec(&d1.mul_vec(&x0)?);
    let sol = system
        .solve(&target)?
        .ok_or_else(|| Error::TheoremViolation("d¹x0 is not in the span of the ω and x⊗x classes".into()))?;
    let alpha = sol[..m].to_vec();
    let alpha_jk: Vec<(usize, usize, u32)> = pairs
        .iter()
        .zip(&sol[m..m + pairs.len()])
        .filter(|(_, &c)| c != 0)
        .map(|(&(j, l), &c)| (j, l, c))
        .collect();
    let mut theta = vec![0; dim];
    for (c, v) in sol[m + pairs.len()..].iter().zip(&kbasis) {
        f.axpy(&mut theta, *c, v);
    }
    // Σ α_i ω(x_i) = ω(Σ α_i x_i) + d¹Ψ
    let defect = omega_defect(h, &xs, &alpha)?;
    let kd1: Vec<Vector> = kbasis.iter().map(|v| d1.mul_vec(v)).collect::<Result<_>>()?;
    let psi_coeffs = Matrix::from_columns(f, dim * dim, &kd1)?
        .solve(&defect)?
        .ok_or_else(|| Error::TheoremViolation("ω defect is not a coboundary".into()))?;
    let mut psi = vec![0; dim];
    for (c, v) in psi_coeffs.iter().zip(&kbasis) {
        f.axpy(&mut psi, *c, v);
    }
    let x = f.add_vec(&f.add_vec(&x0, &theta), &psi);

    let mut sum = vec![0; dim];
    for (xv, &a) in xs.iter().zip(&alpha) {
        f.axpy(&mut sum, a, xv);
    }
    let mut expected = omega(h, &sum)?;
    for &(j, l, c) in &alpha_jk {
        f.axpy(&mut expected, c, &kron_vec(f, &xs[j], &xs[l]));
    }
    let verified = h.reduced_coproduct(&x)? == expected && !k.contains_vector(&x)?;
    let p = f.p() as usize;
    if d != 2 && d != p {
        return Err(Error::TheoremViolation(format!("first order {d} is not 1, 2 or p")));
    }
    Ok(ExtensionElement { x, first_order: d, primitives: xs, alpha, alpha_jk, verified })
}
