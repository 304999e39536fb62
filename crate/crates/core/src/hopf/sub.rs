//! Inclusions of Hopf subalgebras `K ⊆ H`: normality, quotients, p-index,
//! first order and the free-module structure over `K`.

use serde::Serialize;

use super::HopfPresentation;
use crate::algebra::AlgebraData;
use crate::error::{Error, Result};
use crate::linalg::tensor::tensor_subspace;
use crate::linalg::{Matrix, Subspace, Vector};
use crate::report::Report;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum FirstOrder {
    Finite(usize),
    Infinite,
}

impl FirstOrder {
    pub fn finite(self) -> Option<usize> {
        match self {
            FirstOrder::Finite(n) => Some(n),
            FirstOrder::Infinite => None,
        }
    }
}

/// `H / K⁺H` with the projection used to build it.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub hopf: HopfPresentation,
    /// The Hopf ideal `K⁺H`.
    pub ideal: Subspace,
    /// `dim(H/I) × dim H`; sends `h` to the coordinates of its class.
    pub projection: Matrix,
}

/// `x^{p^d} + Σ_{i<d} a_i x^{p^i} + b = 0` with `a_i` scalars and `b ∈ K`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PPolynomialRelation {
    pub a: Vec<u32>,
    pub b: Vector,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FreeBasisWitness {
    /// p-index of `K` in `H`; the free basis is `{x^i : i < p^d}`.
    pub d: u32,
    pub free: bool,
    /// Present exactly when `K` is normal.
    pub relation: Option<PPolynomialRelation>,
}

impl HopfPresentation {
    /// Augmentation part `K⁺ = K ∩ ker ε`.
    pub fn augmentation_of(&self, k: &Subspace) -> Result<Subspace> {
        k.intersect(&self.augmentation_ideal())
    }

    /// Both adjoint actions of `H` preserve `K`.
    pub fn is_normal(&self, k: &Subspace) -> Result<bool> {
        let s = self.antipode_matrix()?;
        let n = self.dim();
        let f = self.field();
        let images: Vec<Vector> = (0..n).map(|j| s.column(j)).collect();
        let alg = self.algebra();
        for i in 0..n {
            for kv in k.basis_vectors() {
                let mut left = vec![0u32; n];
                let mut right = vec![0u32; n];
                for &(a, b, c) in self.coterms(i) {
                    let l = alg.mul_unchecked(&alg.mul_unchecked(&self.basis_vec(a), &kv), &images[b]);
                    f.axpy(&mut left, c, &l);
                    let r = alg.mul_unchecked(&alg.mul_unchecked(&images[a], &kv), &self.basis_vec(b));
                    f.axpy(&mut right, c, &r);
                }
                if !k.contains_vector(&left)? || !k.contains_vector(&right)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Level-one: `H` is generated as an algebra by `H_n`, `n` the first order.
    pub fn is_level_one(&self, k: &Subspace) -> Result<bool> {
        let Some(n) = self.first_order(k)?.finite() else {
            return Ok(false);
        };
        let filt = self.coradical_filtration()?;
        Ok(self.subalgebra_generated(filt.term(n))?.is_full())
    }

    /// `H / K⁺H` for a normal Hopf subalgebra `K`.
    pub fn quotient_by(&self, k: &Subspace) -> Result<Quotient> {
        if !self.is_hopf_subalgebra(k)? {
            return Err(Error::input("quotient_by: not a Hopf subalgebra"));
        }
        if !self.is_normal(k)? {
            return Err(Error::NormalityViolation("subalgebra is not normal".into()));
        }
        let n = self.dim();
        let f = self.field();
        let kplus = self.augmentation_of(k)?;
        let ideal = self.algebra().ideal_generated(&kplus)?;
        // Hopf ideal: ε(I) = 0, Δ(I) ⊆ I⊗H + H⊗I, S(I) ⊆ I.
        let full = Subspace::full(f, n);
        let co = tensor_subspace(&ideal, &full)?.sum(&tensor_subspace(&full, &ideal)?)?;
        for v in ideal.basis_vectors() {
            if self.counit_of(&v) != 0 || !co.contains_vector(&self.comultiply(&v)?)? {
                return Err(Error::NormalityViolation("K⁺H is not a coideal".into()));
            }
        }
        let s = self.antipode_matrix()?;
        if !ideal.contains(&ideal.image_under(&s)?)? {
            return Err(Error::NormalityViolation("K⁺H is not antipode-stable".into()));
        }
        if (n - ideal.dim()) * k.dim() != n {
            return Err(Error::TheoremViolation(format!(
                "dim H/K⁺H = {} but dim H / dim K = {}/{}",
                n - ideal.dim(),
                n,
                k.dim()
            )));
        }
        let q = ideal.quotient_basis(&full)?;
        let m = q.complement.len();
        let proj = |v: &[u32]| q.projection.mul_vec(v).expect("length dim");
        let alg = self.algebra();
        let mut mult = Vec::with_capacity(m * m);
        for a in 0..m {
            for b in 0..m {
                let prod = alg.mul_unchecked(&q.complement[a], &q.complement[b]);
                mult.push(crate::algebra::sparse_from_dense(&proj(&prod)));
            }
        }
        let labels: Vec<String> = q
            .complement
            .iter()
            .enumerate()
            .map(|(i, v)| match super::standard_label(self.labels(), v) {
                Some(l) => format!("[{l}]"),
                None => format!("q{i}"),
            })
            .collect();
        let algebra = AlgebraData::new(f, labels, mult, proj(self.unit()))?;
        let mut comult = Vec::with_capacity(m);
        for c in &q.complement {
            let grid = Matrix::new(f, n, n, self.comultiply(c)?)?;
            let t = q.projection.mul(&grid)?.mul(&q.projection.transpose())?;
            let terms = t
                .data()
                .iter()
                .enumerate()
                .filter(|(_, &x)| x != 0)
                .map(|(idx, &x)| (idx / m, idx % m, x))
                .collect();
            comult.push(terms);
        }
        let counit = q.complement.iter().map(|c| self.counit_of(c)).collect();
        let s_cols: Vec<Vector> =
            q.complement.iter().map(|c| proj(&s.mul_vec(c).expect("length dim"))).collect();
        let antipode = Matrix::from_columns(f, m, &s_cols)?;
        let hopf = HopfPresentation::new(algebra, comult, counit, Some(antipode))?;
        Ok(Quotient { hopf, ideal, projection: q.projection })
    }

    /// First `n` with `K ∩ H_n ⊊ H_n`.
    pub fn first_order(&self, k: &Subspace) -> Result<FirstOrder> {
        if k.is_full() {
            return Ok(FirstOrder::Infinite);
        }
        let filt = self.coradical_filtration()?;
        for (n, hn) in filt.terms.iter().enumerate() {
            if &k.intersect(hn)? != hn {
                return Ok(FirstOrder::Finite(n));
            }
        }
        Err(Error::unsupported("first order needs a connected Hopf algebra"))
    }

    /// Span of `K · v`.
    pub(crate) fn left_multiples(&self, k: &Subspace, v: &[u32]) -> Subspace {
        let alg = self.algebra();
        let prods: Vec<Vector> = k.basis_vectors().iter().map(|a| alg.mul_unchecked(a, v)).collect();
        Subspace::span(self.field(), self.dim(), &prods).expect("vectors have length dim")
    }

    /// `Δ(x) − x⊗1 − 1⊗x ∈ K⊗K`
    pub fn reduced_coproduct_in(&self, k: &Subspace, x: &[u32]) -> Result<bool> {
        tensor_subspace(k, k)?.contains_vector(&self.reduced_coproduct(x)?)
    }

    /// `[K, x] ⊆ target`
    pub(crate) fn brackets_into(&self, k: &Subspace, x: &[u32], target: &Subspace) -> Result<bool> {
        for a in k.basis_vectors() {
            if !target.contains_vector(&self.algebra().commutator(&a, x)?)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// `log_p(dim H) − log_p(dim K)`.
pub fn p_index(h: &HopfPresentation, k: &Subspace) -> Result<u32> {
    p_index_of_dims(h.field().p(), h.dim(), k.dim())
}

pub(crate) fn p_index_of_dims(p: u32, dim_h: usize, dim_k: usize) -> Result<u32> {
    let p = p as usize;
    let log = |mut d: usize| -> Result<u32> {
        let mut e = 0;
        while d > 1 && d % p == 0 {
            d /= p;
            e += 1;
        }
        if d == 1 {
            Ok(e)
        } else {
            Err(Error::TheoremViolation(format!("dimension {d} is not a power of p")))
        }
    };
    let (dh, dk) = (log(dim_h)?, log(dim_k)?);
    dh.checked_sub(dk).ok_or_else(|| Error::input("subalgebra larger than the algebra"))
}

/// For the first order `n`: `p-index ≥ dim(H_n / K_n)`.
pub fn lemma_p_index_bound(h: &HopfPresentation, k: &Subspace) -> Result<bool> {
    let Some(n) = h.first_order(k)?.finite() else {
        return Ok(true);
    };
    let filt = h.coradical_filtration()?;
    let hn = filt.term(n);
    let kn = k.intersect(hn)?;
    Ok(p_index(h, k)? as usize >= hn.dim() - kn.dim())
}

/// The bracket criterion for normality on level-one inclusions:
/// `[K, H_n] ⊆ K`. `None` when the inclusion is not level-one.
pub fn normality_bracket_criterion(h: &HopfPresentation, k: &Subspace) -> Result<Option<bool>> {
    if !h.is_level_one(k)? {
        return Ok(None);
    }
    let n = h.first_order(k)?.finite().expect("level-one has finite order");
    let filt = h.coradical_filtration()?;
    let c = h.commutator_subspace(k, filt.term(n))?;
    Ok(Some(k.contains(&c)?))
}

/// For `x` with `[K, x] ⊆ K` and reduced coproduct in `K⊗K`, checks that
/// `x^{p^m}` keeps its reduced coproduct in `K⊗K` for `m = 0..=max_m`.
pub fn p_power_coproduct_in(
    h: &HopfPresentation,
    k: &Subspace,
    x: &[u32],
    max_m: u32,
) -> Result<bool> {
    if !h.brackets_into(k, x, k)? || !h.reduced_coproduct_in(k, x)? {
        return Err(Error::unsupported("p-power coproduct check: hypotheses on x fail"));
    }
    let p = u64::from(h.field().p());
    let mut y = x.to_vec();
    for _ in 0..=max_m {
        if !h.reduced_coproduct_in(k, &y)? {
            return Ok(false);
        }
        y = h.algebra().power(&y, p)?;
    }
    Ok(true)
}

/// `L_n = Σ_{i ≤ n} K x^i`, checked to be subcoalgebras until they stabilize.
pub fn ladder_subcoalgebras(h: &HopfPresentation, k: &Subspace, x: &[u32]) -> Result<Report> {
    let k_plus_kx = k.sum(&h.left_multiples(k, x))?;
    if !h.reduced_coproduct_in(k, x)? || !h.brackets_into(k, x, &k_plus_kx)? {
        return Err(Error::unsupported("ladder check: hypotheses on x fail"));
    }
    let mut report = Report::new("ladder subcoalgebras");
    let mut power = h.unit().to_vec();
    let mut ladder = h.left_multiples(k, &power);
    for n in 0..=h.dim() {
        let ok = h.is_subcoalgebra(&ladder)?;
        report.record(format!("L_{n} subcoalgebra"), ok, None);
        power = h.algebra().mul_unchecked(&power, x);
        let next = ladder.sum(&h.left_multiples(k, &power))?;
        if next == ladder {
            break;
        }
        ladder = next;
    }
    Ok(report)
}

/// Free left `K`-module basis `{x^i : i < p^d}` of `H` and, for normal `K`,
/// the relation `x^{p^d} + Σ a_i x^{p^i} + b = 0`.
pub fn free_basis_minrel(h: &HopfPresentation, k: &Subspace, x: &[u32]) -> Result<FreeBasisWitness> {
    let f = h.field();
    let n = h.dim();
    let generated = h.subalgebra_generated(&k.extend(&[x.to_vec()])?)?;
    if !generated.is_full() {
        return Err(Error::unsupported("K and x do not generate H"));
    }
    if !h.reduced_coproduct_in(k, x)? {
        return Err(Error::unsupported("reduced coproduct of x is not in K⊗K"));
    }
    let k_plus_kx = k.sum(&h.left_multiples(k, x))?;
    if !h.brackets_into(k, x, &k_plus_kx)? {
        return Err(Error::unsupported("[K, x] is not inside K + Kx"));
    }
    let d = p_index(h, k)?;
    let top = (f.p() as usize).pow(d);
    let alg = h.algebra();
    let mut products = Vec::with_capacity(k.dim() * top);
    let mut power = h.unit().to_vec();
    for _ in 0..top {
        for a in k.basis_vectors() {
            products.push(alg.mul_unchecked(&a, &power));
        }
        power = alg.mul_unchecked(&power, x);
    }
    let free = Matrix::from_rows(f, n, &products)?.rank() == products.len() && products.len() == n;
    if !free {
        return Ok(FreeBasisWitness { d, free, relation: None });
    }
    if !h.is_normal(k)? {
        return Ok(FreeBasisWitness { d, free, relation: None });
    }
    // Unknowns: a_0..a_{d−1}, then coordinates of b in K's canonical basis.
    let p = u64::from(f.p());
    let mut cols = Vec::new();
    let mut xp = x.to_vec();
    for _ in 0..d {
        cols.push(xp.clone());
        xp = alg.power(&xp, p)?;
    }
    cols.extend(k.basis_vectors());
    let system = Matrix::from_columns(f, n, &cols)?;
    let sol = system.solve(&f.neg_vec(&xp))?.ok_or_else(|| {
        Error::TheoremViolation("x^{p^d} has no relation of p-polynomial shape".into())
    })?;
    let (a, coeffs) = sol.split_at(d as usize);
    let mut b = vec![0u32; n];
    for (c, v) in coeffs.iter().zip(k.basis_vectors()) {
        f.axpy(&mut b, *c, &v);
    }
    Ok(FreeBasisWitness { d, free, relation: Some(PPolynomialRelation { a: a.to_vec(), b }) })
}
