//! Associated graded Hopf algebra of a connected Hopf algebra.

use super::HopfPresentation;
use crate::algebra::{sparse_from_dense, AlgebraData};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Vector};
use crate::report::Report;

/// `gr H` together with the filtration degree of each basis element.
#[derive(Clone, Debug)]
pub struct GradedHopf {
    pub hopf: HopfPresentation,
    pub degrees: Vec<usize>,
    /// Columns are the lifts in `H` of the graded basis elements.
    pub lifts: Matrix,
}

/// Builds `gr H = ⊕ H_n / H_{n−1}`.
///
/// The degree-`n` basis is the part of the canonical basis of `H_n` not
/// already spanned by `H_{n−1}`. Products, coproducts and the antipode keep
/// only their degree-exact components.
pub fn assoc_graded(h: &HopfPresentation) -> Result<GradedHopf> {
    let filt = h.coradical_filtration()?;
    if !filt.exhausts {
        return Err(Error::unsupported("associated graded needs a connected Hopf algebra"));
    }
    let f = h.field();
    let n = h.dim();
    let mut lifts: Vec<Vector> = Vec::with_capacity(n);
    let mut degrees = Vec::with_capacity(n);
    let mut prev = crate::linalg::Subspace::zero(f, n);
    for (deg, term) in filt.terms.iter().enumerate() {
        let q = prev.quotient_basis(term)?;
        for v in q.complement {
            lifts.push(v);
            degrees.push(deg);
        }
        prev = term.clone();
    }
    let basis = Matrix::from_columns(f, n, &lifts)?;
    let coords = basis
        .inverse()?
        .ok_or_else(|| Error::Internal("graded basis is not a basis".into()))?;
    let to_coords = |v: &[u32]| coords.mul_vec(v).expect("length dim");

    // Keeps components of degree exactly `deg`; anything above is an error.
    let homogeneous = |c: Vector, deg: usize, what: &str| -> Result<Vector> {
        let mut out = vec![0; n];
        for (i, x) in c.into_iter().enumerate() {
            if x == 0 {
                continue;
            }
            if degrees[i] > deg {
                return Err(Error::Internal(format!("{what} raises filtration degree")));
            }
            if degrees[i] == deg {
                out[i] = x;
            }
        }
        Ok(out)
    };

    let mut mult = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            let prod = h.algebra().mul_unchecked(&lifts[a], &lifts[b]);
            let c = homogeneous(to_coords(&prod), degrees[a] + degrees[b], "product")?;
            mult.push(sparse_from_dense(&c));
        }
    }
    let unit = homogeneous(to_coords(h.unit()), 0, "unit")?;
    let labels: Vec<String> = (0..n)
        .map(|i| match super::standard_label(h.labels(), &lifts[i]) {
            Some(l) => format!("gr({l})"),
            None => format!("g{}_{i}", degrees[i]),
        })
        .collect();
    let algebra = AlgebraData::new(f, labels, mult, unit)?;

    let mut comult = Vec::with_capacity(n);
    for a in 0..n {
        let d = h.comultiply(&lifts[a])?;
        let mut terms = Vec::new();
        // Δ as an n×n grid D; in lift coordinates it becomes C·D·Cᵀ.
        let grid = Matrix::new(f, n, n, d)?;
        let t = coords.mul(&grid)?.mul(&coords.transpose())?;
        let t = t.data();
        for (idx, &c) in t.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let (l, r) = (idx / n, idx % n);
            let total = degrees[l] + degrees[r];
            if total > degrees[a] {
                return Err(Error::Internal("coproduct raises filtration degree".into()));
            }
            if total == degrees[a] {
                terms.push((l, r, c));
            }
        }
        comult.push(terms);
    }
    let counit: Vector =
        (0..n).map(|a| if degrees[a] == 0 { h.counit_of(&lifts[a]) } else { 0 }).collect();
    let s = h.antipode_matrix()?;
    let mut s_cols = Vec::with_capacity(n);
    for a in 0..n {
        s_cols.push(homogeneous(to_coords(&s.mul_vec(&lifts[a])?), degrees[a], "antipode")?);
    }
    let antipode = Matrix::from_columns(f, n, &s_cols)?;
    let hopf = HopfPresentation::new(algebra, comult, counit, Some(antipode))?;
    Ok(GradedHopf { hopf, degrees, lifts: basis })
}

/// `gr H` is a Hopf algebra, commutative, and every homogeneous element of
/// positive degree has zero p-th power.
pub fn check_graded_truncated(gr: &GradedHopf) -> Report {
    let h = &gr.hopf;
    let mut report = Report::new("associated graded");
    report.absorb("hopf", h.check_hopf());
    if h.is_commutative() {
        report.pass("commutative");
    } else {
        report.fail("commutative", "gr H is not commutative");
    }
    // In a commutative algebra of characteristic p the p-th power map is
    // semilinear, so vanishing on a homogeneous basis is enough.
    let p = u64::from(h.field().p());
    let mut bad = None;
    for (i, &deg) in gr.degrees.iter().enumerate() {
        if deg == 0 {
            continue;
        }
        let x = h.basis_vec(i);
        let xp = h.algebra().power(&x, p).expect("basis vector");
        if xp.iter().any(|&c| c != 0) {
            bad = Some(format!("{}^p ≠ 0", h.labels()[i]));
            break;
        }
    }
    report.outcome("p-th powers vanish in positive degree", bad);
    report
}
