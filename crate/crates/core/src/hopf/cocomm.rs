//! Cocommutative connected Hopf algebras: the Frobenius normal series and
//! the locality criterion.

use serde::Serialize;

use super::{p_index_of_dims, HopfPresentation};
use crate::error::{Error, Result};
use crate::linalg::{Subspace, Vector};
use crate::report::Report;

#[derive(Clone, Debug)]
pub struct NormalSeries {
    /// `k = N_0 ⊂ N_1 ⊂ … ⊂ N_n = H`
    pub terms: Vec<Subspace>,
    /// p-index of `N_{m−1}` in `N_m` for `m = 1..=n`.
    pub step_p_indices: Vec<u32>,
    /// `dim P(H / N_m⁺H)` for `m = 0..=n`.
    pub quotient_primitive_dims: Vec<usize>,
    pub report: Report,
}

impl NormalSeries {
    pub fn dims(&self) -> Vec<usize> {
        self.terms.iter().map(Subspace::dim).collect()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct LocalityReport {
    pub local: bool,
    pub primitive_subalgebra_local: bool,
    pub primitives_nilpotent: bool,
    /// Whether every element of `P(H)` was tested, or only a basis.
    pub exhaustive: bool,
}

impl LocalityReport {
    pub fn equivalent(&self) -> bool {
        self.local == self.primitive_subalgebra_local && self.local == self.primitives_nilpotent
    }
}

fn require_cocomm_connected(h: &HopfPresentation) -> Result<()> {
    if !h.is_cocommutative() {
        return Err(Error::unsupported("needs a cocommutative Hopf algebra"));
    }
    if !h.is_connected()? {
        return Err(Error::unsupported("needs a connected Hopf algebra"));
    }
    Ok(())
}

/// Series `N_m = J_m^⊥` where `J` is the augmentation ideal of the dual and
/// `J_m` is the ideal generated by the `p^m`-th powers of `J`.
pub fn normal_series_cocomm(h: &HopfPresentation) -> Result<NormalSeries> {
    require_cocomm_connected(h)?;
    let dual = h.dual()?;
    let alg = dual.algebra();
    let frob = alg.frobenius_matrix()?;
    let j = dual.augmentation_ideal();
    let mut terms = Vec::new();
    let mut power_image = j.clone();
    let mut length = 0usize;
    loop {
        let jm = alg.ideal_generated(&power_image)?;
        // The dual basis pairs with H by the dot product.
        terms.push(jm.annihilator());
        if power_image.is_zero() {
            break;
        }
        power_image = power_image.image_under(&frob)?;
        length += 1;
        if length > h.dim() {
            return Err(Error::Internal("Frobenius powers do not vanish on J".into()));
        }
    }

    let mut report = Report::new("normal series");
    for (m, nm) in terms.iter().enumerate() {
        let ok = h.is_hopf_subalgebra(nm)? && h.is_normal(nm)?;
        report.record(format!("N_{m} normal Hopf subalgebra"), ok, None);
    }
    report.record("N_0 = k", terms[0] == h.unit_line(), None);
    report.record("N_n = H", terms.last().unwrap().is_full(), None);
    if terms.len() > 1 {
        let generated = h.subalgebra_generated(&h.primitives())?;
        report.record("N_1 generated by primitives", terms[1] == generated, None);
    }
    // Length is the least n with x^{p^n} = 0 on J.
    let mut least = 0usize;
    let mut img = j;
    while !img.is_zero() {
        img = img.image_under(&frob)?;
        least += 1;
    }
    report.record("length is minimal", least == terms.len() - 1, Some(format!("n = {least}")));

    let mut steps = Vec::new();
    for w in terms.windows(2) {
        steps.push(p_index_of_dims(h.field().p(), w[1].dim(), w[0].dim())?);
    }
    let mut qdims = Vec::new();
    for nm in &terms {
        qdims.push(h.quotient_by(nm)?.hopf.primitives().dim());
    }
    let monotone = qdims.windows(2).all(|w| w[1] <= w[0]);
    report.record(
        "dim P(H/N_m⁺H) non-increasing",
        monotone && qdims.first() == Some(&h.primitives().dim()) && qdims.last() == Some(&0),
        Some(format!("{qdims:?}")),
    );
    // dim N_m / N_{m−1}⁺N_m ≤ dim N_{m−1} / N_{m−2}⁺N_{m−1}
    let layer = |m: usize| -> Result<usize> {
        let plus = h.augmentation_of(&terms[m - 1])?;
        let prod = h.algebra().subspace_product(&plus, &terms[m])?;
        Ok(terms[m].dim() - prod.dim())
    };
    let mut layers = Vec::new();
    for m in 1..terms.len() {
        layers.push(layer(m)?);
    }
    report.record(
        "successive layers shrink",
        layers.windows(2).all(|w| w[1] <= w[0]),
        Some(format!("{layers:?}")),
    );
    Ok(NormalSeries { terms, step_p_indices: steps, quotient_primitive_dims: qdims, report })
}

/// Largest `p^{dim P}` for which every primitive element is tested.
const EXHAUSTIVE_LIMIT: u64 = 4096;

/// Local ⇔ the subalgebra generated by primitives is local ⇔ every
/// primitive element is nilpotent.
pub fn locality_criterion(h: &HopfPresentation) -> Result<LocalityReport> {
    require_cocomm_connected(h)?;
    let f = h.field();
    let local = h.is_local()?;
    let prim = h.primitives();
    let l = h.subalgebra_generated(&prim)?;
    let l_plus = h.augmentation_of(&l)?;
    let primitive_subalgebra_local = h.algebra().is_nilpotent_subspace(&l_plus)?.is_some();

    let nilpotent = |v: &[u32]| -> Result<bool> {
        Ok(h.algebra().power(v, h.dim() as u64)?.iter().all(|&c| c == 0))
    };
    let basis = prim.basis_vectors();
    let count = u64::from(f.p()).checked_pow(basis.len() as u32);
    let exhaustive = count.map_or(false, |c| c <= EXHAUSTIVE_LIMIT);
    let mut primitives_nilpotent = true;
    if exhaustive {
        let total = count.unwrap();
        'outer: for idx in 0..total {
            let mut v: Vector = vec![0; h.dim()];
            let mut rest = idx;
            for b in &basis {
                f.axpy(&mut v, (rest % u64::from(f.p())) as u32, b);
                rest /= u64::from(f.p());
            }
            if !nilpotent(&v)? {
                primitives_nilpotent = false;
                break 'outer;
            }
        }
    } else {
        for b in &basis {
            if !nilpotent(b)? {
                primitives_nilpotent = false;
                break;
            }
        }
    }
    Ok(LocalityReport { local, primitive_subalgebra_local, primitives_nilpotent, exhaustive })
}

/// `P(H) ⊆ Z(H)`, for `H` with one-dimensional primitive space.
pub fn center_contains_primitives(h: &HopfPresentation) -> Result<bool> {
    let prim = h.primitives();
    if prim.dim() != 1 {
        return Err(Error::unsupported(format!(
            "needs dim P(H) = 1, found {}",
            prim.dim()
        )));
    }
    h.algebra().center().contains(&prim)
}
