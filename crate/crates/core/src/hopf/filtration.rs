//! Wedge products and the coradical filtration.

use serde::Serialize;

use super::{HopfPresentation, Interrupt};
use crate::error::{Error, Result};
use crate::linalg::Subspace;
use crate::report::Report;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiltrationResult {
    /// `H_0 ⊆ H_1 ⊆ …`, stopping at the first repeated term.
    pub terms: Vec<Subspace>,
    pub exhausts: bool,
}

#[derive(Serialize)]
struct DimsView {
    dims: Vec<usize>,
    connected: bool,
}

impl FiltrationResult {
    pub fn dims(&self) -> Vec<usize> {
        self.terms.iter().map(Subspace::dim).collect()
    }

    /// `H_n`, saturating past the last computed term.
    pub fn term(&self, n: usize) -> &Subspace {
        &self.terms[n.min(self.terms.len() - 1)]
    }

    /// Smallest `n` with `v ∈ H_n`.
    pub fn degree_of(&self, v: &[u32]) -> Result<Option<usize>> {
        for (n, t) in self.terms.iter().enumerate() {
            if t.contains_vector(v)? {
                return Ok(Some(n));
            }
        }
        Ok(None)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(DimsView { dims: self.dims(), connected: self.exhausts })
            .expect("plain data serializes")
    }
}

impl HopfPresentation {
    /// `D ∧ E = Δ⁻¹(D ⊗ H + H ⊗ E)` for subcoalgebras `D`, `E`.
    pub fn wedge(&self, d: &Subspace, e: &Subspace) -> Result<Subspace> {
        let n = self.dim();
        if d.ambient() != n || e.ambient() != n {
            return Err(Error::dim(n, d.ambient().max(e.ambient())));
        }
        for s in [d, e] {
            if !self.is_subcoalgebra(s)? {
                return Err(Error::input("wedge: argument is not a subcoalgebra"));
            }
        }
        let ad = d.annihilator();
        let ae = e.annihilator();
        if ad.is_zero() || ae.is_zero() {
            return Ok(Subspace::full(self.field(), n));
        }
        // Rows of ann(D) ⊗ ann(E) are the functionals killing D⊗H + H⊗E.
        let proj = ad.basis().kron(ae.basis());
        Ok(proj.mul(&self.comult_matrix())?.kernel())
    }

    pub fn coradical_filtration(&self) -> Result<FiltrationResult> {
        self.coradical_filtration_with(&Interrupt::new())
    }

    /// Filtration `C_0 = k·1`, `C_n = C_0 ∧ C_{n−1}`, checking `interrupt`
    /// between iterations.
    pub fn coradical_filtration_with(&self, interrupt: &Interrupt) -> Result<FiltrationResult> {
        let c0 = self.unit_line();
        let mut terms = vec![c0.clone()];
        loop {
            interrupt.check()?;
            let next = self.wedge(&c0, terms.last().unwrap())?;
            if &next == terms.last().unwrap() {
                break;
            }
            terms.push(next);
        }
        let exhausts = terms.last().unwrap().is_full();
        Ok(FiltrationResult { terms, exhausts })
    }

    pub fn is_connected(&self) -> Result<bool> {
        Ok(self.coradical_filtration()?.exhausts)
    }

    /// Commutator subspace `[U, V]`.
    pub fn commutator_subspace(&self, u: &Subspace, v: &Subspace) -> Result<Subspace> {
        let mut out = Vec::new();
        for a in u.basis_vectors() {
            for b in v.basis_vectors() {
                out.push(self.algebra().commutator(&a, &b)?);
            }
        }
        Subspace::span(self.field(), self.dim(), &out)
    }
}

/// Checks `[H_n, H_m] ⊆ H_{n+m−1}` for all `1 ≤ n, m` up to the top of the
/// filtration.
pub fn commutator_filtration_check(h: &HopfPresentation) -> Result<Report> {
    let filt = h.coradical_filtration()?;
    if !filt.exhausts {
        return Err(Error::unsupported("commutator filtration check needs a connected Hopf algebra"));
    }
    let top = filt.terms.len() - 1;
    let mut report = Report::new("commutator filtration");
    for n in 1..=top {
        for m in n..=top {
            let c = h.commutator_subspace(filt.term(n), filt.term(m))?;
            let ok = filt.term(n + m - 1).contains(&c)?;
            let name = format!("[H_{n}, H_{m}] ⊆ H_{}", n + m - 1);
            if ok {
                report.pass(name);
            } else {
                report.fail(name, "commutator leaves the filtration term");
            }
        }
    }
    Ok(report)
}
