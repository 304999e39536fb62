//! JSON interchange format for Hopf algebra presentations.
//!
//! ```json
//! {"format_version": "1", "p": 2, "dim": 2, "basis": ["1", "x"],
//!  "unit": [1, 0], "mult": [[0,0,0,1], …], "counit": [1, 0],
//!  "comult": [[1,1,0,1], …], "antipode": [[1,0],[0,1]]}
//! ```
//!
//! `mult` entries `[i, j, k, c]` mean `e_i · e_j ∋ c·e_k`; `comult` entries
//! `[i, j, k, c]` mean `Δ(e_i) ∋ c·e_j⊗e_k`. The antipode grid is row-major
//! with column `j` holding `S(e_j)`. Repeated entries are summed.

use serde::{Deserialize, Serialize};

use crate::algebra::AlgebraData;
use crate::error::{Error, Result};
use crate::hopf::HopfPresentation;
use crate::linalg::{Gf, Matrix};

pub const FORMAT_VERSION: &str = "1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresentationDocument {
    pub format_version: String,
    pub p: u32,
    pub dim: usize,
    pub basis: Vec<String>,
    pub unit: Vec<u64>,
    pub mult: Vec<[u64; 4]>,
    pub counit: Vec<u64>,
    pub comult: Vec<[u64; 4]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub antipode: Option<Vec<Vec<u64>>>,
}

impl PresentationDocument {
    pub fn from_presentation(h: &HopfPresentation) -> Self {
        let n = h.dim();
        let alg = h.algebra();
        let mut mult = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for &(k, c) in alg.basis_product(i, j) {
                    mult.push([i as u64, j as u64, k as u64, u64::from(c)]);
                }
            }
        }
        let mut comult = Vec::new();
        for i in 0..n {
            for &(j, k, c) in h.coterms(i) {
                comult.push([i as u64, j as u64, k as u64, u64::from(c)]);
            }
        }
        let antipode = h.antipode().map(|s| {
            (0..n).map(|r| s.row(r).iter().map(|&c| u64::from(c)).collect()).collect()
        });
        PresentationDocument {
            format_version: FORMAT_VERSION.into(),
            p: h.field().p(),
            dim: n,
            basis: h.labels().to_vec(),
            unit: h.unit().iter().map(|&c| u64::from(c)).collect(),
            mult,
            counit: h.counit().iter().map(|&c| u64::from(c)).collect(),
            comult,
            antipode,
        }
    }

    /// Validates indices, coefficients and shapes, then assembles the
    /// presentation. Hopf axioms are not checked here.
    pub fn to_presentation(&self) -> Result<HopfPresentation> {
        if self.format_version != FORMAT_VERSION {
            return Err(Error::input(format!(
                "unsupported format_version {:?}, expected {FORMAT_VERSION:?}",
                self.format_version
            )));
        }
        let f = Gf::new(self.p)?;
        let n = self.dim;
        if n == 0 {
            return Err(Error::input("dim must be positive"));
        }
        if self.basis.len() != n {
            return Err(Error::input(format!("basis has {} labels, dim is {n}", self.basis.len())));
        }
        let idx = |v: u64| -> Result<usize> {
            usize::try_from(v)
                .ok()
                .filter(|&i| i < n)
                .ok_or_else(|| Error::input(format!("index {v} out of range for dim {n}")))
        };
        let coeff = |c: u64| -> Result<u32> {
            u32::try_from(c)
                .ok()
                .filter(|&c| c < f.p())
                .ok_or_else(|| Error::input(format!("coefficient {c} not in [0, {})", f.p())))
        };
        let vector = |name: &str, v: &[u64]| -> Result<Vec<u32>> {
            if v.len() != n {
                return Err(Error::input(format!("{name} has length {}, dim is {n}", v.len())));
            }
            v.iter().map(|&c| coeff(c)).collect()
        };
        let unit = vector("unit", &self.unit)?;
        let counit = vector("counit", &self.counit)?;

        let mut dense = vec![vec![0u32; n]; n * n];
        for &[i, j, k, c] in &self.mult {
            let (i, j, k, c) = (idx(i)?, idx(j)?, idx(k)?, coeff(c)?);
            dense[i * n + j][k] = f.add(dense[i * n + j][k], c);
        }
        let algebra = AlgebraData::from_fn(f, self.basis.clone(), unit, |i, j| dense[i * n + j].clone())?;

        let mut comult = vec![Vec::new(); n];
        for &[i, j, k, c] in &self.comult {
            comult[idx(i)?].push((idx(j)?, idx(k)?, coeff(c)?));
        }
        let antipode = match &self.antipode {
            None => None,
            Some(rows) => {
                if rows.len() != n {
                    return Err(Error::input(format!("antipode has {} rows, dim is {n}", rows.len())));
                }
                let mut data = Vec::with_capacity(n * n);
                for row in rows {
                    data.extend(vector("antipode row", row)?);
                }
                Some(Matrix::new(f, n, n, data)?)
            }
        };
        HopfPresentation::new(algebra, comult, counit, antipode)
    }

    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::input(format!("malformed document: {e}")))
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rlie::RestrictedLie;

    fn sample() -> HopfPresentation {
        RestrictedLie::dim2_catalog(3, 5).unwrap().enveloping().unwrap()
    }

    #[test]
    fn round_trip_through_text() {
        let h = sample();
        let doc = PresentationDocument::from_presentation(&h);
        let text = doc.to_json_string();
        let back = PresentationDocument::parse(&text).unwrap();
        assert_eq!(back, doc);
        assert_eq!(back.to_json_string(), text);
        let h2 = back.to_presentation().unwrap();
        assert_eq!(PresentationDocument::from_presentation(&h2), doc);
        assert!(h2.check_hopf().passed());
    }

    #[test]
    fn rejects_bad_documents() {
        let doc = PresentationDocument::from_presentation(&sample());
        let mut bad = doc.clone();
        bad.format_version = "2".into();
        assert!(bad.to_presentation().is_err());
        let mut bad = doc.clone();
        bad.mult[0][2] = 99;
        assert!(matches!(bad.to_presentation(), Err(Error::InvalidInput(_))));
        let mut bad = doc.clone();
        bad.comult[0][3] = 3;
        assert!(bad.to_presentation().is_err());
        let mut bad = doc.clone();
        bad.counit.pop();
        assert!(bad.to_presentation().is_err());
        let mut bad = doc;
        bad.p = 4;
        assert!(matches!(bad.to_presentation(), Err(Error::InvalidPrime(4))));
        assert!(PresentationDocument::parse("{\"p\": 2}").is_err());
    }
}
