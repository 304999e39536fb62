//! Connected and local Hopf algebras of dimension `p` and `p²`, their
//! invariants, and explicit duality isomorphisms between the two lists.
//!
//! Every entry of dimension `p²` uses the monomial basis `x^i y^j` (or
//! `ξ^i η^j`) at index `i·p + j`; single-generator entries use `x^i` at `i`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::algebra::AlgebraData;
use crate::error::{Error, Result};
use crate::hopf::{coproducts_from_words, HopfPresentation};
use crate::linalg::tensor::kron_vec;
use crate::linalg::{Gf, Matrix, Vector};
use crate::report::Report;
use crate::rlie::RestrictedLie;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    /// Connected, dimension `p`.
    D1,
    /// Connected, dimension `p²`.
    D2,
    /// Local, dimension `p`.
    L1,
    /// Local, dimension `p²`.
    L2,
}

impl Family {
    pub fn cases(self) -> u32 {
        match self {
            Family::D1 | Family::L1 => 2,
            Family::D2 | Family::L2 => 8,
        }
    }

    pub fn is_connected_family(self) -> bool {
        matches!(self, Family::D1 | Family::D2)
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "D1" => Ok(Family::D1),
            "D2" => Ok(Family::D2),
            "L1" => Ok(Family::L1),
            "L2" => Ok(Family::L2),
            _ => Err(Error::input(format!("unknown family {s:?}; expected D1, D2, L1 or L2"))),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CatalogId {
    pub family: Family,
    pub case: u32,
}

impl CatalogId {
    pub fn new(family: Family, case: u32) -> Result<Self> {
        if case == 0 || case > family.cases() {
            return Err(Error::input(format!(
                "{family} has cases 1..={}, got {case}",
                family.cases()
            )));
        }
        Ok(CatalogId { family, case })
    }

    pub fn all() -> Vec<CatalogId> {
        [Family::D1, Family::D2, Family::L1, Family::L2]
            .into_iter()
            .flat_map(|fam| (1..=fam.cases()).map(move |case| CatalogId { family: fam, case }))
            .collect()
    }

    pub fn family_members(family: Family) -> Vec<CatalogId> {
        (1..=family.cases()).map(|case| CatalogId { family, case }).collect()
    }
}

impl FromStr for CatalogId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (fam, case) = s
            .split_once('-')
            .ok_or_else(|| Error::input(format!("catalog id {s:?} is not of the form D2-6")))?;
        let case = case
            .parse()
            .map_err(|_| Error::input(format!("bad case number in {s:?}")))?;
        CatalogId::new(fam.parse()?, case)
    }
}

impl fmt::Display for CatalogId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.family, self.case)
    }
}

/// Polynomial in the generators, as exponent vectors with coefficients.
type Poly = Vec<(Vec<u32>, u32)>;

/// Commutative algebra `k[g_1 … g_n] / (g_i^{b_i} − r_i)` on the monomial
/// basis with exponents below the bounds, with comultiplication given on
/// generators and extended multiplicatively.
struct TruncatedPolynomial {
    field: Gf,
    names: Vec<&'static str>,
    bounds: Vec<u32>,
    rewrites: Vec<Poly>,
}

impl TruncatedPolynomial {
    fn dim(&self) -> usize {
        self.bounds.iter().map(|&b| b as usize).product()
    }

    fn index(&self, e: &[u32]) -> usize {
        e.iter().zip(&self.bounds).fold(0, |acc, (&x, &b)| acc * b as usize + x as usize)
    }

    fn exponents(&self, mut idx: usize) -> Vec<u32> {
        let mut e = vec![0; self.bounds.len()];
        for k in (0..e.len()).rev() {
            let b = self.bounds[k] as usize;
            e[k] = (idx % b) as u32;
            idx /= b;
        }
        e
    }

    fn label(&self, e: &[u32]) -> String {
        let mut s = String::new();
        for (name, &x) in self.names.iter().zip(e) {
            match x {
                0 => {}
                1 => s.push_str(name),
                _ => s.push_str(&format!("{name}^{x}")),
            }
        }
        if s.is_empty() {
            s.push('1');
        }
        s
    }

    /// Normal form of the monomial with exponents `e`.
    fn reduce(&self, e: Vec<u32>) -> Result<Vector> {
        let f = self.field;
        let mut pending: BTreeMap<Vec<u32>, u32> = BTreeMap::new();
        pending.insert(e, 1);
        let mut out = vec![0; self.dim()];
        let mut steps = 0usize;
        while let Some((e, c)) = pending.pop_first() {
            steps += 1;
            if steps > 100 * self.dim() {
                return Err(Error::Internal("monomial rewriting does not terminate".into()));
            }
            if c == 0 {
                continue;
            }
            match (0..e.len()).find(|&k| e[k] >= self.bounds[k]) {
                None => {
                    let i = self.index(&e);
                    out[i] = f.add(out[i], c);
                }
                Some(k) => {
                    for (r, rc) in &self.rewrites[k] {
                        let mut ne = e.clone();
                        ne[k] -= self.bounds[k];
                        for (a, b) in ne.iter_mut().zip(r) {
                            *a += b;
                        }
                        let slot = pending.entry(ne).or_insert(0);
                        *slot = f.add(*slot, f.mul(c, *rc));
                    }
                }
            }
        }
        Ok(out)
    }

    fn monomial(&self, e: &[u32]) -> Vector {
        self.field.basis_vec(self.dim(), self.index(e))
    }

    /// Tensor `Σ c · m_a ⊗ m_b` from exponent pairs.
    fn tensor(&self, terms: &[(Vec<u32>, Vec<u32>, u32)]) -> Vector {
        let f = self.field;
        let n = self.dim();
        let mut t = vec![0; n * n];
        for (a, b, c) in terms {
            f.axpy(&mut t, *c, &kron_vec(f, &self.monomial(a), &self.monomial(b)));
        }
        t
    }

    fn build(&self, generator_coproducts: &[Vector]) -> Result<HopfPresentation> {
        let f = self.field;
        let dim = self.dim();
        let exps: Vec<Vec<u32>> = (0..dim).map(|i| self.exponents(i)).collect();
        let mut table = Vec::with_capacity(dim * dim);
        for a in &exps {
            for b in &exps {
                let sum: Vec<u32> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                table.push(self.reduce(sum)?);
            }
        }
        let labels = exps.iter().map(|e| self.label(e)).collect();
        let algebra = AlgebraData::from_fn(f, labels, f.basis_vec(dim, 0), |i, j| table[i * dim + j].clone())?;
        let words: Vec<Vec<usize>> = exps
            .iter()
            .map(|e| {
                e.iter()
                    .enumerate()
                    .flat_map(|(k, &x)| std::iter::repeat(k).take(x as usize))
                    .collect()
            })
            .collect();
        let coproducts = coproducts_from_words(&algebra, generator_coproducts, &words);
        HopfPresentation::from_dense_coproducts(algebra, &coproducts, f.basis_vec(dim, 0), None)?
            .with_antipode()
    }
}

/// `ω` on exponent pairs: `Σ c_i g^{s·i} ⊗ g^{s·(p−i)}` for generator `g`
/// among `n` generators.
fn omega_terms(f: Gf, n: usize, g: usize, s: u32) -> Vec<(Vec<u32>, Vec<u32>, u32)> {
    let p = f.p();
    (1..p)
        .zip(f.divided_binomials())
        .map(|(i, c)| {
            let mut a = vec![0; n];
            let mut b = vec![0; n];
            a[g] = s * i;
            b[g] = s * (p - i);
            (a, b, c)
        })
        .collect()
}

fn unit_exp(n: usize, g: usize) -> Vec<u32> {
    let mut e = vec![0; n];
    e[g] = 1;
    e
}

/// `g⊗1 + 1⊗g`
fn primitive_terms(n: usize, g: usize) -> Vec<(Vec<u32>, Vec<u32>, u32)> {
    vec![(unit_exp(n, g), vec![0; n], 1), (vec![0; n], unit_exp(n, g), 1)]
}

/// Exact presentation of a catalog entry over `GF(p)`.
pub fn build(p: u32, id: CatalogId) -> Result<HopfPresentation> {
    let f = Gf::new(p)?;
    let id = CatalogId::new(id.family, id.case)?;
    match (id.family, id.case) {
        (Family::D1, c) => RestrictedLie::one_dim(f, c - 1)?.enveloping(),
        (Family::D2, c @ 1..=5) => RestrictedLie::dim2_catalog(p, c)?.enveloping(),
        (Family::D2, c) => {
            let zero: Poly = Vec::new();
            let (rx, ry): (Poly, Poly) = match c {
                6 => (zero.clone(), zero),
                7 => (zero, vec![(vec![1, 0], 1)]),
                _ => (vec![(vec![1, 0], 1)], vec![(vec![0, 1], 1)]),
            };
            let t = TruncatedPolynomial { field: f, names: vec!["x", "y"], bounds: vec![p, p], rewrites: vec![rx, ry] };
            let dx = t.tensor(&primitive_terms(2, 0));
            let mut y_terms = primitive_terms(2, 1);
            y_terms.extend(omega_terms(f, 2, 0, 1));
            let dy = t.tensor(&y_terms);
            t.build(&[dx, dy])
        }
        (Family::L1, c) => {
            let t = TruncatedPolynomial { field: f, names: vec!["ξ"], bounds: vec![p], rewrites: vec![Vec::new()] };
            let mut terms = primitive_terms(1, 0);
            if c == 2 {
                terms.push((vec![1], vec![1], 1));
            }
            t.build(&[t.tensor(&terms)])
        }
        (Family::L2, c @ 1..=5) => {
            let t = TruncatedPolynomial {
                field: f,
                names: vec!["ξ", "η"],
                bounds: vec![p, p],
                rewrites: vec![Vec::new(), Vec::new()],
            };
            let (xi, eta) = (unit_exp(2, 0), unit_exp(2, 1));
            let mut dxi = primitive_terms(2, 0);
            let mut deta = primitive_terms(2, 1);
            match c {
                1 => {}
                2 => dxi.push((xi.clone(), xi.clone(), 1)),
                3 => deta.extend(omega_terms(f, 2, 0, 1)),
                4 => {
                    dxi.push((xi.clone(), xi.clone(), 1));
                    deta.push((eta.clone(), eta.clone(), 1));
                }
                _ => {
                    dxi.push((xi.clone(), xi.clone(), 1));
                    deta.push((xi, eta, 1));
                }
            }
            t.build(&[t.tensor(&dxi), t.tensor(&deta)])
        }
        (Family::L2, c) => {
            let t = TruncatedPolynomial { field: f, names: vec!["ξ"], bounds: vec![p * p], rewrites: vec![Vec::new()] };
            let mut terms = primitive_terms(1, 0);
            match c {
                6 => {}
                7 => terms.extend(omega_terms(f, 1, 0, p)),
                _ => terms.push((vec![1], vec![1], 1)),
            }
            t.build(&[t.tensor(&terms)])
        }
    }
}

/// Isomorphism invariants used to tell catalog entries apart.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Fingerprint {
    pub p: u32,
    pub dim: usize,
    pub dim_p: usize,
    pub commutative: bool,
    pub cocommutative: bool,
    pub local: bool,
    /// Computed semisimplicity; `None` when the algebra is neither
    /// commutative nor local.
    pub semisimple: Option<bool>,
    /// `dim J/J²` for `J` the augmentation ideal (local case) or the
    /// nilradical (commutative case); `None` otherwise.
    pub min_alg_generators: Option<usize>,
    pub coradical_dims: Vec<usize>,
}

pub fn fingerprint(h: &HopfPresentation) -> Result<Fingerprint> {
    let alg = h.algebra();
    let commutative = h.is_commutative();
    let local = h.is_local()?;
    let radical = if local {
        Some(h.augmentation_ideal())
    } else if commutative {
        Some(alg.commutative_nilradical()?)
    } else {
        None
    };
    let (semisimple, min_alg_generators) = match radical {
        Some(j) => {
            let j2 = alg.subspace_product(&j, &j)?;
            (Some(j.is_zero()), Some(j.dim() - j2.dim()))
        }
        None => (None, None),
    };
    Ok(Fingerprint {
        p: h.field().p(),
        dim: h.dim(),
        dim_p: h.primitives().dim(),
        commutative,
        cocommutative: h.is_cocommutative(),
        local,
        semisimple,
        min_alg_generators,
        coradical_dims: h.coradical_filtration()?.dims(),
    })
}

/// Functionals `ξ` (and `η` for cases 1–5) on the basis `x^i y^j` of
/// `D2-k`, exactly as tabulated alongside the local classification.
pub fn tabulated_functionals(p: u32, k: u32) -> Result<Vec<Vector>> {
    let f = Gf::new(p)?;
    CatalogId::new(Family::D2, k)?;
    let pu = p as usize;
    let func = |pred: &dyn Fn(usize, usize) -> bool, c: u32| -> Vector {
        let mut v = vec![0; pu * pu];
        for i in 0..pu {
            for j in 0..pu {
                if pred(i, j) {
                    v[i * pu + j] = c;
                }
            }
        }
        v
    };
    let x_only = |i: usize, j: usize| i == 1 && j == 0;
    let x_any = |i: usize, j: usize| i != 0 && j == 0;
    let y_only = |i: usize, j: usize| i == 0 && j == 1;
    Ok(match k {
        1 => vec![func(&x_only, 1), func(&y_only, 1)],
        2 => vec![func(&x_any, 1), func(&y_only, 1)],
        3 => vec![func(&x_only, 1), func(&y_only, f.neg(1))],
        4 => vec![func(&x_any, 1), func(&|i, j| i == 0 && j != 0, 1)],
        5 => vec![func(&x_any, 1), func(&|_, j| j == 1, 1)],
        _ => vec![func(&x_only, 1)],
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct DualMatch {
    pub p: u32,
    pub case: u32,
    pub report: Report,
}

impl DualMatch {
    pub fn passed(&self) -> bool {
        self.report.passed()
    }
}

/// Checks that the given functionals on `D2-k` generate `dual(D2-k)` and
/// that sending the generators of `L2-k` to them is a Hopf isomorphism.
pub fn dual_match_with(p: u32, k: u32, functionals: &[Vector]) -> Result<DualMatch> {
    let h = build(p, CatalogId::new(Family::D2, k)?)?;
    let d = h.dual()?;
    let l = build(p, CatalogId::new(Family::L2, k)?)?;
    let f = d.field();
    let n = d.dim();
    let gens_l = if k <= 5 { 2 } else { 1 };
    if functionals.len() != gens_l {
        return Err(Error::dim(gens_l, functionals.len()));
    }
    let mut report = Report::new(format!("dual(D2-{k}) vs L2-{k} at p = {p}"));

    // Φ on the monomial basis of L2-k.
    let pu = p as usize;
    let mut images = Vec::with_capacity(n);
    for idx in 0..n {
        let exps: Vec<u64> = if gens_l == 2 {
            vec![(idx / pu) as u64, (idx % pu) as u64]
        } else {
            vec![idx as u64]
        };
        let mut v = d.unit().to_vec();
        for (g, &e) in functionals.iter().zip(&exps) {
            v = d.multiply(&v, &d.algebra().power(g, e)?)?;
        }
        images.push(v);
    }
    let phi = Matrix::from_columns(f, n, &images)?;
    let invertible = phi.rank() == n;
    report.record("functionals generate the dual", invertible, Some(format!("rank {} of {n}", phi.rank())));

    let mut mult_violation = None;
    'mult: for i in 0..n {
        for j in 0..n {
            let lhs = phi.mul_vec(&l.multiply(&l.basis_vec(i), &l.basis_vec(j))?)?;
            if lhs != d.multiply(&images[i], &images[j])? {
                mult_violation = Some(format!("{} · {}", l.labels()[i], l.labels()[j]));
                break 'mult;
            }
        }
    }
    report.outcome("algebra relations", mult_violation);

    let phi2 = phi.kron(&phi);
    let mut gen_violation = None;
    for (g, name) in (0..gens_l).zip(["ξ", "η"]) {
        let idx = if gens_l == 2 { if g == 0 { pu } else { 1 } } else { 1 };
        let lhs = phi2.mul_vec(&l.comultiply(&l.basis_vec(idx))?)?;
        if lhs != d.comultiply(&functionals[g])? {
            gen_violation.get_or_insert_with(|| format!("Δ({name})"));
        }
    }
    report.outcome("generator comultiplications", gen_violation);

    let mut co_violation = None;
    for i in 0..n {
        let lhs = phi2.mul_vec(&l.comultiply(&l.basis_vec(i))?)?;
        if lhs != d.comultiply(&images[i])? || d.counit_of(&images[i]) != l.counit()[i] {
            co_violation = Some(l.labels()[i].clone());
            break;
        }
    }
    report.outcome("coalgebra map", co_violation);
    Ok(DualMatch { p, case: k, report })
}

/// [`dual_match_with`] on the tabulated functionals.
pub fn dual_match(p: u32, k: u32) -> Result<DualMatch> {
    dual_match_with(p, k, &tabulated_functionals(p, k)?)
}

/// Builds every entry at `p` and checks the axioms, the family
/// properties, the primitive split and pairwise distinct fingerprints.
pub fn verify_classification(p: u32) -> Result<Report> {
    let mut report = Report::new(format!("classification at p = {p}"));
    let mut prints: BTreeMap<CatalogId, Fingerprint> = BTreeMap::new();
    let mut entries = BTreeMap::new();
    for id in CatalogId::all() {
        let h = build(p, id)?;
        let axioms = h.check_hopf();
        let failed: Vec<String> = axioms.failures().map(|c| c.name.clone()).collect();
        report.record(format!("{id} Hopf axioms"), failed.is_empty(), (!failed.is_empty()).then(|| failed.join(", ")));
        let (prop, ok) = if id.family.is_connected_family() {
            ("connected", h.is_connected()?)
        } else {
            ("local", h.is_local()?)
        };
        report.record(format!("{id} {prop}"), ok, None);
        if id.family == Family::D2 {
            let want = if id.case <= 5 { 2 } else { 1 };
            let got = h.primitives().dim();
            report.record(format!("{id} dim P = {want}"), got == want, Some(format!("dim P = {got}")));
        }
        prints.insert(id, fingerprint(&h)?);
        entries.insert(id, h);
    }
    for fam in [Family::D1, Family::D2, Family::L1, Family::L2] {
        let ids = CatalogId::family_members(fam);
        let mut clash = None;
        for (a, ia) in ids.iter().enumerate() {
            for ib in &ids[a + 1..] {
                if prints[ia] == prints[ib] {
                    clash.get_or_insert_with(|| format!("{ia} and {ib}"));
                }
            }
        }
        report.outcome(format!("{fam} fingerprints pairwise distinct"), clash);
    }
    for (dfam, lfam) in [(Family::D1, Family::L1), (Family::D2, Family::L2)] {
        for case in 1..=dfam.cases() {
            let did = CatalogId { family: dfam, case };
            let lid = CatalogId { family: lfam, case };
            let dual_print = fingerprint(&entries[&did].dual()?)?;
            report.record(format!("fingerprint(dual {did}) = fingerprint({lid})"), dual_print == prints[&lid], None);
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_parse_and_validate() {
        let id: CatalogId = "D2-6".parse().unwrap();
        assert_eq!(id, CatalogId { family: Family::D2, case: 6 });
        assert_eq!(id.to_string(), "D2-6");
        assert!("D2-9".parse::<CatalogId>().is_err());
        assert!("L1-3".parse::<CatalogId>().is_err());
        assert!("X1-1".parse::<CatalogId>().is_err());
        assert!("D2".parse::<CatalogId>().is_err());
        assert_eq!(CatalogId::all().len(), 20);
    }

    #[test]
    fn d2_6_coproduct_of_y_at_p3() {
        let h = build(3, "D2-6".parse().unwrap()).unwrap();
        let f = h.field();
        let (x, x2, y) = (h.element("x"), h.element("x^2"), h.element("y"));
        let mut want = f.add_vec(&kron_vec(f, &x, &x2), &kron_vec(f, &x2, &x));
        f.axpy(&mut want, 1, &kron_vec(f, &y, h.unit()));
        f.axpy(&mut want, 1, &kron_vec(f, h.unit(), &y));
        assert_eq!(h.comultiply(&y).unwrap(), want);
        assert!(h.algebra().power(&x, 3).unwrap().iter().all(|&c| c == 0));
    }

    #[test]
    fn rewriting_relations() {
        let h = build(3, "D2-7".parse().unwrap()).unwrap();
        assert_eq!(h.algebra().power(&h.element("y"), 3).unwrap(), h.element("x"));
        let h = build(5, "D2-8".parse().unwrap()).unwrap();
        for g in ["x", "y"] {
            assert_eq!(h.algebra().power(&h.element(g), 5).unwrap(), h.element(g));
        }
        let h = build(2, "L2-7".parse().unwrap()).unwrap();
        assert_eq!(h.dim(), 4);
        assert!(h.algebra().power(&h.element("ξ"), 4).unwrap().iter().all(|&c| c == 0));
    }

    #[test]
    fn l2_4_grouplike_shift() {
        let h = build(2, "L2-4".parse().unwrap()).unwrap();
        let f = h.field();
        for g in ["ξ", "η"] {
            let v = h.element(g);
            let gl = f.add_vec(&v, h.unit());
            assert_eq!(h.comultiply(&gl).unwrap(), kron_vec(f, &gl, &gl));
        }
    }

    #[test]
    fn entries_satisfy_axioms_at_two() {
        for id in CatalogId::all() {
            let h = build(2, id).unwrap();
            assert!(h.check_hopf().passed(), "{id}");
        }
    }

    #[test]
    fn fingerprint_examples() {
        let fp = fingerprint(&build(2, "D2-1".parse().unwrap()).unwrap()).unwrap();
        assert_eq!((fp.dim_p, fp.commutative, fp.cocommutative, fp.local, fp.min_alg_generators), (2, true, true, true, Some(2)));
        let fp = fingerprint(&build(3, "D2-8".parse().unwrap()).unwrap()).unwrap();
        assert_eq!((fp.dim_p, fp.semisimple, fp.min_alg_generators), (1, Some(true), Some(0)));
        let fp = fingerprint(&build(3, "D2-5".parse().unwrap()).unwrap()).unwrap();
        assert!(!fp.commutative);
    }
}
