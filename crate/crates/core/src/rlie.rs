//! Restricted Lie algebras over GF(p), their restricted enveloping algebras
//! and the two-dimensional normal forms.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::algebra::{sparse_from_dense, AlgebraData};
use crate::error::{Error, Result};
use crate::hopf::{coproducts_from_words, HopfPresentation};
use crate::linalg::tensor::kron_vec;
use crate::linalg::{Gf, Vector};
use crate::report::Report;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RestrictedLie {
    field: Gf,
    labels: Vec<String>,
    /// `[e_i, e_j]` at index `i * dim + j`.
    bracket: Vec<Vector>,
    /// `e_i^{[p]}`
    pmap: Vec<Vector>,
}

/// JSON form: `{"p", "dim", "bracket": [[i,j,k,c]…], "pmap": [[i,k,c]…]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RestrictedLieDocument {
    pub p: u32,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    pub bracket: Vec<[u64; 4]>,
    pub pmap: Vec<[u64; 3]>,
}

/// Iterated bracketing `x ↦ [[x, z_1], z_2]…` with a caller-supplied bracket.
///
/// Returns `s_1 … s_{p−1}`: `i·s_i` is the coefficient of `λ^{i−1}` in
/// `x (ad(λx + y))^{p−1}`.
pub fn jacobson_terms<B>(field: Gf, x: &[u32], y: &[u32], bracket: B) -> Vec<Vector>
where
    B: Fn(&[u32], &[u32]) -> Vector,
{
    let p = field.p() as usize;
    let len = x.len();
    // poly[k] is the coefficient of λ^k
    let mut poly: Vec<Vector> = vec![x.to_vec()];
    for _ in 0..p - 1 {
        let mut next = vec![vec![0u32; len]; poly.len() + 1];
        for (k, c) in poly.iter().enumerate() {
            next[k] = field.add_vec(&next[k], &bracket(c, y));
            next[k + 1] = field.add_vec(&next[k + 1], &bracket(c, x));
        }
        poly = next;
    }
    (1..p)
        .map(|i| field.scale(field.inv(i as u32 % field.p()), &poly[i - 1]))
        .collect()
}

impl RestrictedLie {
    /// Builds from dense bracket and p-map tables; no axioms are checked.
    pub fn new(
        field: Gf,
        labels: Vec<String>,
        bracket: Vec<Vector>,
        pmap: Vec<Vector>,
    ) -> Result<Self> {
        let n = labels.len();
        if bracket.len() != n * n {
            return Err(Error::dim(n * n, bracket.len()));
        }
        if pmap.len() != n {
            return Err(Error::dim(n, pmap.len()));
        }
        for v in bracket.iter().chain(pmap.iter()) {
            if v.len() != n {
                return Err(Error::dim(n, v.len()));
            }
            if v.iter().any(|&c| c >= field.p()) {
                return Err(Error::input("coefficient out of range"));
            }
        }
        Ok(RestrictedLie { field, labels, bracket, pmap })
    }

    /// Abelian algebra with the given p-map on basis vectors.
    pub fn abelian(field: Gf, pmap: Vec<Vector>) -> Result<Self> {
        let n = pmap.len();
        let labels = default_labels(n);
        RestrictedLie::new(field, labels, vec![vec![0; n]; n * n], pmap)
    }

    /// One-dimensional algebra with `x^{[p]} = c·x`.
    pub fn one_dim(field: Gf, c: u32) -> Result<Self> {
        RestrictedLie::abelian(field, vec![vec![field.from_i64(i64::from(c))]])
    }

    /// The five two-dimensional normal forms on the basis `{x, y}`:
    /// abelian with `(x^{[p]}, y^{[p]}) = (0,0), (x,0), (y,0), (x,y)`, and
    /// `[x, y] = y` with `x^{[p]} = x`, `y^{[p]} = 0`.
    pub fn dim2_catalog(p: u32, case: u32) -> Result<Self> {
        let f = Gf::new(p)?;
        let (x, y, z) = (vec![1, 0], vec![0, 1], vec![0, 0]);
        let pmap = match case {
            1 => vec![z.clone(), z.clone()],
            2 => vec![x.clone(), z.clone()],
            3 => vec![y.clone(), z.clone()],
            4 => vec![x.clone(), y.clone()],
            5 => vec![x.clone(), z.clone()],
            _ => return Err(Error::input(format!("two-dimensional case must be 1..5, got {case}"))),
        };
        let mut bracket = vec![z.clone(); 4];
        if case == 5 {
            bracket[1] = y.clone();
            bracket[2] = f.neg_vec(&y);
        }
        RestrictedLie::new(f, default_labels(2), bracket, pmap)
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
    pub fn basis_bracket(&self, i: usize, j: usize) -> &[u32] {
        &self.bracket[i * self.dim() + j]
    }
    pub fn basis_pmap(&self, i: usize) -> &[u32] {
        &self.pmap[i]
    }

    pub fn basis_vec(&self, i: usize) -> Vector {
        self.field.basis_vec(self.dim(), i)
    }

    pub fn bracket(&self, x: &[u32], y: &[u32]) -> Vector {
        let f = self.field;
        let n = self.dim();
        let mut out = vec![0; n];
        for (i, &a) in x.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in y.iter().enumerate() {
                if b != 0 {
                    f.axpy(&mut out, f.mul(a, b), &self.bracket[i * n + j]);
                }
            }
        }
        out
    }

    /// `s_i(x, y)` for `1 ≤ i ≤ p − 1`.
    pub fn jacobson_s(&self, x: &[u32], y: &[u32], i: u32) -> Result<Vector> {
        let p = self.field.p();
        if i == 0 || i >= p {
            return Err(Error::input(format!("s_i needs 1 ≤ i ≤ {}, got {i}", p - 1)));
        }
        Ok(jacobson_terms(self.field, x, y, |a, b| self.bracket(a, b)).swap_remove(i as usize - 1))
    }

    /// `x (ad y)^m = [[x, y], …, y]`
    pub fn right_ad_power(&self, x: &[u32], y: &[u32], m: u32) -> Vector {
        (0..m).fold(x.to_vec(), |acc, _| self.bracket(&acc, y))
    }

    /// p-map on an arbitrary vector, expanded coordinate by coordinate with
    /// `(u + v)^{[p]} = u^{[p]} + v^{[p]} + Σ s_i(u, v)` and
    /// `(α e_i)^{[p]} = α^p e_i^{[p]}`.
    pub fn pmap_of(&self, v: &[u32]) -> Vector {
        let f = self.field;
        let n = self.dim();
        let mut acc = vec![0; n];
        let mut acc_p = vec![0; n];
        for (i, &a) in v.iter().enumerate() {
            if a == 0 {
                continue;
            }
            let t = f.scale(a, &self.basis_vec(i));
            let t_p = f.scale(f.pow(a, u64::from(f.p())), &self.pmap[i]);
            let mut next_p = f.add_vec(&acc_p, &t_p);
            for s in jacobson_terms(f, &acc, &t, |a, b| self.bracket(a, b)) {
                next_p = f.add_vec(&next_p, &s);
            }
            acc = f.add_vec(&acc, &t);
            acc_p = next_p;
        }
        acc_p
    }

    /// Antisymmetry, Jacobi, and the three p-map axioms.
    pub fn verify_restricted(&self) -> Report {
        let f = self.field;
        let n = self.dim();
        let p = f.p();
        let mut report = Report::new("restricted Lie algebra");

        let mut bad = None;
        'anti: for i in 0..n {
            if self.basis_bracket(i, i).iter().any(|&c| c != 0) {
                bad = Some(format!("[{0}, {0}] ≠ 0", self.labels[i]));
                break;
            }
            for j in 0..n {
                if f.add_vec(self.basis_bracket(i, j), self.basis_bracket(j, i)).iter().any(|&c| c != 0) {
                    bad = Some(format!("[{0}, {1}] ≠ −[{1}, {0}]", self.labels[i], self.labels[j]));
                    break 'anti;
                }
            }
        }
        report.outcome("antisymmetry", bad);

        let mut bad = None;
        'jacobi: for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let (a, b, c) = (self.basis_vec(i), self.basis_vec(j), self.basis_vec(k));
                    let t1 = self.bracket(&a, &self.bracket(&b, &c));
                    let t2 = self.bracket(&b, &self.bracket(&c, &a));
                    let t3 = self.bracket(&c, &self.bracket(&a, &b));
                    if f.add_vec(&f.add_vec(&t1, &t2), &t3).iter().any(|&x| x != 0) {
                        bad = Some(format!(
                            "Jacobi fails on ({}, {}, {})",
                            self.labels[i], self.labels[j], self.labels[k]
                        ));
                        break 'jacobi;
                    }
                }
            }
        }
        report.outcome("jacobi", bad);

        // Semilinearity on sums of basis pairs (the basis case is the
        // definition of the extension).
        let mut bad = None;
        'semi: for i in 0..n {
            for j in i..n {
                let v = f.add_vec(&self.basis_vec(i), &self.basis_vec(j));
                let vp = self.pmap_of(&v);
                for alpha in f.elements() {
                    let lhs = self.pmap_of(&f.scale(alpha, &v));
                    let rhs = f.scale(f.pow(alpha, u64::from(p)), &vp);
                    if lhs != rhs {
                        bad = Some(format!("(αv)^[p] ≠ α^p v^[p] for α = {alpha}, v = e{i} + e{j}"));
                        break 'semi;
                    }
                }
            }
        }
        report.outcome("semilinearity", bad);

        let mut bad = None;
        'additive: for i in 0..n {
            for j in 0..n {
                let pairs = [
                    (self.basis_vec(i), self.basis_vec(j)),
                    (
                        f.add_vec(&self.basis_vec(i), &self.basis_vec(j)),
                        self.basis_vec(j),
                    ),
                ];
                for (x, y) in pairs {
                    let lhs = self.pmap_of(&f.add_vec(&x, &y));
                    let mut rhs = f.add_vec(&self.pmap_of(&x), &self.pmap_of(&y));
                    for s in jacobson_terms(f, &x, &y, |a, b| self.bracket(a, b)) {
                        rhs = f.add_vec(&rhs, &s);
                    }
                    if lhs != rhs {
                        bad = Some(format!(
                            "(x+y)^[p] expansion fails for x = {x:?}, y = {y:?}"
                        ));
                        break 'additive;
                    }
                }
            }
        }
        report.outcome("jacobson expansion", bad);

        let mut bad = None;
        'adjoint: for i in 0..n {
            for j in 0..n {
                let (x, y) = (self.basis_vec(i), self.basis_vec(j));
                let lhs = self.bracket(&x, &self.pmap[j]);
                let rhs = self.right_ad_power(&x, &y, p);
                if lhs != rhs {
                    bad = Some(format!(
                        "[{0}, {1}^[p]] ≠ {0}(ad {1})^p",
                        self.labels[i], self.labels[j]
                    ));
                    break 'adjoint;
                }
            }
        }
        report.outcome("adjoint p-power", bad);
        report
    }

    /// PBW exponent tuple of basis index `idx` in `u(g)`; the first
    /// generator is the most significant digit.
    pub fn pbw_exponents(&self, idx: usize) -> Vec<u32> {
        let p = self.field.p() as usize;
        let n = self.dim();
        let mut e = vec![0u32; n];
        let mut rest = idx;
        for k in (0..n).rev() {
            e[k] = (rest % p) as u32;
            rest /= p;
        }
        e
    }

    pub fn pbw_index(&self, exps: &[u32]) -> usize {
        let p = self.field.p() as usize;
        exps.iter().fold(0, |acc, &e| acc * p + e as usize)
    }

    /// Index of generator `k` in the PBW basis of `u(g)`.
    pub fn generator_index(&self, k: usize) -> usize {
        let mut e = vec![0; self.dim()];
        e[k] = 1;
        self.pbw_index(&e)
    }

    /// Restricted enveloping algebra with primitive generators.
    pub fn enveloping(&self) -> Result<HopfPresentation> {
        let report = self.verify_restricted();
        if !report.passed() {
            let what: Vec<String> = report.failures().map(|c| c.name.clone()).collect();
            return Err(Error::input(format!("not a restricted Lie algebra: {}", what.join(", "))));
        }
        let f = self.field;
        let n = self.dim();
        let p = f.p() as usize;
        let dim = p.checked_pow(n as u32).ok_or_else(|| Error::Resource("u(g) too large".into()))?;
        let mut st = Straightener::new(self, dim);
        let words: Vec<Vec<usize>> = (0..dim).map(|i| self.pbw_word(i)).collect();
        let mut mult = Vec::with_capacity(dim * dim);
        for a in 0..dim {
            for b in 0..dim {
                let mut acc = f.basis_vec(dim, a);
                for &g in &words[b] {
                    acc = st.times_generator_vec(&acc, g)?;
                }
                mult.push(sparse_from_dense(&acc));
            }
        }
        let labels: Vec<String> = (0..dim).map(|i| self.pbw_label(i)).collect();
        let algebra = AlgebraData::new(f, labels, mult, f.basis_vec(dim, 0))?;
        let one = f.basis_vec(dim, 0);
        let gens: Vec<Vector> = (0..n)
            .map(|k| {
                let x = f.basis_vec(dim, self.generator_index(k));
                f.add_vec(&kron_vec(f, &x, &one), &kron_vec(f, &one, &x))
            })
            .collect();
        let coproducts = coproducts_from_words(&algebra, &gens, &words);
        let counit = f.basis_vec(dim, 0);
        HopfPresentation::from_dense_coproducts(algebra, &coproducts, counit, None)?.with_antipode()
    }

    fn pbw_word(&self, idx: usize) -> Vec<usize> {
        let mut w = Vec::new();
        for (k, &e) in self.pbw_exponents(idx).iter().enumerate() {
            w.extend(std::iter::repeat(k).take(e as usize));
        }
        w
    }

    fn pbw_label(&self, idx: usize) -> String {
        let mut s = String::new();
        for (k, &e) in self.pbw_exponents(idx).iter().enumerate() {
            match e {
                0 => {}
                1 => s.push_str(&self.labels[k]),
                _ => s.push_str(&format!("{}^{e}", self.labels[k])),
            }
        }
        if s.is_empty() {
            "1".into()
        } else {
            s
        }
    }

    pub fn to_document(&self) -> RestrictedLieDocument {
        let n = self.dim();
        let mut bracket = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for (k, &c) in self.basis_bracket(i, j).iter().enumerate() {
                    if c != 0 {
                        bracket.push([i as u64, j as u64, k as u64, u64::from(c)]);
                    }
                }
            }
        }
        let mut pmap = Vec::new();
        for i in 0..n {
            for (k, &c) in self.pmap[i].iter().enumerate() {
                if c != 0 {
                    pmap.push([i as u64, k as u64, u64::from(c)]);
                }
            }
        }
        RestrictedLieDocument { p: self.field.p(), dim: n, labels: Some(self.labels.clone()), bracket, pmap }
    }

    pub fn from_document(doc: &RestrictedLieDocument) -> Result<Self> {
        let f = Gf::new(doc.p)?;
        let n = doc.dim;
        let labels = match &doc.labels {
            Some(l) if l.len() == n => l.clone(),
            Some(l) => return Err(Error::dim(n, l.len())),
            None => default_labels(n),
        };
        let idx = |v: u64| -> Result<usize> {
            usize::try_from(v).ok().filter(|&i| i < n).ok_or_else(|| Error::input(format!("index {v} out of range")))
        };
        let coeff = |c: u64| -> Result<u32> {
            u32::try_from(c).ok().filter(|&c| c < f.p()).ok_or_else(|| Error::input(format!("coefficient {c} out of range")))
        };
        let mut bracket = vec![vec![0u32; n]; n * n];
        for &[i, j, k, c] in &doc.bracket {
            let (i, j, k, c) = (idx(i)?, idx(j)?, idx(k)?, coeff(c)?);
            bracket[i * n + j][k] = f.add(bracket[i * n + j][k], c);
        }
        let mut pmap = vec![vec![0u32; n]; n];
        for &[i, k, c] in &doc.pmap {
            let (i, k, c) = (idx(i)?, idx(k)?, coeff(c)?);
            pmap[i][k] = f.add(pmap[i][k], c);
        }
        RestrictedLie::new(f, labels, bracket, pmap)
    }
}

fn default_labels(n: usize) -> Vec<String> {
    match n {
        1 => vec!["x".into()],
        2 => vec!["x".into(), "y".into()],
        _ => (1..=n).map(|i| format!("x{i}")).collect(),
    }
}

/// Right multiplication of PBW monomials by generators, memoized.
///
/// `m · x_k` either appends `x_k` (folding `x_k^p` into `x_k^{[p]}`) or, when
/// a larger generator `x_j` ends `m = u·x_j`, rewrites
/// `u x_j x_k = (u x_k) x_j + u [x_j, x_k]`.
struct Straightener<'a> {
    g: &'a RestrictedLie,
    dim: usize,
    memo: HashMap<(usize, usize), Option<Vector>>,
    fresh: usize,
    limit: usize,
}

impl<'a> Straightener<'a> {
    fn new(g: &'a RestrictedLie, dim: usize) -> Self {
        Straightener { g, dim, memo: HashMap::new(), fresh: 0, limit: 10 * dim }
    }

    fn times_generator_vec(&mut self, v: &[u32], k: usize) -> Result<Vector> {
        let f = self.g.field;
        let mut out = vec![0; self.dim];
        for (i, &c) in v.iter().enumerate() {
            if c != 0 {
                let r = self.times_generator(i, k)?;
                f.axpy(&mut out, c, &r);
            }
        }
        Ok(out)
    }

    fn times_lie_vec(&mut self, v: &[u32], lie: &[u32]) -> Result<Vector> {
        let f = self.g.field;
        let mut out = vec![0; self.dim];
        for (l, &c) in lie.iter().enumerate() {
            if c != 0 {
                let r = self.times_generator_vec(v, l)?;
                f.axpy(&mut out, c, &r);
            }
        }
        Ok(out)
    }

    fn times_generator(&mut self, m: usize, k: usize) -> Result<Vector> {
        match self.memo.get(&(m, k)) {
            Some(Some(v)) => return Ok(v.clone()),
            Some(None) => {
                return Err(Error::Internal("straightening revisited an unfinished product".into()))
            }
            None => {}
        }
        self.fresh += 1;
        if self.fresh > self.limit {
            return Err(Error::Internal("straightening exceeded its rewrite budget".into()));
        }
        self.memo.insert((m, k), None);
        let f = self.g.field;
        let p = f.p();
        let mut exps = self.g.pbw_exponents(m);
        let last = exps.iter().rposition(|&e| e > 0);
        let result = match last {
            Some(j) if j > k => {
                exps[j] -= 1;
                let u = f.basis_vec(self.dim, self.g.pbw_index(&exps));
                let uk = self.times_generator_vec(&u, k)?;
                let first = self.times_generator_vec(&uk, j)?;
                let br = self.g.basis_bracket(j, k).to_vec();
                let second = self.times_lie_vec(&u, &br)?;
                f.add_vec(&first, &second)
            }
            _ => {
                if exps[k] + 1 < p {
                    exps[k] += 1;
                    f.basis_vec(self.dim, self.g.pbw_index(&exps))
                } else {
                    // x_k^p = x_k^{[p]}
                    exps[k] = 0;
                    let u = f.basis_vec(self.dim, self.g.pbw_index(&exps));
                    let pm = self.g.pmap[k].clone();
                    self.times_lie_vec(&u, &pm)?
                }
            }
        };
        self.memo.insert((m, k), Some(result.clone()));
        Ok(result)
    }
}

/// Checks `(x+y)^p = x^p + y^p + Σ s_i(x,y)` and `[x^p, y] = (ad x)^p(y)`
/// inside an associative algebra, with `s_i` built from commutators.
pub fn lemma_palgebra_check(a: &AlgebraData, x: &[u32], y: &[u32]) -> Result<bool> {
    let f = a.field();
    let p = u64::from(f.p());
    let comm = |u: &[u32], v: &[u32]| a.commutator(u, v).expect("lengths checked");
    if x.len() != a.dim() || y.len() != a.dim() {
        return Err(Error::dim(a.dim(), x.len().max(y.len())));
    }
    let mut rhs = f.add_vec(&a.power(x, p)?, &a.power(y, p)?);
    for s in jacobson_terms(f, x, y, comm) {
        rhs = f.add_vec(&rhs, &s);
    }
    let first = a.power(&f.add_vec(x, y), p)? == rhs;
    let lhs = a.commutator(&a.power(x, p)?, y)?;
    let ad = (0..p).fold(y.to_vec(), |acc, _| comm(x, &acc));
    Ok(first && lhs == ad)
}
