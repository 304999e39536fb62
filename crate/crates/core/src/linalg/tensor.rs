//! Flattened tensor powers.
//!
//! A basis tensor `e_{i1} ⊗ … ⊗ e_{in}` of `V^{⊗n}` sits at index
//! `Σ i_k · dim^{n-k}` (row-major, first factor most significant).

use super::field::{Gf, Vector};
use super::matrix::Matrix;
use super::subspace::Subspace;
use crate::error::Result;

/// `dim^n`, or `None` on overflow.
pub fn tensor_dim(dim: usize, n: u32) -> Option<usize> {
    dim.checked_pow(n)
}

/// `a ⊗ b` for flattened vectors.
pub fn kron_vec(f: Gf, a: &[u32], b: &[u32]) -> Vector {
    let mut out = vec![0; a.len() * b.len()];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            if y != 0 {
                out[i * b.len() + j] = f.mul(x, y);
            }
        }
    }
    out
}

/// `I_{left} ⊗ op ⊗ I_{right}` where the identities act on spaces of the
/// given dimensions.
pub fn sandwich(op: &Matrix, left: usize, right: usize) -> Matrix {
    let f = op.field();
    let rows = left * op.rows() * right;
    let cols = left * op.cols() * right;
    let mut data = vec![0u32; rows * cols];
    for l in 0..left {
        for i in 0..op.rows() {
            for j in 0..op.cols() {
                let a = op[(i, j)];
                if a == 0 {
                    continue;
                }
                for r in 0..right {
                    let row = (l * op.rows() + i) * right + r;
                    let col = (l * op.cols() + j) * right + r;
                    data[row * cols + col] = a;
                }
            }
        }
    }
    Matrix::new(f, rows, cols, data).expect("sandwich entries are reduced")
}

/// `U ⊗ V` as a subspace of the flattened tensor square.
pub fn tensor_subspace(u: &Subspace, v: &Subspace) -> Result<Subspace> {
    let f = u.field();
    let mut vecs = Vec::with_capacity(u.dim() * v.dim());
    for a in u.basis_vectors() {
        for b in v.basis_vectors() {
            vecs.push(kron_vec(f, &a, &b));
        }
    }
    Subspace::span(f, u.ambient() * v.ambient(), &vecs)
}

/// Swap map `a ⊗ b ↦ b ⊗ a` on `V ⊗ V`, applied to a flattened vector.
pub fn flip(t: &[u32], dim: usize) -> Vector {
    let mut out = vec![0; dim * dim];
    for i in 0..dim {
        for j in 0..dim {
            out[j * dim + i] = t[i * dim + j];
        }
    }
    out
}
