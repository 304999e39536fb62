//! Arithmetic in the prime field GF(p).
//!
//! Scalars are plain `u32` residues in `[0, p)`; the [`Gf`] handle carries the
//! modulus and performs every operation. Products are formed in `u64`, which
//! is exact for every admissible modulus (`p <= 65521`).

use crate::error::{Error, Result};

/// Largest admissible modulus (the largest prime below 2^16).
pub const MAX_PRIME: u32 = 65521;

/// A dense coordinate vector over GF(p).
pub type Vector = Vec<u32>;

/// Handle for the prime field GF(p).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Gf {
    p: u32,
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Gf {
    /// Builds GF(p), rejecting composite moduli and `p > 65521`.
    pub fn new(p: u32) -> Result<Self> {
        if p > MAX_PRIME || !is_prime(p) {
            return Err(Error::InvalidPrime(p));
        }
        Ok(Gf { p })
    }

    #[inline]
    pub fn p(self) -> u32 {
        self.p
    }

    /// Reduces an arbitrary signed integer into `[0, p)`.
    #[inline]
    pub fn from_i64(self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    pub fn pow(self, mut base: u32, mut exp: u64) -> u32 {
        let mut acc = 1 % self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(self, a: u32) -> u32 {
        assert!(a != 0, "inverse of zero in GF({})", self.p);
        self.pow(a, (self.p - 2) as u64)
    }

    /// All field elements in increasing order.
    pub fn elements(self) -> impl Iterator<Item = u32> {
        0..self.p
    }

    // -- vector helpers -------------------------------------------------

    pub fn zero_vec(self, n: usize) -> Vector {
        vec![0; n]
    }

    pub fn basis_vec(self, n: usize, i: usize) -> Vector {
        let mut v = vec![0; n];
        v[i] = 1;
        v
    }

    /// `acc += c * v`
    pub fn axpy(self, acc: &mut [u32], c: u32, v: &[u32]) {
        debug_assert_eq!(acc.len(), v.len());
        if c == 0 {
            return;
        }
        for (a, &b) in acc.iter_mut().zip(v) {
            if b != 0 {
                *a = self.add(*a, self.mul(c, b));
            }
        }
    }

    pub fn scale(self, c: u32, v: &[u32]) -> Vector {
        v.iter().map(|&x| self.mul(c, x)).collect()
    }

    pub fn add_vec(self, a: &[u32], b: &[u32]) -> Vector {
        a.iter().zip(b).map(|(&x, &y)| self.add(x, y)).collect()
    }

    pub fn sub_vec(self, a: &[u32], b: &[u32]) -> Vector {
        a.iter().zip(b).map(|(&x, &y)| self.sub(x, y)).collect()
    }

    pub fn neg_vec(self, a: &[u32]) -> Vector {
        a.iter().map(|&x| self.neg(x)).collect()
    }

    pub fn dot(self, a: &[u32], b: &[u32]) -> u32 {
        let s = a
            .iter()
            .zip(b)
            .fold(0u64, |acc, (&x, &y)| (acc + x as u64 * y as u64) % self.p as u64);
        s as u32
    }

    /// `(p-1)! / (i! (p-i)!)` reduced mod p, i.e. `binomial(p, i) / p`, for
    /// `1 <= i <= p-1`. These are the coefficients of the degree-two cocycle
    /// `Σ c_i x^i ⊗ x^{p-i}` and of the divided p-th power of a binomial.
    ///
    /// Evaluated with Wilson's theorem: `(p-1)! ≡ -1`, and `i!`, `(p-i)!` are
    /// units because both factorials stay below p.
    pub fn divided_binomial(self, i: u32) -> u32 {
        assert!(i >= 1 && i < self.p, "index {i} outside 1..p-1");
        let fact = |n: u32| (1..=n).fold(1u32, |acc, k| self.mul(acc, k));
        let denom = self.mul(fact(i), fact(self.p - i));
        self.mul(self.neg(1), self.inv(denom))
    }

    /// The full list `c_1, …, c_{p-1}` of [`Gf::divided_binomial`].
    pub fn divided_binomials(self) -> Vec<u32> {
        (1..self.p).map(|i| self.divided_binomial(i)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_composites_and_large_moduli() {
        assert!(Gf::new(4).is_err());
        assert!(Gf::new(1).is_err());
        assert!(Gf::new(0).is_err());
        assert!(Gf::new(65537).is_err());
        assert!(Gf::new(65521).is_ok());
        assert!(Gf::new(2).is_ok());
    }

    #[test]
    fn inverses() {
        let f = Gf::new(7).unwrap();
        for a in 1..7 {
            assert_eq!(f.mul(a, f.inv(a)), 1);
        }
        let big = Gf::new(MAX_PRIME).unwrap();
        assert_eq!(big.mul(12345, big.inv(12345)), 1);
    }

    #[test]
    fn divided_binomials_small_primes() {
        assert_eq!(Gf::new(2).unwrap().divided_binomials(), vec![1]);
        assert_eq!(Gf::new(3).unwrap().divided_binomials(), vec![1, 1]);
        assert_eq!(Gf::new(5).unwrap().divided_binomials(), vec![1, 2, 2, 1]);
    }
}
