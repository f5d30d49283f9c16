//! Characteristic polynomials over word-size primes and Chinese remaindering.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

#[inline]
fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    a * b % p
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Deterministic Miller–Rabin for 32-bit inputs.
fn is_prime_u32(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for small in [2, 3, 5, 7, 11, 13, 61] {
        if n.is_multiple_of(small) {
            return n == small;
        }
    }
    let (mut d, mut s) = (n - 1, 0);
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 7, 61] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Primes below 2^31 in descending order.
pub(crate) fn word_primes() -> impl Iterator<Item = u64> {
    (1u64 << 30..1u64 << 31).rev().filter(|&n| is_prime_u32(n))
}

/// `det(xI - A) mod p`, constant-first, via reduction to upper Hessenberg form.
///
/// `a` is row-major `n × n` with entries already reduced mod `p`.
pub fn charpoly_mod(a: &[u64], n: usize, p: u64) -> Vec<u64> {
    let mut h = a.to_vec();
    let at = |i: usize, j: usize| i * n + j;
    for j in 0..n.saturating_sub(2) {
        let Some(piv) = (j + 1..n).find(|&i| h[at(i, j)] != 0) else {
            continue;
        };
        if piv != j + 1 {
            for k in 0..n {
                h.swap(at(piv, k), at(j + 1, k));
            }
            for k in 0..n {
                h.swap(at(k, piv), at(k, j + 1));
            }
        }
        let inv = inv_mod(h[at(j + 1, j)], p);
        for i in j + 2..n {
            let u = mul_mod(h[at(i, j)], inv, p);
            if u == 0 {
                continue;
            }
            // row_i -= u * row_{j+1}
            for k in j..n {
                let s = mul_mod(u, h[at(j + 1, k)], p);
                h[at(i, k)] = (h[at(i, k)] + p - s) % p;
            }
            // col_{j+1} += u * col_i
            for k in 0..n {
                let s = mul_mod(u, h[at(k, i)], p);
                h[at(k, j + 1)] = (h[at(k, j + 1)] + s) % p;
            }
        }
    }
    // p_m = (x - h_mm) p_{m-1} - Σ_{i<m} h_{i,m} (Π_{j=i+1..m} h_{j,j-1}) p_{i-1}
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for m in 1..=n {
        let prev = &polys[m - 1];
        let mut cur = vec![0u64; m + 1];
        let hmm = h[at(m - 1, m - 1)];
        for (k, &c) in prev.iter().enumerate() {
            cur[k + 1] = (cur[k + 1] + c) % p;
            cur[k] = (cur[k] + p - mul_mod(hmm, c, p)) % p;
        }
        let mut t = 1u64;
        for i in (1..m).rev() {
            t = mul_mod(t, h[at(i, i - 1)], p);
            if t == 0 {
                break;
            }
            let coef = mul_mod(t, h[at(i - 1, m - 1)], p);
            if coef == 0 {
                continue;
            }
            for (k, &c) in polys[i - 1].iter().enumerate() {
                cur[k] = (cur[k] + p - mul_mod(coef, c, p)) % p;
            }
        }
        polys.push(cur);
    }
    polys.pop().unwrap()
}

/// Incremental CRT for a vector of residues with a symmetric final lift.
pub(crate) struct Crt {
    modulus: BigInt,
    values: Vec<BigInt>,
}

impl Crt {
    pub fn new(len: usize) -> Self {
        Crt { modulus: BigInt::one(), values: vec![BigInt::zero(); len] }
    }

    pub fn modulus(&self) -> &BigInt {
        &self.modulus
    }

    pub fn add(&mut self, residues: &[u64], p: u64) {
        let m_mod_p = self.modulus.mod_floor(&BigInt::from(p)).to_u64().unwrap();
        let m_inv = inv_mod(m_mod_p, p);
        let bp = BigInt::from(p);
        for (x, &r) in self.values.iter_mut().zip(residues) {
            let x_mod_p = x.mod_floor(&bp).to_u64().unwrap();
            let t = mul_mod((r + p - x_mod_p) % p, m_inv, p);
            if t != 0 {
                *x += &self.modulus * t;
            }
        }
        self.modulus *= p;
    }

    /// Values in `(-M/2, M/2]`.
    pub fn finish(self) -> Vec<BigInt> {
        let half = &self.modulus >> 1;
        let m = self.modulus;
        self.values
            .into_iter()
            .map(|x| if x > half { x - &m } else { x })
            .collect()
    }
}
