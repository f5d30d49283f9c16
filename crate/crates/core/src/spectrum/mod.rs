//! Exact adjacency spectra.
//!
//! [`char_poly`] computes `det(xI - A)` exactly: each connected component's
//! characteristic polynomial is computed modulo enough 31-bit primes to cover
//! the coefficient bound `(1 + Δ)^n` (every eigenvalue has magnitude at most
//! the maximum degree Δ, so `|e_k| ≤ C(n,k) Δ^k`), then lifted by CRT. The
//! product is checked against a Bareiss determinant of `(V+1)I - A`.
//! [`integer_spectrum`] peels integer roots off the result.

mod bareiss;
mod modular;

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::{CliqueDecomposition, Graph};
use crate::poly::IntPolynomial;
use crate::Limits;

pub use bareiss::bareiss_det;
pub use modular::charpoly_mod;

/// Integer eigenvalues with multiplicities plus the factor carrying every
/// non-integral eigenvalue.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spectrum {
    /// `(value, multiplicity)`, strictly decreasing by value.
    eigenvalues: Vec<(i64, usize)>,
    /// Monic, no integer roots; the constant 1 when the spectrum is integral.
    residual: IntPolynomial,
}

impl Spectrum {
    /// Normalizes: sorts by decreasing value, merges equal values and drops
    /// zero multiplicities.
    pub fn new(eigenvalues: impl IntoIterator<Item = (i64, usize)>, residual: IntPolynomial) -> Self {
        let mut merged: BTreeMap<i64, usize> = BTreeMap::new();
        for (v, k) in eigenvalues {
            *merged.entry(v).or_default() += k;
        }
        let eigenvalues = merged.into_iter().rev().filter(|&(_, k)| k > 0).collect();
        Spectrum { eigenvalues, residual }
    }

    pub fn integral(eigenvalues: impl IntoIterator<Item = (i64, usize)>) -> Self {
        Self::new(eigenvalues, IntPolynomial::one())
    }

    pub fn eigenvalues(&self) -> &[(i64, usize)] {
        &self.eigenvalues
    }

    pub fn residual(&self) -> &IntPolynomial {
        &self.residual
    }

    pub fn is_integral(&self) -> bool {
        self.residual.is_one()
    }

    pub fn multiplicity(&self, value: i64) -> usize {
        self.eigenvalues.iter().find(|e| e.0 == value).map_or(0, |e| e.1)
    }

    /// Σ multiplicities + deg(residual).
    pub fn vertex_count(&self) -> usize {
        self.eigenvalues.iter().map(|e| e.1).sum::<usize>() + self.residual.degree()
    }

    /// Σ λ over all eigenvalues, the residual's roots summed via its
    /// second-highest coefficient.
    pub fn trace(&self) -> BigInt {
        let ints: BigInt = self.eigenvalues.iter().map(|&(v, k)| BigInt::from(v) * k).sum();
        let d = self.residual.degree();
        let residual_sum = if d == 0 { BigInt::zero() } else { -self.residual.coeff(d - 1) };
        ints + residual_sum
    }

    /// `∏ (x - λ)^k · residual`.
    pub fn to_polynomial(&self) -> IntPolynomial {
        self.eigenvalues
            .iter()
            .fold(self.residual.clone(), |acc, &(v, k)| &acc * &IntPolynomial::linear_power(v, k))
    }
}

/// Graph's adjacency as a row-major 0/1 matrix restricted to `vertices`.
fn induced_matrix(g: &Graph, vertices: &[usize]) -> Vec<u64> {
    let n = vertices.len();
    let mut a = vec![0u64; n * n];
    for (i, &u) in vertices.iter().enumerate() {
        for (j, &v) in vertices.iter().enumerate() {
            if g.adjacent(u, v) {
                a[i * n + j] = 1;
            }
        }
    }
    a
}

/// Exact characteristic polynomial of a symmetric 0/1 matrix whose
/// eigenvalues are bounded in magnitude by `max_degree`.
fn block_char_poly(a: &[u64], n: usize, max_degree: usize) -> IntPolynomial {
    // Need Π p > 2 (1 + Δ)^n for a symmetric lift.
    let bound = BigInt::from(1 + max_degree).pow(n as u32) * 2u32;
    let mut crt = modular::Crt::new(n + 1);
    for p in modular::word_primes() {
        crt.add(&charpoly_mod(a, n, p), p);
        if *crt.modulus() > bound {
            break;
        }
    }
    IntPolynomial::new(crt.finish())
}

/// `det(xI - A)` for the adjacency matrix `A` of `g`.
pub fn char_poly(g: &Graph, limits: &Limits) -> Result<IntPolynomial> {
    let v = g.vertex_count();
    if v > limits.max_spectral_vertices {
        return Err(Error::SpectralCap { vertices: v, cap: limits.max_spectral_vertices });
    }
    // Block-diagonal by components; identical blocks share one computation.
    let mut cache: BTreeMap<(usize, Vec<u64>), IntPolynomial> = BTreeMap::new();
    let mut result = IntPolynomial::one();
    for comp in g.components() {
        let n = comp.len();
        let a = induced_matrix(g, &comp);
        let delta = comp.iter().map(|&u| g.degree(u)).max().unwrap_or(0);
        let block = cache
            .entry((n, a))
            .or_insert_with_key(|(n, a)| block_char_poly(a, *n, delta));
        result = &result * block;
    }
    verify_against_determinant(g, &result)?;
    Ok(result)
}

/// Bareiss evaluation of `det((V+1)I - A)` compared with `p(V+1)`.
fn verify_against_determinant(g: &Graph, p: &IntPolynomial) -> Result<()> {
    let n = g.vertex_count();
    let x = BigInt::from(n + 1);
    let mut m = vec![BigInt::zero(); n * n];
    for i in 0..n {
        m[i * n + i] = x.clone();
        for j in g.neighbors(i) {
            m[i * n + j] = BigInt::from(-1);
        }
    }
    if p.degree() != n || !p.is_monic() || bareiss_det(m, n) != p.eval(&x) {
        return Err(Error::ReconstructionMismatch);
    }
    Ok(())
}

/// ⌈|c|^(1/i)⌉ upper bound as a power of two.
fn root_magnitude_bound(c: &BigInt, i: usize) -> BigInt {
    let bits = c.bits() as usize;
    BigInt::one() << bits.div_ceil(i)
}

/// Peel every integer root of a monic polynomial, with multiplicity.
///
/// Candidates are 0 and the divisors of the constant term (after removing
/// powers of `x`) no larger than the Fujiwara root bound.
pub fn integer_spectrum(p: &IntPolynomial) -> Result<Spectrum> {
    if !p.is_monic() {
        return Err(Error::NonMonic);
    }
    let (zeros, mut rest) = p.strip_x_power();
    let mut roots: Vec<(i64, usize)> = vec![(0, zeros)];
    let n = rest.degree();
    let bound = (1..=n)
        .map(|i| root_magnitude_bound(&rest.coeff(n - i), i))
        .max()
        .unwrap_or_else(BigInt::zero)
        * 2u32;
    let mut c0 = rest.coeff(0).abs();
    let mut d: i64 = 1;
    while rest.degree() > 0 && BigInt::from(d) <= c0 && BigInt::from(d) <= bound {
        if (&c0 % d).is_zero() {
            for r in [d, -d] {
                let mut k = 0;
                while let Some(q) = rest.divide_linear(r) {
                    rest = q;
                    k += 1;
                }
                roots.push((r, k));
            }
            c0 = rest.coeff(0).abs();
        }
        d += 1;
    }
    Ok(Spectrum::new(roots, rest))
}

/// Spectrum of a disjoint union of complete graphs:
/// `{(-1)^(Σ m_i - l), (m_1 - 1)^1, …, (m_l - 1)^1}`.
pub fn clique_union_spectrum(d: &CliqueDecomposition) -> Result<Spectrum> {
    clique_sizes_spectrum(&d.clique_sizes)
}

pub fn clique_sizes_spectrum(sizes: &[usize]) -> Result<Spectrum> {
    if sizes.is_empty() {
        return Err(Error::EmptyDecomposition);
    }
    let minus_one = sizes.iter().sum::<usize>() - sizes.len();
    let eigs = sizes
        .iter()
        .map(|&m| (m as i64 - 1, 1))
        .chain(core::iter::once((-1, minus_one)));
    Ok(Spectrum::integral(eigs))
}

/// Convenience: `integer_spectrum(char_poly(g))`.
pub fn graph_spectrum(g: &Graph, limits: &Limits) -> Result<Spectrum> {
    integer_spectrum(&char_poly(g, limits)?)
}
