//! Exact arithmetic in GF(p^n).
//!
//! Elements are residue polynomials modulo a fixed monic irreducible modulus,
//! stored constant-first. The modulus is the lexicographically smallest
//! irreducible monic polynomial of degree `n` (coefficient vectors compared
//! constant-first), so encodings are reproducible.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// Binary/unary operations accepted by [`FiniteField::arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Inv,
    Neg,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FieldElement {
    coeffs: Vec<u32>,
}

impl FieldElement {
    /// Coefficients, constant term first.
    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteField {
    p: u32,
    n: u32,
    /// Monic, length `n + 1`, constant-first.
    modulus: Vec<u32>,
    order: u64,
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl FiniteField {
    /// GF(p^n) under the default field-order cap of 2^16.
    pub fn new(p: u32, n: u32) -> Result<Self> {
        Self::with_cap(p, n, crate::Limits::DEFAULT_MAX_FIELD_ORDER)
    }

    pub fn with_cap(p: u32, n: u32, cap: u64) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        if n == 0 {
            return Err(crate::error::param("GF", "extension degree must be at least 1"));
        }
        let order = (p as u64)
            .checked_pow(n)
            .filter(|&o| o <= cap)
            .ok_or(Error::FieldTooLarge {
                order: (p as u64).saturating_pow(n),
                cap,
            })?;
        let modulus = smallest_irreducible(p, n as usize);
        Ok(FiniteField { p, n, modulus, order })
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.n
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// Modulus coefficients, constant-first, monic.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement { coeffs: vec![0; self.n as usize] }
    }

    pub fn one(&self) -> FieldElement {
        self.constant(1)
    }

    pub fn constant(&self, c: u32) -> FieldElement {
        let mut e = self.zero();
        e.coeffs[0] = c % self.p;
        e
    }

    /// The residue class of `x`. Equals a constant when `n = 1`.
    pub fn generator(&self) -> FieldElement {
        self.reduce(vec![0, 1])
    }

    /// `x^i` for `i < n`: the standard additive basis.
    pub fn basis(&self) -> Vec<FieldElement> {
        (0..self.n as usize)
            .map(|i| {
                let mut e = self.zero();
                e.coeffs[i] = 1;
                e
            })
            .collect()
    }

    pub fn element(&self, coeffs: &[u32]) -> Result<FieldElement> {
        let e = FieldElement { coeffs: coeffs.to_vec() };
        self.check(&e)?;
        Ok(e)
    }

    /// Base-p digit encoding, constant-first: `Σ c_i p^i`.
    pub fn encode(&self, x: &FieldElement) -> u32 {
        x.coeffs.iter().rev().fold(0u32, |acc, &c| acc * self.p + c)
    }

    pub fn decode(&self, mut code: u32) -> FieldElement {
        let mut e = self.zero();
        for c in e.coeffs.iter_mut() {
            *c = code % self.p;
            code /= self.p;
        }
        e
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.order as u32).map(move |c| self.decode(c))
    }

    fn check(&self, x: &FieldElement) -> Result<()> {
        if x.coeffs.len() != self.n as usize || x.coeffs.iter().any(|&c| c >= self.p) {
            return Err(Error::ForeignElement);
        }
        Ok(())
    }

    pub fn arith(&self, op: FieldOp, x: &FieldElement, y: Option<&FieldElement>) -> Result<FieldElement> {
        self.check(x)?;
        let rhs = || -> Result<&FieldElement> {
            let y = y.ok_or(Error::ForeignElement)?;
            self.check(y)?;
            Ok(y)
        };
        Ok(match op {
            FieldOp::Add => self.add_unchecked(x, rhs()?),
            FieldOp::Sub => self.add_unchecked(x, &self.neg_unchecked(rhs()?)),
            FieldOp::Mul => self.mul_unchecked(x, rhs()?),
            FieldOp::Neg => self.neg_unchecked(x),
            FieldOp::Inv => return self.inv(x),
        })
    }

    pub fn add(&self, x: &FieldElement, y: &FieldElement) -> Result<FieldElement> {
        self.arith(FieldOp::Add, x, Some(y))
    }

    pub fn sub(&self, x: &FieldElement, y: &FieldElement) -> Result<FieldElement> {
        self.arith(FieldOp::Sub, x, Some(y))
    }

    pub fn mul(&self, x: &FieldElement, y: &FieldElement) -> Result<FieldElement> {
        self.arith(FieldOp::Mul, x, Some(y))
    }

    pub fn neg(&self, x: &FieldElement) -> Result<FieldElement> {
        self.arith(FieldOp::Neg, x, None)
    }

    /// Multiplicative inverse by the extended Euclidean algorithm on GF(p)[x].
    pub fn inv(&self, x: &FieldElement) -> Result<FieldElement> {
        self.check(x)?;
        if x.is_zero() {
            return Err(Error::ZeroInverse);
        }
        let p = self.p;
        // Invariant: s_i * x ≡ r_i (mod modulus).
        let (mut r0, mut r1) = (self.modulus.clone(), trim(x.coeffs.clone()));
        let (mut s0, mut s1) = (Vec::new(), vec![1u32]);
        while !r1.is_empty() {
            let (q, r) = poly_divrem(&r0, &r1, p);
            let s2 = poly_sub(&s0, &poly_mul(&q, &s1, p), p);
            r0 = core::mem::replace(&mut r1, r);
            s0 = core::mem::replace(&mut s1, s2);
        }
        // r0 is a nonzero constant because the modulus is irreducible.
        let c = inv_mod(r0[0], p);
        let scaled: Vec<u32> = s0.iter().map(|&s| mul_mod(s, c, p)).collect();
        Ok(self.reduce(scaled))
    }

    /// Frobenius map x ↦ x^p (squaring in characteristic 2).
    pub fn frobenius(&self, x: &FieldElement) -> Result<FieldElement> {
        self.check(x)?;
        self.pow(x, self.p as u64)
    }

    pub fn pow(&self, x: &FieldElement, mut e: u64) -> Result<FieldElement> {
        self.check(x)?;
        let mut base = x.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_unchecked(&acc, &base);
            }
            base = self.mul_unchecked(&base, &base);
            e >>= 1;
        }
        Ok(acc)
    }

    /// Smallest-code generator of the multiplicative group.
    pub fn primitive_element(&self) -> FieldElement {
        let m = self.order - 1;
        let primes: Vec<u64> = (2..=m).filter(|&d| m.is_multiple_of(d) && is_prime(d)).collect();
        (1..self.order as u32)
            .map(|c| self.decode(c))
            .find(|g| {
                primes
                    .iter()
                    .all(|&r| self.pow(g, m / r).map(|v| v != self.one()).unwrap_or(false))
            })
            .expect("multiplicative group of a finite field is cyclic")
    }

    pub(crate) fn add_unchecked(&self, x: &FieldElement, y: &FieldElement) -> FieldElement {
        FieldElement {
            coeffs: x.coeffs.iter().zip(&y.coeffs).map(|(&a, &b)| (a + b) % self.p).collect(),
        }
    }

    pub(crate) fn neg_unchecked(&self, x: &FieldElement) -> FieldElement {
        FieldElement {
            coeffs: x.coeffs.iter().map(|&a| (self.p - a) % self.p).collect(),
        }
    }

    pub(crate) fn mul_unchecked(&self, x: &FieldElement, y: &FieldElement) -> FieldElement {
        self.reduce(poly_mul(&x.coeffs, &y.coeffs, self.p))
    }

    fn reduce(&self, v: Vec<u32>) -> FieldElement {
        let r = if v.len() > self.n as usize {
            poly_divrem(&trim(v), &self.modulus, self.p).1
        } else {
            v
        };
        let mut coeffs = vec![0; self.n as usize];
        for (c, &r) in coeffs.iter_mut().zip(&r) {
            *c = r % self.p;
        }
        FieldElement { coeffs }
    }

    /// Human-readable form: a plain integer in prime fields, else a polynomial in `x`.
    pub fn format(&self, e: &FieldElement) -> String {
        if self.n == 1 {
            return format!("{}", e.coeffs[0]);
        }
        let mut terms = Vec::new();
        for (i, &c) in e.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let t = match (i, c) {
                (0, c) => format!("{c}"),
                (1, 1) => String::from("x"),
                (1, c) => format!("{c}x"),
                (i, 1) => format!("x^{i}"),
                (i, c) => format!("{c}x^{i}"),
            };
            terms.push(t);
        }
        if terms.is_empty() {
            String::from("0")
        } else {
            terms.join("+")
        }
    }
}

impl fmt::Display for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{})", self.p, self.n)
    }
}

/// Dense lookup tables over element codes, for building matrix groups.
#[derive(Clone, Debug)]
pub(crate) struct FieldTables {
    pub q: usize,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
}

impl FieldTables {
    pub const MAX_ORDER: u64 = 1024;

    pub fn new(field: &FiniteField) -> Result<Self> {
        if field.order() > Self::MAX_ORDER {
            return Err(Error::FieldTooLarge { order: field.order(), cap: Self::MAX_ORDER });
        }
        let q = field.order() as usize;
        let els: Vec<FieldElement> = field.elements().collect();
        let mut add = vec![0; q * q];
        let mut mul = vec![0; q * q];
        for (i, x) in els.iter().enumerate() {
            for (j, y) in els.iter().enumerate() {
                add[i * q + j] = field.encode(&field.add_unchecked(x, y));
                mul[i * q + j] = field.encode(&field.mul_unchecked(x, y));
            }
        }
        let neg = els.iter().map(|x| field.encode(&field.neg_unchecked(x))).collect();
        Ok(FieldTables { q, add, mul, neg })
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        self.add[a as usize * self.q + b as usize]
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[a as usize * self.q + b as usize]
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg[b as usize])
    }
}

fn mul_mod(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 * b as u64) % p as u64) as u32
}

fn inv_mod(a: u32, p: u32) -> u32 {
    let mut acc = 1u64;
    let mut base = a as u64 % p as u64;
    let mut e = p as u64 - 2;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    acc as u32
}

fn trim(mut v: Vec<u32>) -> Vec<u32> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn poly_mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x as u64 * y as u64) % p as u64;
        }
    }
    trim(out.into_iter().map(|c| c as u32).collect())
}

fn poly_sub(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    trim(out)
}

/// Quotient and remainder in GF(p)[x]; `b` must be nonzero.
fn poly_divrem(a: &[u32], b: &[u32], p: u32) -> (Vec<u32>, Vec<u32>) {
    let b = trim(b.to_vec());
    let mut r = trim(a.to_vec());
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let lead_inv = inv_mod(*b.last().unwrap(), p);
    let mut q = vec![0u32; r.len() - b.len() + 1];
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let c = mul_mod(*r.last().unwrap(), lead_inv, p);
        q[shift] = c;
        for (i, &bc) in b.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - mul_mod(c, bc, p)) % p;
        }
        r = trim(r);
    }
    (trim(q), r)
}

/// Monic polynomial of degree `deg` whose lower coefficients are the base-p
/// digits of `code`, constant term most significant for lexicographic order.
fn monic_from_lex_rank(p: u32, deg: usize, mut rank: u64) -> Vec<u32> {
    let mut v = vec![0u32; deg + 1];
    for i in (0..deg).rev() {
        v[i] = (rank % p as u64) as u32;
        rank /= p as u64;
    }
    v[deg] = 1;
    v
}

/// Trial division by every monic polynomial of degree 1..=deg/2.
pub(crate) fn is_irreducible(f: &[u32], p: u32) -> bool {
    let deg = f.len() - 1;
    for d in 1..=deg / 2 {
        for rank in 0..(p as u64).pow(d as u32) {
            let g = monic_from_lex_rank(p, d, rank);
            if poly_divrem(f, &g, p).1.is_empty() {
                return false;
            }
        }
    }
    true
}

fn smallest_irreducible(p: u32, n: usize) -> Vec<u32> {
    (0..(p as u64).pow(n as u32))
        .map(|rank| monic_from_lex_rank(p, n, rank))
        .find(|f| is_irreducible(f, p))
        .expect("irreducible polynomials exist in every degree")
}
