use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Mul;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Univariate polynomial with arbitrary-precision integer coefficients,
/// stored constant-first with no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPolynomial { coeffs };
        p.trim();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn one() -> Self {
        Self::from_i64(&[1])
    }

    pub fn x() -> Self {
        Self::from_i64(&[0, 1])
    }

    /// `(x - root)^multiplicity`.
    pub fn linear_power(root: i64, multiplicity: usize) -> Self {
        let mut p = Self::one();
        let f = Self::from_i64(&[-root, 1]);
        for _ in 0..multiplicity {
            p = &p * &f;
        }
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Coefficient of `x^k`.
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Divide by `(x - r)` when it divides exactly.
    pub fn divide_linear(&self, r: i64) -> Option<IntPolynomial> {
        if self.coeffs.len() < 2 {
            return None;
        }
        let r = BigInt::from(r);
        let n = self.coeffs.len() - 1;
        let mut q = vec![BigInt::zero(); n];
        let mut carry = BigInt::zero();
        for k in (0..n).rev() {
            carry = &self.coeffs[k + 1] + &carry * &r;
            q[k] = carry.clone();
        }
        let remainder = &self.coeffs[0] + &carry * &r;
        remainder.is_zero().then(|| IntPolynomial::new(q))
    }

    /// Strip the largest power of `x` dividing the polynomial.
    pub fn strip_x_power(&self) -> (usize, IntPolynomial) {
        let k = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        (k, IntPolynomial::new(self.coeffs[k..].to_vec()))
    }

    /// Coefficients that fit in `i64`, or `None`.
    pub fn to_i64(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(|c| i64::try_from(c).ok()).collect()
    }

    /// Largest coefficient magnitude, in bits.
    pub fn max_coeff_bits(&self) -> u64 {
        self.coeffs.iter().map(|c| c.bits()).max().unwrap_or(0)
    }

    pub fn pretty(&self) -> String {
        format!("{self}")
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::new(Vec::new());
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        IntPolynomial::new(out)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            let show_mag = !mag.is_one() || k == 0;
            if show_mag {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn arithmetic_and_display() {
        let p = &IntPolynomial::linear_power(2, 1) * &IntPolynomial::linear_power(-1, 2);
        assert_eq!(p, IntPolynomial::from_i64(&[-2, -3, 0, 1]));
        assert_eq!(p.to_string(), "x^3 - 3x - 2");
        assert!(p.is_monic());
        assert_eq!(p.eval(&BigInt::from(2)), BigInt::zero());
        assert_eq!(p.divide_linear(2), Some(IntPolynomial::from_i64(&[1, 2, 1])));
        assert_eq!(p.divide_linear(1), None);
        let (k, q) = IntPolynomial::from_i64(&[0, 0, 5, 1]).strip_x_power();
        assert_eq!((k, q), (2, IntPolynomial::from_i64(&[5, 1])));
    }
}
