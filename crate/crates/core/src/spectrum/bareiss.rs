//! Fraction-free determinant over the integers.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Determinant of a row-major `n × n` integer matrix by Bareiss elimination
/// with row pivoting. Zero entries are skipped, so block-sparse inputs stay
/// cheap.
pub fn bareiss_det(mut m: Vec<BigInt>, n: usize) -> BigInt {
    if n == 0 {
        return BigInt::one();
    }
    let at = |i: usize, j: usize| i * n + j;
    let mut prev = BigInt::one();
    let mut negate = false;
    for k in 0..n - 1 {
        if m[at(k, k)].is_zero() {
            let Some(piv) = (k + 1..n).find(|&i| !m[at(i, k)].is_zero()) else {
                return BigInt::zero();
            };
            for j in 0..n {
                m.swap(at(k, j), at(piv, j));
            }
            negate = !negate;
        }
        let pivot = m[at(k, k)].clone();
        let pivot_row: Vec<(usize, BigInt)> = (k + 1..n)
            .filter(|&j| !m[at(k, j)].is_zero())
            .map(|j| (j, m[at(k, j)].clone()))
            .collect();
        for i in k + 1..n {
            let lead = core::mem::take(&mut m[at(i, k)]);
            for j in k + 1..n {
                let e = &mut m[at(i, j)];
                if !e.is_zero() {
                    *e *= &pivot;
                }
            }
            if !lead.is_zero() {
                for (j, v) in &pivot_row {
                    m[at(i, *j)] -= &lead * v;
                }
            }
            for j in k + 1..n {
                let e = &mut m[at(i, j)];
                if !e.is_zero() {
                    *e /= &prev;
                }
            }
        }
        prev = pivot;
    }
    let d = m[at(n - 1, n - 1)].clone();
    if negate {
        -d
    } else {
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn det_i64(rows: &[&[i64]]) -> BigInt {
        let n = rows.len();
        bareiss_det(rows.iter().flat_map(|r| r.iter().map(|&v| BigInt::from(v))).collect(), n)
    }

    #[test]
    fn small_determinants() {
        assert_eq!(det_i64(&[&[2, 1], &[1, 3]]), BigInt::from(5));
        assert_eq!(det_i64(&[&[0, 1], &[1, 0]]), BigInt::from(-1));
        assert_eq!(det_i64(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 10]]), BigInt::from(-3));
        assert_eq!(det_i64(&[&[1, 2], &[2, 4]]), BigInt::zero());
        assert_eq!(det_i64(&[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]]), BigInt::from(-1));
    }

    #[test]
    fn matches_permutation_expansion() {
        // Leibniz expansion over all 4! permutations as oracle.
        let m: [[i64; 4]; 4] = [[3, -1, 0, 2], [1, 0, 5, -2], [0, 4, -3, 1], [2, 2, 1, 0]];
        let mut perm = [0usize, 1, 2, 3];
        let mut total = 0i64;
        fn permute(k: usize, perm: &mut [usize; 4], m: &[[i64; 4]; 4], total: &mut i64) {
            if k == 4 {
                let mut inv = 0;
                for i in 0..4 {
                    for j in i + 1..4 {
                        if perm[i] > perm[j] {
                            inv += 1;
                        }
                    }
                }
                let prod: i64 = (0..4).map(|i| m[i][perm[i]]).product();
                *total += if inv % 2 == 0 { prod } else { -prod };
                return;
            }
            for i in k..4 {
                perm.swap(k, i);
                permute(k + 1, perm, m, total);
                perm.swap(k, i);
            }
        }
        permute(0, &mut perm, &m, &mut total);
        let rows: Vec<&[i64]> = m.iter().map(|r| r.as_slice()).collect();
        assert_eq!(det_i64(&rows), BigInt::from(total));
    }
}
