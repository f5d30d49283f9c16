//! Closed-form commuting-graph spectra as functions of family parameters.
//!
//! Every formula checks its own vertex-count identity: the multiplicities
//! must sum to `|G| - |Z(G)|` for the group it describes. Two published
//! displays fail that identity and are implemented in corrected form with
//! `errata = true`; their literal displays are kept in
//! [`displayed_pq`] and [`displayed_ac_times_abelian`] so the discrepancy
//! stays testable.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{param, Error, Result};
use crate::family::FamilySpec;
use crate::field::is_prime;
use crate::group::prime_power_parts;
use crate::spectrum::Spectrum;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    /// AC-group spectrum from centralizer orders and center order.
    Ac,
    /// AC-group times an abelian group.
    AcTimesAbelian,
    Quasidihedral,
    Psl2,
    Gl2,
    /// Groups with G/Z(G) isomorphic to the Frobenius group of order 20.
    Sz2Quotient,
    HanakiA,
    HanakiB,
    /// Groups with G/Z(G) isomorphic to Z_p × Z_p.
    CentralQuotientPp,
    Dihedral,
    Quaternion,
    /// Non-abelian groups of order pq.
    Pq,
    FixedA4,
    FixedSl23,
}

impl Formula {
    pub fn name(self) -> &'static str {
        match self {
            Formula::Ac => "ac",
            Formula::AcTimesAbelian => "ac_times_abelian",
            Formula::Quasidihedral => "quasidihedral",
            Formula::Psl2 => "psl2",
            Formula::Gl2 => "gl2",
            Formula::Sz2Quotient => "sz2_quotient",
            Formula::HanakiA => "hanaki_a",
            Formula::HanakiB => "hanaki_b",
            Formula::CentralQuotientPp => "central_quotient_pp",
            Formula::Dihedral => "dihedral",
            Formula::Quaternion => "quaternion",
            Formula::Pq => "pq",
            Formula::FixedA4 => "fixed_a4",
            Formula::FixedSl23 => "fixed_sl23",
        }
    }
}

/// A spectrum predicted by a closed form; always integral.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PredictedSpectrum {
    pub spectrum: Spectrum,
    pub formula: Formula,
    /// The implemented formula corrects the published display.
    pub errata: bool,
}

fn assemble(formula: Formula, terms: &[(i64, i64)], vertices: i64, errata: bool) -> Result<PredictedSpectrum> {
    let total: i64 = terms.iter().map(|t| t.1).sum();
    if total != vertices || terms.iter().any(|t| t.1 < 0) {
        return Err(Error::VertexCountMismatch {
            formula: formula.name(),
            total: total.max(0) as u64,
            vertices: vertices as u64,
        });
    }
    Ok(PredictedSpectrum {
        spectrum: Spectrum::integral(terms.iter().map(|&(v, k)| (v, k as usize))),
        formula,
        errata,
    })
}

/// True when the multiplicities of `terms` add up to `vertices`.
pub fn vertex_count_identity(terms: &[(i64, i64)], vertices: i64) -> bool {
    terms.iter().map(|t| t.1).sum::<i64>() == vertices
}

fn pow(b: i64, e: u32, family: &'static str) -> Result<i64> {
    b.checked_pow(e).ok_or_else(|| param(family, "parameter too large"))
}

fn require(cond: bool, family: &'static str, detail: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(param(family, detail))
    }
}

/// `{(-1)^(Σ|X_i| - n(z+1)), (|X_i| - z - 1)^1, …}`.
pub fn spec_ac(centralizer_orders: &[u64], z: u64) -> Result<PredictedSpectrum> {
    ac_terms(centralizer_orders, z, Formula::Ac, false)
}

fn ac_terms(orders: &[u64], z: u64, formula: Formula, errata: bool) -> Result<PredictedSpectrum> {
    require(z >= 1, formula.name(), "center order must be at least 1")?;
    require(!orders.is_empty(), formula.name(), "no centralizers given")?;
    if let Some(bad) = orders.iter().find(|&&x| x <= z) {
        return Err(param(formula.name(), format!("centralizer order {bad} does not exceed center order {z}")));
    }
    let n = orders.len() as i64;
    let (z, sum) = (z as i64, orders.iter().sum::<u64>() as i64);
    let mut terms: Vec<(i64, i64)> = orders.iter().map(|&x| (x as i64 - z - 1, 1)).collect();
    terms.push((-1, sum - n * (z + 1)));
    assemble(formula, &terms, sum - n * z, errata)
}

/// Spectrum for `G × A` with `|A| = a`: the AC formula applied to orders
/// `a·|X_i|` and center `a·z`, giving eigenvalues `a(|X_i| - z) - 1` and
/// `-1` with multiplicity `a·Σ|X_i| - n·a·z - n`.
pub fn spec_ac_times_abelian(centralizer_orders: &[u64], z: u64, a: u64) -> Result<PredictedSpectrum> {
    require(a >= 1, "ac_times_abelian", "|A| must be at least 1")?;
    let scaled: Vec<u64> = centralizer_orders.iter().map(|&x| x * a).collect();
    ac_terms(&scaled, z * a, Formula::AcTimesAbelian, true)
}

/// Literal published display for `G × A`:
/// `{(-1)^(Σ_i |A|(|X_i| - n|Z(G)|) - n), (|A|(|X_i| - |Z(G)|) - 1)^1, …}`.
pub fn displayed_ac_times_abelian(centralizer_orders: &[u64], z: u64, a: u64) -> Vec<(i64, i64)> {
    let (n, z, a) = (centralizer_orders.len() as i64, z as i64, a as i64);
    let minus_one: i64 = centralizer_orders.iter().map(|&x| a * (x as i64 - n * z)).sum::<i64>() - n;
    let mut terms: Vec<(i64, i64)> = centralizer_orders.iter().map(|&x| (a * (x as i64 - z) - 1, 1)).collect();
    terms.push((-1, minus_one));
    terms
}

/// QD_{2^n}: `{(-1)^(2^n - 2^(n-2) - 3), 1^(2^(n-2)), (2^(n-1) - 3)^1}`.
pub fn spec_quasidihedral(n: u32) -> Result<PredictedSpectrum> {
    require((4..=40).contains(&n), "quasidihedral", "n must be between 4 and 40")?;
    let t = |e: u32| 1i64 << e;
    assemble(
        Formula::Quasidihedral,
        &[(-1, t(n) - t(n - 2) - 3), (1, t(n - 2)), (t(n - 1) - 3, 1)],
        t(n) - 2,
        false,
    )
}

/// PSL(2, 2^k): `{(-1)^(2^3k - 2^2k - 2^(k+1) - 2), (2^k - 1)^(2^(k-1)(2^k - 1)),
/// (2^k - 2)^(2^k + 1), (2^k - 3)^(2^(k-1)(2^k + 1))}`.
pub fn spec_psl2(k: u32) -> Result<PredictedSpectrum> {
    require((2..=20).contains(&k), "psl2", "k must be between 2 and 20")?;
    let q = 1i64 << k;
    let h = q / 2;
    assemble(
        Formula::Psl2,
        &[
            (-1, q * q * q - q * q - 2 * q - 2),
            (q - 1, h * (q - 1)),
            (q - 2, q + 1),
            (q - 3, h * (q + 1)),
        ],
        q * (q * q - 1) - 1,
        false,
    )
}

/// GL(2, q): `{(-1)^(q^4 - q^3 - 2q^2 - q), (q^2 - 3q + 1)^(q(q+1)/2),
/// (q^2 - q - 1)^(q(q-1)/2), (q^2 - 2q)^(q+1)}`.
pub fn spec_gl2(q: u32) -> Result<PredictedSpectrum> {
    require(q > 2 && prime_power_parts(q).is_some(), "gl2", "q must be a prime power greater than 2")?;
    let q = q as i64;
    pow(q, 4, "gl2")?;
    assemble(
        Formula::Gl2,
        &[
            (-1, q.pow(4) - q.pow(3) - 2 * q * q - q),
            (q * q - 3 * q + 1, q * (q + 1) / 2),
            (q * q - q - 1, q * (q - 1) / 2),
            (q * q - 2 * q, q + 1),
        ],
        (q * q - 1) * (q * q - q) - (q - 1),
        false,
    )
}

/// G/Z(G) ≅ Sz(2): `{(-1)^(19|Z| - 6), (4|Z| - 1)^1, (3|Z| - 1)^5}`.
pub fn spec_sz2_quotient(z: u64) -> Result<PredictedSpectrum> {
    require(z >= 1, "sz2_quotient", "|Z(G)| must be at least 1")?;
    let z = z as i64;
    assemble(Formula::Sz2Quotient, &[(-1, 19 * z - 6), (4 * z - 1, 1), (3 * z - 1, 5)], 19 * z, false)
}

/// A(n, ϑ): `{(-1)^((2^n - 1)^2), (2^n - 1)^(2^n - 1)}`.
pub fn spec_hanaki_a(n: u32) -> Result<PredictedSpectrum> {
    require((2..=30).contains(&n), "hanaki_a", "n must be between 2 and 30")?;
    let t = 1i64 << n;
    assemble(Formula::HanakiA, &[(-1, (t - 1) * (t - 1)), (t - 1, t - 1)], t * t - t, false)
}

/// A(n, p): `{(-1)^(p^3n - 2p^n - 1), (p^2n - p^n - 1)^(p^n + 1)}`.
pub fn spec_hanaki_b(p: u32, n: u32) -> Result<PredictedSpectrum> {
    if !is_prime(p as u64) {
        return Err(Error::NotPrime(p as u64));
    }
    require(n >= 1, "hanaki_b", "n must be at least 1")?;
    let q = pow(p as i64, n, "hanaki_b")?;
    let q3 = pow(q, 3, "hanaki_b")?;
    assemble(Formula::HanakiB, &[(-1, q3 - 2 * q - 1), (q * q - q - 1, q + 1)], q3 - q, false)
}

/// G/Z(G) ≅ Z_p × Z_p: `{(-1)^((p^2 - 1)|Z| - p - 1), ((p - 1)|Z| - 1)^(p + 1)}`.
pub fn spec_central_quotient_pp(p: u32, z: u64) -> Result<PredictedSpectrum> {
    if !is_prime(p as u64) {
        return Err(Error::NotPrime(p as u64));
    }
    require(z >= 1, "central_quotient_pp", "|Z(G)| must be at least 1")?;
    let (p, z) = (p as i64, z as i64);
    assemble(
        Formula::CentralQuotientPp,
        &[(-1, (p * p - 1) * z - p - 1), ((p - 1) * z - 1, p + 1)],
        (p * p - 1) * z,
        false,
    )
}

/// D_{2m}: odd m `{(-1)^(m-2), 0^m, (m-2)^1}`, even m `{(-1)^(3m/2-3), 1^(m/2), (m-3)^1}`.
pub fn spec_dihedral(m: u32) -> Result<PredictedSpectrum> {
    require(m > 2, "dihedral", "m must exceed 2")?;
    let m = m as i64;
    if m % 2 == 1 {
        assemble(Formula::Dihedral, &[(-1, m - 2), (0, m), (m - 2, 1)], 2 * m - 1, false)
    } else {
        assemble(Formula::Dihedral, &[(-1, 3 * m / 2 - 3), (1, m / 2), (m - 3, 1)], 2 * m - 2, false)
    }
}

/// Q_{4n}: `{(-1)^(3n-3), 1^n, (2n-3)^1}`.
pub fn spec_quaternion(n: u32) -> Result<PredictedSpectrum> {
    require(n >= 2, "quaternion", "n must be at least 2")?;
    let n = n as i64;
    assemble(Formula::Quaternion, &[(-1, 3 * n - 3), (1, n), (2 * n - 3, 1)], 4 * n - 2, false)
}

fn check_pq(p: u32, q: u32) -> Result<()> {
    for x in [p, q] {
        if !is_prime(x as u64) {
            return Err(Error::NotPrime(x as u64));
        }
    }
    require(p < q && (q - 1).is_multiple_of(p), "pq", "requires p < q and p | q - 1")
}

/// Non-abelian group of order pq: `{(q-2)^1, (p-2)^q, (-1)^(pq-q-2)}`,
/// from the clique structure K_{q-1} ⊔ qK_{p-1}.
pub fn spec_pq(p: u32, q: u32) -> Result<PredictedSpectrum> {
    check_pq(p, q)?;
    let (p, q) = (p as i64, q as i64);
    assemble(Formula::Pq, &[(q - 2, 1), (p - 2, q), (-1, p * q - q - 2)], p * q - 1, true)
}

/// Literal published display for order pq: `{(-1)^(pq-q-1), (p-2)^q, (q-2)^1}`.
pub fn displayed_pq(p: u32, q: u32) -> Vec<(i64, i64)> {
    let (p, q) = (p as i64, q as i64);
    vec![(-1, p * q - q - 1), (p - 2, q), (q - 2, 1)]
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FixedGroup {
    A4,
    Sl23,
}

/// Tabulated spectra: A4 `{(-1)^6, 2^1, 1^4}`, SL(2,3) `{(-1)^15, 1^3, 3^4}`.
pub fn spec_fixed(name: FixedGroup) -> Result<PredictedSpectrum> {
    match name {
        FixedGroup::A4 => assemble(Formula::FixedA4, &[(-1, 6), (2, 1), (1, 4)], 11, false),
        FixedGroup::Sl23 => assemble(Formula::FixedSl23, &[(-1, 15), (1, 3), (3, 4)], 22, false),
    }
}

pub fn fixed_by_name(name: &str) -> Result<PredictedSpectrum> {
    match name {
        "A4" => spec_fixed(FixedGroup::A4),
        "SL23" => spec_fixed(FixedGroup::Sl23),
        _ => Err(param("fixed", format!("unknown group {name}"))),
    }
}

/// Orders of the distinct centralizers of non-central elements and `|Z(G)|`,
/// for families whose centralizer structure is known in closed form.
pub fn centralizer_data(spec: &FamilySpec) -> Option<(Vec<u64>, u64)> {
    use FamilySpec::*;
    let rep = |x: u64, k: u64| core::iter::repeat_n(x, k as usize);
    Some(match spec {
        Dihedral(o) if *o >= 6 && o % 2 == 0 => {
            let m = *o as u64 / 2;
            if m % 2 == 1 {
                (rep(m, 1).chain(rep(2, m)).collect(), 1)
            } else {
                (rep(m, 1).chain(rep(4, m / 2)).collect(), 2)
            }
        }
        GenQuaternion(o) if *o >= 8 && o % 4 == 0 => {
            let n = *o as u64 / 4;
            (rep(2 * n, 1).chain(rep(4, n)).collect(), 2)
        }
        Quasidihedral(n) if *n >= 4 => {
            (rep(1 << (n - 1), 1).chain(rep(4, 1 << (n - 2))).collect(), 2)
        }
        M16 | Z4rtimesZ4 | D8centralZ4 | SG16_3 => (vec![8; 3], 4),
        F20 => (rep(5, 1).chain(rep(4, 5)).collect(), 1),
        Alternating(4) => (vec![4, 3, 3, 3, 3], 1),
        Alternating(5) => return centralizer_data(&PSL2(4)),
        SL2(3) => (vec![4, 4, 4, 6, 6, 6, 6], 2),
        SL2(q) | PSL2(q) if prime_power_parts(*q).is_some_and(|(p, k)| p == 2 && k >= 2) => {
            let q = *q as u64;
            let h = q / 2;
            (rep(q, q + 1).chain(rep(q - 1, h * (q + 1))).chain(rep(q + 1, h * (q - 1))).collect(), 1)
        }
        GL2(q) if *q > 2 && prime_power_parts(*q).is_some() => {
            let q = *q as u64;
            let v = rep((q - 1) * (q - 1), q * (q + 1) / 2)
                .chain(rep(q * q - 1, q * (q - 1) / 2))
                .chain(rep(q * (q - 1), q + 1))
                .collect();
            (v, q - 1)
        }
        HanakiA(n) if *n >= 2 => {
            let t = 1u64 << n;
            (vec![2 * t; (t - 1) as usize], t)
        }
        HanakiB(p, n) if is_prime(*p as u64) && *n >= 1 => {
            let q = (*p as u64).pow(*n);
            (vec![q * q; (q + 1) as usize], q)
        }
        SemidirectPQ(p, q) if check_pq(*p, *q).is_ok() => {
            let (p, q) = (*p as u64, *q as u64);
            (rep(q, 1).chain(rep(p, q)).collect(), 1)
        }
        Product(a, b) => match (a.as_ref(), b.as_ref()) {
            (g, Cyclic(k)) | (Cyclic(k), g) => {
                let (orders, z) = centralizer_data(g)?;
                let k = *k as u64;
                (orders.iter().map(|x| x * k).collect(), z * k)
            }
            _ => return None,
        },
        _ => return None,
    })
}

/// The closed form that applies to `spec`, if any.
pub fn predicted_for(spec: &FamilySpec) -> Option<Result<PredictedSpectrum>> {
    use FamilySpec::*;
    Some(match spec {
        Dihedral(o) => spec_dihedral(o / 2),
        GenQuaternion(o) => spec_quaternion(o / 4),
        Quasidihedral(n) => spec_quasidihedral(*n),
        M16 | Z4rtimesZ4 | D8centralZ4 | SG16_3 => spec_central_quotient_pp(2, 4),
        F20 => spec_sz2_quotient(1),
        Alternating(4) => spec_fixed(FixedGroup::A4),
        Alternating(5) => spec_psl2(2),
        SL2(3) => spec_fixed(FixedGroup::Sl23),
        SL2(q) | PSL2(q) => match prime_power_parts(*q) {
            Some((2, k)) => spec_psl2(k),
            _ => return None,
        },
        GL2(q) => spec_gl2(*q),
        HanakiA(n) => spec_hanaki_a(*n),
        HanakiB(p, n) => spec_hanaki_b(*p, *n),
        SemidirectPQ(p, q) => spec_pq(*p, *q),
        Product(a, b) => match (a.as_ref(), b.as_ref()) {
            (F20, Cyclic(k)) | (Cyclic(k), F20) => spec_sz2_quotient(*k as u64),
            (g, Cyclic(k)) | (Cyclic(k), g) => {
                let (orders, z) = centralizer_data(g)?;
                spec_ac_times_abelian(&orders, z, *k as u64)
            }
            _ => return None,
        },
        _ => return None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eigs(p: Result<PredictedSpectrum>) -> Vec<(i64, usize)> {
        p.unwrap().spectrum.eigenvalues().to_vec()
    }

    #[test]
    fn ac_examples() {
        assert_eq!(eigs(spec_ac(&[3, 2, 2, 2], 1)), [(1, 1), (0, 3), (-1, 1)]);
        assert_eq!(eigs(spec_ac(&[4, 4, 4], 2)), [(1, 3), (-1, 3)]);
        assert_eq!(eigs(spec_ac(&[5, 4, 4, 4, 4, 4], 1)), [(3, 1), (2, 5), (-1, 13)]);
        assert!(spec_ac(&[3, 1], 1).is_err());
        assert!(spec_ac(&[3], 0).is_err());
    }

    #[test]
    fn ac_times_abelian_examples() {
        let p = spec_ac_times_abelian(&[3, 2, 2, 2], 1, 3).unwrap();
        assert!(p.errata);
        assert_eq!(p.spectrum.eigenvalues(), &[(5, 1), (2, 3), (-1, 11)]);
        assert_eq!(eigs(spec_ac_times_abelian(&[4, 3, 3, 3, 3], 1, 2)), [(5, 1), (3, 4), (-1, 17)]);
        for (orders, z) in [(vec![3u64, 2, 2, 2], 1u64), (vec![8, 4, 4, 4, 4], 2)] {
            assert_eq!(
                spec_ac_times_abelian(&orders, z, 1).unwrap().spectrum,
                spec_ac(&orders, z).unwrap().spectrum
            );
        }
    }

    #[test]
    fn displayed_product_formula_fails_vertex_count() {
        // D6 × Z3: 15 vertices.
        let shown = displayed_ac_times_abelian(&[3, 2, 2, 2], 1, 3);
        assert!(!vertex_count_identity(&shown, 15));
        // A4 × Z2: 22 vertices.
        let shown = displayed_ac_times_abelian(&[4, 3, 3, 3, 3], 1, 2);
        assert!(!vertex_count_identity(&shown, 22));
    }

    #[test]
    fn family_examples() {
        assert_eq!(eigs(spec_quasidihedral(4)), [(5, 1), (1, 4), (-1, 9)]);
        assert_eq!(eigs(spec_quasidihedral(5)), [(13, 1), (1, 8), (-1, 21)]);
        assert!(spec_quasidihedral(3).is_err());
        assert_eq!(eigs(spec_psl2(2)), [(3, 6), (2, 5), (1, 10), (-1, 38)]);
        assert_eq!(eigs(spec_psl2(3)), [(7, 28), (6, 9), (5, 36), (-1, 430)]);
        assert!(spec_psl2(1).is_err());
        assert_eq!(eigs(spec_gl2(3)), [(5, 3), (3, 4), (1, 6), (-1, 33)]);
        assert_eq!(eigs(spec_gl2(4)), [(11, 6), (8, 5), (5, 10), (-1, 156)]);
        assert!(spec_gl2(2).is_err() && spec_gl2(6).is_err());
        assert_eq!(eigs(spec_sz2_quotient(1)), [(3, 1), (2, 5), (-1, 13)]);
        assert_eq!(eigs(spec_sz2_quotient(2)), [(7, 1), (5, 5), (-1, 32)]);
        assert!(spec_sz2_quotient(0).is_err());
        assert_eq!(eigs(spec_hanaki_a(2)), [(3, 3), (-1, 9)]);
        assert_eq!(eigs(spec_hanaki_a(3)), [(7, 7), (-1, 49)]);
        assert!(spec_hanaki_a(1).is_err());
        assert_eq!(eigs(spec_hanaki_b(2, 1)), [(1, 3), (-1, 3)]);
        assert_eq!(eigs(spec_hanaki_b(3, 1)), [(5, 4), (-1, 20)]);
        assert_eq!(spec_hanaki_b(4, 1), Err(Error::NotPrime(4)));
        assert_eq!(eigs(spec_central_quotient_pp(2, 2)), [(1, 3), (-1, 3)]);
        assert_eq!(eigs(spec_central_quotient_pp(2, 4)), [(3, 3), (-1, 9)]);
        assert_eq!(eigs(spec_central_quotient_pp(3, 3)), [(5, 4), (-1, 20)]);
        assert_eq!(eigs(spec_dihedral(3)), [(1, 1), (0, 3), (-1, 1)]);
        assert_eq!(eigs(spec_dihedral(6)), [(3, 1), (1, 3), (-1, 6)]);
        assert_eq!(eigs(spec_dihedral(4)), [(1, 3), (-1, 3)]);
        assert!(spec_dihedral(2).is_err());
        assert_eq!(eigs(spec_quaternion(2)), [(1, 3), (-1, 3)]);
        assert_eq!(eigs(spec_quaternion(4)), [(5, 1), (1, 4), (-1, 9)]);
        assert!(spec_quaternion(1).is_err());
        assert_eq!(eigs(fixed_by_name("A4")), [(2, 1), (1, 4), (-1, 6)]);
        assert_eq!(eigs(fixed_by_name("SL23")), [(3, 4), (1, 3), (-1, 15)]);
        assert!(fixed_by_name("S4").is_err());
    }

    #[test]
    fn pq_correction() {
        let p = spec_pq(3, 7).unwrap();
        assert!(p.errata);
        assert_eq!(p.spectrum.eigenvalues(), &[(5, 1), (1, 7), (-1, 12)]);
        // K_10 ⊔ 11 K_4 on 54 vertices: -1 has multiplicity 9 + 33.
        assert_eq!(eigs(spec_pq(5, 11)), [(9, 1), (3, 11), (-1, 42)]);
        assert_eq!(eigs(spec_pq(2, 3)), [(1, 1), (0, 3), (-1, 1)]);
        assert!(spec_pq(3, 11).is_err());
        assert!(spec_pq(7, 3).is_err());
        for (p, q) in [(3, 7), (5, 11), (3, 13), (2, 5)] {
            assert!(!vertex_count_identity(&displayed_pq(p, q), (p * q - 1) as i64));
        }
    }

    #[test]
    fn consistency_triangles() {
        for m in [3u32, 5, 7, 11, 13] {
            assert_eq!(spec_pq(2, m).unwrap().spectrum, spec_dihedral(m).unwrap().spectrum);
        }
        for p in [2u32, 3, 5, 7] {
            assert_eq!(
                spec_hanaki_b(p, 1).unwrap().spectrum,
                spec_central_quotient_pp(p, p as u64).unwrap().spectrum
            );
        }
        assert_eq!(spec_central_quotient_pp(2, 4).unwrap().spectrum.eigenvalues(), &[(3, 3), (-1, 9)]);
    }

    #[test]
    fn named_formulas_agree_with_ac_formula() {
        let specs = [
            FamilySpec::Dihedral(6),
            FamilySpec::Dihedral(20),
            FamilySpec::GenQuaternion(8),
            FamilySpec::GenQuaternion(28),
            FamilySpec::Quasidihedral(4),
            FamilySpec::Quasidihedral(6),
            FamilySpec::M16,
            FamilySpec::F20,
            FamilySpec::Alternating(4),
            FamilySpec::Alternating(5),
            FamilySpec::SL2(3),
            FamilySpec::PSL2(8),
            FamilySpec::PSL2(16),
            FamilySpec::GL2(3),
            FamilySpec::GL2(9),
            FamilySpec::HanakiA(2),
            FamilySpec::HanakiA(4),
            FamilySpec::HanakiB(2, 2),
            FamilySpec::HanakiB(5, 1),
            FamilySpec::SemidirectPQ(3, 13),
            FamilySpec::product(FamilySpec::F20, FamilySpec::Cyclic(3)),
        ];
        for spec in specs {
            let (orders, z) = centralizer_data(&spec).unwrap();
            let ac = spec_ac(&orders, z).unwrap();
            let named = predicted_for(&spec).unwrap().unwrap();
            assert_eq!(ac.spectrum, named.spectrum, "{spec}");
        }
    }
}
