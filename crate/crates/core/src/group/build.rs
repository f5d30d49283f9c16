//! Concrete models for every supported family, flattened to Cayley tables.
//!
//! Each family has a canonical generator list. Elements are numbered by
//! breadth-first closure from the identity under right multiplication by
//! those generators, so element 0 is the identity and tables are identical
//! across runs. Table families are labelled with generator words, matrix
//! families with their entries.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::table::{direct_product, quotient_by_central, ElementSet, GroupTable};
use crate::error::{param, Error, Result};
use crate::family::FamilySpec;
use crate::field::{is_prime, FieldTables, FiniteField};
use crate::Limits;

/// Build the group described by `spec` under the default caps.
pub fn build_group(spec: &FamilySpec) -> Result<GroupTable> {
    build_group_with(spec, &Limits::default())
}

pub fn build_group_with(spec: &FamilySpec, limits: &Limits) -> Result<GroupTable> {
    let order = expected_order(spec)?;
    let cap = limits.max_group_order;
    if order > cap as u64 {
        return Err(Error::OrderOverCap { order, cap: cap as u64 });
    }
    let g = match spec {
        FamilySpec::Cyclic(n) => metacyclic(&Metacyclic { m: *n, k: 1, r: 1, c: 0 }, &["a", "b"]),
        FamilySpec::Dihedral(o) => {
            let m = o / 2;
            metacyclic(&Metacyclic { m, k: 2, r: m - 1, c: 0 }, &["a", "b"])
        }
        FamilySpec::GenQuaternion(o) => {
            let n = o / 4;
            // y^{2n} = 1, x^2 = y^n, x y x^{-1} = y^{-1}
            metacyclic(&Metacyclic { m: 2 * n, k: 2, r: 2 * n - 1, c: n }, &["y", "x"])
        }
        FamilySpec::Quasidihedral(n) => {
            let m = 1u32 << (n - 1);
            metacyclic(&Metacyclic { m, k: 2, r: (1 << (n - 2)) - 1, c: 0 }, &["a", "b"])
        }
        FamilySpec::M16 => metacyclic(&Metacyclic { m: 8, k: 2, r: 5, c: 0 }, &["a", "b"]),
        FamilySpec::Z4rtimesZ4 => metacyclic(&Metacyclic { m: 4, k: 4, r: 3, c: 0 }, &["a", "b"]),
        // b^{-1} a b = a^2, i.e. b a b^{-1} = a^3.
        FamilySpec::F20 => metacyclic(&Metacyclic { m: 5, k: 4, r: 3, c: 0 }, &["a", "b"]),
        FamilySpec::SemidirectPQ(p, q) => {
            let r = (2..*q)
                .find(|&r| pow_mod(r, *p, *q) == 1)
                .expect("p | q-1 guarantees an element of order p");
            metacyclic(&Metacyclic { m: *q, k: *p, r, c: 0 }, &["a", "b"])
        }
        FamilySpec::SG16_3 => sg16_3(),
        FamilySpec::D8centralZ4 => d8_central_z4(limits)?,
        FamilySpec::Symmetric(n) => symmetric(*n as usize),
        FamilySpec::Alternating(n) => alternating(*n as usize),
        FamilySpec::SL2(q) | FamilySpec::PSL2(q) => special_linear(*q, limits)?,
        FamilySpec::GL2(q) => general_linear(*q, limits)?,
        FamilySpec::HanakiA(n) => hanaki_a(*n, limits)?,
        FamilySpec::HanakiB(p, n) => hanaki_b(*p, *n, limits)?,
        FamilySpec::Product(a, b) => {
            let ga = build_group_with(a, limits)?;
            let gb = build_group_with(b, limits)?;
            direct_product(&ga, &gb, cap)?
        }
    };
    debug_assert_eq!(g.order() as u64, order);
    Ok(g.with_family(spec.clone()))
}

/// Order implied by the parameters, after validating their ranges.
pub fn expected_order(spec: &FamilySpec) -> Result<u64> {
    use FamilySpec::*;
    let prime_power = |q: u32, family: &'static str| -> Result<(u32, u32)> {
        prime_power_parts(q).ok_or_else(|| param(family, format!("{q} is not a prime power")))
    };
    Ok(match spec {
        Cyclic(n) => {
            if *n == 0 {
                return Err(param("Z", "order must be positive"));
            }
            *n as u64
        }
        Dihedral(o) => {
            if o % 2 != 0 || *o < 6 {
                return Err(param("D", format!("order {o} must be even and at least 6")));
            }
            *o as u64
        }
        GenQuaternion(o) => {
            if o % 4 != 0 || *o < 8 {
                return Err(param("Q", format!("order {o} must be a multiple of 4 and at least 8")));
            }
            *o as u64
        }
        Quasidihedral(n) => {
            if !(4..=31).contains(n) {
                return Err(param("QD", "order must be a power of two, at least 16"));
            }
            1u64 << n
        }
        M16 | Z4rtimesZ4 | D8centralZ4 | SG16_3 => 16,
        F20 => 20,
        Alternating(n) => {
            if !(1..=6).contains(n) {
                return Err(param("A", "degree must be between 1 and 6"));
            }
            (factorial(*n as u64) / 2).max(1)
        }
        Symmetric(n) => {
            if !(1..=5).contains(n) {
                return Err(param("S", "degree must be between 1 and 5"));
            }
            factorial(*n as u64)
        }
        SL2(q) => {
            prime_power(*q, "SL2")?;
            let q = *q as u64;
            q * (q * q - 1)
        }
        PSL2(q) => {
            let (p, k) = prime_power(*q, "PSL2")?;
            if p != 2 || k < 2 {
                return Err(param("PSL2", format!("q = {q} must be 2^k with k >= 2")));
            }
            let q = *q as u64;
            q * (q * q - 1)
        }
        GL2(q) => {
            prime_power(*q, "GL2")?;
            if *q <= 2 {
                return Err(param("GL2", "q must exceed 2"));
            }
            let q = *q as u64;
            (q * q - 1) * (q * q - q)
        }
        HanakiA(n) => {
            if !(1..=15).contains(n) {
                return Err(param("HA", "n must be between 1 and 15"));
            }
            1u64 << (2 * n)
        }
        HanakiB(p, n) => {
            if !is_prime(*p as u64) {
                return Err(Error::NotPrime(*p as u64));
            }
            if *n == 0 {
                return Err(param("HB", "n must be positive"));
            }
            (*p as u64)
                .checked_pow(3 * n)
                .ok_or_else(|| param("HB", "order overflows"))?
        }
        SemidirectPQ(p, q) => {
            for x in [p, q] {
                if !is_prime(*x as u64) {
                    return Err(Error::NotPrime(*x as u64));
                }
            }
            if (q - 1) % p != 0 {
                return Err(param("PQ", format!("{p} does not divide {q} - 1")));
            }
            *p as u64 * *q as u64
        }
        Product(a, b) => expected_order(a)?
            .checked_mul(expected_order(b)?)
            .ok_or_else(|| param("product", "order overflows"))?,
    })
}

fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

fn pow_mod(b: u32, e: u32, m: u32) -> u32 {
    (0..e).fold(1u64, |acc, _| acc * b as u64 % m as u64) as u32
}

pub(crate) fn prime_power_parts(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut k = 0;
    let mut r = q;
    while r.is_multiple_of(p) {
        r /= p;
        k += 1;
    }
    (r == 1).then_some((p, k))
}

/// Result of breadth-first closure: elements in discovery order, the BFS
/// parent of each non-identity element, and the generator that reached it.
struct Closure<T> {
    elements: Vec<T>,
    parent: Vec<(u32, u8)>,
}

fn close<T: Ord + Clone>(
    identity: T,
    gens: &[T],
    mul: impl Fn(&T, &T) -> T,
) -> (Closure<T>, Vec<u32>) {
    let mut index: BTreeMap<T, u32> = BTreeMap::new();
    let mut elements = vec![identity.clone()];
    let mut parent = vec![(0u32, 0u8)];
    index.insert(identity, 0);
    let mut queue = VecDeque::from([0u32]);
    // right[x * k + g] = index of x · gens[g]
    let mut right: Vec<u32> = Vec::new();
    while let Some(x) = queue.pop_front() {
        for (gi, g) in gens.iter().enumerate() {
            let y = mul(&elements[x as usize], g);
            let next = index.len() as u32;
            let idx = *index.entry(y.clone()).or_insert_with(|| {
                elements.push(y);
                parent.push((x, gi as u8));
                queue.push_back(next);
                next
            });
            right.push(idx);
        }
    }
    (Closure { elements, parent }, right)
}

/// Full Cayley table from right-multiplication by generators:
/// if `y = y'·g` then `x·y = (x·y')·g`.
fn table_from_closure<T>(c: &Closure<T>, right: &[u32], k: usize) -> Vec<u32> {
    let n = c.elements.len();
    let mut mul = vec![0u32; n * n];
    for x in 0..n {
        let row = x * n;
        mul[row] = x as u32;
        for y in 1..n {
            let (py, g) = c.parent[y];
            let xpy = mul[row + py as usize] as usize;
            mul[row + y] = right[xpy * k + g as usize];
        }
    }
    mul
}

fn word_labels<T>(c: &Closure<T>, names: &[&str]) -> Vec<String> {
    let n = c.elements.len();
    let mut words: Vec<Vec<(u8, u32)>> = Vec::with_capacity(n);
    words.push(Vec::new());
    for y in 1..n {
        let (py, g) = c.parent[y];
        let mut w = words[py as usize].clone();
        match w.last_mut() {
            Some((last, e)) if *last == g => *e += 1,
            _ => w.push((g, 1)),
        }
        words.push(w);
    }
    words
        .iter()
        .map(|w| {
            if w.is_empty() {
                return String::from("1");
            }
            let mut s = String::new();
            for &(g, e) in w {
                s.push_str(names[g as usize]);
                if e > 1 {
                    s.push_str(&format!("^{e}"));
                }
            }
            s
        })
        .collect()
}

fn closure_group<T: Ord + Clone>(
    identity: T,
    gens: &[T],
    names: &[&str],
    mul: impl Fn(&T, &T) -> T,
) -> GroupTable {
    let (c, right) = close(identity, gens, mul);
    let table = table_from_closure(&c, &right, gens.len());
    GroupTable::from_closure(table, word_labels(&c, names))
}

fn closure_group_labelled<T: Ord + Clone>(
    identity: T,
    gens: &[T],
    mul: impl Fn(&T, &T) -> T,
    label: impl Fn(&T) -> String,
) -> (GroupTable, usize) {
    let (c, right) = close(identity, gens, mul);
    let table = table_from_closure(&c, &right, gens.len());
    let labels = c.elements.iter().map(label).collect();
    let n = c.elements.len();
    (GroupTable::from_closure(table, labels), n)
}

/// `⟨a, b : a^m = 1, b^k = a^c, b a b^{-1} = a^r⟩`, elements `a^i b^s`.
struct Metacyclic {
    m: u32,
    k: u32,
    r: u32,
    c: u32,
}

fn metacyclic(mc: &Metacyclic, names: &[&str]) -> GroupTable {
    let (m, k) = (mc.m as u64, mc.k as u64);
    // r^s mod m for s < k
    let rpow: Vec<u64> = (0..k)
        .scan(1u64, |acc, _| {
            let v = *acc;
            *acc = *acc * mc.r as u64 % m;
            Some(v)
        })
        .collect();
    let mul = |x: &(u32, u32), y: &(u32, u32)| -> (u32, u32) {
        let (i, s) = (x.0 as u64, x.1 as u64);
        let (j, t) = (y.0 as u64, y.1 as u64);
        let mut a = (i + rpow[s as usize] * j) % m;
        let mut b = s + t;
        if b >= k {
            b -= k;
            a = (a + mc.c as u64) % m;
        }
        (a as u32, b as u32)
    };
    if mc.k == 1 {
        return closure_group((0, 0), &[(1 % mc.m, 0)], names, mul);
    }
    closure_group((0, 0), &[(1 % mc.m, 0), (0, 1)], names, mul)
}

/// SmallGroup(16,3) realized as (Z4 × Z2) ⋊ Z2 with the involution
/// (i, j) ↦ (i, j + i). The generators satisfy a^4 = b^4 = 1,
/// ab = b^{-1}a^{-1} and ab^{-1} = ba^{-1}.
fn sg16_3() -> GroupTable {
    let mul = |x: &(u8, u8, u8), y: &(u8, u8, u8)| {
        let (k, l) = (y.0, (y.1 + y.0 * x.2) % 2);
        ((x.0 + k) % 4, (x.1 + l) % 2, (x.2 + y.2) % 2)
    };
    closure_group((0, 0, 0), &[(1, 0, 0), (1, 0, 1)], &["a", "b"], mul)
}

/// (D8 × Z4) / ⟨(a^2, 2)⟩.
fn d8_central_z4(limits: &Limits) -> Result<GroupTable> {
    let d8 = build_group_with(&FamilySpec::Dihedral(8), limits)?;
    let z4 = build_group_with(&FamilySpec::Cyclic(4), limits)?;
    let prod = direct_product(&d8, &z4, limits.max_group_order)?;
    let z_d8 = d8.center();
    let a2 = z_d8.iter().find(|&x| x != 0).expect("D8 has a central involution");
    let two = (0..4).find(|&y| z4.element_order(y) == 2).expect("Z4 has an involution");
    let n = ElementSet::from_indices(prod.order(), [0, a2 * 4 + two]);
    quotient_by_central(&prod, &n)
}

type Perm = Vec<u8>;

fn perm_mul(x: &Perm, y: &Perm) -> Perm {
    // Apply x first, then y.
    x.iter().map(|&i| y[i as usize]).collect()
}

fn cycle(n: usize, points: &[u8]) -> Perm {
    let mut p: Perm = (0..n as u8).collect();
    for (i, &a) in points.iter().enumerate() {
        p[a as usize] = points[(i + 1) % points.len()];
    }
    p
}

fn symmetric(n: usize) -> GroupTable {
    if n <= 1 {
        return closure_group(vec![0u8; n.max(1)], &[], &[], perm_mul);
    }
    let all: Vec<u8> = (0..n as u8).collect();
    let gens = [cycle(n, &[0, 1]), cycle(n, &all)];
    closure_group(all.clone(), &gens, &["s", "t"], perm_mul)
}

/// Generated by the 3-cycles (1 2 k), k = 3..n. For n = 4 the first two
/// generators are replaced by a = (12)(34), b = (123).
fn alternating(n: usize) -> GroupTable {
    let id: Perm = (0..n.max(1) as u8).collect();
    if n < 3 {
        return closure_group(id, &[], &[], perm_mul);
    }
    if n == 4 {
        let a = perm_mul(&cycle(4, &[0, 1]), &cycle(4, &[2, 3]));
        let b = cycle(4, &[0, 1, 2]);
        return closure_group(id, &[a, b], &["a", "b"], perm_mul);
    }
    let gens: Vec<Perm> = (2..n as u8).map(|k| cycle(n, &[0, 1, k])).collect();
    let names: Vec<String> = (3..=n).map(|k| format!("c{k}")).collect();
    let names: Vec<&str> = names.iter().map(String::as_str).collect();
    closure_group(id, &gens, &names, perm_mul)
}

fn field_for(q: u32, limits: &Limits) -> Result<(FiniteField, FieldTables)> {
    let (p, k) = prime_power_parts(q).ok_or_else(|| param("GF", format!("{q} is not a prime power")))?;
    let f = FiniteField::with_cap(p, k, limits.max_field_order)?;
    let t = FieldTables::new(&f)?;
    Ok((f, t))
}

type Mat2 = [u32; 4];

fn mat_mul(t: &FieldTables, x: &Mat2, y: &Mat2) -> Mat2 {
    let e = |a, b, c, d| t.add(t.mul(a, b), t.mul(c, d));
    [
        e(x[0], y[0], x[1], y[2]),
        e(x[0], y[1], x[1], y[3]),
        e(x[2], y[0], x[3], y[2]),
        e(x[2], y[1], x[3], y[3]),
    ]
}

fn det(t: &FieldTables, x: &Mat2) -> u32 {
    t.sub(t.mul(x[0], x[3]), t.mul(x[1], x[2]))
}

fn mat_label(f: &FiniteField, x: &Mat2) -> String {
    let s = |c: u32| f.format(&f.decode(c));
    format!("[[{},{}],[{},{}]]", s(x[0]), s(x[1]), s(x[2]), s(x[3]))
}

/// Enumerate matrices accepted by `keep`, order them by closure from `gens`,
/// and insist that closure reaches all of them.
fn matrix_group(
    f: &FiniteField,
    t: &FieldTables,
    gens: &[Mat2],
    keep: impl Fn(&Mat2) -> bool,
) -> Result<GroupTable> {
    let q = t.q as u32;
    let mut count = 0usize;
    for code in 0..(q as u64).pow(4) {
        let m = [
            (code % q as u64) as u32,
            (code / q as u64 % q as u64) as u32,
            (code / (q as u64).pow(2) % q as u64) as u32,
            (code / (q as u64).pow(3)) as u32,
        ];
        if keep(&m) {
            count += 1;
        }
    }
    let (g, n) = closure_group_labelled([1, 0, 0, 1], gens, |x, y| mat_mul(t, x, y), |m| mat_label(f, m));
    if n != count {
        return Err(Error::Axiom(format!("generators reach {n} of {count} matrices")));
    }
    Ok(g)
}

/// Transvections [[1,t],[0,1]] and [[1,0],[t,1]] for t in the additive basis.
fn transvections(f: &FiniteField) -> Vec<Mat2> {
    let mut gens = Vec::new();
    for b in f.basis() {
        let t = f.encode(&b);
        gens.push([1, t, 0, 1]);
    }
    for b in f.basis() {
        let t = f.encode(&b);
        gens.push([1, 0, t, 1]);
    }
    gens
}

fn special_linear(q: u32, limits: &Limits) -> Result<GroupTable> {
    let (f, t) = field_for(q, limits)?;
    let gens = transvections(&f);
    matrix_group(&f, &t, &gens, |m| det(&t, m) == 1)
}

fn general_linear(q: u32, limits: &Limits) -> Result<GroupTable> {
    let (f, t) = field_for(q, limits)?;
    let mut gens = transvections(&f);
    gens.push([f.encode(&f.primitive_element()), 0, 0, 1]);
    matrix_group(&f, &t, &gens, |m| det(&t, m) != 0)
}

/// U(a,b)U(a',b') = U(a+a', b+b'+a'ϑ(a)) over GF(2^n).
fn hanaki_a(n: u32, limits: &Limits) -> Result<GroupTable> {
    let f = FiniteField::with_cap(2, n, limits.max_field_order)?;
    let t = FieldTables::new(&f)?;
    let theta: Vec<u32> = f
        .elements()
        .map(|x| f.encode(&f.frobenius(&x).expect("own element")))
        .collect();
    let basis: Vec<u32> = f.basis().iter().map(|b| f.encode(b)).collect();
    let gens: Vec<(u32, u32)> = basis.iter().map(|&b| (b, 0)).chain(basis.iter().map(|&b| (0, b))).collect();
    let mul = |x: &(u32, u32), y: &(u32, u32)| {
        (t.add(x.0, y.0), t.add(t.add(x.1, y.1), t.mul(y.0, theta[x.0 as usize])))
    };
    let s = |c: u32| f.format(&f.decode(c));
    let (g, _) = closure_group_labelled((0, 0), &gens, mul, |u| format!("U({},{})", s(u.0), s(u.1)));
    Ok(g)
}

/// V(a,b,c)V(a',b',c') = V(a+a', b+b'+ca', c+c') over GF(p^n).
fn hanaki_b(p: u32, n: u32, limits: &Limits) -> Result<GroupTable> {
    let f = FiniteField::with_cap(p, n, limits.max_field_order)?;
    let t = FieldTables::new(&f)?;
    let basis: Vec<u32> = f.basis().iter().map(|b| f.encode(b)).collect();
    let mut gens = Vec::new();
    for &b in &basis {
        gens.push((b, 0, 0));
    }
    for &b in &basis {
        gens.push((0, b, 0));
    }
    for &b in &basis {
        gens.push((0, 0, b));
    }
    let mul = |x: &(u32, u32, u32), y: &(u32, u32, u32)| {
        (
            t.add(x.0, y.0),
            t.add(t.add(x.1, y.1), t.mul(x.2, y.0)),
            t.add(x.2, y.2),
        )
    };
    let s = |c: u32| f.format(&f.decode(c));
    let (g, _) = closure_group_labelled((0, 0, 0), &gens, mul, |v| {
        format!("V({},{},{})", s(v.0), s(v.1), s(v.2))
    });
    Ok(g)
}
