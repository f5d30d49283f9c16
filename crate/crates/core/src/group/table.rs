use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use rand::rngs::SmallRng;
use rand::{Rng, SeedableRng};

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::family::FamilySpec;

/// A finite group as an explicit Cayley table. Element 0 is the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    order: usize,
    /// Row-major `order × order` multiplication table.
    mul: Vec<u32>,
    inv: Vec<u32>,
    labels: Vec<String>,
    family: Option<FamilySpec>,
}

/// A subset of a group's elements.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementSet {
    members: BitSet,
    size: usize,
}

impl ElementSet {
    pub fn from_bits(members: BitSet) -> Self {
        let size = members.count();
        ElementSet { members, size }
    }

    pub fn from_indices(universe: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut bits = BitSet::new(universe);
        for i in indices {
            bits.insert(i);
        }
        Self::from_bits(bits)
    }

    pub fn len(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter()
    }

    pub fn intersection(&self, other: &ElementSet) -> ElementSet {
        Self::from_bits(self.members.intersection(&other.members))
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn bits(&self) -> &BitSet {
        &self.members
    }
}

/// The distinct centralizers of non-central elements, ordered by least
/// non-central witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralizerFamily {
    pub members: Vec<ElementSet>,
    /// Least non-central element whose centralizer is the member.
    pub witnesses: Vec<usize>,
}

impl CentralizerFamily {
    pub fn sizes(&self) -> Vec<usize> {
        self.members.iter().map(ElementSet::len).collect()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

impl GroupTable {
    /// Assemble a table from raw parts; inverses are derived and all axioms checked.
    pub fn from_parts(mul: Vec<u32>, labels: Vec<String>, family: Option<FamilySpec>) -> Result<Self> {
        let order = labels.len();
        if order == 0 || mul.len() != order * order {
            return Err(Error::Axiom(String::from("table shape does not match label count")));
        }
        if mul.iter().any(|&v| v as usize >= order) {
            return Err(Error::Axiom(String::from("table entry out of range")));
        }
        let mut g = GroupTable { order, mul, inv: Vec::new(), labels, family };
        g.inv = (0..order)
            .map(|x| (0..order).find(|&y| g.op(x, y) == 0).unwrap_or(0) as u32)
            .collect();
        g.check_axioms()?;
        Ok(g)
    }

    /// Trusted constructor for tables produced by closure; inverses derived.
    pub(crate) fn from_closure(mul: Vec<u32>, labels: Vec<String>) -> Self {
        let order = labels.len();
        let mut inv = vec![0u32; order];
        for (x, slot) in inv.iter_mut().enumerate() {
            let row = &mul[x * order..(x + 1) * order];
            *slot = row.iter().position(|&v| v == 0).expect("closure table has inverses") as u32;
        }
        GroupTable { order, mul, inv, labels, family: None }
    }

    pub(crate) fn with_family(mut self, family: FamilySpec) -> Self {
        self.family = Some(family);
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn inverse(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    #[inline]
    pub fn commute(&self, a: usize, b: usize) -> bool {
        self.op(a, b) == self.op(b, a)
    }

    pub fn table(&self) -> &[u32] {
        &self.mul
    }

    pub fn inverses(&self) -> &[u32] {
        &self.inv
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn family(&self) -> Option<&FamilySpec> {
        self.family.as_ref()
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.commute(a, b)))
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut y = x;
        let mut k = 1;
        while y != 0 {
            y = self.op(y, x);
            k += 1;
        }
        k
    }

    /// Latin square, two-sided identity, inverses, associativity.
    ///
    /// Associativity is exhaustive up to order 256 and checked on 10^6
    /// uniformly drawn triples (fixed seed) above that.
    pub fn check_axioms(&self) -> Result<()> {
        let n = self.order;
        let mut seen = vec![0usize; n];
        for (stamp, x) in (1..).zip(0..n) {
            for y in 0..n {
                let v = self.op(x, y);
                if seen[v] == 2 * stamp - 1 {
                    return Err(Error::Axiom(format!("row {x} repeats element {v}")));
                }
                seen[v] = 2 * stamp - 1;
            }
            for y in 0..n {
                let v = self.op(y, x);
                if seen[v] == 2 * stamp {
                    return Err(Error::Axiom(format!("column {x} repeats element {v}")));
                }
                seen[v] = 2 * stamp;
            }
            if self.op(0, x) != x || self.op(x, 0) != x {
                return Err(Error::Axiom(format!("element 0 is not an identity for {x}")));
            }
            if self.op(x, self.inverse(x)) != 0 || self.op(self.inverse(x), x) != 0 {
                return Err(Error::Axiom(format!("wrong inverse for {x}")));
            }
        }
        let assoc = |a: usize, b: usize, c: usize| -> Result<()> {
            if self.op(self.op(a, b), c) != self.op(a, self.op(b, c)) {
                return Err(Error::Axiom(format!("({a}·{b})·{c} ≠ {a}·({b}·{c})")));
            }
            Ok(())
        };
        if n <= 256 {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        assoc(a, b, c)?;
                    }
                }
            }
        } else {
            let mut rng = SmallRng::seed_from_u64(0x5eed_c0de);
            for _ in 0..1_000_000 {
                assoc(rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n))?;
            }
        }
        Ok(())
    }

    pub fn center(&self) -> ElementSet {
        let n = self.order;
        ElementSet::from_indices(n, (0..n).filter(|&x| (0..n).all(|y| self.commute(x, y))))
    }

    pub fn centralizer(&self, x: usize) -> ElementSet {
        let n = self.order;
        ElementSet::from_indices(n, (0..n).filter(|&y| self.commute(x, y)))
    }

    pub fn centralizer_family(&self) -> Result<CentralizerFamily> {
        let z = self.center();
        if z.len() == self.order {
            return Err(Error::AbelianGroup);
        }
        let mut index: BTreeMap<BitSet, usize> = BTreeMap::new();
        let mut members = Vec::new();
        let mut witnesses = Vec::new();
        for x in (0..self.order).filter(|&x| !z.contains(x)) {
            let c = self.centralizer(x);
            if !index.contains_key(c.bits()) {
                index.insert(c.bits().clone(), members.len());
                members.push(c);
                witnesses.push(x);
            }
        }
        Ok(CentralizerFamily { members, witnesses })
    }

    pub fn is_subset_abelian(&self, s: &ElementSet) -> bool {
        let els: Vec<usize> = s.iter().collect();
        els.iter()
            .enumerate()
            .all(|(i, &a)| els[i + 1..].iter().all(|&b| self.commute(a, b)))
    }

    /// Every centralizer of a non-central element is abelian.
    pub fn is_ac_group(&self) -> Result<bool> {
        Ok(self.centralizer_family()?.members.iter().all(|c| self.is_subset_abelian(c)))
    }

    pub fn is_subgroup(&self, s: &ElementSet) -> bool {
        s.contains(0)
            && s.iter().all(|a| s.contains(self.inverse(a)) && s.iter().all(|b| s.contains(self.op(a, b))))
    }

    /// Subgroup generated by the given elements.
    pub fn generated(&self, gens: &[usize]) -> ElementSet {
        let mut bits = BitSet::new(self.order);
        bits.insert(0);
        let mut frontier = vec![0usize];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = self.op(x, g);
                if !bits.contains(y) {
                    bits.insert(y);
                    frontier.push(y);
                }
            }
        }
        ElementSet::from_bits(bits)
    }
}

/// `G × H` with `(x, y)` at index `x·|H| + y`.
pub fn direct_product(g: &GroupTable, h: &GroupTable, cap: usize) -> Result<GroupTable> {
    let (m, k) = (g.order(), h.order());
    let order = m.checked_mul(k).filter(|&o| o <= cap).ok_or(Error::OrderOverCap {
        order: (m as u64).saturating_mul(k as u64),
        cap: cap as u64,
    })?;
    let mut mul = vec![0u32; order * order];
    for a in 0..order {
        let (ag, ah) = (a / k, a % k);
        let row = &mut mul[a * order..(a + 1) * order];
        for (b, slot) in row.iter_mut().enumerate() {
            *slot = (g.op(ag, b / k) * k + h.op(ah, b % k)) as u32;
        }
    }
    let inv = (0..order)
        .map(|a| (g.inverse(a / k) * k + h.inverse(a % k)) as u32)
        .collect();
    let labels = (0..order)
        .map(|a| format!("({},{})", g.label(a / k), h.label(a % k)))
        .collect();
    let family = match (g.family(), h.family()) {
        (Some(a), Some(b)) => Some(FamilySpec::product(a.clone(), b.clone())),
        _ => None,
    };
    Ok(GroupTable { order, mul, inv, labels, family })
}

/// `G / N` for a central subgroup `N`. Cosets are indexed in order of their
/// least member, so the identity coset is 0; labels are those representatives.
pub fn quotient_by_central(g: &GroupTable, n: &ElementSet) -> Result<GroupTable> {
    if !g.is_subgroup(n) {
        return Err(Error::NotSubgroup);
    }
    if !n.is_subset(&g.center()) {
        return Err(Error::NotCentral);
    }
    let mut coset = vec![usize::MAX; g.order()];
    let mut reps = Vec::new();
    for x in 0..g.order() {
        if coset[x] == usize::MAX {
            for m in n.iter() {
                coset[g.op(x, m)] = reps.len();
            }
            reps.push(x);
        }
    }
    let q = reps.len();
    let mut mul = vec![0u32; q * q];
    for (i, &a) in reps.iter().enumerate() {
        for (j, &b) in reps.iter().enumerate() {
            mul[i * q + j] = coset[g.op(a, b)] as u32;
        }
    }
    let labels = reps.iter().map(|&r| String::from(g.label(r))).collect();
    Ok(GroupTable::from_closure(mul, labels))
}
