//! Reproduction suite: build each group, compute its spectrum exactly, and
//! compare with the closed form (or literal characteristic polynomial).
//!
//! Everything here is deterministic and single-threaded; callers that want
//! parallelism run [`evaluate_case`] on independent cases and merge by id.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::closed_forms::{
    displayed_ac_times_abelian, displayed_pq, spec_ac, spec_ac_times_abelian, spec_central_quotient_pp,
    spec_dihedral, spec_fixed, spec_gl2, spec_hanaki_a, spec_hanaki_b, spec_pq, spec_psl2, spec_quasidihedral,
    spec_quaternion, spec_sz2_quotient, vertex_count_identity, FixedGroup, PredictedSpectrum,
};
use crate::error::Result;
use crate::family::FamilySpec;
use crate::graph::{build_commuting_graph, clique_decomposition};
use crate::group::build_group_with;
use crate::poly::IntPolynomial;
use crate::spectrum::{char_poly, clique_union_spectrum, integer_spectrum, Spectrum};
use crate::Limits;

/// A closed form together with its parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FormulaCall {
    Ac { orders: Vec<u64>, z: u64 },
    AcTimesAbelian { orders: Vec<u64>, z: u64, a: u64 },
    Quasidihedral(u32),
    Psl2(u32),
    Gl2(u32),
    Sz2Quotient(u64),
    HanakiA(u32),
    HanakiB(u32, u32),
    CentralQuotientPp(u32, u64),
    Dihedral(u32),
    Quaternion(u32),
    Pq(u32, u32),
    Fixed(FixedGroup),
}

impl FormulaCall {
    pub fn evaluate(&self) -> Result<PredictedSpectrum> {
        match self {
            FormulaCall::Ac { orders, z } => spec_ac(orders, *z),
            FormulaCall::AcTimesAbelian { orders, z, a } => spec_ac_times_abelian(orders, *z, *a),
            FormulaCall::Quasidihedral(n) => spec_quasidihedral(*n),
            FormulaCall::Psl2(k) => spec_psl2(*k),
            FormulaCall::Gl2(q) => spec_gl2(*q),
            FormulaCall::Sz2Quotient(z) => spec_sz2_quotient(*z),
            FormulaCall::HanakiA(n) => spec_hanaki_a(*n),
            FormulaCall::HanakiB(p, n) => spec_hanaki_b(*p, *n),
            FormulaCall::CentralQuotientPp(p, z) => spec_central_quotient_pp(*p, *z),
            FormulaCall::Dihedral(m) => spec_dihedral(*m),
            FormulaCall::Quaternion(n) => spec_quaternion(*n),
            FormulaCall::Pq(p, q) => spec_pq(*p, *q),
            FormulaCall::Fixed(g) => spec_fixed(*g),
        }
    }

    /// The published display for formulas known to be misprinted.
    pub fn displayed(&self) -> Option<Vec<(i64, i64)>> {
        match self {
            FormulaCall::AcTimesAbelian { orders, z, a } => Some(displayed_ac_times_abelian(orders, *z, *a)),
            FormulaCall::Pq(p, q) => Some(displayed_pq(*p, *q)),
            _ => None,
        }
    }

    pub fn describe(&self) -> String {
        match self {
            FormulaCall::Ac { orders, z } => format!("ac({orders:?}, z={z})"),
            FormulaCall::AcTimesAbelian { orders, z, a } => format!("ac_times_abelian({orders:?}, z={z}, a={a})"),
            FormulaCall::Quasidihedral(n) => format!("quasidihedral(n={n})"),
            FormulaCall::Psl2(k) => format!("psl2(k={k})"),
            FormulaCall::Gl2(q) => format!("gl2(q={q})"),
            FormulaCall::Sz2Quotient(z) => format!("sz2_quotient(z={z})"),
            FormulaCall::HanakiA(n) => format!("hanaki_a(n={n})"),
            FormulaCall::HanakiB(p, n) => format!("hanaki_b(p={p}, n={n})"),
            FormulaCall::CentralQuotientPp(p, z) => format!("central_quotient_pp(p={p}, z={z})"),
            FormulaCall::Dihedral(m) => format!("dihedral(m={m})"),
            FormulaCall::Quaternion(n) => format!("quaternion(n={n})"),
            FormulaCall::Pq(p, q) => format!("pq(p={p}, q={q})"),
            FormulaCall::Fixed(FixedGroup::A4) => "fixed(A4)".to_string(),
            FormulaCall::Fixed(FixedGroup::Sl23) => "fixed(SL23)".to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expected {
    Formula(FormulaCall),
    /// Exact characteristic polynomial, constant term first.
    CharPoly(IntPolynomial),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Clique,
    CharPoly,
    Both,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Clique => "clique",
            Method::CharPoly => "charpoly",
            Method::Both => "both",
        }
    }
}

/// Fixed classification lists a group may belong to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupList {
    /// Groups with planar commuting graph.
    Planar,
    /// Groups with toroidal commuting graph.
    Toroidal,
    /// Groups whose commuting graph has planar complement.
    ComplementPlanar,
}

impl GroupList {
    pub fn name(self) -> &'static str {
        match self {
            GroupList::Planar => "planar",
            GroupList::Toroidal => "toroidal",
            GroupList::ComplementPlanar => "complement_planar",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationCase {
    pub id: usize,
    pub spec: FamilySpec,
    pub expected: Expected,
    pub method: Method,
    pub lists: Vec<GroupList>,
    pub expect_integral: bool,
}

/// Outcome of comparing a misprinted display with the vertex-count identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ErrataFinding {
    pub displayed: Vec<(i64, i64)>,
    pub displayed_total: i64,
    pub vertices: i64,
    pub displayed_fails_identity: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseRecord {
    pub id: usize,
    pub name: String,
    pub method: Method,
    pub expected: String,
    pub order: Option<usize>,
    pub center_order: Option<usize>,
    pub ac: Option<bool>,
    pub clique_sizes: Option<Vec<usize>>,
    /// Spectrum from the exact characteristic polynomial.
    pub charpoly_spectrum: Option<Spectrum>,
    /// Spectrum from the clique decomposition.
    pub clique_spectrum: Option<Spectrum>,
    pub predicted: Option<Spectrum>,
    pub integral: Option<bool>,
    pub errata: bool,
    pub errata_finding: Option<ErrataFinding>,
    pub matched: bool,
    pub error: Option<String>,
}

impl CaseRecord {
    fn new(case: &VerificationCase) -> Self {
        let expected = match &case.expected {
            Expected::Formula(f) => f.describe(),
            Expected::CharPoly(p) => format!("charpoly({p})"),
        };
        CaseRecord {
            id: case.id,
            name: case.spec.to_string(),
            method: case.method,
            expected,
            order: None,
            center_order: None,
            ac: None,
            clique_sizes: None,
            charpoly_spectrum: None,
            clique_spectrum: None,
            predicted: None,
            integral: None,
            errata: false,
            errata_finding: None,
            matched: false,
            error: None,
        }
    }

    /// The spectrum computed from the group, preferring the char-poly path.
    pub fn brute_spectrum(&self) -> Option<&Spectrum> {
        self.charpoly_spectrum.as_ref().or(self.clique_spectrum.as_ref())
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Summary {
    pub total: usize,
    pub matched: usize,
    pub mismatched: usize,
    pub errors: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub records: Vec<CaseRecord>,
    pub summary: Summary,
}

impl VerificationReport {
    /// Orders records by case id and tallies the summary.
    pub fn from_records(mut records: Vec<CaseRecord>) -> Self {
        records.sort_by_key(|r| r.id);
        let mut summary = Summary { total: records.len(), ..Summary::default() };
        for r in &records {
            if r.error.is_some() {
                summary.errors += 1;
            } else if r.matched {
                summary.matched += 1;
            } else {
                summary.mismatched += 1;
            }
        }
        VerificationReport { records, summary }
    }

    pub fn all_matched(&self) -> bool {
        self.summary.matched == self.summary.total
    }
}

/// `(x-1)^7 (x+1)^10 (x^2-5)^2 (x^2-3x-2)`: the commuting graph of S4.
pub fn s4_char_poly() -> IntPolynomial {
    let x2m5 = IntPolynomial::from_i64(&[-5, 0, 1]);
    let p = &IntPolynomial::linear_power(1, 7) * &IntPolynomial::linear_power(-1, 10);
    let p = &p * &(&x2m5 * &x2m5);
    &p * &IntPolynomial::from_i64(&[-2, -3, 1])
}

/// The full deterministic case list.
pub fn default_suite() -> Vec<VerificationCase> {
    use FamilySpec::*;
    use GroupList::*;
    let mut cases: Vec<(FamilySpec, Expected, Method, Vec<GroupList>)> = Vec::new();
    let f = Expected::Formula;
    for m in 3..=10u32 {
        let lists = match m {
            3 | 4 => vec![Planar, ComplementPlanar],
            5 | 6 => vec![Planar],
            7 | 8 => vec![Toroidal],
            _ => vec![],
        };
        cases.push((Dihedral(2 * m), f(FormulaCall::Dihedral(m)), Method::Both, lists));
    }
    for n in 2..=8u32 {
        let lists = match n {
            2 => vec![Planar, ComplementPlanar],
            3 => vec![Planar],
            4 => vec![Toroidal],
            _ => vec![],
        };
        cases.push((GenQuaternion(4 * n), f(FormulaCall::Quaternion(n)), Method::Both, lists));
    }
    let order16 = [
        FamilySpec::product(Cyclic(2), Dihedral(8)),
        FamilySpec::product(Cyclic(2), GenQuaternion(8)),
        M16,
        Z4rtimesZ4,
        D8centralZ4,
        SG16_3,
    ];
    for spec in order16 {
        cases.push((spec, f(FormulaCall::CentralQuotientPp(2, 4)), Method::Both, vec![Planar]));
    }
    cases.push((Alternating(4), f(FormulaCall::Fixed(FixedGroup::A4)), Method::Both, vec![Planar]));
    cases.push((Alternating(5), f(FormulaCall::Psl2(2)), Method::Both, vec![Planar]));
    cases.push((Symmetric(4), Expected::CharPoly(s4_char_poly()), Method::CharPoly, vec![Planar]));
    cases.push((SL2(3), f(FormulaCall::Fixed(FixedGroup::Sl23)), Method::Both, vec![Planar]));
    cases.push((F20, f(FormulaCall::Sz2Quotient(1)), Method::Both, vec![Planar]));
    for n in [4, 5] {
        let lists = if n == 4 { vec![Toroidal] } else { vec![] };
        cases.push((Quasidihedral(n), f(FormulaCall::Quasidihedral(n)), Method::Both, lists));
    }
    cases.push((
        FamilySpec::product(Dihedral(6), Cyclic(3)),
        f(FormulaCall::AcTimesAbelian { orders: vec![3, 2, 2, 2], z: 1, a: 3 }),
        Method::Both,
        vec![Toroidal],
    ));
    cases.push((
        FamilySpec::product(Alternating(4), Cyclic(2)),
        f(FormulaCall::AcTimesAbelian { orders: vec![4, 3, 3, 3, 3], z: 1, a: 2 }),
        Method::Both,
        vec![Toroidal],
    ));
    for (p, q) in [(3, 7), (5, 11), (3, 13)] {
        let lists = if (p, q) == (3, 7) { vec![Toroidal] } else { vec![] };
        cases.push((SemidirectPQ(p, q), f(FormulaCall::Pq(p, q)), Method::Both, lists));
    }
    for k in [2, 3] {
        cases.push((PSL2(1 << k), f(FormulaCall::Psl2(k)), Method::Both, vec![]));
    }
    for q in [3, 4, 5] {
        cases.push((GL2(q), f(FormulaCall::Gl2(q)), Method::Both, vec![]));
    }
    for n in [2, 3] {
        cases.push((HanakiA(n), f(FormulaCall::HanakiA(n)), Method::Both, vec![]));
    }
    for (p, n) in [(2, 1), (3, 1), (2, 2)] {
        cases.push((HanakiB(p, n), f(FormulaCall::HanakiB(p, n)), Method::Both, vec![]));
    }
    cases.push((FamilySpec::product(F20, Cyclic(2)), f(FormulaCall::Sz2Quotient(2)), Method::Both, vec![]));

    cases
        .into_iter()
        .enumerate()
        .map(|(id, (spec, expected, method, lists))| {
            let expect_integral = !matches!(spec, Symmetric(4));
            VerificationCase { id, spec, expected, method, lists, expect_integral }
        })
        .collect()
}

/// Runs one case; failures are recorded in the record, never propagated.
pub fn evaluate_case(case: &VerificationCase, limits: &Limits) -> CaseRecord {
    let mut rec = CaseRecord::new(case);
    if let Err(e) = fill_record(case, limits, &mut rec) {
        rec.error = Some(e.to_string());
        rec.matched = false;
    }
    rec
}

fn fill_record(case: &VerificationCase, limits: &Limits, rec: &mut CaseRecord) -> Result<()> {
    let g = build_group_with(&case.spec, limits)?;
    rec.order = Some(g.order());
    rec.center_order = Some(g.center().len());
    rec.ac = Some(g.is_ac_group()?);
    let cg = build_commuting_graph(&g)?;
    let decomposition = clique_decomposition(cg.graph());
    rec.clique_sizes = decomposition.as_ref().map(|d| {
        let mut s = d.clique_sizes.clone();
        s.sort_unstable_by(|a, b| b.cmp(a));
        s
    });

    let mut ok = true;
    let mut poly = None;
    if matches!(case.method, Method::Clique | Method::Both) {
        match &decomposition {
            Some(d) => rec.clique_spectrum = Some(clique_union_spectrum(d)?),
            None => ok = false,
        }
    }
    if matches!(case.method, Method::CharPoly | Method::Both) {
        let p = char_poly(cg.graph(), limits)?;
        rec.charpoly_spectrum = Some(integer_spectrum(&p)?);
        poly = Some(p);
    }
    if let (Some(a), Some(b)) = (&rec.clique_spectrum, &rec.charpoly_spectrum) {
        ok &= a == b;
    }
    let brute = rec.brute_spectrum().cloned();
    rec.integral = brute.as_ref().map(Spectrum::is_integral);
    ok &= rec.integral == Some(case.expect_integral);

    match &case.expected {
        Expected::Formula(call) => {
            let predicted = call.evaluate()?;
            rec.errata = predicted.errata;
            ok &= brute.as_ref() == Some(&predicted.spectrum);
            rec.predicted = Some(predicted.spectrum);
            if let Some(displayed) = call.displayed() {
                let vertices = cg.vertex_count() as i64;
                let fails = !vertex_count_identity(&displayed, vertices);
                rec.errata_finding = Some(ErrataFinding {
                    displayed_total: displayed.iter().map(|t| t.1).sum(),
                    displayed,
                    vertices,
                    displayed_fails_identity: fails,
                });
                ok &= fails;
            }
        }
        Expected::CharPoly(expected) => {
            ok &= poly.as_ref() == Some(expected);
        }
    }
    rec.matched = ok;
    Ok(())
}

/// Sequential run of `cases`.
pub fn run_suite(cases: &[VerificationCase], limits: &Limits) -> VerificationReport {
    VerificationReport::from_records(cases.iter().map(|c| evaluate_case(c, limits)).collect())
}
