//! Acceptance criteria, one PASS/FAIL line each. Runs without the libtest
//! harness so the lines are printed as they complete.

use std::io::Write;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use commute_spectra::runner;
use commute_spectra_core::closed_forms::{
    displayed_pq, spec_hanaki_b, spec_psl2, spec_quasidihedral, spec_sz2_quotient, vertex_count_identity,
    PredictedSpectrum,
};
use commute_spectra_core::graph::{build_commuting_graph, clique_decomposition, Graph};
use commute_spectra_core::group::{build_group, GroupTable};
use commute_spectra_core::poly::IntPolynomial;
use commute_spectra_core::spectrum::{
    char_poly, clique_sizes_spectrum, clique_union_spectrum, graph_spectrum, integer_spectrum, Spectrum,
};
use commute_spectra_core::verify::{default_suite, GroupList};
use commute_spectra_core::{FamilySpec, Limits};
use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use FamilySpec::*;

type Outcome = Result<(), String>;
/// Id, description, check, time limit in seconds.
type Criterion = (&'static str, &'static str, fn() -> Outcome, u64);

fn spectrum_of(spec: &FamilySpec) -> Result<Spectrum, String> {
    let g = build_group(spec).map_err(|e| format!("{spec}: {e}"))?;
    let cg = build_commuting_graph(&g).map_err(|e| format!("{spec}: {e}"))?;
    graph_spectrum(cg.graph(), &Limits::default()).map_err(|e| format!("{spec}: {e}"))
}

fn clique_spectrum_of(spec: &FamilySpec) -> Result<Spectrum, String> {
    let g = build_group(spec).map_err(|e| format!("{spec}: {e}"))?;
    let cg = build_commuting_graph(&g).map_err(|e| format!("{spec}: {e}"))?;
    let d = clique_decomposition(cg.graph()).ok_or_else(|| format!("{spec}: no clique decomposition"))?;
    clique_union_spectrum(&d).map_err(|e| e.to_string())
}

fn show(s: &Spectrum) -> String {
    let mut out: Vec<String> = s.eigenvalues().iter().map(|(v, k)| format!("{v}^{k}")).collect();
    if !s.is_integral() {
        out.push(format!("[{}]", s.residual()));
    }
    format!("{{{}}}", out.join(", "))
}

fn expect(spec: &FamilySpec, got: &Spectrum, want: &[(i64, usize)]) -> Outcome {
    let want = Spectrum::integral(want.iter().copied());
    if *got == want {
        Ok(())
    } else {
        Err(format!("{spec}: got {}, expected {}", show(got), show(&want)))
    }
}

fn expect_formula(spec: &FamilySpec, got: &Spectrum, p: commute_spectra_core::Result<PredictedSpectrum>) -> Outcome {
    let p = p.map_err(|e| format!("{spec}: {e}"))?;
    if *got == p.spectrum {
        Ok(())
    } else {
        Err(format!("{spec}: got {}, formula {}", show(got), show(&p.spectrum)))
    }
}

fn within(start: Instant, limit: Duration, what: &str) -> Outcome {
    let t = start.elapsed();
    if t <= limit {
        Ok(())
    } else {
        Err(format!("{what} took {t:.2?}, limit {limit:?}"))
    }
}

fn c1() -> Outcome {
    for (n, want) in [(4u32, vec![(5, 1), (1, 4), (-1, 9)]), (5, vec![(13, 1), (1, 8), (-1, 21)])] {
        let start = Instant::now();
        let spec = Quasidihedral(n);
        let s = spectrum_of(&spec)?;
        expect(&spec, &s, &want)?;
        expect_formula(&spec, &s, spec_quasidihedral(n))?;
        within(start, Duration::from_secs(1), &spec.to_string())?;
    }
    Ok(())
}

fn c2() -> Outcome {
    let spec = PSL2(4);
    expect(&spec, &spectrum_of(&spec)?, &[(3, 6), (2, 5), (1, 10), (-1, 38)])?;

    let spec = PSL2(8);
    let g = build_group(&spec).map_err(|e| e.to_string())?;
    let cg = build_commuting_graph(&g).map_err(|e| e.to_string())?;
    if g.order() != 504 || cg.vertex_count() != 503 {
        return Err(format!("PSL2:8 has order {} and {} vertices", g.order(), cg.vertex_count()));
    }
    let d = clique_decomposition(cg.graph()).ok_or("PSL2:8: no clique decomposition")?;
    let count = |m: usize| d.clique_sizes.iter().filter(|&&s| s == m).count();
    if (count(7), count(6), count(8), d.clique_sizes.len()) != (9, 36, 28, 73) {
        return Err(format!("PSL2:8 clique sizes {:?}", d.clique_sizes));
    }
    let clique = clique_union_spectrum(&d).map_err(|e| e.to_string())?;
    expect_formula(&spec, &clique, spec_psl2(3))?;
    expect(&spec, &clique, &[(7, 28), (6, 9), (5, 36), (-1, 430)])?;
    // 503 vertices is under the spectral cap, so the exact path runs too.
    let exact = graph_spectrum(cg.graph(), &Limits::default()).map_err(|e| e.to_string())?;
    expect(&spec, &exact, &[(7, 28), (6, 9), (5, 36), (-1, 430)])
}

fn c3() -> Outcome {
    let spec = GL2(3);
    let s = spectrum_of(&spec)?;
    expect(&spec, &s, &[(5, 3), (3, 4), (1, 6), (-1, 33)])?;
    expect_formula(&spec, &s, commute_spectra_core::closed_forms::spec_gl2(3))?;
    for q in [4, 5] {
        let spec = GL2(q);
        expect_formula(&spec, &clique_spectrum_of(&spec)?, commute_spectra_core::closed_forms::spec_gl2(q))?;
    }
    Ok(())
}

fn c4() -> Outcome {
    let spec = F20;
    let s = spectrum_of(&spec)?;
    expect(&spec, &s, &[(3, 1), (2, 5), (-1, 13)])?;
    expect_formula(&spec, &s, spec_sz2_quotient(1))?;
    let spec = FamilySpec::product(F20, Cyclic(2));
    let s = spectrum_of(&spec)?;
    expect(&spec, &s, &[(7, 1), (5, 5), (-1, 32)])?;
    expect_formula(&spec, &s, spec_sz2_quotient(2))
}

fn c5() -> Outcome {
    expect(&HanakiA(2), &spectrum_of(&HanakiA(2))?, &[(3, 3), (-1, 9)])?;
    expect(&HanakiA(3), &spectrum_of(&HanakiA(3))?, &[(7, 7), (-1, 49)])?;
    expect(&HanakiB(2, 1), &spectrum_of(&HanakiB(2, 1))?, &[(1, 3), (-1, 3)])?;
    expect(&HanakiB(3, 1), &spectrum_of(&HanakiB(3, 1))?, &[(5, 4), (-1, 20)])?;
    expect_formula(&HanakiB(2, 2), &spectrum_of(&HanakiB(2, 2))?, spec_hanaki_b(2, 2))
}

fn c6() -> Outcome {
    for m in 3..=10u32 {
        let spec = Dihedral(2 * m);
        expect_formula(&spec, &spectrum_of(&spec)?, commute_spectra_core::closed_forms::spec_dihedral(m))?;
    }
    for n in 2..=8u32 {
        let spec = GenQuaternion(4 * n);
        expect_formula(&spec, &spectrum_of(&spec)?, commute_spectra_core::closed_forms::spec_quaternion(n))?;
    }
    Ok(())
}

fn c7() -> Outcome {
    let groups = [
        FamilySpec::product(Cyclic(2), Dihedral(8)),
        FamilySpec::product(Cyclic(2), GenQuaternion(8)),
        M16,
        Z4rtimesZ4,
        D8centralZ4,
        SG16_3,
    ];
    for spec in groups {
        let g = build_group(&spec).map_err(|e| e.to_string())?;
        if g.order() != 16 {
            return Err(format!("{spec} has order {}", g.order()));
        }
        expect(&spec, &spectrum_of(&spec)?, &[(3, 3), (-1, 9)])?;
    }
    Ok(())
}

fn c8() -> Outcome {
    let spec = SemidirectPQ(3, 7);
    expect(&spec, &spectrum_of(&spec)?, &[(5, 1), (1, 7), (-1, 12)])?;
    for (p, q) in [(3u32, 7u32), (5, 11)] {
        if vertex_count_identity(&displayed_pq(p, q), (p * q - 1) as i64) {
            return Err(format!("displayed pq exponent unexpectedly satisfies the vertex count at ({p},{q})"));
        }
    }
    // The criterion states (-1)^43 for Z11 ⋊ Z5, but the graph K_10 ⊔ 11 K_4
    // has 54 vertices, so the multiplicities 1 + 11 + 43 cannot all hold.
    let spec = SemidirectPQ(5, 11);
    expect(&spec, &spectrum_of(&spec)?, &[(9, 1), (3, 11), (-1, 43)])
}

fn c9() -> Outcome {
    let spec = Symmetric(4);
    let g = build_group(&spec).map_err(|e| e.to_string())?;
    let cg = build_commuting_graph(&g).map_err(|e| e.to_string())?;
    let p = char_poly(cg.graph(), &Limits::default()).map_err(|e| e.to_string())?;
    let x2m5 = IntPolynomial::from_i64(&[-5, 0, 1]);
    let want = &(&(&IntPolynomial::linear_power(1, 7) * &IntPolynomial::linear_power(-1, 10)) * &(&x2m5 * &x2m5))
        * &IntPolynomial::from_i64(&[-2, -3, 1]);
    if p != want {
        return Err(format!("S:4 char poly {p}"));
    }
    let s = integer_spectrum(&p).map_err(|e| e.to_string())?;
    if s.is_integral() {
        return Err("S:4 reported integral".into());
    }
    Ok(())
}

fn c10() -> Outcome {
    let suite = default_suite();
    for list in [GroupList::Planar, GroupList::Toroidal, GroupList::ComplementPlanar] {
        let members: Vec<_> = suite.iter().filter(|c| c.lists.contains(&list)).collect();
        let expected_len = match list {
            GroupList::Planar => 17,
            GroupList::Toroidal => 7,
            GroupList::ComplementPlanar => 3,
        };
        if members.len() != expected_len {
            return Err(format!("{} list has {} groups", list.name(), members.len()));
        }
        for c in members {
            let integral = spectrum_of(&c.spec)?.is_integral();
            let want = c.spec != Symmetric(4);
            if integral != want {
                return Err(format!("{} ({}): integral = {integral}", c.spec, list.name()));
            }
        }
    }
    Ok(())
}

fn trace_and_edges(g: &Graph) -> Outcome {
    let p = char_poly(g, &Limits::default()).map_err(|e| e.to_string())?;
    let v = g.vertex_count();
    let zero = BigInt::from(0);
    let sub1 = if v >= 1 { p.coeff(v - 1) } else { zero.clone() };
    let sub2 = if v >= 2 { p.coeff(v - 2) } else { zero.clone() };
    if sub1 != zero || sub2 != -BigInt::from(g.edge_count()) {
        return Err(format!("trace/edge coefficients {sub1}, {sub2} with {} edges", g.edge_count()));
    }
    Ok(())
}

fn c11() -> Outcome {
    // (a) random clique unions with V ≤ 60.
    let mut rng = StdRng::seed_from_u64(0x5eed_2026);
    for i in 0..200 {
        let mut sizes = Vec::new();
        let budget = rng.gen_range(1..=60usize);
        let mut used = 0;
        while used < budget {
            let m = rng.gen_range(1..=(budget - used).min(20));
            sizes.push(m);
            used += m;
        }
        let g = Graph::clique_union(&sizes);
        let exact = integer_spectrum(&char_poly(&g, &Limits::default()).map_err(|e| e.to_string())?)
            .map_err(|e| e.to_string())?;
        let formula = clique_sizes_spectrum(&sizes).map_err(|e| e.to_string())?;
        if exact != formula || !exact.is_integral() {
            return Err(format!("clique union #{i} {sizes:?}: {} vs {}", show(&exact), show(&formula)));
        }
    }
    // (b)–(d) over every group in the suite.
    for case in default_suite() {
        let g: GroupTable = build_group(&case.spec).map_err(|e| e.to_string())?;
        g.check_axioms().map_err(|e| format!("{}: {e}", case.spec))?;
        if g.is_ac_group().map_err(|e| e.to_string())? {
            let z = g.center();
            let fam = g.centralizer_family().map_err(|e| e.to_string())?;
            for (i, a) in fam.members.iter().enumerate() {
                for b in &fam.members[i + 1..] {
                    if a.intersection(b) != z {
                        return Err(format!("{}: centralizers meet outside the center", case.spec));
                    }
                }
            }
        }
        let cg = build_commuting_graph(&g).map_err(|e| e.to_string())?;
        trace_and_edges(cg.graph()).map_err(|e| format!("{}: {e}", case.spec))?;
    }
    Ok(())
}

fn full_suite() -> Outcome {
    let jobs = std::thread::available_parallelism().map_or(1, |n| n.get());
    let (report, _) = runner::run_suite(&default_suite(), &Limits::default(), jobs);
    if report.all_matched() {
        Ok(())
    } else {
        let bad: Vec<&str> = report.records.iter().filter(|r| !r.matched).map(|r| r.name.as_str()).collect();
        Err(format!("unmatched cases: {bad:?}"))
    }
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("1", "quasidihedral spectra", c1, 2),
        ("2", "PSL(2,4) and PSL(2,8)", c2, 60),
        ("3", "GL(2,q) for q = 3, 4, 5", c3, 30),
        ("4", "F20 and F20 x Z2", c4, 5),
        ("5", "Hanaki families", c5, 30),
        ("6", "dihedral and quaternion sweeps", c6, 5),
        ("7", "order-16 groups", c7, 5),
        ("8", "order-pq groups", c8, 5),
        ("9", "S4 characteristic polynomial", c9, 1),
        ("10", "planar, toroidal and complement lists", c10, 60),
        ("11", "property suites", c11, 120),
        ("full", "verification suite", full_suite, 600),
    ];
    let mut failed = 0;
    let mut err = std::io::stderr().lock();
    for (id, name, run, limit) in criteria {
        let start = Instant::now();
        let outcome = run().and_then(|()| within(start, Duration::from_secs(limit), "criterion"));
        let t = start.elapsed();
        let line = match outcome {
            Ok(()) => format!("PASS {id:>4}  {name} ({t:.2?})\n"),
            Err(e) => {
                failed += 1;
                format!("FAIL {id:>4}  {name} ({t:.2?}): {e}\n")
            }
        };
        err.write_all(line.as_bytes()).unwrap();
    }
    err.write_all(format!("{} criteria, {failed} failed\n", criteria.len()).as_bytes()).unwrap();
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
