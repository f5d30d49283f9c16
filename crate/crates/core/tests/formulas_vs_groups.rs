//! Every closed form agrees with the spectrum computed from the group itself.

use commute_spectra_core::closed_forms::{centralizer_data, predicted_for, spec_ac};
use commute_spectra_core::graph::{build_commuting_graph, clique_decomposition};
use commute_spectra_core::group::build_group;
use commute_spectra_core::spectrum::{clique_union_spectrum, graph_spectrum};
use commute_spectra_core::{FamilySpec, Limits};
use FamilySpec::*;

fn grid() -> Vec<FamilySpec> {
    let mut specs = Vec::new();
    specs.extend((3..=20).map(|m| Dihedral(2 * m)));
    specs.extend((2..=12).map(|n| GenQuaternion(4 * n)));
    specs.extend((4..=7).map(Quasidihedral));
    specs.extend([M16, Z4rtimesZ4, D8centralZ4, SG16_3, F20, Alternating(4), Alternating(5), SL2(3), SL2(4)]);
    specs.extend([(2, 3), (2, 7), (3, 7), (5, 11), (3, 13), (2, 13), (7, 29)].map(|(p, q)| SemidirectPQ(p, q)));
    specs.extend([PSL2(4), PSL2(8), PSL2(16)]);
    specs.extend([GL2(3), GL2(4), GL2(5), GL2(7)]);
    specs.extend([HanakiA(2), HanakiA(3), HanakiA(4)]);
    specs.extend([HanakiB(2, 1), HanakiB(3, 1), HanakiB(5, 1), HanakiB(2, 2), HanakiB(7, 1)]);
    for k in 1..=4 {
        specs.push(FamilySpec::product(F20, Cyclic(k)));
        specs.push(FamilySpec::product(Dihedral(10), Cyclic(k)));
        specs.push(FamilySpec::product(Cyclic(k), GenQuaternion(12)));
    }
    specs.push(FamilySpec::product(Alternating(4), Cyclic(2)));
    specs.push(FamilySpec::product(SL2(3), Cyclic(3)));
    specs
}

#[test]
fn closed_forms_match_computed_spectra() {
    let limits = Limits::default();
    for spec in grid() {
        let g = build_group(&spec).unwrap();
        let cg = build_commuting_graph(&g).unwrap();
        let predicted = predicted_for(&spec).expect("closed form").unwrap();
        let d = clique_decomposition(cg.graph()).expect("AC group");
        let clique = clique_union_spectrum(&d).unwrap();
        assert_eq!(clique, predicted.spectrum, "{spec}");
        if cg.vertex_count() <= limits.max_spectral_vertices {
            assert_eq!(graph_spectrum(cg.graph(), &limits).unwrap(), clique, "{spec}");
        }
    }
}

#[test]
fn centralizer_data_matches_tables() {
    for spec in grid() {
        let Some((mut orders, z)) = centralizer_data(&spec) else { continue };
        let g = build_group(&spec).unwrap();
        let mut sizes: Vec<u64> = g.centralizer_family().unwrap().sizes().iter().map(|&s| s as u64).collect();
        orders.sort_unstable();
        sizes.sort_unstable();
        assert_eq!(orders, sizes, "{spec}");
        assert_eq!(z, g.center().len() as u64, "{spec}");
        assert!(spec_ac(&orders, z).is_ok());
    }
}
