//! Graphviz export of commuting graphs.

use std::fmt::Write;

use commute_spectra_core::graph::{clique_decomposition, CommutingGraph};

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        if c == '"' || c == '\\' {
            out.push('\\');
        }
        out.push(c);
    }
    out.push('"');
    out
}

/// Deterministic DOT text. Nodes are element indices labelled `idx:label`;
/// each edge appears once with the lower index first. When the graph is a
/// disjoint union of cliques every clique becomes a cluster.
pub fn export_dot(cg: &CommutingGraph) -> String {
    let g = cg.graph();
    let v = cg.vertices();
    let node = |i: usize| format!("  {} [label={}];\n", v[i], quote(&format!("{}:{}", v[i], cg.vertex_label(i))));
    let mut out = String::from("graph commuting {\n");
    match clique_decomposition(g) {
        Some(d) => {
            let mut members = vec![Vec::new(); d.clique_sizes.len()];
            for (i, &c) in d.assignment.iter().enumerate() {
                members[c].push(i);
            }
            for (c, vs) in members.iter().enumerate() {
                writeln!(out, "  subgraph cluster_{c} {{").unwrap();
                for &i in vs {
                    out.push_str("  ");
                    out.push_str(&node(i));
                }
                out.push_str("  }\n");
            }
        }
        None => (0..g.vertex_count()).for_each(|i| out.push_str(&node(i))),
    }
    for (a, b) in g.edges() {
        writeln!(out, "  {} -- {};", v[a], v[b]).unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use commute_spectra_core::graph::build_commuting_graph;
    use commute_spectra_core::group::build_group;
    use commute_spectra_core::FamilySpec;

    fn dot(spec: FamilySpec) -> (String, usize) {
        let cg = build_commuting_graph(&build_group(&spec).unwrap()).unwrap();
        (export_dot(&cg), cg.edge_count())
    }

    fn counts(text: &str) -> (usize, usize, usize) {
        let nodes = text.lines().filter(|l| l.contains("[label=")).count();
        let edges = text.lines().filter(|l| l.contains(" -- ")).count();
        let clusters = text.lines().filter(|l| l.contains("subgraph cluster_")).count();
        (nodes, edges, clusters)
    }

    #[test]
    fn q8_and_d6() {
        assert_eq!(counts(&dot(FamilySpec::GenQuaternion(8)).0), (6, 3, 3));
        let (text, _) = dot(FamilySpec::Dihedral(6));
        assert_eq!(counts(&text).0, 5);
        assert_eq!(counts(&text).1, 1);
    }

    #[test]
    fn edges_ordered_and_counted() {
        for spec in [FamilySpec::Symmetric(4), FamilySpec::GL2(3), FamilySpec::F20] {
            let (text, e) = dot(spec);
            assert_eq!(counts(&text).1, e);
            for l in text.lines().filter(|l| l.contains(" -- ")) {
                let parts: Vec<usize> = l.trim().trim_end_matches(';').split(" -- ").map(|x| x.parse().unwrap()).collect();
                assert!(parts[0] < parts[1]);
            }
        }
        assert_eq!(dot(FamilySpec::Symmetric(4)).0, dot(FamilySpec::Symmetric(4)).0);
    }

    #[test]
    fn labels_escaped() {
        assert_eq!(quote(r#"a"b\c"#), r#""a\"b\\c""#);
    }
}
