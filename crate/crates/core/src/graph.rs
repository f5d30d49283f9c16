//! Commuting graphs and their decomposition into disjoint cliques.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::group::GroupTable;

/// Simple undirected graph with bit-packed adjacency rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    rows: Vec<BitSet>,
    edge_count: usize,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph { rows: vec![BitSet::new(n); n], edge_count: 0 }
    }

    /// Build from an edge list; duplicate edges are ignored, self-loops rejected.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut g = Self::empty(n);
        for (u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// Disjoint union of complete graphs of the given sizes, in order.
    pub fn clique_union(sizes: &[usize]) -> Self {
        let n = sizes.iter().sum();
        let mut g = Self::empty(n);
        let mut start = 0;
        for &m in sizes {
            for u in start..start + m {
                for v in u + 1..start + m {
                    g.add_edge(u, v);
                }
            }
            start += m;
        }
        g
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "self-loop");
        if !self.rows[u].contains(v) {
            self.rows[u].insert(v);
            self.rows[v].insert(u);
            self.edge_count += 1;
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.rows.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.rows[u].iter()
    }

    pub fn degree(&self, u: usize) -> usize {
        self.rows[u].count()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.vertex_count()).map(|u| self.degree(u)).max().unwrap_or(0)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.vertex_count()).flat_map(move |u| self.rows[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Connected components, each sorted, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = BitSet::new(n);
        let mut out = Vec::new();
        for s in 0..n {
            if seen.contains(s) {
                continue;
            }
            seen.insert(s);
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                for v in self.rows[u].iter() {
                    if !seen.contains(v) {
                        seen.insert(v);
                        comp.push(v);
                    }
                }
                i += 1;
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }
}

/// Γ_G on the non-central elements of `G`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommutingGraph {
    graph: Graph,
    /// Parent element index of each vertex, ascending.
    vertices: Vec<usize>,
    labels: Vec<String>,
}

impl CommutingGraph {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn vertex_label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }
}

pub fn build_commuting_graph(g: &GroupTable) -> Result<CommutingGraph> {
    let z = g.center();
    if z.len() == g.order() {
        return Err(Error::AbelianGroup);
    }
    let vertices: Vec<usize> = (0..g.order()).filter(|&x| !z.contains(x)).collect();
    let mut graph = Graph::empty(vertices.len());
    for (i, &x) in vertices.iter().enumerate() {
        for (j, &y) in vertices.iter().enumerate().skip(i + 1) {
            if g.commute(x, y) {
                graph.add_edge(i, j);
            }
        }
    }
    let labels = vertices.iter().map(|&x| String::from(g.label(x))).collect();
    Ok(CommutingGraph { graph, vertices, labels })
}

/// Partition of a graph into vertex-disjoint complete subgraphs with no
/// edges between them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueDecomposition {
    /// Size of each clique, indexed by clique id.
    pub clique_sizes: Vec<usize>,
    /// Clique id of every vertex; ids follow the least vertex of each clique.
    pub assignment: Vec<usize>,
}

impl CliqueDecomposition {
    /// Adjacency implied by the assignment.
    pub fn to_graph(&self) -> Graph {
        let n = self.assignment.len();
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if self.assignment[u] == self.assignment[v] {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }
}

/// `Some` iff every connected component is complete.
pub fn clique_decomposition(g: &Graph) -> Option<CliqueDecomposition> {
    let mut assignment = vec![0; g.vertex_count()];
    let mut clique_sizes = Vec::new();
    for comp in g.components() {
        let m = comp.len();
        if comp.iter().any(|&u| g.degree(u) != m - 1) {
            return None;
        }
        for &u in &comp {
            assignment[u] = clique_sizes.len();
        }
        clique_sizes.push(m);
    }
    Some(CliqueDecomposition { clique_sizes, assignment })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::build_group;
    use crate::FamilySpec;

    fn cg(spec: FamilySpec) -> CommutingGraph {
        build_commuting_graph(&build_group(&spec).unwrap()).unwrap()
    }

    fn sorted(mut v: Vec<usize>) -> Vec<usize> {
        v.sort_unstable();
        v
    }

    /// Commuting pairs among non-central elements, counted straight from the table.
    fn brute_edges(spec: FamilySpec) -> (usize, usize) {
        let t = build_group(&spec).unwrap();
        let n = t.order();
        let central: Vec<bool> = (0..n).map(|x| (0..n).all(|y| t.commute(x, y))).collect();
        let vs: Vec<usize> = (0..n).filter(|&x| !central[x]).collect();
        let mut e = 0;
        for i in 0..vs.len() {
            for j in i + 1..vs.len() {
                if t.commute(vs[i], vs[j]) {
                    e += 1;
                }
            }
        }
        (vs.len(), e)
    }

    #[test]
    fn worked_vertex_and_edge_counts() {
        let d6 = cg(FamilySpec::Dihedral(6));
        assert_eq!((d6.vertex_count(), d6.edge_count()), (5, 1));
        assert_eq!(brute_edges(FamilySpec::Dihedral(6)), (5, 1));
        let q8 = cg(FamilySpec::GenQuaternion(8));
        assert_eq!((q8.vertex_count(), q8.edge_count()), (6, 3));
        let a4 = cg(FamilySpec::Alternating(4));
        assert_eq!((a4.vertex_count(), a4.edge_count()), (11, 7));
    }

    #[test]
    fn abelian_input_rejected() {
        let z = build_group(&FamilySpec::Cyclic(5)).unwrap();
        assert_eq!(build_commuting_graph(&z), Err(Error::AbelianGroup));
    }

    #[test]
    fn decompositions() {
        let q8 = clique_decomposition(cg(FamilySpec::GenQuaternion(8)).graph()).unwrap();
        assert_eq!(q8.clique_sizes, [2, 2, 2]);
        let sl = clique_decomposition(cg(FamilySpec::SL2(3)).graph()).unwrap();
        assert_eq!(sorted(sl.clique_sizes), [2, 2, 2, 4, 4, 4, 4]);
    }

    #[test]
    fn s4_has_incomplete_component() {
        let s4 = cg(FamilySpec::Symmetric(4));
        let g = s4.graph();
        // Oracle: a path u - v - w with u, w non-adjacent.
        let n = g.vertex_count();
        let witness = (0..n).any(|v| {
            let nb: Vec<usize> = g.neighbors(v).collect();
            nb.iter().any(|&u| nb.iter().any(|&w| u != w && !g.adjacent(u, w)))
        });
        assert!(witness);
        assert!(clique_decomposition(g).is_none());
    }

    #[test]
    fn degree_is_centralizer_size_minus_center_minus_one() {
        for spec in [FamilySpec::Symmetric(4), FamilySpec::GL2(3), FamilySpec::D8centralZ4] {
            let t = build_group(&spec).unwrap();
            let z = t.center().len();
            let c = build_commuting_graph(&t).unwrap();
            let mut degree_sum = 0;
            for (v, &x) in c.vertices().iter().enumerate() {
                let d = c.graph().degree(v);
                assert_eq!(d, t.centralizer(x).len() - z - 1);
                degree_sum += d;
            }
            assert_eq!(degree_sum, 2 * c.edge_count());
        }
    }

    #[test]
    fn ac_decomposition_matches_centralizers_and_reconstructs() {
        for spec in [FamilySpec::Quasidihedral(4), FamilySpec::F20, FamilySpec::GL2(3), FamilySpec::HanakiB(2, 2)] {
            let t = build_group(&spec).unwrap();
            let z = t.center().len();
            let c = build_commuting_graph(&t).unwrap();
            let d = clique_decomposition(c.graph()).unwrap();
            let expected: Vec<usize> =
                t.centralizer_family().unwrap().sizes().iter().map(|s| s - z).collect();
            assert_eq!(sorted(d.clique_sizes.clone()), sorted(expected));
            assert_eq!(d.clique_sizes.iter().sum::<usize>(), c.vertex_count());
            assert_eq!(&d.to_graph(), c.graph());
        }
    }

    #[test]
    fn clique_union_builder() {
        let g = Graph::clique_union(&[3, 1, 2]);
        assert_eq!(g.edge_count(), 4);
        let d = clique_decomposition(&g).unwrap();
        assert_eq!(d.clique_sizes, [3, 1, 2]);
        assert_eq!(d.assignment, [0, 0, 0, 1, 2, 2]);
    }
}
