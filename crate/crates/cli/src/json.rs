//! JSON shapes for tables, graphs, spectra and suite reports.

use std::time::Duration;

use commute_spectra_core::graph::CommutingGraph;
use commute_spectra_core::group::GroupTable;
use commute_spectra_core::poly::IntPolynomial;
use commute_spectra_core::spectrum::Spectrum;
use commute_spectra_core::verify::{CaseRecord, VerificationReport};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableJson {
    pub order: usize,
    /// Row-major: `mul[a * order + b] = a·b`.
    pub mul: Vec<u32>,
    pub identity: usize,
    pub inv: Vec<u32>,
    pub labels: Vec<String>,
    pub family: Option<String>,
}

impl TableJson {
    pub fn from_table(g: &GroupTable) -> Self {
        TableJson {
            order: g.order(),
            mul: g.table().to_vec(),
            identity: g.identity(),
            inv: g.inverses().to_vec(),
            labels: g.labels().to_vec(),
            family: g.family().map(|f| f.to_string()),
        }
    }

    /// Rebuilds and re-validates the table. The stored family string is
    /// not trusted, so the result carries no family.
    pub fn into_table(self) -> commute_spectra_core::Result<GroupTable> {
        if self.labels.len() != self.order || self.identity >= self.order {
            return Err(commute_spectra_core::Error::Axiom("order, labels and identity disagree".into()));
        }
        let mut mul = self.mul;
        let mut labels = self.labels;
        if self.identity != 0 {
            // Tables are normalized to have the identity at index 0.
            let n = self.order;
            let perm: Vec<usize> = std::iter::once(self.identity)
                .chain((0..n).filter(|&x| x != self.identity))
                .collect();
            let mut pos = vec![0usize; n];
            for (new, &old) in perm.iter().enumerate() {
                pos[old] = new;
            }
            let old_mul = mul.clone();
            mul = vec![0; n * n];
            for a in 0..n {
                for b in 0..n {
                    let c = old_mul.get(perm[a] * n + perm[b]).copied().unwrap_or(u32::MAX);
                    mul[a * n + b] = pos.get(c as usize).map_or(u32::MAX, |&p| p as u32);
                }
            }
            labels = perm.iter().map(|&i| labels.get(i).cloned().unwrap_or_default()).collect();
        }
        GroupTable::from_parts(mul, labels, None)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphJson {
    pub vertices: Vec<usize>,
    pub edges: Vec<[usize; 2]>,
}

impl GraphJson {
    /// Vertices and edges are element indices of the group.
    pub fn from_graph(cg: &CommutingGraph) -> Self {
        let v = cg.vertices();
        GraphJson {
            vertices: v.to_vec(),
            edges: cg.graph().edges().map(|(a, b)| [v[a], v[b]]).collect(),
        }
    }
}

fn coeffs(p: &IntPolynomial) -> Vec<Value> {
    p.coeffs()
        .iter()
        .map(|c| match i64::try_from(c) {
            Ok(v) => json!(v),
            Err(_) => json!(c.to_string()),
        })
        .collect()
}

pub fn spectrum_json(s: &Spectrum) -> Value {
    let eigenvalues: Vec<Value> = s
        .eigenvalues()
        .iter()
        .map(|&(value, multiplicity)| json!({"value": value, "multiplicity": multiplicity}))
        .collect();
    json!({
        "eigenvalues": eigenvalues,
        "residual": coeffs(s.residual()),
        "integral": s.is_integral(),
    })
}

fn record_json(r: &CaseRecord, runtime: Option<Duration>) -> Value {
    let opt_spectrum = |s: &Option<Spectrum>| s.as_ref().map_or(Value::Null, spectrum_json);
    let mut v = json!({
        "id": r.id,
        "name": r.name,
        "method": r.method.name(),
        "expected": r.expected,
        "order": r.order,
        "center_order": r.center_order,
        "ac": r.ac,
        "clique_sizes": r.clique_sizes,
        "brute_spectrum": r.brute_spectrum().map_or(Value::Null, spectrum_json),
        "clique_spectrum": opt_spectrum(&r.clique_spectrum),
        "charpoly_spectrum": opt_spectrum(&r.charpoly_spectrum),
        "predicted_spectrum": opt_spectrum(&r.predicted),
        "integral": r.integral,
        "match": r.matched,
        "errata": r.errata,
        "errata_finding": r.errata_finding.as_ref().map(|f| json!({
            "displayed": f.displayed.iter().map(|&(value, multiplicity)| json!({"value": value, "multiplicity": multiplicity})).collect::<Vec<_>>(),
            "displayed_total": f.displayed_total,
            "vertices": f.vertices,
            "displayed_fails_vertex_count": f.displayed_fails_identity,
        })),
        "error": r.error,
    });
    if let Some(t) = runtime {
        v["runtime_ms"] = json!(t.as_secs_f64() * 1e3);
    }
    v
}

/// Report JSON; runtimes are included only when given.
pub fn report_json(report: &VerificationReport, runtimes: Option<&[Duration]>) -> Value {
    let records: Vec<Value> = report
        .records
        .iter()
        .enumerate()
        .map(|(i, r)| record_json(r, runtimes.map(|t| t[i])))
        .collect();
    let s = &report.summary;
    json!({
        "cases": records,
        "summary": {
            "total": s.total,
            "matched": s.matched,
            "mismatched": s.mismatched,
            "errors": s.errors,
        },
    })
}
