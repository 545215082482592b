//! JSON shapes for command output. Field names are part of the external interface.

use std::collections::BTreeMap;
use std::fmt::Write;

use serde::Serialize;
use wrdom_core::bounds::NordhausGaddum;
use wrdom_core::bounds::{Applicability, BoundReport, BoundResult};
use wrdom_core::family::ConjectureRow;
use wrdom_core::{Certificate, SolveResult, Witness};

use crate::graph6;
use wrdom_core::Graph;

/// Text form of a solver witness: `0,2` for sets, `2,0,1` for functions,
/// `0,1|2,3` for partitions, `0-1,2-3` for edge sets.
pub fn witness_text(w: &Witness) -> String {
    match w {
        Witness::Set(s) => s.to_string(),
        Witness::Function(f) => f.to_string(),
        Witness::Partition(parts) => parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join("|"),
        Witness::Edges(edges) => edges.iter().map(|(u, v)| format!("{u}-{v}")).collect::<Vec<_>>().join(","),
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct SolveRecord {
    pub invariant_id: String,
    pub value: usize,
    pub witness: String,
    pub nodes_explored: u64,
}

impl From<&SolveResult> for SolveRecord {
    fn from(r: &SolveResult) -> Self {
        SolveRecord {
            invariant_id: r.invariant.id(),
            value: r.value,
            witness: witness_text(&r.witness),
            nodes_explored: r.nodes_explored,
        }
    }
}

/// Per-graph `solve` output; `errors` holds invariants that could not be computed.
#[derive(Debug, Clone, Serialize)]
pub struct SolveReport {
    pub graph6: String,
    pub results: Vec<SolveRecord>,
    pub errors: BTreeMap<String, String>,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct CertificateRecord {
    pub theorem_id: String,
    pub claimed_bound: usize,
    pub object: String,
    pub valid: bool,
    pub trusted_input: bool,
}

impl From<&Certificate> for CertificateRecord {
    fn from(c: &Certificate) -> Self {
        CertificateRecord {
            theorem_id: c.construction.id().to_string(),
            claimed_bound: c.claimed_bound,
            object: c.object.to_string(),
            valid: c.valid,
            trusted_input: c.trusted_input,
        }
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct BoundRecord {
    pub id: String,
    pub kind: String,
    pub applicable: bool,
    /// Why the bound was not evaluated as applicable; absent when it was.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub claimed: Option<i64>,
    pub actual: Option<i64>,
    pub holds: Option<bool>,
    pub slack: Option<i64>,
}

impl From<&BoundResult> for BoundRecord {
    fn from(r: &BoundResult) -> Self {
        let reason = match r.applicability {
            Applicability::Applicable => None,
            Applicability::Inapplicable(why) => Some(why.to_string()),
            Applicability::Undecided(why) => Some(format!("undecided: {why}")),
        };
        BoundRecord {
            id: r.id.to_string(),
            kind: r.kind.id().to_string(),
            applicable: r.applicability.is_applicable(),
            reason,
            claimed: r.claimed,
            actual: r.actual,
            holds: r.holds,
            slack: r.slack,
        }
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ConjectureRecord {
    pub family: String,
    pub t: usize,
    pub exact: usize,
    pub conjectured: usize,
    pub matches: bool,
}

impl ConjectureRecord {
    pub fn new(family: &str, row: &ConjectureRow) -> Self {
        ConjectureRecord {
            family: family.to_string(),
            t: row.t,
            exact: row.exact,
            conjectured: row.conjectured,
            matches: row.matches,
        }
    }
}

/// One graph's audit.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub graph6: String,
    pub invariants: BTreeMap<String, usize>,
    pub bounds: Vec<BoundRecord>,
    pub conjectures: Vec<ConjectureRecord>,
    pub complete: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skipped: Option<String>,
}

impl Report {
    pub fn from_bounds(g: &Graph, b: &BoundReport) -> Self {
        Report {
            graph6: graph6::write(g),
            invariants: b.invariants.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
            bounds: b.results.iter().map(BoundRecord::from).collect(),
            conjectures: Vec::new(),
            complete: b.complete,
            skipped: None,
        }
    }

    pub fn skipped(g: &Graph, why: String) -> Self {
        Report {
            graph6: graph6::write(g),
            invariants: BTreeMap::new(),
            bounds: Vec::new(),
            conjectures: Vec::new(),
            complete: false,
            skipped: Some(why),
        }
    }

    pub fn violations(&self) -> impl Iterator<Item = &BoundRecord> {
        self.bounds.iter().filter(|b| b.applicable && b.holds == Some(false))
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct NgReport {
    pub graph6: String,
    pub order: usize,
    pub gamma_r: usize,
    pub gamma_r_complement: usize,
    pub gamma_s: usize,
    pub gamma_s_complement: usize,
    pub weak_roman_sum: usize,
    pub weak_roman_product: usize,
    pub secure_sum: usize,
    pub secure_product: usize,
    pub refined_side: Option<String>,
    pub bounds: Vec<BoundRecord>,
}

impl NgReport {
    pub fn new(g: &Graph, ng: &NordhausGaddum) -> Self {
        NgReport {
            graph6: graph6::write(g),
            order: ng.order,
            gamma_r: ng.gamma_r,
            gamma_r_complement: ng.gamma_r_complement,
            gamma_s: ng.gamma_s,
            gamma_s_complement: ng.gamma_s_complement,
            weak_roman_sum: ng.weak_roman_sum(),
            weak_roman_product: ng.weak_roman_product(),
            secure_sum: ng.secure_sum(),
            secure_product: ng.secure_product(),
            refined_side: ng.refined_side.map(str::to_string),
            bounds: ng.checks.iter().map(BoundRecord::from).collect(),
        }
    }
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(|| "-".to_string(), |v| v.to_string())
}

/// Text rendering of bound rows, one per line.
pub fn bounds_text(bounds: &[BoundRecord]) -> String {
    let mut out = String::new();
    for b in bounds {
        let status = match (b.applicable, b.holds) {
            (true, Some(true)) => "holds",
            (true, Some(false)) => "VIOLATED",
            (true, None) => "unknown",
            (false, _) => "n/a",
        };
        let _ = write!(
            out,
            "  {:<44} {:<8} claimed={} actual={} slack={}",
            b.id,
            status,
            opt(b.claimed),
            opt(b.actual),
            opt(b.slack)
        );
        if let Some(r) = &b.reason {
            let _ = write!(out, "  ({r})");
        }
        out.push('\n');
    }
    out
}

impl Report {
    pub fn text(&self) -> String {
        let mut out = format!("graph {}", self.graph6);
        if let Some(why) = &self.skipped {
            let _ = writeln!(out, "  skipped: {why}");
            return out;
        }
        let _ = writeln!(out, "  complete={}", self.complete);
        let inv: Vec<String> = self.invariants.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let _ = writeln!(out, "  {}", inv.join(" "));
        out.push_str(&bounds_text(&self.bounds));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use wrdom_core::{FamilySpec, Solver};

    #[test]
    fn solve_record_fields() {
        let p7 = Graph::generate(FamilySpec::Path(7)).unwrap();
        let r = Solver::default().gamma_weak_roman(&p7).unwrap();
        let json = serde_json::to_value(SolveRecord::from(&r)).unwrap();
        assert_eq!(json["invariant_id"], "gamma_r");
        assert_eq!(json["value"], 3);
        assert!(json["witness"].as_str().unwrap().split(',').count() == 7);
        assert!(json.get("nodes_explored").is_some());
    }

    #[test]
    fn report_schema() {
        let c5 = Graph::generate(FamilySpec::Cycle(5)).unwrap();
        let r = Report::from_bounds(&c5, &wrdom_core::audit(&c5, &Solver::default()));
        let json = serde_json::to_value(&r).unwrap();
        for key in ["graph6", "invariants", "bounds", "conjectures", "complete"] {
            assert!(json.get(key).is_some(), "{key}");
        }
        let b = &json["bounds"][0];
        for key in ["id", "applicable", "claimed", "actual", "holds", "slack"] {
            assert!(b.get(key).is_some(), "{key}");
        }
        assert_eq!(r.violations().count(), 0);
    }

    #[test]
    fn witness_forms() {
        let parts = Witness::Partition(vec![
            wrdom_core::VertexSet::from_vertices([0, 1], 4),
            wrdom_core::VertexSet::from_vertices([2, 3], 4),
        ]);
        assert_eq!(witness_text(&parts), "0,1|2,3");
        assert_eq!(witness_text(&Witness::Edges(vec![(0, 1), (2, 3)])), "0-1,2-3");
    }
}
