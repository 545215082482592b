//! Corpus audits over a bounded worker pool.

use rayon::prelude::*;
use rayon::ThreadPoolBuilder;
use wrdom_core::{audit, audit_product, Graph, Solver};

use crate::report::Report;

/// What to audit each corpus graph as.
#[derive(Debug, Clone)]
pub enum Target {
    /// The graph itself.
    Single,
    /// The Cartesian product of each corpus graph `G` with a fixed `H`.
    ProductWith(Graph),
}

#[derive(Debug, Clone)]
pub struct AuditOptions {
    pub solver: Solver,
    /// Graphs of larger order are skipped and flagged.
    pub limit_n: usize,
    pub workers: usize,
    pub target: Target,
}

#[derive(Debug, Clone)]
pub struct CorpusAudit {
    /// One report per input graph, in input order.
    pub reports: Vec<Report>,
}

impl CorpusAudit {
    pub fn complete(&self) -> bool {
        self.reports.iter().all(|r| r.complete)
    }

    pub fn violation_count(&self) -> usize {
        self.reports.iter().map(|r| r.violations().count()).sum()
    }

    pub fn skipped(&self) -> impl Iterator<Item = &Report> {
        self.reports.iter().filter(|r| r.skipped.is_some())
    }
}

fn audit_one(g: &Graph, opts: &AuditOptions) -> Report {
    let order = match &opts.target {
        Target::Single => g.order(),
        Target::ProductWith(h) => g.order() * h.order(),
    };
    if order > opts.limit_n {
        return Report::skipped(g, format!("order {order} exceeds the limit {}", opts.limit_n));
    }
    let bounds = match &opts.target {
        Target::Single => audit(g, &opts.solver),
        Target::ProductWith(h) => audit_product(g, h, &opts.solver),
    };
    Report::from_bounds(g, &bounds)
}

pub fn audit_corpus(graphs: &[Graph], opts: &AuditOptions) -> Result<CorpusAudit, rayon::ThreadPoolBuildError> {
    let pool = ThreadPoolBuilder::new().num_threads(opts.workers.max(1)).build()?;
    let reports = pool.install(|| graphs.par_iter().map(|g| audit_one(g, opts)).collect());
    Ok(CorpusAudit { reports })
}
