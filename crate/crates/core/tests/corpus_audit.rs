//! Every registry bound over small graph corpora.

use wrdom_core::enumerate::graphs_up_to_isomorphism;
use wrdom_core::{audit, Graph, Solver};

fn check(corpus: &[Graph]) {
    let solver = Solver::default();
    for g in corpus {
        let rep = audit(g, &solver);
        assert!(rep.complete, "incomplete audit on {:?}", g.edges().collect::<Vec<_>>());
        let first = rep.violations().next();
        if let Some(v) = first {
            panic!(
                "{} fails on {:?}: claimed {:?}, actual {:?}",
                v.id,
                g.edges().collect::<Vec<_>>(),
                v.claimed,
                v.actual
            );
        }
    }
}

#[test]
fn all_graphs_up_to_six() {
    for n in 1..=6 {
        check(&graphs_up_to_isomorphism(n, false).unwrap());
    }
}

#[test]
fn connected_graphs_of_order_seven() {
    check(&graphs_up_to_isomorphism(7, true).unwrap());
}
