//! Closed-form values on graph families, and the prism conjecture scan.

use alloc::vec::Vec;

use crate::error::{FamilyError, GraphError, SolveError};
use crate::graph::{FamilySpec, Graph};
use crate::solve::{Invariant, Solver};

/// A family instance with a known closed form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    /// `K_t □ H` with `2 ≤ n(H) ≤ t`.
    CompleteTimes {
        t: usize,
        h: Graph,
    },
    /// `K_t □ C_{t′}`.
    CompleteTimesCycle {
        t: usize,
        t_prime: usize,
    },
    /// `K_t □ P_{t′}`.
    CompleteTimesPath {
        t: usize,
        t_prime: usize,
    },
    /// `K_t □ K_{1,t′−1}`.
    CompleteTimesStar {
        t: usize,
        t_prime: usize,
    },
    /// `G □ K_{1,t−1}` with `t > 2n(G) ≥ 4`.
    GraphTimesStar {
        g: Graph,
        t: usize,
    },
    /// `K_{1,t−1} □ K_{1,t−1}`.
    StarSquare(usize),
    /// `P_t □ K_2`.
    Ladder(usize),
}

fn gen(f: FamilySpec) -> Result<Graph, GraphError> {
    Graph::generate(f)
}

impl Family {
    pub fn graph(&self) -> Result<Graph, GraphError> {
        match self {
            Family::Path(t) => gen(FamilySpec::Path(*t)),
            Family::Cycle(t) => gen(FamilySpec::Cycle(*t)),
            Family::CompleteTimes { t, h } => gen(FamilySpec::Complete(*t))?.cartesian_product(h),
            Family::CompleteTimesCycle { t, t_prime } => {
                gen(FamilySpec::Complete(*t))?.cartesian_product(&gen(FamilySpec::Cycle(*t_prime))?)
            }
            Family::CompleteTimesPath { t, t_prime } => {
                gen(FamilySpec::Complete(*t))?.cartesian_product(&gen(FamilySpec::Path(*t_prime))?)
            }
            Family::CompleteTimesStar { t, t_prime } => {
                gen(FamilySpec::Complete(*t))?.cartesian_product(&gen(FamilySpec::Star(*t_prime))?)
            }
            Family::GraphTimesStar { g, t } => g.cartesian_product(&gen(FamilySpec::Star(*t))?),
            Family::StarSquare(t) => {
                let s = gen(FamilySpec::Star(*t))?;
                s.cartesian_product(&s)
            }
            Family::Ladder(t) => gen(FamilySpec::Path(*t))?.cartesian_product(&gen(FamilySpec::Complete(2))?),
        }
    }
}

/// The closed-form value of `inv` on `family`, for the parameter ranges where one is known.
pub fn family_value(inv: Invariant, family: &Family) -> Result<usize, FamilyError> {
    use Invariant::{Domination, Roman, Secure, WeakRoman};
    let out = |why| Err(FamilyError::OutOfRange(why));
    match (family, inv) {
        (Family::Path(t) | Family::Cycle(t), WeakRoman | Secure) => {
            if *t < 4 {
                return out("paths and cycles need t ≥ 4");
            }
            Ok((3 * t).div_ceil(7))
        }
        (Family::CompleteTimes { t, h }, WeakRoman | Secure) => {
            if h.order() < 2 || h.order() > *t {
                return out("K_t □ H needs 2 ≤ n(H) ≤ t");
            }
            Ok(h.order())
        }
        (Family::CompleteTimesCycle { t, t_prime } | Family::CompleteTimesPath { t, t_prime }, WeakRoman | Secure) => {
            if *t < 3 || *t_prime < 3 {
                return out("K_t □ C_t′ and K_t □ P_t′ need t, t′ ≥ 3");
            }
            Ok(*t_prime)
        }
        (Family::CompleteTimesStar { t, t_prime }, WeakRoman | Secure) => {
            if *t < 2 || *t_prime < 2 {
                return out("K_t □ K_{1,t′−1} needs t, t′ ≥ 2");
            }
            Ok(if inv == WeakRoman { (2 * t).min(*t_prime) } else { *t_prime })
        }
        (Family::GraphTimesStar { g, t }, WeakRoman) => {
            let n = g.order();
            if 2 * n < 4 || *t <= 2 * n {
                return out("G □ K_{1,t−1} needs t > 2n(G) ≥ 4");
            }
            Ok(2 * n)
        }
        (Family::StarSquare(t), WeakRoman | Secure) => {
            if *t < 3 {
                return out("star squares need t ≥ 3");
            }
            Ok(2 * (t - 1))
        }
        (Family::Ladder(t), Domination) if *t >= 1 => Ok((t + 1).div_ceil(2)),
        (Family::Ladder(t), Roman) if *t >= 1 => Ok(t + 1),
        _ => out("no closed form for this invariant on this family"),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PrismFamily {
    /// `P_t □ K_2`, `t ≥ 2`.
    Path,
    /// `C_t □ K_2`, `t ≥ 3`.
    Cycle,
}

impl PrismFamily {
    pub fn first_t(self) -> usize {
        match self {
            PrismFamily::Path => 2,
            PrismFamily::Cycle => 3,
        }
    }

    /// The conjectured secure domination number.
    pub fn conjectured(self, t: usize) -> usize {
        match self {
            PrismFamily::Path => (3 * t + 1).div_ceil(4),
            PrismFamily::Cycle => (3 * t).div_ceil(4) + usize::from(t % 8 == 4),
        }
    }

    pub fn graph(self, t: usize) -> Result<Graph, GraphError> {
        let base = match self {
            PrismFamily::Path => gen(FamilySpec::Path(t))?,
            PrismFamily::Cycle => gen(FamilySpec::Cycle(t))?,
        };
        base.cartesian_product(&gen(FamilySpec::Complete(2))?)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConjectureRow {
    pub t: usize,
    pub exact: usize,
    pub conjectured: usize,
    pub matches: bool,
}

/// Exact `γ_s` of the prism family for every `t` from the first valid one up to `t_max`,
/// next to the conjectured value. Mismatches are reported, never raised.
pub fn conjecture_scan(family: PrismFamily, t_max: usize, solver: &Solver) -> Result<Vec<ConjectureRow>, SolveError> {
    if 2 * t_max > solver.limits.search {
        return Err(SolveError::TooLarge { what: "conjecture scan", n: 2 * t_max, limit: solver.limits.search });
    }
    (family.first_t()..=t_max)
        .map(|t| {
            let g = family.graph(t).expect("prism order is within the vertex cap");
            let exact = solver.gamma_secure(&g)?.value;
            let conjectured = family.conjectured(t);
            Ok(ConjectureRow { t, exact, conjectured, matches: exact == conjectured })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formula_examples() {
        assert_eq!(family_value(Invariant::WeakRoman, &Family::Path(10)), Ok(5));
        assert_eq!(family_value(Invariant::WeakRoman, &Family::CompleteTimesStar { t: 3, t_prime: 8 }), Ok(6));
        assert_eq!(family_value(Invariant::Secure, &Family::StarSquare(4)), Ok(6));
        assert_eq!(family_value(Invariant::Domination, &Family::Ladder(5)), Ok(3));
        assert_eq!(family_value(Invariant::Roman, &Family::Ladder(5)), Ok(6));
    }

    #[test]
    fn out_of_range_parameters() {
        assert!(family_value(Invariant::WeakRoman, &Family::Path(3)).is_err());
        assert!(family_value(Invariant::Secure, &Family::StarSquare(2)).is_err());
        let k2 = Graph::generate(FamilySpec::Complete(2)).unwrap();
        assert!(family_value(Invariant::WeakRoman, &Family::GraphTimesStar { g: k2.clone(), t: 4 }).is_err());
        assert_eq!(family_value(Invariant::WeakRoman, &Family::GraphTimesStar { g: k2, t: 5 }), Ok(4));
        assert!(family_value(Invariant::Chromatic, &Family::Path(5)).is_err());
    }

    #[test]
    fn conjectured_values() {
        assert_eq!(PrismFamily::Path.conjectured(2), 2);
        assert_eq!(PrismFamily::Path.conjectured(7), 6);
        assert_eq!(PrismFamily::Cycle.conjectured(4), 4);
        assert_eq!(PrismFamily::Cycle.conjectured(5), 4);
    }

    #[test]
    fn short_scan() {
        let rows = conjecture_scan(PrismFamily::Path, 5, &Solver::default()).unwrap();
        assert_eq!(rows.len(), 4);
        assert_eq!(rows[0], ConjectureRow { t: 2, exact: 2, conjectured: 2, matches: true });
        assert!(conjecture_scan(PrismFamily::Cycle, 40, &Solver::default()).is_err());
    }
}
