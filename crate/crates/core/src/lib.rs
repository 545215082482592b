//! Weak Roman domination, secure domination and their relatives on small graphs.
//!
//! The crate is `no_std` (it needs `alloc`). Graphs have at most
//! [`MAX_VERTICES`] vertices and every vertex set is a single `u64`.
//!
//! * [`graph`]: bitmask graphs, family generators and graph operators.
//! * [`guard`]: guard functions and the domination, Roman, weak Roman and
//!   secure domination predicates.
//! * [`solve`]: exact branch-and-bound solvers.
//! * [`construct`]: constructive upper bounds returning re-verified certificates.
//! * [`bounds`]: inequalities between the invariants, audited against exact values.
//! * [`family`]: closed forms on graph families and the prism conjecture scan.
//! * [`enumerate`]: every small graph up to isomorphism.
#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod bounds;
pub mod construct;
pub mod enumerate;
pub mod error;
pub mod family;
pub mod graph;
pub mod guard;
pub mod set;
pub mod solve;

mod search;

/// Hard cap on graph order.
pub const MAX_VERTICES: usize = 64;

pub use bounds::{audit, audit_product, nordhaus_gaddum, registry, BoundReport, BoundResult};
pub use construct::{CertObject, Certificate, Construction, PeelDecomposition};
pub use error::{ConstructionError, FamilyError, GraphError, ParseError, ProtectionError, SolveError};
pub use graph::{FamilySpec, Graph};
pub use guard::{GuardFunction, MoveWitness};
pub use set::VertexSet;
pub use solve::{Invariant, SolveResult, Solver, SolverLimits, Witness};
