use alloc::string::String;

use thiserror::Error;

use crate::MAX_VERTICES;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph order {n} exceeds the vertex cap of {MAX_VERTICES}")]
    TooManyVertices { n: usize },
    #[error("invalid family parameter: {0}")]
    InvalidParameter(&'static str),
    #[error("a cycle needs at least 3 vertices, got {t}")]
    CycleTooShort { t: usize },
    #[error("vertex {v} out of range for a graph of order {n}")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {v}")]
    SelfLoop { v: usize },
    #[error("edge {u}-{v} is not present")]
    EdgeAbsent { u: usize, v: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not a tree")]
    NotATree,
    #[error("graph order {n} is below the required minimum {min}")]
    TooSmall { n: usize, min: usize },
    #[error("graph order {n} exceeds the search limit {limit}")]
    TooLarge { n: usize, limit: usize },
}

/// Errors from the comma-separated text forms of vertex sets and guard functions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("byte {offset}: cannot parse {token:?}")]
    BadToken { offset: usize, token: String },
    #[error("byte {offset}: vertex {vertex} out of range for order {n}")]
    VertexOutOfRange { offset: usize, vertex: usize, n: usize },
    #[error("byte {offset}: guard value {value} is not in 0..=2")]
    BadGuardValue { offset: usize, value: usize },
    #[error("expected {expected} guard values, found {found}")]
    WrongLength { expected: usize, found: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProtectionError {
    #[error("vertex {v} already holds a guard and cannot be attacked")]
    AttackedVertexGuarded { v: usize },
    #[error("vertex {v} out of range for a graph of order {n}")]
    VertexOutOfRange { v: usize, n: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("{what}: graph order {n} exceeds the configured limit {limit}")]
    TooLarge { what: &'static str, n: usize, limit: usize },
    #[error("k must be at least 1")]
    InvalidK,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("construction does not apply: {0}")]
    Inapplicable(&'static str),
    #[error("supplied guard function is not a weak Roman dominating function")]
    NotWeakRoman,
    #[error("supplied guard function has weight {weight} but the optimum is {optimum}")]
    NotOptimal { weight: usize, optimum: usize },
    #[error("internal error: constructed object failed re-verification ({0})")]
    Verification(&'static str),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Solve(#[from] SolveError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("parameters out of range: {0}")]
    OutOfRange(&'static str),
}
