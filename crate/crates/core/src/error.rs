use thiserror::Error;

use crate::graph::Vertex;
use crate::instance::ProblemKind;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("cannot identify an empty vertex set")]
    EmptyIdentification,
    #[error("vertex {0} appears in two identification classes")]
    OverlappingClasses(Vertex),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {reason}")]
pub struct ParseError {
    pub line: usize,
    pub reason: String,
}

/// Every invariant an instance failed, in check order.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("witness invalid: {}", .0.join("; "))]
pub struct WitnessError(pub Vec<String>);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InstanceError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Witness(#[from] WitnessError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("{solver}: graph has {n} vertices, limit is {limit}")]
    SizeLimit { solver: &'static str, n: usize, limit: usize },
    #[error("engine `{engine}` does not handle {kind}")]
    Unsupported { engine: String, kind: ProblemKind },
    #[error("expected a {expected} instance, got {got}")]
    WrongKind { expected: ProblemKind, got: ProblemKind },
    #[error(transparent)]
    Witness(#[from] WitnessError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComposeError {
    #[error("unknown construction `{0}`")]
    UnknownConstruction(String),
    #[error("construction {construction} expects {expected} inputs, got {got}")]
    MixedKinds {
        construction: &'static str,
        expected: ProblemKind,
        got: ProblemKind,
    },
    #[error("cannot compose an empty list of instances")]
    Empty,
    #[error("instances do not share one equivalence class: {0}")]
    ClassMismatch(String),
    #[error("number of instances {0} is not a power of two")]
    NotPowerOfTwo(usize),
    #[error("index {index} out of range 1..=2^{bits}")]
    IndexOutOfRange { index: usize, bits: u32 },
    #[error(transparent)]
    Witness(#[from] WitnessError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransformError {
    #[error("unknown transform `{0}`")]
    UnknownRule(String),
    #[error("rule {rule} expects {expected} input, got {got}")]
    WrongKind {
        rule: &'static str,
        expected: ProblemKind,
        got: ProblemKind,
    },
    #[error("target {target} exceeds vertex count {n}")]
    TargetExceedsVertices { target: u64, n: usize },
    #[error(transparent)]
    Witness(#[from] WitnessError),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BudgetError {
    #[error("division by zero: {0}")]
    DivisionByZero(&'static str),
    #[error("invalid budget parameters: {0}")]
    Invalid(&'static str),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("infeasible generator parameters: {0}")]
    Infeasible(String),
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error(transparent)]
    Compose(#[from] ComposeError),
    #[error(transparent)]
    Transform(#[from] TransformError),
    #[error("i/o: {0}")]
    Io(String),
}

impl From<std::io::Error> for VerifyError {
    fn from(e: std::io::Error) -> Self {
        VerifyError::Io(e.to_string())
    }
}
