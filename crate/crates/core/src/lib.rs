//! Cross-composition gadgets, OR-compositions and polynomial parameter
//! transformations for structural graph parameterizations, with exact
//! oracles that check their OR semantics and parameter bounds.

pub mod acceptance;
pub mod compose;
pub mod engine;
pub mod error;
pub mod fpt;
pub mod gadgets;
pub mod graph;
pub mod instance;
pub mod iso;
pub mod oracle;
pub mod transform;
pub mod verify;

pub use error::*;
pub use graph::{CycleMode, Graph, GraphBuilder, Vertex, VertexSet};
pub use instance::{Answer, Certificate, ProblemInstance, ProblemKind, TriangleSplit, Verdict, Weights};
