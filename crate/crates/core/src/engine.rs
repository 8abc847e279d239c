//! Solve engines selectable by name.

use crate::error::SolveError;
use crate::fpt::{fpt_chromatic_by_vc, fpt_clique_by_vc, fpt_transversal_by_clique_deletion};
use crate::instance::{ProblemInstance, ProblemKind, Verdict};
use crate::oracle::{decide, TransversalMode};

pub trait Solver: Send + Sync {
    fn id(&self) -> &'static str;

    fn supports(&self, kind: ProblemKind) -> bool;

    fn solve(&self, inst: &ProblemInstance) -> Result<Verdict, SolveError>;
}

/// Exact exponential oracles; handles every kind.
pub struct OracleSolver;

impl Solver for OracleSolver {
    fn id(&self) -> &'static str {
        "oracle"
    }

    fn supports(&self, _kind: ProblemKind) -> bool {
        true
    }

    fn solve(&self, inst: &ProblemInstance) -> Result<Verdict, SolveError> {
        decide(inst)
    }
}

/// Witness-driven fixed-parameter algorithms.
pub struct FptSolver;

impl Solver for FptSolver {
    fn id(&self) -> &'static str {
        "fpt"
    }

    fn supports(&self, kind: ProblemKind) -> bool {
        matches!(
            kind,
            ProblemKind::CliqueByVc
                | ProblemKind::ChromaticByVc
                | ProblemKind::FvsByCliqueDeletion
                | ProblemKind::OctByCliqueDeletion
        )
    }

    fn solve(&self, inst: &ProblemInstance) -> Result<Verdict, SolveError> {
        match inst.kind {
            ProblemKind::CliqueByVc => fpt_clique_by_vc(inst),
            ProblemKind::ChromaticByVc => fpt_chromatic_by_vc(inst),
            ProblemKind::FvsByCliqueDeletion => fpt_transversal_by_clique_deletion(inst, TransversalMode::Fvs),
            ProblemKind::OctByCliqueDeletion => fpt_transversal_by_clique_deletion(inst, TransversalMode::Oct),
            kind => Err(SolveError::Unsupported { engine: self.id().to_string(), kind }),
        }
    }
}

pub struct SolverRegistry {
    entries: Vec<Box<dyn Solver>>,
}

impl Default for SolverRegistry {
    fn default() -> Self {
        SolverRegistry {
            entries: vec![Box::new(OracleSolver), Box::new(FptSolver)],
        }
    }
}

impl SolverRegistry {
    pub fn get(&self, id: &str) -> Option<&dyn Solver> {
        self.entries.iter().find(|s| s.id() == id).map(|s| s.as_ref())
    }

    pub fn ids(&self) -> Vec<&'static str> {
        self.entries.iter().map(|s| s.id()).collect()
    }
}
