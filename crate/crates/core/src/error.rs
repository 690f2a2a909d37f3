use thiserror::Error;

use crate::rational::Q;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("half-edge pair {0:?} is not an edge of the graph")]
    NotAnEdge((usize, usize)),
    #[error("index {index} out of range (length {len})")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("degenerate lattice: {0}")]
    DegenerateLattice(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("curves are not disjoint")]
    NotDisjoint,
    #[error("curve is not null-homologous: class {0:?}")]
    NotNullHomologous(Vec<String>),
    #[error("no generic projection direction found after {0} attempts")]
    ProjectionDegenerate(usize),
    #[error("tolerance {tolerance} not reached within the refinement cap (last change {last_change})")]
    ToleranceUnachievable { tolerance: f64, last_change: f64 },
    #[error("transversality failure in [{lo}, {hi}]")]
    /// Bracket endpoints as "p/q".
    TransversalityFailure { lo: String, hi: String },
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
    #[error("perturbation failed: minimal squared separation {min_separation_sq} after {attempts} attempts")]
    PerturbationFailed { min_separation_sq: Q, attempts: usize },
    #[error("missing forgetful metadata at {0}")]
    MissingMetadata(String),
    #[error("input is not a cycle: {0}")]
    NonCycle(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Process exit status for the command-line front end: 2 for geometric
    /// genericity failures, 3 for a degenerate lattice, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::TransversalityFailure { .. }
            | Error::NotDisjoint
            | Error::ProjectionDegenerate(_)
            | Error::PerturbationFailed { .. } => 2,
            Error::DegenerateLattice(_) => 3,
            _ => 1,
        }
    }

    pub fn transversality(lo: &Q, hi: &Q) -> Self {
        Error::TransversalityFailure { lo: crate::rational::format_q(lo), hi: crate::rational::format_q(hi) }
    }
}
