use thiserror::Error;

use crate::graph::{EdgeId, VertexId, Violation};

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid ribbon graph: {}", join(.0))]
    Invalid(Vec<Violation>),
    #[error("unknown edge {0}")]
    UnknownEdge(EdgeId),
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("unknown edge label {0:?}")]
    UnknownEdgeLabel(String),
    #[error("malformed arrow presentation: {0}")]
    MalformedPresentation(String),
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("bad twist word: {0}")]
    BadTwist(String),
    #[error("deleted and contracted edge sets overlap")]
    OverlappingSets,
    #[error("graph is not orientable")]
    NotOrientable,
    #[error("graph is not Eulerian: vertex {0} has odd degree")]
    NotEulerian(String),
    #[error("direction is not all-crossing at medial vertex {0}")]
    NotAllCrossing(EdgeId),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error("{requested} edges requested, enumeration is capped at {cap}")]
    TooLarge { requested: usize, cap: usize },
    #[error("unknown property {0:?}")]
    UnknownProperty(String),
}

fn join(v: &[Violation]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("; ")
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
