use thiserror::Error;

use crate::graph::GraphClass;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("empty input")]
    EmptyGraph,
    #[error("line graph undefined for an edgeless graph")]
    LineGraphUndefined,
    #[error("edge {edge} is a loop at vertex {vertex}")]
    Loop { edge: usize, vertex: usize },
    #[error("{kind} id {id} out of range (have {len})")]
    OutOfRange {
        kind: &'static str,
        id: usize,
        len: usize,
    },
    #[error("selection mixes vertices and edges")]
    MixedSelection,
    #[error("graph is not in the admissible class (classified as {0})")]
    NotAdmissible(GraphClass),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("parse error at line {line}, offset {offset}: {message}")]
    Parse {
        line: usize,
        offset: usize,
        message: String,
    },
    #[error("graph6 cannot encode a multigraph; use the edge-list format")]
    NotSimple,
    #[error("unknown suite `{name}`; valid suites: {valid}")]
    UnknownSuite { name: String, valid: String },
    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
