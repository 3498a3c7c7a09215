use thiserror::Error;

use crate::graph::Vertex;
use crate::recognition::UnlabeledWitness;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range 1..={order}")]
    VertexOutOfRange { vertex: Vertex, order: usize },

    #[error("loop at vertex {vertex}")]
    Loop { vertex: Vertex },

    #[error("duplicate edge {u}-{v}")]
    DuplicateEdge { u: Vertex, v: Vertex },

    #[error("edge {u}-{v} not present")]
    MissingEdge { u: Vertex, v: Vertex },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("invalid labeling: {0}")]
    InvalidLabeling(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("enumeration cap exceeded: more than {cap} {what}")]
    CapExceeded { what: &'static str, cap: u64 },

    #[error("graph is not a caterpillar")]
    NotCaterpillar {
        witness: Option<Box<UnlabeledWitness>>,
    },

    #[error("inconsistent decomposition: {0}")]
    InconsistentDecomposition(String),

    /// A characterization disagreed with another one. Never expected.
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }

    /// True for errors caused by bad input or parameters (as opposed to caps or
    /// internal failures).
    pub fn is_input_error(&self) -> bool {
        !matches!(
            self,
            Error::CapExceeded { .. } | Error::InconsistentDecomposition(_) | Error::Internal(_)
        )
    }
}
