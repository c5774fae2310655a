use std::fmt;

use thiserror::Error;

use crate::graph::VertexId;

/// An induced forbidden subgraph found while checking class membership.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// Triangle `x y z`, `p` pendant at `x`, `q` pendant at `y`.
    Bull([VertexId; 5]),
    /// Induced 4-hole, in cycle order.
    C4([VertexId; 4]),
    /// Two independent edges `(a, b)` and `(c, d)`; reported in colouring mode,
    /// where it is the complement of an induced C4.
    TwoK2([VertexId; 4]),
}

impl Witness {
    pub fn kind(&self) -> &'static str {
        match self {
            Witness::Bull(_) => "bull",
            Witness::C4(_) => "C4",
            Witness::TwoK2(_) => "2K2",
        }
    }

    pub fn vertices(&self) -> &[VertexId] {
        match self {
            Witness::Bull(v) => v,
            Witness::C4(v) | Witness::TwoK2(v) => v,
        }
    }

    /// Renders the witness with vertex ids shifted by `offset` (1 for DIMACS numbering).
    pub fn describe(&self, offset: usize) -> String {
        let ids: Vec<String> = self
            .vertices()
            .iter()
            .map(|v| (v + offset).to_string())
            .collect();
        format!("induced {}: {}", self.kind(), ids.join(" "))
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe(0))
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid graph: {0}")]
    Construction(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("graph contains triangle {0:?}")]
    TriangleFound([VertexId; 3]),

    #[error("graph is not connected")]
    NotConnected,

    #[error("vertex {0} is not a cut vertex")]
    NotCutVertex(VertexId),

    #[error("input is outside the class: {0}")]
    ClassViolation(Witness),

    #[error("structure failure: {0}")]
    StructureFailure(String),

    #[error("{what} too large for brute force: {size} > {limit}")]
    TooLarge {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("no in-class graph after {0} attempts")]
    RejectionBudgetExceeded(u64),

    #[error("invalid generator spec: {0}")]
    InvalidSpec(String),
}

pub type Result<T> = std::result::Result<T, Error>;
