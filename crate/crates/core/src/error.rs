// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("motif must have between {min} and {max} vertices, got {got}")]
    VertexCount { got: usize, min: usize, max: usize },
    #[error("motif is not connected")]
    Disconnected,
    #[error("tau must lie strictly between 2 and 3, got {0}")]
    TauOutOfRange(String),
    #[error("label {label} is not in the candidate set of mode {mode}")]
    BadLabel { label: String, mode: String },
    #[error("invalid model parameter: {0}")]
    InvalidParam(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("line {line}: {msg}")]
    EdgeList { line: usize, msg: String },
    #[error("unknown motif {0:?}")]
    UnknownMotif(String),
    #[error("insufficient tail: {got} values at or above x_min, need at least {need}")]
    InsufficientTail { got: usize, need: usize },
    #[error("degenerate tail: all tail values equal x_min")]
    DegenerateTail,
    #[error("host graph carries no vertex weights")]
    MissingWeights,
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("invalid experiment config: {0}")]
    Config(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
