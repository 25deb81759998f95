use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Error)]
pub enum AfhError {
    #[error("configuration error: {0}")]
    Config(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error(
        "constant-rank violation: rank {rank_a} at w = {witness_a:?} \
         but rank {rank_b} at w = {witness_b:?}"
    )]
    ConstantRankViolation {
        witness_a: Vec<f64>,
        rank_a: usize,
        witness_b: Vec<f64>,
        rank_b: usize,
    },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("solver diverged: {0}")]
    Diverged(String),

    #[error("feasibility iteration failed: residual history {history:?}")]
    Infeasible { history: Vec<f64> },

    #[error("extrapolation outside table range at xi = {0:?}")]
    TableRange(Vec<f64>),

    #[error("incommensurate parameters: {0}")]
    Incommensurate(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, AfhError>;
