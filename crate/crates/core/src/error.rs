//! Error type shared by every module of the crate.

use thiserror::Error;

/// Crate-wide error enumeration.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },

    #[error("matrix is not Hermitian (residual {residual:.3e})")]
    NotHermitian { residual: f64 },

    #[error("matrix is not a projection (residual {residual:.3e})")]
    NotProjection { residual: f64 },

    #[error("dimension mismatch ({left} vs {right})")]
    DimMismatch { left: usize, right: usize },

    #[error("state vector is not normalized (norm {norm})")]
    NotNormalized { norm: f64 },

    #[error("commutator family of {len} projections exceeds the cap of {max}")]
    SetTooLarge { len: usize, max: usize },

    #[error("empty projection family has no ambient dimension")]
    EmptyFamily,

    #[error("syntax error at offset {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("unknown name `{name}` at offset {position}")]
    UnknownName { name: String, position: usize },

    #[error("unbound variable `{name}`")]
    UnboundVariable { name: String },

    #[error("unbounded quantifier `{quantifier} {var}` is not evaluable")]
    UnboundedQuantifier {
        quantifier: &'static str,
        var: String,
    },

    #[error("rank budget exceeded ({rank} > {max})")]
    RankBudgetExceeded { rank: u32, max: u32 },

    #[error("entry budget exceeded ({len} entries > {max})")]
    EntryBudgetExceeded { len: usize, max: usize },

    #[error("level chain is not monotone at index {index}")]
    ChainNotMonotone { index: usize },

    #[error("top level of the chain is not the identity (residual {residual:.3e})")]
    ChainTopNotIdentity { residual: f64 },

    #[error(
        "Borel function output is not real at spectrum point {point} (imaginary part {imag:.3e})"
    )]
    NonRealOutput { point: f64, imag: f64 },

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("invalid tolerance: {0}")]
    InvalidTolerance(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
