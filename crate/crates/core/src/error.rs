use thiserror::Error;

/// Errors raised by grid construction, discretization and the solvers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
    #[error("index {index} out of range (len {len})")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("cannot coarsen: {what} has odd cell count {count}")]
    OddCellCount { what: &'static str, count: usize },
    #[error("zero mesh width in second-derivative stencil")]
    ZeroMeshWidth,
    #[error("singular coordinate: {0}")]
    SingularCoordinate(String),
    #[error("size mismatch: expected {expected}, got {got}")]
    SizeMismatch { expected: usize, got: usize },
    #[error("dense size {size} exceeds cap {cap}")]
    DenseCapExceeded { size: usize, cap: usize },
    #[error("characteristic function is singular at {0}")]
    Pole(String),
    #[error("eigenvalue computation did not converge")]
    EigenNoConvergence,
    #[error("singular matrix")]
    SingularMatrix,
    #[error("zero diagonal entry at unknown {0}")]
    ZeroDiagonal(usize),
    #[error("invalid specification: {0}")]
    InvalidSpec(String),
    #[error("multigrid diverged after {cycles} cycles")]
    MultigridDiverged { cycles: usize },
    #[error("configuration error: {0}")]
    Config(String),
    #[error("{stage}: {source}")]
    Stage {
        stage: &'static str,
        #[source]
        source: Box<Error>,
    },
    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
    #[error("CSV error: {0}")]
    Csv(#[from] csv::Error),
}

impl Error {
    /// Tag the error with the pipeline stage that raised it.
    pub fn in_stage(self, stage: &'static str) -> Error {
        Error::Stage { stage, source: Box::new(self) }
    }

    /// The innermost error, skipping stage tags.
    pub fn root(&self) -> &Error {
        match self {
            Error::Stage { source, .. } => source.root(),
            e => e,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
