//! Multigrid-preconditioned Krylov solvers for indefinite 2D Helmholtz
//! problems discretized on grids with exterior complex scaling layers.

// `!(x > 0.0)` is used on purpose so that NaN is rejected.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod grid;
pub mod harness;
pub mod krylov;
pub mod linalg;
pub mod multigrid;
pub mod operators;
pub mod preconditioners;
pub mod spectral;

pub use error::{Error, Result};
pub use grid::{AxisSpec, EcsGrid1D, TensorGrid2D};
pub use harness::{BenchRow, ExperimentConfig};
pub use krylov::{bicgstab, KrylovConfig, ResidualReference, SolveReport, SolveStatus};
pub use multigrid::{build_hierarchy, Coarsest, Hierarchy, MgConfig, Smoother};
pub use num_complex::Complex64;
pub use operators::{discretize, ModelKind, ModelProblem, OperatorSpec, StencilOperator};
pub use preconditioners::{build_preconditioner, PreconditionerSpec};
pub use spectral::{EigenMethod, SpectrumReport};
