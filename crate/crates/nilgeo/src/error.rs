//! Crate-wide error type.

use crate::report::ValidationReport;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("gram matrix is not symmetric positive definite")]
    GramNotSpd,

    #[error("malformed algebra document: {0}")]
    MalformedDocument(String),

    #[error("duplicate bracket entry ({i}, {j}, {k})")]
    DuplicateBracket { i: usize, j: usize, k: usize },

    #[error("index {index} out of range 1..={dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("algebra validation failed: {}", .0.failure_summary())]
    ValidationFailed(ValidationReport),

    #[error("parameter {name} must be positive, got {value}")]
    NonPositiveParameter { name: &'static str, value: f64 },

    #[error("vectors are not orthonormal (residual {residual:.3e})")]
    NotOrthonormal { residual: f64 },

    #[error("deformation must satisfy 0 < q1^2 + q2^2 < 1, got {norm_squared}")]
    InadmissibleDeformation { norm_squared: f64 },

    #[error("vector field is not parallel (defect {defect:.3e})")]
    NotParallel { defect: f64 },

    #[error("deformation field must have norm < 1, got squared norm {norm_squared}")]
    NormTooLarge { norm_squared: f64 },

    #[error("deformation field is zero; use the Riemannian metric directly")]
    ZeroVector,

    #[error("pole vector must be nonzero")]
    ZeroPole,

    #[error("finite-difference step {step:.3e} is below the minimum {min:.3e}")]
    StepTooSmall { step: f64, min: f64 },

    #[error("the given vectors span a degenerate plane")]
    DegeneratePlane,

    #[error("flag pole and transverse edge are linearly dependent")]
    DegenerateFlag,
}
