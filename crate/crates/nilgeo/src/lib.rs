//! Numerical engine for left-invariant Riemannian and Randers geometry on
//! metric Lie algebras.
//!
//! Everything happens at the Lie-algebra level: a [`MetricLieAlgebra`]
//! couples structure constants to an inner product, which is the same data
//! as a simply connected Lie group with a left-invariant metric. On top of
//! that the crate computes
//!
//! * the Levi-Civita connection ([`levi_civita`]),
//! * the curvature operator with sectional, Ricci and scalar curvature
//!   ([`curvature`]),
//! * parallel left-invariant fields and Berwald-type Randers metrics
//!   ([`berwald`]),
//! * Randers metric values, the fundamental tensor (closed form plus a
//!   finite-difference oracle) and flag curvature ([`randers`]),
//! * the three standard five-dimensional two-step nilpotent families with
//!   their closed-form geometry as a built-in verification suite
//!   ([`families`]),
//! * a JSON document format for algebras ([`io`]).
//!
//! All types are immutable after construction and all operations are pure
//! functions, so values can be shared freely across threads. Indices are
//! 0-based internally; documents and reports use 1-based basis labels.

// indexed loops are the clearer idiom in the dense tensor kernels, and the
// negated comparisons (`!(x > y)`) are NaN guards, not style accidents
#![allow(clippy::needless_range_loop)]
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod algebra;
pub mod berwald;
pub mod curvature;
pub mod error;
pub mod families;
pub mod io;
pub mod levi_civita;
pub mod linalg;
pub mod randers;
pub mod report;
pub mod rng;

pub use algebra::MetricLieAlgebra;
pub use curvature::{CurvatureTensor, Plane, ScanResult};
pub use error::{Error, Result};
pub use families::FamilyId;
pub use levi_civita::ChristoffelTensor;
pub use randers::{Flag, FlagScanResult, RandersMetric};
pub use report::{Check, ValidationReport};
