//! Parallel left-invariant vector fields and Berwald-type Randers metrics.
//!
//! A left-invariant field `Q` is parallel iff `nabla_{e_i} Q = 0` for every
//! basis direction, a finite linear condition on the coefficients. A
//! Randers deformation produces a Berwald-type metric exactly when its
//! deformation field is parallel, so existence reduces to the kernel of
//! the stacked covariant-derivative map.

use crate::algebra::MetricLieAlgebra;
use crate::error::{Error, Result};
use crate::levi_civita::ChristoffelTensor;
use crate::linalg::{self, Matrix, PIVOT_REL_TOL};
use crate::randers::RandersMetric;

/// Relative tolerance for the parallelism test, scaled by the connection
/// magnitude and the field norm so it stays meaningful across parameter
/// ranges.
pub const PARALLEL_REL_TOL: f64 = 1e-10;

fn check_pair(alg: &MetricLieAlgebra, ct: &ChristoffelTensor) -> Result<()> {
    if alg.dim() != ct.dim() {
        return Err(Error::DimensionMismatch {
            expected: alg.dim(),
            got: ct.dim(),
        });
    }
    Ok(())
}

/// Worst covariant derivative over basis directions, `max_i |nabla_{e_i} x|`.
pub fn parallel_defect(
    alg: &MetricLieAlgebra,
    ct: &ChristoffelTensor,
    x: &[f64],
) -> Result<f64> {
    check_pair(alg, ct)?;
    alg.check_vec(x)?;
    let mut worst = 0.0f64;
    for i in 0..alg.dim() {
        let d = ct.nabla(&alg.basis_vector(i), x)?;
        worst = worst.max(alg.norm(&d)?);
    }
    Ok(worst)
}

/// True iff `x` is parallel; by linearity in the direction argument it is
/// enough to test basis directions. The zero field is parallel.
pub fn is_parallel(alg: &MetricLieAlgebra, ct: &ChristoffelTensor, x: &[f64]) -> Result<bool> {
    let defect = parallel_defect(alg, ct, x)?;
    let scale = (1.0 + ct.max_abs()) * alg.norm(x)?;
    Ok(defect <= PARALLEL_REL_TOL * scale)
}

/// Gram-orthonormal basis of `{Q : nabla_{e_i} Q = 0 for all i}`, the
/// kernel of the stacked covariant-derivative map.
pub fn parallel_field_basis(
    alg: &MetricLieAlgebra,
    ct: &ChristoffelTensor,
) -> Result<Vec<Vec<f64>>> {
    check_pair(alg, ct)?;
    let n = alg.dim();
    let mut m = Matrix::zeros(n * n, n);
    for i in 0..n {
        for k in 0..n {
            for j in 0..n {
                // (nabla_{e_i} Q)_k coefficient of Q_j
                m.set(i * n + k, j, ct.gamma().get(i, j, k));
            }
        }
    }
    let kernel = linalg::row_reduce(&m, PIVOT_REL_TOL).nullspace;
    Ok(alg.orthonormalize(&kernel))
}

/// Rank of the stacked covariant-derivative map; rank-nullity against
/// [`parallel_field_basis`] holds exactly.
pub fn parallel_map_rank(alg: &MetricLieAlgebra, ct: &ChristoffelTensor) -> Result<usize> {
    check_pair(alg, ct)?;
    let n = alg.dim();
    let mut m = Matrix::zeros(n * n, n);
    for i in 0..n {
        for k in 0..n {
            for j in 0..n {
                m.set(i * n + k, j, ct.gamma().get(i, j, k));
            }
        }
    }
    Ok(linalg::row_reduce(&m, PIVOT_REL_TOL).rank)
}

/// Builds the Berwald-type Randers metric deformed by `x`.
///
/// Succeeds exactly when `x` is parallel and `0 < <x,x> < 1`; the upper
/// bound is strict with no tolerance slack. A zero deformation is rejected
/// rather than treated as a degenerate Randers metric: that case is the
/// underlying Riemannian metric and the curvature module already covers it.
pub fn make_berwald_randers(
    alg: &MetricLieAlgebra,
    ct: &ChristoffelTensor,
    x: &[f64],
) -> Result<RandersMetric> {
    check_pair(alg, ct)?;
    alg.check_vec(x)?;
    let xx = alg.inner(x, x)?;
    if xx == 0.0 {
        return Err(Error::ZeroVector);
    }
    let defect = parallel_defect(alg, ct, x)?;
    let scale = (1.0 + ct.max_abs()) * xx.max(0.0).sqrt();
    if defect > PARALLEL_REL_TOL * scale {
        return Err(Error::NotParallel { defect });
    }
    if xx >= 1.0 {
        return Err(Error::NormTooLarge { norm_squared: xx });
    }
    Ok(RandersMetric::from_parts(
        alg.clone(),
        ct.clone(),
        x.to_vec(),
        xx.sqrt(),
    ))
}
