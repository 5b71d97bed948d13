//! The Levi-Civita connection of a left-invariant metric.
//!
//! Left-invariant vector fields have constant inner products, so the
//! derivative terms of the Koszul identity vanish and the connection
//! reduces to a bilinear map on the algebra determined by
//!
//! ```text
//! 2 <nabla_U V, W> = <[U,V], W> - <[V,W], U> + <[W,U], V>
//! ```
//!
//! for all basis choices of `U`, `V`, `W`. The coefficients are stored as
//! a rank-3 tensor `gamma`, with `nabla_{e_i} e_j = Σ_k gamma[i][j][k] e_k`.

use crate::algebra::MetricLieAlgebra;
use crate::error::{Error, Result};
use crate::linalg::Tensor3;

/// Connection coefficients of a left-invariant metric.
///
/// Computed once per algebra by [`christoffel`] and passed explicitly to
/// the operations that need it.
#[derive(Debug, Clone, PartialEq)]
pub struct ChristoffelTensor {
    gamma: Tensor3,
}

/// Solves the Koszul identity for the connection coefficients.
///
/// With an identity gram matrix the right-hand side is the answer; for a
/// general gram matrix each `(i, j)` pair requires one solve against the
/// gram matrix, reusing a single Cholesky factorization.
pub fn christoffel(alg: &MetricLieAlgebra) -> Result<ChristoffelTensor> {
    let n = alg.dim();
    let c = alg.structure();
    let mut gamma = Tensor3::zeros(n);

    if alg.gram_is_identity() {
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let v = 0.5 * (c.get(i, j, k) - c.get(j, k, i) + c.get(k, i, j));
                    gamma.set(i, j, k, v);
                }
            }
        }
        return Ok(ChristoffelTensor { gamma });
    }

    let chol = alg.gram_cholesky().ok_or(Error::GramNotSpd)?;
    let g = alg.gram();
    // bg[a][b][m] = <[e_a, e_b], e_m>
    let mut bg = Tensor3::zeros(n);
    for a in 0..n {
        for b in 0..n {
            for m in 0..n {
                let mut s = 0.0;
                for t in 0..n {
                    s += c.get(a, b, t) * g.get(t, m);
                }
                bg.set(a, b, m, s);
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            let rhs: Vec<f64> = (0..n)
                .map(|k| 0.5 * (bg.get(i, j, k) - bg.get(j, k, i) + bg.get(k, i, j)))
                .collect();
            let sol = chol.solve(&rhs);
            for k in 0..n {
                gamma.set(i, j, k, sol[k]);
            }
        }
    }
    Ok(ChristoffelTensor { gamma })
}

impl ChristoffelTensor {
    pub fn dim(&self) -> usize {
        self.gamma.n()
    }

    pub fn gamma(&self) -> &Tensor3 {
        &self.gamma
    }

    /// `nabla_{e_i} e_j` as a component vector (0-based indices).
    pub fn basis_derivative(&self, i: usize, j: usize) -> Vec<f64> {
        (0..self.dim()).map(|k| self.gamma.get(i, j, k)).collect()
    }

    /// Covariant derivative `nabla_u v`, bilinear in both arguments.
    pub fn nabla(&self, u: &[f64], v: &[f64]) -> Result<Vec<f64>> {
        let n = self.dim();
        for w in [u, v] {
            if w.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: w.len(),
                });
            }
        }
        let mut out = vec![0.0; n];
        for i in 0..n {
            if u[i] == 0.0 {
                continue;
            }
            for j in 0..n {
                let uv = u[i] * v[j];
                if uv == 0.0 {
                    continue;
                }
                for k in 0..n {
                    out[k] += uv * self.gamma.get(i, j, k);
                }
            }
        }
        Ok(out)
    }

    /// Largest coefficient magnitude; used to scale parallelism tolerances.
    pub fn max_abs(&self) -> f64 {
        self.gamma.max_abs()
    }

    #[cfg(test)]
    pub(crate) fn from_gamma(gamma: Tensor3) -> Self {
        ChristoffelTensor { gamma }
    }
}
