//! Metric Lie algebras over a fixed basis.
//!
//! A [`MetricLieAlgebra`] couples a structure-constant tensor `c`, with
//! `[e_i, e_j] = Σ_k c[i][j][k] e_k`, to an inner product given by a gram
//! matrix on the same basis. This is the same data as a simply connected
//! Lie group carrying a left-invariant Riemannian metric, restricted to
//! the tangent space at the identity, where every computation in this
//! crate takes place.
//!
//! Values are immutable after construction and all operations are pure,
//! so everything here is safe to share across threads.

use crate::error::{Error, Result};
use crate::linalg::{self, Cholesky, Matrix, Tensor3, GRAM_PIVOT_REL_TOL, PIVOT_REL_TOL};
use crate::report::ValidationReport;
use crate::rng::SplitMix64;

/// Absolute residual below which a bracket is considered zero in
/// membership tests (center containment, two-step check).
pub const SUBSPACE_TOL: f64 = 1e-10;

#[derive(Debug, Clone)]
pub struct MetricLieAlgebra {
    dim: usize,
    structure: Tensor3,
    gram: Matrix,
    gram_is_identity: bool,
    chol: Option<Cholesky>,
}

impl MetricLieAlgebra {
    /// Wraps a structure tensor and optional gram matrix (identity when
    /// omitted). Only shapes are checked here; the axioms are the business
    /// of [`validate`](Self::validate).
    pub fn new(structure: Tensor3, gram: Option<Matrix>) -> Result<Self> {
        let dim = structure.n();
        if dim == 0 {
            return Err(Error::MalformedDocument(
                "dimension must be positive".to_string(),
            ));
        }
        let gram = match gram {
            Some(g) => {
                if g.rows() != dim || g.cols() != dim {
                    return Err(Error::DimensionMismatch {
                        expected: dim,
                        got: g.rows().max(g.cols()),
                    });
                }
                g
            }
            None => Matrix::identity(dim),
        };
        let gram_is_identity = gram.is_identity();
        let chol = Cholesky::new(&gram, GRAM_PIVOT_REL_TOL);
        Ok(MetricLieAlgebra {
            dim,
            structure,
            gram,
            gram_is_identity,
            chol,
        })
    }

    /// Builds the structure tensor from bracket entries `[e_i, e_j] += c·e_k`
    /// given for `i < j` only (1-based indices); the `j > i` half is filled
    /// by antisymmetry. Duplicate `(i, j, k)` triples are an error.
    pub fn from_bracket_entries(
        dim: usize,
        entries: &[(usize, usize, usize, f64)],
        gram: Option<Matrix>,
    ) -> Result<Self> {
        if dim == 0 {
            return Err(Error::MalformedDocument(
                "dimension must be positive".to_string(),
            ));
        }
        let mut seen: Vec<(usize, usize, usize)> = Vec::with_capacity(entries.len());
        let mut structure = Tensor3::zeros(dim);
        for &(i, j, k, c) in entries {
            for idx in [i, j, k] {
                if idx == 0 || idx > dim {
                    return Err(Error::IndexOutOfRange { index: idx, dim });
                }
            }
            if i >= j {
                return Err(Error::MalformedDocument(format!(
                    "bracket entry requires i < j, got i={i}, j={j}"
                )));
            }
            if seen.contains(&(i, j, k)) {
                return Err(Error::DuplicateBracket { i, j, k });
            }
            seen.push((i, j, k));
            if !c.is_finite() {
                return Err(Error::MalformedDocument(format!(
                    "bracket coefficient at ({i}, {j}, {k}) is not finite"
                )));
            }
            structure.set(i - 1, j - 1, k - 1, c);
            structure.set(j - 1, i - 1, k - 1, -c);
        }
        Self::new(structure, gram)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn structure(&self) -> &Tensor3 {
        &self.structure
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn gram_is_identity(&self) -> bool {
        self.gram_is_identity
    }

    pub(crate) fn gram_cholesky(&self) -> Option<&Cholesky> {
        self.chol.as_ref()
    }

    /// Standard basis vector (0-based).
    pub fn basis_vector(&self, i: usize) -> Vec<f64> {
        let mut v = vec![0.0; self.dim];
        v[i] = 1.0;
        v
    }

    pub(crate) fn check_vec(&self, v: &[f64]) -> Result<()> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: v.len(),
            });
        }
        Ok(())
    }

    fn dot_gram(&self, x: &[f64], y: &[f64]) -> f64 {
        if self.gram_is_identity {
            return x.iter().zip(y).map(|(a, b)| a * b).sum();
        }
        let mut s = 0.0;
        for i in 0..self.dim {
            if x[i] == 0.0 {
                continue;
            }
            for j in 0..self.dim {
                s += x[i] * self.gram.get(i, j) * y[j];
            }
        }
        s
    }

    /// Lie bracket, the bilinear extension of the structure tensor.
    pub fn bracket(&self, x: &[f64], y: &[f64]) -> Result<Vec<f64>> {
        self.check_vec(x)?;
        self.check_vec(y)?;
        let n = self.dim;
        let mut out = vec![0.0; n];
        for i in 0..n {
            if x[i] == 0.0 {
                continue;
            }
            for j in 0..n {
                let xy = x[i] * y[j];
                if xy == 0.0 {
                    continue;
                }
                for k in 0..n {
                    out[k] += xy * self.structure.get(i, j, k);
                }
            }
        }
        Ok(out)
    }

    /// Inner product `xᵀ G y`.
    pub fn inner(&self, x: &[f64], y: &[f64]) -> Result<f64> {
        self.check_vec(x)?;
        self.check_vec(y)?;
        Ok(self.dot_gram(x, y))
    }

    /// Norm induced by the gram matrix.
    pub fn norm(&self, x: &[f64]) -> Result<f64> {
        Ok(self.inner(x, x)?.max(0.0).sqrt())
    }

    /// Checks antisymmetry of the structure tensor, the Jacobi identity on
    /// basis triples, and symmetry plus positive definiteness of the gram
    /// matrix. Failures are reported, never thrown.
    pub fn validate(&self) -> ValidationReport {
        let n = self.dim;
        let c = &self.structure;
        let max_c = c.max_abs();
        let mut report = ValidationReport::new();

        let mut anti = 0.0f64;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    anti = anti.max((c.get(i, j, k) + c.get(j, i, k)).abs());
                }
            }
        }
        report.push("antisymmetry", anti <= 1e-12 * max_c, anti);

        // [[e_i,e_j],e_k] + cyclic, expanded through the structure tensor
        let mut jac = 0.0f64;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        let mut s = 0.0;
                        for m in 0..n {
                            s += c.get(i, j, m) * c.get(m, k, l)
                                + c.get(j, k, m) * c.get(m, i, l)
                                + c.get(k, i, m) * c.get(m, j, l);
                        }
                        jac = jac.max(s.abs());
                    }
                }
            }
        }
        report.push("jacobi_identity", jac <= 1e-12 * max_c * max_c, jac);

        let max_g = self.gram.max_abs();
        let mut sym = 0.0f64;
        for i in 0..n {
            for j in 0..n {
                sym = sym.max((self.gram.get(i, j) - self.gram.get(j, i)).abs());
            }
        }
        report.push("gram_symmetric", sym <= 1e-12 * max_g, sym);

        let pivot = linalg::smallest_cholesky_pivot(&self.gram);
        report.push(
            "gram_positive_definite",
            pivot > GRAM_PIVOT_REL_TOL * max_g,
            pivot,
        );

        report
    }

    /// Orthonormal basis of the center `{z : [z, e_i] = 0 for all i}`,
    /// computed as the kernel of the stacked adjoint maps.
    pub fn center(&self) -> Vec<Vec<f64>> {
        let kernel = linalg::row_reduce(&self.stacked_adjoint(), PIVOT_REL_TOL).nullspace;
        self.orthonormalize(&kernel)
    }

    /// Rank of the stacked adjoint map `z ↦ ([z, e_i])_i`; together with the
    /// center dimension this satisfies rank-nullity exactly.
    pub fn adjoint_rank(&self) -> usize {
        linalg::row_reduce(&self.stacked_adjoint(), PIVOT_REL_TOL).rank
    }

    fn stacked_adjoint(&self) -> Matrix {
        let n = self.dim;
        let mut m = Matrix::zeros(n * n, n);
        for i in 0..n {
            for k in 0..n {
                for j in 0..n {
                    // ([e_j, e_i])_k coefficient of z_j
                    m.set(i * n + k, j, self.structure.get(j, i, k));
                }
            }
        }
        m
    }

    /// Orthonormal basis of the derived subalgebra `span{[e_i, e_j] : i < j}`.
    pub fn derived_subalgebra(&self) -> Vec<Vec<f64>> {
        let n = self.dim;
        let mut cols: Vec<Vec<f64>> = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                cols.push((0..n).map(|k| self.structure.get(i, j, k)).collect());
            }
        }
        if cols.is_empty() {
            return Vec::new();
        }
        let mut m = Matrix::zeros(n, cols.len());
        for (cidx, col) in cols.iter().enumerate() {
            for k in 0..n {
                m.set(k, cidx, col[k]);
            }
        }
        let pivots = linalg::row_reduce(&m, PIVOT_REL_TOL).pivot_cols;
        let span: Vec<Vec<f64>> = pivots.into_iter().map(|p| cols[p].clone()).collect();
        self.orthonormalize(&span)
    }

    /// True iff the derived subalgebra is nonzero and contained in the
    /// center, i.e. all double brackets vanish but the algebra is not
    /// abelian.
    pub fn is_two_step_nilpotent(&self) -> bool {
        let derived = self.derived_subalgebra();
        if derived.is_empty() {
            return false;
        }
        derived.iter().all(|d| {
            (0..self.dim).all(|i| {
                let e = self.basis_vector(i);
                let br = self.bracket(d, &e).expect("basis vector has matching dim");
                self.norm(&br).expect("bracket output has matching dim") <= SUBSPACE_TOL
            })
        })
    }

    /// Modified Gram-Schmidt with respect to the gram inner product,
    /// dropping vectors that become numerically dependent. Callers must
    /// pass vectors of the algebra's dimension.
    pub(crate) fn orthonormalize(&self, vectors: &[Vec<f64>]) -> Vec<Vec<f64>> {
        let mut out: Vec<Vec<f64>> = Vec::new();
        for v in vectors {
            let mut w = v.clone();
            for b in &out {
                let coef = self.dot_gram(b, &w);
                for (wi, bi) in w.iter_mut().zip(b) {
                    *wi -= coef * bi;
                }
            }
            let norm = self.dot_gram(&w, &w).max(0.0).sqrt();
            let orig = self.dot_gram(v, v).max(0.0).sqrt();
            if norm <= 1e-10 * orig {
                continue;
            }
            for wi in w.iter_mut() {
                *wi /= norm;
            }
            out.push(w);
        }
        out
    }

    /// A gram-orthonormal basis: the standard basis when the gram matrix is
    /// the identity, otherwise the columns of the inverse transposed
    /// Cholesky factor.
    pub fn orthonormal_basis(&self) -> Result<Vec<Vec<f64>>> {
        if self.gram_is_identity {
            return Ok((0..self.dim).map(|i| self.basis_vector(i)).collect());
        }
        match &self.chol {
            Some(ch) => Ok(ch.orthonormal_columns()),
            None => Err(Error::GramNotSpd),
        }
    }

    /// Draws a gram-orthonormal pair by normalizing two random vectors;
    /// `None` if the stream keeps producing degenerate pairs.
    pub fn random_orthonormal_pair(&self, rng: &mut SplitMix64) -> Option<(Vec<f64>, Vec<f64>)> {
        for _ in 0..64 {
            let a = rng.vector(self.dim);
            let b = rng.vector(self.dim);
            let na = self.dot_gram(&a, &a).max(0.0).sqrt();
            if na < 1e-6 {
                continue;
            }
            let a: Vec<f64> = a.iter().map(|x| x / na).collect();
            let coef = self.dot_gram(&a, &b);
            let mut b: Vec<f64> = b.iter().zip(&a).map(|(x, ai)| x - coef * ai).collect();
            let nb = self.dot_gram(&b, &b).max(0.0).sqrt();
            if nb < 1e-6 {
                continue;
            }
            for x in b.iter_mut() {
                *x /= nb;
            }
            return Some((a, b));
        }
        None
    }
}
