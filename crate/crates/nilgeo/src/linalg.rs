//! Small dense linear-algebra kernels.
//!
//! The algebras handled by this crate have dimension at most ~10, so
//! everything here is a plain deterministic loop: Cholesky factorization
//! for gram-matrix solves, reduced row echelon form for rank and kernel
//! questions, and tiny dense tensor containers for structure constants,
//! connection and curvature coefficients. All storage is 0-based; the
//! 1-based convention of documents and reports is applied at the I/O layer.

/// Relative pivot tolerance for rank and kernel decisions.
pub const PIVOT_REL_TOL: f64 = 1e-10;

/// Relative pivot tolerance below which a gram matrix is rejected as not
/// positive definite.
pub const GRAM_PIVOT_REL_TOL: f64 = 1e-12;

/// Dense row-major matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![0.0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1.0);
        }
        m
    }

    /// Builds a matrix from row vectors; `None` if the rows are empty or ragged.
    pub fn from_rows(rows: &[Vec<f64>]) -> Option<Self> {
        let nr = rows.len();
        let nc = rows.first()?.len();
        if nc == 0 || rows.iter().any(|r| r.len() != nc) {
            return None;
        }
        let mut data = Vec::with_capacity(nr * nc);
        for r in rows {
            data.extend_from_slice(r);
        }
        Some(Matrix {
            rows: nr,
            cols: nc,
            data,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, &v| m.max(v.abs()))
    }

    /// Exact comparison against the identity; used to fast-path the
    /// orthonormal-basis case.
    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| self.get(i, j) == if i == j { 1.0 } else { 0.0 })
            })
    }

    pub fn to_nested(&self) -> Vec<Vec<f64>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j)).collect())
            .collect()
    }
}

/// Lower-triangular Cholesky factor of a symmetric positive definite matrix.
#[derive(Debug, Clone)]
pub struct Cholesky {
    n: usize,
    l: Matrix,
}

impl Cholesky {
    /// Factors `g = L·Lᵀ`. Fails when a pivot falls at or below
    /// `rel_tol · max|g|`, which also rejects indefinite and NaN input.
    pub fn new(g: &Matrix, rel_tol: f64) -> Option<Self> {
        if g.rows() != g.cols() || g.rows() == 0 {
            return None;
        }
        let n = g.rows();
        let floor = rel_tol * g.max_abs();
        let mut l = Matrix::zeros(n, n);
        for k in 0..n {
            let mut d = g.get(k, k);
            for m in 0..k {
                d -= l.get(k, m) * l.get(k, m);
            }
            if !(d > floor) {
                return None;
            }
            let dk = d.sqrt();
            l.set(k, k, dk);
            for i in (k + 1)..n {
                let mut s = g.get(i, k);
                for m in 0..k {
                    s -= l.get(i, m) * l.get(k, m);
                }
                l.set(i, k, s / dk);
            }
        }
        Some(Cholesky { n, l })
    }

    /// Solves `L·Lᵀ x = b`.
    pub fn solve(&self, b: &[f64]) -> Vec<f64> {
        let n = self.n;
        debug_assert_eq!(b.len(), n);
        let mut y = b.to_vec();
        for i in 0..n {
            for j in 0..i {
                y[i] -= self.l.get(i, j) * y[j];
            }
            y[i] /= self.l.get(i, i);
        }
        for i in (0..n).rev() {
            for j in (i + 1)..n {
                y[i] -= self.l.get(j, i) * y[j];
            }
            y[i] /= self.l.get(i, i);
        }
        y
    }

    /// Columns of L⁻ᵀ. They form an orthonormal basis for the inner
    /// product defined by the factored matrix.
    pub fn orthonormal_columns(&self) -> Vec<Vec<f64>> {
        let n = self.n;
        (0..n)
            .map(|k| {
                // back-substitute Lᵀ x = e_k
                let mut x = vec![0.0; n];
                x[k] = 1.0;
                for i in (0..n).rev() {
                    for j in (i + 1)..n {
                        x[i] -= self.l.get(j, i) * x[j];
                    }
                    x[i] /= self.l.get(i, i);
                }
                x
            })
            .collect()
    }
}

/// Smallest Cholesky pivot of a symmetric matrix, stopping at the first
/// nonpositive one. Reported by validation even when factorization fails.
pub fn smallest_cholesky_pivot(g: &Matrix) -> f64 {
    if g.rows() != g.cols() || g.rows() == 0 {
        return f64::NEG_INFINITY;
    }
    let n = g.rows();
    let mut l = Matrix::zeros(n, n);
    let mut min_pivot = f64::INFINITY;
    for k in 0..n {
        let mut d = g.get(k, k);
        for m in 0..k {
            d -= l.get(k, m) * l.get(k, m);
        }
        min_pivot = min_pivot.min(d);
        if !(d > 0.0) {
            return min_pivot;
        }
        let dk = d.sqrt();
        l.set(k, k, dk);
        for i in (k + 1)..n {
            let mut s = g.get(i, k);
            for m in 0..k {
                s -= l.get(i, m) * l.get(k, m);
            }
            l.set(i, k, s / dk);
        }
    }
    min_pivot
}

/// Outcome of a reduced-row-echelon pass.
#[derive(Debug, Clone)]
pub struct RowEchelon {
    pub rank: usize,
    pub pivot_cols: Vec<usize>,
    /// Canonical kernel basis: one vector per free column, carrying a unit
    /// coordinate there.
    pub nullspace: Vec<Vec<f64>>,
}

/// Reduced row echelon form with partial pivoting. A pivot is accepted only
/// above `rel_tol · max|m|`, so rank and kernel are stable against roundoff.
pub fn row_reduce(m: &Matrix, rel_tol: f64) -> RowEchelon {
    let (nr, nc) = (m.rows(), m.cols());
    let mut a = m.clone();
    let threshold = rel_tol * m.max_abs();
    let mut pivot_cols = Vec::new();
    let mut rank = 0usize;

    for col in 0..nc {
        if rank == nr {
            break;
        }
        let mut best = rank;
        let mut best_val = 0.0;
        for r in rank..nr {
            let v = a.get(r, col).abs();
            if v > best_val {
                best_val = v;
                best = r;
            }
        }
        if !(best_val > threshold) {
            continue;
        }
        a.swap_rows(rank, best);
        let p = a.get(rank, col);
        for j in 0..nc {
            a.set(rank, j, a.get(rank, j) / p);
        }
        a.set(rank, col, 1.0);
        for r in 0..nr {
            if r == rank {
                continue;
            }
            let f = a.get(r, col);
            if f != 0.0 {
                for j in 0..nc {
                    a.set(r, j, a.get(r, j) - f * a.get(rank, j));
                }
                a.set(r, col, 0.0);
            }
        }
        pivot_cols.push(col);
        rank += 1;
    }

    let mut nullspace = Vec::new();
    for free in 0..nc {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut v = vec![0.0; nc];
        v[free] = 1.0;
        for (r, &p) in pivot_cols.iter().enumerate() {
            v[p] = -a.get(r, free);
        }
        nullspace.push(v);
    }

    RowEchelon {
        rank,
        pivot_cols,
        nullspace,
    }
}

/// Dense rank-3 tensor with all three index ranges equal.
#[derive(Debug, Clone, PartialEq)]
pub struct Tensor3 {
    n: usize,
    data: Vec<f64>,
}

impl Tensor3 {
    pub fn zeros(n: usize) -> Self {
        Tensor3 {
            n,
            data: vec![0.0; n * n * n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize, k: usize) -> f64 {
        self.data[(i * self.n + j) * self.n + k]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, k: usize, v: f64) {
        self.data[(i * self.n + j) * self.n + k] = v;
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, &v| m.max(v.abs()))
    }

    pub fn to_nested(&self) -> Vec<Vec<Vec<f64>>> {
        (0..self.n)
            .map(|i| {
                (0..self.n)
                    .map(|j| (0..self.n).map(|k| self.get(i, j, k)).collect())
                    .collect()
            })
            .collect()
    }
}

/// Dense rank-4 tensor with all four index ranges equal.
#[derive(Debug, Clone, PartialEq)]
pub struct Tensor4 {
    n: usize,
    data: Vec<f64>,
}

impl Tensor4 {
    pub fn zeros(n: usize) -> Self {
        Tensor4 {
            n,
            data: vec![0.0; n * n * n * n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize, k: usize, l: usize) -> f64 {
        self.data[((i * self.n + j) * self.n + k) * self.n + l]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, k: usize, l: usize, v: f64) {
        self.data[((i * self.n + j) * self.n + k) * self.n + l] = v;
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, &v| m.max(v.abs()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cholesky_solves_spd_system() {
        let mut g = Matrix::identity(3);
        g.set(0, 0, 4.0);
        g.set(0, 1, 1.0);
        g.set(1, 0, 1.0);
        g.set(1, 1, 3.0);
        let ch = Cholesky::new(&g, GRAM_PIVOT_REL_TOL).unwrap();
        let x = ch.solve(&[5.0, 4.0, 1.0]);
        // residual of g·x − b
        let b = [5.0, 4.0, 1.0];
        for i in 0..3 {
            let mut s = 0.0;
            for j in 0..3 {
                s += g.get(i, j) * x[j];
            }
            assert!((s - b[i]).abs() < 1e-12);
        }
    }

    #[test]
    fn cholesky_rejects_indefinite() {
        let mut g = Matrix::identity(2);
        g.set(1, 1, -1.0);
        assert!(Cholesky::new(&g, GRAM_PIVOT_REL_TOL).is_none());
        assert!(smallest_cholesky_pivot(&g) <= 0.0);
    }

    #[test]
    fn orthonormal_columns_diagonalize() {
        let mut g = Matrix::identity(2);
        g.set(0, 0, 4.0);
        g.set(0, 1, 1.0);
        g.set(1, 0, 1.0);
        g.set(1, 1, 2.0);
        let ch = Cholesky::new(&g, GRAM_PIVOT_REL_TOL).unwrap();
        let cols = ch.orthonormal_columns();
        for (a, ca) in cols.iter().enumerate() {
            for (b, cb) in cols.iter().enumerate() {
                let mut s = 0.0;
                for i in 0..2 {
                    for j in 0..2 {
                        s += ca[i] * g.get(i, j) * cb[j];
                    }
                }
                let expect = if a == b { 1.0 } else { 0.0 };
                assert!((s - expect).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn row_reduce_finds_rank_and_kernel() {
        // rank-2 matrix with kernel span{(1, -2, 1)}
        let m = Matrix::from_rows(&[
            vec![1.0, 0.0, -1.0],
            vec![0.0, 1.0, 2.0],
            vec![1.0, 1.0, 1.0],
        ])
        .unwrap();
        let re = row_reduce(&m, PIVOT_REL_TOL);
        assert_eq!(re.rank, 2);
        assert_eq!(re.nullspace.len(), 1);
        let v = &re.nullspace[0];
        for row in 0..3 {
            let s: f64 = (0..3).map(|j| m.get(row, j) * v[j]).sum();
            assert!(s.abs() < 1e-12);
        }
    }

    #[test]
    fn row_reduce_zero_matrix() {
        let m = Matrix::zeros(2, 3);
        let re = row_reduce(&m, PIVOT_REL_TOL);
        assert_eq!(re.rank, 0);
        assert_eq!(re.nullspace.len(), 3);
    }
}
