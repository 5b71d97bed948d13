//! Randers metric evaluation, the fundamental tensor, and flag curvature
//! for Berwald-type metrics.
//!
//! A Randers metric is `F(Y) = sqrt(<Y,Y>) + <X,Y>` for a deformation
//! field `X` with `|X| < 1`. [`RandersMetric`] values are only
//! constructible through [`crate::berwald::make_berwald_randers`], which
//! guarantees the deformation is parallel; for such metrics the Chern
//! connection coincides with the Levi-Civita connection of the underlying
//! Riemannian metric, so flag curvature may legitimately be evaluated with
//! the Riemannian curvature operator.

use crate::algebra::MetricLieAlgebra;
use crate::curvature::{riemann, PLANE_DEGENERACY_REL};
use crate::error::{Error, Result};
use crate::levi_civita::ChristoffelTensor;
use crate::rng::SplitMix64;

/// Default relative factor for the finite-difference step:
/// `h = FD_DEFAULT_STEP_REL * (1 + |y|)`.
pub const FD_DEFAULT_STEP_REL: f64 = 1e-4;

/// Steps below `FD_MIN_STEP_REL * (1 + |y|)` are rejected as pure roundoff.
pub const FD_MIN_STEP_REL: f64 = 1e-12;

/// A Berwald-type Randers metric: the underlying metric algebra, its
/// connection, and a parallel deformation field of norm strictly between
/// 0 and 1.
#[derive(Debug, Clone)]
pub struct RandersMetric {
    alg: MetricLieAlgebra,
    ct: ChristoffelTensor,
    x: Vec<f64>,
    norm_x: f64,
}

/// A flag: a nonzero pole vector `y` and a transverse edge `u` spanning a
/// 2-plane.
#[derive(Debug, Clone, PartialEq)]
pub struct Flag {
    y: Vec<f64>,
    u: Vec<f64>,
}

impl Flag {
    pub fn new(alg: &MetricLieAlgebra, y: &[f64], u: &[f64]) -> Result<Self> {
        alg.check_vec(y)?;
        alg.check_vec(u)?;
        let yy = alg.inner(y, y)?;
        if yy == 0.0 {
            return Err(Error::ZeroPole);
        }
        let uu = alg.inner(u, u)?;
        let yu = alg.inner(y, u)?;
        let det = yy * uu - yu * yu;
        if !(det > PLANE_DEGENERACY_REL * yy * uu) {
            return Err(Error::DegenerateFlag);
        }
        Ok(Flag {
            y: y.to_vec(),
            u: u.to_vec(),
        })
    }

    pub fn pole(&self) -> &[f64] {
        &self.y
    }

    pub fn edge(&self) -> &[f64] {
        &self.u
    }
}

/// Extremes found by a flag-curvature scan, with witness flags. Tracks the
/// smallest |K| as well, so zero-curvature flags are reported when present.
#[derive(Debug, Clone)]
pub struct FlagScanResult {
    pub min_value: f64,
    pub max_value: f64,
    pub min_abs_value: f64,
    pub argmin: Flag,
    pub argmax: Flag,
    pub arg_min_abs: Flag,
}

impl RandersMetric {
    pub(crate) fn from_parts(
        alg: MetricLieAlgebra,
        ct: ChristoffelTensor,
        x: Vec<f64>,
        norm_x: f64,
    ) -> Self {
        RandersMetric {
            alg,
            ct,
            x,
            norm_x,
        }
    }

    pub fn algebra(&self) -> &MetricLieAlgebra {
        &self.alg
    }

    pub fn connection(&self) -> &ChristoffelTensor {
        &self.ct
    }

    pub fn deformation(&self) -> &[f64] {
        &self.x
    }

    pub fn deformation_norm(&self) -> f64 {
        self.norm_x
    }

    /// Metric value `F(y) = sqrt(<y,y>) + <x,y>`; zero at `y = 0`, strictly
    /// positive elsewhere because `|x| < 1`.
    pub fn f_value(&self, y: &[f64]) -> Result<f64> {
        let yy = self.alg.inner(y, y)?;
        Ok(yy.max(0.0).sqrt() + self.alg.inner(&self.x, y)?)
    }

    /// Fundamental tensor `g_y(u, v)`, the mixed second derivative of
    /// `F²(y + su + tv)/2` at `s = t = 0`.
    ///
    /// Closed form obtained by differentiating `F = α + β` with
    /// `α = sqrt(<·,·>)` and `β = <x, ·>`:
    ///
    /// ```text
    /// g_y(u,v) = (F/α)·(<u,v> − <y,u><y,v>/α²)
    ///          + (<y,u>/α + <x,u>)·(<y,v>/α + <x,v>)
    /// ```
    ///
    /// Symmetric and bilinear in `(u, v)`, positive definite in `u`, and
    /// homogeneous of degree zero in `y`. Validated against
    /// [`fundamental_tensor_fd`](Self::fundamental_tensor_fd).
    pub fn fundamental_tensor(&self, y: &[f64], u: &[f64], v: &[f64]) -> Result<f64> {
        let yy = self.alg.inner(y, y)?;
        if yy == 0.0 {
            return Err(Error::ZeroPole);
        }
        let alpha = yy.sqrt();
        let yu = self.alg.inner(y, u)?;
        let yv = self.alg.inner(y, v)?;
        let uv = self.alg.inner(u, v)?;
        let xu = self.alg.inner(&self.x, u)?;
        let xv = self.alg.inner(&self.x, v)?;
        let f = alpha + self.alg.inner(&self.x, y)?;
        Ok(f / alpha * (uv - yu * yv / yy) + (yu / alpha + xu) * (yv / alpha + xv))
    }

    /// Finite-difference oracle for the fundamental tensor: the literal
    /// cross central difference of `F²/2` with step `h` in each of the two
    /// fiber directions. Independent of the closed form above and kept as
    /// its verification path.
    pub fn fundamental_tensor_fd(
        &self,
        y: &[f64],
        u: &[f64],
        v: &[f64],
        h: f64,
    ) -> Result<f64> {
        self.alg.check_vec(y)?;
        self.alg.check_vec(u)?;
        self.alg.check_vec(v)?;
        let yy = self.alg.inner(y, y)?;
        if yy == 0.0 {
            return Err(Error::ZeroPole);
        }
        let min = FD_MIN_STEP_REL * (1.0 + yy.sqrt());
        if h < min {
            return Err(Error::StepTooSmall { step: h, min });
        }
        let f2 = |su: f64, sv: f64| -> Result<f64> {
            let p: Vec<f64> = (0..y.len())
                .map(|i| y[i] + su * h * u[i] + sv * h * v[i])
                .collect();
            let f = self.f_value(&p)?;
            Ok(f * f)
        };
        Ok(0.5 * (f2(1.0, 1.0)? - f2(1.0, -1.0)? - f2(-1.0, 1.0)? + f2(-1.0, -1.0)?)
            / (4.0 * h * h))
    }

    /// Default step for the finite-difference oracle at pole `y`.
    pub fn fd_default_step(&self, y: &[f64]) -> Result<f64> {
        Ok(FD_DEFAULT_STEP_REL * (1.0 + self.alg.norm(y)?))
    }

    /// Flag curvature
    ///
    /// ```text
    /// K(P, y) = g_y(R(u,y)y, u) / (g_y(y,y)·g_y(u,u) − g_y(y,u)²)
    /// ```
    ///
    /// with `R` the curvature operator of the underlying metric, valid
    /// because the metric is Berwald. Invariant under `u ← a·u + b·y`
    /// (`a ≠ 0`) and under positive rescaling of `y`.
    pub fn flag_curvature(&self, flag: &Flag) -> Result<f64> {
        let y = flag.pole();
        let u = flag.edge();
        let w = riemann(&self.alg, &self.ct, u, y, y)?;
        let num = self.fundamental_tensor(y, &w, u)?;
        let gyy = self.fundamental_tensor(y, y, y)?;
        let guu = self.fundamental_tensor(y, u, u)?;
        let gyu = self.fundamental_tensor(y, y, u)?;
        Ok(num / (gyy * guu - gyu * gyu))
    }

    /// Scans flags for extremal flag curvature.
    ///
    /// All ordered coordinate flags `(e_i, e_j)`, `i ≠ j`, are evaluated
    /// first; the built-in families attain their extreme and zero values on
    /// these, so sign witnesses are exact. Then `samples` random flags are
    /// drawn from per-sample `(seed, index)` streams, rejecting degenerate
    /// pairs.
    pub fn flag_scan(&self, samples: usize, seed: u64) -> Result<FlagScanResult> {
        let n = self.alg.dim();
        if n < 2 {
            return Err(Error::DegenerateFlag);
        }

        let mut state: Option<FlagScanResult> = None;
        let consider = |k: f64, flag: &Flag, state: &mut Option<FlagScanResult>| match state {
            None => {
                *state = Some(FlagScanResult {
                    min_value: k,
                    max_value: k,
                    min_abs_value: k.abs(),
                    argmin: flag.clone(),
                    argmax: flag.clone(),
                    arg_min_abs: flag.clone(),
                });
            }
            Some(s) => {
                if k < s.min_value {
                    s.min_value = k;
                    s.argmin = flag.clone();
                }
                if k > s.max_value {
                    s.max_value = k;
                    s.argmax = flag.clone();
                }
                if k.abs() < s.min_abs_value {
                    s.min_abs_value = k.abs();
                    s.arg_min_abs = flag.clone();
                }
            }
        };

        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                if let Ok(flag) = Flag::new(&self.alg, &self.alg.basis_vector(i), &self.alg.basis_vector(j))
                {
                    let k = self.flag_curvature(&flag)?;
                    consider(k, &flag, &mut state);
                }
            }
        }

        for idx in 0..samples {
            let mut rng = SplitMix64::stream(seed, idx as u64);
            for _ in 0..64 {
                let y = rng.vector(n);
                let u = rng.vector(n);
                if let Ok(flag) = Flag::new(&self.alg, &y, &u) {
                    let k = self.flag_curvature(&flag)?;
                    consider(k, &flag, &mut state);
                    break;
                }
            }
        }

        state.ok_or(Error::DegenerateFlag)
    }
}
