//! Property tests for the connection and curvature layers: the defining
//! identities of the Levi-Civita connection, the curvature symmetries,
//! plane re-basis invariance, the closed-form cross-check, and basis
//! independence of the scalar curvature.

use nilgeo::curvature::{ricci, riemann, scalar_curvature, sectional, Plane};
use nilgeo::families::{self, FamilyId, PARAMETER_GRID};
use nilgeo::levi_civita::christoffel;
use nilgeo::linalg::Tensor3;
use nilgeo::rng::SplitMix64;
use nilgeo::MetricLieAlgebra;
use proptest::prelude::*;

fn vec5() -> impl Strategy<Value = Vec<f64>> {
    proptest::collection::vec(-1.0..1.0f64, 5)
}

fn param() -> impl Strategy<Value = f64> {
    0.1..3.0f64
}

fn all_families(lambda: f64, mu: f64) -> Vec<MetricLieAlgebra> {
    FamilyId::ALL
        .iter()
        .map(|&id| families::family(id, lambda, mu).unwrap())
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn connection_is_torsion_free_and_metric(
        lambda in param(),
        mu in param(),
        u in vec5(),
        v in vec5(),
        w in vec5(),
    ) {
        for alg in all_families(lambda, mu) {
            let ct = christoffel(&alg).unwrap();
            let nuv = ct.nabla(&u, &v).unwrap();
            let nvu = ct.nabla(&v, &u).unwrap();
            let br = alg.bracket(&u, &v).unwrap();
            for k in 0..5 {
                prop_assert!((nuv[k] - nvu[k] - br[k]).abs() <= 1e-10);
            }
            let nuw = ct.nabla(&u, &w).unwrap();
            let compat = alg.inner(&nuv, &w).unwrap() + alg.inner(&v, &nuw).unwrap();
            prop_assert!(compat.abs() <= 1e-10);
        }
    }

    #[test]
    fn curvature_is_trilinear(
        lambda in param(),
        u in vec5(),
        v in vec5(),
        w in vec5(),
        s in -2.0..2.0f64,
    ) {
        let alg = families::center3(lambda).unwrap();
        let ct = christoffel(&alg).unwrap();
        let su: Vec<f64> = u.iter().map(|x| s * x).collect();
        let r1 = riemann(&alg, &ct, &su, &v, &w).unwrap();
        let r2 = riemann(&alg, &ct, &u, &v, &w).unwrap();
        for k in 0..5 {
            prop_assert!((r1[k] - s * r2[k]).abs() <= 1e-10);
        }
    }

    #[test]
    fn curvature_symmetries(
        lambda in param(),
        mu in param(),
        u in vec5(),
        v in vec5(),
        w in vec5(),
        z in vec5(),
    ) {
        for alg in all_families(lambda, mu) {
            let ct = christoffel(&alg).unwrap();

            // antisymmetry in the first pair
            let ruv = riemann(&alg, &ct, &u, &v, &w).unwrap();
            let rvu = riemann(&alg, &ct, &v, &u, &w).unwrap();
            for k in 0..5 {
                prop_assert!((ruv[k] + rvu[k]).abs() <= 1e-10);
            }

            // skew-adjointness
            let ruvz = riemann(&alg, &ct, &u, &v, &z).unwrap();
            let skew = alg.inner(&ruv, &z).unwrap() + alg.inner(&ruvz, &w).unwrap();
            prop_assert!(skew.abs() <= 1e-10);

            // first Bianchi identity
            let rvw = riemann(&alg, &ct, &v, &w, &u).unwrap();
            let rwu = riemann(&alg, &ct, &w, &u, &v).unwrap();
            for k in 0..5 {
                prop_assert!((ruv[k] + rvw[k] + rwu[k]).abs() <= 1e-10);
            }

            // pair symmetry <R(u,v)w, z> = <R(w,z)u, v>
            let rwz = riemann(&alg, &ct, &w, &z, &u).unwrap();
            let lhs = alg.inner(&ruv, &z).unwrap();
            let rhs = alg.inner(&rwz, &v).unwrap();
            prop_assert!((lhs - rhs).abs() <= 1e-10);
        }
    }

    #[test]
    fn sectional_is_invariant_under_plane_rebasis(
        lambda in param(),
        mu in param(),
        a in vec5(),
        b in vec5(),
        alpha in -2.0..2.0f64,
        beta in -2.0..2.0f64,
        gamma in -2.0..2.0f64,
        delta in -2.0..2.0f64,
    ) {
        prop_assume!((alpha * delta - beta * gamma).abs() > 0.1);
        for alg in all_families(lambda, mu) {
            let ct = christoffel(&alg).unwrap();
            let plane = match Plane::new(&alg, &a, &b) {
                Ok(p) => p,
                Err(_) => continue,
            };
            let a2: Vec<f64> = (0..5).map(|i| alpha * a[i] + beta * b[i]).collect();
            let b2: Vec<f64> = (0..5).map(|i| gamma * a[i] + delta * b[i]).collect();
            let plane2 = match Plane::new(&alg, &a2, &b2) {
                Ok(p) => p,
                Err(_) => continue,
            };
            let k1 = sectional(&alg, &ct, &plane).unwrap();
            let k2 = sectional(&alg, &ct, &plane2).unwrap();
            prop_assert!((k1 - k2).abs() <= 1e-8 * k1.abs().max(k2.abs()).max(1.0));
        }
    }

    #[test]
    fn ricci_is_symmetric(lambda in param(), mu in param(), u in vec5(), v in vec5()) {
        for alg in all_families(lambda, mu) {
            let ct = christoffel(&alg).unwrap();
            let a = ricci(&alg, &ct, &u, &v).unwrap();
            let b = ricci(&alg, &ct, &v, &u).unwrap();
            prop_assert!((a - b).abs() <= 1e-10);
        }
    }
}

#[test]
fn connection_tables_reproduce_exactly_with_identity_gram() {
    // with the identity gram the Koszul solve is a direct assignment, so
    // the coefficients must match the closed-form tables to 1e-14 even at
    // irrational parameters
    for id in FamilyId::ALL {
        for &(lambda, mu) in &PARAMETER_GRID {
            let alg = families::family(id, lambda, mu).unwrap();
            let ct = christoffel(&alg).unwrap();
            let dev = families::connection_deviation(id, lambda, mu, &ct);
            assert!(
                dev <= 1e-14,
                "center{} deviates by {dev} at lambda={lambda}, mu={mu}",
                id.center_dim()
            );
        }
    }
}

#[test]
fn sectional_matches_closed_forms_on_random_orthonormal_pairs() {
    for id in FamilyId::ALL {
        let mut worst = 0.0f64;
        for (pt, &(lambda, mu)) in PARAMETER_GRID.iter().enumerate() {
            let alg = families::family(id, lambda, mu).unwrap();
            let ct = christoffel(&alg).unwrap();
            let mut rng = SplitMix64::stream(400 + pt as u64, id.center_dim() as u64);
            for _ in 0..200 {
                let (a, b) = alg.random_orthonormal_pair(&mut rng).unwrap();
                let plane = Plane::new(&alg, &a, &b).unwrap();
                let generic = sectional(&alg, &ct, &plane).unwrap();
                let closed = families::sectional_closed_form(id, lambda, mu, &a, &b).unwrap();
                worst = worst.max((generic - closed).abs());
            }
        }
        assert!(
            worst <= 1e-9,
            "family center{} deviates from closed form by {worst}",
            id.center_dim()
        );
    }
}

#[test]
fn scalar_curvature_is_basis_independent() {
    // rewriting both the structure constants and the gram matrix in a
    // rotated basis leaves the scalar curvature unchanged
    use nilgeo::linalg::Matrix;

    let mut bump = Matrix::identity(5);
    bump.set(0, 0, 2.0);
    bump.set(1, 2, 0.3);
    bump.set(2, 1, 0.3);
    bump.set(4, 4, 1.5);

    let mut rng = SplitMix64::new(23);
    for id in FamilyId::ALL {
        for gram in [None, Some(bump.clone())] {
            let structure = families::family(id, 1.3, 0.7).unwrap().structure().clone();
            let alg = MetricLieAlgebra::new(structure, gram).unwrap();
            assert!(alg.validate().overall);
            let ct = christoffel(&alg).unwrap();
            let s = scalar_curvature(&alg, &ct).unwrap();

            for _ in 0..5 {
                let q = random_orthogonal(&mut rng, 5);
                let c = alg.structure();
                let mut rotated = Tensor3::zeros(5);
                for a in 0..5 {
                    for b in 0..5 {
                        for m in 0..5 {
                            let mut sum = 0.0;
                            for i in 0..5 {
                                for j in 0..5 {
                                    for k in 0..5 {
                                        sum += q[i][a] * q[j][b] * c.get(i, j, k) * q[k][m];
                                    }
                                }
                            }
                            rotated.set(a, b, m, sum);
                        }
                    }
                }
                let mut rotated_gram = Matrix::zeros(5, 5);
                for a in 0..5 {
                    for b in 0..5 {
                        let mut sum = 0.0;
                        for i in 0..5 {
                            for j in 0..5 {
                                sum += q[i][a] * alg.gram().get(i, j) * q[j][b];
                            }
                        }
                        rotated_gram.set(a, b, sum);
                    }
                }
                let rotated_alg = MetricLieAlgebra::new(rotated, Some(rotated_gram)).unwrap();
                assert!(rotated_alg.validate().overall);
                let rct = christoffel(&rotated_alg).unwrap();
                let rs = scalar_curvature(&rotated_alg, &rct).unwrap();
                assert!(
                    (s - rs).abs() <= 1e-9,
                    "scalar changed under basis change: {s} vs {rs}"
                );
            }
        }
    }
}

fn random_orthogonal(rng: &mut SplitMix64, n: usize) -> Vec<Vec<f64>> {
    loop {
        let rows: Vec<Vec<f64>> = (0..n).map(|_| rng.vector(n)).collect();
        let mut out: Vec<Vec<f64>> = Vec::new();
        for r in &rows {
            let mut w = r.clone();
            for b in &out {
                let coef: f64 = w.iter().zip(b).map(|(x, y)| x * y).sum();
                for (wi, bi) in w.iter_mut().zip(b) {
                    *wi -= coef * bi;
                }
            }
            let norm: f64 = w.iter().map(|x| x * x).sum::<f64>().sqrt();
            if norm < 1e-3 {
                break;
            }
            for wi in w.iter_mut() {
                *wi /= norm;
            }
            out.push(w);
        }
        if out.len() == n {
            return out;
        }
    }
}
