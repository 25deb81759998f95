//! Independent brute-force oracles shared across integration tests.
//!
//! These deliberately avoid the library's solver machinery: the laminate
//! oracle reduces the periodic cell problem for a divergence-constrained
//! quadratic laminate to a one-dimensional KKT system and solves it with a
//! dense LU factorization.

use nalgebra::DMatrix;

/// Exact periodic cell value for `f(x, z) = a(x1) |z|^2` under the
/// divergence constraint in 2D, for a laminate varying along axis 0.
///
/// A divergence-free, mean-zero competitor that depends only on `x1` has
/// `u_1 = 0` (its derivative is the only term in `div u`), while `u_2` is
/// an arbitrary mean-zero profile `u(x1)`. On an `n`-layer discretization
/// the problem is therefore
///
///   min (1/n) sum_j a_j (xi_1^2 + (xi_2 + u_j)^2)  s.t.  sum_j u_j = 0,
///
/// whose KKT system `diag(2 a) u + lambda 1 = -2 a xi_2`, `1^T u = 0` we
/// solve directly. For equal layers of `a` in `{1, 4}` this yields the
/// arithmetic mean `2.5 |xi|^2` for `xi = e1` and the harmonic mean
/// `1.6 |xi|^2` for `xi = e2`.
pub fn laminate_oracle_1d(a: &[f64], xi: [f64; 2]) -> f64 {
    let n = a.len();
    let mut m = DMatrix::zeros(n + 1, n + 1);
    let mut rhs = DMatrix::zeros(n + 1, 1);
    for j in 0..n {
        m[(j, j)] = 2.0 * a[j];
        m[(j, n)] = 1.0;
        m[(n, j)] = 1.0;
        rhs[(j, 0)] = -2.0 * a[j] * xi[1];
    }
    let sol = m.lu().solve(&rhs).expect("KKT system is nonsingular");
    let mut acc = 0.0;
    for j in 0..n {
        let u = sol[(j, 0)];
        acc += a[j] * (xi[0] * xi[0] + (xi[1] + u) * (xi[1] + u));
    }
    acc / n as f64
}

#[test]
fn oracle_matches_closed_forms() {
    // equal layers a in {1, 4}: arithmetic mean across, harmonic mean along
    let a: Vec<f64> = (0..64).map(|j| if j < 32 { 1.0 } else { 4.0 }).collect();
    let across = laminate_oracle_1d(&a, [1.0, 0.0]);
    let along = laminate_oracle_1d(&a, [0.0, 1.0]);
    assert!((across - 2.5).abs() < 1e-12, "across = {across}");
    assert!((along - 1.6).abs() < 1e-12, "along = {along}");

    // constant coefficient: value is a |xi|^2 exactly, u = 0
    let c: Vec<f64> = vec![3.0; 16];
    assert!((laminate_oracle_1d(&c, [0.5, -1.5]) - 3.0 * 2.5).abs() < 1e-12);
}
