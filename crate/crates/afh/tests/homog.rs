//! Growing-cube limits, scaling identity, reconstruction, and envelope
//! checks on media with known effective behavior.

use afh::cellsolver::SolveOptions;
use afh::fields::Grid;
use afh::homog::*;
use afh::integrand::IntegrandSpec;
use afh::operator::OperatorSpec;

fn quick_opts() -> SolveOptions {
    SolveOptions {
        restarts: 1,
        ..SolveOptions::default()
    }
}

#[test]
fn laminate_limit_matches_harmonic_mean() {
    let op = OperatorSpec::divergence(2, 2.0).unwrap();
    let f = IntegrandSpec::laminate(1.0, 4.0, 0, 1.0);
    let est = fhom_at(
        &op,
        &f,
        &[0.0, 1.0],
        4,
        &[1.0, 2.0, 4.0, 8.0],
        &[vec![0.0, 0.0]],
        16,
        &quick_opts(),
    )
    .unwrap();
    assert_eq!(est.failures, 0);
    // harmonic mean of {1, 4} for transverse loading
    assert!(
        (est.limit - 1.6).abs() <= 2e-2,
        "limit = {} should approach 1.6",
        est.limit
    );
    // finite radii lie between the effective value and the mean-field bound
    for row in &est.values {
        for v in row.iter().flatten() {
            assert!(
                *v >= 1.6 - 1e-9 && *v <= 2.5 + 1e-9,
                "value {v} outside sandwich"
            );
        }
    }
}

#[test]
fn fhom_rejects_bad_schedules() {
    let op = OperatorSpec::divergence(2, 2.0).unwrap();
    let f = IntegrandSpec::quadratic(1.0);
    let centers = [vec![0.0, 0.0]];
    let opts = quick_opts();
    assert!(fhom_at(&op, &f, &[1.0, 0.0], 4, &[2.0, 1.0], &centers, 16, &opts).is_err());
    assert!(fhom_at(&op, &f, &[1.0, 0.0], 4, &[], &centers, 16, &opts).is_err());
    assert!(fhom_at(&op, &f, &[1.0, 0.0], 0, &[1.0, 2.0], &centers, 16, &opts).is_err());
}

#[test]
fn scaling_identity_is_exact_on_matched_grids() {
    let op = OperatorSpec::divergence(2, 2.0).unwrap();
    let f = IntegrandSpec::laminate(1.0, 4.0, 0, 1.0);
    let rep = scaling_identity_check(
        &op,
        &f,
        &[0.0, 1.0],
        1,
        1.0,
        &[0.0, 0.0],
        &[0.5],
        32,
        &quick_opts(),
    )
    .unwrap();
    assert!(rep.pass, "entries: {:?}", rep.entries);
    // non-integer 1/eps cannot land on the same sample points
    let bad = scaling_identity_check(
        &op,
        &f,
        &[0.0, 1.0],
        1,
        1.0,
        &[0.0, 0.0],
        &[0.3],
        32,
        &quick_opts(),
    );
    assert!(bad.is_err());
}

#[test]
fn reconstruction_recovers_the_coefficient_at_interior_points() {
    let op = OperatorSpec::divergence(2, 2.0).unwrap();
    let f = IntegrandSpec::laminate(1.0, 4.0, 0, 1.0);
    // x = (1/4, 1/4) sits inside the a = 1 phase
    let rep = small_cube_reconstruction(
        &op,
        &f,
        &[0.25, 0.25],
        &[1.0, 0.0],
        &[0.25, 0.125, 0.0625],
        32,
        &quick_opts(),
    )
    .unwrap();
    assert!(!rep.discontinuity_warning);
    assert!((rep.target - 1.0).abs() < 1e-12);
    let (em, ec) = rep.final_errors;
    assert!(em <= 5e-3, "M error {em}");
    assert!(ec <= 5e-3, "M_c error {ec}");
}

#[test]
fn gamma_values_are_constant_for_homogeneous_media() {
    let op = OperatorSpec::divergence(2, 2.0).unwrap();
    let f = IntegrandSpec::quadratic(2.0);
    let grid = Grid::unit_cube(2, 32).unwrap();
    // constant coefficient: f_hom = 2 |xi|^2 and every oscillation index
    // gives the same periodic minimum
    let rep = gamma_inequality_check(
        &op,
        &f,
        &[1.0, 0.0],
        &grid,
        &[1, 2, 4],
        2.0,
        1e-6,
        &quick_opts(),
    )
    .unwrap();
    assert!(rep.pass, "values: {:?}", rep.values);
    for v in &rep.values {
        assert!((v - 2.0).abs() <= 1e-6);
    }
}

#[test]
fn convex_integrands_pass_the_jensen_test() {
    let op = OperatorSpec::divergence(2, 2.0).unwrap();
    let g = IntegrandSpec::quadratic(1.0);
    let grid = Grid::unit_cube(2, 8).unwrap();
    let rep = aqc_test(&op, &g, &[1.0, 0.0], 100, &grid, 7).unwrap();
    assert_eq!(rep.violations, 0);
    assert!(rep.worst_gap >= -1e-9);
}

#[test]
fn double_well_envelope_relaxes_strictly() {
    let op = OperatorSpec::divergence(2, 2.0).unwrap();
    let g = IntegrandSpec::double_well(vec![0.0, 1.0], 0.01);
    let grid = Grid::unit_cube(2, 16).unwrap();
    let xi = [0.0, 0.0];
    let x0 = [0.0, 0.0];
    let g0 = g.eval(&x0, &xi).unwrap();
    let env = aqc_envelope(&op, &g, &xi, &grid, &quick_opts()).unwrap();
    assert!(env < g0 - 0.1 * g0, "envelope {env} vs g(0) = {g0}");
    // sandwich: convex envelope <= aqc envelope <= g
    let cvx = convex_envelope(&g, &xi, 2, 3.0, 41).unwrap();
    assert!(cvx <= env + 1e-6);
    assert!(env <= g0 + 1e-9);
}

#[test]
fn convex_envelope_of_a_convex_function_is_itself() {
    let g = IntegrandSpec::quadratic(1.0);
    for xi in [[0.5, 0.0], [0.3, -0.7]] {
        let want = g.eval(&[0.0, 0.0], &xi).unwrap();
        let got = convex_envelope(&g, &xi, 2, 3.0, 121).unwrap();
        // grid-based Legendre transform is exact up to lattice resolution
        assert!(
            (got - want).abs() <= 5e-2 * (1.0 + want.abs()),
            "envelope {got} vs {want}"
        );
        assert!(got <= want + 1e-9);
    }
}

#[test]
fn table_interpolates_and_respects_homogeneity() {
    let op = OperatorSpec::divergence(2, 2.0).unwrap();
    let f = IntegrandSpec::quadratic(1.0);
    let table = tabulate_fhom(
        &op,
        &f,
        &[-1.0, -1.0],
        &[1.0, 1.0],
        3,
        1,
        &[1.0, 2.0],
        8,
        &quick_opts(),
    )
    .unwrap();
    assert!(table.lipschitz_pass, "ratio {}", table.worst_neighbor_ratio);
    assert!(table.values.iter().all(|v| v.is_some()));
    // constant medium: f_hom(xi) = |xi|^2 on the lattice points
    let corner = table.values[0].unwrap();
    assert!((corner - 2.0).abs() <= 1e-6, "corner {corner}");
    let center = table.values[4].unwrap();
    assert!(center.abs() <= 1e-9, "center {center}");
    // multilinear eval agrees at a lattice point and rejects points outside
    let at = table.eval(&[0.0, 0.0]).unwrap();
    assert!((at - center).abs() <= 1e-12);
    assert!(table.eval(&[2.0, 0.0]).is_none());
}
