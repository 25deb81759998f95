//! Random media: the covariant subadditive process and its Monte Carlo
//! ergodic limits.
//!
//! A random integrand is a seeded generator; a realization `omega` is the
//! seed, and every cell draw is a pure function of `(seed, z)`. The
//! process value on a lattice-aligned half-open rectangle `R = [a, b)` is
//! `Phi(omega, R) = M^eta_c(f(omega), xi, interior R)`. The tests here
//! verify the defining process properties numerically — shift covariance
//! `Phi(omega, R + z) = Phi(tau_z omega, R)` and subadditivity over
//! partitions — and estimate the per-realization large-cube limits.

use serde::{Deserialize, Serialize};

use crate::cellsolver::{solve_periodic, solve_relaxed_windows, SolveOptions};
use crate::error::{AfhError, Result};
use crate::fields::{Grid, PeriodicField};
use crate::homog::{extrapolate, relaxed_growing_cube};
use crate::integrand::IntegrandSpec;
use crate::operator::OperatorSpec;

/// One evaluation of the subadditive process.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ProcessSample {
    pub seed: u64,
    pub xi: Vec<f64>,
    pub eta: f64,
    pub lo: Vec<i64>,
    pub hi: Vec<i64>,
    /// `Phi = M^eta_c(f(omega), xi, interior R)`
    pub value: f64,
    pub normalized: f64,
    #[serde(skip)]
    pub minimizer: Option<PeriodicField>,
}

/// Growing-cube trajectories of the process across realizations.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ErgodicEstimate {
    pub xi: Vec<f64>,
    pub k: u32,
    pub seeds: Vec<u64>,
    pub radii: Vec<f64>,
    /// `trajectories[s][i]` = normalized value for `seeds[s]` at `radii[i]`
    pub trajectories: Vec<Vec<Option<f64>>>,
    pub per_omega_limits: Vec<f64>,
    pub mean: f64,
    pub std: f64,
    /// across-seed standard deviation at each radius
    pub std_by_r: Vec<f64>,
    pub std_decreasing: bool,
    pub ergodic_flag: bool,
    pub dropped: usize,
}

fn validate_rect(lo: &[i64], hi: &[i64], dim: usize) -> Result<()> {
    if lo.len() != dim || hi.len() != dim {
        return Err(AfhError::Dimension(format!(
            "rectangle has {} axes, operator domain is {dim}",
            lo.len()
        )));
    }
    if lo.iter().zip(hi).any(|(a, b)| b <= a) {
        return Err(AfhError::Config(format!(
            "rectangle [{lo:?}, {hi:?}) is empty"
        )));
    }
    Ok(())
}

/// Grid whose sample points lie on the `1/density` lattice of `[lo, hi)`.
fn rect_grid(lo: &[i64], hi: &[i64], density: usize) -> Result<Grid> {
    let dim = lo.len();
    let mut n = Vec::with_capacity(dim);
    let mut center = Vec::with_capacity(dim);
    let mut side = Vec::with_capacity(dim);
    for a in 0..dim {
        let len = (hi[a] - lo[a]) as usize;
        let points = len * density;
        if !points.is_power_of_two() {
            return Err(AfhError::Incommensurate(format!(
                "axis {a}: {len} units at density {density} gives {points} \
                 points, not a power of two; the FFT grid cannot match the \
                 unit lattice"
            )));
        }
        n.push(points);
        center.push(0.5 * (lo[a] + hi[a]) as f64);
        side.push(len as f64);
    }
    Grid::rect(n, center, side)
}

/// Absolute support geometry shared by every rectangle: 1/4 unit of dead
/// band and 1/2 unit of ramp on each face, so that minimizers of a
/// partition glue into an admissible competitor of the whole.
fn rect_windows(grid: &Grid) -> (Vec<f64>, Vec<f64>) {
    let dead: Vec<f64> = grid.side().iter().map(|&s| (0.25 / s).min(0.25)).collect();
    let ramp: Vec<f64> = grid.side().iter().map(|&s| 0.5 / s).collect();
    (dead, ramp)
}

/// Evaluates the process `Phi^eta_xi(omega, R)` on a lattice rectangle.
pub fn sample_process(
    op: &OperatorSpec,
    f_random: &IntegrandSpec,
    seed: u64,
    xi: &[f64],
    eta: f64,
    lo: &[i64],
    hi: &[i64],
    density: usize,
    opts: &SolveOptions,
) -> Result<ProcessSample> {
    validate_rect(lo, hi, op.dim())?;
    let f = f_random.sample_random(seed);
    let grid = rect_grid(lo, hi, density)?;
    let (dead, ramp) = rect_windows(&grid);
    let mut o = opts.clone();
    o.feas_tol = opts.feas_tol.max(1e-4);
    if let Ok(per) = solve_periodic(op, &f, xi, &grid, &o) {
        o.warm_start = Some(per.minimizer);
        o.warm_only = true;
    }
    let sol = solve_relaxed_windows(op, &f, xi, &grid, eta, &dead, &ramp, &o)?;
    debug_assert!(sol.value <= f.c0 * (1.0 + xi_norm(xi).powf(f.p)) * grid.volume() + 1e-9);
    Ok(ProcessSample {
        seed,
        xi: xi.to_vec(),
        eta,
        lo: lo.to_vec(),
        hi: hi.to_vec(),
        value: sol.value,
        normalized: sol.normalized,
        minimizer: Some(sol.minimizer),
    })
}

fn xi_norm(xi: &[f64]) -> f64 {
    xi.iter().map(|v| v * v).sum::<f64>().sqrt()
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CovarianceEntry {
    pub z: Vec<i64>,
    pub lhs: f64,
    pub rhs: f64,
    pub rel_diff: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CovarianceReport {
    pub entries: Vec<CovarianceEntry>,
    pub max_rel_diff: f64,
    pub pass: bool,
}

/// Checks the covariance identity `Phi(omega, R + z) = Phi(tau_z omega, R)`
/// with identical solver seeds; on the lattice the two computations see
/// pointwise-identical data, so the match is expected to be exact.
#[allow(clippy::too_many_arguments)]
pub fn covariance_test(
    op: &OperatorSpec,
    f_random: &IntegrandSpec,
    seed: u64,
    xi: &[f64],
    eta: f64,
    lo: &[i64],
    hi: &[i64],
    z_list: &[Vec<i64>],
    density: usize,
    opts: &SolveOptions,
) -> Result<CovarianceReport> {
    let mut entries = Vec::new();
    for z in z_list {
        if z.len() != lo.len() {
            return Err(AfhError::Dimension(format!(
                "shift {z:?} has wrong dimension"
            )));
        }
        let lo_z: Vec<i64> = lo.iter().zip(z).map(|(a, s)| a + s).collect();
        let hi_z: Vec<i64> = hi.iter().zip(z).map(|(a, s)| a + s).collect();
        let lhs = sample_process(op, f_random, seed, xi, eta, &lo_z, &hi_z, density, opts)?;
        let shifted = f_random.shift(z);
        let rhs = sample_process(op, &shifted, seed, xi, eta, lo, hi, density, opts)?;
        let denom = lhs.value.abs().max(rhs.value.abs()).max(1e-300);
        entries.push(CovarianceEntry {
            z: z.clone(),
            lhs: lhs.value,
            rhs: rhs.value,
            rel_diff: (lhs.value - rhs.value).abs() / denom,
        });
    }
    let max_rel_diff = entries.iter().map(|e| e.rel_diff).fold(0.0, f64::max);
    Ok(CovarianceReport {
        entries,
        max_rel_diff,
        pass: max_rel_diff <= 1e-10,
    })
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SubadditivityReport {
    pub total: f64,
    pub part_values: Vec<f64>,
    pub sum_parts: f64,
    /// objective of the glued competitor, evaluated directly on `R`
    pub glued_objective: f64,
    /// |glued - sum| / |sum|: zero up to rounding (disjoint supports)
    pub additivity_rel_err: f64,
    pub subadditive: bool,
}

fn rects_partition(lo: &[i64], hi: &[i64], parts: &[(Vec<i64>, Vec<i64>)]) -> Result<()> {
    let dim = lo.len();
    let vol = |a: &[i64], b: &[i64]| -> i64 { (0..dim).map(|i| b[i] - a[i]).product() };
    let mut sum = 0;
    for (a, b) in parts {
        validate_rect(a, b, dim)?;
        if (0..dim).any(|i| a[i] < lo[i] || b[i] > hi[i]) {
            return Err(AfhError::Config(format!(
                "part [{a:?}, {b:?}) leaves the rectangle [{lo:?}, {hi:?})"
            )));
        }
        sum += vol(a, b);
    }
    for (i, (a1, b1)) in parts.iter().enumerate() {
        for (a2, b2) in parts.iter().skip(i + 1) {
            if (0..dim).all(|ax| a1[ax] < b2[ax] && a2[ax] < b1[ax]) {
                return Err(AfhError::Config(format!(
                    "parts [{a1:?}, {b1:?}) and [{a2:?}, {b2:?}) overlap"
                )));
            }
        }
    }
    if sum != vol(lo, hi) {
        return Err(AfhError::Config(format!(
            "parts cover {sum} unit cells of {}",
            vol(lo, hi)
        )));
    }
    Ok(())
}

/// Verifies subadditivity `Phi(R) <= sum_i Phi(R_i)` on a lattice
/// partition by gluing the sub-minimizers — their supports are compact in
/// the interiors of the parts, so the glued field is admissible on `R` and
/// its objective is exactly the sum — and then letting the full solve use
/// the glued field as a starting candidate.
#[allow(clippy::too_many_arguments)]
pub fn subadditivity_test(
    op: &OperatorSpec,
    f_random: &IntegrandSpec,
    seed: u64,
    xi: &[f64],
    eta: f64,
    lo: &[i64],
    hi: &[i64],
    parts: &[(Vec<i64>, Vec<i64>)],
    density: usize,
    opts: &SolveOptions,
) -> Result<SubadditivityReport> {
    validate_rect(lo, hi, op.dim())?;
    rects_partition(lo, hi, parts)?;
    let dim = op.dim();
    let d = op.target();
    let f = f_random.sample_random(seed);
    let grid = rect_grid(lo, hi, density)?;

    let mut part_values = Vec::new();
    let mut glued = PeriodicField::zeros(grid.clone(), d);
    for (a, b) in parts {
        let sub = sample_process(op, f_random, seed, xi, eta, a, b, density, opts)?;
        part_values.push(sub.value);
        let u = sub.minimizer.expect("sample_process returns the minimizer");
        // copy onto the matching lattice sites of the big grid
        let sub_grid = u.grid().clone();
        let mut idx = vec![0usize; dim];
        let mut big = vec![0usize; dim];
        for flat in 0..sub_grid.len() {
            sub_grid.multi_index(flat, &mut idx);
            for ax in 0..dim {
                big[ax] = idx[ax] + ((a[ax] - lo[ax]) as usize) * density;
            }
            let bflat = grid.flat_index(&big);
            for c in 0..d {
                glued.component_mut(c)[bflat] = u.component(c)[flat];
            }
        }
    }
    let sum_parts: f64 = part_values.iter().sum();

    // direct evaluation of the glued competitor on R
    let cellvol = grid.cell_volume();
    let mut x = vec![0.0; dim];
    let mut idx = vec![0usize; dim];
    let mut z = vec![0.0; d];
    let mut glued_objective = 0.0;
    for flat in 0..grid.len() {
        grid.multi_index(flat, &mut idx);
        grid.point(&idx, &mut x);
        for c in 0..d {
            z[c] = xi[c] + glued.component(c)[flat];
        }
        glued_objective += f.eval(&x, &z)? * cellvol;
    }
    let additivity_rel_err = (glued_objective - sum_parts).abs() / sum_parts.abs().max(1e-300);

    let (dead, ramp) = rect_windows(&grid);
    let mut o = opts.clone();
    o.feas_tol = opts.feas_tol.max(1e-4);
    o.warm_start = Some(glued);
    o.warm_only = true;
    let total = solve_relaxed_windows(op, &f, xi, &grid, eta, &dead, &ramp, &o)?;
    debug_assert!(total.eta_usage.is_some_and(|u| u <= 1.0 + 1e-9));
    Ok(SubadditivityReport {
        total: total.value,
        part_values,
        sum_parts,
        glued_objective,
        additivity_rel_err,
        subadditive: total.value <= sum_parts + 1e-6 * (1.0 + sum_parts.abs()),
    })
}

/// Per-realization growing-cube limits `Phi(omega, Q_r)/r^N` and their
/// across-realization statistics.
#[allow(clippy::too_many_arguments)]
pub fn ergodic_limit(
    op: &OperatorSpec,
    f_random: &IntegrandSpec,
    xi: &[f64],
    k: u32,
    r_schedule: &[f64],
    seeds: &[u64],
    density: usize,
    opts: &SolveOptions,
) -> Result<ErgodicEstimate> {
    if seeds.len() < 2 {
        return Err(AfhError::Config(
            "ergodic estimation needs at least two realizations".into(),
        ));
    }
    if r_schedule.is_empty() || r_schedule.windows(2).any(|w| w[1] <= w[0]) {
        return Err(AfhError::Config(
            "radius schedule must be non-empty and increasing".into(),
        ));
    }
    if k == 0 {
        return Err(AfhError::Config("k must be >= 1".into()));
    }
    let dim = op.dim();
    let eta = 1.0 / k as f64;
    let mut trajectories = Vec::new();
    let mut per_omega_limits = Vec::new();
    let mut dropped = 0;
    for &seed in seeds {
        let f = f_random.sample_random(seed);
        let mut row = Vec::new();
        for &r in r_schedule {
            let n = (((density as f64) * r).ceil() as usize)
                .next_power_of_two()
                .clamp(8, 256);
            let value = Grid::cube(dim, n, vec![0.0; dim], r)
                .and_then(|grid| relaxed_growing_cube(op, &f, xi, &grid, eta, r, opts))
                .map(|s| s.normalized);
            match value {
                Ok(v) => row.push(Some(v)),
                Err(_) => {
                    dropped += 1;
                    row.push(None);
                }
            }
        }
        if let Some(limit) = extrapolate(r_schedule, &row) {
            per_omega_limits.push(limit);
        }
        trajectories.push(row);
    }

    let std_by_r: Vec<f64> = (0..r_schedule.len())
        .map(|i| {
            let vs: Vec<f64> = trajectories.iter().filter_map(|t| t[i]).collect();
            std_dev(&vs)
        })
        .collect();
    let finals: Vec<f64> = trajectories
        .iter()
        .filter_map(|t| *t.last().unwrap())
        .collect();
    let mean = finals.iter().sum::<f64>() / finals.len().max(1) as f64;
    let std = std_dev(&finals);
    let std_decreasing = std_by_r.windows(2).all(|w| w[1] <= w[0] + 1e-12);
    let agree = per_omega_limits
        .iter()
        .all(|&l| (l - mean).abs() <= 0.1 * mean.abs().max(1e-300));
    Ok(ErgodicEstimate {
        xi: xi.to_vec(),
        k,
        seeds: seeds.to_vec(),
        radii: r_schedule.to_vec(),
        trajectories,
        per_omega_limits,
        mean,
        std,
        std_by_r,
        std_decreasing,
        ergodic_flag: std <= 0.05 * mean.abs() && agree && std_decreasing,
        dropped,
    })
}

fn std_dev(vs: &[f64]) -> f64 {
    if vs.len() < 2 {
        return 0.0;
    }
    let mean = vs.iter().sum::<f64>() / vs.len() as f64;
    (vs.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / (vs.len() - 1) as f64).sqrt()
}
