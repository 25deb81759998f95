//! Large-cube limits and diagnostics around the homogenized integrand.
//!
//! `fhom_at` drives the normalized relaxed minima `M^{1/k}_c(f, xi,
//! Q_r(rx)) / r^N` along a growing radius schedule and extrapolates the
//! limit `f_hom^k(xi)`. The remaining routines are consistency checks:
//! the discrete scaling identity, small-cube reconstruction of `f(x, xi)`,
//! the Gamma-limit inequality along oscillating sequences `f(kx, xi)`,
//! A-quasiconvexity tests with envelope computation, and tabulation of
//! `f_hom` over a box of macroscopic gradients.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cellsolver::{solve_compact, solve_periodic, solve_relaxed, SolveOptions};
use crate::error::{AfhError, Result};
use crate::fields::{Grid, PeriodicField};
use crate::integrand::IntegrandSpec;
use crate::operator::{OperatorSpec, SpectralProjection};

/// Normalized relaxed minima along a radius schedule, with the
/// extrapolated limit and the spread across cube centers.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct HomogEstimate {
    pub xi: Vec<f64>,
    pub k: u32,
    pub centers: Vec<Vec<f64>>,
    pub radii: Vec<f64>,
    /// `values[c][i]` = normalized minimum at center `c`, radius `radii[i]`;
    /// `None` marks a failed solve
    pub values: Vec<Vec<Option<f64>>>,
    pub limit: f64,
    /// max over centers of the relative deviation from the mean, largest radius
    pub spread: f64,
    pub center_independent: bool,
    pub failures: usize,
}

/// `f_hom` sampled on a regular lattice of macroscopic gradients.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FhomTable {
    pub lo: Vec<f64>,
    pub hi: Vec<f64>,
    pub resolution: usize,
    /// row-major over the lattice, axis 0 slowest; `None` marks a hole
    pub values: Vec<Option<f64>>,
    /// worst ratio |df_hom| / Lipschitz bound between lattice neighbors
    pub worst_neighbor_ratio: f64,
    pub lipschitz_pass: bool,
}

impl FhomTable {
    fn lattice_point(&self, idx: &[usize]) -> Vec<f64> {
        idx.iter()
            .enumerate()
            .map(|(a, &i)| {
                if self.resolution == 1 {
                    0.5 * (self.lo[a] + self.hi[a])
                } else {
                    self.lo[a] + (self.hi[a] - self.lo[a]) * i as f64 / (self.resolution - 1) as f64
                }
            })
            .collect()
    }

    /// Multilinear interpolation; `None` if `xi` leaves the box or touches
    /// a hole.
    pub fn eval(&self, xi: &[f64]) -> Option<f64> {
        let d = self.lo.len();
        if xi.len() != d || self.resolution < 2 {
            return None;
        }
        let mut base = vec![0usize; d];
        let mut frac = vec![0.0; d];
        for a in 0..d {
            let t = (xi[a] - self.lo[a]) / (self.hi[a] - self.lo[a]) * (self.resolution - 1) as f64;
            if !(0.0..=(self.resolution - 1) as f64).contains(&t) {
                return None;
            }
            let i = (t.floor() as usize).min(self.resolution - 2);
            base[a] = i;
            frac[a] = t - i as f64;
        }
        let mut acc = 0.0;
        for corner in 0..(1usize << d) {
            let mut w = 1.0;
            let mut flat = 0;
            for a in 0..d {
                let hi = (corner >> a) & 1 == 1;
                w *= if hi { frac[a] } else { 1.0 - frac[a] };
                flat = flat * self.resolution + base[a] + hi as usize;
            }
            acc += w * self.values[flat]?;
        }
        Some(acc)
    }
}

fn pow_n(r: f64, n: usize) -> f64 {
    r.powi(n as i32)
}

/// Power-of-two grid resolving `density` points per unit length on `Q_r`.
fn cube_grid(dim: usize, center: &[f64], r: f64, density: usize, cap: usize) -> Result<Grid> {
    let n = (((density as f64) * r).ceil() as usize)
        .next_power_of_two()
        .clamp(8, cap.next_power_of_two());
    Grid::cube(dim, n, center.to_vec(), r)
}

/// Window geometry for growing cubes: the dead band and ramp keep a fixed
/// absolute width (in period units) so their share of `Q_r` vanishes as
/// `r` grows, matching the role of compact support in the limit.
fn growing_cube_opts(r: f64, opts: &SolveOptions) -> (f64, SolveOptions) {
    let margin = (0.25 / r).min(0.25);
    let mut o = opts.clone();
    o.ramp = Some(opts.ramp.unwrap_or((0.5 / r).min(0.3)));
    // the relaxed class has exact support by truncation, so the search may
    // tolerate more window tail than a bare compact solve
    o.feas_tol = opts.feas_tol.max(1e-4);
    (margin, o)
}

/// Relaxed solve on a growing cube `Q_r`: window widths fixed in absolute
/// units, warm-started from the periodic minimizer on the same grid. The
/// periodic corrector is cheap to compute and, windowed, is already an
/// excellent bulk competitor; descent then only reshapes the boundary
/// layer.
pub(crate) fn relaxed_growing_cube(
    op: &OperatorSpec,
    f: &IntegrandSpec,
    xi: &[f64],
    grid: &Grid,
    eta: f64,
    r: f64,
    opts: &SolveOptions,
) -> Result<crate::cellsolver::CellSolution> {
    let (margin, mut o) = growing_cube_opts(r, opts);
    if let Ok(per) = solve_periodic(op, f, xi, grid, &o) {
        o.warm_start = Some(per.minimizer);
        o.warm_only = true;
    }
    solve_relaxed(op, f, xi, grid, eta, margin, &o)
}

/// Estimates `f_hom^k(xi) = lim_r M^{1/k}_c(f, xi, Q_r(rx)) / r^N`.
///
/// The limit is the value at the largest radius, Richardson-extrapolated
/// in `1/r` over the last three radii when the sequence is monotone.
pub fn fhom_at(
    op: &OperatorSpec,
    f: &IntegrandSpec,
    xi: &[f64],
    k: u32,
    r_schedule: &[f64],
    centers: &[Vec<f64>],
    grid_density: usize,
    opts: &SolveOptions,
) -> Result<HomogEstimate> {
    if r_schedule.windows(2).any(|w| w[1] <= w[0]) || r_schedule.is_empty() {
        return Err(AfhError::Config(
            "radius schedule must be non-empty and increasing".into(),
        ));
    }
    if k == 0 {
        return Err(AfhError::Config("k must be >= 1".into()));
    }
    let dim = op.dim();
    let eta = 1.0 / k as f64;
    let jobs: Vec<(usize, usize)> = (0..centers.len())
        .flat_map(|c| (0..r_schedule.len()).map(move |i| (c, i)))
        .collect();
    let results: Vec<Option<f64>> = jobs
        .par_iter()
        .map(|&(c, i)| {
            let r = r_schedule[i];
            let center: Vec<f64> = centers[c].iter().map(|&x| x * r).collect();
            let grid = cube_grid(dim, &center, r, grid_density, 256).ok()?;
            relaxed_growing_cube(op, f, xi, &grid, eta, r, opts)
                .ok()
                .map(|s| s.normalized)
        })
        .collect();
    let mut values = vec![vec![None; r_schedule.len()]; centers.len()];
    for (slot, &(c, i)) in jobs.iter().enumerate() {
        values[c][i] = results[slot];
    }
    let failures = results.iter().filter(|v| v.is_none()).count();

    // mean across centers at each radius, then extrapolate
    let series: Vec<Option<f64>> = (0..r_schedule.len())
        .map(|i| {
            let vs: Vec<f64> = values.iter().filter_map(|row| row[i]).collect();
            if vs.is_empty() {
                None
            } else {
                Some(vs.iter().sum::<f64>() / vs.len() as f64)
            }
        })
        .collect();
    let limit = extrapolate(r_schedule, &series)
        .ok_or_else(|| AfhError::Diverged("no radius produced a value".into()))?;

    let last = r_schedule.len() - 1;
    let finals: Vec<f64> = values.iter().filter_map(|row| row[last]).collect();
    let spread = if finals.len() > 1 {
        let mean = finals.iter().sum::<f64>() / finals.len() as f64;
        finals
            .iter()
            .map(|v| (v - mean).abs() / mean.abs().max(1e-300))
            .fold(0.0, f64::max)
    } else {
        0.0
    };
    Ok(HomogEstimate {
        xi: xi.to_vec(),
        k,
        centers: centers.to_vec(),
        radii: r_schedule.to_vec(),
        values,
        limit,
        spread,
        center_independent: spread <= 1e-2,
        failures,
    })
}

/// Richardson extrapolation in `1/r` over the last three radii when the
/// value sequence is monotone; otherwise the last available value.
pub(crate) fn extrapolate(radii: &[f64], series: &[Option<f64>]) -> Option<f64> {
    let avail: Vec<(f64, f64)> = radii
        .iter()
        .zip(series)
        .filter_map(|(&r, v)| v.map(|v| (r, v)))
        .collect();
    let m = avail.len();
    if m == 0 {
        return None;
    }
    if m >= 3 {
        let [(r1, v1), (r2, v2), (r3, v3)] = [avail[m - 3], avail[m - 2], avail[m - 1]];
        if (v2 - v1) * (v3 - v2) > 0.0 {
            // fit v(r) = L + c/r + d/r^2 through the last three points
            let mat = nalgebra::Matrix3::new(
                1.0,
                1.0 / r1,
                1.0 / (r1 * r1),
                1.0,
                1.0 / r2,
                1.0 / (r2 * r2),
                1.0,
                1.0 / r3,
                1.0 / (r3 * r3),
            );
            let rhs = nalgebra::Vector3::new(v1, v2, v3);
            if let Some(sol) = mat.lu().solve(&rhs) {
                if sol[0].is_finite() {
                    return Some(sol[0]);
                }
            }
        }
    }
    Some(avail[m - 1].1)
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ScalingReport {
    pub rho: f64,
    pub entries: Vec<ScalingEntry>,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ScalingEntry {
    pub eps: f64,
    pub lhs: f64,
    pub rhs: f64,
    pub rel_diff: f64,
}

/// Discrete change-of-variables identity
/// `M^{1/k}_c(f_eps, xi, Q_rho(x)) = eps^N M^{1/k}_c(f, xi, Q_{rho/eps}(x/eps))`,
/// exact when the two grids are pointwise images of each other.
pub fn scaling_identity_check(
    op: &OperatorSpec,
    f: &IntegrandSpec,
    xi: &[f64],
    k: u32,
    rho: f64,
    x: &[f64],
    eps_list: &[f64],
    grid_n: usize,
    opts: &SolveOptions,
) -> Result<ScalingReport> {
    let dim = op.dim();
    let eta = 1.0 / k as f64;
    let margin = 0.0625;
    let mut entries = Vec::new();
    for &eps in eps_list {
        if !(eps > 0.0) || (1.0 / eps).fract().abs() > 1e-12 {
            return Err(AfhError::Incommensurate(format!(
                "eps = {eps}: 1/eps must be a positive integer so the mapped \
                 grid lands on the same sample points"
            )));
        }
        let f_eps = f.rescale(eps)?;
        let lhs_grid = Grid::cube(dim, grid_n, x.to_vec(), rho)?;
        let lhs = solve_relaxed(op, &f_eps, xi, &lhs_grid, eta, margin, opts)?.value;
        let x_mapped: Vec<f64> = x.iter().map(|&v| v / eps).collect();
        let rhs_grid = Grid::cube(dim, grid_n, x_mapped, rho / eps)?;
        let rhs_eta = eta / pow_n(eps, dim);
        let rhs =
            pow_n(eps, dim) * solve_relaxed(op, f, xi, &rhs_grid, rhs_eta, margin, opts)?.value;
        let rel = (lhs - rhs).abs() / lhs.abs().max(rhs.abs()).max(1e-300);
        entries.push(ScalingEntry {
            eps,
            lhs,
            rhs,
            rel_diff: rel,
        });
    }
    let pass = entries.iter().all(|e| e.rel_diff <= 1e-8);
    Ok(ScalingReport { rho, entries, pass })
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ReconReport {
    pub x: Vec<f64>,
    pub xi: Vec<f64>,
    pub rhos: Vec<f64>,
    pub m_values: Vec<f64>,
    pub mc_values: Vec<f64>,
    pub target: f64,
    pub discontinuity_warning: bool,
    /// relative errors of both families at the smallest rho
    pub final_errors: (f64, f64),
}

/// Small-cube reconstruction `f(x, xi) = lim_rho M(f, xi, Q_rho(x))/rho^N
/// = lim_rho M_c(...)/rho^N` at a continuity point `x`.
pub fn small_cube_reconstruction(
    op: &OperatorSpec,
    f: &IntegrandSpec,
    x: &[f64],
    xi: &[f64],
    rho_schedule: &[f64],
    grid_n: usize,
    opts: &SolveOptions,
) -> Result<ReconReport> {
    if rho_schedule.is_empty() || rho_schedule.windows(2).any(|w| w[1] >= w[0]) {
        return Err(AfhError::Config(
            "rho schedule must be non-empty and decreasing".into(),
        ));
    }
    let dim = op.dim();
    let target = f.eval(x, xi)?;
    let mut m_values = Vec::new();
    let mut mc_values = Vec::new();
    let mut warning = false;
    for &rho in rho_schedule {
        let grid = Grid::cube(dim, grid_n, x.to_vec(), rho)?;
        // probe the coefficient on the cube corners for a phase boundary
        if let Some(a0) = f.coefficient_at(x) {
            for corner in 0..(1usize << dim) {
                let xc: Vec<f64> = (0..dim)
                    .map(|a| x[a] + if (corner >> a) & 1 == 1 { 0.5 } else { -0.5 } * rho)
                    .collect();
                if f.coefficient_at(&xc)
                    .is_some_and(|a| (a - a0).abs() > 1e-12)
                {
                    warning = true;
                }
            }
        }
        let vol = pow_n(rho, dim);
        m_values.push(solve_periodic(op, f, xi, &grid, opts)?.value / vol);
        mc_values.push(solve_compact(op, f, xi, &grid, 0.0625, opts)?.value / vol);
    }
    let denom = target.abs().max(1e-300);
    let final_errors = (
        (m_values.last().unwrap() - target).abs() / denom,
        (mc_values.last().unwrap() - target).abs() / denom,
    );
    Ok(ReconReport {
        x: x.to_vec(),
        xi: xi.to_vec(),
        rhos: rho_schedule.to_vec(),
        m_values,
        mc_values,
        target,
        discontinuity_warning: warning,
        final_errors,
    })
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GammaReport {
    pub ks: Vec<u32>,
    /// `M(f_k, xi, Q) / |Q|` along the oscillation sequence `f_k = f(k x)`
    pub values: Vec<f64>,
    pub fhom: f64,
    pub final_gap: f64,
    pub pass: bool,
}

/// Checks `M(f_k, xi, Q)/|Q| -> f_hom(xi)` for `f_k(x, xi) = f(kx, xi)`:
/// the Gamma-limit of the oscillating sequence has the constant integrand
/// `f_hom`, whose periodic minimum is `|Q| f_hom(xi)` by A-quasiconvexity.
pub fn gamma_inequality_check(
    op: &OperatorSpec,
    f: &IntegrandSpec,
    xi: &[f64],
    grid: &Grid,
    k_list: &[u32],
    fhom: f64,
    tol: f64,
    opts: &SolveOptions,
) -> Result<GammaReport> {
    let mut values = Vec::new();
    for &k in k_list {
        if k == 0 {
            return Err(AfhError::Config("oscillation index k must be >= 1".into()));
        }
        let fk = f.rescale(1.0 / k as f64)?;
        values.push(solve_periodic(op, &fk, xi, grid, opts)?.normalized);
    }
    let final_gap =
        (values.last().copied().unwrap_or(f64::NAN) - fhom).abs() / fhom.abs().max(1e-300);
    Ok(GammaReport {
        ks: k_list.to_vec(),
        values,
        fhom,
        final_gap,
        pass: final_gap <= tol,
    })
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AqcReport {
    pub trials: usize,
    pub violations: usize,
    /// most negative value of `avg g(xi + w) - g(xi)` observed
    pub worst_gap: f64,
    #[serde(skip)]
    pub witness: Option<PeriodicField>,
}

/// Samples periodic A-free mean-zero test fields `w` and checks the
/// quasiconvexity inequality `g(xi) <= avg g(xi + w)`. Any violation is a
/// certified witness of non-quasiconvexity (up to discretization).
pub fn aqc_test(
    op: &OperatorSpec,
    g: &IntegrandSpec,
    xi: &[f64],
    trials: usize,
    grid: &Grid,
    seed: u64,
) -> Result<AqcReport> {
    if !g.x_independent() {
        return Err(AfhError::Config(
            "quasiconvexity tests need an x-independent integrand".into(),
        ));
    }
    let d = op.target();
    let proj = SpectralProjection::new(op, grid)?;
    let base = g.eval(&vec![0.0; op.dim()], xi)?;
    let vol = grid.len();
    let mut violations = 0;
    let mut worst_gap = f64::INFINITY;
    let mut witness = None;
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let x0 = vec![0.0; op.dim()];
    let mut z = vec![0.0; d];
    for _ in 0..trials {
        let mut w = PeriodicField::zeros(grid.clone(), d);
        for v in w.data_mut() {
            let a: f64 = rng.gen_range(f64::EPSILON..1.0);
            let b: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
            *v = (-2.0 * a.ln()).sqrt() * b.cos();
        }
        let mut w = proj.project(&w);
        let norm = w.lp_norm(2.0);
        if norm > 0.0 {
            let amp = (1.0 + xi_norm(xi)) * rng.gen_range(0.25..2.0);
            w.scale(amp / norm);
        }
        let mut acc = 0.0;
        for flat in 0..vol {
            for c in 0..d {
                z[c] = xi[c] + w.component(c)[flat];
            }
            acc += g.eval(&x0, &z)?;
        }
        let avg = acc / vol as f64;
        let gap = avg - base;
        if gap < worst_gap {
            worst_gap = gap;
            if gap < -1e-9 * (1.0 + base.abs()) {
                witness = Some(w.clone());
            }
        }
        if gap < -1e-9 * (1.0 + base.abs()) {
            violations += 1;
        }
    }
    Ok(AqcReport {
        trials,
        violations,
        worst_gap,
        witness,
    })
}

/// Discrete A-quasiconvex envelope at `xi`: the normalized periodic
/// minimum over the unit cell (an upper bound for the true envelope).
pub fn aqc_envelope(
    op: &OperatorSpec,
    g: &IntegrandSpec,
    xi: &[f64],
    grid: &Grid,
    opts: &SolveOptions,
) -> Result<f64> {
    if !g.x_independent() {
        return Err(AfhError::Config(
            "quasiconvexity tests need an x-independent integrand".into(),
        ));
    }
    Ok(solve_periodic(op, g, xi, grid, opts)?.normalized)
}

/// Convex envelope of an x-independent integrand at `xi` via a double
/// discrete Legendre transform on `[-radius, radius]^d` (d <= 2).
pub fn convex_envelope(
    g: &IntegrandSpec,
    xi: &[f64],
    dim: usize,
    radius: f64,
    resolution: usize,
) -> Result<f64> {
    let d = xi.len();
    if d > 2 {
        return Err(AfhError::Unsupported(
            "convex envelope is implemented for d <= 2".into(),
        ));
    }
    if resolution < 3 {
        return Err(AfhError::Config("envelope resolution must be >= 3".into()));
    }
    let x0 = vec![0.0; dim];
    let axis: Vec<f64> = (0..resolution)
        .map(|i| -radius + 2.0 * radius * i as f64 / (resolution - 1) as f64)
        .collect();
    let lattice: Vec<Vec<f64>> = if d == 1 {
        axis.iter().map(|&a| vec![a]).collect()
    } else {
        axis.iter()
            .flat_map(|&a| axis.iter().map(move |&b| vec![a, b]))
            .collect()
    };
    // slope range wide enough to support the transform on the box
    let gmax = lattice
        .iter()
        .map(|z| g.eval(&x0, z))
        .collect::<Result<Vec<f64>>>()?
        .into_iter()
        .fold(f64::MIN, f64::max);
    let slope = 2.0 * gmax / radius.max(1e-300) + 1.0;
    let duals: Vec<Vec<f64>> = lattice
        .iter()
        .map(|z| z.iter().map(|&v| v * slope / radius).collect())
        .collect();
    // f*(y) = sup_z <z, y> - f(z), then f**(xi) = sup_y <xi, y> - f*(y)
    let mut best = f64::MIN;
    for y in &duals {
        let mut star = f64::MIN;
        for z in &lattice {
            let dot: f64 = z.iter().zip(y).map(|(a, b)| a * b).sum();
            star = star.max(dot - g.eval(&x0, z)?);
        }
        let dot: f64 = xi.iter().zip(y).map(|(a, b)| a * b).sum();
        best = best.max(dot - star);
    }
    Ok(best)
}

fn xi_norm(xi: &[f64]) -> f64 {
    xi.iter().map(|v| v * v).sum::<f64>().sqrt()
}

/// Tabulates `f_hom` on a regular lattice over `[lo, hi]` and checks the
/// Lipschitz bound between neighbors.
#[allow(clippy::too_many_arguments)]
pub fn tabulate_fhom(
    op: &OperatorSpec,
    f: &IntegrandSpec,
    lo: &[f64],
    hi: &[f64],
    resolution: usize,
    k: u32,
    r_schedule: &[f64],
    grid_density: usize,
    opts: &SolveOptions,
) -> Result<FhomTable> {
    let d = op.target();
    if lo.len() != d || hi.len() != d {
        return Err(AfhError::Dimension(format!(
            "xi box has {} axes, operator target is {d}",
            lo.len()
        )));
    }
    if resolution < 2 {
        return Err(AfhError::Config("table resolution must be >= 2".into()));
    }
    let total = resolution.pow(d as u32);
    let mut table = FhomTable {
        lo: lo.to_vec(),
        hi: hi.to_vec(),
        resolution,
        values: vec![None; total],
        worst_neighbor_ratio: 0.0,
        lipschitz_pass: true,
    };
    let centers = vec![vec![0.0; op.dim()]];
    let values: Vec<Option<f64>> = (0..total)
        .into_par_iter()
        .map(|flat| {
            let mut idx = vec![0usize; d];
            let mut rem = flat;
            for a in (0..d).rev() {
                idx[a] = rem % resolution;
                rem /= resolution;
            }
            let xi = table.lattice_point(&idx);
            fhom_at(op, f, &xi, k, r_schedule, &centers, grid_density, opts)
                .ok()
                .map(|e| e.limit)
        })
        .collect();
    table.values = values;

    // neighbor Lipschitz diagnostic with the declared class constant
    let c5 = f.c5();
    let mut worst: f64 = 0.0;
    let mut idx = vec![0usize; d];
    for flat in 0..total {
        let mut rem = flat;
        for a in (0..d).rev() {
            idx[a] = rem % resolution;
            rem /= resolution;
        }
        for a in 0..d {
            if idx[a] + 1 >= resolution {
                continue;
            }
            let stride = resolution.pow((d - 1 - a) as u32);
            let (Some(v1), Some(v2)) = (table.values[flat], table.values[flat + stride]) else {
                continue;
            };
            let x1 = table.lattice_point(&idx);
            let mut jdx = idx.clone();
            jdx[a] += 1;
            let x2 = table.lattice_point(&jdx);
            let dxi = (x2[a] - x1[a]).abs();
            let bound = c5 * (1.0 + xi_norm(&x1) + xi_norm(&x2)).powf(f.p - 1.0) * dxi + 1e-6;
            worst = worst.max((v1 - v2).abs() / bound);
        }
    }
    table.worst_neighbor_ratio = worst;
    table.lipschitz_pass = worst <= 1.0;
    Ok(table)
}
