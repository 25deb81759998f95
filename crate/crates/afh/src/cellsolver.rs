//! The three cell minimization problems.
//!
//! `solve_periodic` computes `M`: descent over periodic A-free mean-zero
//! fields, with the spectral projector supplying feasible directions.
//!
//! `solve_compact` computes `M_c` and `solve_relaxed` computes `M^eta_c`.
//! Both search fields of the form `u = B(D)(theta * phi)`, where `B(D)` is
//! the potential operator of [`PotentialBasis`] (a local differential
//! operator whose symbol spans `ker A(w)` at every mode) and `theta` is a
//! high-order smooth window vanishing near the boundary. Such `u` is
//! exactly A-free and mean-zero by construction; its only support defect
//! outside the window is the spectral tail of the windowed potential,
//! which the solver measures and reports. The relaxed problem truncates
//! that tail to make the support exact, absorbs the resulting operator
//! residual into the potential field `V`, and enforces the budget
//! `||V||_p^p <= eta |Q|` by shrinking toward the always-feasible `u = 0`.
//!
//! All solves are deterministic given `(seed, options)` and return
//! certified upper bounds: the objective only ever decreases from the
//! `u = 0` competitor.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{AfhError, Result};
use crate::fields::{support_window_axes, Grid, PeriodicField};
use crate::integrand::IntegrandSpec;
use crate::operator::{OperatorSpec, PotentialBasis, SpectralProjection};

#[derive(Debug, Clone)]
pub struct SolveOptions {
    pub max_iters: usize,
    /// stationarity tolerance, relative to 1 + |objective|
    pub grad_tol: f64,
    /// number of random restarts on top of the zero start
    pub restarts: usize,
    /// Armijo sufficient-decrease constant
    pub armijo: f64,
    /// backtracking factor for the step size
    pub backtrack: f64,
    /// initial trial step
    pub step0: f64,
    pub seed: u64,
    /// tolerance on the support residual of compact competitors
    pub feas_tol: f64,
    /// relative width of the smooth window ramp; `None` picks
    /// `clamp(16/n, 0.25, 0.3)` per axis
    pub ramp: Option<f64>,
    /// fraction of the axis resolution kept in the potential's band
    pub lp_frac: f64,
    /// smoothness order of the window ramp (C^m)
    pub window_order: usize,
    /// extra start: a previously computed competitor on the same grid
    pub warm_start: Option<PeriodicField>,
    /// descend only from the warm start (when given); `u = 0` stays in the
    /// candidate pool without its own descent
    pub warm_only: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            max_iters: 2000,
            grad_tol: 1e-8,
            restarts: 5,
            armijo: 1e-4,
            backtrack: 0.5,
            step0: 1.0,
            seed: 0,
            feas_tol: 1e-6,
            ramp: None,
            lp_frac: 0.08,
            window_order: 13,
            warm_start: None,
            warm_only: false,
        }
    }
}

#[derive(Debug, Clone)]
pub struct CellSolution {
    /// objective in units of f * volume
    pub value: f64,
    /// value / |Q|
    pub normalized: f64,
    pub minimizer: PeriodicField,
    /// periodic: A-residual; compact: support residual (A is exact);
    /// relaxed: residual of the identity A u = -div V (near machine zero)
    pub constraint_residual: f64,
    /// `||V||_p^p / (eta |Q|)` for the relaxed problem
    pub eta_usage: Option<f64>,
    /// set when the eta budget forced a shrink of the minimizer
    pub eta_binding: bool,
    pub iterations: usize,
    pub restarts_used: usize,
}

/// Pointwise energy and gradient with prescaled sample coordinates.
struct Energy<'a> {
    f: &'a IntegrandSpec,
    xi: &'a [f64],
    ys: Vec<f64>,
    dim: usize,
    d: usize,
    vol: usize,
    cellvol: f64,
}

impl<'a> Energy<'a> {
    fn new(f: &'a IntegrandSpec, xi: &'a [f64], grid: &Grid, d: usize) -> Energy<'a> {
        let dim = grid.dim();
        let vol = grid.len();
        let mut ys = vec![0.0; vol * dim];
        let mut idx = vec![0usize; dim];
        let mut x = vec![0.0; dim];
        for flat in 0..vol {
            grid.multi_index(flat, &mut idx);
            grid.point(&idx, &mut x);
            for a in 0..dim {
                ys[flat * dim + a] = x[a] * f.x_scale;
            }
        }
        Energy {
            f,
            xi,
            ys,
            dim,
            d,
            vol,
            cellvol: grid.cell_volume(),
        }
    }

    fn value(&self, u: &PeriodicField) -> Result<f64> {
        let mut acc = 0.0;
        let mut z = vec![0.0; self.d];
        for flat in 0..self.vol {
            for c in 0..self.d {
                z[c] = self.xi[c] + u.component(c)[flat];
            }
            acc += self
                .f
                .eval_scaled(&self.ys[flat * self.dim..(flat + 1) * self.dim], &z)?;
        }
        if !acc.is_finite() {
            return Err(AfhError::Diverged("objective is not finite".into()));
        }
        Ok(acc * self.cellvol)
    }

    fn value_at_zero(&self) -> Result<f64> {
        let mut acc = 0.0;
        for flat in 0..self.vol {
            acc += self
                .f
                .eval_scaled(&self.ys[flat * self.dim..(flat + 1) * self.dim], self.xi)?;
        }
        Ok(acc * self.cellvol)
    }

    fn gradient(&self, u: &PeriodicField, out: &mut PeriodicField) -> Result<()> {
        let mut z = vec![0.0; self.d];
        let mut g = vec![0.0; self.d];
        for flat in 0..self.vol {
            for c in 0..self.d {
                z[c] = self.xi[c] + u.component(c)[flat];
            }
            self.f
                .grad_scaled(&self.ys[flat * self.dim..(flat + 1) * self.dim], &z, &mut g)?;
            for c in 0..self.d {
                out.component_mut(c)[flat] = g[c];
            }
        }
        Ok(())
    }
}

fn gaussian_field(grid: &Grid, d: usize, rng: &mut ChaCha8Rng) -> PeriodicField {
    let mut u = PeriodicField::zeros(grid.clone(), d);
    for v in u.data_mut() {
        // Box-Muller
        let a: f64 = rng.gen_range(f64::EPSILON..1.0);
        let b: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
        *v = (-2.0 * a.ln()).sqrt() * b.cos();
    }
    u
}

fn xi_norm(xi: &[f64]) -> f64 {
    xi.iter().map(|v| v * v).sum::<f64>().sqrt()
}

/// Computes `M(f, xi, Q)`: descent over the discrete periodic A-free
/// mean-zero class, multi-start, deterministic.
pub fn solve_periodic(
    op: &OperatorSpec,
    f: &IntegrandSpec,
    xi: &[f64],
    grid: &Grid,
    opts: &SolveOptions,
) -> Result<CellSolution> {
    let d = op.target();
    if xi.len() != d {
        return Err(AfhError::Dimension(format!(
            "xi has {} components, operator target is {}",
            xi.len(),
            d
        )));
    }
    let proj = SpectralProjection::new(op, grid)?;
    let energy = Energy::new(f, xi, grid, d);
    let amp0 = 1.0 + xi_norm(xi);

    let mut best: Option<(f64, PeriodicField, usize)> = None;
    let mut total_iters = 0;
    let mut starts: Vec<PeriodicField> = Vec::new();
    if let Some(ws) = &opts.warm_start {
        starts.push(proj.project(ws));
    }
    starts.push(PeriodicField::zeros(grid.clone(), d));
    for r in 0..opts.restarts {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed.wrapping_add(0x9e37 + r as u64));
        let mut u = proj.project(&gaussian_field(grid, d, &mut rng));
        let n = u.lp_norm(2.0);
        if n > 0.0 {
            u.scale(amp0 * 0.5f64.powi(r as i32) / n);
        }
        starts.push(u);
    }

    for (ri, start) in starts.into_iter().enumerate() {
        let mut u = start;
        let mut e = energy.value(&u)?;
        let mut g = PeriodicField::zeros(grid.clone(), d);
        let mut step = opts.step0;
        let mut stall = 0usize;
        for _ in 0..opts.max_iters {
            total_iters += 1;
            energy.gradient(&u, &mut g)?;
            let dir = proj.project(&g);
            let dd = g.dot(&dir);
            if dd.sqrt() <= opts.grad_tol * (1.0 + e.abs()) {
                break;
            }
            let mut t = step;
            let mut accepted = false;
            for _ in 0..40 {
                let mut cand = u.clone();
                cand.axpy(-t, &dir);
                let ec = energy.value(&cand)?;
                if ec <= e - opts.armijo * t * dd {
                    stall = if e - ec <= 1e-11 * (1.0 + e.abs()) {
                        stall + 1
                    } else {
                        0
                    };
                    u = cand;
                    e = ec;
                    step = (t * 2.0).min(opts.step0 * 1e3);
                    accepted = true;
                    break;
                }
                t *= opts.backtrack;
            }
            if !accepted || stall >= 30 {
                break;
            }
        }
        if best.as_ref().map_or(true, |(bv, _, _)| e < bv - 1e-12) {
            best = Some((e, u, ri));
        }
    }

    let (value, minimizer, restarts_used) = best.expect("at least the zero start ran");
    let (_, resid) = op.apply_a(&minimizer)?;
    let volume = grid.volume();
    debug_assert!(value <= energy.value_at_zero()? + 1e-9 * (1.0 + value.abs()));
    Ok(CellSolution {
        value,
        normalized: value / volume,
        minimizer,
        constraint_residual: resid,
        eta_usage: None,
        eta_binding: false,
        iterations: total_iters,
        restarts_used,
    })
}

/// The compact competitor space `u = B(D)(theta * phi)` with a band-limited
/// potential `phi`.
struct CompactSpace {
    basis: PotentialBasis,
    theta: Vec<f64>,
    /// flat spectral indices kept in the potential band
    band: Vec<bool>,
    d: usize,
    vol: usize,
}

impl CompactSpace {
    fn scalar_margins(grid: &Grid, margin: f64, opts: &SolveOptions) -> (Vec<f64>, Vec<f64>) {
        let n_min = *grid.points().iter().min().expect("nonempty grid") as f64;
        let ramp = opts.ramp.unwrap_or((16.0 / n_min).clamp(0.25, 0.3));
        (vec![margin; grid.dim()], vec![ramp; grid.dim()])
    }

    fn new(
        op: &OperatorSpec,
        grid: &Grid,
        dead: &[f64],
        ramp: &[f64],
        opts: &SolveOptions,
    ) -> Result<CompactSpace> {
        for &m in dead {
            if !(m > 0.0 && m < 0.5) {
                return Err(AfhError::Config(format!("margin {m} must lie in (0, 1/2)")));
            }
        }
        let theta = support_window_axes(grid, dead, ramp, opts.window_order);
        if theta.iter().all(|&t| t == 0.0) {
            return Err(AfhError::Config(
                "window vanishes everywhere; margin and ramp leave no interior".into(),
            ));
        }
        let basis = PotentialBasis::new(op, grid)?;
        let vol = grid.len();
        let dim = grid.dim();
        let mut band = vec![false; vol];
        let mut w = vec![0i64; dim];
        for flat in 0..vol {
            grid.freq_vector(flat, &mut w);
            let ok = (0..dim).all(|a| {
                let cut = ((grid.points()[a] as f64 * opts.lp_frac).round() as i64).max(2);
                w[a].abs() <= cut
            });
            band[flat] = ok && basis.sigma()[flat] > 0.0;
        }
        Ok(CompactSpace {
            basis,
            theta,
            band,
            d: op.target(),
            vol,
        })
    }

    fn mask(&self, u: &PeriodicField) -> PeriodicField {
        let mut m = u.clone();
        for c in 0..self.d {
            let mc = m.component_mut(c);
            for j in 0..self.vol {
                mc[j] *= self.theta[j];
            }
        }
        m
    }

    fn u_from_phi(&self, phi: &PeriodicField) -> PeriodicField {
        self.basis.apply(&self.mask(phi))
    }

    /// Preconditioned feasible gradient: `d_phi = sigma^-2 L theta B g`,
    /// so that the induced field direction `B theta d_phi` acts like the
    /// kernel projector applied to `g` away from the window ramp.
    fn dir_from_grad(&self, g: &PeriodicField) -> PeriodicField {
        let bg = self.basis.apply(g);
        let masked = self.mask(&bg);
        let mut spec = masked.spectrum();
        for flat in 0..self.vol {
            let s = self.basis.sigma()[flat];
            let factor = if self.band[flat] && s > 0.0 {
                1.0 / (s * s)
            } else {
                0.0
            };
            for c in 0..self.d {
                spec[c * self.vol + flat] *= factor;
            }
        }
        PeriodicField::from_spectrum(g.grid().clone(), self.d, &spec)
    }

    fn band_limit(&self, phi: &PeriodicField) -> PeriodicField {
        let mut spec = phi.spectrum();
        for flat in 0..self.vol {
            if !self.band[flat] {
                for c in 0..self.d {
                    spec[c * self.vol + flat] = Complex64::default();
                }
            }
        }
        PeriodicField::from_spectrum(phi.grid().clone(), self.d, &spec)
    }

    /// Zero the field where the window vanishes (exact support).
    fn truncate(&self, u: &PeriodicField) -> PeriodicField {
        let mut t = u.clone();
        for c in 0..self.d {
            let tc = t.component_mut(c);
            for j in 0..self.vol {
                if self.theta[j] == 0.0 {
                    tc[j] = 0.0;
                }
            }
        }
        t
    }

    /// Relative L2 norm of the field outside the window support.
    fn leak(&self, u: &PeriodicField) -> f64 {
        let n = u.lp_norm(2.0);
        if n == 0.0 {
            return 0.0;
        }
        let mut acc = 0.0;
        for c in 0..self.d {
            let uc = u.component(c);
            for j in 0..self.vol {
                if self.theta[j] == 0.0 {
                    acc += uc[j] * uc[j];
                }
            }
        }
        (acc * u.grid().cell_volume()).sqrt() / n
    }

    /// Potential starting point reproducing `u` approximately: the
    /// band-limited least-squares preimage under `B`.
    fn phi_from_u(&self, u: &PeriodicField) -> PeriodicField {
        let masked = self.mask(u);
        let mut spec = masked.spectrum();
        self.basis.apply_spectrum(&mut spec, |s| 1.0 / (s * s));
        let phi = PeriodicField::from_spectrum(u.grid().clone(), self.d, &spec);
        self.band_limit(&phi)
    }
}

fn descend_phi(
    space: &CompactSpace,
    energy: &Energy,
    phi0: PeriodicField,
    opts: &SolveOptions,
    iters: &mut usize,
) -> Result<(f64, PeriodicField, PeriodicField)> {
    let grid = phi0.grid().clone();
    // keep iterates strictly inside the support tolerance; leak is
    // continuous in the step, so backtracking restores admissibility
    let leak_guard = 0.9 * opts.feas_tol;
    let mut phi = phi0;
    let mut u = space.u_from_phi(&phi);
    let mut e = energy.value(&u)?;
    let mut g = PeriodicField::zeros(grid, space.d);
    let mut step = opts.step0;
    let mut stall = 0usize;
    for _ in 0..opts.max_iters {
        *iters += 1;
        energy.gradient(&u, &mut g)?;
        let d_phi = space.dir_from_grad(&g);
        let d_u = space.u_from_phi(&d_phi);
        let dd = g.dot(&d_u);
        if dd <= 0.0 || dd.sqrt() <= opts.grad_tol * (1.0 + e.abs()) {
            break;
        }
        let mut t = step;
        let mut accepted = false;
        for _ in 0..40 {
            let mut cand = u.clone();
            cand.axpy(-t, &d_u);
            let ec = energy.value(&cand)?;
            if ec <= e - opts.armijo * t * dd && space.leak(&cand) <= leak_guard {
                phi.axpy(-t, &d_phi);
                // geometric tail: once per-step progress drops below 1e-11
                // relative for a stretch, the remaining decrease is ~1e-9
                stall = if e - ec <= 1e-11 * (1.0 + e.abs()) {
                    stall + 1
                } else {
                    0
                };
                u = cand;
                e = ec;
                step = (t * 2.0).min(opts.step0 * 1e3);
                accepted = true;
                break;
            }
            t *= opts.backtrack;
        }
        if !accepted || stall >= 30 {
            break;
        }
    }
    Ok((e, u, phi))
}

fn compact_starts(
    space: &CompactSpace,
    grid: &Grid,
    d: usize,
    xi: &[f64],
    opts: &SolveOptions,
) -> Vec<PeriodicField> {
    let amp0 = 1.0 + xi_norm(xi);
    let mut starts = Vec::new();
    if let Some(ws) = &opts.warm_start {
        starts.push(space.phi_from_u(ws));
        if opts.warm_only {
            return starts;
        }
    }
    starts.push(PeriodicField::zeros(grid.clone(), d));
    for r in 0..opts.restarts {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed.wrapping_add(0xc0_11ec7 + r as u64));
        let mut phi = space.band_limit(&gaussian_field(grid, d, &mut rng));
        let n = space.u_from_phi(&phi).lp_norm(2.0);
        if n > 0.0 {
            phi.scale(amp0 * 0.5f64.powi(r as i32) / n);
        }
        starts.push(phi);
    }
    starts
}

/// Computes `M_c(f, xi, Q)` over the compact potential space. The returned
/// minimizer is exactly A-free and mean-zero; `constraint_residual` is its
/// relative mass outside the support window, which must come out below
/// `opts.feas_tol` for the solve to count as feasible.
pub fn solve_compact(
    op: &OperatorSpec,
    f: &IntegrandSpec,
    xi: &[f64],
    grid: &Grid,
    margin: f64,
    opts: &SolveOptions,
) -> Result<CellSolution> {
    let d = op.target();
    if xi.len() != d {
        return Err(AfhError::Dimension(format!(
            "xi has {} components, operator target is {}",
            xi.len(),
            d
        )));
    }
    let (dead, ramp) = CompactSpace::scalar_margins(grid, margin, opts);
    let space = CompactSpace::new(op, grid, &dead, &ramp, opts)?;
    let energy = Energy::new(f, xi, grid, d);
    // u = 0 is always admissible, so the result never exceeds F(xi, Q)
    let mut best: Option<(f64, PeriodicField, usize)> = Some((
        energy.value_at_zero()?,
        PeriodicField::zeros(grid.clone(), d),
        0,
    ));
    let mut total_iters = 0;
    let mut leaks = Vec::new();
    for (ri, phi0) in compact_starts(&space, grid, d, xi, opts)
        .into_iter()
        .enumerate()
    {
        let (e, u, _) = descend_phi(&space, &energy, phi0, opts, &mut total_iters)?;
        let leak = space.leak(&u);
        leaks.push(leak);
        if leak > opts.feas_tol {
            continue;
        }
        if best.as_ref().map_or(true, |(bv, _, _)| e < bv - 1e-12) {
            best = Some((e, u, ri));
        }
    }
    let Some((value, minimizer, restarts_used)) = best else {
        return Err(AfhError::Infeasible { history: leaks });
    };
    let leak = space.leak(&minimizer);
    let volume = grid.volume();
    Ok(CellSolution {
        value,
        normalized: value / volume,
        minimizer,
        constraint_residual: leak,
        eta_usage: None,
        eta_binding: false,
        iterations: total_iters,
        restarts_used,
    })
}

/// Minimal-norm potential field `V` with `A u = -div V` spectrally, and
/// `||V||_p^p`. `V` has `l * N` components, component-major as `(j, i)`.
pub fn potential_v(op: &OperatorSpec, u: &PeriodicField, p: f64) -> Result<(PeriodicField, f64)> {
    let grid = u.grid().clone();
    let dim = grid.dim();
    let l = op.constraints();
    let vol = grid.len();
    let (au, _) = op.apply_a(u)?;
    let spec = au.spectrum();
    let mut vspec = vec![Complex64::default(); l * dim * vol];
    let mut k = vec![0.0; dim];
    let mut w = vec![0i64; dim];
    let two_pi = 2.0 * std::f64::consts::PI;
    for flat in 0..vol {
        grid.phys_freq(flat, &mut k);
        grid.freq_vector(flat, &mut w);
        let k2: f64 = k.iter().map(|v| v * v).sum();
        // unpaired Nyquist modes cannot carry the imaginary factor of a
        // real field; the discrete test-function space excludes them
        let nyq = (0..dim).any(|a| 2 * w[a] == grid.points()[a] as i64);
        if k2 == 0.0 || nyq {
            continue;
        }
        for j in 0..l {
            let aj = spec[j * vol + flat];
            for i in 0..dim {
                // conj(2 pi i k_i) / |2 pi k|^2, negated so that Au = -div V
                let factor = Complex64::new(0.0, 1.0) * (two_pi * k[i]) / (two_pi * two_pi * k2);
                vspec[(j * dim + i) * vol + flat] = -aj * factor.conj();
            }
        }
    }
    let v = PeriodicField::from_spectrum(grid, l * dim, &vspec);
    let norm = v.lp_norm(p);
    Ok((v, norm.powf(p)))
}

/// Computes `M^eta_c(f, xi, Q)`: the compact search with exact support
/// (truncated tail) and the constraint violation routed through the
/// potential field `V`, subject to `||V||_p^p <= eta |Q|`.
pub fn solve_relaxed(
    op: &OperatorSpec,
    f: &IntegrandSpec,
    xi: &[f64],
    grid: &Grid,
    eta: f64,
    margin: f64,
    opts: &SolveOptions,
) -> Result<CellSolution> {
    let (dead, ramp) = CompactSpace::scalar_margins(grid, margin, opts);
    solve_relaxed_windows(op, f, xi, grid, eta, &dead, &ramp, opts)
}

/// [`solve_relaxed`] with per-axis dead-band and ramp fractions, so
/// rectangles can carry equal absolute support margins on every face.
#[allow(clippy::too_many_arguments)]
pub(crate) fn solve_relaxed_windows(
    op: &OperatorSpec,
    f: &IntegrandSpec,
    xi: &[f64],
    grid: &Grid,
    eta: f64,
    dead: &[f64],
    ramp: &[f64],
    opts: &SolveOptions,
) -> Result<CellSolution> {
    if eta <= 0.0 {
        return Err(AfhError::Config(format!("eta {eta} must be positive")));
    }
    let d = op.target();
    if xi.len() != d {
        return Err(AfhError::Dimension(format!(
            "xi has {} components, operator target is {}",
            xi.len(),
            d
        )));
    }
    let space = CompactSpace::new(op, grid, dead, ramp, opts)?;
    let energy = Energy::new(f, xi, grid, d);
    let volume = grid.volume();
    let budget = eta * volume;

    let mut best: Option<(f64, PeriodicField, usize, f64, bool)> = None;
    let mut total_iters = 0;
    let consider = |e: f64,
                    u: PeriodicField,
                    ri: usize,
                    best: &mut Option<(f64, PeriodicField, usize, f64, bool)>|
     -> Result<()> {
        let (_, mut vp) = potential_v(op, &u, f.p)?;
        let mut u = u;
        let mut e = e;
        let mut binding = false;
        if vp > budget {
            let s = 0.999 * (budget / vp).powf(1.0 / f.p);
            u.scale(s);
            vp *= s.powf(f.p);
            e = energy.value(&u)?;
            binding = true;
        }
        if best.as_ref().map_or(true, |(bv, ..)| e < bv - 1e-12) {
            *best = Some((e, u, ri, vp, binding));
        }
        Ok(())
    };

    // u = 0 is feasible at every eta, bounding the value by F(xi, Q)
    consider(
        energy.value_at_zero()?,
        PeriodicField::zeros(grid.clone(), d),
        0,
        &mut best,
    )?;
    if let Some(ws) = &opts.warm_start {
        // direct candidate: e.g. a glued field from subrectangle solves
        let u = space.truncate(ws);
        let e = energy.value(&u)?;
        consider(e, u, 0, &mut best)?;
    }
    for (ri, phi0) in compact_starts(&space, grid, d, xi, opts)
        .into_iter()
        .enumerate()
    {
        let (_, u, _) = descend_phi(&space, &energy, phi0, opts, &mut total_iters)?;
        let ut = space.truncate(&u);
        let et = energy.value(&ut)?;
        consider(et, ut, ri, &mut best)?;
    }

    let (value, minimizer, restarts_used, vp, eta_binding) =
        best.expect("at least the zero start ran");
    // residual of the identity A u = -div V, exact by construction of V
    let (au, _) = op.apply_a(&minimizer)?;
    let (v, _) = potential_v(op, &minimizer, f.p)?;
    let resid = identity_residual(op, &au, &v);
    Ok(CellSolution {
        value,
        normalized: value / volume,
        minimizer,
        constraint_residual: resid,
        eta_usage: Some(vp / budget),
        eta_binding,
        iterations: total_iters,
        restarts_used,
    })
}

/// Relative spectral residual of `A u + div V = 0`.
fn identity_residual(op: &OperatorSpec, au: &PeriodicField, v: &PeriodicField) -> f64 {
    let grid = au.grid();
    let dim = grid.dim();
    let l = op.constraints();
    let vol = grid.len();
    let au_spec = au.spectrum();
    let v_spec = v.spectrum();
    let mut k = vec![0.0; dim];
    let mut w = vec![0i64; dim];
    let two_pi = 2.0 * std::f64::consts::PI;
    let mut num = 0.0;
    let mut den = 0.0;
    for flat in 0..vol {
        grid.freq_vector(flat, &mut w);
        if (0..dim).any(|a| 2 * w[a] == grid.points()[a] as i64) {
            continue;
        }
        grid.phys_freq(flat, &mut k);
        for j in 0..l {
            let mut div = Complex64::default();
            for i in 0..dim {
                div += Complex64::new(0.0, two_pi * k[i]) * v_spec[(j * dim + i) * vol + flat];
            }
            num += (au_spec[j * vol + flat] + div).norm_sqr();
            den += au_spec[j * vol + flat].norm_sqr();
        }
    }
    if den == 0.0 {
        0.0
    } else {
        (num / den).sqrt()
    }
}

#[derive(Debug, Clone)]
pub struct LipschitzReport {
    pub lhs: f64,
    pub bound: f64,
    pub pass: bool,
    /// sharpest constant that would make the bound tight on this instance
    pub empirical_c5: f64,
}

/// Checks the Lipschitz estimate for `xi -> M^eta_c(f, xi, Q) / |Q|` with
/// the constant `c5` computed from the declared class constants.
pub fn lipschitz_check(
    op: &OperatorSpec,
    f: &IntegrandSpec,
    xi1: &[f64],
    xi2: &[f64],
    grid: &Grid,
    eta: f64,
    margin: f64,
    opts: &SolveOptions,
) -> Result<LipschitzReport> {
    let s1 = solve_relaxed(op, f, xi1, grid, eta, margin, opts)?;
    let s2 = solve_relaxed(op, f, xi2, grid, eta, margin, opts)?;
    let lhs = (s1.normalized - s2.normalized).abs();
    let dxi: f64 = xi1
        .iter()
        .zip(xi2)
        .map(|(a, b)| (a - b) * (a - b))
        .sum::<f64>()
        .sqrt();
    let scale = (1.0 + xi_norm(xi1) + xi_norm(xi2)).powf(f.p - 1.0);
    let bound = f.c5() * scale * dxi + 2.0 * opts.feas_tol;
    let empirical_c5 = if scale * dxi > 0.0 {
        lhs / (scale * dxi)
    } else {
        0.0
    };
    Ok(LipschitzReport {
        lhs,
        bound,
        pass: lhs <= bound,
        empirical_c5,
    })
}
