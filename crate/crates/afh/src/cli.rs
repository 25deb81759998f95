//! Configuration-driven command line: one JSON config in, `summary.json`,
//! `manifest.json`, and task CSVs out.
//!
//! Exit codes: 0 success, 2 config/validation failure, 3 solver failure.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::cellsolver::{solve_compact, solve_periodic, solve_relaxed, CellSolution, SolveOptions};
use crate::error::{AfhError, Result};
use crate::fields::{io as field_io, Grid, PeriodicField};
use crate::homog;
use crate::integrand::IntegrandSpec;
use crate::operator::OperatorSpec;
use crate::stochastic;

#[derive(Parser)]
#[command(
    name = "afh",
    version,
    about = "Cell problems and homogenized integrands for A-free constrained energies"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the experiment described by a JSON config
    Run {
        /// path to the experiment config
        #[arg(long)]
        config: PathBuf,
        /// worker threads (default: all cores, or AFH_THREADS)
        #[arg(long)]
        threads: Option<usize>,
        /// override the config seed
        #[arg(long)]
        seed: Option<u64>,
        /// output directory (overrides the config)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the fast invariant suite and print pass/fail per invariant
    Selfcheck,
}

/// Entry point for the `afh` binary; returns the process exit code.
pub fn run_cli() -> i32 {
    let cli = Cli::parse();
    match cli.command {
        Command::Run {
            config,
            threads,
            seed,
            out,
        } => match run(&config, threads, seed, out.as_deref()) {
            Ok(()) => 0,
            Err(e) => {
                eprintln!("error: {e}");
                exit_code(&e)
            }
        },
        Command::Selfcheck => selfcheck(),
    }
}

fn exit_code(e: &AfhError) -> i32 {
    match e {
        AfhError::Config(_)
        | AfhError::Dimension(_)
        | AfhError::Unsupported(_)
        | AfhError::Incommensurate(_)
        | AfhError::TableRange(_)
        | AfhError::Json(_) => 2,
        AfhError::ConstantRankViolation { .. }
        | AfhError::Diverged(_)
        | AfhError::Infeasible { .. }
        | AfhError::Io(_) => 3,
    }
}

/// Solver knobs exposed in configs; unset fields fall back to defaults.
#[derive(Debug, Clone, Default, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct SolverConfig {
    max_iters: Option<usize>,
    grad_tol: Option<f64>,
    restarts: Option<usize>,
    seed: Option<u64>,
    feas_tol: Option<f64>,
    ramp: Option<f64>,
    window_order: Option<usize>,
}

impl SolverConfig {
    fn to_options(&self, seed_override: Option<u64>) -> SolveOptions {
        let mut o = SolveOptions::default();
        if let Some(v) = self.max_iters {
            o.max_iters = v;
        }
        if let Some(v) = self.grad_tol {
            o.grad_tol = v;
        }
        if let Some(v) = self.restarts {
            o.restarts = v;
        }
        if let Some(v) = self.seed {
            o.seed = v;
        }
        if let Some(v) = seed_override {
            o.seed = v;
        }
        if let Some(v) = self.feas_tol {
            o.feas_tol = v;
        }
        o.ramp = self.ramp;
        if let Some(v) = self.window_order {
            o.window_order = v;
        }
        o
    }
}

#[derive(Debug, Clone, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct ExperimentConfig {
    operator: serde_json::Value,
    #[serde(default)]
    integrand: Option<serde_json::Value>,
    task: TaskConfig,
    #[serde(default)]
    solver: SolverConfig,
    #[serde(default)]
    output: Option<PathBuf>,
}

#[derive(Debug, Clone, Deserialize, Serialize)]
#[serde(tag = "name", rename_all = "snake_case", deny_unknown_fields)]
enum TaskConfig {
    /// tabulate kernel projectors and their identity residuals
    Project { wmax: i64 },
    /// one of the three cell problems at a single xi
    Cell {
        xi: Vec<f64>,
        grid_n: usize,
        #[serde(default = "default_problem")]
        problem: String,
        #[serde(default = "default_margin")]
        margin: f64,
        #[serde(default)]
        eta: Option<f64>,
        #[serde(default)]
        dump_field: bool,
    },
    /// growing-cube estimate of f_hom^k(xi)
    Homog {
        xi: Vec<f64>,
        k: u32,
        radii: Vec<f64>,
        centers: Vec<Vec<f64>>,
        #[serde(default = "default_density")]
        density: usize,
    },
    /// small-cube reconstruction of f(x, xi)
    Recon {
        x: Vec<f64>,
        xi: Vec<f64>,
        rhos: Vec<f64>,
        grid_n: usize,
    },
    /// Gamma-inequality check along f(kx)
    Gamma {
        xi: Vec<f64>,
        ks: Vec<u32>,
        grid_n: usize,
        fhom: f64,
        #[serde(default = "default_gamma_tol")]
        tol: f64,
    },
    /// quasiconvexity test and envelope at xi
    Qcx {
        xi: Vec<f64>,
        trials: usize,
        grid_n: usize,
        #[serde(default)]
        envelope_box: Option<f64>,
    },
    /// Monte Carlo ergodic run of the subadditive process
    Stoch {
        xi: Vec<f64>,
        k: u32,
        radii: Vec<f64>,
        seeds: Vec<u64>,
        #[serde(default = "default_density")]
        density: usize,
    },
    /// growth and Lipschitz class checks for the integrand
    Validate { xi_samples: usize },
}

fn default_problem() -> String {
    "periodic".into()
}
fn default_margin() -> f64 {
    0.0625
}
fn default_density() -> usize {
    16
}
fn default_gamma_tol() -> f64 {
    2e-2
}

fn init_threads(threads: Option<usize>) {
    let n = threads.or_else(|| {
        std::env::var("AFH_THREADS")
            .ok()
            .and_then(|v| v.parse().ok())
    });
    if let Some(n) = n {
        // a second initialization in the same process is a no-op
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global();
    }
}

fn write_field_file(path: &Path, field: &PeriodicField) -> Result<()> {
    let mut file = fs::File::create(path)?;
    field_io::write_field(&mut file, field)
}

fn write_json(path: &Path, value: &serde_json::Value) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    fs::write(path, text)?;
    Ok(())
}

fn run(
    config_path: &Path,
    threads: Option<usize>,
    seed: Option<u64>,
    out: Option<&Path>,
) -> Result<()> {
    init_threads(threads);
    let raw = fs::read_to_string(config_path)?;
    let config: ExperimentConfig =
        serde_json::from_str(&raw).map_err(|e| AfhError::Config(format!("invalid config: {e}")))?;
    let out_dir: PathBuf = out
        .map(Path::to_path_buf)
        .or_else(|| config.output.clone())
        .unwrap_or_else(|| PathBuf::from("."));
    fs::create_dir_all(&out_dir)?;

    let op = OperatorSpec::from_json(&config.operator)?;
    let integrand = config
        .integrand
        .as_ref()
        .map(|v| IntegrandSpec::from_json(v, op.dim()))
        .transpose()?;
    let opts = config.solver.to_options(seed);

    let summary = dispatch(&op, integrand.as_ref(), &config.task, &opts, &out_dir)?;
    write_json(&out_dir.join("summary.json"), &summary)?;
    let manifest = json!({
        "version": env!("CARGO_PKG_VERSION"),
        "config": serde_json::from_str::<serde_json::Value>(&raw)?,
        "resolved_seed": opts.seed,
    });
    write_json(&out_dir.join("manifest.json"), &manifest)?;
    Ok(())
}

fn need_integrand<'a>(f: Option<&'a IntegrandSpec>) -> Result<&'a IntegrandSpec> {
    f.ok_or_else(|| AfhError::Config("this task needs an \"integrand\" entry".into()))
}

fn dispatch(
    op: &OperatorSpec,
    f: Option<&IntegrandSpec>,
    task: &TaskConfig,
    opts: &SolveOptions,
    out_dir: &Path,
) -> Result<serde_json::Value> {
    match task {
        TaskConfig::Project { wmax } => project_task(op, *wmax, out_dir),
        TaskConfig::Cell {
            xi,
            grid_n,
            problem,
            margin,
            eta,
            dump_field,
        } => {
            let f = need_integrand(f)?;
            let grid = Grid::unit_cube(op.dim(), *grid_n)?;
            let sol: CellSolution = match problem.as_str() {
                "periodic" => solve_periodic(op, f, xi, &grid, opts)?,
                "compact" => solve_compact(op, f, xi, &grid, *margin, opts)?,
                "relaxed" => {
                    let eta = eta.ok_or_else(|| {
                        AfhError::Config("relaxed cell problem needs \"eta\"".into())
                    })?;
                    solve_relaxed(op, f, xi, &grid, eta, *margin, opts)?
                }
                other => {
                    return Err(AfhError::Config(format!(
                        "unknown cell problem {other:?}; use periodic, compact, or relaxed"
                    )))
                }
            };
            if *dump_field {
                write_field_file(&out_dir.join("minimizer.afh1"), &sol.minimizer)?;
            }
            Ok(json!({
                "task": "cell",
                "problem": problem,
                "xi": xi,
                "value": sol.value,
                "normalized": sol.normalized,
                "constraint_residual": sol.constraint_residual,
                "eta_usage": sol.eta_usage,
                "eta_binding": sol.eta_binding,
                "iterations": sol.iterations,
                "restarts_used": sol.restarts_used,
            }))
        }
        TaskConfig::Homog {
            xi,
            k,
            radii,
            centers,
            density,
        } => {
            let f = need_integrand(f)?;
            let est = homog::fhom_at(op, f, xi, *k, radii, centers, *density, opts)?;
            let mut csv = String::from("xi,k,center,r,normalized_value\n");
            for (c, row) in est.values.iter().enumerate() {
                for (i, v) in row.iter().enumerate() {
                    if let Some(v) = v {
                        csv.push_str(&format!(
                            "{},{},{},{},{v:.17e}\n",
                            fmt_vec(xi),
                            k,
                            fmt_vec(&est.centers[c]),
                            est.radii[i],
                        ));
                    }
                }
            }
            fs::write(out_dir.join("homog.csv"), csv)?;
            Ok(json!({
                "task": "homog",
                "limit": est.limit,
                "spread": est.spread,
                "center_independent": est.center_independent,
                "failures": est.failures,
                "estimate": est,
            }))
        }
        TaskConfig::Recon {
            x,
            xi,
            rhos,
            grid_n,
        } => {
            let f = need_integrand(f)?;
            let rep = homog::small_cube_reconstruction(op, f, x, xi, rhos, *grid_n, opts)?;
            Ok(json!({ "task": "recon", "report": rep }))
        }
        TaskConfig::Gamma {
            xi,
            ks,
            grid_n,
            fhom,
            tol,
        } => {
            let f = need_integrand(f)?;
            let grid = Grid::unit_cube(op.dim(), *grid_n)?;
            let rep = homog::gamma_inequality_check(op, f, xi, &grid, ks, *fhom, *tol, opts)?;
            Ok(json!({ "task": "gamma", "report": rep }))
        }
        TaskConfig::Qcx {
            xi,
            trials,
            grid_n,
            envelope_box,
        } => {
            let f = need_integrand(f)?;
            let grid = Grid::unit_cube(op.dim(), *grid_n)?;
            let test = homog::aqc_test(op, f, xi, *trials, &grid, opts.seed)?;
            let envelope = homog::aqc_envelope(op, f, xi, &grid, opts)?;
            if let Some(w) = &test.witness {
                write_field_file(&out_dir.join("witness.afh1"), w)?;
            }
            let convex = envelope_box
                .map(|r| homog::convex_envelope(f, xi, op.dim(), r, 41))
                .transpose()?;
            Ok(json!({
                "task": "qcx",
                "xi": xi,
                "value_at_xi": f.eval(&vec![0.0; op.dim()], xi)?,
                "envelope": envelope,
                "convex_envelope": convex,
                "violations": test.violations,
                "worst_gap": test.worst_gap,
                "trials": test.trials,
            }))
        }
        TaskConfig::Stoch {
            xi,
            k,
            radii,
            seeds,
            density,
        } => {
            let f = need_integrand(f)?;
            let est = stochastic::ergodic_limit(op, f, xi, *k, radii, seeds, *density, opts)?;
            let mut csv = String::from("seed,xi,r,center,value,normalized\n");
            for (s, row) in est.trajectories.iter().enumerate() {
                for (i, v) in row.iter().enumerate() {
                    if let Some(v) = v {
                        let r = est.radii[i];
                        csv.push_str(&format!(
                            "{},{},{r},{},{:.17e},{v:.17e}\n",
                            est.seeds[s],
                            fmt_vec(xi),
                            fmt_vec(&vec![0.0; op.dim()]),
                            v * r.powi(op.dim() as i32),
                        ));
                    }
                }
            }
            fs::write(out_dir.join("stoch.csv"), csv)?;
            Ok(json!({
                "task": "stoch",
                "mean": est.mean,
                "std": est.std,
                "per_omega_limits": est.per_omega_limits,
                "ergodic_flag": est.ergodic_flag,
                "std_by_r": est.std_by_r,
                "dropped": est.dropped,
            }))
        }
        TaskConfig::Validate { xi_samples } => {
            let f = need_integrand(f)?;
            let growth = f.verify_growth(*xi_samples, op.dim(), op.target())?;
            let plip = f.verify_plip(*xi_samples, op.dim(), op.target())?;
            Ok(json!({
                "task": "validate",
                "growth_pass": growth.pass,
                "growth_worst_margin": growth.worst_margin,
                "plip_pass": plip.pass,
                "plip_worst_margin": plip.worst_margin,
                "c5": f.c5(),
            }))
        }
    }
}

fn fmt_vec(v: &[f64]) -> String {
    v.iter()
        .map(|x| format!("{x}"))
        .collect::<Vec<_>>()
        .join(";")
}

fn project_task(op: &OperatorSpec, wmax: i64, out_dir: &Path) -> Result<serde_json::Value> {
    let dim = op.dim();
    let d = op.target();
    let mut csv = String::from("w,entries\n");
    let mut max_idem: f64 = 0.0;
    let mut max_annih: f64 = 0.0;
    let mut w = vec![0i64; dim];
    let total = (2 * wmax + 1).pow(dim as u32);
    for flat in 0..total {
        let mut rem = flat;
        for a in (0..dim).rev() {
            w[a] = rem % (2 * wmax + 1) - wmax;
            rem /= 2 * wmax + 1;
        }
        if w.iter().all(|&x| x == 0) {
            continue;
        }
        let proj = op.projector(&w)?;
        let p = &proj.matrix;
        let idem = (p * p - p).norm();
        let annih = (op.symbol(&w)? * p).norm();
        max_idem = max_idem.max(idem);
        max_annih = max_annih.max(annih);
        let entries: Vec<String> = (0..d)
            .flat_map(|i| (0..d).map(move |j| (i, j)))
            .map(|(i, j)| format!("{:.17e}", p[(i, j)]))
            .collect();
        csv.push_str(&format!("{},{}\n", fmt_ivec(&w), entries.join(";")));
    }
    fs::write(out_dir.join("projectors.csv"), csv)?;
    Ok(json!({
        "task": "project",
        "wmax": wmax,
        "max_idempotence_error": max_idem,
        "max_annihilation_error": max_annih,
    }))
}

fn fmt_ivec(v: &[i64]) -> String {
    v.iter()
        .map(|x| format!("{x}"))
        .collect::<Vec<_>>()
        .join(";")
}

/// Fast invariant suite: projector identities, FFT round-trip, covariance,
/// and the ordering of the three minima on a 16^2 laminate.
pub fn selfcheck() -> i32 {
    let mut all_pass = true;
    let mut report = |name: &str, pass: bool| {
        println!("{}  {name}", if pass { "PASS" } else { "FAIL" });
        all_pass &= pass;
    };

    // projector identities
    let proj_ok = (|| -> Result<bool> {
        for op in [
            OperatorSpec::divergence(2, 2.0)?,
            OperatorSpec::curl2d(2.0)?,
            OperatorSpec::curl3d(2.0)?,
        ] {
            let dim = op.dim();
            let mut w = vec![0i64; dim];
            let total = 9i64.pow(dim as u32);
            for flat in 0..total {
                let mut rem = flat;
                for a in (0..dim).rev() {
                    w[a] = rem % 9 - 4;
                    rem /= 9;
                }
                if w.iter().all(|&x| x == 0) {
                    continue;
                }
                let p = op.projector(&w)?.matrix;
                if ((&p * &p) - &p).norm() > 1e-12 || (op.symbol(&w)? * &p).norm() > 1e-12 {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    })()
    .unwrap_or(false);
    report(
        "projector identities (div, curl2d, curl3d, |w| <= 4)",
        proj_ok,
    );

    // FFT round-trip
    let fft_ok = (|| -> Result<bool> {
        let grid = Grid::unit_cube(2, 16)?;
        let u = PeriodicField::from_fn(grid.clone(), 2, |x, v| {
            v[0] = (x[0] * 7.0).sin() + x[1];
            v[1] = x[0] * x[1];
        });
        let round = PeriodicField::from_spectrum(grid, 2, &u.spectrum());
        let mut diff = round.clone();
        diff.axpy(-1.0, &u);
        Ok(diff.lp_norm(2.0) <= 1e-12 * (1.0 + u.lp_norm(2.0)))
    })()
    .unwrap_or(false);
    report("fft round-trip", fft_ok);

    // non-power-of-two grids are rejected
    report(
        "non-power-of-two grid rejected",
        Grid::unit_cube(2, 48).is_err(),
    );

    // covariance on the random checkerboard
    let cov_ok = (|| -> Result<bool> {
        let op = OperatorSpec::divergence(2, 2.0)?;
        let f = IntegrandSpec::random_checkerboard(0, 2, vec![1.0, 4.0], vec![0.5, 0.5]);
        let opts = SolveOptions {
            restarts: 0,
            ..SolveOptions::default()
        };
        let rep = stochastic::covariance_test(
            &op,
            &f,
            11,
            &[0.0, 1.0],
            0.25,
            &[0, 0],
            &[2, 2],
            &[vec![1, 0], vec![-2, 3]],
            8,
            &opts,
        )?;
        Ok(rep.pass)
    })()
    .unwrap_or(false);
    report("shift covariance (random checkerboard)", cov_ok);

    // ordering of the three minima on a 16^2 laminate
    let order_ok = (|| -> Result<bool> {
        let op = OperatorSpec::divergence(2, 2.0)?;
        let f = IntegrandSpec::laminate(1.0, 4.0, 0, 1.0);
        let grid = Grid::unit_cube(2, 16)?;
        let xi = [0.0, 1.0];
        let opts = SolveOptions {
            restarts: 1,
            ..SolveOptions::default()
        };
        let per = solve_periodic(&op, &f, &xi, &grid, &opts)?;
        let cpt = solve_compact(&op, &f, &xi, &grid, 0.125, &opts)?;
        let mut ropts = opts.clone();
        ropts.warm_start = Some(cpt.minimizer.clone());
        let rel = solve_relaxed(&op, &f, &xi, &grid, 100.0, 0.125, &ropts)?;
        Ok(per.value <= cpt.value + 1e-6 && rel.value <= cpt.value + 1e-6)
    })()
    .unwrap_or(false);
    report("ordering of the three minima (16^2 laminate)", order_ok);

    if all_pass {
        0
    } else {
        3
    }
}
