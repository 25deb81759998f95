//! The constant-rank operator `A = sum_i A^i d/dx_i`, its Fourier symbol,
//! kernel projectors, and the spectral projection of periodic fields onto
//! A-free mean-zero fields.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Deserialize;

use crate::error::{AfhError, Result};
use crate::fields::{Grid, PeriodicField};

/// Relative singular-value threshold: sigma counts as nonzero iff
/// `sigma > RANK_RTOL * sigma_max * max(l, d)`.
pub const RANK_RTOL: f64 = 1e-9;

/// Exhaustive constant-rank probing radius in the frequency lattice.
pub const RANK_PROBE_RADIUS: i64 = 8;

/// The operator data: `N` constraint matrices of size `l x d` and the
/// growth exponent `p` of the energies it constrains.
#[derive(Debug, Clone, PartialEq)]
pub struct OperatorSpec {
    matrices: Vec<DMatrix<f64>>,
    dim: usize,         // N: number of spatial derivatives
    target: usize,      // d: components of the constrained field
    constraints: usize, // l: rows of each matrix
    p: f64,
}

#[derive(Debug, Deserialize)]
struct OperatorConfig {
    #[serde(default)]
    name: Option<String>,
    #[serde(rename = "N", default)]
    dim: Option<usize>,
    #[serde(default)]
    d: Option<usize>,
    #[serde(default)]
    l: Option<usize>,
    #[serde(default = "default_p")]
    p: f64,
    #[serde(default)]
    matrices: Option<Vec<Vec<f64>>>,
}

fn default_p() -> f64 {
    2.0
}

impl OperatorSpec {
    pub fn new(matrices: Vec<DMatrix<f64>>, p: f64) -> Result<OperatorSpec> {
        if matrices.is_empty() {
            return Err(AfhError::Config(
                "operator needs at least one matrix".into(),
            ));
        }
        let (l, d) = (matrices[0].nrows(), matrices[0].ncols());
        if l == 0 || d == 0 {
            return Err(AfhError::Config(
                "operator matrices must be nonempty".into(),
            ));
        }
        for m in &matrices {
            if m.nrows() != l || m.ncols() != d {
                return Err(AfhError::Dimension(format!(
                    "all operator matrices must be {l}x{d}"
                )));
            }
        }
        if !(p > 1.0) {
            return Err(AfhError::Config(format!(
                "growth exponent p = {p} must be > 1"
            )));
        }
        Ok(OperatorSpec {
            dim: matrices.len(),
            target: d,
            constraints: l,
            matrices,
            p,
        })
    }

    /// Divergence in `dim` variables: `l = 1`, `d = dim`, `A^i = e_i^T`.
    pub fn divergence(dim: usize, p: f64) -> Result<OperatorSpec> {
        let matrices = (0..dim)
            .map(|i| DMatrix::from_fn(1, dim, |_, c| if c == i { 1.0 } else { 0.0 }))
            .collect();
        OperatorSpec::new(matrices, p)
    }

    /// Scalar 2D curl: `A u = d1 u2 - d2 u1`.
    pub fn curl2d(p: f64) -> Result<OperatorSpec> {
        let a1 = DMatrix::from_row_slice(1, 2, &[0.0, 1.0]);
        let a2 = DMatrix::from_row_slice(1, 2, &[-1.0, 0.0]);
        OperatorSpec::new(vec![a1, a2], p)
    }

    /// 3D curl: `(A u)_k = eps_{kij} d_i u_j`.
    pub fn curl3d(p: f64) -> Result<OperatorSpec> {
        let eps = |k: usize, i: usize, j: usize| -> f64 {
            match (k, i, j) {
                (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1.0,
                (0, 2, 1) | (1, 0, 2) | (2, 1, 0) => -1.0,
                _ => 0.0,
            }
        };
        let matrices = (0..3)
            .map(|i| DMatrix::from_fn(3, 3, |k, j| eps(k, i, j)))
            .collect();
        OperatorSpec::new(matrices, p)
    }

    /// Build from the config JSON object, accepting either a built-in
    /// `name` ("div", "curl2d", "curl3d") or explicit row-major matrices.
    pub fn from_json(value: &serde_json::Value) -> Result<OperatorSpec> {
        let cfg: OperatorConfig = serde_json::from_value(value.clone())
            .map_err(|e| AfhError::Config(format!("operator config: {e}")))?;
        if let Some(name) = &cfg.name {
            return match name.as_str() {
                "div" => OperatorSpec::divergence(cfg.dim.unwrap_or(2), cfg.p),
                "curl2d" => OperatorSpec::curl2d(cfg.p),
                "curl3d" => OperatorSpec::curl3d(cfg.p),
                other => Err(AfhError::Config(format!("unknown operator name {other:?}"))),
            };
        }
        let (dim, d, l) = match (cfg.dim, cfg.d, cfg.l) {
            (Some(n), Some(d), Some(l)) => (n, d, l),
            _ => {
                return Err(AfhError::Config(
                    "explicit operator needs N, d, l, and matrices".into(),
                ))
            }
        };
        let rows = cfg
            .matrices
            .ok_or_else(|| AfhError::Config("explicit operator needs matrices".into()))?;
        if rows.len() != dim {
            return Err(AfhError::Config(format!(
                "expected {dim} matrices, got {}",
                rows.len()
            )));
        }
        let mut matrices = Vec::with_capacity(dim);
        for flat in rows {
            if flat.len() != l * d {
                return Err(AfhError::Config(format!(
                    "each matrix must have l*d = {} row-major entries",
                    l * d
                )));
            }
            matrices.push(DMatrix::from_row_slice(l, d, &flat));
        }
        OperatorSpec::new(matrices, cfg.p)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn constraints(&self) -> usize {
        self.constraints
    }

    pub fn exponent(&self) -> f64 {
        self.p
    }

    pub fn matrices(&self) -> &[DMatrix<f64>] {
        &self.matrices
    }

    /// Symbol `A(w) = sum_i A^i w_i` at an integer frequency.
    pub fn symbol(&self, w: &[i64]) -> Result<DMatrix<f64>> {
        if w.len() != self.dim {
            return Err(AfhError::Dimension(format!(
                "frequency has {} entries, operator has {} matrices",
                w.len(),
                self.dim
            )));
        }
        Ok(self.symbol_dir(&w.iter().map(|&x| x as f64).collect::<Vec<_>>()))
    }

    /// Symbol at a real frequency direction.
    pub fn symbol_dir(&self, w: &[f64]) -> DMatrix<f64> {
        let mut m = DMatrix::zeros(self.constraints, self.target);
        for (i, a) in self.matrices.iter().enumerate() {
            m += a * w[i];
        }
        m
    }

    fn rank_of(&self, m: &DMatrix<f64>) -> usize {
        let sv = m.clone().svd(false, false).singular_values;
        let sigma_max = sv.iter().cloned().fold(0.0, f64::max);
        if sigma_max == 0.0 {
            return 0;
        }
        let thresh = RANK_RTOL * sigma_max * self.constraints.max(self.target) as f64;
        sv.iter().filter(|&&s| s > thresh).count()
    }

    /// Certify the constant-rank property on a frequency sample.
    ///
    /// Probes every lattice frequency with `|w|_inf <= 8` plus
    /// `probe_budget` random unit directions. This is a certificate on the
    /// sample, not a proof.
    pub fn check_constant_rank(&self, probe_budget: usize) -> Result<usize> {
        if probe_budget < 1 {
            return Err(AfhError::Config("probe_budget must be >= 1".into()));
        }
        let mut reference: Option<(Vec<f64>, usize)> = None;
        let mut check = |w: Vec<f64>, rank: usize| -> Result<()> {
            match &reference {
                None => {
                    reference = Some((w, rank));
                    Ok(())
                }
                Some((w0, r0)) => {
                    if *r0 != rank {
                        Err(AfhError::ConstantRankViolation {
                            witness_a: w0.clone(),
                            rank_a: *r0,
                            witness_b: w,
                            rank_b: rank,
                        })
                    } else {
                        Ok(())
                    }
                }
            }
        };

        // exhaustive lattice sweep
        let radius = RANK_PROBE_RADIUS;
        let span = (2 * radius + 1) as usize;
        let total = span.pow(self.dim as u32);
        let mut w = vec![0i64; self.dim];
        for flat in 0..total {
            let mut rem = flat;
            for a in 0..self.dim {
                w[a] = (rem % span) as i64 - radius;
                rem /= span;
            }
            if w.iter().all(|&x| x == 0) {
                continue;
            }
            let rank = self.rank_of(&self.symbol(&w)?);
            check(w.iter().map(|&x| x as f64).collect(), rank)?;
        }

        // random unit directions
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_a1fe);
        for _ in 0..probe_budget {
            let mut dir: Vec<f64> = (0..self.dim).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let norm: f64 = dir.iter().map(|x| x * x).sum::<f64>().sqrt();
            if norm < 1e-6 {
                continue;
            }
            dir.iter_mut().for_each(|x| *x /= norm);
            let rank = self.rank_of(&self.symbol_dir(&dir));
            check(dir, rank)?;
        }

        Ok(reference.expect("probe set nonempty").1)
    }

    /// Orthogonal projector onto `ker A(w)`, `P = I - A(w)^+ A(w)`.
    pub fn projector(&self, w: &[i64]) -> Result<Projector> {
        if w.iter().all(|&x| x == 0) {
            return Err(AfhError::Config(
                "projector is undefined at w = 0; handle the mean mode separately".into(),
            ));
        }
        let matrix = self.kernel_projector(&self.symbol(w)?);
        Ok(Projector {
            w: w.to_vec(),
            matrix,
        })
    }

    /// `I_d - A^+ A` from the SVD of `A`, with the relative rank threshold.
    pub(crate) fn kernel_projector(&self, a: &DMatrix<f64>) -> DMatrix<f64> {
        let svd = a.clone().svd(false, true);
        let v_t = svd.v_t.expect("svd with V^T requested");
        let sv = &svd.singular_values;
        let sigma_max = sv.iter().cloned().fold(0.0, f64::max);
        let mut p = DMatrix::identity(self.target, self.target);
        if sigma_max == 0.0 {
            return p;
        }
        let thresh = RANK_RTOL * sigma_max * self.constraints.max(self.target) as f64;
        for (i, &s) in sv.iter().enumerate() {
            if s > thresh {
                let row = v_t.row(i);
                // P -= v_i v_i^T
                for r in 0..self.target {
                    for c in 0..self.target {
                        p[(r, c)] -= row[r] * row[c];
                    }
                }
            }
        }
        p
    }

    /// Spectral projection onto A-free mean-zero fields (builds a fresh
    /// projector table; hold a [`SpectralProjection`] for repeated use).
    pub fn project_field(&self, u: &PeriodicField) -> Result<PeriodicField> {
        Ok(SpectralProjection::new(self, u.grid())?.project(u))
    }

    /// Spectral application of the operator and the relative L2 residual.
    pub fn apply_a(&self, u: &PeriodicField) -> Result<(PeriodicField, f64)> {
        if u.components() != self.target {
            return Err(AfhError::Dimension(format!(
                "field has {} components, operator acts on {}",
                u.components(),
                self.target
            )));
        }
        let grid = u.grid().clone();
        if grid.dim() != self.dim {
            return Err(AfhError::Dimension(format!(
                "grid dimension {} does not match operator dimension {}",
                grid.dim(),
                self.dim
            )));
        }
        let vol = grid.len();
        let spec = u.spectrum();
        let mut out = vec![Complex64::default(); self.constraints * vol];
        let mut k = vec![0.0; self.dim];
        let two_pi = 2.0 * std::f64::consts::PI;
        for flat in 0..vol {
            grid.phys_freq(flat, &mut k);
            // (A u)^(w) = 2 pi i A(w/rho) u_hat(w)
            for j in 0..self.constraints {
                let mut acc = Complex64::default();
                for c in 0..self.target {
                    let mut sym = 0.0;
                    for (i, a) in self.matrices.iter().enumerate() {
                        sym += a[(j, c)] * k[i];
                    }
                    acc += sym * spec[c * vol + flat];
                }
                out[j * vol + flat] = Complex64::new(0.0, two_pi) * acc;
            }
        }
        let au = PeriodicField::from_spectrum(grid, self.constraints, &out);
        let nu = u.lp_norm(2.0);
        let na = au.lp_norm(2.0);
        let residual = if nu == 0.0 { 0.0 } else { na / nu };
        Ok((au, residual))
    }
}

/// Kernel projector at one frequency.
#[derive(Debug, Clone)]
pub struct Projector {
    pub w: Vec<i64>,
    pub matrix: DMatrix<f64>,
}

/// Per-grid table of the potential symbol `B(w) = sigma(w) P(w)`, where
/// `sigma(w)` is the product of the squared nonzero singular values of
/// `A(w)` and `P(w)` projects onto `ker A(w)`.
///
/// `sigma` equals the sum of principal r x r minors of `A(w) A(w)^T`, a
/// homogeneous polynomial of degree `2r` in `w`, and by Cayley-Hamilton
/// `sigma P` is a polynomial matrix. `B(D)` is therefore a differential
/// operator of order `2r`: it maps compactly supported smooth fields to
/// compactly supported fields, and `A(w) B(w) = 0` exactly at every mode.
/// Modes at `w = 0` or touching a Nyquist axis are zeroed.
pub struct PotentialBasis {
    target: usize,
    vol: usize,
    grid: Grid,
    /// d*d blocks of sigma(w) P(w) per flat spectral index
    blocks: Vec<f64>,
    /// sigma(w) per flat index, 0 where the block is zeroed
    sigma: Vec<f64>,
}

impl PotentialBasis {
    pub fn new(op: &OperatorSpec, grid: &Grid) -> Result<PotentialBasis> {
        if grid.dim() != op.dim() {
            return Err(AfhError::Dimension(format!(
                "grid dimension {} does not match operator dimension {}",
                grid.dim(),
                op.dim()
            )));
        }
        let d = op.target();
        let vol = grid.len();
        let mut blocks = vec![0.0; d * d * vol];
        let mut sigma = vec![0.0; vol];
        let mut k = vec![0.0; grid.dim()];
        let mut w = vec![0i64; grid.dim()];
        for flat in 0..vol {
            grid.phys_freq(flat, &mut k);
            grid.freq_vector(flat, &mut w);
            let nyq = (0..grid.dim()).any(|a| 2 * w[a] == grid.points()[a] as i64);
            if k.iter().all(|&x| x == 0.0) || nyq {
                continue;
            }
            let sym = op.symbol_dir(&k);
            let svd = sym.clone().svd(false, false);
            let smax = svd.singular_values.iter().cloned().fold(0.0, f64::max);
            let thresh = RANK_RTOL * smax * op.constraints().max(d) as f64;
            let s: f64 = svd
                .singular_values
                .iter()
                .filter(|&&v| v > thresh)
                .map(|&v| v * v)
                .product();
            let p = op.kernel_projector(&sym);
            sigma[flat] = s;
            for r in 0..d {
                for c in 0..d {
                    blocks[(flat * d + r) * d + c] = s * p[(r, c)];
                }
            }
        }
        Ok(PotentialBasis {
            target: d,
            vol,
            grid: grid.clone(),
            blocks,
            sigma,
        })
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn sigma(&self) -> &[f64] {
        &self.sigma
    }

    /// Apply `f(sigma(w)) B(w)` per mode to per-component coefficients.
    pub fn apply_spectrum<F: Fn(f64) -> f64>(&self, spec: &mut [Complex64], scale: F) {
        let d = self.target;
        let vol = self.vol;
        debug_assert_eq!(spec.len(), d * vol);
        let mut tmp = vec![Complex64::default(); d];
        for flat in 0..vol {
            let s = self.sigma[flat];
            if s == 0.0 {
                for r in 0..d {
                    spec[r * vol + flat] = Complex64::default();
                }
                continue;
            }
            let factor = scale(s);
            for r in 0..d {
                let mut acc = Complex64::default();
                for c in 0..d {
                    acc += self.blocks[(flat * d + r) * d + c] * spec[c * vol + flat];
                }
                tmp[r] = factor * acc;
            }
            for r in 0..d {
                spec[r * vol + flat] = tmp[r];
            }
        }
    }

    /// `B(D) phi`: exactly A-free, mean-zero.
    pub fn apply(&self, phi: &PeriodicField) -> PeriodicField {
        assert_eq!(phi.components(), self.target);
        let mut spec = phi.spectrum();
        self.apply_spectrum(&mut spec, |_| 1.0);
        PeriodicField::from_spectrum(phi.grid().clone(), self.target, &spec)
    }
}

/// Per-grid table of kernel projectors, built once and then applied to any
/// number of fields on the same grid. Immutable after construction.
pub struct SpectralProjection {
    target: usize,
    vol: usize,
    grid: Grid,
    /// d*d blocks, identity replaced by zero block at w = 0 (mean removal)
    blocks: Vec<f64>,
}

impl SpectralProjection {
    pub fn new(op: &OperatorSpec, grid: &Grid) -> Result<SpectralProjection> {
        if grid.dim() != op.dim() {
            return Err(AfhError::Dimension(format!(
                "grid dimension {} does not match operator dimension {}",
                grid.dim(),
                op.dim()
            )));
        }
        let d = op.target();
        let vol = grid.len();
        let mut blocks = vec![0.0; d * d * vol];
        let mut k = vec![0.0; grid.dim()];
        let mut w = vec![0i64; grid.dim()];
        for flat in 0..vol {
            grid.phys_freq(flat, &mut k);
            if k.iter().all(|&x| x == 0.0) {
                continue; // zero block: the mean mode is removed
            }
            // Modes mixing a Nyquist axis with a nonzero ordinary axis have no
            // conjugate partner on the grid, so the even-symmetry argument that
            // keeps projected real fields real fails for them. Drop them; pure
            // Nyquist modes are self-conjugate and safe.
            grid.freq_vector(flat, &mut w);
            let nyq = (0..grid.dim()).any(|a| 2 * w[a] == grid.points()[a] as i64);
            let ord = (0..grid.dim()).any(|a| w[a] != 0 && 2 * w[a] != grid.points()[a] as i64);
            if nyq && ord {
                continue;
            }
            let p = op.kernel_projector(&op.symbol_dir(&k));
            for r in 0..d {
                for c in 0..d {
                    blocks[(flat * d + r) * d + c] = p[(r, c)];
                }
            }
        }
        Ok(SpectralProjection {
            target: d,
            vol,
            grid: grid.clone(),
            blocks,
        })
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    /// Apply the projector blocks to per-component coefficients in place.
    pub fn apply_spectrum(&self, spec: &mut [Complex64]) {
        let d = self.target;
        let vol = self.vol;
        debug_assert_eq!(spec.len(), d * vol);
        let mut tmp = vec![Complex64::default(); d];
        for flat in 0..vol {
            for r in 0..d {
                let mut acc = Complex64::default();
                for c in 0..d {
                    acc += self.blocks[(flat * d + r) * d + c] * spec[c * vol + flat];
                }
                tmp[r] = acc;
            }
            for r in 0..d {
                spec[r * vol + flat] = tmp[r];
            }
        }
    }

    /// Project a field onto the discrete A-free mean-zero subspace.
    pub fn project(&self, u: &PeriodicField) -> PeriodicField {
        assert_eq!(u.components(), self.target);
        let mut spec = u.spectrum();
        self.apply_spectrum(&mut spec);
        PeriodicField::from_spectrum(u.grid().clone(), self.target, &spec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn div2() -> OperatorSpec {
        OperatorSpec::divergence(2, 2.0).unwrap()
    }

    #[test]
    fn symbol_examples() {
        let op = div2();
        let s = op.symbol(&[1, 0]).unwrap();
        assert_eq!(s, DMatrix::from_row_slice(1, 2, &[1.0, 0.0]));
        let z = op.symbol(&[0, 0]).unwrap();
        assert!(z.iter().all(|&x| x == 0.0));
        let curl = OperatorSpec::curl2d(2.0).unwrap();
        let s = curl.symbol(&[2, 3]).unwrap();
        assert_eq!(s, DMatrix::from_row_slice(1, 2, &[-3.0, 2.0]));
        assert!(op.symbol(&[1, 0, 0]).is_err());
    }

    #[test]
    fn symbol_linearity() {
        let op = OperatorSpec::curl3d(2.0).unwrap();
        let a = op.symbol(&[1, -2, 3]).unwrap();
        let b = op.symbol(&[4, 0, -1]).unwrap();
        let sum = op.symbol(&[5, -2, 2]).unwrap();
        assert!((a + b - sum).iter().all(|&x| x.abs() < 1e-14));
    }

    #[test]
    fn constant_rank_examples() {
        assert_eq!(div2().check_constant_rank(100).unwrap(), 1);
        assert_eq!(
            OperatorSpec::curl2d(2.0)
                .unwrap()
                .check_constant_rank(100)
                .unwrap(),
            1
        );
        assert_eq!(
            OperatorSpec::curl3d(2.0)
                .unwrap()
                .check_constant_rank(50)
                .unwrap(),
            2
        );
        // A(w) = w1 on scalar fields: rank drops on the line w1 = 0
        let a1 = DMatrix::from_row_slice(1, 1, &[1.0]);
        let a2 = DMatrix::from_row_slice(1, 1, &[0.0]);
        let bad = OperatorSpec::new(vec![a1, a2], 2.0).unwrap();
        match bad.check_constant_rank(10) {
            Err(AfhError::ConstantRankViolation { rank_a, rank_b, .. }) => {
                assert_ne!(rank_a, rank_b);
            }
            other => panic!("expected rank violation, got {other:?}"),
        }
    }

    #[test]
    fn projector_examples() {
        let op = div2();
        let p = op.projector(&[1, 0]).unwrap().matrix;
        let expect = DMatrix::from_row_slice(2, 2, &[0.0, 0.0, 0.0, 1.0]);
        assert!((p.clone() - expect).iter().all(|&x| x.abs() < 1e-12));
        let p = op.projector(&[1, 1]).unwrap().matrix;
        let expect = DMatrix::from_row_slice(2, 2, &[0.5, -0.5, -0.5, 0.5]);
        assert!((p.clone() - expect).iter().all(|&x| x.abs() < 1e-12));
        let curl = OperatorSpec::curl2d(2.0).unwrap();
        let p = curl.projector(&[1, 0]).unwrap().matrix;
        let expect = DMatrix::from_row_slice(2, 2, &[1.0, 0.0, 0.0, 0.0]);
        assert!((p.clone() - expect).iter().all(|&x| x.abs() < 1e-12));
        assert!(op.projector(&[0, 0]).is_err());
    }

    #[test]
    fn projector_identities_on_lattice() {
        for op in [div2(), OperatorSpec::curl2d(2.0).unwrap()] {
            let r = op.check_constant_rank(10).unwrap();
            for w1 in -4..=4i64 {
                for w2 in -4..=4i64 {
                    if w1 == 0 && w2 == 0 {
                        continue;
                    }
                    let p = op.projector(&[w1, w2]).unwrap().matrix;
                    let idem = &p * &p - &p;
                    assert!(idem.iter().all(|&x| x.abs() < 1e-12));
                    let sym = &p - &p.transpose();
                    assert!(sym.iter().all(|&x| x.abs() < 1e-12));
                    let annihilate = op.symbol(&[w1, w2]).unwrap() * &p;
                    assert!(annihilate.iter().all(|&x| x.abs() < 1e-12));
                    assert!((p.trace() - (op.target() - r) as f64).abs() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn project_field_basics() {
        let op = div2();
        let grid = Grid::unit_cube(2, 16).unwrap();
        // constant field goes to zero
        let c = PeriodicField::from_fn(grid.clone(), 2, |_, v| {
            v[0] = 3.0;
            v[1] = -1.0;
        });
        let pc = op.project_field(&c).unwrap();
        assert!(pc.lp_norm(2.0) < 1e-12);
        // u = (sin 2 pi x1, 0): the only modes are +-e1 along e1, killed by P
        let u = PeriodicField::from_fn(grid.clone(), 2, |x, v| {
            v[0] = (2.0 * std::f64::consts::PI * x[0]).sin();
            v[1] = 0.0;
        });
        let pu = op.project_field(&u).unwrap();
        assert!(pu.lp_norm(2.0) < 1e-10);
        // a field depending on x2 in component 1 is already divergence free
        let u = PeriodicField::from_fn(grid, 2, |x, v| {
            v[0] = (2.0 * std::f64::consts::PI * x[1]).cos();
            v[1] = 0.0;
        });
        let (_au, res) = op.apply_a(&u).unwrap();
        assert!(res < 1e-10);
        let pu = op.project_field(&u).unwrap();
        let mut diff = pu.clone();
        diff.axpy(-1.0, &u);
        assert!(diff.lp_norm(2.0) <= 1e-12 * u.lp_norm(2.0).max(1.0));
    }

    #[test]
    fn apply_a_single_mode() {
        let op = div2();
        let grid = Grid::unit_cube(2, 32).unwrap();
        let u = PeriodicField::from_fn(grid, 2, |x, v| {
            v[0] = (2.0 * std::f64::consts::PI * x[0]).sin();
            v[1] = 0.0;
        });
        let (au, res) = op.apply_a(&u).unwrap();
        // A u = 2 pi cos(2 pi x1), residual 2 pi against |u|_2 = 1/sqrt(2)
        assert!((res - 2.0 * std::f64::consts::PI).abs() < 1e-9);
        let expect = PeriodicField::from_fn(au.grid().clone(), 1, |x, v| {
            v[0] = 2.0 * std::f64::consts::PI * (2.0 * std::f64::consts::PI * x[0]).cos();
        });
        let mut diff = au.clone();
        diff.axpy(-1.0, &expect);
        assert!(diff.lp_norm(2.0) < 1e-9);
    }

    #[test]
    fn projection_invariants_random() {
        use rand::{Rng, SeedableRng};
        let op = div2();
        for n in [8usize, 16, 32] {
            let grid = Grid::unit_cube(2, n).unwrap();
            let proj = SpectralProjection::new(&op, &grid).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(n as u64);
            let mut u = PeriodicField::zeros(grid.clone(), 2);
            for v in u.data_mut() {
                *v = rng.gen_range(-1.0..1.0);
            }
            let pu = proj.project(&u);
            // idempotence
            let ppu = proj.project(&pu);
            let mut diff = ppu.clone();
            diff.axpy(-1.0, &pu);
            assert!(diff.lp_norm(2.0) <= 1e-10 * u.lp_norm(2.0));
            // annihilation
            let (_au, res) = op.apply_a(&pu).unwrap();
            assert!(res <= 1e-10);
            // mean removal
            assert!(pu.mean().iter().all(|m| m.abs() <= 1e-12));
            // linearity
            let mut v = PeriodicField::zeros(grid, 2);
            for x in v.data_mut() {
                *x = rng.gen_range(-1.0..1.0);
            }
            let pv = proj.project(&v);
            let mut lin = u.clone();
            lin.scale(0.7);
            lin.axpy(-1.3, &v);
            let plin = proj.project(&lin);
            let mut expect = pu.clone();
            expect.scale(0.7);
            expect.axpy(-1.3, &pv);
            let mut diff = plin.clone();
            diff.axpy(-1.0, &expect);
            assert!(diff.lp_norm(2.0) <= 1e-10 * lin.lp_norm(2.0).max(1.0));
        }
    }

    #[test]
    fn from_json_builtin_and_explicit() {
        let v: serde_json::Value = serde_json::json!({"name": "div", "N": 3, "p": 2.0});
        let op = OperatorSpec::from_json(&v).unwrap();
        assert_eq!((op.dim(), op.target(), op.constraints()), (3, 3, 1));
        let v = serde_json::json!({
            "N": 2, "d": 2, "l": 1, "p": 2.0,
            "matrices": [[0.0, 1.0], [-1.0, 0.0]]
        });
        let op = OperatorSpec::from_json(&v).unwrap();
        assert_eq!(op, OperatorSpec::curl2d(2.0).unwrap());
    }
}
