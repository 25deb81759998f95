use serde::{Deserialize, Serialize};

use crate::error::{AfhError, Result};

/// Uniform periodic grid over an axis-aligned box.
///
/// The canonical case is the cube `Q_rho(x)` with `n` points per axis; the
/// stochastic layer also needs lattice-aligned rectangles, so point counts
/// and side lengths are stored per axis. Sample points are the left points
/// `x_j = center - side/2 + j * h`, which together with the periodic
/// quadrature rule makes the left-point sum a trapezoid sum.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Grid {
    n: Vec<usize>,
    center: Vec<f64>,
    side: Vec<f64>,
}

impl Grid {
    /// Cube with the same point count and side on every axis.
    pub fn cube(dim: usize, n: usize, center: Vec<f64>, side: f64) -> Result<Grid> {
        Grid::rect(vec![n; dim], center, vec![side; dim])
    }

    /// Unit cube centered at the origin.
    pub fn unit_cube(dim: usize, n: usize) -> Result<Grid> {
        Grid::cube(dim, n, vec![0.0; dim], 1.0)
    }

    pub fn rect(n: Vec<usize>, center: Vec<f64>, side: Vec<f64>) -> Result<Grid> {
        if n.is_empty() || n.len() != center.len() || n.len() != side.len() {
            return Err(AfhError::Dimension(format!(
                "grid axes disagree: n has {} entries, center {}, side {}",
                n.len(),
                center.len(),
                side.len()
            )));
        }
        for &ni in &n {
            if ni == 0 || !ni.is_power_of_two() {
                return Err(AfhError::Config(format!(
                    "grid size {ni} is not a power of two"
                )));
            }
        }
        for &s in &side {
            if !(s > 0.0) {
                return Err(AfhError::Config(format!("grid side {s} must be positive")));
            }
        }
        Ok(Grid { n, center, side })
    }

    pub fn dim(&self) -> usize {
        self.n.len()
    }

    pub fn points(&self) -> &[usize] {
        &self.n
    }

    pub fn center(&self) -> &[f64] {
        &self.center
    }

    pub fn side(&self) -> &[f64] {
        &self.side
    }

    /// Total number of grid points.
    pub fn len(&self) -> usize {
        self.n.iter().product()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn spacing(&self, axis: usize) -> f64 {
        self.side[axis] / self.n[axis] as f64
    }

    /// Volume of one quadrature cell, `prod_i h_i`.
    pub fn cell_volume(&self) -> f64 {
        (0..self.dim()).map(|a| self.spacing(a)).product()
    }

    /// Volume of the box.
    pub fn volume(&self) -> f64 {
        self.side.iter().product()
    }

    /// Multi-index of a flat index (row-major, axis 0 slowest).
    pub fn multi_index(&self, mut flat: usize, out: &mut [usize]) {
        for a in (0..self.dim()).rev() {
            out[a] = flat % self.n[a];
            flat /= self.n[a];
        }
    }

    pub fn flat_index(&self, idx: &[usize]) -> usize {
        let mut flat = 0;
        for a in 0..self.dim() {
            flat = flat * self.n[a] + idx[a];
        }
        flat
    }

    /// Physical coordinates of the grid point with the given multi-index.
    pub fn point(&self, idx: &[usize], out: &mut [f64]) {
        for a in 0..self.dim() {
            out[a] = self.center[a] - 0.5 * self.side[a] + idx[a] as f64 * self.spacing(a);
        }
    }

    /// Signed frequency representative in `(-n/2, n/2]` for a storage index.
    pub fn signed_freq(&self, axis: usize, j: usize) -> i64 {
        let n = self.n[axis] as i64;
        let j = j as i64;
        if j <= n / 2 {
            j
        } else {
            j - n
        }
    }

    /// Signed integer frequency vector of a flat spectral index.
    pub fn freq_vector(&self, flat: usize, out: &mut [i64]) {
        let mut idx = vec![0usize; self.dim()];
        self.multi_index(flat, &mut idx);
        for a in 0..self.dim() {
            out[a] = self.signed_freq(a, idx[a]);
        }
    }

    /// Physical frequency `k_a / side_a` of a flat spectral index.
    pub fn phys_freq(&self, flat: usize, out: &mut [f64]) {
        let mut idx = vec![0usize; self.dim()];
        self.multi_index(flat, &mut idx);
        for a in 0..self.dim() {
            out[a] = self.signed_freq(a, idx[a]) as f64 / self.side[a];
        }
    }

    /// Translate the box by `shift` without changing the sampling.
    pub fn translated(&self, shift: &[f64]) -> Grid {
        let mut g = self.clone();
        for a in 0..g.dim() {
            g.center[a] += shift[a];
        }
        g
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_power_of_two() {
        assert!(Grid::unit_cube(2, 24).is_err());
        assert!(Grid::unit_cube(2, 32).is_ok());
    }

    #[test]
    fn indexing_round_trip() {
        let g = Grid::rect(vec![4, 8], vec![0.0, 0.0], vec![1.0, 2.0]).unwrap();
        let mut idx = [0usize; 2];
        for flat in 0..g.len() {
            g.multi_index(flat, &mut idx);
            assert_eq!(g.flat_index(&idx), flat);
        }
    }

    #[test]
    fn signed_frequencies() {
        let g = Grid::unit_cube(1, 8).unwrap();
        let freqs: Vec<i64> = (0..8).map(|j| g.signed_freq(0, j)).collect();
        assert_eq!(freqs, vec![0, 1, 2, 3, 4, -3, -2, -1]);
    }

    #[test]
    fn quadrature_weights() {
        let g = Grid::cube(2, 16, vec![0.5, 0.5], 2.0).unwrap();
        assert!((g.cell_volume() * g.len() as f64 - g.volume()).abs() < 1e-14);
    }
}
