use serde::{Deserialize, Serialize};

use crate::error::{AfhError, Result};
use crate::fields::field::PeriodicField;
use crate::fields::grid::Grid;

/// Cutoff profile for compact-support masking.
///
/// The resulting window `theta` is 0 within `inner_margin/2` of the box
/// boundary, ramps with a polynomial smoothstep over the next
/// `inner_margin/2`, and is identically 1 on the inner box obtained by
/// removing a band of width `inner_margin * side` from each face.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CutoffProfile {
    pub inner_margin: f64,
    pub smoothness: usize,
}

impl Default for CutoffProfile {
    fn default() -> Self {
        CutoffProfile {
            inner_margin: 0.125,
            smoothness: 3,
        }
    }
}

/// Polynomial smoothstep of odd order on [0, 1].
fn smoothstep(order: usize, t: f64) -> f64 {
    if t <= 0.0 {
        return 0.0;
    }
    if t >= 1.0 {
        return 1.0;
    }
    match order {
        1 => t,
        3 => t * t * (3.0 - 2.0 * t),
        _ => {
            // order 5 and up: quintic is smooth enough for the discrete energies
            t * t * t * (t * (t * 6.0 - 15.0) + 10.0)
        }
    }
}

impl CutoffProfile {
    pub fn new(inner_margin: f64, smoothness: usize) -> Result<CutoffProfile> {
        if !(inner_margin > 0.0 && inner_margin < 0.5) {
            return Err(AfhError::Config(format!(
                "cutoff margin {inner_margin} must lie in (0, 1/2)"
            )));
        }
        if smoothness == 0 {
            return Err(AfhError::Config("cutoff smoothness must be >= 1".into()));
        }
        Ok(CutoffProfile {
            inner_margin,
            smoothness,
        })
    }

    /// Window values at every grid point.
    pub fn window(&self, grid: &Grid) -> Vec<f64> {
        let dim = grid.dim();
        let vol = grid.len();
        let mut theta = vec![1.0; vol];
        let mut idx = vec![0usize; dim];
        let mut x = vec![0.0; dim];
        for flat in 0..vol {
            grid.multi_index(flat, &mut idx);
            grid.point(&idx, &mut x);
            let mut t = 1.0;
            for a in 0..dim {
                let lo = grid.center()[a] - 0.5 * grid.side()[a];
                let hi = grid.center()[a] + 0.5 * grid.side()[a];
                let dist = (x[a] - lo).min(hi - x[a]);
                let width = self.inner_margin * grid.side()[a];
                // dead band on [0, width/2], ramp on [width/2, width]
                let s = (dist - 0.5 * width) / (0.5 * width);
                t *= smoothstep(self.smoothness, s);
            }
            theta[flat] = t;
        }
        theta
    }
}

/// Generalized smoothstep `S_m` on [0, 1]: the polynomial of degree
/// `2m + 1` with `m` vanishing derivatives at both ends (a C^m ramp).
pub fn smoothstep_cm(t: f64, m: usize) -> f64 {
    if t <= 0.0 {
        return 0.0;
    }
    if t >= 1.0 {
        return 1.0;
    }
    // S_m(t) = sum_n (-1)^n C(m+n, n) C(2m+1, m-n) t^(m+n+1)
    let binom = |n: usize, k: usize| -> f64 {
        let mut b = 1.0f64;
        for i in 0..k {
            b = b * (n - i) as f64 / (i + 1) as f64;
        }
        b
    };
    let mut acc = 0.0;
    let mut tp = t.powi(m as i32 + 1);
    for n in 0..=m {
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        acc += sign * binom(m + n, n) * binom(2 * m + 1, m - n) * tp;
        tp *= t;
    }
    acc.clamp(0.0, 1.0)
}

/// Window that is 0 within `dead * side` of each face, rises with a C^m
/// ramp over the next `ramp * side`, and is 1 on the remaining inner box.
/// High orders keep the spectral tails of windowed fields small, which the
/// compact-support cell solver relies on.
pub fn support_window(grid: &Grid, dead: f64, ramp: f64, order: usize) -> Vec<f64> {
    let dim = grid.dim();
    support_window_axes(grid, &vec![dead; dim], &vec![ramp; dim], order)
}

/// Per-axis variant of [`support_window`]: `dead[a]` and `ramp[a]` are
/// fractions of `side[a]`, so rectangles can carry bands of equal absolute
/// width on every face.
pub fn support_window_axes(grid: &Grid, dead: &[f64], ramp: &[f64], order: usize) -> Vec<f64> {
    let dim = grid.dim();
    let vol = grid.len();
    let mut theta = vec![1.0; vol];
    let mut idx = vec![0usize; dim];
    let mut x = vec![0.0; dim];
    for flat in 0..vol {
        grid.multi_index(flat, &mut idx);
        grid.point(&idx, &mut x);
        let mut t = 1.0;
        for a in 0..dim {
            let lo = grid.center()[a] - 0.5 * grid.side()[a];
            let hi = grid.center()[a] + 0.5 * grid.side()[a];
            let e = (x[a] - lo).min(hi - x[a]) / grid.side()[a];
            t *= smoothstep_cm((e - dead[a]) / ramp[a], order);
        }
        theta[flat] = t;
    }
    theta
}

/// Multiply `u` by the cutoff vanishing near the box boundary.
pub fn mask_compact(u: &PeriodicField, margin: f64) -> Result<PeriodicField> {
    let profile = CutoffProfile::new(margin, 3)?;
    let theta = profile.window(u.grid());
    let vol = u.grid().len();
    let mut out = u.clone();
    for c in 0..u.components() {
        let oc = out.component_mut(c);
        for j in 0..vol {
            oc[j] *= theta[j];
        }
    }
    Ok(out)
}

/// Remove the mean while preserving compact support: subtract a multiple of
/// the window itself instead of a global constant.
pub fn recenter_compact(u: &mut PeriodicField, theta: &[f64]) {
    let vol = u.grid().len();
    let theta_mean: f64 = theta.iter().sum::<f64>() / vol as f64;
    if theta_mean == 0.0 {
        return;
    }
    let means = u.mean();
    for c in 0..u.components() {
        let shift = means[c] / theta_mean;
        let uc = u.component_mut(c);
        for j in 0..vol {
            uc[j] -= shift * theta[j];
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_field_masked_inner_cube() {
        // margin 1/8: theta = 1 on the inner (3/4)-cube
        let g = Grid::unit_cube(2, 64).unwrap();
        let u = PeriodicField::from_fn(g.clone(), 1, |_, v| v[0] = 2.5);
        let masked = mask_compact(&u, 0.125).unwrap();
        let mut idx = [0usize; 2];
        let mut x = [0.0; 2];
        for flat in 0..g.len() {
            g.multi_index(flat, &mut idx);
            g.point(&idx, &mut x);
            let inner = x.iter().all(|&xi| xi.abs() <= 0.375 - 1e-12);
            if inner {
                assert_eq!(masked.data()[flat], 2.5);
            }
            let boundary = x.iter().any(|&xi| xi.abs() >= 0.5 - 0.0625 + 1e-12);
            if boundary {
                assert_eq!(masked.data()[flat], 0.0);
            }
        }
        let z = PeriodicField::zeros(g, 1);
        assert_eq!(mask_compact(&z, 0.125).unwrap(), z);
    }

    #[test]
    fn recenter_keeps_support() {
        let g = Grid::unit_cube(2, 32).unwrap();
        let u = PeriodicField::from_fn(g.clone(), 1, |x, v| v[0] = 1.0 + x[0]);
        let mut masked = mask_compact(&u, 0.125).unwrap();
        let theta = CutoffProfile::new(0.125, 3).unwrap().window(&g);
        recenter_compact(&mut masked, &theta);
        assert!(masked.mean()[0].abs() < 1e-12);
        for (j, &t) in theta.iter().enumerate() {
            if t == 0.0 {
                assert_eq!(masked.data()[j], 0.0);
            }
        }
    }

    #[test]
    fn window_range() {
        let g = Grid::unit_cube(2, 32).unwrap();
        let theta = CutoffProfile::default().window(&g);
        assert!(theta.iter().all(|&t| (0.0..=1.0).contains(&t)));
        assert!(theta.iter().any(|&t| t == 1.0));
        assert!(theta.iter().any(|&t| t == 0.0));
    }
}
