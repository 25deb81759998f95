//! Thin multidimensional FFT layer over `rustfft`.
//!
//! Coefficient convention: `forward` returns Fourier coefficients
//! `u_hat(w) = (1/vol) sum_x u(x) exp(-2 pi i w.x / n)`, so a pure mode of
//! unit amplitude has coefficients of magnitude 1/2 at `+-w` and Parseval
//! reads `(1/vol) sum_x |u(x)|^2 = sum_w |u_hat(w)|^2`.

use std::cell::RefCell;
use std::collections::HashMap;
use std::sync::Arc;

use num_complex::Complex64;
use rustfft::{Fft, FftDirection, FftPlanner};

thread_local! {
    static PLANS: RefCell<HashMap<(usize, bool), Arc<dyn Fft<f64>>>> =
        RefCell::new(HashMap::new());
}

fn plan(len: usize, inverse: bool) -> Arc<dyn Fft<f64>> {
    PLANS.with(|cache| {
        cache
            .borrow_mut()
            .entry((len, inverse))
            .or_insert_with(|| {
                let dir = if inverse {
                    FftDirection::Inverse
                } else {
                    FftDirection::Forward
                };
                FftPlanner::new().plan_fft(len, dir)
            })
            .clone()
    })
}

/// In-place unnormalized DFT along every axis of a row-major array.
fn fft_nd_raw(data: &mut [Complex64], shape: &[usize], inverse: bool) {
    let total: usize = shape.iter().product();
    assert_eq!(data.len(), total);
    let mut line: Vec<Complex64> = Vec::new();
    for (axis, &n) in shape.iter().enumerate() {
        if n == 1 {
            continue;
        }
        let fft = plan(n, inverse);
        line.resize(n, Complex64::default());
        // stride between consecutive entries along `axis`
        let stride: usize = shape[axis + 1..].iter().product();
        let block = stride * n;
        for base in (0..total).step_by(block) {
            for off in 0..stride {
                for j in 0..n {
                    line[j] = data[base + off + j * stride];
                }
                fft.process(&mut line);
                for j in 0..n {
                    data[base + off + j * stride] = line[j];
                }
            }
        }
    }
}

/// Forward transform of one real component to normalized coefficients.
pub fn forward(data: &[f64], shape: &[usize]) -> Vec<Complex64> {
    let total: usize = shape.iter().product();
    let mut buf: Vec<Complex64> = data.iter().map(|&x| Complex64::new(x, 0.0)).collect();
    fft_nd_raw(&mut buf, shape, false);
    let scale = 1.0 / total as f64;
    for c in buf.iter_mut() {
        *c *= scale;
    }
    buf
}

/// Inverse transform back to a real field; the imaginary part is dropped.
pub fn inverse(spec: &[Complex64], shape: &[usize]) -> Vec<f64> {
    let mut buf = spec.to_vec();
    fft_nd_raw(&mut buf, shape, true);
    buf.iter().map(|c| c.re).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_2d() {
        let shape = [8, 16];
        let n: usize = shape.iter().product();
        let data: Vec<f64> = (0..n).map(|i| ((i * 37 % 101) as f64).sin()).collect();
        let spec = forward(&data, &shape);
        let back = inverse(&spec, &shape);
        for (a, b) in data.iter().zip(back.iter()) {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn single_mode_coefficients() {
        // u(x) = sin(2 pi x) on 16 points: u_hat(+-1) = -+ i/2.
        let n = 16usize;
        let data: Vec<f64> = (0..n)
            .map(|j| (2.0 * std::f64::consts::PI * j as f64 / n as f64).sin())
            .collect();
        let spec = forward(&data, &[n]);
        assert!((spec[1] - Complex64::new(0.0, -0.5)).norm() < 1e-12);
        assert!((spec[n - 1] - Complex64::new(0.0, 0.5)).norm() < 1e-12);
        assert!(spec[0].norm() < 1e-12);
    }

    #[test]
    fn parseval() {
        let shape = [4, 8, 2];
        let n: usize = shape.iter().product();
        let data: Vec<f64> = (0..n).map(|i| (i as f64 * 0.7).cos()).collect();
        let spec = forward(&data, &shape);
        let phys: f64 = data.iter().map(|x| x * x).sum::<f64>() / n as f64;
        let freq: f64 = spec.iter().map(|c| c.norm_sqr()).sum();
        assert!((phys - freq).abs() < 1e-12);
    }
}
