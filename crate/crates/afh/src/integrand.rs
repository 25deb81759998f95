//! Integrands `f(x, xi)` with analytic `xi`-gradients: built-in
//! deterministic families, shift-covariant random families, rescaling
//! `x -> x/eps`, and samplers that check the declared growth and Lipschitz
//! constants.

use serde::{Deserialize, Serialize};

use crate::error::{AfhError, Result};

/// Frozen randomness for the stochastic families: every lattice cell draw
/// is a pure function of `(seed, z + offset)`, so integer shifts relabel
/// cells exactly and shift covariance holds bit for bit.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RandomSeedState {
    pub seed: u64,
    pub offset: Vec<i64>,
}

impl RandomSeedState {
    pub fn new(seed: u64, dim: usize) -> RandomSeedState {
        RandomSeedState {
            seed,
            offset: vec![0; dim],
        }
    }
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e3779b97f4a7c15);
    let mut z = x;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

/// Counter-based uniform draw in [0,1) keyed by (seed, lattice cell).
fn cell_uniform(seed: u64, cell: &[i64]) -> f64 {
    let mut h = splitmix64(seed ^ 0xa076_1d64_78bd_642f);
    for &z in cell {
        h = splitmix64(h ^ (z as u64).wrapping_mul(0x9ddf_ea08_eb38_2d69));
    }
    (h >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

fn pick_value(values: &[f64], probs: &[f64], u: f64) -> f64 {
    let mut acc = 0.0;
    for (v, &p) in values.iter().zip(probs.iter()) {
        acc += p;
        if u < acc {
            return *v;
        }
    }
    *values.last().unwrap()
}

/// One of the built-in integrand families.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Kind {
    /// `|xi|^p`
    Ppower,
    /// `a |xi|^2` with a constant coefficient
    Quadratic { a: f64 },
    /// `min(|xi - zeta|^2, |xi + zeta|^2) + delta |xi|^2`
    DoubleWell { zeta: Vec<f64>, delta: f64 },
    /// `a(x_axis) |xi|^2`, equal half-period layers of `a_lo` and `a_hi`
    Laminate {
        a_lo: f64,
        a_hi: f64,
        axis: usize,
        period: f64,
    },
    /// `a(x) |xi|^2` by cell parity on a lattice of the given period
    Checkerboard { a_lo: f64, a_hi: f64, period: f64 },
    /// `a_z |xi|^2` with i.i.d. coefficients per unit lattice cell
    RandomCheckerboard {
        state: RandomSeedState,
        values: Vec<f64>,
        probs: Vec<f64>,
    },
    /// one global coefficient drawn once per realization (non-ergodic fixture)
    FrozenMixture {
        state: RandomSeedState,
        values: Vec<f64>,
        probs: Vec<f64>,
    },
    /// `f_per + f_comp 1_{Q_R(0)}`
    PeriodicPlusCompact {
        per: Box<IntegrandSpec>,
        comp: Box<IntegrandSpec>,
        radius: f64,
    },
    /// tabulated x-independent integrand on a xi-box, bilinear interpolation
    CustomTable {
        xi_min: Vec<f64>,
        xi_max: Vec<f64>,
        shape: Vec<usize>,
        values: Vec<f64>,
    },
}

/// An integrand together with its declared class constants `(c0, c1, p)`
/// and the accumulated spatial dilation from `rescale`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IntegrandSpec {
    pub kind: Kind,
    pub c0: f64,
    pub c1: f64,
    pub p: f64,
    /// evaluation uses `f(kind, x * x_scale, xi)`; `rescale(eps)` multiplies
    /// this by `1/eps`
    pub x_scale: f64,
}

/// Result of a sampled class-condition check.
#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub pass: bool,
    pub worst_margin: f64,
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Witness {
    pub x: Vec<f64>,
    pub xi1: Vec<f64>,
    pub xi2: Option<Vec<f64>>,
    pub violation: f64,
}

impl IntegrandSpec {
    pub fn new(kind: Kind, c0: f64, c1: f64, p: f64) -> IntegrandSpec {
        IntegrandSpec {
            kind,
            c0,
            c1,
            p,
            x_scale: 1.0,
        }
    }

    /// `|xi|^p` with its natural constants.
    pub fn ppower(p: f64) -> IntegrandSpec {
        IntegrandSpec::new(Kind::Ppower, 1.0, p.max(2.0), p)
    }

    pub fn quadratic(a: f64) -> IntegrandSpec {
        IntegrandSpec::new(Kind::Quadratic { a }, a.max(1.0 / a), a, 2.0)
    }

    /// Equal layers `a_lo`/`a_hi` along `axis` with the given period.
    pub fn laminate(a_lo: f64, a_hi: f64, axis: usize, period: f64) -> IntegrandSpec {
        let amax = a_lo.max(a_hi);
        let amin = a_lo.min(a_hi);
        IntegrandSpec::new(
            Kind::Laminate {
                a_lo,
                a_hi,
                axis,
                period,
            },
            amax.max(1.0 / amin),
            amax,
            2.0,
        )
    }

    pub fn checkerboard(a_lo: f64, a_hi: f64, period: f64) -> IntegrandSpec {
        let amax = a_lo.max(a_hi);
        let amin = a_lo.min(a_hi);
        IntegrandSpec::new(
            Kind::Checkerboard { a_lo, a_hi, period },
            amax.max(1.0 / amin),
            amax,
            2.0,
        )
    }

    /// Regularized double well; `delta > 0` restores the coercive lower bound.
    pub fn double_well(zeta: Vec<f64>, delta: f64) -> IntegrandSpec {
        let z2: f64 = zeta.iter().map(|x| x * x).sum();
        let c0 = (1.0 / delta).max(2.0 + 2.0 * z2 + delta);
        let c1 = 2.0 * (1.0 + z2.sqrt()) * (1.0 + delta) + 2.0;
        IntegrandSpec::new(Kind::DoubleWell { zeta, delta }, c0, c1, 2.0)
    }

    pub fn random_checkerboard(
        seed: u64,
        dim: usize,
        values: Vec<f64>,
        probs: Vec<f64>,
    ) -> IntegrandSpec {
        let amax = values.iter().cloned().fold(f64::MIN, f64::max);
        let amin = values.iter().cloned().fold(f64::MAX, f64::min);
        IntegrandSpec::new(
            Kind::RandomCheckerboard {
                state: RandomSeedState::new(seed, dim),
                values,
                probs,
            },
            amax.max(1.0 / amin),
            amax,
            2.0,
        )
    }

    pub fn frozen_mixture(
        seed: u64,
        dim: usize,
        values: Vec<f64>,
        probs: Vec<f64>,
    ) -> IntegrandSpec {
        let amax = values.iter().cloned().fold(f64::MIN, f64::max);
        let amin = values.iter().cloned().fold(f64::MAX, f64::min);
        IntegrandSpec::new(
            Kind::FrozenMixture {
                state: RandomSeedState::new(seed, dim),
                values,
                probs,
            },
            amax.max(1.0 / amin),
            amax,
            2.0,
        )
    }

    /// Sum of a periodic part and a part vanishing outside `Q_R(0)`.
    pub fn periodic_plus_compact(
        per: IntegrandSpec,
        comp: IntegrandSpec,
        radius: f64,
    ) -> IntegrandSpec {
        let c0 = per.c0 + comp.c0;
        let c1 = per.c1 + comp.c1;
        let p = per.p;
        IntegrandSpec::new(
            Kind::PeriodicPlusCompact {
                per: Box::new(per),
                comp: Box::new(comp),
                radius,
            },
            c0,
            c1,
            p,
        )
    }

    /// Scalar coefficient `a(x)` of the quadratic-in-`xi` families.
    pub fn coefficient_at(&self, x: &[f64]) -> Option<f64> {
        let y: Vec<f64> = x.iter().map(|&v| v * self.x_scale).collect();
        self.kind_coefficient(&y)
    }

    fn kind_coefficient(&self, y: &[f64]) -> Option<f64> {
        match &self.kind {
            Kind::Quadratic { a } => Some(*a),
            Kind::Laminate {
                a_lo,
                a_hi,
                axis,
                period,
            } => {
                let t = y[*axis] / period;
                let frac = t - t.floor();
                Some(if frac < 0.5 { *a_lo } else { *a_hi })
            }
            Kind::Checkerboard { a_lo, a_hi, period } => {
                let parity: i64 = y.iter().map(|&v| (v / period).floor() as i64).sum();
                Some(if parity.rem_euclid(2) == 0 {
                    *a_lo
                } else {
                    *a_hi
                })
            }
            Kind::RandomCheckerboard {
                state,
                values,
                probs,
            } => {
                let cell: Vec<i64> = y
                    .iter()
                    .zip(state.offset.iter())
                    .map(|(&v, &o)| v.floor() as i64 + o)
                    .collect();
                Some(pick_value(values, probs, cell_uniform(state.seed, &cell)))
            }
            Kind::FrozenMixture {
                state,
                values,
                probs,
            } => Some(pick_value(values, probs, cell_uniform(state.seed, &[]))),
            _ => None,
        }
    }

    pub fn eval(&self, x: &[f64], xi: &[f64]) -> Result<f64> {
        let y: Vec<f64> = x.iter().map(|&v| v * self.x_scale).collect();
        self.eval_scaled(&y, xi)
    }

    pub(crate) fn eval_scaled(&self, y: &[f64], xi: &[f64]) -> Result<f64> {
        if let Some(a) = self.kind_coefficient(y) {
            return Ok(a * xi.iter().map(|v| v * v).sum::<f64>());
        }
        match &self.kind {
            Kind::Ppower => {
                let n2: f64 = xi.iter().map(|v| v * v).sum();
                Ok(n2.powf(0.5 * self.p))
            }
            Kind::DoubleWell { zeta, delta } => {
                let mut dm = 0.0;
                let mut dp = 0.0;
                let mut n2 = 0.0;
                for (i, &v) in xi.iter().enumerate() {
                    let z = zeta.get(i).copied().unwrap_or(0.0);
                    dm += (v - z) * (v - z);
                    dp += (v + z) * (v + z);
                    n2 += v * v;
                }
                Ok(dm.min(dp) + delta * n2)
            }
            Kind::PeriodicPlusCompact { per, comp, radius } => {
                let mut val = per.eval(y, xi)?;
                if y.iter().all(|&v| v.abs() < 0.5 * radius) {
                    val += comp.eval(y, xi)?;
                }
                Ok(val)
            }
            Kind::CustomTable {
                xi_min,
                xi_max,
                shape,
                values,
            } => table_interp(xi_min, xi_max, shape, values, xi).map(|(v, _)| v),
            _ => unreachable!("coefficient families handled above"),
        }
    }

    /// Analytic gradient in `xi`.
    pub fn grad_xi(&self, x: &[f64], xi: &[f64], out: &mut [f64]) -> Result<()> {
        let y: Vec<f64> = x.iter().map(|&v| v * self.x_scale).collect();
        self.grad_scaled(&y, xi, out)
    }

    pub(crate) fn grad_scaled(&self, y: &[f64], xi: &[f64], out: &mut [f64]) -> Result<()> {
        if let Some(a) = self.kind_coefficient(y) {
            for (o, &v) in out.iter_mut().zip(xi.iter()) {
                *o = 2.0 * a * v;
            }
            return Ok(());
        }
        match &self.kind {
            Kind::Ppower => {
                let n2: f64 = xi.iter().map(|v| v * v).sum();
                if n2 == 0.0 {
                    out.iter_mut().for_each(|o| *o = 0.0);
                } else {
                    let s = self.p * n2.powf(0.5 * self.p - 1.0);
                    for (o, &v) in out.iter_mut().zip(xi.iter()) {
                        *o = s * v;
                    }
                }
                Ok(())
            }
            Kind::DoubleWell { zeta, delta } => {
                let mut dm = 0.0;
                let mut dp = 0.0;
                for (i, &v) in xi.iter().enumerate() {
                    let z = zeta.get(i).copied().unwrap_or(0.0);
                    dm += (v - z) * (v - z);
                    dp += (v + z) * (v + z);
                }
                let sign = if dm <= dp { 1.0 } else { -1.0 };
                for (i, (o, &v)) in out.iter_mut().zip(xi.iter()).enumerate() {
                    let z = zeta.get(i).copied().unwrap_or(0.0);
                    *o = 2.0 * (v - sign * z) + 2.0 * delta * v;
                }
                Ok(())
            }
            Kind::PeriodicPlusCompact { per, comp, radius } => {
                per.grad_xi(y, xi, out)?;
                if y.iter().all(|&v| v.abs() < 0.5 * radius) {
                    let mut g = vec![0.0; out.len()];
                    comp.grad_xi(y, xi, &mut g)?;
                    for (o, gv) in out.iter_mut().zip(g) {
                        *o += gv;
                    }
                }
                Ok(())
            }
            Kind::CustomTable {
                xi_min,
                xi_max,
                shape,
                values,
            } => {
                let (_, grad) = table_interp(xi_min, xi_max, shape, values, xi)?;
                out.copy_from_slice(&grad);
                Ok(())
            }
            _ => unreachable!(),
        }
    }

    /// The integrand `(x, xi) -> f(x/eps, xi)`; constants unchanged.
    pub fn rescale(&self, eps: f64) -> Result<IntegrandSpec> {
        if !(eps > 0.0) {
            return Err(AfhError::Config(format!(
                "rescale needs eps > 0, got {eps}"
            )));
        }
        let mut out = self.clone();
        out.x_scale /= eps;
        Ok(out)
    }

    /// Freeze a random family to the given seed (identity for
    /// deterministic kinds).
    pub fn sample_random(&self, seed: u64) -> IntegrandSpec {
        let mut out = self.clone();
        match &mut out.kind {
            Kind::RandomCheckerboard { state, .. } | Kind::FrozenMixture { state, .. } => {
                // keep the offset: reseeding selects the realization, while
                // the offset encodes a lattice shift of the same realization
                state.seed = seed;
            }
            _ => {}
        }
        out
    }

    /// Relabel lattice cells by `z`, so that
    /// `eval(f, x + z, xi) == eval(shift(f, z), x, xi)` exactly.
    pub fn shift(&self, z: &[i64]) -> IntegrandSpec {
        let mut out = self.clone();
        if let Kind::RandomCheckerboard { state, .. } = &mut out.kind {
            for (o, &zi) in state.offset.iter_mut().zip(z.iter()) {
                *o += zi;
            }
        }
        out
    }

    /// True when `f` does not depend on `x`.
    pub fn x_independent(&self) -> bool {
        matches!(
            self.kind,
            Kind::Ppower
                | Kind::Quadratic { .. }
                | Kind::DoubleWell { .. }
                | Kind::CustomTable { .. }
        )
    }

    /// Sampled check of the two-sided growth bound
    /// `|xi|^p / c0 - c0 <= f <= c0 (1 + |xi|^p)`.
    pub fn verify_growth(&self, samples: usize, dim: usize, d: usize) -> Result<CheckReport> {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0xfeed);
        let mut worst = f64::INFINITY;
        let mut witness = None;
        for _ in 0..samples.max(1) {
            let x: Vec<f64> = (0..dim).map(|_| rng.gen_range(-10.0..10.0)).collect();
            let mag = 10f64.powf(rng.gen_range(-2.0..3.0));
            let xi: Vec<f64> = (0..d).map(|_| rng.gen_range(-1.0..1.0) * mag).collect();
            let v = self.eval(&x, &xi)?;
            let n = xi.iter().map(|t| t * t).sum::<f64>().powf(0.5 * self.p);
            let low = n / self.c0 - self.c0;
            let high = self.c0 * (1.0 + n);
            let margin = (v - low).min(high - v);
            if margin < worst {
                worst = margin;
                if margin < 0.0 {
                    witness = Some(Witness {
                        x,
                        xi1: xi,
                        xi2: None,
                        violation: -margin,
                    });
                }
            }
        }
        Ok(CheckReport {
            pass: witness.is_none(),
            worst_margin: worst,
            witness,
        })
    }

    /// Sampled check of the p-Lipschitz condition with the declared `c1`
    /// as the `c2` constant of the simplified form.
    pub fn verify_plip(&self, samples: usize, dim: usize, d: usize) -> Result<CheckReport> {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x9d1b);
        let mut worst = f64::INFINITY;
        let mut witness = None;
        for _ in 0..samples.max(1) {
            let x: Vec<f64> = (0..dim).map(|_| rng.gen_range(-10.0..10.0)).collect();
            let mag = 10f64.powf(rng.gen_range(-1.0..2.0));
            let xi1: Vec<f64> = (0..d).map(|_| rng.gen_range(-1.0..1.0) * mag).collect();
            let xi2: Vec<f64> = (0..d).map(|_| rng.gen_range(-1.0..1.0) * mag).collect();
            let v1 = self.eval(&x, &xi1)?;
            let v2 = self.eval(&x, &xi2)?;
            let n1 = xi1.iter().map(|t| t * t).sum::<f64>().sqrt();
            let n2 = xi2.iter().map(|t| t * t).sum::<f64>().sqrt();
            let dist = xi1
                .iter()
                .zip(xi2.iter())
                .map(|(a, b)| (a - b) * (a - b))
                .sum::<f64>()
                .sqrt();
            let bound = self.c1 * (1.0 + n1.powf(self.p - 1.0) + n2.powf(self.p - 1.0)) * dist;
            let margin = bound - (v1 - v2).abs();
            if margin < worst {
                worst = margin;
                if margin < 0.0 {
                    witness = Some(Witness {
                        x,
                        xi1,
                        xi2: Some(xi2),
                        violation: -margin,
                    });
                }
            }
        }
        Ok(CheckReport {
            pass: witness.is_none(),
            worst_margin: worst,
            witness,
        })
    }

    /// The `c5` constant of the Lipschitz bound on normalized cell minima,
    /// computed from the declared constants.
    pub fn c5(&self) -> f64 {
        self.c1 * (2.0 + 2.0 * self.c0.powf((self.p - 1.0) / self.p))
    }

    /// Build from config JSON, e.g.
    /// `{"kind":"laminate","a_lo":1.0,"a_hi":4.0,"axis":0,"period":1.0}`.
    pub fn from_json(value: &serde_json::Value, dim: usize) -> Result<IntegrandSpec> {
        let obj = value
            .as_object()
            .ok_or_else(|| AfhError::Config("integrand config must be an object".into()))?;
        let kind = obj
            .get("kind")
            .and_then(|k| k.as_str())
            .ok_or_else(|| AfhError::Config("integrand config needs a \"kind\"".into()))?;
        let num = |key: &str, default: Option<f64>| -> Result<f64> {
            match obj.get(key) {
                Some(v) => v.as_f64().ok_or_else(|| {
                    AfhError::Config(format!("integrand key {key:?} must be numeric"))
                }),
                None => default
                    .ok_or_else(|| AfhError::Config(format!("integrand key {key:?} missing"))),
            }
        };
        let mut spec = match kind {
            "ppower" => IntegrandSpec::ppower(num("p", Some(2.0))?),
            "quadratic" => IntegrandSpec::quadratic(num("a", Some(1.0))?),
            "laminate" => IntegrandSpec::laminate(
                num("a_lo", Some(1.0))?,
                num("a_hi", Some(4.0))?,
                num("axis", Some(0.0))? as usize,
                num("period", Some(1.0))?,
            ),
            "checkerboard" => IntegrandSpec::checkerboard(
                num("a_lo", Some(1.0))?,
                num("a_hi", Some(4.0))?,
                num("period", Some(1.0))?,
            ),
            "double_well" => {
                let zeta: Vec<f64> = obj
                    .get("zeta")
                    .and_then(|v| serde_json::from_value(v.clone()).ok())
                    .unwrap_or_else(|| vec![1.0, 0.0]);
                IntegrandSpec::double_well(zeta, num("delta", Some(0.01))?)
            }
            "random_checkerboard" | "frozen_mixture" => {
                let seed = obj.get("seed").and_then(|v| v.as_u64()).unwrap_or(0);
                let dist = obj.get("dist").cloned().unwrap_or(serde_json::json!({}));
                let values: Vec<f64> = dist
                    .get("values")
                    .and_then(|v| serde_json::from_value(v.clone()).ok())
                    .unwrap_or_else(|| vec![1.0, 4.0]);
                let probs: Vec<f64> = dist
                    .get("probs")
                    .and_then(|v| serde_json::from_value(v.clone()).ok())
                    .unwrap_or_else(|| vec![0.5, 0.5]);
                if kind == "random_checkerboard" {
                    IntegrandSpec::random_checkerboard(seed, dim, values, probs)
                } else {
                    IntegrandSpec::frozen_mixture(seed, dim, values, probs)
                }
            }
            "periodic_plus_compact" => {
                let per = IntegrandSpec::from_json(
                    obj.get("per").ok_or_else(|| {
                        AfhError::Config("periodic_plus_compact needs \"per\"".into())
                    })?,
                    dim,
                )?;
                let comp = IntegrandSpec::from_json(
                    obj.get("comp").ok_or_else(|| {
                        AfhError::Config("periodic_plus_compact needs \"comp\"".into())
                    })?,
                    dim,
                )?;
                IntegrandSpec::periodic_plus_compact(per, comp, num("R", Some(2.0))?)
            }
            other => {
                return Err(AfhError::Config(format!(
                    "unknown integrand kind {other:?}"
                )));
            }
        };
        if let Some(c0) = obj.get("c0").and_then(|v| v.as_f64()) {
            spec.c0 = c0;
        }
        if let Some(c1) = obj.get("c1").and_then(|v| v.as_f64()) {
            spec.c1 = c1;
        }
        Ok(spec)
    }
}

/// Multilinear interpolation on a xi-grid (d <= 2), with gradient.
fn table_interp(
    xi_min: &[f64],
    xi_max: &[f64],
    shape: &[usize],
    values: &[f64],
    xi: &[f64],
) -> Result<(f64, Vec<f64>)> {
    let d = shape.len();
    if d > 2 {
        return Err(AfhError::Unsupported("custom tables support d <= 2".into()));
    }
    let mut frac = vec![0.0; d];
    let mut base = vec![0usize; d];
    let mut step = vec![0.0; d];
    for a in 0..d {
        if xi[a] < xi_min[a] || xi[a] > xi_max[a] {
            return Err(AfhError::TableRange(xi.to_vec()));
        }
        step[a] = (xi_max[a] - xi_min[a]) / (shape[a] - 1) as f64;
        let t = (xi[a] - xi_min[a]) / step[a];
        let i = (t.floor() as usize).min(shape[a] - 2);
        base[a] = i;
        frac[a] = t - i as f64;
    }
    let at = |idx: &[usize]| -> f64 {
        let mut flat = 0;
        for a in 0..d {
            flat = flat * shape[a] + idx[a];
        }
        values[flat]
    };
    match d {
        1 => {
            let v0 = at(&[base[0]]);
            let v1 = at(&[base[0] + 1]);
            let v = v0 + frac[0] * (v1 - v0);
            Ok((v, vec![(v1 - v0) / step[0]]))
        }
        2 => {
            let v00 = at(&[base[0], base[1]]);
            let v01 = at(&[base[0], base[1] + 1]);
            let v10 = at(&[base[0] + 1, base[1]]);
            let v11 = at(&[base[0] + 1, base[1] + 1]);
            let (s, t) = (frac[0], frac[1]);
            let v = (1.0 - s) * ((1.0 - t) * v00 + t * v01) + s * ((1.0 - t) * v10 + t * v11);
            let gx = ((1.0 - t) * (v10 - v00) + t * (v11 - v01)) / step[0];
            let gy = ((1.0 - s) * (v01 - v00) + s * (v11 - v10)) / step[1];
            Ok((v, vec![gx, gy]))
        }
        _ => unreachable!(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    #[test]
    fn ppower_example() {
        let f = IntegrandSpec::ppower(2.0);
        let v = f.eval(&[0.0, 0.0], &[3.0, 4.0]).unwrap();
        assert!((v - 25.0).abs() < 1e-14);
        let mut g = [0.0; 2];
        f.grad_xi(&[0.0, 0.0], &[3.0, 4.0], &mut g).unwrap();
        assert!((g[0] - 6.0).abs() < 1e-14 && (g[1] - 8.0).abs() < 1e-14);
    }

    #[test]
    fn laminate_layers() {
        let f = IntegrandSpec::laminate(1.0, 4.0, 0, 1.0);
        assert_eq!(f.eval(&[0.25, 0.9], &[1.0, 0.0]).unwrap(), 1.0);
        assert_eq!(f.eval(&[0.75, 0.1], &[1.0, 0.0]).unwrap(), 4.0);
        // half-open cells: the boundary belongs to the upper layer start
        assert_eq!(f.eval(&[0.5, 0.0], &[1.0, 0.0]).unwrap(), 4.0);
        assert_eq!(f.eval(&[0.0, 0.0], &[1.0, 0.0]).unwrap(), 1.0);
    }

    #[test]
    fn double_well_at_well() {
        let f = IntegrandSpec::double_well(vec![1.0, 0.0], 0.01);
        let v = f.eval(&[0.0, 0.0], &[1.0, 0.0]).unwrap();
        assert!((v - 0.01).abs() < 1e-14);
    }

    #[test]
    fn rescale_composition() {
        let f = IntegrandSpec::laminate(1.0, 4.0, 0, 1.0);
        let f4 = f.rescale(0.25).unwrap();
        // period 1/4: eval at 0.1 equals original at 0.4
        assert_eq!(
            f4.eval(&[0.1, 0.0], &[0.0, 1.0]).unwrap(),
            f.eval(&[0.4, 0.0], &[0.0, 1.0]).unwrap()
        );
        let once = f.rescale(0.5).unwrap().rescale(0.5).unwrap();
        let direct = f.rescale(0.25).unwrap();
        assert_eq!(once, direct);
        assert_eq!(
            f.rescale(1.0)
                .unwrap()
                .eval(&[0.3, 0.3], &[1.0, 1.0])
                .unwrap(),
            f.eval(&[0.3, 0.3], &[1.0, 1.0]).unwrap()
        );
    }

    #[test]
    fn rescale_bit_exact_covariance() {
        let f = IntegrandSpec::checkerboard(1.0, 4.0, 1.0);
        let eps = 0.125;
        let fr = f.rescale(eps).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            let x = [rng.gen_range(-4.0..4.0), rng.gen_range(-4.0..4.0)];
            let xi = [rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0)];
            let lhs = fr.eval(&x, &xi).unwrap();
            let rhs = f.eval(&[x[0] / eps, x[1] / eps], &xi).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn growth_checks() {
        let f = IntegrandSpec::ppower(2.0);
        assert!(f.verify_growth(2000, 2, 2).unwrap().pass);
        let q = IntegrandSpec::laminate(1.0, 4.0, 0, 1.0);
        assert!(q.verify_growth(2000, 2, 2).unwrap().pass);
        // declared c0 too small: witnesses at large |xi|
        let mut bad = IntegrandSpec::laminate(1.0, 4.0, 0, 1.0);
        bad.c0 = 1.0;
        let rep = bad.verify_growth(2000, 2, 2).unwrap();
        assert!(!rep.pass && rep.witness.is_some());
    }

    #[test]
    fn plip_checks() {
        for f in [
            IntegrandSpec::ppower(2.0),
            IntegrandSpec::laminate(1.0, 4.0, 0, 1.0),
            IntegrandSpec::double_well(vec![1.0, 0.0], 0.01),
        ] {
            assert!(f.verify_plip(2000, 2, 2).unwrap().pass, "{:?}", f.kind);
        }
    }

    #[test]
    fn gradient_matches_finite_differences() {
        let fams = [
            IntegrandSpec::ppower(2.0),
            IntegrandSpec::ppower(3.0),
            IntegrandSpec::quadratic(2.5),
            IntegrandSpec::laminate(1.0, 4.0, 0, 1.0),
            IntegrandSpec::double_well(vec![0.0, 1.0], 0.01),
            IntegrandSpec::random_checkerboard(9, 2, vec![1.0, 4.0], vec![0.5, 0.5]),
        ];
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for f in fams {
            for _ in 0..1000 {
                let x: [f64; 2] = [rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0)];
                let xi: [f64; 2] = [rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0)];
                let n = (xi[0] * xi[0] + xi[1] * xi[1]).sqrt();
                let h = 1e-5 * (1.0 + n);
                let mut g = [0.0; 2];
                f.grad_xi(&x, &xi, &mut g).unwrap();
                for a in 0..2 {
                    let mut xp = xi;
                    let mut xm = xi;
                    xp[a] += h;
                    xm[a] -= h;
                    let fd = (f.eval(&x, &xp).unwrap() - f.eval(&x, &xm).unwrap()) / (2.0 * h);
                    let scale = g[a].abs().max(1.0);
                    assert!(
                        (fd - g[a]).abs() / scale < 1e-5,
                        "family {:?}: grad {} vs fd {}",
                        f.kind,
                        g[a],
                        fd
                    );
                }
            }
        }
    }

    #[test]
    fn shift_covariance_bit_exact() {
        let f = IntegrandSpec::random_checkerboard(42, 2, vec![1.0, 4.0], vec![0.5, 0.5]);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        assert_eq!(f.shift(&[0, 0]), f);
        let shifted_back = f.shift(&[3, -2]).shift(&[-3, 2]);
        assert_eq!(shifted_back, f);
        for _ in 0..1000 {
            let x = [rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0)];
            let z = [rng.gen_range(-10..10i64), rng.gen_range(-10..10i64)];
            let xi = [rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0)];
            let lhs = f
                .eval(&[x[0] + z[0] as f64, x[1] + z[1] as f64], &xi)
                .unwrap();
            let rhs = f.shift(&z).eval(&x, &xi).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn cell_mean_matches_distribution() {
        let f = IntegrandSpec::random_checkerboard(7, 2, vec![1.0, 4.0], vec![0.5, 0.5]);
        let mut sum = 0.0;
        let n = 100;
        for i in 0..n {
            for j in 0..n {
                sum += f.coefficient_at(&[i as f64 + 0.5, j as f64 + 0.5]).unwrap();
            }
        }
        let mean = sum / (n * n) as f64;
        // mean 2.5, sd 1.5, SE 0.015: three standard errors
        assert!((mean - 2.5).abs() < 0.045, "mean {mean}");
    }

    #[test]
    fn periodic_plus_compact_support() {
        let per = IntegrandSpec::laminate(1.0, 4.0, 0, 1.0);
        let comp = IntegrandSpec::quadratic(3.0);
        let f = IntegrandSpec::periodic_plus_compact(per.clone(), comp.clone(), 2.0);
        let xi = [0.0, 1.0];
        let inside = [0.3, -0.4];
        let outside = [5.0, 0.0];
        assert_eq!(
            f.eval(&inside, &xi).unwrap(),
            per.eval(&inside, &xi).unwrap() + comp.eval(&inside, &xi).unwrap()
        );
        assert_eq!(
            f.eval(&outside, &xi).unwrap(),
            per.eval(&outside, &xi).unwrap()
        );
        let zero_comp =
            IntegrandSpec::periodic_plus_compact(per.clone(), IntegrandSpec::quadratic(0.0), 2.0);
        assert_eq!(
            zero_comp.eval(&inside, &xi).unwrap(),
            per.eval(&inside, &xi).unwrap()
        );
    }

    #[test]
    fn custom_table_range_error() {
        let f = IntegrandSpec::new(
            Kind::CustomTable {
                xi_min: vec![-1.0],
                xi_max: vec![1.0],
                shape: vec![3],
                values: vec![1.0, 0.0, 1.0],
            },
            1.0,
            2.0,
            2.0,
        );
        assert!((f.eval(&[0.0], &[0.5]).unwrap() - 0.5).abs() < 1e-14);
        assert!(matches!(
            f.eval(&[0.0], &[2.0]),
            Err(AfhError::TableRange(_))
        ));
    }

    #[test]
    fn from_json_round() {
        let v = serde_json::json!({"kind":"laminate","a_lo":1.0,"a_hi":4.0,"axis":0,"period":1.0});
        let f = IntegrandSpec::from_json(&v, 2).unwrap();
        assert_eq!(f, IntegrandSpec::laminate(1.0, 4.0, 0, 1.0));
        let v = serde_json::json!({
            "kind":"random_checkerboard","seed":3,
            "dist":{"values":[1.0,4.0],"probs":[0.5,0.5]}
        });
        let f = IntegrandSpec::from_json(&v, 2).unwrap();
        assert_eq!(
            f,
            IntegrandSpec::random_checkerboard(3, 2, vec![1.0, 4.0], vec![0.5, 0.5])
        );
    }
}
