//! The error laboratory: empirical average/maximum relative error of a norm
//! approximation over the unit sphere, with a sample-doubling convergence
//! gate, least-squares calibration of the Seol-Cheun coefficients, and the
//! grid search for the Mukherjee rescaling factor.
//!
//! Everything here is deterministic. Sample batches are pure functions of
//! `(seed, dim, batch index)`; per-batch statistics are reduced with pairwise
//! summation in batch-index order, so a run's output is bit-identical across
//! repetitions and across thread counts. All error values are fractions;
//! percent belongs to presentation layers.

use rayon::prelude::*;

use crate::error::LabError;
use crate::norms;
use crate::params;
use crate::sampler::{SampleBatch, SamplerConfig};
use crate::tables;

/// Number of Gaussian vectors used to fit the Seol-Cheun coefficients.
pub const DEFAULT_CALIBRATION_SAMPLES: u64 = 100_000;

/// Convergence policy for the sample-doubling loop.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Convergence {
    epsilon: f64,
    initial_points: u64,
    max_points: u64,
}

impl Convergence {
    pub fn new(epsilon: f64, initial_points: u64, max_points: u64) -> Result<Self, LabError> {
        if !epsilon.is_finite() || epsilon <= 0.0 {
            return Err(LabError::BadEpsilon { epsilon });
        }
        if initial_points == 0 {
            return Err(LabError::TooFewPoints {
                min: 1,
                got: initial_points,
            });
        }
        if max_points < initial_points {
            return Err(LabError::CapBelowInitial {
                initial_points,
                max_points,
            });
        }
        Ok(Self {
            epsilon,
            initial_points,
            max_points,
        })
    }

    /// Full-precision policy: epsilon 1e-5, first round 2^20 points,
    /// cap 2^28 points.
    pub fn standard() -> Self {
        Self {
            epsilon: 1e-5,
            initial_points: 1 << 20,
            max_points: 1 << 28,
        }
    }

    /// Loose policy for quick runs: epsilon 1e-4, first round 2^16 points.
    pub fn fast() -> Self {
        Self {
            epsilon: 1e-4,
            initial_points: 1 << 16,
            max_points: 1 << 28,
        }
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    pub fn initial_points(&self) -> u64 {
        self.initial_points
    }

    pub fn max_points(&self) -> u64 {
        self.max_points
    }
}

impl Default for Convergence {
    fn default() -> Self {
        Self::standard()
    }
}

/// Converged (or capped) error estimates for one norm.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ErrorReport {
    /// Mean of |N(x) - 1| over the sample, as a fraction.
    pub are: f64,
    /// Max of |N(x) - 1| over the sample, as a fraction.
    pub mre_empirical: f64,
    /// Closed-form supremum of |N(x) - 1|, where one exists.
    pub mre_theoretical: Option<f64>,
    /// Total points evaluated (the final round's cumulative count).
    pub samples_used: u64,
    /// False when the cap was reached before both deltas fell under epsilon.
    pub converged: bool,
    /// The threshold both |delta ARE| and |delta MRE| had to reach.
    pub epsilon: f64,
}

/// ARE/MRE triple for one column of a table row.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ErrorPair {
    pub are: f64,
    pub mre_empirical: f64,
    pub mre_theoretical: Option<f64>,
}

/// One dimension's worth of empirical errors for the four approximations,
/// measured on a shared converged sample set.
#[derive(Debug, Clone, PartialEq)]
pub struct Table2Row {
    pub n: usize,
    /// Seol-Cheun a*Dinf + b*D1 with (a, b) freshly calibrated.
    pub seol: ErrorPair,
    /// Barni weighted-D1 with minimax-optimal weights.
    pub barni: ErrorPair,
    /// Mukherjee norm rescaled by delta*.
    pub normalized: ErrorPair,
    /// Plain Mukherjee norm.
    pub mukherjee: ErrorPair,
    pub seol_a: f64,
    pub seol_b: f64,
    pub samples_used: u64,
    pub converged: bool,
}

/// One dimension's worth of rescaled-Mukherjee errors at delta* and at the
/// grid-searched delta-hat, both over the same cached sample set.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Table3Row {
    pub n: usize,
    pub delta_star: f64,
    pub are_at_star: f64,
    pub mre_at_star: f64,
    pub delta_hat: f64,
    pub are_at_hat: f64,
    pub mre_at_hat: f64,
    pub grid_step: f64,
    pub samples_used: u64,
    pub converged: bool,
}

/// What a calibration produced: either fitted Seol-Cheun coefficients or a
/// grid-searched rescaling factor.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CalibrationParams {
    SeolCheun { a: f64, b: f64 },
    DeltaHat(f64),
}

#[derive(Debug, Clone, PartialEq)]
pub struct CalibrationResult {
    pub params: CalibrationParams,
    /// Mean squared residual for Seol-Cheun; empirical MRE for delta-hat.
    pub objective: f64,
    pub samples_used: u64,
    pub seed: u64,
    /// Set when the result is usable but suspicious (e.g. a fitted
    /// coefficient came out non-positive).
    pub warning: Option<String>,
}

/// Sums `v` with a fixed-shape pairwise (tree) reduction: the result depends
/// only on the values and their order, never on thread scheduling, and the
/// rounding error grows like log(len) instead of len.
pub(crate) fn pairwise_sum(v: &[f64]) -> f64 {
    if v.len() <= 8 {
        let Some((first, rest)) = v.split_first() else {
            return 0.0;
        };
        let mut sum = *first;
        for x in rest {
            sum += *x;
        }
        sum
    } else {
        let mid = v.len() / 2;
        pairwise_sum(&v[..mid]) + pairwise_sum(&v[mid..])
    }
}

/// ARE and MRE of `norm` over externally supplied sphere batches.
///
/// Streaming: one pass, nothing retained but per-batch partial sums. Every
/// point is checked to lie on the unit sphere (d2 within 1e-9 of 1).
pub fn empirical_errors<F>(norm: F, batches: &[SampleBatch]) -> Result<(f64, f64), LabError>
where
    F: Fn(&[f64]) -> f64,
{
    let mut batch_sums = Vec::with_capacity(batches.len());
    let mut mre = 0.0f64;
    let mut total: u64 = 0;
    let mut errs: Vec<f64> = Vec::new();
    for (bi, batch) in batches.iter().enumerate() {
        errs.clear();
        for (pi, p) in batch.points().enumerate() {
            let deviation = (norms::d2(p) - 1.0).abs();
            if deviation > 1e-9 {
                return Err(LabError::OffSpherePoint {
                    batch: bi,
                    index: pi,
                    deviation,
                });
            }
            errs.push((norm(p) - 1.0).abs());
        }
        total += errs.len() as u64;
        batch_sums.push(pairwise_sum(&errs));
        mre = errs.iter().fold(mre, |m, e| m.max(*e));
    }
    if total == 0 {
        return Err(LabError::EmptyStream);
    }
    Ok((pairwise_sum(&batch_sums) / total as f64, mre))
}

/// Scratch buffers handed to a multi-norm evaluator so the per-point sort is
/// done once per point, not once per norm.
struct EngineScratch {
    sorted: Vec<f64>,
    prefix: Vec<f64>,
}

struct BatchStat {
    sums: Vec<f64>,
    maxes: Vec<f64>,
}

/// The sample-doubling engine shared by every converged measurement.
///
/// Evaluates `eval` (which writes `k` absolute errors per point) over sphere
/// batches, growing the cumulative sample 2^k-style from
/// `conv.initial_points` until both |delta ARE| <= epsilon and
/// |delta MRE| <= epsilon hold for ALL k norms in the same round, or the
/// point cap is reached (`converged = false`, never an error). Returns the
/// per-norm `(are, mre)` pairs, the cumulative sample count, and the flag.
fn run_engine<F>(
    k: usize,
    cfg: &SamplerConfig,
    conv: &Convergence,
    eval: F,
) -> (Vec<(f64, f64)>, u64, bool)
where
    F: Fn(&[f64], &mut EngineScratch, &mut [f64]) + Sync,
{
    let bs = cfg.batch_size() as u64;
    let initial_batches = conv.initial_points.div_ceil(bs);
    let cap_batches = (conv.max_points / bs).max(initial_batches);

    let mut stats: Vec<BatchStat> = Vec::new();
    let mut target = initial_batches;
    let mut prev: Option<Vec<(f64, f64)>> = None;
    loop {
        let done = stats.len() as u64;
        let fresh: Vec<BatchStat> = (done..target)
            .into_par_iter()
            .map(|i| {
                let batch = cfg.sample_unit_sphere(i);
                let mut scratch = EngineScratch {
                    sorted: Vec::with_capacity(cfg.dim()),
                    prefix: Vec::with_capacity(cfg.dim()),
                };
                let mut err = vec![0.0f64; k];
                let mut cols: Vec<Vec<f64>> = (0..k)
                    .map(|_| Vec::with_capacity(cfg.batch_size()))
                    .collect();
                for p in batch.points() {
                    eval(p, &mut scratch, &mut err);
                    for (col, e) in cols.iter_mut().zip(&err) {
                        col.push(*e);
                    }
                }
                BatchStat {
                    sums: cols.iter().map(|c| pairwise_sum(c)).collect(),
                    maxes: cols
                        .iter()
                        .map(|c| c.iter().fold(0.0f64, |m, e| m.max(*e)))
                        .collect(),
                }
            })
            .collect();
        stats.extend(fresh);

        let total = stats.len() as u64 * bs;
        let mut cur = Vec::with_capacity(k);
        let mut column: Vec<f64> = Vec::with_capacity(stats.len());
        for norm_i in 0..k {
            column.clear();
            column.extend(stats.iter().map(|s| s.sums[norm_i]));
            let are = pairwise_sum(&column) / total as f64;
            let mre = stats.iter().fold(0.0f64, |m, s| m.max(s.maxes[norm_i]));
            cur.push((are, mre));
        }

        if let Some(prev) = &prev {
            let settled = prev.iter().zip(&cur).all(|(p, c)| {
                (p.0 - c.0).abs() <= conv.epsilon && (p.1 - c.1).abs() <= conv.epsilon
            });
            if settled {
                return (cur, total, true);
            }
        }
        if target >= cap_batches {
            return (cur, total, false);
        }
        prev = Some(cur);
        target = (target * 2).min(cap_batches);
    }
}

/// ARE/MRE of a single norm with the sample-doubling convergence gate.
///
/// Rounds double the cumulative sample (round k+1 keeps round k's points and
/// appends as many again); the loop stops when both the ARE delta and the
/// MRE delta between consecutive rounds are at most `conv.epsilon`, or at
/// the point cap with `converged = false`.
pub fn converged_errors<F>(norm: F, cfg: &SamplerConfig, conv: &Convergence) -> ErrorReport
where
    F: Fn(&[f64]) -> f64 + Sync,
{
    let (pairs, samples_used, converged) = run_engine(1, cfg, conv, |x, _scratch, out| {
        out[0] = (norm(x) - 1.0).abs()
    });
    ErrorReport {
        are: pairs[0].0,
        mre_empirical: pairs[0].1,
        mre_theoretical: None,
        samples_used,
        converged,
        epsilon: conv.epsilon,
    }
}

/// Monte-Carlo estimates of the Gaussian moments behind the Seol-Cheun
/// normal equations, plus E[D2^2] for the fitting objective.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaussianMoments {
    /// E[Dinf^2]
    pub inf_inf: f64,
    /// E[Dinf * D1]
    pub inf_one: f64,
    /// E[D1^2]
    pub one_one: f64,
    /// E[D2 * Dinf]
    pub two_inf: f64,
    /// E[D2 * D1]
    pub two_one: f64,
    /// E[D2^2]
    pub two_two: f64,
    pub samples_used: u64,
}

impl GaussianMoments {
    /// Mean squared residual E[(a*Dinf + b*D1 - D2)^2] under these moments.
    pub fn mse(&self, a: f64, b: f64) -> f64 {
        self.two_two - 2.0 * (a * self.two_inf + b * self.two_one)
            + a * a * self.inf_inf
            + 2.0 * a * b * self.inf_one
            + b * b * self.one_one
    }

    /// Solves the 2x2 normal equations in closed form; errors out when the
    /// system's condition number exceeds 1e12 (collinear norms, e.g. n = 1).
    pub fn solve(&self) -> Result<(f64, f64), LabError> {
        let (m11, m12, m22) = (self.inf_inf, self.inf_one, self.one_one);
        let trace = m11 + m22;
        let disc = ((m11 - m22) * (m11 - m22) + 4.0 * m12 * m12).sqrt();
        let lambda_max = 0.5 * (trace + disc);
        let lambda_min = 0.5 * (trace - disc);
        let cond = if lambda_min > 0.0 {
            lambda_max / lambda_min
        } else {
            f64::INFINITY
        };
        if !cond.is_finite() || cond > 1e12 {
            return Err(LabError::DegenerateSystem { cond });
        }
        let det = m11 * m22 - m12 * m12;
        let a = (self.two_inf * m22 - self.two_one * m12) / det;
        let b = (m11 * self.two_one - m12 * self.two_inf) / det;
        Ok((a, b))
    }
}

/// Estimates the five normal-equation moments (and E[D2^2]) over exactly
/// `sample_count` Gaussian vectors drawn from `cfg`'s Gaussian stream.
pub fn gaussian_moments(
    cfg: &SamplerConfig,
    sample_count: u64,
) -> Result<GaussianMoments, LabError> {
    if sample_count < 2 {
        return Err(LabError::TooFewPoints {
            min: 2,
            got: sample_count,
        });
    }
    const MOMENTS: usize = 6;
    let mut batch_sums: [Vec<f64>; MOMENTS] = Default::default();
    let mut scratch: [Vec<f64>; MOMENTS] = Default::default();
    let mut remaining = sample_count;
    let mut index = 0u64;
    while remaining > 0 {
        let batch = cfg.sample_gaussian(index);
        index += 1;
        for s in scratch.iter_mut() {
            s.clear();
        }
        for p in batch
            .points()
            .take(remaining.min(batch.len() as u64) as usize)
        {
            let dinf = norms::dinf(p);
            let d1 = norms::d1(p);
            let d2 = norms::d2(p);
            scratch[0].push(dinf * dinf);
            scratch[1].push(dinf * d1);
            scratch[2].push(d1 * d1);
            scratch[3].push(d2 * dinf);
            scratch[4].push(d2 * d1);
            scratch[5].push(d2 * d2);
        }
        remaining -= scratch[0].len() as u64;
        for (sums, s) in batch_sums.iter_mut().zip(&scratch) {
            sums.push(pairwise_sum(s));
        }
    }
    let count = sample_count as f64;
    let m = |i: usize| pairwise_sum(&batch_sums[i]) / count;
    Ok(GaussianMoments {
        inf_inf: m(0),
        inf_one: m(1),
        one_one: m(2),
        two_inf: m(3),
        two_one: m(4),
        two_two: m(5),
        samples_used: sample_count,
    })
}

/// Fits `a*Dinf + b*D1 ~ D2` by least squares over `sample_count` Gaussian
/// vectors: estimates the moment matrix, solves the 2x2 normal equations in
/// closed form, and reports the achieved mean squared residual.
///
/// A non-positive fitted coefficient is reported as a warning on the result,
/// not an error; a degenerate system (condition number above 1e12, e.g.
/// n = 1 where all three norms coincide) is an error.
pub fn calibrate_seol_cheun(
    cfg: &SamplerConfig,
    sample_count: u64,
) -> Result<CalibrationResult, LabError> {
    let moments = gaussian_moments(cfg, sample_count)?;
    let (a, b) = moments.solve()?;
    let warning = if a <= 0.0 || b <= 0.0 {
        Some(format!(
            "fitted coefficients are not both positive (a = {a}, b = {b}); \
             the combination is not a norm"
        ))
    } else {
        None
    };
    Ok(CalibrationResult {
        params: CalibrationParams::SeolCheun { a, b },
        objective: moments.mse(a, b),
        samples_used: sample_count,
        seed: cfg.seed(),
        warning,
    })
}

/// Max of |v/delta - 1| over a value set, computed from the set's extremes.
///
/// Exact, not an approximation: v -> fl(v/delta) is monotone non-decreasing
/// in v (correctly rounded division by a positive constant), fl(u - 1) is
/// monotone in u, and |.| over a monotone image attains its max at an
/// endpoint — so scanning every value would return exactly this number.
fn scaled_mre(vmin: f64, vmax: f64, delta: f64) -> f64 {
    let lo = (vmin / delta - 1.0).abs();
    let hi = (vmax / delta - 1.0).abs();
    lo.max(hi)
}

/// Per-point Mukherjee values over a converged sample set, cached so that a
/// grid search over the rescaling factor never re-evaluates the norm.
#[derive(Debug, Clone, PartialEq)]
pub struct MukherjeeCache {
    dim: usize,
    seed: u64,
    epsilon: f64,
    batches: Vec<Vec<f64>>,
    vmin: f64,
    vmax: f64,
    samples_used: u64,
    converged: bool,
}

impl MukherjeeCache {
    /// Samples the sphere until the errors of `D_M/delta*` pass the
    /// convergence gate (or the cap), caching every point's `D_M` value.
    pub fn build(cfg: &SamplerConfig, conv: &Convergence) -> Result<Self, LabError> {
        let n = cfg.dim();
        if n < 2 {
            return Err(LabError::UnsupportedDimension { min: 2, got: n });
        }
        let delta_star = params::barni_optimal(n)?.delta_star;
        let inv = tables::inv_sqrt(n);

        struct CacheBatch {
            values: Vec<f64>,
            err_sum: f64,
            min: f64,
            max: f64,
        }

        let bs = cfg.batch_size() as u64;
        let initial_batches = conv.initial_points.div_ceil(bs);
        let cap_batches = (conv.max_points / bs).max(initial_batches);

        let mut stats: Vec<CacheBatch> = Vec::new();
        let mut target = initial_batches;
        let mut prev: Option<(f64, f64)> = None;
        let (samples_used, converged) = loop {
            let done = stats.len() as u64;
            let fresh: Vec<CacheBatch> = (done..target)
                .into_par_iter()
                .map(|i| {
                    let batch = cfg.sample_unit_sphere(i);
                    let mut prefix: Vec<f64> = Vec::with_capacity(n);
                    let mut sorted: Vec<f64> = Vec::with_capacity(n);
                    let mut values = Vec::with_capacity(cfg.batch_size());
                    let mut errs = Vec::with_capacity(cfg.batch_size());
                    for p in batch.points() {
                        sorted.clear();
                        sorted.extend(p.iter().map(|c| c.abs()));
                        sorted.sort_unstable_by(|a, b| b.total_cmp(a));
                        prefix.clear();
                        let mut run = 0.0;
                        for &v in &sorted {
                            run += v;
                            prefix.push(run);
                        }
                        let dm = norms::max_scaled_prefix(&prefix, &inv);
                        values.push(dm);
                        errs.push((dm / delta_star - 1.0).abs());
                    }
                    let min = values.iter().fold(f64::INFINITY, |m, v| m.min(*v));
                    let max = values.iter().fold(0.0f64, |m, v| m.max(*v));
                    CacheBatch {
                        values,
                        err_sum: pairwise_sum(&errs),
                        min,
                        max,
                    }
                })
                .collect();
            stats.extend(fresh);

            let total = stats.len() as u64 * bs;
            let sums: Vec<f64> = stats.iter().map(|s| s.err_sum).collect();
            let are = pairwise_sum(&sums) / total as f64;
            let vmin = stats.iter().fold(f64::INFINITY, |m, s| m.min(s.min));
            let vmax = stats.iter().fold(0.0f64, |m, s| m.max(s.max));
            let mre = scaled_mre(vmin, vmax, delta_star);

            if let Some((pa, pm)) = prev {
                if (pa - are).abs() <= conv.epsilon && (pm - mre).abs() <= conv.epsilon {
                    break (total, true);
                }
            }
            if target >= cap_batches {
                break (total, false);
            }
            prev = Some((are, mre));
            target = (target * 2).min(cap_batches);
        };

        let vmin = stats.iter().fold(f64::INFINITY, |m, s| m.min(s.min));
        let vmax = stats.iter().fold(0.0f64, |m, s| m.max(s.max));
        Ok(Self {
            dim: n,
            seed: cfg.seed(),
            epsilon: conv.epsilon,
            batches: stats.into_iter().map(|s| s.values).collect(),
            vmin,
            vmax,
            samples_used,
            converged,
        })
    }

    /// Wraps externally computed per-point values (synthetic tests, scaling
    /// experiments). `dim` is carried for bookkeeping only.
    pub fn from_values(dim: usize, values: Vec<f64>, batch_size: usize) -> Result<Self, LabError> {
        if dim == 0 {
            return Err(LabError::ZeroDimension);
        }
        if batch_size == 0 {
            return Err(LabError::ZeroBatchSize);
        }
        if values.is_empty() {
            return Err(LabError::EmptyStream);
        }
        if let Some(index) = values.iter().position(|v| !v.is_finite()) {
            return Err(LabError::Norm(crate::NormError::NonFiniteComponent {
                index,
            }));
        }
        let vmin = values.iter().fold(f64::INFINITY, |m, v| m.min(*v));
        let vmax = values.iter().fold(f64::NEG_INFINITY, |m, v| m.max(*v));
        let samples_used = values.len() as u64;
        let batches = values.chunks(batch_size).map(|c| c.to_vec()).collect();
        Ok(Self {
            dim,
            seed: 0,
            epsilon: 0.0,
            batches,
            vmin,
            vmax,
            samples_used,
            converged: true,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn samples_used(&self) -> u64 {
        self.samples_used
    }

    pub fn converged(&self) -> bool {
        self.converged
    }

    pub fn vmin(&self) -> f64 {
        self.vmin
    }

    pub fn vmax(&self) -> f64 {
        self.vmax
    }

    pub fn values(&self) -> impl Iterator<Item = f64> + '_ {
        self.batches.iter().flatten().copied()
    }

    /// ARE and MRE of `x -> D_M(x)/delta` over the cached sample.
    pub fn errors_at(&self, delta: f64) -> Result<(f64, f64), LabError> {
        if !delta.is_finite() || delta <= 0.0 {
            return Err(LabError::Norm(crate::NormError::BadScale { delta }));
        }
        let mut errs: Vec<f64> = Vec::new();
        let mut sums = Vec::with_capacity(self.batches.len());
        for batch in &self.batches {
            errs.clear();
            errs.extend(batch.iter().map(|v| (v / delta - 1.0).abs()));
            sums.push(pairwise_sum(&errs));
        }
        let are = pairwise_sum(&sums) / self.samples_used as f64;
        Ok((are, scaled_mre(self.vmin, self.vmax, delta)))
    }

    /// Minimizes the empirical MRE of `D_M/delta` over the grid
    /// `{start, start+step, ..., 1}`; ties go to the smaller delta.
    /// Returns `(delta_hat, achieved MRE)`.
    pub fn grid_search(&self, start: f64, step: f64) -> Result<(f64, f64), LabError> {
        let span = 1.0 - start;
        if !start.is_finite() || start <= 0.0 || !step.is_finite() || step <= 0.0 || step > span {
            return Err(LabError::BadGridStep { step, span });
        }
        let last = (span / step).floor() as u64;
        let mut best_delta = start;
        let mut best_mre = scaled_mre(self.vmin, self.vmax, start);
        for j in 1..=last {
            let delta = start + j as f64 * step;
            let mre = scaled_mre(self.vmin, self.vmax, delta);
            if mre < best_mre {
                best_mre = mre;
                best_delta = delta;
            }
        }
        let final_point = start + last as f64 * step;
        if final_point < 1.0 {
            let mre = scaled_mre(self.vmin, self.vmax, 1.0);
            if mre < best_mre {
                best_mre = mre;
                best_delta = 1.0;
            }
        }
        Ok((best_delta, best_mre))
    }
}

/// Grid-searches the rescaling factor over `[delta*, 1]` on a converged
/// cached sample (see [`MukherjeeCache`]); the objective is the empirical
/// MRE of `D_M/delta`.
pub fn grid_search_delta(
    cfg: &SamplerConfig,
    conv: &Convergence,
    grid_step: f64,
) -> Result<CalibrationResult, LabError> {
    let cache = MukherjeeCache::build(cfg, conv)?;
    let delta_star = params::barni_optimal(cfg.dim())?.delta_star;
    let (delta_hat, objective) = cache.grid_search(delta_star, grid_step)?;
    Ok(CalibrationResult {
        params: CalibrationParams::DeltaHat(delta_hat),
        objective,
        samples_used: cache.samples_used(),
        seed: cfg.seed(),
        warning: None,
    })
}

/// Assembles one dimension's empirical errors for the Seol-Cheun, Barni,
/// rescaled-Mukherjee and Mukherjee norms over a shared sphere sample,
/// grown until every norm's ARE and MRE pass the convergence gate together.
///
/// The Seol-Cheun coefficients are calibrated first on the Gaussian stream
/// (disjoint from the sphere stream even at equal seed), with the reference
/// 100,000-vector fit.
pub fn table2_row(cfg: &SamplerConfig, conv: &Convergence) -> Result<Table2Row, LabError> {
    let n = cfg.dim();
    if n < 2 {
        return Err(LabError::UnsupportedDimension { min: 2, got: n });
    }
    let calibration = calibrate_seol_cheun(cfg, DEFAULT_CALIBRATION_SAMPLES)?;
    let CalibrationParams::SeolCheun { a, b } = calibration.params else {
        unreachable!("seol-cheun calibration returns seol-cheun parameters");
    };
    if a <= 0.0 || b <= 0.0 {
        // Cannot measure the error of something that is not a norm; with
        // n >= 2 the fit is always positive in practice.
        return Err(LabError::Norm(crate::NormError::BadCoefficients { a, b }));
    }
    let opt = params::barni_optimal(n)?;
    let weights: Vec<f64> = opt.alpha.iter().map(|al| opt.delta_star * al).collect();
    let mre_mukherjee = params::mukherjee_mre_theoretical(n)?;
    let inv = tables::inv_sqrt(n);

    let eval = |x: &[f64], scratch: &mut EngineScratch, out: &mut [f64]| {
        scratch.sorted.clear();
        scratch.sorted.extend(x.iter().map(|c| c.abs()));
        scratch.sorted.sort_unstable_by(|p, q| q.total_cmp(p));
        scratch.prefix.clear();
        let mut run = 0.0;
        for &v in &scratch.sorted {
            run += v;
            scratch.prefix.push(run);
        }
        // Bit-identical to the public evaluators: same kernels, same order.
        let dm = norms::max_scaled_prefix(&scratch.prefix, &inv);
        let db = norms::weighted_d1_sum(&weights, &scratch.sorted);
        let dab = norms::seol_cheun_norm(x, a, b).expect("coefficients validated above");
        out[0] = (dab - 1.0).abs();
        out[1] = (db - 1.0).abs();
        out[2] = (dm / opt.delta_star - 1.0).abs();
        out[3] = (dm - 1.0).abs();
    };
    let (pairs, samples_used, converged) = run_engine(4, cfg, conv, eval);

    Ok(Table2Row {
        n,
        seol: ErrorPair {
            are: pairs[0].0,
            mre_empirical: pairs[0].1,
            mre_theoretical: None,
        },
        barni: ErrorPair {
            are: pairs[1].0,
            mre_empirical: pairs[1].1,
            mre_theoretical: Some(opt.mre),
        },
        normalized: ErrorPair {
            are: pairs[2].0,
            mre_empirical: pairs[2].1,
            mre_theoretical: None,
        },
        mukherjee: ErrorPair {
            are: pairs[3].0,
            mre_empirical: pairs[3].1,
            mre_theoretical: Some(mre_mukherjee),
        },
        seol_a: a,
        seol_b: b,
        samples_used,
        converged,
    })
}

/// Rescaled-Mukherjee errors at delta* and at the grid-searched delta-hat,
/// over one cached converged sample set.
pub fn table3_row(
    cfg: &SamplerConfig,
    conv: &Convergence,
    grid_step: f64,
) -> Result<Table3Row, LabError> {
    let cache = MukherjeeCache::build(cfg, conv)?;
    table3_row_from_cache(&cache, grid_step)
}

/// Same as [`table3_row`], reusing an already-built cache (e.g. to search
/// the same sample at several grid resolutions).
pub fn table3_row_from_cache(
    cache: &MukherjeeCache,
    grid_step: f64,
) -> Result<Table3Row, LabError> {
    let n = cache.dim();
    let delta_star = params::barni_optimal(n)?.delta_star;
    let (are_at_star, mre_at_star) = cache.errors_at(delta_star)?;
    let (delta_hat, mre_at_hat) = cache.grid_search(delta_star, grid_step)?;
    let (are_at_hat, _) = cache.errors_at(delta_hat)?;
    Ok(Table3Row {
        n,
        delta_star,
        are_at_star,
        mre_at_star,
        delta_hat,
        are_at_hat,
        mre_at_hat,
        grid_step,
        samples_used: cache.samples_used(),
        converged: cache.converged(),
    })
}
