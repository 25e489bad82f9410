//! Operation counting and wall-clock throughput for the norm evaluators.
//!
//! Counting goes through [`Tally`], a set of arithmetic wrappers that bump a
//! counter and then perform the real operation. The instrumented kernels
//! mirror the production evaluators operation for operation — same
//! expressions, same accumulation order — so they return bit-identical
//! values, and the counts describe the code that actually ships.
//!
//! Timing is deliberately plain: pre-generated inputs, a black-boxed result,
//! the median of many trials, single-threaded by contract.

use std::cell::Cell;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::error::BenchError;
use crate::norms::{self, WeightedD1Spec};
use crate::tables;

/// Coefficients used when benchmarking the Seol-Cheun norm. Operation counts
/// and throughput do not depend on the values, only on their presence.
pub const BENCH_SEOL_A: f64 = 1.0;
pub const BENCH_SEOL_B: f64 = 1.0;

/// A boxed norm evaluator ready for the timing loop.
pub type BoxedNorm = Box<dyn Fn(&[f64]) -> f64>;

/// Exact operation counts for one norm evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct OpCount {
    pub abs: u64,
    pub comp: u64,
    pub add: u64,
    pub mult: u64,
    pub sqrt: u64,
}

/// The norms the harness knows how to count and time.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BenchNorm {
    Dinf,
    D1,
    D2,
    SeolCheun,
    Barni,
    Mukherjee,
}

impl BenchNorm {
    pub const ALL: [BenchNorm; 6] = [
        BenchNorm::Dinf,
        BenchNorm::D1,
        BenchNorm::D2,
        BenchNorm::SeolCheun,
        BenchNorm::Barni,
        BenchNorm::Mukherjee,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            BenchNorm::Dinf => "dinf",
            BenchNorm::D1 => "d1",
            BenchNorm::D2 => "d2",
            BenchNorm::SeolCheun => "seol-cheun",
            BenchNorm::Barni => "barni",
            BenchNorm::Mukherjee => "mukherjee",
        }
    }

    /// A ready-to-time evaluator at dimension `n`.
    fn evaluator(&self, n: usize) -> Result<BoxedNorm, BenchError> {
        Ok(match self {
            BenchNorm::Dinf => Box::new(norms::dinf),
            BenchNorm::D1 => Box::new(norms::d1),
            BenchNorm::D2 => Box::new(norms::d2),
            BenchNorm::SeolCheun => Box::new(|x| {
                norms::seol_cheun_norm(x, BENCH_SEOL_A, BENCH_SEOL_B)
                    .expect("fixed positive coefficients")
            }),
            BenchNorm::Barni => {
                let spec = WeightedD1Spec::barni_optimal(n)?;
                Box::new(move |x| spec.evaluate(x).expect("input generated at spec dimension"))
            }
            BenchNorm::Mukherjee => Box::new(norms::mukherjee_norm),
        })
    }
}

impl fmt::Display for BenchNorm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BenchNorm {
    type Err = BenchError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "dinf" => Ok(BenchNorm::Dinf),
            "d1" => Ok(BenchNorm::D1),
            "d2" => Ok(BenchNorm::D2),
            "seol-cheun" => Ok(BenchNorm::SeolCheun),
            "barni" => Ok(BenchNorm::Barni),
            "mukherjee" => Ok(BenchNorm::Mukherjee),
            other => Err(BenchError::UnknownNorm {
                name: other.to_string(),
            }),
        }
    }
}

/// Counting arithmetic: every wrapper bumps its counter, then performs the
/// plain f64 operation, so instrumented kernels compute identical values.
#[derive(Debug, Default)]
pub struct Tally {
    abs: Cell<u64>,
    comp: Cell<u64>,
    add: Cell<u64>,
    mult: Cell<u64>,
    sqrt: Cell<u64>,
}

impl Tally {
    fn abs(&self, x: f64) -> f64 {
        self.abs.set(self.abs.get() + 1);
        x.abs()
    }

    fn gt(&self, a: f64, b: f64) -> bool {
        self.comp.set(self.comp.get() + 1);
        a > b
    }

    fn cmp_desc(&self, a: &f64, b: &f64) -> std::cmp::Ordering {
        self.comp.set(self.comp.get() + 1);
        b.total_cmp(a)
    }

    fn add(&self, a: f64, b: f64) -> f64 {
        self.add.set(self.add.get() + 1);
        a + b
    }

    fn mult(&self, a: f64, b: f64) -> f64 {
        self.mult.set(self.mult.get() + 1);
        a * b
    }

    fn sqrt(&self, x: f64) -> f64 {
        self.sqrt.set(self.sqrt.get() + 1);
        x.sqrt()
    }

    pub fn snapshot(&self) -> OpCount {
        OpCount {
            abs: self.abs.get(),
            comp: self.comp.get(),
            add: self.add.get(),
            mult: self.mult.get(),
            sqrt: self.sqrt.get(),
        }
    }
}

fn dinf_counted(t: &Tally, x: &[f64]) -> f64 {
    let Some((first, rest)) = x.split_first() else {
        return 0.0;
    };
    let mut best = t.abs(*first);
    for c in rest {
        let a = t.abs(*c);
        if t.gt(a, best) {
            best = a;
        }
    }
    best
}

fn d1_counted(t: &Tally, x: &[f64]) -> f64 {
    let Some((first, rest)) = x.split_first() else {
        return 0.0;
    };
    let mut sum = t.abs(*first);
    for c in rest {
        sum = t.add(sum, t.abs(*c));
    }
    sum
}

fn d2_counted(t: &Tally, x: &[f64]) -> f64 {
    let Some((first, rest)) = x.split_first() else {
        return 0.0;
    };
    let mut sum = t.mult(*first, *first);
    for c in rest {
        sum = t.add(sum, t.mult(*c, *c));
    }
    t.sqrt(sum)
}

fn seol_cheun_counted(t: &Tally, x: &[f64], a: f64, b: f64) -> f64 {
    let Some((first, rest)) = x.split_first() else {
        return 0.0;
    };
    let lead = t.abs(*first);
    let mut max = lead;
    let mut sum = lead;
    for c in rest {
        let v = t.abs(*c);
        if t.gt(v, max) {
            max = v;
        }
        sum = t.add(sum, v);
    }
    t.add(t.mult(a, max), t.mult(b, sum))
}

fn sorted_abs_counted(t: &Tally, x: &[f64]) -> Vec<f64> {
    let mut ordered: Vec<f64> = x.iter().map(|c| t.abs(*c)).collect();
    ordered.sort_unstable_by(|a, b| t.cmp_desc(a, b));
    ordered
}

fn barni_counted(t: &Tally, x: &[f64], weights: &[f64]) -> f64 {
    let ordered = sorted_abs_counted(t, x);
    let mut sum = t.mult(weights[0], ordered[0]);
    for i in 1..weights.len() {
        sum = t.add(sum, t.mult(weights[i], ordered[i]));
    }
    sum
}

fn mukherjee_counted(t: &Tally, x: &[f64], inv_sqrt: &[f64]) -> f64 {
    let ordered = sorted_abs_counted(t, x);
    let mut prefix = Vec::with_capacity(ordered.len());
    if let Some((&first, rest)) = ordered.split_first() {
        let mut running = first;
        prefix.push(running);
        for &v in rest {
            running = t.add(running, v);
            prefix.push(running);
        }
    }
    let mut best = 0.0;
    for (p, w) in prefix.iter().zip(inv_sqrt) {
        let candidate = t.mult(*p, *w);
        if t.gt(candidate, best) {
            best = candidate;
        }
    }
    best
}

fn random_vector(n: usize, seed: u64) -> Vec<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| StandardNormal.sample(&mut rng)).collect()
}

/// Counts the arithmetic operations of one evaluation of `norm` at
/// dimension `n`, on a seeded random input.
///
/// Counts are input-independent (and match the published table) for the
/// straight-line norms; the sorting norms' comparison count depends on the
/// input permutation and is reported as measured.
pub fn count_ops(norm: BenchNorm, n: usize) -> Result<OpCount, BenchError> {
    count_ops_checked(norm, n).map(|(ops, _)| ops)
}

/// As [`count_ops`], also returning the instrumented evaluation's value so
/// callers can verify it against the production evaluator.
pub fn count_ops_checked(norm: BenchNorm, n: usize) -> Result<(OpCount, f64), BenchError> {
    if n == 0 {
        return Err(BenchError::Norm(crate::NormError::ZeroDimension));
    }
    let x = random_vector(n, 0xB5EED ^ n as u64);
    let tally = Tally::default();
    let value = match norm {
        BenchNorm::Dinf => dinf_counted(&tally, &x),
        BenchNorm::D1 => d1_counted(&tally, &x),
        BenchNorm::D2 => d2_counted(&tally, &x),
        BenchNorm::SeolCheun => seol_cheun_counted(&tally, &x, BENCH_SEOL_A, BENCH_SEOL_B),
        BenchNorm::Barni => {
            let spec = WeightedD1Spec::barni_optimal(n)?;
            barni_counted(&tally, &x, spec.weights())
        }
        BenchNorm::Mukherjee => {
            let inv = tables::inv_sqrt(n);
            mukherjee_counted(&tally, &x, &inv)
        }
    };
    Ok((tally.snapshot(), value))
}

/// Median throughput of one norm over pre-generated inputs.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchResult {
    pub norm: BenchNorm,
    pub n: usize,
    pub trials: usize,
    pub batch: usize,
    /// Median over trials of evaluations per second.
    pub evals_per_sec: f64,
    /// This norm's median throughput divided by d2's on the same inputs.
    pub relative_to_d2: f64,
}

fn median(samples: &mut [f64]) -> f64 {
    samples.sort_unstable_by(f64::total_cmp);
    let mid = samples.len() / 2;
    if samples.len() % 2 == 1 {
        samples[mid]
    } else {
        0.5 * (samples[mid - 1] + samples[mid])
    }
}

fn time_evaluator(eval: &dyn Fn(&[f64]) -> f64, data: &[f64], n: usize, trials: usize) -> f64 {
    let mut rates = Vec::with_capacity(trials);
    let count = data.len() / n;
    for _ in 0..trials {
        let start = Instant::now();
        for p in data.chunks_exact(n) {
            std::hint::black_box(eval(std::hint::black_box(p)));
        }
        let elapsed = start.elapsed().as_secs_f64().max(1e-12);
        rates.push(count as f64 / elapsed);
    }
    median(&mut rates)
}

/// Times `batch` evaluations of `norm` at dimension `n`, `trials` times, on
/// pre-generated Gaussian inputs (generation excluded from timing), and
/// reports the median rate and its ratio to d2 measured on the same inputs.
pub fn run_bench(
    norm: BenchNorm,
    n: usize,
    trials: usize,
    batch: usize,
) -> Result<BenchResult, BenchError> {
    if trials < 3 {
        return Err(BenchError::TooFewTrials {
            min: 3,
            got: trials,
        });
    }
    if n == 0 {
        return Err(BenchError::Norm(crate::NormError::ZeroDimension));
    }
    if batch == 0 {
        return Err(BenchError::Norm(crate::NormError::EmptyVector));
    }
    let data = random_vector(n * batch, 0xBE4C4 ^ n as u64);
    let eval = norm.evaluator(n)?;
    let evals_per_sec = time_evaluator(eval.as_ref(), &data, n, trials);
    let relative_to_d2 = if norm == BenchNorm::D2 {
        1.0
    } else {
        let d2_rate = time_evaluator(&norms::d2, &data, n, trials);
        evals_per_sec / d2_rate
    };
    Ok(BenchResult {
        norm,
        n,
        trials,
        batch,
        evals_per_sec,
        relative_to_d2,
    })
}

/// The asserted ceiling for a sorting norm's comparison count at dimension
/// n: `4 n log2(n) + n`, comfortably above pdqsort's worst case plus the
/// max-scan.
pub fn sort_comp_bound(n: usize) -> u64 {
    let n_f = n as f64;
    (4.0 * n_f * n_f.log2() + n_f).ceil() as u64
}
