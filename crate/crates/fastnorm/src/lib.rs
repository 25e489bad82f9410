//! Fast approximations of the Euclidean norm, and the machinery to measure
//! exactly how good they are.
//!
//! The crate has three layers:
//!
//! * **Norm evaluators** ([`norms`]) — the exact Minkowski norms `D1`, `D2`,
//!   `Dinf` and `lp_norm`, plus the sorted-component approximation family:
//!   t-cost, Mukherjee (max of scaled prefix sums), general weighted t-cost,
//!   the weighted-D1 form with Barni's minimax-optimal weights, the
//!   Seol-Cheun `a*Dinf + b*D1` combination, the rescaled Mukherjee norm,
//!   and the classic planar `max(floor(2(D1+1)/3), Dinf)` construction.
//! * **Analytic parameters** ([`params`]) — closed forms for the optimal
//!   weights, the optimal scale `delta*`, and the theoretical maximum
//!   relative errors of each family.
//! * **Error laboratory** ([`sampler`], [`errorlab`], [`bench`]) — a
//!   deterministic, reproducible Monte-Carlo pipeline that samples the unit
//!   sphere, measures average and maximum relative errors to a convergence
//!   gate, calibrates free parameters (least-squares and grid search), and
//!   counts the exact arithmetic-operation cost of each evaluator.
//!
//! Reproducibility is a hard guarantee throughout: every randomized
//! computation is seeded, streams are decorrelated per batch, and reductions
//! are ordered so results are bit-identical across runs and thread counts.

pub mod bench;
mod error;
pub mod errorlab;
pub mod norms;
pub mod params;
pub mod sampler;
mod tables;
mod vector;

pub use error::{BenchError, LabError, NormError};
pub use vector::{sorted_abs_profile, SortedAbsProfile, Vector};
