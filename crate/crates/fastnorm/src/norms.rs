//! Evaluators for the exact Minkowski norms and every fast approximation of
//! the Euclidean norm handled by this crate.
//!
//! All functions take plain `&[f64]` slices (see [`crate::Vector`] for the
//! validated entry point) and are pure: no allocation is reused across calls,
//! no global state is written. The sorted-component family (t-cost,
//! Mukherjee, Barni, weighted-D1) shares the [`sorted_abs_profile`] kernel.
//!
//! Conventions: the norm of the empty slice is 0, and the norm of the zero
//! vector is exactly 0 for every evaluator.

use crate::error::NormError;
use crate::tables;
use crate::vector::sorted_abs_profile;

/// City-block norm: sum of absolute components.
pub fn d1(x: &[f64]) -> f64 {
    let Some((first, rest)) = x.split_first() else {
        return 0.0;
    };
    let mut sum = first.abs();
    for c in rest {
        sum += c.abs();
    }
    sum
}

/// Euclidean norm.
pub fn d2(x: &[f64]) -> f64 {
    let Some((first, rest)) = x.split_first() else {
        return 0.0;
    };
    let mut sum = first * first;
    for c in rest {
        sum += c * c;
    }
    sum.sqrt()
}

/// Chessboard norm: largest absolute component.
pub fn dinf(x: &[f64]) -> f64 {
    let Some((first, rest)) = x.split_first() else {
        return 0.0;
    };
    let mut best = first.abs();
    for c in rest {
        let a = c.abs();
        if a > best {
            best = a;
        }
    }
    best
}

/// Minkowski norm `(sum |x_i|^p)^(1/p)` for `p >= 1`; `p = f64::INFINITY` is
/// accepted and evaluates the chessboard norm, the p -> infinity limit.
///
/// Scaled by the largest component so that large exponents cannot overflow;
/// agrees with `d1`/`d2`/`dinf` at p = 1, 2, infinity to round-off (the
/// specialized routines use cheaper arithmetic, not this code path).
pub fn lp_norm(x: &[f64], p: f64) -> Result<f64, NormError> {
    if p.is_nan() || p < 1.0 {
        return Err(NormError::BadExponent { p });
    }
    if p == f64::INFINITY {
        return Ok(dinf(x));
    }
    let scale = dinf(x);
    if scale == 0.0 {
        return Ok(0.0);
    }
    let mut sum = 0.0;
    for c in x {
        sum += (c.abs() / scale).powf(p);
    }
    Ok(scale * sum.powf(p.recip()))
}

/// t-cost norm: sum of the t largest absolute components, `1 <= t <= n`.
///
/// Uses partial selection (expected O(n)) instead of a full sort; the selected
/// top-t values are then summed largest-first, the same accumulation order as
/// the full-profile kernel, so both routes agree bit for bit.
pub fn tcost_norm(x: &[f64], t: usize) -> Result<f64, NormError> {
    let n = x.len();
    if t < 1 || t > n {
        return Err(NormError::TOutOfRange { t, dim: n });
    }
    let mut abs: Vec<f64> = x.iter().map(|c| c.abs()).collect();
    if t < n {
        abs.select_nth_unstable_by(t - 1, |a, b| b.total_cmp(a));
    }
    let top = &mut abs[..t];
    top.sort_unstable_by(|a, b| b.total_cmp(a));
    Ok(top.iter().sum())
}

/// Mukherjee norm: `max over t of D_t(x)/sqrt(t)`.
///
/// One sort plus one scan of the prefix sums against cached `1/sqrt(t)`
/// constants. Never exceeds the Euclidean norm.
pub fn mukherjee_norm(x: &[f64]) -> f64 {
    let profile = sorted_abs_profile(x);
    let inv_sqrt = tables::inv_sqrt(x.len());
    max_scaled_prefix(profile.prefix(), &inv_sqrt)
}

/// Max of `prefix[t-1] * weights[t-1]`: the shared scan behind the Mukherjee
/// and general weighted t-cost norms.
pub(crate) fn max_scaled_prefix(prefix: &[f64], weights: &[f64]) -> f64 {
    let mut best = 0.0;
    for (p, w) in prefix.iter().zip(weights) {
        let candidate = p * w;
        if candidate > best {
            best = candidate;
        }
    }
    best
}

/// Weighted t-cost norm: `max over t of w[t-1] * D_t(x)` for non-negative
/// weights, one per dimension.
pub fn weighted_tcost_norm(x: &[f64], w: &[f64]) -> Result<f64, NormError> {
    validate_weights(w, x.len())?;
    let profile = sorted_abs_profile(x);
    Ok(max_scaled_prefix(profile.prefix(), w))
}

/// A weight vector applied to the sorted absolute components:
/// `N(x) = sum of w[i-1] * (i-th largest |x_j|)`.
///
/// This single form expresses the Barni norm (`w = delta* ⋅ alpha*`), the
/// Seol-Cheun combination (`w = (a+b, b, .., b)`), the city-block norm
/// (all-ones), and the plain t-cost norms (t ones then zeros). The functional
/// is a norm exactly when the weights are non-increasing with `w[0] > 0`;
/// increasing weights break the triangle inequality.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedD1Spec {
    weights: Vec<f64>,
}

impl WeightedD1Spec {
    /// Validates that `weights` is non-empty, finite and non-negative.
    pub fn new(weights: Vec<f64>) -> Result<Self, NormError> {
        if weights.is_empty() {
            return Err(NormError::EmptyWeights);
        }
        if let Some(index) = weights.iter().position(|w| !w.is_finite() || *w < 0.0) {
            return Err(NormError::BadWeight { index });
        }
        Ok(Self { weights })
    }

    /// The minimax-optimal Barni weights `delta* ⋅ alpha*` at dimension n.
    pub fn barni_optimal(n: usize) -> Result<Self, NormError> {
        let opt = crate::params::barni_optimal(n)?;
        let weights = opt.alpha.iter().map(|a| opt.delta_star * a).collect();
        Ok(Self { weights })
    }

    /// The Seol-Cheun combination `a*Dinf + b*D1` written in weighted-D1 form:
    /// the largest component carries `a + b`, every other one carries `b`.
    pub fn seol_cheun(n: usize, a: f64, b: f64) -> Result<Self, NormError> {
        if n < 1 {
            return Err(NormError::ZeroDimension);
        }
        validate_coefficients(a, b)?;
        let mut weights = vec![b; n];
        weights[0] = a + b;
        Ok(Self { weights })
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    /// True when the weighted-D1 functional with these weights is a norm:
    /// weights non-increasing and the leading weight positive.
    pub fn is_norm(&self) -> bool {
        self.weights[0] > 0.0 && self.weights.windows(2).all(|w| w[0] >= w[1])
    }

    /// Evaluates `sum of weights[i] * ordered[i]` over the sorted absolute
    /// components of `x`.
    pub fn evaluate(&self, x: &[f64]) -> Result<f64, NormError> {
        if x.len() != self.weights.len() {
            return Err(NormError::WeightCountMismatch {
                expected: self.weights.len(),
                got: x.len(),
            });
        }
        let mut ordered: Vec<f64> = x.iter().map(|c| c.abs()).collect();
        ordered.sort_unstable_by(|a, b| b.total_cmp(a));
        Ok(weighted_d1_sum(&self.weights, &ordered))
    }
}

/// `sum of w[i] * ordered[i]`, seeded with the first product so an
/// n-dimensional evaluation costs exactly n multiplications and n-1 additions.
pub(crate) fn weighted_d1_sum(w: &[f64], ordered: &[f64]) -> f64 {
    debug_assert_eq!(w.len(), ordered.len());
    debug_assert!(!w.is_empty());
    let mut sum = w[0] * ordered[0];
    for i in 1..w.len() {
        sum += w[i] * ordered[i];
    }
    sum
}

/// Barni norm: weighted sum of sorted absolute components under `spec`.
///
/// With the minimax-optimal weights the relative deviation from the Euclidean
/// norm stays within `1 - delta*` on both sides.
pub fn barni_norm(x: &[f64], spec: &WeightedD1Spec) -> Result<f64, NormError> {
    spec.evaluate(x)
}

/// Seol-Cheun norm `a*Dinf(x) + b*D1(x)` for positive coefficients.
///
/// Single pass, two multiplications total regardless of dimension. Equivalent
/// to the weighted-D1 form `(a+b, b, .., b)` (see [`WeightedD1Spec::seol_cheun`]).
pub fn seol_cheun_norm(x: &[f64], a: f64, b: f64) -> Result<f64, NormError> {
    validate_coefficients(a, b)?;
    let Some((first, rest)) = x.split_first() else {
        return Ok(0.0);
    };
    let lead = first.abs();
    let mut max = lead;
    let mut sum = lead;
    for c in rest {
        let v = c.abs();
        if v > max {
            max = v;
        }
        sum += v;
    }
    Ok(a * max + b * sum)
}

/// Mukherjee norm rescaled by a fixed factor: `mukherjee_norm(x)/delta`.
///
/// `delta` is meant to lie in (0, 1] — dividing by the norm's on-sphere
/// minimum or the grid-searched compromise converts the one-sided
/// underestimate into a two-sided, smaller error.
pub fn normalized_mukherjee_norm(x: &[f64], delta: f64) -> Result<f64, NormError> {
    if !delta.is_finite() || delta <= 0.0 {
        return Err(NormError::BadScale { delta });
    }
    Ok(mukherjee_norm(x) / delta)
}

/// Planar approximation `max(floor(2*(D1 + 1)/3), Dinf)`, defined for n = 2.
///
/// A digital-geometry construction for integer grids; real inputs are
/// accepted and the floor is applied literally, which makes it neither
/// homogeneous nor exact on the axes — it is included for comparison, not as
/// a practical approximation.
pub fn rosenfeld_pfaltz_2d(x: &[f64]) -> Result<f64, NormError> {
    if x.len() != 2 {
        return Err(NormError::NotPlanar { dim: x.len() });
    }
    let blend = (2.0 * (d1(x) + 1.0) / 3.0).floor();
    Ok(blend.max(dinf(x)))
}

fn validate_weights(w: &[f64], dim: usize) -> Result<(), NormError> {
    if w.len() != dim {
        return Err(NormError::WeightCountMismatch {
            expected: dim,
            got: w.len(),
        });
    }
    if let Some(index) = w.iter().position(|v| !v.is_finite() || *v < 0.0) {
        return Err(NormError::BadWeight { index });
    }
    Ok(())
}

fn validate_coefficients(a: f64, b: f64) -> Result<(), NormError> {
    if !a.is_finite() || !b.is_finite() || a <= 0.0 || b <= 0.0 {
        return Err(NormError::BadCoefficients { a, b });
    }
    Ok(())
}
