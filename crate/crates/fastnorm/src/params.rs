//! Closed-form optimal parameters and theoretical worst-case errors for the
//! approximate norms.
//!
//! Everything here is exact arithmetic on one shared quantity
//! `S(n) = sum_{i=1..n} alpha_i^2` with `alpha_i = sqrt(i) - sqrt(i-1)`:
//!
//! * Barni's minimax weights are `alpha_i` scaled by `delta_star = 2/(1 + sqrt(S))`,
//!   and its worst-case relative error is `1 - delta_star` on both the over-
//!   and underestimating side (equioscillation).
//! * The Mukherjee max-of-prefix norm has minimum `m = 1/sqrt(S)` on the unit
//!   sphere and never overestimates, so its worst-case error is `1 - m`.

use crate::error::NormError;

/// Minimax-optimal parameters for the Barni weighted-D1 norm at dimension n.
#[derive(Debug, Clone, PartialEq)]
pub struct BarniOptimal {
    /// Weight profile `alpha[i-1] = sqrt(i) - sqrt(i-1)`; strictly decreasing,
    /// `alpha[0] = 1`.
    pub alpha: Vec<f64>,
    /// Optimal scale `2/(1 + sqrt(S))`; equals 1 only at n = 1.
    pub delta_star: f64,
    /// Worst-case relative error `1 - delta_star`, as a fraction.
    pub mre: f64,
}

/// `sqrt(i) - sqrt(i-1)`, computed as `1/(sqrt(i) + sqrt(i-1))` so large i
/// does not cancel catastrophically.
fn alpha_star(i: usize) -> f64 {
    1.0 / ((i as f64).sqrt() + ((i - 1) as f64).sqrt())
}

/// `S(n)`: the single source of truth shared by every formula in this module.
fn alpha_sq_sum(n: usize) -> f64 {
    (1..=n)
        .map(|i| {
            let a = alpha_star(i);
            a * a
        })
        .sum()
}

/// Optimal Barni parameters at dimension n.
pub fn barni_optimal(n: usize) -> Result<BarniOptimal, NormError> {
    if n < 1 {
        return Err(NormError::ZeroDimension);
    }
    let alpha: Vec<f64> = (1..=n).map(alpha_star).collect();
    let delta_star = 2.0 / (1.0 + alpha_sq_sum(n).sqrt());
    Ok(BarniOptimal {
        alpha,
        delta_star,
        mre: 1.0 - delta_star,
    })
}

/// Worst-case relative error of the Mukherjee norm on the unit sphere,
/// `1 - 1/sqrt(S(n))`, as a fraction.
pub fn mukherjee_mre_theoretical(n: usize) -> Result<f64, NormError> {
    if n < 1 {
        return Err(NormError::ZeroDimension);
    }
    Ok(1.0 - alpha_sq_sum(n).sqrt().recip())
}

/// Minimum of the Mukherjee norm on the unit sphere, `1/sqrt(S(n))`.
///
/// The norm never exceeds the Euclidean norm, so this minimum is the
/// complement of its worst-case error; it doubles as the oracle for the
/// grid-searched rescaling factor `(1 + m)/2`.
pub fn mukherjee_min_on_sphere(n: usize) -> Result<f64, NormError> {
    if n < 1 {
        return Err(NormError::ZeroDimension);
    }
    Ok(alpha_sq_sum(n).sqrt().recip())
}

/// Worst-case relative error of the plain t-cost norm:
/// `max(sqrt(t) - 1, 1 - t/sqrt(n))`, as a fraction.
pub fn tcost_mre_theoretical(n: usize, t: usize) -> Result<f64, NormError> {
    if n < 1 {
        return Err(NormError::ZeroDimension);
    }
    if t < 1 || t > n {
        return Err(NormError::TOutOfRange { t, dim: n });
    }
    let over = (t as f64).sqrt() - 1.0;
    let under = 1.0 - t as f64 / (n as f64).sqrt();
    Ok(over.max(under))
}
