//! Validated vector input and the shared sorted-absolute-profile kernel.

use crate::error::NormError;

/// An n-dimensional real vector with finite components, n >= 1.
///
/// Construction validates the invariants once; the norm evaluators accept
/// plain `&[f64]` slices and inherit the guarantees when fed from a `Vector`.
/// Feeding them unvalidated slices with NaN or infinite components yields
/// unspecified (but non-panicking) values.
#[derive(Debug, Clone, PartialEq)]
pub struct Vector(Vec<f64>);

impl Vector {
    /// Validates that `components` is non-empty and all-finite.
    pub fn new(components: Vec<f64>) -> Result<Self, NormError> {
        if components.is_empty() {
            return Err(NormError::EmptyVector);
        }
        if let Some(index) = components.iter().position(|c| !c.is_finite()) {
            return Err(NormError::NonFiniteComponent { index });
        }
        Ok(Self(components))
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }
}

impl AsRef<[f64]> for Vector {
    fn as_ref(&self) -> &[f64] {
        &self.0
    }
}

impl TryFrom<Vec<f64>> for Vector {
    type Error = NormError;

    fn try_from(components: Vec<f64>) -> Result<Self, NormError> {
        Vector::new(components)
    }
}

/// Absolute components of a vector sorted in non-increasing order, together
/// with their prefix sums.
///
/// `ordered()[t-1]` is the t-th largest |x_i| and `prefix()[t-1]` is the
/// t-cost value D_t(x), the sum of the t largest absolute components. Every
/// sorted-component norm (t-cost, Mukherjee, Barni, general weighted-D1) is a
/// function of this profile; routing them through one kernel makes them
/// exactly invariant under coordinate permutations and sign flips.
#[derive(Debug, Clone, PartialEq)]
pub struct SortedAbsProfile {
    ordered: Vec<f64>,
    prefix: Vec<f64>,
}

impl SortedAbsProfile {
    /// Sorted absolute components, largest first.
    pub fn ordered(&self) -> &[f64] {
        &self.ordered
    }

    /// `prefix()[t-1]` = sum of the t largest absolute components.
    pub fn prefix(&self) -> &[f64] {
        &self.prefix
    }

    pub fn dim(&self) -> usize {
        self.ordered.len()
    }
}

/// Builds the sorted-absolute profile of `x`.
///
/// Prefix sums accumulate in descending component order; this fixed order is
/// what lets the partial-selection fast path of `tcost_norm` reproduce the
/// full-sort result bit for bit.
pub fn sorted_abs_profile(x: &[f64]) -> SortedAbsProfile {
    let mut ordered: Vec<f64> = x.iter().map(|c| c.abs()).collect();
    // total_cmp keeps the sort well-defined even on junk input; for finite
    // components it is the ordinary descending order of absolute values.
    ordered.sort_unstable_by(|a, b| b.total_cmp(a));
    let mut prefix = Vec::with_capacity(ordered.len());
    // Seeded with the largest component: n values cost n - 1 additions.
    if let Some((&first, rest)) = ordered.split_first() {
        let mut running = first;
        prefix.push(running);
        for &v in rest {
            running += v;
            prefix.push(running);
        }
    }
    SortedAbsProfile { ordered, prefix }
}
