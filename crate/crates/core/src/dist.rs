//! Duration distributions shared by the reconfiguration and simulation models.

use serde::Serialize;

use crate::rng::{exponential, StreamRng};

/// A distribution over non-negative durations: either a fixed constant or an
/// exponential with a given mean. The smallest family that covers both the
/// deterministic test cases and memoryless arrival/development times.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub enum DurationDist {
    Constant(f64),
    Exponential { mean: f64 },
}

impl DurationDist {
    /// True when every draw is finite and non-negative.
    pub fn is_valid(&self) -> bool {
        match *self {
            DurationDist::Constant(v) => v.is_finite() && v >= 0.0,
            DurationDist::Exponential { mean } => mean.is_finite() && mean > 0.0,
        }
    }

    /// True when every draw is strictly positive.
    pub fn is_strictly_positive(&self) -> bool {
        match *self {
            DurationDist::Constant(v) => v.is_finite() && v > 0.0,
            DurationDist::Exponential { mean } => mean.is_finite() && mean > 0.0,
        }
    }

    pub fn mean(&self) -> f64 {
        match *self {
            DurationDist::Constant(v) => v,
            DurationDist::Exponential { mean } => mean,
        }
    }

    /// Infimum of the support: the constant itself, or 0 for an exponential.
    pub fn min_value(&self) -> f64 {
        match *self {
            DurationDist::Constant(v) => v,
            DurationDist::Exponential { .. } => 0.0,
        }
    }

    /// Draw one duration. Constants consume no stream state.
    pub fn sample(&self, rng: &mut StreamRng) -> f64 {
        match *self {
            DurationDist::Constant(v) => v,
            DurationDist::Exponential { mean } => exponential(rng, mean),
        }
    }
}
