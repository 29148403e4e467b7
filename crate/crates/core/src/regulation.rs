//! Channel-rate arithmetic and requisite-variety analysis.
//!
//! The governing inequality is `V0 >= V_D - V_R`: outcome variety cannot be
//! forced below disturbance variety minus regulator variety, so only variety
//! in the regulator can destroy variety arriving from disturbances. A
//! regulator's capacity as a regulator is bounded by its capacity as a
//! communication channel, which is why everything here is measured in bits
//! per unit time.
//!
//! Rates carry a declared time unit and are only ever combined when the
//! units match; there is no silent conversion. For sources with equally
//! probable states the rates are log-counts (variety in bits); the
//! entropy-balance operation accepts probabilistic entropy rates as well —
//! callers choose which measure feeds the analysis.

use std::fmt;

use thiserror::Error;

/// Relative tolerance for floating-point rate comparisons.
pub const RATE_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Error, PartialEq)]
pub enum RegulationError {
    #[error("channel {label:?} has zero states per signal (no information)")]
    ZeroStates { label: String },
    #[error("channel {label:?} needs a positive signal count, got {value}")]
    NonPositiveSignals { label: String, value: f64 },
    #[error("channel {label:?} needs a positive period, got {value}")]
    NonPositivePeriod { label: String, value: f64 },
    #[error("channel {label:?} has a negative bit budget ({value})")]
    NegativeBits { label: String, value: f64 },
    #[error("time unit mismatch: expected {expected:?}, channel {label:?} uses {found:?}")]
    UnitMismatch {
        expected: String,
        found: String,
        label: String,
    },
    #[error("rates must be non-negative, got {0}")]
    NegativeRate(f64),
    #[error("entropy terms must be non-negative, got {0}")]
    NegativeEntropy(f64),
    #[error("per-move entropy must be positive, got {0}")]
    NonPositiveMoveEntropy(f64),
    #[error("safety margin must be at least 1, got {0}")]
    MarginBelowOne(f64),
    #[error("value must be finite")]
    NonFinite,
}

/// A declared time unit. Pure label: two rates are comparable exactly when
/// their labels are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TimeUnit(String);

impl TimeUnit {
    pub fn new(label: impl Into<String>) -> Self {
        Self(label.into())
    }

    pub fn label(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for TimeUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// A communication channel's capacity expressed as selections: one of
/// `states_per_signal` states, `signals_per_period` times per `period`.
/// The derived rate is `log2(states) * signals / period` bits per time unit.
#[derive(Clone, Debug, PartialEq)]
pub struct ChannelRate {
    label: String,
    states_per_signal: u64,
    signals_per_period: f64,
    period: f64,
    unit: TimeUnit,
}

impl ChannelRate {
    pub fn new(
        label: impl Into<String>,
        states_per_signal: u64,
        signals_per_period: f64,
        period: f64,
        unit: TimeUnit,
    ) -> Result<Self, RegulationError> {
        let label = label.into();
        if states_per_signal == 0 {
            return Err(RegulationError::ZeroStates { label });
        }
        if !signals_per_period.is_finite() || signals_per_period <= 0.0 {
            return Err(RegulationError::NonPositiveSignals {
                label,
                value: signals_per_period,
            });
        }
        if !period.is_finite() || period <= 0.0 {
            return Err(RegulationError::NonPositivePeriod {
                label,
                value: period,
            });
        }
        Ok(Self {
            label,
            states_per_signal,
            signals_per_period,
            period,
            unit,
        })
    }

    /// A channel stated directly as a bit budget per period, modeled as that
    /// many binary selections.
    pub fn from_bits(
        label: impl Into<String>,
        bits_per_period: f64,
        period: f64,
        unit: TimeUnit,
    ) -> Result<Self, RegulationError> {
        let label = label.into();
        if !bits_per_period.is_finite() || bits_per_period < 0.0 {
            return Err(RegulationError::NegativeBits {
                label,
                value: bits_per_period,
            });
        }
        if bits_per_period == 0.0 {
            // One one-state signal: zero bits, valid degenerate channel.
            return Self::new(label, 1, 1.0, period, unit);
        }
        Self::new(label, 2, bits_per_period, period, unit)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn states_per_signal(&self) -> u64 {
        self.states_per_signal
    }

    pub fn unit(&self) -> &TimeUnit {
        &self.unit
    }

    /// The channel's information rate in bits per time unit.
    pub fn bits_per_time(&self) -> f64 {
        (self.states_per_signal as f64).log2() * self.signals_per_period / self.period
    }
}

/// Disturbance and regulator channels sharing one time unit, ready for a
/// requisite-variety verdict.
#[derive(Clone, Debug, PartialEq)]
pub struct RegulationScenario {
    disturbances: Vec<ChannelRate>,
    regulators: Vec<ChannelRate>,
    time_unit: TimeUnit,
}

impl RegulationScenario {
    pub fn new(
        disturbances: Vec<ChannelRate>,
        regulators: Vec<ChannelRate>,
        time_unit: TimeUnit,
    ) -> Result<Self, RegulationError> {
        for ch in disturbances.iter().chain(&regulators) {
            if ch.unit != time_unit {
                return Err(RegulationError::UnitMismatch {
                    expected: time_unit.label().to_string(),
                    found: ch.unit.label().to_string(),
                    label: ch.label.clone(),
                });
            }
        }
        Ok(Self {
            disturbances,
            regulators,
            time_unit,
        })
    }

    pub fn disturbances(&self) -> &[ChannelRate] {
        &self.disturbances
    }

    pub fn regulators(&self) -> &[ChannelRate] {
        &self.regulators
    }

    pub fn time_unit(&self) -> &TimeUnit {
        &self.time_unit
    }

    /// Requisite-variety verdict for this scenario. Sums are plain additions
    /// of the member rates; an empty disturbance list is trivially
    /// controllable.
    pub fn analyze(&self) -> RegulationVerdict {
        let total_disturbance = total_rate(&self.disturbances);
        let total_regulation = total_rate(&self.regulators);
        RegulationVerdict {
            total_disturbance,
            total_regulation,
            outcome_floor: (total_disturbance - total_regulation).max(0.0),
            controllable: total_regulation >= total_disturbance,
            deficit_ratio: (total_regulation > 0.0)
                .then(|| total_disturbance / total_regulation),
        }
    }
}

/// The outcome of a requisite-variety analysis, all in bits per time unit.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RegulationVerdict {
    pub total_disturbance: f64,
    pub total_regulation: f64,
    /// Minimum outcome variety any regulator of this capacity can achieve:
    /// `max(0, V_D - V_R)`.
    pub outcome_floor: f64,
    pub controllable: bool,
    /// `V_D / V_R` when the regulator has any capacity at all.
    pub deficit_ratio: Option<f64>,
}

// An empty f64 sum is -0.0; seed the fold so empty channel lists report +0.
fn total_rate(channels: &[ChannelRate]) -> f64 {
    channels
        .iter()
        .fold(0.0, |acc, ch| acc + ch.bits_per_time())
}

/// The floor on outcome variety: `max(0, v_d - v_r)`. Zero exactly when the
/// regulator matches or exceeds the disturbance.
pub fn requisite_variety_floor(v_d: f64, v_r: f64) -> Result<f64, RegulationError> {
    if !v_d.is_finite() || !v_r.is_finite() {
        return Err(RegulationError::NonFinite);
    }
    if v_d < 0.0 {
        return Err(RegulationError::NegativeRate(v_d));
    }
    if v_r < 0.0 {
        return Err(RegulationError::NegativeRate(v_r));
    }
    Ok((v_d - v_r).max(0.0))
}

/// The largest total disturbance rate a set of regulators can fully absorb:
/// the sum of their rates. All regulators must share a time unit.
pub fn max_controllable_disturbance(regulators: &[ChannelRate]) -> Result<f64, RegulationError> {
    if let Some(first) = regulators.first() {
        for ch in &regulators[1..] {
            if ch.unit != first.unit {
                return Err(RegulationError::UnitMismatch {
                    expected: first.unit.label().to_string(),
                    found: ch.unit.label().to_string(),
                    label: ch.label.clone(),
                });
            }
        }
    }
    Ok(total_rate(regulators))
}

/// Entropy balance `Σ H_R − Σ H_D`: non-negative slack means the regulation
/// entropies cover the disturbance entropies.
pub fn entropy_balance(h_d: &[f64], h_r: &[f64]) -> Result<f64, RegulationError> {
    for &h in h_d.iter().chain(h_r) {
        if !h.is_finite() {
            return Err(RegulationError::NonFinite);
        }
        if h < 0.0 {
            return Err(RegulationError::NegativeEntropy(h));
        }
    }
    let sum = |hs: &[f64]| hs.iter().fold(0.0, |acc, h| acc + h);
    Ok(sum(h_r) - sum(h_d))
}

/// An upper bound on a reconfiguration period: finite, or unbounded when
/// there is no disturbance variety to outrun.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ReconfigBound {
    Unbounded,
    Finite(f64),
}

impl ReconfigBound {
    pub fn is_unbounded(&self) -> bool {
        matches!(self, ReconfigBound::Unbounded)
    }

    pub fn as_finite(&self) -> Option<f64> {
        match *self {
            ReconfigBound::Finite(v) => Some(v),
            ReconfigBound::Unbounded => None,
        }
    }
}

impl fmt::Display for ReconfigBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReconfigBound::Unbounded => f.write_str("unbounded"),
            ReconfigBound::Finite(v) => write!(f, "{v}"),
        }
    }
}

/// Longest reconfiguration period that keeps a moving defender ahead of a
/// disturbance stream.
///
/// A reconfiguration injects `h_move` bits of fresh configuration entropy;
/// repeating it every `T` gives the regulator an entropy rate of `h_move / T`.
/// The entropy balance stays non-negative against `disturbance_rate` exactly
/// when `T <= h_move / disturbance_rate`; the multiplicative `safety_margin`
/// (≥ 1, for unknown channels) shortens the bound to
/// `h_move / (disturbance_rate * safety_margin)`. A zero disturbance rate
/// leaves the period unbounded.
pub fn max_reconfig_period(
    h_move: f64,
    disturbance_rate: f64,
    safety_margin: f64,
) -> Result<ReconfigBound, RegulationError> {
    if !h_move.is_finite() || !disturbance_rate.is_finite() || !safety_margin.is_finite() {
        return Err(RegulationError::NonFinite);
    }
    if h_move <= 0.0 {
        return Err(RegulationError::NonPositiveMoveEntropy(h_move));
    }
    if safety_margin < 1.0 {
        return Err(RegulationError::MarginBelowOne(safety_margin));
    }
    if disturbance_rate < 0.0 {
        return Err(RegulationError::NegativeRate(disturbance_rate));
    }
    if disturbance_rate == 0.0 {
        return Ok(ReconfigBound::Unbounded);
    }
    Ok(ReconfigBound::Finite(
        h_move / (disturbance_rate * safety_margin),
    ))
}
