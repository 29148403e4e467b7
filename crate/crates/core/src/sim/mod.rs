//! Seeded discrete-event simulation of the coupled attacker–defender loop.
//!
//! One closed loop scans, develops exploits and attacks; the other detects,
//! resets and (optionally) keeps moving its configuration. A run is a pure
//! function of `(scenario, seed)`: every stochastic draw site consumes an
//! independent labeled stream (see [`crate::rng`]), and simultaneous events
//! are ordered by a fixed kind priority, so traces replay byte-identically.

mod engine;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::dist::DurationDist;
use crate::mtd::{ConfigSpace, MtdError, ReconfigPolicy};

#[derive(Debug, Error, PartialEq)]
pub enum SimError {
    #[error("probability {name} must lie in [0, 1], got {value}")]
    ProbabilityOutOfRange { name: &'static str, value: f64 },
    #[error("{name} must be positive, got {value}")]
    NonPositive { name: &'static str, value: f64 },
    #[error("{name} is not a valid duration distribution")]
    BadDistribution { name: &'static str },
    #[error("pool scenarios need at least 2 members, got {0}")]
    PoolTooSmall(u32),
    #[error("pool scenarios use fixed per-member configurations; the reconfiguration policy must be stationary")]
    PoolPolicyNotStationary,
    #[error("defender model invalid: {0}")]
    Mtd(#[from] MtdError),
    #[error("no runs to summarize")]
    NoRuns,
    #[error("sweep needs at least one parameter value")]
    NoSweepValues,
    #[error("sweep needs at least one replication")]
    NoReplications,
    #[error("sweep value {value} is not a valid {name}")]
    BadSweepValue { name: &'static str, value: f64 },
}

/// How the attacker's reconnaissance is paced.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub enum ScanSchedule {
    /// A single agent scanning every `interval` while it has no exploit in
    /// flight and holds no access.
    Periodic { interval: f64 },
    /// An open stream of independent attack arrivals with exponential gaps
    /// (public-facing systems: many uncoordinated attackers).
    PoissonStream { mean_interval: f64 },
}

/// What it takes for a developed exploit to still work at attack time.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub enum ExploitValidity {
    /// The exploit works only if the system has not reconfigured since the
    /// scan that produced it.
    #[default]
    StrictEpoch,
    /// The exploit works whenever the current configuration value equals the
    /// scanned one, even across intervening moves.
    ValueMatch,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AttackerModel {
    pub schedule: ScanSchedule,
    pub exploit_dev_time: DurationDist,
    /// Rescan after a failed attack (and after losing access to a reset).
    pub retry: bool,
    /// Probability an exploit built for one configuration still works on a
    /// different one.
    pub mismatch_success_prob: f64,
    /// Per-attempt probability of a behavioral-channel bypass that ignores
    /// configuration entirely.
    pub bypass_prob: f64,
    pub exploit_validity: ExploitValidity,
}

impl Default for AttackerModel {
    fn default() -> Self {
        Self {
            schedule: ScanSchedule::Periodic { interval: 1.0 },
            exploit_dev_time: DurationDist::Constant(1.0),
            retry: true,
            mismatch_success_prob: 0.0,
            bypass_prob: 0.0,
            exploit_validity: ExploitValidity::StrictEpoch,
        }
    }
}

impl AttackerModel {
    pub fn validate(&self) -> Result<(), SimError> {
        match self.schedule {
            ScanSchedule::Periodic { interval } => {
                if !interval.is_finite() || interval <= 0.0 {
                    return Err(SimError::NonPositive {
                        name: "scan interval",
                        value: interval,
                    });
                }
            }
            ScanSchedule::PoissonStream { mean_interval } => {
                if !mean_interval.is_finite() || mean_interval <= 0.0 {
                    return Err(SimError::NonPositive {
                        name: "mean arrival interval",
                        value: mean_interval,
                    });
                }
            }
        }
        if !self.exploit_dev_time.is_valid() {
            return Err(SimError::BadDistribution {
                name: "exploit development time",
            });
        }
        check_probability("mismatch_success_prob", self.mismatch_success_prob)?;
        check_probability("bypass_prob", self.bypass_prob)?;
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DefenderModel {
    pub space: ConfigSpace,
    pub policy: ReconfigPolicy,
    /// Probability a compromise is noticed at all.
    pub detection_prob: f64,
    /// Time from compromise to the detection firing.
    pub detection_delay: DurationDist,
    /// Time the system is down while being restored.
    pub reset_latency: f64,
    /// Probability the malware survives a restore.
    pub persistence_prob: f64,
}

impl Default for DefenderModel {
    fn default() -> Self {
        Self {
            space: ConfigSpace::uniform(1).expect("nonempty"),
            policy: ReconfigPolicy::Stationary,
            detection_prob: 0.0,
            detection_delay: DurationDist::Constant(0.0),
            reset_latency: 1.0,
            persistence_prob: 0.0,
        }
    }
}

impl DefenderModel {
    pub fn validate(&self) -> Result<(), SimError> {
        self.policy.validate()?;
        check_probability("detection_prob", self.detection_prob)?;
        check_probability("persistence_prob", self.persistence_prob)?;
        if !self.detection_delay.is_valid() {
            return Err(SimError::BadDistribution {
                name: "detection delay",
            });
        }
        if !self.reset_latency.is_finite() || self.reset_latency <= 0.0 {
            return Err(SimError::NonPositive {
                name: "reset latency",
                value: self.reset_latency,
            });
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Scenario {
    pub attacker: AttackerModel,
    pub defender: DefenderModel,
    pub horizon: f64,
    /// 1 = a single system; > 1 = a pool with per-request uniform dispatch
    /// and fixed per-member configurations.
    pub pool_size: u32,
    /// Periodic restore of compromised pool members to clean images.
    pub pool_reset_period: Option<f64>,
}

impl Scenario {
    pub fn validate(&self) -> Result<(), SimError> {
        self.attacker.validate()?;
        self.defender.validate()?;
        if !self.horizon.is_finite() || self.horizon <= 0.0 {
            return Err(SimError::NonPositive {
                name: "horizon",
                value: self.horizon,
            });
        }
        if self.pool_size == 0 {
            return Err(SimError::NonPositive {
                name: "pool size",
                value: 0.0,
            });
        }
        if self.pool_size > 1 && self.defender.policy != ReconfigPolicy::Stationary {
            return Err(SimError::PoolPolicyNotStationary);
        }
        if let Some(period) = self.pool_reset_period {
            if !period.is_finite() || period <= 0.0 {
                return Err(SimError::NonPositive {
                    name: "pool reset period",
                    value: period,
                });
            }
        }
        Ok(())
    }
}

fn check_probability(name: &'static str, value: f64) -> Result<(), SimError> {
    if !value.is_finite() || !(0.0..=1.0).contains(&value) {
        return Err(SimError::ProbabilityOutOfRange { name, value });
    }
    Ok(())
}

/// One timestamped simulation event. Within a trace, events are time-ordered
/// with ties broken by [`SimEventKind::priority`].
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SimEvent {
    pub time: f64,
    pub kind: SimEventKind,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub enum SimEventKind {
    /// The defender moved to a new configuration.
    Reconfigure { config: u64 },
    /// The attacker observed the named configuration.
    Scan { observed: u64 },
    /// An exploit for the target configuration finished development.
    ExploitReady { target: u64 },
    /// The exploit was fired at the system.
    AttackLaunched { target: u64 },
    /// The attack landed; the target is compromised from here.
    CompromiseStart,
    /// The defender noticed a compromise.
    Detection,
    /// A restore finished.
    ResetComplete,
}

impl SimEventKind {
    /// Fixed tie-break priority for simultaneous events (lower fires first).
    pub fn priority(&self) -> u8 {
        match self {
            SimEventKind::Reconfigure { .. } => 0,
            SimEventKind::Scan { .. } => 1,
            SimEventKind::ExploitReady { .. } => 2,
            SimEventKind::AttackLaunched { .. } => 3,
            SimEventKind::CompromiseStart => 4,
            SimEventKind::Detection => 5,
            SimEventKind::ResetComplete => 6,
        }
    }
}

/// A replayable run: the scenario, the seed, and everything that happened.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SimTrace {
    pub scenario: Scenario,
    pub seed: u64,
    pub events: Vec<SimEvent>,
}

/// Statistics derived from one run.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SimMetrics {
    pub time_to_first_compromise: Option<f64>,
    /// Fraction of (member-)time spent compromised.
    pub compromised_fraction: f64,
    pub successful_attacks: u64,
    pub exploits_developed: u64,
    /// 1 minus the fraction of (member-)time lost to restores.
    pub availability: f64,
}

/// Run one simulation. Deterministic in `(scenario, seed)`.
pub fn run(scenario: &Scenario, seed: u64) -> Result<(SimTrace, SimMetrics), SimError> {
    scenario.validate()?;
    Ok(engine::simulate(scenario, seed))
}

/// Run `replications` independent simulations with seeds
/// `base_seed .. base_seed + replications`, in parallel, results in seed
/// order.
pub fn run_replications(
    scenario: &Scenario,
    base_seed: u64,
    replications: u32,
) -> Result<Vec<SimMetrics>, SimError> {
    scenario.validate()?;
    if replications == 0 {
        return Err(SimError::NoReplications);
    }
    Ok((0..replications as u64)
        .into_par_iter()
        .map(|i| engine::simulate(scenario, base_seed.wrapping_add(i)).1)
        .collect())
}

/// Mean, sample deviation and a 95% normal-approximation interval.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Aggregate {
    pub mean: f64,
    pub std_dev: f64,
    pub ci95: (f64, f64),
    pub n: usize,
}

impl Aggregate {
    fn from_values(values: &[f64]) -> Self {
        let n = values.len();
        let mean = values.iter().sum::<f64>() / n as f64;
        let std_dev = if n > 1 {
            let var = values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (n - 1) as f64;
            var.sqrt()
        } else {
            0.0
        };
        let half = 1.96 * std_dev / (n as f64).sqrt();
        Aggregate {
            mean,
            std_dev,
            ci95: (mean - half, mean + half),
            n,
        }
    }
}

/// Per-metric aggregates over a batch of runs. Runs that never saw a
/// compromise are excluded from the time-to-first-compromise aggregate and
/// counted in `first_compromise_excluded`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct MetricsSummary {
    pub time_to_first_compromise: Option<Aggregate>,
    pub first_compromise_excluded: usize,
    pub compromised_fraction: Aggregate,
    pub successful_attacks: Aggregate,
    pub exploits_developed: Aggregate,
    pub availability: Aggregate,
}

/// Aggregate a batch of runs. The caller supplies runs in seed order; the
/// fold is sequential, so sums are deterministic.
pub fn summarize(runs: &[SimMetrics]) -> Result<MetricsSummary, SimError> {
    if runs.is_empty() {
        return Err(SimError::NoRuns);
    }
    let first: Vec<f64> = runs
        .iter()
        .filter_map(|m| m.time_to_first_compromise)
        .collect();
    let collect = |f: fn(&SimMetrics) -> f64| -> Vec<f64> { runs.iter().map(f).collect() };
    Ok(MetricsSummary {
        time_to_first_compromise: (!first.is_empty()).then(|| Aggregate::from_values(&first)),
        first_compromise_excluded: runs.len() - first.len(),
        compromised_fraction: Aggregate::from_values(&collect(|m| m.compromised_fraction)),
        successful_attacks: Aggregate::from_values(&collect(|m| m.successful_attacks as f64)),
        exploits_developed: Aggregate::from_values(&collect(|m| m.exploits_developed as f64)),
        availability: Aggregate::from_values(&collect(|m| m.availability)),
    })
}

/// Which scenario knob a sweep varies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SweepParameter {
    ReconfigPeriod,
    PoolSize,
    DetectionProb,
}

/// One sweep row: the parameter value, its aggregate metrics, and the
/// fraction of replications with at least one successful attack.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepRow {
    pub value: f64,
    pub success_probability: f64,
    pub summary: MetricsSummary,
}

fn apply_parameter(
    template: &Scenario,
    parameter: SweepParameter,
    value: f64,
) -> Result<Scenario, SimError> {
    let mut scenario = template.clone();
    match parameter {
        SweepParameter::ReconfigPeriod => {
            if !value.is_finite() || value <= 0.0 {
                return Err(SimError::BadSweepValue {
                    name: "reconfiguration period",
                    value,
                });
            }
            scenario.defender.policy = ReconfigPolicy::Periodic { period: value };
        }
        SweepParameter::PoolSize => {
            if !value.is_finite() || value < 1.0 || value.fract() != 0.0 || value > u32::MAX as f64
            {
                return Err(SimError::BadSweepValue {
                    name: "pool size",
                    value,
                });
            }
            scenario.pool_size = value as u32;
        }
        SweepParameter::DetectionProb => {
            if !value.is_finite() || !(0.0..=1.0).contains(&value) {
                return Err(SimError::BadSweepValue {
                    name: "detection probability",
                    value,
                });
            }
            scenario.defender.detection_prob = value;
        }
    }
    Ok(scenario)
}

/// For each parameter value, run `replications` simulations with seeds
/// `base_seed .. base_seed + replications` and aggregate. Rows are
/// independent and reproducible: the same inputs always give the same table.
pub fn sweep(
    template: &Scenario,
    parameter: SweepParameter,
    values: &[f64],
    replications: u32,
    base_seed: u64,
) -> Result<Vec<SweepRow>, SimError> {
    if values.is_empty() {
        return Err(SimError::NoSweepValues);
    }
    if replications == 0 {
        return Err(SimError::NoReplications);
    }
    values
        .iter()
        .map(|&value| {
            let scenario = apply_parameter(template, parameter, value)?;
            let runs = run_replications(&scenario, base_seed, replications)?;
            let successes = runs.iter().filter(|m| m.successful_attacks > 0).count();
            Ok(SweepRow {
                value,
                success_probability: successes as f64 / runs.len() as f64,
                summary: summarize(&runs)?,
            })
        })
        .collect()
}

/// A single always-exposed system with a detect-and-reset regulator: attacks
/// arrive as a Poisson stream at `attack_rate`, every landed attack
/// compromises the machine (one configuration, nothing to mismatch), and the
/// only defense is noticing and restoring.
pub fn kiosk_scenario(
    detection_prob: f64,
    detection_delay: DurationDist,
    reset_latency: f64,
    persistence_prob: f64,
    attack_rate: f64,
    horizon: f64,
) -> Result<Scenario, SimError> {
    if !attack_rate.is_finite() || attack_rate <= 0.0 {
        return Err(SimError::NonPositive {
            name: "attack rate",
            value: attack_rate,
        });
    }
    let scenario = Scenario {
        attacker: AttackerModel {
            schedule: ScanSchedule::PoissonStream {
                mean_interval: 1.0 / attack_rate,
            },
            exploit_dev_time: DurationDist::Constant(0.0),
            retry: true,
            mismatch_success_prob: 0.0,
            bypass_prob: 0.0,
            exploit_validity: ExploitValidity::ValueMatch,
        },
        defender: DefenderModel {
            space: ConfigSpace::uniform(1).expect("nonempty"),
            policy: ReconfigPolicy::Stationary,
            detection_prob,
            detection_delay,
            reset_latency,
            persistence_prob,
        },
        horizon,
        pool_size: 1,
        pool_reset_period: None,
    };
    scenario.validate()?;
    Ok(scenario)
}

/// A pool of `pool_size` servers behind a uniform per-request dispatcher.
/// Members run fixed configurations assigned round-robin from a space of
/// `configs`; compromised members are restored to clean images every
/// `reset_period` (or never, when `None`). The attacker keeps one exploit in
/// flight at a time and must get dispatched to a matching member.
pub fn mtd_pool_scenario(
    pool_size: u32,
    configs: u64,
    reset_period: Option<f64>,
    attacker: AttackerModel,
    horizon: f64,
) -> Result<Scenario, SimError> {
    if pool_size < 2 {
        return Err(SimError::PoolTooSmall(pool_size));
    }
    let scenario = Scenario {
        attacker,
        defender: DefenderModel {
            space: ConfigSpace::uniform(configs)?,
            policy: ReconfigPolicy::Stationary,
            detection_prob: 0.0,
            detection_delay: DurationDist::Constant(0.0),
            reset_latency: 1.0,
            persistence_prob: 0.0,
        },
        horizon,
        pool_size,
        pool_reset_period: reset_period,
    };
    scenario.validate()?;
    Ok(scenario)
}
