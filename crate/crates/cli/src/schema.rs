//! Scenario-file parsing and validation.
//!
//! Files are TOML with a `schema_version` and an ordered list of `[[request]]`
//! tables; the full key reference lives in `docs/schema/scenario-file.md`.
//! Unknown keys are rejected at every level, naming the offending key. Every
//! duration is a string carrying an explicit unit label (`"5 sec"`), checked
//! against the request's declared `time_unit` — mismatches are errors, never
//! conversions.

use std::path::Path;

use serde::Deserialize;

use requivar::{
    dist::DurationDist,
    mtd::{ConfigSpace, ReconfigPolicy},
    regulation::{ChannelRate, RegulationScenario, TimeUnit},
    sim::{AttackerModel, DefenderModel, ExploitValidity, ScanSchedule, Scenario, SweepParameter},
    variety::{Alphabet, SequenceSpace, SuccessorConstraint},
};

use crate::error::CliError;

pub const SUPPORTED_SCHEMA_VERSION: u32 = 1;

/// A parsed, schema-valid scenario file. Requests keep declaration order.
#[derive(Debug)]
pub struct ScenarioFile {
    pub schema_version: u32,
    pub requests: Vec<Request>,
}

#[derive(Debug)]
pub enum Request {
    Variety(VarietyRequest),
    Regulation(RegulationRequest),
    ReconfigBound(BoundRequest),
    Simulation(SimulationRequest),
    Sweep(SweepRequest),
}

impl Request {
    pub fn name(&self) -> &str {
        match self {
            Request::Variety(r) => &r.name,
            Request::Regulation(r) => &r.name,
            Request::ReconfigBound(r) => &r.name,
            Request::Simulation(r) => &r.name,
            Request::Sweep(r) => &r.name,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Request::Variety(_) => "variety",
            Request::Regulation(_) => "regulation",
            Request::ReconfigBound(_) => "reconfig-bound",
            Request::Simulation(_) => "simulation",
            Request::Sweep(_) => "sweep",
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VarietyRequest {
    pub name: String,
    pub alphabet: Vec<String>,
    pub length: u64,
    /// Successor constraint: adjacent symbols at most this many index
    /// positions apart.
    pub max_step: Option<u64>,
    /// Successor constraint as explicit allowed (predecessor, successor)
    /// symbol pairs. Mutually exclusive with `max_step`.
    pub allowed_pairs: Option<Vec<[String; 2]>>,
    /// Admissible first symbols (defaults to all).
    pub initial: Option<Vec<String>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RegulationRequest {
    pub name: String,
    pub time_unit: String,
    #[serde(default)]
    pub disturbances: Vec<ChannelSpec>,
    #[serde(default)]
    pub regulators: Vec<ChannelSpec>,
}

/// One channel, stated either as selections (`states_per_signal` +
/// `signals_per_period`) or directly as `bits_per_period`.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChannelSpec {
    pub label: String,
    /// Replicate this channel (e.g. ten identical divisions).
    #[serde(default = "one_u32")]
    pub copies: u32,
    pub states_per_signal: Option<u64>,
    pub signals_per_period: Option<f64>,
    pub bits_per_period: Option<f64>,
    pub period: String,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BoundRequest {
    pub name: String,
    pub h_move: f64,
    /// Disturbance rate with its unit, e.g. `"2 / hour"`.
    pub rate: String,
    #[serde(default = "one_f64")]
    pub margin: f64,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SimulationRequest {
    pub name: String,
    pub time_unit: String,
    pub seed: u64,
    #[serde(default = "one_u32")]
    pub replications: u32,
    pub scenario: ScenarioSpec,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepRequest {
    pub name: String,
    pub time_unit: String,
    /// `reconfig-period`, `pool-size` or `detection-prob`.
    pub parameter: String,
    pub values: Vec<f64>,
    pub replications: u32,
    pub base_seed: u64,
    pub scenario: ScenarioSpec,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioSpec {
    pub horizon: String,
    #[serde(default = "one_u32")]
    pub pool_size: u32,
    pub pool_reset_period: Option<String>,
    pub attacker: AttackerSpec,
    pub defender: DefenderSpec,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AttackerSpec {
    pub schedule: ScheduleSpec,
    pub exploit_dev_time: DistSpec,
    #[serde(default = "true_bool")]
    pub retry: bool,
    #[serde(default)]
    pub mismatch_success_prob: f64,
    #[serde(default)]
    pub bypass_prob: f64,
    /// `strict-epoch` (default) or `value-match`.
    #[serde(default = "strict_epoch")]
    pub exploit_validity: String,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScheduleSpec {
    /// `periodic` or `poisson`.
    pub kind: String,
    pub interval: Option<String>,
    pub mean_interval: Option<String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DistSpec {
    /// `constant` or `exponential`.
    pub kind: String,
    pub value: Option<String>,
    pub mean: Option<String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DefenderSpec {
    pub config_space: u64,
    pub policy: PolicySpec,
    #[serde(default)]
    pub detection_prob: f64,
    pub detection_delay: Option<DistSpec>,
    /// Defaults to one time unit.
    pub reset_latency: Option<String>,
    #[serde(default)]
    pub persistence_prob: f64,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolicySpec {
    /// `stationary`, `periodic`, `poly-periodic` or `pseudo-random`.
    pub kind: String,
    pub period: Option<String>,
    pub periods: Option<Vec<String>>,
    pub interval: Option<DistSpec>,
}

fn one_u32() -> u32 {
    1
}

fn one_f64() -> f64 {
    1.0
}

fn true_bool() -> bool {
    true
}

fn strict_epoch() -> String {
    "strict-epoch".to_string()
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileShell {
    schema_version: u32,
    #[serde(default)]
    request: Vec<toml::Value>,
}

/// Read and validate a scenario file. The first problem encountered is
/// reported with the request index and name (or, for file-level problems,
/// the TOML position).
pub fn parse_scenario(path: &Path) -> Result<ScenarioFile, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Parse(format!("cannot read {}: {e}", path.display())))?;
    parse_scenario_str(&text)
}

pub fn parse_scenario_str(text: &str) -> Result<ScenarioFile, CliError> {
    let shell: FileShell =
        toml::from_str(text).map_err(|e| CliError::Parse(e.message().to_string()))?;
    if shell.schema_version != SUPPORTED_SCHEMA_VERSION {
        return Err(CliError::Parse(format!(
            "unsupported schema_version {} (this tool reads version {SUPPORTED_SCHEMA_VERSION})",
            shell.schema_version
        )));
    }
    let mut requests = Vec::with_capacity(shell.request.len());
    for (index, value) in shell.request.into_iter().enumerate() {
        requests.push(parse_request(index, value)?);
    }
    Ok(ScenarioFile {
        schema_version: shell.schema_version,
        requests,
    })
}

fn parse_request(index: usize, value: toml::Value) -> Result<Request, CliError> {
    let context = |msg: String| CliError::Parse(format!("request {}: {msg}", index + 1));
    let mut table = match value {
        toml::Value::Table(t) => t,
        other => {
            return Err(context(format!(
                "expected a table, found {}",
                other.type_str()
            )))
        }
    };
    let kind = match table.remove("kind") {
        Some(toml::Value::String(k)) => k,
        Some(other) => {
            return Err(context(format!(
                "`kind` must be a string, found {}",
                other.type_str()
            )))
        }
        None => return Err(context("missing `kind`".to_string())),
    };
    let body = toml::Value::Table(table);
    let detail = |e: toml::de::Error| context(format!("({kind}) {}", e.message()));
    match kind.as_str() {
        "variety" => Ok(Request::Variety(body.try_into().map_err(detail)?)),
        "regulation" => Ok(Request::Regulation(body.try_into().map_err(detail)?)),
        "reconfig-bound" => Ok(Request::ReconfigBound(body.try_into().map_err(detail)?)),
        "simulation" => Ok(Request::Simulation(body.try_into().map_err(detail)?)),
        "sweep" => Ok(Request::Sweep(body.try_into().map_err(detail)?)),
        other => Err(context(format!(
            "unknown request kind {other:?}, expected one of `variety`, `regulation`, \
             `reconfig-bound`, `simulation`, `sweep`"
        ))),
    }
}

/// Parse a duration string `"<value> <unit>"`, insisting on the expected
/// unit label.
pub fn parse_duration(text: &str, expected_unit: &str) -> Result<f64, CliError> {
    let mut parts = text.split_whitespace();
    let value = parts
        .next()
        .ok_or_else(|| CliError::Validation(format!("empty duration {text:?}")))?;
    let value: f64 = value.parse().map_err(|_| {
        CliError::Validation(format!("duration {text:?} has no leading number"))
    })?;
    let unit = parts.next().ok_or_else(|| {
        CliError::Validation(format!(
            "duration {text:?} is missing its unit label (expected {expected_unit:?})"
        ))
    })?;
    if parts.next().is_some() {
        return Err(CliError::Validation(format!(
            "duration {text:?} has trailing content"
        )));
    }
    if unit != expected_unit {
        return Err(CliError::Validation(format!(
            "duration {text:?} uses unit {unit:?} but this request declares {expected_unit:?}; \
             units are never converted"
        )));
    }
    Ok(value)
}

/// Parse a rate string `"<value> / <unit>"` into the value and its unit.
pub fn parse_rate(text: &str) -> Result<(f64, String), CliError> {
    let (value, unit) = text.split_once('/').ok_or_else(|| {
        CliError::Validation(format!(
            "rate {text:?} is missing its unit label (write e.g. \"2 / hour\")"
        ))
    })?;
    let value: f64 = value
        .trim()
        .parse()
        .map_err(|_| CliError::Validation(format!("rate {text:?} has no leading number")))?;
    let unit = unit.trim();
    if unit.is_empty() || unit.contains(char::is_whitespace) {
        return Err(CliError::Validation(format!(
            "rate {text:?} needs a single unit label after the slash"
        )));
    }
    Ok((value, unit.to_string()))
}

fn validation<E: std::fmt::Display>(name: &str) -> impl Fn(E) -> CliError + '_ {
    move |e| CliError::Validation(format!("{name}: {e}"))
}

impl VarietyRequest {
    /// Build the sequence space this request describes.
    pub fn to_space(&self) -> Result<SequenceSpace, CliError> {
        let fail = validation(&self.name);
        let alphabet = Alphabet::new(self.alphabet.iter().cloned()).map_err(&fail)?;
        let k = alphabet.len();
        let mut space = SequenceSpace::new(alphabet.clone(), self.length).map_err(&fail)?;
        if self.max_step.is_some() && self.allowed_pairs.is_some() {
            return Err(CliError::Validation(format!(
                "{}: give either max_step or allowed_pairs, not both",
                self.name
            )));
        }
        if let Some(step) = self.max_step {
            space = space
                .with_constraint(SuccessorConstraint::max_step(k, step as usize))
                .map_err(&fail)?;
        }
        if let Some(pairs) = &self.allowed_pairs {
            let mut index_pairs = Vec::with_capacity(pairs.len());
            for [pred, succ] in pairs {
                index_pairs.push((self.symbol_index(&alphabet, pred)?, self.symbol_index(&alphabet, succ)?));
            }
            space = space
                .with_constraint(SuccessorConstraint::from_pairs(k, &index_pairs).map_err(&fail)?)
                .map_err(&fail)?;
        }
        if let Some(initial) = &self.initial {
            let indices: Vec<usize> = initial
                .iter()
                .map(|s| self.symbol_index(&alphabet, s))
                .collect::<Result<_, _>>()?;
            space = space.with_initial(&indices).map_err(&fail)?;
        }
        Ok(space)
    }

    fn symbol_index(&self, alphabet: &Alphabet, symbol: &str) -> Result<usize, CliError> {
        alphabet.index_of(symbol).ok_or_else(|| {
            CliError::Validation(format!(
                "{}: symbol {symbol:?} is not in the alphabet",
                self.name
            ))
        })
    }
}

impl ChannelSpec {
    pub fn to_channels(&self, unit: &str) -> Result<Vec<ChannelRate>, CliError> {
        let period = parse_duration(&self.period, unit)?;
        if self.copies == 0 {
            return Err(CliError::Validation(format!(
                "channel {:?}: copies must be at least 1",
                self.label
            )));
        }
        let fail = validation(&self.label);
        let base = match (
            self.states_per_signal,
            self.signals_per_period,
            self.bits_per_period,
        ) {
            (Some(states), Some(signals), None) => {
                ChannelRate::new(&self.label, states, signals, period, TimeUnit::new(unit))
                    .map_err(&fail)?
            }
            (None, None, Some(bits)) => {
                ChannelRate::from_bits(&self.label, bits, period, TimeUnit::new(unit))
                    .map_err(&fail)?
            }
            _ => {
                return Err(CliError::Validation(format!(
                    "channel {:?}: give either states_per_signal + signals_per_period, \
                     or bits_per_period",
                    self.label
                )))
            }
        };
        Ok(vec![base; self.copies as usize])
    }
}

impl RegulationRequest {
    pub fn to_scenario(&self) -> Result<RegulationScenario, CliError> {
        let mut disturbances = Vec::new();
        for spec in &self.disturbances {
            disturbances.extend(spec.to_channels(&self.time_unit)?);
        }
        let mut regulators = Vec::new();
        for spec in &self.regulators {
            regulators.extend(spec.to_channels(&self.time_unit)?);
        }
        RegulationScenario::new(disturbances, regulators, TimeUnit::new(&self.time_unit))
            .map_err(|e| CliError::Validation(format!("{}: {e}", self.name)))
    }
}

impl DistSpec {
    pub fn to_dist(&self, unit: &str) -> Result<DurationDist, CliError> {
        match self.kind.as_str() {
            "constant" => {
                let value = self.value.as_deref().ok_or_else(|| {
                    CliError::Validation("constant distribution needs `value`".to_string())
                })?;
                Ok(DurationDist::Constant(parse_duration(value, unit)?))
            }
            "exponential" => {
                let mean = self.mean.as_deref().ok_or_else(|| {
                    CliError::Validation("exponential distribution needs `mean`".to_string())
                })?;
                Ok(DurationDist::Exponential {
                    mean: parse_duration(mean, unit)?,
                })
            }
            other => Err(CliError::Validation(format!(
                "unknown distribution kind {other:?}, expected `constant` or `exponential`"
            ))),
        }
    }
}

impl ScenarioSpec {
    pub fn to_scenario(&self, unit: &str) -> Result<Scenario, CliError> {
        let schedule = match self.attacker.schedule.kind.as_str() {
            "periodic" => {
                let interval = self.attacker.schedule.interval.as_deref().ok_or_else(|| {
                    CliError::Validation("periodic schedule needs `interval`".to_string())
                })?;
                ScanSchedule::Periodic {
                    interval: parse_duration(interval, unit)?,
                }
            }
            "poisson" => {
                let mean = self
                    .attacker
                    .schedule
                    .mean_interval
                    .as_deref()
                    .ok_or_else(|| {
                        CliError::Validation("poisson schedule needs `mean_interval`".to_string())
                    })?;
                ScanSchedule::PoissonStream {
                    mean_interval: parse_duration(mean, unit)?,
                }
            }
            other => {
                return Err(CliError::Validation(format!(
                    "unknown schedule kind {other:?}, expected `periodic` or `poisson`"
                )))
            }
        };
        let exploit_validity = match self.attacker.exploit_validity.as_str() {
            "strict-epoch" => ExploitValidity::StrictEpoch,
            "value-match" => ExploitValidity::ValueMatch,
            other => {
                return Err(CliError::Validation(format!(
                    "unknown exploit_validity {other:?}, expected `strict-epoch` or `value-match`"
                )))
            }
        };
        let policy = match self.defender.policy.kind.as_str() {
            "stationary" => ReconfigPolicy::Stationary,
            "periodic" => {
                let period = self.defender.policy.period.as_deref().ok_or_else(|| {
                    CliError::Validation("periodic policy needs `period`".to_string())
                })?;
                ReconfigPolicy::Periodic {
                    period: parse_duration(period, unit)?,
                }
            }
            "poly-periodic" => {
                let periods = self.defender.policy.periods.as_ref().ok_or_else(|| {
                    CliError::Validation("poly-periodic policy needs `periods`".to_string())
                })?;
                ReconfigPolicy::PolyPeriodic {
                    periods: periods
                        .iter()
                        .map(|p| parse_duration(p, unit))
                        .collect::<Result<_, _>>()?,
                }
            }
            "pseudo-random" => {
                let interval = self.defender.policy.interval.as_ref().ok_or_else(|| {
                    CliError::Validation("pseudo-random policy needs `interval`".to_string())
                })?;
                ReconfigPolicy::PseudoRandom {
                    interval: interval.to_dist(unit)?,
                }
            }
            other => {
                return Err(CliError::Validation(format!(
                    "unknown policy kind {other:?}, expected `stationary`, `periodic`, \
                     `poly-periodic` or `pseudo-random`"
                )))
            }
        };
        let detection_delay = match &self.defender.detection_delay {
            Some(spec) => spec.to_dist(unit)?,
            None => DurationDist::Constant(0.0),
        };
        let reset_latency = match &self.defender.reset_latency {
            Some(text) => parse_duration(text, unit)?,
            None => 1.0,
        };
        let scenario = Scenario {
            attacker: AttackerModel {
                schedule,
                exploit_dev_time: self.attacker.exploit_dev_time.to_dist(unit)?,
                retry: self.attacker.retry,
                mismatch_success_prob: self.attacker.mismatch_success_prob,
                bypass_prob: self.attacker.bypass_prob,
                exploit_validity,
            },
            defender: DefenderModel {
                space: ConfigSpace::uniform(self.defender.config_space)
                    .map_err(|e| CliError::Validation(e.to_string()))?,
                policy,
                detection_prob: self.defender.detection_prob,
                detection_delay,
                reset_latency,
                persistence_prob: self.defender.persistence_prob,
            },
            horizon: parse_duration(&self.horizon, unit)?,
            pool_size: self.pool_size,
            pool_reset_period: self
                .pool_reset_period
                .as_deref()
                .map(|p| parse_duration(p, unit))
                .transpose()?,
        };
        scenario
            .validate()
            .map_err(|e| CliError::Validation(e.to_string()))?;
        Ok(scenario)
    }
}

impl SweepRequest {
    pub fn parameter(&self) -> Result<SweepParameter, CliError> {
        match self.parameter.as_str() {
            "reconfig-period" => Ok(SweepParameter::ReconfigPeriod),
            "pool-size" => Ok(SweepParameter::PoolSize),
            "detection-prob" => Ok(SweepParameter::DetectionProb),
            other => Err(CliError::Validation(format!(
                "{}: unknown sweep parameter {other:?}, expected `reconfig-period`, \
                 `pool-size` or `detection-prob`",
                self.name
            ))),
        }
    }
}
