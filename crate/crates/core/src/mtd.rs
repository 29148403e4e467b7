//! Defender configuration trajectories.
//!
//! A defender's system is a time-varying configuration: stationary (never
//! moves), cyclostationary (periodic moves), poly-cyclostationary (several
//! interleaved periods), or non-stationary (pseudorandom moves). Policies
//! generate seed-deterministic [`ConfigTrajectory`] values; the process
//! classes nest, innermost to outermost: stationary ⊂ cyclostationary ⊂
//! poly-cyclostationary ⊂ non-stationary.

use serde::Serialize;
use thiserror::Error;

use crate::dist::DurationDist;
use crate::rng::{self, StreamRng};
use crate::variety::VarietyMeasure;

#[derive(Debug, Error, PartialEq)]
pub enum MtdError {
    #[error("configuration space needs at least one configuration")]
    EmptySpace,
    #[error("per-move entropy {entropy} outside [0, log2({size})]")]
    EntropyOutOfRange { entropy: f64, size: u64 },
    #[error("policy period must be positive, got {0}")]
    NonPositivePeriod(f64),
    #[error("poly-periodic policy needs at least 2 distinct periods")]
    TooFewPeriods,
    #[error("pseudorandom intervals must be strictly positive")]
    NonPositiveInterval,
    #[error("horizon must be positive, got {0}")]
    NonPositiveHorizon(f64),
    #[error("trajectory event times must increase strictly within [0, horizon]")]
    UnorderedEvents,
    #[error("config id {config} outside space of {size}")]
    ConfigOutOfRange { config: u64, size: u64 },
    #[error("interleave needs at least one component")]
    NoComponents,
    #[error("interleave slot must be positive, got {0}")]
    NonPositiveSlot(f64),
    #[error("interleave components must share one horizon")]
    HorizonMismatch,
    #[error("window [{start}, {end}] is not a valid range within [0, {horizon}]")]
    BadWindow { start: f64, end: f64, horizon: f64 },
}

/// The set of configurations a defender can move between, with the entropy a
/// single move injects (defaults to `log2(size)`, a uniform draw).
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ConfigSpace {
    size: u64,
    per_move_entropy: f64,
}

impl ConfigSpace {
    /// Space of `size` configurations with uniform-draw move entropy.
    pub fn uniform(size: u64) -> Result<Self, MtdError> {
        if size == 0 {
            return Err(MtdError::EmptySpace);
        }
        Ok(Self {
            size,
            per_move_entropy: (size as f64).log2(),
        })
    }

    /// Space with an explicit per-move entropy in `[0, log2(size)]`.
    pub fn with_entropy(size: u64, per_move_entropy: f64) -> Result<Self, MtdError> {
        if size == 0 {
            return Err(MtdError::EmptySpace);
        }
        let max = (size as f64).log2();
        if !per_move_entropy.is_finite()
            || per_move_entropy < 0.0
            || per_move_entropy > max + 1e-9
        {
            return Err(MtdError::EntropyOutOfRange {
                entropy: per_move_entropy,
                size,
            });
        }
        Ok(Self {
            size,
            per_move_entropy,
        })
    }

    pub fn size(&self) -> u64 {
        self.size
    }

    pub fn per_move_entropy(&self) -> f64 {
        self.per_move_entropy
    }
}

/// When and how the defender reconfigures.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub enum ReconfigPolicy {
    /// Never moves.
    Stationary,
    /// Moves every `period`.
    Periodic { period: f64 },
    /// Moves on the union of several periodic schedules; coincident events
    /// coalesce into a single move.
    PolyPeriodic { periods: Vec<f64> },
    /// Moves after pseudorandom gaps drawn from `interval`.
    PseudoRandom { interval: DurationDist },
}

impl ReconfigPolicy {
    pub fn validate(&self) -> Result<(), MtdError> {
        match self {
            ReconfigPolicy::Stationary => Ok(()),
            ReconfigPolicy::Periodic { period } => {
                if !period.is_finite() || *period <= 0.0 {
                    Err(MtdError::NonPositivePeriod(*period))
                } else {
                    Ok(())
                }
            }
            ReconfigPolicy::PolyPeriodic { periods } => {
                for &p in periods {
                    if !p.is_finite() || p <= 0.0 {
                        return Err(MtdError::NonPositivePeriod(p));
                    }
                }
                let mut distinct = periods.clone();
                distinct.sort_by(f64::total_cmp);
                distinct.dedup();
                if distinct.len() < 2 {
                    return Err(MtdError::TooFewPeriods);
                }
                Ok(())
            }
            ReconfigPolicy::PseudoRandom { interval } => {
                if interval.is_strictly_positive() {
                    Ok(())
                } else {
                    Err(MtdError::NonPositiveInterval)
                }
            }
        }
    }

    /// The tightest process class this policy belongs to.
    pub fn classify(&self) -> ProcessKind {
        match self {
            ReconfigPolicy::Stationary => ProcessKind::Stationary,
            ReconfigPolicy::Periodic { .. } => ProcessKind::Cyclostationary,
            ReconfigPolicy::PolyPeriodic { .. } => ProcessKind::PolyCyclostationary,
            ReconfigPolicy::PseudoRandom { .. } => ProcessKind::NonStationary,
        }
    }

    /// Membership predicate over the nested classes: a policy is a member of
    /// its own class and of every class containing it.
    pub fn is_member(&self, class: ProcessKind) -> bool {
        class.contains(self.classify())
    }
}

/// Process classes ordered innermost to outermost.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ProcessKind {
    Stationary,
    Cyclostationary,
    PolyCyclostationary,
    NonStationary,
}

impl ProcessKind {
    fn rank(self) -> u8 {
        match self {
            ProcessKind::Stationary => 0,
            ProcessKind::Cyclostationary => 1,
            ProcessKind::PolyCyclostationary => 2,
            ProcessKind::NonStationary => 3,
        }
    }

    /// True when `inner`'s class sits inside this one (or is the same).
    pub fn contains(self, inner: ProcessKind) -> bool {
        self.rank() >= inner.rank()
    }
}

/// Whether a move may redraw the configuration it is leaving.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum MoveRule {
    /// Draw uniformly from the other `M - 1` configurations: the system
    /// always genuinely moves (when `M > 1`).
    ForcedMove,
    /// Draw uniformly over all `M` configurations; a move may land on the
    /// current one. Matches pool-style redeployment.
    UniformRedraw,
}

/// A concrete time-varying configuration: the configuration holding at t = 0
/// and a strictly time-ordered list of reconfiguration events over a finite
/// horizon.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConfigTrajectory {
    origin: u64,
    events: Vec<(f64, u64)>,
    horizon: f64,
}

impl ConfigTrajectory {
    pub fn new(origin: u64, events: Vec<(f64, u64)>, horizon: f64) -> Result<Self, MtdError> {
        if !horizon.is_finite() || horizon <= 0.0 {
            return Err(MtdError::NonPositiveHorizon(horizon));
        }
        let mut prev = -1.0;
        for &(t, _) in &events {
            if !t.is_finite() || t <= prev || t < 0.0 || t > horizon {
                return Err(MtdError::UnorderedEvents);
            }
            prev = t;
        }
        Ok(Self {
            origin,
            events,
            horizon,
        })
    }

    pub fn origin(&self) -> u64 {
        self.origin
    }

    pub fn events(&self) -> &[(f64, u64)] {
        &self.events
    }

    pub fn horizon(&self) -> f64 {
        self.horizon
    }

    /// The configuration holding at time `t`: the one set by the latest event
    /// at or before `t`. `t` must lie in `[0, horizon]`.
    pub fn lookup(&self, t: f64) -> u64 {
        assert!(
            t >= 0.0 && t <= self.horizon,
            "lookup time {t} outside [0, {}]",
            self.horizon
        );
        match self.events.iter().rev().find(|&&(te, _)| te <= t) {
            Some(&(_, config)) => config,
            None => self.origin,
        }
    }
}

fn draw_move(rng: &mut StreamRng, size: u64, current: u64, rule: MoveRule) -> u64 {
    match rule {
        MoveRule::UniformRedraw => rng::uniform_index(rng, size),
        MoveRule::ForcedMove => {
            if size <= 1 {
                current
            } else {
                let d = rng::uniform_index(rng, size - 1);
                if d >= current {
                    d + 1
                } else {
                    d
                }
            }
        }
    }
}

fn event_times(
    policy: &ReconfigPolicy,
    horizon: f64,
    rng: &mut StreamRng,
) -> Vec<f64> {
    match policy {
        ReconfigPolicy::Stationary => Vec::new(),
        ReconfigPolicy::Periodic { period } => {
            let mut times = Vec::new();
            let mut k = 1u64;
            loop {
                let t = k as f64 * period;
                if t > horizon {
                    break;
                }
                times.push(t);
                k += 1;
            }
            times
        }
        ReconfigPolicy::PolyPeriodic { periods } => {
            let mut times = Vec::new();
            for period in periods {
                let mut k = 1u64;
                loop {
                    let t = k as f64 * period;
                    if t > horizon {
                        break;
                    }
                    times.push(t);
                    k += 1;
                }
            }
            times.sort_by(f64::total_cmp);
            // Coincident schedule points coalesce into one move.
            times.dedup();
            times
        }
        ReconfigPolicy::PseudoRandom { interval } => {
            let mut times = Vec::new();
            let mut t = 0.0;
            loop {
                t += interval.sample(rng);
                if t > horizon {
                    break;
                }
                times.push(t);
            }
            times
        }
    }
}

/// Generate a trajectory with forced moves: every event lands on a different
/// configuration than the one it leaves (when the space allows it).
pub fn generate_trajectory(
    policy: &ReconfigPolicy,
    space: &ConfigSpace,
    horizon: f64,
    seed: u64,
) -> Result<ConfigTrajectory, MtdError> {
    generate_trajectory_with_rule(policy, space, horizon, seed, MoveRule::ForcedMove)
}

/// Generate a trajectory, choosing how moves redraw configurations. A pure
/// function of its arguments: the same inputs always produce the same
/// trajectory.
pub fn generate_trajectory_with_rule(
    policy: &ReconfigPolicy,
    space: &ConfigSpace,
    horizon: f64,
    seed: u64,
    rule: MoveRule,
) -> Result<ConfigTrajectory, MtdError> {
    policy.validate()?;
    if !horizon.is_finite() || horizon <= 0.0 {
        return Err(MtdError::NonPositiveHorizon(horizon));
    }
    let mut origin_rng = rng::stream(seed, "mtd/origin");
    let mut interval_rng = rng::stream(seed, "mtd/intervals");
    let mut draw_rng = rng::stream(seed, "mtd/draws");

    let origin = rng::uniform_index(&mut origin_rng, space.size());
    let times = event_times(policy, horizon, &mut interval_rng);
    let mut current = origin;
    let events: Vec<(f64, u64)> = times
        .into_iter()
        .map(|t| {
            current = draw_move(&mut draw_rng, space.size(), current, rule);
            (t, current)
        })
        .collect();
    ConfigTrajectory::new(origin, events, horizon)
}

/// Round-robin interleaving: slot `j` (of width `slot`) exposes component
/// `j mod k`. Interleaving distinct stationary components yields a composite
/// that repeats with period `k * slot` — a cyclostationary process built from
/// stationary parts. A slot boundary falling exactly on the horizon does not
/// open a new slot.
pub fn interleave(
    components: &[ConfigTrajectory],
    slot: f64,
) -> Result<ConfigTrajectory, MtdError> {
    if components.is_empty() {
        return Err(MtdError::NoComponents);
    }
    if !slot.is_finite() || slot <= 0.0 {
        return Err(MtdError::NonPositiveSlot(slot));
    }
    let horizon = components[0].horizon();
    if components.iter().any(|c| c.horizon() != horizon) {
        return Err(MtdError::HorizonMismatch);
    }

    let k = components.len();
    let origin = components[0].lookup(0.0);
    let mut current = origin;
    let mut events: Vec<(f64, u64)> = Vec::new();
    let mut j = 0u64;
    loop {
        let start = j as f64 * slot;
        if start >= horizon {
            break;
        }
        let end = ((j + 1) as f64 * slot).min(horizon);
        let comp = &components[(j as usize) % k];
        if j > 0 {
            let v = comp.lookup(start);
            if v != current {
                events.push((start, v));
                current = v;
            }
        }
        for &(te, cv) in comp.events() {
            let in_slot = te > start && (te < end || (end == horizon && te == horizon));
            if in_slot && cv != current {
                events.push((te, cv));
                current = cv;
            }
        }
        j += 1;
    }
    ConfigTrajectory::new(origin, events, horizon)
}

/// Count of distinct configurations exposed during `[start, end]`, including
/// the configuration already active at `start`.
pub fn observed_variety(
    traj: &ConfigTrajectory,
    window: (f64, f64),
) -> Result<VarietyMeasure, MtdError> {
    let (start, end) = window;
    if !start.is_finite() || !end.is_finite() || start < 0.0 || end > traj.horizon() || start >= end
    {
        return Err(MtdError::BadWindow {
            start,
            end,
            horizon: traj.horizon(),
        });
    }
    let mut seen = vec![traj.lookup(start)];
    for &(t, config) in traj.events() {
        if t > start && t <= end && !seen.contains(&config) {
            seen.push(config);
        }
    }
    Ok(VarietyMeasure::from_u64(seen.len() as u64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn space(m: u64) -> ConfigSpace {
        ConfigSpace::uniform(m).unwrap()
    }

    #[test]
    fn classification_follows_policy_kind() {
        assert_eq!(ReconfigPolicy::Stationary.classify(), ProcessKind::Stationary);
        assert_eq!(
            ReconfigPolicy::Periodic { period: 24.0 }.classify(),
            ProcessKind::Cyclostationary
        );
        assert_eq!(
            ReconfigPolicy::PolyPeriodic { periods: vec![3.0, 5.0, 7.0] }.classify(),
            ProcessKind::PolyCyclostationary
        );
        assert_eq!(
            ReconfigPolicy::PseudoRandom {
                interval: DurationDist::Exponential { mean: 2.0 }
            }
            .classify(),
            ProcessKind::NonStationary
        );
    }

    #[test]
    fn classes_nest_innermost_to_outermost() {
        let stationary = ReconfigPolicy::Stationary;
        for class in [
            ProcessKind::Stationary,
            ProcessKind::Cyclostationary,
            ProcessKind::PolyCyclostationary,
            ProcessKind::NonStationary,
        ] {
            assert!(stationary.is_member(class));
        }
        let periodic = ReconfigPolicy::Periodic { period: 1.0 };
        assert!(!periodic.is_member(ProcessKind::Stationary));
        assert!(periodic.is_member(ProcessKind::Cyclostationary));
        assert!(periodic.is_member(ProcessKind::NonStationary));
    }

    #[test]
    fn policy_validation() {
        assert!(ReconfigPolicy::Periodic { period: 0.0 }.validate().is_err());
        assert!(
            ReconfigPolicy::PolyPeriodic { periods: vec![2.0, 2.0] }
                .validate()
                .is_err(),
            "duplicate periods are not distinct"
        );
        assert!(ReconfigPolicy::PolyPeriodic { periods: vec![2.0, 3.0] }
            .validate()
            .is_ok());
        assert!(ReconfigPolicy::PseudoRandom {
            interval: DurationDist::Constant(0.0)
        }
        .validate()
        .is_err());
    }

    #[test]
    fn stationary_trajectory_never_moves() {
        let traj =
            generate_trajectory(&ReconfigPolicy::Stationary, &space(8), 100.0, 7).unwrap();
        assert!(traj.events().is_empty());
        assert_eq!(traj.lookup(0.0), traj.lookup(100.0));
    }

    #[test]
    fn periodic_trajectory_event_times() {
        let traj = generate_trajectory(
            &ReconfigPolicy::Periodic { period: 10.0 },
            &space(16),
            35.0,
            3,
        )
        .unwrap();
        let times: Vec<f64> = traj.events().iter().map(|&(t, _)| t).collect();
        assert_eq!(times, vec![10.0, 20.0, 30.0]);
    }

    #[test]
    fn trajectory_generation_is_deterministic() {
        let policy = ReconfigPolicy::PseudoRandom {
            interval: DurationDist::Exponential { mean: 3.0 },
        };
        let a = generate_trajectory(&policy, &space(32), 200.0, 99).unwrap();
        let b = generate_trajectory(&policy, &space(32), 200.0, 99).unwrap();
        assert_eq!(a, b);
        let c = generate_trajectory(&policy, &space(32), 200.0, 100).unwrap();
        assert_ne!(a, c, "different seeds should explore different paths");
    }

    #[test]
    fn forced_moves_always_change_config() {
        let policy = ReconfigPolicy::Periodic { period: 1.0 };
        for seed in 0..20 {
            let traj = generate_trajectory(&policy, &space(2), 50.0, seed).unwrap();
            let mut current = traj.origin();
            for &(_, next) in traj.events() {
                assert_ne!(current, next);
                current = next;
            }
        }
    }

    #[test]
    fn uniform_redraw_can_stay_put() {
        let policy = ReconfigPolicy::Periodic { period: 1.0 };
        let stayed = (0..50).any(|seed| {
            let traj = generate_trajectory_with_rule(
                &policy,
                &space(2),
                50.0,
                seed,
                MoveRule::UniformRedraw,
            )
            .unwrap();
            let mut current = traj.origin();
            traj.events().iter().any(|&(_, next)| {
                let same = next == current;
                current = next;
                same
            })
        });
        assert!(stayed, "uniform redraw over M=2 should sometimes stay");
    }

    #[test]
    fn poly_periodic_coalesces_coincident_events() {
        let policy = ReconfigPolicy::PolyPeriodic { periods: vec![2.0, 3.0] };
        let traj = generate_trajectory(&policy, &space(64), 12.0, 5).unwrap();
        let times: Vec<f64> = traj.events().iter().map(|&(t, _)| t).collect();
        // Union of {2,4,6,8,10,12} and {3,6,9,12} with 6 and 12 coalesced.
        assert_eq!(times, vec![2.0, 3.0, 4.0, 6.0, 8.0, 9.0, 10.0, 12.0]);
    }

    #[test]
    fn single_system_lookup_follows_events() {
        let traj = ConfigTrajectory::new(5, vec![(2.0, 9), (4.0, 1)], 10.0).unwrap();
        assert_eq!(traj.lookup(0.0), 5);
        assert_eq!(traj.lookup(1.9), 5);
        assert_eq!(traj.lookup(2.0), 9);
        assert_eq!(traj.lookup(3.9), 9);
        assert_eq!(traj.lookup(10.0), 1);
    }

    #[test]
    fn interleaving_one_component_is_identity() {
        let policy = ReconfigPolicy::Periodic { period: 7.0 };
        let traj = generate_trajectory(&policy, &space(8), 50.0, 11).unwrap();
        let composite = interleave(std::slice::from_ref(&traj), 5.0).unwrap();
        assert_eq!(composite.origin(), traj.origin());
        assert_eq!(composite.events(), traj.events());
    }

    #[test]
    fn interleaving_two_stationary_components_alternates() {
        let a = ConfigTrajectory::new(0, vec![], 30.0).unwrap();
        let b = ConfigTrajectory::new(1, vec![], 30.0).unwrap();
        let composite = interleave(&[a, b], 5.0).unwrap();
        assert_eq!(composite.lookup(0.0), 0);
        assert_eq!(composite.lookup(5.0), 1);
        assert_eq!(composite.lookup(9.9), 1);
        assert_eq!(composite.lookup(10.0), 0);
        let v = observed_variety(&composite, (0.0, 12.0)).unwrap();
        assert_eq!(v.count(), &num_bigint::BigUint::from(2u32));
        // Periodic with period k * slot = 10.
        for t in [0.0, 3.0, 7.5, 12.0, 18.0] {
            assert_eq!(composite.lookup(t), composite.lookup(t + 10.0));
        }
    }

    #[test]
    fn interleaving_identical_configs_is_constant() {
        let a = ConfigTrajectory::new(4, vec![], 30.0).unwrap();
        let b = ConfigTrajectory::new(4, vec![], 30.0).unwrap();
        let composite = interleave(&[a, b], 5.0).unwrap();
        assert!(composite.events().is_empty());
    }

    #[test]
    fn interleave_rejects_bad_inputs() {
        assert_eq!(interleave(&[], 5.0), Err(MtdError::NoComponents));
        let a = ConfigTrajectory::new(0, vec![], 30.0).unwrap();
        let b = ConfigTrajectory::new(1, vec![], 40.0).unwrap();
        assert_eq!(interleave(&[a.clone(), b], 5.0), Err(MtdError::HorizonMismatch));
        assert_eq!(
            interleave(std::slice::from_ref(&a), 0.0),
            Err(MtdError::NonPositiveSlot(0.0))
        );
    }

    #[test]
    fn observed_variety_of_stationary_is_one() {
        let traj =
            generate_trajectory(&ReconfigPolicy::Stationary, &space(64), 100.0, 1).unwrap();
        let v = observed_variety(&traj, (0.0, 100.0)).unwrap();
        assert_eq!(v.count(), &num_bigint::BigUint::from(1u32));
        assert_eq!(v.bits(), 0.0);
    }

    #[test]
    fn observed_variety_counts_moves_in_window() {
        let policy = ReconfigPolicy::Periodic { period: 10.0 };
        let traj = generate_trajectory(&policy, &space(1 << 30), 35.0, 21).unwrap();
        let v = observed_variety(&traj, (0.0, 35.0)).unwrap();
        let count = v.count().try_into().unwrap_or(u64::MAX);
        assert!(count <= 4);
        // Over a space this large, four distinct draws are all but certain.
        assert_eq!(count, 4u64);
        // A window before the first move sees only the origin.
        let v = observed_variety(&traj, (0.0, 9.0)).unwrap();
        assert_eq!(v.count(), &num_bigint::BigUint::from(1u32));
    }

    #[test]
    fn observed_variety_rejects_bad_windows() {
        let traj = ConfigTrajectory::new(0, vec![], 10.0).unwrap();
        assert!(observed_variety(&traj, (5.0, 5.0)).is_err());
        assert!(observed_variety(&traj, (6.0, 2.0)).is_err());
        assert!(observed_variety(&traj, (0.0, 11.0)).is_err());
        assert!(observed_variety(&traj, (-1.0, 4.0)).is_err());
    }

    fn arb_policy() -> impl Strategy<Value = ReconfigPolicy> {
        prop_oneof![
            Just(ReconfigPolicy::Stationary),
            (0.5f64..10.0).prop_map(|period| ReconfigPolicy::Periodic { period }),
            (0.5f64..10.0, 0.5f64..10.0).prop_map(|(a, b)| ReconfigPolicy::PolyPeriodic {
                periods: vec![a, a + b]
            }),
            (0.5f64..5.0).prop_map(|mean| ReconfigPolicy::PseudoRandom {
                interval: DurationDist::Exponential { mean }
            }),
            (0.5f64..5.0).prop_map(|v| ReconfigPolicy::PseudoRandom {
                interval: DurationDist::Constant(v)
            }),
        ]
    }

    proptest! {
        #[test]
        fn generation_is_pure(policy in arb_policy(), m in 1u64..32, seed: u64) {
            let a = generate_trajectory(&policy, &space(m), 60.0, seed).unwrap();
            let b = generate_trajectory(&policy, &space(m), 60.0, seed).unwrap();
            prop_assert_eq!(a, b);
        }

        #[test]
        fn forced_moves_differ_across_events(policy in arb_policy(), m in 2u64..32, seed: u64) {
            let traj = generate_trajectory(&policy, &space(m), 60.0, seed).unwrap();
            let mut current = traj.origin();
            for &(_, next) in traj.events() {
                prop_assert_ne!(current, next);
                current = next;
            }
        }

        #[test]
        fn observed_variety_is_bounded(policy in arb_policy(), m in 1u64..32, seed: u64) {
            let traj = generate_trajectory(&policy, &space(m), 60.0, seed).unwrap();
            let window = (10.0, 50.0);
            let v = observed_variety(&traj, window).unwrap();
            let events_in_window = traj
                .events()
                .iter()
                .filter(|&&(t, _)| t > window.0 && t <= window.1)
                .count() as u64;
            let bound = m.min(1 + events_in_window);
            let count: u64 = v.count().try_into().unwrap();
            prop_assert!(count <= bound, "count {} > bound {}", count, bound);
        }

        #[test]
        fn every_policy_is_a_member_of_the_outermost_class(policy in arb_policy()) {
            prop_assert!(policy.is_member(ProcessKind::NonStationary));
            let kind = policy.classify();
            prop_assert!(kind.contains(kind));
            prop_assert!(ProcessKind::NonStationary.contains(kind));
            prop_assert!(ProcessKind::PolyCyclostationary.contains(kind)
                || kind == ProcessKind::NonStationary);
        }
    }
}
