//! Cybernetic security modeling: variety calculus, requisite-variety
//! regulation analysis, moving-target configuration processes, and a seeded
//! discrete-event simulation of the attacker–defender loop.
//!
//! The crate is organized around four ideas:
//!
//! - [`variety`] — how many distinguishable states a system has, exactly and
//!   in bits, including transfer-matrix counting of constrained sequence
//!   spaces.
//! - [`regulation`] — channel rates in bits per time and the requisite
//!   variety inequality `V0 >= V_D - V_R`, including the reconfiguration
//!   period bound for moving defenders.
//! - [`mtd`] — stationary, cyclostationary, poly-cyclostationary and
//!   non-stationary configuration trajectories, interleaving, and observed
//!   variety.
//! - [`sim`] — the closed attacker–defender loop: scan, develop, attack
//!   against detect, reset, move. Deterministic per `(scenario, seed)`.

pub mod dist;
pub mod mtd;
pub mod regulation;
pub mod rng;
pub mod sim;
pub mod variety;

pub use dist::DurationDist;
pub use mtd::{
    generate_trajectory, generate_trajectory_with_rule, interleave, observed_variety,
    ConfigSpace, ConfigTrajectory, MoveRule, MtdError, ProcessKind, ReconfigPolicy,
};
pub use regulation::{
    entropy_balance, max_controllable_disturbance, max_reconfig_period, requisite_variety_floor,
    ChannelRate, ReconfigBound, RegulationError, RegulationScenario, RegulationVerdict, TimeUnit,
};
pub use sim::{
    kiosk_scenario, mtd_pool_scenario, run, run_replications, summarize, sweep, Aggregate,
    AttackerModel, DefenderModel, ExploitValidity, MetricsSummary, ScanSchedule, Scenario,
    SimError, SimEvent, SimEventKind, SimMetrics, SimTrace, SweepParameter, SweepRow,
};
pub use variety::{
    brute_force_count, combined_variety, entropy_bits, unit_step_closed_form, variety_bits,
    variety_count, Alphabet, Distribution, SequenceSpace, SuccessorConstraint, VarietyError,
    VarietyMeasure,
};
