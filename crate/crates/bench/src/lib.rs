//! Shared scenario builders for the benchmark targets.

use requivar::{
    AttackerModel, ConfigSpace, DefenderModel, DurationDist, ReconfigPolicy, ScanSchedule,
    Scenario,
};

/// A moving defender under a periodically scanning attacker: the loop the
/// simulator spends most of its time in.
pub fn moving_target_scenario(period: f64, horizon: f64) -> Scenario {
    Scenario {
        attacker: AttackerModel {
            schedule: ScanSchedule::Periodic { interval: 1.0 },
            exploit_dev_time: DurationDist::Exponential { mean: 6.0 },
            ..AttackerModel::default()
        },
        defender: DefenderModel {
            space: ConfigSpace::uniform(64).expect("nonempty"),
            policy: ReconfigPolicy::Periodic { period },
            detection_prob: 0.8,
            detection_delay: DurationDist::Exponential { mean: 2.0 },
            reset_latency: 1.0,
            persistence_prob: 0.05,
        },
        horizon,
        pool_size: 1,
        pool_reset_period: None,
    }
}

/// The busy kiosk: a dense Poisson attack stream and constant restores.
pub fn kiosk(horizon: f64) -> Scenario {
    requivar::kiosk_scenario(0.5, DurationDist::Constant(0.5), 0.5, 0.0, 1.0, horizon)
        .expect("valid kiosk parameters")
}
