//! Cross-module checks: variety feeding regulation, trajectories feeding the
//! simulator, and the reconfiguration bound agreeing with simulated outcomes.

use requivar::{
    entropy_balance, generate_trajectory, max_reconfig_period, observed_variety, run,
    variety_count, AttackerModel, ConfigSpace, DefenderModel, DurationDist, ExploitValidity,
    ReconfigBound, ReconfigPolicy, ScanSchedule, Scenario, SequenceSpace,
};

#[test]
fn constrained_counting_feeds_the_regulation_calculus() {
    // A configuration space counted by the transfer matrix provides the
    // per-move entropy budget for the reconfiguration bound.
    let space = SequenceSpace::four_symbol_unit_step(10).unwrap();
    let measure = variety_count(&space);
    let h_move = measure.bits();
    assert!((h_move - 14.418116).abs() < 1e-5);

    let bound = max_reconfig_period(h_move, 2.0, 1.0).unwrap();
    let period = bound.as_finite().unwrap();
    // Moving every `period` injects h_move/period bits per unit time, which
    // balances the disturbance exactly.
    let slack = entropy_balance(&[2.0], &[h_move / period]).unwrap();
    assert!(slack.abs() < 1e-12);

    assert_eq!(
        max_reconfig_period(h_move, 0.0, 2.0).unwrap(),
        ReconfigBound::Unbounded
    );
}

#[test]
fn trajectories_drive_the_simulated_defender() {
    // The defender inside a run follows exactly the trajectory the policy
    // generates standalone: reconfiguration events match one for one.
    let policy = ReconfigPolicy::PseudoRandom {
        interval: DurationDist::Exponential { mean: 7.0 },
    };
    let space = ConfigSpace::uniform(32).unwrap();
    let scenario = Scenario {
        attacker: AttackerModel {
            schedule: ScanSchedule::Periodic { interval: 2.0 },
            exploit_dev_time: DurationDist::Constant(3.0),
            exploit_validity: ExploitValidity::StrictEpoch,
            ..AttackerModel::default()
        },
        defender: DefenderModel {
            space,
            policy: policy.clone(),
            ..DefenderModel::default()
        },
        horizon: 200.0,
        pool_size: 1,
        pool_reset_period: None,
    };
    let seed = 500;
    let (trace, _) = run(&scenario, seed).unwrap();
    let sim_moves: Vec<(f64, u64)> = trace
        .events
        .iter()
        .filter_map(|e| match e.kind {
            requivar::SimEventKind::Reconfigure { config } => Some((e.time, config)),
            _ => None,
        })
        .collect();

    let standalone = generate_trajectory(
        &policy,
        &space,
        200.0,
        requivar::rng::derive_seed(seed, "defender/trajectory"),
    )
    .unwrap();
    assert_eq!(sim_moves, standalone.events());

    // The observer bound holds on the trajectory the simulation used.
    let v = observed_variety(&standalone, (0.0, 200.0)).unwrap();
    let count: u64 = v.count().try_into().unwrap();
    assert!(count <= 1 + standalone.events().len() as u64);
    assert!(count >= 1);
}

#[test]
fn the_reconfiguration_bound_separates_winning_and_losing_defenders() {
    // With constant development time t_dev, moving strictly faster than
    // t_dev blocks everything; moving much slower concedes compromises.
    let t_dev = 6.0;
    let build = |period: f64| Scenario {
        attacker: AttackerModel {
            schedule: ScanSchedule::Periodic { interval: 1.0 },
            exploit_dev_time: DurationDist::Constant(t_dev),
            ..AttackerModel::default()
        },
        defender: DefenderModel {
            space: ConfigSpace::uniform(64).unwrap(),
            policy: ReconfigPolicy::Periodic { period },
            ..DefenderModel::default()
        },
        horizon: 300.0,
        pool_size: 1,
        pool_reset_period: None,
    };
    for seed in 0..30 {
        let (_, fast) = run(&build(t_dev / 2.0), seed).unwrap();
        assert_eq!(fast.successful_attacks, 0, "seed {seed}");
        let (_, slow) = run(&build(t_dev * 4.0), seed).unwrap();
        assert!(slow.successful_attacks > 0, "seed {seed}");
    }
}
