//! The discrete-event loop behind [`super::run`].
//!
//! Events queue on (time, kind priority, insertion order); every stochastic
//! draw site owns a labeled stream, so the pop order — and therefore the
//! trace — is a pure function of `(scenario, seed)`.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::mtd;
use crate::rng::{self, StreamRng};

use super::{
    AttackerModel, ExploitValidity, ScanSchedule, Scenario, SimEvent, SimEventKind, SimMetrics,
    SimTrace,
};

#[derive(Clone, Debug)]
enum Action {
    Reconfigure { config: u64 },
    Scan,
    ExploitReady { target: u64, epoch: u64 },
    Attack { target: u64, epoch: u64 },
    Detection { member: usize, generation: u64 },
    ResetComplete { member: usize, generation: u64 },
    PoolRestore,
}

impl Action {
    fn priority(&self) -> u8 {
        match self {
            Action::Reconfigure { .. } => 0,
            Action::Scan => 1,
            Action::ExploitReady { .. } => 2,
            Action::Attack { .. } => 3,
            Action::Detection { .. } => 5,
            Action::ResetComplete { .. } | Action::PoolRestore => 6,
        }
    }
}

#[derive(Debug)]
struct Queued {
    time: f64,
    priority: u8,
    seq: u64,
    action: Action,
}

impl PartialEq for Queued {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Queued {}

impl PartialOrd for Queued {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Queued {
    fn cmp(&self, other: &Self) -> Ordering {
        // Reversed: BinaryHeap is a max-heap, we pop the earliest event.
        other
            .time
            .total_cmp(&self.time)
            .then_with(|| other.priority.cmp(&self.priority))
            .then_with(|| other.seq.cmp(&self.seq))
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
enum AttackerPhase {
    /// Scanning on schedule.
    Recon,
    /// Waiting for an exploit to finish development.
    Developing,
    /// Holding access to a compromised system.
    Idle,
    /// Gave up after a failed attack (retry disabled).
    Dormant,
}

struct Member {
    config: u64,
    /// Bumped on every reconfiguration; strict-epoch exploits must match it.
    epoch: u64,
    compromised: bool,
    /// A detection has fired or is scheduled; new infections are absorbed
    /// into the pending restore.
    cleanup_pending: bool,
    /// Down for restore: unreachable and unattackable.
    down: bool,
    /// Bumped each time a compromise clears, so stale detection/reset events
    /// can be recognized and dropped.
    generation: u64,
    compromised_since: f64,
    down_since: f64,
}

struct Streams {
    arrival_gap: StreamRng,
    dev_time: StreamRng,
    mismatch: StreamRng,
    bypass: StreamRng,
    detection_check: StreamRng,
    detection_delay: StreamRng,
    persistence: StreamRng,
    scan_dispatch: StreamRng,
    attack_dispatch: StreamRng,
}

impl Streams {
    fn new(seed: u64) -> Self {
        Self {
            arrival_gap: rng::stream(seed, "attacker/arrival-gap"),
            dev_time: rng::stream(seed, "attacker/dev-time"),
            mismatch: rng::stream(seed, "attacker/mismatch"),
            bypass: rng::stream(seed, "attacker/bypass"),
            detection_check: rng::stream(seed, "defender/detection-check"),
            detection_delay: rng::stream(seed, "defender/detection-delay"),
            persistence: rng::stream(seed, "defender/persistence"),
            scan_dispatch: rng::stream(seed, "pool/scan-dispatch"),
            attack_dispatch: rng::stream(seed, "pool/attack-dispatch"),
        }
    }
}

struct Engine<'a> {
    scenario: &'a Scenario,
    heap: BinaryHeap<Queued>,
    seq: u64,
    streams: Streams,
    members: Vec<Member>,
    phase: AttackerPhase,
    trace: Vec<SimEvent>,
    first_compromise: Option<f64>,
    successes: u64,
    exploits: u64,
    compromised_time: f64,
    downtime: f64,
}

pub(super) fn simulate(scenario: &Scenario, seed: u64) -> (SimTrace, SimMetrics) {
    let pool = scenario.pool_size as usize;
    let space = scenario.defender.space;

    let mut members: Vec<Member> = Vec::with_capacity(pool);
    let mut heap = BinaryHeap::new();
    let mut seq = 0u64;
    let push = |heap: &mut BinaryHeap<Queued>, seq: &mut u64, time: f64, action: Action| {
        let priority = action.priority();
        heap.push(Queued {
            time,
            priority,
            seq: *seq,
            action,
        });
        *seq += 1;
    };

    if pool == 1 {
        let trajectory = mtd::generate_trajectory(
            &scenario.defender.policy,
            &space,
            scenario.horizon,
            rng::derive_seed(seed, "defender/trajectory"),
        )
        .expect("scenario was validated");
        members.push(Member::new(trajectory.origin()));
        for &(time, config) in trajectory.events() {
            push(&mut heap, &mut seq, time, Action::Reconfigure { config });
        }
    } else {
        // Pool members run fixed configurations, assigned round-robin.
        for i in 0..pool {
            members.push(Member::new(i as u64 % space.size()));
        }
    }

    if let Some(period) = scenario.pool_reset_period {
        push(&mut heap, &mut seq, period, Action::PoolRestore);
    }

    let mut engine = Engine {
        scenario,
        heap,
        seq,
        streams: Streams::new(seed),
        members,
        phase: AttackerPhase::Recon,
        trace: Vec::new(),
        first_compromise: None,
        successes: 0,
        exploits: 0,
        compromised_time: 0.0,
        downtime: 0.0,
    };

    // First scan fires one full interval (or arrival gap) after deployment.
    let first = match scenario.attacker.schedule {
        ScanSchedule::Periodic { interval } => interval,
        ScanSchedule::PoissonStream { mean_interval } => {
            rng::exponential(&mut engine.streams.arrival_gap, mean_interval)
        }
    };
    engine.push(first, Action::Scan);

    engine.run();
    let metrics = engine.finish();
    (
        SimTrace {
            scenario: scenario.clone(),
            seed,
            events: engine.trace,
        },
        metrics,
    )
}

impl Member {
    fn new(config: u64) -> Self {
        Self {
            config,
            epoch: 0,
            compromised: false,
            cleanup_pending: false,
            down: false,
            generation: 0,
            compromised_since: 0.0,
            down_since: 0.0,
        }
    }
}

impl<'a> Engine<'a> {
    fn push(&mut self, time: f64, action: Action) {
        let priority = action.priority();
        self.heap.push(Queued {
            time,
            priority,
            seq: self.seq,
            action,
        });
        self.seq += 1;
    }

    fn emit(&mut self, time: f64, kind: SimEventKind) {
        self.trace.push(SimEvent { time, kind });
    }

    fn attacker(&self) -> &AttackerModel {
        &self.scenario.attacker
    }

    fn is_stream(&self) -> bool {
        matches!(self.attacker().schedule, ScanSchedule::PoissonStream { .. })
    }

    fn pool(&self) -> usize {
        self.scenario.pool_size as usize
    }

    fn run(&mut self) {
        while let Some(q) = self.heap.pop() {
            if q.time > self.scenario.horizon {
                break; // heap is time-ordered; nothing later can be in range
            }
            match q.action {
                Action::Reconfigure { config } => self.on_reconfigure(q.time, config),
                Action::Scan => self.on_scan(q.time),
                Action::ExploitReady { target, epoch } => {
                    self.on_exploit_ready(q.time, target, epoch)
                }
                Action::Attack { target, epoch } => self.on_attack(q.time, target, epoch),
                Action::Detection { member, generation } => {
                    self.on_detection(q.time, member, generation)
                }
                Action::ResetComplete { member, generation } => {
                    self.on_reset_complete(q.time, member, generation)
                }
                Action::PoolRestore => self.on_pool_restore(q.time),
            }
        }
    }

    fn on_reconfigure(&mut self, time: f64, config: u64) {
        self.emit(time, SimEventKind::Reconfigure { config });
        let member = &mut self.members[0];
        member.config = config;
        member.epoch += 1;
    }

    fn schedule_next_scan(&mut self, now: f64) {
        if let ScanSchedule::Periodic { interval } = self.attacker().schedule {
            self.phase = AttackerPhase::Recon;
            self.push(now + interval, Action::Scan);
        }
    }

    fn on_scan(&mut self, time: f64) {
        // A Poisson stream keeps flowing no matter what the last arrival did.
        if let ScanSchedule::PoissonStream { mean_interval } = self.attacker().schedule {
            let gap = rng::exponential(&mut self.streams.arrival_gap, mean_interval);
            self.push(time + gap, Action::Scan);
        }

        let pool = self.pool() as u64;
        let m = if pool > 1 {
            rng::uniform_index(&mut self.streams.scan_dispatch, pool) as usize
        } else {
            0
        };
        if self.members[m].down {
            // Unreachable while restoring: a lone agent tries again later, a
            // stream arrival is simply lost.
            if !self.is_stream() {
                self.schedule_next_scan(time);
            }
            return;
        }

        let observed = self.members[m].config;
        let epoch = self.members[m].epoch;
        self.emit(time, SimEventKind::Scan { observed });
        if !self.is_stream() {
            self.phase = AttackerPhase::Developing;
        }
        let dev_dist = self.attacker().exploit_dev_time;
        let dev = dev_dist.sample(&mut self.streams.dev_time);
        self.push(
            time + dev,
            Action::ExploitReady {
                target: observed,
                epoch,
            },
        );
    }

    fn on_exploit_ready(&mut self, time: f64, target: u64, epoch: u64) {
        self.emit(time, SimEventKind::ExploitReady { target });
        self.exploits += 1;
        self.push(time, Action::Attack { target, epoch });
    }

    fn on_attack(&mut self, time: f64, target: u64, epoch: u64) {
        self.emit(time, SimEventKind::AttackLaunched { target });

        let pool = self.pool() as u64;
        let m = if pool > 1 {
            rng::uniform_index(&mut self.streams.attack_dispatch, pool) as usize
        } else {
            0
        };

        let success = if self.members[m].down {
            false // nothing to land on while the member restores
        } else {
            let matched = if self.pool() > 1 {
                self.members[m].config == target
            } else {
                match self.attacker().exploit_validity {
                    ExploitValidity::StrictEpoch => self.members[m].epoch == epoch,
                    ExploitValidity::ValueMatch => self.members[m].config == target,
                }
            };
            let p_mismatch = self.attacker().mismatch_success_prob;
            let p_bypass = self.attacker().bypass_prob;
            let mut success = matched;
            if !success && p_mismatch > 0.0 {
                success = rng::bernoulli(&mut self.streams.mismatch, p_mismatch);
            }
            if !success && p_bypass > 0.0 {
                success = rng::bernoulli(&mut self.streams.bypass, p_bypass);
            }
            success
        };

        if success {
            self.on_compromise(time, m);
            if !self.is_stream() {
                self.phase = AttackerPhase::Idle;
            }
        } else if !self.is_stream() {
            if self.attacker().retry {
                self.schedule_next_scan(time);
            } else {
                self.phase = AttackerPhase::Dormant;
            }
        }
    }

    fn on_compromise(&mut self, time: f64, m: usize) {
        self.emit(time, SimEventKind::CompromiseStart);
        self.successes += 1;
        self.first_compromise.get_or_insert(time);

        if !self.members[m].compromised {
            self.members[m].compromised = true;
            self.members[m].compromised_since = time;
        }
        // A re-infection while a restore is already scheduled is wiped with
        // everything else; only unnoticed compromises get a fresh check.
        if !self.members[m].cleanup_pending {
            let p = self.scenario.defender.detection_prob;
            if p > 0.0 && rng::bernoulli(&mut self.streams.detection_check, p) {
                let delay = self
                    .scenario
                    .defender
                    .detection_delay
                    .sample(&mut self.streams.detection_delay);
                self.members[m].cleanup_pending = true;
                self.push(
                    time + delay,
                    Action::Detection {
                        member: m,
                        generation: self.members[m].generation,
                    },
                );
            }
        }
    }

    fn on_detection(&mut self, time: f64, m: usize, generation: u64) {
        let member = &mut self.members[m];
        if !member.compromised || member.generation != generation {
            return; // cleared in the meantime (e.g. by a pool restore)
        }
        self.emit(time, SimEventKind::Detection);
        let member = &mut self.members[m];
        member.down = true;
        member.down_since = time;
        self.push(
            time + self.scenario.defender.reset_latency,
            Action::ResetComplete {
                member: m,
                generation,
            },
        );
    }

    fn on_reset_complete(&mut self, time: f64, m: usize, generation: u64) {
        if self.members[m].generation != generation || !self.members[m].down {
            return;
        }
        self.emit(time, SimEventKind::ResetComplete);
        let member = &mut self.members[m];
        member.down = false;
        self.downtime += time - member.down_since;
        member.cleanup_pending = false;

        let survives = self.scenario.defender.persistence_prob > 0.0
            && rng::bernoulli(
                &mut self.streams.persistence,
                self.scenario.defender.persistence_prob,
            );
        if !survives {
            self.clear_compromise(time, m);
            self.resume_attacker(time);
        }
    }

    fn on_pool_restore(&mut self, time: f64) {
        let mut cleared = false;
        for m in 0..self.members.len() {
            // Members mid-restore are left to their own reset; a reimage
            // always comes up clean.
            if self.members[m].compromised && !self.members[m].down {
                self.emit(time, SimEventKind::ResetComplete);
                self.members[m].cleanup_pending = false;
                self.clear_compromise(time, m);
                cleared = true;
            }
        }
        if cleared {
            self.resume_attacker(time);
        }
        let period = self.scenario.pool_reset_period.expect("tick was scheduled");
        self.push(time + period, Action::PoolRestore);
    }

    fn clear_compromise(&mut self, time: f64, m: usize) {
        let member = &mut self.members[m];
        member.compromised = false;
        member.generation += 1;
        self.compromised_time += time - member.compromised_since;
    }

    fn resume_attacker(&mut self, time: f64) {
        // A lone attacker holds access until it is wiped out from under it,
        // then goes back to scanning (if it retries at all).
        if !self.is_stream()
            && self.phase == AttackerPhase::Idle
            && self.attacker().retry
            && !self.members.iter().any(|m| m.compromised)
        {
            self.schedule_next_scan(time);
        }
    }

    fn finish(&mut self) -> SimMetrics {
        let horizon = self.scenario.horizon;
        for member in &mut self.members {
            if member.compromised {
                self.compromised_time += horizon - member.compromised_since;
                member.compromised = false;
            }
            if member.down {
                self.downtime += horizon - member.down_since;
                member.down = false;
            }
        }
        let total = horizon * self.members.len() as f64;
        debug_assert!(self.successes <= self.exploits);
        SimMetrics {
            time_to_first_compromise: self.first_compromise,
            compromised_fraction: self.compromised_time / total,
            successful_attacks: self.successes,
            exploits_developed: self.exploits,
            availability: 1.0 - self.downtime / total,
        }
    }
}
