//! The built-in worked-example checks behind the `paper-examples` subcommand.
//!
//! Every computed number comes from the library; the only hard-coded values
//! live in [`ExpectedTable`], the published figures the computations are
//! compared against. Bits and rates carry a tolerance of half the printed
//! rounding width; exact counts compare exactly.

use num_bigint::BigUint;

use requivar::{
    max_controllable_disturbance, unit_step_closed_form, variety_count, Alphabet, ChannelRate,
    RegulationScenario, SequenceSpace, TimeUnit, VarietyMeasure,
};

/// Half-width of one-decimal rounding: tolerance for bits and rate figures.
pub const BITS_TOLERANCE: f64 = 0.05;
/// Tolerance for the two-decimal deficit ratio.
pub const RATIO_TOLERANCE: f64 = 0.01;

/// The expected values the checks compare against.
#[derive(Clone, Debug)]
pub struct ExpectedTable {
    pub component_count: u64,
    pub component_bits: f64,
    pub unconstrained_count: u64,
    pub unconstrained_bits: f64,
    pub constrained_count: u64,
    pub constrained_bits: f64,
    pub closed_form_count: u64,
    pub telegraph_rate: f64,
    pub rudder_rate: f64,
    pub ship_bound: f64,
    pub army_disturbance: f64,
    pub signal_channel: f64,
    pub deficit_ratio: f64,
    pub controllable: bool,
}

impl Default for ExpectedTable {
    fn default() -> Self {
        Self {
            component_count: 4,
            component_bits: 2.0,
            unconstrained_count: 1_048_576,
            unconstrained_bits: 20.0,
            constrained_count: 21_892,
            constrained_bits: 14.4,
            closed_form_count: 21_892,
            telegraph_rate: 0.63,
            rudder_rate: 5.64,
            ship_bound: 6.3,
            army_disturbance: 1e7,
            signal_channel: 576_000.0,
            deficit_ratio: 17.36,
            controllable: false,
        }
    }
}

#[derive(Clone, Debug)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

fn count_check(
    name: &'static str,
    measure: &VarietyMeasure,
    expected_count: u64,
    expected_bits: f64,
) -> CheckOutcome {
    let count_ok = measure.count() == &BigUint::from(expected_count);
    let bits_ok = (measure.bits() - expected_bits).abs() <= BITS_TOLERANCE;
    CheckOutcome {
        name,
        expected: format!("{expected_count} ({expected_bits} bits)"),
        computed: format!("{} ({:.4} bits)", measure.count(), measure.bits()),
        pass: count_ok && bits_ok,
    }
}

fn rate_check(name: &'static str, computed: f64, expected: f64, tolerance: f64) -> CheckOutcome {
    CheckOutcome {
        name,
        expected: format!("{expected}"),
        computed: format!("{computed:.4}"),
        pass: (computed - expected).abs() <= tolerance,
    }
}

/// Run the eleven worked-example checks against an expected-value table.
pub fn run_checks(expected: &ExpectedTable) -> Vec<CheckOutcome> {
    let mut outcomes = Vec::with_capacity(11);

    // A ten-component vector over the four-symbol set.
    let alphabet = Alphabet::numbered(4).expect("four symbols");
    outcomes.push(count_check(
        "component variety",
        &VarietyMeasure::from_u64(alphabet.len() as u64),
        expected.component_count,
        expected.component_bits,
    ));

    let free_space =
        SequenceSpace::new(alphabet, 10).expect("length 10");
    outcomes.push(count_check(
        "independent vector variety",
        &variety_count(&free_space),
        expected.unconstrained_count,
        expected.unconstrained_bits,
    ));

    let constrained_space = SequenceSpace::four_symbol_unit_step(10).expect("unit-step space");
    let constrained = variety_count(&constrained_space);
    outcomes.push(count_check(
        "constrained vector variety",
        &constrained,
        expected.constrained_count,
        expected.constrained_bits,
    ));

    let closed_form = unit_step_closed_form(10).expect("n = 10");
    outcomes.push(CheckOutcome {
        name: "closed form 2*F(21)",
        expected: expected.closed_form_count.to_string(),
        computed: closed_form.to_string(),
        pass: closed_form == BigUint::from(expected.closed_form_count)
            && &closed_form == constrained.count(),
    });

    // Ship regulation: engine telegraph and rudder.
    let secs = TimeUnit::new("sec");
    let telegraph = ChannelRate::new("engine-telegraph", 9, 1.0, 5.0, secs.clone())
        .expect("telegraph channel");
    let rudder = ChannelRate::new("rudder", 50, 1.0, 1.0, secs).expect("rudder channel");
    outcomes.push(rate_check(
        "telegraph rate (bits/sec)",
        telegraph.bits_per_time(),
        expected.telegraph_rate,
        BITS_TOLERANCE,
    ));
    outcomes.push(rate_check(
        "rudder rate (bits/sec)",
        rudder.bits_per_time(),
        expected.rudder_rate,
        BITS_TOLERANCE,
    ));
    let ship_bound =
        max_controllable_disturbance(&[telegraph, rudder]).expect("consistent units");
    outcomes.push(rate_check(
        "ship disturbance bound (bits/sec)",
        ship_bound,
        expected.ship_bound,
        BITS_TOLERANCE,
    ));

    // Army regulation: ten divisions against one signal channel.
    let days = TimeUnit::new("day");
    let divisions: Vec<ChannelRate> = (1..=10)
        .map(|i| {
            ChannelRate::from_bits(format!("division-{i}"), 1e6, 1.0, days.clone())
                .expect("division channel")
        })
        .collect();
    // Ten signalers, 60 letters a minute, 8 hours a day, 2 bits a letter.
    let signal_channel = ChannelRate::new(
        "signal-channel",
        4,
        10.0 * 60.0 * 60.0 * 8.0,
        1.0,
        days.clone(),
    )
    .expect("signal channel");
    let army = RegulationScenario::new(divisions, vec![signal_channel], days)
        .expect("consistent units");
    let verdict = army.analyze();

    outcomes.push(CheckOutcome {
        name: "army disturbance (bits/day)",
        expected: format!("{}", expected.army_disturbance),
        computed: format!("{}", verdict.total_disturbance),
        pass: verdict.total_disturbance == expected.army_disturbance,
    });
    outcomes.push(CheckOutcome {
        name: "signal channel (bits/day)",
        expected: format!("{}", expected.signal_channel),
        computed: format!("{}", verdict.total_regulation),
        pass: verdict.total_regulation == expected.signal_channel,
    });
    let ratio = verdict.deficit_ratio.unwrap_or(f64::INFINITY);
    outcomes.push(CheckOutcome {
        name: "deficit ratio",
        expected: format!("{:.2}", expected.deficit_ratio),
        computed: format!("{ratio:.2}"),
        pass: (ratio - expected.deficit_ratio).abs() <= RATIO_TOLERANCE,
    });
    outcomes.push(CheckOutcome {
        name: "verdict",
        expected: verdict_word(expected.controllable).to_string(),
        computed: verdict_word(verdict.controllable).to_string(),
        pass: verdict.controllable == expected.controllable,
    });

    outcomes
}

fn verdict_word(controllable: bool) -> &'static str {
    if controllable {
        "sufficient"
    } else {
        "insufficient"
    }
}
