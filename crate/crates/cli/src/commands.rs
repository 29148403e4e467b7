//! Request execution: turning parsed requests into report rows.

use requivar::{
    max_controllable_disturbance, max_reconfig_period, run_replications, summarize, sweep,
    variety_count, ReconfigBound,
};

use crate::checks::{run_checks, ExpectedTable};
use crate::error::CliError;
use crate::report::{fmt_f64, fmt_ratio, Report};
use crate::schema::{parse_rate, Request, ScenarioFile};

/// Execute every request in declaration order, appending rows to the report.
pub fn execute_requests(
    file: &ScenarioFile,
    seed_override: Option<u64>,
    report: &mut Report,
) -> Result<(), CliError> {
    for request in &file.requests {
        execute_request(request, seed_override, report)?;
    }
    Ok(())
}

/// Execute only the sweep requests of a file.
pub fn execute_sweeps(
    file: &ScenarioFile,
    seed_override: Option<u64>,
    report: &mut Report,
) -> Result<(), CliError> {
    let sweeps: Vec<&Request> = file
        .requests
        .iter()
        .filter(|r| matches!(r, Request::Sweep(_)))
        .collect();
    if sweeps.is_empty() {
        return Err(CliError::Validation(
            "the file contains no sweep requests".to_string(),
        ));
    }
    for request in sweeps {
        execute_request(request, seed_override, report)?;
    }
    Ok(())
}

fn execute_request(
    request: &Request,
    seed_override: Option<u64>,
    report: &mut Report,
) -> Result<(), CliError> {
    let name = request.name();
    let kind = request.kind();
    match request {
        Request::Variety(req) => {
            let space = req.to_space()?;
            let measure = variety_count(&space);
            report.push(name, kind, "", "count", measure.count().to_string());
            report.push(name, kind, "", "bits", fmt_f64(measure.bits()));
        }
        Request::Regulation(req) => {
            let scenario = req.to_scenario()?;
            let verdict = scenario.analyze();
            let unit = scenario.time_unit().label().to_string();
            let per = |metric: &str| format!("{metric} (bits/{unit})");
            report.push(
                name,
                kind,
                "",
                &per("total_disturbance"),
                fmt_f64(verdict.total_disturbance),
            );
            report.push(
                name,
                kind,
                "",
                &per("total_regulation"),
                fmt_f64(verdict.total_regulation),
            );
            report.push(
                name,
                kind,
                "",
                &per("outcome_floor"),
                fmt_f64(verdict.outcome_floor),
            );
            report.push(
                name,
                kind,
                "",
                &per("max_controllable_disturbance"),
                fmt_f64(
                    max_controllable_disturbance(scenario.regulators())
                        .map_err(|e| CliError::Validation(format!("{name}: {e}")))?,
                ),
            );
            report.push(
                name,
                kind,
                "",
                "controllable",
                verdict.controllable.to_string(),
            );
            report.push(
                name,
                kind,
                "",
                "deficit_ratio",
                verdict
                    .deficit_ratio
                    .map(fmt_ratio)
                    .unwrap_or_else(|| "none".to_string()),
            );
        }
        Request::ReconfigBound(req) => {
            let (rate, unit) = parse_rate(&req.rate)?;
            let bound = max_reconfig_period(req.h_move, rate, req.margin)
                .map_err(|e| CliError::Validation(format!("{name}: {e}")))?;
            let value = match bound {
                ReconfigBound::Unbounded => "unbounded".to_string(),
                ReconfigBound::Finite(t) => format!("{} {unit}", fmt_f64(t)),
            };
            report.push(name, kind, "", "max_reconfig_period", value);
        }
        Request::Simulation(req) => {
            let scenario = req.scenario.to_scenario(&req.time_unit)?;
            let seed = seed_override.unwrap_or(req.seed);
            let runs = run_replications(&scenario, seed, req.replications)
                .map_err(|e| CliError::Validation(format!("{name}: {e}")))?;
            let summary =
                summarize(&runs).map_err(|e| CliError::Validation(format!("{name}: {e}")))?;
            report.push(name, kind, "", "seed", seed.to_string());
            report.push(name, kind, "", "replications", req.replications.to_string());
            report.push_summary(name, kind, "", &summary);
        }
        Request::Sweep(req) => {
            let scenario = req.scenario.to_scenario(&req.time_unit)?;
            let parameter = req.parameter()?;
            let base_seed = seed_override.unwrap_or(req.base_seed);
            let rows = sweep(&scenario, parameter, &req.values, req.replications, base_seed)
                .map_err(|e| CliError::Validation(format!("{name}: {e}")))?;
            report.push(name, kind, "", "base_seed", base_seed.to_string());
            report.push(name, kind, "", "replications", req.replications.to_string());
            for row in &rows {
                let item = format!("{}={}", req.parameter, row.value);
                report.push(
                    name,
                    kind,
                    &item,
                    "success_probability",
                    fmt_f64(row.success_probability),
                );
                report.push_summary(name, kind, &item, &row.summary);
            }
        }
    }
    Ok(())
}

/// Run the built-in worked-example checks, appending one row per check.
/// Returns an error (mapped to the check-failure exit code) if any fails.
pub fn execute_checks(expected: &ExpectedTable, report: &mut Report) -> Result<(), CliError> {
    let outcomes = run_checks(expected);
    let mut failures = 0;
    for outcome in &outcomes {
        let status = if outcome.pass { "PASS" } else { "FAIL" };
        report.push(
            "worked-examples",
            "check",
            outcome.name,
            "status",
            format!(
                "{status} (expected {}; computed {})",
                outcome.expected, outcome.computed
            ),
        );
        if !outcome.pass {
            failures += 1;
        }
    }
    report.push(
        "worked-examples",
        "check",
        "",
        "checks_passed",
        format!("{}/{}", outcomes.len() - failures, outcomes.len()),
    );
    if failures > 0 {
        return Err(CliError::CheckFailure(format!(
            "{failures} of {} worked-example checks failed",
            outcomes.len()
        )));
    }
    Ok(())
}

/// The `bound` subcommand: one reconfiguration-period bound from flags.
pub fn execute_bound(h_move: f64, rate: &str, margin: f64) -> Result<String, CliError> {
    let (rate_value, unit) = parse_rate(rate)?;
    let bound = max_reconfig_period(h_move, rate_value, margin)
        .map_err(|e| CliError::Validation(e.to_string()))?;
    Ok(match bound {
        ReconfigBound::Unbounded => "max reconfiguration period: unbounded".to_string(),
        ReconfigBound::Finite(t) => {
            format!("max reconfiguration period: {} {unit}", trim_number(t))
        }
    })
}

/// Render a float without trailing zeros (`10` rather than `10.000000`).
fn trim_number(value: f64) -> String {
    let mut text = format!("{value:.6}");
    while text.contains('.') && (text.ends_with('0') || text.ends_with('.')) {
        text.pop();
    }
    text
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bound_command_prints_the_period_with_units() {
        let line = execute_bound(20.0, "2 / hour", 1.0).unwrap();
        assert_eq!(line, "max reconfiguration period: 10 hour");
        let line = execute_bound(20.0, "0 / hour", 1.0).unwrap();
        assert_eq!(line, "max reconfiguration period: unbounded");
        assert!(matches!(
            execute_bound(20.0, "2 / hour", 0.5),
            Err(CliError::Validation(_))
        ));
    }

    #[test]
    fn trim_number_drops_trailing_zeros() {
        assert_eq!(trim_number(10.0), "10");
        assert_eq!(trim_number(2.5), "2.5");
        assert_eq!(trim_number(0.333333333), "0.333333");
    }

    #[test]
    fn tampered_expected_table_maps_to_the_check_exit_code() {
        let table = ExpectedTable {
            deficit_ratio: 18.0,
            ..ExpectedTable::default()
        };
        let mut report = Report::new(None, None);
        let err = execute_checks(&table, &mut report).unwrap_err();
        assert_eq!(err.exit_code(), crate::error::EXIT_CHECK);
        let rendered = report.render(crate::report::Format::Table);
        assert!(rendered.contains("FAIL"));
    }
}
