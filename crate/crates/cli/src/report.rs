//! Report assembly and rendering.
//!
//! Results are carried as long-format rows (request, kind, item, metric,
//! value) so one stable column set covers analyses, simulations, sweeps and
//! checks alike. The same rows feed all three output formats; structured
//! output is a pure function of the file content, the seeds and the tool
//! version — no timestamps, no locale.

use serde::Serialize;

use requivar::{Aggregate, MetricsSummary};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");
pub const REPORT_SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Table,
    Csv,
    Jsonl,
}

#[derive(Clone, Debug, Serialize)]
pub struct Meta {
    pub tool_version: String,
    pub report_schema_version: u32,
    /// SHA-256 of the scenario file, when one was read.
    pub scenario_digest: Option<String>,
    pub seed_override: Option<u64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Row {
    pub request: String,
    pub kind: String,
    pub item: String,
    pub metric: String,
    pub value: String,
}

#[derive(Clone, Debug)]
pub struct Report {
    pub meta: Meta,
    pub rows: Vec<Row>,
}

impl Report {
    pub fn new(scenario_digest: Option<String>, seed_override: Option<u64>) -> Self {
        Self {
            meta: Meta {
                tool_version: TOOL_VERSION.to_string(),
                report_schema_version: REPORT_SCHEMA_VERSION,
                scenario_digest,
                seed_override,
            },
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, request: &str, kind: &str, item: &str, metric: &str, value: String) {
        self.rows.push(Row {
            request: request.to_string(),
            kind: kind.to_string(),
            item: item.to_string(),
            metric: metric.to_string(),
            value,
        });
    }

    /// Append the aggregate rows for one batch of simulation runs.
    pub fn push_summary(&mut self, request: &str, kind: &str, item: &str, summary: &MetricsSummary) {
        match &summary.time_to_first_compromise {
            Some(agg) => self.push_aggregate(request, kind, item, "time_to_first_compromise", agg),
            None => self.push(
                request,
                kind,
                item,
                "time_to_first_compromise.mean",
                "none".to_string(),
            ),
        }
        self.push(
            request,
            kind,
            item,
            "time_to_first_compromise.excluded",
            summary.first_compromise_excluded.to_string(),
        );
        self.push_aggregate(request, kind, item, "compromised_fraction", &summary.compromised_fraction);
        self.push_aggregate(request, kind, item, "successful_attacks", &summary.successful_attacks);
        self.push_aggregate(request, kind, item, "exploits_developed", &summary.exploits_developed);
        self.push_aggregate(request, kind, item, "availability", &summary.availability);
    }

    fn push_aggregate(&mut self, request: &str, kind: &str, item: &str, metric: &str, agg: &Aggregate) {
        self.push(request, kind, item, &format!("{metric}.mean"), fmt_f64(agg.mean));
        self.push(request, kind, item, &format!("{metric}.std_dev"), fmt_f64(agg.std_dev));
        self.push(
            request,
            kind,
            item,
            &format!("{metric}.ci95"),
            format!("[{}, {}]", fmt_f64(agg.ci95.0), fmt_f64(agg.ci95.1)),
        );
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Table => self.render_table(),
            Format::Csv => self.render_csv(),
            Format::Jsonl => self.render_jsonl(),
        }
    }

    fn meta_rows(&self) -> Vec<Row> {
        let mut rows = vec![
            Row {
                request: String::new(),
                kind: "meta".into(),
                item: String::new(),
                metric: "tool_version".into(),
                value: self.meta.tool_version.clone(),
            },
            Row {
                request: String::new(),
                kind: "meta".into(),
                item: String::new(),
                metric: "report_schema_version".into(),
                value: self.meta.report_schema_version.to_string(),
            },
        ];
        if let Some(digest) = &self.meta.scenario_digest {
            rows.push(Row {
                request: String::new(),
                kind: "meta".into(),
                item: String::new(),
                metric: "scenario_digest".into(),
                value: digest.clone(),
            });
        }
        if let Some(seed) = self.meta.seed_override {
            rows.push(Row {
                request: String::new(),
                kind: "meta".into(),
                item: String::new(),
                metric: "seed_override".into(),
                value: seed.to_string(),
            });
        }
        rows
    }

    fn render_table(&self) -> String {
        let mut out = String::new();
        for row in self.meta_rows() {
            out.push_str(&format!("# {}: {}\n", row.metric, row.value));
        }
        let header = ["request", "kind", "item", "metric", "value"];
        let all: Vec<[&str; 5]> = self
            .rows
            .iter()
            .map(|r| {
                [
                    r.request.as_str(),
                    r.kind.as_str(),
                    r.item.as_str(),
                    r.metric.as_str(),
                    r.value.as_str(),
                ]
            })
            .collect();
        let mut widths = header.map(str::len);
        for row in &all {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.len());
            }
        }
        let fmt_line = |cells: &[&str; 5]| -> String {
            let mut line = String::new();
            for (i, (cell, width)) in cells.iter().zip(widths).enumerate() {
                if i > 0 {
                    line.push_str("  ");
                }
                line.push_str(&format!("{cell:<width$}"));
            }
            line.trim_end().to_string()
        };
        out.push_str(&fmt_line(&header));
        out.push('\n');
        for row in &all {
            out.push_str(&fmt_line(row));
            out.push('\n');
        }
        out
    }

    fn render_csv(&self) -> String {
        let mut out = String::from("request,kind,item,metric,value\n");
        for row in self.meta_rows().iter().chain(&self.rows) {
            let cells = [
                row.request.as_str(),
                row.kind.as_str(),
                row.item.as_str(),
                row.metric.as_str(),
                row.value.as_str(),
            ];
            let line: Vec<String> = cells.iter().map(|c| csv_escape(c)).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }

    fn render_jsonl(&self) -> String {
        #[derive(Serialize)]
        struct MetaRecord<'a> {
            record: &'static str,
            #[serde(flatten)]
            meta: &'a Meta,
        }
        #[derive(Serialize)]
        struct RowRecord<'a> {
            record: &'static str,
            #[serde(flatten)]
            row: &'a Row,
        }
        let mut out = serde_json::to_string(&MetaRecord {
            record: "meta",
            meta: &self.meta,
        })
        .expect("meta serializes");
        out.push('\n');
        for row in &self.rows {
            out.push_str(
                &serde_json::to_string(&RowRecord {
                    record: "result",
                    row,
                })
                .expect("row serializes"),
            );
            out.push('\n');
        }
        out
    }
}

fn csv_escape(cell: &str) -> String {
    if cell.contains([',', '"', '\n']) {
        format!("\"{}\"", cell.replace('"', "\"\""))
    } else {
        cell.to_string()
    }
}

/// Fixed six-decimal rendering: locale-free, reproducible, and fine-grained
/// enough for every reported metric.
pub fn fmt_f64(value: f64) -> String {
    format!("{value:.6}")
}

/// Two-decimal rendering for ratio figures.
pub fn fmt_ratio(value: f64) -> String {
    format!("{value:.2}")
}
