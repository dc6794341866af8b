//! Benchmark reports: a text table with one column per strategy, and a JSON form.

use std::fmt::Write;

use serde::{Deserialize, Serialize};

pub const REPORT_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ReportRow {
    pub strategy: String,
    /// `None` for timed-out runs.
    pub gb_len: Option<usize>,
    pub poly_red: Option<usize>,
    pub pairs_ins: Option<usize>,
    pub wall_time_sec: f64,
    pub timed_out: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BenchReport {
    pub version: u32,
    pub problem: String,
    pub field: String,
    pub ordering: String,
    pub rows: Vec<ReportRow>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Text,
    Json,
}

impl BenchReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    pub fn emit(&self, format: ReportFormat) -> String {
        match format {
            ReportFormat::Text => self.to_text(),
            ReportFormat::Json => self.to_json(),
        }
    }

    /// Rows `GBLen`, `PolyRed`, `PairsIns`, `Time`; one column per strategy.
    pub fn to_text(&self) -> String {
        let count = |v: Option<usize>| v.map_or_else(|| "-".to_string(), |v| v.to_string());
        let mut table: Vec<(&str, Vec<String>)> = vec![
            ("", self.rows.iter().map(|r| r.strategy.clone()).collect()),
            ("GBLen", self.rows.iter().map(|r| count(r.gb_len)).collect()),
            ("PolyRed", self.rows.iter().map(|r| count(r.poly_red)).collect()),
            ("PairsIns", self.rows.iter().map(|r| count(r.pairs_ins)).collect()),
            ("Time", self.rows.iter().map(time_cell).collect()),
        ];
        let label = table.iter().map(|(l, _)| l.len()).max().unwrap_or(0);
        let widths: Vec<usize> = (0..self.rows.len())
            .map(|c| table.iter().map(|(_, cells)| cells[c].len()).max().unwrap_or(0))
            .collect();
        let mut out = format!("{} over {}, {}\n", self.problem, self.field, self.ordering);
        for (name, cells) in table.iter_mut() {
            let mut line = format!("{name:<label$}");
            for (cell, w) in cells.iter().zip(&widths) {
                write!(line, "  {cell:>w$}").expect("writing to a string");
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }
}

fn time_cell(r: &ReportRow) -> String {
    if r.timed_out {
        format!(">{:.2}s", r.wall_time_sec)
    } else {
        format!("{:.2}s", r.wall_time_sec)
    }
}
