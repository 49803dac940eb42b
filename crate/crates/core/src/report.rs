//! Result persistence: metrics CSV, lifetime CSV, summary JSON.
//!
//! Writers build the full document in memory and return it as a string,
//! so reruns with identical inputs are byte-identical by construction.
//! Floats render as their shortest round-trip decimal form.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::ga::GenerationMetrics;
use crate::lifetime::{LifetimeSummary, RoundRecord};

/// Per-generation trace of an evolution run.
/// Columns: generation,best_F,mean_F,best_TCH,best_RCSD,best_E,best_chromosome
pub fn metrics_csv(history: &[GenerationMetrics]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "generation",
        "best_F",
        "mean_F",
        "best_TCH",
        "best_RCSD",
        "best_E",
        "best_chromosome",
    ])?;
    for m in history {
        w.write_record([
            m.generation.to_string(),
            m.best_fitness.to_string(),
            m.mean_fitness.to_string(),
            m.best_head_count.to_string(),
            m.best_rcsd.to_string(),
            m.best_transfer_energy.to_string(),
            m.best_chromosome.to_bit_string(),
        ])?;
    }
    finish(w)
}

/// Per-round trace of a lifetime run.
/// Columns: round,alive_count,cumulative_energy_J,heads
pub fn lifetime_csv(records: &[RoundRecord]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["round", "alive_count", "cumulative_energy_J", "heads"])?;
    for r in records {
        w.write_record([
            r.round.to_string(),
            r.alive_count.to_string(),
            r.cumulative_energy.to_string(),
            r.heads.to_string(),
        ])?;
    }
    finish(w)
}

/// Wire form of [`LifetimeSummary`]; death rounds are null when the event
/// never happened within the simulated horizon.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SummaryFile {
    pub first_death_round: Option<u64>,
    pub last_death_round: Option<u64>,
    #[serde(rename = "total_energy_J")]
    pub total_energy: f64,
}

impl From<LifetimeSummary> for SummaryFile {
    fn from(s: LifetimeSummary) -> Self {
        SummaryFile {
            first_death_round: s.first_death_round,
            last_death_round: s.last_death_round,
            total_energy: s.total_energy,
        }
    }
}

pub fn summary_json(summary: &LifetimeSummary) -> Result<String> {
    let mut s = serde_json::to_string_pretty(&SummaryFile::from(*summary))?;
    s.push('\n');
    Ok(s)
}

/// One protocol's lifetime observed under one seed; a paired comparison
/// emits two rows per seed.
#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonRow {
    pub seed: u64,
    pub protocol: &'static str,
    pub summary: LifetimeSummary,
}

/// Columns: seed,protocol,first_death_round,last_death_round,total_energy_J
/// Death-round cells are empty when the event never happened.
pub fn comparison_csv(rows: &[ComparisonRow]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "seed",
        "protocol",
        "first_death_round",
        "last_death_round",
        "total_energy_J",
    ])?;
    for row in rows {
        let cell = |r: Option<u64>| r.map(|v| v.to_string()).unwrap_or_default();
        w.write_record([
            row.seed.to_string(),
            row.protocol.to_string(),
            cell(row.summary.first_death_round),
            cell(row.summary.last_death_round),
            row.summary.total_energy.to_string(),
        ])?;
    }
    finish(w)
}

/// Parsed CSV for plotting: header names plus each column's cell values,
/// numeric where the cell parses as a float.
#[derive(Debug, Clone)]
pub struct CsvTable {
    pub headers: Vec<String>,
    pub columns: Vec<Vec<Option<f64>>>,
}

impl CsvTable {
    pub fn parse(text: &str) -> Result<Self> {
        let mut reader = csv::Reader::from_reader(text.as_bytes());
        let headers: Vec<String> = reader.headers()?.iter().map(str::to_owned).collect();
        let mut columns = vec![Vec::new(); headers.len()];
        for record in reader.records() {
            let record = record?;
            for (i, cell) in record.iter().enumerate() {
                if let Some(column) = columns.get_mut(i) {
                    column.push(cell.trim().parse::<f64>().ok().filter(|v| v.is_finite()));
                }
            }
        }
        Ok(CsvTable { headers, columns })
    }

    pub fn column(&self, name: &str) -> Option<&[Option<f64>]> {
        let i = self.headers.iter().position(|h| h == name)?;
        Some(&self.columns[i])
    }
}

fn finish(w: csv::Writer<Vec<u8>>) -> Result<String> {
    let bytes = w.into_inner().expect("in-memory CSV flush cannot fail");
    Ok(String::from_utf8(bytes).expect("CSV output is ASCII"))
}
