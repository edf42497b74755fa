//! Output records: the JSON record of a single separator and the flat CSV
//! row shared by all experiments.

use std::path::Path;

use disksever_core::{Instance, SeparatorResult};
use serde::{Deserialize, Serialize};

use crate::error::{HarnessError, Result};
use crate::io::write_text;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SeparatorRecord {
    pub algorithm: String,
    pub alpha: f64,
    pub n: usize,
    pub nx: f64,
    pub ny: f64,
    pub c: f64,
    pub crossings: usize,
    pub left: usize,
    pub right: usize,
    pub trials_used: usize,
    pub crossed: Vec<usize>,
}

impl From<&SeparatorResult> for SeparatorRecord {
    fn from(r: &SeparatorResult) -> Self {
        SeparatorRecord {
            algorithm: r.algorithm.as_str().to_string(),
            alpha: r.alpha,
            n: r.n,
            nx: r.line.nx(),
            ny: r.line.ny(),
            c: r.line.c(),
            crossings: r.size(),
            left: r.left,
            right: r.right,
            trials_used: r.trials_used,
            crossed: r.crossed.clone(),
        }
    }
}

impl SeparatorRecord {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("record serializes");
        s.push('\n');
        s
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResultRow {
    pub instance_id: String,
    pub n: usize,
    pub m: usize,
    pub algorithm: String,
    /// Number of sampled directions; 0 for deterministic algorithms.
    pub k: usize,
    pub repetition: usize,
    pub separator_size: usize,
    pub left: usize,
    pub right: usize,
    /// Empty unless timing is enabled, so untimed tables are reproducible.
    pub wall_ms: Option<f64>,
}

impl ResultRow {
    /// Builds a row after re-validating `res` against `inst`.
    pub fn validated(
        instance_id: &str,
        inst: &Instance,
        m: usize,
        res: &SeparatorResult,
        k: usize,
        repetition: usize,
        wall_ms: Option<f64>,
    ) -> Result<Self> {
        res.validate(inst).map_err(|e| HarnessError::internal(format!("{instance_id}: {e}")))?;
        Ok(ResultRow {
            instance_id: instance_id.to_string(),
            n: inst.len(),
            m,
            algorithm: res.algorithm.as_str().to_string(),
            k,
            repetition,
            separator_size: res.size(),
            left: res.left,
            right: res.right,
            wall_ms,
        })
    }

    fn sort_key(&self) -> (usize, &str, &str, usize, usize) {
        (self.n, &self.instance_id, &self.algorithm, self.k, self.repetition)
    }
}

/// Canonical row order: by instance size, id, algorithm, k, repetition.
pub fn sort_rows(rows: &mut [ResultRow]) {
    rows.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
}

pub fn rows_to_csv<T: Serialize>(rows: &[T], header: &[&str]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    if rows.is_empty() {
        w.write_record(header).expect("in-memory write");
    }
    for r in rows {
        w.serialize(r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv is utf-8")
}

pub const RESULT_HEADER: [&str; 10] =
    ["instance_id", "n", "m", "algorithm", "k", "repetition", "separator_size", "left", "right", "wall_ms"];

pub fn write_rows(path: &Path, rows: &[ResultRow]) -> Result<()> {
    write_text(path, &rows_to_csv(rows, &RESULT_HEADER))
}

pub fn parse_rows(text: &str) -> Result<Vec<ResultRow>> {
    csv::Reader::from_reader(text.as_bytes())
        .deserialize()
        .collect::<std::result::Result<_, _>>()
        .map_err(|e| HarnessError::input(format!("result table: {e}")))
}
