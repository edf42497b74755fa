//! Experiment drivers.
//!
//! Seeds: the instance for family parameter `p` (n or q) is drawn with
//! `derive_seed([base, family, p])`, and repetition `r` of a randomized
//! algorithm on it samples its directions from
//! `derive_seed([base, family, p, r])`. The trial count `k` is not part of
//! the seed, so the first `k` directions are shared by every `k' >= k` and
//! the minimum over `k` trials is non-increasing in `k`.

use std::collections::{BTreeMap, HashMap};
use std::path::{Path, PathBuf};
use std::time::Instant;

use disksever_core::centerpoint::exact_centerpoint;
use disksever_core::generators::{gen_random, gen_snake};
use disksever_core::rng::derive_seed;
use disksever_core::separators::{
    axis_parallel_separator, line_through_point_separator, optimal_line_separator, random_line_separator,
};
use disksever_core::{build_graph, Instance, SeparatorResult};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::config::{AlgoName, ExperimentConfig, ExperimentKind};
use crate::error::{HarnessError, Result};
use crate::io::write_text;
use crate::record::{rows_to_csv, sort_rows, write_rows, ResultRow};
use crate::svg;

const FAMILY_RANDOM: u64 = 1;
const FAMILY_SNAKE: u64 = 2;

pub fn instance_seed(base: u64, family: u64, param: u64) -> u64 {
    derive_seed(&[base, family, param])
}

pub fn repetition_seed(base: u64, family: u64, param: u64, repetition: u64) -> u64 {
    derive_seed(&[base, family, param, repetition])
}

/// Mean and spread of one (instance, algorithm, k) group.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SummaryRow {
    pub instance_id: String,
    /// `n` for random instances, `q` for snakes.
    pub param: usize,
    pub n: usize,
    pub m: usize,
    pub algorithm: String,
    pub k: usize,
    pub runs: usize,
    pub mean_size: f64,
    /// Sample variance; 0 for a single run.
    pub var_size: f64,
}

pub const SUMMARY_HEADER: [&str; 9] =
    ["instance_id", "param", "n", "m", "algorithm", "k", "runs", "mean_size", "var_size"];

#[derive(Clone, Debug, PartialEq)]
pub struct ExperimentOutput {
    pub kind: ExperimentKind,
    pub rows: Vec<ResultRow>,
    pub summary: Vec<SummaryRow>,
}

struct Generated {
    id: String,
    param: usize,
    family: u64,
    instance: Instance,
    m: usize,
}

fn params(cfg: &ExperimentConfig) -> Vec<usize> {
    match cfg.experiment {
        ExperimentKind::Exp1 => {
            let r = cfg.random.as_ref().expect("validated");
            (r.n_start..=r.n_end).step_by(r.n_step).collect()
        }
        ExperimentKind::Snake => {
            let s = cfg.snake.as_ref().expect("validated");
            (s.q_start..=s.q_end).step_by(s.q_step).collect()
        }
    }
}

fn generate(cfg: &ExperimentConfig, param: usize) -> Result<Generated> {
    let (id, family, instance) = match cfg.experiment {
        ExperimentKind::Exp1 => {
            let r = cfg.random.as_ref().expect("validated");
            let seed = instance_seed(cfg.seed, FAMILY_RANDOM, param as u64);
            (format!("random-n{param}"), FAMILY_RANDOM, gen_random(param, r.side, seed, true, r.max_rejects)?)
        }
        ExperimentKind::Snake => (format!("snake-q{param}"), FAMILY_SNAKE, gen_snake(param)?),
    };
    let m = build_graph(&instance).m();
    Ok(Generated { id, param, family, instance, m })
}

#[derive(Clone, Copy)]
struct Task {
    algo: AlgoName,
    k: usize,
    repetition: usize,
}

fn tasks(cfg: &ExperimentConfig, g: &Generated) -> Vec<Task> {
    let mut out = vec![];
    for algo in cfg.algorithms() {
        if algo.is_randomized() {
            for &k in &cfg.ks {
                out.extend((0..cfg.repetitions).map(|repetition| Task { algo, k, repetition }));
            }
        } else {
            let skip = algo == AlgoName::Optimal
                && cfg.experiment == ExperimentKind::Snake
                && g.param > cfg.snake.as_ref().expect("validated").optimal_max_q;
            if !skip {
                out.push(Task { algo, k: 0, repetition: 0 });
            }
        }
    }
    out
}

fn run_task(
    cfg: &ExperimentConfig,
    g: &Generated,
    center: Option<disksever_core::Point>,
    t: Task,
) -> Result<ResultRow> {
    let seed = repetition_seed(cfg.seed, g.family, g.param as u64, t.repetition as u64);
    let start = Instant::now();
    let res: SeparatorResult = match t.algo {
        AlgoName::Sweep => random_line_separator(&g.instance, t.k, seed, cfg.alpha)?,
        AlgoName::Centerpoint => line_through_point_separator(&g.instance, center.expect("computed"), t.k, seed, None)?,
        AlgoName::Axis => axis_parallel_separator(&g.instance)?,
        AlgoName::Optimal => optimal_line_separator(&g.instance, cfg.alpha)?,
    };
    let wall = cfg.timing.then(|| start.elapsed().as_secs_f64() * 1e3);
    ResultRow::validated(&g.id, &g.instance, g.m, &res, t.k, t.repetition, wall)
}

fn run_instance(cfg: &ExperimentConfig, param: usize) -> Result<(Vec<ResultRow>, usize)> {
    let g = generate(cfg, param)?;
    let center = if cfg.algorithms().contains(&AlgoName::Centerpoint) {
        Some(exact_centerpoint(&g.instance.centers())?)
    } else {
        None
    };
    let rows = tasks(cfg, &g).into_par_iter().map(|t| run_task(cfg, &g, center, t)).collect::<Result<Vec<_>>>()?;
    Ok((rows, g.param))
}

/// Runs every (instance, algorithm, k, repetition) cell of `cfg`.
pub fn run_experiment(cfg: &ExperimentConfig) -> Result<ExperimentOutput> {
    cfg.validate()?;
    let per_instance: Vec<(Vec<ResultRow>, usize)> =
        params(cfg).into_par_iter().map(|p| run_instance(cfg, p)).collect::<Result<_>>()?;
    let mut rows = vec![];
    let mut param_of = HashMap::new();
    for (r, p) in per_instance {
        if let Some(first) = r.first() {
            param_of.insert(first.instance_id.clone(), p);
        }
        rows.extend(r);
    }
    sort_rows(&mut rows);
    let summary = summarize(&rows, |id| param_of[id]);
    Ok(ExperimentOutput { kind: cfg.experiment, rows, summary })
}

pub fn run_experiment1(cfg: &ExperimentConfig) -> Result<ExperimentOutput> {
    if cfg.experiment != ExperimentKind::Exp1 {
        return Err(HarnessError::input("run_experiment1 needs experiment = \"exp1\""));
    }
    run_experiment(cfg)
}

pub fn run_snake_experiment(cfg: &ExperimentConfig) -> Result<ExperimentOutput> {
    if cfg.experiment != ExperimentKind::Snake {
        return Err(HarnessError::input("run_snake_experiment needs experiment = \"snake\""));
    }
    run_experiment(cfg)
}

/// Groups sorted rows by (instance, algorithm, k).
pub fn summarize(rows: &[ResultRow], param_of: impl Fn(&str) -> usize) -> Vec<SummaryRow> {
    rows.chunk_by(|a, b| a.instance_id == b.instance_id && a.algorithm == b.algorithm && a.k == b.k)
        .map(|g| {
            let sizes: Vec<f64> = g.iter().map(|r| r.separator_size as f64).collect();
            let runs = sizes.len();
            let mean = sizes.iter().sum::<f64>() / runs as f64;
            let var =
                if runs > 1 { sizes.iter().map(|s| (s - mean).powi(2)).sum::<f64>() / (runs - 1) as f64 } else { 0.0 };
            SummaryRow {
                instance_id: g[0].instance_id.clone(),
                param: param_of(&g[0].instance_id),
                n: g[0].n,
                m: g[0].m,
                algorithm: g[0].algorithm.clone(),
                k: g[0].k,
                runs,
                mean_size: mean,
                var_size: var,
            }
        })
        .collect()
}

pub fn plot(out: &ExperimentOutput, title: &str) -> svg::Plot {
    let mut groups: BTreeMap<(String, usize), Vec<(f64, f64)>> = BTreeMap::new();
    for s in &out.summary {
        let x = match out.kind {
            ExperimentKind::Exp1 => s.m as f64,
            ExperimentKind::Snake => s.param as f64,
        };
        groups.entry((s.algorithm.clone(), s.k)).or_default().push((x, s.mean_size));
    }
    let series = groups
        .into_iter()
        .map(|((algo, k), points)| svg::Series { label: if k == 0 { algo } else { format!("{algo} k={k}") }, points })
        .collect();
    let (x_label, log) = match out.kind {
        ExperimentKind::Exp1 => ("edges m", true),
        ExperimentKind::Snake => ("q", false),
    };
    svg::Plot {
        title: title.to_string(),
        x_label: x_label.into(),
        y_label: "average separator size".into(),
        log_x: log,
        log_y: log,
        series,
    }
}

fn sibling(path: &Path, suffix: &str) -> PathBuf {
    let stem = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    path.with_file_name(format!("{stem}{suffix}"))
}

/// Writes the row table to `csv_path`, plus `<stem>_summary.csv` and
/// `<stem>.svg` next to it. Returns the paths written.
pub fn write_outputs(out: &ExperimentOutput, csv_path: &Path, title: &str) -> Result<Vec<PathBuf>> {
    write_rows(csv_path, &out.rows)?;
    let summary_path = sibling(csv_path, "_summary.csv");
    write_text(&summary_path, &rows_to_csv(&out.summary, &SUMMARY_HEADER))?;
    let svg_path = sibling(csv_path, ".svg");
    write_text(&svg_path, &svg::render(&plot(out, title)))?;
    Ok(vec![csv_path.to_path_buf(), summary_path, svg_path])
}

/// Least-squares slope of `ln y` against `ln x`.
pub fn loglog_slope(points: &[(f64, f64)]) -> Option<f64> {
    let pts: Vec<(f64, f64)> =
        points.iter().filter(|(x, y)| *x > 0.0 && *y > 0.0).map(|(x, y)| (x.ln(), y.ln())).collect();
    if pts.len() < 2 {
        return None;
    }
    let n = pts.len() as f64;
    let (mx, my) = (pts.iter().map(|p| p.0).sum::<f64>() / n, pts.iter().map(|p| p.1).sum::<f64>() / n);
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exp1(n_start: usize, n_end: usize) -> ExperimentConfig {
        ExperimentConfig::from_toml(&format!(
            "id = \"t\"\nexperiment = \"exp1\"\nrepetitions = 4\nks = [1, 20]\nseed = 3\n\
             [random]\nn_start = {n_start}\nn_end = {n_end}\nn_step = 100\nside = 12.0\n"
        ))
        .unwrap()
    }

    #[test]
    fn empty_range_gives_empty_table() {
        let out = run_experiment1(&exp1(500, 400)).unwrap();
        assert!(out.rows.is_empty() && out.summary.is_empty());
    }

    #[test]
    fn one_row_per_cell_and_reproducible() {
        let cfg = exp1(100, 300);
        let a = run_experiment1(&cfg).unwrap();
        assert_eq!(a.rows.len(), 3 * 2 * 4);
        assert_eq!(a.summary.len(), 3 * 2);
        assert!(a.rows.iter().all(|r| r.wall_ms.is_none()));
        let b = run_experiment1(&cfg).unwrap();
        assert_eq!(
            rows_to_csv(&a.rows, &crate::record::RESULT_HEADER),
            rows_to_csv(&b.rows, &crate::record::RESULT_HEADER)
        );
    }

    #[test]
    fn loglog_slope_of_power_law() {
        let pts: Vec<(f64, f64)> = (1..20).map(|i| (i as f64, 3.0 * (i as f64).powf(0.5))).collect();
        assert!((loglog_slope(&pts).unwrap() - 0.5).abs() < 1e-12);
        assert_eq!(loglog_slope(&[(1.0, 1.0)]), None);
    }

    #[test]
    fn wrong_kind_is_rejected() {
        assert!(run_snake_experiment(&exp1(100, 100)).is_err());
    }
}
