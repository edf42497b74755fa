//! Empirical constants for the random-line bounds.
//!
//! For each instance the statistic is the median crossing count of random
//! lines through an exact centerpoint of the disk centers. Two families are
//! fitted:
//!
//! * dense: unit disks uniform in a square of side `dense_side`;
//!   `C = max size / √((m+n)·ln n)`;
//! * disjoint: pairwise disjoint unit disks in a square of side
//!   `disjoint_spread·√n`; `C′ = max size / √n`.

use disksever_core::centerpoint::exact_centerpoint;
use disksever_core::generators::{gen_random, gen_random_disjoint};
use disksever_core::rng::{derive_seed, trial_angle};
use disksever_core::separators::crossings_through_point;
use disksever_core::{build_graph, Instance};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::Result;

const FAMILY_DENSE: u64 = 11;
const FAMILY_DISJOINT: u64 = 12;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CalibrationConfig {
    pub seed: u64,
    pub ns: Vec<usize>,
    pub per_n: usize,
    /// Lines per instance; the median is taken over these.
    pub lines: usize,
    pub dense_side: f64,
    pub disjoint_spread: f64,
}

impl Default for CalibrationConfig {
    fn default() -> Self {
        CalibrationConfig {
            seed: 0,
            ns: (1..=10).map(|i| 100 * i).collect(),
            per_n: 10,
            lines: 21,
            dense_side: 16.0,
            disjoint_spread: 5.0,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Sample {
    pub n: usize,
    pub m: usize,
    pub median: f64,
}

impl Sample {
    pub fn dense_ratio(&self) -> f64 {
        let (n, m) = (self.n as f64, self.m as f64);
        self.median / ((m + n) * n.ln()).sqrt()
    }

    pub fn disjoint_ratio(&self) -> f64 {
        self.median / (self.n as f64).sqrt()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CalibrationRecord {
    pub config: CalibrationConfig,
    /// Constant of `size <= C·√((m+n)·ln n)` on the dense family.
    pub c: f64,
    /// Constant of `size <= C′·√n` on the disjoint family.
    pub c_prime: f64,
    /// Hash of every sample, hex.
    pub fingerprint: String,
    pub dense: Vec<Sample>,
    pub disjoint: Vec<Sample>,
}

impl CalibrationRecord {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("record serializes");
        s.push('\n');
        s
    }
}

/// Median crossing count over `lines` random lines through an exact
/// centerpoint of the centers.
pub fn median_through_centerpoint(inst: &Instance, lines: usize, seed: u64) -> Result<f64> {
    let p = exact_centerpoint(&inst.centers())?;
    let mut sizes = (0..lines as u64)
        .map(|t| crossings_through_point(inst, p, trial_angle(seed, t)))
        .collect::<disksever_core::Result<Vec<_>>>()?;
    sizes.sort_unstable();
    let mid = sizes.len() / 2;
    Ok(if sizes.len() % 2 == 1 { sizes[mid] as f64 } else { (sizes[mid - 1] + sizes[mid]) as f64 / 2.0 })
}

pub fn dense_instance(cfg: &CalibrationConfig, n: usize, index: usize) -> Result<Instance> {
    Ok(gen_random(n, cfg.dense_side, derive_seed(&[cfg.seed, FAMILY_DENSE, n as u64, index as u64]), false, 0)?)
}

pub fn disjoint_instance(cfg: &CalibrationConfig, n: usize, index: usize) -> Result<Instance> {
    let side = cfg.disjoint_spread * (n as f64).sqrt();
    let seed = derive_seed(&[cfg.seed, FAMILY_DISJOINT, n as u64, index as u64]);
    Ok(gen_random_disjoint(n, side, seed, 1_000_000)?)
}

fn sample(inst: &Instance, lines: usize, seed: u64) -> Result<Sample> {
    Ok(Sample { n: inst.len(), m: build_graph(inst).m(), median: median_through_centerpoint(inst, lines, seed)? })
}

/// Samples one family: `per_n` instances for every `n`.
pub fn sample_family(
    cfg: &CalibrationConfig,
    make: impl Fn(&CalibrationConfig, usize, usize) -> Result<Instance> + Sync,
    family: u64,
) -> Result<Vec<Sample>> {
    let cells: Vec<(usize, usize)> = cfg.ns.iter().flat_map(|&n| (0..cfg.per_n).map(move |i| (n, i))).collect();
    cells
        .into_par_iter()
        .map(|(n, i)| {
            let inst = make(cfg, n, i)?;
            sample(&inst, cfg.lines, derive_seed(&[cfg.seed, family, n as u64, i as u64, 1]))
        })
        .collect()
}

pub fn dense_samples(cfg: &CalibrationConfig) -> Result<Vec<Sample>> {
    sample_family(cfg, dense_instance, FAMILY_DENSE)
}

pub fn disjoint_samples(cfg: &CalibrationConfig) -> Result<Vec<Sample>> {
    sample_family(cfg, disjoint_instance, FAMILY_DISJOINT)
}

fn fingerprint(dense: &[Sample], disjoint: &[Sample]) -> String {
    let mut parts = vec![];
    for s in dense.iter().chain(disjoint) {
        parts.extend([s.n as u64, s.m as u64, s.median.to_bits()]);
    }
    format!("{:016x}", derive_seed(&parts))
}

pub fn calibrate_constants(cfg: &CalibrationConfig) -> Result<CalibrationRecord> {
    let dense = dense_samples(cfg)?;
    let disjoint = disjoint_samples(cfg)?;
    let c = dense.iter().map(Sample::dense_ratio).fold(0.0, f64::max);
    let c_prime = disjoint.iter().map(Sample::disjoint_ratio).fold(0.0, f64::max);
    Ok(CalibrationRecord {
        config: cfg.clone(),
        c,
        c_prime,
        fingerprint: fingerprint(&dense, &disjoint),
        dense,
        disjoint,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> CalibrationConfig {
        CalibrationConfig { seed: 4, ns: vec![100, 200], per_n: 3, lines: 11, ..Default::default() }
    }

    #[test]
    fn constants_are_finite_and_reproducible() {
        let a = calibrate_constants(&small()).unwrap();
        assert!(a.c.is_finite() && a.c > 0.0);
        assert!(a.c_prime.is_finite() && a.c_prime > 0.0);
        assert!(a.disjoint.iter().all(|s| s.m == 0));
        assert_eq!(a.dense.len(), 6);
        assert_eq!(a, calibrate_constants(&small()).unwrap());
        let other = calibrate_constants(&CalibrationConfig { seed: 5, ..small() }).unwrap();
        assert_ne!(a.fingerprint, other.fingerprint);
    }

    #[test]
    fn median_matches_direct_count() {
        let cfg = small();
        let inst = disjoint_instance(&cfg, 100, 0).unwrap();
        let p = exact_centerpoint(&inst.centers()).unwrap();
        let mut direct: Vec<usize> =
            (0..4).map(|t| crossings_through_point(&inst, p, trial_angle(9, t)).unwrap()).collect();
        direct.sort_unstable();
        let expected = (direct[1] + direct[2]) as f64 / 2.0;
        assert_eq!(median_through_centerpoint(&inst, 4, 9).unwrap(), expected);
    }
}
