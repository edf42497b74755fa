//! Experiment configuration files (TOML).
//!
//! ```toml
//! id = "exp1"
//! experiment = "exp1"
//! repetitions = 5
//! ks = [1, 20]
//! out = "out/exp1.csv"
//!
//! [random]
//! n_start = 500
//! n_end = 5000
//! n_step = 500
//! side = 25.0
//! ```

use std::path::{Path, PathBuf};

use disksever_core::separators::ALPHA_TWO_THIRDS;
use serde::{Deserialize, Serialize};

use crate::error::{HarnessError, Result};

/// Largest `n` an experiment may use without `full_range`.
pub const DESK_SCALE_MAX_N: usize = 5000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum AlgoName {
    /// Best line over random slopes (sweep per slope).
    Sweep,
    /// Random lines through an exact centerpoint.
    Centerpoint,
    /// Axis-parallel construction with alpha 4/5.
    Axis,
    /// Exhaustive optimal line.
    Optimal,
}

impl AlgoName {
    pub fn is_randomized(self) -> bool {
        matches!(self, AlgoName::Sweep | AlgoName::Centerpoint)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ExperimentKind {
    /// Connected random unit-disk instances of growing size.
    Exp1,
    /// Snake instances of growing `q`.
    Snake,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RandomFamily {
    pub n_start: usize,
    pub n_end: usize,
    pub n_step: usize,
    pub side: f64,
    #[serde(default = "default_max_rejects")]
    pub max_rejects: usize,
    /// Lifts the desk-scale cap on `n`.
    #[serde(default)]
    pub full_range: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SnakeFamily {
    pub q_start: usize,
    pub q_end: usize,
    #[serde(default = "default_q_step")]
    pub q_step: usize,
    /// The optimal separator runs only up to this `q`.
    #[serde(default = "default_optimal_max_q")]
    pub optimal_max_q: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub id: String,
    pub experiment: ExperimentKind,
    /// Base seed. `bench --seed` overrides it.
    #[serde(default)]
    pub seed: u64,
    #[serde(default = "default_repetitions")]
    pub repetitions: usize,
    #[serde(default)]
    pub ks: Vec<usize>,
    /// Defaults to `sweep` for exp1 and `sweep` + `optimal` for snake.
    #[serde(default)]
    pub algorithms: Vec<AlgoName>,
    #[serde(default = "default_alpha")]
    pub alpha: f64,
    #[serde(default)]
    pub random: Option<RandomFamily>,
    #[serde(default)]
    pub snake: Option<SnakeFamily>,
    /// Record wall time per row. Timed tables are not reproducible.
    #[serde(default)]
    pub timing: bool,
    #[serde(default)]
    pub out: Option<PathBuf>,
}

fn default_max_rejects() -> usize {
    10_000
}
fn default_q_step() -> usize {
    2
}
fn default_optimal_max_q() -> usize {
    41
}
fn default_repetitions() -> usize {
    1
}
fn default_alpha() -> f64 {
    ALPHA_TWO_THIRDS
}

impl ExperimentConfig {
    pub fn from_toml(text: &str) -> Result<Self> {
        let cfg: ExperimentConfig = toml::from_str(text).map_err(|e| HarnessError::input(format!("config: {e}")))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| HarnessError::io(path, e))?;
        Self::from_toml(&text).map_err(|e| HarnessError::input(format!("{}: {e}", path.display())))
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("config serializes")
    }

    pub fn algorithms(&self) -> Vec<AlgoName> {
        if !self.algorithms.is_empty() {
            let mut a = self.algorithms.clone();
            a.sort();
            a.dedup();
            return a;
        }
        match self.experiment {
            ExperimentKind::Exp1 => vec![AlgoName::Sweep],
            ExperimentKind::Snake => vec![AlgoName::Sweep, AlgoName::Optimal],
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(HarnessError::input(m));
        if self.id.is_empty() || !self.id.chars().all(|c| c.is_ascii_alphanumeric() || c == '-' || c == '_') {
            return bad(format!("id must be non-empty and use [A-Za-z0-9_-], got {:?}", self.id));
        }
        if self.repetitions == 0 {
            return bad("repetitions must be at least 1".into());
        }
        if self.algorithms().iter().any(|a| a.is_randomized()) && self.ks.is_empty() {
            return bad("ks must list at least one trial count".into());
        }
        if self.ks.contains(&0) {
            return bad("every k must be at least 1".into());
        }
        if !(0.5..=1.0).contains(&self.alpha) {
            return bad(format!("alpha must lie in [0.5, 1], got {}", self.alpha));
        }
        match self.experiment {
            ExperimentKind::Exp1 => {
                let Some(r) = &self.random else {
                    return bad("exp1 needs a [random] section".into());
                };
                if r.n_step == 0 || r.n_start == 0 {
                    return bad("n_start and n_step must be at least 1".into());
                }
                if !(r.side.is_finite() && r.side > 0.0) {
                    return bad(format!("side must be positive, got {}", r.side));
                }
                if !r.full_range && r.n_end > DESK_SCALE_MAX_N {
                    return bad(format!("n_end above {DESK_SCALE_MAX_N} needs full_range = true"));
                }
            }
            ExperimentKind::Snake => {
                let Some(s) = &self.snake else {
                    return bad("snake experiment needs a [snake] section".into());
                };
                if s.q_start < 3 || s.q_start % 2 == 0 || s.q_step == 0 || s.q_step % 2 == 1 {
                    return bad("q_start must be odd and >= 3, q_step even and >= 2".into());
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const EXP1: &str = r#"
id = "exp1"
experiment = "exp1"
repetitions = 5
ks = [1, 20]

[random]
n_start = 500
n_end = 5000
n_step = 500
side = 25.0
"#;

    #[test]
    fn parses_and_round_trips() {
        let cfg = ExperimentConfig::from_toml(EXP1).unwrap();
        assert_eq!(cfg.algorithms(), [AlgoName::Sweep]);
        assert_eq!(cfg.alpha, ALPHA_TWO_THIRDS);
        assert_eq!(ExperimentConfig::from_toml(&cfg.to_toml()).unwrap(), cfg);
    }

    #[test]
    fn rejects_bad_configs() {
        for patch in [
            ("n_end = 5000", "n_end = 6000"),
            ("ks = [1, 20]", "ks = [0]"),
            ("ks = [1, 20]", "ks = []"),
            ("repetitions = 5", "repetitions = 0"),
            ("side = 25.0", "side = -1.0"),
            ("experiment = \"exp1\"", "experiment = \"exp9\""),
            ("experiment = \"exp1\"", "experiment = \"snake\""),
            ("id = \"exp1\"", "id = \"a b\""),
            ("repetitions = 5", "repetitions = 5\nbogus = 1"),
        ] {
            let text = EXP1.replace(patch.0, patch.1);
            assert!(matches!(ExperimentConfig::from_toml(&text), Err(HarnessError::Input(_))), "{patch:?}");
        }
        let full = EXP1.replace("n_end = 5000", "n_end = 6000\nfull_range = true");
        assert!(ExperimentConfig::from_toml(&full).is_ok());
    }
}
