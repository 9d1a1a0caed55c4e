//! Machine-readable suite reports. A report embeds the verbatim config and
//! seed so it doubles as a regression fixture; identical configs produce
//! byte-identical reports apart from the two timing fields.

use crate::config::ScenarioConfig;
use serde::{Deserialize, Serialize};
use std::path::Path;

/// How `measured` relates to `predicted`/`tolerance` for the pass verdict.
#[derive(Clone, Copy, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "kebab-case")]
pub enum Comparison {
    /// pass ⇔ |measured − predicted| ≤ tolerance.
    Target,
    /// pass ⇔ measured ≤ tolerance (predicted echoes the ideal, usually 0).
    Residual,
    /// pass ⇔ measured ≥ tolerance (e.g. convergence order floors).
    AtLeast,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CheckRecord {
    pub name: String,
    /// The identity or bound being exercised, as a stable tag.
    pub law: String,
    pub comparison: Comparison,
    pub measured: f64,
    pub predicted: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl CheckRecord {
    pub fn residual(name: &str, law: &str, measured: f64, tolerance: f64) -> Self {
        Self {
            name: name.into(),
            law: law.into(),
            comparison: Comparison::Residual,
            measured,
            predicted: 0.0,
            tolerance,
            pass: measured.is_finite() && measured <= tolerance,
        }
    }

    pub fn target(name: &str, law: &str, measured: f64, predicted: f64, tolerance: f64) -> Self {
        Self {
            name: name.into(),
            law: law.into(),
            comparison: Comparison::Target,
            measured,
            predicted,
            tolerance,
            pass: measured.is_finite() && (measured - predicted).abs() <= tolerance,
        }
    }

    pub fn at_least(name: &str, law: &str, measured: f64, floor: f64) -> Self {
        Self {
            name: name.into(),
            law: law.into(),
            comparison: Comparison::AtLeast,
            measured,
            predicted: floor,
            tolerance: floor,
            pass: measured.is_finite() && measured >= floor,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub seed: u64,
    pub passed: bool,
    pub checks: Vec<CheckRecord>,
    /// Unix timestamp (seconds); excluded from reproducibility comparisons.
    pub timestamp: u64,
    /// Wall-clock milliseconds; excluded from reproducibility comparisons.
    pub wall_ms: u128,
    pub config: ScenarioConfig,
}

impl Report {
    pub fn new(suite: &str, config: &ScenarioConfig, checks: Vec<CheckRecord>, wall_ms: u128) -> Self {
        let timestamp = std::time::SystemTime::now()
            .duration_since(std::time::UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0);
        Self {
            suite: suite.into(),
            seed: config.seed,
            passed: checks.iter().all(|c| c.pass),
            checks,
            timestamp,
            wall_ms,
            config: config.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn write(&self, path: &Path) -> anyhow::Result<()> {
        if let Some(parent) = path.parent() {
            std::fs::create_dir_all(parent)?;
        }
        std::fs::write(path, self.to_json())?;
        Ok(())
    }

    /// One line per check, suitable for terminal output.
    pub fn summary_lines(&self) -> Vec<String> {
        self.checks
            .iter()
            .map(|c| {
                format!(
                    "[{}] {} ({}): measured {:.3e}, predicted {:.3e}, tolerance {:.3e}",
                    if c.pass { "PASS" } else { "FAIL" },
                    c.name,
                    c.law,
                    c.measured,
                    c.predicted,
                    c.tolerance
                )
            })
            .collect()
    }
}
