//! Scenario configuration: one JSON file, every physical default documented
//! in [`crate::tolerances`] and here, every key overridable.

use anyhow::{bail, Context};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

pub const SUITES: [&str; 7] = [
    "group-axioms",
    "cocycle",
    "classical-covariance",
    "quantum-symmetry",
    "algebra-casimir",
    "superselection-demo",
    "extended-representation",
];

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields, default)]
pub struct GridConfig {
    pub points: usize,
    pub length: f64,
    pub hbar: f64,
}

impl Default for GridConfig {
    fn default() -> Self {
        Self {
            points: 512,
            length: 64.0,
            hbar: 1.0,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields, default)]
pub struct PotentialConfig {
    /// zero | pairwise-harmonic | pairwise-power-law | harmonic-trap
    pub kind: String,
    pub k: f64,
    pub g: f64,
    pub exponent: f64,
    pub core_radius: f64,
    pub omega: f64,
}

impl Default for PotentialConfig {
    fn default() -> Self {
        Self {
            kind: "zero".into(),
            k: 1.0,
            g: 1.0,
            exponent: -1.0,
            core_radius: 1e-3,
            omega: 1.0,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields, default)]
pub struct ScenarioConfig {
    pub seed: u64,
    /// Spatial dimension for the group/classical suites (quantum suites fix
    /// their own layouts per check).
    pub dimension: usize,
    pub particles: usize,
    pub grid: GridConfig,
    pub potential: PotentialConfig,
    /// "random:<count>" or an explicit count for fuzzed element draws.
    pub elements: String,
    /// Per-check tolerance overrides, keyed by check name.
    pub tolerances: BTreeMap<String, f64>,
    /// Multiplies every tolerance (CLI --tolerance-scale overrides).
    pub tolerance_scale: f64,
    pub output_dir: Option<PathBuf>,
}

impl Default for ScenarioConfig {
    fn default() -> Self {
        Self {
            seed: 42,
            dimension: 3,
            particles: 2,
            grid: GridConfig::default(),
            potential: PotentialConfig::default(),
            elements: "random:10000".into(),
            tolerances: BTreeMap::new(),
            tolerance_scale: 1.0,
            output_dir: None,
        }
    }
}

impl ScenarioConfig {
    pub fn from_file(path: &Path) -> anyhow::Result<Self> {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("cannot read config {}", path.display()))?;
        let config: ScenarioConfig = serde_json::from_str(&text)
            .with_context(|| format!("malformed config {}", path.display()))?;
        config.validate()?;
        Ok(config)
    }

    pub fn validate(&self) -> anyhow::Result<()> {
        if !(1..=3).contains(&self.dimension) {
            bail!("config key `dimension` must be 1..=3, got {}", self.dimension);
        }
        if self.particles == 0 {
            bail!("config key `particles` must be at least 1");
        }
        if !self.grid.points.is_power_of_two() || self.grid.points < 16 {
            bail!(
                "config key `grid.points` must be a power of two ≥ 16, got {}",
                self.grid.points
            );
        }
        if !(self.grid.length > 0.0) {
            bail!("config key `grid.length` must be positive");
        }
        if !(self.grid.hbar > 0.0) {
            bail!("config key `grid.hbar` must be positive");
        }
        if !(self.tolerance_scale > 0.0) {
            bail!("config key `tolerance_scale` must be positive");
        }
        for (key, value) in &self.tolerances {
            if !(*value > 0.0) {
                bail!("config key `tolerances.{key}` must be positive, got {value}");
            }
        }
        let known = ["zero", "pairwise-harmonic", "pairwise-power-law", "harmonic-trap"];
        if !known.contains(&self.potential.kind.as_str()) {
            bail!(
                "config key `potential.kind` must be one of {known:?}, got `{}`",
                self.potential.kind
            );
        }
        self.element_count()?;
        Ok(())
    }

    /// Number of random elements requested by the `elements` key.
    pub fn element_count(&self) -> anyhow::Result<usize> {
        let spec = self.elements.trim();
        let count = match spec.strip_prefix("random:") {
            Some(n) => n.parse::<usize>().ok(),
            None => spec.parse::<usize>().ok(),
        };
        match count {
            Some(n) if n >= 1 => Ok(n),
            _ => bail!(
                "config key `elements` must be `random:<count>` or a positive count, got `{}`",
                self.elements
            ),
        }
    }

    /// Effective tolerance for a named check: per-key override (or the
    /// supplied default) times the global scale.
    pub fn tolerance(&self, key: &str, default: f64) -> f64 {
        self.tolerances.get(key).copied().unwrap_or(default) * self.tolerance_scale
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_validate() {
        ScenarioConfig::default().validate().unwrap();
    }

    #[test]
    fn unknown_keys_are_named() {
        let err = serde_json::from_str::<ScenarioConfig>(r#"{"sede": 7}"#)
            .unwrap_err()
            .to_string();
        assert!(err.contains("sede"), "{err}");
    }

    #[test]
    fn bad_elements_spec_is_rejected() {
        let config = ScenarioConfig {
            elements: "random:".into(),
            ..ScenarioConfig::default()
        };
        assert!(config.validate().is_err());
    }

    #[test]
    fn tolerance_override_and_scale() {
        let mut config = ScenarioConfig::default();
        config.tolerances.insert("associativity".into(), 1e-10);
        config.tolerance_scale = 2.0;
        assert_eq!(config.tolerance("associativity", 1e-12), 2e-10);
        assert_eq!(config.tolerance("other", 1e-12), 2e-12);
    }
}
