//! Suite registry: each suite turns a scenario config into a list of
//! pass/fail check records.

mod algebra_casimir;
mod classical_covariance;
mod cocycle;
mod extended_representation;
mod group_axioms;
mod quantum_symmetry;
mod superselection;

use crate::config::{ScenarioConfig, SUITES};
use crate::report::Report;
use anyhow::bail;
use std::time::Instant;

pub fn run_suite(name: &str, config: &ScenarioConfig) -> anyhow::Result<Report> {
    config.validate()?;
    let start = Instant::now();
    let checks = match name {
        "group-axioms" => group_axioms::run(config)?,
        "cocycle" => cocycle::run(config)?,
        "classical-covariance" => classical_covariance::run(config)?,
        "quantum-symmetry" => quantum_symmetry::run(config)?,
        "algebra-casimir" => algebra_casimir::run(config)?,
        "superselection-demo" => superselection::run(config)?,
        "extended-representation" => extended_representation::run(config)?,
        other => bail!("unknown suite `{other}`; available: {}", SUITES.join(", ")),
    };
    Ok(Report::new(name, config, checks, start.elapsed().as_millis()))
}
