//! Scenario harness for the Galilei extension laboratory: loads JSON
//! scenario configs, runs the invariant suites and demonstrations, and
//! emits machine-readable reports plus plottable CSV/binary data.

pub mod config;
pub mod export;
pub mod report;
pub mod sample;
pub mod suites;
pub mod tolerances;

pub use config::{ScenarioConfig, SUITES};
pub use report::{CheckRecord, Comparison, Report};
pub use suites::run_suite;
