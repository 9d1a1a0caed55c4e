use clap::Parser;
use galilei_lab::{run_suite, ScenarioConfig, SUITES};
use std::path::PathBuf;
use std::process::ExitCode;

/// Run one verification suite and write its report.
///
/// Exit codes: 0 all checks pass, 1 at least one check failed (report still
/// written), 2 usage or configuration error.
#[derive(Parser, Debug)]
#[command(name = "galilei-lab", version, about)]
struct Cli {
    /// Suite to run: group-axioms | cocycle | classical-covariance |
    /// quantum-symmetry | algebra-casimir | superselection-demo |
    /// extended-representation
    suite: String,

    /// JSON scenario config; every key is optional and defaults are
    /// documented in the README.
    #[arg(long)]
    config: Option<PathBuf>,

    /// Overrides the config seed.
    #[arg(long)]
    seed: Option<u64>,

    /// Output directory for the report and data exports.
    #[arg(long)]
    out: Option<PathBuf>,

    /// Multiplies every tolerance.
    #[arg(long)]
    tolerance_scale: Option<f64>,
}

fn main() -> ExitCode {
    env_logger::init();
    let cli = Cli::parse();

    if !SUITES.contains(&cli.suite.as_str()) {
        eprintln!(
            "error: unknown suite `{}`; available: {}",
            cli.suite,
            SUITES.join(", ")
        );
        return ExitCode::from(2);
    }

    let mut config = match &cli.config {
        Some(path) => match ScenarioConfig::from_file(path) {
            Ok(config) => config,
            Err(err) => {
                eprintln!("error: {err:#}");
                return ExitCode::from(2);
            }
        },
        None => ScenarioConfig::default(),
    };
    if let Some(seed) = cli.seed {
        config.seed = seed;
    }
    if let Some(out) = &cli.out {
        config.output_dir = Some(out.clone());
    }
    if let Some(scale) = cli.tolerance_scale {
        config.tolerance_scale = scale;
    }
    if let Err(err) = config.validate() {
        eprintln!("error: {err:#}");
        return ExitCode::from(2);
    }

    let report = match run_suite(&cli.suite, &config) {
        Ok(report) => report,
        Err(err) => {
            eprintln!("error: {err:#}");
            return ExitCode::from(2);
        }
    };

    for line in report.summary_lines() {
        println!("{line}");
    }
    println!(
        "{}: {} ({} checks, {} ms, seed {})",
        report.suite,
        if report.passed { "PASS" } else { "FAIL" },
        report.checks.len(),
        report.wall_ms,
        report.seed
    );

    let out_dir = config
        .output_dir
        .clone()
        .unwrap_or_else(|| PathBuf::from("out"));
    let report_path = out_dir.join(format!("report-{}.json", report.suite));
    if let Err(err) = report.write(&report_path) {
        eprintln!("error: cannot write report: {err:#}");
        return ExitCode::from(2);
    }
    println!("report: {}", report_path.display());

    if report.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
