//! Acceptance suite: every criterion the laboratory must meet, one printed
//! pass/fail line per criterion, all tolerances pinned here in code.
//!
//! The criteria run through the same suite code paths the CLI uses, at the
//! default scenario (seed 42, 10⁴ group draws, 100 measured pairs).

use galilei_lab::{run_suite, CheckRecord, Report, ScenarioConfig};
use std::collections::BTreeMap;

struct Acceptance {
    reports: BTreeMap<&'static str, Report>,
    failures: Vec<String>,
}

impl Acceptance {
    fn new() -> Self {
        let config = ScenarioConfig::default();
        let mut reports = BTreeMap::new();
        for suite in [
            "group-axioms",
            "cocycle",
            "classical-covariance",
            "quantum-symmetry",
            "algebra-casimir",
            "superselection-demo",
            "extended-representation",
        ] {
            let report = run_suite(suite, &config).expect("suite runs");
            reports.insert(suite, report);
        }
        Self {
            reports,
            failures: Vec::new(),
        }
    }

    fn check(&self, suite: &str, name: &str) -> &CheckRecord {
        self.reports[suite]
            .checks
            .iter()
            .find(|c| c.name == name)
            .unwrap_or_else(|| panic!("{suite} has no check named {name}"))
    }

    /// Asserts the named check passed at exactly the pinned tolerance.
    fn require(&mut self, suite: &str, name: &str, pinned_tolerance: f64) -> bool {
        let check = self.check(suite, name).clone();
        let mut ok = check.pass;
        if (check.tolerance - pinned_tolerance).abs() > f64::EPSILON * pinned_tolerance.abs() {
            self.failures.push(format!(
                "{suite}/{name}: tolerance drifted to {:.3e} (pinned {:.3e})",
                check.tolerance, pinned_tolerance
            ));
            ok = false;
        }
        if !check.pass {
            self.failures.push(format!(
                "{suite}/{name}: measured {:.6e} vs predicted {:.6e} at tolerance {:.3e}",
                check.measured, check.predicted, check.tolerance
            ));
        }
        ok
    }

    fn criterion(&mut self, number: usize, description: &str, ok: bool) {
        println!(
            "criterion {number:2}: {} — {description}",
            if ok { "PASS" } else { "FAIL" }
        );
        if !ok {
            self.failures.push(format!("criterion {number} failed"));
        }
    }
}

#[test]
fn acceptance() {
    let mut a = Acceptance::new();

    let ok = ["associativity", "inverse-law", "spacetime-action-compatibility"]
        .iter()
        .all(|name| a.require("group-axioms", name, 1e-12))
        && [
            "extended-associativity",
            "extended-inverse-law",
            "extended-action-compatibility",
            "cocycle-condition",
        ]
        .iter()
        .all(|name| a.require("group-axioms", name, 1e-12));
    a.criterion(
        1,
        "group-axioms fuzz: 10⁴ random triples, laws and cocycle identity within 1e-12",
        ok,
    );

    let ok = a.require("cocycle", "antisymmetric-defect-value", 1e-12)
        && a.require("cocycle", "coboundary-invariance", 1e-12)
        && a.require("cocycle", "shifted-cocycle-condition", 1e-12);
    a.criterion(
        2,
        "cohomological non-triviality: antisymmetric defect survives 10³ coboundary shifts",
        ok,
    );

    let ok = a.require("quantum-symmetry", "free-gaussian-oracle", 1e-6)
        && a.require("quantum-symmetry", "splitting-order", 1.9);
    a.criterion(
        3,
        "solver oracle: free Gaussian L² ≤ 1e-6 at t=1 (1024 pts, dt=1e-3), order ≥ 1.9",
        ok,
    );

    let ok = a.require("quantum-symmetry", "solution-map-free", 1e-6)
        && a.require("quantum-symmetry", "solution-map-harmonic-pair", 1e-6);
    a.criterion(
        4,
        "symmetry of dynamics: solution-map residual ≤ 1e-6, free and harmonic pair",
        ok,
    );

    let ok = a.require("quantum-symmetry", "composition-phase", 1e-6)
        && a.require("quantum-symmetry", "commutator-phase-magnitude", 1e-6)
        && a.require("quantum-symmetry", "commutator-phase-linearity", 1e-6);
    a.criterion(
        5,
        "multiplier measurement: (M/ħ)ξ on 100 pairs, commutator magnitude, linear in M",
        ok,
    );

    let ok = [
        "brackets-free-line",
        "brackets-interacting-pair",
        "brackets-planar",
        "brackets-full-3d-basis",
    ]
    .iter()
    .all(|name| a.require("algebra-casimir", name, 1e-6))
        && a.require("algebra-casimir", "group-probe-envelope", 50.0)
        && a.require("algebra-casimir", "group-probe-extrapolated", 1e-6);
    a.criterion(
        6,
        "Lie algebra: all brackets ≤ 1e-6 on Hilbert space, group probe O(ε)-consistent",
        ok,
    );

    let ok = a.require("algebra-casimir", "s2-single-particle", 1e-6)
        && a.require("algebra-casimir", "k-single-free-particle", 1e-6)
        && a.require("algebra-casimir", "k-internal-ground-state", 1e-6)
        && a.require("algebra-casimir", "casimir-centrality", 1e-5);
    a.criterion(
        7,
        "Casimirs: S², free K vanish; K = (2M/ħ²)(ħω_red/2) on internal ground state",
        ok,
    );

    let ok = a.require("classical-covariance", "mass-conservation-bitwise", 0.0)
        && a.require("classical-covariance", "energy-drift-harmonic", 1e-8)
        && a.require("classical-covariance", "energy-drift-softened-power-law", 1e-8)
        && a.require("classical-covariance", "zeta-quadrature-consistency", 1e-8)
        && a.require("classical-covariance", "covariance-no-time-shift", 1e-7)
        && a.require("classical-covariance", "covariance-with-time-shift", 1e-6);
    a.criterion(
        8,
        "classical extension: bitwise masses, drift ≤ 1e-8, ζ ≤ 1e-8, covariance ≤ 1e-7/1e-6",
        ok,
    );

    let ok = a.require("superselection-demo", "equal-mass-relative-phase", 1e-6)
        && a.require("superselection-demo", "relative-phase-magnitude", 1e-6)
        && a.require("superselection-demo", "relative-phase-prediction", 1e-6)
        && a.require("superselection-demo", "relative-phase-linearity", 1e-6);
    a.criterion(
        9,
        "superselection phase: |M−M′||v′·a|/ħ within 1e-6, linear over a 5-point sweep",
        ok,
    );

    let ok = a.require("extended-representation", "true-representation", 1e-10)
        && a.require("extended-representation", "true-representation-time-shifts", 1e-6)
        && a.require("extended-representation", "projective-defect-phases", 1e-6);
    a.criterion(
        10,
        "true representation: residual ≤ 1e-10 (1e-6 with time shifts); defect returns without θ",
        ok,
    );

    let ok = a.require("extended-representation", "central-kernel-identity", 1e-12);
    a.criterion(11, "central kernel: θ = 2πħ/M acts as the identity within 1e-12", ok);

    let ok = a.require("extended-representation", "zeta-round-trip", 1e-12)
        && a.require("extended-representation", "zeta-shift-duality", 1e-12);
    a.criterion(
        12,
        "Fourier duality: synthesize/analyze round trip and ζ-shift phases within 1e-12",
        ok,
    );

    assert!(
        a.failures.is_empty(),
        "acceptance failures:\n{}",
        a.failures.join("\n")
    );
}
