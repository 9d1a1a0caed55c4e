//! Default tolerances for every suite check, with their origin.
//!
//! Three regimes appear. Exact-to-roundoff checks (group laws, lattice
//! Fourier pairs, phase bookkeeping without a solver in the loop) get
//! 1e-12: f64 arithmetic with compositions of a handful of operations.
//! Spectral-grid measurements on contained states (bracket residuals,
//! multiplier phases) get 1e-6: dominated by containment tails and, where a
//! time translation enters, by the splitting error at the budgeted step.
//! Integrator budgets (energy drift, ζ quadrature, classical covariance)
//! follow the fixed-step RK4/Simpson convergence at dt = 1e-3.
//!
//! Every value can be overridden per key in the scenario config and scaled
//! globally with `--tolerance-scale`.

/// Relative tolerance for group-law and cocycle identities.
pub const GROUP_EXACT: f64 = 1e-12;

/// Free-Gaussian solver oracle, L² at t = 1, 1024 points, dt = 1e-3.
pub const SOLVER_L2: f64 = 1e-6;

/// Minimum measured convergence order of the splitting in dt.
pub const SOLVER_ORDER_FLOOR: f64 = 1.9;

/// Solution-map residual for translations/boosts on free and harmonic-pair
/// potentials.
pub const SOLUTION_MAP: f64 = 1e-6;

/// Phase agreement for multiplier measurements, radians.
pub const PHASE: f64 = 1e-6;

/// Unitarity / norm preservation drifts.
pub const UNITARITY: f64 = 1e-12;

/// Hilbert-space bracket residuals on contained Gaussians.
pub const BRACKET: f64 = 1e-6;

/// Casimir vanishing and eigenvalue checks.
pub const CASIMIR: f64 = 1e-6;

/// Casimir–generator commutation, relative to the compositions subtracted.
pub const CASIMIR_COMMUTATOR: f64 = 1e-5;

/// Envelope constant for the O(ε) group-level probe: error(ε) ≤ C·ε over
/// ε ∈ {1e-2, 1e-3, 1e-4}.
pub const PROBE_ENVELOPE: f64 = 50.0;

/// Richardson-extrapolated probe accuracy at ε = 1e-3.
pub const PROBE_EXTRAPOLATED: f64 = 1e-6;

/// Classical energy drift over t = 10 at dt = 1e-3 (relative).
pub const ENERGY_DRIFT: f64 = 1e-8;

/// Integrator ζ against the composite-Simpson quadrature.
pub const ZETA_CONSISTENCY: f64 = 1e-8;

/// Classical covariance residual without time shifts.
pub const COVARIANCE: f64 = 1e-7;

/// Classical covariance residual with time shifts in ḡ.
pub const COVARIANCE_TIME: f64 = 1e-6;

/// Representation residual on multi-slice states, no time shifts.
pub const REPRESENTATION: f64 = 1e-10;

/// Representation residual with time shifts (solver budget).
pub const REPRESENTATION_TIME: f64 = 1e-6;

/// Exact-lattice fiber identities (round trip, ζ-shift duality, kernel).
pub const FIBER_EXACT: f64 = 1e-12;

/// Potential invariance under rotations/translations (relative).
pub const POTENTIAL_INVARIANCE: f64 = 1e-12;

/// Analytic-gradient versus finite-difference agreement (relative).
pub const GRADIENT_FD: f64 = 1e-6;

/// Free classical flow against the closed form (RK4 is exact there).
pub const FREE_FLOW: f64 = 1e-12;
