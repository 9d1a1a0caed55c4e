//! Fixed-mass quantum mechanics on periodic grids and its extension to
//! finite direct sums over a mass lattice.
//!
//! The crate provides the split-operator Schrödinger solver, the
//! phase-dressed Galilei action U_g with its measured multiplier phases,
//! the generators and Casimir elements of the extended algebra, and the
//! mass-fiber machinery on which the extension acts as a true (not merely
//! projective) representation.
//!
//! Wavefunctions are value types and every operation is a pure function
//! with a deterministic reduction order, so concurrent use on distinct
//! states is safe.

pub mod action;
pub mod error;
pub mod evolve;
pub mod fft;
pub mod fiber;
pub mod generators;
pub mod grid;
pub mod spectral;
pub mod wavefunction;

pub use action::{
    apply_u, apply_u_with_step, commutator_phase, composition_phase, solution_map_residual,
    superselection_demo, wrap_phase, PhaseComparison, SuperselectionPhases, ACTION_TIME_STEP,
};
pub use error::QuantumError;
pub use evolve::{apply_hamiltonian, evolve, hamiltonian_expectation};
pub use fiber::{
    analyze_zeta, apply_ubar, central_kernel_period, evolve_fiber, mass_expectation,
    projective_defect, pullback_extended, representation_residual, synthesize_zeta,
    MassFiberState, ZetaField,
};
pub use generators::{
    algebra_residual, apply_generator, casimir_commutator_residual, casimir_k, casimir_s2,
    GeneratorLabel,
};
pub use grid::{Axis, GridSpec};
pub use wavefunction::{make_gaussian, Wavefunction};
