//! Galilei symmetry numerics: the proper Galilei group in d ∈ {1, 2, 3},
//! its ℝ-central extension, the multiplier cocycle with its coboundary
//! calculus, and n-particle Hamiltonian dynamics in which the masses are
//! promoted to momenta conjugate to new coordinates ζᵢ.
//!
//! The crate is `no_std`-compatible (`alloc` is required): disable the
//! default `std` feature and enable `libm` to get float math from
//! [`libm`](https://crates.io/crates/libm) instead of the standard library.
//!
//! Everything here is a pure function over immutable value types, so all
//! operations are safe to call concurrently from any number of threads.

#![cfg_attr(not(feature = "std"), no_std)]
#![forbid(unsafe_code)]

#[cfg(not(any(feature = "std", feature = "libm")))]
compile_error!("galilei-core requires either the `std` or the `libm` feature");

extern crate alloc;

pub mod algebra;
pub mod classical;
pub mod cocycle;
pub mod extended;
pub mod group;
pub mod potential;
pub mod rotation;

mod linalg;

pub use classical::{ClassicalState, Derivatives, DynamicsError};
pub use cocycle::{antisymmetric_defect, cocycle, cocycle_condition_residual, shifted_cocycle};
pub use extended::{ExtendedConfig, ExtendedElement};
pub use group::{GalileiElement, GroupError, SpacetimeConfig};
pub use potential::{HarmonicTrap, PairwiseHarmonic, PairwisePowerLaw, Potential, ZeroPotential};
pub use rotation::Rotation;
