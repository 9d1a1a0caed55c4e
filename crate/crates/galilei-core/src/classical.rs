//! Hamiltonian dynamics of n particles with dynamical masses.
//!
//! The phase space carries, besides (x⃗ᵢ, p⃗ᵢ), the conjugate pairs (ζᵢ, mᵢ):
//! each mass is the momentum of its ζ coordinate. The Hamiltonian is the
//! ordinary H = Σ p⃗ᵢ²/2mᵢ + V, so the equations of motion are
//!
//! ```text
//! ṗᵢ = −∇ₓᵢV    ẋᵢ = p⃗ᵢ/mᵢ    ṁᵢ = 0    ζ̇ᵢ = ∂V/∂mᵢ − p⃗ᵢ²/2mᵢ²
//! ```
//!
//! Masses are exactly conserved, so the integrator copies them bitwise and
//! advances (x, p, ζ) with a fixed-step classical RK4. Because ζ̇ never feeds
//! back, the RK4 update of ζ is a Simpson-type quadrature of ζ̇ along the
//! trajectory; [`zeta_quadrature`] recomputes the same integral by composite
//! Simpson on the stored samples as an independent cross-check.

use crate::extended::ExtendedElement;
use crate::linalg;
use crate::potential::Potential;
use alloc::vec;
use alloc::vec::Vec;
#[cfg(not(feature = "std"))]
#[allow(unused_imports)]
use num_traits::Float;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DynamicsError {
    #[error("state lists must share one length (x: {x}, p: {p}, zeta: {zeta}, m: {m})")]
    LengthMismatch { x: usize, p: usize, zeta: usize, m: usize },
    #[error("mass {index} is zero; the kinetic term 1/2mᵢ is singular")]
    ZeroMass { index: usize },
    #[error("mass {index} is not strictly positive ({value}); use new_with_signed_masses to allow negative masses")]
    NonPositiveMass { index: usize, value: f64 },
    #[error("non-finite component in state")]
    NonFinite,
    #[error("state became non-finite at step {step}")]
    NonFiniteAtStep { step: usize },
    #[error("step size must be positive, got {dt}")]
    InvalidStep { dt: f64 },
    #[error("at least {required} trajectory samples required, got {got}")]
    TooFewSamples { required: usize, got: usize },
    #[error("trajectory is not uniformly sampled")]
    NonUniformSampling,
    #[error("horizon must be positive, got {horizon}")]
    InvalidHorizon { horizon: f64 },
    #[error("covariance checks require a Galilei-invariant potential")]
    PotentialNotInvariant,
}

/// Phase-space point of the extended system, including the time coordinate.
#[derive(Clone, Debug, PartialEq)]
pub struct ClassicalState<const D: usize> {
    pub x: Vec<[f64; D]>,
    pub p: Vec<[f64; D]>,
    pub zeta: Vec<f64>,
    pub m: Vec<f64>,
    pub t: f64,
}

impl<const D: usize> ClassicalState<D> {
    /// Default configuration: strictly positive masses.
    pub fn new(
        x: Vec<[f64; D]>,
        p: Vec<[f64; D]>,
        zeta: Vec<f64>,
        m: Vec<f64>,
        t: f64,
    ) -> Result<Self, DynamicsError> {
        let state = Self::new_with_signed_masses(x, p, zeta, m, t)?;
        if let Some((index, &value)) = state.m.iter().enumerate().find(|(_, &mi)| mi <= 0.0) {
            return Err(DynamicsError::NonPositiveMass { index, value });
        }
        Ok(state)
    }

    /// Permits negative masses (the mass axis is the whole real line);
    /// zero stays rejected since 1/2mᵢ is singular.
    pub fn new_with_signed_masses(
        x: Vec<[f64; D]>,
        p: Vec<[f64; D]>,
        zeta: Vec<f64>,
        m: Vec<f64>,
        t: f64,
    ) -> Result<Self, DynamicsError> {
        if x.len() != p.len() || x.len() != zeta.len() || x.len() != m.len() {
            return Err(DynamicsError::LengthMismatch {
                x: x.len(),
                p: p.len(),
                zeta: zeta.len(),
                m: m.len(),
            });
        }
        if let Some(index) = m.iter().position(|&mi| mi == 0.0) {
            return Err(DynamicsError::ZeroMass { index });
        }
        let finite = x.iter().all(linalg::all_finite)
            && p.iter().all(linalg::all_finite)
            && zeta.iter().all(|z| z.is_finite())
            && m.iter().all(|mi| mi.is_finite())
            && t.is_finite();
        if !finite {
            return Err(DynamicsError::NonFinite);
        }
        Ok(Self { x, p, zeta, m, t })
    }

    pub fn particle_count(&self) -> usize {
        self.x.len()
    }

    pub fn is_finite(&self) -> bool {
        self.x.iter().all(linalg::all_finite)
            && self.p.iter().all(linalg::all_finite)
            && self.zeta.iter().all(|z| z.is_finite())
            && self.t.is_finite()
    }
}

/// Time derivatives of a state; ṁᵢ is identically zero and included for
/// completeness of the record.
#[derive(Clone, Debug, PartialEq)]
pub struct Derivatives<const D: usize> {
    pub x_dot: Vec<[f64; D]>,
    pub p_dot: Vec<[f64; D]>,
    pub zeta_dot: Vec<f64>,
    pub m_dot: Vec<f64>,
}

/// H = Σ p⃗ᵢ²/2mᵢ + V({x⃗ᵢ}, {mᵢ}).
pub fn hamiltonian<const D: usize>(s: &ClassicalState<D>, v: &dyn Potential<D>) -> f64 {
    let mut h = v.eval(&s.x, &s.m);
    for (pi, mi) in s.p.iter().zip(&s.m) {
        h += linalg::norm_sq(pi) / (2.0 * mi);
    }
    h
}

/// Hamiltonian equations of motion.
pub fn time_derivatives<const D: usize>(
    s: &ClassicalState<D>,
    v: &dyn Potential<D>,
) -> Derivatives<D> {
    let grad_x = v.grad_x(&s.x, &s.m);
    let grad_m = v.grad_m(&s.x, &s.m);
    let n = s.particle_count();
    let mut x_dot = Vec::with_capacity(n);
    let mut p_dot = Vec::with_capacity(n);
    let mut zeta_dot = Vec::with_capacity(n);
    for i in 0..n {
        x_dot.push(linalg::scale(&s.p[i], 1.0 / s.m[i]));
        p_dot.push(linalg::neg(&grad_x[i]));
        zeta_dot.push(grad_m[i] - linalg::norm_sq(&s.p[i]) / (2.0 * s.m[i] * s.m[i]));
    }
    Derivatives {
        x_dot,
        p_dot,
        zeta_dot,
        m_dot: vec![0.0; n],
    }
}

/// Fixed-step RK4 over (x, p, ζ). Masses are copied unchanged; the returned
/// trajectory includes the initial state, so it has `steps + 1` entries.
/// Aborts with the step index if the state leaves the finite range.
pub fn integrate<const D: usize>(
    s0: &ClassicalState<D>,
    v: &dyn Potential<D>,
    dt: f64,
    steps: usize,
) -> Result<Vec<ClassicalState<D>>, DynamicsError> {
    if !(dt > 0.0) || !dt.is_finite() {
        return Err(DynamicsError::InvalidStep { dt });
    }
    if steps < 1 {
        return Err(DynamicsError::TooFewSamples { required: 1, got: steps });
    }
    let mut trajectory = Vec::with_capacity(steps + 1);
    trajectory.push(s0.clone());
    let mut current = s0.clone();
    for step in 0..steps {
        current = rk4_step(&current, v, dt);
        current.t = s0.t + (step + 1) as f64 * dt;
        if !current.is_finite() {
            return Err(DynamicsError::NonFiniteAtStep { step });
        }
        trajectory.push(current.clone());
    }
    Ok(trajectory)
}

fn rk4_step<const D: usize>(
    s: &ClassicalState<D>,
    v: &dyn Potential<D>,
    dt: f64,
) -> ClassicalState<D> {
    let k1 = time_derivatives(s, v);
    let k2 = time_derivatives(&offset(s, &k1, 0.5 * dt), v);
    let k3 = time_derivatives(&offset(s, &k2, 0.5 * dt), v);
    let k4 = time_derivatives(&offset(s, &k3, dt), v);
    let n = s.particle_count();
    let w = dt / 6.0;
    let mut out = s.clone();
    for i in 0..n {
        for a in 0..D {
            out.x[i][a] += w
                * (k1.x_dot[i][a] + 2.0 * k2.x_dot[i][a] + 2.0 * k3.x_dot[i][a] + k4.x_dot[i][a]);
            out.p[i][a] += w
                * (k1.p_dot[i][a] + 2.0 * k2.p_dot[i][a] + 2.0 * k3.p_dot[i][a] + k4.p_dot[i][a]);
        }
        out.zeta[i] += w
            * (k1.zeta_dot[i] + 2.0 * k2.zeta_dot[i] + 2.0 * k3.zeta_dot[i] + k4.zeta_dot[i]);
    }
    out
}

fn offset<const D: usize>(
    s: &ClassicalState<D>,
    d: &Derivatives<D>,
    h: f64,
) -> ClassicalState<D> {
    let mut out = s.clone();
    for i in 0..s.particle_count() {
        out.x[i] = linalg::add(&s.x[i], &linalg::scale(&d.x_dot[i], h));
        out.p[i] = linalg::add(&s.p[i], &linalg::scale(&d.p_dot[i], h));
        out.zeta[i] = s.zeta[i] + h * d.zeta_dot[i];
    }
    out
}

/// Composite-Simpson quadrature of ζ̇ᵢ = ∂V/∂mᵢ − ½ẋᵢ² along a uniformly
/// sampled trajectory. Returns Δζᵢ(t_j) = ∫_{t₀}^{t_j} ζ̇ᵢ dt′ for every
/// sample, indexed `[sample][particle]`; the first entry is all zeros.
///
/// This is an independent route to the ζ update the integrator performs and
/// the two agree at the quadrature order (both are fourth order in dt).
pub fn zeta_quadrature<const D: usize>(
    trajectory: &[ClassicalState<D>],
    v: &dyn Potential<D>,
) -> Result<Vec<Vec<f64>>, DynamicsError> {
    if trajectory.len() < 3 {
        return Err(DynamicsError::TooFewSamples {
            required: 3,
            got: trajectory.len(),
        });
    }
    let dt = trajectory[1].t - trajectory[0].t;
    if !(dt > 0.0) {
        return Err(DynamicsError::NonUniformSampling);
    }
    for w in trajectory.windows(2) {
        if ((w[1].t - w[0].t) - dt).abs() > 1e-9 * dt.max(1.0) {
            return Err(DynamicsError::NonUniformSampling);
        }
    }
    let n = trajectory[0].particle_count();
    let rates: Vec<Vec<f64>> = trajectory
        .iter()
        .map(|s| time_derivatives(s, v).zeta_dot)
        .collect();
    let mut out = vec![vec![0.0; n]; trajectory.len()];
    for i in 0..n {
        let samples: Vec<f64> = rates.iter().map(|r| r[i]).collect();
        let integral = cumulative_simpson(&samples, dt);
        for (j, value) in integral.into_iter().enumerate() {
            out[j][i] = value;
        }
    }
    Ok(out)
}

/// Cumulative composite Simpson rule on uniform samples. Odd-index partial
/// sums integrate the local interpolating parabola over the trailing single
/// interval, keeping the result fourth-order accurate at every sample.
fn cumulative_simpson(f: &[f64], h: f64) -> Vec<f64> {
    let mut out = vec![0.0; f.len()];
    for j in 1..f.len() {
        if j % 2 == 0 {
            out[j] = out[j - 2] + h / 3.0 * (f[j - 2] + 4.0 * f[j - 1] + f[j]);
        } else if j + 1 < f.len() {
            out[j] = out[j - 1] + h / 12.0 * (5.0 * f[j - 1] + 8.0 * f[j] - f[j + 1]);
        } else {
            out[j] = out[j - 1] + h / 12.0 * (-f[j - 2] + 8.0 * f[j - 1] + 5.0 * f[j]);
        }
    }
    out
}

/// Action of ḡ = (θ, g) on a classical state:
/// x′ᵢ = Rx⃗ᵢ + v⃗t + a⃗, p′ᵢ = Rp⃗ᵢ + mᵢv⃗, ζ′ᵢ = ζᵢ − (θ + v⃗·Rx⃗ᵢ + ½v⃗²t),
/// m′ᵢ = mᵢ, t′ = t + b.
pub fn transform_state<const D: usize>(
    gbar: &ExtendedElement<D>,
    s: &ClassicalState<D>,
) -> ClassicalState<D> {
    let g = &gbar.g;
    let drift = linalg::scale(&g.boost, s.t);
    let half_v2_t = 0.5 * linalg::norm_sq(&g.boost) * s.t;
    let n = s.particle_count();
    let mut x = Vec::with_capacity(n);
    let mut p = Vec::with_capacity(n);
    let mut zeta = Vec::with_capacity(n);
    for i in 0..n {
        let rx = g.rotation.apply(&s.x[i]);
        x.push(linalg::add(&linalg::add(&rx, &g.translation), &drift));
        p.push(linalg::add(
            &g.rotation.apply(&s.p[i]),
            &linalg::scale(&g.boost, s.m[i]),
        ));
        zeta.push(s.zeta[i] - (gbar.theta + linalg::dot(&g.boost, &rx) + half_v2_t));
    }
    ClassicalState {
        x,
        p,
        zeta,
        m: s.m.clone(),
        t: s.t + g.time_shift,
    }
}

/// Largest componentwise discrepancy between evolving-then-transforming and
/// transforming-then-evolving over a horizon T (the flow is autonomous, so a
/// time shift in ḡ only relabels the clock; both paths end at the same t).
pub fn covariance_residual<const D: usize>(
    gbar: &ExtendedElement<D>,
    s0: &ClassicalState<D>,
    v: &dyn Potential<D>,
    horizon: f64,
    dt: f64,
) -> Result<f64, DynamicsError> {
    if !(horizon > 0.0) {
        return Err(DynamicsError::InvalidHorizon { horizon });
    }
    if !v.is_galilei_invariant() {
        return Err(DynamicsError::PotentialNotInvariant);
    }
    let steps = (horizon / dt).round().max(1.0) as usize;
    let dt_eff = horizon / steps as f64;

    let forward = integrate(s0, v, dt_eff, steps)?;
    let evolved_then_transformed = transform_state(gbar, forward.last().expect("nonempty"));

    let transformed = transform_state(gbar, s0);
    let back = integrate(&transformed, v, dt_eff, steps)?;
    let transformed_then_evolved = back.last().expect("nonempty");

    Ok(state_distance(&evolved_then_transformed, transformed_then_evolved))
}

/// Max componentwise distance over x, p, ζ and t.
pub fn state_distance<const D: usize>(a: &ClassicalState<D>, b: &ClassicalState<D>) -> f64 {
    let mut d: f64 = (a.t - b.t).abs();
    for i in 0..a.particle_count() {
        for c in 0..D {
            d = d.max((a.x[i][c] - b.x[i][c]).abs());
            d = d.max((a.p[i][c] - b.p[i][c]).abs());
        }
        d = d.max((a.zeta[i] - b.zeta[i]).abs());
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::potential::{HarmonicTrap, PairwiseHarmonic, ZeroPotential};

    fn free_particle(p0: f64, m0: f64) -> ClassicalState<1> {
        ClassicalState::new(vec![[0.0]], vec![[p0]], vec![0.0], vec![m0], 0.0).unwrap()
    }

    #[test]
    fn hamiltonian_examples() {
        let s = free_particle(0.0, 1.0);
        assert_eq!(hamiltonian(&s, &ZeroPotential), 0.0);
        let s = ClassicalState::<3>::new(
            vec![[0.0; 3]],
            vec![[2.0, 0.0, 0.0]],
            vec![0.0],
            vec![1.0],
            0.0,
        )
        .unwrap();
        assert_eq!(hamiltonian(&s, &ZeroPotential), 2.0);
    }

    #[test]
    fn zero_mass_rejected() {
        assert!(matches!(
            ClassicalState::<1>::new_with_signed_masses(
                vec![[0.0]],
                vec![[0.0]],
                vec![0.0],
                vec![0.0],
                0.0
            ),
            Err(DynamicsError::ZeroMass { index: 0 })
        ));
        assert!(matches!(
            ClassicalState::<1>::new(vec![[0.0]], vec![[0.0]], vec![0.0], vec![-1.0], 0.0),
            Err(DynamicsError::NonPositiveMass { .. })
        ));
        assert!(ClassicalState::<1>::new_with_signed_masses(
            vec![[0.0]],
            vec![[0.0]],
            vec![0.0],
            vec![-1.0],
            0.0
        )
        .is_ok());
    }

    #[test]
    fn free_particle_zeta_rate() {
        // p = 2, m = 1 in one dimension: ζ̇ = −p²/2m² = −2.
        let s = free_particle(2.0, 1.0);
        let d = time_derivatives(&s, &ZeroPotential);
        assert_eq!(d.zeta_dot[0], -2.0);
        assert_eq!(d.m_dot[0], 0.0);
        assert_eq!(d.p_dot[0], [0.0]);
    }

    #[test]
    fn free_flow_is_exact() {
        let s = free_particle(2.0, 4.0);
        let traj = integrate(&s, &ZeroPotential, 0.01, 100).unwrap();
        let end = traj.last().unwrap();
        // x(t) = x₀ + (p/m) t and ζ(t) = −(p²/2m²) t, exactly for RK4.
        assert!((end.x[0][0] - 0.5 * 1.0).abs() < 1e-13);
        assert!((end.zeta[0] - (-(4.0 / 32.0) * 1.0)).abs() < 1e-13);
        assert_eq!(end.m[0].to_bits(), s.m[0].to_bits());
    }

    #[test]
    fn quadrature_matches_integrator_for_harmonic_pair() {
        let s = ClassicalState::<1>::new(
            vec![[0.6], [-0.6]],
            vec![[0.3], [-0.3]],
            vec![0.0, 0.0],
            vec![1.0, 2.0],
            0.0,
        )
        .unwrap();
        let v = PairwiseHarmonic { k: 1.0 };
        let traj = integrate(&s, &v, 1e-3, 4000).unwrap();
        let q = zeta_quadrature(&traj, &v).unwrap();
        for (sample, dz) in traj.iter().zip(&q) {
            for i in 0..2 {
                let from_integrator = sample.zeta[i] - s.zeta[i];
                assert!(
                    (from_integrator - dz[i]).abs() < 1e-10,
                    "mismatch {} vs {}",
                    from_integrator,
                    dz[i]
                );
            }
        }
    }

    #[test]
    fn quadrature_needs_three_samples() {
        let s = free_particle(1.0, 1.0);
        let traj = integrate(&s, &ZeroPotential, 0.1, 1).unwrap();
        assert!(matches!(
            zeta_quadrature(&traj, &ZeroPotential),
            Err(DynamicsError::TooFewSamples { .. })
        ));
    }

    #[test]
    fn energy_conserved_in_trap() {
        let s = ClassicalState::<1>::new(vec![[1.0]], vec![[0.0]], vec![0.0], vec![1.0], 0.0)
            .unwrap();
        let v = HarmonicTrap { omega: 1.0 };
        let e0 = hamiltonian(&s, &v);
        let traj = integrate(&s, &v, 1e-3, 10_000).unwrap();
        let e1 = hamiltonian(traj.last().unwrap(), &v);
        assert!(((e1 - e0) / e0).abs() < 1e-10);
    }

    #[test]
    fn boost_transform_example() {
        // Pure boost v at t = 0 in one dimension: p′ = p + mv, ζ′ = ζ − vx.
        let s = ClassicalState::<1>::new(vec![[3.0]], vec![[0.5]], vec![1.0], vec![2.0], 0.0)
            .unwrap();
        let gbar = ExtendedElement::from_galilei(crate::group::GalileiElement::boost([0.7]));
        let out = transform_state(&gbar, &s);
        assert!((out.p[0][0] - (0.5 + 2.0 * 0.7)).abs() < 1e-15);
        assert!((out.zeta[0] - (1.0 - 0.7 * 3.0)).abs() < 1e-15);
        assert_eq!(out.x[0][0], 3.0);
    }

    #[test]
    fn covariance_free_boost() {
        let s = free_particle(1.0, 1.0);
        let gbar = ExtendedElement::from_galilei(crate::group::GalileiElement::boost([0.4]));
        let r = covariance_residual(&gbar, &s, &ZeroPotential, 1.0, 1e-3).unwrap();
        assert!(r < 1e-10, "residual {r}");
    }

    #[test]
    fn covariance_rejects_trap_potential() {
        let s = free_particle(1.0, 1.0);
        let gbar = ExtendedElement::from_galilei(crate::group::GalileiElement::boost([0.4]));
        assert!(matches!(
            covariance_residual(&gbar, &s, &HarmonicTrap { omega: 1.0 }, 1.0, 1e-3),
            Err(DynamicsError::PotentialNotInvariant)
        ));
    }
}
