//! Interaction potentials V({x⃗ᵢ}, {mᵢ}).
//!
//! A potential is Galilei invariant exactly when it depends on positions only
//! through the pairwise distances rᵢⱼ = |x⃗ᵢ − x⃗ⱼ|. The built-ins cover the
//! zero potential, a pairwise harmonic spring, and a softened pairwise
//! power law g·mᵢmⱼ·(rᵢⱼ² + ε_c²)^{s/2} (s = −1 is gravity-like). A harmonic
//! trap is provided as well; it is *not* Galilei invariant and exists for
//! oscillator oracles.

use alloc::vec;
use alloc::vec::Vec;
#[cfg(not(feature = "std"))]
#[allow(unused_imports)]
use num_traits::Float;

/// Interaction potential over n particles in D dimensions.
///
/// `grad_x` and `grad_m` return analytic gradients; the test suites check
/// them against central finite differences of `eval`.
pub trait Potential<const D: usize> {
    fn eval(&self, x: &[[f64; D]], m: &[f64]) -> f64;

    /// ∇ₓᵢ V for every particle.
    fn grad_x(&self, x: &[[f64; D]], m: &[f64]) -> Vec<[f64; D]>;

    /// ∂V/∂mᵢ for every particle.
    fn grad_m(&self, x: &[[f64; D]], m: &[f64]) -> Vec<f64>;

    /// Whether the potential depends on positions only through pairwise
    /// distances. Symmetry operations require this.
    fn is_galilei_invariant(&self) -> bool;
}

/// V ≡ 0.
#[derive(Clone, Copy, Debug, Default)]
pub struct ZeroPotential;

impl<const D: usize> Potential<D> for ZeroPotential {
    fn eval(&self, _x: &[[f64; D]], _m: &[f64]) -> f64 {
        0.0
    }

    fn grad_x(&self, x: &[[f64; D]], _m: &[f64]) -> Vec<[f64; D]> {
        vec![[0.0; D]; x.len()]
    }

    fn grad_m(&self, x: &[[f64; D]], _m: &[f64]) -> Vec<f64> {
        vec![0.0; x.len()]
    }

    fn is_galilei_invariant(&self) -> bool {
        true
    }
}

/// ½ k Σ_{i<j} rᵢⱼ².
#[derive(Clone, Copy, Debug)]
pub struct PairwiseHarmonic {
    pub k: f64,
}

impl<const D: usize> Potential<D> for PairwiseHarmonic {
    fn eval(&self, x: &[[f64; D]], _m: &[f64]) -> f64 {
        let mut v = 0.0;
        for i in 0..x.len() {
            for j in (i + 1)..x.len() {
                let mut r2 = 0.0;
                for a in 0..D {
                    let d = x[i][a] - x[j][a];
                    r2 += d * d;
                }
                v += 0.5 * self.k * r2;
            }
        }
        v
    }

    fn grad_x(&self, x: &[[f64; D]], _m: &[f64]) -> Vec<[f64; D]> {
        let mut g = vec![[0.0; D]; x.len()];
        for i in 0..x.len() {
            for j in (i + 1)..x.len() {
                for a in 0..D {
                    let d = self.k * (x[i][a] - x[j][a]);
                    g[i][a] += d;
                    g[j][a] -= d;
                }
            }
        }
        g
    }

    fn grad_m(&self, x: &[[f64; D]], _m: &[f64]) -> Vec<f64> {
        vec![0.0; x.len()]
    }

    fn is_galilei_invariant(&self) -> bool {
        true
    }
}

/// g Σ_{i<j} mᵢmⱼ (rᵢⱼ² + ε_c²)^{s/2}.
///
/// The core radius ε_c keeps collision configurations finite; ε_c = 0
/// recovers the bare power law.
#[derive(Clone, Copy, Debug)]
pub struct PairwisePowerLaw {
    pub g: f64,
    pub exponent: f64,
    pub core_radius: f64,
}

impl PairwisePowerLaw {
    /// Gravity-like s = −1 with the default core radius 1e-3.
    pub fn gravity_like(g: f64) -> Self {
        Self {
            g,
            exponent: -1.0,
            core_radius: 1e-3,
        }
    }
}

impl<const D: usize> Potential<D> for PairwisePowerLaw {
    fn eval(&self, x: &[[f64; D]], m: &[f64]) -> f64 {
        let eps2 = self.core_radius * self.core_radius;
        let mut v = 0.0;
        for i in 0..x.len() {
            for j in (i + 1)..x.len() {
                let mut r2 = eps2;
                for a in 0..D {
                    let d = x[i][a] - x[j][a];
                    r2 += d * d;
                }
                v += self.g * m[i] * m[j] * r2.powf(0.5 * self.exponent);
            }
        }
        v
    }

    fn grad_x(&self, x: &[[f64; D]], m: &[f64]) -> Vec<[f64; D]> {
        let eps2 = self.core_radius * self.core_radius;
        let mut g = vec![[0.0; D]; x.len()];
        for i in 0..x.len() {
            for j in (i + 1)..x.len() {
                let mut r2 = eps2;
                for a in 0..D {
                    let d = x[i][a] - x[j][a];
                    r2 += d * d;
                }
                // d/dxᵢ (r²)^{s/2} = s (r²)^{s/2−1} (xᵢ − xⱼ)
                let c = self.g * m[i] * m[j] * self.exponent * r2.powf(0.5 * self.exponent - 1.0);
                for a in 0..D {
                    let d = c * (x[i][a] - x[j][a]);
                    g[i][a] += d;
                    g[j][a] -= d;
                }
            }
        }
        g
    }

    fn grad_m(&self, x: &[[f64; D]], m: &[f64]) -> Vec<f64> {
        let eps2 = self.core_radius * self.core_radius;
        let mut g = vec![0.0; x.len()];
        for i in 0..x.len() {
            for j in (i + 1)..x.len() {
                let mut r2 = eps2;
                for a in 0..D {
                    let d = x[i][a] - x[j][a];
                    r2 += d * d;
                }
                let p = self.g * r2.powf(0.5 * self.exponent);
                g[i] += m[j] * p;
                g[j] += m[i] * p;
            }
        }
        g
    }

    fn is_galilei_invariant(&self) -> bool {
        true
    }
}

/// ½ Σᵢ mᵢ ω² x⃗ᵢ². Not Galilei invariant; used by oscillator oracles.
#[derive(Clone, Copy, Debug)]
pub struct HarmonicTrap {
    pub omega: f64,
}

impl<const D: usize> Potential<D> for HarmonicTrap {
    fn eval(&self, x: &[[f64; D]], m: &[f64]) -> f64 {
        let w2 = self.omega * self.omega;
        let mut v = 0.0;
        for (xi, mi) in x.iter().zip(m) {
            let mut r2 = 0.0;
            for c in xi {
                r2 += c * c;
            }
            v += 0.5 * mi * w2 * r2;
        }
        v
    }

    fn grad_x(&self, x: &[[f64; D]], m: &[f64]) -> Vec<[f64; D]> {
        let w2 = self.omega * self.omega;
        x.iter()
            .zip(m)
            .map(|(xi, mi)| {
                let mut g = [0.0; D];
                for a in 0..D {
                    g[a] = mi * w2 * xi[a];
                }
                g
            })
            .collect()
    }

    fn grad_m(&self, x: &[[f64; D]], _m: &[f64]) -> Vec<f64> {
        let w2 = self.omega * self.omega;
        x.iter()
            .map(|xi| {
                let mut r2 = 0.0;
                for c in xi {
                    r2 += c * c;
                }
                0.5 * w2 * r2
            })
            .collect()
    }

    fn is_galilei_invariant(&self) -> bool {
        false
    }
}
