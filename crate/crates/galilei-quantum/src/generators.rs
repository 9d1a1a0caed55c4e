//! Infinitesimal generators of the extended Galilei action on grid states,
//! bracket residuals, and the Casimir elements.
//!
//! ```text
//! D⃗ = −Σᵢ x⃗ᵢ×∇ᵢ    V⃗ = (i/ħ) M R⃗    A⃗ = −Σᵢ ∇ᵢ    B = (i/ħ) H    Z = (i/ħ) M
//! S⃗² = (Z D⃗ − V⃗×A⃗)²    K = A⃗² − 2ZB
//! ```
//!
//! All generators are anti-hermitian, position-weighted ones use the
//! box-centered chart and require contained states.

use crate::error::{QuantumError, Result};
use crate::evolve::apply_hamiltonian;
use crate::spectral::{derivative, multiply_coordinate};
use crate::wavefunction::Wavefunction;
use galilei_core::algebra::{bracket, AlgebraCoords, BasisLabel};
use galilei_core::Potential;
use num_complex::Complex64;

/// Generator label with a component index where applicable. In d = 2 there
/// is a single rotation generator, `Rotation(0)`, the in-plane one.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GeneratorLabel {
    Rotation(usize),
    Boost(usize),
    Translation(usize),
    Time,
    Central,
}

impl GeneratorLabel {
    /// Complete generator set available in dimension `dim`.
    pub fn all(dim: usize) -> Vec<GeneratorLabel> {
        let mut labels = Vec::new();
        match dim {
            2 => labels.push(GeneratorLabel::Rotation(0)),
            3 => (0..3).for_each(|c| labels.push(GeneratorLabel::Rotation(c))),
            _ => {}
        }
        for a in 0..dim {
            labels.push(GeneratorLabel::Boost(a));
        }
        for a in 0..dim {
            labels.push(GeneratorLabel::Translation(a));
        }
        labels.push(GeneratorLabel::Time);
        labels.push(GeneratorLabel::Central);
        labels
    }

    pub fn name(&self) -> String {
        match self {
            GeneratorLabel::Rotation(c) => format!("D{c}"),
            GeneratorLabel::Boost(a) => format!("V{a}"),
            GeneratorLabel::Translation(a) => format!("A{a}"),
            GeneratorLabel::Time => "B".into(),
            GeneratorLabel::Central => "Z".into(),
        }
    }

    fn validate(&self, dim: usize) -> Result<()> {
        let ok = match self {
            GeneratorLabel::Rotation(c) => match dim {
                2 => *c == 0,
                3 => *c < 3,
                _ => false,
            },
            GeneratorLabel::Boost(a) | GeneratorLabel::Translation(a) => *a < dim,
            GeneratorLabel::Time | GeneratorLabel::Central => true,
        };
        if ok {
            Ok(())
        } else {
            Err(QuantumError::UnsupportedGenerator {
                label: match self {
                    GeneratorLabel::Rotation(_) => "D",
                    GeneratorLabel::Boost(_) => "V",
                    GeneratorLabel::Translation(_) => "A",
                    GeneratorLabel::Time => "B",
                    GeneratorLabel::Central => "Z",
                },
                dim,
            })
        }
    }

    /// Embedding into the three-dimensional basis used by the exact bracket
    /// table: the d = 2 rotation generator is the one about the out-of-plane
    /// axis.
    fn to_basis(self, dim: usize) -> BasisLabel {
        match self {
            GeneratorLabel::Rotation(c) => {
                if dim == 2 {
                    BasisLabel::Rotation(2)
                } else {
                    BasisLabel::Rotation(c)
                }
            }
            GeneratorLabel::Boost(a) => BasisLabel::Boost(a),
            GeneratorLabel::Translation(a) => BasisLabel::Translation(a),
            GeneratorLabel::Time => BasisLabel::Time,
            GeneratorLabel::Central => BasisLabel::Central,
        }
    }
}

/// Coordinates of an exact bracket pulled back to the generators available
/// in dimension `dim`. The embedded labels close among themselves, so
/// components outside the subalgebra are always zero.
fn bracket_terms(
    x: GeneratorLabel,
    y: GeneratorLabel,
    dim: usize,
) -> Vec<(f64, GeneratorLabel)> {
    let coords: AlgebraCoords = bracket(x.to_basis(dim), y.to_basis(dim));
    let mut terms = Vec::new();
    for c in 0..3 {
        if coords.rotation[c] != 0.0 {
            let label = if dim == 2 {
                debug_assert_eq!(c, 2, "in-plane subalgebra closed");
                GeneratorLabel::Rotation(0)
            } else {
                GeneratorLabel::Rotation(c)
            };
            terms.push((coords.rotation[c], label));
        }
        if coords.boost[c] != 0.0 {
            debug_assert!(c < dim);
            terms.push((coords.boost[c], GeneratorLabel::Boost(c)));
        }
        if coords.translation[c] != 0.0 {
            debug_assert!(c < dim);
            terms.push((coords.translation[c], GeneratorLabel::Translation(c)));
        }
    }
    if coords.time != 0.0 {
        terms.push((coords.time, GeneratorLabel::Time));
    }
    if coords.central != 0.0 {
        terms.push((coords.central, GeneratorLabel::Central));
    }
    terms
}

/// Σᵢ mᵢ x_{i,component} · ψ.
fn mass_weighted_coordinate(psi: &Wavefunction, component: usize) -> Wavefunction {
    let grid = psi.grid();
    let mut acc: Option<Wavefunction> = None;
    for i in 0..grid.particles() {
        let term = multiply_coordinate(psi, grid.axis_of(i, component))
            .scaled(Complex64::new(psi.masses()[i], 0.0));
        acc = Some(match acc {
            None => term,
            Some(a) => a.add_scaled(Complex64::new(1.0, 0.0), &term).expect("same grid"),
        });
    }
    acc.expect("at least one particle")
}

/// Σᵢ ∂_{i,component} ψ.
fn summed_derivative(psi: &Wavefunction, component: usize) -> Wavefunction {
    let grid = psi.grid();
    let mut acc: Option<Wavefunction> = None;
    for i in 0..grid.particles() {
        let term = derivative(psi, grid.axis_of(i, component));
        acc = Some(match acc {
            None => term,
            Some(a) => a.add_scaled(Complex64::new(1.0, 0.0), &term).expect("same grid"),
        });
    }
    acc.expect("at least one particle")
}

/// Applies one generator. `Time` needs the potential; the rest ignore it.
pub fn apply_generator<const D: usize>(
    label: GeneratorLabel,
    psi: &Wavefunction,
    v: &dyn Potential<D>,
) -> Result<Wavefunction> {
    let grid = psi.grid();
    if grid.dim() != D {
        return Err(QuantumError::DimensionMismatch {
            element: D,
            grid: grid.dim(),
        });
    }
    label.validate(D)?;
    let hbar = grid.hbar();
    let i_over_hbar = Complex64::new(0.0, 1.0 / hbar);
    match label {
        GeneratorLabel::Rotation(c) => {
            // −Σᵢ (x⃗ᵢ×∇ᵢ)_c; in d = 2 the single component x∂_y − y∂_x.
            let (a, b) = if D == 2 { (0, 1) } else { ((c + 1) % 3, (c + 2) % 3) };
            let mut acc: Option<Wavefunction> = None;
            for i in 0..grid.particles() {
                let xa_db = multiply_coordinate(&derivative(psi, grid.axis_of(i, b)), grid.axis_of(i, a));
                let xb_da = multiply_coordinate(&derivative(psi, grid.axis_of(i, a)), grid.axis_of(i, b));
                let term = xb_da.add_scaled(Complex64::new(-1.0, 0.0), &xa_db)?;
                acc = Some(match acc {
                    None => term,
                    Some(s) => s.add_scaled(Complex64::new(1.0, 0.0), &term)?,
                });
            }
            Ok(acc.expect("at least one particle"))
        }
        GeneratorLabel::Boost(a) => Ok(mass_weighted_coordinate(psi, a).scaled(i_over_hbar)),
        GeneratorLabel::Translation(a) => {
            Ok(summed_derivative(psi, a).scaled(Complex64::new(-1.0, 0.0)))
        }
        GeneratorLabel::Time => Ok(apply_hamiltonian(psi, v)?.scaled(i_over_hbar)),
        GeneratorLabel::Central => {
            Ok(psi.clone().scaled(i_over_hbar * psi.total_mass()))
        }
    }
}

/// ‖[X, Y]ψ − (expected bracket)ψ‖ / ‖ψ‖ with the expected bracket read
/// from the exact structure constants (zero for unlisted pairs).
pub fn algebra_residual<const D: usize>(
    x: GeneratorLabel,
    y: GeneratorLabel,
    psi: &Wavefunction,
    v: &dyn Potential<D>,
) -> Result<f64> {
    let xy = apply_generator(x, &apply_generator(y, psi, v)?, v)?;
    let yx = apply_generator(y, &apply_generator(x, psi, v)?, v)?;
    let mut residual = xy.add_scaled(Complex64::new(-1.0, 0.0), &yx)?;
    for (coeff, label) in bracket_terms(x, y, D) {
        let term = apply_generator(label, psi, v)?;
        residual = residual.add_scaled(Complex64::new(-coeff, 0.0), &term)?;
    }
    Ok(residual.norm() / psi.norm())
}

/// One component of S⃗ = Z D⃗ − V⃗×A⃗ (the scalar S in d = 2).
fn apply_s_component<const D: usize>(
    c: usize,
    psi: &Wavefunction,
    v: &dyn Potential<D>,
) -> Result<Wavefunction> {
    let z_factor = Complex64::new(0.0, psi.total_mass() / psi.hbar());
    let zd = apply_generator(GeneratorLabel::Rotation(c), psi, v)?.scaled(z_factor);
    // (V⃗×A⃗)_c; in d = 2 the scalar V_x A_y − V_y A_x.
    let (a, b) = if D == 2 { (0, 1) } else { ((c + 1) % 3, (c + 2) % 3) };
    let va = apply_generator(
        GeneratorLabel::Boost(a),
        &apply_generator(GeneratorLabel::Translation(b), psi, v)?,
        v,
    )?;
    let vb = apply_generator(
        GeneratorLabel::Boost(b),
        &apply_generator(GeneratorLabel::Translation(a), psi, v)?,
        v,
    )?;
    let cross = va.add_scaled(Complex64::new(-1.0, 0.0), &vb)?;
    zd.add_scaled(Complex64::new(-1.0, 0.0), &cross)
}

/// S⃗²ψ = Σ_c S_c(S_c ψ). Requires d ≥ 2.
pub fn casimir_s2<const D: usize>(
    psi: &Wavefunction,
    v: &dyn Potential<D>,
) -> Result<Wavefunction> {
    if D < 2 {
        return Err(QuantumError::UnsupportedGenerator { label: "S²", dim: D });
    }
    let components = if D == 2 { 1 } else { 3 };
    let mut acc: Option<Wavefunction> = None;
    for c in 0..components {
        let sc = apply_s_component(c, psi, v)?;
        let sc2 = apply_s_component(c, &sc, v)?;
        acc = Some(match acc {
            None => sc2,
            Some(s) => s.add_scaled(Complex64::new(1.0, 0.0), &sc2)?,
        });
    }
    Ok(acc.expect("at least one component"))
}

/// Kψ = (A⃗² − 2ZB)ψ = Σ_a A_a(A_a ψ) + (2M/ħ²)Hψ.
pub fn casimir_k<const D: usize>(
    psi: &Wavefunction,
    v: &dyn Potential<D>,
) -> Result<Wavefunction> {
    let mut acc: Option<Wavefunction> = None;
    for a in 0..D {
        let aa = apply_generator(
            GeneratorLabel::Translation(a),
            &apply_generator(GeneratorLabel::Translation(a), psi, v)?,
            v,
        )?;
        acc = Some(match acc {
            None => aa,
            Some(s) => s.add_scaled(Complex64::new(1.0, 0.0), &aa)?,
        });
    }
    let a_sq = acc.expect("d ≥ 1");
    let h = apply_hamiltonian(psi, v)?;
    let scale = 2.0 * psi.total_mass() / (psi.hbar() * psi.hbar());
    a_sq.add_scaled(Complex64::new(scale, 0.0), &h)
}

/// ‖[C, X]ψ‖ normalized by the size of the two compositions being
/// subtracted, for a Casimir application `C` (closure) and generator X.
/// With C central the compositions cancel; the scale keeps the measure
/// meaningful when Cψ itself vanishes.
pub fn casimir_commutator_residual<const D: usize>(
    casimir: &dyn Fn(&Wavefunction) -> Result<Wavefunction>,
    x: GeneratorLabel,
    psi: &Wavefunction,
    v: &dyn Potential<D>,
) -> Result<f64> {
    let cx = casimir(&apply_generator(x, psi, v)?)?;
    let xc = apply_generator(x, &casimir(psi)?, v)?;
    let scale = cx.norm().max(xc.norm()).max(psi.norm());
    let diff = cx.add_scaled(Complex64::new(-1.0, 0.0), &xc)?;
    Ok(diff.norm() / scale)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::GridSpec;
    use crate::wavefunction::{make_gaussian, Wavefunction};
    use galilei_core::ZeroPotential;

    #[test]
    fn translation_generator_on_plane_wave() {
        let g = GridSpec::centered(1, 1, 64, 16.0, 1.0).unwrap();
        let k = 2.0 * std::f64::consts::PI * 3.0 / 16.0;
        let psi = Wavefunction::from_fn(g, vec![1.0], |x| Complex64::from_polar(1.0, k * x[0]))
            .unwrap();
        let a = apply_generator::<1>(GeneratorLabel::Translation(0), &psi, &ZeroPotential).unwrap();
        for (out, base) in a.amplitudes().iter().zip(psi.amplitudes().iter()) {
            assert!((out - Complex64::new(0.0, -k) * base).norm() < 1e-10);
        }
    }

    #[test]
    fn central_generator_scales() {
        let g = GridSpec::centered(1, 1, 64, 16.0, 2.0).unwrap();
        let psi = make_gaussian(&g, &[3.0], &[0.0], &[1.0], &[0.0]).unwrap();
        let z = apply_generator::<1>(GeneratorLabel::Central, &psi, &ZeroPotential).unwrap();
        let expected = psi.clone().scaled(Complex64::new(0.0, 3.0 / 2.0));
        assert!(z.distance(&expected).unwrap() < 1e-14);
    }

    #[test]
    fn generators_are_anti_hermitian() {
        let g = GridSpec::centered(1, 2, 64, 32.0, 1.0).unwrap();
        let psi = make_gaussian(&g, &[1.3], &[0.5, -0.4], &[1.1, 0.9], &[0.3, -0.2]).unwrap();
        for label in GeneratorLabel::all(2) {
            let xpsi = apply_generator::<2>(label, &psi, &ZeroPotential).unwrap();
            let sym = psi.inner(&xpsi).unwrap() + xpsi.inner(&psi).unwrap();
            assert!(
                sym.norm() < 1e-8,
                "{} not anti-hermitian: {sym}",
                label.name()
            );
        }
    }

    #[test]
    fn boost_translation_bracket_is_central() {
        let g = GridSpec::centered(1, 1, 256, 32.0, 1.0).unwrap();
        let psi = make_gaussian(&g, &[2.0], &[0.0], &[1.0], &[0.4]).unwrap();
        let r = algebra_residual::<1>(
            GeneratorLabel::Boost(0),
            GeneratorLabel::Translation(0),
            &psi,
            &ZeroPotential,
        )
        .unwrap();
        assert!(r < 1e-8, "residual {r}");
    }

    #[test]
    fn rejects_unavailable_rotation() {
        let g = GridSpec::centered(1, 1, 64, 16.0, 1.0).unwrap();
        let psi = make_gaussian(&g, &[1.0], &[0.0], &[1.0], &[0.0]).unwrap();
        assert!(matches!(
            apply_generator::<1>(GeneratorLabel::Rotation(0), &psi, &ZeroPotential),
            Err(QuantumError::UnsupportedGenerator { .. })
        ));
    }

    #[test]
    fn single_particle_s2_vanishes() {
        let g = GridSpec::centered(1, 2, 64, 32.0, 1.0).unwrap();
        let psi = make_gaussian(&g, &[1.7], &[1.0, -0.5], &[1.2, 1.4], &[0.2, 0.1]).unwrap();
        let s2 = casimir_s2::<2>(&psi, &ZeroPotential).unwrap();
        assert!(s2.norm() < 1e-6, "‖S²ψ‖ = {}", s2.norm());
    }

    #[test]
    fn single_free_particle_k_vanishes() {
        let g = GridSpec::centered(1, 1, 256, 32.0, 1.0).unwrap();
        let psi = make_gaussian(&g, &[1.3], &[0.5], &[1.0], &[0.6]).unwrap();
        let k = casimir_k::<1>(&psi, &ZeroPotential).unwrap();
        assert!(k.norm() < 1e-8, "‖Kψ‖ = {}", k.norm());
    }
}
