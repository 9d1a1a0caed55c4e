use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum QuantumError {
    #[error("unsupported grid layout: {particles} particles in dimension {dim}; supported are (n=1, d∈{{1,2,3}}) and (n=2, d=1)")]
    UnsupportedLayout { particles: usize, dim: usize },
    #[error("grid needs {expected} axes for {particles} particles in dimension {dim}, got {got}")]
    AxisCountMismatch {
        particles: usize,
        dim: usize,
        expected: usize,
        got: usize,
    },
    #[error("points per axis must be a power of two ≥ 16, got {points}")]
    BadAxisPoints { points: usize },
    #[error("axis length must be positive and finite, got {length}")]
    BadAxisLength { length: f64 },
    #[error("ħ must be positive and finite, got {hbar}")]
    BadHbar { hbar: f64 },
    #[error("grid capacity exceeded: {points} total points (limit {limit})")]
    CapacityExceeded { points: usize, limit: usize },
    #[error("expected {expected} masses, got {got}")]
    MassCountMismatch { expected: usize, got: usize },
    #[error("masses must be nonzero and finite, got {value} at index {index}")]
    BadMass { index: usize, value: f64 },
    #[error("group element dimension {element} does not match grid dimension {grid}")]
    DimensionMismatch { element: usize, grid: usize },
    #[error("wavefunctions live on different grids")]
    GridMismatch,
    #[error(
        "containment violated on axis {axis}: {detail} (boundary contamination would corrupt spectral derivatives)"
    )]
    Containment { axis: usize, detail: &'static str },
    #[error("state leaks into the boundary band (relative weight {weight:.3e} > {limit:.3e}); transported support must stay inside the box")]
    BoundaryLeak { weight: f64, limit: f64 },
    #[error("non-finite amplitudes encountered at step {step}")]
    NonFinite { step: usize },
    #[error("time step must be positive and finite, got {dt}")]
    BadTimeStep { dt: f64 },
    #[error("generator {label} is not available in dimension {dim}")]
    UnsupportedGenerator { label: &'static str, dim: usize },
    #[error("rotations on d=3 grids are unsupported; rotate algebraically instead")]
    UnsupportedRotation,
    #[error("spectral rotation requires a single particle on a square d=2 grid")]
    RotationNeedsSquareGrid,
    #[error("states differ beyond phase: overlap magnitude {overlap:.6} < 0.99, phase comparison is meaningless")]
    OverlapTooSmall { overlap: f64 },
    #[error("symmetry operations require a Galilei-invariant potential")]
    PotentialNotInvariant,
    #[error("mass {value} at slice {slice}, particle {particle} is off the ζ lattice (expected 2πħk/L_ζ, k a nonzero integer)")]
    OffLatticeMass {
        slice: usize,
        particle: usize,
        value: f64,
    },
    #[error("ζ grid too coarse: {points} points cannot represent lattice index {max_index} without aliasing (need ≥ {required})")]
    ZetaAliasing {
        points: usize,
        max_index: i64,
        required: usize,
    },
    #[error("mass fiber state needs at least one slice")]
    EmptyFiber,
    #[error("slice mass lists must be pairwise distinct (slices {first} and {second} coincide)")]
    DuplicateSlice { first: usize, second: usize },
    #[error("total mass must be nonzero")]
    ZeroTotalMass,
    #[error("ζ box length must be positive and finite, got {value}")]
    BadZetaLength { value: f64 },
}

pub type Result<T> = std::result::Result<T, QuantumError>;
