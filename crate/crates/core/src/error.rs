use std::fmt;

/// Error type shared by all modules of the crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoreError {
    /// Operands live on spaces of different dimensions.
    DimensionMismatch { left: u32, right: u32 },
    /// A coordinate or basis index is outside `1..=dim`.
    IndexOutOfRange { index: u32, dim: u32 },
    /// An operation required a bivector (grade 2) input.
    NotABivector { grade: u32 },
    /// Wedge product left the affine (constant + linear) coefficient class.
    NonAffine,
    /// `from_bivector` needs purely linear grade-2 input.
    NotLinear,
    /// A matrix that had to be invertible is singular.
    SingularMatrix,
    /// The structure does not satisfy the Jacobi identity.
    NotJacobi,
    /// The structure is unimodular, so there is no modular part to split off.
    AlreadyUnimodular,
    /// The structure is not solvable.
    NotSolvable,
    /// Subspace arguments do not satisfy the required ideal/subalgebra or
    /// complementarity conditions.
    BadSubspaces(String),
    /// The map is not an involutive automorphism of the given structure.
    BadInvolution(String),
    /// A quadruple violates the matching invariants.
    BadQuadruple(String),
    /// Invalid classical-algebra specification.
    BadClassicalSpec(String),
    /// Base-lieon vertex data is malformed.
    BadLieon(String),
    /// The family is not mutually compatible.
    IncompatibleFamily(String),
    /// The family is not a cluster.
    NotACluster(String),
    /// The pencil/co-pencil condition does not hold.
    PencilViolation(String),
    /// Dimension guard for exhaustive enumeration exceeded.
    EnumerationGuard { n: u32, max: u32 },
    /// Could not parse a rational scalar.
    BadRational(String),
}

impl fmt::Display for CoreError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoreError::DimensionMismatch { left, right } => {
                write!(f, "dimension mismatch: {left} vs {right}")
            }
            CoreError::IndexOutOfRange { index, dim } => {
                write!(f, "index {index} out of range for dimension {dim}")
            }
            CoreError::NotABivector { grade } => {
                write!(f, "expected a bivector, got grade {grade}")
            }
            CoreError::NonAffine => write!(f, "wedge product leaves the affine coefficient class"),
            CoreError::NotLinear => write!(f, "expected purely linear coefficients"),
            CoreError::SingularMatrix => write!(f, "matrix is singular"),
            CoreError::NotJacobi => write!(f, "structure does not satisfy the Jacobi identity"),
            CoreError::AlreadyUnimodular => write!(f, "structure is already unimodular"),
            CoreError::NotSolvable => write!(f, "structure is not solvable"),
            CoreError::BadSubspaces(s) => write!(f, "bad subspaces: {s}"),
            CoreError::BadInvolution(s) => write!(f, "bad involution: {s}"),
            CoreError::BadQuadruple(s) => write!(f, "bad quadruple: {s}"),
            CoreError::BadClassicalSpec(s) => write!(f, "bad classical spec: {s}"),
            CoreError::BadLieon(s) => write!(f, "bad lieon: {s}"),
            CoreError::IncompatibleFamily(s) => write!(f, "incompatible family: {s}"),
            CoreError::NotACluster(s) => write!(f, "not a cluster: {s}"),
            CoreError::PencilViolation(s) => write!(f, "pencil condition violated: {s}"),
            CoreError::EnumerationGuard { n, max } => {
                write!(f, "enumeration guard: n = {n} exceeds the supported bound {max}")
            }
            CoreError::BadRational(s) => write!(f, "cannot parse rational: {s}"),
        }
    }
}

impl std::error::Error for CoreError {}
