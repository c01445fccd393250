use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    DimensionMismatch { context: &'static str, expected: usize, found: usize },

    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("bracket entry ({i}, {j}) must satisfy i < j")]
    NotUpperEntry { i: usize, j: usize },

    #[error("Jacobi identity fails on basis triple ({x}, {y}, {z})")]
    JacobiViolation { x: usize, y: usize, z: usize },

    #[error("{what} fails: {failing}")]
    AxiomFailure { what: &'static str, failing: String },

    #[error("operation needs cochains of degree at least 1; use the degree-0 bracket path")]
    DegreeZeroOperand,

    #[error("degree {degree} exceeds the configured cap {cap}")]
    DegreeAboveCap { degree: usize, cap: usize },

    #[error("resource cap exceeded for {what}: requested {requested}, cap {cap}")]
    ResourceCap { what: &'static str, requested: u128, cap: u128 },

    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn check_dim(context: &'static str, expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { context, expected, found })
    }
}
