use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("variable index {index} out of range for dimension {n}")]
    VariableOutOfRange { index: usize, n: usize },

    #[error("division by zero")]
    DivisionByZero,

    #[error("polynomial must be non-constant")]
    ConstantPolynomial,

    #[error("polynomial must be non-zero")]
    ZeroPolynomial,

    #[error("point has non-finite coordinates")]
    NonFinitePoint,

    #[error("expected a form of degree {expected}, found degree {found}")]
    FormDegree { expected: usize, found: usize },

    #[error("cannot contract a 0-form")]
    ContractZeroForm,

    #[error("not a singular point: the form does not vanish there")]
    NotSingular,

    #[error("matrix is not skew-symmetric at ({row}, {col})")]
    NotSkew { row: usize, col: usize },

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("{0}")]
    InvalidArgument(String),

    #[error("clearance {clearance:e} unattainable: {diagnostic}")]
    ClearanceUnattainable { clearance: f64, diagnostic: String },
}

impl Error {
    pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
        if expected == found {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected, found })
        }
    }
}
