use thiserror::Error;

/// Errors raised anywhere in the library.
///
/// [`Error::Internal`] marks a failed cross-check between two independent
/// computations that theory says must agree; everything else is a user or
/// precondition error.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch: Q(ζ_{0}) vs Q(ζ_{1}); lift explicitly first")]
    FieldMismatch(u32, u32),
    #[error("{0} is not a root of unity")]
    NotRootOfUnity(String),
    #[error("{0}")]
    InvalidArgument(String),
    #[error("parameter must be nonzero: {0}")]
    ZeroParameter(String),
    #[error("generator is not a graded automorphism: {0}")]
    NotAutomorphism(String),
    #[error("singular matrix cannot define an automorphism")]
    SingularMatrix,
    #[error("not a PBW presentation: {0}")]
    NotPbw(String),
    #[error("group order exceeds cap {0}")]
    CapExceeded(usize),
    #[error("element order exceeds cap {0}")]
    OrderCapExceeded(usize),
    #[error("required roots of unity are not in Q(ζ_{0}); use a larger root_of_unity_order")]
    FieldTooSmall(u32),
    #[error("input error at {path}: {message}")]
    Input { path: String, message: String },
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }

    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
