use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Error, Debug, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("index {index} out of range (limit {limit})")]
    IndexOutOfRange { index: usize, limit: usize },
    #[error("division by zero")]
    DivisionByZero,
    #[error("scalar is not invertible in the exact tower")]
    NotInvertible,
    #[error("power does not stay inside the exact tower")]
    UnsupportedPower,
    #[error("excluded superdimension M = {0} (M ∈ -2N+2)")]
    ExcludedSuperdimension(i64),
    #[error("operation requires Hermitian dimensions (even bosonic dimension)")]
    NotHermitian,
    #[error("operation requires m > n, got m = {m}, n = {n}")]
    RequiresMGreaterN { m: usize, n: usize },
    #[error("singular evaluation: negative radial power at the origin")]
    SingularEvaluation,
    #[error("argument must be even (no odd Grassmann part)")]
    NotEven,
    #[error("unsupported body shape: {0}")]
    UnsupportedBody(String),
    #[error("not enough Taylor coefficients: need {need}, got {got}")]
    NotEnoughCoefficients { need: usize, got: usize },
    #[error("expression carries Clifford generators where none are allowed")]
    NotCliffordScalar,
    #[error("distribution product not on the restricted whitelist: {0}")]
    ProductNotWhitelisted(String),
    #[error("phase function not supported here: {0}")]
    UnsupportedPhase(String),
    #[error("evaluation point lies on the boundary body")]
    PointOnBoundary,
    #[error("function is not holomorphic")]
    NotHolomorphic,
    #[error("quadrature error: {0}")]
    Quadrature(String),
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
}
