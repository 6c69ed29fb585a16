use thiserror::Error;

use crate::linalg::Field;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(Field, Field),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is singular")]
    Singular,
    #[error("vector does not lie in the span of the basis")]
    NotInSpan,
    #[error("objects or morphisms belong to different backends")]
    BackendMismatch,
    #[error("`{op}` is not supported by the {backend} backend")]
    UnsupportedForBackend {
        op: &'static str,
        backend: &'static str,
    },
    #[error("invertibility check failed: {0}")]
    InvertibilityCheckFailed(String),
    #[error("schema error: {0}")]
    Schema(String),
    #[error("axiom `{axiom}` violated: {detail}")]
    Axiom { axiom: String, detail: String },
    #[error("syntax error at line {line}, column {col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("type mismatch in layer {layer}: {msg}")]
    TypeMismatch { layer: usize, msg: String },
    #[error("unknown coupon `{0}`")]
    UnknownCoupon(String),
    #[error("unknown object `{0}`")]
    UnknownObject(String),
    #[error("slot error: {0}")]
    Slot(String),
    #[error("index error: {0}")]
    Index(String),
    #[error("intermediate dimension {dim} exceeds the cap of {cap}")]
    DimensionCap { dim: usize, cap: usize },
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
