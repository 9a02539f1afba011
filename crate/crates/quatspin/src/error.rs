use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("division by a zero quaternion")]
    ZeroDivision,

    #[error("zero spinor: (xi, eta) must not both vanish")]
    ZeroSpinor,

    #[error("not a spinor: condition `{condition}` has residual {residual:e}")]
    NotSpinor {
        condition: &'static str,
        residual: f64,
    },

    #[error("not a paravector: k-component {0:e}")]
    NotParavector(f64),

    #[error("column {column} is not a spinor (residual {residual:e})")]
    ColumnNotSpinor { column: usize, residual: f64 },

    #[error("pseudo-determinant differs from 1 by {0:e}")]
    PdetNotOne(f64),

    #[error("numerical drift {0:e} exceeds the re-projection bound")]
    Drift(f64),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("degenerate configuration: {0}")]
    Degenerate(String),

    #[error("undefined quasideterminant: entry {0} is zero")]
    UndefinedQuasideterminant(&'static str),

    #[error("invalid index: {0}")]
    Index(String),
}

pub type Result<T> = std::result::Result<T, Error>;
