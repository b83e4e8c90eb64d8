use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("state is not normalized (squared norm {norm_sqr})")]
    Normalization { norm_sqr: f64 },

    #[error("invalid density matrix: {0}")]
    InvalidDensity(String),

    #[error("imaginary residue {residue:e} in a real-valued expectation")]
    NumericIntegrity { residue: f64 },

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("line {line}: key `{key}`: {message}")]
    Parse {
        line: usize,
        key: String,
        message: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
