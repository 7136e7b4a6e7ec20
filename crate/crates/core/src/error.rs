use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{function}: argument outside the domain ({detail})")]
    Domain {
        function: &'static str,
        detail: String,
    },

    #[error("{function}: pole at s = 1")]
    Pole { function: &'static str },

    #[error("{function}: singular at x = {x}")]
    Singularity { function: &'static str, x: f64 },

    #[error("{function}: degree {degree} exceeds the supported maximum {max}")]
    DegreeLimit {
        function: &'static str,
        degree: usize,
        max: usize,
    },

    #[error("quadrature did not converge after {levels} levels (best estimate {estimate:e}, last difference {last_diff:e})")]
    Quadrature {
        estimate: f64,
        levels: u32,
        last_diff: f64,
    },

    #[error("invalid options: {0}")]
    Options(String),

    #[error("unknown identity id `{id}`; valid ids: {valid}")]
    UnknownIdentity { id: String, valid: String },
}

impl Error {
    pub(crate) fn domain(function: &'static str, detail: impl Into<String>) -> Self {
        Error::Domain {
            function,
            detail: detail.into(),
        }
    }
}
