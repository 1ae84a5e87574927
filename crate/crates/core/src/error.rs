use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid argument `{name}`: {reason}")]
    InvalidArgument { name: &'static str, reason: String },

    #[error("matrix is not symmetric: |a[{row}][{col}] - a[{col}][{row}]| = {deviation:e}")]
    NotSymmetric {
        row: usize,
        col: usize,
        deviation: f64,
    },

    #[error("quadrature did not converge: estimate {estimate:e}, error {error_estimate:e} after {intervals} intervals")]
    QuadratureNotConverged {
        estimate: f64,
        error_estimate: f64,
        intervals: usize,
    },

    #[error("no sign change of {what} in [{lo}, {hi}]")]
    NoBracket {
        what: &'static str,
        lo: f64,
        hi: f64,
    },

    #[error("radial density has no interior maximum")]
    NoInteriorMaximum,

    #[error(
        "jacobi iteration did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})"
    )]
    EigenNotConverged { sweeps: usize, off_norm: f64 },

    #[error("unknown species `{name}`; catalog contains: {available}")]
    UnknownSpecies { name: String, available: String },

    #[error("species `{species}` does not support {what}")]
    Unsupported { species: String, what: &'static str },

    #[error("catalog line {line}: {reason}")]
    CatalogParse { line: usize, reason: String },

    #[error("{species}: {source}")]
    Species {
        species: String,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    pub(crate) fn invalid(name: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidArgument {
            name,
            reason: reason.into(),
        }
    }

    pub(crate) fn in_species(self, species: &str) -> Self {
        Error::Species {
            species: species.to_string(),
            source: Box::new(self),
        }
    }
}
