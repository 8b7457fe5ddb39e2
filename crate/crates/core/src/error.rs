use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{name} = {value} is outside its valid range {range}")]
    Domain {
        name: &'static str,
        value: f64,
        range: &'static str,
    },

    #[error("invalid {what}: {reason}")]
    Invalid { what: &'static str, reason: String },

    #[error("purification normalization vanished (N = {0})")]
    Degenerate(f64),

    #[error("{what} = {value} exceeds the supported limit {limit}")]
    TooLarge {
        what: &'static str,
        value: usize,
        limit: usize,
    },

    #[error("numerical check failed: {0}")]
    Numerical(String),

    #[error("unknown code label `{0}`")]
    UnknownCode(String),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_probability(name: &'static str, value: f64) -> Result<f64> {
    if (0.0..=1.0).contains(&value) {
        Ok(value)
    } else {
        Err(Error::Domain {
            name,
            value,
            range: "[0, 1]",
        })
    }
}
