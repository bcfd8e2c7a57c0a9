use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("level {level} exceeds the configured maximum {max}")]
    LevelTooHigh { level: u32, max: u32 },

    #[error("invalid mode: {0}")]
    InvalidMode(String),

    #[error("pentad signature {found} does not match the required {expected}")]
    Signature { expected: String, found: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("usage: {0}")]
    Usage(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    pub(crate) fn parse(input: &str, reason: impl Into<String>) -> Self {
        Error::Parse {
            input: input.to_owned(),
            reason: reason.into(),
        }
    }

    /// Errors caused by the caller's arguments rather than by a failed check.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Error::Parse { .. }
                | Error::LevelTooHigh { .. }
                | Error::Usage(_)
                | Error::InvalidMode(_)
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
