use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("invalid structure spec: {0}")]
    InvalidSpec(String),

    #[error("material {0} has no refining data")]
    InvalidMaterial(String),

    #[error("unknown body: {0}")]
    UnknownBody(String),

    #[error("unknown material: {0}")]
    UnknownMaterial(String),

    #[error("unknown scenario: {0}")]
    UnknownScenario(String),

    #[error("unresolvable parameter path: {0}")]
    UnknownParameter(String),

    #[error("unknown claim path: {0}")]
    UnknownClaimPath(String),

    #[error("configuration error: {0}")]
    Config(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit code for the CLI. Distinct classes get distinct codes so
    /// callers can tell a bad flag from a bad config file.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Io(_) => 3,
            Error::Config(_) => 4,
            Error::UnknownScenario(_) | Error::UnknownBody(_) | Error::UnknownMaterial(_) => 5,
            Error::UnknownParameter(_) | Error::UnknownClaimPath(_) => 6,
            _ => 1,
        }
    }
}
