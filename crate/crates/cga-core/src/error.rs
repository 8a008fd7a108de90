use std::fmt;

/// Library error type.
#[derive(Debug)]
pub enum Error {
    /// The orbit collapsed to a fixed point or a constant segment, so it
    /// cannot seed a population.
    Degenerate { map: &'static str, detail: String },
    /// The orbit left the admissible region or stopped being finite.
    Diverged { map: &'static str, detail: String },
    /// A configuration value is out of range or internally inconsistent.
    InvalidConfig(String),
    /// The requested operation does not exist for this generator.
    Unsupported(String),
    Io(std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Degenerate { map, detail } => write!(f, "degenerate orbit ({map}): {detail}"),
            Error::Diverged { map, detail } => write!(f, "diverged orbit ({map}): {detail}"),
            Error::InvalidConfig(msg) => write!(f, "invalid config: {msg}"),
            Error::Unsupported(msg) => write!(f, "unsupported: {msg}"),
            Error::Io(e) => write!(f, "io: {e}"),
        }
    }
}

impl std::error::Error for Error {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            Error::Io(e) => Some(e),
            _ => None,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e)
    }
}
