use std::fmt;

/// A failed command, classified by exit status.
#[derive(Debug)]
pub enum Failure {
    Validation(anyhow::Error),
    Runtime(anyhow::Error),
    /// The report has already been printed.
    Verification,
}

impl Failure {
    pub fn code(&self) -> u8 {
        match self {
            Failure::Validation(_) => 1,
            Failure::Runtime(_) => 2,
            Failure::Verification => 3,
        }
    }

    pub fn message(&self) -> Option<&anyhow::Error> {
        match self {
            Failure::Validation(e) | Failure::Runtime(e) => Some(e),
            Failure::Verification => None,
        }
    }

    pub fn validation(msg: impl fmt::Display) -> Self {
        Failure::Validation(anyhow::anyhow!("{msg}"))
    }
}

/// Bad parameters and bad instance documents are the caller's fault;
/// everything else happened while running.
impl From<ossmax::Error> for Failure {
    fn from(e: ossmax::Error) -> Self {
        use ossmax::Error::*;
        match e {
            InvalidParameter { .. } | DimensionMismatch { .. } | EmptyBasis | Instance(_) => {
                Failure::Validation(e.into())
            }
            NonFinite { .. } | RoundCapExceeded { .. } | GridBudget { .. } => {
                Failure::Runtime(e.into())
            }
        }
    }
}

pub type CmdResult = Result<(), Failure>;

/// Attach context to I/O errors, which count as runtime failures.
pub trait IoContext<T> {
    fn io(self, what: impl fmt::Display) -> Result<T, Failure>;
}

impl<T, E: Into<anyhow::Error>> IoContext<T> for Result<T, E> {
    fn io(self, what: impl fmt::Display) -> Result<T, Failure> {
        self.map_err(|e| Failure::Runtime(e.into().context(what.to_string())))
    }
}
