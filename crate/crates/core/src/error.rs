use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// Caller supplied something outside the operation's domain.
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// No line of the requested direction satisfies the balance constraint.
    #[error("no {alpha}-balanced line exists for direction {angle}")]
    Infeasible { angle: f64, alpha: f64 },
    /// Rejection sampling gave up.
    #[error("instance generation failed after {rejects} rejected draws")]
    RejectionLimit { rejects: usize },
    /// A certificate the code relies on did not hold. Always a bug or a
    /// numerical breakdown, never bad user input.
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }

    /// True for errors caused by the caller rather than by the library.
    pub fn is_input_error(&self) -> bool {
        matches!(self, Error::InvalidInput(_) | Error::RejectionLimit { .. })
    }
}
