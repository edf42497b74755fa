use std::path::Path;

/// Harness failure, split by the exit code it maps to.
#[derive(Debug, thiserror::Error)]
pub enum HarnessError {
    #[error("{0}")]
    Input(String),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T, E = HarnessError> = std::result::Result<T, E>;

impl HarnessError {
    pub fn input(msg: impl Into<String>) -> Self {
        HarnessError::Input(msg.into())
    }

    pub fn internal(msg: impl Into<String>) -> Self {
        HarnessError::Internal(msg.into())
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            HarnessError::Input(_) => 1,
            HarnessError::Internal(_) => 2,
        }
    }

    pub(crate) fn io(path: &Path, err: std::io::Error) -> Self {
        HarnessError::Input(format!("{}: {err}", path.display()))
    }
}

impl From<disksever_core::Error> for HarnessError {
    fn from(e: disksever_core::Error) -> Self {
        if e.is_input_error() {
            HarnessError::Input(e.to_string())
        } else {
            HarnessError::Internal(e.to_string())
        }
    }
}
