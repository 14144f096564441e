use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(String),

    #[error("{0}")]
    Usage(String),

    #[error("{0}")]
    Io(String),

    #[error("{0}")]
    MissingInput(String),

    #[error(transparent)]
    Analysis(#[from] noether_core::Error),
}

impl CliError {
    pub fn parse(msg: impl Into<String>) -> Self {
        CliError::Parse(msg.into())
    }

    pub fn usage(msg: impl Into<String>) -> Self {
        CliError::Usage(msg.into())
    }

    /// 1 for unreadable or malformed input, 2 when the analysis rejects it.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Analysis(noether_core::Error::Parse { .. }) => 1,
            CliError::Analysis(_) | CliError::MissingInput(_) => 2,
            _ => 1,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Parse(_) => "parse",
            CliError::Usage(_) => "usage",
            CliError::Io(_) => "io",
            CliError::MissingInput(_) => "missing-input",
            CliError::Analysis(e) => e.kind(),
        }
    }
}
