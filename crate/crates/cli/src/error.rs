use doublekit::Error as CoreError;

/// Everything that can go wrong while loading a session or running a command.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// A syntax, resolution or shape problem at a position of a session file.
    #[error("{origin}:{line}:{col}: {msg}")]
    Parse {
        origin: String,
        line: usize,
        col: usize,
        msg: String,
    },

    /// An operation on a named binding failed.
    #[error("{name}: {source}")]
    Binding {
        name: String,
        #[source]
        source: CoreError,
    },

    #[error("{0}")]
    Usage(String),

    #[error("{path}: {msg}")]
    Io { path: String, msg: String },
}

impl CliError {
    pub(crate) fn binding(name: impl Into<String>, source: CoreError) -> Self {
        CliError::Binding {
            name: name.into(),
            source,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
