use std::path::PathBuf;

use biquandle_core::Error as CoreError;

/// Exit statuses. Usage errors from argument parsing also exit with 2.
pub const EXIT_AXIOM: u8 = 1;
pub const EXIT_FORMAT: u8 = 2;
pub const EXIT_FIXTURE: u8 = 3;
pub const EXIT_NON_MEDIAL: u8 = 4;
pub const EXIT_INTERNAL: u8 = 5;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] CoreError),

    #[error("cannot read {}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },

    #[error("{}: {source}", path.display())]
    InFile { path: PathBuf, source: Box<CliError> },

    #[error("{0}")]
    Json(String),

    #[error("{0}")]
    Usage(String),

    #[error("{0}")]
    NonMedial(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(e) => match e {
                CoreError::NotAQuandle(_)
                | CoreError::NotABiquandle(_)
                | CoreError::InvalidStructure(_)
                | CoreError::NotAGroup(_)
                | CoreError::NotAbelian
                | CoreError::NotAnAutomorphism
                | CoreError::NotACongruence(_)
                | CoreError::NotAHomomorphism => EXIT_AXIOM,
                CoreError::Format(_) | CoreError::OrderMismatch { .. } | CoreError::GaussCode { .. } => EXIT_FORMAT,
                CoreError::UnknownFixture { .. } => EXIT_FIXTURE,
                CoreError::NonMedialTarget => EXIT_NON_MEDIAL,
                CoreError::Internal(_) => EXIT_INTERNAL,
            },
            CliError::InFile { source, .. } => source.exit_code(),
            CliError::NonMedial(_) => EXIT_NON_MEDIAL,
            CliError::Io { .. } | CliError::Json(_) | CliError::Usage(_) => EXIT_FORMAT,
        }
    }

    /// Names the file an error came from.
    pub fn in_file(self, path: &std::path::Path) -> CliError {
        match self {
            e @ (CliError::Io { .. } | CliError::InFile { .. }) => e,
            e => CliError::InFile {
                path: path.to_path_buf(),
                source: Box::new(e),
            },
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
