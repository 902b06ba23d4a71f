use std::path::PathBuf;

use ruledkit_core::classification::ClassificationError;
use ruledkit_core::reconstruction::ReconstructionError;
use ruledkit_core::GeometryError;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_UNRESOLVED: i32 = 2;
pub const EXIT_IO: i32 = 3;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Malformed or invalid input; exit code 1.
    #[error("{0}")]
    Input(String),
    /// Reading or writing a file failed; exit code 3.
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    pub fn input(msg: impl Into<String>) -> Self {
        CliError::Input(msg.into())
    }

    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        CliError::Io { path: path.into(), source }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => EXIT_INPUT,
            CliError::Io { .. } => EXIT_IO,
        }
    }
}

impl From<GeometryError> for CliError {
    fn from(e: GeometryError) -> Self {
        CliError::Input(format!("geometry: {e}"))
    }
}

impl From<ReconstructionError> for CliError {
    fn from(e: ReconstructionError) -> Self {
        CliError::Input(format!("reconstruction: {e}"))
    }
}

impl From<ClassificationError> for CliError {
    fn from(e: ClassificationError) -> Self {
        CliError::Input(format!("classification: {e}"))
    }
}
