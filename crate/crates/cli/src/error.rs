use thiserror::Error;

/// Everything that can stop a request. Verification failures are not
/// errors: they produce a report and exit code 4.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error at {path} (line {line}, column {column}): {message}")]
    Parse {
        path: String,
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid request at {path}: {message}")]
    Invalid { path: String, message: String },

    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Engine(#[from] assocgr::Error),
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_NOT_STABILIZED: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;
pub const EXIT_VERIFY_FAILED: i32 = 4;

impl CliError {
    pub fn exit_code(&self) -> i32 {
        use assocgr::Error as E;
        match self {
            CliError::Parse { .. } | CliError::Invalid { .. } | CliError::Io { .. } => EXIT_INPUT,
            CliError::Engine(e) => match e {
                E::NotStabilized(_) => EXIT_NOT_STABILIZED,
                E::NotPrimary(_) | E::InvalidInput(_) => EXIT_INPUT,
                E::Precondition(_) | E::WrongDimension { .. } | E::NotMember(_) | E::NotSubmodule => {
                    EXIT_PRECONDITION
                }
            },
        }
    }
}
