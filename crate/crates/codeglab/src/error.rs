use std::path::PathBuf;

use crate::pgr::PgrError;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Pgr { path: PathBuf, source: PgrError },
    #[error("manifest: {0}")]
    Manifest(String),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] codeglab_core::Error),
}

impl Error {
    /// 2 for invariant failures, 1 for everything else.
    pub fn exit_code(&self) -> i32 {
        use codeglab_core::Error as E;
        match self {
            Error::Core(
                E::InvariantViolation(_) | E::SplittingFailed(_) | E::DegreeLift(_) | E::NonIntegralCodegree { .. },
            ) => 2,
            _ => 1,
        }
    }

    /// Short tag for the one-line error report.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Io { .. } => "io",
            Error::Pgr { .. } => "pgr",
            Error::Manifest(_) => "manifest",
            Error::Usage(_) => "usage",
            Error::Core(_) if self.exit_code() == 2 => "invariant",
            Error::Core(codeglab_core::Error::CapExceeded { .. }) => "cap",
            Error::Core(_) => "data",
        }
    }

    /// `error[kind]: message` on a single line.
    pub fn one_line(&self) -> String {
        let msg = self.to_string().replace(['\n', '\r'], " ");
        format!("error[{}]: {}", self.kind(), msg)
    }
}

pub type Result<T> = std::result::Result<T, Error>;
