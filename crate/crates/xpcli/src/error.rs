use std::path::PathBuf;

use crate::scenario::Diagnostic;

#[derive(Debug, thiserror::Error)]
pub enum XpError {
    #[error("invalid scenario:\n{}", list(.0))]
    Invalid(Vec<Diagnostic>),
    #[error("cannot parse {origin}: {message}")]
    Parse { origin: String, message: String },
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("numeric failure: {0}")]
    Numeric(#[from] uca_defocus::Error),
    #[error("malformed result table: {0}")]
    Table(String),
}

fn list(d: &[Diagnostic]) -> String {
    d.iter().map(|d| format!("  - {d}")).collect::<Vec<_>>().join("\n")
}

impl XpError {
    /// Process exit code: 2 for configuration problems, 3 for numeric
    /// failures, 1 for I/O.
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Invalid(_) | Self::Parse { .. } => 2,
            Self::Numeric(_) => 3,
            Self::Io { .. } | Self::Table(_) => 1,
        }
    }
}
