use thiserror::Error;

/// Exit codes are part of the interface.
pub mod exit {
    pub const OK: u8 = 0;
    pub const DISTINCT: u8 = 1;
    pub const PARSE: u8 = 2;
    pub const DIMENSION: u8 = 3;
    pub const DEGENERATE: u8 = 4;
    pub const UNSTABLE: u8 = 5;
    pub const POLE: u8 = 6;
}

#[derive(Error, Debug)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] mcarma_core::Error),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{what}: {msg}")]
    Json { what: String, msg: String },
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.into(),
            source,
        }
    }

    pub fn json(what: impl Into<String>, err: serde_json::Error) -> Self {
        CliError::Json {
            what: what.into(),
            msg: err.to_string(),
        }
    }

    pub fn exit_code(&self) -> u8 {
        use mcarma_core::Error as E;
        match self {
            CliError::Core(e) => match e {
                E::Dimension(_) | E::InvalidOrder { .. } => exit::DIMENSION,
                E::ZeroTransferFunction | E::DegenerateTransferFunction | E::NotStrictlyProper => {
                    exit::DEGENERATE
                }
                E::Unstable => exit::UNSTABLE,
                E::PoleOnEvaluationAxis(_) => exit::POLE,
                E::Parse(_)
                | E::DivisionByZero
                | E::ZeroDenominator
                | E::BothZero
                | E::InvalidDriver(_)
                | E::InvalidConfig(_) => exit::PARSE,
            },
            CliError::Io { .. } | CliError::Json { .. } | CliError::Usage(_) => exit::PARSE,
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
