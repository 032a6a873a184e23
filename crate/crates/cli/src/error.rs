use serde_json::{json, Value};
use superjack::ideals::IdealError;
use superjack::jack::JackError;
use superjack::spart::SpartError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("pole at alpha = {at} in the coefficient of m_{omega}: {coeff}")]
    Pole { omega: String, coeff: String, at: String },
    #[error("{0}")]
    Internal(String),
    #[error("{0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Io(_) => 2,
            CliError::Pole { .. } | CliError::Internal(_) => 3,
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            CliError::Usage(m) => json!({"error": "usage", "message": m}),
            CliError::Io(m) => json!({"error": "io", "message": m}),
            CliError::Internal(m) => json!({"error": "internal", "message": m}),
            CliError::Pole { omega, coeff, at } => json!({
                "error": "pole",
                "message": self.to_string(),
                "omega": omega,
                "coeff": coeff,
                "at": at,
            }),
        }
    }
}

impl From<SpartError> for CliError {
    fn from(e: SpartError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<JackError> for CliError {
    fn from(e: JackError) -> Self {
        match e {
            JackError::Pole { omega, coeff, at } => CliError::Pole { omega, coeff, at },
            JackError::TooFewVariables { .. } => CliError::Usage(e.to_string()),
            other => CliError::Internal(other.to_string()),
        }
    }
}

impl From<IdealError> for CliError {
    fn from(e: IdealError) -> Self {
        match e {
            IdealError::Spart(s) => s.into(),
            IdealError::Jack(j) => j.into(),
            IdealError::BadParameters(m) => CliError::Usage(m),
            other => CliError::Internal(other.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}
