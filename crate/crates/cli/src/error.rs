use std::fmt;

use kostant_core::Error;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Resource(String),
    Verification(String),
    Io(String),
}

impl CliError {
    /// 1 verification failure, 2 usage, 3 resource bound.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Verification(_) => 1,
            CliError::Usage(_) | CliError::Io(_) => 2,
            CliError::Resource(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Resource(m) | CliError::Verification(m) | CliError::Io(m) => f.write_str(m),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        if e.is_resource_bound() {
            CliError::Resource(e.to_string())
        } else {
            CliError::Usage(e.to_string())
        }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Io(e.to_string())
    }
}
