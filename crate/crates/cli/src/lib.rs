//! Command-line front end for `gately-core`: reads networks, prints measures,
//! Core diagnostics and theorem checks.

pub mod commands;
pub mod document;
pub mod report;

use std::path::PathBuf;

use thiserror::Error;

pub use document::{Format, NetworkDocument, ParseError};
pub use report::ResultDocument;

pub const EXIT_OK: u8 = 0;
pub const EXIT_VERIFICATION: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_CAP: u8 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Parse { path: String, source: ParseError },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] gately_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(gately_core::Error::CapExceeded { .. }) => EXIT_CAP,
            _ => EXIT_INPUT,
        }
    }
}
