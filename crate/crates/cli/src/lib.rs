//! File formats and subcommands of the `mcarma` tool.

pub mod args;
pub mod commands;
pub mod error;
pub mod model_file;
pub mod report;

pub use error::{CliError, Result};
