//! Library half of the `cwl` binary: reference tables, b-file parsing, the
//! results cache and the subcommands.

pub mod bfile;
pub mod cache;
pub mod commands;
pub mod error;
pub mod golden;

pub use commands::{run, Cli, Outcome};
pub use error::CliError;
