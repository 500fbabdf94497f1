//! Command-line front end for `critlink-core`: weight parsing, subcommand
//! implementations and JSON/TSV rendering.

pub mod commands;
pub mod weight;

pub use commands::{CliError, Format, Report, RunConfig};
