//! Command-line frontend: config parsing, commands and their text output.

pub mod commands;
pub mod config;
pub mod format;

pub use commands::{run, Command, Options, Outcome, Which};
pub use config::{parse_config, ConfigError, RunConfig};
