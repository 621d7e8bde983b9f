//! Batch front end: energy scales, coupling tables, offset scans and sweeps
//! rendered as deterministic CSV or JSON.

pub mod commands;
pub mod config;
pub mod error;
pub mod format;

pub use commands::{cmd_degeneracy, cmd_scales, cmd_selection, cmd_sweep, cmd_table, table_reports};
pub use config::{OutputFormat, Parity, RunConfig, SweepRange, SweepVariable};
pub use error::{CliError, CliResult};
