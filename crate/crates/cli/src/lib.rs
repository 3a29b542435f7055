//! Command-line front end for the `neumaier-core` library: feasibility
//! tables, character-sum counts, graph construction and verification, and
//! the prime searches.

pub mod commands;
pub mod error;
pub mod golden;
pub mod report;
pub mod sampling;

pub use error::{CliError, CliResult, EXIT_INPUT, EXIT_OK, EXIT_VERIFY_FAILED};
pub use report::Format;
