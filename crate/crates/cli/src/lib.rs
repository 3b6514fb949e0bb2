//! Command-line front end: evaluators for forms, symbols and residues, ring
//! tables, and verification suites driven by an annotated fixtures file.

pub mod commands;
pub mod error;
pub mod fixtures;
pub mod groups;
pub mod oracle;
pub mod report;
pub mod suites;

pub use commands::{run, Cli, EXIT_USAGE};
pub use error::{CliError, Result};
pub use report::{Check, Status, VerificationReport};
pub use suites::{run_suite, VerifyOptions};
