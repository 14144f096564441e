//! Command-line front end: problem files in, JSON reports out.

pub mod commands;
pub mod error;
pub mod problem;
pub mod report;
pub mod xcheck;

pub use commands::{Options, COMMANDS};
pub use error::CliError;
pub use problem::{ProblemFile, SplitSpec};
pub use report::report;
