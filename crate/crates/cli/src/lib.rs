//! Report types and command implementations behind the `polya` binary.

pub mod commands;
pub mod report;

pub use commands::{IdentityCaps, Outcome, SourceSpec, UsageError};
pub use report::{RunReport, Status};
