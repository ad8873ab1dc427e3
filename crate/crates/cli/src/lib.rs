//! Command-line front end: scenario files, reports, and the `conserv` commands.

mod commands;
pub mod render;
pub mod scenario;

pub use commands::{run, Outcome, EXIT_DOMAIN, EXIT_OK, EXIT_USAGE};
