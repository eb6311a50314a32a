//! Command-line front end for `igf-core`.
//!
//! The `igf` binary is a thin wrapper around [`app::run`]; the pieces are
//! exposed here so they can be tested without spawning a process.

pub mod app;
pub mod curve;
pub mod document;
pub mod error;
pub mod render;

pub use app::{run, Cli};
pub use error::{exit, CliError};
