//! Command-line front end: workspace files, radical tables, AR quivers,
//! degrees and verifier reports.

mod commands;
pub mod dot;
pub mod workspace;

pub use commands::{cap_from_env, execute, exit_code, main_with_args, Cli, Command, Outcome, Output, SideArg};
