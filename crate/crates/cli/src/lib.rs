//! Command-line front end for the fqlab library.
//!
//! The binary exposes one subcommand per library module plus `verify-all`,
//! which runs the acceptance suite. All output is deterministic: identical
//! argv (and seed) produce byte-identical documents.

pub mod commands;
pub mod output;
pub mod verify;

pub fn run() -> i32 {
    commands::run()
}
