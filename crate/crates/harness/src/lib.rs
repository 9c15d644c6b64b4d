//! Verification harness and command-line front end for `monopos`.

pub mod checks;
pub mod cli;
pub mod corpus;
pub mod report;

pub use report::{run_suite, RunReport};
