//! Std companion of `conormal-core`: JSON formats, seeded samplers, the
//! parallel verification driver and the `conormal` command-line tool.

pub mod cli;
mod error;
pub mod json;
pub mod sample;
pub mod verify;

pub use error::CliError;
