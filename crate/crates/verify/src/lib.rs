//! Exhaustive theorem checks, corpus IO and report formatting for the
//! `roman` command-line tool.

pub mod checks;
mod error;
pub mod explore;
pub mod io;
pub mod output;
pub mod suite;

pub use error::{Result, VerifyError};
