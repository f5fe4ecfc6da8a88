//! File formats, corpus verification and the command-line front end for
//! `codeglab-core`.

pub mod cli;
pub mod corpus;
pub mod error;
pub mod manifest;
pub mod pgr;
pub mod report;
pub mod source;

pub use error::{Error, Result};
