//! Test-side oracles shared by the integration tests.
#![allow(dead_code)]

pub mod oracle;

use std::path::PathBuf;

pub fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data")
}

pub fn corpus_path() -> PathBuf {
    data_dir().join("corpus.toml")
}
