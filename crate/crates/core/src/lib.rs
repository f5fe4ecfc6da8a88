#![no_std]

extern crate alloc;

pub mod arith;
pub mod chartab;
pub mod classes;
pub mod classify;
pub mod constructors;
pub mod cyclotomic;
pub mod error;
pub mod field;
pub mod group;
pub mod modular;
pub mod ops;
pub mod perm;
pub mod recognize;
pub mod structure;

pub use classes::ClassData;
pub use error::{Error, Result};
pub use group::{PermGroup, ENUMERATION_CAP};
pub use perm::Permutation;
