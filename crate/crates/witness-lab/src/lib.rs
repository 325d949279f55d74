pub mod basis;
pub mod error;
pub mod operators;
mod parallel;
pub mod separability;
pub mod spa;
pub mod witnesses;
pub mod states;

#[cfg(test)]
pub(crate) mod testutil;

pub use error::{Error, Result};
