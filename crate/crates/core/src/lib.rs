pub mod arith;
pub mod asym;
pub mod error;
pub mod geometry;
pub mod hyper;
pub mod quad;

pub use error::{Error, Result};
