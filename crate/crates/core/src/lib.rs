pub mod arith;
pub mod cohomology;
pub mod error;
pub mod groebner;
pub mod lab;
pub mod resolution;
pub mod ring;

pub use error::{Error, Result};
