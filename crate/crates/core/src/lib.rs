pub mod algebra;
pub mod error;
pub mod fractions;
pub mod moments;
pub mod schur;
pub mod verify;

pub use algebra::*;
pub use error::{Error, Result};
