#![cfg_attr(not(test), no_std)]
extern crate alloc;

pub mod error;
pub mod geometry;
pub mod integrable;
pub mod jacobi;
pub mod liealgebra;
pub mod matrix;
pub mod poisson;
pub mod residual;
pub mod sampling;
pub mod symexpr;

pub use error::{Error, ParseError, Result};
