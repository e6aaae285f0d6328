//! Exact decision procedures for symmetric hyperbolic polynomials, the
//! correspondence between hook-shaped symmetric polynomials and diagonal
//! zero-sum hyperbolicity preservers, and extendability of such maps.

pub mod error;
pub mod hyperbolicity;
pub mod json;
pub mod numeric;
pub mod poly;
pub mod rational;
pub mod roots;
pub mod sympoly;
pub mod operators;
pub mod unipoly;

pub use error::{HyperError, Result};
pub use poly::Poly;
pub use rational::Q;
