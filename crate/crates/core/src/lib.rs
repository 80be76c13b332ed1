//! Code-based cryptography over binary and small-prime Goppa codes.
//!
//! - [`algebra`]: prime and extension fields, polynomials over them.
//! - [`matrix`]: dense and bit-packed matrices, elimination, permutations.
//! - [`codes`]: generic linear codes and table decoders.
//! - [`goppa`]: Goppa codes with Patterson and key-equation decoders.
//! - [`mceliece`], [`niederreiter`]: the two public-key schemes and conversions.
//! - [`kem`]: the Classic McEliece key encapsulation.
//! - [`attacks`]: information-set decoding, resend and CCA attacks, cost estimators.
//! - [`fixtures`]: the worked examples with their reference values.

pub mod algebra;
pub mod attacks;
pub mod codes;
pub mod error;
pub mod fixtures;
pub mod goppa;
mod io;
pub mod kem;
pub mod matrix;
pub mod mceliece;
pub mod niederreiter;
pub mod params;

pub use error::{Error, Result};
