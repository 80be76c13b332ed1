//! Finite fields and polynomials over them.

mod field;
mod poly;

pub use field::{Elem, Field, MAX_ORDER};
pub use poly::{Eea, Poly};
