//! Linear algebra over finite fields with a bit-packed GF(2) fast path.

mod bitmat;
mod bitvec;
mod dense;
mod geninv;
mod linalg;
mod perm;

pub use bitmat::{BitMatrix, Nonsingular};
pub use bitvec::BitVec;
pub use dense::MatGF;
pub use geninv::{generalized_inverse, GeneralizedInverse, PenroseRelations};
pub use linalg::{GfMatrix, Rref};
pub use perm::Permutation;
