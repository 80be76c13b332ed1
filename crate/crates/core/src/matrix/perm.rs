use rand::seq::SliceRandom;
use rand::Rng;

use super::bitmat::BitMatrix;
use super::bitvec::BitVec;
use super::linalg::GfMatrix;
use crate::error::{Error, Result};

/// Permutation matrix `P` kept as an index map.
///
/// Right multiplication moves coordinate `perm[j]` to position `j`:
/// `(x·P)_j = x_{perm[j]}` and column `j` of `G·P` is column `perm[j]` of `G`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    perm: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Permutation {
        Permutation { perm: (0..n).collect() }
    }

    pub fn from_vec(perm: Vec<usize>) -> Result<Permutation> {
        let mut seen = vec![false; perm.len()];
        for &p in &perm {
            if p >= perm.len() || std::mem::replace(&mut seen[p], true) {
                return Err(Error::Domain(format!("{perm:?} is not a permutation")));
            }
        }
        Ok(Permutation { perm })
    }

    /// Fisher-Yates shuffle.
    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Permutation {
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(rng);
        Permutation { perm }
    }

    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.perm
    }

    /// `P⁻¹ = Pᵀ`.
    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.perm.len()];
        for (j, &p) in self.perm.iter().enumerate() {
            inv[p] = j;
        }
        Permutation { perm: inv }
    }

    /// `x·P`.
    pub fn apply<T: Copy>(&self, x: &[T]) -> Vec<T> {
        assert_eq!(x.len(), self.len(), "length mismatch");
        self.perm.iter().map(|&p| x[p]).collect()
    }

    /// `x·P` for a bit vector.
    pub fn apply_bits(&self, x: &BitVec) -> BitVec {
        assert_eq!(x.len(), self.len(), "length mismatch");
        x.select(&self.perm)
    }

    /// `x·P⁻¹`.
    pub fn apply_inverse_bits(&self, x: &BitVec) -> BitVec {
        assert_eq!(x.len(), self.len(), "length mismatch");
        let mut out = BitVec::zeros(x.len());
        for (j, &p) in self.perm.iter().enumerate() {
            if x.get(j) {
                out.set(p, true);
            }
        }
        out
    }

    /// `G·P`.
    pub fn permute_columns<M: GfMatrix>(&self, g: &M) -> M {
        assert_eq!(g.cols(), self.len(), "length mismatch");
        g.select_columns(&self.perm)
    }

    /// `P·Q` as a permutation: `x·(P·Q) = (x·P)·Q`.
    pub fn then(&self, q: &Permutation) -> Permutation {
        assert_eq!(self.len(), q.len(), "length mismatch");
        Permutation { perm: q.perm.iter().map(|&j| self.perm[j]).collect() }
    }

    /// The dense matrix, for cross-checks only.
    pub fn to_matrix(&self) -> BitMatrix {
        let mut m = BitMatrix::zeros(self.len(), self.len());
        for (j, &p) in self.perm.iter().enumerate() {
            m.set_bit(p, j, true);
        }
        m
    }
}
