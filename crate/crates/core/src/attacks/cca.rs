use rand::Rng;

use crate::error::{Error, Result};
use crate::matrix::{BitMatrix, BitVec};

/// The two positions flipped by one probe, in draw order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Flip {
    pub first: usize,
    pub second: usize,
}

impl Flip {
    /// The counted event: the first flip hits an error position, the second does not.
    pub fn succeeds(&self, e: &BitVec) -> bool {
        e.get(self.first) && !e.get(self.second)
    }
}

/// Flips two distinct uniformly random positions of `c`.
pub fn cca_flip_probe<R: Rng + ?Sized>(c: &BitVec, rng: &mut R) -> (BitVec, Flip) {
    let n = c.len();
    assert!(n >= 2, "need at least two positions to flip");
    let first = rng.gen_range(0..n);
    let mut second = rng.gen_range(0..n - 1);
    if second >= first {
        second += 1;
    }
    let mut out = c.clone();
    out.flip(first);
    out.flip(second);
    (out, Flip { first, second })
}

/// `t(n−t) / (n(n−1))`.
pub fn flip_success_probability(n: usize, t: usize) -> f64 {
    if n < 2 || t > n {
        return 0.0;
    }
    (t as f64 * (n - t) as f64) / (n as f64 * (n - 1) as f64)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CcaOutcome {
    pub m: BitVec,
    pub oracle_calls: u64,
    pub flip: Flip,
}

/// Feeds probes of `c` to a decryption oracle until it answers with a
/// message `m` satisfying `wt(c − m·G) = t`.
///
/// The oracle refuses `c` itself and anything it cannot decrypt; answers
/// that fail the weight check (a miscorrected probe) are discarded. A real
/// oracle also answers when the flips land in the opposite order, so the
/// per-call success rate is twice [`flip_success_probability`].
pub fn cca_recover<R, O>(
    c: &BitVec,
    g_pub: &BitMatrix,
    t: usize,
    mut oracle: O,
    rng: &mut R,
    max_calls: u64,
) -> Result<CcaOutcome>
where
    R: Rng + ?Sized,
    O: FnMut(&BitVec) -> Option<BitVec>,
{
    for call in 1..=max_calls {
        let (probe, flip) = cca_flip_probe(c, rng);
        if let Some(m) = oracle(&probe) {
            if m.len() == g_pub.rows() && g_pub.vec_mul(&m).distance(c) == t {
                return Ok(CcaOutcome { m, oracle_calls: call, flip });
            }
        }
    }
    Err(Error::Exhausted { iterations: max_calls })
}
