use super::{random_subset, run_search, Hit, IsdResult, SearchConfig, Step};
use crate::error::{Error, Result};
use crate::matrix::{BitMatrix, BitVec, GfMatrix};

/// `(L0, L1)`: positions where two ciphertexts agree, and where they differ.
pub fn resend_sets(c1: &BitVec, c2: &BitVec) -> (Vec<usize>, Vec<usize>) {
    assert_eq!(c1.len(), c2.len(), "ciphertext length mismatch");
    (0..c1.len()).partition(|&i| c1.get(i) == c2.get(i))
}

/// Recovers the message behind two encryptions of it under one public key.
///
/// Information sets are drawn from `L0` only; a position there is garbled
/// in both ciphertexts or in neither, and the former is rare. The returned
/// error belongs to `c1`.
pub fn message_resend_attack(
    c1: &BitVec,
    c2: &BitVec,
    g_pub: &BitMatrix,
    t: usize,
    cfg: &SearchConfig,
) -> Result<IsdResult> {
    let (k, n) = (g_pub.rows(), g_pub.cols());
    if c1.len() != n || c2.len() != n {
        return Err(Error::Dimension(format!("ciphertexts must have length {n}")));
    }
    let (l0, _) = resend_sets(c1, c2);
    if l0.len() < k {
        return Err(Error::Domain(format!("|L0| = {} is smaller than k = {k}", l0.len())));
    }
    run_search(cfg, |rng| {
        let info: Vec<usize> = random_subset(rng, l0.len(), k).into_iter().map(|i| l0[i]).collect();
        let Some(inv) = g_pub.select_columns(&info).invert() else {
            return Step::Singular;
        };
        let m = inv.vec_mul(&c1.select(&info));
        let e = c1 ^ &g_pub.vec_mul(&m);
        if e.weight() == t {
            Step::Hit(Hit { e, m: Some(m), info_set: info })
        } else {
            Step::Miss
        }
    })
}
