//! Generic decoding attacks and cost estimators.
//!
//! Randomized searches share one driver: each worker owns a `ChaCha8Rng`
//! seeded from the master seed with the worker index as its stream, claims
//! iterations from a shared counter and stops once any worker succeeds.
//! With one worker a search is a deterministic function of the seed.

mod cca;
mod estimate;
mod isd;
mod resend;

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::sync::Mutex;
use std::thread;
use std::time::{Duration, Instant};

use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::matrix::BitVec;

pub use cca::{cca_flip_probe, cca_recover, flip_success_probability, CcaOutcome, Flip};
pub use estimate::{
    key_sizes, log2_ratio, resend_guess_probability, resend_statistics, security_table, work_factor,
    CostReport, Formula, KeyScheme, KeySizes, ResendStats, SecurityRow, SizeUnit,
};
pub use isd::{isd_prange, lee_brickell, lexicographic_sweep, Form, SweepOutcome, SweepStep};
pub use resend::{message_resend_attack, resend_sets};

/// Search budget and parallelism.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub seed: u64,
    pub max_iters: u64,
    pub workers: usize,
}

impl SearchConfig {
    pub fn new(seed: u64, max_iters: u64) -> Self {
        SearchConfig { seed, max_iters, workers: 1 }
    }

    pub fn with_workers(self, workers: usize) -> Self {
        SearchConfig { workers: workers.max(1), ..self }
    }
}

/// A successful search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsdResult {
    pub e: BitVec,
    /// Present for generator-matrix searches.
    pub m: Option<BitVec>,
    /// Draws up to and including the successful one, singular draws included.
    pub iterations: u64,
    /// Draws whose submatrix was invertible, over all workers.
    pub invertible: u64,
    pub elapsed: Duration,
    pub info_set: Vec<usize>,
}

pub(crate) struct Hit {
    pub e: BitVec,
    pub m: Option<BitVec>,
    pub info_set: Vec<usize>,
}

pub(crate) enum Step {
    Singular,
    Miss,
    Hit(Hit),
}

pub(crate) fn run_search<F>(cfg: &SearchConfig, step: F) -> Result<IsdResult>
where
    F: Fn(&mut ChaCha8Rng) -> Step + Sync,
{
    let start = Instant::now();
    let claimed = AtomicU64::new(0);
    let invertible = AtomicU64::new(0);
    let found = AtomicBool::new(false);
    let winner: Mutex<Option<(u64, Hit)>> = Mutex::new(None);
    thread::scope(|s| {
        for w in 0..cfg.workers.max(1) {
            let (claimed, invertible, found, winner, step) = (&claimed, &invertible, &found, &winner, &step);
            s.spawn(move || {
                let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
                rng.set_stream(w as u64);
                while !found.load(Ordering::Relaxed) {
                    let it = claimed.fetch_add(1, Ordering::Relaxed);
                    if it >= cfg.max_iters {
                        break;
                    }
                    match step(&mut rng) {
                        Step::Singular => {}
                        Step::Miss => {
                            invertible.fetch_add(1, Ordering::Relaxed);
                        }
                        Step::Hit(hit) => {
                            invertible.fetch_add(1, Ordering::Relaxed);
                            let mut slot = winner.lock().expect("search worker panicked");
                            if slot.as_ref().is_none_or(|(best, _)| it < *best) {
                                *slot = Some((it, hit));
                            }
                            found.store(true, Ordering::Relaxed);
                        }
                    }
                }
            });
        }
    });
    match winner.into_inner().expect("search worker panicked") {
        Some((it, hit)) => Ok(IsdResult {
            e: hit.e,
            m: hit.m,
            iterations: it + 1,
            invertible: invertible.load(Ordering::Relaxed),
            elapsed: start.elapsed(),
            info_set: hit.info_set,
        }),
        None => Err(Error::Exhausted { iterations: cfg.max_iters }),
    }
}

/// Uniform `size`-subset of `0..n` in increasing order.
pub(crate) fn random_subset<R: Rng + ?Sized>(rng: &mut R, n: usize, size: usize) -> Vec<usize> {
    let mut s = index::sample(rng, n, size).into_vec();
    s.sort_unstable();
    s
}

#[cfg(test)]
mod tests;
