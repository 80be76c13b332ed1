use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use super::{random_subset, run_search, Hit, IsdResult, SearchConfig, Step};
use crate::error::{Error, Result};
use crate::matrix::{BitMatrix, BitVec, GfMatrix};

/// Which public matrix an ISD search works on.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Form {
    /// k×n generator, ciphertext `c = m·G + e` of length n.
    #[default]
    McEliece,
    /// (n−k)×n parity check, ciphertext `s = H·eᵀ` of length n−k.
    Niederreiter,
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Form::McEliece => "mceliece",
            Form::Niederreiter => "niederreiter",
        })
    }
}

impl FromStr for Form {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "mceliece" => Ok(Form::McEliece),
            "niederreiter" => Ok(Form::Niederreiter),
            other => Err(Error::InvalidParameters(format!("unknown form '{other}'"))),
        }
    }
}

/// Prange's information-set decoding.
///
/// McEliece form: guess k columns, `m = c_I·G_I⁻¹`, accept when
/// `wt(c − m·G) = t`. Niederreiter form: guess n−k columns `J`,
/// `e_J = H_J⁻¹·s`, accept when `wt(e) = t`.
pub fn isd_prange(public: &BitMatrix, c: &BitVec, t: usize, form: Form, cfg: &SearchConfig) -> Result<IsdResult> {
    let n = public.cols();
    let r = public.rows();
    if r > n {
        return Err(Error::Dimension(format!("{r}×{n} public matrix has more rows than columns")));
    }
    match form {
        Form::McEliece => {
            if c.len() != n {
                return Err(Error::Dimension(format!("ciphertext has length {}, expected {n}", c.len())));
            }
            run_search(cfg, |rng| {
                let info = random_subset(rng, n, r);
                let Some(inv) = public.select_columns(&info).invert() else {
                    return Step::Singular;
                };
                let m = inv.vec_mul(&c.select(&info));
                let e = c ^ &public.vec_mul(&m);
                if e.weight() == t {
                    Step::Hit(Hit { e, m: Some(m), info_set: info })
                } else {
                    Step::Miss
                }
            })
        }
        Form::Niederreiter => {
            if c.len() != r {
                return Err(Error::Dimension(format!("syndrome has length {}, expected {r}", c.len())));
            }
            run_search(cfg, |rng| {
                let cols = random_subset(rng, n, r);
                let Some(inv) = public.select_columns(&cols).invert() else {
                    return Step::Singular;
                };
                let part = inv.mul_vec(c);
                if part.weight() != t {
                    return Step::Miss;
                }
                let positions: Vec<usize> = part.ones().map(|i| cols[i]).collect();
                let e = BitVec::from_support(n, &positions);
                debug_assert_eq!(&public.mul_vec(&e), c);
                let info_set = (0..n).filter(|j| cols.binary_search(j).is_err()).collect();
                Step::Hit(Hit { e, m: None, info_set })
            })
        }
    }
}

/// Lee–Brickell over GF(2): per information set, try every size-`p`
/// combination of rows of `G′ = G_I⁻¹·G` against `y′ = y − y_I·G′`.
///
/// Only subsets of size exactly `p` are tried, so a draw succeeds when `I`
/// holds exactly `p` error positions.
pub fn lee_brickell(g: &BitMatrix, y: &BitVec, t: usize, p: usize, cfg: &SearchConfig) -> Result<IsdResult> {
    let (k, n) = (g.rows(), g.cols());
    if p > 3 {
        return Err(Error::Unsupported(format!("Lee-Brickell window p = {p}; at most 3 is supported")));
    }
    if p > k || y.len() != n {
        return Err(Error::Dimension(format!("p = {p}, k = {k}, ciphertext length {} for n = {n}", y.len())));
    }
    run_search(cfg, |rng| {
        let info = random_subset(rng, n, k);
        let Some(inv) = g.select_columns(&info).invert() else {
            return Step::Singular;
        };
        let gp = inv.mul(g);
        let y_prime = y ^ &gp.vec_mul(&y.select(&info));
        for rows in (0..k).combinations(p) {
            let mut e = y_prime.clone();
            for &a in &rows {
                e ^= &gp.row(a);
            }
            if e.weight() == t {
                let m = inv.vec_mul(&(y ^ &e).select(&info));
                return Step::Hit(Hit { e, m: Some(m), info_set: info });
            }
        }
        Step::Miss
    })
}

/// Result of one information set in a lexicographic sweep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SweepOutcome {
    Singular,
    Candidate(BitVec),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepStep {
    /// 1-based.
    pub iteration: u64,
    pub info_set: Vec<usize>,
    pub outcome: SweepOutcome,
}

/// Every k-subset of columns in lexicographic order, with the message
/// candidate `c_I·G_I⁻¹` when `G_I` is invertible.
pub fn lexicographic_sweep<'a>(g: &'a BitMatrix, c: &'a BitVec) -> impl Iterator<Item = SweepStep> + 'a {
    (0..g.cols()).combinations(g.rows()).enumerate().map(move |(i, info)| {
        let outcome = match g.select_columns(&info).invert() {
            Some(inv) => SweepOutcome::Candidate(inv.vec_mul(&c.select(&info))),
            None => SweepOutcome::Singular,
        };
        SweepStep { iteration: i as u64 + 1, info_set: info, outcome }
    })
}
