use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};

/// Attack cost formulas. Only the Prange variants are evaluated; the others
/// name published refinements and report `Unsupported`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Formula {
    /// `k³ · C(n, k) / C(n−t, k)`.
    McEliecePrange,
    /// `(n−k)³ · C(n, n−k) / C(n−t, n−k−t)`.
    NiederreiterPrange,
    Stern,
    BallCollision,
    Doom,
}

impl Formula {
    pub const ALL: [Formula; 5] =
        [Formula::McEliecePrange, Formula::NiederreiterPrange, Formula::Stern, Formula::BallCollision, Formula::Doom];

    pub fn name(self) -> &'static str {
        match self {
            Formula::McEliecePrange => "mce-prange",
            Formula::NiederreiterPrange => "nie-prange",
            Formula::Stern => "stern",
            Formula::BallCollision => "ball-collision",
            Formula::Doom => "doom",
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Formula {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Formula::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::InvalidParameters(format!("unknown formula '{s}'")))
    }
}

/// An exact cost `numerator / denominator` with its base-2 logarithm.
#[derive(Clone, Debug, PartialEq)]
pub struct CostReport {
    pub formula: Formula,
    pub n: u64,
    pub k: u64,
    pub t: u64,
    pub p: Option<u64>,
    pub numerator: BigUint,
    pub denominator: BigUint,
    pub log2: f64,
}

impl CostReport {
    pub fn value(&self) -> f64 {
        self.log2.exp2()
    }

    /// Decimal value as `d.ddde±x`.
    pub fn scientific(&self) -> String {
        format!("{:.3e}", self.value())
    }
}

pub(crate) fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::ZERO;
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 1..=k {
        acc = acc * (n - k + i) / i;
    }
    acc
}

pub(crate) fn log2_big(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits <= 64 {
        return (x.to_u64().expect("fits in 64 bits") as f64).log2();
    }
    let shift = bits - 64;
    let top = (x >> shift).to_u64().expect("fits in 64 bits");
    (top as f64).log2() + shift as f64
}

/// `log₂(a / b)` for positive integers.
pub fn log2_ratio(a: &BigUint, b: &BigUint) -> f64 {
    log2_big(a) - log2_big(b)
}

fn ratio(a: &BigUint, b: &BigUint) -> f64 {
    log2_ratio(a, b).exp2()
}

pub fn work_factor(formula: Formula, n: u64, k: u64, t: u64) -> Result<CostReport> {
    if k > n || t > n - k {
        return Err(Error::InvalidParameters(format!("need k ≤ n and t ≤ n − k, got ({n}, {k}, {t})")));
    }
    let (numerator, denominator) = match formula {
        Formula::McEliecePrange => (BigUint::from(k).pow(3) * binomial(n, k), binomial(n - t, k)),
        Formula::NiederreiterPrange => {
            let r = n - k;
            (BigUint::from(r).pow(3) * binomial(n, r), binomial(n - t, r - t.min(r)))
        }
        other => return Err(Error::Unsupported(format!("{other} cost model is not implemented"))),
    };
    if denominator == BigUint::ZERO || numerator == BigUint::ZERO {
        return Err(Error::InvalidParameters(format!("degenerate parameters ({n}, {k}, {t})")));
    }
    let log2 = log2_ratio(&numerator, &denominator);
    Ok(CostReport { formula, n, k, t, p: None, numerator, denominator, log2 })
}

/// Overlap law of two independent weight-`t` errors.
#[derive(Clone, Debug, PartialEq)]
pub struct ResendStats {
    /// `p[i]`: probability that exactly `i` positions are garbled in both.
    pub p: Vec<f64>,
    /// `E|L1| = Σ (2t − 2i) p_i`.
    pub expected_l1: f64,
}

/// `p_i = C(t, i) C(n−t, t−i) / C(n, t)`.
pub fn resend_statistics(n: u64, t: u64) -> Result<ResendStats> {
    if t > n {
        return Err(Error::InvalidParameters(format!("t = {t} exceeds n = {n}")));
    }
    let total = binomial(n, t);
    let p: Vec<f64> = (0..=t)
        .map(|i| {
            let ways = binomial(t, i) * binomial(n - t, t - i);
            if ways == BigUint::ZERO {
                0.0
            } else {
                ratio(&ways, &total)
            }
        })
        .collect();
    let expected_l1 = p.iter().enumerate().map(|(i, pi)| (2 * (t - i as u64)) as f64 * pi).sum();
    Ok(ResendStats { p, expected_l1 })
}

/// Chance that a random k-subset of `L0` is free of doubly garbled positions,
/// given `|L1| = l1`; those number `(2t − l1) / 2`.
pub fn resend_guess_probability(n: u64, k: u64, t: u64, l1: u64) -> Result<f64> {
    if l1 > 2 * t || (2 * t - l1) % 2 == 1 || l1 > n {
        return Err(Error::InvalidParameters(format!("|L1| = {l1} is impossible for t = {t}")));
    }
    let l0 = n - l1;
    let garbled = (2 * t - l1) / 2;
    if k > l0 {
        return Err(Error::InvalidParameters(format!("|L0| = {l0} is smaller than k = {k}")));
    }
    let good = binomial(l0 - garbled, k);
    if good == BigUint::ZERO {
        return Ok(0.0);
    }
    Ok(ratio(&good, &binomial(l0, k)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum KeyScheme {
    McEliece,
    Niederreiter,
    ClassicMcEliece,
}

impl fmt::Display for KeyScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            KeyScheme::McEliece => "mceliece",
            KeyScheme::Niederreiter => "niederreiter",
            KeyScheme::ClassicMcEliece => "classic-mceliece",
        })
    }
}

impl FromStr for KeyScheme {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "mceliece" => Ok(KeyScheme::McEliece),
            "niederreiter" => Ok(KeyScheme::Niederreiter),
            "classic-mceliece" => Ok(KeyScheme::ClassicMcEliece),
            other => Err(Error::InvalidParameters(format!("unknown key scheme '{other}'"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SizeUnit {
    Bits,
    Bytes,
}

impl fmt::Display for SizeUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SizeUnit::Bits => "bits",
            SizeUnit::Bytes => "bytes",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KeySizes {
    pub public: u64,
    pub private: u64,
    pub unit: SizeUnit,
}

/// Key sizes with `k = n − mt`.
///
/// McEliece: public `kn`, private `k² + n² + tm + nm` bits (S, P, g, L).
/// Niederreiter: the same with `n − k` for `k`. Classic McEliece: public
/// `mt·⌈(n − mt)/8⌉` bytes, private `⌈n/8⌉ + t⌈m/8⌉ + ⌈(2m − 1)2^{m−4}⌉` bytes.
pub fn key_sizes(scheme: KeyScheme, m: u64, n: u64, t: u64) -> Result<KeySizes> {
    let r = m * t;
    if r >= n {
        return Err(Error::InvalidParameters(format!("mt = {r} must be below n = {n}")));
    }
    let k = n - r;
    let sizes = match scheme {
        KeyScheme::McEliece => KeySizes { public: k * n, private: k * k + n * n + t * m + n * m, unit: SizeUnit::Bits },
        KeyScheme::Niederreiter => {
            KeySizes { public: r * n, private: r * r + n * n + t * m + n * m, unit: SizeUnit::Bits }
        }
        KeyScheme::ClassicMcEliece => {
            let benes = if m >= 4 { (2 * m - 1) << (m - 4) } else { (2 * m - 1).div_ceil(1 << (4 - m)) };
            KeySizes { public: r * k.div_ceil(8), private: n.div_ceil(8) + t * m.div_ceil(8) + benes, unit: SizeUnit::Bytes }
        }
    };
    Ok(sizes)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SecurityRow {
    pub n: u64,
    pub t: u64,
    pub bits: f64,
}

/// Recommended code lengths with the error count and security level, in bits,
/// of the best known attack.
pub fn security_table() -> &'static [SecurityRow] {
    const ROWS: [SecurityRow; 6] = [
        SecurityRow { n: 512, t: 21, bits: 33.0 },
        SecurityRow { n: 1024, t: 38, bits: 57.9 },
        SecurityRow { n: 2048, t: 69, bits: 103.5 },
        SecurityRow { n: 4096, t: 127, bits: 187.9 },
        SecurityRow { n: 8192, t: 234, bits: 344.6 },
        SecurityRow { n: 16384, t: 434, bits: 637.4 },
    ];
    &ROWS
}
