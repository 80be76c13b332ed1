//! Binary Goppa parameter sets `(m, n, t)` and the named presets.

use std::fmt;
use std::str::FromStr;

use crate::algebra::Field;
use crate::error::{Error, Result};

/// Parameters of a binary Goppa code over GF(2^m): length `n`, degree `t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Params {
    pub m: u32,
    pub n: usize,
    pub t: usize,
    /// Modulus of GF(2^m) as a bit mask, `x^m` included.
    pub modulus: u32,
}

impl Params {
    /// Parameters over GF(2^m) with the built-in modulus.
    pub fn new(m: u32, n: usize, t: usize) -> Result<Params> {
        let modulus = Field::default_binary_modulus(m)
            .ok_or_else(|| Error::InvalidParameters(format!("no built-in field for m = {m}")))?;
        Params::with_modulus(m, n, t, modulus)
    }

    pub fn with_modulus(m: u32, n: usize, t: usize, modulus: u32) -> Result<Params> {
        let p = Params { m, n, t, modulus };
        if !(2..=16).contains(&m) {
            return Err(Error::InvalidParameters(format!("m = {m} outside 2..=16")));
        }
        if n > 1usize << m {
            return Err(Error::InvalidParameters(format!("n = {n} exceeds 2^m = {}", 1usize << m)));
        }
        if t < 1 {
            return Err(Error::InvalidParameters("t must be at least 1".into()));
        }
        if p.redundancy() >= n {
            return Err(Error::InvalidParameters(format!("k = n - m*t = {n} - {} < 1", p.redundancy())));
        }
        Ok(p)
    }

    pub fn field(&self) -> Result<Field> {
        Field::binary(self.m, self.modulus)
    }

    /// `m·t`, the number of parity-check rows.
    pub fn redundancy(&self) -> usize {
        self.m as usize * self.t
    }

    /// Designed dimension `k = n − m·t`.
    pub fn k(&self) -> usize {
        self.n - self.redundancy()
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m={} n={} t={} modulus={:#x}", self.m, self.n, self.t, self.modulus)
    }
}

/// Named parameter sets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Preset {
    /// `[12, 4]` code over GF(16) = GF(2)[x]/(x^4 + x + 1).
    Toy12,
    /// `[16, 8]` code over GF(16) = GF(2)[x]/(x^4 + x^3 + 1).
    Toy16,
    /// The original `[1024, 524]`, `t = 50` proposal.
    Original,
    Mceliece6960119,
    Mceliece8192128,
}

impl Preset {
    pub const ALL: [Preset; 5] =
        [Preset::Toy12, Preset::Toy16, Preset::Original, Preset::Mceliece6960119, Preset::Mceliece8192128];

    pub fn name(self) -> &'static str {
        match self {
            Preset::Toy12 => "toy12",
            Preset::Toy16 => "toy16",
            Preset::Original => "original",
            Preset::Mceliece6960119 => "mceliece6960119",
            Preset::Mceliece8192128 => "mceliece8192128",
        }
    }

    pub fn params(self) -> Params {
        let (m, n, t, modulus) = match self {
            Preset::Toy12 => (4, 12, 2, 0b10011),
            Preset::Toy16 => (4, 16, 2, 0b11001),
            Preset::Original => (10, 1024, 50, 0x409),
            Preset::Mceliece6960119 => (13, 6960, 119, 0x201b),
            Preset::Mceliece8192128 => (13, 8192, 128, 0x201b),
        };
        Params::with_modulus(m, n, t, modulus).expect("preset parameters are valid")
    }
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Preset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Preset> {
        Preset::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::InvalidParameters(format!("unknown preset `{s}`")))
    }
}
