//! Generic linear codes over GF(q): metrics, bounds, classic constructions
//! and table-driven decoding.

mod decode;

use num_bigint::BigUint;
use num_traits::One;

use crate::algebra::{Elem, Field};
use crate::error::{Error, Result};
use crate::matrix::{GfMatrix, MatGF};

pub use decode::{StandardArray, SyndromeTable};

/// Largest enumeration (in bits, `log2` of the vector count) any routine here will attempt.
pub const ENUMERATION_LIMIT_BITS: u32 = 24;

/// An `[n, k]` linear code given by a full-rank generator and a parity check.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearCode {
    g: MatGF,
    h: MatGF,
}

/// Number of nonzero coordinates.
pub fn weight(x: &[Elem]) -> usize {
    x.iter().filter(|&&v| v != 0).count()
}

/// Hamming distance; equals `weight(x - y)`.
pub fn distance(x: &[Elem], y: &[Elem]) -> usize {
    assert_eq!(x.len(), y.len(), "length mismatch");
    x.iter().zip(y).filter(|(a, b)| a != b).count()
}

/// `Σ_{i ≤ r} C(n, i)(q − 1)^i`, the number of vectors within distance `r` of a point.
pub fn sphere_size(n: u64, r: u64, q: u64) -> BigUint {
    assert!(r <= n, "radius exceeds length");
    let mut binom = BigUint::one();
    let mut power = BigUint::one();
    let mut total = BigUint::one();
    for i in 1..=r {
        binom = binom * (n - i + 1) / i;
        power *= q - 1;
        total += &binom * &power;
    }
    total
}

pub(crate) fn enumeration_guard(q: u32, len: usize) -> Result<()> {
    let bits = (q as f64).log2() * len as f64;
    if bits > ENUMERATION_LIMIT_BITS as f64 + 1e-9 {
        return Err(Error::EnumerationTooLarge {
            requested: format!("{q}^{len}"),
            limit_bits: ENUMERATION_LIMIT_BITS,
        });
    }
    Ok(())
}

/// Vector with base-q digits of `index`, first coordinate least significant.
pub(crate) fn vector_at(index: u64, n: usize, q: u32) -> Vec<Elem> {
    let mut idx = index;
    (0..n)
        .map(|_| {
            let d = (idx % q as u64) as Elem;
            idx /= q as u64;
            d
        })
        .collect()
}

pub(crate) fn index_of(x: &[Elem], q: u32) -> u64 {
    x.iter().rev().fold(0, |acc, &d| acc * q as u64 + d as u64)
}

/// Parity check of the code generated by `g`.
///
/// Uses `H = (−Aᵀ | I)` when `G = (I | A)`, a nullspace basis otherwise.
pub fn dual_from_generator(g: &MatGF) -> Result<MatGF> {
    let (k, n) = (g.rows(), g.cols());
    if g.rank() != k {
        return Err(Error::Dimension(format!("generator has rank {} < {k} rows", g.rank())));
    }
    let identity = g.select_columns(&(0..k).collect::<Vec<_>>());
    if identity == MatGF::identity(g.field(), k) {
        let a = g.select_columns(&(k..n).collect::<Vec<_>>());
        let mut h = MatGF::zeros(g.field(), n - k, n);
        for i in 0..n - k {
            for j in 0..k {
                h.set(i, j, g.field().neg(a.get(j, i)));
            }
            h.set(i, k + i, 1);
        }
        return Ok(h);
    }
    Ok(g.nullspace())
}

impl LinearCode {
    pub fn from_generator(g: MatGF) -> Result<LinearCode> {
        let h = dual_from_generator(&g)?;
        Ok(LinearCode { g, h })
    }

    /// Code with the given parity check; redundant rows are allowed.
    pub fn from_parity_check(h: &MatGF) -> Result<LinearCode> {
        let g = h.nullspace();
        let r = h.clone().rref();
        let rows: Vec<usize> = (0..r.rank).collect();
        let h = r.reduced.select_rows(&rows);
        Ok(LinearCode { g, h })
    }

    /// The `[n, 1, n]` repetition code.
    pub fn repetition(field: &Field, n: usize) -> Result<LinearCode> {
        let g = MatGF::from_rows(field, &[vec![1; n]])?;
        LinearCode::from_generator(g)
    }

    /// The binary even-weight code `E_n` with standard-form generator `(I_{n-1} | 1)`.
    pub fn even_weight(n: usize) -> Result<LinearCode> {
        if n < 2 {
            return Err(Error::InvalidParameters("E_n needs n >= 2".into()));
        }
        let rows: Vec<Vec<Elem>> = (1..n)
            .map(|i| {
                let mut r = vec![0; n];
                r[i - 1] = 1;
                r[n - 1] = 1;
                r
            })
            .collect();
        LinearCode::from_generator(MatGF::from_rows(&Field::gf2(), &rows)?)
    }

    pub fn field(&self) -> &Field {
        self.g.field()
    }

    pub fn len(&self) -> usize {
        self.g.cols()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn dimension(&self) -> usize {
        self.g.rows()
    }

    pub fn generator(&self) -> &MatGF {
        &self.g
    }

    pub fn parity_check(&self) -> &MatGF {
        &self.h
    }

    pub fn encode(&self, m: &[Elem]) -> Vec<Elem> {
        self.g.vec_mul(m)
    }

    /// `H·yᵀ`.
    pub fn syndrome(&self, y: &[Elem]) -> Vec<Elem> {
        self.h.mul_vec(y)
    }

    pub fn contains(&self, y: &[Elem]) -> bool {
        self.syndrome(y).iter().all(|&s| s == 0)
    }

    /// Number of codewords, `q^k`.
    pub fn size(&self) -> BigUint {
        BigUint::from(self.field().order()).pow(self.dimension() as u32)
    }

    /// All `q^k` codewords in message-index order.
    pub fn codewords(&self) -> Result<impl Iterator<Item = Vec<Elem>> + '_> {
        let q = self.field().order();
        enumeration_guard(q, self.dimension())?;
        let count = (q as u64).pow(self.dimension() as u32);
        Ok((0..count).map(move |i| self.encode(&vector_at(i, self.dimension(), q))))
    }

    /// Minimum weight of a nonzero codeword, by enumeration. `None` for the zero code.
    pub fn min_distance(&self) -> Result<Option<usize>> {
        Ok(self.codewords()?.map(|c| weight(&c)).filter(|&w| w > 0).min())
    }

    /// `(u | u + v)` for `u ∈ C1`, `v ∈ C2`.
    pub fn plotkin(c1: &LinearCode, c2: &LinearCode) -> Result<LinearCode> {
        if c1.len() != c2.len() {
            return Err(Error::Dimension(format!("lengths {} and {} differ", c1.len(), c2.len())));
        }
        if c1.field() != c2.field() {
            return Err(Error::FieldMismatch);
        }
        let n = c1.len();
        let (k1, k2) = (c1.dimension(), c2.dimension());
        let mut g = MatGF::zeros(c1.field(), k1 + k2, 2 * n);
        for i in 0..k1 {
            for j in 0..n {
                let v = c1.g.get(i, j);
                g.set(i, j, v);
                g.set(i, n + j, v);
            }
        }
        for i in 0..k2 {
            for j in 0..n {
                g.set(k1 + i, n + j, c2.g.get(i, j));
            }
        }
        LinearCode::from_generator(g)
    }

    /// First-order Reed-Muller code `[2^m, m + 1, 2^(m−1)]` by iterating
    /// `R(m + 1) = (u | u + v)` with `u ∈ R(m)` and `v` in the repetition code.
    pub fn reed_muller_1(m: u32) -> Result<LinearCode> {
        if !(2..=6).contains(&m) {
            return Err(Error::InvalidParameters(format!("Reed-Muller order m = {m} outside 2..=6")));
        }
        let mut code = LinearCode::even_weight(4)?;
        for step in 2..m {
            let rep = LinearCode::repetition(&Field::gf2(), 1 << step)?;
            code = LinearCode::plotkin(&code, &rep)?;
        }
        Ok(code)
    }

    /// The zero code `{0}` of length `n`.
    pub fn zero(field: &Field, n: usize) -> LinearCode {
        LinearCode { g: MatGF::zeros(field, 0, n), h: MatGF::identity(field, n) }
    }
}
