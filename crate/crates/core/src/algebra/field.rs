//! Finite fields GF(p^m) with exponent/logarithm tables.
//!
//! An element is the integer `Σ c_i p^i` encoding its coefficient vector
//! `(c_0, .., c_{m-1})` in the polynomial basis `1, x, .., x^{m-1}` of
//! `GF(p)[x] / (modulus)`. For `p = 2` this is the usual bit mask.

use std::fmt;
use std::sync::Arc;

use super::poly::Poly;
use crate::error::{Error, Result};

/// A field element in its integer encoding. Always `< q`.
pub type Elem = u32;

/// Largest supported field order.
pub const MAX_ORDER: u64 = 1 << 20;

/// Primitive binary polynomials (bit masks) used when a caller only names `m`.
/// Degree 13 is the `z^13 + z^4 + z^3 + z + 1` modulus used by the KEM parameter sets.
const BINARY_MODULI: [u32; 21] = [
    0, 0b11, 0b111, 0b1011, 0b10011, 0b100101, 0b1000011, 0b10001001, 0x11d, 0x211, 0x409,
    0x805, 0x1053, 0x201b, 0x4443, 0x8003, 0x1100b, 0x20009, 0x40081, 0x80027, 0x100009,
];

#[derive(Clone)]
pub struct Field {
    inner: Arc<Inner>,
}

struct Inner {
    p: u32,
    m: u32,
    q: u32,
    /// Monic modulus over GF(p), low degree first, length m + 1.
    modulus: Vec<u32>,
    generator: Elem,
    /// exp[i] = generator^i for i in 0..2(q-1), doubled to skip a reduction in `mul`.
    exp: Vec<Elem>,
    log: Vec<u32>,
}

impl Field {
    /// Builds GF(p^m) from a monic irreducible modulus given low degree first.
    ///
    /// If the residue of `x` is not primitive, the first generator in index
    /// order is used for the tables instead.
    pub fn new(p: u32, m: u32, modulus: &[u32]) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if m == 0 {
            return Err(Error::InvalidModulus("extension degree must be at least 1".into()));
        }
        let q = (p as u64).checked_pow(m).filter(|&q| q <= MAX_ORDER).ok_or_else(|| {
            Error::InvalidModulus(format!("field order {p}^{m} exceeds 2^20"))
        })? as u32;
        if modulus.len() != m as usize + 1 {
            return Err(Error::InvalidModulus(format!(
                "expected {} coefficients for a degree-{m} modulus, got {}",
                m + 1,
                modulus.len()
            )));
        }
        if modulus[m as usize] != 1 {
            return Err(Error::InvalidModulus("modulus must be monic".into()));
        }
        if let Some(&c) = modulus.iter().find(|&&c| c >= p) {
            return Err(Error::InvalidModulus(format!("coefficient {c} is not in GF({p})")));
        }
        if m > 1 {
            let base = Field::prime(p)?;
            let f = Poly::new(&base, modulus.to_vec());
            if let Some(factor) = f.irreducible_factor()? {
                return Err(Error::ReducibleModulus { factor: factor.to_string() });
            }
        }
        Ok(Self::build(p, m, q, modulus.to_vec()))
    }

    /// The prime field GF(p).
    pub fn prime(p: u32) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p as u64 > MAX_ORDER {
            return Err(Error::InvalidModulus(format!("field order {p} exceeds 2^20")));
        }
        // x over GF(p): elements are plain residues.
        Ok(Self::build(p, 1, p, vec![0, 1]))
    }

    /// GF(2^m) from a modulus bit mask, e.g. `0b10011` for `x^4 + x + 1`.
    pub fn binary(m: u32, modulus_mask: u32) -> Result<Field> {
        let coeffs: Vec<u32> = (0..=m).map(|i| (modulus_mask >> i) & 1).collect();
        if modulus_mask >> (m + 1) != 0 {
            return Err(Error::InvalidModulus(format!(
                "mask {modulus_mask:#b} has degree above {m}"
            )));
        }
        Field::new(2, m, &coeffs)
    }

    /// GF(2^m) with a built-in primitive modulus.
    pub fn binary_default(m: u32) -> Result<Field> {
        let mask = *BINARY_MODULI
            .get(m as usize)
            .filter(|&&mask| mask != 0)
            .ok_or_else(|| Error::InvalidModulus(format!("no default modulus for m = {m}")))?;
        Field::binary(m, mask)
    }

    pub fn gf2() -> Field {
        Field::prime(2).expect("2 is prime")
    }

    /// Default binary modulus mask for degree `m`, if tabulated.
    pub fn default_binary_modulus(m: u32) -> Option<u32> {
        BINARY_MODULI.get(m as usize).copied().filter(|&mask| mask != 0)
    }

    fn build(p: u32, m: u32, q: u32, modulus: Vec<u32>) -> Field {
        let raw = RawArith { p, m, q, modulus: &modulus };
        let generator = raw.find_generator();
        let n = (q - 1) as usize;
        let mut exp = vec![0; 2 * n.max(1)];
        let mut log = vec![0; q as usize];
        let mut x: Elem = 1;
        for i in 0..n {
            exp[i] = x;
            log[x as usize] = i as u32;
            x = raw.mul(x, generator);
        }
        debug_assert_eq!(x, 1, "generator order must be q - 1");
        for i in n..2 * n {
            exp[i] = exp[i - n];
        }
        Field { inner: Arc::new(Inner { p, m, q, modulus, generator, exp, log }) }
    }

    #[inline]
    pub fn characteristic(&self) -> u32 {
        self.inner.p
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.inner.m
    }

    #[inline]
    pub fn order(&self) -> u32 {
        self.inner.q
    }

    #[inline]
    pub fn is_binary(&self) -> bool {
        self.inner.p == 2
    }

    pub fn modulus(&self) -> &[u32] {
        &self.inner.modulus
    }

    /// Modulus as a bit mask (binary fields only).
    pub fn modulus_mask(&self) -> Option<u32> {
        self.is_binary()
            .then(|| self.inner.modulus.iter().enumerate().fold(0, |acc, (i, &c)| acc | (c << i)))
    }

    /// The primitive element the tables are built on.
    #[inline]
    pub fn generator(&self) -> Elem {
        self.inner.generator
    }

    /// `generator^i` for any integer exponent.
    #[inline]
    pub fn alpha(&self, i: i64) -> Elem {
        let n = (self.inner.q - 1) as i64;
        self.inner.exp[i.rem_euclid(n.max(1)) as usize]
    }

    /// Discrete logarithm to the base `generator`; `None` for zero.
    #[inline]
    pub fn log(&self, a: Elem) -> Option<u32> {
        (a != 0).then(|| self.inner.log[a as usize])
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.inner.q
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        if self.inner.p == 2 {
            a ^ b
        } else {
            self.digitwise(a, b, |x, y, p| (x + y) % p)
        }
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        if self.inner.p == 2 {
            a ^ b
        } else {
            self.digitwise(a, b, |x, y, p| (x + p - y) % p)
        }
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        if self.inner.p == 2 {
            a
        } else {
            self.digitwise(0, a, |x, y, p| (x + p - y) % p)
        }
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a == 0 || b == 0 {
            return 0;
        }
        let inner = &*self.inner;
        inner.exp[(inner.log[a as usize] + inner.log[b as usize]) as usize]
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a == 0 {
            return Err(Error::ZeroInverse);
        }
        Ok(self.inv_nonzero(a))
    }

    /// Inverse of an element the caller knows to be nonzero.
    #[inline]
    pub fn inv_nonzero(&self, a: Elem) -> Elem {
        debug_assert_ne!(a, 0);
        let inner = &*self.inner;
        let n = inner.q - 1;
        inner.exp[((n - inner.log[a as usize]) % n.max(1)) as usize]
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^e` with the exponent reduced mod `q - 1` for nonzero `a`; `0^0 = 1`.
    pub fn pow(&self, a: Elem, e: i64) -> Result<Elem> {
        if a == 0 {
            return match e {
                0 => Ok(1),
                e if e > 0 => Ok(0),
                _ => Err(Error::ZeroInverse),
            };
        }
        let n = (self.inner.q - 1) as i64;
        let l = self.inner.log[a as usize] as i64;
        Ok(self.inner.exp[((l as i128 * e as i128).rem_euclid(n.max(1) as i128)) as usize])
    }

    /// Base-p coordinates of `a`, constant term first.
    pub fn digits(&self, a: Elem) -> Vec<u32> {
        let p = self.inner.p;
        let mut a = a;
        (0..self.inner.m)
            .map(|_| {
                let d = a % p;
                a /= p;
                d
            })
            .collect()
    }

    pub fn from_digits(&self, digits: &[u32]) -> Elem {
        digits.iter().rev().fold(0, |acc, &d| acc * self.inner.p + d % self.inner.p)
    }

    /// Embeds an element of the prime subfield.
    pub fn from_prime(&self, c: u32) -> Elem {
        c % self.inner.p
    }

    /// Whether `a` lies in the prime subfield GF(p).
    pub fn in_prime_subfield(&self, a: Elem) -> bool {
        a < self.inner.p
    }

    pub fn contains(&self, a: Elem) -> bool {
        a < self.inner.q
    }

    /// `a` as `0`, `1` or a power of the generator, e.g. `a^9`.
    pub fn power_name(&self, a: Elem) -> String {
        match self.log(a) {
            None => "0".into(),
            Some(0) => "1".into(),
            Some(1) => "a".into(),
            Some(l) => format!("a^{l}"),
        }
    }

    /// Compact descriptor `p,m,modulus` used by the text formats.
    pub fn descriptor(&self) -> String {
        let sep = if self.inner.p > 10 { ":" } else { "" };
        let modulus = self.inner.modulus.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(sep);
        format!("{},{},{}", self.inner.p, self.inner.m, modulus)
    }

    /// Inverse of [`Field::descriptor`].
    pub fn from_descriptor(text: &str) -> Result<Field> {
        let mut parts = text.trim().split(',');
        let (Some(p), Some(m), Some(modulus), None) =
            (parts.next(), parts.next(), parts.next(), parts.next())
        else {
            return Err(Error::InvalidModulus(format!("bad field descriptor `{text}`")));
        };
        let p: u32 = p.parse().map_err(|_| Error::InvalidModulus(format!("bad p `{p}`")))?;
        let m: u32 = m.parse().map_err(|_| Error::InvalidModulus(format!("bad m `{m}`")))?;
        let bad = |c: &str| Error::InvalidModulus(format!("bad coefficient `{c}`"));
        let coeffs = if modulus.contains(':') {
            modulus.split(':').map(|c| c.parse().map_err(|_| bad(c))).collect::<Result<Vec<u32>>>()?
        } else {
            modulus
                .chars()
                .map(|c| c.to_digit(10).ok_or_else(|| bad(&c.to_string())))
                .collect::<Result<Vec<_>>>()?
        };
        if m == 1 && coeffs == [0, 1] {
            return Field::prime(p);
        }
        Field::new(p, m, &coeffs)
    }

    fn digitwise(&self, a: Elem, b: Elem, op: impl Fn(u32, u32, u32) -> u32) -> Elem {
        let p = self.inner.p;
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        let mut scale = 1;
        for _ in 0..self.inner.m {
            out += op(a % p, b % p, p) * scale;
            a /= p;
            b /= p;
            scale *= p;
        }
        out
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.p == other.inner.p
                && self.inner.modulus == other.inner.modulus
                && self.inner.generator == other.inner.generator)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{}) [{}]", self.inner.p, self.inner.m, self.descriptor())
    }
}

/// Table-free arithmetic used only while building the tables.
struct RawArith<'a> {
    p: u32,
    m: u32,
    q: u32,
    modulus: &'a [u32],
}

impl RawArith<'_> {
    fn mul(&self, a: Elem, b: Elem) -> Elem {
        let (p, m) = (self.p as u64, self.m as usize);
        if m == 1 {
            return ((a as u64 * b as u64) % p) as Elem;
        }
        if p == 2 {
            let mask: u64 = self.modulus.iter().enumerate().fold(0, |acc, (i, &c)| acc | ((c as u64) << i));
            let mut prod: u64 = 0;
            for i in 0..m {
                if (b >> i) & 1 == 1 {
                    prod ^= (a as u64) << i;
                }
            }
            for i in (m..2 * m - 1).rev() {
                if (prod >> i) & 1 == 1 {
                    prod ^= mask << (i - m);
                }
            }
            return prod as Elem;
        }
        let digits = |mut v: u32| -> Vec<u64> {
            (0..m)
                .map(|_| {
                    let d = v as u64 % p;
                    v /= self.p;
                    d
                })
                .collect()
        };
        let (da, db) = (digits(a), digits(b));
        let mut prod = vec![0u64; 2 * m - 1];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        for i in (m..2 * m - 1).rev() {
            let c = prod[i];
            if c != 0 {
                for (j, &mc) in self.modulus.iter().enumerate() {
                    prod[i - m + j] = (prod[i - m + j] + (p - c) * mc as u64) % p;
                }
            }
        }
        prod[..m].iter().rev().fold(0, |acc, &d| acc * self.p + d as u32)
    }

    fn pow(&self, a: Elem, mut e: u64) -> Elem {
        let (mut base, mut acc) = (a, 1);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    fn is_generator(&self, g: Elem) -> bool {
        if g == 0 {
            return false;
        }
        let n = (self.q - 1) as u64;
        prime_factors(n).into_iter().all(|l| self.pow(g, n / l) != 1)
    }

    /// The residue of x when primitive, otherwise the first generator in index order.
    fn find_generator(&self) -> Elem {
        if self.q == 2 {
            return 1;
        }
        if self.m > 1 && self.is_generator(self.p) {
            return self.p;
        }
        (1..self.q).find(|&g| self.is_generator(g)).expect("every finite field has a generator")
    }
}

pub(crate) fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let p = p as u64;
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}
