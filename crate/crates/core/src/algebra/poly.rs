//! Dense univariate polynomials over a [`Field`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rand::Rng;

use super::field::{Elem, Field};
use crate::error::{Error, Result};

/// Polynomial with coefficients low degree first and no trailing zeros.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    field: Field,
    coeffs: Vec<Elem>,
}

/// Result of the extended Euclidean algorithm: `r = u·f + v·g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Eea {
    pub u: Poly,
    pub v: Poly,
    pub r: Poly,
}

impl Poly {
    pub fn new(field: &Field, coeffs: Vec<Elem>) -> Poly {
        debug_assert!(coeffs.iter().all(|&c| field.contains(c)), "coefficient outside the field");
        let mut p = Poly { field: field.clone(), coeffs };
        p.trim();
        p
    }

    pub fn zero(field: &Field) -> Poly {
        Poly { field: field.clone(), coeffs: Vec::new() }
    }

    pub fn one(field: &Field) -> Poly {
        Poly::constant(field, 1)
    }

    pub fn constant(field: &Field, c: Elem) -> Poly {
        Poly::new(field, vec![c])
    }

    /// `c · z^degree`.
    pub fn monomial(field: &Field, c: Elem, degree: usize) -> Poly {
        let mut coeffs = vec![0; degree + 1];
        coeffs[degree] = c;
        Poly::new(field, coeffs)
    }

    /// The indeterminate `z`.
    pub fn z(field: &Field) -> Poly {
        Poly::monomial(field, 1, 1)
    }

    /// `z - a`.
    pub fn linear(field: &Field, a: Elem) -> Poly {
        Poly::new(field, vec![field.neg(a), 1])
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    /// Coefficient of `z^i` (zero past the degree).
    pub fn coeff(&self, i: usize) -> Elem {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn leading(&self) -> Elem {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == 1
    }

    fn check_field(&self, other: &Poly) {
        assert!(self.field == other.field, "polynomials over different fields");
    }

    /// Horner evaluation.
    pub fn eval(&self, x: Elem) -> Elem {
        let f = &self.field;
        self.coeffs.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c))
    }

    pub fn scale(&self, c: Elem) -> Poly {
        let f = &self.field;
        Poly::new(f, self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    /// Scales to leading coefficient one; the zero polynomial is returned as is.
    pub fn monic(&self) -> Poly {
        if self.is_zero() || self.is_monic() {
            return self.clone();
        }
        self.scale(self.field.inv_nonzero(self.leading()))
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Poly {
        let f = &self.field;
        let p = f.characteristic() as usize;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| {
                // i·c = c added (i mod p) times
                (0..i % p).fold(0, |acc, _| f.add(acc, c))
            })
            .collect();
        Poly::new(f, coeffs)
    }

    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        self.check_field(divisor);
        let Some(dd) = divisor.degree() else {
            return Err(Error::DivisionByZero);
        };
        let f = &self.field;
        let Some(nd) = self.degree().filter(|&nd| nd >= dd) else {
            return Ok((Poly::zero(f), self.clone()));
        };
        let lead_inv = f.inv_nonzero(divisor.leading());
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0; nd - dd + 1];
        for i in (0..=nd - dd).rev() {
            let c = f.mul(rem[i + dd], lead_inv);
            if c == 0 {
                continue;
            }
            quot[i] = c;
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = f.sub(rem[i + j], f.mul(c, d));
            }
        }
        rem.truncate(dd);
        Ok((Poly::new(f, quot), Poly::new(f, rem)))
    }

    pub fn rem(&self, modulus: &Poly) -> Result<Poly> {
        Ok(self.div_rem(modulus)?.1)
    }

    pub fn mul_mod(&self, other: &Poly, modulus: &Poly) -> Result<Poly> {
        (self * other).rem(modulus)
    }

    /// Square; uses the Frobenius shortcut in characteristic two.
    pub fn square(&self) -> Poly {
        if !self.field.is_binary() {
            return self * self;
        }
        let f = &self.field;
        let mut coeffs = vec![0; (2 * self.coeffs.len()).saturating_sub(1)];
        for (i, &c) in self.coeffs.iter().enumerate() {
            coeffs[2 * i] = f.mul(c, c);
        }
        Poly::new(f, coeffs)
    }

    pub fn pow_mod(&self, mut e: u64, modulus: &Poly) -> Result<Poly> {
        let mut base = self.rem(modulus)?;
        let mut acc = Poly::one(&self.field).rem(modulus)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_mod(&base, modulus)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.square().rem(modulus)?;
            }
        }
        Ok(acc)
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Poly {
        self.check_field(other);
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("b is nonzero");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended Euclid on `(self, g)` keeping `r = u·self + v·g` at every step.
    ///
    /// The remainder sequence starts `self, g, self mod g, ...`. With
    /// `stop_degree` the first remainder of degree at most `stop_degree` is
    /// returned as is; otherwise the result is the monic gcd with its Bézout pair.
    pub fn eea(&self, g: &Poly, stop_degree: Option<usize>) -> Eea {
        self.check_field(g);
        let field = &self.field;
        let mut prev = Eea { u: Poly::one(field), v: Poly::zero(field), r: self.clone() };
        let mut cur = Eea { u: Poly::zero(field), v: Poly::one(field), r: g.clone() };
        loop {
            if let Some(stop) = stop_degree {
                if prev.r.degree().map_or(true, |d| d <= stop) {
                    return prev;
                }
            }
            if cur.r.is_zero() {
                break;
            }
            let (quot, rem) = prev.r.div_rem(&cur.r).expect("divisor is nonzero");
            let next = Eea { u: &prev.u - &(&quot * &cur.u), v: &prev.v - &(&quot * &cur.v), r: rem };
            debug_assert!(next.check(self, g), "Bezout identity broken");
            prev = std::mem::replace(&mut cur, next);
        }
        if stop_degree.is_some() || prev.r.is_zero() {
            return prev;
        }
        let s = field.inv_nonzero(prev.r.leading());
        Eea { u: prev.u.scale(s), v: prev.v.scale(s), r: prev.r.scale(s) }
    }

    /// Inverse modulo `modulus`.
    pub fn inv_mod(&self, modulus: &Poly) -> Result<Poly> {
        let reduced = self.rem(modulus)?;
        if reduced.is_zero() {
            return Err(Error::NotInvertible);
        }
        let e = reduced.eea(modulus, None);
        if !e.r.is_one() {
            return Err(Error::NotInvertible);
        }
        e.u.rem(modulus)
    }

    /// Square root modulo `g` in characteristic two: `self^(2^(m·deg g − 1)) mod g`.
    ///
    /// Exact when `g` is irreducible, since squaring is then an automorphism of
    /// a field of order `2^(m·deg g)`.
    pub fn sqrt_mod(&self, g: &Poly) -> Result<Poly> {
        if !self.field.is_binary() {
            return Err(Error::Unsupported("square roots need characteristic 2".into()));
        }
        let t = g.degree().ok_or(Error::DivisionByZero)?;
        let steps = (self.field.degree() as usize * t).saturating_sub(1);
        let mut r = self.rem(g)?;
        for _ in 0..steps {
            r = r.square().rem(g)?;
        }
        Ok(r)
    }

    /// A nontrivial factor proving reducibility, or `None` if irreducible.
    ///
    /// Checks `gcd(z^(q^i) − z, f) = 1` for `i = 1..=deg/2`; a factor of degree
    /// `d` shows up at `i = d`, so reducible inputs usually exit early.
    pub fn irreducible_factor(&self) -> Result<Option<Poly>> {
        let d = match self.degree() {
            Some(d) if d >= 1 => d,
            _ => return Err(Error::Domain("irreducibility of a constant".into())),
        };
        if d == 1 {
            return Ok(None);
        }
        let f = self.monic();
        let z = Poly::z(&self.field);
        let q = self.field.order() as u64;
        let mut h = z.clone();
        for _ in 1..=d / 2 {
            h = h.pow_mod(q, &f)?;
            let common = (&h - &z).gcd(&f);
            if common.degree() != Some(0) {
                return Ok(Some(common));
            }
        }
        Ok(None)
    }

    pub fn is_irreducible(&self) -> Result<bool> {
        Ok(self.irreducible_factor()?.is_none())
    }

    /// Uniformly random monic polynomial of degree `t`, resampled until irreducible.
    pub fn random_monic_irreducible<R: Rng + ?Sized>(field: &Field, t: usize, rng: &mut R) -> Result<Poly> {
        if t == 0 {
            return Err(Error::InvalidParameters("Goppa polynomial degree must be positive".into()));
        }
        let q = field.order();
        loop {
            let mut coeffs: Vec<Elem> = (0..t).map(|_| rng.gen_range(0..q)).collect();
            coeffs.push(1);
            let candidate = Poly::new(field, coeffs);
            if candidate.is_irreducible()? {
                return Ok(candidate);
            }
        }
    }

    /// Coefficients as element indices, low degree first, space separated.
    pub fn to_index_string(&self) -> String {
        self.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ")
    }
}

impl Eea {
    fn check(&self, f: &Poly, g: &Poly) -> bool {
        &(&self.u * f) + &(&self.v * g) == self.r
    }
}

impl Add for &Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        self.check_field(rhs);
        let f = &self.field;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new(f, (0..n).map(|i| f.add(self.coeff(i), rhs.coeff(i))).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;

    fn sub(self, rhs: &Poly) -> Poly {
        self.check_field(rhs);
        let f = &self.field;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new(f, (0..n).map(|i| f.sub(self.coeff(i), rhs.coeff(i))).collect())
    }
}

impl Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        let f = &self.field;
        Poly::new(f, self.coeffs.iter().map(|&c| f.neg(c)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        self.check_field(rhs);
        let f = &self.field;
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(f);
        }
        let mut out = vec![0; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Poly::new(f, out)
    }
}

impl fmt::Display for Poly {
    /// Terms in increasing degree with coefficients as generator powers.
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(out, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(out, " + ")?;
            }
            first = false;
            let coeff = self.field.power_name(c);
            match (i, c) {
                (0, _) => write!(out, "{coeff}")?,
                (_, 1) => {}
                _ => write!(out, "{coeff}·")?,
            }
            match i {
                0 => {}
                1 => write!(out, "z")?,
                _ => write!(out, "z^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}
