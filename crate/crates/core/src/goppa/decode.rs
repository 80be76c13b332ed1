use super::GoppaCode;
use crate::algebra::{Elem, Poly};
use crate::error::{Error, Result};
use crate::matrix::{BitVec, GfMatrix, MatGF};

fn failure(msg: impl Into<String>) -> Error {
    Error::DecodingFailure(msg.into())
}

impl GoppaCode {
    /// Error vector of `y` via the key equation `σ·S ≡ w (mod g)`.
    ///
    /// Works over any characteristic and corrects up to `⌊t/2⌋` errors. For
    /// each candidate weight `r` the coefficients of monic `σ` (degree `r`)
    /// and `w` (degree `< r`) are solved as one linear system; the answer is
    /// accepted only if `σ` splits over the support and the recovered error
    /// reproduces the syndrome.
    pub fn key_equation_decode(&self, y: &[Elem]) -> Result<Vec<Elem>> {
        let s = self.syndrome(y);
        if s.is_zero() {
            return Ok(vec![0; self.len()]);
        }
        let f = self.field();
        let t = self.t();
        let g = self.goppa_polynomial();
        // shifted[i] = z^i·S mod g
        let mut shifted = vec![s.clone()];
        for _ in 0..t / 2 {
            let next = (shifted.last().unwrap() * &Poly::z(f)).rem(g)?;
            shifted.push(next);
        }
        for r in 1..=t / 2 {
            let mut a = MatGF::zeros(f, t, 2 * r);
            let mut b = vec![0; t];
            for (l, bl) in b.iter_mut().enumerate() {
                for (i, sh) in shifted.iter().take(r).enumerate() {
                    a.set(l, i, sh.coeff(l));
                }
                if l < r {
                    a.set(l, r + l, f.neg(1));
                }
                *bl = f.neg(shifted[r].coeff(l));
            }
            let Some(x) = a.solve(&b) else { continue };
            let mut sigma = x[..r].to_vec();
            sigma.push(1);
            let sigma = Poly::new(f, sigma);
            let w = Poly::new(f, x[r..].to_vec());
            if let Some(e) = self.errors_from_locator(&sigma, &w) {
                if self.syndrome(&e) == s {
                    return Ok(e);
                }
            }
        }
        Err(failure("no error locator of weight <= t/2 fits the syndrome"))
    }

    /// `e_j = w(α_j) / σ'(α_j)` on the roots of `σ`, if they are all in the
    /// support, simple, and give values in the prime subfield.
    fn errors_from_locator(&self, sigma: &Poly, w: &Poly) -> Option<Vec<Elem>> {
        let f = self.field();
        let roots = self.roots_in_support(sigma);
        if roots.len() != sigma.degree()? {
            return None;
        }
        let ds = sigma.derivative();
        let mut e = vec![0; self.len()];
        for j in roots {
            let a = self.support()[j];
            let v = f.div(w.eval(a), ds.eval(a)).ok()?;
            if v == 0 || !f.in_prime_subfield(v) {
                return None;
            }
            e[j] = v;
        }
        Some(e)
    }

    /// Error vector of a binary word by Patterson's algorithm, correcting up to `t` errors.
    ///
    /// 1. `S = S(y)`; zero means no error.
    /// 2. `T = S^(−1) mod g`; if `T = z` then `σ = z`.
    /// 3. Otherwise `P = √(T + z) mod g`, and Euclid on `(P, g)` stopped at
    ///    degree `⌊t/2⌋` gives `u ≡ v·P` with small `u`, `v`.
    /// 4. `σ = u² + z·v²`; its roots in the support mark the errors.
    pub fn patterson_decode(&self, y: &BitVec) -> Result<BitVec> {
        if !self.is_binary() {
            return Err(Error::Unsupported("Patterson decoding needs a binary code".into()));
        }
        let f = self.field();
        let g = self.goppa_polynomial();
        let t = self.t();
        let s = self.syndrome_bits(y);
        if s.is_zero() {
            return Ok(BitVec::zeros(self.len()));
        }
        let tinv = s.inv_mod(g).map_err(|_| failure("syndrome is not invertible modulo g"))?;
        let z = Poly::z(f);
        let sigma = if tinv == z {
            z
        } else {
            let p = (&tinv + &z).sqrt_mod(g)?;
            let eea = p.eea(g, Some(t / 2));
            let (u, v) = (eea.r, eea.u);
            &u.square() + &(&z * &v.square())
        };
        let degree = sigma.degree().ok_or_else(|| failure("error locator vanished"))?;
        if degree > t {
            return Err(failure(format!("error locator has degree {degree} > t = {t}")));
        }
        let roots = self.roots_in_support(&sigma);
        if roots.len() != degree {
            return Err(failure(format!("error locator of degree {degree} has {} roots in the support", roots.len())));
        }
        let e = BitVec::from_support(self.len(), &roots);
        if self.syndrome_bits(&e) != s {
            return Err(failure("recovered error does not match the syndrome"));
        }
        Ok(e)
    }

    /// Error vector of `y` with the decoder suited to the code: Patterson for
    /// binary codes, the key equation otherwise.
    pub fn decode_error(&self, y: &[Elem]) -> Result<Vec<Elem>> {
        if self.is_binary() {
            let bits = BitVec::from_elems(y);
            Ok(self.patterson_decode(&bits)?.to_elems())
        } else {
            self.key_equation_decode(y)
        }
    }

    /// `(codeword, error)` with `y = codeword + error`.
    pub fn decode(&self, y: &[Elem]) -> Result<(Vec<Elem>, Vec<Elem>)> {
        let e = self.decode_error(y)?;
        let f = self.base_field();
        let c = y.iter().zip(&e).map(|(&a, &b)| f.sub(a, b)).collect();
        Ok((c, e))
    }
}
