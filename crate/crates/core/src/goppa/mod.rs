//! Goppa codes Γ(L, g): construction, parity checks, encoding and decoding.

mod decode;

use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::algebra::{Elem, Field, Poly};
use crate::error::{Error, Result};
use crate::matrix::{BitMatrix, BitVec, GfMatrix, MatGF};
use crate::params::Params;

/// Draw cap for [`GoppaCode::random`].
pub const MAX_DRAWS: u64 = 10_000;

/// Layout of the parity check over the extension field.
///
/// Both describe the same code; they differ by the invertible factor built
/// from the coefficients of `g`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum ParityForm {
    /// `h_ij = α_j^(i−1) · g(α_j)^(−1)`, the `X·Y` factor.
    #[default]
    Vandermonde,
    /// Row `i` holds the coefficient of `z^(i−1)` in `(z − α_j)^(−1) mod g`,
    /// so `H·yᵀ` is the coefficient vector of the syndrome polynomial.
    Syndrome,
}

impl fmt::Display for ParityForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ParityForm::Vandermonde => "vandermonde",
            ParityForm::Syndrome => "syndrome",
        })
    }
}

impl std::str::FromStr for ParityForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<ParityForm> {
        match s {
            "vandermonde" => Ok(ParityForm::Vandermonde),
            "syndrome" => Ok(ParityForm::Syndrome),
            _ => Err(Error::InvalidParameters(format!("unknown parity form `{s}`"))),
        }
    }
}

/// A Goppa code over the prime subfield GF(p) of `field`.
#[derive(Clone)]
pub struct GoppaCode {
    field: Field,
    base: Field,
    g: Poly,
    support: Vec<Elem>,
    form: ParityForm,
    /// Coefficients of `(z − α_j)^(−1) mod g`, one column per position.
    inverses: MatGF,
    h_ext: MatGF,
    h_base: MatGF,
    rank: usize,
    generator: OnceLock<MatGF>,
}

impl GoppaCode {
    /// Builds Γ(L, g) with the default [`ParityForm::Vandermonde`] layout.
    pub fn new(g: &Poly, support: &[Elem]) -> Result<GoppaCode> {
        GoppaCode::with_form(g, support, ParityForm::default())
    }

    pub fn with_form(g: &Poly, support: &[Elem], form: ParityForm) -> Result<GoppaCode> {
        let field = g.field().clone();
        let t = match g.degree() {
            Some(t) if t >= 1 => t,
            _ => return Err(Error::InvalidParameters("Goppa polynomial must have degree >= 1".into())),
        };
        if support.is_empty() {
            return Err(Error::InvalidParameters("support must not be empty".into()));
        }
        let mut seen = HashMap::with_capacity(support.len());
        for (j, &a) in support.iter().enumerate() {
            if !field.contains(a) {
                return Err(Error::Domain(format!("support entry {a} at index {j} is not a field element")));
            }
            if let Some(first) = seen.insert(a, j) {
                return Err(Error::SupportRepeated { first, second: j });
            }
        }
        let base = Field::prime(field.characteristic())?;
        let n = support.len();
        let mut inverses = MatGF::zeros(&field, t, n);
        let mut h_ext = MatGF::zeros(&field, t, n);
        for (j, &a) in support.iter().enumerate() {
            let ga = g.eval(a);
            if ga == 0 {
                return Err(Error::SupportRoot { index: j });
            }
            let ga_inv = field.inv_nonzero(ga);
            // (g(z) − g(a)) / (z − a) by synthetic division, then scale by −g(a)^(−1)
            let scale = field.neg(ga_inv);
            let mut q = 0;
            for i in (0..t).rev() {
                q = field.add(g.coeff(i + 1), field.mul(a, q));
                inverses.set(i, j, field.mul(q, scale));
            }
            match form {
                ParityForm::Syndrome => {}
                ParityForm::Vandermonde => {
                    let mut v = ga_inv;
                    for i in 0..t {
                        h_ext.set(i, j, v);
                        v = field.mul(v, a);
                    }
                }
            }
        }
        if form == ParityForm::Syndrome {
            h_ext = inverses.clone();
        }
        let h_base = expand(&h_ext, &base);
        let rank = h_base.rank();
        Ok(GoppaCode {
            field,
            base,
            g: g.clone(),
            support: support.to_vec(),
            form,
            inverses,
            h_ext,
            h_base,
            rank,
            generator: OnceLock::new(),
        })
    }

    /// A binary Goppa code with random irreducible monic `g` of degree `t` and
    /// a uniformly random sequence of `n` distinct support elements.
    ///
    /// Draws are repeated until the dimension is exactly `n − m·t`.
    pub fn random<R: Rng + ?Sized>(params: &Params, form: ParityForm, rng: &mut R) -> Result<GoppaCode> {
        let field = params.field()?;
        let mut elems: Vec<Elem> = field.elements().collect();
        for _ in 0..MAX_DRAWS {
            let g = Poly::random_monic_irreducible(&field, params.t, rng)?;
            let (support, _) = elems.partial_shuffle(rng, params.n);
            match GoppaCode::with_form(&g, support, form) {
                Ok(code) if code.dimension() == params.k() => return Ok(code),
                Ok(_) | Err(Error::SupportRoot { .. }) => continue,
                Err(e) => return Err(e),
            }
        }
        Err(Error::Exhausted { iterations: MAX_DRAWS })
    }

    /// The extension field the support and `g` live in.
    pub fn field(&self) -> &Field {
        &self.field
    }

    /// The field of code symbols, GF(p).
    pub fn base_field(&self) -> &Field {
        &self.base
    }

    pub fn is_binary(&self) -> bool {
        self.base.order() == 2
    }

    pub fn goppa_polynomial(&self) -> &Poly {
        &self.g
    }

    pub fn support(&self) -> &[Elem] {
        &self.support
    }

    pub fn form(&self) -> ParityForm {
        self.form
    }

    pub fn len(&self) -> usize {
        self.support.len()
    }

    pub fn is_empty(&self) -> bool {
        self.support.is_empty()
    }

    /// Degree of `g`.
    pub fn t(&self) -> usize {
        self.g.degree().expect("g is nonzero")
    }

    /// Extension degree `m`.
    pub fn m(&self) -> usize {
        self.field.degree() as usize
    }

    /// Dimension `k = n − rank(H)`, at least `n − m·t`.
    pub fn dimension(&self) -> usize {
        self.len() - self.rank
    }

    /// `t×n` parity check over the extension field.
    pub fn parity_check_ext(&self) -> &MatGF {
        &self.h_ext
    }

    /// `(m·t)×n` parity check over GF(p); each extension entry becomes a
    /// column of `m` coordinates, constant coefficient on top.
    pub fn parity_check(&self) -> &MatGF {
        &self.h_base
    }

    pub fn parity_bits(&self) -> Option<&BitMatrix> {
        self.h_base.as_bits()
    }

    /// `k×n` generator, a nullspace basis of the parity check (computed on first use).
    pub fn generator(&self) -> &MatGF {
        self.generator.get_or_init(|| self.h_base.nullspace())
    }

    pub fn generator_bits(&self) -> Option<&BitMatrix> {
        self.generator().as_bits()
    }

    pub fn encode(&self, msg: &[Elem]) -> Vec<Elem> {
        self.generator().vec_mul(msg)
    }

    /// `S(y) = Σ y_i / (z − α_i) mod g`.
    pub fn syndrome(&self, y: &[Elem]) -> Poly {
        assert_eq!(y.len(), self.len(), "word length mismatch");
        let f = &self.field;
        let t = self.t();
        let mut acc = vec![0; t];
        for (j, &yj) in y.iter().enumerate() {
            if yj == 0 {
                continue;
            }
            for (i, a) in acc.iter_mut().enumerate() {
                *a = f.add(*a, f.mul(yj, self.inverses.get(i, j)));
            }
        }
        Poly::new(f, acc)
    }

    /// [`GoppaCode::syndrome`] for a binary word.
    pub fn syndrome_bits(&self, y: &BitVec) -> Poly {
        assert_eq!(y.len(), self.len(), "word length mismatch");
        let f = &self.field;
        let mut acc = vec![0; self.t()];
        for j in y.ones() {
            for (i, a) in acc.iter_mut().enumerate() {
                *a = f.add(*a, self.inverses.get(i, j));
            }
        }
        Poly::new(f, acc)
    }

    pub fn is_codeword(&self, y: &[Elem]) -> bool {
        self.syndrome(y).is_zero()
    }

    /// Solves `Gᵀ·mᵀ = cᵀ` for the message of a codeword.
    pub fn recover_message(&self, c: &[Elem]) -> Result<Vec<Elem>> {
        self.generator()
            .transpose()
            .solve(c)
            .ok_or_else(|| Error::Inconsistent("word is not in the row space of G".into()))
    }

    /// Positions whose support element is a root of `p`.
    pub(crate) fn roots_in_support(&self, p: &Poly) -> Vec<usize> {
        self.support.iter().enumerate().filter(|(_, &a)| p.eval(a) == 0).map(|(j, _)| j).collect()
    }

    /// Text description: field descriptor and form, then `g` and `L` as element indices.
    pub fn to_text(&self) -> String {
        let idx = |v: &[Elem]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
        format!(
            "goppa {} {}\ng {}\nL {}\n",
            self.field.descriptor(),
            self.form,
            idx(self.g.coeffs()),
            idx(&self.support)
        )
    }

    /// Parses [`GoppaCode::to_text`]; `first_line` numbers the first line for error messages.
    pub fn from_text_at(text: &str, first_line: usize) -> Result<GoppaCode> {
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + first_line, l));
        let mut next = |tag: &str| -> Result<(usize, Vec<String>)> {
            let (ln, line) = lines.next().ok_or_else(|| Error::parse(first_line, format!("missing `{tag}` line")))?;
            let mut words = line.split_whitespace().map(str::to_owned);
            match words.next() {
                Some(w) if w == tag => Ok((ln, words.collect())),
                _ => Err(Error::parse(ln, format!("expected a `{tag}` line"))),
            }
        };
        let (ln, head) = next("goppa")?;
        let [descriptor, form] = &head[..] else {
            return Err(Error::parse(ln, "expected `goppa <field> <form>`"));
        };
        let field = Field::from_descriptor(descriptor).map_err(|e| Error::parse(ln, e.to_string()))?;
        let form: ParityForm = form.parse().map_err(|e: Error| Error::parse(ln, e.to_string()))?;
        let elems = |ln: usize, words: Vec<String>| -> Result<Vec<Elem>> {
            words
                .iter()
                .map(|w| match w.parse::<Elem>() {
                    Ok(v) if field.contains(v) => Ok(v),
                    _ => Err(Error::parse(ln, format!("`{w}` is not a field element index"))),
                })
                .collect()
        };
        let (gl, g) = next("g")?;
        let g = Poly::new(&field, elems(gl, g)?);
        let (ll, l) = next("L")?;
        let support = elems(ll, l)?;
        GoppaCode::with_form(&g, &support, form).map_err(|e| Error::parse(gl, e.to_string()))
    }
}

/// Replaces every entry by its `m` base-field coordinates stacked vertically.
fn expand(h: &MatGF, base: &Field) -> MatGF {
    let field = h.field();
    let m = field.degree() as usize;
    let mut out = MatGF::zeros(base, h.rows() * m, h.cols());
    for i in 0..h.rows() {
        for j in 0..h.cols() {
            let v = h.get(i, j);
            if v == 0 {
                continue;
            }
            for (d, digit) in field.digits(v).into_iter().enumerate() {
                if digit != 0 {
                    out.set(i * m + d, j, digit);
                }
            }
        }
    }
    out
}

impl fmt::Debug for GoppaCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "GoppaCode [n={}, k={}, t={}] over {:?}, g = {}",
            self.len(),
            self.dimension(),
            self.t(),
            self.field,
            self.g
        )
    }
}

#[cfg(test)]
mod tests;
