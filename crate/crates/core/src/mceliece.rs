//! The McEliece public-key scheme: `Ĝ = S·G·P`, ciphertext `c = m·Ĝ + z`.

use rand::Rng;

use crate::error::{Error, Result};
use crate::goppa::{GoppaCode, ParityForm};
use crate::kem::fixed_weight_sample;
use crate::matrix::{BitMatrix, BitVec, GfMatrix, Permutation};
use crate::params::Params;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PublicKey {
    g_hat: BitMatrix,
    t: usize,
}

#[derive(Clone, Debug)]
pub struct SecretKey {
    s: BitMatrix,
    s_inv: BitMatrix,
    code: GoppaCode,
    perm: Permutation,
}

#[derive(Clone, Debug)]
pub struct KeyPair {
    pub public: PublicKey,
    pub secret: SecretKey,
}

/// Generates a key pair for a random binary Goppa code with the given parameters.
pub fn keygen<R: Rng + ?Sized>(params: &Params, rng: &mut R) -> Result<KeyPair> {
    let code = GoppaCode::random(params, ParityForm::default(), rng)?;
    keygen_from_code(code, rng)
}

/// Key pair around a fixed binary Goppa code with fresh `S` and `P`.
pub fn keygen_from_code<R: Rng + ?Sized>(code: GoppaCode, rng: &mut R) -> Result<KeyPair> {
    let g = code
        .generator_bits()
        .ok_or_else(|| Error::Unsupported("McEliece keys need a binary Goppa code".into()))?
        .clone();
    let scrambler = BitMatrix::random_nonsingular(g.rows(), rng);
    let perm = Permutation::random(code.len(), rng);
    SecretKey::new(code, scrambler.matrix, scrambler.inverse, perm).map(|secret| KeyPair {
        public: secret.public_key(),
        secret,
    })
}

impl PublicKey {
    pub fn new(g_hat: BitMatrix, t: usize) -> PublicKey {
        PublicKey { g_hat, t }
    }

    pub fn generator(&self) -> &BitMatrix {
        &self.g_hat
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn n(&self) -> usize {
        self.g_hat.cols()
    }

    pub fn k(&self) -> usize {
        self.g_hat.rows()
    }

    /// `m·Ĝ + z` with `z` a uniformly random vector of weight `t`.
    pub fn encrypt<R: Rng + ?Sized>(&self, msg: &BitVec, rng: &mut R) -> Result<BitVec> {
        let z = fixed_weight_sample(self.n(), self.t, rng);
        self.encrypt_with_error(msg, &z)
    }

    /// `m·Ĝ + z` for a caller-chosen error.
    pub fn encrypt_with_error(&self, msg: &BitVec, z: &BitVec) -> Result<BitVec> {
        if msg.len() != self.k() {
            return Err(Error::Dimension(format!("message has {} bits, expected {}", msg.len(), self.k())));
        }
        if z.len() != self.n() {
            return Err(Error::Dimension(format!("error has {} bits, expected {}", z.len(), self.n())));
        }
        Ok(&self.g_hat.vec_mul(msg) ^ z)
    }

    pub fn to_text(&self) -> String {
        format!("mceliece-public t {}\n{}", self.t, self.g_hat.to_text())
    }

    pub fn from_text(text: &str) -> Result<PublicKey> {
        let mut r = crate::io::TextReader::new(text);
        let t = r.tagged_value("mceliece-public", "t")?;
        let g_hat = r.bit_matrix()?;
        r.finish()?;
        Ok(PublicKey { g_hat, t })
    }
}

impl SecretKey {
    pub fn new(code: GoppaCode, s: BitMatrix, s_inv: BitMatrix, perm: Permutation) -> Result<SecretKey> {
        let k = code.dimension();
        if s.rows() != k || s.cols() != k || s_inv.rows() != k || s_inv.cols() != k {
            return Err(Error::Dimension(format!("scrambler must be {k}x{k}")));
        }
        if s.mul(&s_inv) != BitMatrix::identity(k) {
            return Err(Error::NotInvertible);
        }
        if perm.len() != code.len() {
            return Err(Error::Dimension(format!("permutation has length {}, expected {}", perm.len(), code.len())));
        }
        if !code.is_binary() {
            return Err(Error::Unsupported("McEliece keys need a binary Goppa code".into()));
        }
        Ok(SecretKey { s, s_inv, code, perm })
    }

    /// The secret key matching an arbitrary generator `g_pub` of the code
    /// permuted by `perm`: solves `g_pub = S·(G·P)` for `S`.
    pub fn for_public_matrix(code: GoppaCode, perm: Permutation, g_pub: &BitMatrix) -> Result<SecretKey> {
        let g = code
            .generator_bits()
            .ok_or_else(|| Error::Unsupported("McEliece keys need a binary Goppa code".into()))?;
        let s = perm
            .permute_columns(g)
            .solve_left(g_pub)
            .ok_or_else(|| Error::Inconsistent("matrix is not a row transform of G·P".into()))?;
        let s_inv = s.invert().ok_or(Error::NotInvertible)?;
        SecretKey::new(code, s, s_inv, perm)
    }

    pub fn code(&self) -> &GoppaCode {
        &self.code
    }

    pub fn scrambler(&self) -> &BitMatrix {
        &self.s
    }

    pub fn permutation(&self) -> &Permutation {
        &self.perm
    }

    fn generator(&self) -> &BitMatrix {
        self.code.generator_bits().expect("binary code")
    }

    /// `Ĝ = S·G·P`.
    pub fn public_key(&self) -> PublicKey {
        let g_hat = self.perm.permute_columns(&self.s.mul(self.generator()));
        PublicKey { g_hat, t: self.code.t() }
    }

    pub fn decrypt(&self, c: &BitVec) -> Result<BitVec> {
        self.decrypt_with_error(c).map(|(m, _)| m)
    }

    /// Message and error vector of a ciphertext.
    ///
    /// `c·P⁻¹ = m·S·G + z·P⁻¹`; Patterson removes `z·P⁻¹`, the information
    /// set of `G` gives `m·S`, and `S⁻¹` gives `m`. The result is re-encoded
    /// and compared with `c` before it is returned.
    pub fn decrypt_with_error(&self, c: &BitVec) -> Result<(BitVec, BitVec)> {
        if c.len() != self.code.len() {
            return Err(Error::Dimension(format!("ciphertext has {} bits, expected {}", c.len(), self.code.len())));
        }
        let unpermuted = self.perm.apply_inverse_bits(c);
        let e_hat = self.code.patterson_decode(&unpermuted)?;
        let codeword = &unpermuted ^ &e_hat;
        let ms = BitVec::from_elems(&self.code.recover_message(&codeword.to_elems())?);
        let m = self.s_inv.vec_mul(&ms);
        let z = self.perm.apply_bits(&e_hat);
        let reencoded = &self.perm.apply_bits(&self.generator().vec_mul(&self.s.vec_mul(&m))) ^ &z;
        if &reencoded != c {
            return Err(Error::DecodingFailure("re-encryption does not reproduce the ciphertext".into()));
        }
        Ok((m, z))
    }

    pub fn to_text(&self) -> String {
        format!(
            "mceliece-secret\n{}S\n{}perm {}\n",
            self.code.to_text(),
            self.s.to_text(),
            crate::io::join(self.perm.as_slice())
        )
    }

    pub fn from_text(text: &str) -> Result<SecretKey> {
        let mut r = crate::io::TextReader::new(text);
        r.tagged("mceliece-secret")?;
        let code = r.goppa()?;
        r.tagged("S")?;
        let line = r.line_no();
        let s = r.bit_matrix()?;
        let perm = r.permutation("perm")?;
        r.finish()?;
        let s_inv = s.invert().ok_or_else(|| Error::parse(line, "scrambler is singular"))?;
        SecretKey::new(code, s, s_inv, perm).map_err(|e| Error::parse(line, e.to_string()))
    }
}
