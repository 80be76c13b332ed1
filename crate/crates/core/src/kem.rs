//! Classic McEliece key encapsulation: systematic public key `T`,
//! ciphertext `(C0, C1)` and decapsulation with implicit rejection.
//!
//! Wire format: bit `i` of a vector goes to byte `i / 8`, bit `i % 8`
//! (low bit first). The ciphertext bytes are `pack(C0) ‖ C1`; hash inputs
//! are a one-byte prefix followed by `pack(e)` and, for the session key,
//! the ciphertext bytes. [`BitEncoding::Ascii`] swaps the hash input for
//! `0`/`1` character strings.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use sha2::{Digest, Sha256};
use shake::{ExtendableOutput, Shake256, Update, XofReader};

use crate::algebra::{Elem, Poly};
use crate::error::{Error, Result};
use crate::goppa::{GoppaCode, ParityForm};
use crate::io::{Header, TextReader};
use crate::matrix::{BitMatrix, BitVec, GfMatrix};
use crate::params::Params;

/// Session key and hash output length in bytes.
pub const KEY_BYTES: usize = 32;

/// Keygen gives up after this many Goppa draws without a systematic form.
pub const MAX_KEYGEN_ATTEMPTS: u64 = 10_000;

/// Uniform vector of length `n` and weight exactly `t`.
pub fn fixed_weight_sample<R: Rng + ?Sized>(n: usize, t: usize, rng: &mut R) -> BitVec {
    assert!(t <= n, "weight {t} exceeds length {n}");
    BitVec::from_support(n, &rand::seq::index::sample(rng, n, t).into_vec())
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum HashAlg {
    #[default]
    Shake256,
    Sha256,
}

impl fmt::Display for HashAlg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HashAlg::Shake256 => "shake256",
            HashAlg::Sha256 => "sha256",
        })
    }
}

impl FromStr for HashAlg {
    type Err = Error;

    fn from_str(s: &str) -> Result<HashAlg> {
        match s {
            "shake256" => Ok(HashAlg::Shake256),
            "sha256" => Ok(HashAlg::Sha256),
            _ => Err(Error::InvalidParameters(format!("unknown hash `{s}`"))),
        }
    }
}

/// How prefixes and bit vectors are turned into hash input.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum BitEncoding {
    /// One prefix byte, vectors packed low bit first.
    #[default]
    Packed,
    /// Everything written as ASCII `0`/`1` characters: the prefix as eight
    /// bits high bit first, vectors in coordinate order, `C1` bytes high bit first.
    Ascii,
}

/// `H(prefix, parts...)` with a 32-byte output.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct HashConfig {
    pub alg: HashAlg,
    pub encoding: BitEncoding,
}

impl HashConfig {
    pub fn new(alg: HashAlg) -> HashConfig {
        HashConfig { alg, encoding: BitEncoding::Packed }
    }

    pub fn with_encoding(alg: HashAlg, encoding: BitEncoding) -> HashConfig {
        HashConfig { alg, encoding }
    }

    fn prefix(&self, b: u8) -> Vec<u8> {
        match self.encoding {
            BitEncoding::Packed => vec![b],
            BitEncoding::Ascii => format!("{b:08b}").into_bytes(),
        }
    }

    fn vector(&self, v: &BitVec) -> Vec<u8> {
        match self.encoding {
            BitEncoding::Packed => v.to_bytes(),
            BitEncoding::Ascii => v.to_string().into_bytes(),
        }
    }

    fn ciphertext(&self, c0: &BitVec, c1: &[u8]) -> Vec<u8> {
        match self.encoding {
            BitEncoding::Packed => ciphertext_bytes(c0, c1),
            BitEncoding::Ascii => {
                let mut out = self.vector(c0);
                out.extend(c1.iter().flat_map(|b| format!("{b:08b}").into_bytes()));
                out
            }
        }
    }

    /// `C1 = H(2, e)`.
    pub fn confirm(&self, e: &BitVec) -> [u8; KEY_BYTES] {
        self.hash_raw(&[&self.prefix(2), &self.vector(e)])
    }

    /// `K = H(b, e, C)`.
    pub fn session_key(&self, b: u8, e: &BitVec, c0: &BitVec, c1: &[u8]) -> SessionKey {
        SessionKey(self.hash_raw(&[&self.prefix(b), &self.vector(e), &self.ciphertext(c0, c1)]))
    }

    fn hash_raw(&self, parts: &[&[u8]]) -> [u8; KEY_BYTES] {
        let mut out = [0u8; KEY_BYTES];
        match self.alg {
            HashAlg::Shake256 => {
                let mut h = Shake256::default();
                for p in parts {
                    h.update(p);
                }
                h.finalize_xof().read(&mut out);
            }
            HashAlg::Sha256 => {
                let mut h = Sha256::new();
                for p in parts {
                    Digest::update(&mut h, p);
                }
                out.copy_from_slice(&h.finalize());
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PublicKey {
    params: Params,
    t_mat: BitMatrix,
}

#[derive(Clone, Debug)]
pub struct SecretKey {
    params: Params,
    s: BitVec,
    code: GoppaCode,
}

#[derive(Clone, Debug)]
pub struct KeyPair {
    pub public: PublicKey,
    pub secret: SecretKey,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ciphertext {
    pub c0: BitVec,
    pub c1: [u8; KEY_BYTES],
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct SessionKey(pub [u8; KEY_BYTES]);

impl fmt::Debug for SessionKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SessionKey({})", hex::encode(self.0))
    }
}

impl SessionKey {
    pub fn to_hex(&self) -> String {
        hex::encode(self.0)
    }
}

/// One key-generation attempt: `None` when the leading `mt×mt` block of the
/// expanded parity check is singular.
pub fn keygen_attempt<R: Rng + ?Sized>(params: &Params, rng: &mut R) -> Result<Option<KeyPair>> {
    let code = GoppaCode::random(params, ParityForm::Vandermonde, rng)?;
    let s = BitVec::random(params.n, rng);
    match keypair_from_code(params, code, s) {
        Ok(kp) => Ok(Some(kp)),
        Err(Error::NotInvertible) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Draws Goppa codes until one has a systematic parity check.
pub fn keygen<R: Rng + ?Sized>(params: &Params, rng: &mut R) -> Result<KeyPair> {
    for _ in 0..MAX_KEYGEN_ATTEMPTS {
        if let Some(kp) = keygen_attempt(params, rng)? {
            return Ok(kp);
        }
    }
    Err(Error::Exhausted { iterations: MAX_KEYGEN_ATTEMPTS })
}

/// Key pair for a fixed `g`, support and rejection string `s`.
pub fn keygen_from(params: &Params, g: &Poly, support: &[Elem], s: BitVec) -> Result<KeyPair> {
    let code = GoppaCode::with_form(g, support, ParityForm::Vandermonde)?;
    keypair_from_code(params, code, s)
}

fn keypair_from_code(params: &Params, code: GoppaCode, s: BitVec) -> Result<KeyPair> {
    check_code(params, &code)?;
    if s.len() != params.n {
        return Err(Error::Dimension(format!("s has {} bits, expected {}", s.len(), params.n)));
    }
    let h = code.parity_bits().expect("binary code");
    let t_mat = h.systematic_form().ok_or(Error::NotInvertible)?;
    Ok(KeyPair { public: PublicKey { params: *params, t_mat }, secret: SecretKey { params: *params, s, code } })
}

fn check_code(params: &Params, code: &GoppaCode) -> Result<()> {
    let field = params.field()?;
    if code.field() != &field || code.len() != params.n || code.t() != params.t {
        return Err(Error::InvalidParameters(format!("Goppa code does not match {params}")));
    }
    Ok(())
}

fn ciphertext_bytes(c0: &BitVec, c1: &[u8]) -> Vec<u8> {
    let mut out = c0.to_bytes();
    out.extend_from_slice(c1);
    out
}

impl PublicKey {
    pub fn new(params: Params, t_mat: BitMatrix) -> Result<PublicKey> {
        if t_mat.rows() != params.redundancy() || t_mat.cols() != params.k() {
            return Err(Error::Dimension(format!(
                "T must be {}x{}, found {}x{}",
                params.redundancy(),
                params.k(),
                t_mat.rows(),
                t_mat.cols()
            )));
        }
        Ok(PublicKey { params, t_mat })
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn matrix(&self) -> &BitMatrix {
        &self.t_mat
    }

    /// `(I | T)·eᵀ`.
    pub fn syndrome(&self, e: &BitVec) -> BitVec {
        let r = self.params.redundancy();
        &e.slice(0, r) ^ &self.t_mat.mul_vec(&e.slice(r, self.params.n))
    }

    pub fn encaps<R: Rng + ?Sized>(&self, hash: &HashConfig, rng: &mut R) -> (SessionKey, Ciphertext) {
        let e = fixed_weight_sample(self.params.n, self.params.t, rng);
        self.encaps_with_error(hash, &e).expect("sampled error has the right shape")
    }

    /// Encapsulation for a caller-chosen error of weight `t`.
    pub fn encaps_with_error(&self, hash: &HashConfig, e: &BitVec) -> Result<(SessionKey, Ciphertext)> {
        if e.len() != self.params.n {
            return Err(Error::Dimension(format!("error has {} bits, expected {}", e.len(), self.params.n)));
        }
        if e.weight() != self.params.t {
            return Err(Error::WrongWeight { expected: self.params.t, actual: e.weight() });
        }
        let c0 = self.syndrome(e);
        let c1 = hash.confirm(e);
        let key = hash.session_key(1, e, &c0, &c1);
        Ok((key, Ciphertext { c0, c1 }))
    }

    pub fn to_text(&self, hash: &HashConfig) -> String {
        let mut s = header_line("kem-public", &self.params, hash);
        for row in self.t_mat.row_iter() {
            s.push_str(&format!("r {}\n", hex::encode(row.to_bytes())));
        }
        s
    }

    pub fn from_text(text: &str) -> Result<(PublicKey, HashConfig)> {
        let mut r = TextReader::new(text);
        let (params, hash) = read_header(&mut r, "kem-public")?;
        let mut rows = Vec::with_capacity(params.redundancy());
        for _ in 0..params.redundancy() {
            let ln = r.line_no();
            let bytes = r.hex("r")?;
            rows.push(BitVec::from_bytes(params.k(), &bytes).map_err(|e| Error::parse(ln, e.to_string()))?);
        }
        r.finish()?;
        let t_mat = BitMatrix::from_rows(&rows)?;
        Ok((PublicKey::new(params, t_mat)?, hash))
    }
}

impl SecretKey {
    pub fn new(params: Params, s: BitVec, code: GoppaCode) -> Result<SecretKey> {
        check_code(&params, &code)?;
        if s.len() != params.n {
            return Err(Error::Dimension(format!("s has {} bits, expected {}", s.len(), params.n)));
        }
        Ok(SecretKey { params, s, code })
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn code(&self) -> &GoppaCode {
        &self.code
    }

    pub fn rejection_string(&self) -> &BitVec {
        &self.s
    }

    /// The weight-`t` error behind `C0`, or `None` when decoding fails.
    ///
    /// Decodes `v = (C0 ‖ 0)`; the error `e = v + c` is accepted only if it
    /// has weight `t` and the same syndrome as `v`, i.e. `(I | T)·eᵀ = C0`.
    pub fn recover_error(&self, c0: &BitVec) -> Option<BitVec> {
        let n = self.params.n;
        let v = c0.concat(&BitVec::zeros(n - c0.len()));
        let e = self.code.patterson_decode(&v).ok()?;
        (e.weight() == self.params.t && self.code.syndrome_bits(&e) == self.code.syndrome_bits(&v)).then_some(e)
    }

    /// Decapsulation with implicit rejection: never reports failure for a
    /// well-formed ciphertext, returning `H(0, s, C)` instead.
    pub fn decaps(&self, hash: &HashConfig, ct: &Ciphertext) -> Result<SessionKey> {
        if ct.c0.len() != self.params.redundancy() {
            return Err(Error::Dimension(format!(
                "C0 has {} bits, expected {}",
                ct.c0.len(),
                self.params.redundancy()
            )));
        }
        let mut b = 1u8;
        let mut e = match self.recover_error(&ct.c0) {
            Some(e) => e,
            None => {
                b = 0;
                self.s.clone()
            }
        };
        if hash.confirm(&e) != ct.c1 {
            e = self.s.clone();
            b = 0;
        }
        Ok(hash.session_key(b, &e, &ct.c0, &ct.c1))
    }

    pub fn to_text(&self, hash: &HashConfig) -> String {
        format!(
            "{}s {}\n{}",
            header_line("kem-secret", &self.params, hash),
            hex::encode(self.s.to_bytes()),
            self.code.to_text()
        )
    }

    pub fn from_text(text: &str) -> Result<(SecretKey, HashConfig)> {
        let mut r = TextReader::new(text);
        let (params, hash) = read_header(&mut r, "kem-secret")?;
        let ln = r.line_no();
        let s = BitVec::from_bytes(params.n, &r.hex("s")?).map_err(|e| Error::parse(ln, e.to_string()))?;
        let ln = r.line_no();
        let code = r.goppa()?;
        r.finish()?;
        let sk = SecretKey::new(params, s, code).map_err(|e| Error::parse(ln, e.to_string()))?;
        Ok((sk, hash))
    }
}

impl Ciphertext {
    /// `pack(C0) ‖ C1`.
    pub fn to_bytes(&self) -> Vec<u8> {
        ciphertext_bytes(&self.c0, &self.c1)
    }

    pub fn from_bytes(params: &Params, bytes: &[u8]) -> Result<Ciphertext> {
        let r = params.redundancy();
        let c0_len = r.div_ceil(8);
        if bytes.len() != c0_len + KEY_BYTES {
            return Err(Error::Dimension(format!(
                "ciphertext has {} bytes, expected {}",
                bytes.len(),
                c0_len + KEY_BYTES
            )));
        }
        let c0 = BitVec::from_bytes(r, &bytes[..c0_len])?;
        let mut c1 = [0u8; KEY_BYTES];
        c1.copy_from_slice(&bytes[c0_len..]);
        Ok(Ciphertext { c0, c1 })
    }

    /// Length in bits, `m·t + 256`.
    pub fn bit_len(&self) -> usize {
        self.c0.len() + 8 * KEY_BYTES
    }

    pub fn to_text(&self, params: &Params, hash: &HashConfig) -> String {
        format!("{}c {}\n", header_line("kem-ciphertext", params, hash), hex::encode(self.to_bytes()))
    }

    pub fn from_text(text: &str) -> Result<(Ciphertext, Params, HashConfig)> {
        let mut r = TextReader::new(text);
        let (params, hash) = read_header(&mut r, "kem-ciphertext")?;
        let ln = r.line_no();
        let bytes = r.hex("c")?;
        r.finish()?;
        let ct = Ciphertext::from_bytes(&params, &bytes).map_err(|e| Error::parse(ln, e.to_string()))?;
        Ok((ct, params, hash))
    }
}

fn header_line(kind: &str, p: &Params, hash: &HashConfig) -> String {
    let enc = match hash.encoding {
        BitEncoding::Packed => "packed",
        BitEncoding::Ascii => "ascii",
    };
    format!("{kind} m={} n={} t={} modulus={:#x} hash={} encoding={enc}\n", p.m, p.n, p.t, p.modulus, hash.alg)
}

fn read_header(r: &mut TextReader<'_>, kind: &str) -> Result<(Params, HashConfig)> {
    let line = r.line_no();
    let h: Header = r.header(kind)?;
    let modulus: String = h.get("modulus")?;
    let modulus = u32::from_str_radix(modulus.trim_start_matches("0x"), 16)
        .map_err(|_| Error::parse(line, format!("bad modulus `{modulus}`")))?;
    let params = Params::with_modulus(h.get("m")?, h.get("n")?, h.get("t")?, modulus)
        .map_err(|e| Error::parse(line, e.to_string()))?;
    let alg: String = h.get("hash")?;
    let alg = alg.parse().map_err(|e: Error| Error::parse(line, e.to_string()))?;
    let encoding = match h.get::<String>("encoding")?.as_str() {
        "packed" => BitEncoding::Packed,
        "ascii" => BitEncoding::Ascii,
        other => return Err(Error::parse(line, format!("unknown encoding `{other}`"))),
    };
    Ok((params, HashConfig::with_encoding(alg, encoding)))
}
