//! The Niederreiter scheme: public `S·H·P`, messages are weight-`t` vectors
//! and ciphertexts their syndromes. Also the conversions between McEliece
//! ciphertexts and Niederreiter syndromes.

use rand::Rng;

use crate::error::{Error, Result};
use crate::goppa::{GoppaCode, ParityForm};
use crate::matrix::{BitMatrix, BitVec, GfMatrix, Permutation};
use crate::mceliece;
use crate::params::Params;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PublicKey {
    h_pub: BitMatrix,
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

pub fn keygen<R: Rng + ?Sized>(params: &Params, rng: &mut R) -> Result<KeyPair> {
    let code = GoppaCode::random(params, ParityForm::default(), rng)?;
    keygen_from_code(code, rng)
}

/// Key pair around a fixed binary Goppa code with fresh `S` and `P`.
pub fn keygen_from_code<R: Rng + ?Sized>(code: GoppaCode, rng: &mut R) -> Result<KeyPair> {
    let h = parity_bits(&code)?;
    let scrambler = BitMatrix::random_nonsingular(h.rows(), rng);
    let perm = Permutation::random(code.len(), rng);
    let secret = SecretKey::new(code, scrambler.matrix, scrambler.inverse, perm)?;
    Ok(KeyPair { public: secret.public_key(), secret })
}

fn parity_bits(code: &GoppaCode) -> Result<&BitMatrix> {
    let h = code
        .parity_bits()
        .ok_or_else(|| Error::Unsupported("Niederreiter keys need a binary Goppa code".into()))?;
    if h.rank() != h.rows() {
        return Err(Error::InvalidParameters("parity check must have full row rank".into()));
    }
    Ok(h)
}

impl PublicKey {
    pub fn new(h_pub: BitMatrix, t: usize) -> PublicKey {
        PublicKey { h_pub, t }
    }

    pub fn matrix(&self) -> &BitMatrix {
        &self.h_pub
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn n(&self) -> usize {
        self.h_pub.cols()
    }

    /// `n − k`, the ciphertext length.
    pub fn redundancy(&self) -> usize {
        self.h_pub.rows()
    }

    /// `c = S·H·P·eᵀ` for a message `e` of weight exactly `t`.
    pub fn encrypt(&self, e: &BitVec) -> Result<BitVec> {
        if e.len() != self.n() {
            return Err(Error::Dimension(format!("message has {} bits, expected {}", e.len(), self.n())));
        }
        if e.weight() != self.t {
            return Err(Error::WrongWeight { expected: self.t, actual: e.weight() });
        }
        Ok(self.h_pub.mul_vec(e))
    }

    pub fn to_text(&self) -> String {
        format!("niederreiter-public t {}\n{}", self.t, self.h_pub.to_text())
    }

    pub fn from_text(text: &str) -> Result<PublicKey> {
        let mut r = crate::io::TextReader::new(text);
        let t = r.tagged_value("niederreiter-public", "t")?;
        let h_pub = r.bit_matrix()?;
        r.finish()?;
        Ok(PublicKey { h_pub, t })
    }
}

impl SecretKey {
    pub fn new(code: GoppaCode, s: BitMatrix, s_inv: BitMatrix, perm: Permutation) -> Result<SecretKey> {
        let r = parity_bits(&code)?.rows();
        if s.rows() != r || s.cols() != r || s_inv.rows() != r || s_inv.cols() != r {
            return Err(Error::Dimension(format!("scrambler must be {r}x{r}")));
        }
        if s.mul(&s_inv) != BitMatrix::identity(r) {
            return Err(Error::NotInvertible);
        }
        if perm.len() != code.len() {
            return Err(Error::Dimension(format!("permutation has length {}, expected {}", perm.len(), code.len())));
        }
        Ok(SecretKey { s, s_inv, code, perm })
    }

    /// The secret key matching an arbitrary public matrix `h_pub` that spans
    /// the row space of `H·P`: solves `h_pub = S·(H·P)` for `S`.
    pub fn for_public_matrix(code: GoppaCode, perm: Permutation, h_pub: &BitMatrix) -> Result<SecretKey> {
        let hp = perm.permute_columns(parity_bits(&code)?);
        let s = hp
            .solve_left(h_pub)
            .ok_or_else(|| Error::Inconsistent("matrix is not a row transform of H·P".into()))?;
        let s_inv = s.invert().ok_or(Error::NotInvertible)?;
        SecretKey::new(code, s, s_inv, perm)
    }

    /// Niederreiter secret key for the dual `h_prime` of a McEliece public generator.
    pub fn from_mceliece(sk: &mceliece::SecretKey, h_prime: &BitMatrix) -> Result<SecretKey> {
        SecretKey::for_public_matrix(sk.code().clone(), sk.permutation().clone(), h_prime)
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

    /// `S·H·P`.
    pub fn public_key(&self) -> PublicKey {
        let h = self.code.parity_bits().expect("checked at construction");
        PublicKey { h_pub: self.perm.permute_columns(&self.s.mul(h)), t: self.code.t() }
    }

    /// Recovers the weight-`t` message of a syndrome.
    ///
    /// Any `z` with `H·zᵀ = S⁻¹·c` differs from `e·P⁻¹` by a codeword, so
    /// Patterson on `z` returns `e·P⁻¹`.
    pub fn decrypt(&self, c: &BitVec) -> Result<BitVec> {
        let h = self.code.parity_bits().expect("checked at construction");
        if c.len() != h.rows() {
            return Err(Error::Dimension(format!("ciphertext has {} bits, expected {}", c.len(), h.rows())));
        }
        let target = self.s_inv.mul_vec(c);
        let z = h
            .solve(&target.to_elems())
            .ok_or_else(|| Error::Inconsistent("syndrome outside the column space of H".into()))?;
        let e_perm = self.code.patterson_decode(&BitVec::from_elems(&z))?;
        let e = self.perm.apply_bits(&e_perm);
        if e.weight() != self.code.t() {
            return Err(Error::DecodingFailure(format!("recovered error has weight {} != t", e.weight())));
        }
        Ok(e)
    }

    pub fn to_text(&self) -> String {
        format!(
            "niederreiter-secret\n{}S\n{}perm {}\n",
            self.code.to_text(),
            self.s.to_text(),
            crate::io::join(self.perm.as_slice())
        )
    }

    pub fn from_text(text: &str) -> Result<SecretKey> {
        let mut r = crate::io::TextReader::new(text);
        r.tagged("niederreiter-secret")?;
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

/// A McEliece ciphertext as a Niederreiter one: `c·H′ᵀ`, which equals `e·H′ᵀ`
/// because `m·Ĝ` vanishes against the dual `H′` of `Ĝ`.
pub fn mce_ct_to_nie(c: &BitVec, h_prime: &BitMatrix) -> BitVec {
    h_prime.mul_vec(c)
}

/// A Niederreiter syndrome as a McEliece ciphertext: some `c` with
/// `c·H′ᵀ = z`, which is `m·G′ + y` for the weight-`t` preimage `y`.
pub fn nie_to_mce(z: &BitVec, h_prime: &BitMatrix) -> Result<BitVec> {
    h_prime
        .solve(&z.to_elems())
        .map(|c| BitVec::from_elems(&c))
        .ok_or_else(|| Error::Inconsistent("syndrome outside the column space of H'".into()))
}

/// McEliece decryption routed through Niederreiter: converts `c`, decodes the
/// syndrome for `e`, then solves `m·Ĝ = c − e`.
pub fn mce_decrypt_via_nie(
    nie: &SecretKey,
    g_hat: &BitMatrix,
    h_prime: &BitMatrix,
    c: &BitVec,
) -> Result<(BitVec, BitVec)> {
    let e = nie.decrypt(&mce_ct_to_nie(c, h_prime))?;
    let codeword = c ^ &e;
    let m = g_hat
        .transpose()
        .solve(&codeword.to_elems())
        .ok_or_else(|| Error::Inconsistent("c - e is not a codeword".into()))?;
    Ok((BitVec::from_elems(&m), e))
}

/// Niederreiter decryption routed through McEliece: lifts `z` to a word
/// `c = m·G′ + y` and decrypts it with the McEliece key for `G′`.
pub fn nie_decrypt_via_mce(mce: &mceliece::SecretKey, h_prime: &BitMatrix, z: &BitVec) -> Result<BitVec> {
    let c = nie_to_mce(z, h_prime)?;
    mce.decrypt_with_error(&c).map(|(_, y)| y)
}

#[cfg(test)]
mod tests {
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use super::*;
    use crate::kem::fixed_weight_sample;
    use crate::params::Preset;

    fn kem_example_code() -> GoppaCode {
        let f = Preset::Toy16.params().field().unwrap();
        let g = crate::algebra::Poly::new(&f, vec![f.alpha(1), 1, 1]);
        let mut support = vec![0, 1];
        support.extend((1..=14).map(|i| f.alpha(i)));
        GoppaCode::new(&g, &support).unwrap()
    }

    #[test]
    fn shapes_and_roundtrip() {
        let mut rng = ChaCha8Rng::seed_from_u64(50);
        let kp = keygen(&Preset::Toy12.params(), &mut rng).unwrap();
        assert_eq!((kp.public.redundancy(), kp.public.n()), (8, 12));
        assert_eq!(kp.public.matrix().rank(), 8);
        for _ in 0..100 {
            let e = fixed_weight_sample(12, 2, &mut rng);
            let c = kp.public.encrypt(&e).unwrap();
            assert_eq!(kp.secret.decrypt(&c).unwrap(), e);
        }
    }

    #[test]
    fn weight_is_enforced() {
        let mut rng = ChaCha8Rng::seed_from_u64(51);
        let kp = keygen(&Preset::Toy12.params(), &mut rng).unwrap();
        let err = kp.public.encrypt(&BitVec::zeros(12)).unwrap_err();
        assert!(matches!(err, Error::WrongWeight { expected: 2, actual: 0 }));
        assert!(kp.secret.decrypt(&BitVec::zeros(8)).is_err());
    }

    #[test]
    fn linearity() {
        let mut rng = ChaCha8Rng::seed_from_u64(52);
        let kp = keygen(&Preset::Toy12.params(), &mut rng).unwrap();
        for _ in 0..20 {
            let e1 = fixed_weight_sample(12, 2, &mut rng);
            let e2 = fixed_weight_sample(12, 2, &mut rng);
            let sum = &kp.public.encrypt(&e1).unwrap() ^ &kp.public.encrypt(&e2).unwrap();
            assert_eq!(sum, kp.public.matrix().mul_vec(&(&e1 ^ &e2)));
        }
    }

    #[test]
    fn kem_example_with_identity_and_systematic_scramblers() {
        let code = kem_example_code();
        let h = code.parity_bits().unwrap().clone();
        let e = BitVec::from_support(16, &[0, 1]);
        let id = BitMatrix::identity(8);
        let sk = SecretKey::new(code.clone(), id.clone(), id, Permutation::identity(16)).unwrap();
        let c = sk.public_key().encrypt(&e).unwrap();
        assert_eq!(c, &h.column(0) ^ &h.column(1));
        assert_eq!(sk.decrypt(&c).unwrap(), e);

        // S = (leading block)^-1 turns the public matrix into (I | T)
        let lead = h.select_columns(&(0..8).collect::<Vec<_>>());
        let s = lead.invert().unwrap();
        let sk = SecretKey::new(code, s, lead, Permutation::identity(16)).unwrap();
        let c = sk.public_key().encrypt(&e).unwrap();
        assert_eq!(c, "11000000".parse().unwrap());
        assert_eq!(sk.decrypt(&c).unwrap(), e);
    }

    #[test]
    fn mceliece_through_niederreiter() {
        let mut rng = ChaCha8Rng::seed_from_u64(53);
        for _ in 0..10 {
            let kp = mceliece::keygen(&Preset::Toy12.params(), &mut rng).unwrap();
            let h_prime = kp.public.generator().nullspace();
            let nie = SecretKey::from_mceliece(&kp.secret, &h_prime).unwrap();
            assert_eq!(nie.public_key().matrix(), &h_prime);
            for _ in 0..5 {
                let m = BitVec::random(4, &mut rng);
                let e = fixed_weight_sample(12, 2, &mut rng);
                let c = kp.public.encrypt_with_error(&m, &e).unwrap();
                assert_eq!(mce_ct_to_nie(&c, &h_prime), mce_ct_to_nie(&e, &h_prime));
                let via = mce_decrypt_via_nie(&nie, kp.public.generator(), &h_prime, &c).unwrap();
                assert_eq!(via, kp.secret.decrypt_with_error(&c).unwrap());
                assert_eq!(via, (m, e));
            }
        }
    }

    #[test]
    fn niederreiter_through_mceliece() {
        let mut rng = ChaCha8Rng::seed_from_u64(54);
        for _ in 0..10 {
            let kp = keygen(&Preset::Toy12.params(), &mut rng).unwrap();
            let h_prime = kp.public.matrix().clone();
            let g_prime = h_prime.nullspace();
            let mce = mceliece::SecretKey::for_public_matrix(
                kp.secret.code().clone(),
                kp.secret.permutation().clone(),
                &g_prime,
            )
            .unwrap();
            assert_eq!(mce.public_key().generator(), &g_prime);
            for _ in 0..5 {
                let e = fixed_weight_sample(12, 2, &mut rng);
                let z = kp.public.encrypt(&e).unwrap();
                assert_eq!(nie_decrypt_via_mce(&mce, &h_prime, &z).unwrap(), kp.secret.decrypt(&z).unwrap());
            }
        }
    }

    #[test]
    fn conversions_compose_to_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(55);
        let kp = mceliece::keygen(&Preset::Toy12.params(), &mut rng).unwrap();
        let g_hat = kp.public.generator();
        let h_prime = g_hat.nullspace();
        for _ in 0..50 {
            let z = BitVec::random(8, &mut rng);
            let c = nie_to_mce(&z, &h_prime).unwrap();
            assert_eq!(mce_ct_to_nie(&c, &h_prime), z);
            let c = kp.public.encrypt(&BitVec::random(4, &mut rng), &mut rng).unwrap();
            let back = nie_to_mce(&mce_ct_to_nie(&c, &h_prime), &h_prime).unwrap();
            // equal up to a codeword
            assert!(mce_ct_to_nie(&(&back ^ &c), &h_prime).is_zero());
        }
        let codeword = g_hat.vec_mul(&BitVec::random(4, &mut rng));
        assert!(mce_ct_to_nie(&codeword, &h_prime).is_zero());
    }

    #[test]
    fn key_text_roundtrip() {
        let mut rng = ChaCha8Rng::seed_from_u64(56);
        let kp = keygen(&Preset::Toy12.params(), &mut rng).unwrap();
        let public = PublicKey::from_text(&kp.public.to_text()).unwrap();
        assert_eq!(public, kp.public);
        let secret = SecretKey::from_text(&kp.secret.to_text()).unwrap();
        let e = fixed_weight_sample(12, 2, &mut rng);
        assert_eq!(secret.decrypt(&public.encrypt(&e).unwrap()).unwrap(), e);
    }
}
