//! C ABI for the `codecrypt` crate.
//!
//! Keys are opaque heap handles released with the matching `*_free`
//! function. Every call returns a [`CcStatus`]; outputs are written only on
//! `CC_STATUS_OK`. Bit vectors cross the boundary as one byte per bit (0 or 1);
//! KEM ciphertexts and session keys as packed bytes. Panics are caught at
//! the boundary and reported as `CC_STATUS_INTERNAL`.

use std::ffi::{c_char, CStr};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::slice;

use codecrypt::kem::{self, Ciphertext, HashAlg, HashConfig, KEY_BYTES};
use codecrypt::matrix::BitVec;
use codecrypt::params::{Params, Preset};
use codecrypt::{mceliece, Error};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Length in bytes of a KEM session key.
pub const CC_SESSION_KEY_BYTES: usize = 32;

const _: () = assert!(CC_SESSION_KEY_BYTES == KEY_BYTES);

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Parse = 3,
    DecodingFailure = 4,
    Exhausted = 5,
    BufferTooSmall = 6,
    Internal = 7,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CcPreset {
    Toy12 = 0,
    Toy16 = 1,
    Original = 2,
    Mceliece6960119 = 3,
    Mceliece8192128 = 4,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CcHash {
    Shake256 = 0,
    Sha256 = 1,
}

/// Opaque KEM public key.
pub struct CcKemPublicKey {
    key: kem::PublicKey,
    hash: HashConfig,
}

/// Opaque KEM secret key.
pub struct CcKemSecretKey {
    key: kem::SecretKey,
    hash: HashConfig,
}

/// Opaque McEliece public key.
pub struct CcMcePublicKey(mceliece::PublicKey);

/// Opaque McEliece secret key.
pub struct CcMceSecretKey(mceliece::SecretKey);

impl From<Error> for CcStatus {
    fn from(e: Error) -> CcStatus {
        match e {
            Error::Parse { .. } => CcStatus::Parse,
            Error::DecodingFailure(_) | Error::WrongWeight { .. } => CcStatus::DecodingFailure,
            Error::Exhausted { .. } => CcStatus::Exhausted,
            _ => CcStatus::InvalidArgument,
        }
    }
}

impl From<CcPreset> for Preset {
    fn from(p: CcPreset) -> Preset {
        match p {
            CcPreset::Toy12 => Preset::Toy12,
            CcPreset::Toy16 => Preset::Toy16,
            CcPreset::Original => Preset::Original,
            CcPreset::Mceliece6960119 => Preset::Mceliece6960119,
            CcPreset::Mceliece8192128 => Preset::Mceliece8192128,
        }
    }
}

fn guard(f: impl FnOnce() -> Result<(), CcStatus>) -> CcStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => CcStatus::Ok,
        Ok(Err(status)) => status,
        Err(_) => CcStatus::Internal,
    }
}

unsafe fn input<'a>(data: *const u8, len: usize) -> Result<&'a [u8], CcStatus> {
    if len == 0 {
        return Ok(&[]);
    }
    if data.is_null() {
        return Err(CcStatus::NullPointer);
    }
    Ok(slice::from_raw_parts(data, len))
}

unsafe fn output<'a>(data: *mut u8, len: usize, needed: usize) -> Result<&'a mut [u8], CcStatus> {
    if len < needed {
        return Err(CcStatus::BufferTooSmall);
    }
    if data.is_null() {
        return Err(CcStatus::NullPointer);
    }
    Ok(slice::from_raw_parts_mut(data, needed))
}

unsafe fn handle<'a, T>(p: *const T) -> Result<&'a T, CcStatus> {
    p.as_ref().ok_or(CcStatus::NullPointer)
}

fn bits_in(bytes: &[u8]) -> Result<BitVec, CcStatus> {
    if bytes.iter().any(|&b| b > 1) {
        return Err(CcStatus::InvalidArgument);
    }
    Ok(BitVec::from_bools(bytes.iter().map(|&b| b == 1)))
}

fn bits_out(v: &BitVec, out: &mut [u8]) {
    for (o, b) in out.iter_mut().zip(v.iter()) {
        *o = u8::from(b);
    }
}

fn hash_config(h: CcHash) -> HashConfig {
    HashConfig::new(match h {
        CcHash::Shake256 => HashAlg::Shake256,
        CcHash::Sha256 => HashAlg::Sha256,
    })
}

/// Static, NUL-terminated description of a status code.
#[no_mangle]
pub extern "C" fn cc_status_message(status: CcStatus) -> *const c_char {
    let msg: &'static [u8] = match status {
        CcStatus::Ok => b"ok\0",
        CcStatus::NullPointer => b"null pointer argument\0",
        CcStatus::InvalidArgument => b"invalid argument\0",
        CcStatus::Parse => b"parse error\0",
        CcStatus::DecodingFailure => b"decoding failure\0",
        CcStatus::Exhausted => b"search budget exhausted\0",
        CcStatus::BufferTooSmall => b"output buffer too small\0",
        CcStatus::Internal => b"internal error\0",
    };
    msg.as_ptr().cast()
}

/// Generates a KEM key pair for a preset, deterministically from `seed`.
///
/// # Safety
/// `out_pk` and `out_sk` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cc_kem_keygen(
    preset: CcPreset,
    hash: CcHash,
    seed: u64,
    out_pk: *mut *mut CcKemPublicKey,
    out_sk: *mut *mut CcKemSecretKey,
) -> CcStatus {
    guard(|| {
        if out_pk.is_null() || out_sk.is_null() {
            return Err(CcStatus::NullPointer);
        }
        let params = Preset::from(preset).params();
        let kp = kem::keygen(&params, &mut ChaCha8Rng::seed_from_u64(seed))?;
        let hash = hash_config(hash);
        *out_pk = Box::into_raw(Box::new(CcKemPublicKey { key: kp.public, hash }));
        *out_sk = Box::into_raw(Box::new(CcKemSecretKey { key: kp.secret, hash }));
        Ok(())
    })
}

/// Ciphertext length in bytes for this public key, or 0 for a null handle.
///
/// # Safety
/// `pk` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cc_kem_ciphertext_bytes(pk: *const CcKemPublicKey) -> usize {
    pk.as_ref().map_or(0, |pk| kem_ciphertext_bytes(pk.key.params()))
}

fn kem_ciphertext_bytes(p: &Params) -> usize {
    p.redundancy().div_ceil(8) + KEY_BYTES
}

/// Encapsulates with a weight-t error drawn from `seed`.
///
/// # Safety
/// `ct` must hold `ct_len` writable bytes and `key` `CC_SESSION_KEY_BYTES`.
#[no_mangle]
pub unsafe extern "C" fn cc_kem_encaps(
    pk: *const CcKemPublicKey,
    seed: u64,
    ct: *mut u8,
    ct_len: usize,
    key: *mut u8,
) -> CcStatus {
    guard(|| {
        let pk = handle(pk)?;
        let ct_out = output(ct, ct_len, kem_ciphertext_bytes(pk.key.params()))?;
        let key_out = output(key, KEY_BYTES, KEY_BYTES)?;
        let (k, c) = pk.key.encaps(&pk.hash, &mut ChaCha8Rng::seed_from_u64(seed));
        ct_out.copy_from_slice(&c.to_bytes());
        key_out.copy_from_slice(&k.0);
        Ok(())
    })
}

/// Decapsulates; a well-formed but invalid ciphertext yields the implicit
/// rejection key with `CC_STATUS_OK`.
///
/// # Safety
/// `ct` must hold `ct_len` readable bytes and `key` `CC_SESSION_KEY_BYTES` writable ones.
#[no_mangle]
pub unsafe extern "C" fn cc_kem_decaps(
    sk: *const CcKemSecretKey,
    ct: *const u8,
    ct_len: usize,
    key: *mut u8,
) -> CcStatus {
    guard(|| {
        let sk = handle(sk)?;
        let c = Ciphertext::from_bytes(sk.key.params(), input(ct, ct_len)?)?;
        let key_out = output(key, KEY_BYTES, KEY_BYTES)?;
        key_out.copy_from_slice(&sk.key.decaps(&sk.hash, &c)?.0);
        Ok(())
    })
}

/// Serializes a KEM public key as NUL-terminated text. `written` receives
/// the length including the terminator, also when the buffer is too small.
///
/// # Safety
/// `buf` must hold `len` writable bytes; `written` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cc_kem_public_key_to_text(
    pk: *const CcKemPublicKey,
    buf: *mut c_char,
    len: usize,
    written: *mut usize,
) -> CcStatus {
    guard(|| {
        let pk = handle(pk)?;
        write_text(&pk.key.to_text(&pk.hash), buf, len, written)
    })
}

/// Parses a key written by [`cc_kem_public_key_to_text`].
///
/// # Safety
/// `text` must be a NUL-terminated string; `out_pk` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cc_kem_public_key_from_text(
    text: *const c_char,
    out_pk: *mut *mut CcKemPublicKey,
) -> CcStatus {
    guard(|| {
        if text.is_null() || out_pk.is_null() {
            return Err(CcStatus::NullPointer);
        }
        let text = CStr::from_ptr(text).to_str().map_err(|_| CcStatus::Parse)?;
        let (key, hash) = kem::PublicKey::from_text(text)?;
        *out_pk = Box::into_raw(Box::new(CcKemPublicKey { key, hash }));
        Ok(())
    })
}

unsafe fn write_text(text: &str, buf: *mut c_char, len: usize, written: *mut usize) -> Result<(), CcStatus> {
    if written.is_null() {
        return Err(CcStatus::NullPointer);
    }
    let needed = text.len() + 1;
    *written = needed;
    let out = output(buf.cast(), len, needed)?;
    out[..text.len()].copy_from_slice(text.as_bytes());
    out[text.len()] = 0;
    Ok(())
}

/// # Safety
/// `pk` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cc_kem_public_key_free(pk: *mut CcKemPublicKey) {
    if !pk.is_null() {
        drop(Box::from_raw(pk));
    }
}

/// # Safety
/// `sk` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cc_kem_secret_key_free(sk: *mut CcKemSecretKey) {
    if !sk.is_null() {
        drop(Box::from_raw(sk));
    }
}

/// Generates a McEliece key pair for a preset, deterministically from `seed`.
///
/// # Safety
/// `out_pk` and `out_sk` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cc_mce_keygen(
    preset: CcPreset,
    seed: u64,
    out_pk: *mut *mut CcMcePublicKey,
    out_sk: *mut *mut CcMceSecretKey,
) -> CcStatus {
    guard(|| {
        if out_pk.is_null() || out_sk.is_null() {
            return Err(CcStatus::NullPointer);
        }
        let params = Preset::from(preset).params();
        let kp = mceliece::keygen(&params, &mut ChaCha8Rng::seed_from_u64(seed))?;
        *out_pk = Box::into_raw(Box::new(CcMcePublicKey(kp.public)));
        *out_sk = Box::into_raw(Box::new(CcMceSecretKey(kp.secret)));
        Ok(())
    })
}

/// Code length, dimension and error weight of a McEliece public key.
///
/// # Safety
/// Output pointers must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cc_mce_dimensions(
    pk: *const CcMcePublicKey,
    n: *mut usize,
    k: *mut usize,
    t: *mut usize,
) -> CcStatus {
    guard(|| {
        let pk = &handle(pk)?.0;
        if n.is_null() || k.is_null() || t.is_null() {
            return Err(CcStatus::NullPointer);
        }
        (*n, *k, *t) = (pk.n(), pk.k(), pk.t());
        Ok(())
    })
}

/// Encrypts a k-bit message with a weight-t error drawn from `seed`.
///
/// # Safety
/// `msg` must hold `msg_len` readable bytes, `ct` `ct_len` writable bytes.
#[no_mangle]
pub unsafe extern "C" fn cc_mce_encrypt(
    pk: *const CcMcePublicKey,
    msg: *const u8,
    msg_len: usize,
    seed: u64,
    ct: *mut u8,
    ct_len: usize,
) -> CcStatus {
    guard(|| {
        let pk = &handle(pk)?.0;
        let m = bits_in(input(msg, msg_len)?)?;
        let out = output(ct, ct_len, pk.n())?;
        let c = pk.encrypt(&m, &mut ChaCha8Rng::seed_from_u64(seed))?;
        bits_out(&c, out);
        Ok(())
    })
}

/// Decrypts an n-bit ciphertext into a k-bit message.
///
/// # Safety
/// `ct` must hold `ct_len` readable bytes, `msg` `msg_len` writable bytes.
#[no_mangle]
pub unsafe extern "C" fn cc_mce_decrypt(
    sk: *const CcMceSecretKey,
    ct: *const u8,
    ct_len: usize,
    msg: *mut u8,
    msg_len: usize,
) -> CcStatus {
    guard(|| {
        let sk = &handle(sk)?.0;
        let c = bits_in(input(ct, ct_len)?)?;
        let m = sk.decrypt(&c)?;
        bits_out(&m, output(msg, msg_len, m.len())?);
        Ok(())
    })
}

/// # Safety
/// `pk` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cc_mce_public_key_free(pk: *mut CcMcePublicKey) {
    if !pk.is_null() {
        drop(Box::from_raw(pk));
    }
}

/// # Safety
/// `sk` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cc_mce_secret_key_free(sk: *mut CcMceSecretKey) {
    if !sk.is_null() {
        drop(Box::from_raw(sk));
    }
}
