use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use codecrypt_ffi::*;

unsafe fn kem_pair(preset: CcPreset, hash: CcHash, seed: u64) -> (*mut CcKemPublicKey, *mut CcKemSecretKey) {
    let (mut pk, mut sk) = (ptr::null_mut(), ptr::null_mut());
    assert_eq!(cc_kem_keygen(preset, hash, seed, &mut pk, &mut sk), CcStatus::Ok);
    (pk, sk)
}

#[test]
fn kem_roundtrip_and_rejection() {
    unsafe {
        for hash in [CcHash::Shake256, CcHash::Sha256] {
            let (pk, sk) = kem_pair(CcPreset::Toy16, hash, 11);
            let len = cc_kem_ciphertext_bytes(pk);
            assert_eq!(len, 1 + 32);
            let mut ct = vec![0u8; len];
            let (mut k1, mut k2) = ([0u8; CC_SESSION_KEY_BYTES], [0u8; CC_SESSION_KEY_BYTES]);
            assert_eq!(cc_kem_encaps(pk, 5, ct.as_mut_ptr(), len, k1.as_mut_ptr()), CcStatus::Ok);
            assert_eq!(cc_kem_decaps(sk, ct.as_ptr(), len, k2.as_mut_ptr()), CcStatus::Ok);
            assert_eq!(k1, k2);

            ct[len - 1] ^= 1;
            assert_eq!(cc_kem_decaps(sk, ct.as_ptr(), len, k2.as_mut_ptr()), CcStatus::Ok);
            assert_ne!(k1, k2);
            cc_kem_public_key_free(pk);
            cc_kem_secret_key_free(sk);
        }
    }
}

#[test]
fn kem_is_deterministic_per_seed() {
    unsafe {
        let (pk, sk) = kem_pair(CcPreset::Toy16, CcHash::Shake256, 3);
        let mut a = [[0u8; 33]; 2];
        let mut k = [[0u8; 32]; 2];
        for i in 0..2 {
            assert_eq!(cc_kem_encaps(pk, 77, a[i].as_mut_ptr(), 33, k[i].as_mut_ptr()), CcStatus::Ok);
        }
        assert_eq!(a[0], a[1]);
        assert_eq!(k[0], k[1]);
        cc_kem_public_key_free(pk);
        cc_kem_secret_key_free(sk);
    }
}

#[test]
fn public_key_text_roundtrip() {
    unsafe {
        let (pk, sk) = kem_pair(CcPreset::Toy16, CcHash::Sha256, 8);
        let mut written = 0usize;
        assert_eq!(cc_kem_public_key_to_text(pk, ptr::null_mut(), 0, &mut written), CcStatus::BufferTooSmall);
        let mut buf = vec![0 as std::ffi::c_char; written];
        assert_eq!(cc_kem_public_key_to_text(pk, buf.as_mut_ptr(), buf.len(), &mut written), CcStatus::Ok);
        let mut back = ptr::null_mut();
        assert_eq!(cc_kem_public_key_from_text(buf.as_ptr(), &mut back), CcStatus::Ok);

        let mut ct = [0u8; 33];
        let (mut k1, mut k2) = ([0u8; 32], [0u8; 32]);
        assert_eq!(cc_kem_encaps(back, 1, ct.as_mut_ptr(), 33, k1.as_mut_ptr()), CcStatus::Ok);
        assert_eq!(cc_kem_decaps(sk, ct.as_ptr(), 33, k2.as_mut_ptr()), CcStatus::Ok);
        assert_eq!(k1, k2);

        let junk = CString::new("not a key").unwrap();
        let mut none = ptr::null_mut();
        assert_eq!(cc_kem_public_key_from_text(junk.as_ptr(), &mut none), CcStatus::Parse);
        assert!(none.is_null());
        cc_kem_public_key_free(back);
        cc_kem_public_key_free(pk);
        cc_kem_secret_key_free(sk);
    }
}

#[test]
fn mceliece_roundtrip() {
    unsafe {
        let (mut pk, mut sk) = (ptr::null_mut(), ptr::null_mut());
        assert_eq!(cc_mce_keygen(CcPreset::Toy12, 4, &mut pk, &mut sk), CcStatus::Ok);
        let (mut n, mut k, mut t) = (0, 0, 0);
        assert_eq!(cc_mce_dimensions(pk, &mut n, &mut k, &mut t), CcStatus::Ok);
        assert_eq!((n, k, t), (12, 4, 2));
        for seed in 0..20 {
            let msg = [(seed & 1) as u8, 1, 0, ((seed >> 1) & 1) as u8];
            let mut c = [0u8; 12];
            let mut back = [9u8; 4];
            assert_eq!(cc_mce_encrypt(pk, msg.as_ptr(), 4, seed, c.as_mut_ptr(), 12), CcStatus::Ok);
            assert_eq!(cc_mce_decrypt(sk, c.as_ptr(), 12, back.as_mut_ptr(), 4), CcStatus::Ok);
            assert_eq!(back, msg);
        }
        let bad = [2u8, 0, 0, 0];
        let mut c = [0u8; 12];
        assert_eq!(cc_mce_encrypt(pk, bad.as_ptr(), 4, 0, c.as_mut_ptr(), 12), CcStatus::InvalidArgument);
        assert_eq!(cc_mce_encrypt(pk, bad.as_ptr(), 3, 0, c.as_mut_ptr(), 12), CcStatus::InvalidArgument);
        cc_mce_public_key_free(pk);
        cc_mce_secret_key_free(sk);
    }
}

#[test]
fn null_and_short_buffers_are_reported() {
    unsafe {
        let mut key = [0u8; 32];
        assert_eq!(cc_kem_encaps(ptr::null(), 0, ptr::null_mut(), 0, key.as_mut_ptr()), CcStatus::NullPointer);
        assert_eq!(cc_kem_decaps(ptr::null(), ptr::null(), 0, key.as_mut_ptr()), CcStatus::NullPointer);
        assert_eq!(cc_kem_ciphertext_bytes(ptr::null()), 0);
        let (pk, sk) = kem_pair(CcPreset::Toy16, CcHash::Shake256, 1);
        let mut ct = [0u8; 32];
        assert_eq!(cc_kem_encaps(pk, 0, ct.as_mut_ptr(), 32, key.as_mut_ptr()), CcStatus::BufferTooSmall);
        assert_eq!(cc_kem_decaps(sk, ct.as_ptr(), 32, key.as_mut_ptr()), CcStatus::InvalidArgument);
        assert_eq!(cc_kem_keygen(CcPreset::Toy16, CcHash::Shake256, 0, ptr::null_mut(), ptr::null_mut()), CcStatus::NullPointer);
        cc_kem_public_key_free(pk);
        cc_kem_secret_key_free(sk);
        cc_kem_public_key_free(ptr::null_mut());
        cc_mce_secret_key_free(ptr::null_mut());
    }
}

#[test]
fn status_messages() {
    let msg = |s| unsafe { CStr::from_ptr(cc_status_message(s)) }.to_str().unwrap().to_string();
    assert_eq!(msg(CcStatus::Ok), "ok");
    assert_eq!(msg(CcStatus::DecodingFailure), "decoding failure");
}

/// Compiles `tests/c/smoke.c` against the generated header and the static
/// library, then runs it.
#[test]
fn c_program_links_and_runs() {
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let deps = std::env::current_exe().unwrap().parent().unwrap().to_path_buf();
    let lib = [deps.join("libcodecrypt_ffi.a"), deps.parent().unwrap().join("libcodecrypt_ffi.a")]
        .into_iter()
        .find(|p| p.exists())
        .expect("static library is built alongside the tests");
    let out = tempfile_path("smoke");
    let status = Command::new("cc")
        .arg(manifest.join("tests/c/smoke.c"))
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&out)
        .status()
        .expect("a C compiler is installed");
    assert!(status.success());
    let run = Command::new(&out).output().unwrap();
    assert!(run.status.success(), "{}", String::from_utf8_lossy(&run.stderr));
    assert_eq!(String::from_utf8_lossy(&run.stdout).trim(), "ok");
    let _ = std::fs::remove_file(out);
}

fn tempfile_path(stem: &str) -> PathBuf {
    std::env::temp_dir().join(format!("codecrypt-ffi-{stem}-{}", std::process::id()))
}
