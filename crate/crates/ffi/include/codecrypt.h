#ifndef CODECRYPT_H
#define CODECRYPT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/*
 Length in bytes of a KEM session key.
 */
#define CC_SESSION_KEY_BYTES 32

typedef enum CcStatus {
  CC_STATUS_OK = 0,
  CC_STATUS_NULL_POINTER = 1,
  CC_STATUS_INVALID_ARGUMENT = 2,
  CC_STATUS_PARSE = 3,
  CC_STATUS_DECODING_FAILURE = 4,
  CC_STATUS_EXHAUSTED = 5,
  CC_STATUS_BUFFER_TOO_SMALL = 6,
  CC_STATUS_INTERNAL = 7,
} CcStatus;

typedef enum CcPreset {
  CC_PRESET_TOY12 = 0,
  CC_PRESET_TOY16 = 1,
  CC_PRESET_ORIGINAL = 2,
  CC_PRESET_MCELIECE6960119 = 3,
  CC_PRESET_MCELIECE8192128 = 4,
} CcPreset;

typedef enum CcHash {
  CC_HASH_SHAKE256 = 0,
  CC_HASH_SHA256 = 1,
} CcHash;

/*
 Opaque KEM public key.
 */
typedef struct CcKemPublicKey CcKemPublicKey;

/*
 Opaque KEM secret key.
 */
typedef struct CcKemSecretKey CcKemSecretKey;

/*
 Opaque McEliece public key.
 */
typedef struct CcMcePublicKey CcMcePublicKey;

/*
 Opaque McEliece secret key.
 */
typedef struct CcMceSecretKey CcMceSecretKey;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Static, NUL-terminated description of a status code.
 */
const char *cc_status_message(enum CcStatus status);

/*
 Generates a KEM key pair for a preset, deterministically from `seed`.

 # Safety
 `out_pk` and `out_sk` must be valid for writes.
 */
enum CcStatus cc_kem_keygen(enum CcPreset preset,
                            enum CcHash hash,
                            uint64_t seed,
                            struct CcKemPublicKey **out_pk,
                            struct CcKemSecretKey **out_sk);

/*
 Ciphertext length in bytes for this public key, or 0 for a null handle.

 # Safety
 `pk` must be null or a live handle.
 */
size_t cc_kem_ciphertext_bytes(const struct CcKemPublicKey *pk);

/*
 Encapsulates with a weight-t error drawn from `seed`.

 # Safety
 `ct` must hold `ct_len` writable bytes and `key` `CC_SESSION_KEY_BYTES`.
 */
enum CcStatus cc_kem_encaps(const struct CcKemPublicKey *pk,
                            uint64_t seed,
                            uint8_t *ct,
                            size_t ct_len,
                            uint8_t *key);

/*
 Decapsulates; a well-formed but invalid ciphertext yields the implicit
 rejection key with `CC_STATUS_OK`.

 # Safety
 `ct` must hold `ct_len` readable bytes and `key` `CC_SESSION_KEY_BYTES` writable ones.
 */
enum CcStatus cc_kem_decaps(const struct CcKemSecretKey *sk,
                            const uint8_t *ct,
                            size_t ct_len,
                            uint8_t *key);

/*
 Serializes a KEM public key as NUL-terminated text. `written` receives
 the length including the terminator, also when the buffer is too small.

 # Safety
 `buf` must hold `len` writable bytes; `written` must be valid for writes.
 */
enum CcStatus cc_kem_public_key_to_text(const struct CcKemPublicKey *pk,
                                        char *buf,
                                        size_t len,
                                        size_t *written);

/*
 Parses a key written by [`cc_kem_public_key_to_text`].

 # Safety
 `text` must be a NUL-terminated string; `out_pk` must be valid for writes.
 */
enum CcStatus cc_kem_public_key_from_text(const char *text, struct CcKemPublicKey **out_pk);

/*
 # Safety
 `pk` must be null or a handle from this library not yet freed.
 */
void cc_kem_public_key_free(struct CcKemPublicKey *pk);

/*
 # Safety
 `sk` must be null or a handle from this library not yet freed.
 */
void cc_kem_secret_key_free(struct CcKemSecretKey *sk);

/*
 Generates a McEliece key pair for a preset, deterministically from `seed`.

 # Safety
 `out_pk` and `out_sk` must be valid for writes.
 */
enum CcStatus cc_mce_keygen(enum CcPreset preset,
                            uint64_t seed,
                            struct CcMcePublicKey **out_pk,
                            struct CcMceSecretKey **out_sk);

/*
 Code length, dimension and error weight of a McEliece public key.

 # Safety
 Output pointers must be valid for writes.
 */
enum CcStatus cc_mce_dimensions(const struct CcMcePublicKey *pk, size_t *n, size_t *k, size_t *t);

/*
 Encrypts a k-bit message with a weight-t error drawn from `seed`.

 # Safety
 `msg` must hold `msg_len` readable bytes, `ct` `ct_len` writable bytes.
 */
enum CcStatus cc_mce_encrypt(const struct CcMcePublicKey *pk,
                             const uint8_t *msg,
                             size_t msg_len,
                             uint64_t seed,
                             uint8_t *ct,
                             size_t ct_len);

/*
 Decrypts an n-bit ciphertext into a k-bit message.

 # Safety
 `ct` must hold `ct_len` readable bytes, `msg` `msg_len` writable bytes.
 */
enum CcStatus cc_mce_decrypt(const struct CcMceSecretKey *sk,
                             const uint8_t *ct,
                             size_t ct_len,
                             uint8_t *msg,
                             size_t msg_len);

/*
 # Safety
 `pk` must be null or a handle from this library not yet freed.
 */
void cc_mce_public_key_free(struct CcMcePublicKey *pk);

/*
 # Safety
 `sk` must be null or a handle from this library not yet freed.
 */
void cc_mce_secret_key_free(struct CcMceSecretKey *sk);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CODECRYPT_H */
