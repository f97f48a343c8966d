//! Partially homomorphic encryption toolkit.
//!
//! Seven classical cryptosystems — RSA, Goldwasser–Micali, Benaloh,
//! Naccache–Stern, Okamoto–Uchiyama, Paillier and Damgård–Jurik — behind
//! one scheme-agnostic API: [`keygen`] / [`encrypt`] / [`decrypt`] plus
//! the homomorphic operations [`combine`], [`mixed_mult`] and [`blind`].
//!
//! On top of the scheme catalogue the crate ships:
//!
//! * [`group_encoding`] — boolean circuits compiled to straight-line
//!   group programs over SL(3,2), embedded into S₇, and evaluated under a
//!   pluggable homomorphic scheme on permutations,
//! * [`apps`] — demo applications: homomorphic vote tally, private
//!   additive aggregation and a re-encryption mix node,
//! * [`bench`](mod@bench) — a ciphertext-expansion and timing harness,
//! * [`serial`] — a line-oriented text format for keys and ciphertexts.
//!
//! Every operation is a pure function of its inputs; randomness enters
//! only through explicit [`rand::Rng`] arguments, so seeded runs are
//! reproducible. All arithmetic is exact.
//!
//! This crate demonstrates and measures the *structure* of these schemes.
//! It is not hardened cryptography: no constant-time arithmetic, no
//! side-channel defenses, and nothing stops you from generating toy keys
//! that are trivially factorable.
//!
//! ```
//! use phe::{keygen, encrypt, decrypt, combine, SchemeId, SecurityParameter};
//! use rand::SeedableRng;
//!
//! let mut rng = rand_chacha::ChaCha20Rng::seed_from_u64(1);
//! let sigma = SecurityParameter::new(64).unwrap();
//! let (pk, sk) = keygen(SchemeId::Paillier, sigma, None, &mut rng).unwrap();
//!
//! let a = encrypt(&pk, &pk.plaintext(20u32.into()).unwrap(), &mut rng).unwrap();
//! let b = encrypt(&pk, &pk.plaintext(22u32.into()).unwrap(), &mut rng).unwrap();
//! let sum = combine(&pk, &a, &b, &mut rng).unwrap();
//! assert_eq!(decrypt(&sk, &pk, &sum).unwrap().value(), &42u32.into());
//! ```

pub mod apps;
pub mod bench;
pub mod error;
pub mod group_encoding;
pub mod numtheory;
pub mod scheme;
pub mod serial;

pub use error::{Error, Result};
pub use scheme::{
    blind, blind_with, combine, combine_raw, decrypt, encrypt, encrypt_with, keygen, mixed_mult,
    mixed_mult_raw, Ciphertext, Plaintext, PublicKey, Randomness, SchemeId, SecretKey,
    SecurityParameter,
};
