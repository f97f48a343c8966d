//! Serialization round-trip identity, fuzzed: ten thousand random
//! instances across ciphertexts and keys, plus property tests on the raw
//! token grammar.

use num_bigint::{BigUint, RandBigInt};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;

use phe::serial::{
    parse_ciphertext, parse_ciphertext_batch, parse_key, serialize_ciphertext,
    serialize_ciphertext_batch, serialize_key,
};
use phe::{encrypt, keygen, Ciphertext, PublicKey, SchemeId, SecretKey, SecurityParameter};

fn key_pool() -> Vec<(PublicKey, SecretKey)> {
    let mut rng = ChaCha20Rng::seed_from_u64(0xf022);
    let mut pool = Vec::new();
    for scheme in SchemeId::ALL {
        for sigma in [32u32, 48] {
            let level = (scheme == SchemeId::DamgardJurik).then_some(2);
            pool.push(
                keygen(scheme, SecurityParameter::new(sigma).unwrap(), level, &mut rng).unwrap(),
            );
        }
    }
    pool
}

#[test]
fn ten_thousand_roundtrips() {
    let mut rng = ChaCha20Rng::seed_from_u64(0xf177);
    let pool = key_pool();
    for i in 0..10_000usize {
        let (pk, sk) = &pool[i % pool.len()];
        let m = rng.gen_biguint_below(&pk.message_modulus());
        let c = encrypt(pk, &pk.plaintext(m).unwrap(), &mut rng).unwrap();
        let parsed = parse_ciphertext(&serialize_ciphertext(&c)).unwrap();
        assert_eq!(c, parsed);
        parsed.validate(pk).unwrap();
        if i % 10 == 0 {
            let (pk2, sk2) = parse_key(&serialize_key(pk, Some(sk))).unwrap();
            assert_eq!(pk, &pk2);
            assert_eq!(Some(sk), sk2.as_ref());
            let (pk3, none) = parse_key(&serialize_key(pk, None)).unwrap();
            assert_eq!(pk, &pk3);
            assert!(none.is_none());
        }
    }
}

#[test]
fn hundred_random_keys_per_scheme_roundtrip() {
    let mut rng = ChaCha20Rng::seed_from_u64(0xf2f2);
    for scheme in SchemeId::ALL {
        for i in 0..100 {
            // vary the level for damgard-jurik across the run
            let level = (scheme == SchemeId::DamgardJurik).then_some(1 + (i % 4));
            let (pk, sk) =
                keygen(scheme, SecurityParameter::new(32).unwrap(), level, &mut rng).unwrap();
            let text = serialize_key(&pk, Some(&sk));
            let (pk2, sk2) = parse_key(&text).unwrap();
            assert_eq!(pk, pk2, "{scheme} key {i}");
            assert_eq!(Some(sk), sk2, "{scheme} key {i}");
        }
    }
}

proptest! {
    #[test]
    fn batch_roundtrip_arbitrary_residues(values in prop::collection::vec(1u128..u128::MAX, 0..12)) {
        // syntactic batch round trip; oddness keeps the residues units of
        // some power-of-two-free modulus, but validation is not in play here
        let batch: Vec<Ciphertext> = values
            .iter()
            .map(|&v| {
                Ciphertext::from_parts(SchemeId::Paillier, vec![BigUint::from(v)], None).unwrap()
            })
            .collect();
        let text = serialize_ciphertext_batch(&batch);
        prop_assert_eq!(parse_ciphertext_batch(&text).unwrap(), batch);
    }

    #[test]
    fn multi_residue_documents_roundtrip(values in prop::collection::vec(1u64..u64::MAX, 1..6)) {
        let residues: Vec<BigUint> = values.iter().map(|&v| BigUint::from(v)).collect();
        let c = Ciphertext::from_parts(SchemeId::Gm, residues, None).unwrap();
        prop_assert_eq!(parse_ciphertext(&serialize_ciphertext(&c)).unwrap(), c);
    }

    #[test]
    fn junk_never_panics(text in "\\PC*") {
        let _ = parse_ciphertext(&text);
        let _ = parse_key(&text);
        let _ = parse_ciphertext_batch(&text);
    }
}
