//! Tour of the scheme catalogue: generate a key for every scheme,
//! round-trip a message, and exercise the homomorphic combine law.
//!
//! ```bash
//! cargo run --release -p phe --example scheme_tour
//! ```

use num_bigint::BigUint;
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;

use phe::{combine, decrypt, encrypt, keygen, Result, SchemeId, SecurityParameter};

fn main() -> Result<()> {
    let mut rng = ChaCha20Rng::seed_from_u64(2024);
    let sigma = SecurityParameter::new(64)?;

    println!("{:<17} {:<9} {:<22} law", "scheme", "modulus", "combine(E(a), E(b))");
    for scheme in SchemeId::ALL {
        let level = (scheme == SchemeId::DamgardJurik).then_some(2);
        let (pk, sk) = keygen(scheme, sigma, level, &mut rng)?;

        // two small messages, valid in every message space
        let (a, b) = (BigUint::from(5u32), BigUint::from(7u32));
        let (a, b) = if scheme == SchemeId::Gm {
            (BigUint::from(1u32), BigUint::from(1u32)) // single-bit space
        } else {
            (a, b)
        };

        let ca = encrypt(&pk, &pk.plaintext(a.clone())?, &mut rng)?;
        let cb = encrypt(&pk, &pk.plaintext(b.clone())?, &mut rng)?;
        let cc = combine(&pk, &ca, &cb, &mut rng)?;
        let result = decrypt(&sk, &pk, &cc)?;

        let law = if scheme.is_additive() { "a + b mod M" } else { "a · b mod N" };
        println!(
            "{:<17} {:<9} {a} ∘ {b} = {:<14} {law}",
            scheme.token(),
            format!("{} bit", pk.modulus().bits()),
            result.value(),
        );

        // sanity: decryption inverts encryption
        assert_eq!(decrypt(&sk, &pk, &ca)?.value(), &a);
        assert_eq!(decrypt(&sk, &pk, &cb)?.value(), &b);
    }
    Ok(())
}
