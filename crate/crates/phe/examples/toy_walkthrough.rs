//! The arithmetic of every scheme on keys small enough to check by hand.
//!
//! All moduli stay below 100, so each step can be replayed with pencil
//! and paper. These exact values are frozen in the test suite; this
//! example narrates them.
//!
//! ```bash
//! cargo run -p phe --example toy_walkthrough
//! ```

use num_bigint::BigUint;
use phe::numtheory::Factorization;
use phe::scheme::{benaloh, gm, naccache_stern, okamoto_uchiyama, paillier, rsa};
use phe::{combine_raw, decrypt, encrypt, encrypt_with, mixed_mult_raw, Randomness, Result};

fn big(v: u32) -> BigUint {
    BigUint::from(v)
}

fn main() -> Result<()> {
    println!("== Paillier, n = 15 (p = 3, q = 5), g = 16 ==");
    let (pk, sk) = paillier::keypair_from_primes(big(3), big(5))?;
    let c7 = encrypt_with(&pk, &pk.plaintext(big(7))?, &Randomness(big(2)))?;
    println!("E(7, r=2)  = 16^7 · 2^15 mod 225   = {}", c7.residue()?);
    let c3 = encrypt_with(&pk, &pk.plaintext(big(3))?, &Randomness(big(4)))?;
    println!("E(3, r=4)  = 16^3 · 4^15 mod 225   = {}", c3.residue()?);
    let sum = combine_raw(&pk, &c7, &c3)?;
    println!(
        "E(7) · E(3) mod 225 = {}            → decrypts to {}",
        sum.residue()?,
        decrypt(&sk, &pk, &sum)?.value()
    );
    let tripled = mixed_mult_raw(&pk, &big(3), &c7)?;
    println!(
        "E(7)³ mod 225       = {}            → decrypts to {} (= 21 mod 15)",
        tripled.residue()?,
        decrypt(&sk, &pk, &tripled)?.value()
    );

    println!("\n== Goldwasser–Micali, N = 21 (p = 3, q = 7), a = 20 ==");
    let (pk, sk) = gm::keypair_from_parts(big(3), big(7), big(20))?;
    let c1 = encrypt_with(&pk, &pk.plaintext(big(1))?, &Randomness(big(2)))?;
    println!("E(1, r=2) = 20 · 4 mod 21 = {}  → {}", c1.residue()?, decrypt(&sk, &pk, &c1)?.value());
    let c0 = encrypt_with(&pk, &pk.plaintext(big(0))?, &Randomness(big(4)))?;
    println!("E(0, r=4) = 16 mod 21     = {}  → {}", c0.residue()?, decrypt(&sk, &pk, &c0)?.value());
    let xor = combine_raw(&pk, &c1, &c0)?;
    println!("product decrypts to the XOR: {}", decrypt(&sk, &pk, &xor)?.value());

    println!("\n== RSA, N = 33 (p = 3, q = 11), e = 3 ==");
    let (pk, sk) = rsa::keypair_from_parts(big(3), big(11), big(3))?;
    let mut rng = rand::thread_rng();
    let c4 = encrypt(&pk, &pk.plaintext(big(4))?, &mut rng)?;
    let c2 = encrypt(&pk, &pk.plaintext(big(2))?, &mut rng)?;
    println!("E(4) = 4³ mod 33 = {},  E(2) = 2³ mod 33 = {}", c4.residue()?, c2.residue()?);
    let prod = combine_raw(&pk, &c4, &c2)?;
    println!(
        "E(4) · E(2) mod 33 = {} = E(8)       → decrypts to {}",
        prod.residue()?,
        decrypt(&sk, &pk, &prod)?.value()
    );

    println!("\n== Benaloh, n = 35 (p = 7, q = 5), k = 3, g = 2 ==");
    let (pk, sk) = benaloh::keypair_from_parts(big(7), big(5), big(3), big(2))?;
    let c = encrypt_with(&pk, &pk.plaintext(big(2))?, &Randomness(big(3)))?;
    println!(
        "E(2, r=3) = 2² · 3³ mod 35 = {}       → decrypts to {} via an order-3 dlog",
        c.residue()?,
        decrypt(&sk, &pk, &c)?.value()
    );

    println!("\n== Naccache–Stern, n = 77 (p = 7, q = 11), k = 15 = 3·5, g = 2 ==");
    let k = Factorization::from_distinct_primes(vec![big(3), big(5)])?;
    let (pk, sk) = naccache_stern::keypair_from_parts(big(7), big(11), k, big(2))?;
    let c = encrypt_with(&pk, &pk.plaintext(big(7))?, &Randomness(big(2)))?;
    println!(
        "E(7, r=2) mod 77 = {}                 → m mod 3 and m mod 5 recombine to {}",
        c.residue()?,
        decrypt(&sk, &pk, &c)?.value()
    );

    println!("\n== Okamoto–Uchiyama, n = 45 = 3²·5, g = 2, h = 17 ==");
    let (pk, sk) = okamoto_uchiyama::keypair_from_parts(big(3), big(5), big(2))?;
    let c = encrypt_with(&pk, &pk.plaintext(big(2))?, &Randomness(big(4)))?;
    println!(
        "E(2, r=4) = 2² · 17⁴ mod 45 = {}      → L((c² mod 9)) recovers {}",
        c.residue()?,
        decrypt(&sk, &pk, &c)?.value()
    );
    Ok(())
}
