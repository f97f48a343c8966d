//! Textbook RSA: the canonical deterministic, multiplicatively
//! homomorphic scheme. `E(m) = m^e mod N`, and multiplying ciphertexts
//! multiplies plaintexts.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;
use rand::Rng;

use super::{gen_semiprime, PublicKey, PublicParams, SecretKey, SecretParams};
use crate::error::{Error, Result};
use crate::numtheory::{is_prime_fixed_bases, mod_inv};

const PUBLIC_EXPONENTS: [u32; 5] = [65537, 257, 17, 5, 3];

pub(crate) fn keygen<R: Rng + ?Sized>(sigma: u32, rng: &mut R) -> Result<(PublicKey, SecretKey)> {
    let (p, q, _n) = gen_semiprime(
        sigma,
        |p, q| {
            let phi = (p - 1u32) * (q - 1u32);
            PUBLIC_EXPONENTS
                .iter()
                .any(|&e| BigUint::from(e) < phi && phi.gcd(&BigUint::from(e)).is_one())
        },
        rng,
    )?;
    let phi = (&p - 1u32) * (&q - 1u32);
    let e = PUBLIC_EXPONENTS
        .iter()
        .map(|&e| BigUint::from(e))
        .find(|e| e < &phi && phi.gcd(e).is_one())
        .expect("accept closure guaranteed a usable exponent");
    keypair_from_parts(p, q, e)
}

/// Build an RSA key pair from explicit primes and public exponent.
/// Validates primality and `gcd(e, φ(N)) = 1`; `d` is derived.
pub fn keypair_from_parts(p: BigUint, q: BigUint, e: BigUint) -> Result<(PublicKey, SecretKey)> {
    if !is_prime_fixed_bases(&p) || !is_prime_fixed_bases(&q) {
        return Err(Error::Parameter("rsa primes must be prime".into()));
    }
    if p == q {
        return Err(Error::Parameter("rsa primes must be distinct".into()));
    }
    let n = &p * &q;
    let phi = (&p - 1u32) * (&q - 1u32);
    if e <= BigUint::one() {
        return Err(Error::Parameter("public exponent must exceed 1".into()));
    }
    let d = mod_inv(&e, &phi)
        .ok_or_else(|| Error::Parameter("public exponent not coprime to phi".into()))?;
    let sigma = n.bits() as u32;
    Ok((
        PublicKey { sigma, params: PublicParams::Rsa { n, e } },
        SecretKey { params: SecretParams::Rsa { p, q, d } },
    ))
}

pub(crate) fn encrypt(n: &BigUint, e: &BigUint, m: &BigUint) -> BigUint {
    m.modpow(e, n)
}

pub(crate) fn decrypt(n: &BigUint, d: &BigUint, c: &BigUint) -> BigUint {
    c.modpow(d, n)
}
