//! Paillier: additively homomorphic encryption in `Z*_{n²}`.
//!
//! With the canonical generator `g = n + 1`, `g^m mod n²` collapses to
//! `1 + m·n`, so encryption is `(1 + m·n) · rⁿ mod n²`. Decryption raises
//! to `λ = lcm(p−1, q−1)`, applies `L(x) = (x−1)/n` and multiplies by
//! `μ = λ⁻¹ mod n`.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::Rng;

use super::{Ciphertext, PublicKey, PublicParams, SecretKey, SecretParams};
use crate::error::{Error, Result};
use crate::numtheory::{crt_combine, is_prime_fixed_bases, mod_inv};

pub(crate) fn keygen<R: Rng + ?Sized>(sigma: u32, rng: &mut R) -> Result<(PublicKey, SecretKey)> {
    let (p, q, _n) = super::gen_semiprime(
        sigma,
        |p, q| {
            let n = p * q;
            let phi = (p - 1u32) * (q - 1u32);
            n.gcd(&phi).is_one()
        },
        rng,
    )?;
    keypair_from_primes(p, q)
}

/// Build a Paillier key pair from explicit primes. Requires
/// `gcd(n, φ(n)) = 1`; `g = n + 1`, `λ` and `μ` are derived.
pub fn keypair_from_primes(p: BigUint, q: BigUint) -> Result<(PublicKey, SecretKey)> {
    if !is_prime_fixed_bases(&p) || !is_prime_fixed_bases(&q) {
        return Err(Error::Parameter("paillier primes must be prime".into()));
    }
    if p == q {
        return Err(Error::Parameter("paillier primes must be distinct".into()));
    }
    let n = &p * &q;
    let p1 = &p - 1u32;
    let q1 = &q - 1u32;
    let phi = &p1 * &q1;
    if !n.gcd(&phi).is_one() {
        return Err(Error::Parameter("paillier requires gcd(n, phi(n)) = 1".into()));
    }
    let lambda = p1.lcm(&q1);
    // With g = n + 1, L(g^lambda mod n²) = lambda mod n.
    let mu = mod_inv(&(&lambda % &n), &n)
        .expect("gcd(n, phi) = 1 makes lambda invertible mod n");
    let g = &n + 1u32;
    let sigma = n.bits() as u32;
    Ok((
        PublicKey { sigma, params: PublicParams::Paillier { n, g } },
        SecretKey { params: SecretParams::Paillier { p, q, lambda, mu } },
    ))
}

fn l_function(x: &BigUint, n: &BigUint) -> Result<BigUint> {
    let x1 = x - 1u32;
    if !(&x1 % n).is_zero() {
        return Err(Error::Corrupt("value outside the (1+n)-generated subgroup".into()));
    }
    Ok(x1 / n)
}

pub(crate) fn encrypt(n: &BigUint, m: &BigUint, r: &BigUint) -> Result<BigUint> {
    if r.is_zero() || r >= n || !r.gcd(n).is_one() {
        return Err(Error::Parameter("paillier randomness must be a unit modulo n".into()));
    }
    let n2 = n * n;
    let g_m = (BigUint::one() + m * n) % &n2;
    let r_n = r.modpow(n, &n2);
    Ok(g_m * r_n % n2)
}

pub(crate) fn decrypt(n: &BigUint, lambda: &BigUint, mu: &BigUint, c: &BigUint) -> Result<BigUint> {
    let n2 = n * n;
    if !c.gcd(&n2).is_one() {
        return Err(Error::Corrupt("paillier ciphertext must be a unit modulo n²".into()));
    }
    let x = c.modpow(lambda, &n2);
    let l = l_function(&x, n)?;
    Ok(l * mu % n)
}

/// Decryption with the exponentiation split across the prime-square
/// factors and recombined by the Chinese Remainder Theorem. Agrees
/// bit-for-bit with [`decrypt`](crate::scheme::decrypt); exists as the
/// faster second route.
pub fn decrypt_crt(sk: &SecretKey, pk: &PublicKey, c: &Ciphertext) -> Result<super::Plaintext> {
    let (SecretParams::Paillier { p, q, lambda, mu }, PublicParams::Paillier { n, .. }) =
        (&sk.params, &pk.params)
    else {
        return Err(Error::Parameter("decrypt_crt needs a paillier key pair".into()));
    };
    if &(p * q) != n {
        return Err(Error::Parameter("secret key does not match public modulus".into()));
    }
    let residue = c.residue()?;
    let n2 = n * n;
    if c.scheme() != super::SchemeId::Paillier || residue >= &n2 {
        return Err(Error::Corrupt("not a paillier ciphertext for this key".into()));
    }
    if !residue.gcd(&n2).is_one() {
        return Err(Error::Corrupt("paillier ciphertext must be a unit modulo n²".into()));
    }
    let p2 = p * p;
    let q2 = q * q;
    let xp = residue.modpow(lambda, &p2);
    let xq = residue.modpow(lambda, &q2);
    let x = crt_combine(&[(xp, p2), (xq, q2)])?;
    let l = l_function(&x, n)?;
    super::Plaintext::new(l * mu % n, pk.message_modulus())
}
