//! Goldwasser–Micali: probabilistic encryption of single bits.
//!
//! `E(m, r) = a^m · r² mod N` where `a` is a non-residue modulo both
//! primes with Jacobi symbol 1. A ciphertext is a quadratic residue
//! exactly when it encrypts 0, so multiplying ciphertexts XORs the bits.

use num_bigint::{BigUint, RandBigInt};
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::Rng;

use super::{gen_semiprime, PublicKey, PublicParams, SecretKey, SecretParams};
use crate::error::{Error, Result};
use crate::numtheory::{is_prime_fixed_bases, jacobi};

pub(crate) fn keygen<R: Rng + ?Sized>(sigma: u32, rng: &mut R) -> Result<(PublicKey, SecretKey)> {
    let (p, q, n) = gen_semiprime(sigma, |_, _| true, rng)?;
    // Expected four draws: a must be a non-residue mod both primes.
    let a = loop {
        let cand = rng.gen_biguint_range(&BigUint::from(2u32), &n);
        if jacobi(&cand, &p)? == -1 && jacobi(&cand, &q)? == -1 {
            break cand;
        }
    };
    keypair_from_parts(p, q, a)
}

/// Build a GM key pair from explicit primes and pseudo-residue `a`.
pub fn keypair_from_parts(p: BigUint, q: BigUint, a: BigUint) -> Result<(PublicKey, SecretKey)> {
    if !is_prime_fixed_bases(&p) || !is_prime_fixed_bases(&q) {
        return Err(Error::Parameter("gm primes must be prime".into()));
    }
    if p == q || p.is_even() || q.is_even() {
        return Err(Error::Parameter("gm primes must be distinct odd primes".into()));
    }
    let n = &p * &q;
    if a >= n {
        return Err(Error::Parameter("pseudo-residue must lie below the modulus".into()));
    }
    if jacobi(&a, &p)? != -1 || jacobi(&a, &q)? != -1 {
        return Err(Error::Parameter(
            "pseudo-residue must be a non-residue modulo both primes".into(),
        ));
    }
    let sigma = n.bits() as u32;
    Ok((
        PublicKey { sigma, params: PublicParams::Gm { n, a } },
        SecretKey { params: SecretParams::Gm { p, q } },
    ))
}

pub(crate) fn encrypt(n: &BigUint, a: &BigUint, m: &BigUint, r: &BigUint) -> Result<BigUint> {
    if r.is_zero() || r >= n || !r.gcd(n).is_one() {
        return Err(Error::Parameter("gm randomness must be a unit modulo n".into()));
    }
    let r2 = r * r % n;
    if m.is_one() {
        Ok(a * r2 % n)
    } else {
        Ok(r2)
    }
}

pub(crate) fn decrypt(p: &BigUint, n: &BigUint, c: &BigUint) -> Result<BigUint> {
    if jacobi(c, n)? != 1 {
        return Err(Error::Corrupt("gm ciphertext must have Jacobi symbol 1".into()));
    }
    // Euler criterion mod p: residues encrypt 0, non-residues encrypt 1.
    let exp = (p - 1u32) >> 1;
    let euler = c.modpow(&exp, p);
    if euler.is_one() {
        Ok(BigUint::zero())
    } else if euler == p - 1u32 {
        Ok(BigUint::one())
    } else {
        Err(Error::Corrupt("gm ciphertext shares a factor with the modulus".into()))
    }
}
