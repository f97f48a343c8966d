//! Benaloh: dense probabilistic encryption of blocks modulo a prime `k`.
//!
//! `E(m, r) = g^m · r^k mod n` for `m < k`. Decryption raises to
//! `φ(n)/k`, which kills the randomness and leaves `(g^{φ/k})^m`, then
//! solves the order-`k` discrete log — small `k` keeps that log cheap
//! (baby-step/giant-step in O(√k)).

use num_bigint::{BigUint, RandBigInt};
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::Rng;

use super::{PublicKey, PublicParams, SecretKey, SecretParams};
use crate::error::{Error, Result};
use crate::numtheory::{
    dlog_subgroup, gen_prime, gen_prime_hi, is_prime_fixed_bases, Factorization, PrimeConstraint,
};

/// Default block-size width: 16-bit `k` when the modulus is wide enough,
/// scaled down for toy moduli so `k | p − 1` stays satisfiable.
fn default_k_bits(sigma: u32) -> u64 {
    let half = u64::from(sigma) / 2;
    half.saturating_sub(2).clamp(3, 16)
}

pub(crate) fn keygen<R: Rng + ?Sized>(sigma: u32, rng: &mut R) -> Result<(PublicKey, SecretKey)> {
    let pbits = u64::from(sigma).div_ceil(2);
    let qbits = u64::from(sigma) - pbits;
    let hi = pbits >= 24;
    // Fresh k on retry: for narrow moduli some k admit no prime p ≡ 1 (mod k)
    // of the right width.
    for _ in 0..64 {
        let k = gen_prime(default_k_bits(sigma), None, rng)?;
        let constraint = PrimeConstraint::DividesPredecessor { divisor: k.clone() };
        let p = match if hi {
            gen_prime_hi(pbits, Some(&constraint), rng)
        } else {
            gen_prime(pbits, Some(&constraint), rng)
        } {
            Ok(p) => p,
            Err(Error::Generation(_)) => continue,
            Err(e) => return Err(e),
        };
        if ((&p - 1u32) / &k % &k).is_zero() {
            continue; // need gcd(k, (p-1)/k) = 1
        }
        let q = match super::gen_prime_sized(qbits, hi, rng) {
            Ok(q) => q,
            Err(Error::Generation(_)) => continue,
            Err(e) => return Err(e),
        };
        if q == p || ((&q - 1u32) % &k).is_zero() {
            continue; // need gcd(k, q-1) = 1
        }
        let n = &p * &q;
        if n.bits() != u64::from(sigma) {
            continue;
        }
        let phi = (&p - 1u32) * (&q - 1u32);
        let exp = &phi / &k;
        let g = loop {
            let cand = rng.gen_biguint_range(&BigUint::from(2u32), &n);
            if cand.gcd(&n).is_one() && !cand.modpow(&exp, &n).is_one() {
                break cand;
            }
        };
        return keypair_from_parts(p, q, k, g);
    }
    Err(Error::Generation("could not find a benaloh parameter set".into()))
}

/// Build a Benaloh key pair from explicit parts, validating the block
/// structure: `k` prime, `k | p−1`, `gcd(k, (p−1)/k) = 1`,
/// `gcd(k, q−1) = 1` and `g^(φ/k) ≠ 1`.
pub fn keypair_from_parts(
    p: BigUint,
    q: BigUint,
    k: BigUint,
    g: BigUint,
) -> Result<(PublicKey, SecretKey)> {
    if !is_prime_fixed_bases(&p) || !is_prime_fixed_bases(&q) || p == q {
        return Err(Error::Parameter("benaloh primes must be distinct primes".into()));
    }
    if !is_prime_fixed_bases(&k) {
        return Err(Error::Parameter("benaloh block size k must be prime".into()));
    }
    let p1 = &p - 1u32;
    let q1 = &q - 1u32;
    if !(&p1 % &k).is_zero() {
        return Err(Error::Parameter("benaloh requires k | p - 1".into()));
    }
    if (&p1 / &k % &k).is_zero() {
        return Err(Error::Parameter("benaloh requires gcd(k, (p-1)/k) = 1".into()));
    }
    if (&q1 % &k).is_zero() {
        return Err(Error::Parameter("benaloh requires gcd(k, q-1) = 1".into()));
    }
    let n = &p * &q;
    let phi = &p1 * &q1;
    if g.is_zero() || g >= n || !g.gcd(&n).is_one() {
        return Err(Error::Parameter("benaloh generator must be a unit modulo n".into()));
    }
    if g.modpow(&(&phi / &k), &n).is_one() {
        return Err(Error::Parameter("benaloh generator must have order divisible by k".into()));
    }
    let sigma = n.bits() as u32;
    Ok((
        PublicKey { sigma, params: PublicParams::Benaloh { n, g, k } },
        SecretKey { params: SecretParams::Benaloh { p, q, phi } },
    ))
}

pub(crate) fn encrypt(
    n: &BigUint,
    g: &BigUint,
    k: &BigUint,
    m: &BigUint,
    r: &BigUint,
) -> Result<BigUint> {
    if r.is_zero() || r >= n || !r.gcd(n).is_one() {
        return Err(Error::Parameter("benaloh randomness must be a unit modulo n".into()));
    }
    Ok(g.modpow(m, n) * r.modpow(k, n) % n)
}

pub(crate) fn decrypt(
    n: &BigUint,
    g: &BigUint,
    k: &BigUint,
    phi: &BigUint,
    c: &BigUint,
) -> Result<BigUint> {
    if !c.gcd(n).is_one() {
        return Err(Error::Corrupt("benaloh ciphertext must be a unit modulo n".into()));
    }
    let exp = phi / k;
    let h = g.modpow(&exp, n);
    let x = c.modpow(&exp, n);
    // h has exact order k; a failed log marks a corrupted ciphertext.
    dlog_subgroup(&h, &x, n, &Factorization::from_prime(k.clone())?)
}
