//! Okamoto–Uchiyama: additive homomorphic encryption with `n = p²q`.
//!
//! `E(m, r) = g^m · h^r mod n` with `h = gⁿ` and `m < p`. The subgroup of
//! `Z*_{p²}` of order `p` carries the message: raising a ciphertext to
//! `p − 1` kills everything else, and `L(x) = (x−1)/p` reads the exponent
//! back out.

use num_bigint::{BigUint, RandBigInt};
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::Rng;

use super::{PublicKey, PublicParams, SecretKey, SecretParams};
use crate::error::{Error, Result};
use crate::numtheory::{is_prime_fixed_bases, mod_inv};

pub(crate) fn keygen<R: Rng + ?Sized>(sigma: u32, rng: &mut R) -> Result<(PublicKey, SecretKey)> {
    let pbits = u64::from(sigma).div_ceil(3);
    let qbits = u64::from(sigma).saturating_sub(2 * pbits);
    if qbits < 2 || pbits < 2 {
        return Err(Error::Parameter("sigma too small for n = p²q".into()));
    }
    let hi = pbits >= 24;
    for _ in 0..256 {
        let p = super::gen_prime_sized(pbits, hi, rng)?;
        let q = super::gen_prime_sized(qbits, hi, rng)?;
        if p == q {
            continue;
        }
        let n = &p * &p * &q;
        if n.bits() != u64::from(sigma) {
            continue;
        }
        let p2 = &p * &p;
        let g = loop {
            let cand = rng.gen_biguint_range(&BigUint::from(2u32), &n);
            // order of g mod p² must be divisible by p
            if cand.gcd(&n).is_one() && !cand.modpow(&(&p - 1u32), &p2).is_one() {
                break cand;
            }
        };
        return keypair_from_parts(p, q, g);
    }
    Err(Error::Generation("could not find an okamoto-uchiyama parameter set".into()))
}

/// Build an Okamoto–Uchiyama key pair from explicit primes and generator.
/// `h` and the published plaintext capacity are derived.
pub fn keypair_from_parts(p: BigUint, q: BigUint, g: BigUint) -> Result<(PublicKey, SecretKey)> {
    if !is_prime_fixed_bases(&p) || !is_prime_fixed_bases(&q) || p == q {
        return Err(Error::Parameter("okamoto-uchiyama primes must be distinct primes".into()));
    }
    let p2 = &p * &p;
    let n = &p2 * &q;
    if g.is_zero() || g >= n || !g.gcd(&n).is_one() {
        return Err(Error::Parameter("generator must be a unit modulo n".into()));
    }
    let gp = g.modpow(&(&p - 1u32), &p2);
    if gp.is_one() {
        return Err(Error::Parameter("generator order mod p² must be divisible by p".into()));
    }
    // L(g^(p-1) mod p²) is a nonzero residue mod p; cache its inverse.
    let l_g = (&gp - 1u32) / &p;
    let l_inv = mod_inv(&l_g, &p).expect("nonzero below the prime p");
    let h = g.modpow(&n, &n);
    let cap = p.clone();
    let sigma = n.bits() as u32;
    Ok((
        PublicKey { sigma, params: PublicParams::OkamotoUchiyama { n, g, h, cap } },
        SecretKey { params: SecretParams::OkamotoUchiyama { p, q, p_squared: p2, l_inv } },
    ))
}

pub(crate) fn encrypt(
    n: &BigUint,
    g: &BigUint,
    h: &BigUint,
    m: &BigUint,
    r: &BigUint,
) -> Result<BigUint> {
    // r ranges over all of Z_n here, zero included.
    if r >= n {
        return Err(Error::Parameter("randomness must lie below the modulus".into()));
    }
    Ok(g.modpow(m, n) * h.modpow(r, n) % n)
}

pub(crate) fn decrypt(
    n: &BigUint,
    p: &BigUint,
    p_squared: &BigUint,
    l_inv: &BigUint,
    c: &BigUint,
) -> Result<BigUint> {
    if !c.gcd(n).is_one() {
        return Err(Error::Corrupt("okamoto-uchiyama ciphertext must be a unit".into()));
    }
    let cp = c.modpow(&(p - 1u32), p_squared);
    let cp1 = &cp - 1u32;
    if !(&cp1 % p).is_zero() {
        return Err(Error::Corrupt("L undefined: value not in the order-p subgroup".into()));
    }
    let l = cp1 / p;
    Ok(l * l_inv % p)
}
