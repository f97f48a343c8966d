//! Damgård–Jurik: Paillier generalized to `Z*_{n^(s+1)}`.
//!
//! Level `s` encrypts `m < n^s` as `(1+n)^m · r^(n^s) mod n^(s+1)`; the
//! bigger the level, the closer the expansion gets to 1. Decryption
//! raises to `λ`, which leaves a power of `1+n`, and recovers that power
//! digit-by-digit base `n` with exact binomial corrections. At `s = 1`
//! the whole construction degenerates bit-for-bit into Paillier.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::Rng;

use super::{PublicKey, PublicParams, SecretKey, SecretParams};
use crate::error::{Error, Result};
use crate::numtheory::{is_prime_fixed_bases, mod_inv};

pub(crate) fn keygen<R: Rng + ?Sized>(
    sigma: u32,
    s: u32,
    rng: &mut R,
) -> Result<(PublicKey, SecretKey)> {
    if s == 0 {
        return Err(Error::Parameter("damgard-jurik level must be at least 1".into()));
    }
    let (p, q, _n) = super::gen_semiprime(
        sigma,
        |p, q| {
            let n = p * q;
            let phi = (p - 1u32) * (q - 1u32);
            n.gcd(&phi).is_one()
        },
        rng,
    )?;
    keypair_from_primes(p, q, s)
}

/// Build a Damgård–Jurik key pair at level `s` from explicit primes.
/// Shares Paillier's `gcd(n, φ(n)) = 1` requirement; `μ = λ⁻¹ mod n^s`.
pub fn keypair_from_primes(p: BigUint, q: BigUint, s: u32) -> Result<(PublicKey, SecretKey)> {
    if s == 0 {
        return Err(Error::Parameter("damgard-jurik level must be at least 1".into()));
    }
    if !is_prime_fixed_bases(&p) || !is_prime_fixed_bases(&q) || p == q {
        return Err(Error::Parameter("damgard-jurik primes must be distinct primes".into()));
    }
    let n = &p * &q;
    let p1 = &p - 1u32;
    let q1 = &q - 1u32;
    if !n.gcd(&(&p1 * &q1)).is_one() {
        return Err(Error::Parameter("damgard-jurik requires gcd(n, phi(n)) = 1".into()));
    }
    let lambda = p1.lcm(&q1);
    let n_s = n.pow(s);
    let mu = mod_inv(&(&lambda % &n_s), &n_s)
        .expect("gcd(n, phi) = 1 makes lambda invertible mod n^s");
    let g = &n + 1u32;
    let sigma = n.bits() as u32;
    Ok((
        PublicKey { sigma, params: PublicParams::DamgardJurik { n, g, s } },
        SecretKey { params: SecretParams::DamgardJurik { p, q, lambda, mu } },
    ))
}

/// Exact binomial coefficient `C(i, k)` for small `k`.
fn binomial(i: &BigUint, k: u32) -> BigUint {
    if *i < BigUint::from(k) {
        return BigUint::zero();
    }
    let mut c = BigUint::one();
    for t in 0..k {
        c = c * (i - t) / (t + 1u32); // exact at every step
    }
    c
}

/// `(1+n)^m mod n^(s+1)` through the binomial expansion: only the first
/// `s+1` terms survive the modulus, and each `C(m, k)` is computed with
/// exact division so the formula holds even when `k!` shares a factor
/// with toy moduli.
pub(crate) fn pow_one_plus_n(n: &BigUint, m: &BigUint, s: u32) -> BigUint {
    let ns1 = n.pow(s + 1);
    let mut acc = BigUint::one();
    let mut result = BigUint::one(); // k = 0 term
    let mut k_fact = BigUint::one();
    // running product m(m-1)...(m-k+1), kept reduced modulo s!·n^(s+1)
    let w = factorial(s) * &ns1;
    for k in 1..=s {
        if BigUint::from(k) > *m {
            break; // all remaining binomials vanish
        }
        acc = acc * ((m - (k - 1)) % &w) % &w;
        k_fact *= k;
        // C(m, k) mod n^(s+1): exact division of the reduced product
        let c = (&acc % (&k_fact * &ns1)) / &k_fact;
        result = (result + c * n.pow(k)) % &ns1;
    }
    result
}

/// Discrete log of `a` in the subgroup generated by `1+n` inside
/// `Z*_{n^(s+1)}`: returns `i mod n^s` with `a ≡ (1+n)^i`, recovering one
/// base-`n` digit block per pass and subtracting the higher binomial
/// terms exactly.
pub(crate) fn dlog_one_plus_n(a: &BigUint, n: &BigUint, s: u32) -> Result<BigUint> {
    let mut i = BigUint::zero();
    for j in 1..=s {
        let nj = n.pow(j);
        let nj1 = &nj * n;
        let a_j = a % &nj1;
        if a_j.is_zero() || !((&a_j - 1u32) % n).is_zero() {
            return Err(Error::Corrupt("value outside the (1+n)-generated subgroup".into()));
        }
        let mut t = (&a_j - 1u32) / n; // Σ_{k>=1} C(i, k)·n^(k-1) mod n^j
        for k in 2..=j {
            let corr = binomial(&i, k) % &nj * n.pow(k - 1) % &nj;
            t = (&t + &nj - corr) % &nj;
        }
        i = t; // now equals the true exponent mod n^j
    }
    Ok(i)
}

fn factorial(k: u32) -> BigUint {
    (1..=k).fold(BigUint::one(), |acc, t| acc * t)
}

pub(crate) fn encrypt(n: &BigUint, s: u32, m: &BigUint, r: &BigUint) -> Result<BigUint> {
    if r.is_zero() || r >= n || !r.gcd(n).is_one() {
        return Err(Error::Parameter("damgard-jurik randomness must be a unit modulo n".into()));
    }
    let ns1 = n.pow(s + 1);
    let g_m = pow_one_plus_n(n, m, s);
    let r_ns = r.modpow(&n.pow(s), &ns1);
    Ok(g_m * r_ns % ns1)
}

pub(crate) fn decrypt(
    n: &BigUint,
    s: u32,
    lambda: &BigUint,
    mu: &BigUint,
    c: &BigUint,
) -> Result<BigUint> {
    let ns1 = n.pow(s + 1);
    if !c.gcd(&ns1).is_one() {
        return Err(Error::Corrupt("damgard-jurik ciphertext must be a unit".into()));
    }
    let a = c.modpow(lambda, &ns1);
    let i = dlog_one_plus_n(&a, n, s)?; // = λ·m mod n^s
    Ok(i * mu % n.pow(s))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scheme::{decrypt, encrypt_with, paillier, Randomness};
    use std::collections::HashMap;

    fn toy(s: u32) -> (PublicKey, SecretKey) {
        keypair_from_primes(3u32.into(), 5u32.into(), s).unwrap()
    }

    const TOY_UNITS: [u32; 8] = [1, 2, 4, 7, 8, 11, 13, 14];

    #[test]
    fn level_one_equals_paillier_on_the_toy_key() {
        let (dj_pk, _) = toy(1);
        let (p_pk, _) = paillier::keypair_from_primes(3u32.into(), 5u32.into()).unwrap();
        for m in 0..15u32 {
            for r in TOY_UNITS {
                let dj = encrypt_with(&dj_pk, &dj_pk.plaintext(m.into()).unwrap(), &Randomness(r.into()))
                    .unwrap();
                let pl = encrypt_with(&p_pk, &p_pk.plaintext(m.into()).unwrap(), &Randomness(r.into()))
                    .unwrap();
                assert_eq!(dj.residue().unwrap(), pl.residue().unwrap());
            }
        }
    }

    #[test]
    fn worked_example_at_level_one() {
        let (pk, sk) = toy(1);
        let c = encrypt_with(&pk, &pk.plaintext(7u32.into()).unwrap(), &Randomness(2u32.into()))
            .unwrap();
        assert_eq!(c.residue().unwrap(), &BigUint::from(83u32));
        assert_eq!(decrypt(&sk, &pk, &c).unwrap().value(), &BigUint::from(7u32));
    }

    #[test]
    fn exhaustive_roundtrip_s2() {
        // Oracle: invert encryption by brute force over all (m, r), then
        // check decryption agrees everywhere.
        let (pk, sk) = toy(2);
        let mut table: HashMap<BigUint, u32> = HashMap::new();
        for m in 0..225u32 {
            for r in TOY_UNITS {
                let c = encrypt_with(&pk, &pk.plaintext(m.into()).unwrap(), &Randomness(r.into()))
                    .unwrap();
                let prev = table.insert(c.residue().unwrap().clone(), m);
                assert!(prev.is_none() || prev == Some(m), "encryption must be injective in m");
                assert_eq!(
                    decrypt(&sk, &pk, &c).unwrap().value(),
                    &BigUint::from(m),
                    "m={m} r={r}"
                );
            }
        }
    }

    #[test]
    fn digit_extraction_matches_brute_force_s3() {
        let (pk, sk) = toy(3);
        // sample the space: all m < 3375 is cheap enough at this size
        for m in 0..3375u32 {
            let c = encrypt_with(&pk, &pk.plaintext(m.into()).unwrap(), &Randomness(7u32.into()))
                .unwrap();
            assert_eq!(decrypt(&sk, &pk, &c).unwrap().value(), &BigUint::from(m));
        }
    }

    #[test]
    fn pow_one_plus_n_matches_modpow() {
        let n = BigUint::from(15u32);
        for s in 1..=4u32 {
            let ns1 = n.pow(s + 1);
            let g = &n + 1u32;
            for m in (0..n.pow(s).to_u32_digits()[0]).step_by(7) {
                let m = BigUint::from(m);
                assert_eq!(pow_one_plus_n(&n, &m, s), g.modpow(&m, &ns1), "s={s} m={m}");
            }
        }
    }

    #[test]
    fn binomial_small_values() {
        assert_eq!(binomial(&7u32.into(), 3), BigUint::from(35u32));
        assert_eq!(binomial(&2u32.into(), 3), BigUint::zero());
        assert_eq!(binomial(&100u32.into(), 1), BigUint::from(100u32));
    }

    #[test]
    fn level_mismatch_is_rejected() {
        let (pk1, _) = toy(1);
        let c = encrypt_with(&pk1, &pk1.plaintext(3u32.into()).unwrap(), &Randomness(2u32.into()))
            .unwrap();
        // a level-2 key refuses a level-1 ciphertext
        let (pk2, sk2) = toy(2);
        assert!(decrypt(&sk2, &pk2, &c).is_err());
    }

    #[test]
    fn rejects_level_zero() {
        assert!(keypair_from_primes(3u32.into(), 5u32.into(), 0).is_err());
    }
}
