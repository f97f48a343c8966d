//! Number-theoretic primitives shared by every scheme: modular
//! exponentiation, Jacobi symbols, constrained prime generation, Chinese
//! remaindering and small-subgroup discrete logarithms (Pohlig–Hellman
//! with baby-step/giant-step).
//!
//! Everything is a pure function of its inputs; randomness always comes in
//! through an explicit [`Rng`] argument, so seeded callers get
//! reproducible results.

use std::collections::HashMap;
use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint, RandBigInt};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

use crate::error::{Error, Result};

/// Miller–Rabin rounds run on every prime candidate.
pub const MILLER_RABIN_ROUNDS: u32 = 40;

/// Candidates examined before [`gen_prime`] reports failure.
pub const PRIME_SEARCH_BUDGET: u32 = 1 << 14;

fn small_primes() -> &'static [u32] {
    static PRIMES: OnceLock<Vec<u32>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let mut sieve = vec![true; 1000];
        sieve[0] = false;
        sieve[1] = false;
        for i in 2..1000 {
            if sieve[i] {
                let mut j = i * i;
                while j < 1000 {
                    sieve[j] = false;
                    j += i;
                }
            }
        }
        (0..1000).filter(|&i| sieve[i]).map(|i| i as u32).collect()
    })
}

/// `base ^ exponent mod modulus` by square-and-multiply.
pub fn mod_pow(base: &BigUint, exponent: &BigUint, modulus: &BigUint) -> Result<BigUint> {
    if *modulus < BigUint::from(2u32) {
        return Err(Error::Parameter("mod_pow requires modulus >= 2".into()));
    }
    Ok(base.modpow(exponent, modulus))
}

/// Jacobi symbol `(a/n)` for odd `n >= 3`, by the binary reciprocity
/// algorithm (no factoring). Returns 0 exactly when `gcd(a, n) > 1`.
pub fn jacobi(a: &BigUint, n: &BigUint) -> Result<i8> {
    if n.is_even() || *n < BigUint::from(3u32) {
        return Err(Error::Parameter("jacobi requires odd n >= 3".into()));
    }
    let mut a = a % n;
    let mut n = n.clone();
    let mut sign = 1i8;
    while !a.is_zero() {
        while a.is_even() {
            a >>= 1;
            let n_mod_8 = (&n % 8u32).to_u8().unwrap();
            if n_mod_8 == 3 || n_mod_8 == 5 {
                sign = -sign;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if (&a % 4u32).to_u8().unwrap() == 3 && (&n % 4u32).to_u8().unwrap() == 3 {
            sign = -sign;
        }
        a %= &n;
    }
    if n.is_one() {
        Ok(sign)
    } else {
        Ok(0)
    }
}

/// Multiplicative inverse of `a` modulo `m`, when it exists.
pub fn mod_inv(a: &BigUint, m: &BigUint) -> Option<BigUint> {
    if m.is_zero() {
        return None;
    }
    let a = BigInt::from(a % m);
    let m = BigInt::from(m.clone());
    let ext = a.extended_gcd(&m);
    if !ext.gcd.is_one() {
        return None;
    }
    let mut x = ext.x % &m;
    if x.is_negative() {
        x += &m;
    }
    Some(x.to_biguint().expect("non-negative after reduction"))
}

/// Miller–Rabin probable-prime test with random bases, preceded by trial
/// division over the primes below 1000.
pub fn is_probable_prime<R: Rng + ?Sized>(n: &BigUint, rounds: u32, rng: &mut R) -> bool {
    let two = BigUint::from(2u32);
    if *n < two {
        return false;
    }
    for &p in small_primes() {
        let p = BigUint::from(p);
        if *n == p {
            return true;
        }
        if (n % &p).is_zero() {
            return false;
        }
    }
    // n is odd and > 1000² is not guaranteed, but > 1000 and coprime to
    // everything below 1000, so any remaining composite has two factors
    // >= 1009 and Miller-Rabin applies.
    let n_minus_1 = n - 1u32;
    let s = n_minus_1.trailing_zeros().expect("n odd, so n-1 > 0");
    let d = &n_minus_1 >> s;
    'rounds: for _ in 0..rounds {
        let base = rng.gen_biguint_range(&two, &n_minus_1);
        let mut x = base.modpow(&d, n);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == n_minus_1 {
                continue 'rounds;
            }
        }
        return false;
    }
    true
}

/// Deterministic Miller–Rabin over fixed bases; exact for n < 3.3e24,
/// which covers every value we validate this way (small subgroup orders,
/// parsed key factors).
pub(crate) fn is_prime_fixed_bases(n: &BigUint) -> bool {
    let two = BigUint::from(2u32);
    if *n < two {
        return false;
    }
    const BASES: [u32; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &b in &BASES {
        if *n == BigUint::from(b) {
            return true;
        }
    }
    if n.is_even() {
        return false;
    }
    let n_minus_1 = n - 1u32;
    let s = n_minus_1.trailing_zeros().expect("n odd");
    let d = &n_minus_1 >> s;
    'bases: for &b in &BASES {
        let mut x = BigUint::from(b).modpow(&d, n);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == n_minus_1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// A congruence restriction on generated primes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PrimeConstraint {
    /// `p ≡ residue (mod modulus)`.
    Congruent { residue: BigUint, modulus: BigUint },
    /// `divisor | p − 1`, i.e. `p ≡ 1 (mod divisor)`.
    DividesPredecessor { divisor: BigUint },
}

impl PrimeConstraint {
    fn normalized(&self) -> Result<(BigUint, BigUint)> {
        match self {
            PrimeConstraint::Congruent { residue, modulus } => {
                if modulus.is_zero() {
                    return Err(Error::Parameter("congruence modulus must be positive".into()));
                }
                Ok((residue % modulus, modulus.clone()))
            }
            PrimeConstraint::DividesPredecessor { divisor } => {
                if divisor.is_zero() {
                    return Err(Error::Parameter("divisor must be positive".into()));
                }
                Ok((BigUint::one() % divisor, divisor.clone()))
            }
        }
    }
}

/// Probable prime of exactly `bits` bits satisfying `constraint`.
///
/// Sampling: draw a random candidate of the requested length, shift it
/// into the right residue class, then step by the congruence modulus so
/// the bit length never changes. Fails with a generation error after
/// [`PRIME_SEARCH_BUDGET`] candidates or when the constraint admits no
/// prime (e.g. residue and modulus share a factor).
pub fn gen_prime<R: Rng + ?Sized>(
    bits: u64,
    constraint: Option<&PrimeConstraint>,
    rng: &mut R,
) -> Result<BigUint> {
    gen_prime_in(bits, constraint, false, rng)
}

/// Keygen-internal variant that forces the top nibble of the prime to
/// 0b1111 so that products of such primes keep the full expected bit
/// length (and so do their small powers).
pub(crate) fn gen_prime_hi<R: Rng + ?Sized>(
    bits: u64,
    constraint: Option<&PrimeConstraint>,
    rng: &mut R,
) -> Result<BigUint> {
    gen_prime_in(bits, constraint, true, rng)
}

fn gen_prime_in<R: Rng + ?Sized>(
    bits: u64,
    constraint: Option<&PrimeConstraint>,
    hi: bool,
    rng: &mut R,
) -> Result<BigUint> {
    if bits < 2 {
        return Err(Error::Parameter("gen_prime requires bits >= 2".into()));
    }
    let (residue, modulus) = match constraint {
        Some(c) => c.normalized()?,
        // Unconstrained search still walks a residue class: the odd one.
        None => (BigUint::one(), BigUint::from(2u32)),
    };
    if !modulus.is_one() && !residue.gcd(&modulus).is_one() {
        // The class contains at most one prime (a divisor of gcd); treat
        // as unsatisfiable rather than special-casing it.
        return Err(Error::Generation(format!(
            "no primes with p ≡ {residue} (mod {modulus})"
        )));
    }
    let lo = if hi && bits >= 8 {
        BigUint::from(15u32) << (bits - 4)
    } else {
        BigUint::one() << (bits - 1)
    };
    let hi_excl = BigUint::one() << bits;
    let width = &hi_excl - &lo;
    let mut tested = 0u32;
    loop {
        let base = &lo + rng.gen_biguint_below(&width);
        let delta = (&residue + &modulus - (&base % &modulus)) % &modulus;
        let mut cand = base + delta;
        if cand >= hi_excl {
            tested += 1;
            if tested >= PRIME_SEARCH_BUDGET {
                return Err(Error::Generation("prime search budget exhausted".into()));
            }
            continue;
        }
        while cand < hi_excl {
            tested += 1;
            if tested >= PRIME_SEARCH_BUDGET {
                return Err(Error::Generation("prime search budget exhausted".into()));
            }
            if is_probable_prime(&cand, MILLER_RABIN_ROUNDS, rng) {
                return Ok(cand);
            }
            cand += &modulus;
        }
    }
}

/// Unique `x` below the product of the moduli with `x ≡ rᵢ (mod mᵢ)`.
///
/// Moduli must be pairwise coprime and every residue below its modulus.
pub fn crt_combine(congruences: &[(BigUint, BigUint)]) -> Result<BigUint> {
    if congruences.is_empty() {
        return Err(Error::Parameter("crt_combine needs at least one congruence".into()));
    }
    let mut x = BigUint::zero();
    let mut acc = BigUint::one();
    for (r, m) in congruences {
        if m.is_zero() || r >= m {
            return Err(Error::Parameter("crt residue must lie below its modulus".into()));
        }
        if !acc.gcd(m).is_one() {
            return Err(Error::Parameter("crt moduli must be pairwise coprime".into()));
        }
        let inv = mod_inv(&(&acc % m), m)
            .expect("acc coprime to m, inverse exists");
        let diff = (r + m - (&x % m)) % m;
        x += &acc * ((diff * inv) % m);
        acc *= m;
    }
    Ok(x)
}

/// A positive integer in factored form: distinct ascending primes with
/// positive exponents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    factors: Vec<(BigUint, u32)>,
}

impl Factorization {
    pub fn new(factors: Vec<(BigUint, u32)>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::Parameter("factorization must be non-empty".into()));
        }
        for window in factors.windows(2) {
            if window[0].0 >= window[1].0 {
                return Err(Error::Parameter("factors must be distinct and ascending".into()));
            }
        }
        for (p, e) in &factors {
            if *e == 0 {
                return Err(Error::Parameter("factor exponents must be positive".into()));
            }
            if !is_prime_fixed_bases(p) {
                return Err(Error::Parameter(format!("{p} is not prime")));
            }
        }
        Ok(Factorization { factors })
    }

    pub fn from_prime(p: BigUint) -> Result<Self> {
        Factorization::new(vec![(p, 1)])
    }

    /// Square-free factorization from a list of distinct primes.
    pub fn from_distinct_primes(mut primes: Vec<BigUint>) -> Result<Self> {
        primes.sort();
        Factorization::new(primes.into_iter().map(|p| (p, 1)).collect())
    }

    pub fn factors(&self) -> &[(BigUint, u32)] {
        &self.factors
    }

    /// The factored value, `Π pᵢ^eᵢ`.
    pub fn value(&self) -> BigUint {
        self.factors
            .iter()
            .fold(BigUint::one(), |acc, (p, e)| acc * p.pow(*e))
    }
}

struct PrimePowerCtx {
    prime: BigUint,
    exponent: u32,
    prime_pow: BigUint,
    /// order / prime^exponent
    cofactor: BigUint,
    /// inverse of base^cofactor, the p^e-subgroup generator
    g_inv: BigUint,
    /// baby steps of g^(p^(e-1)), the order-p subgroup generator
    baby: HashMap<BigUint, u64>,
    /// gamma^(-m) for the giant steps
    giant: BigUint,
    m: u64,
}

/// Pohlig–Hellman discrete logarithms in a subgroup of known factored
/// order, with baby-step/giant-step tables per prime factor.
///
/// Building the handle performs the baby-step precomputation once;
/// [`solve`](DlogPrecomputed::solve) reuses it across targets. The
/// one-shot [`dlog_subgroup`] rebuilds it per call.
pub struct DlogPrecomputed {
    modulus: BigUint,
    order: BigUint,
    components: Vec<PrimePowerCtx>,
}

impl DlogPrecomputed {
    /// `base` must have exact multiplicative order `order.value()` modulo
    /// `modulus`.
    pub fn new(base: &BigUint, modulus: &BigUint, order: &Factorization) -> Result<Self> {
        if *modulus < BigUint::from(2u32) {
            return Err(Error::Parameter("dlog modulus must be >= 2".into()));
        }
        if base.gcd(modulus) != BigUint::one() {
            return Err(Error::Parameter("dlog base must be a unit".into()));
        }
        let n = order.value();
        let mut components = Vec::with_capacity(order.factors().len());
        for (p, e) in order.factors() {
            let prime_pow = p.pow(*e);
            let cofactor = &n / &prime_pow;
            let g = base.modpow(&cofactor, modulus);
            let gamma = g.modpow(&p.pow(*e - 1), modulus);
            if gamma.is_one() {
                return Err(Error::Parameter(
                    "base does not have the stated order".into(),
                ));
            }
            let p_u64 = p.to_u64().ok_or_else(|| {
                Error::Parameter("subgroup prime too large for baby-step/giant-step".into())
            })?;
            let m = (p_u64 as f64).sqrt().ceil() as u64 + 1;
            if m > 1 << 22 {
                return Err(Error::Parameter(
                    "subgroup prime too large for baby-step/giant-step".into(),
                ));
            }
            let mut baby = HashMap::with_capacity(m as usize);
            let mut acc = BigUint::one();
            for j in 0..m {
                baby.entry(acc.clone()).or_insert(j);
                acc = acc * &gamma % modulus;
            }
            let giant = mod_inv(&acc, modulus).expect("gamma is a unit");
            let g_inv = mod_inv(&g, modulus).expect("g is a unit");
            components.push(PrimePowerCtx {
                prime: p.clone(),
                exponent: *e,
                prime_pow,
                cofactor,
                g_inv,
                baby,
                giant,
                m,
            });
        }
        Ok(DlogPrecomputed { modulus: modulus.clone(), order: n, components })
    }

    fn bsgs(&self, ctx: &PrimePowerCtx, target: &BigUint) -> Option<BigUint> {
        let mut gamma = target.clone();
        for i in 0..ctx.m {
            if let Some(&j) = ctx.baby.get(&gamma) {
                return Some(BigUint::from(i * ctx.m + j) % &ctx.prime);
            }
            gamma = gamma * &ctx.giant % &self.modulus;
        }
        None
    }

    /// The unique exponent `x < order` with `base^x ≡ target`, or a
    /// corrupt-ciphertext error when `target` lies outside the subgroup.
    pub fn solve(&self, target: &BigUint) -> Result<BigUint> {
        let mut congruences = Vec::with_capacity(self.components.len());
        for ctx in &self.components {
            let h = target.modpow(&ctx.cofactor, &self.modulus);
            // digits of x mod p^e, least significant first
            let mut x = BigUint::zero();
            let mut p_pow_k = BigUint::one();
            for k in 0..ctx.exponent {
                let shift = ctx.prime.pow(ctx.exponent - 1 - k);
                let partial = &h * ctx.g_inv.modpow(&x, &self.modulus) % &self.modulus;
                let cur = partial.modpow(&shift, &self.modulus);
                let digit = self.bsgs(ctx, &cur).ok_or_else(|| {
                    Error::Corrupt("dlog target outside the expected subgroup".into())
                })?;
                x += digit * &p_pow_k;
                p_pow_k *= &ctx.prime;
            }
            congruences.push((x, ctx.prime_pow.clone()));
        }
        crt_combine(&congruences)
    }

    pub fn order(&self) -> &BigUint {
        &self.order
    }
}

/// One-shot Pohlig–Hellman: tables are rebuilt per call. Use
/// [`DlogPrecomputed`] to amortize the baby-step precomputation.
pub fn dlog_subgroup(
    base: &BigUint,
    target: &BigUint,
    modulus: &BigUint,
    order: &Factorization,
) -> Result<BigUint> {
    DlogPrecomputed::new(base, modulus, order)?.solve(target)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha20Rng;

    fn rng() -> ChaCha20Rng {
        ChaCha20Rng::seed_from_u64(0x5eed)
    }

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    // Oracle: naive repeated multiplication.
    fn naive_pow(base: u64, exp: u64, m: u64) -> u64 {
        (0..exp).fold(1 % m, |acc, _| acc * base % m)
    }

    // Oracle: Euler criterion per prime factor (with multiplicity).
    fn jacobi_oracle(a: u64, n: u64) -> i8 {
        let mut n_rem = n;
        let mut result = 1i64;
        let mut d = 2u64;
        while d * d <= n_rem {
            while n_rem.is_multiple_of(d) {
                n_rem /= d;
                let e = naive_pow(a % d, (d - 1) / 2, d);
                let l = if e == 0 { 0 } else if e == 1 { 1 } else { -1 };
                result *= l as i64;
            }
            d += 1;
        }
        if n_rem > 1 {
            let e = naive_pow(a % n_rem, (n_rem - 1) / 2, n_rem);
            let l = if e == 0 { 0 } else if e == 1 { 1 } else { -1 };
            result *= l as i64;
        }
        result as i8
    }

    #[test]
    fn mod_pow_worked_examples() {
        assert_eq!(mod_pow(&big(2), &big(10), &big(1000)).unwrap(), big(24));
        for x in [0u64, 1, 5, 123456] {
            assert_eq!(mod_pow(&big(x), &big(0), &big(97)).unwrap(), big(1));
        }
        // oracle first, then the pinned value
        assert_eq!(naive_pow(31, 7, 33), 4);
        assert_eq!(mod_pow(&big(31), &big(7), &big(33)).unwrap(), big(4));
    }

    #[test]
    fn mod_pow_matches_naive_exhaustively() {
        for m in 2..=64u64 {
            for b in 0..m {
                for e in 0..=64u64 {
                    assert_eq!(
                        mod_pow(&big(b), &big(e), &big(m)).unwrap(),
                        big(naive_pow(b, e, m)),
                        "{b}^{e} mod {m}"
                    );
                }
            }
        }
    }

    #[test]
    fn mod_pow_rejects_tiny_modulus() {
        assert!(matches!(mod_pow(&big(2), &big(2), &big(1)), Err(Error::Parameter(_))));
        assert!(matches!(mod_pow(&big(2), &big(2), &big(0)), Err(Error::Parameter(_))));
    }

    #[test]
    fn jacobi_worked_examples() {
        assert_eq!(jacobi(&big(1), &big(15)).unwrap(), 1);
        assert_eq!(jacobi(&big(6), &big(15)).unwrap(), 0);
        assert_eq!(jacobi_oracle(2, 15), 1);
        assert_eq!(jacobi(&big(2), &big(15)).unwrap(), 1);
    }

    #[test]
    fn jacobi_matches_euler_oracle() {
        for n in (3..=99u64).step_by(2) {
            for a in 0..n {
                assert_eq!(
                    jacobi(&big(a), &big(n)).unwrap(),
                    jacobi_oracle(a, n),
                    "({a}/{n})"
                );
            }
        }
    }

    #[test]
    fn jacobi_is_multiplicative() {
        for n in (3..=99u64).step_by(2) {
            for a in 0..n {
                for b in 0..n {
                    let lhs = jacobi(&big(a * b % n), &big(n)).unwrap();
                    let rhs = jacobi(&big(a), &big(n)).unwrap() * jacobi(&big(b), &big(n)).unwrap();
                    assert_eq!(lhs, rhs, "n={n} a={a} b={b}");
                }
            }
        }
    }

    #[test]
    fn jacobi_rejects_bad_modulus() {
        assert!(jacobi(&big(3), &big(4)).is_err());
        assert!(jacobi(&big(0), &big(1)).is_err());
    }

    #[test]
    fn jacobi_euler_for_primes() {
        // For prime p the symbol must equal the Euler criterion directly.
        for p in [3u64, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97] {
            for a in 0..p {
                let e = naive_pow(a, (p - 1) / 2, p);
                let expected = if e == 0 { 0 } else if e == 1 { 1 } else { -1 };
                assert_eq!(jacobi(&big(a), &big(p)).unwrap(), expected);
            }
        }
    }

    #[test]
    fn crt_worked_examples() {
        // oracle: scan 0..15
        let expected = (0..15u64).find(|x| x % 3 == 1 && x % 5 == 2).unwrap();
        assert_eq!(expected, 7);
        assert_eq!(crt_combine(&[(big(1), big(3)), (big(2), big(5))]).unwrap(), big(7));
        assert_eq!(crt_combine(&[(big(0), big(11)), (big(0), big(13))]).unwrap(), big(0));
        assert_eq!(crt_combine(&[(big(5), big(9))]).unwrap(), big(5));
    }

    #[test]
    fn crt_roundtrip_exhaustive() {
        for x in 0..105u64 {
            let r = crt_combine(&[
                (big(x % 3), big(3)),
                (big(x % 5), big(5)),
                (big(x % 7), big(7)),
            ])
            .unwrap();
            assert_eq!(r, big(x));
        }
    }

    #[test]
    fn crt_rejects_bad_inputs() {
        assert!(crt_combine(&[]).is_err());
        assert!(crt_combine(&[(big(1), big(6)), (big(1), big(4))]).is_err());
        assert!(crt_combine(&[(big(7), big(5))]).is_err());
    }

    #[test]
    fn gen_prime_range_contract() {
        let mut r = rng();
        let p = gen_prime(8, None, &mut r).unwrap();
        assert!(p >= big(128) && p <= big(255), "got {p}");
        assert!(is_prime_fixed_bases(&p));
    }

    #[test]
    fn gen_prime_congruence_contract() {
        let mut r = rng();
        let c = PrimeConstraint::Congruent { residue: big(3), modulus: big(4) };
        let p = gen_prime(16, Some(&c), &mut r).unwrap();
        assert_eq!((&p % 4u32).to_u8().unwrap(), 3);
        assert_eq!(p.bits(), 16);
        assert!(is_prime_fixed_bases(&p));
    }

    #[test]
    fn gen_prime_divisor_constraint() {
        let mut r = rng();
        let c = PrimeConstraint::DividesPredecessor { divisor: big(257) };
        let p = gen_prime(24, Some(&c), &mut r).unwrap();
        assert!(((&p - 1u32) % 257u32).is_zero());
        assert_eq!(p.bits(), 24);
    }

    #[test]
    fn gen_prime_is_deterministic_under_seed() {
        let a = gen_prime(32, None, &mut ChaCha20Rng::seed_from_u64(99)).unwrap();
        let b = gen_prime(32, None, &mut ChaCha20Rng::seed_from_u64(99)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn gen_prime_unsatisfiable_constraint() {
        let mut r = rng();
        let c = PrimeConstraint::Congruent { residue: big(0), modulus: big(4) };
        assert!(matches!(gen_prime(16, Some(&c), &mut r), Err(Error::Generation(_))));
    }

    #[test]
    fn gen_prime_rejects_one_bit() {
        assert!(gen_prime(1, None, &mut rng()).is_err());
    }

    #[test]
    fn gen_prime_passes_independent_check_all_widths() {
        let mut r = rng();
        for bits in 2..=32u64 {
            let p = gen_prime(bits, None, &mut r).unwrap();
            assert_eq!(p.bits(), bits);
            assert!(is_prime_fixed_bases(&p), "{p} at {bits} bits");
        }
    }

    #[test]
    fn dlog_worked_examples() {
        // oracle: scan exponents
        assert_eq!((0..3u64).find(|&x| naive_pow(11, x, 35) == 16), Some(2));
        let f3 = Factorization::from_prime(big(3)).unwrap();
        assert_eq!(dlog_subgroup(&big(11), &big(16), &big(35), &f3).unwrap(), big(2));
        assert_eq!(dlog_subgroup(&big(11), &big(1), &big(35), &f3).unwrap(), big(0));

        assert_eq!((0..10u64).find(|&x| naive_pow(2, x, 11) == 7), Some(7));
        let f10 = Factorization::new(vec![(big(2), 1), (big(5), 1)]).unwrap();
        assert_eq!(dlog_subgroup(&big(2), &big(7), &big(11), &f10).unwrap(), big(7));
    }

    #[test]
    fn dlog_brute_force_agreement() {
        // (base, modulus, order factorization)
        type DlogCase = (u64, u64, Vec<(u64, u32)>);
        let cases: Vec<DlogCase> = vec![
            (11, 35, vec![(3, 1)]),          // order 3
            (2, 11, vec![(2, 1), (5, 1)]),   // order 10
            (4, 19, vec![(3, 2)]),           // order 9
            (2, 17, vec![(2, 3)]),           // order 8
            (2, 101, vec![(2, 2), (5, 2)]),  // order 100
            (3, 10007, vec![(5003, 1)]),     // 3 is a QR mod 10007
            (5, 10007, vec![(2, 1), (5003, 1)]), // order 10006
        ];
        for (base, modulus, factors) in cases {
            let f = Factorization::new(
                factors.iter().map(|(p, e)| (big(*p), *e)).collect(),
            )
            .unwrap();
            let order = f.value().to_u64().unwrap();
            let pre = DlogPrecomputed::new(&big(base), &big(modulus), &f).unwrap();
            // power table = the brute-force scan, computed once
            let mut power = big(1);
            for x in 0..order {
                assert_eq!(pre.solve(&power).unwrap(), big(x), "base {base} x {x}");
                power = power * big(base) % big(modulus);
            }
            assert!(power.is_one(), "base {base} must have order {order}");
        }
    }

    #[test]
    fn dlog_rejects_target_outside_subgroup() {
        // ord(8) = 2 mod 21; 13 also has order 2 but is not a power of 8.
        let f = Factorization::from_prime(big(2)).unwrap();
        assert_eq!(dlog_subgroup(&big(8), &big(1), &big(21), &f).unwrap(), big(0));
        assert_eq!(dlog_subgroup(&big(8), &big(8), &big(21), &f).unwrap(), big(1));
        assert!(matches!(
            dlog_subgroup(&big(8), &big(13), &big(21), &f),
            Err(Error::Corrupt(_))
        ));
    }

    #[test]
    fn dlog_rejects_wrong_order() {
        // ord(4) = 3 mod 7, not 9
        let f = Factorization::new(vec![(big(3), 2)]).unwrap();
        assert!(dlog_subgroup(&big(4), &big(2), &big(7), &f).is_err());
    }

    #[test]
    fn factorization_invariants() {
        assert!(Factorization::new(vec![]).is_err());
        assert!(Factorization::new(vec![(big(4), 1)]).is_err());
        assert!(Factorization::new(vec![(big(5), 1), (big(3), 1)]).is_err());
        assert!(Factorization::new(vec![(big(3), 0)]).is_err());
        let f = Factorization::new(vec![(big(3), 2), (big(5), 1)]).unwrap();
        assert_eq!(f.value(), big(45));
    }

    #[test]
    fn mod_inv_agrees_with_definition() {
        for m in 2..=50u64 {
            for a in 0..m {
                match mod_inv(&big(a), &big(m)) {
                    Some(inv) => assert_eq!((big(a) * inv) % big(m), big(1 % m)),
                    None => assert_ne!(big(a).gcd(&big(m)), big(1)),
                }
            }
        }
    }
}
