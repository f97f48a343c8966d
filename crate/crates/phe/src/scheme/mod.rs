//! Scheme-agnostic data model and generic homomorphic algorithms.
//!
//! A scheme is a quadruple of key generation, encryption, (deterministic)
//! decryption and a combining algorithm that maps encryptions of `m₁`,
//! `m₂` to an encryption of `m₁ + m₂` (additive schemes) or `m₁ · m₂`
//! (RSA). Additive schemes additionally support scalar multiplication
//! ([`mixed_mult`], double-and-add over the combiner) and re-randomization
//! ([`blind`], combining with a fresh encryption of the identity).
//!
//! The per-scheme formulas live in the submodules; everything here
//! dispatches on [`SchemeId`].

pub mod benaloh;
pub mod damgard_jurik;
pub mod gm;
pub mod naccache_stern;
pub mod okamoto_uchiyama;
pub mod paillier;
pub mod rsa;

use num_bigint::{BigUint, RandBigInt};
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::Rng;

use crate::error::{Error, Result};
use crate::numtheory::Factorization;

/// The implemented cryptosystems.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SchemeId {
    Rsa,
    Gm,
    Benaloh,
    NaccacheStern,
    OkamotoUchiyama,
    Paillier,
    DamgardJurik,
}

impl SchemeId {
    pub const ALL: [SchemeId; 7] = [
        SchemeId::Rsa,
        SchemeId::Gm,
        SchemeId::Benaloh,
        SchemeId::NaccacheStern,
        SchemeId::OkamotoUchiyama,
        SchemeId::Paillier,
        SchemeId::DamgardJurik,
    ];

    /// Lowercase token used in serialized files and on the command line.
    pub fn token(self) -> &'static str {
        match self {
            SchemeId::Rsa => "rsa",
            SchemeId::Gm => "gm",
            SchemeId::Benaloh => "benaloh",
            SchemeId::NaccacheStern => "naccache-stern",
            SchemeId::OkamotoUchiyama => "okamoto-uchiyama",
            SchemeId::Paillier => "paillier",
            SchemeId::DamgardJurik => "damgard-jurik",
        }
    }

    pub fn from_token(s: &str) -> Result<SchemeId> {
        SchemeId::ALL
            .into_iter()
            .find(|id| id.token() == s)
            .ok_or_else(|| Error::format("scheme", format!("unknown scheme `{s}`")))
    }

    /// Combining adds plaintexts. False only for RSA, which multiplies.
    pub fn is_additive(self) -> bool {
        !matches!(self, SchemeId::Rsa)
    }

    /// Encryption consumes fresh randomness. False only for RSA.
    pub fn is_probabilistic(self) -> bool {
        !matches!(self, SchemeId::Rsa)
    }
}

impl std::fmt::Display for SchemeId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.token())
    }
}

impl std::str::FromStr for SchemeId {
    type Err = Error;
    fn from_str(s: &str) -> Result<SchemeId> {
        SchemeId::from_token(s)
    }
}

/// Bit length of the modulus produced by [`keygen`]. Floor of 16 bits:
/// anything smaller cannot host every scheme's structure. Toy keys below
/// the floor are built with the per-scheme `keypair_from_*` constructors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SecurityParameter(u32);

impl SecurityParameter {
    pub const MIN_BITS: u32 = 16;

    pub fn new(bits: u32) -> Result<SecurityParameter> {
        if bits < Self::MIN_BITS {
            return Err(Error::Parameter(format!(
                "security parameter must be at least {} bits, got {bits}",
                Self::MIN_BITS
            )));
        }
        Ok(SecurityParameter(bits))
    }

    pub fn bits(self) -> u32 {
        self.0
    }
}

/// Scheme-specific public material.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PublicParams {
    Rsa { n: BigUint, e: BigUint },
    /// `a` is a pseudo-residue: Jacobi symbol 1 mod `n`, non-residue mod
    /// both primes.
    Gm { n: BigUint, a: BigUint },
    /// Block size `k` is prime and divides p−1.
    Benaloh { n: BigUint, g: BigUint, k: BigUint },
    /// Block size is the product of the small distinct odd primes in `k`.
    NaccacheStern { n: BigUint, g: BigUint, k: Factorization },
    /// `n = p²q`, `h = gⁿ`. `cap` is the exact plaintext capacity `p`; a
    /// deployment would publish only a bit bound below it, since the
    /// exact capacity reveals the factorization. This library favors the
    /// exact message space.
    OkamotoUchiyama { n: BigUint, g: BigUint, h: BigUint, cap: BigUint },
    /// Canonical generator `g = n + 1`.
    Paillier { n: BigUint, g: BigUint },
    /// Level `s >= 1`: plaintexts mod `n^s`, ciphertexts mod `n^(s+1)`.
    DamgardJurik { n: BigUint, g: BigUint, s: u32 },
}

/// Public half of a key pair, tagged with the security parameter used to
/// generate it (for toy keys: the modulus bit length).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PublicKey {
    pub(crate) sigma: u32,
    pub(crate) params: PublicParams,
}

impl PublicKey {
    pub fn scheme(&self) -> SchemeId {
        match self.params {
            PublicParams::Rsa { .. } => SchemeId::Rsa,
            PublicParams::Gm { .. } => SchemeId::Gm,
            PublicParams::Benaloh { .. } => SchemeId::Benaloh,
            PublicParams::NaccacheStern { .. } => SchemeId::NaccacheStern,
            PublicParams::OkamotoUchiyama { .. } => SchemeId::OkamotoUchiyama,
            PublicParams::Paillier { .. } => SchemeId::Paillier,
            PublicParams::DamgardJurik { .. } => SchemeId::DamgardJurik,
        }
    }

    pub fn sigma(&self) -> u32 {
        self.sigma
    }

    pub fn params(&self) -> &PublicParams {
        &self.params
    }

    /// The key modulus `n` (or `N`).
    pub fn modulus(&self) -> &BigUint {
        match &self.params {
            PublicParams::Rsa { n, .. }
            | PublicParams::Gm { n, .. }
            | PublicParams::Benaloh { n, .. }
            | PublicParams::NaccacheStern { n, .. }
            | PublicParams::OkamotoUchiyama { n, .. }
            | PublicParams::Paillier { n, .. }
            | PublicParams::DamgardJurik { n, .. } => n,
        }
    }

    /// Modulus of the ciphertext group: `n`, `n²` or `n^(s+1)`.
    pub fn ciphertext_modulus(&self) -> BigUint {
        let n = self.modulus();
        match &self.params {
            PublicParams::Paillier { .. } => n * n,
            PublicParams::DamgardJurik { s, .. } => n.pow(s + 1),
            _ => n.clone(),
        }
    }

    /// Exclusive upper bound of the message space.
    pub fn message_modulus(&self) -> BigUint {
        match &self.params {
            PublicParams::Rsa { n, .. } => n.clone(),
            PublicParams::Gm { .. } => BigUint::from(2u32),
            PublicParams::Benaloh { k, .. } => k.clone(),
            PublicParams::NaccacheStern { k, .. } => k.value(),
            PublicParams::OkamotoUchiyama { cap, .. } => cap.clone(),
            PublicParams::Paillier { n, .. } => n.clone(),
            PublicParams::DamgardJurik { n, s, .. } => n.pow(*s),
        }
    }

    /// Damgård–Jurik level, if this is a DJ key.
    pub fn level(&self) -> Option<u32> {
        match &self.params {
            PublicParams::DamgardJurik { s, .. } => Some(*s),
            _ => None,
        }
    }

    /// A plaintext in this key's message space.
    pub fn plaintext(&self, value: BigUint) -> Result<Plaintext> {
        Plaintext::new(value, self.message_modulus())
    }
}

/// Scheme-specific trapdoors. The primes are authoritative; the other
/// fields are deterministic precomputations over them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SecretParams {
    Rsa { p: BigUint, q: BigUint, d: BigUint },
    Gm { p: BigUint, q: BigUint },
    Benaloh { p: BigUint, q: BigUint, phi: BigUint },
    NaccacheStern { p: BigUint, q: BigUint, phi: BigUint },
    /// `l_inv = L(g^(p−1) mod p²)⁻¹ mod p` with `L(x) = (x−1)/p`.
    OkamotoUchiyama { p: BigUint, q: BigUint, p_squared: BigUint, l_inv: BigUint },
    /// `lambda = lcm(p−1, q−1)`, `mu = lambda⁻¹ mod n`.
    Paillier { p: BigUint, q: BigUint, lambda: BigUint, mu: BigUint },
    /// `mu = lambda⁻¹ mod n^s`.
    DamgardJurik { p: BigUint, q: BigUint, lambda: BigUint, mu: BigUint },
}

/// Secret half of a key pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SecretKey {
    pub(crate) params: SecretParams,
}

impl SecretKey {
    pub fn scheme(&self) -> SchemeId {
        match self.params {
            SecretParams::Rsa { .. } => SchemeId::Rsa,
            SecretParams::Gm { .. } => SchemeId::Gm,
            SecretParams::Benaloh { .. } => SchemeId::Benaloh,
            SecretParams::NaccacheStern { .. } => SchemeId::NaccacheStern,
            SecretParams::OkamotoUchiyama { .. } => SchemeId::OkamotoUchiyama,
            SecretParams::Paillier { .. } => SchemeId::Paillier,
            SecretParams::DamgardJurik { .. } => SchemeId::DamgardJurik,
        }
    }

    pub fn params(&self) -> &SecretParams {
        &self.params
    }

    /// The trapdoor primes `(p, q)`.
    pub fn primes(&self) -> (&BigUint, &BigUint) {
        match &self.params {
            SecretParams::Rsa { p, q, .. }
            | SecretParams::Gm { p, q }
            | SecretParams::Benaloh { p, q, .. }
            | SecretParams::NaccacheStern { p, q, .. }
            | SecretParams::OkamotoUchiyama { p, q, .. }
            | SecretParams::Paillier { p, q, .. }
            | SecretParams::DamgardJurik { p, q, .. } => (p, q),
        }
    }

    fn check_pairing(&self, pk: &PublicKey) -> Result<()> {
        if self.scheme() != pk.scheme() {
            return Err(Error::Parameter(format!(
                "secret key is for {}, public key for {}",
                self.scheme(),
                pk.scheme()
            )));
        }
        let (p, q) = self.primes();
        let expected = if self.scheme() == SchemeId::OkamotoUchiyama {
            p * p * q
        } else {
            p * q
        };
        if &expected != pk.modulus() {
            return Err(Error::Parameter("secret key does not match public modulus".into()));
        }
        Ok(())
    }
}

/// A message together with the modulus of its message space; range errors
/// surface at construction rather than at encryption time.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Plaintext {
    value: BigUint,
    space: BigUint,
}

impl Plaintext {
    pub fn new(value: BigUint, space: BigUint) -> Result<Plaintext> {
        if space < BigUint::from(2u32) {
            return Err(Error::Parameter("message space must have at least two elements".into()));
        }
        if value >= space {
            return Err(Error::Domain(format!("plaintext {value} not below modulus {space}")));
        }
        Ok(Plaintext { value, space })
    }

    pub fn value(&self) -> &BigUint {
        &self.value
    }

    pub fn space(&self) -> &BigUint {
        &self.space
    }
}

/// Encryption randomness. Validity is scheme-dependent and checked where
/// it is used: a unit of `Z_n^*` for GM, Benaloh, Naccache–Stern,
/// Paillier and Damgård–Jurik; any element of `Z_n` for Okamoto–Uchiyama.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Randomness(pub BigUint);

/// One or more residues tagged with their scheme (and level for
/// Damgård–Jurik). Every operation in this crate produces single-residue
/// ciphertexts; the list form exists for serialized interchange.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ciphertext {
    scheme: SchemeId,
    residues: Vec<BigUint>,
    level: Option<u32>,
}

impl Ciphertext {
    pub(crate) fn single(scheme: SchemeId, residue: BigUint, level: Option<u32>) -> Ciphertext {
        Ciphertext { scheme, residues: vec![residue], level }
    }

    pub fn from_parts(
        scheme: SchemeId,
        residues: Vec<BigUint>,
        level: Option<u32>,
    ) -> Result<Ciphertext> {
        if residues.is_empty() {
            return Err(Error::Parameter("ciphertext needs at least one residue".into()));
        }
        if level.is_some() != (scheme == SchemeId::DamgardJurik) {
            return Err(Error::Parameter("level is set exactly for damgard-jurik".into()));
        }
        if let Some(s) = level {
            if s == 0 {
                return Err(Error::Parameter("damgard-jurik level must be positive".into()));
            }
        }
        Ok(Ciphertext { scheme, residues, level })
    }

    pub fn scheme(&self) -> SchemeId {
        self.scheme
    }

    pub fn residues(&self) -> &[BigUint] {
        &self.residues
    }

    /// The single residue of an operable ciphertext.
    pub fn residue(&self) -> Result<&BigUint> {
        if self.residues.len() != 1 {
            return Err(Error::Parameter(format!(
                "expected a single-residue ciphertext, found {}",
                self.residues.len()
            )));
        }
        Ok(&self.residues[0])
    }

    pub fn level(&self) -> Option<u32> {
        self.level
    }

    /// Check this ciphertext is a well-formed element of `pk`'s
    /// ciphertext group: scheme and level match, residues lie below the
    /// ciphertext modulus, and (for the probabilistic schemes) are units.
    pub fn validate(&self, pk: &PublicKey) -> Result<()> {
        if self.scheme != pk.scheme() {
            return Err(Error::Validation(format!(
                "ciphertext scheme {} does not match key scheme {}",
                self.scheme,
                pk.scheme()
            )));
        }
        if self.level != pk.level() {
            return Err(Error::Validation("ciphertext level does not match key level".into()));
        }
        let modulus = pk.ciphertext_modulus();
        for r in &self.residues {
            if r >= &modulus {
                return Err(Error::Validation(format!("residue {r} not below modulus {modulus}")));
            }
            if self.scheme.is_probabilistic() && !r.gcd(&modulus).is_one() {
                return Err(Error::Validation("residue is not a unit of the ciphertext group".into()));
            }
        }
        Ok(())
    }
}

fn check_operable(pk: &PublicKey, c: &Ciphertext) -> Result<()> {
    if c.scheme != pk.scheme() {
        return Err(Error::Parameter(format!(
            "ciphertext scheme {} does not match key scheme {}",
            c.scheme,
            pk.scheme()
        )));
    }
    if c.level != pk.level() {
        return Err(Error::Parameter("ciphertext level does not match key level".into()));
    }
    c.residue().map(|_| ())
}

/// Generate a key pair. `level` selects the Damgård–Jurik exponent `s`
/// (default 1) and must be absent for every other scheme.
pub fn keygen<R: Rng + ?Sized>(
    scheme: SchemeId,
    sigma: SecurityParameter,
    level: Option<u32>,
    rng: &mut R,
) -> Result<(PublicKey, SecretKey)> {
    if level.is_some() && scheme != SchemeId::DamgardJurik {
        return Err(Error::Parameter(format!("{scheme} does not take a level")));
    }
    match scheme {
        SchemeId::Rsa => rsa::keygen(sigma.bits(), rng),
        SchemeId::Gm => gm::keygen(sigma.bits(), rng),
        SchemeId::Benaloh => benaloh::keygen(sigma.bits(), rng),
        SchemeId::NaccacheStern => naccache_stern::keygen(sigma.bits(), rng),
        SchemeId::OkamotoUchiyama => okamoto_uchiyama::keygen(sigma.bits(), rng),
        SchemeId::Paillier => paillier::keygen(sigma.bits(), rng),
        SchemeId::DamgardJurik => {
            let s = level.unwrap_or(1);
            damgard_jurik::keygen(sigma.bits(), s, rng)
        }
    }
}

/// Encrypt under explicit randomness. Deterministic; the worked-example
/// and exhaustive tests are built on this entry point. RSA takes no
/// randomness and is rejected here — use [`encrypt`].
pub fn encrypt_with(pk: &PublicKey, m: &Plaintext, r: &Randomness) -> Result<Ciphertext> {
    let bound = pk.message_modulus();
    if m.value() >= &bound {
        return Err(Error::Domain(format!(
            "plaintext {} not below message modulus {bound}",
            m.value()
        )));
    }
    let residue = match &pk.params {
        PublicParams::Rsa { .. } => {
            return Err(Error::Unsupported("rsa encryption is deterministic and takes no randomness".into()))
        }
        PublicParams::Gm { n, a } => gm::encrypt(n, a, m.value(), &r.0)?,
        PublicParams::Benaloh { n, g, k } => benaloh::encrypt(n, g, k, m.value(), &r.0)?,
        PublicParams::NaccacheStern { n, g, k } => {
            naccache_stern::encrypt(n, g, &k.value(), m.value(), &r.0)?
        }
        PublicParams::OkamotoUchiyama { n, g, h, .. } => {
            okamoto_uchiyama::encrypt(n, g, h, m.value(), &r.0)?
        }
        PublicParams::Paillier { n, .. } => paillier::encrypt(n, m.value(), &r.0)?,
        PublicParams::DamgardJurik { n, s, .. } => {
            damgard_jurik::encrypt(n, *s, m.value(), &r.0)?
        }
    };
    Ok(Ciphertext::single(pk.scheme(), residue, pk.level()))
}

/// Encrypt with fresh randomness from `rng` (none for RSA).
pub fn encrypt<R: Rng + ?Sized>(
    pk: &PublicKey,
    m: &Plaintext,
    rng: &mut R,
) -> Result<Ciphertext> {
    if let PublicParams::Rsa { n, e } = &pk.params {
        if m.value() >= n {
            return Err(Error::Domain(format!("plaintext {} not below modulus {n}", m.value())));
        }
        let residue = rsa::encrypt(n, e, m.value());
        return Ok(Ciphertext::single(SchemeId::Rsa, residue, None));
    }
    let r = draw_randomness(pk, rng);
    encrypt_with(pk, m, &r)
}

/// Decryption is deterministic and exact for every implemented scheme.
pub fn decrypt(sk: &SecretKey, pk: &PublicKey, c: &Ciphertext) -> Result<Plaintext> {
    sk.check_pairing(pk)?;
    check_operable(pk, c)?;
    let residue = c.residue()?;
    if residue >= &pk.ciphertext_modulus() {
        return Err(Error::Corrupt("residue not below the ciphertext modulus".into()));
    }
    let value = match (&sk.params, &pk.params) {
        (SecretParams::Rsa { d, .. }, PublicParams::Rsa { n, .. }) => rsa::decrypt(n, d, residue),
        (SecretParams::Gm { p, .. }, PublicParams::Gm { n, .. }) => gm::decrypt(p, n, residue)?,
        (SecretParams::Benaloh { phi, .. }, PublicParams::Benaloh { n, g, k }) => {
            benaloh::decrypt(n, g, k, phi, residue)?
        }
        (SecretParams::NaccacheStern { phi, .. }, PublicParams::NaccacheStern { n, g, k }) => {
            naccache_stern::decrypt(n, g, k, phi, residue)?
        }
        (
            SecretParams::OkamotoUchiyama { p, p_squared, l_inv, .. },
            PublicParams::OkamotoUchiyama { n, .. },
        ) => okamoto_uchiyama::decrypt(n, p, p_squared, l_inv, residue)?,
        (SecretParams::Paillier { lambda, mu, .. }, PublicParams::Paillier { n, .. }) => {
            paillier::decrypt(n, lambda, mu, residue)?
        }
        (SecretParams::DamgardJurik { lambda, mu, .. }, PublicParams::DamgardJurik { n, s, .. }) => {
            damgard_jurik::decrypt(n, *s, lambda, mu, residue)?
        }
        _ => unreachable!("check_pairing verified the schemes agree"),
    };
    Plaintext::new(value, pk.message_modulus())
}

/// Multiply two ciphertexts in the ciphertext group. Decrypts to
/// `m₁ + m₂ mod M` (additive schemes) or `m₁·m₂ mod N` (RSA). No
/// blinding is applied; [`combine`] is the randomized form.
pub fn combine_raw(pk: &PublicKey, c1: &Ciphertext, c2: &Ciphertext) -> Result<Ciphertext> {
    if c1.scheme != c2.scheme {
        return Err(Error::Parameter("cannot combine ciphertexts of different schemes".into()));
    }
    if c1.level != c2.level {
        return Err(Error::Parameter("cannot combine ciphertexts of different levels".into()));
    }
    check_operable(pk, c1)?;
    check_operable(pk, c2)?;
    let modulus = pk.ciphertext_modulus();
    let product = c1.residue()? * c2.residue()? % &modulus;
    Ok(Ciphertext::single(pk.scheme(), product, pk.level()))
}

/// Homomorphic combination. For probabilistic schemes the product is
/// re-randomized with fresh randomness so the output hides its inputs;
/// for RSA (deterministic) it is the plain product.
pub fn combine<R: Rng + ?Sized>(
    pk: &PublicKey,
    c1: &Ciphertext,
    c2: &Ciphertext,
    rng: &mut R,
) -> Result<Ciphertext> {
    let raw = combine_raw(pk, c1, c2)?;
    if pk.scheme().is_probabilistic() {
        blind(pk, &raw, rng)
    } else {
        Ok(raw)
    }
}

fn check_scalar_scheme(pk: &PublicKey) -> Result<()> {
    if !pk.scheme().is_additive() {
        return Err(Error::Unsupported(
            "scalar multiplication needs an additive scheme; rsa is multiplicative".into(),
        ));
    }
    Ok(())
}

/// `scalar · m` under encryption, without the final blinding.
pub fn mixed_mult_raw(pk: &PublicKey, scalar: &BigUint, c: &Ciphertext) -> Result<Ciphertext> {
    check_scalar_scheme(pk)?;
    check_operable(pk, c)?;
    if scalar >= &pk.message_modulus() {
        return Err(Error::Domain(format!("scalar {scalar} not below the message modulus")));
    }
    let modulus = pk.ciphertext_modulus();
    // Ciphertext exponentiation is exactly double-and-add over the
    // combining operation for these schemes.
    let residue = c.residue()?.modpow(scalar, &modulus);
    Ok(Ciphertext::single(pk.scheme(), residue, pk.level()))
}

/// Scalar multiplication: decrypts to `scalar · m mod M`. Blinded.
pub fn mixed_mult<R: Rng + ?Sized>(
    pk: &PublicKey,
    scalar: &BigUint,
    c: &Ciphertext,
    rng: &mut R,
) -> Result<Ciphertext> {
    let raw = mixed_mult_raw(pk, scalar, c)?;
    blind(pk, &raw, rng)
}

fn identity_plaintext(pk: &PublicKey) -> Result<Plaintext> {
    // Additive identity; RSA never reaches this (blind rejects it).
    Plaintext::new(BigUint::zero(), pk.message_modulus())
}

fn draw_randomness<R: Rng + ?Sized>(pk: &PublicKey, rng: &mut R) -> Randomness {
    let n = pk.modulus();
    match pk.scheme() {
        // r uniform in Z_n, no unit requirement
        SchemeId::OkamotoUchiyama => Randomness(rng.gen_biguint_below(n)),
        // r uniform in Z_n^*
        _ => loop {
            let r = rng.gen_biguint_range(&BigUint::one(), n);
            if r.gcd(n).is_one() {
                return Randomness(r);
            }
        },
    }
}

/// Re-randomize with explicit randomness: `c · E(0, r)`.
pub fn blind_with(pk: &PublicKey, c: &Ciphertext, r: &Randomness) -> Result<Ciphertext> {
    if !pk.scheme().is_probabilistic() {
        return Err(Error::Unsupported("rsa is deterministic and cannot be blinded".into()));
    }
    let zero = encrypt_with(pk, &identity_plaintext(pk)?, r)?;
    combine_raw(pk, c, &zero)
}

/// Re-randomization: combine `c` with a fresh encryption of the identity.
/// The output decrypts identically to `c` and, under uniform randomness,
/// is distributed exactly like a fresh encryption of the same plaintext.
pub fn blind<R: Rng + ?Sized>(pk: &PublicKey, c: &Ciphertext, rng: &mut R) -> Result<Ciphertext> {
    if !pk.scheme().is_probabilistic() {
        return Err(Error::Unsupported("rsa is deterministic and cannot be blinded".into()));
    }
    blind_with(pk, c, &draw_randomness(pk, rng))
}

/// Shared keygen helper: a semiprime `n = p·q` of exactly `sigma` bits.
///
/// For wide primes the top nibble is forced to keep `n^(s+1)` at full
/// length (so measured expansions are exact); narrow toy primes fall back
/// to plain sampling plus retry.
pub(crate) fn gen_semiprime<R, F>(sigma: u32, accept: F, rng: &mut R) -> Result<(BigUint, BigUint, BigUint)>
where
    R: Rng + ?Sized,
    F: Fn(&BigUint, &BigUint) -> bool,
{
    let pbits = u64::from(sigma).div_ceil(2);
    let qbits = u64::from(sigma) - pbits;
    if qbits < 2 {
        return Err(Error::Parameter("sigma too small for two primes".into()));
    }
    let hi = pbits >= 24;
    for _ in 0..256 {
        let p = gen_prime_sized(pbits, hi, rng)?;
        let q = gen_prime_sized(qbits, hi, rng)?;
        if p == q {
            continue;
        }
        let n = &p * &q;
        if n.bits() == u64::from(sigma) && accept(&p, &q) {
            return Ok((p, q, n));
        }
    }
    Err(Error::Generation("could not find an acceptable semiprime".into()))
}

pub(crate) fn gen_prime_sized<R: Rng + ?Sized>(
    bits: u64,
    hi: bool,
    rng: &mut R,
) -> Result<BigUint> {
    if hi {
        crate::numtheory::gen_prime_hi(bits, None, rng)
    } else {
        crate::numtheory::gen_prime(bits, None, rng)
    }
}
