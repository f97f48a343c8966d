//! Demo applications on top of the additive schemes: homomorphic vote
//! tally, private weighted aggregation, and a single re-encryption mix
//! node.
//!
//! None of these holds a secret key. They work entirely on ciphertexts,
//! which is the point: the tallier learns only the sum, the aggregator
//! only the aggregate, and the mix node nothing at all.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::scheme::{blind, combine, mixed_mult, Ciphertext, PublicKey};

/// An encrypted yes/no vote. The encryption is *claimed* to hold 0 or 1;
/// nothing here verifies that claim (doing so takes zero-knowledge
/// proofs, which are out of scope), so a dishonest voter can stuff the
/// tally. The trust gap is inherent to this demo.
#[derive(Debug, Clone)]
pub struct Ballot {
    ciphertext: Ciphertext,
}

impl Ballot {
    /// Wrap an already-encrypted vote. Requires an additive scheme.
    pub fn new(ciphertext: Ciphertext) -> Result<Ballot> {
        if !ciphertext.scheme().is_additive() {
            return Err(Error::Unsupported("ballots need an additive scheme".into()));
        }
        Ok(Ballot { ciphertext })
    }

    /// Encrypt a fresh vote under the election key.
    pub fn cast<R: Rng + ?Sized>(pk: &PublicKey, vote: bool, rng: &mut R) -> Result<Ballot> {
        if !pk.scheme().is_additive() {
            return Err(Error::Unsupported("ballots need an additive scheme".into()));
        }
        let value = if vote { BigUint::one() } else { BigUint::zero() };
        let m = pk.plaintext(value)?;
        Ok(Ballot { ciphertext: crate::scheme::encrypt(pk, &m, rng)? })
    }

    pub fn ciphertext(&self) -> &Ciphertext {
        &self.ciphertext
    }
}

/// Fold all ballots into one ciphertext; decrypting it yields the exact
/// number of yes votes. The ballot count must stay below the message
/// modulus — that is the only overflow check an aggregator without the
/// secret key can perform.
pub fn tally<R: Rng + ?Sized>(
    pk: &PublicKey,
    ballots: &[Ballot],
    rng: &mut R,
) -> Result<Ciphertext> {
    if ballots.is_empty() {
        return Err(Error::Parameter("tally needs at least one ballot".into()));
    }
    if BigUint::from(ballots.len()) >= pk.message_modulus() {
        return Err(Error::Capacity(format!(
            "{} ballots could wrap the message modulus {}",
            ballots.len(),
            pk.message_modulus()
        )));
    }
    let mut acc = ballots[0].ciphertext.clone();
    for ballot in &ballots[1..] {
        acc = combine(pk, &acc, &ballot.ciphertext, rng)?;
    }
    Ok(acc)
}

/// A batch of encrypted sensor readings. `scale` is the *claimed*
/// exclusive upper bound on each plaintext reading; the ciphertexts
/// cannot be checked against it, so a lying sensor causes silent modular
/// wraparound in the aggregate.
#[derive(Debug, Clone)]
pub struct AggregationBatch {
    readings: Vec<Ciphertext>,
    scale: BigUint,
}

impl AggregationBatch {
    pub fn new(readings: Vec<Ciphertext>, scale: BigUint) -> Result<AggregationBatch> {
        if readings.is_empty() {
            return Err(Error::Parameter("aggregation batch must be non-empty".into()));
        }
        if scale < BigUint::from(2u32) {
            return Err(Error::Parameter("scale must be at least 2".into()));
        }
        let scheme = readings[0].scheme();
        let level = readings[0].level();
        if !scheme.is_additive() {
            return Err(Error::Unsupported("aggregation needs an additive scheme".into()));
        }
        if readings.iter().any(|c| c.scheme() != scheme || c.level() != level) {
            return Err(Error::Parameter("readings must share one scheme and level".into()));
        }
        Ok(AggregationBatch { readings, scale })
    }

    pub fn readings(&self) -> &[Ciphertext] {
        &self.readings
    }

    pub fn scale(&self) -> &BigUint {
        &self.scale
    }
}

/// Homomorphic sum of the batch.
pub fn aggregate_sum<R: Rng + ?Sized>(
    pk: &PublicKey,
    batch: &AggregationBatch,
    rng: &mut R,
) -> Result<Ciphertext> {
    let ones = vec![BigUint::one(); batch.readings.len()];
    aggregate_weighted(pk, batch, &ones, rng)
}

/// Homomorphic weighted sum `Σ wᵢ·mᵢ`, scalar multiplications included.
///
/// The capacity check uses what the aggregator can see — the weights and
/// the batch's claimed scale. Readings that exceed the claim make the
/// result wrap modulo the message modulus, exactly as modular arithmetic
/// dictates.
pub fn aggregate_weighted<R: Rng + ?Sized>(
    pk: &PublicKey,
    batch: &AggregationBatch,
    weights: &[BigUint],
    rng: &mut R,
) -> Result<Ciphertext> {
    if weights.len() != batch.readings.len() {
        return Err(Error::Parameter(format!(
            "{} weights for {} readings",
            weights.len(),
            batch.readings.len()
        )));
    }
    let reading_max = batch.scale() - 1u32;
    let worst: BigUint = weights.iter().map(|w| w * &reading_max).sum();
    if worst >= pk.message_modulus() {
        return Err(Error::Capacity(format!(
            "claimed worst case {worst} reaches the message modulus {}",
            pk.message_modulus()
        )));
    }
    let mut acc: Option<Ciphertext> = None;
    for (reading, weight) in batch.readings.iter().zip(weights) {
        let term = mixed_mult(pk, weight, reading, rng)?;
        acc = Some(match acc {
            None => term,
            Some(prev) => combine(pk, &prev, &term, rng)?,
        });
    }
    Ok(acc.expect("batch is non-empty"))
}

/// One re-encryption mix: permute the batch uniformly at random, then
/// blind every element. The multiset of plaintexts is preserved while
/// every output ciphertext looks like a fresh encryption, unlinkable to
/// its input position.
pub fn mix_node<R: Rng + ?Sized>(
    pk: &PublicKey,
    batch: &[Ciphertext],
    rng: &mut R,
) -> Result<Vec<Ciphertext>> {
    if !pk.scheme().is_probabilistic() || !pk.scheme().is_additive() {
        return Err(Error::Unsupported(
            "mixing needs a probabilistic additive scheme".into(),
        ));
    }
    let mut order: Vec<usize> = (0..batch.len()).collect();
    order.shuffle(rng);
    order
        .into_iter()
        .map(|i| blind(pk, &batch[i], rng))
        .collect()
}
