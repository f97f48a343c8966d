//! Privacy-preserving sensor aggregation: nodes report encrypted
//! readings, the aggregator computes a weighted sum under encryption and
//! never holds the secret key.
//!
//! ```bash
//! cargo run --release -p phe --example sensor_aggregation
//! ```

use num_bigint::BigUint;
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;

use phe::apps::{aggregate_sum, aggregate_weighted, AggregationBatch};
use phe::{decrypt, encrypt, keygen, Result, SchemeId, SecurityParameter};

fn main() -> Result<()> {
    let mut rng = ChaCha20Rng::seed_from_u64(0x5e2508);
    let (pk, sk) = keygen(SchemeId::Paillier, SecurityParameter::new(256)?, None, &mut rng)?;

    // temperatures in deci-degrees from four sensors
    let readings = [215u32, 198, 240, 222];
    let weights = [3u32, 1, 1, 3]; // trust weights per sensor

    println!("sensor readings (plaintext, for reference): {readings:?}");
    println!("aggregator weights:                         {weights:?}");

    let encrypted: Vec<_> = readings
        .iter()
        .map(|&m| encrypt(&pk, &pk.plaintext(m.into()).unwrap(), &mut rng))
        .collect::<Result<_>>()?;
    // every reading fits in 16 bits, and the batch says so
    let batch = AggregationBatch::new(encrypted, BigUint::from(1u32 << 16))?;

    let sum = aggregate_sum(&pk, &batch, &mut rng)?;
    println!("homomorphic sum            → {}", decrypt(&sk, &pk, &sum)?.value());

    let weights: Vec<BigUint> = weights.iter().map(|&w| w.into()).collect();
    let weighted = aggregate_weighted(&pk, &batch, &weights, &mut rng)?;
    println!("homomorphic weighted sum   → {}", decrypt(&sk, &pk, &weighted)?.value());

    let expected: u32 = readings.iter().zip([3u32, 1, 1, 3]).map(|(r, w)| r * w).sum();
    println!("plaintext weighted sum     → {expected}");
    Ok(())
}
