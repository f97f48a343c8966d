//! Homomorphic yes/no election: voters encrypt 0 or 1 under the election
//! key, the tallier folds the ballots without decrypting any of them,
//! and only the final sum is ever opened.
//!
//! Ballot validity (that each encryption really holds 0 or 1) is a
//! *claim* here — enforcing it takes zero-knowledge proofs, which this
//! demo does not implement.
//!
//! ```bash
//! cargo run --release -p phe --example vote_tally
//! ```

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;

use phe::apps::{tally, Ballot};
use phe::{decrypt, keygen, Result, SchemeId, SecurityParameter};

fn main() -> Result<()> {
    let mut rng = ChaCha20Rng::seed_from_u64(0xe1ec);
    let voters = 200;

    println!("generating a 512-bit Paillier election key ...");
    let (pk, sk) = keygen(SchemeId::Paillier, SecurityParameter::new(512)?, None, &mut rng)?;

    println!("casting {voters} encrypted ballots ...");
    let mut expected = 0u32;
    let mut ballots = Vec::with_capacity(voters);
    for _ in 0..voters {
        let vote = rng.gen_bool(0.5);
        expected += u32::from(vote);
        ballots.push(Ballot::cast(&pk, vote, &mut rng)?);
    }

    println!("folding ballots homomorphically (no individual decryption) ...");
    let total = tally(&pk, &ballots, &mut rng)?;

    let sum = decrypt(&sk, &pk, &total)?;
    println!("decrypted tally: {} yes votes", sum.value());
    println!("plaintext count: {expected} yes votes");
    assert_eq!(sum.value(), &expected.into());
    println!("tally matches the plaintext count");
    Ok(())
}
