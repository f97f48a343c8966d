//! Damgård–Jurik level sweep: expansion shrinks toward 1 as `s` grows,
//! while per-operation cost climbs. The predicted cost ratios against
//! Paillier on the same modulus — `s(s+1)(s+2)/6` for encryption,
//! `(s+1)(s+2)/6` for decryption — are printed next to the measurements.
//!
//! ```bash
//! cargo run --release -p phe --example dj_levels [sigma]
//! ```

use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;

use phe::bench::{bench_dj_vs_paillier, format_dj_table};
use phe::{Result, SecurityParameter};

fn main() -> Result<()> {
    let sigma_bits: u32 =
        std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(512);
    let sigma = SecurityParameter::new(sigma_bits)?;
    let mut rng = ChaCha20Rng::seed_from_u64(0xd1);

    println!("sigma = {sigma_bits} bits, levels 1..=4, 16 trials each\n");
    let rows = bench_dj_vs_paillier(sigma, &[1, 2, 3, 4], 16, &mut rng)?;
    print!("{}", format_dj_table(&rows));
    println!();
    for r in &rows {
        println!("s = {}: expansion 1 + 1/{} = {:.3}", r.s, r.s, 1.0 + 1.0 / r.s as f64);
    }
    println!("\nnote: running Paillier s times beats one level-s call on throughput;");
    println!("the level buys expansion, not speed.");
    Ok(())
}
