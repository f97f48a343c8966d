//! Ciphertext expansion across the catalogue, measured against each
//! scheme's expected figure.
//!
//! ```bash
//! cargo run --release -p phe --example expansion_bench [sigma]
//! ```

use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;

use phe::bench::measure_expansion;
use phe::{Result, SchemeId, SecurityParameter};

fn main() -> Result<()> {
    let sigma_bits: u32 =
        std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(256);
    let sigma = SecurityParameter::new(sigma_bits)?;
    let mut rng = ChaCha20Rng::seed_from_u64(0xbe7c);
    let trials = 8;

    println!("sigma = {sigma_bits} bits, {trials} trials per scheme\n");
    println!(
        "{:<17} {:>6} {:>9} {:>10} {:>12} {:>12}  expected",
        "scheme", "level", "pt_bits", "ct_bits", "encrypt_us", "decrypt_us"
    );
    for scheme in SchemeId::ALL {
        let level = (scheme == SchemeId::DamgardJurik).then_some(3);
        let report = measure_expansion(scheme, sigma, level, trials, &mut rng)?;
        let expected = match scheme {
            SchemeId::Rsa => "1 (deterministic)".to_string(),
            SchemeId::Gm => format!("l(n) = {sigma_bits} per bit"),
            SchemeId::Benaloh | SchemeId::NaccacheStern => {
                format!("l(n)/l(k) = {:.2}", sigma_bits as f64 / report.plaintext_bits as f64)
            }
            SchemeId::OkamotoUchiyama => "3".to_string(),
            SchemeId::Paillier => "2".to_string(),
            SchemeId::DamgardJurik => "1 + 1/s = 1.33".to_string(),
        };
        println!(
            "{:<17} {:>6} {:>9} {:>10} {:>12} {:>12}  {} → measured {:.3}",
            report.scheme.token(),
            report.level.map(|s| s.to_string()).unwrap_or_else(|| "-".into()),
            report.plaintext_bits,
            report.ciphertext_bits,
            report.encrypt_ns / 1000,
            report.decrypt_ns / 1000,
            expected,
            report.expansion()
        );
    }
    Ok(())
}
