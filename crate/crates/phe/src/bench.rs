//! Ciphertext-expansion and timing measurements.
//!
//! Expansion is the ratio of ciphertext length to plaintext length in
//! bits. Both lengths are taken from the *moduli* — the ciphertext group
//! modulus over the message modulus — not from sampled residues, so the
//! number reflects the scheme rather than the luck of short values.
//! With keys from [`crate::scheme::keygen`] the headline figures
//! come out exactly: 2 for Paillier, `1 + 1/s` for Damgård–Jurik, ~3 for
//! Okamoto–Uchiyama, `l(n)/l(k)` for the block schemes, and `l(n)` bits
//! per single encrypted bit for Goldwasser–Micali.
//!
//! Timings are medians over a configurable number of trials after four
//! warm-up iterations. Key and plaintext generation draw from the
//! explicit rng, so a seeded run reproduces the same keys and inputs
//! (never the nanoseconds).

use std::time::Instant;

use num_bigint::{BigUint, RandBigInt};
use rand::Rng;

use crate::error::{Error, Result};
use crate::scheme::{
    damgard_jurik, decrypt, encrypt, keygen, Ciphertext, PublicKey, SchemeId, SecretKey,
    SecurityParameter,
};

const WARMUP_ITERATIONS: usize = 4;

/// Measured expansion and cost for one scheme at one parameter set.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchReport {
    pub scheme: SchemeId,
    pub sigma: u32,
    pub level: Option<u32>,
    /// Bits of the message modulus (bit length of `M − 1`): what one
    /// ciphertext actually carries.
    pub plaintext_bits: u64,
    /// Bit length of the ciphertext modulus.
    pub ciphertext_bits: u64,
    pub encrypt_ns: u128,
    pub decrypt_ns: u128,
    pub trials: usize,
}

impl BenchReport {
    /// Ciphertext bits per plaintext bit.
    pub fn expansion(&self) -> f64 {
        self.ciphertext_bits as f64 / self.plaintext_bits as f64
    }
}

impl std::fmt::Display for BenchReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "scheme {}", self.scheme)?;
        writeln!(f, "sigma {}", self.sigma)?;
        if let Some(s) = self.level {
            writeln!(f, "level {s}")?;
        }
        writeln!(f, "plaintext_bits {}", self.plaintext_bits)?;
        writeln!(f, "ciphertext_bits {}", self.ciphertext_bits)?;
        writeln!(f, "expansion {:.4}", self.expansion())?;
        writeln!(f, "encrypt_median_ns {}", self.encrypt_ns)?;
        writeln!(f, "decrypt_median_ns {}", self.decrypt_ns)?;
        write!(f, "trials {}", self.trials)
    }
}

fn median(mut samples: Vec<u128>) -> u128 {
    samples.sort_unstable();
    samples[samples.len() / 2]
}

fn plaintext_bits(pk: &PublicKey) -> u64 {
    (pk.message_modulus() - 1u32).bits()
}

fn time_roundtrips<R: Rng + ?Sized>(
    pk: &PublicKey,
    sk: &SecretKey,
    trials: usize,
    rng: &mut R,
) -> Result<(u128, u128)> {
    let bound = pk.message_modulus();
    let messages: Vec<BigUint> =
        (0..trials + WARMUP_ITERATIONS).map(|_| rng.gen_biguint_below(&bound)).collect();
    let mut encrypt_ns = Vec::with_capacity(trials);
    let mut decrypt_ns = Vec::with_capacity(trials);
    for (i, m) in messages.iter().enumerate() {
        let plain = pk.plaintext(m.clone())?;
        let t0 = Instant::now();
        let c = encrypt(pk, &plain, rng)?;
        let t1 = t0.elapsed().as_nanos();
        let t2 = Instant::now();
        let back = decrypt(sk, pk, &c)?;
        let t3 = t2.elapsed().as_nanos();
        if back.value() != m {
            return Err(Error::Validation("benchmark round trip failed".into()));
        }
        if i >= WARMUP_ITERATIONS {
            encrypt_ns.push(t1);
            decrypt_ns.push(t3);
        }
    }
    Ok((median(encrypt_ns), median(decrypt_ns)))
}

/// Generate one key, encrypt and decrypt `trials` random plaintexts, and
/// report modulus-based expansion plus median timings.
pub fn measure_expansion<R: Rng + ?Sized>(
    scheme: SchemeId,
    sigma: SecurityParameter,
    level: Option<u32>,
    trials: usize,
    rng: &mut R,
) -> Result<BenchReport> {
    if trials == 0 {
        return Err(Error::Parameter("at least one trial is required".into()));
    }
    let (pk, sk) = keygen(scheme, sigma, level, rng)?;
    let (encrypt_ns, decrypt_ns) = time_roundtrips(&pk, &sk, trials, rng)?;
    Ok(BenchReport {
        scheme,
        sigma: sigma.bits(),
        level: pk.level(),
        plaintext_bits: plaintext_bits(&pk),
        ciphertext_bits: pk.ciphertext_modulus().bits(),
        encrypt_ns,
        decrypt_ns,
        trials,
    })
}

/// One row of the Damgård–Jurik versus Paillier cost comparison.
#[derive(Debug, Clone, PartialEq)]
pub struct DjCostRow {
    pub s: u32,
    pub encrypt_ns: u128,
    pub decrypt_ns: u128,
    /// Measured time over Paillier's on the same modulus.
    pub encrypt_ratio: f64,
    pub decrypt_ratio: f64,
    /// Predicted encryption cost ratio, `s(s+1)(s+2)/6`.
    pub predicted_encrypt_ratio: f64,
    /// Predicted decryption cost ratio, `(s+1)(s+2)/6`.
    pub predicted_decrypt_ratio: f64,
}

/// Measure Damgård–Jurik encryption/decryption cost across levels against
/// Paillier on one fixed modulus. The predicted columns are printed for
/// comparison; actual ratios are machine- and implementation-dependent,
/// so callers should assert trends (encryption time strictly increasing
/// in `s`), not exact values.
pub fn bench_dj_vs_paillier<R: Rng + ?Sized>(
    sigma: SecurityParameter,
    s_values: &[u32],
    trials: usize,
    rng: &mut R,
) -> Result<Vec<DjCostRow>> {
    if trials == 0 {
        return Err(Error::Parameter("at least one trial is required".into()));
    }
    if s_values.iter().any(|&s| s == 0 || s > 8) {
        return Err(Error::Parameter("levels must lie in 1..=8".into()));
    }
    let (p_pk, p_sk) = keygen(SchemeId::Paillier, sigma, None, rng)?;
    let (base_encrypt, base_decrypt) = time_roundtrips(&p_pk, &p_sk, trials, rng)?;
    let (p, q) = p_sk.primes();
    let mut rows = Vec::with_capacity(s_values.len());
    for &s in s_values {
        let (pk, sk) = damgard_jurik::keypair_from_primes(p.clone(), q.clone(), s)?;
        let (encrypt_ns, decrypt_ns) = time_roundtrips(&pk, &sk, trials, rng)?;
        let sf = s as f64;
        rows.push(DjCostRow {
            s,
            encrypt_ns,
            decrypt_ns,
            encrypt_ratio: encrypt_ns as f64 / base_encrypt as f64,
            decrypt_ratio: decrypt_ns as f64 / base_decrypt as f64,
            predicted_encrypt_ratio: sf * (sf + 1.0) * (sf + 2.0) / 6.0,
            predicted_decrypt_ratio: (sf + 1.0) * (sf + 2.0) / 6.0,
        });
    }
    Ok(rows)
}

/// Render the comparison as an aligned text table, predictions alongside.
pub fn format_dj_table(rows: &[DjCostRow]) -> String {
    let mut out = String::from(
        "s   encrypt_ns    decrypt_ns    enc_ratio  dec_ratio  predicted_enc  predicted_dec\n",
    );
    for r in rows {
        out.push_str(&format!(
            "{:<3} {:<13} {:<13} {:<10.2} {:<10.2} {:<14.2} {:<13.2}\n",
            r.s,
            r.encrypt_ns,
            r.decrypt_ns,
            r.encrypt_ratio,
            r.decrypt_ratio,
            r.predicted_encrypt_ratio,
            r.predicted_decrypt_ratio
        ));
    }
    out
}

/// Fixed-seed key and plaintext reproducibility, independent of timing:
/// the generated public keys must match for equal seeds.
pub fn deterministic_inputs_check<R: Rng + ?Sized>(
    scheme: SchemeId,
    sigma: SecurityParameter,
    level: Option<u32>,
    rng: &mut R,
) -> Result<(PublicKey, Vec<Ciphertext>)> {
    let (pk, _) = keygen(scheme, sigma, level, rng)?;
    let bound = pk.message_modulus();
    let cts = (0..4)
        .map(|_| {
            let m = rng.gen_biguint_below(&bound);
            encrypt(&pk, &pk.plaintext(m).unwrap(), rng)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((pk, cts))
}
