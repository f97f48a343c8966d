//! Line-oriented text serialization for keys and ciphertexts.
//!
//! A document is a sequence of `name value` lines. Big integers are
//! lowercase hex, big-endian, with no leading zeros (`0` for zero);
//! `sigma` and `level` are decimal. Key files carry the scheme token,
//! sigma, an optional level, the `public.*` fields and — when the secret
//! half is included — `secret.p` / `secret.q`, from which every derived
//! trapdoor is rebuilt on parse. Example:
//!
//! ```text
//! scheme paillier
//! sigma 16
//! public.n ec27
//! public.g ec28
//! secret.p f1
//! secret.q f7
//! ```
//!
//! Ciphertext documents hold the scheme, an optional level and one
//! `residue<i>` line per residue (`residue0` for the usual single-residue
//! case). Batch files are ciphertext documents separated by blank lines.
//!
//! Parsing is strict: unknown or duplicate fields, uppercase hex,
//! leading zeros and out-of-group values are all rejected, so a parsed
//! value is always a valid one.

use num_bigint::BigUint;
use num_traits::Num;

use crate::error::{Error, Result};
use crate::numtheory::{is_prime_fixed_bases, Factorization};
use num_integer::Integer;
use num_traits::One;
use crate::scheme::{
    benaloh, damgard_jurik, gm, naccache_stern, okamoto_uchiyama, paillier, rsa, Ciphertext,
    PublicKey, PublicParams, SchemeId, SecretKey,
};

fn hex(value: &BigUint) -> String {
    value.to_str_radix(16)
}

fn parse_hex(field: &str, text: &str) -> Result<BigUint> {
    if text.is_empty() {
        return Err(Error::format(field, "empty value"));
    }
    if text.len() > 1 && text.starts_with('0') {
        return Err(Error::format(field, "leading zeros are not canonical"));
    }
    if !text.bytes().all(|b| b.is_ascii_digit() || (b'a'..=b'f').contains(&b)) {
        return Err(Error::format(field, format!("invalid lowercase hex `{text}`")));
    }
    BigUint::from_str_radix(text, 16).map_err(|e| Error::format(field, e.to_string()))
}

fn parse_decimal(field: &str, text: &str) -> Result<u32> {
    if text.is_empty() || (text.len() > 1 && text.starts_with('0')) {
        return Err(Error::format(field, "expected a canonical decimal"));
    }
    if !text.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::format(field, format!("invalid decimal `{text}`")));
    }
    text.parse().map_err(|_| Error::format(field, "decimal out of range"))
}

/// Ordered `name value` records of one document.
struct Fields {
    entries: Vec<(String, String)>,
    taken: std::cell::RefCell<std::collections::HashSet<usize>>,
}

impl Fields {
    fn parse(text: &str) -> Result<Fields> {
        let mut entries = Vec::new();
        for line in text.lines() {
            if line.trim().is_empty() {
                continue;
            }
            let mut it = line.split_whitespace();
            let name = it.next().expect("non-empty line");
            let value = it
                .next()
                .ok_or_else(|| Error::format(name, "missing value"))?;
            if it.next().is_some() {
                return Err(Error::format(name, "trailing tokens"));
            }
            if entries.iter().any(|(n, _)| n == name) {
                return Err(Error::format(name, "duplicate field"));
            }
            entries.push((name.to_string(), value.to_string()));
        }
        Ok(Fields { entries, taken: Default::default() })
    }

    fn take(&self, name: &str) -> Result<&str> {
        self.take_opt(name)?
            .ok_or_else(|| Error::format(name, "missing field"))
    }

    fn take_opt(&self, name: &str) -> Result<Option<&str>> {
        for (idx, (n, v)) in self.entries.iter().enumerate() {
            if n == name {
                self.taken.borrow_mut().insert(idx);
                return Ok(Some(v));
            }
        }
        Ok(None)
    }

    /// All fields with a given prefix, in file order.
    fn take_prefixed(&self, prefix: &str) -> Vec<(&str, &str)> {
        let mut out = Vec::new();
        for (idx, (n, v)) in self.entries.iter().enumerate() {
            if n.starts_with(prefix) {
                self.taken.borrow_mut().insert(idx);
                out.push((n.as_str(), v.as_str()));
            }
        }
        out
    }

    fn finish(&self) -> Result<()> {
        let taken = self.taken.borrow();
        for (idx, (n, _)) in self.entries.iter().enumerate() {
            if !taken.contains(&idx) {
                return Err(Error::format(n, "unknown field"));
            }
        }
        Ok(())
    }
}

fn check_unit(field: &str, value: &BigUint, n: &BigUint) -> Result<()> {
    if value >= n || !value.gcd(n).is_one() {
        return Err(Error::Validation(format!("{field} must be a unit below the modulus")));
    }
    Ok(())
}

/// Serialize a key pair; pass `None` to write the public half only.
pub fn serialize_key(pk: &PublicKey, sk: Option<&SecretKey>) -> String {
    let mut out = String::new();
    out.push_str(&format!("scheme {}\n", pk.scheme().token()));
    out.push_str(&format!("sigma {}\n", pk.sigma()));
    if let Some(s) = pk.level() {
        out.push_str(&format!("level {s}\n"));
    }
    match pk.params() {
        PublicParams::Rsa { n, e } => {
            out.push_str(&format!("public.n {}\n", hex(n)));
            out.push_str(&format!("public.e {}\n", hex(e)));
        }
        PublicParams::Gm { n, a } => {
            out.push_str(&format!("public.n {}\n", hex(n)));
            out.push_str(&format!("public.a {}\n", hex(a)));
        }
        PublicParams::Benaloh { n, g, k } => {
            out.push_str(&format!("public.n {}\n", hex(n)));
            out.push_str(&format!("public.g {}\n", hex(g)));
            out.push_str(&format!("public.k {}\n", hex(k)));
        }
        PublicParams::NaccacheStern { n, g, k } => {
            out.push_str(&format!("public.n {}\n", hex(n)));
            out.push_str(&format!("public.g {}\n", hex(g)));
            for (idx, (f, _)) in k.factors().iter().enumerate() {
                out.push_str(&format!("public.k{idx} {}\n", hex(f)));
            }
        }
        PublicParams::OkamotoUchiyama { n, g, h, cap } => {
            out.push_str(&format!("public.n {}\n", hex(n)));
            out.push_str(&format!("public.g {}\n", hex(g)));
            out.push_str(&format!("public.h {}\n", hex(h)));
            out.push_str(&format!("public.cap {}\n", hex(cap)));
        }
        PublicParams::Paillier { n, g } | PublicParams::DamgardJurik { n, g, .. } => {
            out.push_str(&format!("public.n {}\n", hex(n)));
            out.push_str(&format!("public.g {}\n", hex(g)));
        }
    }
    if let Some(sk) = sk {
        let (p, q) = sk.primes();
        out.push_str(&format!("secret.p {}\n", hex(p)));
        out.push_str(&format!("secret.q {}\n", hex(q)));
    }
    out
}

/// Parse a key file: the public key, plus the secret key when the file
/// carries the `secret.*` fields. Every value is re-validated; derived
/// trapdoors are rebuilt from the primes.
pub fn parse_key(text: &str) -> Result<(PublicKey, Option<SecretKey>)> {
    let fields = Fields::parse(text)?;
    let scheme = SchemeId::from_token(fields.take("scheme")?)?;
    let sigma = parse_decimal("sigma", fields.take("sigma")?)?;
    let level = match fields.take_opt("level")? {
        Some(v) => Some(parse_decimal("level", v)?),
        None => None,
    };
    if level.is_some() != (scheme == SchemeId::DamgardJurik) {
        return Err(Error::format("level", "level is present exactly for damgard-jurik"));
    }
    let n = parse_hex("public.n", fields.take("public.n")?)?;
    let secret = match (fields.take_opt("secret.p")?, fields.take_opt("secret.q")?) {
        (Some(p), Some(q)) => Some((parse_hex("secret.p", p)?, parse_hex("secret.q", q)?)),
        (None, None) => None,
        _ => return Err(Error::format("secret.p", "secret needs both primes")),
    };

    // Rebuild through the scheme constructors so parsed keys satisfy the
    // same invariants as generated ones.
    let rebuilt: Result<(PublicKey, Option<SecretKey>)> = match scheme {
        SchemeId::Rsa => {
            let e = parse_hex("public.e", fields.take("public.e")?)?;
            match secret {
                Some((p, q)) => {
                    let (pk, sk) = rsa::keypair_from_parts(p, q, e)?;
                    Ok((pk, Some(sk)))
                }
                None => {
                    if e <= BigUint::one() {
                        return Err(Error::Validation("public exponent must exceed 1".into()));
                    }
                    Ok((
                        PublicKey {
                            sigma: n.bits() as u32,
                            params: PublicParams::Rsa { n: n.clone(), e },
                        },
                        None,
                    ))
                }
            }
        }
        SchemeId::Gm => {
            let a = parse_hex("public.a", fields.take("public.a")?)?;
            match secret {
                Some((p, q)) => {
                    let (pk, sk) = gm::keypair_from_parts(p, q, a)?;
                    Ok((pk, Some(sk)))
                }
                None => {
                    if crate::numtheory::jacobi(&a, &n)? != 1 {
                        return Err(Error::Validation(
                            "gm pseudo-residue must have Jacobi symbol 1".into(),
                        ));
                    }
                    Ok((
                        PublicKey {
                            sigma: n.bits() as u32,
                            params: PublicParams::Gm { n: n.clone(), a },
                        },
                        None,
                    ))
                }
            }
        }
        SchemeId::Benaloh => {
            let g = parse_hex("public.g", fields.take("public.g")?)?;
            let k = parse_hex("public.k", fields.take("public.k")?)?;
            match secret {
                Some((p, q)) => {
                    let (pk, sk) = benaloh::keypair_from_parts(p, q, k, g)?;
                    Ok((pk, Some(sk)))
                }
                None => {
                    check_unit("public.g", &g, &n)?;
                    if !is_prime_fixed_bases(&k) {
                        return Err(Error::Validation("benaloh block size must be prime".into()));
                    }
                    Ok((
                        PublicKey {
                            sigma: n.bits() as u32,
                            params: PublicParams::Benaloh { n: n.clone(), g, k },
                        },
                        None,
                    ))
                }
            }
        }
        SchemeId::NaccacheStern => {
            let g = parse_hex("public.g", fields.take("public.g")?)?;
            let mut factors = Vec::new();
            for (idx, (name, value)) in fields.take_prefixed("public.k").into_iter().enumerate() {
                if name != format!("public.k{idx}") {
                    return Err(Error::format(name, "block factors must be public.k0, public.k1, ..."));
                }
                factors.push(parse_hex(name, value)?);
            }
            let k = Factorization::from_distinct_primes(factors)
                .map_err(|e| Error::Validation(e.to_string()))?;
            match secret {
                Some((p, q)) => {
                    let (pk, sk) = naccache_stern::keypair_from_parts(p, q, k, g)?;
                    Ok((pk, Some(sk)))
                }
                None => {
                    check_unit("public.g", &g, &n)?;
                    Ok((
                        PublicKey {
                            sigma: n.bits() as u32,
                            params: PublicParams::NaccacheStern { n: n.clone(), g, k },
                        },
                        None,
                    ))
                }
            }
        }
        SchemeId::OkamotoUchiyama => {
            let g = parse_hex("public.g", fields.take("public.g")?)?;
            let h = parse_hex("public.h", fields.take("public.h")?)?;
            let cap = parse_hex("public.cap", fields.take("public.cap")?)?;
            match secret {
                Some((p, q)) => {
                    if cap != p {
                        return Err(Error::Validation("capacity must equal the prime p".into()));
                    }
                    let (pk, sk) = okamoto_uchiyama::keypair_from_parts(p, q, g)?;
                    let PublicParams::OkamotoUchiyama { h: derived_h, .. } = pk.params() else {
                        unreachable!()
                    };
                    if derived_h != &h {
                        return Err(Error::Validation("h is not g^n mod n".into()));
                    }
                    Ok((pk, Some(sk)))
                }
                None => {
                    check_unit("public.g", &g, &n)?;
                    check_unit("public.h", &h, &n)?;
                    if cap < BigUint::from(2u32) {
                        return Err(Error::Validation("capacity must be at least 2".into()));
                    }
                    Ok((
                        PublicKey {
                            sigma: n.bits() as u32,
                            params: PublicParams::OkamotoUchiyama { n: n.clone(), g, h, cap },
                        },
                        None,
                    ))
                }
            }
        }
        SchemeId::Paillier => {
            let g = parse_hex("public.g", fields.take("public.g")?)?;
            if g != &n + 1u32 {
                return Err(Error::Validation("paillier generator must be n + 1".into()));
            }
            match secret {
                Some((p, q)) => {
                    let (pk, sk) = paillier::keypair_from_primes(p, q)?;
                    Ok((pk, Some(sk)))
                }
                None => Ok((
                    PublicKey { sigma: n.bits() as u32, params: PublicParams::Paillier { n: n.clone(), g } },
                    None,
                )),
            }
        }
        SchemeId::DamgardJurik => {
            let g = parse_hex("public.g", fields.take("public.g")?)?;
            let s = level.expect("checked above");
            if s == 0 {
                return Err(Error::format("level", "level must be positive"));
            }
            if g != &n + 1u32 {
                return Err(Error::Validation("damgard-jurik generator must be n + 1".into()));
            }
            match secret {
                Some((p, q)) => {
                    let (pk, sk) = damgard_jurik::keypair_from_primes(p, q, s)?;
                    Ok((pk, Some(sk)))
                }
                None => Ok((
                    PublicKey {
                        sigma: n.bits() as u32,
                        params: PublicParams::DamgardJurik { n: n.clone(), g, s },
                    },
                    None,
                )),
            }
        }
    };
    let (pk, sk) = rebuilt?;
    fields.finish()?;
    if pk.modulus() != &n {
        return Err(Error::Validation("secret primes do not produce the stated modulus".into()));
    }
    if pk.sigma() != sigma {
        return Err(Error::Validation(format!(
            "sigma {sigma} does not match the modulus bit length {}",
            pk.sigma()
        )));
    }
    Ok((pk, sk))
}

/// Serialize one ciphertext document.
pub fn serialize_ciphertext(c: &Ciphertext) -> String {
    let mut out = String::new();
    out.push_str(&format!("scheme {}\n", c.scheme().token()));
    if let Some(s) = c.level() {
        out.push_str(&format!("level {s}\n"));
    }
    for (idx, r) in c.residues().iter().enumerate() {
        out.push_str(&format!("residue{idx} {}\n", hex(r)));
    }
    out
}

/// Parse one ciphertext document (syntax and local invariants only;
/// group membership is checked against a key with
/// [`Ciphertext::validate`]).
pub fn parse_ciphertext(text: &str) -> Result<Ciphertext> {
    let fields = Fields::parse(text)?;
    let scheme = SchemeId::from_token(fields.take("scheme")?)?;
    let level = match fields.take_opt("level")? {
        Some(v) => Some(parse_decimal("level", v)?),
        None => None,
    };
    let mut residues = Vec::new();
    for (idx, (name, value)) in fields.take_prefixed("residue").into_iter().enumerate() {
        if name != format!("residue{idx}") {
            return Err(Error::format(name, "residues must be residue0, residue1, ..."));
        }
        residues.push(parse_hex(name, value)?);
    }
    fields.finish()?;
    Ciphertext::from_parts(scheme, residues, level)
}

/// Serialize a batch as blank-line-separated ciphertext documents.
pub fn serialize_ciphertext_batch(batch: &[Ciphertext]) -> String {
    batch.iter().map(serialize_ciphertext).collect::<Vec<_>>().join("\n")
}

/// Parse a batch of ciphertext documents. Documents are separated by
/// blank lines; a fresh `scheme` line also starts a new document, so
/// plain concatenation of single-ciphertext files parses too. An empty
/// file is an empty batch.
pub fn parse_ciphertext_batch(text: &str) -> Result<Vec<Ciphertext>> {
    let mut out = Vec::new();
    let mut block = String::new();
    let mut flush = |block: &mut String| -> Result<()> {
        if !block.trim().is_empty() {
            out.push(parse_ciphertext(block)?);
        }
        block.clear();
        Ok(())
    };
    for line in text.lines() {
        if line.trim().is_empty() {
            flush(&mut block)?;
        } else {
            if line.split_whitespace().next() == Some("scheme") {
                flush(&mut block)?;
            }
            block.push_str(line);
            block.push('\n');
        }
    }
    flush(&mut block)?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scheme::{encrypt, keygen, SecurityParameter};
    use rand::SeedableRng;
    use rand_chacha::ChaCha20Rng;

    fn keys_for_roundtrip() -> Vec<(PublicKey, SecretKey)> {
        let mut rng = ChaCha20Rng::seed_from_u64(0x5e71a1);
        let sigma = SecurityParameter::new(48).unwrap();
        SchemeId::ALL
            .into_iter()
            .map(|scheme| {
                let level = (scheme == SchemeId::DamgardJurik).then_some(2);
                keygen(scheme, sigma, level, &mut rng).unwrap()
            })
            .collect()
    }

    #[test]
    fn key_roundtrip_every_scheme() {
        for (pk, sk) in keys_for_roundtrip() {
            let text = serialize_key(&pk, Some(&sk));
            let (pk2, sk2) = parse_key(&text).unwrap();
            assert_eq!(pk, pk2, "{}", pk.scheme());
            assert_eq!(Some(sk), sk2);
        }
    }

    #[test]
    fn public_only_roundtrip() {
        for (pk, _) in keys_for_roundtrip() {
            let text = serialize_key(&pk, None);
            let (pk2, sk2) = parse_key(&text).unwrap();
            assert_eq!(pk, pk2);
            assert!(sk2.is_none());
        }
    }

    #[test]
    fn ciphertext_roundtrip() {
        let mut rng = ChaCha20Rng::seed_from_u64(3);
        for (pk, _) in keys_for_roundtrip() {
            let m = pk.plaintext(1u32.into()).unwrap();
            let c = encrypt(&pk, &m, &mut rng).unwrap();
            let parsed = parse_ciphertext(&serialize_ciphertext(&c)).unwrap();
            assert_eq!(c, parsed);
            parsed.validate(&pk).unwrap();
        }
    }

    #[test]
    fn batch_roundtrip() {
        let mut rng = ChaCha20Rng::seed_from_u64(4);
        let (pk, _) = keys_for_roundtrip().remove(5); // paillier
        let batch: Vec<Ciphertext> = (0..4)
            .map(|i| encrypt(&pk, &pk.plaintext(BigUint::from(i as u32)).unwrap(), &mut rng).unwrap())
            .collect();
        let text = serialize_ciphertext_batch(&batch);
        assert_eq!(parse_ciphertext_batch(&text).unwrap(), batch);
        assert!(parse_ciphertext_batch("").unwrap().is_empty());
    }

    #[test]
    fn uppercase_hex_is_rejected() {
        let (pk, sk) = keys_for_roundtrip().remove(5);
        let text = serialize_key(&pk, Some(&sk)).replace("public.n ", "public.n A");
        assert!(matches!(parse_key(&text), Err(Error::Format { .. })));
    }

    #[test]
    fn leading_zero_hex_is_rejected() {
        let text = "scheme paillier\nsigma 4\npublic.n 0f\npublic.g 10\n";
        assert!(matches!(parse_key(text), Err(Error::Format { .. })));
    }

    #[test]
    fn unknown_and_duplicate_fields_are_rejected() {
        let (pk, _) = keys_for_roundtrip().remove(5);
        let text = serialize_key(&pk, None) + "mystery 1\n";
        assert!(matches!(parse_key(&text), Err(Error::Format { .. })));
        let dup = serialize_key(&pk, None) + "sigma 48\n";
        assert!(matches!(parse_key(&dup), Err(Error::Format { .. })));
    }

    #[test]
    fn sigma_mismatch_is_rejected() {
        let (pk, _) = keys_for_roundtrip().remove(5);
        let text = serialize_key(&pk, None).replace("sigma 48", "sigma 47");
        assert!(matches!(parse_key(&text), Err(Error::Validation(_))));
    }

    #[test]
    fn tampered_paillier_generator_is_rejected() {
        let (pk, _) = keys_for_roundtrip().remove(5);
        let PublicParams::Paillier { g, .. } = pk.params() else { unreachable!() };
        let bad = hex(&(g + 2u32));
        let text = serialize_key(&pk, None);
        let tampered = text.replace(&format!("public.g {}", hex(g)), &format!("public.g {bad}"));
        assert!(matches!(parse_key(&tampered), Err(Error::Validation(_))));
    }

    #[test]
    fn oversized_residue_fails_validation() {
        let (pk, _) = keys_for_roundtrip().remove(5);
        let n2 = pk.ciphertext_modulus();
        let c = Ciphertext::from_parts(SchemeId::Paillier, vec![n2], None).unwrap();
        let parsed = parse_ciphertext(&serialize_ciphertext(&c)).unwrap();
        assert!(matches!(parsed.validate(&pk), Err(Error::Validation(_))));
    }

    #[test]
    fn missing_value_and_trailing_tokens() {
        assert!(matches!(parse_ciphertext("scheme paillier\nresidue0"), Err(Error::Format { .. })));
        assert!(matches!(
            parse_ciphertext("scheme paillier\nresidue0 5 7"),
            Err(Error::Format { .. })
        ));
        assert!(matches!(parse_ciphertext("scheme nope\nresidue0 5"), Err(Error::Format { .. })));
        assert!(matches!(
            parse_ciphertext("scheme paillier\nresidue1 5"),
            Err(Error::Format { .. })
        ));
    }
}
