//! Command-line front end: key generation, the homomorphic operations,
//! the demo applications and the benchmark harness, over the text file
//! formats of [`phe::serial`].
//!
//! Exit codes: 0 success, 2 usage, 3 format/validation, 4 cryptographic
//! error (1 for I/O failures).

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num_bigint::BigUint;
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;

use phe::apps::{mix_node, tally, Ballot};
use phe::bench::{bench_dj_vs_paillier, format_dj_table, measure_expansion};
use phe::group_encoding::{
    compile_circuit, embed_sl32_s7, eval_program, evaluate_encrypted, pack_s7, BoolCircuit,
    InsecureConjugationScheme,
};
use phe::serial::{
    parse_ciphertext_batch, parse_key, serialize_ciphertext, serialize_ciphertext_batch,
    serialize_key,
};
use phe::{
    blind, combine, decrypt, encrypt, keygen, mixed_mult, Ciphertext, Error, PublicKey, SchemeId,
    SecretKey, SecurityParameter,
};

#[derive(Parser)]
#[command(name = "phe", version, about = "Partially homomorphic encryption toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

fn parse_biguint(s: &str) -> Result<BigUint, String> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(format!("`{s}` is not a decimal number"));
    }
    s.parse().map_err(|e| format!("{e}"))
}

fn parse_scheme(s: &str) -> Result<SchemeId, String> {
    SchemeId::from_token(s).map_err(|_| {
        format!(
            "unknown scheme `{s}` (expected one of {})",
            SchemeId::ALL.map(|x| x.token()).join(", ")
        )
    })
}

#[derive(Subcommand)]
enum Command {
    /// Generate a key pair and write it (secret half included) to a file.
    Keygen {
        #[arg(long, value_parser = parse_scheme)]
        scheme: SchemeId,
        /// Modulus bit length (at least 16).
        #[arg(long)]
        sigma: u32,
        /// Damgård–Jurik level s.
        #[arg(long)]
        level: Option<u32>,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Encrypt a decimal plaintext under a key file.
    Encrypt {
        #[arg(long)]
        key: PathBuf,
        #[arg(long, value_parser = parse_biguint)]
        m: BigUint,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Decrypt a ciphertext file and print the decimal plaintext.
    Decrypt {
        #[arg(long)]
        key: PathBuf,
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Homomorphically combine two ciphertexts (`--in` twice).
    Add {
        #[arg(long)]
        key: PathBuf,
        #[arg(long = "in", num_args = 1)]
        input: Vec<PathBuf>,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Multiply the plaintext by a known scalar (additive schemes).
    Smul {
        #[arg(long)]
        key: PathBuf,
        #[arg(long, value_parser = parse_biguint)]
        scalar: BigUint,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Re-randomize a ciphertext.
    Rerand {
        #[arg(long)]
        key: PathBuf,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Sum every ballot ciphertext found in a directory.
    Tally {
        #[arg(long)]
        key: PathBuf,
        /// Directory of ciphertext files (single or batch documents).
        #[arg(long)]
        ballots: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Permute and re-encrypt a ciphertext batch file.
    Mix {
        #[arg(long)]
        key: PathBuf,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Measure ciphertext expansion and encrypt/decrypt cost.
    Bench {
        #[arg(long, value_parser = parse_scheme)]
        scheme: SchemeId,
        #[arg(long)]
        sigma: u32,
        #[arg(long)]
        level: Option<u32>,
        #[arg(long, default_value_t = 32)]
        trials: usize,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Compile a circuit to a group program and evaluate it.
    EncodeCircuit {
        #[arg(long)]
        circuit: PathBuf,
        /// Input assignment as a bit string, first input first (e.g. 101).
        #[arg(long)]
        inputs: String,
        #[arg(long)]
        seed: Option<u64>,
    },
}

fn rng_from(seed: Option<u64>) -> ChaCha20Rng {
    match seed {
        Some(s) => ChaCha20Rng::seed_from_u64(s),
        None => ChaCha20Rng::from_entropy(),
    }
}

enum CliError {
    Io(String),
    Lib(Error),
    Usage(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> CliError {
        CliError::Lib(e)
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text)
        .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display())))
}

fn load_keypair(path: &Path) -> Result<(PublicKey, Option<SecretKey>), CliError> {
    Ok(parse_key(&read(path)?)?)
}

fn load_public(path: &Path) -> Result<PublicKey, CliError> {
    Ok(load_keypair(path)?.0)
}

fn load_ciphertext(path: &Path, pk: &PublicKey) -> Result<Ciphertext, CliError> {
    let batch = parse_ciphertext_batch(&read(path)?)?;
    let [c] = batch.as_slice() else {
        return Err(CliError::Lib(Error::Validation(format!(
            "{} must hold exactly one ciphertext",
            path.display()
        ))));
    };
    c.validate(pk)?;
    Ok(c.clone())
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Keygen { scheme, sigma, level, out, seed } => {
            let sigma = SecurityParameter::new(sigma)?;
            let (pk, sk) = keygen(scheme, sigma, level, &mut rng_from(seed))?;
            write(&out, &serialize_key(&pk, Some(&sk)))
        }
        Command::Encrypt { key, m, out, seed } => {
            let pk = load_public(&key)?;
            let c = encrypt(&pk, &pk.plaintext(m)?, &mut rng_from(seed))?;
            write(&out, &serialize_ciphertext(&c))
        }
        Command::Decrypt { key, input } => {
            let (pk, sk) = load_keypair(&key)?;
            let sk = sk.ok_or_else(|| {
                CliError::Lib(Error::Validation("key file lacks the secret half".into()))
            })?;
            let c = load_ciphertext(&input, &pk)?;
            println!("{}", decrypt(&sk, &pk, &c)?.value());
            Ok(())
        }
        Command::Add { key, input, out, seed } => {
            let [a, b] = input.as_slice() else {
                return Err(CliError::Usage("add takes exactly two --in files".into()));
            };
            let pk = load_public(&key)?;
            let ca = load_ciphertext(a, &pk)?;
            let cb = load_ciphertext(b, &pk)?;
            let c = combine(&pk, &ca, &cb, &mut rng_from(seed))?;
            write(&out, &serialize_ciphertext(&c))
        }
        Command::Smul { key, scalar, input, out, seed } => {
            let pk = load_public(&key)?;
            let c = load_ciphertext(&input, &pk)?;
            let scaled = mixed_mult(&pk, &scalar, &c, &mut rng_from(seed))?;
            write(&out, &serialize_ciphertext(&scaled))
        }
        Command::Rerand { key, input, out, seed } => {
            let pk = load_public(&key)?;
            let c = load_ciphertext(&input, &pk)?;
            let fresh = blind(&pk, &c, &mut rng_from(seed))?;
            write(&out, &serialize_ciphertext(&fresh))
        }
        Command::Tally { key, ballots, out, seed } => {
            let pk = load_public(&key)?;
            let mut paths: Vec<PathBuf> = std::fs::read_dir(&ballots)
                .map_err(|e| CliError::Io(format!("cannot read {}: {e}", ballots.display())))?
                .filter_map(|entry| entry.ok().map(|e| e.path()))
                .filter(|p| p.is_file())
                .collect();
            paths.sort();
            let mut all = Vec::new();
            for path in &paths {
                for c in parse_ciphertext_batch(&read(path)?)? {
                    c.validate(&pk)?;
                    all.push(Ballot::new(c)?);
                }
            }
            let total = tally(&pk, &all, &mut rng_from(seed))?;
            write(&out, &serialize_ciphertext(&total))
        }
        Command::Mix { key, input, out, seed } => {
            let pk = load_public(&key)?;
            let batch = parse_ciphertext_batch(&read(&input)?)?;
            for c in &batch {
                c.validate(&pk)?;
            }
            let mixed = mix_node(&pk, &batch, &mut rng_from(seed))?;
            write(&out, &serialize_ciphertext_batch(&mixed))
        }
        Command::Bench { scheme, sigma, level, trials, seed } => {
            let sigma = SecurityParameter::new(sigma)?;
            let mut rng = rng_from(seed);
            let report = measure_expansion(scheme, sigma, level, trials, &mut rng)?;
            println!("{report}");
            if scheme == SchemeId::DamgardJurik {
                let top = level.unwrap_or(1).clamp(1, 8);
                let s_values: Vec<u32> = (1..=top).collect();
                let rows = bench_dj_vs_paillier(sigma, &s_values, trials, &mut rng)?;
                println!();
                println!("cost versus paillier on one shared modulus:");
                print!("{}", format_dj_table(&rows));
            }
            Ok(())
        }
        Command::EncodeCircuit { circuit, inputs, seed } => {
            let text = read(&circuit)?;
            let circuit = BoolCircuit::parse(&text)?;
            let bits: Vec<bool> = inputs
                .chars()
                .map(|c| match c {
                    '0' => Ok(false),
                    '1' => Ok(true),
                    other => Err(CliError::Lib(Error::Format {
                        field: "inputs".into(),
                        reason: format!("invalid bit `{other}`"),
                    })),
                })
                .collect::<Result<_, _>>()?;
            let program = compile_circuit(&circuit)?;
            let matrix = eval_program(&program, &bits)?;
            let plain = circuit.eval(&bits)?;
            let scheme = InsecureConjugationScheme::random(&mut rng_from(seed));
            let encrypted = evaluate_encrypted(&scheme, &circuit, &bits)?;
            println!("inputs {inputs}");
            println!("program_length {}", program.len());
            println!("program_result {}", u8::from(matrix.entry(0, 2) == 1));
            println!("plain_result {}", u8::from(plain));
            println!("encrypted_result {}", u8::from(encrypted));
            println!("packed_result {}", pack_s7(&embed_sl32_s7(&matrix)?).to_bit_string());
            if (matrix.entry(0, 2) == 1) != plain || encrypted != plain {
                return Err(CliError::Lib(Error::Validation(
                    "evaluation paths disagree".into(),
                )));
            }
            Ok(())
        }
    }
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::Format { .. } | Error::Validation(_) | Error::Parameter(_) | Error::Domain(_)
        | Error::Circuit(_) => 3,
        Error::Generation(_) | Error::Corrupt(_) | Error::Unsupported(_) | Error::Capacity(_) => 4,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
        Err(CliError::Io(msg)) => {
            eprintln!("io error: {msg}");
            ExitCode::from(1)
        }
    }
}
