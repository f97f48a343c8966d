//! End-to-end tests of the `phe` binary: every subcommand, the file
//! formats, seeded reproducibility, and the exit-code contract
//! (0 success, 2 usage, 3 format/validation, 4 cryptographic error).

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_phe"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn run_ok(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "command {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf8 output")
}

fn exit_code(args: &[&str]) -> i32 {
    run(args).status.code().expect("exit code")
}

struct Dir(PathBuf);

impl Dir {
    fn new(name: &str) -> Dir {
        let path = std::env::temp_dir().join(format!("phe-cli-{name}-{}", std::process::id()));
        let _ = std::fs::remove_dir_all(&path);
        std::fs::create_dir_all(&path).unwrap();
        Dir(path)
    }

    fn file(&self, name: &str) -> String {
        self.0.join(name).to_str().unwrap().to_string()
    }
}

impl Drop for Dir {
    fn drop(&mut self) {
        let _ = std::fs::remove_dir_all(&self.0);
    }
}

fn read(path: &str) -> String {
    std::fs::read_to_string(Path::new(path)).unwrap()
}

#[test]
fn keygen_encrypt_add_decrypt_roundtrip() {
    let dir = Dir::new("roundtrip");
    let key = dir.file("key.phe");
    run_ok(&["keygen", "--scheme", "paillier", "--sigma", "64", "--seed", "7", "--out", &key]);
    let text = read(&key);
    assert!(text.starts_with("scheme paillier\nsigma 64\n"));
    assert!(text.contains("secret.p "));

    let a = dir.file("a.phe");
    let b = dir.file("b.phe");
    let sum = dir.file("sum.phe");
    run_ok(&["encrypt", "--key", &key, "--m", "20", "--seed", "1", "--out", &a]);
    run_ok(&["encrypt", "--key", &key, "--m", "22", "--seed", "2", "--out", &b]);
    run_ok(&["add", "--key", &key, "--in", &a, "--in", &b, "--seed", "3", "--out", &sum]);
    assert_eq!(run_ok(&["decrypt", "--key", &key, "--in", &sum]).trim(), "42");
}

#[test]
fn smul_and_rerand() {
    let dir = Dir::new("smul");
    let key = dir.file("key.phe");
    run_ok(&["keygen", "--scheme", "damgard-jurik", "--sigma", "64", "--level", "2", "--seed", "5", "--out", &key]);
    let c = dir.file("c.phe");
    run_ok(&["encrypt", "--key", &key, "--m", "1000", "--seed", "1", "--out", &c]);

    let scaled = dir.file("scaled.phe");
    run_ok(&["smul", "--key", &key, "--scalar", "3000", "--in", &c, "--seed", "2", "--out", &scaled]);
    assert_eq!(run_ok(&["decrypt", "--key", &key, "--in", &scaled]).trim(), "3000000");

    let fresh = dir.file("fresh.phe");
    run_ok(&["rerand", "--key", &key, "--in", &c, "--seed", "3", "--out", &fresh]);
    assert_ne!(read(&c), read(&fresh), "re-randomization must change the residue");
    assert_eq!(run_ok(&["decrypt", "--key", &key, "--in", &fresh]).trim(), "1000");
}

#[test]
fn seeded_runs_are_reproducible() {
    let dir = Dir::new("seeded");
    let k1 = dir.file("k1.phe");
    let k2 = dir.file("k2.phe");
    for k in [&k1, &k2] {
        run_ok(&["keygen", "--scheme", "gm", "--sigma", "32", "--seed", "11", "--out", k]);
    }
    assert_eq!(read(&k1), read(&k2));

    let c1 = dir.file("c1.phe");
    let c2 = dir.file("c2.phe");
    for c in [&c1, &c2] {
        run_ok(&["encrypt", "--key", &k1, "--m", "1", "--seed", "9", "--out", c]);
    }
    assert_eq!(read(&c1), read(&c2));
}

#[test]
fn tally_over_a_ballot_directory() {
    let dir = Dir::new("tally");
    let key = dir.file("key.phe");
    run_ok(&["keygen", "--scheme", "paillier", "--sigma", "64", "--seed", "3", "--out", &key]);
    let ballots = dir.file("ballots");
    std::fs::create_dir(&ballots).unwrap();
    let votes = [1u32, 0, 1, 1, 0, 1];
    for (i, v) in votes.iter().enumerate() {
        run_ok(&[
            "encrypt",
            "--key",
            &key,
            "--m",
            &v.to_string(),
            "--seed",
            &i.to_string(),
            "--out",
            &format!("{ballots}/ballot_{i}.phe"),
        ]);
    }
    let out = dir.file("tally.phe");
    run_ok(&["tally", "--key", &key, "--ballots", &ballots, "--seed", "8", "--out", &out]);
    assert_eq!(run_ok(&["decrypt", "--key", &key, "--in", &out]).trim(), "4");
}

#[test]
fn mix_preserves_the_multiset() {
    let dir = Dir::new("mix");
    let key = dir.file("key.phe");
    run_ok(&["keygen", "--scheme", "paillier", "--sigma", "64", "--seed", "4", "--out", &key]);
    let mut batch = String::new();
    for (i, m) in ["5", "6", "7"].iter().enumerate() {
        let c = dir.file(&format!("m{i}.phe"));
        run_ok(&["encrypt", "--key", &key, "--m", m, "--seed", &i.to_string(), "--out", &c]);
        batch.push_str(&read(&c));
    }
    let batch_file = dir.file("batch.phe");
    std::fs::write(&batch_file, &batch).unwrap();
    let mixed = dir.file("mixed.phe");
    run_ok(&["mix", "--key", &key, "--in", &batch_file, "--seed", "2", "--out", &mixed]);

    let mixed_text = read(&mixed);
    assert_ne!(batch, mixed_text);
    // decrypt each mixed ciphertext through the CLI
    let mut plain: Vec<String> = Vec::new();
    for (i, block) in mixed_text.split("\n\n").enumerate() {
        let f = dir.file(&format!("out{i}.phe"));
        std::fs::write(&f, block).unwrap();
        plain.push(run_ok(&["decrypt", "--key", &key, "--in", &f]).trim().to_string());
    }
    plain.sort();
    assert_eq!(plain, vec!["5", "6", "7"]);
}

#[test]
fn bench_reports_expansion_and_dj_predictions() {
    let out = run_ok(&["bench", "--scheme", "paillier", "--sigma", "64", "--trials", "4", "--seed", "2"]);
    assert!(out.contains("expansion 2.0000"), "got:\n{out}");

    let out = run_ok(&[
        "bench", "--scheme", "damgard-jurik", "--sigma", "64", "--level", "2", "--trials", "2",
        "--seed", "2",
    ]);
    assert!(out.contains("expansion 1.5000"), "got:\n{out}");
    assert!(out.contains("predicted_enc"), "got:\n{out}");
    assert!(out.contains("4.00"), "s=2 predicted encrypt ratio, got:\n{out}");
}

#[test]
fn encode_circuit_runs_all_three_paths() {
    let dir = Dir::new("circuit");
    let circuit = dir.file("and.circuit");
    std::fs::write(&circuit, "g0 = INPUT 0\ng1 = INPUT 1\ng2 = AND g0 g1\nOUTPUT g2\n").unwrap();
    let out = run_ok(&["encode-circuit", "--circuit", &circuit, "--inputs", "11", "--seed", "1"]);
    assert!(out.contains("program_length 4"), "got:\n{out}");
    assert!(out.contains("program_result 1"), "got:\n{out}");
    assert!(out.contains("plain_result 1"), "got:\n{out}");
    assert!(out.contains("encrypted_result 1"), "got:\n{out}");
    assert!(out.contains("packed_result "), "got:\n{out}");

    let out = run_ok(&["encode-circuit", "--circuit", &circuit, "--inputs", "10", "--seed", "1"]);
    assert!(out.contains("program_result 0"), "got:\n{out}");
}

#[test]
fn exit_codes_follow_the_contract() {
    let dir = Dir::new("exits");
    let key = dir.file("key.phe");
    run_ok(&["keygen", "--scheme", "paillier", "--sigma", "64", "--seed", "7", "--out", &key]);

    // 2: usage
    assert_eq!(exit_code(&["keygen", "--scheme", "nope", "--sigma", "64", "--out", "x"]), 2);
    assert_eq!(exit_code(&["decrypt"]), 2);
    let a = dir.file("a.phe");
    run_ok(&["encrypt", "--key", &key, "--m", "1", "--seed", "1", "--out", &a]);
    assert_eq!(exit_code(&["add", "--key", &key, "--in", &a, "--out", &a]), 2);

    // 3: format / validation
    let bad_hex = dir.file("bad_hex.phe");
    std::fs::write(&bad_hex, "scheme paillier\nresidue0 FF\n").unwrap();
    assert_eq!(exit_code(&["decrypt", "--key", &key, "--in", &bad_hex]), 3);
    let oversized = dir.file("oversized.phe");
    let n2_hex = {
        let text = read(&key);
        let n_hex = text.lines().find(|l| l.starts_with("public.n ")).unwrap()
            .strip_prefix("public.n ").unwrap();
        let n = num_bigint::BigUint::parse_bytes(n_hex.as_bytes(), 16).unwrap();
        (&n * &n).to_str_radix(16)
    };
    std::fs::write(&oversized, format!("scheme paillier\nresidue0 {n2_hex}\n")).unwrap();
    assert_eq!(exit_code(&["decrypt", "--key", &key, "--in", &oversized]), 3);
    assert_eq!(exit_code(&["keygen", "--scheme", "paillier", "--sigma", "8", "--out", &dir.file("k")]), 3);
    let bad_circuit = dir.file("bad.circuit");
    std::fs::write(&bad_circuit, "g0 = input 0\nOUTPUT g0\n").unwrap();
    assert_eq!(exit_code(&["encode-circuit", "--circuit", &bad_circuit, "--inputs", "1"]), 3);

    // 4: cryptographic — scalar multiplication and re-randomization are
    // undefined for the deterministic scheme
    let rsa_key = dir.file("rsa.phe");
    run_ok(&["keygen", "--scheme", "rsa", "--sigma", "64", "--seed", "7", "--out", &rsa_key]);
    let rc = dir.file("rc.phe");
    run_ok(&["encrypt", "--key", &rsa_key, "--m", "9", "--out", &rc]);
    assert_eq!(
        exit_code(&["smul", "--key", &rsa_key, "--scalar", "2", "--in", &rc, "--out", &dir.file("s")]),
        4
    );
    assert_eq!(exit_code(&["rerand", "--key", &rsa_key, "--in", &rc, "--out", &dir.file("r")]), 4);

    // 1: io
    assert_eq!(exit_code(&["decrypt", "--key", &key, "--in", &dir.file("missing.phe")]), 1);
}

#[test]
fn smul_rejects_rsa_and_add_multiplies_for_rsa() {
    let dir = Dir::new("rsa-ops");
    let key = dir.file("rsa.phe");
    run_ok(&["keygen", "--scheme", "rsa", "--sigma", "48", "--seed", "1", "--out", &key]);
    let a = dir.file("a.phe");
    let b = dir.file("b.phe");
    run_ok(&["encrypt", "--key", &key, "--m", "6", "--out", &a]);
    run_ok(&["encrypt", "--key", &key, "--m", "7", "--out", &b]);
    let prod = dir.file("prod.phe");
    run_ok(&["add", "--key", &key, "--in", &a, "--in", &b, "--out", &prod]);
    assert_eq!(run_ok(&["decrypt", "--key", &key, "--in", &prod]).trim(), "42");
}

#[test]
fn every_scheme_works_through_the_cli() {
    let dir = Dir::new("all-schemes");
    for scheme in ["rsa", "gm", "benaloh", "naccache-stern", "okamoto-uchiyama", "paillier", "damgard-jurik"] {
        let key = dir.file(&format!("{scheme}.phe"));
        run_ok(&["keygen", "--scheme", scheme, "--sigma", "48", "--seed", "6", "--out", &key]);
        let c = dir.file(&format!("{scheme}-c.phe"));
        let m = if scheme == "gm" { "1" } else { "2" };
        run_ok(&["encrypt", "--key", &key, "--m", m, "--seed", "1", "--out", &c]);
        assert_eq!(run_ok(&["decrypt", "--key", &key, "--in", &c]).trim(), m, "{scheme}");
    }
}
