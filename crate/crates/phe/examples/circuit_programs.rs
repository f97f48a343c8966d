//! Boolean circuits as group programs, end to end: compile a circuit to
//! a straight-line program over SL(3,2), evaluate it as matrices, embed
//! it into S₇, pack permutations into 21 bits, and finally run the whole
//! thing on *encrypted* permutations under a (deliberately toy) scheme.
//!
//! ```bash
//! cargo run -p phe --example circuit_programs
//! ```

use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;

use phe::group_encoding::{
    compile_circuit, embed_sl32_s7, encode_bit, eval_program, evaluate_encrypted, pack_s7,
    BoolCircuit, InsecureConjugationScheme, Mat3,
};
use phe::Result;

fn main() -> Result<()> {
    // majority(a, b, c) = ab ⊕ ac ⊕ bc
    let majority = BoolCircuit::parse(
        "g0 = INPUT 0\n\
         g1 = INPUT 1\n\
         g2 = INPUT 2\n\
         g3 = AND g0 g1\n\
         g4 = AND g0 g2\n\
         g5 = AND g1 g2\n\
         g6 = XOR g3 g4\n\
         g7 = XOR g6 g5\n\
         OUTPUT g7",
    )?;
    let program = compile_circuit(&majority)?;
    println!("majority-of-3 compiles to {} instructions (AND depth {})", program.len(), majority.and_depth());

    println!("\ntruth table, three evaluation paths:");
    println!("{:<8} {:>6} {:>7} {:>10}", "inputs", "plain", "matrix", "encrypted");
    let scheme = InsecureConjugationScheme::random(&mut ChaCha20Rng::seed_from_u64(7));
    for mask in 0u32..8 {
        let inputs: Vec<bool> = (0..3).map(|i| (mask >> i) & 1 == 1).collect();
        let plain = majority.eval(&inputs)?;
        let matrix = eval_program(&program, &inputs)?;
        let encrypted = evaluate_encrypted(&scheme, &majority, &inputs)?;
        assert_eq!(matrix, encode_bit(plain));
        assert_eq!(encrypted, plain);
        println!(
            "{}{}{}      {:>6} {:>7} {:>10}",
            u8::from(inputs[0]),
            u8::from(inputs[1]),
            u8::from(inputs[2]),
            u8::from(plain),
            matrix.entry(0, 2),
            u8::from(encrypted)
        );
    }

    println!("\nbit encodings as elements of SL(3,2), embedded into S7 and packed:");
    for bit in [false, true] {
        let m = encode_bit(bit);
        let perm = embed_sl32_s7(&m)?;
        println!(
            "encode_bit({}) → images {:?} → 21-bit packing {}",
            u8::from(bit),
            perm.images(),
            pack_s7(&perm).to_bit_string()
        );
    }

    // the blowup: AND chains double per level
    println!("\nprogram growth under nested AND (the construction's blowup):");
    for depth in 1..=4u32 {
        let mut text = String::from("g0 = INPUT 0\ng1 = INPUT 1\ng2 = AND g0 g1\n");
        let mut last = 2;
        for d in 1..depth {
            text.push_str(&format!("g{} = INPUT {}\n", last + 1, d + 1));
            text.push_str(&format!("g{} = AND g{} g{}\n", last + 2, last, last + 1));
            last += 2;
        }
        text.push_str(&format!("OUTPUT g{last}"));
        let c = BoolCircuit::parse(&text)?;
        let p = compile_circuit(&c)?;
        println!("  AND depth {depth}: {} instructions", p.len());
    }

    println!("\nall 168 elements of SL(3,2) embed injectively:");
    let images: std::collections::HashSet<_> = Mat3::enumerate_sl32()
        .iter()
        .map(|m| embed_sl32_s7(m).unwrap())
        .collect();
    println!("  distinct permutations: {}", images.len());
    Ok(())
}
