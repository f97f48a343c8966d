//! Running compiled programs on encrypted permutations.
//!
//! Any homomorphic encryption on S₇ — encrypt, decrypt, and a `mult`
//! that maps encryptions of `a`, `b` to an encryption of `a∘b` — is
//! enough to evaluate boolean circuits on encrypted bits: encode each bit
//! as a matrix, push it through the SL(3,2) → S₇ embedding, and replay a
//! compiled program with `mult` instead of matrix multiplication.

use rand::Rng;

use super::circuit::BoolCircuit;
use super::mat3::{encode_bit, Mat3};
use super::perm::{embed_sl32_s7, matrix_from_perm, Perm7};
use super::program::{compile_circuit, Instruction};
use crate::error::{Error, Result};

/// A homomorphic encryption scheme on the symmetric group S₇.
pub trait GroupScheme {
    type Ciphertext: Clone;

    fn encrypt(&self, value: &Perm7) -> Self::Ciphertext;

    /// Homomorphic composition: decrypts to `a ∘ b`.
    fn mult(&self, a: &Self::Ciphertext, b: &Self::Ciphertext) -> Self::Ciphertext;

    fn decrypt(&self, ct: &Self::Ciphertext) -> Perm7;
}

/// Test instance: "encryption" is conjugation by a fixed secret
/// permutation. Conjugation is a group automorphism, so composition is
/// trivially homomorphic — and trivially breakable. This exists to
/// exercise the reduction pipeline, not to protect anything.
#[derive(Debug, Clone)]
pub struct InsecureConjugationScheme {
    secret: Perm7,
    secret_inv: Perm7,
}

impl InsecureConjugationScheme {
    pub fn new(secret: Perm7) -> InsecureConjugationScheme {
        let secret_inv = secret.inverse();
        InsecureConjugationScheme { secret, secret_inv }
    }

    pub fn random<R: Rng + ?Sized>(rng: &mut R) -> InsecureConjugationScheme {
        let mut points = [1u8, 2, 3, 4, 5, 6, 7];
        for i in (1..7usize).rev() {
            points.swap(i, rng.gen_range(0..=i));
        }
        InsecureConjugationScheme::new(Perm7::new(points).expect("shuffled permutation"))
    }
}

impl GroupScheme for InsecureConjugationScheme {
    type Ciphertext = Perm7;

    fn encrypt(&self, value: &Perm7) -> Perm7 {
        self.secret.compose(value).compose(&self.secret_inv)
    }

    fn mult(&self, a: &Perm7, b: &Perm7) -> Perm7 {
        a.compose(b)
    }

    fn decrypt(&self, ct: &Perm7) -> Perm7 {
        self.secret_inv.compose(ct).compose(&self.secret)
    }
}

/// The six conjugators a compiled program can apply to an input select:
/// the permutation matrices on three points.
fn conjugator_candidates() -> [Mat3; 6] {
    [
        Mat3::permutation([0, 1, 2]),
        Mat3::permutation([1, 0, 2]),
        Mat3::permutation([0, 2, 1]),
        Mat3::permutation([2, 1, 0]),
        Mat3::permutation([1, 2, 0]),
        Mat3::permutation([2, 0, 1]),
    ]
}

/// Evaluate `circuit` under `scheme`, given one encrypted encoded bit per
/// input: `encrypted_inputs[i]` must decrypt to
/// `embed(encode_bit(xᵢ))`. Returns an encryption of
/// `embed(encode_bit(C(x)))`.
///
/// Compiled select instructions always choose between the identity and a
/// conjugate `T·(I+E₁₃)·T⁻¹` with `T` a permutation matrix; the encrypted
/// value is recovered as `E(embed(T)) ∘ cᵢ ∘ E(embed(T⁻¹))` using only
/// the scheme's `mult` and encryptions of public constants.
pub fn reduce_to_algebraic<S: GroupScheme>(
    scheme: &S,
    circuit: &BoolCircuit,
    encrypted_inputs: &[S::Ciphertext],
) -> Result<S::Ciphertext> {
    if encrypted_inputs.len() != circuit.n_inputs() {
        return Err(Error::Parameter(format!(
            "circuit takes {} inputs, got {}",
            circuit.n_inputs(),
            encrypted_inputs.len()
        )));
    }
    let program = compile_circuit(circuit)?;
    let one = encode_bit(true);
    let mut acc = scheme.encrypt(&Perm7::IDENTITY);
    for ins in program.instructions() {
        let value = match ins {
            Instruction::Const(m) => scheme.encrypt(&embed_sl32_s7(m)?),
            Instruction::Select { input, if0, if1 } => {
                if *if0 != Mat3::IDENTITY {
                    return Err(Error::Circuit(
                        "select does not choose between identity and a transvection".into(),
                    ));
                }
                let t = conjugator_candidates()
                    .into_iter()
                    .find(|t| t.mul(&one).mul(&t.transpose()) == *if1)
                    .ok_or_else(|| {
                        Error::Circuit("select matrix is not a conjugated bit encoding".into())
                    })?;
                let left = scheme.encrypt(&embed_sl32_s7(&t)?);
                let right = scheme.encrypt(&embed_sl32_s7(&t.transpose())?);
                scheme.mult(&scheme.mult(&left, &encrypted_inputs[*input]), &right)
            }
        };
        acc = scheme.mult(&acc, &value);
    }
    Ok(acc)
}

/// End-to-end helper: encrypt the encoded inputs, run the reduction,
/// decrypt, invert the embedding and read the output bit from the (1,3)
/// entry.
pub fn evaluate_encrypted<S: GroupScheme>(
    scheme: &S,
    circuit: &BoolCircuit,
    inputs: &[bool],
) -> Result<bool> {
    let encrypted: Vec<S::Ciphertext> = inputs
        .iter()
        .map(|&b| Ok(scheme.encrypt(&embed_sl32_s7(&encode_bit(b))?)))
        .collect::<Result<_>>()?;
    let out = reduce_to_algebraic(scheme, circuit, &encrypted)?;
    let matrix = matrix_from_perm(&scheme.decrypt(&out))?;
    Ok(matrix.entry(0, 2) == 1)
}
