//! Boolean circuits as group programs.
//!
//! The pipeline in this module turns any circuit over `{INPUT, CONST,
//! NOT, XOR, AND}` into a straight-line program whose instructions are
//! 3×3 matrices over F₂:
//!
//! * a bit `x` is encoded as the transvection `I + x·E₁₃` ([`encode_bit`]),
//! * XOR is concatenation (the encodings multiply like bits add),
//! * AND is the four-factor commutator construction, conjugating the
//!   operand programs into the (1,2) and (2,3) slots ([`compile_circuit`]).
//!
//! Every instruction matrix lies in SL(3,2), which acts faithfully on the
//! seven nonzero vectors of F₂³ — that action embeds the whole program
//! into the symmetric group S₇ ([`embed_sl32_s7`]), whose elements pack
//! into 21-bit strings ([`pack_s7`]). Consequently a homomorphic scheme
//! on S₇ evaluates boolean circuits on encrypted bits:
//! [`reduce_to_algebraic`] runs a compiled program under any
//! [`GroupScheme`], multiplying encrypted permutations only.

mod circuit;
mod encrypted;
mod mat3;
mod perm;
mod program;

pub use circuit::{BoolCircuit, Gate};
pub use encrypted::{
    evaluate_encrypted, reduce_to_algebraic, GroupScheme, InsecureConjugationScheme,
};
pub use mat3::{encode_bit, Mat3};
pub use perm::{embed_sl32_s7, matrix_from_perm, pack_s7, unpack_s7, PackedS7, Perm7};
pub use program::{compile_circuit, eval_program, GroupProgram, Instruction};
