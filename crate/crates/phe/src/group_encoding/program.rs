//! Straight-line group programs over SL(3,2) and the circuit compiler.

use super::circuit::{BoolCircuit, Gate};
use super::mat3::{encode_bit, Mat3};
use crate::error::{Error, Result};

/// One program instruction: a fixed matrix, or a choice between two
/// matrices steered by an input bit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Instruction {
    Const(Mat3),
    Select { input: usize, if0: Mat3, if1: Mat3 },
}

/// An instruction sequence; its value on an input assignment is the
/// left-to-right product of the resolved matrices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupProgram {
    instructions: Vec<Instruction>,
}

impl GroupProgram {
    pub fn instructions(&self) -> &[Instruction] {
        &self.instructions
    }

    pub fn len(&self) -> usize {
        self.instructions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.instructions.is_empty()
    }

    /// Conjugate every matrix by a (self-inverse) permutation matrix.
    fn conjugate(&self, t: &Mat3) -> GroupProgram {
        let conj = |m: &Mat3| t.mul(m).mul(t);
        GroupProgram {
            instructions: self
                .instructions
                .iter()
                .map(|ins| match ins {
                    Instruction::Const(m) => Instruction::Const(conj(m)),
                    Instruction::Select { input, if0, if1 } => Instruction::Select {
                        input: *input,
                        if0: conj(if0),
                        if1: conj(if1),
                    },
                })
                .collect(),
        }
    }

    fn concat(parts: &[&GroupProgram]) -> GroupProgram {
        GroupProgram {
            instructions: parts.iter().flat_map(|p| p.instructions.iter().copied()).collect(),
        }
    }
}

/// Left-to-right product of the program's matrices on `inputs`.
pub fn eval_program(program: &GroupProgram, inputs: &[bool]) -> Result<Mat3> {
    let mut acc = Mat3::IDENTITY;
    for ins in &program.instructions {
        let m = match ins {
            Instruction::Const(m) => *m,
            Instruction::Select { input, if0, if1 } => {
                let bit = *inputs.get(*input).ok_or_else(|| {
                    Error::Parameter(format!("program reads input {input}, not provided"))
                })?;
                if bit {
                    *if1
                } else {
                    *if0
                }
            }
        };
        acc = acc.mul(&m);
    }
    Ok(acc)
}

/// Compile a circuit into a program `P` with
/// `eval_program(P, x) = encode_bit(C(x))` for every assignment `x`.
///
/// XOR concatenates the operand programs; NOT is XOR with an encoded
/// constant 1; AND is the commutator `X·Y·X·Y` where `X` conjugates the
/// left program into the (1,2) slot and `Y` the right one into (2,3) —
/// both self-inverse over F₂. AND therefore doubles each operand, which
/// is the exponential-in-AND-depth blowup this construction is known for.
pub fn compile_circuit(circuit: &BoolCircuit) -> Result<GroupProgram> {
    let swap23 = Mat3::permutation([0, 2, 1]);
    let swap12 = Mat3::permutation([1, 0, 2]);
    let mut compiled: Vec<GroupProgram> = Vec::with_capacity(circuit.gates().len());
    for gate in circuit.gates() {
        let program = match *gate {
            Gate::Input(i) => GroupProgram {
                instructions: vec![Instruction::Select {
                    input: i,
                    if0: encode_bit(false),
                    if1: encode_bit(true),
                }],
            },
            Gate::Const(b) => GroupProgram { instructions: vec![Instruction::Const(encode_bit(b))] },
            Gate::Not(a) => {
                let negate = GroupProgram { instructions: vec![Instruction::Const(encode_bit(true))] };
                GroupProgram::concat(&[&compiled[a], &negate])
            }
            Gate::Xor(a, b) => GroupProgram::concat(&[&compiled[a], &compiled[b]]),
            Gate::And(a, b) => {
                let x = compiled[a].conjugate(&swap23);
                let y = compiled[b].conjugate(&swap12);
                GroupProgram::concat(&[&x, &y, &x, &y])
            }
        };
        compiled.push(program);
    }
    Ok(compiled.swap_remove(circuit.output()))
}
