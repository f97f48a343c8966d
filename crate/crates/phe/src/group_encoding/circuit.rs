//! Boolean circuits over `{INPUT, CONST, NOT, XOR, AND}` and their text
//! format.
//!
//! The text form is one gate per line, uppercase keywords, gates named
//! `g<N>` and defined before use, with a final `OUTPUT` line:
//!
//! ```text
//! g0 = INPUT 0
//! g1 = INPUT 1
//! g2 = AND g0 g1
//! OUTPUT g2
//! ```

use crate::error::{Error, Result};

/// One gate; operands refer to earlier gates by index.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Gate {
    Input(usize),
    Const(bool),
    Not(usize),
    Xor(usize, usize),
    And(usize, usize),
}

/// A topologically ordered gate list with a designated output.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoolCircuit {
    n_inputs: usize,
    gates: Vec<Gate>,
    output: usize,
}

impl BoolCircuit {
    pub fn new(n_inputs: usize, gates: Vec<Gate>, output: usize) -> Result<BoolCircuit> {
        if gates.is_empty() {
            return Err(Error::Circuit("circuit needs at least one gate".into()));
        }
        for (idx, gate) in gates.iter().enumerate() {
            let check = |operand: usize| -> Result<()> {
                if operand >= idx {
                    return Err(Error::Circuit(format!(
                        "gate {idx} refers to gate {operand}, which is not earlier"
                    )));
                }
                Ok(())
            };
            match *gate {
                Gate::Input(i) => {
                    if i >= n_inputs {
                        return Err(Error::Circuit(format!(
                            "gate {idx} reads input {i} but arity is {n_inputs}"
                        )));
                    }
                }
                Gate::Const(_) => {}
                Gate::Not(a) => check(a)?,
                Gate::Xor(a, b) | Gate::And(a, b) => {
                    check(a)?;
                    check(b)?;
                }
            }
        }
        if output >= gates.len() {
            return Err(Error::Circuit(format!("output gate {output} does not exist")));
        }
        Ok(BoolCircuit { n_inputs, gates, output })
    }

    pub fn n_inputs(&self) -> usize {
        self.n_inputs
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn output(&self) -> usize {
        self.output
    }

    /// Number of AND gates on the deepest path to the output; the
    /// compiled program length is exponential in this.
    pub fn and_depth(&self) -> u32 {
        let mut depth = vec![0u32; self.gates.len()];
        for (idx, gate) in self.gates.iter().enumerate() {
            depth[idx] = match *gate {
                Gate::Input(_) | Gate::Const(_) => 0,
                Gate::Not(a) => depth[a],
                Gate::Xor(a, b) => depth[a].max(depth[b]),
                Gate::And(a, b) => depth[a].max(depth[b]) + 1,
            };
        }
        depth[self.output]
    }

    /// Plain evaluation, gate by gate.
    pub fn eval(&self, inputs: &[bool]) -> Result<bool> {
        if inputs.len() != self.n_inputs {
            return Err(Error::Parameter(format!(
                "circuit takes {} inputs, got {}",
                self.n_inputs,
                inputs.len()
            )));
        }
        let mut values: Vec<bool> = Vec::with_capacity(self.gates.len());
        for gate in &self.gates {
            let v = match *gate {
                Gate::Input(i) => inputs[i],
                Gate::Const(b) => b,
                Gate::Not(a) => !values[a],
                Gate::Xor(a, b) => values[a] ^ values[b],
                Gate::And(a, b) => values[a] && values[b],
            };
            values.push(v);
        }
        Ok(values[self.output])
    }

    /// Parse the line-oriented text format. Keywords are uppercase only;
    /// lowercase keywords are rejected.
    pub fn parse(text: &str) -> Result<BoolCircuit> {
        let mut ids: std::collections::HashMap<String, usize> = std::collections::HashMap::new();
        let mut gates = Vec::new();
        let mut output = None;
        let mut n_inputs = 0usize;

        let lines: Vec<&str> = text.lines().filter(|l| !l.trim().is_empty()).collect();
        if lines.is_empty() {
            return Err(Error::format("circuit", "empty circuit"));
        }
        for line in &lines {
            if output.is_some() {
                return Err(Error::format("circuit", "OUTPUT must be the last line"));
            }
            let tokens: Vec<&str> = line.split_whitespace().collect();
            if tokens[0] == "OUTPUT" {
                if tokens.len() != 2 {
                    return Err(Error::format("circuit", "OUTPUT takes exactly one gate"));
                }
                let id = *ids
                    .get(tokens[1])
                    .ok_or_else(|| Error::format("circuit", format!("unknown gate `{}`", tokens[1])))?;
                output = Some(id);
                continue;
            }
            if tokens[0].eq_ignore_ascii_case("output") {
                return Err(Error::format("circuit", "keywords must be uppercase"));
            }
            if tokens.len() < 3 || tokens[1] != "=" {
                return Err(Error::format("circuit", format!("malformed line `{line}`")));
            }
            let name = tokens[0];
            if !name.starts_with('g') || name[1..].parse::<usize>().is_err() {
                return Err(Error::format("circuit", format!("gate names look like g0, got `{name}`")));
            }
            if ids.contains_key(name) {
                return Err(Error::format("circuit", format!("gate `{name}` defined twice")));
            }
            let resolve = |token: &str| -> Result<usize> {
                ids.get(token)
                    .copied()
                    .ok_or_else(|| Error::format("circuit", format!("unknown gate `{token}`")))
            };
            let keyword = tokens[2];
            let gate = match (keyword, tokens.len()) {
                ("INPUT", 4) => {
                    let i: usize = tokens[3].parse().map_err(|_| {
                        Error::format("circuit", format!("bad input index `{}`", tokens[3]))
                    })?;
                    n_inputs = n_inputs.max(i + 1);
                    Gate::Input(i)
                }
                ("CONST", 4) => match tokens[3] {
                    "0" => Gate::Const(false),
                    "1" => Gate::Const(true),
                    other => {
                        return Err(Error::format("circuit", format!("bad constant `{other}`")))
                    }
                },
                ("NOT", 4) => Gate::Not(resolve(tokens[3])?),
                ("XOR", 5) => Gate::Xor(resolve(tokens[3])?, resolve(tokens[4])?),
                ("AND", 5) => Gate::And(resolve(tokens[3])?, resolve(tokens[4])?),
                _ => {
                    if ["input", "const", "not", "xor", "and"]
                        .contains(&keyword.to_ascii_lowercase().as_str())
                        && keyword != keyword.to_ascii_uppercase()
                    {
                        return Err(Error::format("circuit", "keywords must be uppercase"));
                    }
                    return Err(Error::format(
                        "circuit",
                        format!("unknown or malformed gate `{line}`"),
                    ));
                }
            };
            ids.insert(name.to_string(), gates.len());
            gates.push(gate);
        }
        let output =
            output.ok_or_else(|| Error::format("circuit", "missing OUTPUT line"))?;
        BoolCircuit::new(n_inputs, gates, output)
    }
}
