//! Reversible SIMON circuits built from X, CNOT and Toffoli gates.
//!
//! Everything is in place: the state halves alternate between active and
//! passive roles each round, and each key register is overwritten with the
//! next round key once the round that consumes it has executed. The circuit
//! needs exactly `2n + mn` qubits.

use crate::circuit::{Circuit, QubitRange};
use crate::error::{Error, Result};
use crate::params::CipherParams;

/// Where the cipher lives inside a circuit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimonLayout {
    /// `k_0 .. k_{m-1}`, `n` qubits each.
    pub key_words: Vec<QubitRange>,
    pub left: QubitRange,
    pub right: QubitRange,
}

impl SimonLayout {
    pub fn new(
        params: &CipherParams,
        key_words: Vec<QubitRange>,
        left: QubitRange,
        right: QubitRange,
    ) -> Result<Self> {
        let n = params.word_size() as usize;
        if key_words.len() != params.key_words() as usize {
            return Err(Error::params(format!(
                "layout has {} key words, expected {}",
                key_words.len(),
                params.key_words()
            )));
        }
        if key_words.iter().chain([&left, &right]).any(|r| r.len() != n) {
            return Err(Error::params(format!("layout ranges must have {n} qubits")));
        }
        Ok(SimonLayout {
            key_words,
            left,
            right,
        })
    }

    /// Declares `k0 .. k{m-1}`, `left`, `right` in `c`.
    pub fn declare(c: &mut Circuit, params: &CipherParams) -> Result<Self> {
        let n = params.word_size() as usize;
        let key_words = (0..params.key_words())
            .map(|w| c.add_register(&format!("k{w}"), n))
            .collect::<Result<Vec<_>>>()?;
        let left = c.add_register("left", n)?;
        let right = c.add_register("right", n)?;
        SimonLayout::new(params, key_words, left, right)
    }

    /// Lays the key words out over one `mn`-qubit register, `k_0` first.
    pub fn over_key_register(
        params: &CipherParams,
        key: QubitRange,
        block: QubitRange,
    ) -> Result<Self> {
        let n = params.word_size() as usize;
        if key.len() != params.key_bits() as usize || block.len() != 2 * n {
            return Err(Error::params("key or block register has the wrong size"));
        }
        let key_words = (0..params.key_words() as usize)
            .map(|w| key.slice(w * n, n))
            .collect();
        SimonLayout::new(params, key_words, block.slice(0, n), block.slice(n, n))
    }

    pub fn qubit_count(&self) -> usize {
        self.key_words.iter().map(|r| r.len()).sum::<usize>() + self.left.len() + self.right.len()
    }
}

/// A standalone synthesized circuit and its layout.
#[derive(Debug, Clone)]
pub struct SimonCircuit {
    pub circuit: Circuit,
    pub layout: SimonLayout,
}

/// Round `j` updates the passive half in place:
/// Toffoli from the two AND-rotated active bits, CNOT from the linearly
/// rotated active bit, CNOT from the round key (`n` Toffoli, `2n` CNOT).
pub fn emit_round(
    c: &mut Circuit,
    params: &CipherParams,
    round_index: u32,
    layout: &SimonLayout,
) -> Result<()> {
    if round_index >= params.rounds() {
        return Err(Error::params(format!(
            "round {round_index} out of range for {} rounds",
            params.rounds()
        )));
    }
    let n = params.word_size() as usize;
    let (active, passive) = if round_index.is_multiple_of(2) {
        (layout.left, layout.right)
    } else {
        (layout.right, layout.left)
    };
    let key = layout.key_words[(round_index % params.key_words()) as usize];
    let (a, b) = params.rot_and();
    let x = params.rot_xor() as usize;

    for i in 0..n {
        c.ccx(
            active.at((i + a as usize) % n),
            active.at((i + b as usize) % n),
            passive.at(i),
        )?;
    }
    for i in 0..n {
        c.cx(active.at((i + x) % n), passive.at(i))?;
    }
    for i in 0..n {
        c.cx(key.at(i), passive.at(i))?;
    }
    Ok(())
}

/// Expansion `e` overwrites the register holding `k_e` with `k_{e+m}`:
/// one `n`-CNOT layer per key tap, then an X for every set constant bit.
pub fn emit_key_expansion(
    c: &mut Circuit,
    params: &CipherParams,
    expansion_index: u32,
    layout: &SimonLayout,
) -> Result<()> {
    let constants = params.round_constants();
    let Some(constant) = constants.get(expansion_index as usize) else {
        return Err(Error::params(format!(
            "key expansion {expansion_index} out of range for {} expansions",
            constants.len()
        )));
    };
    let n = params.word_size() as usize;
    let m = params.key_words();
    let target = layout.key_words[(expansion_index % m) as usize];
    for tap in params.key_taps() {
        let source = layout.key_words[((expansion_index + tap.word) % m) as usize];
        let r = tap.rot_right as usize;
        for j in 0..n {
            c.cx(source.at((j + n - r) % n), target.at(j))?;
        }
    }
    for j in 0..n {
        if constant.bit(j) {
            c.x(target.at(j))?;
        }
    }
    Ok(())
}

/// Swap of the two halves with three CNOTs per bit.
pub fn emit_swap(c: &mut Circuit, a: QubitRange, b: QubitRange) -> Result<()> {
    for i in 0..a.len() {
        c.cx(a.at(i), b.at(i))?;
        c.cx(b.at(i), a.at(i))?;
        c.cx(a.at(i), b.at(i))?;
    }
    Ok(())
}

/// The full cipher. After it runs, `left`/`right` hold the ciphertext and the
/// key registers hold the last `m` round keys.
pub fn emit_cipher(c: &mut Circuit, params: &CipherParams, layout: &SimonLayout) -> Result<()> {
    let expansions = params.rounds().saturating_sub(params.key_words());
    for j in 0..params.rounds() {
        emit_round(c, params, j, layout)?;
        if j < expansions {
            emit_key_expansion(c, params, j, layout)?;
        }
    }
    // With an odd round count the halves end up in each other's registers.
    if params.rounds() % 2 == 1 {
        emit_swap(c, layout.left, layout.right)?;
    }
    Ok(())
}

fn standalone(
    params: &CipherParams,
    emit: impl FnOnce(&mut Circuit, &SimonLayout) -> Result<()>,
) -> Result<SimonCircuit> {
    let mut circuit = Circuit::new();
    let layout = SimonLayout::declare(&mut circuit, params)?;
    emit(&mut circuit, &layout)?;
    Ok(SimonCircuit { circuit, layout })
}

pub fn round_circuit(params: &CipherParams, round_index: u32) -> Result<SimonCircuit> {
    standalone(params, |c, l| emit_round(c, params, round_index, l))
}

pub fn key_expansion_circuit(params: &CipherParams, expansion_index: u32) -> Result<SimonCircuit> {
    standalone(params, |c, l| emit_key_expansion(c, params, expansion_index, l))
}

pub fn cipher_circuit(params: &CipherParams) -> Result<SimonCircuit> {
    standalone(params, |c, l| emit_cipher(c, params, l))
}
