use crate::circuit::{Circuit, Gate, Qubit, QubitRange};
use crate::error::{Error, Result};
use crate::word::BitWord;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BasisState {
    bits: Vec<bool>,
}

impl BasisState {
    pub fn zeros(width: usize) -> Self {
        BasisState {
            bits: vec![false; width],
        }
    }

    pub fn for_circuit(c: &Circuit) -> Self {
        BasisState::zeros(c.width())
    }

    pub fn width(&self) -> usize {
        self.bits.len()
    }

    pub fn get(&self, q: Qubit) -> bool {
        self.bits[q.index()]
    }

    pub fn set(&mut self, q: Qubit, value: bool) {
        self.bits[q.index()] = value;
    }

    pub fn flip(&mut self, q: Qubit) {
        self.bits[q.index()] ^= true;
    }

    pub fn set_bits(&mut self, range: QubitRange, bits: &[bool]) {
        assert_eq!(range.len(), bits.len(), "bit count does not match range");
        for (q, &b) in range.iter().zip(bits) {
            self.set(q, b);
        }
    }

    pub fn bits_of(&self, range: QubitRange) -> Vec<bool> {
        range.iter().map(|q| self.get(q)).collect()
    }

    pub fn set_word(&mut self, range: QubitRange, word: BitWord) {
        self.set_bits(range, &word.bits());
    }

    pub fn word(&self, range: QubitRange) -> BitWord {
        BitWord::from_bits(&self.bits_of(range)).expect("range fits a word")
    }

    /// Little-endian index: qubit `q` is bit `q`. Requires width <= 64.
    pub fn index(&self) -> u64 {
        assert!(self.width() <= 64, "basis index needs width <= 64");
        self.bits
            .iter()
            .enumerate()
            .fold(0u64, |acc, (q, &b)| acc | ((b as u64) << q))
    }

    pub fn from_index(index: u64, width: usize) -> Self {
        BasisState {
            bits: (0..width).map(|q| (index >> q) & 1 == 1).collect(),
        }
    }

    pub fn apply(&mut self, gate: &Gate) -> Result<()> {
        match gate {
            Gate::X(q) => self.flip(*q),
            Gate::Cnot { control, target } => {
                if self.get(*control) {
                    self.flip(*target);
                }
            }
            Gate::Toffoli { controls, target } => {
                if self.get(controls[0]) && self.get(controls[1]) {
                    self.flip(*target);
                }
            }
            Gate::Mcx { controls, target } => {
                if controls.iter().all(|&c| self.get(c)) {
                    self.flip(*target);
                }
            }
            Gate::H(_) => return Err(Error::UnsupportedGate("h")),
            Gate::Mcz { .. } => return Err(Error::UnsupportedGate("mcz")),
        }
        Ok(())
    }
}

/// Classical evaluation of a reversible circuit.
pub fn run_basis(c: &Circuit, input: &BasisState) -> Result<BasisState> {
    if input.width() != c.width() {
        return Err(Error::params(format!(
            "basis state has {} qubits, circuit has {}",
            input.width(),
            c.width()
        )));
    }
    let mut state = input.clone();
    for g in c.gates() {
        state.apply(g)?;
    }
    Ok(state)
}
