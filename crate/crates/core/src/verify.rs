//! Circuit-versus-classical equivalence checks on basis states.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::classical::{encrypt, CipherState};
use crate::error::Result;
use crate::params::CipherParams;
use crate::sim::{run_basis, BasisState};
use crate::synth::{cipher_circuit, SimonCircuit};
use crate::word::BitWord;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    /// `golden:<name>` or `random:<draw>`.
    pub case: String,
    pub key_hex: String,
    pub plaintext_hex: String,
    pub expected_hex: String,
    pub actual_hex: String,
    /// First differing bit, 0 being the leftmost bit of the left word.
    pub first_bit: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub cipher: String,
    pub cases: usize,
    pub mismatches: Vec<Mismatch>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Runs the circuit on one (key, plaintext) input and reads the block back.
pub fn simulate(built: &SimonCircuit, key: &[BitWord], pt: CipherState) -> Result<CipherState> {
    let layout = &built.layout;
    let mut input = BasisState::for_circuit(&built.circuit);
    for (range, word) in layout.key_words.iter().zip(key) {
        input.set_word(*range, *word);
    }
    input.set_word(layout.left, pt.left);
    input.set_word(layout.right, pt.right);
    let out = run_basis(&built.circuit, &input)?;
    CipherState::new(out.word(layout.left), out.word(layout.right))
}

fn golden_cases(params: &CipherParams) -> Result<Vec<(String, Vec<BitWord>, CipherState)>> {
    let mut cases = Vec::new();
    if let Some(v) = params.variant() {
        let tv = v.test_vector();
        cases.push((
            format!("golden:{v}"),
            params.key_from_hex(&tv.key)?,
            CipherState::from_hex(&tv.plaintext, params.word_size())?,
        ));
    } else if *params == CipherParams::reduced_6bit() {
        let w = |s: &str| BitWord::from_bit_str(s);
        cases.push((
            "golden:reduced-6bit".to_string(),
            vec![w("001")?, w("110")?],
            CipherState::new(w("011")?, w("101")?)?,
        ));
    }
    Ok(cases)
}

/// Checks `built` against classical encryption on the golden vectors for
/// `params` plus `draws` seeded random inputs.
pub fn verify_circuit(built: &SimonCircuit, params: &CipherParams, draws: usize, seed: u64) -> Result<VerifyReport> {
    let mut cases = golden_cases(params)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = params.word_size();
    for d in 0..draws {
        let key = (0..params.key_words()).map(|_| BitWord::random(&mut rng, n)).collect();
        let pt = CipherState::new(BitWord::random(&mut rng, n), BitWord::random(&mut rng, n))?;
        cases.push((format!("random:{d}"), key, pt));
    }

    let mut mismatches = Vec::new();
    for (case, key, pt) in &cases {
        let expected = encrypt(params, key, *pt)?;
        let actual = simulate(built, key, *pt)?;
        if actual != expected {
            let first_bit = expected
                .bits()
                .iter()
                .zip(actual.bits())
                .position(|(a, b)| *a != b)
                .unwrap_or(0);
            mismatches.push(Mismatch {
                case: case.clone(),
                key_hex: params.key_to_hex(key),
                plaintext_hex: pt.to_hex(),
                expected_hex: expected.to_hex(),
                actual_hex: actual.to_hex(),
                first_bit,
            });
        }
    }
    Ok(VerifyReport {
        cipher: params.name(),
        cases: cases.len(),
        mismatches,
    })
}

/// Synthesizes the cipher and verifies it.
pub fn verify(params: &CipherParams, draws: usize, seed: u64) -> Result<VerifyReport> {
    verify_circuit(&cipher_circuit(params)?, params, draws, seed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::Circuit;

    #[test]
    fn six_bit_golden_passes() {
        let p = CipherParams::reduced_6bit();
        let report = verify(&p, 10, 1).unwrap();
        assert!(report.passed());
        assert_eq!(report.cases, 11);
    }

    #[test]
    fn dropped_gate_is_caught() {
        let p = CipherParams::reduced_6bit();
        let mut built = cipher_circuit(&p).unwrap();
        let last = built.circuit.len() - 1;
        let full = built.circuit.clone();
        built.circuit = Circuit::new();
        for r in full.registers() {
            built.circuit.add_register(&r.name, r.range.len()).unwrap();
        }
        for g in &full.gates()[..last] {
            built.circuit.push(g.clone()).unwrap();
        }
        let report = verify_circuit(&built, &p, 0, 0).unwrap();
        assert!(!report.passed());
        // The dropped gate XORs the set last bit of k_3 = 001 into left[2].
        assert_eq!(report.mismatches[0].first_bit, 2);
    }
}
