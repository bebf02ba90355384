//! Grover key search over SIMON: oracle, diffusion and the iterated circuit.
//!
//! Register layout (declaration order, so qubit 0 is `key[0]`):
//! `key` (mn), `key_copy1 .. key_copy{r-1}` (mn each), `msg0 .. msg{r-1}`
//! (2n each, left word first), `target` (1).

use std::f64::consts::PI;

use serde::Serialize;

use crate::circuit::{Circuit, Qubit, QubitRange};
use crate::classical::{encrypt, CipherState};
use crate::error::{Error, Result};
use crate::params::CipherParams;
use crate::sim::{measure_histogram, run_basis, BasisState, Histogram, SimConfig, StateVector};
use crate::synth::{emit_cipher, SimonLayout};
use crate::word::{bits_to_string, BitWord};

/// Known plaintext and its ciphertext under the unknown key.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PlainCipherPair {
    pub plaintext: CipherState,
    pub ciphertext: CipherState,
}

impl PlainCipherPair {
    pub fn new(plaintext: CipherState, ciphertext: CipherState) -> Result<Self> {
        if plaintext.left.width() != ciphertext.left.width() {
            return Err(Error::params("plaintext and ciphertext widths differ"));
        }
        Ok(PlainCipherPair {
            plaintext,
            ciphertext,
        })
    }

    /// Encrypts `plaintext` under `key` to make a pair.
    pub fn from_key(params: &CipherParams, key: &[BitWord], plaintext: CipherState) -> Result<Self> {
        let ciphertext = encrypt(params, key, plaintext)?;
        PlainCipherPair::new(plaintext, ciphertext)
    }

    /// `hexplaintext hexciphertext`, each `2n` bits with the left word in
    /// the high half.
    pub fn parse_line(line: &str, word_size: u32) -> Result<Self> {
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [pt, ct] = fields.as_slice() else {
            return Err(Error::parse(format!(
                "pair line `{line}` needs a plaintext and a ciphertext"
            )));
        };
        PlainCipherPair::new(
            CipherState::from_hex(pt, word_size)?,
            CipherState::from_hex(ct, word_size)?,
        )
    }

    pub fn to_line(&self) -> String {
        format!("{} {}", self.plaintext.to_hex(), self.ciphertext.to_hex())
    }
}

/// Parses a pair file: one pair per line, blank lines and `#` comments
/// ignored.
pub fn parse_pairs(text: &str, word_size: u32) -> Result<Vec<PlainCipherPair>> {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
        .map(|l| PlainCipherPair::parse_line(l, word_size))
        .collect()
}

/// A random key and `count` random pairs encrypted under it.
pub fn random_pairs<R: rand::Rng + ?Sized>(
    params: &CipherParams,
    count: usize,
    rng: &mut R,
) -> Result<(Vec<BitWord>, Vec<PlainCipherPair>)> {
    let n = params.word_size();
    let key: Vec<BitWord> = (0..params.key_words()).map(|_| BitWord::random(rng, n)).collect();
    let pairs = (0..count)
        .map(|_| {
            let pt = CipherState::new(BitWord::random(rng, n), BitWord::random(rng, n))?;
            PlainCipherPair::from_key(params, &key, pt)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((key, pairs))
}

/// Pairs needed for a unique key: `floor(k / 2n) + 1`.
pub fn required_pairs(params: &CipherParams) -> u32 {
    params.key_bits() / params.block_bits() + 1
}

/// π/4 with 128 fractional bits.
const PI_OVER_4: u128 = 0xc90f_daa2_2168_c234_c4c6_628b_80dc_1cd1;
/// π·√2/4 with 127 fractional bits.
const PI_SQRT2_OVER_4: u128 = 0x8e2c_18d6_eb17_214e_df1f_285c_1f5f_5d03;

/// Exact `floor(π/4 · 2^{k/2})` for `k <= 256`.
pub fn grover_iterations(key_bits: u32) -> Option<u128> {
    if key_bits > 256 {
        return None;
    }
    let e = key_bits / 2;
    Some(if key_bits.is_multiple_of(2) {
        PI_OVER_4.checked_shr(128 - e).unwrap_or(0)
    } else {
        PI_SQRT2_OVER_4 >> (127 - e)
    })
}

/// `floor(π/4 · sqrt(2^k / s))` when `s` keys are marked.
pub fn iterations_for_marked(key_bits: u32, marked: u64) -> u64 {
    if marked <= 1 {
        return grover_iterations(key_bits).map_or(u64::MAX, |i| u64::try_from(i).unwrap_or(u64::MAX));
    }
    (PI / 4.0 * (2f64.powi(key_bits as i32) / marked as f64).sqrt()).floor() as u64
}

/// `sin²((2j+1)θ)` with `θ = asin(sqrt(s / 2^k))`.
pub fn success_probability(key_bits: u32, marked: u64, iterations: u64) -> f64 {
    let theta = (marked as f64 / 2f64.powi(key_bits as i32)).sqrt().asin();
    ((2 * iterations + 1) as f64 * theta).sin().powi(2)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroverPlan {
    params: CipherParams,
    pairs: Vec<PlainCipherPair>,
    iterations: u64,
}

impl GroverPlan {
    /// A plan with the flat `floor(π/4 · 2^{k/2})` iteration count.
    pub fn new(params: CipherParams, pairs: Vec<PlainCipherPair>) -> Result<Self> {
        if pairs.is_empty() {
            return Err(Error::params("a Grover plan needs at least one pair"));
        }
        let n = params.word_size();
        if pairs.iter().any(|p| p.plaintext.left.width() != n) {
            return Err(Error::params(format!("pairs must use {n}-bit words")));
        }
        let iterations = iterations_for_marked(params.key_bits(), 1);
        Ok(GroverPlan {
            params,
            pairs,
            iterations,
        })
    }

    pub fn with_iterations(mut self, iterations: u64) -> Self {
        self.iterations = iterations;
        self
    }

    pub fn with_marked_count(mut self, marked: u64) -> Self {
        self.iterations = iterations_for_marked(self.params.key_bits(), marked);
        self
    }

    pub fn params(&self) -> &CipherParams {
        &self.params
    }

    pub fn pairs(&self) -> &[PlainCipherPair] {
        &self.pairs
    }

    pub fn iterations(&self) -> u64 {
        self.iterations
    }

    pub fn instances(&self) -> usize {
        self.pairs.len()
    }

    /// Qubits of the circuit as built: the key copies are real qubits.
    pub fn qubit_count(&self) -> usize {
        let r = self.instances();
        let k = self.params.key_bits() as usize;
        let n = self.params.word_size() as usize;
        r * k + 2 * n * r + 1
    }

    /// `2nr + k + 1`, the count that leaves the key copies out.
    pub fn tabulated_qubit_count(&self) -> usize {
        let r = self.instances();
        let k = self.params.key_bits() as usize;
        let n = self.params.word_size() as usize;
        2 * n * r + k + 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroverLayout {
    pub key: QubitRange,
    pub key_copies: Vec<QubitRange>,
    pub messages: Vec<QubitRange>,
    pub target: Qubit,
}

impl GroverLayout {
    pub fn declare(c: &mut Circuit, plan: &GroverPlan) -> Result<Self> {
        let k = plan.params.key_bits() as usize;
        let block = plan.params.block_bits() as usize;
        let key = c.add_register("key", k)?;
        let key_copies = (1..plan.instances())
            .map(|i| c.add_register(&format!("key_copy{i}"), k))
            .collect::<Result<Vec<_>>>()?;
        let messages = (0..plan.instances())
            .map(|i| c.add_register(&format!("msg{i}"), block))
            .collect::<Result<Vec<_>>>()?;
        let target = c.add_register("target", 1)?.at(0);
        Ok(GroverLayout {
            key,
            key_copies,
            messages,
            target,
        })
    }

    pub fn instance_key(&self, i: usize) -> QubitRange {
        if i == 0 {
            self.key
        } else {
            self.key_copies[i - 1]
        }
    }

    pub fn instance(&self, params: &CipherParams, i: usize) -> Result<SimonLayout> {
        SimonLayout::over_key_register(params, self.instance_key(i), self.messages[i])
    }
}

#[derive(Debug, Clone)]
pub struct GroverCircuit {
    pub circuit: Circuit,
    pub layout: GroverLayout,
}

/// Key fan-out, one cipher per pair, comparator onto `target`, then the
/// exact mirror image of the first two steps.
pub fn emit_oracle(c: &mut Circuit, plan: &GroverPlan, layout: &GroverLayout) -> Result<()> {
    let params = &plan.params;
    let start = c.len();
    for copy in &layout.key_copies {
        for (src, dst) in layout.key.iter().zip(copy.iter()) {
            c.cx(src, dst)?;
        }
    }
    for i in 0..plan.instances() {
        emit_cipher(c, params, &layout.instance(params, i)?)?;
    }
    let compute = start..c.len();

    let mut zero_bits = Vec::new();
    let mut controls = Vec::new();
    for (msg, pair) in layout.messages.iter().zip(&plan.pairs) {
        for (q, bit) in msg.iter().zip(pair.ciphertext.bits()) {
            if !bit {
                zero_bits.push(q);
            }
            controls.push(q);
        }
    }
    for &q in &zero_bits {
        c.x(q)?;
    }
    c.mcx(controls, layout.target)?;
    for &q in &zero_bits {
        c.x(q)?;
    }

    c.push_inverse_of(compute);
    Ok(())
}

pub fn oracle_circuit(plan: &GroverPlan) -> Result<GroverCircuit> {
    let mut circuit = Circuit::new();
    let layout = GroverLayout::declare(&mut circuit, plan)?;
    emit_oracle(&mut circuit, plan, &layout)?;
    Ok(GroverCircuit { circuit, layout })
}

/// Reflection about the uniform superposition:
/// H, X on every qubit, a controlled Z across the register, X, H.
pub fn emit_diffusion(c: &mut Circuit, key: QubitRange) -> Result<()> {
    if key.len() < 2 {
        return Err(Error::params("diffusion needs at least two qubits"));
    }
    for q in key.iter() {
        c.h(q)?;
    }
    for q in key.iter() {
        c.x(q)?;
    }
    let last = key.len() - 1;
    c.mcz(key.slice(0, last).iter().collect(), key.at(last))?;
    for q in key.iter() {
        c.x(q)?;
    }
    for q in key.iter() {
        c.h(q)?;
    }
    Ok(())
}

pub fn diffusion_circuit(key_bits: usize) -> Result<Circuit> {
    let mut c = Circuit::new();
    if key_bits < 2 {
        return Err(Error::params("diffusion needs at least two qubits"));
    }
    let key = c.add_register("key", key_bits)?;
    emit_diffusion(&mut c, key)?;
    Ok(c)
}

/// Target into |−⟩, plaintexts loaded, key register into uniform
/// superposition.
pub fn emit_preamble(c: &mut Circuit, plan: &GroverPlan, layout: &GroverLayout) -> Result<()> {
    c.x(layout.target)?;
    c.h(layout.target)?;
    for (msg, pair) in layout.messages.iter().zip(&plan.pairs) {
        for (q, bit) in msg.iter().zip(pair.plaintext.bits()) {
            if bit {
                c.x(q)?;
            }
        }
    }
    for q in layout.key.iter() {
        c.h(q)?;
    }
    Ok(())
}

pub fn emit_iteration(c: &mut Circuit, plan: &GroverPlan, layout: &GroverLayout) -> Result<()> {
    emit_oracle(c, plan, layout)?;
    emit_diffusion(c, layout.key)
}

/// Largest Grover circuit [`grover_circuit`] will materialize.
pub const MAX_CIRCUIT_GATES: u64 = 50_000_000;

pub fn grover_circuit(plan: &GroverPlan) -> Result<GroverCircuit> {
    let mut circuit = Circuit::new();
    let layout = GroverLayout::declare(&mut circuit, plan)?;
    emit_preamble(&mut circuit, plan, &layout)?;
    let mut step = Circuit::new();
    GroverLayout::declare(&mut step, plan)?;
    emit_iteration(&mut step, plan, &layout)?;
    let total = (step.len() as u64).saturating_mul(plan.iterations);
    if total > MAX_CIRCUIT_GATES {
        return Err(Error::params(format!(
            "{} iterations of {} gates exceed the {MAX_CIRCUIT_GATES}-gate limit; pass fewer iterations",
            plan.iterations,
            step.len()
        )));
    }
    for _ in 0..plan.iterations {
        for g in step.gates() {
            circuit.push(g.clone())?;
        }
    }
    Ok(GroverCircuit { circuit, layout })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleTruthTable {
    /// Keys (register order bit strings) that flip the target.
    pub marked: Vec<String>,
    /// Whether every run left key, copies and messages as they started.
    pub restores_inputs: bool,
}

pub const MAX_EXHAUSTIVE_KEY_BITS: u32 = 20;

/// Runs the oracle on every basis key with the plaintexts loaded and the
/// target at |0⟩.
pub fn oracle_truth_table(plan: &GroverPlan) -> Result<OracleTruthTable> {
    let k = plan.params.key_bits();
    if k > MAX_EXHAUSTIVE_KEY_BITS {
        return Err(Error::params(format!(
            "exhaustive oracle check limited to {MAX_EXHAUSTIVE_KEY_BITS} key bits"
        )));
    }
    let oracle = oracle_circuit(plan)?;
    let layout = &oracle.layout;
    let mut marked = Vec::new();
    let mut restores_inputs = true;
    for key_index in 0..(1u64 << k) {
        let key_bits: Vec<bool> = (0..k).map(|i| (key_index >> (k - 1 - i)) & 1 == 1).collect();
        let mut input = BasisState::for_circuit(&oracle.circuit);
        input.set_bits(layout.key, &key_bits);
        for (msg, pair) in layout.messages.iter().zip(&plan.pairs) {
            input.set_bits(*msg, &pair.plaintext.bits());
        }
        let out = run_basis(&oracle.circuit, &input)?;
        if out.get(layout.target) {
            marked.push(bits_to_string(&key_bits));
        }
        let mut restored = out;
        restored.set(layout.target, false);
        restores_inputs &= restored == input;
    }
    Ok(OracleTruthTable {
        marked,
        restores_inputs,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct SearchOutcome {
    pub iterations: u64,
    pub histogram: Histogram,
    /// Exact probability of each key, indexed by the register read as a
    /// binary number.
    #[serde(skip)]
    pub key_distribution: Vec<f64>,
}

impl SearchOutcome {
    pub fn top_keys(&self, k: usize) -> Vec<String> {
        self.histogram
            .top(k)
            .into_iter()
            .map(|e| e.outcome.clone())
            .collect()
    }

    /// Exact probability of a key given in register order.
    pub fn key_probability(&self, key: &str) -> f64 {
        usize::from_str_radix(key, 2)
            .ok()
            .and_then(|i| self.key_distribution.get(i).copied())
            .unwrap_or(0.0)
    }
}

/// Simulates the full search on a statevector and measures the key register.
pub fn run_search(plan: &GroverPlan, config: &SimConfig, shots: u64, seed: u64) -> Result<SearchOutcome> {
    if plan.qubit_count() > config.cap {
        return Err(Error::WidthExceeded {
            width: plan.qubit_count(),
            cap: config.cap,
        });
    }
    let g = grover_circuit(plan)?;
    let sv = crate::sim::run_statevector(&g.circuit, &BasisState::for_circuit(&g.circuit), config)?;
    Ok(SearchOutcome {
        iterations: plan.iterations,
        histogram: measure_histogram(&sv, &[g.layout.key], shots, seed),
        key_distribution: sv.marginal_of(&[g.layout.key]),
    })
}

/// Total probability on `marked` keys after `0..=max_iterations` iterations,
/// from one incremental statevector run.
pub fn success_curve(
    plan: &GroverPlan,
    marked: &[String],
    max_iterations: u64,
    config: &SimConfig,
) -> Result<Vec<f64>> {
    if plan.qubit_count() > config.cap {
        return Err(Error::WidthExceeded {
            width: plan.qubit_count(),
            cap: config.cap,
        });
    }
    let mut prep = Circuit::new();
    let layout = GroverLayout::declare(&mut prep, plan)?;
    let mut step = prep.clone();
    emit_preamble(&mut prep, plan, &layout)?;
    emit_iteration(&mut step, plan, &layout)?;

    let indices: Vec<usize> = marked
        .iter()
        .map(|m| usize::from_str_radix(m, 2).map_err(|_| Error::parse(format!("bad key `{m}`"))))
        .collect::<Result<_>>()?;
    let mut sv: StateVector = crate::sim::run_statevector(&prep, &BasisState::for_circuit(&prep), config)?;
    let prob = |sv: &StateVector| {
        let dist = sv.marginal_of(&[layout.key]);
        indices.iter().map(|&i| dist[i]).sum::<f64>()
    };
    let mut curve = vec![prob(&sv)];
    for _ in 0..max_iterations {
        for g in step.gates() {
            sv.apply(g);
        }
        curve.push(prob(&sv));
    }
    Ok(curve)
}

/// Keys common to every candidate list.
pub fn intersect_candidates(runs: &[Vec<String>]) -> Vec<String> {
    let Some((first, rest)) = runs.split_first() else {
        return Vec::new();
    };
    let mut common: Vec<String> = first
        .iter()
        .filter(|k| rest.iter().all(|r| r.contains(k)))
        .cloned()
        .collect();
    common.sort();
    common.dedup();
    common
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::Variant;

    #[test]
    fn pairs_rule() {
        let r = |v: Variant| required_pairs(&v.params());
        assert_eq!(r(Variant::Simon32_64), 3);
        assert_eq!(r(Variant::Simon96_96), 2);
        assert_eq!(r(Variant::Simon128_256), 3);
        assert_eq!(r(Variant::Simon48_72), 2);
    }

    #[test]
    fn exact_iteration_counts() {
        // floor(π/4 · 2^{k/2}) computed at 400-bit precision
        assert_eq!(grover_iterations(0), Some(0));
        assert_eq!(grover_iterations(6), Some(6));
        assert_eq!(grover_iterations(32), Some(51471));
        assert_eq!(grover_iterations(63), Some(2385254614));
        assert_eq!(grover_iterations(64), Some(3373259426));
        assert_eq!(grover_iterations(72), Some(53972150818));
        assert_eq!(grover_iterations(96), Some(221069929750888));
        assert_eq!(grover_iterations(128), Some(14488038916154245684));
        assert_eq!(grover_iterations(144), Some(3708937962535486895300));
        assert_eq!(grover_iterations(192), Some(62225653328057771307630486155));
        assert_eq!(
            grover_iterations(255),
            Some(188979340268647791955539177790574124291)
        );
        assert_eq!(
            grover_iterations(256),
            Some(267257146016241686964920093290467695825)
        );
        assert_eq!(grover_iterations(257), None);
    }

    #[test]
    fn iterations_agree_with_float_for_small_keys() {
        for k in 0..40u32 {
            let f = (PI / 4.0 * 2f64.powf(k as f64 / 2.0)).floor() as u128;
            assert_eq!(grover_iterations(k), Some(f), "k = {k}");
        }
    }

    #[test]
    fn marked_count_shortens_search() {
        assert_eq!(iterations_for_marked(6, 1), 6);
        assert_eq!(iterations_for_marked(6, 2), 4);
    }

    #[test]
    fn pair_line_parsing() {
        let p = PlainCipherPair::parse_line("1d 1f", 3).unwrap();
        assert_eq!(p.plaintext.to_bit_string(), "011101");
        assert_eq!(p.ciphertext.to_bit_string(), "011111");
        assert_eq!(p.to_line(), "1d 1f");
        assert!(PlainCipherPair::parse_line("1d", 3).is_err());
        assert!(PlainCipherPair::parse_line("1d 1f 00", 3).is_err());
        assert!(PlainCipherPair::parse_line("1d ff", 3).is_err());
        let pairs = parse_pairs("# pairs\n1d 1f\n\n0d 33 # second\n", 3).unwrap();
        assert_eq!(pairs.len(), 2);
    }

    #[test]
    fn plan_validation() {
        let p = CipherParams::reduced_6bit();
        assert!(GroverPlan::new(p.clone(), vec![]).is_err());
        let wide = PlainCipherPair::parse_line("00 00", 4).unwrap();
        assert!(GroverPlan::new(p, vec![wide]).is_err());
    }

    #[test]
    fn diffusion_needs_two_qubits() {
        assert!(diffusion_circuit(1).is_err());
        assert!(diffusion_circuit(2).is_ok());
    }

    #[test]
    fn intersection() {
        let a = vec!["001110".to_string(), "111000".to_string()];
        let b = vec!["001001".to_string(), "001110".to_string()];
        assert_eq!(intersect_candidates(&[a, b]), vec!["001110".to_string()]);
        assert!(intersect_candidates(&[]).is_empty());
    }
}
