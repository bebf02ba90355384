use std::fmt::Write;

use rand::distributions::{Distribution, WeightedIndex};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::statevector::StateVector;
use crate::circuit::QubitRange;

const EXACT_FLOOR: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HistogramEntry {
    /// Outcome in register order (first measured qubit leftmost).
    pub outcome: String,
    /// The same outcome with the last measured qubit leftmost.
    pub reversed: String,
    pub count: u64,
    pub probability: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Histogram {
    /// Zero for an exact distribution.
    pub shots: u64,
    pub entries: Vec<HistogramEntry>,
}

/// Samples `shots` measurements of `registers` (concatenated in order).
/// `shots == 0` returns the exact marginal probabilities instead.
pub fn measure_histogram(
    sv: &StateVector,
    registers: &[QubitRange],
    shots: u64,
    seed: u64,
) -> Histogram {
    let bits: usize = registers.iter().map(|r| r.len()).sum();
    let probs = sv.marginal_of(registers);
    let label = |outcome: usize| format!("{outcome:0bits$b}");
    let entry = |outcome: usize, count: u64, probability: f64| {
        let outcome = label(outcome);
        HistogramEntry {
            reversed: outcome.chars().rev().collect(),
            outcome,
            count,
            probability,
        }
    };

    if shots == 0 {
        let entries = probs
            .iter()
            .enumerate()
            .filter(|(_, &p)| p > EXACT_FLOOR)
            .map(|(i, &p)| entry(i, 0, p))
            .collect();
        return Histogram { shots, entries };
    }

    let mut counts = vec![0u64; probs.len()];
    let dist = WeightedIndex::new(&probs).expect("normalized state has positive weight");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..shots {
        counts[dist.sample(&mut rng)] += 1;
    }
    let entries = counts
        .iter()
        .enumerate()
        .filter(|(_, &c)| c > 0)
        .map(|(i, &c)| entry(i, c, c as f64 / shots as f64))
        .collect();
    Histogram { shots, entries }
}

impl Histogram {
    /// The `k` most likely outcomes, ties broken by outcome label.
    pub fn top(&self, k: usize) -> Vec<&HistogramEntry> {
        let mut sorted: Vec<&HistogramEntry> = self.entries.iter().collect();
        sorted.sort_by(|a, b| {
            b.probability
                .total_cmp(&a.probability)
                .then_with(|| a.outcome.cmp(&b.outcome))
        });
        sorted.truncate(k);
        sorted
    }

    pub fn probability_of(&self, outcome: &str) -> f64 {
        self.entries
            .iter()
            .find(|e| e.outcome == outcome)
            .map_or(0.0, |e| e.probability)
    }

    /// `{ outcome: count }`, or `{ outcome: probability }` when exact.
    pub fn to_json(&self) -> String {
        let map: serde_json::Map<String, serde_json::Value> = self
            .entries
            .iter()
            .map(|e| {
                let v = if self.shots == 0 {
                    serde_json::json!(e.probability)
                } else {
                    serde_json::json!(e.count)
                };
                (e.outcome.clone(), v)
            })
            .collect();
        serde_json::to_string_pretty(&map).expect("histogram serializes")
    }

    pub fn ascii_chart(&self, width: usize) -> String {
        let max = self
            .entries
            .iter()
            .map(|e| e.probability)
            .fold(0.0, f64::max);
        let mut out = String::new();
        for e in &self.entries {
            let bar = if max > 0.0 {
                ((e.probability / max) * width as f64).round() as usize
            } else {
                0
            };
            let value = if self.shots == 0 {
                format!("{:.4}", e.probability)
            } else {
                e.count.to_string()
            };
            writeln!(
                out,
                "{} ({}) |{:<width$}| {}",
                e.outcome,
                e.reversed,
                "#".repeat(bar),
                value
            )
            .unwrap();
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::Circuit;
    use crate::sim::{run_statevector, BasisState, SimConfig};

    fn uniform2() -> (StateVector, QubitRange) {
        let mut c = Circuit::new();
        let q = c.add_register("q", 2).unwrap();
        c.h(q.at(0)).unwrap();
        c.h(q.at(1)).unwrap();
        let sv = run_statevector(&c, &BasisState::for_circuit(&c), &SimConfig::default()).unwrap();
        (sv, q)
    }

    #[test]
    fn exact_uniform() {
        let (sv, q) = uniform2();
        let h = measure_histogram(&sv, &[q], 0, 0);
        assert_eq!(h.entries.len(), 4);
        for e in &h.entries {
            assert!((e.probability - 0.25).abs() < 1e-12);
        }
    }

    #[test]
    fn seeded_sampling_is_reproducible() {
        let (sv, q) = uniform2();
        let a = measure_histogram(&sv, &[q], 1024, 7);
        let b = measure_histogram(&sv, &[q], 1024, 7);
        assert_eq!(a, b);
        assert_eq!(a.entries.iter().map(|e| e.count).sum::<u64>(), 1024);
        assert_eq!(a.to_json(), b.to_json());
    }

    #[test]
    fn labels_both_orders() {
        let mut c = Circuit::new();
        let q = c.add_register("q", 3).unwrap();
        c.x(q.at(0)).unwrap();
        let sv = run_statevector(&c, &BasisState::for_circuit(&c), &SimConfig::default()).unwrap();
        let h = measure_histogram(&sv, &[q], 0, 0);
        assert_eq!(h.entries[0].outcome, "100");
        assert_eq!(h.entries[0].reversed, "001");
        assert!(h.ascii_chart(10).starts_with("100 (001) |##########| 1.0000"));
    }
}
