use num_complex::Complex64;

use super::basis::BasisState;
use crate::circuit::{Circuit, Gate, Qubit, QubitRange};
use crate::error::{Error, Result};

pub const DEFAULT_CAP: usize = 24;
pub const CAP_ENV_VAR: &str = "SIMON_GROVER_SV_CAP";

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimConfig {
    /// Widest circuit the dense engine accepts.
    pub cap: usize,
    /// Check the L2 norm after every gate.
    pub check_norm: bool,
    pub norm_tolerance: f64,
}

impl Default for SimConfig {
    fn default() -> Self {
        SimConfig {
            cap: DEFAULT_CAP,
            check_norm: false,
            norm_tolerance: 1e-10,
        }
    }
}

impl SimConfig {
    /// Default config with the cap taken from `SIMON_GROVER_SV_CAP` when set.
    pub fn from_env() -> Self {
        let cap = std::env::var(CAP_ENV_VAR)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or(DEFAULT_CAP);
        SimConfig {
            cap,
            ..SimConfig::default()
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    amps: Vec<Complex64>,
    width: usize,
}

impl StateVector {
    pub fn from_basis(input: &BasisState, cap: usize) -> Result<Self> {
        let width = input.width();
        if width > cap || width >= 64 {
            return Err(Error::WidthExceeded { width, cap });
        }
        let mut amps = vec![Complex64::new(0.0, 0.0); 1usize << width];
        amps[input.index() as usize] = Complex64::new(1.0, 0.0);
        Ok(StateVector { amps, width })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn amplitude(&self, index: usize) -> Complex64 {
        self.amps[index]
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum()
    }

    pub fn apply(&mut self, gate: &Gate) {
        let bit = |q: Qubit| 1usize << q.index();
        match gate {
            Gate::X(q) => self.controlled_flip(0, bit(*q)),
            Gate::H(q) => {
                let t = bit(*q);
                let s = std::f64::consts::FRAC_1_SQRT_2;
                for i in 0..self.amps.len() {
                    if i & t == 0 {
                        let a = self.amps[i];
                        let b = self.amps[i | t];
                        self.amps[i] = (a + b) * s;
                        self.amps[i | t] = (a - b) * s;
                    }
                }
            }
            Gate::Cnot { control, target } => self.controlled_flip(bit(*control), bit(*target)),
            Gate::Toffoli { controls, target } => {
                self.controlled_flip(bit(controls[0]) | bit(controls[1]), bit(*target))
            }
            Gate::Mcx { controls, target } => {
                let mask = controls.iter().fold(0, |m, &c| m | bit(c));
                self.controlled_flip(mask, bit(*target))
            }
            Gate::Mcz { controls, target } => {
                let mask = controls.iter().fold(bit(*target), |m, &c| m | bit(c));
                for (i, a) in self.amps.iter_mut().enumerate() {
                    if i & mask == mask {
                        *a = -*a;
                    }
                }
            }
        }
    }

    fn controlled_flip(&mut self, controls: usize, target: usize) {
        for i in 0..self.amps.len() {
            if i & controls == controls && i & target == 0 {
                self.amps.swap(i, i | target);
            }
        }
    }

    /// Marginal distribution over `qubits`. Outcome bit `len - 1 - p`
    /// holds `qubits[p]`, so the outcome's binary form reads in qubit order.
    pub fn marginal(&self, qubits: &[Qubit]) -> Vec<f64> {
        let k = qubits.len();
        assert!(k < 32, "marginal over too many qubits");
        let mut probs = vec![0.0; 1 << k];
        for (i, a) in self.amps.iter().enumerate() {
            let p = a.norm_sqr();
            if p == 0.0 {
                continue;
            }
            let outcome = qubits
                .iter()
                .fold(0usize, |acc, q| (acc << 1) | ((i >> q.index()) & 1));
            probs[outcome] += p;
        }
        probs
    }

    pub fn marginal_of(&self, ranges: &[QubitRange]) -> Vec<f64> {
        let qubits: Vec<Qubit> = ranges.iter().flat_map(|r| r.iter()).collect();
        self.marginal(&qubits)
    }
}

/// Exact simulation from a basis input.
pub fn run_statevector(c: &Circuit, input: &BasisState, config: &SimConfig) -> Result<StateVector> {
    if input.width() != c.width() {
        return Err(Error::params(format!(
            "basis state has {} qubits, circuit has {}",
            input.width(),
            c.width()
        )));
    }
    let mut sv = StateVector::from_basis(input, config.cap)?;
    for (i, g) in c.gates().iter().enumerate() {
        sv.apply(g);
        if config.check_norm {
            let norm = sv.norm_sqr().sqrt();
            if (norm - 1.0).abs() > config.norm_tolerance {
                return Err(Error::NormDrift { gate: i, norm });
            }
        }
    }
    Ok(sv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sim::run_basis;

    #[test]
    fn hadamard_from_zero() {
        let mut c = Circuit::new();
        let q = c.add_register("q", 1).unwrap();
        c.h(q.at(0)).unwrap();
        let sv = run_statevector(&c, &BasisState::for_circuit(&c), &SimConfig::default()).unwrap();
        let s = std::f64::consts::FRAC_1_SQRT_2;
        assert!((sv.amplitude(0).re - s).abs() < 1e-15);
        assert!((sv.amplitude(1).re - s).abs() < 1e-15);
    }

    #[test]
    fn cap_is_enforced() {
        let mut c = Circuit::new();
        c.add_register("q", 5).unwrap();
        let cfg = SimConfig {
            cap: 4,
            ..SimConfig::default()
        };
        assert_eq!(
            run_statevector(&c, &BasisState::for_circuit(&c), &cfg),
            Err(Error::WidthExceeded { width: 5, cap: 4 })
        );
    }

    #[test]
    fn agrees_with_basis_tier() {
        let mut c = Circuit::new();
        let q = c.add_register("q", 5).unwrap();
        c.x(q.at(0)).unwrap();
        c.cx(q.at(0), q.at(3)).unwrap();
        c.ccx(q.at(0), q.at(3), q.at(1)).unwrap();
        c.mcx(vec![q.at(0), q.at(1), q.at(3)], q.at(4)).unwrap();
        for i in 0..32u64 {
            let input = BasisState::from_index(i, 5);
            let expect = run_basis(&c, &input).unwrap().index() as usize;
            let sv = run_statevector(&c, &input, &SimConfig::default()).unwrap();
            assert!((sv.amplitude(expect).re - 1.0).abs() < 1e-12);
            assert!((sv.norm_sqr() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn mcz_negates_all_ones() {
        let mut c = Circuit::new();
        let q = c.add_register("q", 2).unwrap();
        c.h(q.at(0)).unwrap();
        c.h(q.at(1)).unwrap();
        c.mcz(vec![q.at(0)], q.at(1)).unwrap();
        let sv = run_statevector(&c, &BasisState::for_circuit(&c), &SimConfig::default()).unwrap();
        assert!(sv.amplitude(3).re < 0.0);
        assert!(sv.amplitude(0).re > 0.0);
    }

    #[test]
    fn marginal_reads_in_qubit_order() {
        let mut c = Circuit::new();
        let q = c.add_register("q", 3).unwrap();
        c.x(q.at(0)).unwrap();
        let sv = run_statevector(&c, &BasisState::for_circuit(&c), &SimConfig::default()).unwrap();
        let probs = sv.marginal_of(&[q]);
        // q0 = 1 is the leftmost outcome bit: "100"
        assert!((probs[0b100] - 1.0).abs() < 1e-15);
    }
}
