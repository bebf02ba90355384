//! OpenQASM 2.0 text export.

use std::fmt::Write;

use crate::circuit::{Circuit, Gate, Qubit};
use crate::error::Result;

/// Emits OpenQASM 2.0. Multi-controlled gates are expanded first (see
/// [`Circuit::lower_multi_controlled`]), so only `x`, `h`, `cx` and `ccx`
/// statements appear.
pub fn export_qasm(c: &Circuit) -> Result<String> {
    let lowered = c.lower_multi_controlled()?;
    let mut out = String::from("OPENQASM 2.0;\ninclude \"qelib1.inc\";\n");
    for reg in lowered.registers() {
        writeln!(out, "qreg {}[{}];", reg.name, reg.range.len()).unwrap();
    }
    let name = |q: Qubit| {
        let r = lowered.qubit_ref(q).expect("gate qubits are declared");
        format!("{}[{}]", r.register, r.index)
    };
    for g in lowered.gates() {
        match g {
            Gate::X(q) => writeln!(out, "x {};", name(*q)),
            Gate::H(q) => writeln!(out, "h {};", name(*q)),
            Gate::Cnot { control, target } => {
                writeln!(out, "cx {},{};", name(*control), name(*target))
            }
            Gate::Toffoli { controls, target } => writeln!(
                out,
                "ccx {},{},{};",
                name(controls[0]),
                name(controls[1]),
                name(*target)
            ),
            Gate::Mcx { .. } | Gate::Mcz { .. } => unreachable!("lowered above"),
        }
        .unwrap();
    }
    Ok(out)
}
