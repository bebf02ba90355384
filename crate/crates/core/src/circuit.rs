//! Gate-level IR for reversible and Grover circuits.
//!
//! Registers are declared by name and occupy contiguous global qubit
//! indices in declaration order. Gates address global [`Qubit`]s; the
//! [`QubitRef`] form (register name + offset) is resolved against the
//! circuit that owns the registers.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Range};

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Qubit(pub u32);

impl Qubit {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct QubitRef {
    pub register: String,
    pub index: usize,
}

impl QubitRef {
    pub fn new(register: impl Into<String>, index: usize) -> Self {
        QubitRef {
            register: register.into(),
            index,
        }
    }
}

impl fmt::Display for QubitRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.register, self.index)
    }
}

/// A contiguous run of qubits, usually a register or a slice of one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct QubitRange {
    start: u32,
    len: u32,
}

impl QubitRange {
    pub fn new(start: u32, len: u32) -> Self {
        QubitRange { start, len }
    }

    pub fn len(self) -> usize {
        self.len as usize
    }

    pub fn is_empty(self) -> bool {
        self.len == 0
    }

    pub fn at(self, i: usize) -> Qubit {
        assert!(i < self.len as usize, "offset {i} outside range of {}", self.len);
        Qubit(self.start + i as u32)
    }

    pub fn slice(self, offset: usize, len: usize) -> QubitRange {
        assert!(offset + len <= self.len as usize, "slice outside range");
        QubitRange::new(self.start + offset as u32, len as u32)
    }

    pub fn iter(self) -> impl Iterator<Item = Qubit> {
        (self.start..self.start + self.len).map(Qubit)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Register {
    pub name: String,
    pub range: QubitRange,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Gate {
    X(Qubit),
    H(Qubit),
    Cnot { control: Qubit, target: Qubit },
    Toffoli { controls: [Qubit; 2], target: Qubit },
    Mcx { controls: Vec<Qubit>, target: Qubit },
    Mcz { controls: Vec<Qubit>, target: Qubit },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum GateKind {
    X,
    H,
    Cnot,
    Toffoli,
    Mcx(usize),
    Mcz(usize),
}

impl Gate {
    pub fn kind(&self) -> GateKind {
        match self {
            Gate::X(_) => GateKind::X,
            Gate::H(_) => GateKind::H,
            Gate::Cnot { .. } => GateKind::Cnot,
            Gate::Toffoli { .. } => GateKind::Toffoli,
            Gate::Mcx { controls, .. } => GateKind::Mcx(controls.len()),
            Gate::Mcz { controls, .. } => GateKind::Mcz(controls.len()),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Gate::X(_) => "x",
            Gate::H(_) => "h",
            Gate::Cnot { .. } => "cx",
            Gate::Toffoli { .. } => "ccx",
            Gate::Mcx { .. } => "mcx",
            Gate::Mcz { .. } => "mcz",
        }
    }

    pub fn target(&self) -> Qubit {
        match *self {
            Gate::X(q) | Gate::H(q) => q,
            Gate::Cnot { target, .. }
            | Gate::Toffoli { target, .. }
            | Gate::Mcx { target, .. }
            | Gate::Mcz { target, .. } => target,
        }
    }

    pub fn controls(&self) -> &[Qubit] {
        match self {
            Gate::X(_) | Gate::H(_) => &[],
            Gate::Cnot { control, .. } => std::slice::from_ref(control),
            Gate::Toffoli { controls, .. } => controls,
            Gate::Mcx { controls, .. } | Gate::Mcz { controls, .. } => controls,
        }
    }

    pub fn qubits(&self) -> impl Iterator<Item = Qubit> + '_ {
        self.controls()
            .iter()
            .copied()
            .chain(std::iter::once(self.target()))
    }

    /// Multi-controlled gates with at least three controls.
    pub fn is_wide(&self) -> bool {
        matches!(self, Gate::Mcx { controls, .. } | Gate::Mcz { controls, .. } if controls.len() >= 3)
    }

    fn map_qubits(&self, f: impl Fn(Qubit) -> Qubit) -> Gate {
        match self {
            Gate::X(q) => Gate::X(f(*q)),
            Gate::H(q) => Gate::H(f(*q)),
            Gate::Cnot { control, target } => Gate::Cnot {
                control: f(*control),
                target: f(*target),
            },
            Gate::Toffoli { controls, target } => Gate::Toffoli {
                controls: [f(controls[0]), f(controls[1])],
                target: f(*target),
            },
            Gate::Mcx { controls, target } => Gate::Mcx {
                controls: controls.iter().map(|&q| f(q)).collect(),
                target: f(*target),
            },
            Gate::Mcz { controls, target } => Gate::Mcz {
                controls: controls.iter().map(|&q| f(q)).collect(),
                target: f(*target),
            },
        }
    }
}

fn valid_register_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_lowercase())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Circuit {
    registers: Vec<Register>,
    gates: Vec<Gate>,
    width: u32,
}

impl Circuit {
    pub fn new() -> Self {
        Circuit::default()
    }

    /// Declares a register. Names follow OpenQASM 2 identifier rules.
    pub fn add_register(&mut self, name: &str, size: usize) -> Result<QubitRange> {
        if !valid_register_name(name) {
            return Err(Error::InvalidRegisterName(name.to_string()));
        }
        if let Some(r) = self.registers.iter().find(|r| r.name == name) {
            return Err(Error::RegisterConflict {
                name: name.to_string(),
                expected: r.range.len(),
                found: size,
            });
        }
        if size == 0 {
            return Err(Error::InvalidRegisterName(format!("{name} (empty)")));
        }
        let range = QubitRange::new(self.width, size as u32);
        self.width += size as u32;
        self.registers.push(Register {
            name: name.to_string(),
            range,
        });
        Ok(range)
    }

    pub fn registers(&self) -> &[Register] {
        &self.registers
    }

    pub fn register(&self, name: &str) -> Option<QubitRange> {
        self.registers
            .iter()
            .find(|r| r.name == name)
            .map(|r| r.range)
    }

    pub fn require_register(&self, name: &str) -> Result<QubitRange> {
        self.register(name)
            .ok_or_else(|| Error::UnknownRegister(name.to_string()))
    }

    pub fn resolve(&self, q: &QubitRef) -> Result<Qubit> {
        let range = self.require_register(&q.register)?;
        if q.index >= range.len() {
            return Err(Error::QubitOutOfRange {
                register: q.register.clone(),
                index: q.index,
                size: range.len(),
            });
        }
        Ok(range.at(q.index))
    }

    pub fn qubit_ref(&self, q: Qubit) -> Option<QubitRef> {
        self.registers.iter().find_map(|r| {
            let start = r.range.at(0).0;
            (q.0 >= start && q.0 < start + r.range.len() as u32)
                .then(|| QubitRef::new(r.name.clone(), (q.0 - start) as usize))
        })
    }

    pub fn width(&self) -> usize {
        self.width as usize
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    pub fn push(&mut self, gate: Gate) -> Result<()> {
        let mut seen = Vec::with_capacity(4);
        for q in gate.qubits() {
            if q.0 >= self.width {
                return Err(Error::InvalidGate(format!(
                    "{} references undeclared qubit {}",
                    gate.name(),
                    q.0
                )));
            }
            if seen.contains(&q) {
                return Err(Error::InvalidGate(format!(
                    "{} uses qubit {} twice",
                    gate.name(),
                    q.0
                )));
            }
            seen.push(q);
        }
        if let Gate::Mcx { controls, .. } | Gate::Mcz { controls, .. } = &gate {
            if controls.is_empty() {
                return Err(Error::InvalidGate(format!(
                    "{} needs at least one control",
                    gate.name()
                )));
            }
        }
        self.gates.push(gate);
        Ok(())
    }

    pub fn x(&mut self, q: Qubit) -> Result<()> {
        self.push(Gate::X(q))
    }

    pub fn h(&mut self, q: Qubit) -> Result<()> {
        self.push(Gate::H(q))
    }

    pub fn cx(&mut self, control: Qubit, target: Qubit) -> Result<()> {
        self.push(Gate::Cnot { control, target })
    }

    pub fn ccx(&mut self, c0: Qubit, c1: Qubit, target: Qubit) -> Result<()> {
        self.push(Gate::Toffoli {
            controls: [c0, c1],
            target,
        })
    }

    pub fn mcx(&mut self, controls: Vec<Qubit>, target: Qubit) -> Result<()> {
        self.push(Gate::Mcx { controls, target })
    }

    pub fn mcz(&mut self, controls: Vec<Qubit>, target: Qubit) -> Result<()> {
        self.push(Gate::Mcz { controls, target })
    }

    /// Appends the inverse of `self.gates()[range]`. Every gate in the set is
    /// self-inverse, so this is the slice in reverse order.
    pub fn push_inverse_of(&mut self, range: Range<usize>) {
        let inverse: Vec<Gate> = self.gates[range].iter().rev().cloned().collect();
        self.gates.extend(inverse);
    }

    pub fn inverse(&self) -> Circuit {
        Circuit {
            registers: self.registers.clone(),
            gates: self.gates.iter().rev().cloned().collect(),
            width: self.width,
        }
    }

    /// A copy keeping only the gates for which `keep` holds.
    pub fn filtered(&self, keep: impl Fn(&Gate) -> bool) -> Circuit {
        Circuit {
            registers: self.registers.clone(),
            gates: self.gates.iter().filter(|g| keep(g)).cloned().collect(),
            width: self.width,
        }
    }

    pub fn census(&self) -> GateCensus {
        let mut census = GateCensus::default();
        for g in &self.gates {
            census.record(g.kind());
        }
        census
    }

    pub fn depth(&self, granularity: Granularity) -> usize {
        schedule(self, granularity).depth
    }

    pub fn t_depth(&self) -> usize {
        schedule(self, Granularity::Lowered).t_depth
    }

    pub fn depth_report(&self) -> DepthReport {
        let lowered = schedule(self, Granularity::Lowered);
        DepthReport {
            toffoli_granularity: schedule(self, Granularity::Toffoli).depth,
            lowered: lowered.depth,
            t_depth: lowered.t_depth,
        }
    }

    /// Replaces every MCX/MCZ by X, H, CNOT and Toffoli gates. Controls
    /// beyond two use a Toffoli ladder through a clean ancilla register
    /// `anc` of size `max(controls) - 2`; the ladder is uncomputed so the
    /// ancillas return to zero.
    pub fn lower_multi_controlled(&self) -> Result<Circuit> {
        let needed = self
            .gates
            .iter()
            .filter(|g| g.is_wide())
            .map(|g| g.controls().len() - 2)
            .max()
            .unwrap_or(0);
        let mut out = Circuit {
            registers: self.registers.clone(),
            gates: Vec::with_capacity(self.gates.len()),
            width: self.width,
        };
        let anc = if needed > 0 {
            let mut name = "anc".to_string();
            let mut suffix = 0;
            while out.register(&name).is_some() {
                suffix += 1;
                name = format!("anc_{suffix}");
            }
            Some(out.add_register(&name, needed)?)
        } else {
            None
        };
        for g in &self.gates {
            match g {
                Gate::Mcx { controls, target } => lower_mcx(&mut out, controls, *target, anc)?,
                Gate::Mcz { controls, target } => {
                    out.h(*target)?;
                    lower_mcx(&mut out, controls, *target, anc)?;
                    out.h(*target)?;
                }
                other => out.push(other.clone())?,
            }
        }
        Ok(out)
    }
}

fn lower_mcx(out: &mut Circuit, controls: &[Qubit], target: Qubit, anc: Option<QubitRange>) -> Result<()> {
    match controls {
        [c] => out.cx(*c, target),
        [a, b] => out.ccx(*a, *b, target),
        _ => {
            let anc = anc.expect("ancilla register sized for every wide gate");
            let c = controls.len();
            let start = out.len();
            out.ccx(controls[0], controls[1], anc.at(0))?;
            for (i, &ctl) in controls.iter().enumerate().take(c - 1).skip(2) {
                out.ccx(ctl, anc.at(i - 2), anc.at(i - 1))?;
            }
            let compute = start..out.len();
            out.ccx(controls[c - 1], anc.at(c - 3), target)?;
            out.push_inverse_of(compute);
            Ok(())
        }
    }
}

/// Sequential composition. Registers are matched by name; registers that
/// exist only in `b` are appended after those of `a`.
pub fn compose(a: &Circuit, b: &Circuit) -> Result<Circuit> {
    let mut out = a.clone();
    let mut remap = vec![0u32; b.width()];
    for reg in &b.registers {
        let range = match out.register(&reg.name) {
            Some(existing) if existing.len() != reg.range.len() => {
                return Err(Error::RegisterConflict {
                    name: reg.name.clone(),
                    expected: existing.len(),
                    found: reg.range.len(),
                })
            }
            Some(existing) => existing,
            None => out.add_register(&reg.name, reg.range.len())?,
        };
        for (i, q) in reg.range.iter().enumerate() {
            remap[q.index()] = range.at(i).0;
        }
    }
    out.gates.reserve(b.gates.len());
    for g in &b.gates {
        out.gates.push(g.map_qubits(|q| Qubit(remap[q.index()])));
    }
    Ok(out)
}

/// Per-kind gate counts.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct GateCensus {
    pub x: usize,
    pub h: usize,
    pub cnot: usize,
    pub toffoli: usize,
    /// MCX count keyed by control count.
    pub mcx: BTreeMap<usize, usize>,
    /// MCZ count keyed by control count.
    pub mcz: BTreeMap<usize, usize>,
}

impl GateCensus {
    pub fn record(&mut self, kind: GateKind) {
        match kind {
            GateKind::X => self.x += 1,
            GateKind::H => self.h += 1,
            GateKind::Cnot => self.cnot += 1,
            GateKind::Toffoli => self.toffoli += 1,
            GateKind::Mcx(c) => *self.mcx.entry(c).or_default() += 1,
            GateKind::Mcz(c) => *self.mcz.entry(c).or_default() += 1,
        }
    }

    pub fn total(&self) -> usize {
        self.x
            + self.h
            + self.cnot
            + self.toffoli
            + self.mcx.values().sum::<usize>()
            + self.mcz.values().sum::<usize>()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("census serializes")
    }
}

impl AddAssign<&GateCensus> for GateCensus {
    fn add_assign(&mut self, rhs: &GateCensus) {
        self.x += rhs.x;
        self.h += rhs.h;
        self.cnot += rhs.cnot;
        self.toffoli += rhs.toffoli;
        for (&k, &v) in &rhs.mcx {
            *self.mcx.entry(k).or_default() += v;
        }
        for (&k, &v) in &rhs.mcz {
            *self.mcz.entry(k).or_default() += v;
        }
    }
}

impl Add for GateCensus {
    type Output = GateCensus;

    fn add(mut self, rhs: GateCensus) -> GateCensus {
        self += &rhs;
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Granularity {
    /// Every gate is one layer.
    Toffoli,
    /// Clifford+T: a Toffoli is 8 layers (T-depth 4); wider gates follow
    /// their Toffoli-ladder lowering.
    Lowered,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DepthReport {
    pub toffoli_granularity: usize,
    pub lowered: usize,
    pub t_depth: usize,
}

struct Schedule {
    depth: usize,
    t_depth: usize,
}

/// (depth, t-depth) contributed by one gate at the given granularity.
fn gate_cost(gate: &Gate, granularity: Granularity) -> (usize, usize) {
    if granularity == Granularity::Toffoli {
        return (1, 0);
    }
    let toffolis = |c: usize| match c {
        1 => 0,
        2 => 1,
        c => 2 * c - 3,
    };
    match gate {
        Gate::X(_) | Gate::H(_) | Gate::Cnot { .. } => (1, 0),
        Gate::Toffoli { .. } => (8, 4),
        Gate::Mcx { controls, .. } => match toffolis(controls.len()) {
            0 => (1, 0),
            t => (8 * t, 4 * t),
        },
        Gate::Mcz { controls, .. } => match toffolis(controls.len()) {
            0 => (3, 0),
            t => (8 * t + 2, 4 * t),
        },
    }
}

/// As-soon-as-possible layering; two gates conflict iff they share a qubit.
fn schedule(c: &Circuit, granularity: Granularity) -> Schedule {
    let mut level = vec![0usize; c.width()];
    let mut t_level = vec![0usize; c.width()];
    for g in &c.gates {
        let (d, t) = gate_cost(g, granularity);
        let start = g.qubits().map(|q| level[q.index()]).max().unwrap_or(0);
        let t_start = g.qubits().map(|q| t_level[q.index()]).max().unwrap_or(0);
        for q in g.qubits() {
            level[q.index()] = start + d;
            t_level[q.index()] = t_start + t;
        }
    }
    Schedule {
        depth: level.into_iter().max().unwrap_or(0),
        t_depth: t_level.into_iter().max().unwrap_or(0),
    }
}
