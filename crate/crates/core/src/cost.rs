//! Clifford+T resource accounting for the cipher circuits, the Grover oracle
//! and the full exhaustive key search.
//!
//! Every quantity comes in two flavours: `PaperTable` values follow the
//! closed-form counting rules of the published tables, `AsBuilt` values are
//! read off the circuits this crate synthesizes.

use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Serialize, Serializer};

use crate::circuit::{Circuit, GateCensus, Granularity};
use crate::error::{Error, Result};
use crate::grover::{
    emit_diffusion, grover_iterations, oracle_circuit, random_pairs, required_pairs, GroverPlan,
};
use crate::params::{CipherParams, Variant};
use crate::synth::cipher_circuit;

/// Per Toffoli: 8 Clifford gates, 7 T gates, T-depth 4, depth 8.
pub const TOFFOLI_CLIFFORD: u64 = 8;
pub const TOFFOLI_T: u64 = 7;
pub const TOFFOLI_T_DEPTH: u64 = 4;
pub const TOFFOLI_DEPTH: u64 = 8;

/// Seed for the random pairs behind as-built oracle figures.
pub const ORACLE_SEED: u64 = 0x5130_4e00;

/// Depth window considered plausible for a quantum attack.
pub const NIST_DEPTH_LOG2: (f64, f64) = (40.0, 96.0);

/// `(clifford, t, t_depth, depth)` added by lowering `toffolis` Toffolis.
pub fn lower_toffoli_costs(toffolis: u64) -> (u64, u64, u64, u64) {
    (
        TOFFOLI_CLIFFORD * toffolis,
        TOFFOLI_T * toffolis,
        TOFFOLI_T_DEPTH * toffolis,
        TOFFOLI_DEPTH * toffolis,
    )
}

/// T gates of a `t`-controlled NOT, `32t - 84`.
pub fn mcx_t_count(controls: u64) -> Result<u64> {
    if controls < 3 {
        return Err(Error::Domain(format!("a {controls}-controlled NOT")));
    }
    Ok(32 * controls - 84)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    AsBuilt,
    PaperTable,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::AsBuilt => "as_built",
            Mode::PaperTable => "paper_table",
        })
    }
}

/// `mantissa · 2^exponent`, mantissa in `[1, 2)` (zero is `0 · 2^0`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BigCount {
    mantissa: f64,
    exponent: i64,
}

impl BigCount {
    pub const ZERO: BigCount = BigCount {
        mantissa: 0.0,
        exponent: 0,
    };

    fn normalized(mut mantissa: f64, mut exponent: i64) -> Self {
        if mantissa == 0.0 {
            return BigCount::ZERO;
        }
        while mantissa >= 2.0 {
            mantissa /= 2.0;
            exponent += 1;
        }
        while mantissa < 1.0 {
            mantissa *= 2.0;
            exponent -= 1;
        }
        BigCount { mantissa, exponent }
    }

    pub fn from_u128(value: u128) -> Self {
        if value == 0 {
            return BigCount::ZERO;
        }
        let exponent = 127 - value.leading_zeros() as i64;
        // Keep the top 64 bits so the conversion rounds only once.
        let shift = (exponent - 63).max(0) as u32;
        let top = (value >> shift) as u64;
        BigCount::normalized(top as f64 / 2f64.powi((exponent - shift as i64) as i32), exponent)
    }

    /// `mantissa · 2^exponent` with a fractional exponent, as printed in
    /// tables like `1.27 · 2^46.3`.
    pub fn from_scaled(mantissa: f64, exponent: f64) -> Self {
        let log2 = mantissa.log2() + exponent;
        let e = log2.floor();
        BigCount::normalized(2f64.powf(log2 - e), e as i64)
    }

    pub fn mantissa(self) -> f64 {
        self.mantissa
    }

    pub fn exponent(self) -> i64 {
        self.exponent
    }

    pub fn is_zero(self) -> bool {
        self.mantissa == 0.0
    }

    pub fn log2(self) -> f64 {
        if self.is_zero() {
            f64::NEG_INFINITY
        } else {
            self.exponent as f64 + self.mantissa.log2()
        }
    }

    /// `|log2 a − log2 b| / |log2 b|`.
    pub fn log2_relative_error(self, reference: BigCount) -> f64 {
        ((self.log2() - reference.log2()) / reference.log2()).abs()
    }
}

impl std::ops::Mul for BigCount {
    type Output = BigCount;

    fn mul(self, other: BigCount) -> BigCount {
        BigCount::normalized(self.mantissa * other.mantissa, self.exponent + other.exponent)
    }
}

impl fmt::Display for BigCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:.2}·2^{}", self.mantissa, self.exponent)
    }
}

impl Serialize for BigCount {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("BigCount", 3)?;
        st.serialize_field("mantissa", &self.mantissa)?;
        st.serialize_field("exponent", &self.exponent)?;
        st.serialize_field("log2", &self.log2())?;
        st.end()
    }
}

/// Cost of one cipher circuit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CipherEstimate {
    pub variant: Variant,
    pub mode: Mode,
    pub not_count: u64,
    pub cnot_count: u64,
    pub toffoli_count: u64,
    pub qubits: u64,
    /// One layer per gate; only known for the built circuit.
    pub depth: Option<u64>,
}

/// Cost of one Grover oracle call.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleEstimate {
    pub variant: Variant,
    pub mode: Mode,
    pub pairs: u32,
    /// X and CNOT gates only; Toffoli internals excluded.
    pub clifford_count: u64,
    /// Including the 8 Clifford gates of every lowered Toffoli.
    pub clifford_inclusive: u64,
    pub t_count: u64,
    pub t_depth: u64,
    /// Lowered depth of the built oracle without the comparator.
    pub full_depth: Option<u64>,
    pub qubits: u64,
}

/// Cost of the whole search.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SearchEstimate {
    pub variant: Variant,
    pub mode: Mode,
    pub iterations: String,
    pub clifford_count: BigCount,
    pub t_count: BigCount,
    pub t_depth: BigCount,
    pub full_depth: Option<BigCount>,
    pub qubits: u64,
    /// Full depth inside `[2^40, 2^96]`.
    pub within_depth_budget: Option<bool>,
}

/// Rows as printed in the published tables, in [`Variant::ALL`] order.
pub mod printed {
    /// NOT, CNOT, Toffoli, qubits, depth.
    pub const TABLE3: [[u64; 5]; 10] = [
        [448, 2816, 512, 96, 946],
        [792, 3312, 864, 120, 1062],
        [768, 4800, 864, 144, 1597],
        [1248, 5184, 1344, 160, 1674],
        [1216, 7396, 1408, 192, 2643],
        [2400, 9792, 2496, 192, 4785],
        [2448, 10080, 2592, 240, 3282],
        [4224, 17152, 4352, 256, 8427],
        [4224, 17472, 4416, 320, 5656],
        [4352, 26624, 4608, 384, 8848],
    ];

    /// r, Clifford, T, T-depth, full depth, qubits.
    pub const TABLE4: [[u64; 6]; 10] = [
        [3, 19840, 24492, 12288, 27180, 161],
        [2, 16560, 27180, 13824, 28440, 169],
        [3, 33792, 40812, 20736, 45860, 241],
        [2, 25620, 41644, 21504, 44988, 224],
        [3, 52184, 65196, 33792, 74994, 321],
        [2, 48768, 75948, 39936, 89028, 289],
        [2, 50400, 78636, 41472, 86104, 337],
        [2, 85760, 129964, 69632, 151564, 385],
        [2, 87168, 131756, 70656, 146272, 449],
        [3, 186880, 205740, 110592, 246624, 641],
    ];

    /// Clifford, T, T-depth, full depth as `(mantissa, log2 exponent)`.
    pub const TABLE5: [[(f64, f64); 4]; 10] = [
        [(1.35, 45.5), (1.27, 46.0), (1.18, 45.0), (1.05, 46.3)],
        [(1.01, 49.65), (1.03, 50.45), (1.01, 49.4), (1.05, 50.37)],
        [(1.02, 62.66), (1.02, 63.05), (1.01, 61.97), (1.02, 63.11)],
        [(1.02, 62.27), (1.01, 63.08), (1.10, 61.9), (1.07, 63.0)],
        [(1.03, 79.27), (1.02, 79.7), (1.06, 78.6), (1.03, 79.8)],
        [(1.02, 63.2), (1.04, 63.85), (1.02, 62.9), (1.02, 64.0)],
        [(1.05, 87.2), (1.06, 87.9), (1.22, 86.7), (1.03, 88.0)],
        [(1.03, 80.0), (1.14, 80.5), (1.17, 79.51), (1.12, 80.7)],
        [(1.04, 112.0), (1.17, 112.5), (1.19, 111.51), (1.08, 112.7)],
        [(1.05, 145.1), (1.11, 145.2), (1.07, 144.3), (1.12, 145.4)],
    ];
}

/// The printed cipher row.
pub fn printed_table3(variant: Variant) -> CipherEstimate {
    let [not, cnot, toffoli, qubits, depth] = printed::TABLE3[variant.index()];
    CipherEstimate {
        variant,
        mode: Mode::PaperTable,
        not_count: not,
        cnot_count: cnot,
        toffoli_count: toffoli,
        qubits,
        depth: Some(depth),
    }
}

/// Closed-form cipher cost: `(T−m)n` NOT, `Tn` Toffoli,
/// `2Tn + (T−m)e` CNOT with `e = 4n` for four key words and `2n` otherwise,
/// plus `3n` for the final swap when `T` is odd.
pub fn table3_row(variant: Variant) -> CipherEstimate {
    let (n, m, t) = variant.shape();
    let (n, m, t) = (n as u64, m as u64, t as u64);
    let e = if m == 4 { 4 * n } else { 2 * n };
    let swap = if t % 2 == 1 { 3 * n } else { 0 };
    CipherEstimate {
        variant,
        mode: Mode::PaperTable,
        not_count: (t - m) * n,
        cnot_count: 2 * t * n + (t - m) * e + swap,
        toffoli_count: t * n,
        qubits: 2 * n + m * n,
        depth: None,
    }
}

pub fn table3_as_built(variant: Variant) -> Result<CipherEstimate> {
    let built = cipher_circuit(&variant.params())?;
    let census = built.circuit.census();
    Ok(CipherEstimate {
        variant,
        mode: Mode::AsBuilt,
        not_count: census.x as u64,
        cnot_count: census.cnot as u64,
        toffoli_count: census.toffoli as u64,
        qubits: built.circuit.width() as u64,
        depth: Some(built.circuit.depth(Granularity::Toffoli) as u64),
    })
}

/// Oracle identities over a cipher row:
/// Clifford `2r(NOT+CNOT) + 2(r−1)k`, T `14r·Toffoli + 32·2nr − 84`,
/// T-depth `8r·Toffoli`, qubits `2nr + k + 1`.
pub fn oracle_identities(cipher: &CipherEstimate) -> OracleEstimate {
    let variant = cipher.variant;
    let (n, m, _) = variant.shape();
    let r = required_pairs(&variant.params());
    let (n, k, rr) = (n as u64, (n * m) as u64, r as u64);
    let clifford = 2 * rr * (cipher.not_count + cipher.cnot_count) + 2 * (rr - 1) * k;
    let (toff_clifford, toff_t, toff_t_depth, _) = lower_toffoli_costs(2 * rr * cipher.toffoli_count);
    let comparator_t = mcx_t_count(2 * n * rr).expect("comparators have at least 32 controls");
    OracleEstimate {
        variant,
        mode: Mode::PaperTable,
        pairs: r,
        clifford_count: clifford,
        clifford_inclusive: clifford + toff_clifford,
        t_count: toff_t + comparator_t,
        t_depth: toff_t_depth,
        full_depth: None,
        qubits: 2 * n * rr + k + 1,
    }
}

/// Oracle row chained from the printed cipher row, with the full depth of
/// the built oracle attached.
pub fn table4_row(variant: Variant) -> Result<OracleEstimate> {
    let mut row = oracle_identities(&printed_table3(variant));
    row.full_depth = Some(built_oracle(variant)?.depth);
    Ok(row)
}

/// The same identities applied to the closed-form cipher row.
pub fn table4_formula_row(variant: Variant) -> OracleEstimate {
    oracle_identities(&table3_row(variant))
}

struct BuiltOracle {
    census: GateCensus,
    depth: u64,
    t_depth: u64,
    width: u64,
}

fn oracle_plan(variant: Variant) -> Result<GroverPlan> {
    let params: CipherParams = variant.params();
    let r = required_pairs(&params) as usize;
    let mut rng = ChaCha8Rng::seed_from_u64(ORACLE_SEED ^ variant.index() as u64);
    let (_, pairs) = random_pairs(&params, r, &mut rng)?;
    GroverPlan::new(params, pairs)
}

fn built_oracle(variant: Variant) -> Result<BuiltOracle> {
    let oracle = oracle_circuit(&oracle_plan(variant)?)?;
    let narrow = oracle.circuit.filtered(|g| !g.is_wide());
    let report = narrow.depth_report();
    Ok(BuiltOracle {
        census: oracle.circuit.census(),
        depth: report.lowered as u64,
        t_depth: report.t_depth as u64,
        width: oracle.circuit.width() as u64,
    })
}

/// Oracle cost read off the synthesized oracle. The comparator's X gates
/// depend on the ciphertexts, which come from seeded random pairs.
pub fn table4_as_built(variant: Variant) -> Result<OracleEstimate> {
    let built = built_oracle(variant)?;
    let c = &built.census;
    let mut comparator_t = 0;
    for (&controls, &count) in &c.mcx {
        comparator_t += count as u64 * mcx_t_count(controls as u64)?;
    }
    let clifford = (c.x + c.h + c.cnot) as u64;
    let (toff_clifford, toff_t, _, _) = lower_toffoli_costs(c.toffoli as u64);
    Ok(OracleEstimate {
        variant,
        mode: Mode::AsBuilt,
        pairs: required_pairs(&variant.params()),
        clifford_count: clifford,
        clifford_inclusive: clifford + toff_clifford,
        t_count: toff_t + comparator_t,
        t_depth: built.t_depth,
        full_depth: Some(built.depth),
        qubits: built.width,
    })
}

/// Lowered depth of one diffusion step without its multi-controlled gate.
pub fn diffusion_depth(key_bits: usize) -> Result<u64> {
    let mut c = Circuit::new();
    let key = c.add_register("key", key_bits)?;
    emit_diffusion(&mut c, key)?;
    Ok(c.filtered(|g| !g.is_wide()).depth(Granularity::Lowered) as u64)
}

fn iteration_count(variant: Variant) -> u128 {
    grover_iterations(variant.params().key_bits()).expect("standard keys are at most 256 bits")
}

fn within_budget(depth: BigCount) -> bool {
    let l = depth.log2();
    l >= NIST_DEPTH_LOG2.0 && l <= NIST_DEPTH_LOG2.1
}

/// Scales an oracle row by `floor(π/4 · 2^{k/2})` iterations.
pub fn scale_to_search(oracle: &OracleEstimate) -> SearchEstimate {
    let iterations = iteration_count(oracle.variant);
    let it = BigCount::from_u128(iterations);
    let scale = |v: u64| BigCount::from_u128(v as u128) * it;
    let full_depth = oracle.full_depth.map(scale);
    SearchEstimate {
        variant: oracle.variant,
        mode: oracle.mode,
        iterations: iterations.to_string(),
        clifford_count: scale(oracle.clifford_count),
        t_count: scale(oracle.t_count),
        t_depth: scale(oracle.t_depth),
        full_depth,
        qubits: oracle.qubits,
        within_depth_budget: full_depth.map(within_budget),
    }
}

pub fn table5_row(variant: Variant) -> Result<SearchEstimate> {
    Ok(scale_to_search(&table4_row(variant)?))
}

pub fn table5_as_built(variant: Variant) -> Result<SearchEstimate> {
    Ok(scale_to_search(&table4_as_built(variant)?))
}

/// The printed search row.
pub fn printed_table5(variant: Variant) -> SearchEstimate {
    let [cl, t, td, fd] = printed::TABLE5[variant.index()].map(|(m, e)| BigCount::from_scaled(m, e));
    SearchEstimate {
        variant,
        mode: Mode::PaperTable,
        iterations: iteration_count(variant).to_string(),
        clifford_count: cl,
        t_count: t,
        t_depth: td,
        full_depth: Some(fd),
        qubits: printed::TABLE4[variant.index()][5],
        within_depth_budget: Some(within_budget(fd)),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CellStatus {
    Match,
    FormulaVsPaper,
    AsBuiltVsTable,
    /// Both mismatches at once.
    FormulaVsPaperAndAsBuilt,
    ReportedOnly,
}

impl fmt::Display for CellStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CellStatus::Match => "match",
            CellStatus::FormulaVsPaper => "formula-vs-paper mismatch",
            CellStatus::AsBuiltVsTable => "as-built-vs-table mismatch",
            CellStatus::FormulaVsPaperAndAsBuilt => "formula-vs-paper and as-built-vs-table mismatch",
            CellStatus::ReportedOnly => "reported only",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiffCell {
    pub table: u8,
    pub column: &'static str,
    pub as_built: Option<u64>,
    pub formula: Option<u64>,
    pub printed: u64,
    pub status: CellStatus,
}

impl DiffCell {
    fn compared(table: u8, column: &'static str, as_built: u64, formula: u64, printed: u64) -> Self {
        let status = match (formula != printed, as_built != formula) {
            (false, false) => CellStatus::Match,
            (true, false) => CellStatus::FormulaVsPaper,
            (false, true) => CellStatus::AsBuiltVsTable,
            (true, true) => CellStatus::FormulaVsPaperAndAsBuilt,
        };
        DiffCell {
            table,
            column,
            as_built: Some(as_built),
            formula: Some(formula),
            printed,
            status,
        }
    }

    fn reported(table: u8, column: &'static str, as_built: Option<u64>, printed: u64) -> Self {
        DiffCell {
            table,
            column,
            as_built,
            formula: None,
            printed,
            status: CellStatus::ReportedOnly,
        }
    }

    pub fn formula_mismatch(&self) -> bool {
        matches!(
            self.status,
            CellStatus::FormulaVsPaper | CellStatus::FormulaVsPaperAndAsBuilt
        )
    }

    pub fn as_built_mismatch(&self) -> bool {
        matches!(
            self.status,
            CellStatus::AsBuiltVsTable | CellStatus::FormulaVsPaperAndAsBuilt
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiffReport {
    pub variant: Variant,
    pub cells: Vec<DiffCell>,
}

impl DiffReport {
    pub fn cell(&self, table: u8, column: &str) -> Option<&DiffCell> {
        self.cells
            .iter()
            .find(|c| c.table == table && c.column == column)
    }
}

/// Three-way comparison of every cipher and oracle cell: built circuit,
/// counting rule, printed value. Oracle-table formula values are the
/// identities over the printed cipher row.
pub fn paper_diff(variant: Variant) -> Result<DiffReport> {
    let built3 = table3_as_built(variant)?;
    let formula3 = table3_row(variant);
    let printed3 = printed_table3(variant);
    let built4 = table4_as_built(variant)?;
    let formula4 = oracle_identities(&printed3);
    let [pr, pcl, pt, ptd, pfd, pq] = printed::TABLE4[variant.index()];

    let cells = vec![
        DiffCell::compared(3, "not", built3.not_count, formula3.not_count, printed3.not_count),
        DiffCell::compared(3, "cnot", built3.cnot_count, formula3.cnot_count, printed3.cnot_count),
        DiffCell::compared(3, "toffoli", built3.toffoli_count, formula3.toffoli_count, printed3.toffoli_count),
        DiffCell::compared(3, "qubits", built3.qubits, formula3.qubits, printed3.qubits),
        DiffCell::reported(3, "depth", built3.depth, printed3.depth.unwrap_or(0)),
        DiffCell::compared(4, "r", built4.pairs as u64, formula4.pairs as u64, pr),
        DiffCell::compared(4, "clifford", built4.clifford_count, formula4.clifford_count, pcl),
        DiffCell::compared(4, "t", built4.t_count, formula4.t_count, pt),
        DiffCell::compared(4, "t_depth", built4.t_depth, formula4.t_depth, ptd),
        DiffCell::reported(4, "full_depth", built4.full_depth, pfd),
        DiffCell::compared(4, "qubits", built4.qubits, formula4.qubits, pq),
    ];
    Ok(DiffReport { variant, cells })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Markdown,
    Csv,
    Json,
}

impl std::str::FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "md" | "markdown" => Ok(Format::Markdown),
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(Error::parse(format!("unknown format `{other}`"))),
        }
    }
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(|| "-".to_string(), T::to_string)
}

fn render(format: Format, header: &[&str], rows: &[Vec<String>]) -> String {
    match format {
        Format::Markdown => {
            let mut out = format!("| {} |\n", header.join(" | "));
            out += &format!("|{}\n", "---|".repeat(header.len()));
            for row in rows {
                out += &format!("| {} |\n", row.join(" | "));
            }
            out
        }
        Format::Csv => {
            let mut out = header.join(",") + "\n";
            for row in rows {
                out += &(row.join(",") + "\n");
            }
            out
        }
        Format::Json => unreachable!("json is rendered through serde"),
    }
}

fn json<T: Serialize>(rows: &T) -> String {
    serde_json::to_string_pretty(rows).expect("estimates serialize") + "\n"
}

pub fn render_table3(rows: &[CipherEstimate], format: Format) -> String {
    if format == Format::Json {
        return json(&rows);
    }
    let body: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            vec![
                r.variant.to_string(),
                r.mode.to_string(),
                r.not_count.to_string(),
                r.cnot_count.to_string(),
                r.toffoli_count.to_string(),
                r.qubits.to_string(),
                opt(&r.depth),
            ]
        })
        .collect();
    render(format, &["variant", "mode", "not", "cnot", "toffoli", "qubits", "depth"], &body)
}

pub fn render_table4(rows: &[OracleEstimate], format: Format) -> String {
    if format == Format::Json {
        return json(&rows);
    }
    let body: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            vec![
                r.variant.to_string(),
                r.mode.to_string(),
                r.pairs.to_string(),
                r.clifford_count.to_string(),
                r.clifford_inclusive.to_string(),
                r.t_count.to_string(),
                r.t_depth.to_string(),
                opt(&r.full_depth),
                r.qubits.to_string(),
            ]
        })
        .collect();
    render(
        format,
        &["variant", "mode", "r", "clifford", "clifford_incl_toffoli", "t", "t_depth", "full_depth", "qubits"],
        &body,
    )
}

pub fn render_table5(rows: &[SearchEstimate], format: Format) -> String {
    if format == Format::Json {
        return json(&rows);
    }
    let body: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            vec![
                r.variant.to_string(),
                r.mode.to_string(),
                r.iterations.clone(),
                r.clifford_count.to_string(),
                r.t_count.to_string(),
                r.t_depth.to_string(),
                opt(&r.full_depth),
                r.qubits.to_string(),
                opt(&r.within_depth_budget),
            ]
        })
        .collect();
    render(
        format,
        &["variant", "mode", "iterations", "clifford", "t", "t_depth", "full_depth", "qubits", "depth_within_2^40..2^96"],
        &body,
    )
}

pub fn render_diff(reports: &[DiffReport], format: Format) -> String {
    if format == Format::Json {
        return json(&reports);
    }
    let body: Vec<Vec<String>> = reports
        .iter()
        .flat_map(|rep| {
            rep.cells.iter().map(move |c| {
                vec![
                    rep.variant.to_string(),
                    c.table.to_string(),
                    c.column.to_string(),
                    opt(&c.as_built),
                    opt(&c.formula),
                    c.printed.to_string(),
                    c.status.to_string(),
                ]
            })
        })
        .collect();
    render(
        format,
        &["variant", "table", "column", "as_built", "formula", "printed", "status"],
        &body,
    )
}
