//! `simon-grover`: encryption, circuit synthesis, verification, the Grover
//! demo and resource estimates from one binary.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error,
//! 3 invalid input or parameters, 4 I/O error, 5 statevector width cap.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use simon_grover::cost::{self, Format};
use simon_grover::grover::{self, GroverPlan};
use simon_grover::sim::SimConfig;
use simon_grover::{classical, qasm, synth, verify, CipherParams, CipherState, Error, Variant};

#[derive(Parser)]
#[command(name = "simon-grover", version, about = "Quantum circuits and Grover key search for SIMON")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Encrypt one block.
    Encrypt(CryptArgs),
    /// Decrypt one block.
    Decrypt(CryptArgs),
    /// Synthesize the reversible cipher circuit (or one round / key expansion).
    Synth(SynthArgs),
    /// Check synthesized circuits against classical encryption.
    Verify(VerifyArgs),
    /// Build the Grover search circuit for a pair file.
    GroverSynth(GroverSynthArgs),
    /// Simulate Grover key search and print the key histogram.
    GroverDemo(GroverDemoArgs),
    /// Resource estimates for the cipher, the oracle and the full search.
    Estimate(EstimateArgs),
    /// Compare built, closed-form and printed resource figures cell by cell.
    PaperDiff(PaperDiffArgs),
}

#[derive(Args, Clone)]
#[group(required = true, multiple = false)]
struct CipherSel {
    /// Standard variant such as `simon32/64`.
    #[arg(long)]
    variant: Option<Variant>,
    /// Reduced variant `n,m,T,rotA1,rotA2,rotX,keyrots,consts`,
    /// e.g. `3,2,4,1,2,0,1:2,001:001`.
    #[arg(long)]
    reduced: Option<String>,
}

impl CipherSel {
    fn params(&self) -> Result<CipherParams, Error> {
        match (&self.variant, &self.reduced) {
            (Some(v), _) => Ok(v.params()),
            (None, Some(spec)) => CipherParams::parse_reduced(spec),
            (None, None) => unreachable!("clap requires one selector"),
        }
    }
}

#[derive(Args)]
struct CryptArgs {
    #[command(flatten)]
    cipher: CipherSel,
    /// Key as mn-bit hex, last key word most significant.
    #[arg(long)]
    key: String,
    /// Block as 2n-bit hex, left word most significant.
    #[arg(long)]
    block: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum CircuitOut {
    Qasm,
    JsonCensus,
}

#[derive(Clone, Copy, ValueEnum)]
enum Part {
    Cipher,
    Round,
    KeyExpansion,
}

#[derive(Args)]
struct SynthArgs {
    #[command(flatten)]
    cipher: CipherSel,
    #[arg(long, value_enum, default_value = "qasm")]
    out: CircuitOut,
    #[arg(long, value_enum, default_value = "cipher")]
    part: Part,
    /// Round or key-expansion index for `--part round|key-expansion`.
    #[arg(long, default_value_t = 0)]
    index: u32,
    /// Write here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Standard variant id or `all`.
    #[arg(long, conflicts_with = "reduced", required_unless_present = "reduced")]
    variant: Option<String>,
    #[arg(long)]
    reduced: Option<String>,
    #[arg(long, default_value_t = 25)]
    draws: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct GroverSynthArgs {
    #[command(flatten)]
    cipher: CipherSel,
    /// Pair file: one `hexplaintext hexciphertext` per line.
    #[arg(long)]
    pairs: PathBuf,
    #[arg(long)]
    iterations: Option<u64>,
    #[arg(long, value_enum, default_value = "json-census")]
    out: CircuitOut,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct GroverDemoArgs {
    /// Reduced variant spec; defaults to the 6-bit toy cipher.
    #[arg(long, default_value = "3,2,4,1,2,0,1:2,001:001")]
    reduced: String,
    /// Pair file; give twice to intersect the two candidate lists.
    #[arg(long, required = true, num_args = 1)]
    pairs: Vec<PathBuf>,
    #[arg(long, default_value_t = 1024)]
    shots: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Statevector width cap; overrides SIMON_GROVER_SV_CAP.
    #[arg(long)]
    cap: Option<usize>,
    #[arg(long, conflicts_with = "marked")]
    iterations: Option<u64>,
    /// Number of marked keys assumed when choosing the iteration count.
    #[arg(long)]
    marked: Option<u64>,
    /// Write the JSON histogram artifact here.
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum TableSel {
    #[value(name = "3")]
    Three,
    #[value(name = "4")]
    Four,
    #[value(name = "5")]
    Five,
    All,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum ModeSel {
    Paper,
    AsBuilt,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatSel {
    Md,
    Csv,
    Json,
}

impl From<FormatSel> for Format {
    fn from(f: FormatSel) -> Format {
        match f {
            FormatSel::Md => Format::Markdown,
            FormatSel::Csv => Format::Csv,
            FormatSel::Json => Format::Json,
        }
    }
}

#[derive(Args)]
struct EstimateArgs {
    /// Standard variant id or `all`.
    #[arg(long, default_value = "all")]
    variant: String,
    #[arg(long, value_enum, default_value = "all")]
    table: TableSel,
    #[arg(long, value_enum, default_value = "md")]
    format: FormatSel,
    #[arg(long, value_enum, default_value = "paper")]
    mode: ModeSel,
}

#[derive(Args)]
struct PaperDiffArgs {
    /// Standard variant id or `all`.
    #[arg(long, default_value = "all")]
    variant: String,
    #[arg(long, value_enum, default_value = "md")]
    format: FormatSel,
}

enum Failure {
    Verification(String),
    Input(Error),
    Io(PathBuf, std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e)
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Verification(_) => 1,
            Failure::Input(Error::WidthExceeded { .. }) => 5,
            Failure::Input(_) => 3,
            Failure::Io(..) => 4,
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Verification(m) => m.clone(),
            Failure::Input(e) => e.to_string(),
            Failure::Io(path, e) => format!("{}: {e}", path.display()),
        }
    }
}

type Outcome = Result<String, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.exit_code())
        }
    }
}

fn run(cmd: Command) -> Outcome {
    match cmd {
        Command::Encrypt(a) => crypt(a, true),
        Command::Decrypt(a) => crypt(a, false),
        Command::Synth(a) => cmd_synth(a),
        Command::Verify(a) => cmd_verify(a),
        Command::GroverSynth(a) => cmd_grover_synth(a),
        Command::GroverDemo(a) => cmd_grover_demo(a),
        Command::Estimate(a) => cmd_estimate(a),
        Command::PaperDiff(a) => cmd_paper_diff(a),
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Io(path.to_path_buf(), e))
}

/// Writes to `path` when given, otherwise returns the text for stdout.
fn emit(text: String, path: Option<&Path>) -> Outcome {
    match path {
        Some(p) => {
            fs::write(p, text).map_err(|e| Failure::Io(p.to_path_buf(), e))?;
            Ok(String::new())
        }
        None => Ok(text),
    }
}

fn crypt(a: CryptArgs, forward: bool) -> Outcome {
    let params = a.cipher.params()?;
    let key = params.key_from_hex(&a.key)?;
    let block = CipherState::from_hex(&a.block, params.word_size())?;
    let out = if forward {
        classical::encrypt(&params, &key, block)?
    } else {
        classical::decrypt(&params, &key, block)?
    };
    Ok(format!("{}\n", out.to_hex()))
}

fn circuit_json(name: &str, c: &simon_grover::Circuit) -> String {
    let value = serde_json::json!({
        "circuit": name,
        "qubits": c.width(),
        "registers": c.registers(),
        "census": c.census(),
        "depth": c.depth_report(),
    });
    serde_json::to_string_pretty(&value).expect("census serializes") + "\n"
}

fn render_circuit(out: CircuitOut, name: &str, c: &simon_grover::Circuit) -> Result<String, Failure> {
    Ok(match out {
        CircuitOut::Qasm => qasm::export_qasm(c)?,
        CircuitOut::JsonCensus => circuit_json(name, c),
    })
}

fn cmd_synth(a: SynthArgs) -> Outcome {
    let params = a.cipher.params()?;
    let (name, built) = match a.part {
        Part::Cipher => (params.name(), synth::cipher_circuit(&params)?),
        Part::Round => (
            format!("{} round {}", params.name(), a.index),
            synth::round_circuit(&params, a.index)?,
        ),
        Part::KeyExpansion => (
            format!("{} key expansion {}", params.name(), a.index),
            synth::key_expansion_circuit(&params, a.index)?,
        ),
    };
    emit(render_circuit(a.out, &name, &built.circuit)?, a.output.as_deref())
}

fn variants(sel: &str) -> Result<Vec<Variant>, Failure> {
    if sel.eq_ignore_ascii_case("all") {
        Ok(Variant::ALL.to_vec())
    } else {
        Ok(vec![sel.parse::<Variant>()?])
    }
}

fn cmd_verify(a: VerifyArgs) -> Outcome {
    let targets: Vec<CipherParams> = match (&a.variant, &a.reduced) {
        (_, Some(spec)) => vec![CipherParams::parse_reduced(spec)?],
        (Some(v), None) => variants(v)?.into_iter().map(Variant::params).collect(),
        (None, None) => unreachable!("clap requires one selector"),
    };
    let mut out = String::new();
    let mut failed = false;
    for params in &targets {
        let report = verify::verify(params, a.draws, a.seed)?;
        let status = if report.passed() { "pass" } else { "FAIL" };
        let _ = writeln!(out, "{}: {status} ({} cases)", report.cipher, report.cases);
        for m in &report.mismatches {
            let _ = writeln!(
                out,
                "  {}: key {} pt {} expected {} got {} (first bad bit {})",
                m.case, m.key_hex, m.plaintext_hex, m.expected_hex, m.actual_hex, m.first_bit
            );
        }
        failed |= !report.passed();
    }
    if failed {
        Err(Failure::Verification(out))
    } else {
        Ok(out)
    }
}

fn load_plan(params: CipherParams, path: &Path) -> Result<GroverPlan, Failure> {
    let pairs = grover::parse_pairs(&read(path)?, params.word_size())?;
    Ok(GroverPlan::new(params, pairs)?)
}

fn cmd_grover_synth(a: GroverSynthArgs) -> Outcome {
    let params = a.cipher.params()?;
    let mut plan = load_plan(params, &a.pairs)?;
    if let Some(i) = a.iterations {
        plan = plan.with_iterations(i);
    }
    let built = grover::grover_circuit(&plan)?;
    let name = format!("grover {} x{}", plan.params().name(), plan.iterations());
    emit(render_circuit(a.out, &name, &built.circuit)?, a.output.as_deref())
}

fn cmd_grover_demo(a: GroverDemoArgs) -> Outcome {
    if a.pairs.len() > 2 {
        return Err(Error::InvalidParams("at most two pair files".into()).into());
    }
    let params = CipherParams::parse_reduced(&a.reduced)?;
    let mut config = SimConfig::from_env();
    if let Some(cap) = a.cap {
        config.cap = cap;
    }
    let mut out = String::new();
    let mut runs = Vec::new();
    let mut candidates = Vec::new();
    for path in &a.pairs {
        let mut plan = load_plan(params.clone(), path)?;
        if let Some(i) = a.iterations {
            plan = plan.with_iterations(i);
        } else if let Some(s) = a.marked {
            plan = plan.with_marked_count(s);
        }
        let outcome = grover::run_search(&plan, &config, a.shots, a.seed)?;
        let top = outcome.top_keys(2);
        let _ = writeln!(
            out,
            "pairs {} | {} | {} iterations | {} shots | seed {}",
            path.display(),
            params.name(),
            plan.iterations(),
            a.shots,
            a.seed
        );
        out += &outcome.histogram.ascii_chart(40);
        for e in outcome.histogram.top(2) {
            let _ = writeln!(
                out,
                "top: {} (reversed {}) p={:.4} count={}",
                e.outcome, e.reversed, e.probability, e.count
            );
        }
        out.push('\n');
        runs.push(serde_json::json!({
            "pairs": path.display().to_string(),
            "iterations": plan.iterations(),
            "shots": a.shots,
            "seed": a.seed,
            "top2": top,
            "histogram": outcome.histogram,
        }));
        candidates.push(top);
    }
    let common = (candidates.len() == 2).then(|| grover::intersect_candidates(&candidates));
    if let Some(keys) = &common {
        let _ = writeln!(out, "recovered key: {}", keys.join(", "));
    }
    if let Some(path) = &a.json {
        let artifact = serde_json::json!({
            "cipher": params.name(),
            "label_order": "key register order, k0 first; `reversed` lists the last qubit first",
            "runs": runs,
            "intersection": common,
        });
        let text = serde_json::to_string_pretty(&artifact).expect("histogram serializes") + "\n";
        emit(text, Some(path))?;
    }
    Ok(out)
}

fn cmd_estimate(a: EstimateArgs) -> Outcome {
    let vs = variants(&a.variant)?;
    let format: Format = a.format.into();
    let paper = matches!(a.mode, ModeSel::Paper | ModeSel::Both);
    let built = matches!(a.mode, ModeSel::AsBuilt | ModeSel::Both);
    let want = |t: TableSel| a.table == t || a.table == TableSel::All;
    let mut sections: Vec<(&str, String)> = Vec::new();

    if want(TableSel::Three) {
        let mut rows = Vec::new();
        for &v in &vs {
            if paper {
                rows.push(cost::table3_row(v));
            }
            if built {
                rows.push(cost::table3_as_built(v)?);
            }
        }
        sections.push(("cipher", cost::render_table3(&rows, format)));
    }
    if want(TableSel::Four) || want(TableSel::Five) {
        let mut t4 = Vec::new();
        for &v in &vs {
            if paper {
                t4.push(cost::table4_row(v)?);
            }
            if built {
                t4.push(cost::table4_as_built(v)?);
            }
        }
        if want(TableSel::Four) {
            sections.push(("oracle", cost::render_table4(&t4, format)));
        }
        if want(TableSel::Five) {
            let t5: Vec<_> = t4.iter().map(cost::scale_to_search).collect();
            sections.push(("search", cost::render_table5(&t5, format)));
        }
    }

    Ok(match (format, sections.len()) {
        (_, 1) => sections.remove(0).1,
        (Format::Json, _) => {
            let mut obj = serde_json::Map::new();
            for (name, text) in sections {
                obj.insert(name.into(), serde_json::from_str(&text).expect("rendered json"));
            }
            serde_json::to_string_pretty(&obj).expect("json") + "\n"
        }
        _ => sections
            .into_iter()
            .map(|(name, text)| format!("## {name}\n\n{text}"))
            .collect::<Vec<_>>()
            .join("\n"),
    })
}

fn cmd_paper_diff(a: PaperDiffArgs) -> Outcome {
    let reports = variants(&a.variant)?
        .into_iter()
        .map(cost::paper_diff)
        .collect::<Result<Vec<_>, _>>()?;
    Ok(cost::render_diff(&reports, a.format.into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn cli_definition_is_consistent() {
        Cli::command().debug_assert();
    }
}
