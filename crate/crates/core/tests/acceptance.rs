//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

mod common;

use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use simon_grover::circuit::{Circuit, Qubit};
use simon_grover::cost::{self, BigCount};
use simon_grover::grover::{self, GroverPlan, PlainCipherPair};
use simon_grover::sim::{run_basis, BasisState, SimConfig};
use simon_grover::verify::simulate;
use simon_grover::{decrypt, encrypt, synth, Error, Variant};

use common::*;

/// Published cipher table: NOT, CNOT, Toffoli, qubits.
const PRINTED_CIPHER: [[u64; 4]; 10] = [
    [448, 2816, 512, 96],
    [792, 3312, 864, 120],
    [768, 4800, 864, 144],
    [1248, 5184, 1344, 160],
    [1216, 7396, 1408, 192],
    [2400, 9792, 2496, 192],
    [2448, 10080, 2592, 240],
    [4224, 17152, 4352, 256],
    [4224, 17472, 4416, 320],
    [4352, 26624, 4608, 384],
];

/// Published oracle table: r, Clifford, T, T-depth, full depth, qubits.
const PRINTED_ORACLE: [[u64; 6]; 10] = [
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

/// Published search table: Clifford, T, T-depth as (mantissa, exponent).
const PRINTED_SEARCH: [[(f64, f64); 3]; 10] = [
    [(1.35, 45.5), (1.27, 46.0), (1.18, 45.0)],
    [(1.01, 49.65), (1.03, 50.45), (1.01, 49.4)],
    [(1.02, 62.66), (1.02, 63.05), (1.01, 61.97)],
    [(1.02, 62.27), (1.01, 63.08), (1.10, 61.9)],
    [(1.03, 79.27), (1.02, 79.7), (1.06, 78.6)],
    [(1.02, 63.2), (1.04, 63.85), (1.02, 62.9)],
    [(1.05, 87.2), (1.06, 87.9), (1.22, 86.7)],
    [(1.03, 80.0), (1.14, 80.5), (1.17, 79.51)],
    [(1.04, 112.0), (1.17, 112.5), (1.19, 111.51)],
    [(1.05, 145.1), (1.11, 145.2), (1.07, 144.3)],
];

/// floor(π/4 · 2^{k/2}) at 400-bit precision.
const ITERATIONS: [(u32, u128); 6] = [
    (64, 3373259426),
    (72, 53972150818),
    (96, 221069929750888),
    (128, 14488038916154245684),
    (192, 62225653328057771307630486155),
    (256, 267257146016241686964920093290467695825),
];

const LOG2_TOLERANCE: f64 = 0.01;
const AMPLITUDE_TOLERANCE: f64 = 1e-9;

#[derive(Default)]
struct Check {
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Check {
    fn expect(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(what());
        }
    }

    fn note(&mut self, s: String) {
        self.notes.push(s);
    }
}

fn criterion_1() -> Check {
    let mut c = Check::default();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for v in Variant::ALL {
        let p = v.params();
        let (n, m, _, _) = shape(v);
        let (key, pt, ct) = published(v);
        c.expect(ref_encrypt(v, &key, pt) == ct, || format!("{v}: reference misses the published vector"));
        let got = encrypt(&p, &words(&key, n), state(pt, n)).map(unstate);
        c.expect(got == Ok(ct), || format!("{v}: published vector gives {got:?}"));
        for d in 0..100 {
            let key: Vec<u64> = (0..m).map(|_| random_word(&mut rng, n)).collect();
            let pt = (random_word(&mut rng, n), random_word(&mut rng, n));
            let ct = encrypt(&p, &words(&key, n), state(pt, n)).unwrap();
            c.expect(unstate(ct) == ref_encrypt(v, &key, pt), || format!("{v} draw {d}: differs from reference"));
            let back = decrypt(&p, &words(&key, n), ct).unwrap();
            c.expect(unstate(back) == pt, || format!("{v} draw {d}: decrypt∘encrypt is not the identity"));
        }
    }
    c
}

fn criterion_2() -> Check {
    let mut c = Check::default();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for v in Variant::ALL {
        let p = v.params();
        let (n, m, _, _) = shape(v);
        let built = synth::cipher_circuit(&p).unwrap();
        for d in 0..25 {
            let key: Vec<u64> = (0..m).map(|_| random_word(&mut rng, n)).collect();
            let pt = (random_word(&mut rng, n), random_word(&mut rng, n));
            let want = ref_encrypt(v, &key, pt);
            let got = unstate(simulate(&built, &words(&key, n), state(pt, n)).unwrap());
            c.expect(got == want, || format!("{v} draw {d}: circuit {got:x?} vs classical {want:x?}"));
        }
    }
    let toy = toy();
    let built = synth::cipher_circuit(&toy).unwrap();
    let key = words(&[0b001, 0b110], 3);
    let out = simulate(&built, &key, state((0b011, 0b101), 3)).unwrap();
    c.expect(out.to_bit_string() == "011111", || {
        format!("6-bit vector: L4 R4 = {}", out.to_bit_string())
    });
    c
}

fn criterion_3() -> Check {
    let mut c = Check::default();
    for v in Variant::ALL {
        let [not, cnot, toffoli, qubits] = PRINTED_CIPHER[v.index()];
        let row = cost::table3_row(v);
        c.expect(row.toffoli_count == toffoli, || format!("{v} Toffoli {} vs {toffoli}", row.toffoli_count));
        c.expect(row.qubits == qubits, || format!("{v} qubits {} vs {qubits}", row.qubits));
        if v == Variant::Simon64_128 {
            let diff = cost::paper_diff(v).unwrap();
            for (col, formula, printed) in [("not", 1280, 1216), ("cnot", 7936, 7396)] {
                let cell = diff.cell(3, col).unwrap();
                c.expect(
                    cell.formula == Some(formula) && cell.printed == printed && cell.formula_mismatch(),
                    || format!("{v} {col}: diff cell {cell:?}"),
                );
            }
            c.note(format!("{v}: NOT 1280 vs printed 1216, CNOT 7936 vs printed 7396 flagged"));
        } else {
            c.expect(row.not_count == not, || format!("{v} NOT {} vs {not}", row.not_count));
            c.expect(row.cnot_count == cnot, || format!("{v} CNOT {} vs {cnot}", row.cnot_count));
        }
    }
    c
}

fn criterion_4() -> Check {
    let mut c = Check::default();
    for v in Variant::ALL {
        let [r, cl, t, td, fd, q] = PRINTED_ORACLE[v.index()];
        let row = cost::table4_row(v).unwrap();
        for (col, ours, printed) in [
            ("r", row.pairs as u64, r),
            ("Clifford", row.clifford_count, cl),
            ("T", row.t_count, t),
            ("T-depth", row.t_depth, td),
            ("qubits", row.qubits, q),
        ] {
            c.expect(ours == printed, || {
                format!("{v} {col}: identity gives {ours}, printed {printed} (delta {})", ours as i64 - printed as i64)
            });
        }
        let built = row.full_depth.unwrap();
        c.note(format!(
            "{v} full depth (reported only): built {built}, printed {fd}, delta {}",
            built as i64 - fd as i64
        ));
    }
    c
}

fn criterion_5() -> Check {
    let mut c = Check::default();
    for (k, want) in ITERATIONS {
        c.expect(grover::grover_iterations(k) == Some(want), || format!("iterations for k={k}"));
    }
    for v in Variant::ALL {
        let row = cost::table5_row(v).unwrap();
        let printed = PRINTED_SEARCH[v.index()].map(|(m, e)| BigCount::from_scaled(m, e));
        for (col, ours, paper) in [
            ("Clifford", row.clifford_count, printed[0]),
            ("T", row.t_count, printed[1]),
            ("T-depth", row.t_depth, printed[2]),
        ] {
            let err = ours.log2_relative_error(paper);
            c.expect(err <= LOG2_TOLERANCE, || {
                format!("{v} {col}: 2^{:.3} vs 2^{:.3} (error {:.4})", ours.log2(), paper.log2(), err)
            });
        }
        let exceeds = row.full_depth.unwrap().log2() > cost::NIST_DEPTH_LOG2.1;
        let expected = matches!(v, Variant::Simon128_192 | Variant::Simon128_256);
        c.expect(exceeds == expected && row.within_depth_budget == Some(!expected), || {
            format!("{v}: depth 2^{:.2}, budget flag {:?}", row.full_depth.unwrap().log2(), row.within_depth_budget)
        });
    }
    c
}

fn toy_plan(pair: &str) -> GroverPlan {
    let p = toy();
    let pair = PlainCipherPair::parse_line(pair, 3).unwrap();
    GroverPlan::new(p, vec![pair]).unwrap()
}

fn sorted(mut v: Vec<String>) -> Vec<String> {
    v.sort();
    v
}

fn criterion_6() -> Check {
    let mut c = Check::default();
    let config = SimConfig {
        check_norm: true,
        ..SimConfig::default()
    };
    let mut tops = Vec::new();
    for (pair, expected) in [(TOY_PAIR_1, ["001110", "111000"]), (TOY_PAIR_2, ["001001", "001110"])] {
        let plan = toy_plan(pair);
        let table = grover::oracle_truth_table(&plan).unwrap();
        c.expect(table.marked == expected, || format!("pair {pair}: oracle marks {:?}", table.marked));
        c.expect(table.restores_inputs, || format!("pair {pair}: oracle leaves garbage"));

        let phase = phase_marked(&plan);
        c.expect(phase == expected, || format!("pair {pair}: phase check marks {phase:?}"));

        let run = grover::run_search(&plan, &config, 1024, 7).unwrap();
        let top = sorted(run.top_keys(2));
        c.expect(top == expected, || format!("pair {pair}: top-2 {top:?}"));
        tops.push(top);
    }
    let common = grover::intersect_candidates(&tops);
    c.expect(common == ["001110"], || format!("intersection {common:?}"));

    let plan = toy_plan(TOY_PAIR_1).with_iterations(4);
    let run = grover::run_search(&plan, &config, 0, 0).unwrap();
    let p = run.key_probability("001110") + run.key_probability("111000");
    c.expect(p >= 0.99, || format!("4 iterations: marked probability {p:.6}"));
    c.note(format!("s=2, 4 iterations: marked probability {p:.6}"));

    let marked = ["001110".to_string(), "111000".to_string()];
    let curve = grover::success_curve(&toy_plan(TOY_PAIR_1), &marked, 8, &config).unwrap();
    for (j, &got) in curve.iter().enumerate() {
        let want = closed_form_success(6, 2.0, j as u64);
        c.expect((got - want).abs() <= AMPLITUDE_TOLERANCE, || {
            format!("curve j={j}: {got:.12} vs {want:.12}")
        });
    }
    c
}

/// Keys whose basis state picks up a −1 phase from one oracle call with the
/// target prepared in |−⟩.
fn phase_marked(plan: &GroverPlan) -> Vec<String> {
    let oracle = grover::oracle_circuit(plan).unwrap();
    let layout = &oracle.layout;
    let mut c = Circuit::new();
    for r in oracle.circuit.registers() {
        c.add_register(&r.name, r.range.len()).unwrap();
    }
    c.x(layout.target).unwrap();
    c.h(layout.target).unwrap();
    for (q, bit) in layout.messages[0].iter().zip(plan.pairs()[0].plaintext.bits()) {
        if bit {
            c.x(q).unwrap();
        }
    }
    let key_bits = layout.key.len();
    let mut marked = Vec::new();
    for key in 0..1usize << key_bits {
        let mut circ = c.clone();
        for i in 0..key_bits {
            if (key >> (key_bits - 1 - i)) & 1 == 1 {
                circ.x(layout.key.at(i)).unwrap();
            }
        }
        let before = simon_grover::sim::run_statevector(&circ, &BasisState::for_circuit(&circ), &SimConfig::default())
            .unwrap();
        for g in oracle.circuit.gates() {
            circ.push(g.clone()).unwrap();
        }
        let after = simon_grover::sim::run_statevector(&circ, &BasisState::for_circuit(&circ), &SimConfig::default())
            .unwrap();
        let overlap: num_complex::Complex64 = before
            .amplitudes()
            .iter()
            .zip(after.amplitudes())
            .map(|(a, b)| a.conj() * b)
            .sum();
        if (overlap.re + 1.0).abs() < 1e-9 {
            marked.push(format!("{key:0key_bits$b}"));
        }
    }
    marked
}

fn criterion_7() -> Check {
    let mut c = Check::default();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for pair in [TOY_PAIR_1, TOY_PAIR_2] {
        let oracle = grover::oracle_circuit(&toy_plan(pair)).unwrap().circuit;
        let twice = simon_grover::circuit::compose(&oracle, &oracle).unwrap();
        for d in 0..50 {
            let bits: Vec<bool> = (0..twice.width()).map(|_| rand::Rng::gen(&mut rng)).collect();
            let mut input = BasisState::zeros(twice.width());
            for (i, b) in bits.iter().enumerate() {
                input.set(Qubit(i as u32), *b);
            }
            let out = run_basis(&twice, &input).unwrap();
            c.expect(out == input, || format!("pair {pair} state {d}: oracle² is not the identity"));
        }
    }
    for controls in 1..=6usize {
        let mut wide = Circuit::new();
        let ctl = wide.add_register("ctl", controls).unwrap();
        let tgt = wide.add_register("tgt", 1).unwrap().at(0);
        wide.mcx(ctl.iter().collect(), tgt).unwrap();
        let lowered = wide.lower_multi_controlled().unwrap();
        c.expect(lowered.gates().iter().all(|g| !g.is_wide()), || format!("{controls} controls: wide gate left"));
        for input in 0..1u64 << (controls + 1) {
            let mut state = BasisState::zeros(lowered.width());
            for q in 0..=controls {
                state.set(Qubit(q as u32), (input >> q) & 1 == 1);
            }
            let out = run_basis(&lowered, &state).unwrap();
            let all = (0..controls).all(|q| (input >> q) & 1 == 1);
            let mut want = state.clone();
            if all {
                want.flip(tgt);
            }
            c.expect(out == want, || format!("{controls} controls, input {input:b}: ladder disagrees"));
        }
    }
    c
}

fn criterion_8(results: &[(u8, bool)]) -> Check {
    let mut c = Check::default();
    let p = Variant::Simon32_64.params();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let (_, pairs) = grover::random_pairs(&p, 3, &mut rng).unwrap();
    let plan = GroverPlan::new(p, pairs).unwrap();
    let refused = grover::run_search(&plan, &SimConfig::default(), 0, 0);
    c.expect(matches!(refused, Err(Error::WidthExceeded { .. })), || {
        "full-scale search was not refused by the dense simulator".into()
    });
    for v in Variant::ALL {
        let t4 = cost::table4_row(v).unwrap();
        let t5 = cost::table5_row(v).unwrap();
        let it = (grover::grover_iterations(v.params().key_bits()).unwrap() as f64).log2();
        for (col, one, all) in [
            ("Clifford", t4.clifford_count, t5.clifford_count),
            ("T", t4.t_count, t5.t_count),
            ("T-depth", t4.t_depth, t5.t_depth),
        ] {
            let want = (one as f64).log2() + it;
            c.expect((all.log2() - want).abs() < 1e-9, || format!("{v} {col}: search row is not oracle × iterations"));
        }
    }
    for (id, pass) in results {
        if matches!(id, 5 | 6) {
            c.expect(*pass, || format!("criterion {id} failed"));
        }
    }
    c.note("full-scale figures rest on the closed forms and the 6-bit oracle checks".into());
    c
}

fn main() {
    let criteria: [(u8, &str, Option<Duration>); 8] = [
        (1, "classical correctness", Some(Duration::from_secs(5))),
        (2, "circuit equivalence", Some(Duration::from_secs(60))),
        (3, "cipher cost table", None),
        (4, "oracle cost table", None),
        (5, "search cost table and depth budget", None),
        (6, "Grover demo fidelity", Some(Duration::from_secs(30))),
        (7, "oracle reversibility and MCX ladder", None),
        (8, "full-scale results via closed forms", None),
    ];
    let mut results = Vec::new();
    for (id, name, budget) in criteria {
        let start = Instant::now();
        let mut check = match id {
            1 => criterion_1(),
            2 => criterion_2(),
            3 => criterion_3(),
            4 => criterion_4(),
            5 => criterion_5(),
            6 => criterion_6(),
            7 => criterion_7(),
            _ => criterion_8(&results),
        };
        let elapsed = start.elapsed();
        if let Some(b) = budget {
            check.expect(elapsed <= b, || format!("took {elapsed:.2?}, budget {b:?}"));
        }
        let pass = check.failures.is_empty();
        println!(
            "criterion {id} [{name}]: {} ({elapsed:.2?})",
            if pass { "PASS" } else { "FAIL" }
        );
        for f in &check.failures {
            println!("    fail: {f}");
        }
        for n in &check.notes {
            println!("    note: {n}");
        }
        results.push((id, pass));
    }
    let failed: Vec<u8> = results.iter().filter(|r| !r.1).map(|r| r.0).collect();
    if failed.is_empty() {
        println!("acceptance: all criteria pass");
    } else {
        println!("acceptance: failing criteria {failed:?}");
        std::process::exit(1);
    }
}
