//! Browser bindings. Each export wraps a plain function returning
//! `Result<String, String>` so the logic also runs (and is tested) natively.

use serde_json::json;
use simon_grover::cost;
use simon_grover::grover::{self, GroverPlan, PlainCipherPair};
use simon_grover::sim::SimConfig;
use simon_grover::{classical, CipherParams, CipherState, Variant};
use wasm_bindgen::prelude::*;

/// Widest circuit the page will simulate.
const PAGE_CAP: usize = 16;
const CURVE_LEN: u64 = 12;

fn params(cipher: &str) -> Result<CipherParams, String> {
    if cipher.contains(',') {
        CipherParams::parse_reduced(cipher)
    } else {
        cipher.parse::<Variant>().map(Variant::params)
    }
    .map_err(|e| e.to_string())
}

/// Encrypts (or decrypts) one hex block; `cipher` is a variant id or a
/// reduced spec string.
pub fn crypt(cipher: &str, key_hex: &str, block_hex: &str, decrypt: bool) -> Result<String, String> {
    let p = params(cipher)?;
    let key = p.key_from_hex(key_hex).map_err(|e| e.to_string())?;
    let block = CipherState::from_hex(block_hex, p.word_size()).map_err(|e| e.to_string())?;
    let out = if decrypt {
        classical::decrypt(&p, &key, block)
    } else {
        classical::encrypt(&p, &key, block)
    };
    out.map(|s| s.to_hex()).map_err(|e| e.to_string())
}

/// Grover search on the 6-bit cipher for one `plaintext ciphertext` line.
/// Returns the exact key distribution after `iterations` steps, the top two
/// keys, the marked set, and the simulated success curve next to the
/// closed form.
pub fn grover_search(pair_line: &str, iterations: u64) -> Result<String, String> {
    let p = CipherParams::reduced_6bit();
    let pair = PlainCipherPair::parse_line(pair_line, p.word_size()).map_err(|e| e.to_string())?;
    let plan = GroverPlan::new(p, vec![pair])
        .map_err(|e| e.to_string())?
        .with_iterations(iterations.min(64));
    let config = SimConfig {
        cap: PAGE_CAP,
        ..SimConfig::default()
    };
    let marked = grover::oracle_truth_table(&plan).map_err(|e| e.to_string())?.marked;
    let run = grover::run_search(&plan, &config, 0, 0).map_err(|e| e.to_string())?;
    let curve = grover::success_curve(&plan, &marked, CURVE_LEN, &config).map_err(|e| e.to_string())?;
    let closed: Vec<f64> = (0..=CURVE_LEN)
        .map(|j| grover::success_probability(6, marked.len() as u64, j))
        .collect();
    let value = json!({
        "iterations": plan.iterations(),
        "marked": marked,
        "top2": run.top_keys(2),
        "distribution": run.key_distribution,
        "curve": curve,
        "closed_form": closed,
    });
    Ok(value.to_string())
}

/// One resource table (3, 4 or 5) for every standard variant as JSON rows.
pub fn estimate(table: u8) -> Result<String, String> {
    let rows: Vec<serde_json::Value> = Variant::ALL
        .iter()
        .map(|&v| -> Result<serde_json::Value, String> {
            let e = |e: simon_grover::Error| e.to_string();
            Ok(match table {
                3 => serde_json::to_value(cost::table3_row(v)),
                4 => serde_json::to_value(cost::table4_row(v).map_err(e)?),
                5 => serde_json::to_value(cost::table5_row(v).map_err(e)?),
                other => return Err(format!("no table {other}")),
            }
            .expect("rows serialize"))
        })
        .collect::<Result<_, _>>()?;
    Ok(serde_json::Value::Array(rows).to_string())
}

fn js(r: Result<String, String>) -> Result<String, JsValue> {
    r.map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = encrypt)]
pub fn encrypt_js(cipher: &str, key_hex: &str, block_hex: &str) -> Result<String, JsValue> {
    js(crypt(cipher, key_hex, block_hex, false))
}

#[wasm_bindgen(js_name = decrypt)]
pub fn decrypt_js(cipher: &str, key_hex: &str, block_hex: &str) -> Result<String, JsValue> {
    js(crypt(cipher, key_hex, block_hex, true))
}

#[wasm_bindgen(js_name = groverSearch)]
pub fn grover_search_js(pair_line: &str, iterations: u32) -> Result<String, JsValue> {
    js(grover_search(pair_line, iterations as u64))
}

#[wasm_bindgen(js_name = estimate)]
pub fn estimate_js(table: u8) -> Result<String, JsValue> {
    js(estimate(table))
}
