//! Browser bindings: the expected-dimension table, certificate summaries
//! per degree, and single interpolation-rank queries. Every export returns
//! a JSON string so the page can render it without extra glue.

use ahtoric::certificates::{config_for, expected_dimension};
use ahtoric::oracle::{interpolation_rank, RankProblem};
use serde_json::json;
use wasm_bindgen::prelude::*;

const MAX_TABLE_DEGREE: u32 = 200;

/// Rows `d, N_d, n_d, codim class` for `1 ≤ d ≤ d_max`.
#[wasm_bindgen]
pub fn expected_table(d_max: u32) -> Result<String, String> {
    if !(1..=MAX_TABLE_DEGREE).contains(&d_max) {
        return Err(format!("degree must lie in 1..={MAX_TABLE_DEGREE}"));
    }
    let rows: Vec<_> = (1..=d_max as i64).map(expected_dimension).collect();
    Ok(json!(rows).to_string())
}

/// Builds and verifies the certificate for `Δ_d` and reports its unit
/// counts and per-layer coverage.
#[wasm_bindgen]
pub fn certificate_summary(d: u32) -> Result<String, String> {
    if !(5..=40).contains(&d) {
        return Err("degree must lie in 5..=40".into());
    }
    let rep = config_for(d as i64).map_err(|e| e.to_string())?.verify();
    let kinds: serde_json::Map<String, serde_json::Value> =
        rep.kind_counts.iter().map(|(k, n)| (k.short_name().to_string(), json!(n))).collect();
    Ok(json!({
        "d": d,
        "passed": rep.passed,
        "claimed_k": rep.claimed_k,
        "contribution": rep.contribution,
        "regions": rep.regions,
        "points": rep.region_points,
        "kinds": kinds,
        "uncovered": rep.uncovered,
        "layers": rep.layers,
        "failure": rep.failure.map(|f| f.reason),
    })
    .to_string())
}

/// Rank of the tangent-space matrix for `k + 1` general points of `P^n`
/// under degree-`d` forms.
#[wasm_bindgen]
pub fn oracle_rank(n: usize, d: usize, k: usize, seed: u64) -> Result<String, String> {
    let p = RankProblem { seed, ..RankProblem::new(n, d, k) };
    let r = interpolation_rank(&p).map_err(|e| e.to_string())?;
    Ok(json!({
        "n": r.n, "d": r.d, "k": r.k, "points": r.k + 1,
        "rank": r.rank, "expected": r.expected, "defect": r.defect,
    })
    .to_string())
}
