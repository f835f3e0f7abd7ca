use std::fmt::Write;

use ahtoric::certificates::claims::{classify_all_k, ClaimSet, Justification, Range};
use ahtoric::certificates::configs::load_certificate;
use ahtoric::certificates::{check_identities, config_for, expected_dimension, Certificate, UnitKind, VerificationReport};
use ahtoric::degeneration::{build_block, build_layer, build_standard_subdivision, check_regularity, BlockName, Subdivision};
use ahtoric::lattice::export::many_to_off;
use ahtoric::oracle::interpolation::{interpolation_rank_with_ceiling, is_exceptional, RankProblem, RankResult, DEFAULT_CEILING};
use ahtoric::packing::{solve, PackingProblem, SolveOutcome};
use ahtoric::{Error, Polytope};
use serde::Serialize;

use crate::config::{envelope, Format, RunConfig};

/// What a command prints and how the process exits.
pub struct Outcome {
    pub report: String,
    pub code: i32,
}

impl Outcome {
    pub fn usage(msg: impl Into<String>) -> Self {
        Outcome { report: msg.into() + "\n", code: 2 }
    }
}

/// Bad input maps to exit code 2, anything else to 1.
pub fn from_error(e: Error) -> Outcome {
    let usage = matches!(
        e,
        Error::UnsupportedDegree(..) | Error::InvalidParams(_) | Error::UnknownBlock(_) | Error::Parse(_) | Error::CeilingExceeded { .. }
    );
    Outcome { report: format!("error: {e}\n"), code: if usage { 2 } else { 1 } }
}

#[derive(Serialize)]
pub struct DegreeRun {
    pub d: i64,
    pub regularity_passed: bool,
    pub cells: usize,
    pub verification: VerificationReport,
    pub claims: Option<ClaimSet>,
    pub oracle: Option<RankResult>,
    pub oracle_skipped: bool,
    pub passed: bool,
}

impl DegreeRun {
    fn covered(&self) -> usize {
        self.verification.region_points - self.verification.uncovered.len()
    }
}

/// Regularity of `Δ_d`, the certificate, its claims, and the numerical
/// check wherever a claim relies on one.
pub fn run_degree(d: i64, cert: Option<Certificate>, cfg: &RunConfig) -> ahtoric::Result<DegreeRun> {
    let sub = build_standard_subdivision(d)?;
    let reg = check_regularity(&sub)?;
    let cert = match cert {
        Some(c) => c,
        None => config_for(d)?,
    };
    let verification = cert.verify();
    let claims = if verification.passed && cert.d == Some(d) { Some(classify_all_k(d)?) } else { None };
    let mut oracle = None;
    let mut oracle_skipped = false;
    if claims.as_ref().is_some_and(|c| c.claims.iter().any(|c| c.oracle_required)) {
        let k = expected_dimension(d).n_d as usize + 1;
        let p = RankProblem { prime: cfg.prime, seed: cfg.seed, trials: cfg.trials, ..RankProblem::new(3, d as usize, k) };
        match interpolation_rank_with_ceiling(&p, DEFAULT_CEILING) {
            Ok(r) => oracle = Some(r),
            Err(Error::CeilingExceeded { .. }) => oracle_skipped = true,
            Err(e) => return Err(e),
        }
    }
    let passed = reg.passed && claims.is_some() && oracle.as_ref().is_none_or(|r| r.defect == 0);
    Ok(DegreeRun { d, regularity_passed: reg.passed, cells: reg.cells, verification, claims, oracle, oracle_skipped, passed })
}

fn justification_name(j: Justification) -> &'static str {
    match j {
        Justification::Monotonicity => "monotonicity",
        Justification::Certificate => "certificate",
        Justification::Filling => "secant variety fills the space",
        Justification::Hyperplane => "hypersurface plus one tangent space",
        Justification::Projection => "projection argument",
        Justification::ExtraTetrahedron => "extra tetrahedron",
    }
}

fn degree_text(r: &DegreeRun) -> String {
    let v = &r.verification;
    let mut s = String::new();
    let status = if v.passed { "certified" } else { "NOT certified" };
    writeln!(s, "d = {}: k = {} {status}, {}/{} points", r.d, v.claimed_k, r.covered(), v.region_points).unwrap();
    writeln!(s, "  regularity: {} ({} cells)", if r.regularity_passed { "pass" } else { "fail" }, r.cells).unwrap();
    let kinds: Vec<String> = v.kind_counts.iter().map(|(k, n)| format!("{} {n}", k.short_name())).collect();
    writeln!(s, "  units: {} ({}), regions: {}", v.units, kinds.join(", "), v.regions).unwrap();
    if let Some(f) = &v.failure {
        writeln!(s, "  failure: {}", f.reason).unwrap();
    }
    if let Some(c) = &r.claims {
        for claim in &c.claims {
            let range = match claim.range {
                Range::Below => format!("k < {}", c.n_d),
                Range::At => format!("k = {}", c.n_d),
                Range::Above => format!("k > {}", c.n_d),
            };
            let extra = if claim.oracle_required {
                match (&r.oracle, r.oracle_skipped) {
                    (Some(o), _) => format!(" (oracle at k = {}: rank {} of {}, defect {})", o.k, o.rank, o.expected, o.defect),
                    (None, true) => " (oracle skipped: over the matrix ceiling)".into(),
                    _ => String::new(),
                }
            } else {
                String::new()
            };
            writeln!(s, "  {range}: {}{extra}", justification_name(claim.justification)).unwrap();
        }
    }
    writeln!(s, "result: {}", if r.passed { "pass" } else { "FAIL" }).unwrap();
    s
}

pub fn verify(d: i64, certificate: Option<&str>, cfg: &RunConfig) -> Outcome {
    if d < 5 {
        return Outcome::usage("d ≥ 5 required; d ≤ 4 cases are classical");
    }
    let cert = match certificate.map(std::fs::read_to_string) {
        None => None,
        Some(Err(e)) => return Outcome::usage(format!("cannot read certificate: {e}")),
        Some(Ok(text)) => match load_certificate(&text) {
            Ok(c) => Some(c),
            Err(e) => return from_error(e),
        },
    };
    let run = match run_degree(d, cert, cfg) {
        Ok(r) => r,
        Err(e) => return from_error(e),
    };
    let code = if run.passed { 0 } else { 1 };
    let report = match cfg.format {
        Some(Format::Json) => envelope(cfg, serde_json::json!({ "result": run })),
        _ => degree_text(&run),
    };
    Outcome { report, code }
}

pub fn sweep(d_max: i64, cfg: &RunConfig) -> Outcome {
    if d_max < 5 {
        return Outcome::usage("empty range: sweeps start at d = 5");
    }
    let mut runs = Vec::new();
    for d in 5..=d_max {
        match run_degree(d, None, cfg) {
            Ok(r) => runs.push(r),
            Err(e) => return from_error(e),
        }
    }
    let ids = check_identities(d_max);
    let passed = runs.iter().all(|r| r.passed) && ids.passed;
    let code = if passed { 0 } else { 1 };
    let oracle_cell = |r: &DegreeRun| match (&r.oracle, r.oracle_skipped) {
        (Some(o), _) => format!("defect {}", o.defect),
        (None, true) => "skipped".into(),
        _ => "-".into(),
    };
    let report = match cfg.format {
        Some(Format::Json) => envelope(cfg, serde_json::json!({ "degrees": runs, "identities": ids, "passed": passed })),
        Some(Format::Csv) => {
            let mut s = String::from("d,n_d,units,uncovered,codim,oracle,result\n");
            for r in &runs {
                let e = expected_dimension(r.d);
                let v = &r.verification;
                let res = if r.passed { "pass" } else { "fail" };
                writeln!(s, "{},{},{},{},{},{},{res}", r.d, e.n_d, v.units, v.uncovered.len(), e.codim_class, oracle_cell(r)).unwrap();
            }
            s
        }
        _ => {
            let mut s = format!("{:>4} {:>6} {:>6} {:>9} {:>5} {:>10}  result\n", "d", "n_d", "units", "uncovered", "codim", "oracle");
            for r in &runs {
                let e = expected_dimension(r.d);
                let v = &r.verification;
                let res = if r.passed { "pass" } else { "FAIL" };
                writeln!(s, "{:>4} {:>6} {:>6} {:>9} {:>5} {:>10}  {res}", r.d, e.n_d, v.units, v.uncovered.len(), e.codim_class, oracle_cell(r)).unwrap();
            }
            let flagged: Vec<String> = ids.flagged().map(|c| format!("d = {}: {} ≠ {}", c.d, c.lhs, c.rhs)).collect();
            writeln!(s, "identities: {} checks, {}", ids.checks.len(), if ids.passed { "pass" } else { "FAIL" }).unwrap();
            if !flagged.is_empty() {
                writeln!(s, "flagged displays: {}", flagged.join("; ")).unwrap();
            }
            writeln!(s, "result: {}", if passed { "pass" } else { "FAIL" }).unwrap();
            s
        }
    };
    Outcome { report, code }
}

#[derive(Serialize)]
struct OracleRow {
    #[serde(flatten)]
    result: RankResult,
    points: usize,
    table_exceptional: bool,
    agree: bool,
}

fn oracle_row(n: usize, d: usize, k: usize, cfg: &RunConfig) -> ahtoric::Result<OracleRow> {
    let p = RankProblem { prime: cfg.prime, seed: cfg.seed, trials: cfg.trials, ..RankProblem::new(n, d, k) };
    let result = interpolation_rank_with_ceiling(&p, DEFAULT_CEILING)?;
    let table_exceptional = is_exceptional(n, d, k + 1);
    Ok(OracleRow { agree: (result.defect > 0) == table_exceptional, points: k + 1, table_exceptional, result })
}

fn oracle_line(r: &OracleRow) -> String {
    let o = &r.result;
    let table = if r.table_exceptional { "exceptional" } else { "not exceptional" };
    let verdict = if r.agree { "agree" } else { "DISAGREE" };
    format!(
        "n = {}, d = {}, k = {} ({} points): rank {} of {}, observed defect {} (table: {table}; {verdict})\n",
        o.n, o.d, o.k, r.points, o.rank, o.expected, o.defect
    )
}

pub fn oracle_single(n: usize, d: usize, k: usize, cfg: &RunConfig) -> Outcome {
    let row = match oracle_row(n, d, k, cfg) {
        Ok(r) => r,
        Err(e) => return from_error(e),
    };
    let code = if row.agree { 0 } else { 1 };
    let report = match cfg.format {
        Some(Format::Json) => envelope(cfg, serde_json::json!({ "result": row })),
        _ => oracle_line(&row),
    };
    Outcome { report, code }
}

/// The exceptional rows at minimal size `(n, d, s)`, each with its neighbours.
pub const EXCEPTIONAL_ROWS: [(usize, usize, usize); 5] = [(2, 2, 2), (2, 4, 5), (3, 4, 9), (4, 4, 14), (4, 3, 7)];

pub fn oracle_exceptional(cfg: &RunConfig) -> Outcome {
    let mut rows = Vec::new();
    for (n, d, s) in EXCEPTIONAL_ROWS {
        for points in [s - 1, s, s + 1] {
            match oracle_row(n, d, points - 1, cfg) {
                Ok(r) => rows.push(r),
                Err(e) => return from_error(e),
            }
        }
    }
    let defective = rows.iter().skip(1).step_by(3).filter(|r| r.result.defect > 0).count();
    let neighbours_ok = rows.iter().enumerate().filter(|(i, _)| i % 3 != 1).all(|(_, r)| r.result.defect == 0);
    let agree = rows.iter().all(|r| r.agree);
    let code = if agree { 0 } else { 1 };
    let report = match cfg.format {
        Some(Format::Json) => envelope(cfg, serde_json::json!({ "rows": rows, "agree": agree })),
        _ => {
            let mut s: String = rows.iter().map(oracle_line).collect();
            let nb = if neighbours_ok { "neighbours non-defective" } else { "a neighbour is DEFECTIVE" };
            writeln!(s, "{defective}/{} rows defective, {nb}", EXCEPTIONAL_ROWS.len()).unwrap();
            s
        }
    };
    Outcome { report, code }
}

/// Region names accepted by `search` and `export`.
pub fn region_by_name(name: &str) -> ahtoric::Result<Subdivision> {
    if let Some(d) = name.strip_prefix("Delta_").and_then(|s| s.parse().ok()) {
        return build_standard_subdivision(d);
    }
    if let Some(k) = name.strip_prefix("S1_").and_then(|s| s.parse().ok()) {
        return build_layer(k);
    }
    if name == "D_6" {
        return build_standard_subdivision(6);
    }
    let b: BlockName = name.parse()?;
    let mut block = build_block(&b)?;
    if block.regions.len() != 1 {
        return Err(Error::InvalidParams(format!("{name} has {} regions; search one piece at a time", block.regions.len())));
    }
    Ok(block.regions.remove(0))
}

pub struct SearchArgs<'a> {
    pub region: &'a str,
    pub kinds: &'a [String],
    pub target: u32,
    pub max_uncovered: Option<usize>,
    pub max_limit: Option<u32>,
}

pub fn search(a: &SearchArgs<'_>, cfg: &RunConfig) -> Outcome {
    let region = match region_by_name(a.region) {
        Ok(r) => r,
        Err(e) => return from_error(e),
    };
    let mut kinds = Vec::new();
    for k in a.kinds {
        match k.parse::<UnitKind>() {
            Ok(k) => kinds.push(k),
            Err(e) => return from_error(e),
        }
    }
    if kinds.is_empty() {
        kinds = UnitKind::TETRAS.to_vec();
    }
    let mut p = PackingProblem::new(&region, kinds, a.target);
    p.max_uncovered = a.max_uncovered;
    p.max_limit = a.max_limit;
    let outcome = match solve(&p, cfg.budget) {
        Ok(o) => o,
        Err(e) => return from_error(e),
    };
    let (status, body, code) = match outcome {
        SolveOutcome::Solved(s) => {
            let units: Vec<serde_json::Value> = s
                .units
                .iter()
                .map(|u| serde_json::json!({ "kind": u.kind, "cell": u.cell, "vertices": u.vertices }))
                .collect();
            let body = serde_json::json!({
                "status": "solved",
                "region": region.name,
                "contribution": s.contribution(),
                "units": units,
                "uncovered": s.uncovered,
                "nodes_explored": s.nodes_explored,
            });
            (format!("solved: {} units, {} uncovered, {} nodes", s.units.len(), s.uncovered.len(), s.nodes_explored), body, 0)
        }
        SolveOutcome::Unsat { nodes_explored } => (
            format!("unsat after {nodes_explored} nodes"),
            serde_json::json!({ "status": "unsat", "region": region.name, "nodes_explored": nodes_explored }),
            1,
        ),
        SolveOutcome::BudgetExhausted { nodes_explored } => (
            format!("budget exhausted after {nodes_explored} nodes"),
            serde_json::json!({ "status": "budget_exhausted", "region": region.name, "nodes_explored": nodes_explored }),
            1,
        ),
    };
    let report = match cfg.format {
        Some(Format::Text) => status + "\n",
        _ => envelope(cfg, body),
    };
    Outcome { report, code }
}

pub enum ExportWhat {
    Subdivision,
    Certificate,
}

pub fn export(target: Result<i64, &str>, what: ExportWhat, cfg: &RunConfig) -> Outcome {
    let format = cfg.format.unwrap_or(Format::Json);
    if !matches!(format, Format::Json | Format::Off) {
        return Outcome::usage("export writes json or off");
    }
    let result = (|| -> ahtoric::Result<String> {
        match what {
            ExportWhat::Subdivision => {
                let sub = match target {
                    Ok(d) => build_standard_subdivision(d)?,
                    Err(name) => region_by_name(name)?,
                };
                Ok(match format {
                    Format::Off => {
                        let polys: Vec<&Polytope> = sub.cells().iter().map(|c| &c.geometry).collect();
                        many_to_off(&polys, Some(&format!("{}: {} cells", sub.name, polys.len())))
                    }
                    _ => serde_json::to_string(&sub.to_json()).expect("serialises") + "\n",
                })
            }
            ExportWhat::Certificate => {
                let cert = match target {
                    Ok(d) => config_for(d)?,
                    Err(name) => ahtoric::certificates::block_certificate(&name.parse()?)?,
                };
                Ok(match format {
                    Format::Off => {
                        let hulls: Vec<Polytope> =
                            cert.units.iter().map(|u| Polytope::hull(&u.vertices)).collect::<ahtoric::Result<_>>()?;
                        let refs: Vec<&Polytope> = hulls.iter().collect();
                        many_to_off(&refs, Some(&format!("{}: {} units", cert.provenance.builder, refs.len())))
                    }
                    _ => cert.to_file_string(),
                })
            }
        }
    })();
    match result {
        Ok(report) => Outcome { report, code: 0 },
        Err(e) => from_error(e),
    }
}
