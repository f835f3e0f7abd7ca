//! Placements found by the packing search, stored as data.
//!
//! The search is deterministic, so the stored placements can be regenerated
//! from scratch (see `regenerate`); configurations read the stored copy so
//! that building a certificate never searches.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use super::unit::UnitKind;
use crate::degeneration::{build_block, build_layer, build_standard_subdivision, BlockName, Subdivision};
use crate::error::{Error, Result};
use crate::lattice::LatticePoint;
use crate::packing::{solve, PackingProblem, SolveOutcome};

/// Names of the searched regions, in the order they are stored.
pub const SEARCHED: [&str; 7] = ["D_6", "S1_8", "S1_10", "S1_12", "T*_7", "T*_9", "T*_11"];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrozenUnit {
    pub kind: UnitKind,
    pub vertices: Vec<LatticePoint>,
}

const DATA: &str = include_str!("../../data/placements.json");

fn table() -> &'static BTreeMap<String, Vec<FrozenUnit>> {
    static T: OnceLock<BTreeMap<String, Vec<FrozenUnit>>> = OnceLock::new();
    T.get_or_init(|| serde_json::from_str(DATA).expect("stored placements parse"))
}

pub fn placement(name: &str) -> Result<&'static [FrozenUnit]> {
    table().get(name).map(|v| v.as_slice()).ok_or_else(|| Error::UnknownBlock(name.to_string()))
}

/// The region a stored placement lives in, in its own coordinates.
pub fn region(name: &str) -> Result<Subdivision> {
    match name {
        "D_6" => build_standard_subdivision(6),
        "S1_8" => build_layer(8),
        "S1_10" => build_layer(10),
        "S1_12" => build_layer(12),
        _ => {
            let b: BlockName = name.parse()?;
            Ok(build_block(&b)?.regions.remove(0))
        }
    }
}

/// Search parameters: kinds, target, uncovered allowance, limit caps.
pub struct SearchSpec {
    pub kinds: Vec<UnitKind>,
    pub target: u32,
    pub max_uncovered: usize,
    pub max_limit: Option<u32>,
    pub max_sigma: Option<u32>,
}

pub fn search_spec(name: &str) -> Result<SearchSpec> {
    let tetras = UnitKind::TETRAS.to_vec();
    let spec = |kinds: Vec<UnitKind>, target, max_uncovered, max_limit, max_sigma| SearchSpec {
        kinds,
        target,
        max_uncovered,
        max_limit,
        max_sigma,
    };
    Ok(match name {
        "D_6" => spec(tetras, 21, 0, Some(5), Some(1)),
        "S1_8" => spec(vec![UnitKind::TangentTetra], 20, 1, None, None),
        "S1_10" => spec(tetras, 30, 1, Some(2), Some(1)),
        "S1_12" => spec(tetras, 42, 1, Some(6), Some(1)),
        "T*_7" => spec(tetras, 28, 0, None, None),
        "T*_9" => spec(tetras, 42, 0, None, None),
        "T*_11" => spec(tetras, 56, 0, None, None),
        _ => return Err(Error::UnknownBlock(name.to_string())),
    })
}

/// Runs the search that produced a stored placement.
pub fn regenerate(name: &str, budget: u64) -> Result<Vec<FrozenUnit>> {
    let r = region(name)?;
    let s = search_spec(name)?;
    let mut p = PackingProblem::new(&r, s.kinds, s.target).max_uncovered(s.max_uncovered);
    p.max_limit = s.max_limit;
    if let Some(m) = s.max_sigma {
        p = p.max_of_kind(UnitKind::LimitTetraInSigma, m);
    }
    match solve(&p, budget)? {
        SolveOutcome::Solved(sol) => {
            Ok(sol.units.into_iter().map(|u| FrozenUnit { kind: u.kind, vertices: u.vertices }).collect())
        }
        other => Err(Error::Packing(format!("{name}: {other:?}"))),
    }
}

/// Serialises a placement table in the stored layout.
pub fn to_data(table: &BTreeMap<String, Vec<FrozenUnit>>) -> String {
    let mut out = String::from("{\n");
    for (i, (name, units)) in table.iter().enumerate() {
        out.push_str(&format!("  {}: [\n", serde_json::to_string(name).unwrap()));
        for (j, u) in units.iter().enumerate() {
            let sep = if j + 1 < units.len() { "," } else { "" };
            out.push_str(&format!("    {}{sep}\n", serde_json::to_string(u).unwrap()));
        }
        let sep = if i + 1 < table.len() { "," } else { "" };
        out.push_str(&format!("  ]{sep}\n"));
    }
    out.push_str("}\n");
    out
}
