use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use super::unit::{canonical_kind, Unit, UnitKind};
use crate::degeneration::{check_regularity, CellKind, Subdivision};
use crate::lattice::{disjoint, LatticePoint, Polytope};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub builder: String,
    pub seed: u64,
}

/// Disjoint units placed in subdivided regions, claiming that `Sec_k` is
/// not defective for `k = claimed_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub d: Option<i64>,
    pub regions: Vec<Subdivision>,
    pub units: Vec<Unit>,
    pub claimed_k: i64,
    pub provenance: Provenance,
}

/// Cell kinds whose limit tetrahedra have a recorded pass of the
/// limit-projection check. The verifier trusts this record instead of
/// redoing the linear algebra; the oracle test suite re-derives it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PreconditionLedger {
    pub passed: BTreeSet<CellKind>,
}

impl PreconditionLedger {
    pub fn recorded() -> Self {
        PreconditionLedger {
            passed: [CellKind::Cube, CellKind::SigmaBlock, CellKind::Semicube].into_iter().collect(),
        }
    }

    pub fn empty() -> Self {
        PreconditionLedger { passed: BTreeSet::new() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub regularity: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { regularity: true }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub reason: String,
    pub units: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LayerTally {
    pub z: i64,
    pub points: usize,
    pub uncovered: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub passed: bool,
    pub d: Option<i64>,
    pub claimed_k: i64,
    pub units: usize,
    pub contribution: i64,
    pub kind_counts: BTreeMap<UnitKind, usize>,
    pub regions: usize,
    pub region_points: usize,
    pub uncovered: Vec<LatticePoint>,
    pub layers: Vec<LayerTally>,
    pub failure: Option<Failure>,
}

impl Certificate {
    pub fn contribution(&self) -> i64 {
        self.units.iter().map(|u| u.contribution() as i64).sum()
    }

    pub fn kind_counts(&self) -> BTreeMap<UnitKind, usize> {
        let mut m = BTreeMap::new();
        for u in &self.units {
            *m.entry(u.kind).or_insert(0) += 1;
        }
        m
    }

    pub fn verify(&self) -> VerificationReport {
        self.verify_with(&PreconditionLedger::recorded(), VerifyOptions::default())
    }

    pub fn verify_with(&self, ledger: &PreconditionLedger, opts: VerifyOptions) -> VerificationReport {
        let mut points: BTreeSet<LatticePoint> = BTreeSet::new();
        let mut region_points = 0;
        for r in &self.regions {
            let pts = r.lattice_points();
            region_points += pts.len();
            points.extend(pts);
        }
        let mut covered: BTreeSet<LatticePoint> = BTreeSet::new();
        for u in &self.units {
            covered.extend(u.vertices.iter().copied());
        }
        let uncovered: Vec<LatticePoint> = points.difference(&covered).copied().collect();
        let mut layers: BTreeMap<i64, LayerTally> = BTreeMap::new();
        for p in &points {
            let t = layers.entry(p.0[2]).or_insert(LayerTally { z: p.0[2], points: 0, uncovered: 0 });
            t.points += 1;
        }
        for p in &uncovered {
            layers.get_mut(&p.0[2]).expect("layer").uncovered += 1;
        }
        let failure = if region_points != points.len() {
            Some(Failure { reason: "regions share lattice points".into(), units: vec![] })
        } else {
            self.first_failure(ledger, opts)
        };
        VerificationReport {
            passed: failure.is_none(),
            d: self.d,
            claimed_k: self.claimed_k,
            units: self.units.len(),
            contribution: self.contribution(),
            kind_counts: self.kind_counts(),
            regions: self.regions.len(),
            region_points,
            uncovered,
            layers: layers.into_values().collect(),
            failure,
        }
    }

    fn first_failure(&self, ledger: &PreconditionLedger, opts: VerifyOptions) -> Option<Failure> {
        let fail = |reason: String, units: Vec<usize>| Some(Failure { reason, units });
        if opts.regularity {
            for r in &self.regions {
                match check_regularity(r) {
                    Ok(rep) if rep.passed => {}
                    Ok(rep) => return fail(format!("region {} is not regular: {:?}", r.name, rep.violation), vec![]),
                    Err(e) => return fail(format!("region {}: {e}", r.name), vec![]),
                }
            }
        }
        for (i, u) in self.units.iter().enumerate() {
            let Some(cell) = self.regions.get(u.region).and_then(|r| r.cells().get(u.cell)) else {
                return fail(format!("unit {i} refers to a missing cell"), vec![i]);
            };
            let mut sorted = u.vertices.clone();
            sorted.sort();
            sorted.dedup();
            if sorted != u.vertices {
                return fail(format!("unit {i} vertices are not sorted and distinct"), vec![i]);
            }
            match canonical_kind(cell, &u.vertices) {
                Ok(k) if k == u.kind => {}
                Ok(k) => return fail(format!("unit {i} is labelled {} but is a {k}", u.kind), vec![i]),
                Err(e) => return fail(format!("unit {i} is illegal: {e}"), vec![i]),
            }
            if u.kind.is_limit() && !u.kind.host_kind().is_some_and(|h| ledger.passed.contains(&h)) {
                return fail(format!("unit {i}: no recorded precondition for {}", u.kind), vec![i]);
            }
        }
        let mut owner: HashMap<LatticePoint, usize> = HashMap::new();
        for (i, u) in self.units.iter().enumerate() {
            for p in &u.vertices {
                if let Some(&j) = owner.get(p) {
                    return fail(format!("units {j} and {i} share the point {p}"), vec![j, i]);
                }
                owner.insert(*p, i);
            }
        }
        if let Some((i, j)) = first_overlap(&self.units) {
            return fail(format!("units {i} and {j} have intersecting hulls"), vec![i, j]);
        }
        if self.contribution() != self.claimed_k + 1 {
            return fail(
                format!("contributions sum to {} but the claim needs {}", self.contribution(), self.claimed_k + 1),
                vec![],
            );
        }
        None
    }

    pub fn to_json(&self) -> serde_json::Value {
        let units: Vec<serde_json::Value> = self
            .units
            .iter()
            .map(|u| {
                serde_json::json!({
                    "kind": u.kind,
                    "region": u.region,
                    "cell": u.cell,
                    "vertices": u.vertices,
                })
            })
            .collect();
        serde_json::json!({
            "d": self.d,
            "claimed_k": self.claimed_k,
            "regions": self.regions.iter().map(|r| r.name.clone()).collect::<Vec<_>>(),
            "units": units,
            "provenance": self.provenance,
        })
    }
}

impl Certificate {
    /// Stable text form: header fields first, one unit per line.
    pub fn to_file_string(&self) -> String {
        let v = self.to_json();
        let mut out = String::from("{\n");
        for key in ["d", "claimed_k", "provenance", "regions"] {
            out.push_str(&format!("  \"{key}\": {},\n", v[key]));
        }
        out.push_str("  \"units\": [\n");
        let units = v["units"].as_array().expect("units array");
        for (i, u) in units.iter().enumerate() {
            let sep = if i + 1 < units.len() { "," } else { "" };
            out.push_str(&format!("    {u}{sep}\n"));
        }
        out.push_str("  ]\n}\n");
        out
    }
}

/// First pair (in lexicographic order of indices) of units with meeting
/// closed hulls, checking only pairs whose bounding boxes touch.
fn first_overlap(units: &[Unit]) -> Option<(usize, usize)> {
    let hulls: Vec<Polytope> = units.iter().map(|u| Polytope::hull(&u.vertices).expect("nonempty")).collect();
    let bucket = |c: i64| c.div_euclid(2);
    let mut grid: HashMap<[i64; 3], Vec<usize>> = HashMap::new();
    for (i, h) in hulls.iter().enumerate() {
        let (lo, hi) = h.bbox();
        for x in bucket(lo[0])..=bucket(hi[0]) {
            for y in bucket(lo[1])..=bucket(hi[1]) {
                for z in bucket(lo[2])..=bucket(hi[2]) {
                    grid.entry([x, y, z]).or_default().push(i);
                }
            }
        }
    }
    let mut pairs: BTreeSet<(usize, usize)> = BTreeSet::new();
    for v in grid.values() {
        for (a, &i) in v.iter().enumerate() {
            for &j in &v[a + 1..] {
                pairs.insert((i.min(j), i.max(j)));
            }
        }
    }
    pairs.into_iter().find(|&(i, j)| !disjoint(&hulls[i], &hulls[j]))
}
