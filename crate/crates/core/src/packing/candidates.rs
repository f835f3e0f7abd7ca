use std::collections::{BTreeSet, HashMap, HashSet};

use crate::certificates::unit::{canonical_kind, Unit, UnitKind};
use crate::degeneration::Subdivision;
use crate::lattice::{disjoint, LatticePoint, Polytope};

fn subsets(items: &[LatticePoint], k: usize) -> Vec<Vec<LatticePoint>> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    if k > items.len() {
        return out;
    }
    loop {
        out.push(idx.iter().map(|&i| items[i]).collect());
        let mut i = k;
        while i > 0 && idx[i - 1] == items.len() - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Every legal unit of the allowed kinds in every cell of `region`, ordered
/// by (cell anchor, cell orientation, kind, vertices). Units are tagged with
/// region index 0.
pub fn enumerate_candidate_units(region: &Subdivision, kinds: &BTreeSet<UnitKind>) -> Vec<Unit> {
    let mut keyed = Vec::new();
    let mut seen: HashSet<Vec<LatticePoint>> = HashSet::new();
    for (ci, cell) in region.cells().iter().enumerate() {
        let mut sets = subsets(cell.vertices(), 4);
        if cell.vertices().len() == 8 {
            sets.push(cell.vertices().to_vec());
        }
        for s in sets {
            let Ok(kind) = canonical_kind(cell, &s) else { continue };
            if !kinds.contains(&kind) || !seen.insert(s.clone()) {
                continue;
            }
            let key = (cell.anchor, cell.orientation, kind.search_rank(), s.clone());
            keyed.push((key, Unit::new(kind, 0, ci, s)));
        }
    }
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    keyed.into_iter().map(|(_, u)| u).collect()
}

/// Pairs of vertex-disjoint units whose closed hulls still meet. Units that
/// share a lattice point are not listed.
pub(crate) fn hull_conflicts(region: &Subdivision, units: &[Unit]) -> Vec<Vec<u32>> {
    let hulls: Vec<Polytope> = units.iter().map(|u| Polytope::hull(&u.vertices).expect("nonempty")).collect();
    // cells meeting at a lattice point are the only ones whose units can touch
    let mut by_point: HashMap<LatticePoint, Vec<usize>> = HashMap::new();
    for (ci, c) in region.cells().iter().enumerate() {
        for v in c.vertices() {
            by_point.entry(*v).or_default().push(ci);
        }
    }
    let mut near: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); region.cells().len()];
    for cells in by_point.values() {
        for &a in cells {
            near[a].extend(cells.iter().copied());
        }
    }
    let mut by_cell: Vec<Vec<usize>> = vec![Vec::new(); region.cells().len()];
    for (i, u) in units.iter().enumerate() {
        by_cell[u.cell].push(i);
    }
    let mut adj: Vec<Vec<u32>> = vec![Vec::new(); units.len()];
    for (ca, others) in near.iter().enumerate() {
        for &cb in others.iter().filter(|&&cb| cb >= ca) {
            for &i in &by_cell[ca] {
                for &j in &by_cell[cb] {
                    if ca == cb && j <= i {
                        continue;
                    }
                    let share = units[i].vertices.iter().any(|p| units[j].vertices.binary_search(p).is_ok());
                    if !share && !disjoint(&hulls[i], &hulls[j]) {
                        adj[i].push(j as u32);
                        adj[j].push(i as u32);
                    }
                }
            }
        }
    }
    for a in &mut adj {
        a.sort_unstable();
        a.dedup();
    }
    adj
}
