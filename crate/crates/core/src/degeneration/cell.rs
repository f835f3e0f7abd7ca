use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::frame::Frame;
use crate::lattice::{corner, LatticePoint, Polytope};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CellKind {
    Cube,
    CornerTetra,
    SigmaBlock,
    Semicube,
    Custom,
}

impl CellKind {
    pub fn vertex_count(self) -> Option<usize> {
        match self {
            CellKind::Cube => Some(8),
            CellKind::CornerTetra => Some(4),
            CellKind::SigmaBlock => Some(7),
            CellKind::Semicube => Some(6),
            CellKind::Custom => None,
        }
    }

    /// Corner bitmask of the model shape inside the unit cube.
    fn model(self) -> Option<u8> {
        match self {
            CellKind::Cube => Some(0xff),
            CellKind::CornerTetra => Some(0b0001_0111),
            CellKind::SigmaBlock => Some(0x7f),
            CellKind::Semicube => Some(0b0111_0111),
            CellKind::Custom => None,
        }
    }
}

impl fmt::Display for CellKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// One maximal cell of a subdivision.
///
/// `orientation` is the bitmask of unit-cube corners (bit `m` of the corner
/// index is the `e_m` offset) present in the cell, when the cell sits inside
/// the unit cube at `anchor`; cells in sheared frames have no orientation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cell {
    pub kind: CellKind,
    pub anchor: LatticePoint,
    pub orientation: Option<u8>,
    pub geometry: Polytope,
}

fn corner_mask(geometry: &Polytope) -> Option<(LatticePoint, u8)> {
    let (lo, hi) = geometry.bbox();
    if (0..3).any(|m| hi[m] - lo[m] != 1) {
        return None;
    }
    let anchor = LatticePoint(lo);
    let mut mask = 0u8;
    for v in geometry.vertices() {
        let o = *v - anchor;
        mask |= 1 << (o.0[0] + 2 * o.0[1] + 4 * o.0[2]);
    }
    Some((anchor, mask))
}

/// Kind of the hull of the unit-cube corners in `mask`.
fn kind_of_mask(mask: u8) -> CellKind {
    let present: Vec<u8> = (0..8).filter(|b| mask & (1 << b) != 0).collect();
    let missing: Vec<u8> = (0..8).filter(|b| mask & (1 << b) == 0).collect();
    match present.len() {
        8 => CellKind::Cube,
        7 => CellKind::SigmaBlock,
        6 if (missing[0] ^ missing[1]).count_ones() == 1 => CellKind::Semicube,
        4 => {
            let c: Vec<[i64; 3]> = present.iter().map(|&b| (corner(b) - corner(present[0])).0).collect();
            if crate::lattice::det3(c[1], c[2], c[3]).abs() == 1 {
                CellKind::CornerTetra
            } else {
                CellKind::Custom
            }
        }
        _ => CellKind::Custom,
    }
}

/// Classifies a cell up to unimodular equivalence.
pub fn classify(geometry: &Polytope) -> CellKind {
    if geometry.dim() != 3 {
        return CellKind::Custom;
    }
    if let Some((_, mask)) = corner_mask(geometry) {
        return kind_of_mask(mask);
    }
    let verts: BTreeSet<LatticePoint> = geometry.vertices().iter().copied().collect();
    for kind in [CellKind::Cube, CellKind::CornerTetra, CellKind::SigmaBlock, CellKind::Semicube] {
        if kind.vertex_count() == Some(verts.len()) && equivalent_to_model(&verts, kind) {
            return kind;
        }
    }
    CellKind::Custom
}

fn equivalent_to_model(verts: &BTreeSet<LatticePoint>, kind: CellKind) -> bool {
    let mask = kind.model().expect("model shape");
    let model: Vec<LatticePoint> = (0..8u8).filter(|b| mask & (1 << b) != 0).map(corner).collect();
    let vs: Vec<LatticePoint> = verts.iter().copied().collect();
    for &o in &vs {
        for &a in &vs {
            for &b in &vs {
                for &c in &vs {
                    if a == o || b == o || c == o || a == b || a == c || b == c {
                        continue;
                    }
                    let cols = [(a - o).0, (b - o).0, (c - o).0];
                    let rows = [0, 1, 2].map(|r| [cols[0][r], cols[1][r], cols[2][r]]);
                    let Ok(f) = Frame::new(rows, o.0) else { continue };
                    if model.iter().all(|p| verts.contains(&f.apply(p))) {
                        return true;
                    }
                }
            }
        }
    }
    false
}

impl Cell {
    pub fn new(geometry: Polytope) -> Self {
        let kind = classify(&geometry);
        Self::with_kind(kind, geometry)
    }

    /// Builds a cell whose kind is already known (e.g. the image of a
    /// classified cell under a unimodular map).
    pub(crate) fn with_kind(kind: CellKind, geometry: Polytope) -> Self {
        let (anchor, orientation) = match corner_mask(&geometry) {
            Some((a, m)) => (a, Some(m)),
            None => (LatticePoint(geometry.bbox().0), None),
        };
        Cell { kind, anchor, orientation, geometry }
    }

    pub fn vertices(&self) -> &[LatticePoint] {
        self.geometry.vertices()
    }

    pub fn transformed(&self, f: &Frame) -> Cell {
        Cell::with_kind(self.kind, f.apply_polytope(&self.geometry))
    }
}
