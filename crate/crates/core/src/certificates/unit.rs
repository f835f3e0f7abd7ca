use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::degeneration::{Cell, CellKind};
use crate::error::Error;
use crate::lattice::{det3, LatticePoint};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum UnitKind {
    TangentTetra,
    LimitTetraInCube,
    LimitTetraInSigma,
    LimitTetraInSemicube,
    SegreCubePair,
}

impl UnitKind {
    pub const ALL: [UnitKind; 5] = [
        UnitKind::TangentTetra,
        UnitKind::LimitTetraInCube,
        UnitKind::LimitTetraInSigma,
        UnitKind::LimitTetraInSemicube,
        UnitKind::SegreCubePair,
    ];

    pub const TETRAS: [UnitKind; 4] = [
        UnitKind::TangentTetra,
        UnitKind::LimitTetraInCube,
        UnitKind::LimitTetraInSigma,
        UnitKind::LimitTetraInSemicube,
    ];

    pub fn contribution(self) -> u32 {
        match self {
            UnitKind::SegreCubePair => 2,
            _ => 1,
        }
    }

    pub fn is_limit(self) -> bool {
        matches!(
            self,
            UnitKind::LimitTetraInCube | UnitKind::LimitTetraInSigma | UnitKind::LimitTetraInSemicube
        )
    }

    /// The cell kind a limit tetrahedron of this kind lives in.
    pub fn host_kind(self) -> Option<CellKind> {
        match self {
            UnitKind::LimitTetraInCube | UnitKind::SegreCubePair => Some(CellKind::Cube),
            UnitKind::LimitTetraInSigma => Some(CellKind::SigmaBlock),
            UnitKind::LimitTetraInSemicube => Some(CellKind::Semicube),
            UnitKind::TangentTetra => None,
        }
    }

    /// Tie-break order used when enumerating candidates: whole cubes first,
    /// then tangent tetrahedra, then limits.
    pub fn search_rank(self) -> u8 {
        match self {
            UnitKind::SegreCubePair => 0,
            UnitKind::TangentTetra => 1,
            UnitKind::LimitTetraInCube => 2,
            UnitKind::LimitTetraInSigma => 3,
            UnitKind::LimitTetraInSemicube => 4,
        }
    }

    pub fn short_name(self) -> &'static str {
        match self {
            UnitKind::TangentTetra => "tangent",
            UnitKind::LimitTetraInCube => "limit-cube",
            UnitKind::LimitTetraInSigma => "limit-sigma",
            UnitKind::LimitTetraInSemicube => "limit-semicube",
            UnitKind::SegreCubePair => "cube",
        }
    }
}

impl fmt::Display for UnitKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for UnitKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        UnitKind::ALL
            .into_iter()
            .find(|k| k.short_name() == s || k.to_string() == s)
            .ok_or_else(|| Error::Parse(format!("unknown unit kind {s:?}")))
    }
}

/// A witness placed in one cell of one region of a certificate.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Unit {
    pub kind: UnitKind,
    pub region: usize,
    pub cell: usize,
    /// Sorted lattice points.
    pub vertices: Vec<LatticePoint>,
}

impl Unit {
    pub fn new(kind: UnitKind, region: usize, cell: usize, mut vertices: Vec<LatticePoint>) -> Self {
        vertices.sort();
        vertices.dedup();
        Unit { kind, region, cell, vertices }
    }

    pub fn contribution(&self) -> u32 {
        self.kind.contribution()
    }
}

/// If `verts` is a vertex of `cell` together with its three edge neighbours
/// spanning a unimodular corner, returns that vertex.
pub fn tangent_apex(cell: &Cell, verts: &[LatticePoint]) -> Option<LatticePoint> {
    if verts.len() != 4 {
        return None;
    }
    verts.iter().copied().find(|&v| {
        let nb = cell.geometry.edge_neighbors(&v);
        if nb.len() != 3 {
            return false;
        }
        let others: Vec<LatticePoint> = verts.iter().copied().filter(|&u| u != v).collect();
        others.iter().all(|u| nb.contains(u))
            && det3((others[0] - v).0, (others[1] - v).0, (others[2] - v).0).abs() == 1
    })
}

/// The kind a vertex set must be labelled with inside `cell`, or the reason
/// it is not a legal unit there.
pub fn canonical_kind(cell: &Cell, verts: &[LatticePoint]) -> Result<UnitKind, String> {
    let cell_vertices = cell.vertices();
    if let Some(p) = verts.iter().find(|p| !cell_vertices.contains(p)) {
        return Err(format!("point {p} is not a vertex of the host cell"));
    }
    match verts.len() {
        8 if cell.kind == CellKind::Cube && cell_vertices.len() == 8 => Ok(UnitKind::SegreCubePair),
        4 => {
            let d = [1, 2, 3].map(|i| (verts[i] - verts[0]).0);
            if det3(d[0], d[1], d[2]) == 0 {
                return Err("tetrahedron is degenerate".into());
            }
            if tangent_apex(cell, verts).is_some() {
                return Ok(UnitKind::TangentTetra);
            }
            match cell.kind {
                CellKind::Cube => Ok(UnitKind::LimitTetraInCube),
                CellKind::SigmaBlock => Ok(UnitKind::LimitTetraInSigma),
                CellKind::Semicube => Ok(UnitKind::LimitTetraInSemicube),
                k => Err(format!("no limit tetrahedra in a {k} cell")),
            }
        }
        n => Err(format!("{n} points do not form a unit of a {} cell", cell.kind)),
    }
}
