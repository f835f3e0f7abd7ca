use std::collections::{BTreeMap, HashSet};

use serde::Serialize;

use super::cell::{Cell, CellKind};
use super::lift::AffineForm;
use crate::error::{Error, Result};
use crate::frame::Frame;
use crate::lattice::{corner, simplex, HalfSpace, LatticePoint, Polytope};

/// A polyhedral subdivision of a lattice region into cells.
///
/// The region is `ambient` minus the lattice points of `excluded`; cells are
/// interior-disjoint and together cover every lattice point of the region.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subdivision {
    pub name: String,
    ambient: Polytope,
    excluded: Vec<Polytope>,
    cells: Vec<Cell>,
    lift: Option<Vec<AffineForm>>,
}

impl Subdivision {
    pub fn new(
        name: impl Into<String>,
        ambient: Polytope,
        excluded: Vec<Polytope>,
        cells: Vec<Cell>,
        lift: Option<Vec<AffineForm>>,
    ) -> Result<Self> {
        if let Some(l) = &lift {
            if l.len() != cells.len() {
                return Err(Error::InvalidParams(format!(
                    "{} lift forms for {} cells",
                    l.len(),
                    cells.len()
                )));
            }
        }
        Ok(Subdivision { name: name.into(), ambient, excluded, cells, lift })
    }

    /// Cuts `ambient` by the unit lattice cubes. Each cell is the hull of the
    /// cube corners lying in the region; cubes meeting an excluded point are
    /// dropped. Lifted by the per-cube quadratic interpolation.
    pub fn grid(name: impl Into<String>, ambient: Polytope, excluded: Vec<Polytope>) -> Self {
        let (lo, hi) = ambient.bbox();
        let mut cells = Vec::new();
        let mut lift = Vec::new();
        for x in lo[0]..hi[0] {
            for y in lo[1]..hi[1] {
                for z in lo[2]..hi[2] {
                    let anchor = LatticePoint::new(x, y, z);
                    let corners: Vec<LatticePoint> = (0..8).map(|b| anchor + corner(b)).collect();
                    if corners.iter().any(|c| excluded.iter().any(|e| e.contains_point(c))) {
                        continue;
                    }
                    let inside: Vec<LatticePoint> =
                        corners.into_iter().filter(|c| ambient.contains_point(c)).collect();
                    if inside.len() < 4 {
                        continue;
                    }
                    let geometry = Polytope::hull(&inside).expect("nonempty");
                    if geometry.dim() < 3 {
                        continue;
                    }
                    cells.push(Cell::new(geometry));
                    lift.push(AffineForm::cube(anchor));
                }
            }
        }
        Subdivision { name: name.into(), ambient, excluded, cells, lift: Some(lift) }
    }

    pub fn ambient(&self) -> &Polytope {
        &self.ambient
    }

    pub fn excluded(&self) -> &[Polytope] {
        &self.excluded
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn lift(&self) -> Option<&[AffineForm]> {
        self.lift.as_deref()
    }

    pub fn with_lift(mut self, lift: Option<Vec<AffineForm>>) -> Result<Self> {
        if let Some(l) = &lift {
            if l.len() != self.cells.len() {
                return Err(Error::InvalidParams("lift length differs from cell count".into()));
            }
        }
        self.lift = lift;
        Ok(self)
    }

    pub fn is_excluded(&self, p: &LatticePoint) -> bool {
        self.excluded.iter().any(|e| e.contains_point(p))
    }

    /// Lattice points of the region, sorted.
    pub fn lattice_points(&self) -> Vec<LatticePoint> {
        self.ambient.lattice_points().into_iter().filter(|p| !self.is_excluded(p)).collect()
    }

    pub fn count(&self, kind: CellKind) -> usize {
        self.cells.iter().filter(|c| c.kind == kind).count()
    }

    pub fn kind_counts(&self) -> BTreeMap<CellKind, usize> {
        let mut m = BTreeMap::new();
        for c in &self.cells {
            *m.entry(c.kind).or_insert(0) += 1;
        }
        m
    }

    /// Image under a unimodular map; lifts are carried along.
    pub fn transformed(&self, f: &Frame) -> Subdivision {
        Subdivision {
            name: self.name.clone(),
            ambient: f.apply_polytope(&self.ambient),
            excluded: self.excluded.iter().map(|e| f.apply_polytope(e)).collect(),
            cells: self.cells.iter().map(|c| c.transformed(f)).collect(),
            lift: self.lift.as_ref().map(|l| l.iter().map(|a| a.transformed(f)).collect()),
        }
    }

    pub fn translated(&self, v: LatticePoint) -> Subdivision {
        self.transformed(&Frame::translation(v))
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// Index of a cell containing every point of `pts`, preferring the
    /// lowest index.
    pub fn cell_containing(&self, pts: &[LatticePoint]) -> Option<usize> {
        self.cells.iter().position(|c| pts.iter().all(|p| c.geometry.contains_point(p)))
    }

    /// Union of the cells' lattice points with multiplicity-free coverage
    /// check: returns points of the region covered by no cell.
    pub fn uncovered_by_cells(&self) -> Vec<LatticePoint> {
        let mut covered: HashSet<LatticePoint> = HashSet::new();
        for c in &self.cells {
            covered.extend(c.geometry.lattice_points());
        }
        self.lattice_points().into_iter().filter(|p| !covered.contains(p)).collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct CellJson<'a> {
            kind: CellKind,
            anchor: LatticePoint,
            orientation: Option<u8>,
            vertices: &'a [LatticePoint],
        }
        #[derive(Serialize)]
        struct LiftJson {
            cell_index: usize,
            form: AffineForm,
        }
        let cells: Vec<CellJson> = self
            .cells
            .iter()
            .map(|c| CellJson { kind: c.kind, anchor: c.anchor, orientation: c.orientation, vertices: c.vertices() })
            .collect();
        let lift: Option<Vec<LiftJson>> = self.lift.as_ref().map(|l| {
            l.iter().enumerate().map(|(cell_index, form)| LiftJson { cell_index, form: *form }).collect()
        });
        serde_json::json!({
            "name": self.name,
            "ambient": { "vertices": self.ambient.vertices() },
            "excluded": self.excluded.iter().map(|e| serde_json::json!({ "vertices": e.vertices() })).collect::<Vec<_>>(),
            "cells": cells,
            "lift": lift,
        })
    }
}

/// The subdivision of `Δ_d` by unit lattice cubes: cubes, `Σ` blocks along
/// the slanted face, corner tetrahedra at the boundary.
pub fn build_standard_subdivision(d: i64) -> Result<Subdivision> {
    if d < 1 {
        return Err(Error::InvalidParams(format!("degree must be positive, got {d}")));
    }
    Ok(Subdivision::grid(format!("Delta_{d}"), simplex(d), Vec::new()))
}

/// Halfspaces of the height-one layer `S¹_k = {x, y ≥ 0, 0 ≤ z ≤ 1, x+y+z ≤ k}`.
pub(crate) fn layer_polytope(k: i64) -> Result<Polytope> {
    Polytope::from_halfspaces(&[
        HalfSpace::ge([1, 0, 0], 0),
        HalfSpace::ge([0, 1, 0], 0),
        HalfSpace::ge([0, 0, 1], 0),
        HalfSpace::le([0, 0, 1], 1),
        HalfSpace::le([1, 1, 1], k),
    ])
}

pub fn build_layer(k: i64) -> Result<Subdivision> {
    if k < 1 {
        return Err(Error::InvalidParams(format!("layer size must be positive, got {k}")));
    }
    if k == 1 {
        return Ok(Subdivision::grid("S1_1", simplex(1), Vec::new()));
    }
    Ok(Subdivision::grid(format!("S1_{k}"), layer_polytope(k)?, Vec::new()))
}
