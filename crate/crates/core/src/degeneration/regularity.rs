//! Exact check that a lifted subdivision is regular.
//!
//! Each cell carries an affine form; the lift is the piecewise-affine
//! function they define. The subdivision is regular for that lift when the
//! forms agree on shared lattice points and every form lies strictly below
//! the lift at every lattice point outside its own cell. Because the lift is
//! affine on each cell, testing lattice points (in particular all cell
//! vertices) is enough: a violation at a real point forces one at a vertex of
//! the cell containing it.

use std::collections::BTreeMap;

use serde::Serialize;

use super::subdivision::Subdivision;
use crate::error::{Error, Result};
use crate::lattice::LatticePoint;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum RegularityViolation {
    /// Two cells assign different heights to a shared point.
    FaceMismatch { point: LatticePoint, cell_a: usize, cell_b: usize, value_a: i64, value_b: i64 },
    /// A cell's form does not stay strictly below the lift off the cell.
    NotStrict { cell: usize, point: LatticePoint, form_value: i64, lift_value: i64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RegularityReport {
    pub passed: bool,
    pub cells: usize,
    pub points: usize,
    pub violation: Option<RegularityViolation>,
}

pub fn check_regularity(s: &Subdivision) -> Result<RegularityReport> {
    let lift = s.lift().ok_or(Error::MissingLift)?;
    let mut height: BTreeMap<LatticePoint, (i64, usize)> = BTreeMap::new();
    let mut cell_points = Vec::with_capacity(s.cells().len());
    let fail = |v: RegularityViolation, points: usize| RegularityReport {
        passed: false,
        cells: s.cells().len(),
        points,
        violation: Some(v),
    };
    for (i, cell) in s.cells().iter().enumerate() {
        let pts = cell.geometry.lattice_points();
        for p in &pts {
            let v = lift[i].eval(p);
            match height.get(p) {
                Some(&(w, j)) if w != v => {
                    let viol = RegularityViolation::FaceMismatch { point: *p, cell_a: j, cell_b: i, value_a: w, value_b: v };
                    return Ok(fail(viol, height.len()));
                }
                Some(_) => {}
                None => {
                    height.insert(*p, (v, i));
                }
            }
        }
        cell_points.push(pts);
    }
    for (i, cell) in s.cells().iter().enumerate() {
        let (lo, hi) = cell.geometry.bbox();
        for (p, &(h, _)) in &height {
            let inside_box = (0..3).all(|m| lo[m] <= p.0[m] && p.0[m] <= hi[m]);
            if inside_box && cell.geometry.contains_point(p) {
                continue;
            }
            let v = lift[i].eval(p);
            if v >= h {
                let viol = RegularityViolation::NotStrict { cell: i, point: *p, form_value: v, lift_value: h };
                return Ok(fail(viol, height.len()));
            }
        }
    }
    Ok(RegularityReport { passed: true, cells: s.cells().len(), points: height.len(), violation: None })
}
