//! Coordinates on the middle part of the front stripe of `S⁷_d`.
//!
//! The stripe is `{x + y ≥ d − 6, z ≤ 7}` inside `Δ_d`. Away from its two
//! corner simplices it is parametrised by `(z, w, a)` with `w = d − x − y − z`
//! the slack and `a = d − 7 − x`; the point set is `z, w ≥ 0, z + w ≤ 6`,
//! `0 ≤ a ≤ d − 14 + z + w`. It is cut along `a` into slabs whose lengths
//! are affine in `(z, w)`; every slab is a unimodular image of a simplex or
//! of a `T*` region.

use std::fmt;

use crate::error::Result;
use crate::frame::Frame;
use crate::lattice::{HalfSpace, LatticePoint, Polytope};

use super::subdivision::{build_standard_subdivision, Subdivision};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Piece {
    T5,
    T6,
    Delta6,
    /// `T*_m` for `m ∈ {7, 9, 11}`.
    TStar(i64),
}

impl fmt::Display for Piece {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Piece::T5 => write!(f, "T_5"),
            Piece::T6 => write!(f, "T_6"),
            Piece::Delta6 => write!(f, "Delta_6"),
            Piece::TStar(m) => write!(f, "T*_{m}"),
        }
    }
}

/// `{z, w ≥ 0, z + w ≤ 6, 0 ≤ t ≤ z + m − 6}` in coordinates `(z, w, t)`.
pub fn tstar_region(m: i64) -> Polytope {
    Polytope::from_halfspaces(&[
        HalfSpace::ge([1, 0, 0], 0),
        HalfSpace::ge([0, 1, 0], 0),
        HalfSpace::le([1, 1, 0], 6),
        HalfSpace::ge([0, 0, 1], 0),
        HalfSpace::le([-1, 0, 1], m - 6),
    ])
    .expect("T* region is a lattice polytope")
}

impl Piece {
    /// Slab length `α + β z + γ w` as `(α, β, γ)`.
    pub fn length(self) -> (i64, i64, i64) {
        match self {
            Piece::T5 => (0, 1, 0),
            Piece::T6 => (1, 0, 1),
            Piece::Delta6 => (7, -1, -1),
            Piece::TStar(m) => (m - 5, 1, 0),
        }
    }

    /// The piece in its own coordinates, before being sheared into a slab.
    pub fn model(self) -> Result<Subdivision> {
        Ok(match self {
            Piece::T5 => build_standard_subdivision(5)?.renamed("T_5"),
            Piece::T6 => build_standard_subdivision(6)?.renamed("T_6"),
            Piece::Delta6 => build_standard_subdivision(6)?,
            Piece::TStar(m) => Subdivision::grid(format!("T*_{m}"), tstar_region(m), Vec::new()),
        })
    }

    /// Map from model coordinates to `(z, w, a)` for a slab starting at
    /// `a = c₀ + c_z z + c_w w`.
    pub fn to_wedge(self, start: (i64, i64, i64)) -> Frame {
        let (c0, cz, cw) = start;
        // rows give z, w, a as functions of the model coordinates
        let (m, t) = match self {
            Piece::T5 => ([[1, 1, 0], [0, 0, 1], [1 + cz, cz, cw]], [1, 0, c0 + cz]),
            Piece::T6 => ([[0, 0, 1], [1, 1, 0], [1 + cw, cw, cz]], [0, 0, c0]),
            Piece::Delta6 => ([[0, 1, 0], [0, 0, 1], [1, cz, cw]], [0, 0, c0]),
            Piece::TStar(_) => ([[1, 0, 0], [0, 1, 0], [cz, cw, 1]], [0, 0, c0]),
        };
        Frame::new(m, t).expect("slab maps are unimodular")
    }
}

/// Consecutive slabs starting at `a = 0`, with their model-to-wedge frames.
pub fn layout(pieces: &[Piece]) -> Vec<(Piece, Frame)> {
    let mut start = (0, 0, 0);
    let mut out = Vec::with_capacity(pieces.len());
    for &p in pieces {
        out.push((p, p.to_wedge(start)));
        let (a, b, c) = p.length();
        start = (start.0 + a, start.1 + b, start.2 + c);
    }
    out
}

/// `(z, w, a) ↦ (d − 7 − a, a + 7 − z − w, z)`.
pub fn wedge_to_global(d: i64) -> Frame {
    Frame::new([[0, 0, -1], [-1, -1, 1], [1, 0, 0]], [d - 7, 7, 0]).expect("unimodular")
}

/// Slab sequence filling the middle of the stripe for even `d ≥ 14`.
pub fn middle_sequence(d: i64) -> Vec<Piece> {
    let k = (d - 6) / 8;
    let triple = [Piece::T5, Piece::T6, Piece::Delta6];
    let mut seq: Vec<Piece> = triple.iter().copied().cycle().take(3 * (k as usize - 1)).collect();
    match (d - 6).rem_euclid(8) {
        0 => seq.extend([Piece::T5, Piece::T6]),
        r => seq.extend([Piece::T6, Piece::TStar(5 + r)]),
    }
    seq
}

/// The stripe's middle point set, in wedge coordinates.
pub fn middle_points(d: i64) -> Vec<LatticePoint> {
    let mut out = Vec::new();
    for z in 0..=6 {
        for w in 0..=6 - z {
            for a in 0..=d - 14 + z + w {
                out.push(LatticePoint::new(z, w, a));
            }
        }
    }
    out
}
