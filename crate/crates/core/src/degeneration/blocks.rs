//! The named building blocks used to assemble configurations.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::frame::Frame;
use crate::lattice::{simplex, unit_cube, HalfSpace, LatticePoint, Polytope};

use super::subdivision::{build_standard_subdivision, Subdivision};
use super::wedge::{layout, wedge_to_global, Piece};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BlockName {
    Delta1,
    Cube,
    /// Column of height 7 over a unit right triangle.
    Gamma7,
    Delta6,
    T5,
    T6,
    /// Prism of height 7 over the triangle `x, y ≥ 0, x + y ≤ m`.
    P(i64),
    /// The box `[0, 7]³`.
    C7,
    /// `[0, 9]² × [0, 7]` minus its far vertical edge.
    H9,
    /// `T*_m`, `m ∈ {7, 9, 11}`.
    TStar(i64),
    /// `T_6` followed by `T*_{m−1}`, `m ∈ {8, 10, 12}`.
    B(i64),
    /// Residual prism block of the family `d = family + 8k`.
    A { k: i64, family: i64 },
    /// The middle of `S⁷_14`: `P_7`, `T_5` and `T_6`.
    Xi,
}

impl fmt::Display for BlockName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BlockName::Delta1 => write!(f, "Delta_1"),
            BlockName::Cube => write!(f, "cube"),
            BlockName::Gamma7 => write!(f, "gamma_7"),
            BlockName::Delta6 => write!(f, "Delta_6"),
            BlockName::T5 => write!(f, "T_5"),
            BlockName::T6 => write!(f, "T_6"),
            BlockName::P(m) => write!(f, "P_{m}"),
            BlockName::C7 => write!(f, "C_7"),
            BlockName::H9 => write!(f, "H_9"),
            BlockName::TStar(m) => write!(f, "T*_{m}"),
            BlockName::B(m) => write!(f, "B_{m}"),
            BlockName::A { k, family } => write!(f, "A_{k}@{family}"),
            BlockName::Xi => write!(f, "Xi"),
        }
    }
}

impl FromStr for BlockName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::UnknownBlock(s.to_string());
        let num = |t: &str| t.parse::<i64>().map_err(|_| bad());
        let name = match s {
            "Delta_1" | "delta1" => BlockName::Delta1,
            "cube" | "Cube" => BlockName::Cube,
            "gamma_7" | "gamma7" => BlockName::Gamma7,
            "Delta_6" | "delta6" => BlockName::Delta6,
            "T_5" => BlockName::T5,
            "T_6" => BlockName::T6,
            "C_7" => BlockName::C7,
            "H_9" => BlockName::H9,
            "Xi" | "xi" => BlockName::Xi,
            _ => {
                if let Some(r) = s.strip_prefix("T*_") {
                    BlockName::TStar(num(r)?)
                } else if let Some(r) = s.strip_prefix("P_") {
                    BlockName::P(num(r)?)
                } else if let Some(r) = s.strip_prefix("B_") {
                    BlockName::B(num(r)?)
                } else if let Some(r) = s.strip_prefix("A_") {
                    let (k, fam) = r.split_once('@').ok_or_else(bad)?;
                    BlockName::A { k: num(k)?, family: num(fam)? }
                } else {
                    return Err(bad());
                }
            }
        };
        name.validate()?;
        Ok(name)
    }
}

impl BlockName {
    pub fn validate(&self) -> Result<()> {
        let ok = match *self {
            BlockName::P(m) => matches!(m, 7 | 9 | 11 | 13),
            BlockName::TStar(m) => matches!(m, 7 | 9 | 11),
            BlockName::B(m) => matches!(m, 8 | 10 | 12),
            BlockName::A { k, family } => k >= 2 && matches!(family, 10 | 12),
            _ => true,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidParams(format!("invalid parameters for block {self}")))
        }
    }

    /// Every catalog entry with small parameters.
    pub fn catalog() -> Vec<BlockName> {
        vec![
            BlockName::Delta1,
            BlockName::Cube,
            BlockName::Gamma7,
            BlockName::Delta6,
            BlockName::T5,
            BlockName::T6,
            BlockName::P(7),
            BlockName::P(9),
            BlockName::P(11),
            BlockName::P(13),
            BlockName::C7,
            BlockName::H9,
            BlockName::TStar(7),
            BlockName::TStar(9),
            BlockName::TStar(11),
            BlockName::B(8),
            BlockName::B(10),
            BlockName::B(12),
            BlockName::A { k: 2, family: 10 },
            BlockName::A { k: 2, family: 12 },
            BlockName::Xi,
        ]
    }
}

/// A block: one or more subdivided regions with pairwise disjoint point sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub name: BlockName,
    pub regions: Vec<Subdivision>,
}

impl Block {
    pub fn lattice_point_count(&self) -> usize {
        self.regions.iter().map(|r| r.lattice_points().len()).sum()
    }
}

/// `{x, y ≥ 0, x + y ≤ m, 0 ≤ z ≤ 7}`.
pub(crate) fn prism(m: i64) -> Polytope {
    Polytope::from_halfspaces(&[
        HalfSpace::ge([1, 0, 0], 0),
        HalfSpace::ge([0, 1, 0], 0),
        HalfSpace::le([1, 1, 0], m),
        HalfSpace::ge([0, 0, 1], 0),
        HalfSpace::le([0, 0, 1], 7),
    ])
    .expect("prism is a lattice polytope")
}

/// `[lo, lo + side]` boxes.
pub(crate) fn lattice_box(lo: LatticePoint, side: [i64; 3]) -> Polytope {
    let mut pts = Vec::with_capacity(8);
    for b in 0..8u8 {
        let c = crate::lattice::corner(b);
        pts.push(lo + LatticePoint([0, 1, 2].map(|m| c.0[m] * side[m])));
    }
    Polytope::hull(&pts).expect("nonempty")
}

/// The residual region of the height-7 prism of leg `n` once the two corner
/// `P_7`s are removed, with `C_7`s along the axes cut out.
pub(crate) fn residual(n: i64, axis_boxes: i64) -> Result<(Polytope, Vec<Polytope>)> {
    let r = Polytope::from_halfspaces(&[
        HalfSpace::ge([1, 0, 0], 0),
        HalfSpace::ge([0, 1, 0], 0),
        HalfSpace::le([1, 0, 0], n - 9),
        HalfSpace::le([0, 1, 0], n - 9),
        HalfSpace::le([1, 1, 0], n - 1),
        HalfSpace::ge([0, 0, 1], 0),
        HalfSpace::le([0, 0, 1], 7),
    ])?;
    let mut excluded = Vec::new();
    for j in 0..axis_boxes {
        excluded.push(lattice_box(LatticePoint::new(8 * j, 0, 0), [7, 7, 7]));
        excluded.push(lattice_box(LatticePoint::new(0, 8 * (j + 1), 0), [7, 7, 7]));
    }
    Ok((r, excluded))
}

fn wedge_regions(pieces: &[Piece], to_global: Option<Frame>) -> Result<Vec<Subdivision>> {
    let mut out = Vec::new();
    for (piece, frame) in layout(pieces) {
        let f = match to_global {
            Some(g) => g.compose(&frame),
            None => frame,
        };
        out.push(piece.model()?.transformed(&f));
    }
    Ok(out)
}

pub fn build_block(name: &BlockName) -> Result<Block> {
    name.validate()?;
    let grid = |p: Polytope| Subdivision::grid(name.to_string(), p, Vec::new());
    let regions = match *name {
        BlockName::Delta1 => vec![grid(simplex(1))],
        BlockName::Cube => vec![grid(unit_cube(LatticePoint::ORIGIN))],
        BlockName::Gamma7 => vec![grid(prism(1))],
        BlockName::Delta6 => vec![build_standard_subdivision(6)?],
        BlockName::T5 => wedge_regions(&[Piece::T5], None)?,
        BlockName::T6 => wedge_regions(&[Piece::T6], None)?,
        BlockName::P(m) => vec![grid(prism(m))],
        BlockName::C7 => vec![grid(lattice_box(LatticePoint::ORIGIN, [7, 7, 7]))],
        BlockName::H9 => vec![grid(residual(18, 0)?.0)],
        BlockName::TStar(m) => wedge_regions(&[Piece::TStar(m)], None)?,
        BlockName::B(m) => wedge_regions(&[Piece::T6, Piece::TStar(m - 1)], None)?,
        BlockName::A { k, family } => {
            let (r, ex) = residual(family - 6 + 8 * k, k - 2)?;
            vec![Subdivision::grid(name.to_string(), r, ex)]
        }
        BlockName::Xi => {
            let mut v = vec![grid(prism(7))];
            v.extend(wedge_regions(&[Piece::T5, Piece::T6], Some(wedge_to_global(14)))?);
            v
        }
    };
    Ok(Block { name: *name, regions })
}
