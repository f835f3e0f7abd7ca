//! Tangent spaces of toric varieties given by lattice point sets.

use std::collections::BTreeSet;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::field::{rank, Field};
use super::interpolation::{sample_points, DEFAULT_CEILING};
use crate::certificates::{block_contribution, UnitKind};
use crate::degeneration::{build_block, BlockName, Cell, CellKind};
use crate::error::{Error, Result};
use crate::lattice::{corner, LatticePoint, Polytope};
use crate::packing::enumerate_candidate_units;

/// Monomial exponents in a fixed order; the order fixes the coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ToricModel {
    pub lattice_points: Vec<LatticePoint>,
    pub ambient_dim: usize,
}

impl ToricModel {
    pub fn new(points: impl IntoIterator<Item = LatticePoint>) -> Result<Self> {
        let set: BTreeSet<LatticePoint> = points.into_iter().collect();
        if set.is_empty() {
            return Err(Error::EmptyPointSet);
        }
        let lattice_points: Vec<LatticePoint> = set.into_iter().collect();
        Ok(ToricModel { ambient_dim: lattice_points.len() - 1, lattice_points })
    }

    /// Exponents shifted to be nonnegative; multiplying every coordinate by
    /// one monomial leaves tangent spans unchanged.
    fn exponents(&self) -> Vec<[u64; 3]> {
        let lo = [0, 1, 2].map(|m| self.lattice_points.iter().map(|p| p.0[m]).min().unwrap());
        self.lattice_points.iter().map(|p| [0, 1, 2].map(|m| (p.0[m] - lo[m]) as u64)).collect()
    }

    /// Rows `x^a` and `a_i x^a` at a torus point; they span the affine cone
    /// over the tangent space (logarithmic derivatives).
    pub fn tangent_rows(&self, f: Field, x: &[u64]) -> [Vec<u64>; 4] {
        let ex = self.exponents();
        let vals: Vec<u64> = ex.iter().map(|a| (0..3).fold(1, |v, m| f.mul(v, f.pow(x[m], a[m])))).collect();
        let row = |m: Option<usize>| -> Vec<u64> {
            ex.iter().zip(&vals).map(|(a, &v)| m.map_or(v, |m| f.mul(a[m] % f.p, v))).collect()
        };
        [row(None), row(Some(0)), row(Some(1)), row(Some(2))]
    }
}

/// Rank of the stacked tangent rows at `points` (each with 3 torus coordinates).
pub fn toric_tangent_span(m: &ToricModel, points: &[Vec<u64>], prime: u64) -> usize {
    let f = Field::new(prime);
    rank(f, points.iter().flat_map(|x| m.tangent_rows(f, x)))
}

/// Rank of the tangent span at `count` random torus points, best of `trials`.
pub fn random_tangent_span(m: &ToricModel, count: usize, prime: u64, seed: u64, trials: usize) -> Result<usize> {
    let f = Field::new(prime);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best = 0;
    for _ in 0..trials.max(1) {
        let (pts, _) = sample_points(&mut rng, f, count, 3)?;
        best = best.max(toric_tangent_span(m, &pts, prime));
        if best == m.lattice_points.len().min(4 * count) {
            break;
        }
    }
    Ok(best)
}

/// Coordinates spanning the tangent space at the torus-fixed point of a
/// smooth vertex `v`: the vertex itself and the first lattice point on each
/// edge. Every other point is a monomial of degree ≥ 2 in the edge
/// coordinates, so its derivative vanishes there.
pub fn fixed_point_tangent(m: &ToricModel, v: LatticePoint) -> Result<BTreeSet<LatticePoint>> {
    let hull = Polytope::hull(&m.lattice_points)?;
    if !hull.vertices().contains(&v) {
        return Err(Error::InvalidParams(format!("{v} is not a vertex")));
    }
    let mut dirs: Vec<[i64; 3]> = hull
        .edge_neighbors(&v)
        .iter()
        .map(|u| {
            let w = (*u - v).0;
            let g = w.iter().fold(0i64, |g, &c| num_integer::gcd(g, c));
            w.map(|c| c / g)
        })
        .collect();
    dirs.sort();
    if dirs.len() != 3 || crate::lattice::det3(dirs[0], dirs[1], dirs[2]).abs() != 1 {
        return Err(Error::InvalidParams(format!("vertex {v} is not smooth")));
    }
    let dirs = [dirs[0], dirs[1], dirs[2]];
    let det = crate::lattice::det3(dirs[0], dirs[1], dirs[2]);
    let mut out = BTreeSet::new();
    for p in &m.lattice_points {
        let w = (*p - v).0;
        // Cramer's rule for w = Σ c_i dirs[i]
        let c = [0, 1, 2].map(|i| {
            let mut cols = dirs;
            cols[i] = w;
            crate::lattice::det3(cols[0], cols[1], cols[2]) * det
        });
        if c.iter().any(|&ci| ci < 0) {
            return Err(Error::InvalidParams(format!("{p} lies outside the cone at {v}")));
        }
        if c.iter().sum::<i64>() <= 1 {
            out.insert(*p);
        }
    }
    Ok(out)
}

/// Checks, for every corner of the unit cube, that the tangent space at the
/// corresponding fixed point is spanned by the corner and its three
/// neighbours.
pub fn segre_corner_tangent_check() -> bool {
    let cube = ToricModel::new((0..8).map(corner)).expect("nonempty");
    (0..8u8).all(|b| {
        let v = corner(b);
        let expect: BTreeSet<LatticePoint> =
            std::iter::once(v).chain((0..3).map(|m| corner(b ^ (1 << m)))).collect();
        fixed_point_tangent(&cube, v).is_ok_and(|s| s == expect)
    })
}

fn model_cell(kind: CellKind) -> Result<Cell> {
    let mask: u8 = match kind {
        CellKind::Cube => 0xff,
        CellKind::SigmaBlock => 0x7f,
        CellKind::Semicube => 0b0111_0111,
        k => return Err(Error::InvalidParams(format!("no limit tetrahedra in {k} cells"))),
    };
    let pts: Vec<LatticePoint> = (0..8).filter(|b| mask >> b & 1 == 1).map(corner).collect();
    Ok(Cell::new(Polytope::hull(&pts)?))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LimitCheck {
    pub cell_kind: CellKind,
    pub tetra: Vec<LatticePoint>,
    pub center: Vec<LatticePoint>,
    /// Ranks per trial; full rank is `4 + |center|`.
    pub ranks: Vec<usize>,
    pub full_rank: usize,
    pub passed: bool,
}

/// The tangent space at a random torus point of the cell's toric variety,
/// stacked with the coordinate points off the tetrahedron (the projection
/// center), has full rank. Passes when at least one trial is full rank.
pub fn limit_projection_check(kind: CellKind, tetra: &[LatticePoint], prime: u64, seed: u64, trials: usize) -> Result<LimitCheck> {
    let cell = model_cell(kind)?;
    let verts = cell.vertices();
    if tetra.len() != 4 || tetra.iter().any(|p| !verts.contains(p)) {
        return Err(Error::InvalidParams("tetrahedron must use four vertices of the cell".into()));
    }
    let model = ToricModel::new(verts.iter().copied())?;
    let center: Vec<LatticePoint> = model.lattice_points.iter().copied().filter(|p| !tetra.contains(p)).collect();
    let f = Field::new(prime);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut ranks = Vec::with_capacity(trials);
    for _ in 0..trials {
        let (pts, _) = sample_points(&mut rng, f, 1, 3)?;
        let mut rows: Vec<Vec<u64>> = model.tangent_rows(f, &pts[0]).into_iter().collect();
        for c in &center {
            rows.push(model.lattice_points.iter().map(|p| (p == c) as u64).collect());
        }
        ranks.push(rank(f, rows));
    }
    let full_rank = 4 + center.len();
    let passed = ranks.contains(&full_rank);
    Ok(LimitCheck { cell_kind: kind, tetra: tetra.to_vec(), center, ranks, full_rank, passed })
}

/// Every legal limit tetrahedron of a model cell of `kind`.
pub fn legal_limit_tetras(kind: CellKind) -> Result<Vec<Vec<LatticePoint>>> {
    let cell = model_cell(kind)?;
    let lk = match kind {
        CellKind::Cube => UnitKind::LimitTetraInCube,
        CellKind::SigmaBlock => UnitKind::LimitTetraInSigma,
        _ => UnitKind::LimitTetraInSemicube,
    };
    let region = crate::degeneration::Subdivision::grid("cell", cell.geometry.clone(), Vec::new());
    Ok(enumerate_candidate_units(&region, &[lk].into_iter().collect()).into_iter().map(|u| u.vertices).collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockOracle {
    pub block: String,
    pub points: usize,
    pub contribution: i64,
    /// `None` when the model is over the ceiling.
    pub oracle_rank: Option<usize>,
    pub agree: Option<bool>,
}

/// Tangent span of `count` random points on the toric model of `points`.
pub fn certify_points(label: &str, points: Vec<LatticePoint>, count: i64, prime: u64, seed: u64, ceiling: usize) -> Result<BlockOracle> {
    let model = ToricModel::new(points)?;
    let n = model.lattice_points.len();
    let (oracle_rank, agree) = if n > ceiling {
        (None, None)
    } else {
        let r = random_tangent_span(&model, count as usize, prime, seed, 2)?;
        (Some(r), Some(r as i64 == 4 * count))
    };
    Ok(BlockOracle { block: label.to_string(), points: n, contribution: count, oracle_rank, agree })
}

pub fn certify_block_defectivity(name: &BlockName, prime: u64, seed: u64) -> Result<BlockOracle> {
    let count = block_contribution(name)?;
    let pts = build_block(name)?.regions.iter().flat_map(|r| r.lattice_points()).collect();
    certify_points(&name.to_string(), pts, count, prime, seed, DEFAULT_CEILING)
}
