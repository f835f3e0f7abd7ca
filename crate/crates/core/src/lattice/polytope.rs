use std::collections::{BTreeSet, HashSet};

use serde::{Deserialize, Serialize};

use super::point::{cross, dot, gcd, rank, LatticePoint, RationalPoint};
use crate::error::{Error, Result};

/// `normal · x ≤ offset`, or `<` when `strict`.
///
/// Normals are stored as primitive integer vectors; the offset is scaled by
/// the same positive factor, so two halfspaces describing the same set
/// compare equal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HalfSpace {
    pub normal: [i64; 3],
    pub offset: i64,
    pub strict: bool,
}

impl HalfSpace {
    /// Builds `normal · x ≤ offset`. Panics on a zero normal.
    pub fn le(normal: [i64; 3], offset: i64) -> Self {
        Self::new(normal, offset, false)
    }

    pub fn lt(normal: [i64; 3], offset: i64) -> Self {
        Self::new(normal, offset, true)
    }

    /// `normal · x ≥ offset`.
    pub fn ge(normal: [i64; 3], offset: i64) -> Self {
        Self::le(normal.map(|c| -c), -offset)
    }

    fn new(normal: [i64; 3], offset: i64, strict: bool) -> Self {
        assert!(normal != [0, 0, 0], "halfspace normal must be nonzero");
        let g = gcd(gcd(normal[0], normal[1]), normal[2]);
        let normal = normal.map(|c| c / g);
        // floor division keeps the integer points of the halfspace unchanged
        let offset = if strict {
            offset.div_euclid(g) + if offset.rem_euclid(g) == 0 { 0 } else { 1 }
        } else {
            offset.div_euclid(g)
        };
        HalfSpace { normal, offset, strict }
    }

    pub fn value(&self, p: &LatticePoint) -> i64 {
        p.dot(&self.normal)
    }

    pub fn contains_point(&self, p: &LatticePoint) -> bool {
        let v = self.value(p);
        if self.strict {
            v < self.offset
        } else {
            v <= self.offset
        }
    }

    pub fn contains(&self, p: &RationalPoint) -> bool {
        let v = p.dot(&self.normal);
        let off = num_rational::BigRational::from_integer(self.offset.into());
        if self.strict {
            v < off
        } else {
            v <= off
        }
    }

    pub fn is_tight(&self, p: &LatticePoint) -> bool {
        self.value(p) == self.offset
    }

    pub fn closure(&self) -> HalfSpace {
        HalfSpace { strict: false, ..*self }
    }
}

/// A lattice polytope in `R³`, possibly lower dimensional, kept in both
/// representations. `vertices` are exactly the extreme points (sorted) and
/// `halfspaces` are the facet inequalities plus, for lower dimensional
/// polytopes, pairs of opposite inequalities cutting out the affine hull.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polytope {
    vertices: Vec<LatticePoint>,
    halfspaces: Vec<HalfSpace>,
    dim: usize,
}

const NEIGHBOR_DIRS: [[i64; 3]; 13] = [
    [1, 0, 0],
    [0, 1, 0],
    [0, 0, 1],
    [1, 1, 0],
    [1, -1, 0],
    [1, 0, 1],
    [1, 0, -1],
    [0, 1, 1],
    [0, 1, -1],
    [1, 1, 1],
    [1, 1, -1],
    [1, -1, 1],
    [-1, 1, 1],
];

fn primitive(v: [i64; 3]) -> [i64; 3] {
    let g = gcd(gcd(v[0], v[1]), v[2]);
    if g == 0 {
        v
    } else {
        v.map(|c| c / g)
    }
}

impl Polytope {
    /// Convex hull of a nonempty set of lattice points.
    pub fn hull(points: &[LatticePoint]) -> Result<Self> {
        let set: BTreeSet<LatticePoint> = points.iter().copied().collect();
        if set.is_empty() {
            return Err(Error::EmptyPointSet);
        }
        // A midpoint of two input points is never extreme; dropping those
        // first keeps the brute-force facet search small.
        let lookup: HashSet<LatticePoint> = set.iter().copied().collect();
        let candidates: Vec<LatticePoint> = if set.len() <= 8 {
            set.iter().copied().collect()
        } else {
            set.iter()
                .copied()
                .filter(|p| {
                    !NEIGHBOR_DIRS.iter().any(|d| {
                        let e = LatticePoint(*d);
                        lookup.contains(&(*p + e)) && lookup.contains(&(*p - e))
                    })
                })
                .collect()
        };
        Ok(Self::hull_of_candidates(&candidates))
    }

    fn hull_of_candidates(cands: &[LatticePoint]) -> Self {
        let base = cands[0];
        let diffs: Vec<[i64; 3]> = cands.iter().map(|p| (*p - base).0).collect();
        let dim = rank(&diffs);
        let mut hs: BTreeSet<HalfSpace> = BTreeSet::new();
        let push_supporting = |n: [i64; 3], anchor: &LatticePoint, hs: &mut BTreeSet<HalfSpace>| {
            if n == [0, 0, 0] {
                return;
            }
            let n = primitive(n);
            let a = anchor.dot(&n);
            let (mut le, mut ge) = (true, true);
            for p in cands {
                let v = p.dot(&n);
                le &= v <= a;
                ge &= v >= a;
                if !le && !ge {
                    return;
                }
            }
            if le {
                hs.insert(HalfSpace::le(n, a));
            }
            if ge {
                hs.insert(HalfSpace::ge(n, a));
            }
        };
        match dim {
            0 => {
                for axis in 0..3 {
                    let mut e = [0; 3];
                    e[axis] = 1;
                    hs.insert(HalfSpace::le(e, base.0[axis]));
                    hs.insert(HalfSpace::ge(e, base.0[axis]));
                }
            }
            1 => {
                let u = primitive(*diffs.iter().find(|d| **d != [0, 0, 0]).unwrap());
                let mut normals: Vec<[i64; 3]> = Vec::new();
                for axis in 0..3 {
                    let mut e = [0; 3];
                    e[axis] = 1;
                    let n = primitive(cross(u, e));
                    if n != [0, 0, 0] && (normals.is_empty() || cross(normals[0], n) != [0, 0, 0]) {
                        normals.push(n);
                    }
                    if normals.len() == 2 {
                        break;
                    }
                }
                for n in normals {
                    let a = base.dot(&n);
                    hs.insert(HalfSpace::le(n, a));
                    hs.insert(HalfSpace::ge(n, a));
                }
                push_supporting(u, cands.iter().max_by_key(|p| p.dot(&u)).unwrap(), &mut hs);
                push_supporting(u.map(|c| -c), cands.iter().min_by_key(|p| p.dot(&u)).unwrap(), &mut hs);
            }
            2 => {
                let d1 = *diffs.iter().find(|d| **d != [0, 0, 0]).unwrap();
                let d2 = *diffs.iter().find(|d| cross(d1, **d) != [0, 0, 0]).unwrap();
                let plane = primitive(cross(d1, d2));
                let a = base.dot(&plane);
                hs.insert(HalfSpace::le(plane, a));
                hs.insert(HalfSpace::ge(plane, a));
                for (i, p) in cands.iter().enumerate() {
                    for q in &cands[i + 1..] {
                        push_supporting(cross((*q - *p).0, plane), p, &mut hs);
                    }
                }
            }
            _ => {
                for (i, p) in cands.iter().enumerate() {
                    for (j, q) in cands.iter().enumerate().skip(i + 1) {
                        for r in &cands[j + 1..] {
                            push_supporting(cross((*q - *p).0, (*r - *p).0), p, &mut hs);
                        }
                    }
                }
            }
        }
        let halfspaces: Vec<HalfSpace> = hs.into_iter().collect();
        let mut vertices: Vec<LatticePoint> = cands
            .iter()
            .copied()
            .filter(|p| {
                let tight: Vec<[i64; 3]> =
                    halfspaces.iter().filter(|h| h.is_tight(p)).map(|h| h.normal).collect();
                rank(&tight) == 3
            })
            .collect();
        vertices.sort();
        Polytope { vertices, halfspaces, dim }
    }

    /// The polytope cut out by non-strict halfspaces. Fails when the system
    /// is empty/unbounded or has a non-integral vertex.
    pub fn from_halfspaces(hs: &[HalfSpace]) -> Result<Self> {
        let hs: Vec<HalfSpace> = hs.iter().map(|h| h.closure()).collect();
        let mut verts: BTreeSet<LatticePoint> = BTreeSet::new();
        for i in 0..hs.len() {
            for j in i + 1..hs.len() {
                let cij = cross(hs[i].normal, hs[j].normal);
                if cij == [0, 0, 0] {
                    continue;
                }
                for k in j + 1..hs.len() {
                    let det = dot(hs[k].normal, cij) as i128;
                    if det == 0 {
                        continue;
                    }
                    // Cramer's rule on rows n_i, n_j, n_k
                    let (a, b, c) = (hs[i].normal, hs[j].normal, hs[k].normal);
                    let (bi, bj, bk) = (hs[i].offset as i128, hs[j].offset as i128, hs[k].offset as i128);
                    let col = |m: usize| -> i128 {
                        let mut r = [a.map(|v| v as i128), b.map(|v| v as i128), c.map(|v| v as i128)];
                        r[0][m] = bi;
                        r[1][m] = bj;
                        r[2][m] = bk;
                        r[0][0] * (r[1][1] * r[2][2] - r[1][2] * r[2][1])
                            - r[0][1] * (r[1][0] * r[2][2] - r[1][2] * r[2][0])
                            + r[0][2] * (r[1][0] * r[2][1] - r[1][1] * r[2][0])
                    };
                    let num = [col(0), col(1), col(2)];
                    let feasible_rational = hs.iter().all(|h| {
                        let v: i128 = (0..3).map(|m| h.normal[m] as i128 * num[m]).sum();
                        let rhs = h.offset as i128 * det;
                        if det > 0 {
                            v <= rhs
                        } else {
                            v >= rhs
                        }
                    });
                    if !feasible_rational {
                        continue;
                    }
                    if num.iter().any(|n| n % det != 0) {
                        return Err(Error::NonIntegralVertex);
                    }
                    verts.insert(LatticePoint(num.map(|n| (n / det) as i64)));
                }
            }
        }
        if verts.is_empty() {
            return Err(Error::EmptyOrUnbounded);
        }
        let verts: Vec<LatticePoint> = verts.into_iter().collect();
        Self::hull(&verts)
    }

    pub fn vertices(&self) -> &[LatticePoint] {
        &self.vertices
    }

    pub fn halfspaces(&self) -> &[HalfSpace] {
        &self.halfspaces
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn bbox(&self) -> ([i64; 3], [i64; 3]) {
        let mut lo = [i64::MAX; 3];
        let mut hi = [i64::MIN; 3];
        for v in &self.vertices {
            for m in 0..3 {
                lo[m] = lo[m].min(v.0[m]);
                hi[m] = hi[m].max(v.0[m]);
            }
        }
        (lo, hi)
    }

    pub fn contains_point(&self, p: &LatticePoint) -> bool {
        self.halfspaces.iter().all(|h| h.contains_point(p))
    }

    /// Exact closed containment of a rational point.
    pub fn contains(&self, p: &RationalPoint) -> bool {
        self.halfspaces.iter().all(|h| h.contains(p))
    }

    /// All integer points of the closed polytope, in lexicographic order.
    pub fn lattice_points(&self) -> Vec<LatticePoint> {
        let (lo, hi) = self.bbox();
        let mut out = Vec::new();
        for x in lo[0]..=hi[0] {
            for y in lo[1]..=hi[1] {
                for z in lo[2]..=hi[2] {
                    let p = LatticePoint([x, y, z]);
                    if self.contains_point(&p) {
                        out.push(p);
                    }
                }
            }
        }
        out
    }

    pub fn translate(&self, v: LatticePoint) -> Polytope {
        Polytope {
            vertices: self.vertices.iter().map(|p| *p + v).collect(),
            halfspaces: self
                .halfspaces
                .iter()
                .map(|h| HalfSpace { offset: h.offset + v.dot(&h.normal), ..*h })
                .collect(),
            dim: self.dim,
        }
    }

    /// Vertices adjacent to `v` along an edge (full-dimensional polytopes).
    pub fn edge_neighbors(&self, v: &LatticePoint) -> Vec<LatticePoint> {
        let tight_v: Vec<&HalfSpace> = self.halfspaces.iter().filter(|h| h.is_tight(v)).collect();
        self.vertices
            .iter()
            .filter(|u| *u != v)
            .filter(|u| {
                let common: Vec<[i64; 3]> =
                    tight_v.iter().filter(|h| h.is_tight(u)).map(|h| h.normal).collect();
                rank(&common) == 2
            })
            .copied()
            .collect()
    }
}
