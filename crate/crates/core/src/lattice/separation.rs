use num_rational::BigRational;

use super::fm::{self, Row};
use super::point::{cross, RationalPoint};
use super::polytope::{HalfSpace, Polytope};

fn extent(p: &Polytope, axis: [i64; 3]) -> (i64, i64) {
    let mut lo = i64::MAX;
    let mut hi = i64::MIN;
    for v in p.vertices() {
        let d = v.dot(&axis);
        lo = lo.min(d);
        hi = hi.max(d);
    }
    (lo, hi)
}

fn separates(p: &Polytope, q: &Polytope, axis: [i64; 3]) -> bool {
    if axis == [0, 0, 0] {
        return false;
    }
    let (plo, phi) = extent(p, axis);
    let (qlo, qhi) = extent(q, axis);
    phi < qlo || qhi < plo
}

fn edge_dirs(p: &Polytope) -> Vec<[i64; 3]> {
    let vs = p.vertices();
    let mut out = Vec::new();
    for i in 0..vs.len() {
        for j in i + 1..vs.len() {
            out.push((vs[j] - vs[i]).0);
        }
    }
    out
}

/// Looks for a separating axis. Finding one proves the closed polytopes are
/// disjoint; failing to find one is inconclusive.
pub(crate) fn quick_separated(p: &Polytope, q: &Polytope) -> bool {
    let (plo, phi) = p.bbox();
    let (qlo, qhi) = q.bbox();
    if (0..3).any(|m| phi[m] < qlo[m] || qhi[m] < plo[m]) {
        return true;
    }
    if p.halfspaces().iter().chain(q.halfspaces()).any(|h| separates(p, q, h.normal)) {
        return true;
    }
    let (ep, eq) = (edge_dirs(p), edge_dirs(q));
    ep.iter().any(|a| eq.iter().any(|b| separates(p, q, cross(*a, *b))))
}

fn rows_of(hs: &[HalfSpace]) -> impl Iterator<Item = Row> + '_ {
    hs.iter().map(|h| Row::new(&h.normal, h.offset, h.strict))
}

/// A point of `P ∩ Q`, or `None` when the closed polytopes are disjoint.
pub fn intersection_witness(p: &Polytope, q: &Polytope) -> Option<RationalPoint> {
    let rows: Vec<Row> = rows_of(p.halfspaces()).chain(rows_of(q.halfspaces())).collect();
    fm::solve(&rows).map(|x| {
        let c: [BigRational; 3] = [x[0].clone(), x[1].clone(), x[2].clone()];
        RationalPoint(c)
    })
}

/// Exact test that two closed polytopes share no point.
///
/// For two full-dimensional polytopes the axis search is complete (every
/// facet normal of `P − Q` is a facet normal of `P` or `Q` or a cross
/// product of edge directions), so elimination only runs for flat inputs.
pub fn disjoint(p: &Polytope, q: &Polytope) -> bool {
    if quick_separated(p, q) {
        return true;
    }
    if p.dim() == 3 && q.dim() == 3 {
        return false;
    }
    intersection_witness(p, q).is_none()
}

/// A point of the interiors' intersection, or `None` if the interiors are
/// disjoint. Only meaningful for full-dimensional polytopes.
pub fn interior_overlap_witness(p: &Polytope, q: &Polytope) -> Option<RationalPoint> {
    let strict = |h: &HalfSpace| HalfSpace { strict: true, ..*h };
    let hs: Vec<HalfSpace> = p.halfspaces().iter().chain(q.halfspaces()).map(strict).collect();
    let rows: Vec<Row> = rows_of(&hs).collect();
    fm::solve(&rows).map(|x| RationalPoint([x[0].clone(), x[1].clone(), x[2].clone()]))
}
