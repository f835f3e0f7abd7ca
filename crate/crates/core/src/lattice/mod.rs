//! Exact lattice geometry in three dimensions.

pub mod export;
mod fm;
mod point;
mod polytope;
mod separation;

pub use point::{LatticePoint, RationalPoint};
pub use polytope::{HalfSpace, Polytope};
pub use separation::{disjoint, interior_overlap_witness, intersection_witness};

pub(crate) use point::det3;

/// The simplex `{x ≥ 0, x₁ + x₂ + x₃ ≤ d}`.
pub fn simplex(d: i64) -> Polytope {
    let pts = [
        LatticePoint::ORIGIN,
        LatticePoint::new(d, 0, 0),
        LatticePoint::new(0, d, 0),
        LatticePoint::new(0, 0, d),
    ];
    Polytope::hull(&pts).expect("nonempty")
}

/// The unit cube anchored at `a`.
pub fn unit_cube(a: LatticePoint) -> Polytope {
    let mut pts = Vec::with_capacity(8);
    for bits in 0..8u8 {
        pts.push(a + corner(bits));
    }
    Polytope::hull(&pts).expect("nonempty")
}

/// Offset of unit-cube corner number `bits` (bit m set means +e_m).
pub fn corner(bits: u8) -> LatticePoint {
    LatticePoint::new((bits & 1) as i64, ((bits >> 1) & 1) as i64, ((bits >> 2) & 1) as i64)
}
