use serde::{Deserialize, Serialize};

use crate::frame::Frame;
use crate::lattice::LatticePoint;

/// `a · x + b`, serialised as `[a1, a2, a3, b]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "[i64; 4]", into = "[i64; 4]")]
pub struct AffineForm {
    pub a: [i64; 3],
    pub b: i64,
}

impl From<[i64; 4]> for AffineForm {
    fn from(v: [i64; 4]) -> Self {
        AffineForm { a: [v[0], v[1], v[2]], b: v[3] }
    }
}

impl From<AffineForm> for [i64; 4] {
    fn from(f: AffineForm) -> Self {
        [f.a[0], f.a[1], f.a[2], f.b]
    }
}

impl AffineForm {
    pub const ZERO: AffineForm = AffineForm { a: [0; 3], b: 0 };

    pub fn eval(&self, p: &LatticePoint) -> i64 {
        p.dot(&self.a) + self.b
    }

    /// The form of the unit cube at `(i, j, k)` interpolating `|x|²` at
    /// its corners: `(1+2i)x₁ + (1+2j)x₂ + (1+2k)x₃ − (i+j+k+i²+j²+k²)`.
    pub fn cube(anchor: LatticePoint) -> Self {
        let [i, j, k] = anchor.0;
        AffineForm { a: [1 + 2 * i, 1 + 2 * j, 1 + 2 * k], b: -(i + j + k + i * i + j * j + k * k) }
    }

    /// The same function expressed in the target coordinates of `f`.
    pub fn transformed(&self, f: &Frame) -> Self {
        let (a, b) = f.push_form(self.a, self.b);
        AffineForm { a, b }
    }
}
