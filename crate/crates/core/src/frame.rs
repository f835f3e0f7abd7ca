//! Unimodular affine maps of `Z³`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{det3, HalfSpace, LatticePoint, Polytope};

/// `x ↦ M x + t` with `M` integral and `det M = ±1`. Rows of `M` are stored.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Frame {
    matrix: [[i64; 3]; 3],
    translation: [i64; 3],
}

impl Default for Frame {
    fn default() -> Self {
        Frame::IDENTITY
    }
}

impl Frame {
    pub const IDENTITY: Frame = Frame {
        matrix: [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
        translation: [0, 0, 0],
    };

    pub fn new(matrix: [[i64; 3]; 3], translation: [i64; 3]) -> Result<Self> {
        let det = det3(matrix[0], matrix[1], matrix[2]);
        if det.abs() != 1 {
            return Err(Error::NotUnimodular(det));
        }
        Ok(Frame { matrix, translation })
    }

    pub fn translation(t: LatticePoint) -> Self {
        Frame { translation: t.0, ..Frame::IDENTITY }
    }

    pub fn matrix(&self) -> [[i64; 3]; 3] {
        self.matrix
    }

    pub fn offset(&self) -> [i64; 3] {
        self.translation
    }

    pub fn det(&self) -> i64 {
        det3(self.matrix[0], self.matrix[1], self.matrix[2])
    }

    pub fn apply(&self, p: &LatticePoint) -> LatticePoint {
        let m = &self.matrix;
        LatticePoint([0, 1, 2].map(|r| {
            m[r][0] * p.0[0] + m[r][1] * p.0[1] + m[r][2] * p.0[2] + self.translation[r]
        }))
    }

    /// Linear part only.
    pub fn apply_linear(&self, v: [i64; 3]) -> [i64; 3] {
        let m = &self.matrix;
        [0, 1, 2].map(|r| m[r][0] * v[0] + m[r][1] * v[1] + m[r][2] * v[2])
    }

    fn inverse_matrix(&self) -> [[i64; 3]; 3] {
        let m = &self.matrix;
        let det = self.det();
        let mut inv = [[0i64; 3]; 3];
        for r in 0..3 {
            for c in 0..3 {
                let (r1, r2) = ((c + 1) % 3, (c + 2) % 3);
                let (c1, c2) = ((r + 1) % 3, (r + 2) % 3);
                inv[r][c] = (m[r1][c1] * m[r2][c2] - m[r1][c2] * m[r2][c1]) * det;
            }
        }
        inv
    }

    pub fn inverse(&self) -> Frame {
        let inv = self.inverse_matrix();
        let t = self.translation;
        let translation =
            [0, 1, 2].map(|r| -(inv[r][0] * t[0] + inv[r][1] * t[1] + inv[r][2] * t[2]));
        Frame { matrix: inv, translation }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Frame) -> Frame {
        let (a, b) = (&self.matrix, &other.matrix);
        let mut matrix = [[0i64; 3]; 3];
        for r in 0..3 {
            for c in 0..3 {
                matrix[r][c] = (0..3).map(|k| a[r][k] * b[k][c]).sum();
            }
        }
        let translation = self.apply(&LatticePoint(other.translation)).0;
        Frame { matrix, translation }
    }

    /// Pulls an affine form `a·x + b` on the source back to the target:
    /// returns `(a', b')` with `a'·(Mx+t) + b' = a·x + b`.
    pub fn push_form(&self, a: [i64; 3], b: i64) -> ([i64; 3], i64) {
        let inv = self.inverse_matrix();
        let a2 = [0, 1, 2].map(|c| (0..3).map(|k| a[k] * inv[k][c]).sum::<i64>());
        let t = self.translation;
        (a2, b - (a2[0] * t[0] + a2[1] * t[1] + a2[2] * t[2]))
    }

    pub fn apply_halfspace(&self, h: &HalfSpace) -> HalfSpace {
        let (n, off) = self.push_form(h.normal, -h.offset);
        if h.strict {
            HalfSpace::lt(n, -off)
        } else {
            HalfSpace::le(n, -off)
        }
    }

    pub fn apply_polytope(&self, p: &Polytope) -> Polytope {
        let vs: Vec<LatticePoint> = p.vertices().iter().map(|v| self.apply(v)).collect();
        Polytope::hull(&vs).expect("image of a nonempty polytope")
    }
}
