use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An integer point of `Z³`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LatticePoint(pub [i64; 3]);

impl LatticePoint {
    pub const ORIGIN: LatticePoint = LatticePoint([0, 0, 0]);

    pub const fn new(x: i64, y: i64, z: i64) -> Self {
        LatticePoint([x, y, z])
    }

    pub fn from_slice(coords: &[i64]) -> Result<Self> {
        match coords {
            [x, y, z] => Ok(LatticePoint([*x, *y, *z])),
            _ => Err(Error::DimensionMismatch(coords.len())),
        }
    }

    pub fn coords(&self) -> [i64; 3] {
        self.0
    }

    pub fn dot(&self, v: &[i64; 3]) -> i64 {
        self.0[0] * v[0] + self.0[1] * v[1] + self.0[2] * v[2]
    }

    pub fn to_rational(&self) -> RationalPoint {
        RationalPoint(self.0.map(|c| BigRational::from_integer(BigInt::from(c))))
    }
}

impl Add for LatticePoint {
    type Output = LatticePoint;
    fn add(self, o: LatticePoint) -> LatticePoint {
        LatticePoint([self.0[0] + o.0[0], self.0[1] + o.0[1], self.0[2] + o.0[2]])
    }
}

impl Sub for LatticePoint {
    type Output = LatticePoint;
    fn sub(self, o: LatticePoint) -> LatticePoint {
        LatticePoint([self.0[0] - o.0[0], self.0[1] - o.0[1], self.0[2] - o.0[2]])
    }
}

impl Neg for LatticePoint {
    type Output = LatticePoint;
    fn neg(self) -> LatticePoint {
        LatticePoint(self.0.map(|c| -c))
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.0[0], self.0[1], self.0[2])
    }
}

/// An exact rational point; fractions are kept reduced by `BigRational`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalPoint(pub [BigRational; 3]);

impl RationalPoint {
    pub fn new(coords: [BigRational; 3]) -> Self {
        RationalPoint(coords)
    }

    pub fn from_ratios(coords: [(i64, i64); 3]) -> Self {
        RationalPoint(coords.map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d))))
    }

    pub fn coords(&self) -> &[BigRational; 3] {
        &self.0
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|c| c.is_integer())
    }

    pub fn dot(&self, v: &[i64; 3]) -> BigRational {
        let mut acc = BigRational::zero();
        for (c, &w) in self.0.iter().zip(v) {
            acc += c * BigRational::from_integer(BigInt::from(w));
        }
        acc
    }
}

impl fmt::Display for RationalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.0[0], self.0[1], self.0[2])
    }
}

pub(crate) fn cross(a: [i64; 3], b: [i64; 3]) -> [i64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

pub(crate) fn dot(a: [i64; 3], b: [i64; 3]) -> i64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

pub(crate) fn det3(a: [i64; 3], b: [i64; 3], c: [i64; 3]) -> i64 {
    dot(a, cross(b, c))
}

pub(crate) fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Rank of a set of integer vectors in `Q³`.
pub(crate) fn rank(vectors: &[[i64; 3]]) -> usize {
    let nonzero: Vec<[i64; 3]> = vectors.iter().copied().filter(|v| *v != [0, 0, 0]).collect();
    if nonzero.is_empty() {
        return 0;
    }
    let first = nonzero[0];
    let Some(second) = nonzero.iter().copied().find(|v| cross(first, *v) != [0, 0, 0]) else {
        return 1;
    };
    let normal = cross(first, second);
    if nonzero.iter().any(|v| dot(normal, *v) != 0) {
        3
    } else {
        2
    }
}
