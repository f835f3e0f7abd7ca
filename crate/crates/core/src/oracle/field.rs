//! Arithmetic modulo a prime below 2³¹ and incremental row reduction.

/// Default primes; both below 2³¹ so products fit in `u64`.
pub const PRIME_SMALL: u64 = 1_000_003;
pub const PRIME_LARGE: u64 = 2_147_483_647;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Field {
    pub p: u64,
}

impl Field {
    pub fn new(p: u64) -> Self {
        assert!(p > 2 && p < (1 << 31), "modulus must be an odd prime below 2^31");
        Field { p }
    }

    pub fn mul(self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn sub(self, a: u64, b: u64) -> u64 {
        (a + self.p - b) % self.p
    }

    pub fn from_i64(self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }

    pub fn pow(self, mut a: u64, mut e: u64) -> u64 {
        let mut r = 1;
        a %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    pub fn inv(self, a: u64) -> u64 {
        self.pow(a, self.p - 2)
    }
}

/// Row echelon basis grown one row at a time; `push` reports whether the
/// new row was independent of everything before it.
pub struct Eliminator {
    f: Field,
    basis: Vec<(usize, Vec<u64>)>,
}

impl Eliminator {
    pub fn new(f: Field) -> Self {
        Eliminator { f, basis: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn push(&mut self, mut row: Vec<u64>) -> bool {
        let f = self.f;
        for (piv, b) in &self.basis {
            let c = row[*piv];
            if c != 0 {
                for (x, y) in row.iter_mut().zip(b) {
                    if *y != 0 {
                        *x = f.sub(*x, f.mul(c, *y));
                    }
                }
            }
        }
        let Some(piv) = row.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = f.inv(row[piv]);
        for x in &mut row {
            *x = f.mul(*x, inv);
        }
        self.basis.push((piv, row));
        true
    }
}

/// Rank of a matrix given by rows.
pub fn rank(f: Field, rows: impl IntoIterator<Item = Vec<u64>>) -> usize {
    let mut e = Eliminator::new(f);
    for r in rows {
        e.push(r);
    }
    e.rank()
}
