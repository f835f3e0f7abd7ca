//! Fourier–Motzkin elimination over exact integers, with back-substitution
//! producing a rational witness for feasible systems.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// `coeffs · x ≤ rhs` (or `<` when strict).
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Row {
    pub coeffs: Vec<BigInt>,
    pub rhs: BigInt,
    pub strict: bool,
}

impl Row {
    pub fn new(coeffs: &[i64], rhs: i64, strict: bool) -> Self {
        Row {
            coeffs: coeffs.iter().map(|&c| BigInt::from(c)).collect(),
            rhs: BigInt::from(rhs),
            strict,
        }
    }

    fn normalized(mut self) -> Self {
        let mut g = self.rhs.abs();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        if !g.is_zero() && !g.is_one() {
            for c in &mut self.coeffs {
                *c /= &g;
            }
            self.rhs /= &g;
        }
        self
    }
}

/// Drops duplicate directions, keeping the tightest bound.
fn prune(rows: Vec<Row>) -> Vec<Row> {
    let mut best: BTreeMap<Vec<BigInt>, Row> = BTreeMap::new();
    for r in rows {
        let r = r.normalized();
        match best.get(&r.coeffs) {
            Some(old) if old.rhs < r.rhs || (old.rhs == r.rhs && (old.strict || !r.strict)) => {}
            _ => {
                best.insert(r.coeffs.clone(), r);
            }
        }
    }
    best.into_values().collect()
}

/// Eliminates the last variable of `rows`.
fn eliminate_last(rows: &[Row]) -> Vec<Row> {
    let last = rows[0].coeffs.len() - 1;
    let (mut pos, mut neg, mut out) = (Vec::new(), Vec::new(), Vec::new());
    for r in rows {
        let c = &r.coeffs[last];
        if c.is_positive() {
            pos.push(r);
        } else if c.is_negative() {
            neg.push(r);
        } else {
            out.push(Row { coeffs: r.coeffs[..last].to_vec(), rhs: r.rhs.clone(), strict: r.strict });
        }
    }
    for p in &pos {
        for n in &neg {
            let a = &p.coeffs[last];
            let b = -&n.coeffs[last];
            let coeffs = (0..last).map(|i| &p.coeffs[i] * &b + &n.coeffs[i] * a).collect();
            out.push(Row { coeffs, rhs: &p.rhs * &b + &n.rhs * a, strict: p.strict || n.strict });
        }
    }
    prune(out)
}

/// Returns a point satisfying every row, or `None` when the system is empty.
pub(crate) fn solve(rows: &[Row]) -> Option<Vec<BigRational>> {
    let nvars = rows.first().map_or(0, |r| r.coeffs.len());
    let mut stages: Vec<Vec<Row>> = vec![prune(rows.to_vec())];
    for _ in 0..nvars {
        let next = if stages.last().unwrap().is_empty() {
            Vec::new()
        } else {
            eliminate_last(stages.last().unwrap())
        };
        stages.push(next);
    }
    for r in stages.last().unwrap() {
        let ok = if r.strict { r.rhs.is_positive() } else { !r.rhs.is_negative() };
        if !ok {
            return None;
        }
    }
    let mut x: Vec<BigRational> = Vec::with_capacity(nvars);
    for var in 0..nvars {
        // stage nvars-1-var holds rows over x_0..=x_var
        let stage = &stages[nvars - 1 - var];
        let mut lower: Option<(BigRational, bool)> = None;
        let mut upper: Option<(BigRational, bool)> = None;
        for r in stage {
            let c = &r.coeffs[var];
            if c.is_zero() {
                continue;
            }
            let mut rest = BigRational::from_integer(r.rhs.clone());
            for (i, xi) in x.iter().enumerate() {
                rest -= xi * BigRational::from_integer(r.coeffs[i].clone());
            }
            let bound = rest / BigRational::from_integer(c.clone());
            if c.is_positive() {
                let tighter = match &upper {
                    None => true,
                    Some((u, s)) => bound < *u || (bound == *u && r.strict && !s),
                };
                if tighter {
                    upper = Some((bound, r.strict));
                }
            } else {
                let tighter = match &lower {
                    None => true,
                    Some((l, s)) => bound > *l || (bound == *l && r.strict && !s),
                };
                if tighter {
                    lower = Some((bound, r.strict));
                }
            }
        }
        let one = BigRational::one();
        let value = match (lower, upper) {
            (None, None) => BigRational::zero(),
            (Some((l, _)), None) => l + one,
            (None, Some((u, _))) => u - one,
            (Some((l, _)), Some((u, _))) if l == u => l,
            (Some((l, _)), Some((u, _))) => (l + u) / BigRational::from_integer(BigInt::from(2)),
        };
        x.push(value);
    }
    Some(x)
}
