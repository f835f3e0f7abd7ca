//! Ranks of double-point interpolation matrices for `V_{n,d}`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::field::{Eliminator, Field, PRIME_SMALL};
use crate::error::{Error, Result};

pub const DEFAULT_CEILING: usize = 3000;
pub const DEFAULT_SEED: u64 = 42;
const MAX_RESAMPLES: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RankProblem {
    pub n: usize,
    pub d: usize,
    /// Secant index: `k + 1` double points.
    pub k: usize,
    pub prime: u64,
    pub seed: u64,
    pub trials: usize,
}

impl RankProblem {
    pub fn new(n: usize, d: usize, k: usize) -> Self {
        RankProblem { n, d, k, prime: PRIME_SMALL, seed: DEFAULT_SEED, trials: 4 }
    }

    pub fn columns(&self) -> usize {
        binomial(self.n + self.d, self.d)
    }

    pub fn expected(&self) -> usize {
        ((self.n + 1) * (self.k + 1)).min(self.columns())
    }

    fn validate(&self, ceiling: usize) -> Result<()> {
        if self.n == 0 || self.d == 0 || self.trials == 0 {
            return Err(Error::InvalidParams("n, d and trials must be positive".into()));
        }
        if self.prime <= 2 * self.columns() as u64 {
            return Err(Error::InvalidParams(format!("prime {} is too small for {} columns", self.prime, self.columns())));
        }
        if self.columns() > ceiling {
            return Err(Error::CeilingExceeded { cols: self.columns(), ceiling });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RankResult {
    pub n: usize,
    pub d: usize,
    pub k: usize,
    pub prime: u64,
    pub seed: u64,
    pub rank: usize,
    pub expected: usize,
    pub defect: usize,
    pub trials: usize,
    pub resampled: usize,
}

pub fn binomial(n: usize, k: usize) -> usize {
    let k = k.min(n.saturating_sub(k));
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Exponent vectors of degree `d` in `n + 1` variables, degrevlex order.
pub fn monomials(n: usize, d: usize) -> Vec<Vec<usize>> {
    fn rec(vars: usize, d: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if vars == 1 {
            prefix.push(d);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for e in 0..=d {
            prefix.push(e);
            rec(vars - 1, d - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n + 1, d, &mut Vec::new(), &mut out);
    // degrevlex: compare last differing exponent, smaller last exponent first
    out.sort_by(|a, b| {
        (0..=n).rev().find(|&i| a[i] != b[i]).map_or(std::cmp::Ordering::Equal, |i| a[i].cmp(&b[i]))
    });
    out
}

/// The `n + 1` gradient rows of the degree-`d` monomials at `x` (with `x₀ = 1`).
fn gradient_rows(f: Field, mons: &[Vec<usize>], x: &[u64], d: usize) -> Vec<Vec<u64>> {
    let pw: Vec<Vec<u64>> = x
        .iter()
        .map(|&xi| {
            let mut v = vec![1u64; d + 1];
            for e in 1..=d {
                v[e] = f.mul(v[e - 1], xi);
            }
            v
        })
        .collect();
    (0..x.len())
        .map(|i| {
            mons.iter()
                .map(|m| {
                    if m[i] == 0 {
                        return 0;
                    }
                    let mut v = m[i] as u64 % f.p;
                    for (j, &e) in m.iter().enumerate() {
                        let e = if j == i { e - 1 } else { e };
                        v = f.mul(v, pw[j][e]);
                    }
                    v
                })
                .collect()
        })
        .collect()
}

/// Draws `count` distinct affine points; returns them and the resample count.
pub(crate) fn sample_points(rng: &mut ChaCha8Rng, f: Field, count: usize, dim: usize) -> Result<(Vec<Vec<u64>>, usize)> {
    let mut resampled = 0;
    loop {
        let pts: Vec<Vec<u64>> = (0..count).map(|_| (0..dim).map(|_| rng.gen_range(1..f.p)).collect()).collect();
        let mut sorted = pts.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() == pts.len() {
            return Ok((pts, resampled));
        }
        resampled += 1;
        if resampled > MAX_RESAMPLES {
            return Err(Error::DegenerateSamples);
        }
    }
}

/// Rank after each block of `n + 1` rows, for `k = 0..=p.k`, maximised over
/// trials. One elimination per trial serves every smaller `k`.
pub fn prefix_ranks(p: &RankProblem, ceiling: usize) -> Result<(Vec<usize>, usize)> {
    p.validate(ceiling)?;
    let f = Field::new(p.prime);
    let mons = monomials(p.n, p.d);
    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
    let mut best = vec![0usize; p.k + 1];
    let mut resampled = 0;
    for _ in 0..p.trials {
        let (pts, r) = sample_points(&mut rng, f, p.k + 1, p.n)?;
        resampled += r;
        let mut e = Eliminator::new(f);
        for (j, pt) in pts.iter().enumerate() {
            let mut x = vec![1u64];
            x.extend_from_slice(pt);
            if e.rank() < mons.len() {
                for row in gradient_rows(f, &mons, &x, p.d) {
                    e.push(row);
                }
            }
            best[j] = best[j].max(e.rank());
        }
    }
    Ok((best, resampled))
}

pub fn interpolation_rank(p: &RankProblem) -> Result<RankResult> {
    interpolation_rank_with_ceiling(p, DEFAULT_CEILING)
}

pub fn interpolation_rank_with_ceiling(p: &RankProblem, ceiling: usize) -> Result<RankResult> {
    let (ranks, resampled) = prefix_ranks(p, ceiling)?;
    let rank = ranks[p.k];
    let expected = p.expected();
    Ok(RankResult {
        n: p.n,
        d: p.d,
        k: p.k,
        prime: p.prime,
        seed: p.seed,
        rank,
        expected,
        defect: expected - rank,
        trials: p.trials,
        resampled,
    })
}

/// Exceptional `(n, d, s)` with `s` the number of double points, for `n ≤ 4`.
pub fn is_exceptional(n: usize, d: usize, s: usize) -> bool {
    (d == 2 && (2..=n).contains(&s)) || matches!((n, d, s), (2, 4, 5) | (3, 4, 9) | (4, 4, 14) | (4, 3, 7))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    pub d: usize,
    pub k: usize,
    /// Number of double points, `k + 1`.
    pub s: usize,
    pub rank: usize,
    pub expected: usize,
    pub defect: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub n: usize,
    pub d_max: usize,
    pub prime: u64,
    pub seed: u64,
    pub trials: usize,
    pub rows: Vec<SweepRow>,
    /// `(d, s)` pairs with nonzero defect.
    pub exceptions: Vec<(usize, usize)>,
    /// Whether `exceptions` equals the classical table in range.
    pub matches_table: bool,
}

impl SweepReport {
    pub fn to_csv(&self) -> String {
        let mut s = String::from("n,d,k,s,rank,expected,defect\n");
        for r in &self.rows {
            s.push_str(&format!("{},{},{},{},{},{},{}\n", self.n, r.d, r.k, r.s, r.rank, r.expected, r.defect));
        }
        s
    }
}

pub fn ah_sweep(n: usize, d_max: usize, prime: u64, seed: u64, trials: usize, ceiling: usize) -> Result<SweepReport> {
    if !(1..=4).contains(&n) {
        return Err(Error::InvalidParams(format!("sweeps cover n in 1..=4, got {n}")));
    }
    let widest = binomial(n + d_max, d_max);
    if widest > ceiling {
        return Err(Error::CeilingExceeded { cols: widest, ceiling });
    }
    let mut rows = Vec::new();
    for d in 1..=d_max {
        let cols = binomial(n + d, d);
        let k_max = cols.div_ceil(n + 1);
        let p = RankProblem { n, d, k: k_max, prime, seed, trials };
        let (ranks, _) = prefix_ranks(&p, ceiling)?;
        for (k, &rank) in ranks.iter().enumerate() {
            let expected = ((n + 1) * (k + 1)).min(cols);
            rows.push(SweepRow { d, k, s: k + 1, rank, expected, defect: expected - rank });
        }
    }
    let exceptions: Vec<(usize, usize)> = rows.iter().filter(|r| r.defect > 0).map(|r| (r.d, r.s)).collect();
    let table: Vec<(usize, usize)> =
        rows.iter().filter(|r| is_exceptional(n, r.d, r.s)).map(|r| (r.d, r.s)).collect();
    Ok(SweepReport { n, d_max, prime, seed, trials, matches_table: exceptions == table, rows, exceptions })
}
