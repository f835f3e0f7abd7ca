use ahtoric::certificates::expected_dimension;
use ahtoric::degeneration::{build_layer, CellKind};
use ahtoric::lattice::{corner, simplex};
use ahtoric::oracle::interpolation::{binomial, monomials, prefix_ranks};
use ahtoric::oracle::toric::{certify_points, fixed_point_tangent, legal_limit_tetras, random_tangent_span};
use ahtoric::oracle::*;
use ahtoric::{Error, LatticePoint};
use num_rational::BigRational;
use num_traits::Zero;

fn rank_of(n: usize, d: usize, k: usize, prime: u64) -> RankResult {
    interpolation_rank(&RankProblem { prime, ..RankProblem::new(n, d, k) }).unwrap()
}

/// Exact rank over the rationals by plain Gaussian elimination.
fn rational_rank(mut m: Vec<Vec<BigRational>>) -> usize {
    let cols = m.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = &m[i][c] / &m[r][c];
                let pivot_row = m[r].clone();
                for (x, y) in m[i].iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        r += 1;
    }
    r
}

#[test]
fn shapes_and_orders() {
    assert_eq!(monomials(3, 5).len(), 56);
    assert_eq!(binomial(15, 3), 455);
    let m = monomials(2, 2);
    assert_eq!(m, vec![vec![2, 0, 0], vec![1, 1, 0], vec![0, 2, 0], vec![1, 0, 1], vec![0, 1, 1], vec![0, 0, 2]]);
    let sq = rank_of(3, 5, 13, PRIME_SMALL);
    assert_eq!((sq.rank, sq.expected, sq.defect), (56, 56, 0));
    assert_eq!(RankProblem::new(3, 5, 13).columns(), 4 * 14);
}

#[test]
fn exceptional_ranks() {
    let r = rank_of(3, 4, 8, PRIME_SMALL);
    assert_eq!((r.rank, r.expected, r.defect), (34, 35, 1));
    assert_eq!(rank_of(3, 4, 9, PRIME_SMALL).defect, 0);
    assert!(rank_of(3, 2, 2, PRIME_SMALL).defect > 0);
    assert!(rank_of(3, 2, 1, PRIME_SMALL).defect > 0);
    assert_eq!(rank_of(3, 2, 3, PRIME_SMALL).defect, 0);
}

#[test]
fn modular_rank_matches_rational_rank() {
    // (n, d, k) = (2, 4, 4) is defective; (2, 3, 2) is not
    for (d, k, pts) in [(4usize, 4usize, vec![[1i64, 2], [3, -1], [-2, 5], [4, 4], [-3, -7]]), (3, 2, vec![[1, 1], [2, -3], [5, 7]])] {
        let mons = monomials(2, d);
        let mut rows = Vec::new();
        for p in &pts {
            let x = [1i64, p[0], p[1]];
            for i in 0..3 {
                rows.push(
                    mons.iter()
                        .map(|m| {
                            if m[i] == 0 {
                                return BigRational::zero();
                            }
                            let mut v = num_bigint::BigInt::from(m[i] as i64);
                            for j in 0..3 {
                                let e = if j == i { m[j] - 1 } else { m[j] };
                                v *= num_bigint::BigInt::from(x[j]).pow(e as u32);
                            }
                            BigRational::from_integer(v)
                        })
                        .collect(),
                );
            }
        }
        let exact = rational_rank(rows);
        assert_eq!(exact, rank_of(2, d, k, PRIME_SMALL).rank, "d = {d}");
    }
}

#[test]
fn sweeps_reproduce_exception_table() {
    let expect: [(usize, usize, Vec<(usize, usize)>); 3] = [
        (3, 8, vec![(2, 2), (2, 3), (4, 9)]),
        (2, 5, vec![(2, 2), (4, 5)]),
        (4, 4, vec![(2, 2), (2, 3), (2, 4), (3, 7), (4, 14)]),
    ];
    for (n, d_max, set) in expect {
        let a = ah_sweep(n, d_max, PRIME_SMALL, DEFAULT_SEED, 4, DEFAULT_CEILING).unwrap();
        let b = ah_sweep(n, d_max, PRIME_LARGE, DEFAULT_SEED, 4, DEFAULT_CEILING).unwrap();
        assert_eq!(a.exceptions, set, "n = {n}");
        assert!(a.matches_table);
        let defects = |r: &SweepReport| r.rows.iter().map(|x| x.defect).collect::<Vec<_>>();
        assert_eq!(defects(&a), defects(&b));
    }
    assert!(matches!(ah_sweep(3, 30, PRIME_SMALL, 1, 1, DEFAULT_CEILING), Err(Error::CeilingExceeded { .. })));
    assert!(ah_sweep(5, 2, PRIME_SMALL, 1, 1, DEFAULT_CEILING).is_err());
}

#[test]
fn critical_indices_are_not_defective() {
    for d in 5..=10usize {
        let n_d = expected_dimension(d as i64).n_d as usize;
        let p = RankProblem::new(3, d, n_d);
        let (ranks, _) = prefix_ranks(&p, DEFAULT_CEILING).unwrap();
        for (k, r) in ranks.iter().enumerate() {
            assert_eq!(*r, (4 * (k + 1)).min(p.columns()), "d = {d}, k = {k}");
        }
    }
    let e = expected_dimension(12);
    let r = rank_of(3, 12, e.n_d as usize + 1, PRIME_SMALL);
    assert_eq!((r.rank, r.defect), (455, 0));
}

#[test]
fn veronese_as_toric_model_agrees() {
    for d in 2..=6i64 {
        let model = ToricModel::new(simplex(d).lattice_points()).unwrap();
        for k in 0..=expected_dimension(d).n_d as usize + 1 {
            let toric = random_tangent_span(&model, k + 1, PRIME_SMALL, 7, 2).unwrap();
            assert_eq!(toric, rank_of(3, d as usize, k, PRIME_SMALL).rank, "d = {d}, k = {k}");
        }
    }
}

#[test]
fn toric_spans() {
    let cube = ToricModel::new((0..8).map(corner)).unwrap();
    assert_eq!(random_tangent_span(&cube, 2, PRIME_SMALL, 1, 1).unwrap(), 8);
    let d1 = ToricModel::new(simplex(1).lattice_points()).unwrap();
    assert_eq!(toric_tangent_span(&d1, &[vec![3, 5, 7]], PRIME_SMALL), 4);
    let g = certify_block_defectivity(&"gamma_7".parse().unwrap(), PRIME_SMALL, 3).unwrap();
    assert_eq!((g.points, g.oracle_rank, g.agree), (24, Some(24), Some(true)));
    let s8 = certify_points("S1_8", build_layer(8).unwrap().lattice_points(), 20, PRIME_SMALL, 3, DEFAULT_CEILING).unwrap();
    assert_eq!((s8.points, s8.oracle_rank), (81, Some(80)));
    let s5 = certify_points("S1_5", build_layer(5).unwrap().lattice_points(), 9, PRIME_SMALL, 3, DEFAULT_CEILING).unwrap();
    assert_eq!((s5.points, s5.oracle_rank), (36, Some(36)));
    let over = certify_points("S1_8", build_layer(8).unwrap().lattice_points(), 20, PRIME_SMALL, 3, 50).unwrap();
    assert_eq!(over.oracle_rank, None);
}

#[test]
fn small_blocks_agree_with_their_certificates() {
    for name in ["Delta_1", "cube", "gamma_7", "Delta_6", "T_5", "T_6", "T*_7", "T*_9", "B_8", "P_7"] {
        let r = certify_block_defectivity(&name.parse().unwrap(), PRIME_SMALL, 11).unwrap();
        assert_eq!(r.agree, Some(true), "{name}: {r:?}");
    }
}

#[test]
fn segre_corners() {
    assert!(segre_corner_tangent_check());
    let cube = ToricModel::new((0..8).map(corner)).unwrap();
    let p = |x, y, z| LatticePoint::new(x, y, z);
    let at = |v| fixed_point_tangent(&cube, v).unwrap().into_iter().collect::<Vec<_>>();
    assert_eq!(at(p(0, 0, 0)), vec![p(0, 0, 0), p(0, 0, 1), p(0, 1, 0), p(1, 0, 0)]);
    assert_eq!(at(p(1, 1, 1)), vec![p(0, 1, 1), p(1, 0, 1), p(1, 1, 0), p(1, 1, 1)]);
    assert_eq!(at(p(1, 0, 0)), vec![p(0, 0, 0), p(1, 0, 0), p(1, 0, 1), p(1, 1, 0)]);
    let big = ToricModel::new(simplex(3).lattice_points()).unwrap();
    assert_eq!(fixed_point_tangent(&big, p(0, 0, 0)).unwrap().len(), 4);
    assert!(fixed_point_tangent(&big, p(1, 0, 0)).is_err());
}

#[test]
fn limit_preconditions_hold_for_every_legal_tetra() {
    for (kind, full) in [(CellKind::Cube, 8), (CellKind::SigmaBlock, 7), (CellKind::Semicube, 6)] {
        let tetras = legal_limit_tetras(kind).unwrap();
        assert!(!tetras.is_empty());
        for t in tetras {
            let c = limit_projection_check(kind, &t, PRIME_SMALL, 5, 8).unwrap();
            assert_eq!(c.full_rank, full);
            assert!(c.passed && c.ranks.iter().all(|&r| r == full), "{kind}: {t:?}");
        }
    }
    let cube_case = [(0, 0, 0), (1, 1, 0), (1, 0, 1), (0, 1, 1)].map(|(x, y, z)| LatticePoint::new(x, y, z));
    assert!(limit_projection_check(CellKind::Cube, &cube_case, PRIME_LARGE, 5, 8).unwrap().passed);
    let flat = [(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0)].map(|(x, y, z)| LatticePoint::new(x, y, z));
    assert!(!limit_projection_check(CellKind::Cube, &flat, PRIME_SMALL, 5, 8).unwrap().passed);
    assert!(limit_projection_check(CellKind::CornerTetra, &cube_case, PRIME_SMALL, 5, 8).is_err());
}

#[test]
fn seeds_are_deterministic() {
    let p = RankProblem { seed: 42, ..RankProblem::new(3, 6, 20) };
    assert_eq!(interpolation_rank(&p).unwrap(), interpolation_rank(&p).unwrap());
    let a = ah_sweep(2, 4, PRIME_SMALL, 9, 2, DEFAULT_CEILING).unwrap();
    assert_eq!(a, ah_sweep(2, 4, PRIME_SMALL, 9, 2, DEFAULT_CEILING).unwrap());
    assert_eq!(a.to_csv().lines().next(), Some("n,d,k,s,rank,expected,defect"));
    let bad = RankProblem { prime: 101, ..RankProblem::new(3, 6, 1) };
    assert!(interpolation_rank(&bad).is_err());
}
