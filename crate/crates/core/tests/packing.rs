use std::collections::BTreeSet;

use ahtoric::certificates::frozen::{placement, regenerate, SEARCHED};
use ahtoric::certificates::{Certificate, UnitKind};
use ahtoric::certificates::certificate::Provenance;
use ahtoric::degeneration::{build_block, build_layer, build_standard_subdivision, BlockName, Subdivision};
use ahtoric::lattice::{corner, unit_cube};
use ahtoric::packing::enumerate_candidate_units;
use ahtoric::packing::{max_contribution, solve, solve_with, PackingProblem, SearchOptions, SolveOutcome, DEFAULT_BUDGET};
use ahtoric::{LatticePoint, Polytope};

fn kinds(k: &[UnitKind]) -> BTreeSet<UnitKind> {
    k.iter().copied().collect()
}

fn cube_region() -> Subdivision {
    Subdivision::grid("cube", unit_cube(LatticePoint::ORIGIN), Vec::new())
}

fn sigma_region() -> Subdivision {
    let pts: Vec<LatticePoint> = (0..7).map(corner).collect();
    Subdivision::grid("sigma", Polytope::hull(&pts).unwrap(), Vec::new())
}

fn gamma7() -> Subdivision {
    build_block(&BlockName::Gamma7).unwrap().regions.remove(0)
}

fn wrap(region: &Subdivision, units: Vec<ahtoric::certificates::Unit>) -> Certificate {
    let total: i64 = units.iter().map(|u| u.contribution() as i64).sum();
    Certificate {
        d: None,
        regions: vec![region.clone()],
        units,
        claimed_k: total - 1,
        provenance: Provenance { builder: "search".into(), seed: 0 },
    }
}

/// Non-degenerate quadruples of `pts`, by determinant.
fn spanning_quadruples(pts: &[LatticePoint]) -> usize {
    let mut n = 0;
    for a in 0..pts.len() {
        for b in a + 1..pts.len() {
            for c in b + 1..pts.len() {
                for d in c + 1..pts.len() {
                    let [u, v, w] = [pts[b], pts[c], pts[d]].map(|p| (p - pts[a]).0);
                    let det = u[0] * (v[1] * w[2] - v[2] * w[1]) - u[1] * (v[0] * w[2] - v[2] * w[0])
                        + u[2] * (v[0] * w[1] - v[1] * w[0]);
                    n += (det != 0) as usize;
                }
            }
        }
    }
    n
}

#[test]
fn candidate_counts() {
    let cube = cube_region();
    assert_eq!(enumerate_candidate_units(&cube, &kinds(&[UnitKind::TangentTetra])).len(), 8);
    assert_eq!(enumerate_candidate_units(&cube, &kinds(&[UnitKind::SegreCubePair])).len(), 1);
    let all_cube = enumerate_candidate_units(&cube, &kinds(&UnitKind::TETRAS));
    let cube_pts: Vec<LatticePoint> = (0..8).map(corner).collect();
    assert_eq!(all_cube.len(), spanning_quadruples(&cube_pts));
    let sigma = sigma_region();
    let sig_pts: Vec<LatticePoint> = (0..7).map(corner).collect();
    let tangent = enumerate_candidate_units(&sigma, &kinds(&[UnitKind::TangentTetra])).len();
    let limit = enumerate_candidate_units(&sigma, &kinds(&[UnitKind::LimitTetraInSigma])).len();
    assert_eq!(tangent + limit, spanning_quadruples(&sig_pts));
    assert_eq!((tangent, limit), (4, 25));
    let c = enumerate_candidate_units(&cube, &kinds(&UnitKind::ALL));
    let mut sorted = c.clone();
    sorted.sort_by_key(|u| (u.cell, u.kind.search_rank(), u.vertices.clone()));
    assert_eq!(sorted, c);
}

#[test]
fn target_sized_solutions() {
    let tetras = kinds(&UnitKind::TETRAS);
    let cases: Vec<(Subdivision, BTreeSet<UnitKind>, u32, usize)> = vec![
        (build_standard_subdivision(6).unwrap(), tetras.clone(), 21, 0),
        (build_layer(8).unwrap(), kinds(&[UnitKind::TangentTetra]), 20, 1),
        (build_layer(10).unwrap(), tetras.clone(), 30, 1),
        (gamma7(), tetras.clone(), 6, 0),
        (build_layer(3).unwrap(), kinds(&[UnitKind::SegreCubePair, UnitKind::TangentTetra]), 4, 0),
    ];
    for (region, k, target, unc) in cases {
        let p = PackingProblem::new(&region, k, target).max_uncovered(unc);
        let sol = solve(&p, DEFAULT_BUDGET).unwrap().solution().expect("solved");
        assert_eq!(sol.contribution(), target, "{}", region.name);
        assert!(sol.uncovered.len() <= unc);
        let rep = wrap(&region, sol.units).verify();
        assert!(rep.passed, "{}: {:?}", region.name, rep.failure);
    }
    let s8 = build_layer(8).unwrap();
    let p = PackingProblem::new(&s8, kinds(&[UnitKind::TangentTetra]), 20).max_uncovered(1);
    assert_eq!(solve(&p, DEFAULT_BUDGET).unwrap().solution().unwrap().uncovered.len(), 1);
    let s3 = build_layer(3).unwrap();
    let p = PackingProblem::new(&s3, kinds(&[UnitKind::SegreCubePair, UnitKind::TangentTetra]), 4).max_uncovered(0);
    let sol = solve(&p, DEFAULT_BUDGET).unwrap().solution().unwrap();
    let cubes = sol.units.iter().filter(|u| u.kind == UnitKind::SegreCubePair).count();
    assert_eq!((cubes, sol.units.len()), (1, 3));
}

#[test]
fn stored_placements_regenerate() {
    for name in SEARCHED {
        assert_eq!(regenerate(name, DEFAULT_BUDGET).unwrap(), placement(name).unwrap(), "{name}");
    }
}

#[test]
fn optimality_by_exhaustion() {
    let tetras = kinds(&UnitKind::TETRAS);
    let opts = SearchOptions::default();
    let g = max_contribution(&gamma7(), &tetras, opts).unwrap();
    assert_eq!((g.value, g.exact), (6, true));
    let c = max_contribution(&cube_region(), &kinds(&[UnitKind::SegreCubePair]), opts).unwrap();
    assert_eq!((c.value, c.exact), (2, true));
    let c = max_contribution(&cube_region(), &tetras, opts).unwrap();
    assert_eq!((c.value, c.exact), (2, true));
    let s10 = build_layer(10).unwrap();
    let k = kinds(&[UnitKind::TangentTetra, UnitKind::LimitTetraInCube, UnitKind::LimitTetraInSigma]);
    let m = max_contribution(&s10, &k, opts).unwrap();
    assert_eq!((m.value, m.exact), (30, true));
    let all = kinds(&UnitKind::ALL);
    for k in [1i64, 3, 5, 7] {
        let m = max_contribution(&build_layer(k).unwrap(), &all, opts).unwrap();
        assert_eq!((m.value as i64, m.exact), ((k + 1) * (k + 1) / 4, true), "S1_{k}");
    }
}

#[test]
fn pruning_is_admissible() {
    let all = kinds(&UnitKind::ALL);
    let tetras = kinds(&UnitKind::TETRAS);
    let loose = SearchOptions { prune: false, ..SearchOptions::default() };
    let tight = SearchOptions::default();
    for (r, k) in [(gamma7(), &tetras), (build_layer(3).unwrap(), &all), (sigma_region(), &tetras), (cube_region(), &all)] {
        let a = max_contribution(&r, k, tight).unwrap();
        let b = max_contribution(&r, k, loose).unwrap();
        assert!(a.exact && b.exact);
        assert_eq!(a.value, b.value, "{}", r.name);
        let p = PackingProblem::new(&r, k.clone(), a.value);
        let sa = solve_with(&p, tight).unwrap();
        let sb = solve_with(&p, loose).unwrap();
        assert!(matches!(sa, SolveOutcome::Solved(_)) && matches!(sb, SolveOutcome::Solved(_)));
        let over = PackingProblem::new(&r, k.clone(), a.value + 1);
        assert!(matches!(solve_with(&over, tight).unwrap(), SolveOutcome::Unsat { .. }));
        assert!(matches!(solve_with(&over, loose).unwrap(), SolveOutcome::Unsat { .. }));
    }
}

#[test]
fn determinism_and_errors() {
    let d6 = build_standard_subdivision(6).unwrap();
    let p = PackingProblem::new(&d6, UnitKind::TETRAS, 21).max_uncovered(0);
    assert_eq!(solve(&p, DEFAULT_BUDGET).unwrap(), solve(&p, DEFAULT_BUDGET).unwrap());
    assert!(solve(&p, 0).is_err());
    let empty = PackingProblem::new(&d6, [], 1);
    assert!(solve(&empty, 10).is_err());
    let tiny = PackingProblem::new(&d6, UnitKind::TETRAS, 21).max_uncovered(0);
    assert!(matches!(solve(&tiny, 5).unwrap(), SolveOutcome::BudgetExhausted { .. }));
}
