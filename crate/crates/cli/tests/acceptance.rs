//! One line per acceptance criterion, then a single assertion over all of them.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use ahtoric::certificates::configs::{even_base_config, odd_config};
use ahtoric::certificates::identities::IdentityKind;
use ahtoric::certificates::{block_contribution, check_identities, expected_dimension, UnitKind};
use ahtoric::degeneration::{build_block, build_layer, build_standard_subdivision, check_regularity};
use ahtoric::degeneration::{AffineForm, BlockName, CellKind, Subdivision};
use ahtoric::lattice::unit_cube;
use ahtoric::oracle::interpolation::prefix_ranks;
use ahtoric::oracle::toric::legal_limit_tetras;
use ahtoric::oracle::*;
use ahtoric::packing::{max_contribution, solve, PackingProblem, SearchOptions, DEFAULT_BUDGET};
use ahtoric::LatticePoint;

type Check = Result<(), String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Check {
    ensure(start.elapsed() < limit, || format!("took {:?}, limit {limit:?}", start.elapsed()))
}

fn binom(n: i64, k: i64) -> i64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn count(d: i64) -> i64 {
    binom(d + 3, 3) / 4
}

fn subdivision_counts() -> Check {
    let t = Instant::now();
    for d in 1..=14 {
        let s = build_standard_subdivision(d).map_err(|e| e.to_string())?;
        let got = [CellKind::Cube, CellKind::CornerTetra, CellKind::SigmaBlock].map(|k| s.count(k) as i64);
        let want = [binom(d, 3), d * (d + 1) / 2, d * (d - 1) / 2];
        ensure(got == want, || format!("d = {d}: {got:?} != {want:?}"))?;
    }
    within(t, Duration::from_secs(5))
}

fn regular(s: &Subdivision) -> bool {
    check_regularity(s).is_ok_and(|r| r.passed)
}

fn regularity() -> Check {
    for d in 1..=14 {
        ensure(regular(&build_standard_subdivision(d).unwrap()), || format!("Delta_{d}"))?;
    }
    for name in BlockName::catalog() {
        let b = build_block(&name).map_err(|e| e.to_string())?;
        ensure(b.regions.iter().all(regular), || format!("block {name}"))?;
    }
    let s = build_standard_subdivision(6).unwrap();
    let mut lift = s.lift().expect("lifted").to_vec();
    let i = s.cells().iter().position(|c| c.kind == CellKind::Cube).expect("a cube");
    lift[i] = AffineForm::ZERO;
    let mutated = s.with_lift(Some(lift)).map_err(|e| e.to_string())?;
    ensure(!regular(&mutated), || "zeroed form still regular".into())
}

fn odd_certificates() -> Check {
    for d in [5, 7, 9, 11, 13] {
        let rep = odd_config(d).map_err(|e| e.to_string())?.verify();
        ensure(rep.passed, || format!("d = {d}: {:?}", rep.failure))?;
        ensure(rep.claimed_k == expected_dimension(d).n_d, || format!("d = {d}: claim {}", rep.claimed_k))?;
        ensure(rep.layers.iter().all(|l| l.uncovered == 0), || format!("d = {d}: layer not covered"))?;
        ensure(count(d) == count(d - 2) + (d + 1) * (d + 1) / 4, || format!("recursion at d = {d}"))?;
    }
    Ok(())
}

fn even_base_certificates() -> Check {
    for (d, units, uncovered) in [(6, 21, 0), (8, 41, 1), (10, 71, 2), (12, 113, 3)] {
        let t = Instant::now();
        let rep = even_base_config(d).map_err(|e| e.to_string())?.verify();
        ensure(rep.passed, || format!("d = {d}: {:?}", rep.failure))?;
        ensure(rep.contribution == units, || format!("d = {d}: {} units", rep.contribution))?;
        ensure(rep.uncovered.len() == uncovered, || format!("d = {d}: {} uncovered", rep.uncovered.len()))?;
        within(t, Duration::from_secs(60))?;
    }
    Ok(())
}

fn block_table() -> Check {
    let table = [
        ("gamma_7", 6),
        ("P_7", 72),
        ("C_7", 128),
        ("H_9", 198),
        ("P_11", 156),
        ("P_13", 210),
        ("T*_7", 28),
        ("T*_9", 42),
        ("T*_11", 56),
        ("B_8", 49),
        ("B_10", 63),
        ("B_12", 77),
        ("A_2@10", 276),
        ("A_2@12", 362),
    ];
    for (name, value) in table {
        let b: BlockName = name.parse().map_err(|e: ahtoric::Error| e.to_string())?;
        let got = block_contribution(&b).map_err(|e| e.to_string())?;
        ensure(got == value, || format!("{name}: {got} != {value}"))?;
    }
    Ok(())
}

fn identities() -> Check {
    let rep = check_identities(40);
    ensure(rep.passed, || "an identity fails".into())?;
    for (d, v) in [(22, 405), (26, 581), (34, 1029), (28, 681), (36, 1161), (40, 1449)] {
        let ok = rep.checks.iter().any(|c| c.d == d && c.kind == IdentityKind::LayerSum && c.holds && c.lhs == v);
        ensure(ok, || format!("d = {d}: no layer sum {v}"))?;
    }
    let flagged: Vec<_> = rep.flagged().map(|c| (c.d, c.lhs, c.rhs)).collect();
    ensure(flagged == [(24, 777, 489)], || format!("flagged {flagged:?}"))
}

fn oracle_agreement() -> Check {
    let t = Instant::now();
    for d in 5..=10usize {
        let n_d = expected_dimension(d as i64).n_d as usize;
        let p = RankProblem::new(3, d, n_d);
        ensure(p.trials == 4 && p.seed == DEFAULT_SEED && p.prime == PRIME_SMALL, || "defaults changed".into())?;
        let (ranks, _) = prefix_ranks(&p, DEFAULT_CEILING).map_err(|e| e.to_string())?;
        for (k, r) in ranks.iter().enumerate() {
            ensure(*r == (4 * (k + 1)).min(p.columns()), || format!("d = {d}, k = {k}: rank {r}"))?;
        }
    }
    let sq = interpolation_rank(&RankProblem::new(3, 5, 13)).map_err(|e| e.to_string())?;
    ensure(sq.rank == 56 && sq.defect == 0, || format!("(3,5,13) rank {}", sq.rank))?;
    within(t, Duration::from_secs(600))
}

fn exception_table() -> Check {
    let expect: [(usize, usize, &[(usize, usize)]); 3] = [
        (3, 9, &[(2, 2), (2, 3), (4, 9)]),
        (2, 5, &[(2, 2), (4, 5)]),
        (4, 4, &[(2, 2), (2, 3), (2, 4), (3, 7), (4, 14)]),
    ];
    for (n, d_max, set) in expect {
        let a = ah_sweep(n, d_max, PRIME_SMALL, DEFAULT_SEED, 4, DEFAULT_CEILING).map_err(|e| e.to_string())?;
        let b = ah_sweep(n, d_max, PRIME_LARGE, DEFAULT_SEED, 4, DEFAULT_CEILING).map_err(|e| e.to_string())?;
        ensure(a.exceptions == set && a.matches_table, || format!("n = {n}: {:?}", a.exceptions))?;
        let defects = |r: &SweepReport| r.rows.iter().map(|x| x.defect).collect::<Vec<_>>();
        ensure(defects(&a) == defects(&b), || format!("n = {n}: primes disagree"))?;
    }
    Ok(())
}

fn limit_preconditions() -> Check {
    for (kind, full) in [(CellKind::Cube, 8), (CellKind::SigmaBlock, 7), (CellKind::Semicube, 6)] {
        let tetras = legal_limit_tetras(kind).map_err(|e| e.to_string())?;
        ensure(!tetras.is_empty(), || format!("{kind}: no legal tetrahedra"))?;
        for t in tetras {
            let c = limit_projection_check(kind, &t, PRIME_SMALL, DEFAULT_SEED, 8).map_err(|e| e.to_string())?;
            let all = c.ranks.len() == 8 && c.ranks.iter().all(|&r| r == full);
            ensure(c.passed && c.full_rank == full && all, || format!("{kind}: {t:?} ranks {:?}", c.ranks))?;
        }
    }
    Ok(())
}

fn packing_regeneration() -> Check {
    let tetras: BTreeSet<UnitKind> = UnitKind::TETRAS.into_iter().collect();
    let tangent: BTreeSet<UnitKind> = [UnitKind::TangentTetra].into_iter().collect();
    let gamma7 = build_block(&BlockName::Gamma7).map_err(|e| e.to_string())?.regions.remove(0);
    let cases = [
        (build_standard_subdivision(6).unwrap(), tetras.clone(), 21, 0),
        (build_layer(8).unwrap(), tangent, 20, 1),
        (build_layer(10).unwrap(), tetras.clone(), 30, 1),
        (gamma7.clone(), tetras.clone(), 6, 0),
    ];
    for (region, kinds, target, unc) in cases {
        let p = PackingProblem::new(&region, kinds, target).max_uncovered(unc);
        let outcome = solve(&p, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
        let sol = outcome.solution().ok_or_else(|| format!("{}: no solution", region.name))?;
        ensure(sol.contribution() == target, || format!("{}: {}", region.name, sol.contribution()))?;
    }
    let g = max_contribution(&gamma7, &tetras, SearchOptions::default()).map_err(|e| e.to_string())?;
    ensure(g.exact && g.value == 6, || format!("gamma_7 optimum {}", g.value))?;
    let cube = Subdivision::grid("cube", unit_cube(LatticePoint::ORIGIN), Vec::new());
    let all: BTreeSet<UnitKind> = UnitKind::ALL.into_iter().collect();
    let c = max_contribution(&cube, &all, SearchOptions::default()).map_err(|e| e.to_string())?;
    ensure(c.exact && c.value == 2, || format!("cube optimum {}", c.value))
}

fn end_to_end() -> Check {
    let t = Instant::now();
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_ahtoric"))
            .args(["sweep", "--dmax", "22"])
            .env_remove("AHTORIC_SEED")
            .output()
            .map_err(|e| e.to_string())
    };
    let a = run()?;
    ensure(a.status.code() == Some(0), || format!("exit {:?}", a.status.code()))?;
    within(t, Duration::from_secs(900))?;
    let b = run()?;
    ensure(a.stdout == b.stdout, || "reports differ between runs".into())
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Check); 11] = [
        ("subdivision counts", subdivision_counts),
        ("regularity", regularity),
        ("odd-d certificates", odd_certificates),
        ("even-d base certificates", even_base_certificates),
        ("block contribution table", block_table),
        ("identity checker", identities),
        ("oracle agreement", oracle_agreement),
        ("exception table", exception_table),
        ("limit preconditions", limit_preconditions),
        ("packing regeneration", packing_regeneration),
        ("end-to-end sweep", end_to_end),
    ];
    let mut failed = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        let t = Instant::now();
        match check() {
            Ok(()) => println!("PASS {:>2} {name} ({:.1?})", i + 1, t.elapsed()),
            Err(why) => {
                println!("FAIL {:>2} {name}: {why}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
