use ahtoric::degeneration::{
    build_block, build_layer, build_standard_subdivision, check_regularity, AffineForm, BlockName, CellKind,
    RegularityViolation, Subdivision,
};
use ahtoric::lattice::disjoint;
use ahtoric::LatticePoint;

fn binom3(n: i64) -> i64 {
    if n < 3 {
        0
    } else {
        n * (n - 1) * (n - 2) / 6
    }
}

fn assert_partition(s: &Subdivision) {
    assert!(s.uncovered_by_cells().is_empty(), "{}: uncovered points", s.name);
    let cells = s.cells();
    for i in 0..cells.len() {
        for j in i + 1..cells.len() {
            let (a, b) = (&cells[i].geometry, &cells[j].geometry);
            if !disjoint(a, b) {
                assert!(
                    ahtoric::lattice::interior_overlap_witness(a, b).is_none(),
                    "{}: cells {i} and {j} overlap",
                    s.name
                );
            }
        }
    }
}

#[test]
fn standard_subdivision_counts() {
    let s1 = build_standard_subdivision(1).unwrap();
    assert_eq!((s1.count(CellKind::CornerTetra), s1.count(CellKind::Cube), s1.count(CellKind::SigmaBlock)), (1, 0, 0));
    let s5 = build_standard_subdivision(5).unwrap();
    assert_eq!((s5.count(CellKind::Cube), s5.count(CellKind::CornerTetra), s5.count(CellKind::SigmaBlock)), (10, 15, 10));
    let s6 = build_standard_subdivision(6).unwrap();
    assert_eq!((s6.count(CellKind::Cube), s6.count(CellKind::CornerTetra), s6.count(CellKind::SigmaBlock)), (20, 21, 15));
    assert_eq!(s6.lattice_points().len(), 84);
    for d in 1..=14i64 {
        let s = build_standard_subdivision(d).unwrap();
        assert_eq!(s.count(CellKind::Cube) as i64, binom3(d));
        assert_eq!(s.count(CellKind::CornerTetra) as i64, d * (d + 1) / 2);
        assert_eq!(s.count(CellKind::SigmaBlock) as i64, d * (d - 1) / 2);
        assert_eq!(s.cells().len() as i64, binom3(d) + d * d);
    }
}

#[test]
fn standard_subdivision_is_a_partition() {
    for d in [1, 2, 3, 6] {
        assert_partition(&build_standard_subdivision(d).unwrap());
    }
}

#[test]
fn layer_counts_and_points() {
    let l1 = build_layer(1).unwrap();
    assert_eq!(l1.lattice_points().len(), 4);
    assert_eq!(l1.count(CellKind::CornerTetra), 1);
    assert_eq!(build_layer(8).unwrap().lattice_points().len(), 81);
    assert_eq!(build_layer(10).unwrap().lattice_points().len(), 121);
    for k in 1..=14i64 {
        let l = build_layer(k).unwrap();
        assert_eq!(l.lattice_points().len() as i64, (k + 1) * (k + 1));
        let m_k = (k + 2) * (k + 1) / 2 + (k + 1) * k / 2;
        assert_eq!(m_k, (k + 1) * (k + 1));
        assert_eq!(l.count(CellKind::Cube) as i64, (k - 1) * (k - 2) / 2);
        assert_eq!(l.count(CellKind::CornerTetra) as i64, k);
        assert_eq!(l.count(CellKind::SigmaBlock) as i64, k - 1);
    }
    assert_partition(&build_layer(6).unwrap());
}

#[test]
fn layers_are_slices_of_the_simplex() {
    let d = 9;
    let s = build_standard_subdivision(d).unwrap();
    for k in 1..=d {
        let z0 = d - k;
        let mut from_simplex: Vec<Vec<LatticePoint>> = s
            .cells()
            .iter()
            .filter(|c| c.anchor.0[2] == z0)
            .map(|c| c.vertices().iter().map(|v| *v - LatticePoint::new(0, 0, z0)).collect())
            .collect();
        let mut from_layer: Vec<Vec<LatticePoint>> =
            build_layer(k).unwrap().cells().iter().map(|c| c.vertices().to_vec()).collect();
        from_simplex.sort();
        from_layer.sort();
        assert_eq!(from_simplex, from_layer, "k = {k}");
    }
}

#[test]
fn standard_lift_is_regular() {
    for d in 1..=14 {
        let r = check_regularity(&build_standard_subdivision(d).unwrap()).unwrap();
        assert!(r.passed, "d = {d}: {:?}", r.violation);
    }
}

#[test]
fn flat_lift_is_not_regular() {
    let s = build_standard_subdivision(6).unwrap();
    let n = s.cells().len();
    let flat = s.with_lift(Some(vec![AffineForm::ZERO; n])).unwrap();
    let r = check_regularity(&flat).unwrap();
    assert!(!r.passed);
    assert!(matches!(r.violation, Some(RegularityViolation::NotStrict { .. })));
    let no_lift = build_standard_subdivision(2).unwrap().with_lift(None).unwrap();
    assert!(check_regularity(&no_lift).is_err());
}

#[test]
fn neighbouring_cube_forms() {
    let p = LatticePoint::new(2, 0, 0);
    let f000 = AffineForm::cube(LatticePoint::new(0, 0, 0));
    let f100 = AffineForm::cube(LatticePoint::new(1, 0, 0));
    assert_eq!(f000.eval(&p), 2);
    assert_eq!(f100.eval(&p), 4);
}

#[test]
fn block_catalog_point_counts() {
    let count = |s: &str| build_block(&s.parse::<BlockName>().unwrap()).unwrap().lattice_point_count();
    let g = build_block(&BlockName::Gamma7).unwrap();
    assert_eq!(g.lattice_point_count(), 24);
    assert_eq!(g.regions[0].count(CellKind::Semicube), 7);
    assert_eq!(g.regions[0].cells().len(), 7);
    assert_eq!(count("C_7"), 512);
    assert_eq!(count("P_7"), 36 * 8);
    assert_eq!(count("H_9"), 99 * 8);
    assert_eq!(count("A_2@10"), 138 * 8);
    assert_eq!(count("A_2@12"), 181 * 8);
    assert_eq!(count("A_3@10"), 206 * 8);
    assert_eq!(count("T*_7"), 112);
    assert_eq!(count("T*_9"), 168);
    assert_eq!(count("T*_11"), 224);
    assert_eq!(count("B_8"), 84 + 112);
    assert_eq!(count("T_5"), 56);
    assert_eq!(count("Xi"), 36 * 8 + 56 + 84);
    assert!("Q_3".parse::<BlockName>().is_err());
    assert!("P_8".parse::<BlockName>().is_err());
    assert!("A_1@10".parse::<BlockName>().is_err());
}

#[test]
fn catalog_blocks_are_regular_partitions() {
    for name in BlockName::catalog() {
        let b = build_block(&name).unwrap();
        for r in &b.regions {
            let rep = check_regularity(r).unwrap();
            assert!(rep.passed, "{name}: {:?}", rep.violation);
            if r.excluded().is_empty() {
                assert!(r.uncovered_by_cells().is_empty(), "{name}");
            }
            assert!(r.cells().iter().all(|c| c.kind != CellKind::Custom), "{name}");
        }
        assert_eq!(name.to_string().parse::<BlockName>().unwrap(), name);
    }
}

#[test]
fn subdivision_json_shape() {
    let v = build_standard_subdivision(1).unwrap().to_json();
    assert_eq!(v["cells"][0]["kind"], "CornerTetra");
    assert_eq!(v["cells"][0]["orientation"], 0b0001_0111);
    assert_eq!(v["lift"][0]["form"], serde_json::json!([1, 1, 1, 0]));
}
