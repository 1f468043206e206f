//! Full in-memory pipeline on the hyperoctahedral group of rank 2 (order 8,
//! two reflection-hyperplane orbits), with every expected value computed by
//! hand: character table, fake degrees, omega forms, variety, orbits, and
//! certification. Exercises the whole stack without touching bundle files.

use cmfam::chars::{load_and_validate, CharTableInput, ClassFingerprint};
use cmfam::euler;
use cmfam::exact::rational::rat;
use cmfam::exact::Cyclotomic;
use cmfam::group::matrix::Matrix;
use cmfam::group::{GroupData, MatrixGroupSpec, DEFAULT_ENUM_CAP};
use cmfam::supersingular::{
    classify_families, generic_cm_families, supersingular_report, CmCertification, FamilyKind,
};

fn b2_group() -> GroupData {
    let c = |v: i64| Cyclotomic::from_integer(1, v);
    let diag = Matrix::from_entries(2, vec![c(1), c(0), c(0), c(-1)]);
    let swap = Matrix::from_entries(2, vec![c(0), c(1), c(1), c(0)]);
    let spec = MatrixGroupSpec {
        name: "B2".into(),
        dim: 2,
        conductor: 1,
        generators: vec![diag, swap],
        degrees: vec![2, 4],
        pinned_orbit_order: Some(vec![0, 1]),
        enum_cap: DEFAULT_ENUM_CAP,
    };
    GroupData::enumerate(&spec).unwrap()
}

/// Rows: trivial, det, sign-on-orbit-1, sign-on-orbit-2, reflection rep.
/// Columns keyed by class fingerprints computed from the group.
fn b2_table(g: &GroupData) -> CharTableInput {
    let n = g.classes.len();
    assert_eq!(n, 5);
    // Identify classes by (order, trace-at-identity?) -> use eigen data.
    // classes: identity, -identity (order 2, eigen {-1,-1}), diag refl
    // (orbit 1), swap refl (orbit 2), rotation (order 4).
    let find = |pred: &dyn Fn(usize) -> bool| (0..n).find(|&c| pred(c)).unwrap();
    let idc = g.identity_class();
    let minus = find(&|c| {
        g.classes[c].element_order == 2 && !g.classes[c].is_reflection
    });
    let refl1 = find(&|c| g.classes[c].orbit == Some(1));
    let refl2 = find(&|c| g.classes[c].orbit == Some(2));
    let rot = find(&|c| g.classes[c].element_order == 4);

    let v = |x: i64| Cyclotomic::from_integer(1, x);
    let mut values = vec![vec![Cyclotomic::zero(1); n]; 5];
    let assign = |row: &mut Vec<Cyclotomic>, cols: [(usize, i64); 5]| {
        for (c, x) in cols {
            row[c] = v(x);
        }
    };
    assign(&mut values[0], [(idc, 1), (minus, 1), (refl1, 1), (refl2, 1), (rot, 1)]);
    assign(&mut values[1], [(idc, 1), (minus, 1), (refl1, -1), (refl2, -1), (rot, 1)]);
    assign(&mut values[2], [(idc, 1), (minus, 1), (refl1, 1), (refl2, -1), (rot, -1)]);
    assign(&mut values[3], [(idc, 1), (minus, 1), (refl1, -1), (refl2, 1), (rot, -1)]);
    assign(&mut values[4], [(idc, 2), (minus, -2), (refl1, 0), (refl2, 0), (rot, 0)]);

    CharTableInput {
        group: "B2".into(),
        conductor: 4,
        degrees: vec![2, 4],
        labels: vec![
            "phi{1,0}".into(),
            "phi{1,4}".into(),
            "phi{1,2}'".into(),
            "phi{1,2}''".into(),
            "phi{2,1}".into(),
        ],
        fingerprints: (0..n).map(|c| ClassFingerprint::of_class(g, c)).collect(),
        values: values
            .into_iter()
            .map(|row| row.into_iter().map(|c| c.embed(4)).collect())
            .collect(),
        column_pins: vec![],
    }
}

#[test]
fn b2_full_pipeline_against_hand_computation() {
    let g = b2_group();
    assert_eq!(g.order, 8);
    assert_eq!(g.reflections.len(), 4);
    assert_eq!(g.orbits.len(), 2);
    assert_eq!(g.parameter_space(), vec![(1, 0), (1, 1), (2, 0), (2, 1)]);

    let table = load_and_validate(&b2_table(&g), &g).unwrap();

    // Fake degrees: 1, t^4, t^2, t^2, t + t^3.
    let f = |row: usize| table.fake[row].f.coeffs().to_vec();
    assert_eq!(f(0), cmfam::exact::QPoly::from_integers(&[1]).coeffs());
    assert_eq!(
        f(1),
        cmfam::exact::QPoly::from_integers(&[0, 0, 0, 0, 1]).coeffs()
    );
    assert_eq!(f(2), cmfam::exact::QPoly::from_integers(&[0, 0, 1]).coeffs());
    assert_eq!(f(3), cmfam::exact::QPoly::from_integers(&[0, 0, 1]).coeffs());
    assert_eq!(
        f(4),
        cmfam::exact::QPoly::from_integers(&[0, 1, 0, 1]).coeffs()
    );

    let data = euler::build(&g, &table).unwrap();

    // Omega forms, computed by hand from the class sums.
    let expect = [
        vec![rat(4), rat(-4), rat(4), rat(-4)],
        vec![rat(0), rat(0), rat(0), rat(0)],
        vec![rat(4), rat(-4), rat(0), rat(0)],
        vec![rat(0), rat(0), rat(4), rat(-4)],
        vec![rat(2), rat(-2), rat(2), rat(-2)],
    ];
    assert_eq!(data.omega, expect);

    // All generic families are singletons.
    assert_eq!(data.generic_partition.num_blocks(), 5);

    // The variety: four planes in three Young orbits of sizes 1, 1, 2.
    assert_eq!(data.variety.len(), 4);
    let mut sizes = data.variety.orbit_sizes();
    sizes.sort_unstable();
    assert_eq!(sizes, vec![1, 1, 2]);
    let planes: Vec<Vec<i64>> = data.variety.planes.iter().map(|p| p.normal.clone()).collect();
    assert!(planes.contains(&vec![0, 0, 1, -1]));
    assert!(planes.contains(&vec![1, -1, 0, 0]));
    assert!(planes.contains(&vec![1, -1, 1, -1]));
    assert!(planes.contains(&vec![1, -1, -1, 1]));
    assert!(euler::sharp_arrangement(&data.variety).set_eq(&data.variety));

    // No supersingular characters; everything is a certified singleton.
    let ss = supersingular_report(&table).unwrap();
    assert!(ss.flags.iter().all(|&f| !f));
    let cls = classify_families(&data.generic_partition, &ss);
    assert!(cls.kinds.iter().all(|k| *k == FamilyKind::GoodSingleton));
    match generic_cm_families(&data.generic_partition, &cls) {
        CmCertification::Certified(p) => assert_eq!(p, data.generic_partition),
        CmCertification::Refusal { .. } => panic!("B2 must certify"),
    }
}
