use super::*;
use crate::exact::rational::{rat, ratio};
use crate::testutil::c3_pair;

#[test]
fn partition_canonicalization() {
    let p = FamilyPartition::from_blocks(4, vec![vec![3, 1], vec![2], vec![0]]).unwrap();
    assert_eq!(p.blocks(), &[vec![0], vec![1, 3], vec![2]]);
    assert_eq!(p.block_of(3), &[1, 3]);
    assert!(FamilyPartition::from_blocks(3, vec![vec![0, 1]]).is_err());
    assert!(FamilyPartition::from_blocks(2, vec![vec![0], vec![0, 1]]).is_err());
}

#[test]
fn c_form_matches_order_three_pattern() {
    // For a reflection class with eps = zeta_3 the coefficient vector is
    // (-z-2, -z+1, 2z+1) in the k_{1,0}, k_{1,1}, k_{1,2} coordinates.
    let (g, _) = c3_pair();
    let class = g
        .reflection_classes()
        .iter()
        .find(|(_, eps, _)| *eps == crate::group::RootOfUnity::new(3, 1))
        .map(|(c, _, _)| *c)
        .unwrap();
    let form = c_form(&g, class).unwrap();
    let z = Cyclotomic::root_of_unity(3, 1);
    let expect_k0 = z.neg().sub(&Cyclotomic::from_integer(3, 2));
    let expect_k1 = z.neg().add(&Cyclotomic::one(3));
    let expect_k2 = z.scale(&rat(2)).add(&Cyclotomic::one(3));
    assert!(form.coeff((1, 0)).unwrap().value_eq(&expect_k0));
    assert!(form.coeff((1, 1)).unwrap().value_eq(&expect_k1));
    assert!(form.coeff((1, 2)).unwrap().value_eq(&expect_k2));

    // Telescoping: the coefficients sum to zero, so any k constant across
    // the orbit block evaluates to zero.
    let mut sum = Cyclotomic::zero(3);
    for (_, c) in form.terms() {
        sum = sum.add(c);
    }
    assert!(sum.is_zero());
}

#[test]
fn c3_omega_forms_and_variety() {
    let (g, table) = c3_pair();
    let data = build(&g, &table).unwrap();
    assert_eq!(data.index_order, vec![(1, 0), (1, 1), (1, 2)]);

    // Trivial character: omega = 3k0 - 3k1 (sum of -c_k(s) over both
    // reflections).
    let triv = table.row_of_label("phi{1,0}").unwrap();
    assert_eq!(data.omega[triv], vec![rat(3), rat(-3), rat(0)]);

    // All three characters are linear, hence singleton generic families.
    assert_eq!(data.generic_partition.num_blocks(), 3);
    for b in data.generic_partition.blocks() {
        assert_eq!(b.len(), 1);
    }

    // The variety has three distinct omega values -> three pairwise planes.
    assert_eq!(data.variety.len(), 3);
    assert!(sharp_arrangement(&data.variety).set_eq(&data.variety));
}

#[test]
fn p_form_antisymmetry_and_error() {
    let (g, table) = c3_pair();
    let p01 = p_form(&g, &table, 0, 1).unwrap();
    let p10 = p_form(&g, &table, 1, 0).unwrap();
    assert!(p01.add(&p10).is_zero());
    assert!(p_form(&g, &table, 1, 1).is_err());
}

#[test]
fn hyperplane_normalization() {
    let h = Hyperplane::from_rational(&[rat(6), rat(-12), rat(6)]).unwrap();
    assert_eq!(h.normal, vec![1, -2, 1]);
    let h = Hyperplane::from_rational(&[rat(0), rat(-6), rat(6)]).unwrap();
    assert_eq!(h.normal, vec![0, 1, -1]);
    let h = Hyperplane::from_rational(&[ratio(1, 2), ratio(-1, 3), rat(0)]).unwrap();
    assert_eq!(h.normal, vec![3, -2, 0]);
    assert!(Hyperplane::from_rational(&[rat(0), rat(0)]).is_err());
}

#[test]
fn young_orbits_within_blocks() {
    // One block of size 3 (e.g. a single orbit with e = 3).
    let order = vec![(1, 0), (1, 1), (1, 2)];
    let orbit = young_orbit(&order, &[0, 1, -1]);
    assert_eq!(orbit.len(), 3);
    let orbit = young_orbit(&order, &[1, -2, 1]);
    assert_eq!(orbit.len(), 3);

    // Two blocks of sizes 2 and 3: permutations never mix blocks.
    let order = vec![(1, 0), (1, 1), (2, 0), (2, 1), (2, 2)];
    let orbit = young_orbit(&order, &[1, -1, 0, -1, 1]);
    assert!(orbit.contains(&vec![1, -1, 0, -1, 1]));
    assert!(orbit.contains(&vec![1, -1, -1, 0, 1]));
    assert!(!orbit.iter().any(|v| v[0] == 0 && v[1] == -1 && v[2] == 1));
    assert_eq!(orbit.len(), 6);
}

#[test]
fn sharp_is_an_involution_and_fixes_expected_planes() {
    let order = vec![(1, 0), (1, 1), (1, 2)];
    let p = Hyperplane::from_integers(&[0, 1, -1]).unwrap();
    let sp = sharp_plane(&order, &p);
    assert_eq!(sp.normal, vec![0, 1, -1]);
    let q = Hyperplane::from_integers(&[1, -2, 1]).unwrap();
    let sq = sharp_plane(&order, &q);
    assert_eq!(sq.normal, vec![1, 1, -2]);
    assert_eq!(sharp_plane(&order, &sq), q);

    let arr = HyperplaneArrangement::from_planes(order, vec![p, q, sq]);
    let sharped = sharp_arrangement(&arr);
    assert!(sharped.set_eq(&arr));
    assert!(sharp_arrangement(&sharped).set_eq(&arr));
}

#[test]
fn specialization_at_zero_and_generic() {
    let (g, table) = c3_pair();
    let data = build(&g, &table).unwrap();
    let zero = vec![rat(0), rat(0), rat(0)];
    let at_zero = specialize_partition(&data.omega, &zero);
    assert_eq!(at_zero.num_blocks(), 1);

    // A point off every plane reproduces the generic partition.
    let point = vec![rat(101), rat(103), rat(107)];
    assert!(data.variety.planes.iter().all(|p| !p.eval(&point).is_zero()));
    let spec = specialize_partition(&data.omega, &point);
    assert_eq!(spec, data.generic_partition);
    let _ = g;
}

#[test]
fn arrangement_orbit_decomposition() {
    let order = vec![(1, 0), (1, 1), (1, 2)];
    let mut planes = Vec::new();
    for v in [[0, 1, -1], [1, 0, -1], [1, -1, 0], [1, -2, 1], [2, -1, -1], [1, 1, -2]] {
        planes.push(Hyperplane::from_integers(&v).unwrap());
    }
    let arr = HyperplaneArrangement::from_planes(order, planes);
    assert_eq!(arr.len(), 6);
    assert_eq!(arr.orbits.len(), 2);
    let mut sizes = arr.orbit_sizes();
    sizes.sort_unstable();
    assert_eq!(sizes, vec![3, 3]);
    // Lex-min representatives.
    assert_eq!(arr.orbits[0].rep.normal, vec![0, 1, -1]);
    assert_eq!(arr.orbits[1].rep.normal, vec![1, -2, 1]);
}
