//! Property tests for the exact arithmetic kernel.

use cmfam::euler::{sharp_plane, Hyperplane};
use cmfam::exact::cyclotomic::Cyclotomic;
use cmfam::exact::linform::LinearForm;
use cmfam::exact::poly::{Poly, QPoly};
use cmfam::exact::rational::{ratio, Rational};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=12).prop_map(|(n, d)| ratio(n, d))
}

fn conductor() -> impl Strategy<Value = u32> {
    prop::sample::select(vec![1u32, 3, 4, 5, 8, 12])
}

fn cyclotomic(n: u32) -> impl Strategy<Value = Cyclotomic> {
    let phi = cmfam::exact::euler_phi(n) as usize;
    prop::collection::vec(rational(), phi).prop_map(move |coeffs| {
        let terms: Vec<(u32, Rational)> = coeffs
            .into_iter()
            .enumerate()
            .map(|(i, c)| (i as u32, c))
            .collect();
        Cyclotomic::from_power_terms(n, &terms)
    })
}

proptest! {
    #[test]
    fn rationals_stay_canonical(a in rational()) {
        prop_assert!(a.denom() > &BigInt::zero());
        prop_assert!(a.numer().gcd(a.denom()).is_one() || a.numer().is_zero());
    }

    #[test]
    fn cyclotomic_field_inverse(n in conductor(), a in conductor().prop_flat_map(cyclotomic)) {
        // Embed into a compatible conductor before inverting.
        let a = a.embed(a.conductor() * n / num_integer::gcd(a.conductor(), n));
        if !a.is_zero() {
            let prod = a.mul(&a.inv().unwrap());
            prop_assert!(prod.value_eq(&Cyclotomic::one(prod.conductor())));
        }
    }

    #[test]
    fn cyclotomic_embed_roundtrip(a in conductor().prop_flat_map(cyclotomic), m in 2u32..=4) {
        let big = a.embed(a.conductor() * m);
        let back = big.reduce_to_conductor(a.conductor()).expect("roundtrip");
        prop_assert_eq!(back, a);
    }

    #[test]
    fn conjugation_is_a_ring_automorphism(
        a in cyclotomic(12),
        b in cyclotomic(12),
    ) {
        prop_assert_eq!(a.mul(&b).conj(), a.conj().mul(&b.conj()));
        prop_assert_eq!(a.add(&b).conj(), a.conj().add(&b.conj()));
        prop_assert_eq!(a.conj().conj(), a);
    }

    #[test]
    fn divides_implies_exact_product(
        f in prop::collection::vec(-6i64..=6, 1..5),
        h in prop::collection::vec(-6i64..=6, 1..5),
    ) {
        let f = QPoly::from_integers(&f);
        let h = QPoly::from_integers(&h);
        prop_assume!(!f.is_zero());
        let g = f.mul(&h);
        prop_assert!(f.divides(&g).unwrap());
        let (q, r) = g.divrem(&f).unwrap();
        prop_assert!(r.is_zero());
        prop_assert_eq!(q.mul(&f), g);
    }

    #[test]
    fn poly_ring_laws(
        a in prop::collection::vec(-5i64..=5, 0..5),
        b in prop::collection::vec(-5i64..=5, 0..5),
        c in prop::collection::vec(-5i64..=5, 0..5),
    ) {
        let (a, b, c) = (
            QPoly::from_integers(&a),
            QPoly::from_integers(&b),
            QPoly::from_integers(&c),
        );
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.add(&b).mul(&c), a.mul(&c).add(&b.mul(&c)));
    }

    #[test]
    fn linear_form_laws(
        ca in prop::collection::vec((1u32..=2, 0u32..=2, -9i64..=9), 0..6),
        cb in prop::collection::vec((1u32..=2, 0u32..=2, -9i64..=9), 0..6),
        cc in prop::collection::vec((1u32..=2, 0u32..=2, -9i64..=9), 0..6),
        s in rational(),
    ) {
        let build = |terms: &[(u32, u32, i64)]| {
            let mut f = LinearForm::zero();
            for &(omega, j, c) in terms {
                f.add_term((omega, j), &Cyclotomic::from_integer(3, c));
            }
            f
        };
        let (a, b, c) = (build(&ca), build(&cb), build(&cc));
        // Commutativity and associativity of addition.
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        // Scalar multiplication distributes.
        prop_assert_eq!(
            a.add(&b).scale_rational(&s),
            a.scale_rational(&s).add(&b.scale_rational(&s))
        );
        // Subtraction inverts addition.
        prop_assert!(a.add(&b).sub(&b).sub(&a).is_zero());
    }

    #[test]
    fn poly_eval_is_a_homomorphism(
        a in prop::collection::vec(-5i64..=5, 0..5),
        b in prop::collection::vec(-5i64..=5, 0..5),
        x in rational(),
    ) {
        let (a, b) = (QPoly::from_integers(&a), QPoly::from_integers(&b));
        prop_assert_eq!(a.mul(&b).eval(&x), a.eval(&x) * b.eval(&x));
        prop_assert_eq!(a.add(&b).eval(&x), a.eval(&x) + b.eval(&x));
    }

    #[test]
    fn sharp_involution_on_planes(raw in prop::collection::vec(-5i64..=5, 5)) {
        prop_assume!(raw.iter().any(|&c| c != 0));
        // Coordinates (1,0),(1,1),(2,0),(2,1),(2,2): blocks of size 2 and 3.
        let order = vec![(1u32, 0u32), (1, 1), (2, 0), (2, 1), (2, 2)];
        let p = Hyperplane::from_integers(&raw).unwrap();
        let s = sharp_plane(&order, &p);
        prop_assert_eq!(sharp_plane(&order, &s), p);
    }

    #[test]
    fn trailing_degree_shifts(
        a in prop::collection::vec(-5i64..=5, 1..5),
        k in 0usize..4,
    ) {
        let p = QPoly::from_integers(&a);
        prop_assume!(!p.is_zero());
        let shifted = p.shift(k);
        prop_assert_eq!(
            shifted.trailing_degree().unwrap(),
            p.trailing_degree().unwrap() + k
        );
    }
}

/// Polynomial facts with cyclotomic coefficients: division against monic
/// divisors reconstructs exactly.
#[test]
fn cyclotomic_poly_division() {
    let z = Cyclotomic::root_of_unity(5, 1);
    let one = Cyclotomic::one(5);
    let f = Poly::from_coeffs(vec![z.clone(), one.clone(), z.mul(&z)]);
    let d = Poly::from_coeffs(vec![z.neg(), one.clone()]);
    let (q, r) = f.divrem(&d).unwrap();
    assert_eq!(q.mul(&d).add(&r), f);
}
