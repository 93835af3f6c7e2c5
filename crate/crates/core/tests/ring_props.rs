use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use clasperkit::ring::{substitute_exp, symmetric_normalize, unit_equivalent, LaurentPoly, PowerSeries};

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-4i64..=4, -6i64..=6), 0..6).prop_map(LaurentPoly::from_terms)
}

fn rational() -> impl Strategy<Value = BigRational> {
    (-9i64..=9, 1i64..=5).prop_map(|(a, b)| BigRational::new(BigInt::from(a), BigInt::from(b)))
}

/// Series with constant term 1, so log is defined.
fn unit_series(order: usize) -> impl Strategy<Value = PowerSeries> {
    prop::collection::vec(rational(), order).prop_map(move |tail| {
        let mut c = vec![BigRational::from_integer(1.into())];
        c.extend(tail);
        PowerSeries::from_coeffs(c, order)
    })
}

/// A knot-like polynomial: symmetric with value 1 at t = 1.
fn knot_poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec(-5i64..=5, 0..4).prop_map(|a| {
        let mut p = LaurentPoly::one();
        for (k, &c) in a.iter().enumerate() {
            let e = k as i64 + 1;
            // c (t^e - 2 + t^-e) keeps p(1) = 1 and symmetry
            p = &p + &LaurentPoly::from_terms([(e, c), (0, -2 * c), (-e, c)]);
        }
        p
    })
}

proptest! {
    #[test]
    fn laurent_ring_axioms(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, LaurentPoly::zero());
        prop_assert_eq!(&a * &LaurentPoly::one(), a.clone());
        prop_assert_eq!((&a * &b).bar(), &a.bar() * &b.bar());
    }

    #[test]
    fn exact_division_inverts_multiplication(a in laurent(), b in laurent()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).div_exact(&b), Some(a));
    }

    #[test]
    fn substitution_is_a_ring_homomorphism(a in laurent(), b in laurent()) {
        let order = 7;
        prop_assert_eq!(substitute_exp(&(&a * &b), order), &substitute_exp(&a, order) * &substitute_exp(&b, order));
        prop_assert_eq!(substitute_exp(&(&a + &b), order), &substitute_exp(&a, order) + &substitute_exp(&b, order));
    }

    #[test]
    fn exp_inverts_log(s in unit_series(8)) {
        prop_assert_eq!(s.log().unwrap().exp().unwrap(), s.clone());
        let l = s.log().unwrap();
        let t = (&s * &s).log().unwrap();
        prop_assert_eq!(t, &l + &l);
    }

    #[test]
    fn normalization_ignores_units(p in knot_poly(), k in -5i64..=5, negate in any::<bool>()) {
        let u = if negate { -p.shift(k) } else { p.shift(k) };
        prop_assert_eq!(symmetric_normalize(&u).unwrap(), p.clone());
        prop_assert!(unit_equivalent(&u, &p));
        prop_assert!(unit_equivalent(&u.bar(), &p));
    }

    #[test]
    fn substitution_of_symmetric_polynomials_is_even(p in knot_poly()) {
        let s = substitute_exp(&p, 9);
        for k in (1..=9).step_by(2) {
            prop_assert_eq!(s.coeff(k), BigRational::from_integer(0.into()));
        }
    }
}
