use floercone::arithmetic::{
    chern_identity_check, d_shift_check, dgs_continued_fraction, eval_neg_cf, eval_pos_cf,
    kernel_vector, lens_d_invariants, m_minus, neg_cf, pos_cf, LensSpace, Rational,
};
use floercone::contact::ContactCoefficient;
use floercone::hkm::{
    coefficient_property_violation, verify_hkm_strong, x_sequence, DEFAULT_BUDGET,
};
use num_integer::Integer;
use proptest::prelude::*;

fn reduced_fraction(max: i64) -> impl Strategy<Value = (i64, i64)> {
    (2..=max, 1..=max).prop_filter("reduced, above one", |(x, y)| x > y && x.gcd(y) == 1)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn neg_cf_round_trips((num, den) in reduced_fraction(500)) {
        let a = neg_cf(-num, den).unwrap();
        prop_assert!(a.iter().all(|&v| v <= -2));
        prop_assert_eq!(eval_neg_cf(&a).unwrap(), Rational::new(-i128::from(num), i128::from(den)));
    }

    #[test]
    fn pos_cf_round_trips((num, den) in reduced_fraction(500)) {
        let b = pos_cf(num, den).unwrap();
        prop_assert!(b.iter().all(|&v| v >= 2));
        prop_assert_eq!(eval_pos_cf(&b).unwrap(), Rational::new(i128::from(num), i128::from(den)));
    }

    #[test]
    fn kernel_vector_shape((x, y) in reduced_fraction(200)) {
        let a = dgs_continued_fraction(ContactCoefficient::new(x, y).unwrap());
        let v = kernel_vector(&a, x, y).unwrap();
        prop_assert_eq!(v[0], -y);
        prop_assert_eq!(v[1], x - y);
        prop_assert_eq!(*v.last().unwrap(), 1);
        prop_assert!(v[1..].windows(2).all(|w| w[0] > w[1]));
        prop_assert!(v.windows(2).all(|w| w[0].gcd(&w[1]) == 1));
        for row in m_minus(&a) {
            prop_assert_eq!(row.iter().zip(&v).map(|(m, e)| m * e).sum::<i64>(), 0);
        }
    }

    #[test]
    fn chern_identity_holds(tb in -1000i64..=1000, rot in -1000i64..=1000, (x, y) in reduced_fraction(1000)) {
        prop_assert!(chern_identity_check(tb, rot, ContactCoefficient::new(x, y).unwrap()));
    }

    #[test]
    fn x_sequence_is_a_coprime_descent(coeffs in prop::collection::vec(2i64..=9, 1..=6)) {
        let x = x_sequence(&coeffs).unwrap();
        let n = coeffs.len();
        prop_assert_eq!((x[n], x[n + 1]), (1, 0));
        prop_assert!(x[..=n].windows(2).all(|w| w[0] > w[1]));
        prop_assert!(x.windows(2).all(|w| w[0].gcd(&w[1]) == 1));
        prop_assert_eq!(pos_cf(x[0], x[1]).unwrap(), coeffs);
    }

    #[test]
    fn random_lists_are_strong(coeffs in prop::collection::vec(2i64..=7, 1..=4)) {
        let r = verify_hkm_strong(&coeffs, DEFAULT_BUDGET).unwrap();
        prop_assert!(r.strong, "{:?}", r.counterexample);
        prop_assert_eq!(r.property_violations, 0);
        prop_assert_eq!(r.checked + 1, coeffs.iter().product::<i64>() as u64);
    }
}

#[test]
fn d_invariants_are_conjugation_symmetric() {
    for q in 1i64..=60 {
        for r in 0..q {
            let Ok(l) = LensSpace::new(q, r) else {
                continue;
            };
            let d = lens_d_invariants(l);
            assert_eq!(d.len() as i64, q);
            let mut sorted = d.clone();
            sorted.sort();
            let mut conj: Vec<Rational> = (0..q)
                .map(|i| d[(q + r - 1 - i).rem_euclid(q) as usize])
                .collect();
            conj.sort();
            assert_eq!(sorted, conj, "L({q},{r})");
            if r >= 1 {
                assert!(d_shift_check(l).unwrap(), "L({q},{r})");
            }
        }
    }
}

#[test]
fn property_check_catches_bad_vectors() {
    // n_1 = c_1 would break (a); a leading -1 breaks (c)
    assert_eq!(coefficient_property_violation(&[3, 3], &[3, 0]), Some('a'));
    assert_eq!(coefficient_property_violation(&[3, 3], &[0, 0]), None);
    assert_eq!(coefficient_property_violation(&[3, 3], &[2, 0]), None);
}
