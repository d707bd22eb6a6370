use num_bigint::BigInt;
use proptest::prelude::*;
use wreathsf::cyclotomic::Cyclotomic;
use wreathsf::group::{builtin, cyclic, load_group, BUILTIN_NAMES};
use wreathsf::Rational;

const CONDUCTORS: [u32; 6] = [1, 2, 3, 4, 6, 12];

fn element(conductor: u32) -> impl Strategy<Value = Cyclotomic> {
    prop::collection::vec((-6i64..=6, 1i64..=4), conductor as usize).prop_map(move |raw| {
        let coeffs: Vec<Rational> =
            raw.into_iter().map(|(n, d)| Rational::new(BigInt::from(n), BigInt::from(d))).collect();
        Cyclotomic::from_powers(conductor, &coeffs)
    })
}

fn any_element() -> impl Strategy<Value = Cyclotomic> {
    prop::sample::select(CONDUCTORS.to_vec()).prop_flat_map(element)
}

proptest! {
    #[test]
    fn ring_laws(a in any_element(), b in any_element(), c in any_element()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a - &a, Cyclotomic::zero());
        prop_assert_eq!(&a * &Cyclotomic::one(), a.clone());
    }

    #[test]
    fn conjugation_is_a_ring_involution(a in any_element(), b in any_element()) {
        prop_assert_eq!(a.conj().conj(), a.clone());
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
        prop_assert_eq!((&a + &b).conj(), &a.conj() + &b.conj());
        // a·conj(a) is a non-negative real number.
        let norm = &a * &a.conj();
        prop_assert_eq!(norm.conj(), norm);
    }

    #[test]
    fn arithmetic_commutes_with_lifting(a in any_element(), b in any_element()) {
        let m = num_integer::lcm(a.conductor(), b.conductor());
        let (la, lb) = (a.lift(m).unwrap(), b.lift(m).unwrap());
        prop_assert_eq!(la.conductor(), m);
        prop_assert_eq!(&la, &a);
        prop_assert_eq!(&la * &lb, &a * &b);
        prop_assert_eq!(&la + &lb, &a + &b);
        prop_assert_eq!((&la * &lb).lift(12 * m).unwrap(), &a * &b);
    }
}

#[test]
fn roots_of_unity() {
    for n in 1..=12u32 {
        let z = Cyclotomic::root_of_unity(n, 1);
        let mut power = Cyclotomic::one();
        for k in 1..=n {
            power = &power * &z;
            assert_eq!(power == Cyclotomic::one(), k == n, "E({n})^{k}");
        }
        let sum: Cyclotomic = (0..n as i64).map(|k| Cyclotomic::root_of_unity(n, k)).sum();
        assert_eq!(sum, Cyclotomic::from_int((n == 1) as i64));
    }
}

#[test]
fn builtins_validate_and_have_square_degree_sums() {
    for name in BUILTIN_NAMES {
        let g = builtin(name).unwrap();
        assert!(g.to_raw().validate().is_valid(), "{name}");
        let squares: u64 = g.degrees().iter().map(|d| d * d).sum();
        assert_eq!(squares, g.order(), "{name}");
    }
    assert!(builtin("q8").is_err());
    assert!(cyclic(5).unwrap().to_raw().validate().is_valid());
}

#[test]
fn every_single_entry_perturbation_is_rejected() {
    for name in ["z2", "z3"] {
        let g = builtin(name).unwrap();
        let r = g.rank();
        for i in 0..r {
            for s in 0..r {
                for delta in [Cyclotomic::one(), Cyclotomic::from_int(-2), Cyclotomic::root_of_unity(4, 1)] {
                    let mut raw = g.to_raw();
                    raw.table[i][s] = &raw.table[i][s] + &delta;
                    let report = raw.validate();
                    assert!(!report.is_valid(), "{name} perturbed at ({i},{s})");
                    assert!(!report.to_string().is_empty());
                }
            }
        }
    }
}

#[test]
fn group_documents_round_trip_byte_identically() {
    for name in BUILTIN_NAMES {
        let json = builtin(name).unwrap().to_json().unwrap();
        let again = load_group(&json).unwrap().to_json().unwrap();
        assert_eq!(json, again, "{name}");
    }
}
