use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;
use proptest::prelude::*;
use wreathsf::group::builtin;
use wreathsf::partition::{colored_partitions_of, partitions_of};
use wreathsf::wreath::{ClassFunction, WreathBasis};
use wreathsf::{Basis, ColoredPartition, Cyclotomic, Rational, SymAlgebra, SymFunc, WreathRing};

fn ring(name: &str) -> WreathRing {
    WreathRing::new(builtin(name).unwrap())
}

fn factorial(n: usize) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

fn int(z: &BigInt) -> Cyclotomic {
    Cyclotomic::from_rational(Rational::from_integer(z.clone()))
}

#[test]
fn class_power_sums_are_orthogonal_with_centralizer_weights() {
    for name in ["trivial", "z2", "z3"] {
        let ring = ring(name);
        for n in 0..=4 {
            let labels = ring.colored_partitions(n);
            let ps: Vec<_> = labels
                .iter()
                .map(|l| ring.class_to_char_basis(&ring.power_class(l.clone()).unwrap()).unwrap())
                .collect();
            for (a, pa) in labels.iter().zip(&ps) {
                for (b, pb) in labels.iter().zip(&ps) {
                    let ip = ring.sesqui_inner(pa, pb).unwrap();
                    let expected = if a == b { int(&ring.big_z(a).unwrap()) } else { Cyclotomic::zero() };
                    assert_eq!(ip, expected, "{name}: <P_{a}, P_{b}>");
                }
            }
        }
    }
}

#[test]
fn wreath_schur_functions_are_orthonormal() {
    for name in ["z2", "z3"] {
        let ring = ring(name);
        for n in 0..=3 {
            let labels = ring.colored_partitions(n);
            let ss: Vec<_> = labels.iter().map(|l| ring.wreath_schur(l).unwrap()).collect();
            for (i, a) in ss.iter().enumerate() {
                for (j, b) in ss.iter().enumerate() {
                    let expected = if i == j { Cyclotomic::one() } else { Cyclotomic::zero() };
                    assert_eq!(ring.sesqui_inner(a, b).unwrap(), expected, "{name}: {} {}", labels[i], labels[j]);
                }
            }
        }
    }
}

#[test]
fn character_tables_satisfy_both_orthogonality_relations() {
    let ring = ring("z2");
    for n in 0..=3 {
        let table = ring.character_table(n).unwrap();
        let k = table.rows.len();
        let z: Vec<Rational> = table.cols.iter().map(|c| Rational::from_integer(ring.big_z(c).unwrap())).collect();
        for i in 0..k {
            for j in 0..k {
                let row: Cyclotomic = (0..k)
                    .map(|s| (&table.entries[i][s] * &table.entries[j][s].conj()).scale(&z[s].recip()))
                    .sum();
                assert_eq!(row, Cyclotomic::from_int((i == j) as i64), "row {i},{j} at n={n}");
                let col: Cyclotomic = (0..k).map(|l| &table.entries[l][i] * &table.entries[l][j].conj()).sum();
                let expected = if i == j { Cyclotomic::from_rational(z[i].clone()) } else { Cyclotomic::zero() };
                assert_eq!(col, expected, "col {i},{j} at n={n}");
            }
        }
        assert!(table.entries.iter().flatten().all(|c| c.to_integer().is_some()));
    }
}

#[test]
fn identity_column_gives_dimensions() {
    for name in ["trivial", "z2"] {
        let ring = ring(name);
        for n in 0..=3 {
            let id = ring.identity_class(n);
            for irrep in ring.colored_partitions(n) {
                let chi = ring.character(&irrep, &id).unwrap();
                assert_eq!(chi, int(&ring.dimension(&irrep).unwrap()), "{name}: {irrep}");
            }
        }
    }
}

#[test]
fn squared_dimensions_sum_to_group_order() {
    for name in ["z2", "z3", "s3"] {
        let ring = ring(name);
        for n in 0..=3 {
            let total: BigInt = ring.colored_partitions(n).iter().map(|l| ring.dimension(l).unwrap().pow(2)).sum();
            let order = BigInt::from(ring.group().order()).pow(n as u32) * factorial(n);
            assert_eq!(total, order, "{name}, n={n}");
        }
    }
}

#[test]
fn trivial_group_reduces_to_symmetric_functions() {
    let ring = ring("trivial");
    let alg = SymAlgebra::default();
    for n in 0..=5 {
        for lambda in partitions_of(n) {
            let s = SymFunc::basis_element(Basis::S, lambda.clone());
            for rho in partitions_of(n) {
                let expected = alg.hall_inner(&s, &SymFunc::basis_element(Basis::P, rho.clone())).unwrap();
                let got = ring
                    .character(&ColoredPartition::new(vec![lambda.clone()]).unwrap(), &ColoredPartition::new(vec![rho.clone()]).unwrap())
                    .unwrap();
                assert_eq!(got, Cyclotomic::from_rational(expected), "{lambda} at {rho}");
            }
        }
    }
}

#[test]
fn symmetric_group_tables() {
    let ring = ring("trivial");
    for n in 0..=5 {
        let table = ring.character_table(n).unwrap();
        let id = table.cols.iter().position(|c| *c == ring.identity_class(n)).unwrap();
        for (i, row) in table.rows.iter().enumerate() {
            let expected = factorial(n) / row.component(0).hook_product();
            assert_eq!(table.entries[i][id], int(&expected));
        }
    }
}

#[test]
fn frobenius_characteristic_inverts_the_character_map() {
    let ring = ring("z2");
    for n in 0..=3 {
        let table = ring.character_table(n).unwrap();
        for (i, irrep) in table.rows.iter().enumerate() {
            let ch = ring.frobenius_ch(&table.character(i)).unwrap();
            assert_eq!(ch.basis(), WreathBasis::CharPower);
            assert_eq!(ch, ring.wreath_schur(irrep).unwrap(), "{irrep}");
        }
    }
}

#[test]
fn class_basis_round_trip() {
    let ring = ring("z3");
    for n in 0..=3 {
        for l in ring.colored_partitions(n) {
            let f = ring.power_class(l.clone()).unwrap();
            let back = ring.char_to_class_basis(&ring.class_to_char_basis(&f).unwrap()).unwrap();
            assert_eq!(back, f, "{l}");
        }
    }
}

#[test]
fn skew_schur_factorizes_over_colors() {
    let ring = ring("z2");
    let cases = [("2,1;2", "1;1"), ("3,1;1,1", "1;-"), ("2,2;2,1", "2;1"), ("2;1", "-;-")];
    for (outer, inner) in cases {
        let outer: ColoredPartition = outer.parse().unwrap();
        let inner: ColoredPartition = inner.parse().unwrap();
        let whole = ring.wreath_skew_schur(&outer, &inner).unwrap();
        let mut product = ring.power_char(ColoredPartition::empty(2)).unwrap();
        for color in 0..2 {
            let o = ColoredPartition::single(2, color, outer.component(color).clone());
            let i = ColoredPartition::single(2, color, inner.component(color).clone());
            product = ring.multiply(&product, &ring.wreath_skew_schur(&o, &i).unwrap()).unwrap();
        }
        assert_eq!(whole, product, "{outer}/{inner}");
    }
}

#[test]
fn conversions_to_schur_basis() {
    let ring = ring("z2");
    let f = ring.power_class("1;1".parse().unwrap()).unwrap();
    let s = ring.to_basis(&f, WreathBasis::Schur).unwrap();
    let back = ring.to_basis(&s, WreathBasis::ClassPower).unwrap();
    assert_eq!(back, f);
}

fn class_function_strategy(n: usize) -> impl Strategy<Value = ClassFunction> {
    let classes = colored_partitions_of(n, 2).unwrap();
    let k = classes.len();
    prop::collection::vec((-3i64..=3, -3i64..=3), k).prop_map(move |vals| {
        let group = builtin("z2").unwrap();
        let values: BTreeMap<_, _> = classes
            .iter()
            .cloned()
            .zip(vals.into_iter().map(|(a, b)| &Cyclotomic::from_int(a) + &Cyclotomic::root_of_unity(4, 1).scale(&Rational::from_integer(b.into()))))
            .collect();
        ClassFunction::new(&group, n, values).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn frobenius_map_is_an_isometry(
        (f, g) in (1usize..=3).prop_flat_map(|n| (class_function_strategy(n), class_function_strategy(n)))
    ) {
        let ring = ring("z2");
        let lhs = ring.sesqui_inner(&ring.frobenius_ch(&f).unwrap(), &ring.frobenius_ch(&g).unwrap()).unwrap();
        prop_assert_eq!(lhs, ring.class_inner(&f, &g).unwrap());
    }

    #[test]
    fn inner_product_is_hermitian(
        (f, g) in (1usize..=3).prop_flat_map(|n| (class_function_strategy(n), class_function_strategy(n)))
    ) {
        let ring = ring("z2");
        let (a, b) = (ring.frobenius_ch(&f).unwrap(), ring.frobenius_ch(&g).unwrap());
        prop_assert_eq!(ring.sesqui_inner(&a, &b).unwrap(), ring.sesqui_inner(&b, &a).unwrap().conj());
    }
}

#[test]
fn empty_degree() {
    let ring = ring("z3");
    let table = ring.character_table(0).unwrap();
    assert_eq!(table.rows, vec![ColoredPartition::empty(3)]);
    assert_eq!(table.entries, vec![vec![Cyclotomic::one()]]);
    assert_eq!(ring.dimension(&ColoredPartition::empty(3)).unwrap(), BigInt::one());
}
