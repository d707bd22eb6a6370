use std::collections::BTreeSet;

use num_bigint::BigInt;
use proptest::prelude::*;
use wreathsf::partition::partitions_of;
use wreathsf::skew::{SkewShape, StripType};
use wreathsf::tableau::{enumerate_ssyt, kostka, validate_ssyt, Content};
use wreathsf::Partition;

fn factorial(n: usize) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

fn partition_strategy(max: usize) -> impl Strategy<Value = Partition> {
    (0..=max).prop_flat_map(|n| {
        let all = partitions_of(n);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

/// A pair `μ ⊆ λ` with `|λ| <= max`.
fn skew_strategy(max: usize) -> impl Strategy<Value = SkewShape> {
    partition_strategy(max).prop_flat_map(|outer| {
        let inners: Vec<Partition> =
            (0..=outer.weight()).flat_map(partitions_of).filter(|p| outer.contains(p)).collect();
        (0..inners.len()).prop_map(move |i| SkewShape::new(outer.clone(), inners[i].clone()).unwrap())
    })
}

#[test]
fn conjugation_is_an_involution() {
    for n in 0..=12 {
        for p in partitions_of(n) {
            assert_eq!(p.conjugate().conjugate(), p);
            assert_eq!(p.conjugate().weight(), n);
        }
    }
}

#[test]
fn dominance_is_a_partial_order_reversed_by_conjugation() {
    for n in 0..=8 {
        let ps = partitions_of(n);
        let leq = |a: &Partition, b: &Partition| a.dominated_by(b).unwrap();
        for a in &ps {
            assert!(leq(a, a));
            for b in &ps {
                if a != b {
                    assert!(!(leq(a, b) && leq(b, a)), "{a} and {b}");
                }
                if leq(a, b) {
                    assert!(leq(&b.conjugate(), &a.conjugate()), "{a} <= {b}");
                    for c in &ps {
                        if leq(b, c) {
                            assert!(leq(a, c));
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn class_sizes_sum_to_factorial() {
    for n in 0..=8 {
        let total: BigInt = partitions_of(n).iter().map(|p| factorial(n) / p.z_value()).sum();
        assert_eq!(total, factorial(n), "n = {n}");
    }
}

#[test]
fn strips_are_dual_under_conjugation() {
    for n in 0..=6 {
        for outer in partitions_of(n) {
            for k in 0..=n {
                for inner in partitions_of(k).into_iter().filter(|p| outer.contains(p)) {
                    let s = SkewShape::new(outer.clone(), inner).unwrap();
                    let c = s.conjugate();
                    assert_eq!(s.is_horizontal_strip(), c.is_vertical_strip(), "{outer}");
                    assert_eq!(s.is_vertical_strip(), c.is_horizontal_strip(), "{outer}");
                    if s.strip_type() == StripType::Horizontal {
                        assert_eq!(c.strip_type(), StripType::Vertical);
                    }
                }
            }
        }
    }
}

#[test]
fn kostka_matrix_is_unitriangular_in_dominance() {
    for n in 0..=8 {
        for lambda in partitions_of(n) {
            let shape = SkewShape::straight(lambda.clone());
            assert_eq!(kostka(&shape, &Content::from(&lambda)).unwrap(), 1, "{lambda}");
            if n <= 6 {
                for mu in partitions_of(n) {
                    if !mu.dominated_by(&lambda).unwrap() {
                        assert_eq!(kostka(&shape, &Content::from(&mu)).unwrap(), 0, "{lambda} {mu}");
                    }
                }
            }
        }
    }
}

/// All distinct orderings of a multiset.
fn permutations(items: &[usize]) -> BTreeSet<Vec<usize>> {
    if items.is_empty() {
        return [Vec::new()].into();
    }
    let mut out = BTreeSet::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let x = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, x);
            out.insert(tail);
        }
    }
    out
}

#[test]
fn kostka_is_symmetric_in_content() {
    for n in 0..=5 {
        for lambda in partitions_of(n) {
            let shape = SkewShape::straight(lambda.clone());
            for mu in partitions_of(n) {
                let expected = kostka(&shape, &Content::from(&mu)).unwrap();
                let mut padded = mu.parts().to_vec();
                padded.push(0);
                for perm in permutations(&padded) {
                    assert_eq!(kostka(&shape, &Content::new(perm.clone())).unwrap(), expected, "{lambda} {perm:?}");
                }
            }
        }
    }
}

proptest! {
    #[test]
    fn components_partition_the_cells(shape in skew_strategy(9)) {
        let comps = shape.components();
        let mut seen = BTreeSet::new();
        let mut total = 0;
        for c in &comps {
            prop_assert!(c.size() > 0);
            total += c.size();
        }
        for cell in shape.cells() {
            prop_assert!(seen.insert(cell));
        }
        prop_assert_eq!(total, shape.size());
        prop_assert_eq!(comps.is_empty(), shape.size() == 0);
        if shape.inner().is_empty() && shape.size() > 0 {
            prop_assert_eq!(comps.len(), 1);
        }
    }

    #[test]
    fn enumerated_tableaux_are_valid_and_distinct(shape in skew_strategy(6), seed in 0usize..64) {
        let contents = partitions_of(shape.size());
        let content = Content::from(&contents[seed % contents.len()]);
        let tableaux = enumerate_ssyt(&shape, &content).unwrap();
        let distinct: BTreeSet<_> = tableaux.iter().map(|t| t.rows().to_vec()).collect();
        prop_assert_eq!(distinct.len(), tableaux.len());
        for t in &tableaux {
            prop_assert!(validate_ssyt(&shape, t.rows()).unwrap());
            let word = t.word();
            prop_assert_eq!(word.len(), shape.size());
            let mut counts = vec![0usize; content.counts().len()];
            for &s in word.symbols() {
                counts[s - 1] += 1;
            }
            prop_assert_eq!(&counts[..], content.counts());
        }
        prop_assert_eq!(tableaux.len() as u64, kostka(&shape, &content).unwrap());
    }

    #[test]
    fn conjugate_preserves_weight_and_swaps_lengths(p in partition_strategy(20)) {
        let c = p.conjugate();
        prop_assert_eq!(c.weight(), p.weight());
        prop_assert_eq!(c.length(), p.part(0));
        prop_assert_eq!(c.part(0), p.length());
    }
}
