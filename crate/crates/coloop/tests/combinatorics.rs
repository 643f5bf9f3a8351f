use std::collections::BTreeSet;

use coloop::combinatorics::*;
use coloop::Z;
use proptest::prelude::*;

fn z(n: i64) -> Z {
    Z::from(n)
}

/// Every length-`l` sequence over `0..=l`, filtered by the defining conditions.
fn brute_m(l: usize) -> BTreeSet<Vec<u32>> {
    let mut out = BTreeSet::new();
    let total = (l + 1).pow(l as u32);
    for mut code in 0..total {
        let mut m = Vec::with_capacity(l);
        for _ in 0..l {
            m.push((code % (l + 1)) as u32);
            code /= l + 1;
        }
        let sum: u32 = m.iter().sum();
        let ok = sum as usize == l && (1..l).all(|j| m[..j].iter().sum::<u32>() as usize >= j);
        if ok {
            out.insert(m);
        }
    }
    out
}

fn brute_comp(n: u32, l: usize) -> usize {
    (1u32..1 << (n - 1)).chain([0]).filter(|mask| mask.count_ones() as usize + 1 == l).count()
}

#[test]
fn composition_examples() {
    assert_eq!(compositions(3, 2), vec![vec![2, 1], vec![1, 2]]);
    assert_eq!(compositions(3, 3), vec![vec![1, 1, 1]]);
    assert_eq!(compositions(10, 4).len(), 84);
    assert!(compositions(3, 4).is_empty());
    assert!(compositions(3, 0).is_empty());
}

#[test]
fn composition_counts() {
    for n in 1..=12u32 {
        for l in 1..=n as usize {
            let c = compositions(n, l);
            assert_eq!(Z::from(c.len()), binom(n - 1, l as u32 - 1));
            assert_eq!(c.len(), brute_comp(n, l));
            let set: BTreeSet<_> = c.iter().cloned().collect();
            assert_eq!(set.len(), c.len());
            assert!(c.iter().all(|p| p.iter().sum::<u32>() == n && p.iter().all(|&x| x >= 1)));
        }
    }
}

#[test]
fn m_sequence_examples() {
    assert_eq!(m_sequences(2), vec![vec![2, 0], vec![1, 1]]);
    assert_eq!(
        m_sequences(3),
        vec![vec![3, 0, 0], vec![2, 1, 0], vec![2, 0, 1], vec![1, 2, 0], vec![1, 1, 1]]
    );
    assert_eq!(m_sequences(4).len(), 14);
    assert!(m_sequences(0).is_empty());
    assert_eq!(lagrange_d(&[]), z(1));
}

#[test]
fn m_sequences_match_brute_force_and_catalan() {
    for l in 1..=8usize {
        let m = m_sequences(l);
        assert_eq!(Z::from(m.len()), catalan(l as u32));
        if l <= 6 {
            assert_eq!(m.into_iter().collect::<BTreeSet<_>>(), brute_m(l));
        }
    }
}

#[test]
fn labeled_sets() {
    assert_eq!(m_sequences_labeled(&[1, 2]), vec![vec![2, 0]]);
    assert_eq!(m_sequences_labeled(&[1, 2, 1]), vec![vec![3, 0, 0], vec![2, 0, 1]]);
    assert!(m_sequences_labeled(&[2, 1, 1]).is_empty());
}

#[test]
fn lagrange_values() {
    assert_eq!(lagrange_d(&[2]), z(3));
    assert_eq!(lagrange_d(&[1, 2]), z(7));
    assert_eq!(lagrange_d(&[2, 1]), z(9));
    assert_eq!(lagrange_d(&[1, 1, 1, 1]), z(42));
    let cat: Vec<Z> = (1..=5).map(|l| lagrange_d(&vec![1; l])).collect();
    assert_eq!(cat, [2, 5, 14, 42, 132].map(z));
}

#[test]
fn labeled_values() {
    assert_eq!(lagrange_d_labeled(&[1, 2], &[1, 1]), z(1));
    for n1 in 1..6 {
        for n2 in 1..4 {
            for n3 in 1..4 {
                assert_eq!(lagrange_d_labeled(&[1, 2, 2], &[n1, n2, n3]), binom(n1 + 1, 3));
            }
        }
    }
    assert_eq!(lagrange_d_labeled(&[1, 2, 2], &[2, 1, 1]), z(1));
    assert_eq!(lagrange_d_labeled(&[2, 1], &[5, 7]), z(0));
    assert_eq!(lagrange_d_labeled(&[1, 1, 1], &[1, 2, 1]), lagrange_d(&[1, 2, 1]));
}

#[test]
fn recurrence_examples() {
    assert_eq!(d_alt_sign(&[1, 1]), z(5));
    assert_eq!(d_product(&[1, 1]), z(5));
    assert_eq!(d_shift(&[1, 1]), z(5));
    assert_eq!(d_shift(&[1, 1, 1]), z(14));
    for n in 1..=10 {
        assert_eq!(d_product(&[n]), Z::from(n + 1));
    }
}

#[test]
fn recurrences_agree_on_all_compositions() {
    for n in 1..=10 {
        for c in all_compositions(n) {
            for r in DRecurrence::ALL {
                assert!(d_recurrence_check(r, &c), "{r} fails at {c:?}");
            }
        }
    }
}

#[test]
fn bits() {
    assert_eq!(bit_sequences(2), vec![vec![1, 1], vec![1, 2], vec![2, 1], vec![2, 2]]);
    assert_eq!(e_sign(&[1, 2, 2]), 1);
    assert_eq!(e_sign(&[1, 2]), -1);
}

#[test]
fn phi_base_cases() {
    assert_eq!(tree_of_msequence(&[]).unwrap().to_string(), "|");
    assert_eq!(tree_of_msequence(&[1]).unwrap().to_string(), "(||)");
    assert_eq!(tree_of_msequence(&[2, 0]).unwrap().to_string(), "((||)|)");
    assert_eq!(tree_of_msequence(&[1, 1]).unwrap().to_string(), "(|(||))");
    assert!(tree_of_msequence(&[0, 2]).is_err());
}

#[test]
fn phi_is_a_bijection() {
    for l in 1..=7usize {
        let img: BTreeSet<_> = m_sequences(l).iter().map(|m| tree_of_msequence(m).unwrap()).collect();
        let all: BTreeSet<_> = all_trees(l + 1).into_iter().collect();
        assert_eq!(img.len(), m_sequences(l).len());
        assert_eq!(img, all, "l = {l}");
        assert!(img.iter().all(|t| t.leaves() == t.internal_nodes() + 1));
    }
}

proptest! {
    #[test]
    fn labeled_bounded_by_unlabeled(ns in proptest::collection::vec(1u32..5, 1..6), mask in 0u32..64) {
        let e: Vec<u8> = (0..ns.len()).map(|i| if mask >> i & 1 == 1 { 2 } else { 1 }).collect();
        let de = lagrange_d_labeled(&e, &ns);
        prop_assert!(de <= lagrange_d(&ns));
        prop_assert!(de >= Z::from(0));
        if e[0] == 2 { prop_assert_eq!(de, Z::from(0)); }
    }

    #[test]
    fn d_is_positive(ns in proptest::collection::vec(1u32..6, 0..7)) {
        prop_assert!(lagrange_d(&ns) > Z::from(0));
    }
}
