//! Property-based invariants and independent brute-force oracles.

use proptest::prelude::*;

use rigidsym::{
    enumerate,
    operator::SurfaceOperator,
    partition::Partition,
    symbol::{add_symbols, Symbol},
    theory::{self, Theory},
};

fn arb_row() -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0u32..8, 0..8)
}

fn arb_symbol() -> impl Strategy<Value = Symbol> {
    (arb_row(), arb_row()).prop_map(|(top, bottom)| Symbol { top, bottom })
}

fn arb_partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1u32..12, 0..12).prop_map(Partition::from_unsorted)
}

proptest! {
    #[test]
    fn symbol_addition_commutes(a in arb_symbol(), b in arb_symbol()) {
        prop_assert_eq!(add_symbols(&a, &b), add_symbols(&b, &a));
    }

    #[test]
    fn symbol_addition_associates(a in arb_symbol(), b in arb_symbol(), c in arb_symbol()) {
        prop_assert_eq!(
            add_symbols(&add_symbols(&a, &b), &c),
            add_symbols(&a, &add_symbols(&b, &c))
        );
    }

    #[test]
    fn empty_symbol_is_identity(a in arb_symbol()) {
        prop_assert_eq!(add_symbols(&a, &Symbol::empty()), a);
    }

    #[test]
    fn conjugation_is_an_involution(q in arb_partition()) {
        prop_assert_eq!(q.conjugate().conjugate(), q);
    }

    #[test]
    fn parse_inverts_format(q in arb_partition()) {
        prop_assert_eq!(Partition::parse(&q.to_string()).unwrap(), q);
    }

    #[test]
    fn split_by_parity_reassembles(q in arb_partition()) {
        let (odd, even) = theory::split_by_conj_parity(&q);
        prop_assert_eq!(odd.add(&even), q);
    }
}

/// Every partition of `n`, no shortcuts.
fn all_partitions(n: u32, max_part: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in (1..=n.min(max_part)).rev() {
        for mut rest in all_partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn brute_force_operators(th: Theory, rank: u32) -> Vec<SurfaceOperator> {
    let total = match th {
        Theory::B => 2 * rank + 1,
        _ => 2 * rank,
    };
    let mut set = std::collections::BTreeSet::new();
    for a_size in 0..=total {
        for a_parts in all_partitions(a_size, a_size.max(1)) {
            for b_parts in all_partitions(total - a_size, (total - a_size).max(1)) {
                let a = Partition::new(a_parts.clone()).unwrap();
                let b = Partition::new(b_parts).unwrap();
                if let Ok(op) = SurfaceOperator::new(th, a, b) {
                    set.insert(op);
                }
            }
        }
    }
    set.into_iter().collect()
}

#[test]
fn enumeration_matches_brute_force() {
    for th in [Theory::B, Theory::C, Theory::D] {
        for rank in 1..=4u32 {
            assert_eq!(
                enumerate::rigid_operators(th, rank),
                brute_force_operators(th, rank),
                "{th} rank {rank}"
            );
            assert_eq!(
                enumerate::rigid_operators(th, rank),
                enumerate::rigid_operators_seq(th, rank),
                "{th} rank {rank} (parallel vs sequential)"
            );
        }
    }
}

#[test]
fn rigid_partitions_match_brute_force() {
    for th in [Theory::B, Theory::C, Theory::D] {
        for n in 0..=14u32 {
            let brute: Vec<Partition> = all_partitions(n, n.max(1))
                .into_iter()
                .map(|parts| Partition::new(parts).unwrap())
                .filter(|q| theory::is_valid_rigid(q, th))
                .collect();
            let mut brute = brute;
            brute.sort();
            assert_eq!(enumerate::rigid_partitions(th, n), brute, "{th} size {n}");
        }
    }
}

#[test]
fn within_theory_moves_stay_in_class() {
    for th in [Theory::B, Theory::C, Theory::D] {
        for rank in 1..=5u32 {
            for op in enumerate::rigid_operators(th, rank) {
                let base = rigidsym::symbol::operator_symbol(&op).unwrap();
                for moved in rigidsym::maps::within_theory_moves(&op).unwrap() {
                    assert_eq!(rigidsym::symbol::operator_symbol(&moved).unwrap(), base);
                    assert_eq!(moved.rank, op.rank);
                    assert_ne!(moved, op);
                }
            }
        }
    }
}
