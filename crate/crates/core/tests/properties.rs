//! Randomized invariants: downward closure of centrality, bijection, hex
//! round trip, and union-find rollback.

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use wallgraph::{arrangement_of, graph_of, is_central, ArrangementSpace, ColoredGraph, Level, ParityDsu};

fn planted_central(rng: &mut impl Rng, n: usize) -> ColoredGraph {
    let spec = wallgraph_testkit::planted_central(rng, n);
    let mut g = ColoredGraph::new(n);
    for (a, b) in spec.edges {
        g.add_edge(a, b).unwrap();
    }
    for (v, c) in spec.colors {
        g.set_color(v, Level::from_value(c)).unwrap();
    }
    g
}

/// Arbitrary graph, made central by erasing colors until it is.
fn erased_central(rng: &mut impl Rng, n: usize) -> ColoredGraph {
    let mut g = ColoredGraph::new(n);
    for a in 1..=n {
        for b in a + 1..=n {
            if rng.gen_bool(0.4) {
                g.add_edge(a, b).unwrap();
            }
        }
        if rng.gen_bool(0.5) {
            g.set_color(a, Level::from_value(rng.gen_range(0..2))).unwrap();
        }
    }
    while !is_central(&g) {
        let colored: Vec<usize> = g.colors().keys().copied().collect();
        let v = colored[rng.gen_range(0..colored.len())];
        g.set_color(v, None).unwrap();
    }
    g
}

#[test]
fn centrality_is_downward_closed() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for round in 0..100_000 {
        let n = rng.gen_range(1..=8);
        let mut g = if round % 2 == 0 { planted_central(&mut rng, n) } else { erased_central(&mut rng, n) };
        assert!(is_central(&g), "{g:?}");
        let deletions = rng.gen_range(1..=4);
        for _ in 0..deletions {
            let edges: Vec<_> = g.edges().iter().copied().collect();
            let colored: Vec<_> = g.colors().keys().copied().collect();
            if edges.is_empty() && colored.is_empty() {
                break;
            }
            if !edges.is_empty() && (colored.is_empty() || rng.gen_bool(0.5)) {
                let (a, b) = edges[rng.gen_range(0..edges.len())];
                g.remove_edge(a, b);
            } else {
                g.set_color(colored[rng.gen_range(0..colored.len())], None).unwrap();
            }
            assert!(is_central(&g), "{g:?}");
        }
    }
}

proptest! {
    #[test]
    fn bijection_round_trip_random(n in 1usize..=9, raw in any::<u64>()) {
        let s = ArrangementSpace::new(n).unwrap();
        let mask = if s.len() == 64 { u64::MAX } else { (1u64 << s.len()) - 1 };
        let b = s.from_bits(raw & mask).unwrap();
        if b.double_colored().is_none() {
            let g = graph_of(&b).unwrap();
            prop_assert_eq!(arrangement_of(&g, &s).unwrap(), b);
            prop_assert_eq!(g.vertices(), &b.index_set());
        } else {
            prop_assert!(graph_of(&b).is_err());
        }
    }

    #[test]
    fn hex_round_trip(n in 1usize..=9, raw in any::<u64>()) {
        let s = ArrangementSpace::new(n).unwrap();
        let mask = if s.len() == 64 { u64::MAX } else { (1u64 << s.len()) - 1 };
        let b = s.from_bits(raw & mask).unwrap();
        prop_assert_eq!(s.from_hex(&b.to_hex()).unwrap(), b);
    }

    #[test]
    fn index_set_of_union(n in 2usize..=9, x in any::<u64>(), y in any::<u64>()) {
        let s = ArrangementSpace::new(n).unwrap();
        let mask = if s.len() == 64 { u64::MAX } else { (1u64 << s.len()) - 1 };
        let (a, b) = (s.from_bits(x & mask).unwrap(), s.from_bits(y & mask).unwrap());
        let mut expected = a.index_set();
        expected.extend(b.index_set());
        prop_assert_eq!(a.union(b).index_set(), expected);
        let m = a.associated_matrix::<i64>();
        prop_assert_eq!(m.row_count(), a.len());
        for i in 0..m.row_count() {
            let ones = m.coefficients(i).iter().filter(|&&v| v == 1).count();
            prop_assert!(ones == 1 || ones == 2);
        }
    }

    #[test]
    fn dsu_rollback_restores_state(
        ops in proptest::collection::vec((0usize..9, 0usize..9, 0u8..2, any::<bool>()), 1..80)
    ) {
        let mut d = ParityDsu::new(8);
        let mut stack = Vec::new();
        for (a, b, p, mark) in ops {
            if mark {
                stack.push((d.checkpoint(), d.clone()));
            }
            d.relate(a, b, p);
        }
        while let Some((cp, snapshot)) = stack.pop() {
            d.rollback(cp);
            prop_assert_eq!(&d, &snapshot);
        }
        d.rollback(0);
        prop_assert_eq!(d, ParityDsu::new(8));
    }
}
