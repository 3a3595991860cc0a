use proptest::prelude::*;
use roman_core::canon::canonical_form;
use roman_core::enumeration::connected_graphs;
use roman_core::{graph6, Graph, Solver};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for b in 1..n {
                for a in 0..b {
                    if bits[k] {
                        edges.push((a, b));
                    }
                    k += 1;
                }
            }
            Graph::new(n, edges).unwrap()
        })
    })
}

fn arb_graph_with_perm(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    arb_graph(max_n).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

/// 3^n labellings, no pruning.
fn brute_roman(g: &Graph) -> usize {
    let n = g.order();
    let mut best = 2 * n;
    let mut labels = vec![0u8; n];
    'outer: loop {
        let ok = (0..n).all(|v| labels[v] != 0 || g.neighbors(v).iter().any(|u| labels[u] == 2));
        if ok {
            best = best.min(labels.iter().map(|&l| l as usize).sum());
        }
        for slot in labels.iter_mut() {
            if *slot < 2 {
                *slot += 1;
                continue 'outer;
            }
            *slot = 0;
        }
        break;
    }
    best
}

proptest! {
    #[test]
    fn graph6_round_trip(g in arb_graph(20)) {
        let text = graph6::write(&g).unwrap();
        prop_assert_eq!(graph6::parse(&text).unwrap(), g);
    }

    #[test]
    fn canonical_form_ignores_labels((g, perm) in arb_graph_with_perm(8)) {
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&g.relabel(&perm)).unwrap());
    }

    #[test]
    fn degree_sum(g in arb_graph(16)) {
        prop_assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.size());
    }

    #[test]
    fn roman_matches_brute_force(g in arb_graph(7)) {
        let s = Solver::default();
        prop_assert_eq!(s.roman_domination_number(&g).unwrap(), brute_roman(&g));
        prop_assert_eq!(
            s.roman_domination_number(&g).unwrap() + s.differential_value(&g).unwrap(),
            g.order()
        );
    }
}

#[test]
fn connected_graphs_of_order_seven() {
    // published count of connected graphs on 7 vertices
    assert_eq!(connected_graphs(7).unwrap().count(), 853);
}
