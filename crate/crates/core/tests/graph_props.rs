mod common;

use common::*;
use cutsparsify::weight::rational;
use cutsparsify::{cut_value, enumerate_cuts, min_cut, Cut, Graph, Rational};
use num_traits::Zero;
use proptest::prelude::*;

fn arb_graph(max_n: usize, max_m: usize) -> impl Strategy<Value = (usize, Vec<WEdge>)> {
    (2..=max_n).prop_flat_map(move |n| {
        let edge = (0..n, 0..n, 1i64..=6, 1i64..=3)
            .prop_filter("no self-loops", |(u, v, _, _)| u != v)
            .prop_map(|(u, v, a, b)| (u, v, rational(a, b)));
        (Just(n), prop::collection::vec(edge, 0..=max_m))
    })
}

fn arb_side(n: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(any::<bool>(), n)
        .prop_filter("proper side", |m| m.iter().any(|&b| b) && !m.iter().all(|&b| b))
        .prop_map(|m| (0..m.len()).filter(|&i| m[i]).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn cut_equals_complement_cut(((n, edges), seed) in (arb_graph(9, 20), any::<u64>())) {
        let g = graph_of(n, &edges);
        let mut r = rng(seed);
        let side: Vec<usize> = {
            use rand::Rng;
            let mut s: Vec<usize> = (0..n).filter(|_| r.gen_bool(0.5)).collect();
            if s.is_empty() { s.push(0); }
            if s.len() == n { s.pop(); }
            s
        };
        let other: Vec<usize> = (0..n).filter(|x| !side.contains(x)).collect();
        let a = cut_value(&g, &Cut::new(n, side.clone()).unwrap()).unwrap();
        let b = cut_value(&g, &Cut::new(n, other).unwrap()).unwrap();
        prop_assert_eq!(&a, &b);
        let mask: u64 = side.iter().map(|&x| 1u64 << x).sum();
        prop_assert_eq!(a, oracle_cut(&edges, mask));
    }

    #[test]
    fn cut_is_additive_over_unions(
        (n, a, b, side) in (2usize..=8).prop_flat_map(|n| {
            let edge = (0..n, 0..n, 1i64..=5)
                .prop_filter("no self-loops", |(u, v, _)| u != v)
                .prop_map(|(u, v, w)| (u, v, rational(w, 2)));
            (
                Just(n),
                prop::collection::vec(edge.clone(), 0..12),
                prop::collection::vec(edge, 0..12),
                arb_side(n),
            )
        })
    ) {
        let union: Vec<WEdge> = a.iter().chain(b.iter()).cloned().collect();
        let cut = Cut::new(n, side).unwrap();
        let total = cut_value(&graph_of(n, &union), &cut).unwrap();
        let parts = cut_value(&graph_of(n, &a), &cut).unwrap() + cut_value(&graph_of(n, &b), &cut).unwrap();
        prop_assert_eq!(total, parts);
    }

    #[test]
    fn handshake_identity((n, edges) in arb_graph(10, 25)) {
        let g = graph_of(n, &edges);
        let mut sum = Rational::zero();
        for v in 0..n {
            sum += cut_value(&g, &Cut::singleton(n, v).unwrap()).unwrap();
        }
        prop_assert_eq!(sum, g.total_weight() * rational(2, 1));
    }

    #[test]
    fn scaling_scales_min_cut((n, edges) in arb_graph(9, 20), a in 1i64..=7, b in 1i64..=5) {
        let g = graph_of(n, &edges);
        let lambda = rational(a, b);
        let scaled = g.scaled(&lambda);
        let (cut, value) = min_cut(&g).unwrap();
        let (scut, svalue) = min_cut(&scaled).unwrap();
        prop_assert_eq!(svalue, value.clone() * lambda.clone());
        prop_assert_eq!(&scut, &cut);
        for ((c1, v1), (c2, v2)) in enumerate_cuts(&g).unwrap().zip(enumerate_cuts(&scaled).unwrap()) {
            prop_assert_eq!(c1, c2);
            prop_assert_eq!(v1 * lambda.clone(), v2);
        }
    }

    #[test]
    fn min_cut_matches_oracle((n, edges) in arb_graph(12, 30)) {
        let g = graph_of(n, &edges);
        let (cut, value) = min_cut(&g).unwrap();
        prop_assert_eq!(&value, &oracle_min_cut(n, &edges));
        prop_assert_eq!(cut_value(&g, &cut).unwrap(), value);
    }
}

#[test]
fn disconnected_min_cut_respects_components() {
    let g: Graph = Graph::from_pairs(5, &[(0, 1), (1, 2), (3, 4)]).unwrap();
    let (cut, value) = min_cut(&g).unwrap();
    assert!(value.is_zero());
    assert_eq!(cut.side(), vec![0, 1, 2]);
}

#[test]
fn parallel_edges_add_up() {
    let g: Graph = Graph::from_pairs(2, &[(0, 1), (1, 0), (0, 1)]).unwrap();
    assert_eq!(min_cut(&g).unwrap().1, rational(3, 1));
}
