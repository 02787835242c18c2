mod common;

use common::*;
use cutsparsify::strength::{
    k_strong_components, k_strong_components_brute, strength_brute, strength_certificate,
    strength_exact,
};
use cutsparsify::weight::rational;
use cutsparsify::{Graph, Rational};
use num_traits::Zero;
use proptest::prelude::*;
use rand::Rng;

fn arb_small() -> impl Strategy<Value = (usize, Vec<WEdge>)> {
    (2usize..=7).prop_flat_map(|n| {
        let edge = (0..n, 0..n, 1i64..=6, 1i64..=2)
            .prop_filter("no self-loops", |(u, v, _, _)| u != v)
            .prop_map(|(u, v, a, b)| (u, v, rational(a, b)));
        (Just(n), prop::collection::vec(edge, 1..=14))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn exact_matches_oracle((n, edges) in arb_small()) {
        let g = graph_of(n, &edges);
        let exact = strength_exact(&g);
        let oracle = oracle_strengths(n, &edges);
        for (e, want) in g.edges().iter().zip(&oracle) {
            prop_assert_eq!(exact.get(e.id).unwrap(), want);
        }
    }

    #[test]
    fn certificate_within_factor_two((n, edges) in arb_small()) {
        let g = graph_of(n, &edges);
        let exact = strength_exact(&g);
        let cert = strength_certificate(&g);
        for e in g.edges() {
            let x = exact.get(e.id).unwrap().clone();
            let c = cert.get(e.id).unwrap().clone();
            prop_assert!(c <= x, "certificate {} above exact {}", c, x);
            prop_assert!(c * rational(2, 1) >= x, "certificate below half of {}", x);
        }
    }

    #[test]
    fn components_refine_as_k_grows((n, edges) in arb_small(), a in 1i64..=8, b in 1i64..=8) {
        let g = graph_of(n, &edges);
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        let coarse = k_strong_components(&g, &rational(lo, 2)).unwrap();
        let fine = k_strong_components(&g, &rational(hi, 2)).unwrap();
        prop_assert_eq!(&coarse, &k_strong_components_brute(&g, &rational(lo, 2)).unwrap());
        for block in &fine {
            prop_assert!(coarse.iter().any(|c| block.iter().all(|x| c.contains(x))));
        }
    }

    #[test]
    fn light_edges_weigh_at_most_nk((n, edges) in arb_small()) {
        let g = graph_of(n, &edges);
        let map = strength_exact(&g);
        let mut ks: Vec<Rational> = map.values().cloned().collect();
        ks.sort();
        ks.dedup();
        for k in ks {
            let mut total = Rational::zero();
            for e in g.edges() {
                if *map.get(e.id).unwrap() <= k {
                    total += &e.w;
                }
            }
            prop_assert!(total <= k.clone() * rational(n as i64, 1));
        }
    }
}

#[test]
fn insertion_never_lowers_strength() {
    let mut r = rng(41);
    for _ in 0..60 {
        let n = r.gen_range(2..=7);
        let m = r.gen_range(1..=12);
        let edges = random_multigraph(&mut r, n, m);
        let mut g: Graph = Graph::new(n);
        let mut previous: Vec<Rational> = Vec::new();
        for (u, v, w) in edges {
            g.add_edge(u, v, w).unwrap();
            let now = strength_brute(&g).unwrap();
            let exact = strength_exact(&g);
            for (i, e) in g.edges().iter().enumerate() {
                let s = now.get(e.id).unwrap();
                assert_eq!(s, exact.get(e.id).unwrap());
                if let Some(p) = previous.get(i) {
                    assert!(s >= p);
                }
            }
            previous = g.edges().iter().map(|e| now.get(e.id).unwrap().clone()).collect();
        }
    }
}

#[test]
fn strength_is_at_least_component_min_cut() {
    let mut r = rng(42);
    for _ in 0..60 {
        let n = r.gen_range(2..=9);
        let m = r.gen_range(1..=16);
        let edges = random_multigraph(&mut r, n, m);
        let g = graph_of(n, &edges);
        let map = strength_exact(&g);
        for comp in cutsparsify::connected_components(&g) {
            if comp.len() < 2 {
                continue;
            }
            let sub = g.induced(&comp);
            let (_, lambda) = cutsparsify::min_cut(&sub).unwrap();
            for e in g.edges().iter().filter(|e| comp.contains(&e.u)) {
                assert!(*map.get(e.id).unwrap() >= lambda);
            }
        }
    }
}
