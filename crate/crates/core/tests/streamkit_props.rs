use cutsparsify::streamkit::{bridges, degree_ladder, generate, reorder, unit_expand, Family, Order, StreamSpec};
use cutsparsify::weight::rational;
use cutsparsify::{cut_value, Cut, Graph, Rational};
use proptest::prelude::*;

fn families() -> Vec<Family> {
    vec![
        Family::Gnp { n: 12, p: rational(1, 3) },
        Family::Complete { n: 7 },
        Family::Path { n: 9 },
        Family::Barbell { block: 5 },
        Family::PlantedCut {
            left: 5,
            right: 6,
            planted: 3,
            p_in: rational(2, 3),
        },
        Family::LowerboundBipartite {
            n: 16,
            epsilon: rational(1, 3),
            degrees: None,
        },
    ]
}

fn sorted(mut v: Vec<(usize, usize)>) -> Vec<(usize, usize)> {
    v.sort_unstable();
    v
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn generators_are_valid_and_reproducible(seed in any::<u64>()) {
        for family in families() {
            let base = generate(&StreamSpec::new(family.clone(), Order::AsGenerated, seed)).unwrap();
            for order in Order::ALL {
                let spec = StreamSpec::new(family.clone(), order, seed);
                let a = generate(&spec).unwrap();
                prop_assert_eq!(&a, &generate(&spec).unwrap());
                prop_assert_eq!(sorted(a.clone()), sorted(base.clone()));
                let g: Graph = Graph::from_pairs(spec.n(), &a).unwrap();
                prop_assert_eq!(g.m(), a.len());
                prop_assert!(a.iter().all(|&(u, v)| u != v));
            }
        }
    }

    #[test]
    fn planted_cut_has_requested_value(seed in any::<u64>(), planted in 1usize..=12) {
        let spec = StreamSpec::new(
            Family::PlantedCut { left: 4, right: 5, planted, p_in: rational(1, 2) },
            Order::UniformShuffle,
            seed,
        );
        let g: Graph = Graph::from_pairs(9, &generate(&spec).unwrap()).unwrap();
        let cut = Cut::new(9, 0..4).unwrap();
        prop_assert_eq!(cut_value(&g, &cut).unwrap(), rational(planted as i64, 1));
    }
}

#[test]
fn lowerbound_degrees_are_realized() {
    let ladder = degree_ladder(16, &rational(1, 3)).unwrap();
    assert_eq!(ladder, vec![1, 2, 4, 8]);
    let degrees = vec![1, 3, 8, 2, 5, 5, 7, 8];
    let spec = StreamSpec::new(
        Family::LowerboundBipartite {
            n: 16,
            epsilon: rational(1, 3),
            degrees: Some(degrees.clone()),
        },
        Order::AsGenerated,
        0,
    );
    let stream = generate(&spec).unwrap();
    for (i, &d) in degrees.iter().enumerate() {
        assert_eq!(stream.iter().filter(|&&(u, v)| u == i || v == i).count(), d);
    }
    assert!(stream.iter().all(|&(u, v)| (u < 8) != (v < 8)));
    let bad = Family::LowerboundBipartite {
        n: 16,
        epsilon: rational(1, 3),
        degrees: Some(vec![9; 8]),
    };
    assert!(generate(&StreamSpec::new(bad, Order::AsGenerated, 0)).is_err());
}

#[test]
fn orders_behave() {
    let spec = StreamSpec::new(Family::Barbell { block: 4 }, Order::BridgesLast, 0);
    let stream = generate(&spec).unwrap();
    assert_eq!(*stream.last().unwrap(), (3, 4));
    let flags = bridges(8, &stream);
    assert_eq!(flags.iter().filter(|&&b| b).count(), 1);
    let doubled = [(0, 1), (0, 1), (1, 2)];
    assert_eq!(bridges(3, &doubled), vec![false, false, true]);
    let asc = reorder(8, &stream, Order::StrengthAscending, 0).unwrap();
    assert_eq!(asc[0], (3, 4));
}

#[test]
fn unit_expansion() {
    let mut g: Graph = Graph::new(3);
    g.add_edge(0, 1, rational(3, 1)).unwrap();
    g.add_edge(1, 2, Rational::from_integer(1.into())).unwrap();
    assert_eq!(unit_expand(&g).unwrap(), vec![(0, 1), (0, 1), (0, 1), (1, 2)]);
    g.add_edge(0, 2, rational(1, 2)).unwrap();
    assert!(unit_expand(&g).is_err());
}
