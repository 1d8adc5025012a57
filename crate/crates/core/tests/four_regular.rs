use adjmat::adjacency_matroid::adjacency_matroid;
use adjmat::four_regular::{connected_four_regular, random_four_regular, realize_touch_graph, FourRegularGraph};
use adjmat::format::parse_multigraph;
use adjmat::{BinaryMatroid, LoopedSimpleGraph};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn four_regular(max_n: usize) -> impl Strategy<Value = (FourRegularGraph, Vec<u8>)> {
    (1..=max_n, any::<u64>()).prop_map(|(n, seed)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_four_regular(n, &mut rng);
        let t = (0..n).map(|_| rng.gen_range(0..3)).collect();
        (f, t)
    })
}

#[test]
fn corpus_sizes() {
    // connected 4-regular multigraphs with loops, up to isomorphism
    let counts: Vec<usize> = (1..=4).map(|n| connected_four_regular(n).unwrap().len()).collect();
    assert_eq!(counts[0], 1);
    assert_eq!(counts[1], 2);
    for f in connected_four_regular(4).unwrap() {
        assert!(f.graph().is_connected());
        assert!((0..f.n()).all(|v| f.graph().degree(v) == 4));
    }
}

#[test]
fn figure_eight() {
    let f = FourRegularGraph::new(parse_multigraph("vertices v\nloop v\nloop v\n").unwrap()).unwrap();
    let sizes: Vec<usize> = f
        .all_transition_systems()
        .unwrap()
        .iter()
        .map(|t| f.partition_from_transitions(t).unwrap().len())
        .collect();
    // one transition splits the figure eight into its two loops
    assert_eq!(sizes.iter().filter(|&&k| k == 2).count(), 1);
    assert_eq!(sizes.iter().filter(|&&k| k == 1).count(), 2);
}

proptest! {
    #[test]
    fn circuit_nullity_formula((f, t) in four_regular(8)) {
        let p = f.partition_from_transitions(&t).unwrap();
        let c = f.euler_system().unwrap();
        prop_assert_eq!(c.partition().len(), f.component_count());
        let rel = f.relative_interlacement(&c, &p).unwrap();
        prop_assert_eq!(rel.adjacency().nullity() + f.component_count(), p.len());
    }

    #[test]
    fn compatible_pairs((f, t) in four_regular(8)) {
        let p = f.partition_from_transitions(&t).unwrap();
        let c = f.compatible_euler_system(&p).unwrap();
        prop_assert!((0..f.n()).all(|v| c.transitions()[v] != t[v]));
        let rel = f.relative_interlacement(&c, &p).unwrap();
        let polygon = BinaryMatroid::polygon_matroid(&f.touch_graph(&p)).unwrap();
        prop_assert!(adjacency_matroid(&rel).dual().equals(&polygon));
    }

    #[test]
    fn kappa_is_local_complementation((f, _t) in four_regular(7), v in 0usize..7) {
        prop_assume!(v < f.n());
        let c = f.euler_system().unwrap();
        let kv = f.kappa(&c, v).unwrap();
        let mut expected = f.interlacement(&c).local_complement(v).unwrap();
        for u in 0..f.n() {
            expected.set_loop(u, false).unwrap();
        }
        prop_assert_eq!(f.interlacement(&kv), expected);
    }

    #[test]
    fn realized_touch_graph(seed in any::<u64>(), n in 1usize..7) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut g = LoopedSimpleGraph::random(n, &mut rng);
        for v in 0..n {
            if g.is_isolated(v) && !g.is_looped(v) {
                g.set_loop(v, true).unwrap();
            }
        }
        let r = realize_touch_graph(&g).unwrap();
        prop_assert_eq!(r.touch_graph_in(&g).unwrap().simplify(), g.clone());
        prop_assert!(r.graph.touch_graph(&r.partition).simplify().is_isomorphic(&g).unwrap());
    }
}

#[test]
fn isolated_unlooped_vertex_has_no_realization() {
    let g = LoopedSimpleGraph::with_default_labels(1);
    assert!(realize_touch_graph(&g).is_err());
}
