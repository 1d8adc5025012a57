use adjmat::adjacency_matroid::adjacency_matroid;
use adjmat::delta_matroid::SetSystem;
use adjmat::graph::default_labels;
use adjmat::LoopedSimpleGraph;
use proptest::prelude::*;

fn system(max_n: usize) -> impl Strategy<Value = SetSystem> {
    (0..=max_n).prop_flat_map(|n| {
        proptest::collection::btree_set(0u32..1 << n, 0..=(1usize << n))
            .prop_map(move |fam| SetSystem::new(default_labels(n), fam).unwrap())
    })
}

fn graph(max_n: usize) -> impl Strategy<Value = LoopedSimpleGraph> {
    (0..=max_n, any::<u64>()).prop_map(|(n, seed)| {
        use rand::SeedableRng;
        LoopedSimpleGraph::random(n, &mut rand_chacha::ChaCha8Rng::seed_from_u64(seed))
    })
}

/// `S` with nonsingular `A[S]`, straight from the definition.
fn oracle_feasible(g: &LoopedSimpleGraph) -> Vec<u32> {
    (0u32..1 << g.n())
        .filter(|&s| {
            let idx: Vec<usize> = (0..g.n()).filter(|i| s >> i & 1 == 1).collect();
            g.nullity_of(&idx).unwrap() == 0
        })
        .collect()
}

proptest! {
    #[test]
    fn twists_are_involutions(d in system(6), x in any::<u32>()) {
        let x = x & d.full_mask();
        prop_assert_eq!(d.pivot(x).unwrap().pivot(x).unwrap(), d.clone());
        prop_assert_eq!(d.loop_complement(x).unwrap().loop_complement(x).unwrap(), d.clone());
        prop_assert_eq!(d.dual_pivot(x).unwrap().dual_pivot(x).unwrap(), d.clone());
        prop_assert_eq!(d.dual_pivot(x).unwrap(), d.dual_pivot_composite(x).unwrap());
    }

    #[test]
    fn loop_complement_rules_agree(d in system(6), v in 0usize..6) {
        prop_assume!(v < d.n());
        prop_assert_eq!(d.loop_complement(1 << v).unwrap(), d.loop_complement_single(v).unwrap());
    }

    #[test]
    fn multi_element_twists_are_sequential(d in system(5), x in any::<u32>()) {
        let x = x & d.full_mask();
        let mut seq = d.clone();
        for v in 0..d.n() {
            if x >> v & 1 == 1 {
                seq = seq.loop_complement(1 << v).unwrap();
            }
        }
        prop_assert_eq!(seq, d.loop_complement(x).unwrap());
    }

    #[test]
    fn exchange_criteria_agree(d in system(5)) {
        prop_assert_eq!(d.is_delta_matroid().unwrap(), d.is_delta_matroid_by_twists().unwrap());
    }

    #[test]
    fn graph_encoding(g in graph(8)) {
        let d = SetSystem::from_graph(&g).unwrap();
        prop_assert_eq!(d.family().iter().copied().collect::<Vec<_>>(), oracle_feasible(&g));
        prop_assert_eq!(d.to_graph().unwrap(), g.clone());
        prop_assert!(d.is_delta_matroid().unwrap());
        prop_assert_eq!(d.max_sys().unwrap(), SetSystem::from_matroid_bases(&adjacency_matroid(&g)).unwrap());
    }

    #[test]
    fn pivots_on_graphs(g in graph(7), v in 0usize..7) {
        prop_assume!(v < g.n());
        let d = SetSystem::from_graph(&g).unwrap();
        let gv = SetSystem::from_graph(&g.local_complement(v).unwrap()).unwrap();
        let twisted = if g.is_looped(v) { d.pivot(1 << v) } else { d.dual_pivot(1 << v) };
        prop_assert_eq!(twisted.unwrap(), gv);
    }
}

#[test]
fn max_deletion_needs_the_exchange_axiom() {
    let ground: Vec<String> = ["u", "v", "w"].iter().map(|s| s.to_string()).collect();
    let d = SetSystem::from_label_sets(ground, &[&["u"], &["v"], &["v", "w"]]).unwrap();
    let w = d.index_of("w").unwrap();
    assert!(!d.is_delta_matroid().unwrap());
    assert!(!d.max_sys().unwrap().is_coloop(w).unwrap());
    assert_eq!(d.max_sys().unwrap().delete(w).unwrap().labeled_family(), vec![vec!["u".to_string()]]);
    assert_eq!(
        d.delete(w).unwrap().max_sys().unwrap().labeled_family(),
        vec![vec!["u".to_string()], vec!["v".to_string()]]
    );
}
