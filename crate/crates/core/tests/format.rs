use adjmat::format::{
    multi_to_json, multi_to_text, parse_graph, parse_matrix, parse_multigraph, parse_transitions, simple_to_json,
    simple_to_text, transitions_comment, ParsedGraph,
};
use adjmat::{Error, LoopedSimpleGraph, MultiGraph};
use proptest::prelude::*;

fn simple(max_n: usize) -> impl Strategy<Value = LoopedSimpleGraph> {
    (0..=max_n, any::<u64>()).prop_map(|(n, seed)| {
        use rand::SeedableRng;
        LoopedSimpleGraph::random(n, &mut rand_chacha::ChaCha8Rng::seed_from_u64(seed))
    })
}

fn multi(max_n: usize) -> impl Strategy<Value = MultiGraph> {
    (1..=max_n)
        .prop_flat_map(|n| (Just(n), proptest::collection::vec((0..n, 0..n), 0..10)))
        .prop_map(|(n, edges)| {
            let mut m = MultiGraph::new(adjmat::graph::default_labels(n)).unwrap();
            for (u, v) in edges {
                m.add_edge(u, v).unwrap();
            }
            m
        })
}

proptest! {
    #[test]
    fn simple_round_trips(g in simple(8)) {
        prop_assert_eq!(parse_graph(&simple_to_text(&g)).unwrap(), ParsedGraph::Simple(g.clone()));
        let json = simple_to_json(&g).to_string();
        prop_assert_eq!(parse_graph(&json).unwrap(), ParsedGraph::Simple(g));
    }

    #[test]
    fn multigraph_round_trips(m in multi(5)) {
        prop_assert_eq!(&parse_multigraph(&multi_to_text(&m)).unwrap(), &m);
        prop_assert_eq!(&parse_multigraph(&multi_to_json(&m).to_string()).unwrap(), &m);
    }

    #[test]
    fn parsers_never_panic(s in "\\PC{0,200}") {
        let _ = parse_graph(&s);
        let _ = parse_multigraph(&s);
        let _ = parse_matrix(&s);
        let _ = parse_transitions(&s, 3);
    }

    #[test]
    fn statement_soup_never_panics(lines in proptest::collection::vec(
        prop_oneof!["vertices( [a-d]){0,4}", "loop [a-e]( x)?", "edge [a-e] [a-e]( [a-z]{1,2})?", "#.*"], 0..8)) {
        let _ = parse_graph(&lines.join("\n"));
    }
}

#[test]
fn errors_carry_line_numbers() {
    let err = parse_graph("vertices a b c\nedge a b\nedge a d\n").unwrap_err();
    assert_eq!(
        err,
        Error::Parse {
            line: 3,
            message: "unknown vertex `d`".into()
        }
    );
    assert!(matches!(parse_matrix("01\n0x\n"), Err(Error::Parse { line: 2, .. })));
    assert!(matches!(parse_matrix("01\n011\n"), Err(Error::Parse { line: 2, .. })));
}

#[test]
fn repeated_edges_give_a_multigraph() {
    let parsed = parse_graph("vertices a b\nedge a b\nedge a b\n").unwrap();
    let ParsedGraph::Multi(m) = &parsed else { panic!("expected a multigraph") };
    assert_eq!(m.edges().len(), 2);
    let (g, simplified) = parsed.into_simple();
    assert!(simplified);
    assert_eq!(g.edge_count(), 1);
}

#[test]
fn transitions_from_comment() {
    let text = "# transitions 0 2 1\nvertices a\n";
    assert_eq!(transitions_comment(text), Some(" 0 2 1"));
    assert_eq!(parse_transitions(" 0 2 1", 3).unwrap(), vec![0, 2, 1]);
    assert_eq!(parse_transitions("0,2,1", 3).unwrap(), vec![0, 2, 1]);
    assert!(parse_transitions("0 3 1", 3).is_err());
    assert!(parse_transitions("0 1", 3).is_err());
}
