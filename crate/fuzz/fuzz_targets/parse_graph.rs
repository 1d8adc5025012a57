#![no_main]

use adjmat::format::{multi_to_text, parse_graph, parse_multigraph, simple_to_text, ParsedGraph};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    match parse_graph(text) {
        Ok(ParsedGraph::Simple(g)) => {
            assert_eq!(parse_graph(&simple_to_text(&g)).unwrap(), ParsedGraph::Simple(g));
        }
        Ok(ParsedGraph::Multi(m)) => {
            assert_eq!(parse_multigraph(&multi_to_text(&m)).unwrap(), m);
        }
        Err(_) => {}
    }
    if let Ok(m) = parse_multigraph(text) {
        assert_eq!(parse_multigraph(&multi_to_text(&m)).unwrap(), m);
    }
});
