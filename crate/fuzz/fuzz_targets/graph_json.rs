#![no_main]

use adjmat::format::{multi_to_json, parse_graph, parse_multigraph, simple_to_json, ParsedGraph};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    // force the JSON path
    let doc = format!("{{{}", text.trim_start().trim_start_matches('{'));
    match parse_graph(&doc) {
        Ok(ParsedGraph::Simple(g)) => {
            let again = parse_graph(&simple_to_json(&g).to_string()).unwrap();
            assert_eq!(again, ParsedGraph::Simple(g));
        }
        Ok(ParsedGraph::Multi(m)) => {
            assert_eq!(parse_multigraph(&multi_to_json(&m).to_string()).unwrap(), m);
        }
        Err(_) => {}
    }
});
