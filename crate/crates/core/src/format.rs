//! Text and JSON serialization for graphs.
//!
//! Text grammar, one statement per line:
//!
//! ```text
//! # comment
//! vertices a b c
//! loop a
//! edge a b
//! ```
//!
//! `edge` and `loop` lines may carry one extra token naming the edge, which
//! is how multigraphs keep their edge labels through a round trip. A file
//! with a repeated `edge`/`loop` pair or with explicit edge names parses as
//! a [`MultiGraph`]; otherwise it is a [`LoopedSimpleGraph`].
//!
//! JSON input is recognised by a leading `{`:
//! `{"vertices": ["a","b"], "loops": ["a"], "edges": [["a","b"]]}`, where a
//! loop may be `["a","label"]` and an edge `["a","b","label"]`. An edge with
//! equal ends is a loop.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVector};
use crate::graph::{LoopedSimpleGraph, MultiGraph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParsedGraph {
    Simple(LoopedSimpleGraph),
    Multi(MultiGraph),
}

impl ParsedGraph {
    /// The looped simple graph, and whether a multigraph had to be
    /// simplified to get it.
    pub fn into_simple(self) -> (LoopedSimpleGraph, bool) {
        match self {
            ParsedGraph::Simple(g) => (g, false),
            ParsedGraph::Multi(m) => (m.simplify(), true),
        }
    }

    pub fn into_multi(self) -> MultiGraph {
        match self {
            ParsedGraph::Simple(g) => g.to_multigraph(),
            ParsedGraph::Multi(m) => m,
        }
    }

    pub fn labels(&self) -> &[String] {
        match self {
            ParsedGraph::Simple(g) => g.labels(),
            ParsedGraph::Multi(m) => m.labels(),
        }
    }
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

#[derive(Default)]
struct Collected {
    vertices: Vec<String>,
    // (line, u, v, label)
    edges: Vec<(usize, String, String, Option<String>)>,
}

impl Collected {
    fn build(self, force_multi: bool) -> Result<ParsedGraph> {
        let mut seen = BTreeSet::new();
        for (i, v) in self.vertices.iter().enumerate() {
            if !seen.insert(v.as_str()) {
                return Err(parse_err(0, format!("vertex `{v}` declared twice (position {i})")));
            }
        }
        let index = |line: usize, v: &str| {
            self.vertices
                .iter()
                .position(|x| x == v)
                .ok_or_else(|| parse_err(line, format!("unknown vertex `{v}`")))
        };
        let mut pairs = BTreeSet::new();
        let mut multi = force_multi;
        let mut resolved = Vec::with_capacity(self.edges.len());
        for (line, u, v, label) in &self.edges {
            let (a, b) = (index(*line, u)?, index(*line, v)?);
            multi |= label.is_some() || !pairs.insert((a.min(b), a.max(b)));
            resolved.push((a, b, label.clone()));
        }
        if multi {
            let mut m = MultiGraph::new(self.vertices)?;
            for (a, b, label) in resolved {
                match label {
                    Some(l) => m.add_labeled_edge(a, b, l)?,
                    None => m.add_edge(a, b)?,
                };
            }
            Ok(ParsedGraph::Multi(m))
        } else {
            let mut g = LoopedSimpleGraph::new(self.vertices)?;
            for (a, b, _) in resolved {
                if a == b {
                    g.set_loop(a, true)?;
                } else {
                    g.add_edge(a, b)?;
                }
            }
            Ok(ParsedGraph::Simple(g))
        }
    }
}

/// Parses the text grammar, or JSON when the first non-blank character is
/// `{`.
pub fn parse_graph(text: &str) -> Result<ParsedGraph> {
    collect(text)?.build(false)
}

/// As [`parse_graph`], but always yields a multigraph whose edges follow
/// the input order. Use this where edge order carries meaning, such as the
/// half-edge numbering of a 4-regular graph.
pub fn parse_multigraph(text: &str) -> Result<MultiGraph> {
    Ok(collect(text)?.build(true)?.into_multi())
}

fn collect(text: &str) -> Result<Collected> {
    if text.trim_start().starts_with('{') {
        return collect_json(text);
    }
    let mut c = Collected::default();
    let mut declared = BTreeSet::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let body = raw.trim();
        if body.is_empty() || body.starts_with('#') {
            continue;
        }
        let mut tokens = body.split_whitespace();
        let keyword = tokens.next().expect("non-empty line");
        let args: Vec<&str> = tokens.collect();
        match keyword {
            "vertices" => {
                for &v in &args {
                    if !declared.insert(v.to_string()) {
                        return Err(parse_err(line, format!("vertex `{v}` declared twice")));
                    }
                    c.vertices.push(v.to_string());
                }
            }
            "loop" => match args.as_slice() {
                [v] | [v, _] => {
                    check_declared(&declared, line, v)?;
                    c.edges.push((line, v.to_string(), v.to_string(), args.get(1).map(|s| s.to_string())));
                }
                _ => return Err(parse_err(line, "expected `loop <vertex> [<name>]`")),
            },
            "edge" => match args.as_slice() {
                [u, v] | [u, v, _] => {
                    check_declared(&declared, line, u)?;
                    check_declared(&declared, line, v)?;
                    c.edges.push((line, u.to_string(), v.to_string(), args.get(2).map(|s| s.to_string())));
                }
                _ => return Err(parse_err(line, "expected `edge <vertex> <vertex> [<name>]`")),
            },
            other => return Err(parse_err(line, format!("unknown statement `{other}`"))),
        }
    }
    Ok(c)
}

fn check_declared(declared: &BTreeSet<String>, line: usize, v: &str) -> Result<()> {
    if declared.contains(v) {
        Ok(())
    } else {
        Err(parse_err(line, format!("unknown vertex `{v}`")))
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum LoopJson {
    Plain(String),
    Named(String, String),
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum EdgeJson {
    Plain(String, String),
    Named(String, String, String),
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphJson {
    vertices: Vec<String>,
    #[serde(default)]
    loops: Vec<LoopJson>,
    #[serde(default)]
    edges: Vec<EdgeJson>,
}

fn collect_json(text: &str) -> Result<Collected> {
    let parsed: GraphJson = serde_json::from_str(text).map_err(|e| parse_err(e.line(), e.to_string()))?;
    let mut c = Collected {
        vertices: parsed.vertices,
        edges: Vec::new(),
    };
    for l in parsed.loops {
        let (v, label) = match l {
            LoopJson::Plain(v) => (v, None),
            LoopJson::Named(v, l) => (v, Some(l)),
        };
        c.edges.push((0, v.clone(), v, label));
    }
    for e in parsed.edges {
        let (u, v, label) = match e {
            EdgeJson::Plain(u, v) => (u, v, None),
            EdgeJson::Named(u, v, l) => (u, v, Some(l)),
        };
        c.edges.push((0, u, v, label));
    }
    Ok(c)
}

/// Parses a 0/1 matrix, one row per line. Whitespace inside a row is
/// ignored; blank lines and `#` comments are skipped.
pub fn parse_matrix(text: &str) -> Result<BitMatrix> {
    let mut rows: Vec<BitVector> = Vec::new();
    let mut width = None;
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut bits = Vec::new();
        for ch in line.chars().filter(|c| !c.is_whitespace()) {
            match ch {
                '0' => bits.push(false),
                '1' => bits.push(true),
                other => {
                    return Err(Error::Parse {
                        line: i + 1,
                        message: format!("unexpected matrix symbol `{other}`"),
                    })
                }
            }
        }
        match width {
            None => width = Some(bits.len()),
            Some(w) if w != bits.len() => {
                return Err(Error::Parse {
                    line: i + 1,
                    message: format!("row has {} entries, expected {w}", bits.len()),
                })
            }
            _ => {}
        }
        rows.push(BitVector::from_bools(&bits));
    }
    BitMatrix::from_rows(width.unwrap_or(0), rows)
}

pub fn matrix_to_text(a: &BitMatrix) -> String {
    a.to_string()
}

/// Parses a transition list such as `0 2 1` or `0,2,1`: one pairing index
/// in `0..3` per vertex, in vertex order.
pub fn parse_transitions(s: &str, n: usize) -> Result<Vec<u8>> {
    let t = s
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|w| !w.is_empty())
        .map(|w| match w {
            "0" => Ok(0),
            "1" => Ok(1),
            "2" => Ok(2),
            other => Err(Error::Parse {
                line: 1,
                message: format!("transition `{other}` is not 0, 1 or 2"),
            }),
        })
        .collect::<Result<Vec<u8>>>()?;
    if t.len() != n {
        return Err(Error::Parse {
            line: 1,
            message: format!("expected {n} transitions, found {}", t.len()),
        });
    }
    Ok(t)
}

/// The text after a `# transitions` comment line, if the input has one.
pub fn transitions_comment(text: &str) -> Option<&str> {
    text.lines()
        .filter_map(|l| l.trim().strip_prefix('#'))
        .find_map(|l| l.trim_start().strip_prefix("transitions"))
}

fn default_edge_label(k: usize, label: &str) -> bool {
    label == format!("e{k}")
}

pub fn simple_to_text(g: &LoopedSimpleGraph) -> String {
    let mut out = String::from("vertices");
    for l in g.labels() {
        out.push(' ');
        out.push_str(l);
    }
    out.push('\n');
    for v in g.looped_vertices() {
        out.push_str(&format!("loop {}\n", g.label(v)));
    }
    for u in 0..g.n() {
        for w in u + 1..g.n() {
            if g.is_adjacent(u, w) {
                out.push_str(&format!("edge {} {}\n", g.label(u), g.label(w)));
            }
        }
    }
    out
}

/// Writes edges in order; names are kept unless they are the default
/// `e<k>` for their position.
pub fn multi_to_text(m: &MultiGraph) -> String {
    let mut out = String::from("vertices");
    for l in m.labels() {
        out.push(' ');
        out.push_str(l);
    }
    out.push('\n');
    for (k, e) in m.edges().iter().enumerate() {
        let name = if default_edge_label(k, &e.label) {
            String::new()
        } else {
            format!(" {}", e.label)
        };
        if e.u == e.v {
            out.push_str(&format!("loop {}{}\n", m.label(e.u), name));
        } else {
            out.push_str(&format!("edge {} {}{}\n", m.label(e.u), m.label(e.v), name));
        }
    }
    out
}

pub fn simple_to_json(g: &LoopedSimpleGraph) -> serde_json::Value {
    let mut edges = Vec::new();
    for u in 0..g.n() {
        for w in u + 1..g.n() {
            if g.is_adjacent(u, w) {
                edges.push(EdgeJson::Plain(g.label(u).into(), g.label(w).into()));
            }
        }
    }
    let doc = GraphJson {
        vertices: g.labels().to_vec(),
        loops: g
            .looped_vertices()
            .into_iter()
            .map(|v| LoopJson::Plain(g.label(v).into()))
            .collect(),
        edges,
    };
    serde_json::to_value(doc).expect("plain data serializes")
}

/// Always names every edge so the result re-parses as a multigraph. Loops
/// stay in the edge list as `[v, v, name]` to keep edge order.
pub fn multi_to_json(m: &MultiGraph) -> serde_json::Value {
    let edges = m
        .edges()
        .iter()
        .map(|e| EdgeJson::Named(m.label(e.u).into(), m.label(e.v).into(), e.label.clone()))
        .collect();
    let doc = GraphJson {
        vertices: m.labels().to_vec(),
        loops: Vec::new(),
        edges,
    };
    serde_json::to_value(doc).expect("plain data serializes")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_and_looped_triangle() {
        let k3 = parse_graph("vertices a b c\nedge a b\nedge b c\nedge a c\n").unwrap();
        let ParsedGraph::Simple(g) = k3 else { panic!("expected simple graph") };
        assert_eq!(g.edge_count(), 3);
        assert!(g.looped_vertices().is_empty());
        let k3l = parse_graph("# looped\nvertices a b c\nloop a\nedge a b\nedge b c\nedge a c\n").unwrap();
        let (g, simplified) = k3l.into_simple();
        assert!(!simplified);
        assert_eq!(g.looped_vertices(), vec![0]);
    }

    #[test]
    fn undeclared_vertex_reports_line() {
        let err = parse_graph("vertices a b c\nedge a b\nedge a d\n").unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                line: 3,
                message: "unknown vertex `d`".into()
            }
        );
    }

    #[test]
    fn duplicates_make_a_multigraph() {
        let p = parse_graph("vertices a b\nedge a b\nedge b a\nloop a\nloop a\n").unwrap();
        let ParsedGraph::Multi(m) = p else { panic!("expected multigraph") };
        assert_eq!(m.edges().len(), 4);
        assert_eq!(m.degree(0), 6);
        let again = parse_graph(&multi_to_text(&m)).unwrap();
        assert_eq!(again, ParsedGraph::Multi(m.clone()));
        let json = multi_to_json(&m).to_string();
        assert_eq!(parse_graph(&json).unwrap(), ParsedGraph::Multi(m));
    }

    #[test]
    fn simple_round_trips() {
        let text = "vertices x y z\nloop y\nedge x y\nedge y z\n";
        let p = parse_graph(text).unwrap();
        let ParsedGraph::Simple(g) = &p else { panic!("expected simple graph") };
        assert_eq!(simple_to_text(g), text);
        assert_eq!(parse_graph(&simple_to_json(g).to_string()).unwrap(), p);
    }

    #[test]
    fn rejects_malformed_lines() {
        assert!(matches!(parse_graph("vertices a\nedge a\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_graph("vertices a a\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_graph("vertex a\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_graph("{\"vertices\": 3}"), Err(Error::Parse { .. })));
    }

    #[test]
    fn multigraph_parse_keeps_edge_order() {
        let m = parse_multigraph("vertices a b c\nedge b c\nloop a\nedge a b\n").unwrap();
        let ends: Vec<_> = m.edges().iter().map(|e| (e.u, e.v)).collect();
        assert_eq!(ends, vec![(1, 2), (0, 0), (0, 1)]);
        assert_eq!(parse_multigraph(&multi_to_text(&m)).unwrap(), m);
    }

    #[test]
    fn empty_input_is_the_empty_graph() {
        let (g, _) = parse_graph("").unwrap().into_simple();
        assert_eq!(g.n(), 0);
    }
}
