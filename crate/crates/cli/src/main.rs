use std::fs;
use std::io::{self, Read, Write};
use std::process::ExitCode;

use adjmat::adjacency_matroid::{
    adjacency_matroid, contract_via_lc, is_triple_coloop, trio, tripartition_report, MinorDerivation,
};
use adjmat::delta_matroid::SetSystem;
use adjmat::format::{
    matrix_to_text, multi_to_json, multi_to_text, parse_graph, parse_matrix, parse_multigraph, parse_transitions,
    simple_to_json, simple_to_text, transitions_comment,
};
use adjmat::four_regular::{realize_touch_graph, FourRegularGraph};
use adjmat::gf2::symmetrize_nullspace;
use adjmat::polynomials::{
    interlace_recursive, interlace_subset, lambda_leading, q_from_lambda, tutte_recursive, tutte_subset,
    BivariatePolynomial,
};
use adjmat::verify::{self, Suite, VerifyOptions};
use adjmat::{BinaryMatroid, Error, LoopedSimpleGraph};
use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "adjmat", version, about = "Adjacency matroids of looped simple graphs")]
struct Cli {
    /// Input file, or `-` for standard input.
    #[arg(long, global = true, default_value = "-")]
    input: String,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum InterlaceMethod {
    Subset,
    Recursive,
    Lambda,
}

#[derive(Clone, Copy, ValueEnum)]
enum TutteMethod {
    Subset,
    Recursive,
}

#[derive(Subcommand)]
enum Command {
    /// Sizes, rank, nullity, loops and coloops of the adjacency matroid.
    Info,
    /// Circuits of the adjacency matroid.
    Circuits,
    /// Deletion or contraction of one element, with the graph that realizes it.
    #[command(group(ArgGroup::new("op").required(true).args(["delete", "contract"])))]
    Minor {
        #[arg(long, value_name = "V")]
        delete: Option<String>,
        #[arg(long, value_name = "V")]
        contract: Option<String>,
    },
    /// The case of each vertex.
    Tripartition {
        #[arg(long)]
        vertex: Option<String>,
    },
    /// Which two of the three variant matroids at each vertex are equal.
    Trio {
        #[arg(long)]
        vertex: Option<String>,
    },
    /// The interlace polynomial q.
    Interlace {
        #[arg(long, value_enum, default_value_t = InterlaceMethod::Subset)]
        method: InterlaceMethod,
    },
    /// The Tutte polynomial of the adjacency matroid, or of the polygon
    /// matroid with `--polygon`.
    Tutte {
        #[arg(long)]
        polygon: bool,
        #[arg(long, value_enum, default_value_t = TutteMethod::Subset)]
        method: TutteMethod,
    },
    /// The polynomial Σ_S (y−1)^{ν(A[S])} over bases S of the adjacency matroid.
    Lambda,
    /// The delta-matroid of the graph with its minimal and maximal sets.
    Delta,
    /// The touch-graph of a circuit partition of a 4-regular graph.
    Touchgraph {
        /// One pairing index 0, 1 or 2 per vertex. Defaults to the
        /// `# transitions` comment of the input.
        #[arg(long)]
        transitions: Option<String>,
    },
    /// A 4-regular graph and circuit partition whose touch-graph is the input.
    Realize,
    /// A symmetric matrix with the same column matroid as the input matrix.
    Symmetrize,
    /// Runs the property suites.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

enum Failure {
    Input(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

struct Output {
    text: String,
    json: Value,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let format = cli.format;
    let result = run(cli);
    let (out, code) = match result {
        Ok(o) => (o, 0),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(1);
        }
        Err(Failure::Verification(report)) => (
            Output {
                text: report,
                json: Value::Null,
            },
            2,
        ),
    };
    let mut stdout = io::stdout().lock();
    let written = match format {
        Format::Text => stdout.write_all(out.text.as_bytes()),
        Format::Json if out.json.is_null() => stdout.write_all(out.text.as_bytes()),
        Format::Json => writeln!(stdout, "{}", serde_json::to_string_pretty(&out.json).expect("valid json")),
    };
    if written.is_err() {
        return ExitCode::from(1);
    }
    ExitCode::from(code)
}

fn read_input(path: &str) -> Result<String, Failure> {
    let mut s = String::new();
    if path == "-" {
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Input(format!("reading standard input: {e}")))?;
    } else {
        s = fs::read_to_string(path).map_err(|e| Failure::Input(format!("reading {path}: {e}")))?;
    }
    Ok(s)
}

fn simple_graph(text: &str) -> Result<LoopedSimpleGraph, Failure> {
    let (g, simplified) = parse_graph(text)?.into_simple();
    if simplified {
        eprintln!("warning: input is a multigraph; using its simplification");
    }
    Ok(g)
}

fn set_text(labels: &[String]) -> String {
    format!("{{{}}}", labels.join(","))
}

fn polynomial_output(p: &BivariatePolynomial) -> Output {
    Output {
        text: format!("{p}\n"),
        json: json!({ "polynomial": p.to_string(), "terms": p.to_triples() }),
    }
}

fn circuits_of(m: &BinaryMatroid) -> Result<Vec<Vec<String>>, Failure> {
    Ok(m.circuits_labeled()?)
}

fn circuits_text(circuits: &[Vec<String>]) -> String {
    circuits.iter().map(|c| format!("{}\n", set_text(c))).collect()
}

fn run(cli: Cli) -> Result<Output, Failure> {
    if let Command::Verify {
        suite,
        max_n,
        trials,
        seed,
    } = &cli.command
    {
        return run_verify(suite, *max_n, *trials, *seed, cli.format);
    }
    let text = read_input(&cli.input)?;
    match cli.command {
        Command::Info => {
            let g = simple_graph(&text)?;
            let m = adjacency_matroid(&g);
            let names = |pred: &dyn Fn(usize) -> Result<bool, Error>| -> Result<Vec<String>, Failure> {
                let mut out = Vec::new();
                for v in 0..g.n() {
                    if pred(v)? {
                        out.push(g.label(v).to_string());
                    }
                }
                Ok(out)
            };
            let looped: Vec<String> = g.looped_vertices().iter().map(|&v| g.label(v).to_string()).collect();
            let coloops = names(&|v| m.is_coloop(v))?;
            let loops = names(&|v| m.is_loop(v))?;
            Ok(Output {
                text: format!(
                    "vertices: {}\nlooped: {}\nedges: {}\nrank: {}\nnullity: {}\nmatroid loops: {}\nmatroid coloops: {}\n",
                    g.n(),
                    set_text(&looped),
                    g.edge_count(),
                    m.rank(),
                    m.nullity(),
                    set_text(&loops),
                    set_text(&coloops)
                ),
                json: json!({
                    "vertices": g.n(),
                    "looped": looped,
                    "edges": g.edge_count(),
                    "rank": m.rank(),
                    "nullity": m.nullity(),
                    "matroid_loops": loops,
                    "matroid_coloops": coloops,
                }),
            })
        }
        Command::Circuits => {
            let g = simple_graph(&text)?;
            let circuits = circuits_of(&adjacency_matroid(&g))?;
            Ok(Output {
                text: circuits_text(&circuits),
                json: json!({ "ground": g.labels(), "circuits": circuits }),
            })
        }
        Command::Minor { delete, contract } => {
            let g = simple_graph(&text)?;
            match (delete, contract) {
                (Some(v), _) => minor_delete(&g, &v),
                (None, Some(v)) => minor_contract(&g, &v),
                (None, None) => Err(Failure::Input("one of --delete or --contract is required".into())),
            }
        }
        Command::Tripartition { vertex } => {
            let g = simple_graph(&text)?;
            let mut rows = tripartition_report(&g)?;
            if let Some(v) = vertex {
                g.index_of(v.as_str())?;
                rows.retain(|(l, _)| *l == v);
            }
            Ok(Output {
                text: rows.iter().map(|(l, c)| format!("{l}: {}\n", c.case)).collect(),
                json: Value::Array(
                    rows.iter()
                        .map(|(l, c)| {
                            json!({
                                "vertex": l,
                                "case": c.case.name(),
                                "coloop_plain": c.coloop_plain,
                                "coloop_loop": c.coloop_loop,
                            })
                        })
                        .collect(),
                ),
            })
        }
        Command::Trio { vertex } => {
            let g = simple_graph(&text)?;
            let vs: Vec<usize> = match vertex {
                Some(v) => vec![g.index_of(v.as_str())?],
                None => (0..g.n()).collect(),
            };
            let mut lines = String::new();
            let mut items = Vec::new();
            for v in vs {
                let t = trio(&g, v)?;
                lines.push_str(&format!(
                    "{}: {} = {}, {} differs (nullity {} vs {})\n",
                    g.label(v),
                    t.equal_pair[0],
                    t.equal_pair[1],
                    t.odd_one,
                    t.shared_nullity,
                    t.odd_nullity
                ));
                items.push(json!({
                    "vertex": g.label(v),
                    "equal": [t.equal_pair[0].name(), t.equal_pair[1].name()],
                    "odd": t.odd_one.name(),
                    "shared_nullity": t.shared_nullity,
                    "odd_nullity": t.odd_nullity,
                }));
            }
            Ok(Output {
                text: lines,
                json: Value::Array(items),
            })
        }
        Command::Interlace { method } => {
            let g = simple_graph(&text)?;
            let q = match method {
                InterlaceMethod::Subset => interlace_subset(&g)?,
                InterlaceMethod::Recursive => interlace_recursive(&g)?,
                InterlaceMethod::Lambda => q_from_lambda(&g)?,
            };
            Ok(polynomial_output(&q))
        }
        Command::Tutte { polygon, method } => {
            let m = if polygon {
                BinaryMatroid::polygon_matroid(&parse_graph(&text)?.into_multi())?
            } else {
                adjacency_matroid(&simple_graph(&text)?)
            };
            let t = match method {
                TutteMethod::Subset => tutte_subset(&m)?,
                TutteMethod::Recursive => tutte_recursive(&m)?,
            };
            Ok(polynomial_output(&t))
        }
        Command::Lambda => {
            let g = simple_graph(&text)?;
            Ok(polynomial_output(&lambda_leading(&adjacency_matroid(&g))))
        }
        Command::Delta => {
            let g = simple_graph(&text)?;
            let d = SetSystem::from_graph(&g)?;
            let fam = |s: &SetSystem| s.labeled_family();
            let show = |f: &[Vec<String>]| f.iter().map(|s| set_text(s)).collect::<Vec<_>>().join(" ");
            let (all, min, max) = (fam(&d), fam(&d.min_sys()?), fam(&d.max_sys()?));
            Ok(Output {
                text: format!(
                    "feasible: {}\nminimal: {}\nmaximal: {}\n",
                    show(&all),
                    show(&min),
                    show(&max)
                ),
                json: json!({ "ground": g.labels(), "feasible": all, "minimal": min, "maximal": max }),
            })
        }
        Command::Touchgraph { transitions } => {
            let m = parse_multigraph(&text)?;
            let f = FourRegularGraph::new(m)?;
            let list = match transitions.as_deref().or_else(|| transitions_comment(&text)) {
                Some(s) => s.to_string(),
                None => return Err(Failure::Input("no --transitions given and no `# transitions` line".into())),
            };
            let t = parse_transitions(&list, f.n())?;
            let p = f.partition_from_transitions(&t)?;
            let tch = f.touch_graph(&p);
            Ok(Output {
                text: multi_to_text(&tch),
                json: multi_to_json(&tch),
            })
        }
        Command::Realize => {
            let g = simple_graph(&text)?;
            let r = realize_touch_graph(&g)?;
            let t = r.partition.transitions();
            let t_text: Vec<String> = t.iter().map(|x| x.to_string()).collect();
            let circuits: Vec<&str> = r.circuit_vertex.iter().map(|&v| g.label(v)).collect();
            Ok(Output {
                text: format!(
                    "# transitions {}\n# circuits {}\n{}",
                    t_text.join(" "),
                    circuits.join(" "),
                    multi_to_text(r.graph.graph())
                ),
                json: json!({
                    "graph": multi_to_json(r.graph.graph()),
                    "transitions": t,
                    "circuits": circuits,
                }),
            })
        }
        Command::Symmetrize => {
            let a = parse_matrix(&text)?;
            let s = symmetrize_nullspace(&a);
            let rows: Vec<String> = s.row_vectors().iter().map(|r| r.to_string()).collect();
            Ok(Output {
                text: matrix_to_text(&s),
                json: json!({ "matrix": rows }),
            })
        }
        Command::Verify { .. } => unreachable!("handled above"),
    }
}

fn minor_delete(g: &LoopedSimpleGraph, v: &str) -> Result<Output, Failure> {
    let i = g.index_of(v)?;
    let m = adjacency_matroid(g).delete(i)?;
    let circuits = circuits_of(&m)?;
    if is_triple_coloop(g, i)? {
        // deletion of a coloop equals contraction
        let d = contract_via_lc(g, i)?;
        let mut out = derivation_output("delete", v, &d, &circuits);
        out.text = format!("{v} is a coloop of all three variant matroids; deletion equals contraction\n{}", out.text);
        return Ok(out);
    }
    let sub = g.remove_vertex(i)?;
    Ok(Output {
        text: format!(
            "route: induced subgraph G - {v}\nwitness graph:\n{}circuits:\n{}",
            indent(&simple_to_text(&sub)),
            circuits_text(&circuits)
        ),
        json: json!({
            "operation": "delete",
            "vertex": v,
            "lc_sequence": [],
            "witness_graph": simple_to_json(&sub),
            "ground": m.ground(),
            "circuits": circuits,
        }),
    })
}

fn minor_contract(g: &LoopedSimpleGraph, v: &str) -> Result<Output, Failure> {
    let d = contract_via_lc(g, v)?;
    let circuits = circuits_of(&d.result)?;
    Ok(derivation_output("contract", v, &d, &circuits))
}

fn derivation_output(op: &str, v: &str, d: &MinorDerivation, circuits: &[Vec<String>]) -> Output {
    let route = if d.lc_sequence.is_empty() {
        format!("route: induced subgraph G - {v}")
    } else {
        format!("route: local complement at {}, then remove {v}", d.lc_sequence.join(", "))
    };
    let witness = d.witness_graph.remove_vertex(v).expect("vertex present");
    Output {
        text: format!(
            "{route}\nwitness graph:\n{}circuits:\n{}",
            indent(&simple_to_text(&witness)),
            circuits_text(circuits)
        ),
        json: json!({
            "operation": op,
            "vertex": v,
            "lc_sequence": d.lc_sequence,
            "witness_graph": simple_to_json(&witness),
            "ground": d.result.ground(),
            "circuits": circuits,
        }),
    }
}

fn indent(s: &str) -> String {
    s.lines().map(|l| format!("  {l}\n")).collect()
}

fn run_verify(suite: &str, max_n: usize, trials: usize, seed: u64, format: Format) -> Result<Output, Failure> {
    let suite = Suite::parse(suite)
        .ok_or_else(|| Failure::Input(format!("unknown suite `{suite}` (all, matroid, delta, fourreg, poly)")))?;
    let reports = verify::run(&VerifyOptions {
        suite,
        max_n,
        trials,
        seed,
    })?;
    let failed = reports.iter().filter(|r| !r.passed()).count();
    let mut text: String = reports.iter().map(|r| format!("{r}\n")).collect();
    text.push_str(&format!("{} properties, {failed} failed\n", reports.len()));
    let json = Value::Array(
        reports
            .iter()
            .map(|r| {
                json!({
                    "label": r.label,
                    "instances": r.instances,
                    "failures": r.failures,
                    "repro": r.repro,
                })
            })
            .collect(),
    );
    if failed > 0 {
        let body = match format {
            Format::Text => text,
            Format::Json => format!("{}\n", serde_json::to_string_pretty(&json).expect("valid json")),
        };
        return Err(Failure::Verification(body));
    }
    Ok(Output { text, json })
}
