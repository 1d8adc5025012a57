//! Property suites: every structural identity the library relies on,
//! checked over exhaustive small instances and seeded random ones.
//!
//! Each check keeps a count of instances, a count of failures and the first
//! failing input (instances are visited smallest first, so this is also a
//! smallest one). Runs are single-threaded and fully determined by the seed.

use std::collections::BTreeSet;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::adjacency_matroid::{
    adjacency_matroid, classify_vertex, contract_via_lc, contract_via_neighbor, is_triple_coloop,
    is_triple_coloop_by_cycle_spaces, trio, variant_matroid, TripartitionCase,
};
use crate::binary_matroid::BinaryMatroid;
use crate::delta_matroid::{FlipOp, SetSystem};
use crate::error::{Error, Result};
use crate::format::{multi_to_text, simple_to_text};
use crate::four_regular::{
    connected_four_regular, padded_adjacency, random_four_regular, realize_touch_graph, CircuitPartition,
    EulerSystem, FourRegularGraph, TransitionType,
};
use crate::gf2::{symmetrize_nullspace, BitMatrix, BitVector, Subspace};
use crate::graph::{reconstruct_from_nullity_oracle, LoopedSimpleGraph, MultiGraph, VariantKind};
use crate::polynomials::{
    interlace_recursive, interlace_subset, lambda_leading, lambda_sum_through, q_from_lambda, tutte_recursive,
    tutte_subset, BivariatePolynomial,
};

/// Graph suites enumerate every looped simple graph up to this size.
pub const EXHAUSTIVE_GRAPH_N: usize = 4;
/// The 4-regular suite enumerates connected multigraphs up to this size.
pub const EXHAUSTIVE_FOUR_REGULAR_N: usize = 5;
/// Largest size accepted for random instances.
pub const MAX_RANDOM_N: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    All,
    Matroid,
    Delta,
    FourRegular,
    Poly,
}

impl Suite {
    pub fn parse(s: &str) -> Option<Suite> {
        match s {
            "all" => Some(Suite::All),
            "matroid" => Some(Suite::Matroid),
            "delta" => Some(Suite::Delta),
            "fourreg" => Some(Suite::FourRegular),
            "poly" => Some(Suite::Poly),
            _ => None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub suite: Suite,
    /// Exhaustive up to the suite's limit, then `trials` random instances
    /// per size up to `max_n`.
    pub max_n: usize,
    pub trials: usize,
    pub seed: u64,
}

/// Outcome of one named property.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub label: &'static str,
    pub instances: usize,
    pub failures: usize,
    /// The first failing input.
    pub repro: Option<String>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{status} {} instances={} failures={}", self.label, self.instances, self.failures)?;
        if let Some(r) = &self.repro {
            for line in r.lines() {
                write!(f, "\n    {line}")?;
            }
        }
        Ok(())
    }
}

/// Accumulates reports in a fixed label order.
pub struct Checks {
    reports: Vec<Report>,
}

impl Checks {
    pub fn new(labels: &[&'static str]) -> Self {
        Checks {
            reports: labels
                .iter()
                .map(|&label| Report {
                    label,
                    instances: 0,
                    failures: 0,
                    repro: None,
                })
                .collect(),
        }
    }

    fn slot(&mut self, label: &'static str) -> &mut Report {
        if let Some(i) = self.reports.iter().position(|r| r.label == label) {
            return &mut self.reports[i];
        }
        self.reports.push(Report {
            label,
            instances: 0,
            failures: 0,
            repro: None,
        });
        self.reports.last_mut().expect("just pushed")
    }

    pub fn check(&mut self, label: &'static str, ok: bool, repro: impl FnOnce() -> String) {
        let r = self.slot(label);
        r.instances += 1;
        if !ok {
            r.failures += 1;
            if r.repro.is_none() {
                r.repro = Some(repro());
            }
        }
    }

    /// An `Err` counts as a failure and its message joins the repro.
    pub fn check_result(&mut self, label: &'static str, res: Result<bool>, repro: impl FnOnce() -> String) {
        match res {
            Ok(ok) => self.check(label, ok, repro),
            Err(e) => self.check(label, false, || format!("error: {e}\n{}", repro())),
        }
    }

    pub fn merge(&mut self, other: Checks) {
        for r in other.reports {
            let s = self.slot(r.label);
            s.instances += r.instances;
            s.failures += r.failures;
            if s.repro.is_none() {
                s.repro = r.repro;
            }
        }
    }

    pub fn into_reports(self) -> Vec<Report> {
        self.reports
    }
}

fn graph_repro(g: &LoopedSimpleGraph, v: Option<usize>) -> String {
    match v {
        Some(v) => format!("vertex {}\n{}", g.label(v), simple_to_text(g)),
        None => simple_to_text(g),
    }
}

/// All looped simple graphs of each size up to `exhaustive`, then `trials`
/// random graphs of each larger size up to `max_n`.
pub fn graph_corpus(exhaustive: usize, max_n: usize, trials: usize, rng: &mut impl Rng) -> Result<Vec<LoopedSimpleGraph>> {
    let mut out = Vec::new();
    for n in 0..=exhaustive.min(max_n) {
        out.extend(LoopedSimpleGraph::all(n)?);
    }
    for n in exhaustive + 1..=max_n {
        for _ in 0..trials {
            out.push(LoopedSimpleGraph::random(n, rng));
        }
    }
    Ok(out)
}

pub fn run(opts: &VerifyOptions) -> Result<Vec<Report>> {
    if opts.max_n > MAX_RANDOM_N {
        return Err(Error::GateExceeded {
            what: "verify size",
            limit: MAX_RANDOM_N,
            actual: opts.max_n,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut out = Vec::new();
    let wants = |s: Suite| opts.suite == Suite::All || opts.suite == s;
    if wants(Suite::Matroid) {
        let graphs = graph_corpus(EXHAUSTIVE_GRAPH_N, opts.max_n, opts.trials, &mut rng)?;
        out.extend(matroid_checks(&graphs).into_reports());
        let mut c = Checks::new(&[]);
        subspace_checks(opts.max_n.min(5), &mut c)?;
        symmetrize_checks(opts.trials, opts.max_n, &mut rng, &mut c);
        out.extend(c.into_reports());
    }
    if wants(Suite::Delta) {
        let graphs = graph_corpus(EXHAUSTIVE_GRAPH_N, opts.max_n.min(6), opts.trials, &mut rng)?;
        out.extend(delta_graph_checks(&graphs, &mut rng).into_reports());
        out.extend(set_system_checks(opts.max_n.min(4)).into_reports());
    }
    if wants(Suite::FourRegular) {
        let mut corpus = Vec::new();
        for n in 1..=opts.max_n.min(EXHAUSTIVE_FOUR_REGULAR_N) {
            corpus.extend(connected_four_regular(n)?);
        }
        let mut c = four_regular_checks(&corpus, None, &mut rng)?;
        let mut random = Vec::new();
        for n in EXHAUSTIVE_FOUR_REGULAR_N + 1..=opts.max_n {
            for _ in 0..opts.trials {
                random.push(random_four_regular(n, &mut rng));
            }
        }
        c.merge(four_regular_checks(&random, Some(opts.trials.max(1)), &mut rng)?);
        c.merge(realization_checks(opts.trials, opts.max_n.min(6), &mut rng)?);
        out.extend(c.into_reports());
    }
    if wants(Suite::Poly) {
        let graphs = graph_corpus(EXHAUSTIVE_GRAPH_N, opts.max_n, opts.trials, &mut rng)?;
        let mut c = polynomial_checks(&graphs)?;
        c.merge(polygon_tutte_checks(opts.trials, &mut rng)?);
        out.extend(c.into_reports());
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// binary matroids and adjacency matroids

pub const CYCLE_SPACE_BIJECTION: &str = "cycle-space-bijection";
pub const CIRCUIT_AXIOMS: &str = "circuit-axioms";
pub const SYMMETRIZED_MATRIX_SAME_MATROID: &str = "symmetrized-matrix-same-matroid";

/// Every subspace of `GF(2)^n`, one per reduced echelon form.
pub fn all_subspaces(n: usize) -> Vec<Subspace> {
    let mut out = Vec::new();
    for pivots in 0u64..1 << n {
        let piv: Vec<usize> = (0..n).filter(|i| (pivots >> i) & 1 == 1).collect();
        // free positions: row r may have 1s at non-pivot columns after its pivot
        let free: Vec<(usize, usize)> = piv
            .iter()
            .enumerate()
            .flat_map(|(r, &p)| (p + 1..n).filter(|c| (pivots >> c) & 1 == 0).map(move |c| (r, c)))
            .collect();
        for fill in 0u64..1 << free.len() {
            let mut rows: Vec<BitVector> = piv.iter().map(|&p| BitVector::from_indices(n, [p])).collect();
            for (k, &(r, c)) in free.iter().enumerate() {
                if (fill >> k) & 1 == 1 {
                    rows[r].set(c, true);
                }
            }
            out.push(Subspace::span(n, rows).expect("vectors of length n"));
        }
    }
    out
}

/// Axioms 2–4 and the disjoint-union form 4′ for a circuit list.
pub fn circuit_axioms_hold(n: usize, circuits: &[BitVector]) -> bool {
    let masks: Vec<u64> = circuits.iter().map(|c| c.to_mask().expect("small ground set")).collect();
    if masks.contains(&0) {
        return false;
    }
    for (i, &a) in masks.iter().enumerate() {
        for (j, &b) in masks.iter().enumerate() {
            if i != j && a & !b == 0 {
                return false;
            }
            if i != j && !masks.iter().any(|&c| c & !(a ^ b) == 0) {
                return false;
            }
        }
    }
    // 4′: every nonzero sum of circuits is a disjoint union of circuits
    let span = Subspace::span(n, circuits.iter().cloned()).expect("length n");
    let sums = span.vectors().expect("small cycle space");
    fn cover(z: u64, masks: &[u64]) -> bool {
        if z == 0 {
            return true;
        }
        let low = z & z.wrapping_neg();
        masks
            .iter()
            .filter(|&&c| c & low != 0 && c & !z == 0)
            .any(|&c| cover(z & !c, masks))
    }
    sums.iter().all(|z| cover(z.to_mask().expect("small"), &masks))
}

pub fn subspace_checks(max_n: usize, c: &mut Checks) -> Result<()> {
    for n in 0..=max_n {
        let labels = crate::graph::default_labels(n);
        for w in all_subspaces(n) {
            let repro = || format!("subspace basis {:?} in dimension {n}", w.basis());
            let m = BinaryMatroid::from_subspace(w.clone(), labels.clone())?;
            let circuits = m.circuits()?;
            let spanned = Subspace::span(n, circuits.iter().cloned())?;
            let back = BinaryMatroid::from_subspace(spanned.clone(), labels.clone())?;
            c.check(CYCLE_SPACE_BIJECTION, *m.cycle_space() == w && spanned == w && back == m, repro);
            c.check(CIRCUIT_AXIOMS, circuit_axioms_hold(n, &circuits), repro);
        }
    }
    Ok(())
}

pub fn symmetrize_checks(trials: usize, max_n: usize, rng: &mut impl Rng, c: &mut Checks) {
    let side = max_n.max(1);
    for _ in 0..trials {
        let rows = rng.gen_range(1..=side);
        let cols = rng.gen_range(1..=side);
        let a = BitMatrix::from_fn(rows, cols, |_, _| rng.gen_bool(0.5));
        let labels = crate::graph::default_labels(cols);
        let s = symmetrize_nullspace(&a);
        let ok = s.is_symmetric()
            && BinaryMatroid::from_matrix(&s, labels.clone()).ok() == BinaryMatroid::from_matrix(&a, labels).ok();
        c.check(SYMMETRIZED_MATRIX_SAME_MATROID, ok, || format!("matrix\n{a}"));
    }
}

pub const CONTRACT_VIA_LC: &str = "contraction-by-local-complementation";
pub const DELETE_NONCOLOOP: &str = "deletion-of-noncoloop-is-induced-subgraph";
pub const DELETE_NON_TRIPLE: &str = "deletion-of-non-triple-coloop-is-induced-subgraph";
pub const DELETE_LC_INVARIANT: &str = "deletion-unchanged-by-local-complement";
pub const LC_UNLOOPED: &str = "local-complement-at-unlooped-vertex-keeps-matroid";
pub const LC_LOOPED_BOTH_COLOOP: &str = "local-complement-at-looped-double-coloop-keeps-matroid";
pub const LC_LOOPED_SPLIT: &str = "local-complement-at-looped-noncoloop-adds-coloop";
pub const TRIO: &str = "variant-matroids-two-equal";
pub const ISOLATED_LOOP_VARIANT: &str = "isolated-loop-variant-is-coloop-sum";
pub const TRIPLE_COLOOP_SPACES: &str = "triple-coloop-by-cycle-spaces";
pub const COLOOP_UNDER_LOOP_TOGGLE: &str = "coloop-under-loop-toggle";
pub const LOOP_IFF_ISOLATED: &str = "matroid-loop-iff-isolated-unlooped";
pub const NONCOLOOP_RANKS: &str = "noncoloop-rank-test";
pub const TRIPARTITION_CASES: &str = "tripartition-case-structure";
pub const TRIPARTITION_SWAP: &str = "tripartition-case1-case2-swap-under-lc";
pub const STRONG_PRINCIPAL_MINOR: &str = "strong-principal-minor";
pub const NULLITY_RECONSTRUCTION: &str = "reconstruction-from-small-nullities";

const MATROID_LABELS: &[&str] = &[
    CONTRACT_VIA_LC,
    DELETE_NONCOLOOP,
    DELETE_NON_TRIPLE,
    DELETE_LC_INVARIANT,
    LC_UNLOOPED,
    LC_LOOPED_BOTH_COLOOP,
    LC_LOOPED_SPLIT,
    TRIO,
    ISOLATED_LOOP_VARIANT,
    TRIPLE_COLOOP_SPACES,
    COLOOP_UNDER_LOOP_TOGGLE,
    LOOP_IFF_ISOLATED,
    NONCOLOOP_RANKS,
    TRIPARTITION_CASES,
    TRIPARTITION_SWAP,
    STRONG_PRINCIPAL_MINOR,
    NULLITY_RECONSTRUCTION,
];

fn with_coloop(m: &BinaryMatroid, v: &str) -> Result<BinaryMatroid> {
    m.direct_sum(&BinaryMatroid::coloop(v))
}

/// `(m − v) ⊕ U_{1,1}({v})`, compared on the original ground order.
fn coloop_replacement(m: &BinaryMatroid, v: usize) -> Result<BinaryMatroid> {
    let label = m.ground()[v].clone();
    with_coloop(&m.delete(v)?, &label)?.with_ground_order(m.ground())
}

fn rank_without_column(a: &BitMatrix, v: usize, drop_row: bool) -> usize {
    let cols: Vec<usize> = (0..a.cols()).filter(|&j| j != v).collect();
    let rows: Vec<BitVector> = (0..a.rows())
        .filter(|&i| !(drop_row && i == v))
        .map(|i| a.row(i).select(&cols))
        .collect();
    BitMatrix::from_rows(cols.len(), rows).expect("consistent widths").rank()
}

pub fn matroid_checks(graphs: &[LoopedSimpleGraph]) -> Checks {
    let mut c = Checks::new(MATROID_LABELS);
    for g in graphs {
        let m = adjacency_matroid(g);
        for v in 0..g.n() {
            let repro = || graph_repro(g, Some(v));
            vertex_matroid_checks(g, &m, v, &mut c).unwrap_or_else(|e| {
                c.check(CONTRACT_VIA_LC, false, || format!("error: {e}\n{}", repro()));
            });
        }
        let oracle = |s: &[usize]| g.nullity_of(s).expect("indices in range");
        let rebuilt = reconstruct_from_nullity_oracle(g.labels().to_vec(), oracle);
        c.check(NULLITY_RECONSTRUCTION, rebuilt.as_ref() == Ok(g), || graph_repro(g, None));
        c.check(STRONG_PRINCIPAL_MINOR, strong_principal_minor_holds(g.adjacency()), || {
            graph_repro(g, None)
        });
    }
    c
}

/// Columns `S` with `|S| = rank` are independent iff the principal
/// submatrix on `S` is nonsingular.
pub fn strong_principal_minor_holds(a: &BitMatrix) -> bool {
    let n = a.cols();
    let r = a.rank();
    (0u64..1 << n).filter(|s| s.count_ones() as usize == r).all(|s| {
        let idx: Vec<usize> = (0..n).filter(|i| (s >> i) & 1 == 1).collect();
        let cols_independent = a.select_columns(&idx).expect("in range").rank() == r;
        let principal = a.principal_submatrix(&idx).expect("in range").nullity() == 0;
        cols_independent == principal
    })
}

fn vertex_matroid_checks(g: &LoopedSimpleGraph, m: &BinaryMatroid, v: usize, c: &mut Checks) -> Result<()> {
    let repro = || graph_repro(g, Some(v));
    let label = g.label(v).to_string();
    let contracted = m.contract(v)?;
    let mut ok = contract_via_lc(g, v)?.result == contracted;
    if !g.is_looped(v) {
        for w in g.neighbors(v) {
            ok &= contract_via_neighbor(g, v, w)?.result == contracted;
        }
    }
    c.check(CONTRACT_VIA_LC, ok, repro);

    let deleted = m.delete(v)?;
    let induced = adjacency_matroid(&g.remove_vertex(v)?);
    let coloop = m.is_coloop(v)?;
    if !coloop {
        c.check(DELETE_NONCOLOOP, deleted == induced, repro);
    }
    let triple = is_triple_coloop(g, v)?;
    if !triple {
        c.check(DELETE_NON_TRIPLE, deleted == induced, repro);
    }
    let gv = g.local_complement(v)?;
    let mv = adjacency_matroid(&gv);
    c.check(DELETE_LC_INVARIANT, mv.delete(v)? == deleted, repro);

    if !g.is_looped(v) {
        c.check(LC_UNLOOPED, mv == *m, repro);
    } else {
        let coloop_v = mv.is_coloop(v)?;
        if coloop && coloop_v {
            let ok = mv == *m && !triple && !is_triple_coloop(&gv, v)?;
            c.check(LC_LOOPED_BOTH_COLOOP, ok, repro);
        } else {
            // M1 is the one without v as a coloop
            let (g1, m1, g2, m2) = if !coloop { (g, m, &gv, &mv) } else { (&gv, &mv, g, m) };
            let _ = g1;
            let ok = m2.is_coloop(v)?
                && is_triple_coloop(g2, v)?
                && *m2 == coloop_replacement(m1, v)?
                && m1.rank() != m2.rank();
            c.check(LC_LOOPED_SPLIT, ok, repro);
        }
    }

    c.check_result(TRIO, trio(g, v).map(|_| true), repro);

    let iso = variant_matroid(g, v, VariantKind::LoopIsolate)?;
    let gvl = gv.variant(v, VariantKind::Loop)?;
    let mgvl = adjacency_matroid(&gvl);
    let mgvl_contract = mgvl.contract(v)?;
    let ok = iso.is_coloop(v)?
        && iso.equals(&with_coloop(&induced, &label)?)
        && iso.equals(&with_coloop(&mgvl_contract, &label)?)
        && [induced.nullity(), mgvl_contract.nullity(), mgvl.nullity()]
            .iter()
            .all(|&k| k == iso.nullity());
    c.check(ISOLATED_LOOP_VARIANT, ok, repro);

    let plain = variant_matroid(g, v, VariantKind::Plain)?;
    let looped = variant_matroid(g, v, VariantKind::Loop)?;
    let ok = iso.is_coloop(v)?
        && (plain.is_coloop(v)? || looped.is_coloop(v)?)
        && triple == is_triple_coloop_by_cycle_spaces(g, v)?;
    c.check(TRIPLE_COLOOP_SPACES, ok, repro);

    let toggled = adjacency_matroid(&g.loop_complement(v)?);
    c.check(COLOOP_UNDER_LOOP_TOGGLE, coloop || toggled.is_coloop(v)?, repro);
    c.check(
        LOOP_IFF_ISOLATED,
        m.is_loop(v)? == (g.is_isolated(v) && !g.is_looped(v)),
        repro,
    );

    let a = g.adjacency();
    let ranks_agree = a.rank() == rank_without_column(a, v, false)
        && rank_without_column(a, v, false) == rank_without_column(a, v, true);
    c.check(NONCOLOOP_RANKS, ranks_agree == !coloop, repro);

    c.check_result(TRIPARTITION_CASES, tripartition_holds(g, &gv, v), repro);
    let here = classify_vertex(g, v)?.case;
    let there = classify_vertex(&gv, v)?.case;
    let ok = (here == TripartitionCase::Case1) == (there == TripartitionCase::Case2)
        && (here == TripartitionCase::Case2) == (there == TripartitionCase::Case1);
    c.check(TRIPARTITION_SWAP, ok, repro);
    Ok(())
}

/// The full case analysis over the six variant matroids of `G` and `G^v`.
fn tripartition_holds(g: &LoopedSimpleGraph, gv: &LoopedSimpleGraph, v: usize) -> Result<bool> {
    let var = |h: &LoopedSimpleGraph, k| variant_matroid(h, v, k);
    let six = [
        var(g, VariantKind::Plain)?,
        var(g, VariantKind::Loop)?,
        var(g, VariantKind::LoopIsolate)?,
        var(gv, VariantKind::Plain)?,
        var(gv, VariantKind::Loop)?,
        var(gv, VariantKind::LoopIsolate)?,
    ];
    let mut distinct: Vec<&BinaryMatroid> = Vec::new();
    for m in &six {
        if !distinct.contains(&m) {
            distinct.push(m);
        }
    }
    let non_coloop = distinct
        .iter()
        .map(|m| m.is_coloop(v))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .filter(|&b| !b)
        .count();
    if !(2..=3).contains(&distinct.len()) || non_coloop != 1 {
        return Ok(false);
    }
    let [p, l, i, pv, lv, iv] = &six;
    let case = classify_vertex(g, v)?.case;
    let trio_match = match case {
        TripartitionCase::Case1 => p == l,
        TripartitionCase::Case2 => p == i,
        TripartitionCase::Case3 => l == i,
    };
    if !trio_match {
        return Ok(false);
    }
    let label = g.label(v).to_string();
    // case 1 of (h, hv) with the variant matroids of each
    let case_one = |h: &LoopedSimpleGraph,
                    [hp, hl, hi]: [&BinaryMatroid; 3],
                    hv: &LoopedSimpleGraph,
                    [hvp, hvl, hvi]: [&BinaryMatroid; 3]|
     -> Result<bool> {
        let _ = h;
        let reduced = hv.remove_vertex(v)?;
        Ok(!hvl.is_coloop(v)?
            && hi.equals(&with_coloop(&hvl.contract(v)?, &label)?)
            && hp == hl
            && hl == hvp
            && hvp == hvi
            && *hvi == coloop_replacement(hvl, v)?
            && hi.nullity() == hvl.nullity()
            && hp.nullity() + 1 == hi.nullity()
            && hi.cycle_space().intersection(hvl.cycle_space())? == *hp.cycle_space()
            && !reduced.looped_vertices().is_empty())
    };
    match case {
        TripartitionCase::Case1 => case_one(g, [p, l, i], gv, [pv, lv, iv]),
        TripartitionCase::Case2 => case_one(gv, [pv, lv, iv], g, [p, l, i]),
        TripartitionCase::Case3 => Ok(pv == p
            && l == lv
            && lv == i
            && i == iv
            && *iv == coloop_replacement(p, v)?
            && p.nullity() == l.nullity() + 1
            && l.cycle_space().is_subspace_of(p.cycle_space())
            && l.cycle_space() != p.cycle_space()),
    }
}

// ---------------------------------------------------------------------------
// delta-matroids

pub const GRAPH_ENCODING: &str = "graph-delta-matroid-round-trip";
pub const MAX_IS_ADJACENCY_MATROID: &str = "max-of-graph-delta-matroid-is-adjacency-matroid";
pub const SUBSET_BASES: &str = "induced-bases-are-maximal-feasible-sets";
pub const SUBSET_INDEPENDENTS: &str = "induced-independent-sets-from-feasible-sets";
pub const SUBSET_DELTA: &str = "induced-delta-matroid-is-union-of-bases";
pub const FLIPS_MATCH_GRAPH_OPS: &str = "vertex-flips-match-graph-operations";
pub const NORMAL_FLIP_IS_GRAPHIC: &str = "flipped-system-graphic-iff-normal";
pub const FLIPPED_MAX_IS_BINARY: &str = "flipped-max-is-adjacency-matroid";
pub const ROUTE_DELETE: &str = "delta-route-deletion";
pub const ROUTE_CONTRACT_LOOPED: &str = "delta-route-contraction-looped";
pub const ROUTE_CONTRACT_UNLOOPED: &str = "delta-route-contraction-unlooped";
pub const ROUTE_LC_UNLOOPED: &str = "delta-route-dual-pivot-keeps-max";
pub const LOOPED_ISOLATION: &str = "looped-vertex-isolation-via-delta-matroid";
pub const THREE_MAXIMA: &str = "pivot-and-loop-complement-maxima";
pub const MIN_DELETE: &str = "min-commutes-with-deletion";
pub const MAX_DELETE: &str = "max-commutes-with-deletion";
pub const MAX_DELETE_COUNTEREXAMPLE: &str = "max-deletion-fails-without-exchange";
pub const SINGLE_LOOP_MAX: &str = "loop-complement-max-restricts-pivot-max";
pub const MAX_CONTRACT: &str = "max-commutes-with-contraction";
pub const MIN_CONTRACT: &str = "min-commutes-with-contraction";
pub const DUAL_PIVOT_RULE: &str = "dual-pivot-parity-rule";
pub const EXCHANGE_CRITERIA: &str = "exchange-axiom-equals-twist-criterion";

const DELTA_GRAPH_LABELS: &[&str] = &[
    GRAPH_ENCODING,
    MAX_IS_ADJACENCY_MATROID,
    SUBSET_BASES,
    SUBSET_INDEPENDENTS,
    SUBSET_DELTA,
    FLIPS_MATCH_GRAPH_OPS,
    NORMAL_FLIP_IS_GRAPHIC,
    FLIPPED_MAX_IS_BINARY,
    ROUTE_DELETE,
    ROUTE_CONTRACT_LOOPED,
    ROUTE_CONTRACT_UNLOOPED,
    ROUTE_LC_UNLOOPED,
    LOOPED_ISOLATION,
    THREE_MAXIMA,
];

fn bases_of(m: &BinaryMatroid) -> Result<SetSystem> {
    SetSystem::from_matroid_bases(m)
}

/// Renumbers the bits of `x ⊆ s` to positions within `s`.
fn compress(x: u32, s: u32) -> u32 {
    let mut out = 0;
    let mut k = 0;
    for i in 0..32 {
        if (s >> i) & 1 == 1 {
            if (x >> i) & 1 == 1 {
                out |= 1 << k;
            }
            k += 1;
        }
    }
    out
}

fn maxima(fam: &BTreeSet<u32>) -> BTreeSet<u32> {
    fam.iter()
        .copied()
        .filter(|&y| !fam.iter().any(|&z| z != y && y & !z == 0))
        .collect()
}

fn masks_of(vs: &[BitVector]) -> BTreeSet<u32> {
    vs.iter().map(|b| b.to_mask().expect("small") as u32).collect()
}

pub fn delta_graph_checks(graphs: &[LoopedSimpleGraph], rng: &mut impl Rng) -> Checks {
    let mut c = Checks::new(DELTA_GRAPH_LABELS);
    for g in graphs {
        if let Err(e) = delta_graph_instance(g, rng, &mut c) {
            c.check(GRAPH_ENCODING, false, || format!("error: {e}\n{}", graph_repro(g, None)));
        }
    }
    c
}

fn delta_graph_instance(g: &LoopedSimpleGraph, rng: &mut impl Rng, c: &mut Checks) -> Result<()> {
    let n = g.n();
    let d = SetSystem::from_graph(g)?;
    let m = adjacency_matroid(g);
    let repro = || graph_repro(g, None);
    c.check(
        GRAPH_ENCODING,
        d.is_normal() && d.to_graph().as_ref() == Ok(g) && d.is_delta_matroid()?,
        repro,
    );
    c.check(MAX_IS_ADJACENCY_MATROID, d.max_sys()? == bases_of(&m)?, repro);

    for s in 0..=d.full_mask() {
        let idx: Vec<usize> = (0..n).filter(|i| (s >> i) & 1 == 1).collect();
        let sub = g.induced(idx.iter().copied())?;
        let ms = adjacency_matroid(&sub);
        let inside: BTreeSet<u32> = d.family().iter().copied().filter(|&x| x & !s == 0).collect();
        let bases: BTreeSet<u32> = maxima(&inside).into_iter().map(|x| compress(x, s)).collect();
        c.check(SUBSET_BASES, bases == masks_of(&ms.bases()?), repro);
        let mut below = BTreeSet::new();
        for &x in &inside {
            let cx = compress(x, s);
            let mut sub_mask = cx;
            loop {
                below.insert(sub_mask);
                if sub_mask == 0 {
                    break;
                }
                sub_mask = (sub_mask - 1) & cx;
            }
        }
        c.check(SUBSET_INDEPENDENTS, below == masks_of(&ms.independent_sets()?), repro);
        let mut union = BTreeSet::new();
        for t in 0..1u32 << idx.len() {
            let tidx: Vec<usize> = (0..idx.len()).filter(|i| (t >> i) & 1 == 1).collect();
            let mt = adjacency_matroid(&sub.induced(tidx.iter().copied())?);
            for b in mt.bases()? {
                let bm = b.to_mask().expect("small") as u32;
                // spread back from T-positions to S-positions
                let spread = tidx
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| (bm >> k) & 1 == 1)
                    .fold(0u32, |acc, (_, &p)| acc | (1 << p));
                union.insert(spread);
            }
        }
        c.check(SUBSET_DELTA, *SetSystem::from_graph(&sub)?.family() == union, repro);
    }

    for v in 0..n {
        let repro = || graph_repro(g, Some(v));
        let bit = 1u32 << v;
        let gv = g.local_complement(v)?;
        let lc = if g.is_looped(v) { d.pivot(bit)? } else { d.dual_pivot(bit)? };
        let ok = lc == SetSystem::from_graph(&gv)?
            && d.loop_complement(bit)? == SetSystem::from_graph(&g.loop_complement(v)?)?
            && d.delete(v)? == SetSystem::from_graph(&g.remove_vertex(v)?)?;
        c.check(FLIPS_MATCH_GRAPH_OPS, ok, repro);

        if !m.is_coloop(v)? {
            let ok = d.delete(v)?.max_sys()? == bases_of(&m.delete(v)?)?
                && bases_of(&m.delete(v)?)? == bases_of(&adjacency_matroid(&g.remove_vertex(v)?))?;
            c.check(ROUTE_DELETE, ok, repro);
        }
        let contracted = bases_of(&m.contract(v)?)?;
        if g.is_looped(v) {
            c.check(ROUTE_CONTRACT_LOOPED, d.pivot(bit)?.delete(v)?.max_sys()? == contracted, repro);
        } else if g.is_isolated(v) {
            c.check(ROUTE_CONTRACT_UNLOOPED, d.delete(v)?.max_sys()? == contracted, repro);
        } else {
            let mut ok = true;
            for w in g.neighbors(v) {
                let wb = 1u32 << w;
                let route = if g.is_looped(w) {
                    d.dual_pivot(bit)?.dual_pivot(wb)?.pivot(bit)?
                } else {
                    d.dual_pivot(wb)?.pivot(bit)?
                };
                ok &= route.delete(v)?.max_sys()? == contracted;
            }
            c.check(ROUTE_CONTRACT_UNLOOPED, ok, repro);
        }
        if !g.is_looped(v) {
            c.check(ROUTE_LC_UNLOOPED, d.dual_pivot(bit)?.max_sys()? == d.max_sys()?, repro);
        } else {
            let iso_graph = g.variant(v, VariantKind::LoopIsolate)?;
            let iso = adjacency_matroid(&iso_graph);
            let mv = adjacency_matroid(&gv);
            let filtered: BTreeSet<u32> = bases_of(&mv)?.family().iter().copied().filter(|b| b & bit != 0).collect();
            let ok = d.tilde_minus(v)?.loop_complement(bit)? == SetSystem::from_graph(&iso_graph)?
                && mv.nullity() == iso.nullity()
                && *bases_of(&iso)?.family() == filtered
                && (iso == mv) == (m.nullity() >= mv.nullity());
            c.check(LOOPED_ISOLATION, ok, repro);
        }
        c.check_result(THREE_MAXIMA, three_maxima_hold(&d, v), repro);
    }

    // flip sequences: every sequence of length ≤ 2, plus one random of length 4
    let ops = [FlipOp::Pivot, FlipOp::DualPivot, FlipOp::LoopComplement];
    let singles: Vec<(FlipOp, usize)> = (0..n).flat_map(|v| ops.iter().map(move |&o| (o, v))).collect();
    let mut seqs: Vec<Vec<(FlipOp, usize)>> = vec![vec![]];
    for &a in &singles {
        seqs.push(vec![a]);
        for &b in &singles {
            seqs.push(vec![a, b]);
        }
    }
    if n > 0 {
        seqs.push((0..4).map(|_| (ops[rng.gen_range(0..3)], rng.gen_range(0..n))).collect());
    }
    for seq in seqs {
        let repro = || format!("flips {seq:?}\n{}", graph_repro(g, None));
        let e = d.vertex_flip_sequence(&seq)?;
        let graphic = e.to_graph().is_ok();
        c.check(NORMAL_FLIP_IS_GRAPHIC, graphic == e.is_normal(), repro);
        let first_min = *e.min_sys()?.family().iter().next().ok_or(Error::Improper)?;
        let ok = match e.dual_pivot(first_min)?.to_graph() {
            Ok(h) => e.max_sys()? == bases_of(&adjacency_matroid(&h))?,
            Err(_) => false,
        };
        c.check(FLIPPED_MAX_IS_BINARY, ok, repro);
    }
    Ok(())
}

/// For delta-matroids `D`, `D + v`: exactly two of `max(D)`, `max(D ∗ v)`,
/// `max(D + v)` agree, and the third one relates to them by a coloop swap
/// with nullity one higher.
pub fn three_maxima_hold(d: &SetSystem, v: usize) -> Result<bool> {
    let bit = 1u32 << v;
    let ms = [d.max_sys()?, d.pivot(bit)?.max_sys()?, d.loop_complement(bit)?.max_sys()?];
    if ms.iter().any(|m| !m.is_equicardinal()) {
        return Ok(false);
    }
    let eq = [ms[0] == ms[1], ms[0] == ms[2], ms[1] == ms[2]];
    let (d1, d2) = match eq {
        [true, false, false] => (&ms[0], &ms[2]),
        [false, true, false] => (&ms[0], &ms[1]),
        [false, false, true] => (&ms[1], &ms[0]),
        _ => return Ok(false),
    };
    Ok(d2.with_coloop(v)? == *d1 && d2.matroid_nullity()? == d1.matroid_nullity()? + 1)
}

const SET_SYSTEM_LABELS: &[&str] = &[
    MIN_DELETE,
    MAX_DELETE,
    MAX_DELETE_COUNTEREXAMPLE,
    SINGLE_LOOP_MAX,
    MAX_CONTRACT,
    MIN_CONTRACT,
    DUAL_PIVOT_RULE,
    EXCHANGE_CRITERIA,
    THREE_MAXIMA,
];

fn system_repro(d: &SetSystem, v: Option<usize>) -> String {
    match v {
        Some(v) => format!("element {} of {d}", d.ground()[v]),
        None => d.to_string(),
    }
}

/// Every set system on up to `max_n` elements.
pub fn set_system_checks(max_n: usize) -> Checks {
    let mut c = Checks::new(SET_SYSTEM_LABELS);
    counterexample_check(&mut c);
    for n in 0..=max_n {
        let ground = crate::graph::default_labels(n);
        let subsets = 1u32 << n;
        for code in 0u64..1 << subsets {
            let d = SetSystem::new(ground.clone(), (0..subsets).filter(|y| (code >> y) & 1 == 1))
                .expect("valid masks");
            if let Err(e) = set_system_instance(&d, &mut c) {
                c.check(MIN_DELETE, false, || format!("error: {e}\n{}", system_repro(&d, None)));
            }
        }
    }
    c
}

fn counterexample_check(c: &mut Checks) {
    let ground: Vec<String> = ["u", "v", "w"].iter().map(|s| s.to_string()).collect();
    let d = SetSystem::from_label_sets(ground, &[&["u"], &["v"], &["v", "w"]]).expect("valid");
    let ok = (|| -> Result<bool> {
        let w = d.index_of("w")?;
        let mx = d.max_sys()?;
        let left = mx.delete(w)?;
        let right = d.delete(w)?.max_sys()?;
        Ok(!mx.is_coloop(w)?
            && !d.is_delta_matroid()?
            && left.labeled_family() == vec![vec!["u".to_string()]]
            && right.labeled_family() == vec![vec!["u".to_string()], vec!["v".to_string()]])
    })();
    c.check_result(MAX_DELETE_COUNTEREXAMPLE, ok, || system_repro(&d, None));
}

fn set_system_instance(d: &SetSystem, c: &mut Checks) -> Result<()> {
    let exchange = d.is_delta_matroid()?;
    c.check(EXCHANGE_CRITERIA, exchange == d.is_delta_matroid_by_twists()?, || system_repro(d, None));
    for x in 0..=d.full_mask() {
        c.check(DUAL_PIVOT_RULE, d.dual_pivot(x)? == d.dual_pivot_composite(x)?, || {
            format!("twist mask {x:b}\n{}", system_repro(d, None))
        });
    }
    if !d.is_proper() {
        return Ok(());
    }
    for v in 0..d.n() {
        let repro = || system_repro(d, Some(v));
        let bit = 1u32 << v;
        let minus = d.delete(v)?;
        if minus.is_proper() {
            c.check(MIN_DELETE, d.min_sys()?.delete(v)? == minus.min_sys()?, repro);
        }
        if exchange && !d.max_sys()?.is_coloop(v)? {
            c.check(MAX_DELETE, d.max_sys()?.delete(v)? == minus.max_sys()?, repro);
        }
        let tilde = d.tilde_minus(v)?;
        if tilde.is_proper() {
            let left = tilde.loop_complement(bit)?.max_sys()?;
            let right = d.pivot(bit)?.max_sys()?.tilde_contract(v)?;
            c.check(SINGLE_LOOP_MAX, left == right, repro);
        }
        if !d.is_loop(v)? {
            let left = d.max_sys()?.pivot(bit)?.delete(v)?;
            let right = d.pivot(bit)?.delete(v)?.max_sys()?;
            c.check(MAX_CONTRACT, left == right, repro);
        }
        if exchange && !d.min_sys()?.is_loop(v)? {
            let left = d.min_sys()?.pivot(bit)?.delete(v)?;
            let right = d.pivot(bit)?.delete(v)?.min_sys()?;
            c.check(MIN_CONTRACT, left == right, repro);
        }
        if exchange && d.loop_complement(bit)?.is_delta_matroid()? {
            c.check_result(THREE_MAXIMA, three_maxima_hold(d, v), repro);
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// 4-regular graphs

pub const CIRCUIT_NULLITY: &str = "circuit-nullity-formula";
pub const TRANSITION_TYPE_ORIENTATION: &str = "transition-type-independent-of-orientation";
pub const TWO_CIRCUITS_RANK: &str = "two-circuits-meet-iff-rank-unchanged";
pub const RANK_CONDITIONS: &str = "touch-independence-rank-and-merge-conditions";
pub const COMPATIBLE_SYSTEM: &str = "compatible-euler-system-disagrees-everywhere";
pub const NULLSPACE_COMPLEMENT: &str = "interlacement-nullspace-complements-touch-cycles";
pub const DUAL_IS_TOUCH_POLYGON: &str = "interlacement-dual-is-touch-polygon-matroid";
pub const KAPPA_INTERLACEMENT: &str = "kappa-locally-complements-interlacement";
pub const KAPPA_CHI: &str = "kappa-at-chi-vertex-keeps-partition";
pub const KAPPA_PSI: &str = "kappa-at-psi-vertex-with-retransition";
pub const KAPPA_PSI_TOUCH: &str = "kappa-at-psi-vertex-touch-graph-effect";
pub const TOUCH_LOOP_ALTERNATIVE: &str = "vertex-is-touch-loop-for-one-alternative";
pub const REALIZATION: &str = "realized-touch-graph-matches-input";

const FOUR_REGULAR_LABELS: &[&str] = &[
    CIRCUIT_NULLITY,
    TRANSITION_TYPE_ORIENTATION,
    TWO_CIRCUITS_RANK,
    RANK_CONDITIONS,
    COMPATIBLE_SYSTEM,
    NULLSPACE_COMPLEMENT,
    DUAL_IS_TOUCH_POLYGON,
    KAPPA_INTERLACEMENT,
    KAPPA_CHI,
    KAPPA_PSI,
    KAPPA_PSI_TOUCH,
    TOUCH_LOOP_ALTERNATIVE,
];

fn four_regular_repro(f: &FourRegularGraph, t: &[u8]) -> String {
    format!("transitions {t:?}\n{}", multi_to_text(f.graph()))
}

/// The pairing at `v` that is neither `a` nor `b`.
fn third_pairing(a: u8, b: u8) -> u8 {
    (0..3).find(|&p| p != a && p != b).expect("three pairings")
}

fn touch_polygon(f: &FourRegularGraph, p: &CircuitPartition) -> Result<BinaryMatroid> {
    BinaryMatroid::polygon_matroid(&f.touch_graph(p))
}

/// With `trials = None` every transition system of each graph is visited;
/// otherwise that many random ones.
pub fn four_regular_checks(corpus: &[FourRegularGraph], trials: Option<usize>, rng: &mut impl Rng) -> Result<Checks> {
    let mut c = Checks::new(FOUR_REGULAR_LABELS);
    for f in corpus {
        let systems: Vec<Vec<u8>> = match trials {
            None => f.all_transition_systems()?,
            Some(k) => (0..k).map(|_| (0..f.n()).map(|_| rng.gen_range(0..3)).collect()).collect(),
        };
        let c0 = f.euler_system()?;
        for t in systems {
            if let Err(e) = four_regular_instance(f, &c0, &t, &mut c) {
                c.check(CIRCUIT_NULLITY, false, || format!("error: {e}\n{}", four_regular_repro(f, &t)));
            }
        }
    }
    Ok(c)
}

fn rank_minus(g: &LoopedSimpleGraph, x: &[usize]) -> Result<usize> {
    let keep: Vec<usize> = (0..g.n()).filter(|i| !x.contains(i)).collect();
    Ok(g.induced(keep)?.adjacency().rank())
}

fn four_regular_instance(f: &FourRegularGraph, c0: &EulerSystem, t: &[u8], c: &mut Checks) -> Result<()> {
    let repro = || four_regular_repro(f, t);
    let p = f.partition_from_transitions(t)?;
    let comps = f.component_count();
    let compatible = f.compatible_euler_system(&p)?;
    for euler in [c0, &compatible] {
        let rel = f.relative_interlacement(euler, &p)?;
        c.check(CIRCUIT_NULLITY, rel.adjacency().nullity() + comps == p.len(), repro);
        let orientation_free = (0..f.n()).all(|v| {
            euler.type_with_orientation(f, t[v], v, false) == euler.type_with_orientation(f, t[v], v, true)
        });
        c.check(TRANSITION_TYPE_ORIENTATION, orientation_free, repro);
    }

    // rank drop at one vertex, then at a growing set, relative to the fixed Euler system
    let rel = f.relative_interlacement(c0, &p)?;
    let rank = rel.adjacency().rank();
    let polygon = touch_polygon(f, &p)?;
    for x in 0..rel.n() {
        let fx = f.index_of(rel.label(x))?;
        let [a, b] = p.passes_at(f, fx);
        c.check(TWO_CIRCUITS_RANK, (a != b) == (rank_minus(&rel, &[x])? == rank), repro);
    }
    for xs in 0u64..1 << rel.n() {
        let chosen: Vec<usize> = (0..rel.n()).filter(|i| (xs >> i) & 1 == 1).collect();
        if chosen.is_empty() {
            continue;
        }
        let names: Vec<&str> = chosen.iter().map(|&i| rel.label(i)).collect();
        let independent = polygon.is_independent(&polygon.set_of(names.iter().copied())?)?;
        let rank_kept = rank_minus(&rel, &chosen)? == rank;
        let mut ti = t.to_vec();
        let mut merges = true;
        for (i, name) in names.iter().enumerate() {
            let fx = f.index_of(*name)?;
            ti[fx] = c0.transitions()[fx];
            merges &= f.partition_from_transitions(&ti)?.len() + i + 1 == p.len();
        }
        c.check(RANK_CONDITIONS, independent == rank_kept && rank_kept == merges, || {
            format!("set {names:?}\n{}", repro())
        });
    }

    // compatible pair
    let disagrees = (0..f.n()).all(|v| compatible.transitions()[v] != t[v]);
    c.check(COMPATIBLE_SYSTEM, disagrees, repro);
    let rel_c = f.relative_interlacement(&compatible, &p)?;
    let padded = padded_adjacency(f, &rel_c);
    c.check(
        NULLSPACE_COMPLEMENT,
        padded.nullspace() == polygon.cycle_space().orthogonal_complement(),
        repro,
    );
    c.check(DUAL_IS_TOUCH_POLYGON, adjacency_matroid(&rel_c).dual().equals(&polygon), repro);

    let full = f.interlacement(&compatible);
    for v in 0..f.n() {
        let repro = || format!("vertex {}\n{}", f.labels()[v], repro());
        let kv = f.kappa(&compatible, v)?;
        let mut expected = full.local_complement(v)?;
        for u in 0..expected.n() {
            expected.set_loop(u, false)?;
        }
        c.check(KAPPA_INTERLACEMENT, f.interlacement(&kv) == expected, repro);

        let local = rel_c.local_complement(f.labels()[v].as_str())?;
        match f.transition_type(&compatible, &p, v)? {
            TransitionType::Chi => {
                let still = (0..f.n()).all(|u| kv.transitions()[u] != t[u]);
                c.check(KAPPA_CHI, still && f.relative_interlacement(&kv, &p)? == local, repro);
            }
            TransitionType::Psi => {
                // P′ follows C at v
                let mut t2 = t.to_vec();
                t2[v] = compatible.transitions()[v];
                let p2 = f.partition_from_transitions(&t2)?;
                c.check(KAPPA_PSI, f.relative_interlacement(&kv, &p2)? == local, repro);
                let tch = f.touch_graph(&p);
                let tch2 = f.touch_graph(&p2);
                let is_touch_loop = |m: &MultiGraph| m.edges()[v].u == m.edges()[v].v;
                let ok = if is_touch_loop(&tch) && is_touch_loop(&tch2) {
                    adjacency_matroid(&rel_c) == adjacency_matroid(&local)
                } else if !is_touch_loop(&tch) {
                    let d1 = BinaryMatroid::polygon_matroid(&tch)?.dual();
                    let d2 = BinaryMatroid::polygon_matroid(&tch2)?.dual();
                    d2.equals(&coloop_replacement(&d1, v)?)
                } else {
                    true
                };
                c.check(KAPPA_PSI_TOUCH, ok, repro);
            }
            TransitionType::Phi => {}
        }

        let other = third_pairing(compatible.transitions()[v], t[v]);
        let mut t3 = t.to_vec();
        t3[v] = other;
        let p3 = f.partition_from_transitions(&t3)?;
        let loop_in = |q: &CircuitPartition| {
            let [a, b] = q.passes_at(f, v);
            a == b
        };
        c.check(TOUCH_LOOP_ALTERNATIVE, loop_in(&p) || loop_in(&p3), repro);
    }
    Ok(())
}

/// Random graphs without isolated unlooped vertices are realized as
/// touch-graphs.
pub fn realization_checks(trials: usize, max_n: usize, rng: &mut impl Rng) -> Result<Checks> {
    let mut c = Checks::new(&[REALIZATION]);
    for k in 0..trials {
        let n = 1 + k % max_n.max(1);
        let g = random_realizable(n, rng);
        let ok = (|| -> Result<bool> {
            let r = realize_touch_graph(&g)?;
            let named = r.touch_graph_in(&g)?;
            let simplified = r.graph.touch_graph(&r.partition).simplify();
            Ok(named.simplify() == g && simplified.is_isomorphic(&g)?)
        })();
        c.check_result(REALIZATION, ok, || graph_repro(&g, None));
    }
    Ok(c)
}

/// A random looped simple graph whose isolated vertices all carry loops.
pub fn random_realizable(n: usize, rng: &mut impl Rng) -> LoopedSimpleGraph {
    let mut g = LoopedSimpleGraph::random(n, rng);
    for v in 0..n {
        if g.is_isolated(v) && !g.is_looped(v) {
            g.set_loop(v, true).expect("valid vertex");
        }
    }
    g
}

// ---------------------------------------------------------------------------
// polynomials

pub const INTERLACE_AGREE: &str = "interlace-evaluators-agree";
pub const TUTTE_AGREE: &str = "tutte-evaluators-agree";
pub const TUTTE_DUALITY: &str = "tutte-duality";
pub const LAMBDA_RECURSION: &str = "lambda-deletion-contraction";
pub const LAMBDA_LOCAL_COMPLEMENT: &str = "lambda-under-local-complement";
pub const INTERLACE_VERTEX_EXPANSION: &str = "interlace-vertex-expansion";

const POLY_LABELS: &[&str] = &[
    INTERLACE_AGREE,
    TUTTE_AGREE,
    TUTTE_DUALITY,
    LAMBDA_RECURSION,
    LAMBDA_LOCAL_COMPLEMENT,
    INTERLACE_VERTEX_EXPANSION,
];

pub fn polynomial_checks(graphs: &[LoopedSimpleGraph]) -> Result<Checks> {
    let mut c = Checks::new(POLY_LABELS);
    for g in graphs {
        let repro = || graph_repro(g, None);
        let q = interlace_subset(g)?;
        c.check(
            INTERLACE_AGREE,
            q == interlace_recursive(g)? && q == q_from_lambda(g)?,
            repro,
        );
        let m = adjacency_matroid(g);
        matroid_polynomial_checks(&m, &mut c, &repro)?;
        let y1 = BivariatePolynomial::shifted_monomial(0, 1);
        let lambda = lambda_leading(&m);
        for v in 0..g.n() {
            let repro = || graph_repro(g, Some(v));
            let ok = if !g.is_looped(v) {
                let mut ok = lambda == lambda_leading(&adjacency_matroid(&g.local_complement(v)?));
                if g.is_isolated(v) {
                    ok &= lambda == &y1 * &lambda_leading(&adjacency_matroid(&g.remove_vertex(v)?));
                }
                ok
            } else {
                let h = g.local_complement(v)?.remove_vertex(v)?;
                lambda == lambda_leading(&adjacency_matroid(&h))
            };
            c.check(LAMBDA_LOCAL_COMPLEMENT, ok, repro);
            let diff = &q - &interlace_subset(&g.remove_vertex(v)?)?;
            c.check(INTERLACE_VERTEX_EXPANSION, diff == lambda_sum_through(g, v)?, repro);
        }
    }
    Ok(c)
}

fn matroid_polynomial_checks(m: &BinaryMatroid, c: &mut Checks, repro: &dyn Fn() -> String) -> Result<()> {
    let t = tutte_subset(m)?;
    c.check(TUTTE_AGREE, t == tutte_recursive(m)?, repro);
    c.check(TUTTE_DUALITY, tutte_subset(&m.dual())? == t.swap_xy(), repro);
    let y1 = BivariatePolynomial::shifted_monomial(0, 1);
    let lambda = lambda_leading(m);
    for v in 0..m.size() {
        let del = lambda_leading(&m.delete(v)?);
        let con = lambda_leading(&m.contract(v)?);
        let ok = if m.is_loop(v)? {
            lambda == &y1 * &del && lambda == &y1 * &con
        } else if m.is_coloop(v)? {
            lambda == del && lambda == con
        } else {
            lambda == &y1 * &del && lambda == con
        };
        c.check(LAMBDA_RECURSION, ok, || format!("element {}\n{}", m.ground()[v], repro()));
    }
    Ok(())
}

/// Tutte checks on polygon matroids of random small multigraphs.
pub fn polygon_tutte_checks(trials: usize, rng: &mut impl Rng) -> Result<Checks> {
    let mut c = Checks::new(&[]);
    for _ in 0..trials {
        let n = rng.gen_range(1..=4);
        let edges = rng.gen_range(0..=7);
        let mut g = MultiGraph::new(crate::graph::default_labels(n))?;
        for _ in 0..edges {
            g.add_edge(rng.gen_range(0..n), rng.gen_range(0..n))?;
        }
        let m = BinaryMatroid::polygon_matroid(&g)?;
        let text = multi_to_text(&g);
        matroid_polynomial_checks(&m, &mut c, &|| text.clone())?;
    }
    Ok(c)
}
