//! 4-regular multigraphs, transition systems, circuit partitions, Euler
//! systems, interlacement graphs and touch-graphs.
//!
//! Edge `e` owns half-edges `2e` (at its first endpoint) and `2e + 1` (at
//! its second). A loop contributes both of its half-edges to one vertex.
//! Each vertex lists its four half-edges in ascending order; a transition is
//! one of the three perfect pairings of those four slots:
//!
//! | index | pairs              |
//! |-------|--------------------|
//! | 0     | `{0,1}`, `{2,3}`   |
//! | 1     | `{0,2}`, `{1,3}`   |
//! | 2     | `{0,3}`, `{1,2}`   |

use std::collections::BTreeSet;
use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{gate, Error, Result};
use crate::gf2::BitMatrix;
use crate::graph::{default_labels, LoopedSimpleGraph, MultiGraph, VertexRef};

const PARTNER: [[usize; 4]; 3] = [[1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]];

/// Index of the pairing containing slots `a` and `b` (`a ≠ b`).
fn pairing_of(a: usize, b: usize) -> u8 {
    (0..3u8)
        .find(|&p| PARTNER[p as usize][a] == b)
        .expect("distinct slots are paired by exactly one pairing")
}

/// A 4-regular multigraph with its half-edge structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FourRegularGraph {
    graph: MultiGraph,
    incident: Vec<[usize; 4]>,
}

/// One of the three pairings at every vertex.
pub type TransitionSystem = Vec<u8>;

impl FourRegularGraph {
    pub fn new(graph: MultiGraph) -> Result<Self> {
        let mut lists: Vec<Vec<usize>> = vec![Vec::new(); graph.n()];
        for (e, edge) in graph.edges().iter().enumerate() {
            lists[edge.u].push(2 * e);
            lists[edge.v].push(2 * e + 1);
        }
        let mut incident = Vec::with_capacity(graph.n());
        for (v, l) in lists.into_iter().enumerate() {
            let arr: [usize; 4] = l.as_slice().try_into().map_err(|_| Error::NotFourRegular {
                vertex: graph.label(v).to_string(),
                degree: l.len(),
            })?;
            incident.push(arr);
        }
        Ok(FourRegularGraph { graph, incident })
    }

    pub fn graph(&self) -> &MultiGraph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn labels(&self) -> &[String] {
        self.graph.labels()
    }

    pub fn index_of(&self, v: impl VertexRef) -> Result<usize> {
        self.graph.index_of(v)
    }

    pub fn half_edge_count(&self) -> usize {
        2 * self.graph.edges().len()
    }

    /// The vertex a half-edge is attached to.
    pub fn vertex_of(&self, h: usize) -> usize {
        let e = &self.graph.edges()[h / 2];
        if h.is_multiple_of(2) {
            e.u
        } else {
            e.v
        }
    }

    pub fn half_edges_at(&self, v: usize) -> [usize; 4] {
        self.incident[v]
    }

    fn slot(&self, h: usize) -> usize {
        let v = self.vertex_of(h);
        self.incident[v].iter().position(|&x| x == h).expect("half-edge listed at its vertex")
    }

    /// The half-edge paired with `h` by transition system `t`.
    pub fn partner(&self, t: &[u8], h: usize) -> usize {
        let v = self.vertex_of(h);
        self.incident[v][PARTNER[t[v] as usize][self.slot(h)]]
    }

    /// Pairing index at `v` that pairs half-edges `a` and `b`.
    pub fn pairing_joining(&self, v: usize, a: usize, b: usize) -> Result<u8> {
        let sa = self.incident[v].iter().position(|&x| x == a);
        let sb = self.incident[v].iter().position(|&x| x == b);
        match (sa, sb) {
            (Some(sa), Some(sb)) if sa != sb => Ok(pairing_of(sa, sb)),
            _ => Err(Error::InvalidTransition(self.graph.label(v).to_string())),
        }
    }

    pub fn component_count(&self) -> usize {
        self.graph.component_count()
    }

    /// All `3^n` transition systems in lexicographic order. Gated at 12
    /// vertices.
    pub fn all_transition_systems(&self) -> Result<Vec<TransitionSystem>> {
        gate("vertices for transition enumeration", 12, self.n())?;
        let n = self.n();
        let total = 3usize.pow(n as u32);
        Ok((0..total)
            .map(|mut code| {
                let mut t = vec![0u8; n];
                for slot in t.iter_mut().rev() {
                    *slot = (code % 3) as u8;
                    code /= 3;
                }
                t
            })
            .collect())
    }

    /// Follows transitions to split the edges into closed trails.
    pub fn partition_from_transitions(&self, t: &[u8]) -> Result<CircuitPartition> {
        if t.len() != self.n() {
            return Err(Error::DimensionMismatch {
                expected: self.n(),
                found: t.len(),
            });
        }
        if let Some(v) = t.iter().position(|&p| p > 2) {
            return Err(Error::InvalidTransition(self.graph.label(v).to_string()));
        }
        let hn = self.half_edge_count();
        let mut circuit_of = vec![usize::MAX; hn];
        let mut circuits: Vec<Vec<usize>> = Vec::new();
        for start in 0..hn {
            if circuit_of[start] != usize::MAX {
                continue;
            }
            let id = circuits.len();
            let mut trail = Vec::new();
            let mut h = start;
            loop {
                trail.push(h);
                circuit_of[h] = id;
                circuit_of[h ^ 1] = id;
                h = self.partner(t, h ^ 1);
                if h == start {
                    break;
                }
            }
            circuits.push(trail);
        }
        Ok(CircuitPartition {
            transitions: t.to_vec(),
            circuits,
            circuit_of,
        })
    }

    /// An Euler system: start from pairing 0 everywhere and, while there are
    /// more trails than components, re-pair the first vertex where two
    /// different trails meet so that they merge.
    pub fn euler_system(&self) -> Result<EulerSystem> {
        let target = self.component_count();
        let mut t = vec![0u8; self.n()];
        let mut p = self.partition_from_transitions(&t)?;
        while p.len() > target {
            let v = (0..self.n())
                .find(|&v| {
                    let hs = self.incident[v];
                    let c0 = p.circuit_of[hs[0]];
                    hs.iter().any(|&h| p.circuit_of[h] != c0)
                })
                .ok_or_else(|| Error::Invariant("no vertex joins two trails".into()))?;
            t[v] = (t[v] + 1) % 3;
            p = self.partition_from_transitions(&t)?;
        }
        Ok(EulerSystem(p))
    }

    /// `C ∗ v`: the orientation-inconsistent transition at `v`.
    pub fn kappa(&self, c: &EulerSystem, v: impl VertexRef) -> Result<EulerSystem> {
        let v = self.index_of(v)?;
        let mut t = c.0.transitions.clone();
        t[v] = c.psi_pairing(self, v);
        let p = self.partition_from_transitions(&t)?;
        if p.len() != self.component_count() {
            return Err(Error::Invariant("kappa produced a non-Euler system".into()));
        }
        Ok(EulerSystem(p))
    }

    pub fn euler_system_from_transitions(&self, t: &[u8]) -> Result<EulerSystem> {
        let p = self.partition_from_transitions(t)?;
        if p.len() != self.component_count() {
            return Err(Error::Precondition("transition system is not an Euler system".into()));
        }
        Ok(EulerSystem(p))
    }

    /// An Euler system that disagrees with `p` at every vertex: repeatedly
    /// apply `κ` at a vertex where the two agree.
    pub fn compatible_euler_system(&self, p: &CircuitPartition) -> Result<EulerSystem> {
        let mut c = self.euler_system()?;
        let mut fixed = vec![false; self.n()];
        while let Some(v) = (0..self.n()).find(|&v| c.0.transitions[v] == p.transitions[v]) {
            if fixed[v] {
                return Err(Error::Invariant("kappa revisited a vertex".into()));
            }
            c = self.kappa(&c, v)?;
            fixed[v] = true;
        }
        Ok(c)
    }

    /// `φ`, `χ` or `ψ` for the transition of `p` at `v`, relative to `c`.
    pub fn transition_type(&self, c: &EulerSystem, p: &CircuitPartition, v: impl VertexRef) -> Result<TransitionType> {
        let v = self.index_of(v)?;
        Ok(c.type_of(self, p.transitions[v], v))
    }

    /// `ℐ(C)` with `φ` vertices removed and `ψ` vertices looped.
    pub fn relative_interlacement(&self, c: &EulerSystem, p: &CircuitPartition) -> Result<LoopedSimpleGraph> {
        let mut full = self.interlacement(c);
        let mut keep = Vec::new();
        for v in 0..self.n() {
            match c.type_of(self, p.transitions[v], v) {
                TransitionType::Phi => {}
                TransitionType::Chi => keep.push(v),
                TransitionType::Psi => {
                    full.set_loop(v, true)?;
                    keep.push(v);
                }
            }
        }
        full.induced(keep)
    }

    /// `ℐ(C)`: `v ≠ w` adjacent iff they alternate on a circuit of `C`.
    pub fn interlacement(&self, c: &EulerSystem) -> LoopedSimpleGraph {
        let mut g = LoopedSimpleGraph::new(self.labels().to_vec()).expect("labels are distinct");
        for circuit in &c.0.circuits {
            let mut pos: Vec<Vec<usize>> = vec![Vec::new(); self.n()];
            for (i, &h) in circuit.iter().enumerate() {
                pos[self.vertex_of(h)].push(i);
            }
            let on: Vec<usize> = (0..self.n()).filter(|&v| pos[v].len() == 2).collect();
            for (a, &v) in on.iter().enumerate() {
                for &w in &on[a + 1..] {
                    let (p1, p2) = (pos[v][0], pos[v][1]);
                    let inside = pos[w].iter().filter(|&&q| p1 < q && q < p2).count();
                    if inside == 1 {
                        g.add_edge(v, w).expect("valid indices");
                    }
                }
            }
        }
        g
    }

    /// `Tch(P)`: a vertex `t<i>` per trail, an edge per vertex of `F`
    /// (labelled like it) joining the trails that pass through it.
    pub fn touch_graph(&self, p: &CircuitPartition) -> MultiGraph {
        let labels: Vec<String> = (0..p.len()).map(|i| format!("t{i}")).collect();
        let mut m = MultiGraph::new(labels).expect("distinct labels");
        for v in 0..self.n() {
            let [a, b] = p.passes_at(self, v);
            m.add_labeled_edge(a, b, self.graph.label(v)).expect("valid indices");
        }
        m
    }
}

/// Classification of a transition relative to an oriented Euler system.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TransitionType {
    /// Follows the Euler system.
    Phi,
    /// The other orientation-consistent transition.
    Chi,
    /// Pairs the two in-directed half-edges.
    Psi,
}

impl fmt::Display for TransitionType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TransitionType::Phi => "phi",
            TransitionType::Chi => "chi",
            TransitionType::Psi => "psi",
        })
    }
}

/// A transition system together with its closed trails. Each trail is the
/// list of half-edges it leaves along, starting from its smallest one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircuitPartition {
    transitions: TransitionSystem,
    circuits: Vec<Vec<usize>>,
    circuit_of: Vec<usize>,
}

impl CircuitPartition {
    pub fn transitions(&self) -> &[u8] {
        &self.transitions
    }

    pub fn circuits(&self) -> &[Vec<usize>] {
        &self.circuits
    }

    /// `|P|`.
    pub fn len(&self) -> usize {
        self.circuits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.circuits.is_empty()
    }

    pub fn circuit_of_half_edge(&self, h: usize) -> usize {
        self.circuit_of[h]
    }

    /// Trail index of each of the two passes through `v`.
    pub fn passes_at(&self, f: &FourRegularGraph, v: usize) -> [usize; 2] {
        let hs = f.incident[v];
        let mate = PARTNER[self.transitions[v] as usize];
        let first = self.circuit_of[hs[0]];
        let other_slot = (1..4).find(|&s| s != mate[0]).expect("four slots");
        [first, self.circuit_of[hs[other_slot]]]
    }

    /// Edge indices of each trail.
    pub fn circuit_edges(&self) -> Vec<Vec<usize>> {
        self.circuits.iter().map(|c| c.iter().map(|h| h / 2).collect()).collect()
    }
}

/// A circuit partition with one trail per connected component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerSystem(CircuitPartition);

impl EulerSystem {
    pub fn partition(&self) -> &CircuitPartition {
        &self.0
    }

    pub fn transitions(&self) -> &[u8] {
        &self.0.transitions
    }

    pub fn circuits(&self) -> &[Vec<usize>] {
        &self.0.circuits
    }

    /// Whether `h` is left along (rather than arrived along) in the stored
    /// orientation.
    fn is_out(&self, h: usize) -> bool {
        self.0.circuits[self.0.circuit_of[h]].contains(&h)
    }

    fn in_out_at(&self, f: &FourRegularGraph, v: usize, reverse: bool) -> ([usize; 2], [usize; 2]) {
        let mut ins = Vec::with_capacity(2);
        let mut outs = Vec::with_capacity(2);
        for (slot, &h) in f.incident[v].iter().enumerate() {
            if self.is_out(h) != reverse {
                outs.push(slot);
            } else {
                ins.push(slot);
            }
        }
        ([ins[0], ins[1]], [outs[0], outs[1]])
    }

    /// The orientation-inconsistent pairing at `v`: in with in, out with out.
    pub fn psi_pairing(&self, f: &FourRegularGraph, v: usize) -> u8 {
        let (ins, _) = self.in_out_at(f, v, false);
        pairing_of(ins[0], ins[1])
    }

    fn type_of(&self, f: &FourRegularGraph, pairing: u8, v: usize) -> TransitionType {
        let t = self.type_with_orientation(f, pairing, v, false);
        debug_assert_eq!(t, self.type_with_orientation(f, pairing, v, true));
        t
    }

    /// Classifies by walking in along an in-directed half-edge under the
    /// stored orientation, or the reversed one.
    pub fn type_with_orientation(&self, f: &FourRegularGraph, pairing: u8, v: usize, reverse: bool) -> TransitionType {
        let (ins, outs) = self.in_out_at(f, v, reverse);
        let mate = PARTNER[pairing as usize][ins[0]];
        if mate == ins[1] {
            return TransitionType::Psi;
        }
        // where the Euler system leaves after arriving along ins[0]
        let euler_mate = PARTNER[self.0.transitions[v] as usize][ins[0]];
        debug_assert!(outs.contains(&euler_mate));
        if mate == euler_mate {
            TransitionType::Phi
        } else {
            TransitionType::Chi
        }
    }
}

/// A 4-regular graph built from a looped graph `g` with a distinguished
/// circuit partition whose touch-graph is `g`.
#[derive(Clone, Debug)]
pub struct Realization {
    pub graph: FourRegularGraph,
    pub partition: CircuitPartition,
    /// `circuit_vertex[i]` is the vertex of `g` that trail `i` stands for.
    pub circuit_vertex: Vec<usize>,
}

impl Realization {
    /// `Tch(P)` with each trail named after its vertex of `g`.
    pub fn touch_graph_in(&self, g: &LoopedSimpleGraph) -> Result<MultiGraph> {
        let t = self.graph.touch_graph(&self.partition);
        let mut m = MultiGraph::new(g.labels().to_vec())?;
        for e in t.edges() {
            m.add_labeled_edge(self.circuit_vertex[e.u], self.circuit_vertex[e.v], e.label.clone())?;
        }
        Ok(m)
    }
}

/// Builds a 4-regular graph `F` and circuit partition `P` with
/// `Tch(P) ≅ g`.
///
/// `F` gets a vertex `u~w` for each edge `uw` of `g`. Each vertex `x` of
/// `g` gets a closed trail through its edge-vertices in label order. For a
/// loop at `x`, a vertex `x~x` carrying a loop is spliced into the first
/// edge of `x`'s trail, or, if `x` has no trail yet, a figure eight is
/// added.
pub fn realize_touch_graph(g: &LoopedSimpleGraph) -> Result<Realization> {
    if let Some(v) = (0..g.n()).find(|&v| g.is_isolated(v) && !g.is_looped(v)) {
        return Err(Error::Precondition(format!(
            "vertex `{}` is isolated and unlooped",
            g.label(v)
        )));
    }
    struct Builder {
        labels: Vec<String>,
        edges: Vec<(usize, usize)>,
        owner: Vec<usize>,
        // per F vertex: pairs of half-edges that the partition joins
        pairs: Vec<Vec<(usize, usize)>>,
    }
    impl Builder {
        fn vertex(&mut self, label: String) -> usize {
            self.labels.push(label);
            self.pairs.push(Vec::new());
            self.labels.len() - 1
        }
        fn edge(&mut self, a: usize, b: usize, owner: usize) -> usize {
            self.edges.push((a, b));
            self.owner.push(owner);
            self.edges.len() - 1
        }
    }
    let mut b = Builder {
        labels: Vec::new(),
        edges: Vec::new(),
        owner: Vec::new(),
        pairs: Vec::new(),
    };

    // Step 1
    let mut edge_vertex = std::collections::BTreeMap::new();
    for u in 0..g.n() {
        for w in g.neighbors(u) {
            if u < w {
                let id = b.vertex(format!("{}~{}", g.label(u), g.label(w)));
                edge_vertex.insert((u, w), id);
            }
        }
    }
    let mut first_edge = vec![None; g.n()];
    for x in 0..g.n() {
        let cyc: Vec<usize> = g
            .neighbors(x)
            .into_iter()
            .map(|w| edge_vertex[&(x.min(w), x.max(w))])
            .collect();
        let d = cyc.len();
        if d == 0 {
            continue;
        }
        let ids: Vec<usize> = (0..d).map(|i| b.edge(cyc[i], cyc[(i + 1) % d], x)).collect();
        first_edge[x] = Some(ids[0]);
        for i in 0..d {
            // trail arrives at cyc[i+1] along ids[i] (end 1), leaves along ids[i+1] (end 0)
            let next = (i + 1) % d;
            b.pairs[cyc[next]].push((2 * ids[i] + 1, 2 * ids[next]));
        }
    }

    // Step 2
    for x in g.looped_vertices() {
        let y = b.vertex(format!("{}~{}", g.label(x), g.label(x)));
        match first_edge[x] {
            None => {
                let l1 = b.edge(y, y, x);
                let l2 = b.edge(y, y, x);
                b.pairs[y].push((2 * l1 + 1, 2 * l2));
                b.pairs[y].push((2 * l2 + 1, 2 * l1));
                first_edge[x] = Some(l1);
            }
            Some(e) => {
                let (a, bb) = b.edges[e];
                b.edges[e] = (a, y);
                let tail = b.edge(y, bb, x);
                for p in b.pairs[bb].iter_mut() {
                    for h in [&mut p.0, &mut p.1] {
                        if *h == 2 * e + 1 {
                            *h = 2 * tail + 1;
                        }
                    }
                }
                let lp = b.edge(y, y, x);
                b.pairs[y].push((2 * e + 1, 2 * lp));
                b.pairs[y].push((2 * lp + 1, 2 * tail));
            }
        }
    }

    let mut mg = MultiGraph::new(b.labels.clone())?;
    for &(u, v) in &b.edges {
        mg.add_edge(u, v)?;
    }
    let f = FourRegularGraph::new(mg)?;
    let mut t = vec![0u8; f.n()];
    for (v, ps) in b.pairs.iter().enumerate() {
        let (h1, h2) = ps.first().copied().ok_or_else(|| Error::Invariant("vertex without transition".into()))?;
        t[v] = f.pairing_joining(v, h1, h2)?;
    }
    let p = f.partition_from_transitions(&t)?;
    let mut circuit_vertex = Vec::with_capacity(p.len());
    for edges in p.circuit_edges() {
        let o = b.owner[edges[0]];
        if edges.iter().any(|&e| b.owner[e] != o) {
            return Err(Error::Invariant("distinguished trail mixes owners".into()));
        }
        circuit_vertex.push(o);
    }
    Ok(Realization {
        graph: f,
        partition: p,
        circuit_vertex,
    })
}

/// Builds the multigraph with `loops[i]` loops at vertex `i` and
/// `mult[i][j]` parallel edges between `i < j`.
pub fn multigraph_from_multiplicities(loops: &[usize], mult: &[Vec<usize>]) -> MultiGraph {
    let n = loops.len();
    let mut g = MultiGraph::new(default_labels(n)).expect("distinct labels");
    for i in 0..n {
        for _ in 0..loops[i] {
            g.add_edge(i, i).expect("valid");
        }
        for j in i + 1..n {
            for _ in 0..mult[i][j] {
                g.add_edge(i, j).expect("valid");
            }
        }
    }
    g
}

/// Every connected 4-regular multigraph on `n` vertices, one per
/// isomorphism class. Gated at 6 vertices.
pub fn connected_four_regular(n: usize) -> Result<Vec<FourRegularGraph>> {
    gate("vertices for 4-regular enumeration", 6, n)?;
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut loops = vec![0usize; n];
    let mut mult = vec![vec![0usize; n]; n];
    enumerate_multiplicities(0, 1, n, &mut loops, &mut mult, &mut |loops, mult| {
        let g = multigraph_from_multiplicities(loops, mult);
        if !g.is_connected() {
            return;
        }
        if seen.insert(canonical_code(loops, mult)) {
            out.push(FourRegularGraph::new(g).expect("degrees are 4"));
        }
    });
    Ok(out)
}

fn degree(i: usize, loops: &[usize], mult: &[Vec<usize>]) -> usize {
    2 * loops[i] + (0..loops.len()).filter(|&j| j != i).map(|j| mult[i.min(j)][i.max(j)]).sum::<usize>()
}

fn enumerate_multiplicities(
    i: usize,
    j: usize,
    n: usize,
    loops: &mut Vec<usize>,
    mult: &mut Vec<Vec<usize>>,
    emit: &mut dyn FnMut(&[usize], &[Vec<usize>]),
) {
    if i == n {
        emit(loops, mult);
        return;
    }
    if j == n {
        // all pairs (i, ·) fixed; loops at i fill the remaining degree
        let d = degree(i, loops, mult);
        if d <= 4 && (4 - d).is_multiple_of(2) {
            loops[i] = (4 - d) / 2;
            enumerate_multiplicities(i + 1, i + 2, n, loops, mult, emit);
            loops[i] = 0;
        }
        return;
    }
    for m in 0..=4 {
        mult[i][j] = m;
        if degree(i, loops, mult) <= 4 && degree(j, loops, mult) <= 4 {
            enumerate_multiplicities(i, j + 1, n, loops, mult, emit);
        }
    }
    mult[i][j] = 0;
}

fn canonical_code(loops: &[usize], mult: &[Vec<usize>]) -> Vec<usize> {
    let n = loops.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<usize>> = None;
    permute_all(&mut perm, 0, &mut |p| {
        let mut code = Vec::with_capacity(n * n);
        for i in 0..n {
            code.push(loops[p[i]]);
            for j in i + 1..n {
                let (a, b) = (p[i].min(p[j]), p[i].max(p[j]));
                code.push(mult[a][b]);
            }
        }
        if best.as_ref().is_none_or(|b| code < *b) {
            best = Some(code);
        }
    });
    best.unwrap_or_default()
}

fn permute_all(p: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
    if k == p.len() {
        f(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute_all(p, k + 1, f);
        p.swap(k, i);
    }
}

/// A random 4-regular multigraph by pairing `4n` stubs uniformly.
pub fn random_four_regular<R: Rng + ?Sized>(n: usize, rng: &mut R) -> FourRegularGraph {
    let mut stubs: Vec<usize> = (0..n).flat_map(|v| [v; 4]).collect();
    stubs.shuffle(rng);
    let mut g = MultiGraph::new(default_labels(n)).expect("distinct labels");
    for pair in stubs.chunks(2) {
        g.add_edge(pair[0], pair[1]).expect("valid");
    }
    FourRegularGraph::new(g).expect("every vertex has four stubs")
}

/// The adjacency matrix of `ℐ_P(C)` padded to all of `V(F)` (removed
/// vertices become zero rows and columns).
pub fn padded_adjacency(f: &FourRegularGraph, g: &LoopedSimpleGraph) -> BitMatrix {
    let pos: Vec<usize> = g
        .labels()
        .iter()
        .map(|l| f.index_of(l.as_str()).expect("subgraph labels come from F"))
        .collect();
    let mut m = BitMatrix::zeros(f.n(), f.n());
    for i in 0..g.n() {
        for j in 0..g.n() {
            if g.adjacency().get(i, j) {
                m.set(pos[i], pos[j], true);
            }
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    fn figure_eight() -> FourRegularGraph {
        let mut g = MultiGraph::new(["v"]).unwrap();
        g.add_edge("v", "v").unwrap();
        g.add_edge("v", "v").unwrap();
        FourRegularGraph::new(g).unwrap()
    }

    fn quad_parallel() -> FourRegularGraph {
        let mut g = MultiGraph::new(["v", "w"]).unwrap();
        for _ in 0..4 {
            g.add_edge("v", "w").unwrap();
        }
        FourRegularGraph::new(g).unwrap()
    }

    #[test]
    fn figure_eight_transitions() {
        let f = figure_eight();
        let sizes: Vec<usize> = (0..3).map(|t| f.partition_from_transitions(&[t]).unwrap().len()).collect();
        assert_eq!(sizes, vec![2, 1, 1]);
        let c = f.euler_system().unwrap();
        assert_eq!(c.circuits(), &[vec![0, 3]]);
        assert_eq!(c.transitions(), &[1]);
        let i = f.interlacement(&c);
        assert_eq!(i.n(), 1);
        assert!(!i.is_looped(0));
    }

    #[test]
    fn figure_eight_touch_graph() {
        let f = figure_eight();
        let split = f.partition_from_transitions(&[0]).unwrap();
        let t = f.touch_graph(&split);
        assert_eq!((t.n(), t.edges().len()), (2, 1));
        assert_ne!(t.edges()[0].u, t.edges()[0].v);
        let c = f.compatible_euler_system(&split).unwrap();
        assert_ne!(c.transitions()[0], 0);
        assert_ne!(f.transition_type(&c, &split, 0).unwrap(), TransitionType::Phi);
    }

    #[test]
    fn parallel_edges_alternate() {
        let f = quad_parallel();
        let c = f.euler_system().unwrap();
        assert_eq!(c.circuits()[0].len(), 4);
        let i = f.interlacement(&c);
        let _ = i.is_adjacent(0, 1);
        // the Euler circuit visits v, w, v, w in some rotation
        let seq: Vec<usize> = c.circuits()[0].iter().map(|&h| f.vertex_of(h)).collect();
        assert!(seq == vec![0, 1, 0, 1] || seq == vec![1, 0, 1, 0]);
        assert!(i.is_adjacent(0, 1));
    }

    #[test]
    fn own_partition_is_all_phi() {
        let f = quad_parallel();
        let c = f.euler_system().unwrap();
        let p = c.partition().clone();
        for v in 0..f.n() {
            assert_eq!(f.transition_type(&c, &p, v).unwrap(), TransitionType::Phi);
        }
        assert_eq!(f.relative_interlacement(&c, &p).unwrap().n(), 0);
        let k = f.kappa(&c, 0).unwrap();
        assert_eq!(f.transition_type(&c, k.partition(), 0).unwrap(), TransitionType::Psi);
        assert_eq!(f.kappa(&k, 0).unwrap().transitions(), c.transitions());
    }

    #[test]
    fn not_four_regular() {
        let mut g = MultiGraph::new(["a", "b"]).unwrap();
        g.add_edge("a", "b").unwrap();
        assert!(matches!(FourRegularGraph::new(g), Err(Error::NotFourRegular { .. })));
    }

    #[test]
    fn realize_small_graphs() {
        let mut g = LoopedSimpleGraph::new(["x"]).unwrap();
        g.set_loop("x", true).unwrap();
        let r = realize_touch_graph(&g).unwrap();
        assert_eq!(r.graph.n(), 1);
        assert_eq!(r.partition.len(), 1);
        assert_eq!(r.touch_graph_in(&g).unwrap().simplify(), g);

        let mut e = LoopedSimpleGraph::new(["u", "v"]).unwrap();
        e.add_edge("u", "v").unwrap();
        let r = realize_touch_graph(&e).unwrap();
        assert_eq!(r.graph.n(), 1);
        assert_eq!(r.partition.len(), 2);
        assert_eq!(r.touch_graph_in(&e).unwrap().simplify(), e);

        let lonely = LoopedSimpleGraph::new(["u"]).unwrap();
        assert!(matches!(realize_touch_graph(&lonely), Err(Error::Precondition(_))));
    }

    #[test]
    fn corpus_sizes() {
        assert_eq!(connected_four_regular(1).unwrap().len(), 1);
        // two vertices: 4 parallel edges, or 2 parallel edges plus a loop at each end
        assert_eq!(connected_four_regular(2).unwrap().len(), 2);
    }
}
