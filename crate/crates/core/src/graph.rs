//! Looped simple graphs (adjacency-matrix view) and multigraphs.

use std::collections::BTreeSet;
use std::fmt;

use rand::Rng;

use crate::error::{gate, Error, Result};
use crate::gf2::BitMatrix;

/// Something that names a vertex: an index or a label.
pub trait VertexRef {
    fn resolve(&self, labels: &[String]) -> Result<usize>;
}

impl VertexRef for usize {
    fn resolve(&self, labels: &[String]) -> Result<usize> {
        if *self < labels.len() {
            Ok(*self)
        } else {
            Err(Error::UnknownVertex(self.to_string()))
        }
    }
}

impl VertexRef for &str {
    fn resolve(&self, labels: &[String]) -> Result<usize> {
        labels
            .iter()
            .position(|l| l == self)
            .ok_or_else(|| Error::UnknownVertex(self.to_string()))
    }
}

impl VertexRef for String {
    fn resolve(&self, labels: &[String]) -> Result<usize> {
        self.as_str().resolve(labels)
    }
}

impl VertexRef for &String {
    fn resolve(&self, labels: &[String]) -> Result<usize> {
        self.as_str().resolve(labels)
    }
}

fn check_distinct(labels: &[String]) -> Result<()> {
    let mut seen = BTreeSet::new();
    for l in labels {
        if !seen.insert(l.as_str()) {
            return Err(Error::DuplicateLabel(l.clone()));
        }
    }
    Ok(())
}

/// `a`, `b`, ... for small graphs, `v0`, `v1`, ... otherwise.
pub fn default_labels(n: usize) -> Vec<String> {
    if n <= 26 {
        (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect()
    } else {
        (0..n).map(|i| format!("v{i}")).collect()
    }
}

/// The three graphs G(v), G(v,ℓ), G(v,ℓi) attached to a vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VariantKind {
    /// v unlooped, edges kept.
    Plain,
    /// v looped, edges kept.
    Loop,
    /// v looped and isolated.
    LoopIsolate,
}

impl VariantKind {
    pub const ALL: [VariantKind; 3] = [VariantKind::Plain, VariantKind::Loop, VariantKind::LoopIsolate];

    pub fn name(self) -> &'static str {
        match self {
            VariantKind::Plain => "plain",
            VariantKind::Loop => "loop",
            VariantKind::LoopIsolate => "loop_isolate",
        }
    }
}

impl fmt::Display for VariantKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Pivot flavours on graphs: both are local complementation, defined on
/// looped and unlooped vertices respectively.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PivotKind {
    Pivot,
    DualPivot,
}

/// A graph with at most one loop per vertex and no parallel edges, stored
/// as its symmetric GF(2) adjacency matrix (diagonal = loops).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LoopedSimpleGraph {
    labels: Vec<String>,
    adj: BitMatrix,
}

impl LoopedSimpleGraph {
    /// Edgeless, loopless graph on the given labels.
    pub fn new<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        check_distinct(&labels)?;
        let n = labels.len();
        Ok(LoopedSimpleGraph {
            labels,
            adj: BitMatrix::zeros(n, n),
        })
    }

    pub fn with_default_labels(n: usize) -> Self {
        Self::new(default_labels(n)).expect("default labels are distinct")
    }

    pub fn from_matrix(labels: Vec<String>, adj: BitMatrix) -> Result<Self> {
        check_distinct(&labels)?;
        if adj.rows() != labels.len() || adj.cols() != labels.len() {
            return Err(Error::DimensionMismatch {
                expected: labels.len(),
                found: if adj.rows() != labels.len() {
                    adj.rows()
                } else {
                    adj.cols()
                },
            });
        }
        if !adj.is_symmetric() {
            return Err(Error::Precondition("adjacency matrix must be symmetric".into()));
        }
        Ok(LoopedSimpleGraph { labels, adj })
    }

    /// Decodes the `n(n+1)/2`-bit code used by [`Self::all`]: bits run over
    /// pairs `(i, j)` with `i ≤ j` in row-major order, `i = j` being a loop.
    pub fn from_code(n: usize, code: u64) -> Self {
        let mut g = Self::with_default_labels(n);
        let mut bit = 0;
        for i in 0..n {
            for j in i..n {
                if (code >> bit) & 1 == 1 {
                    g.adj.set(i, j, true);
                    g.adj.set(j, i, true);
                }
                bit += 1;
            }
        }
        g
    }

    /// Every looped simple graph on `n` labelled vertices (`2^(n(n+1)/2)` of
    /// them). Gated at `n ≤ 6`.
    pub fn all(n: usize) -> Result<impl Iterator<Item = LoopedSimpleGraph>> {
        gate("exhaustive graph enumeration size", 6, n)?;
        let bits = n * (n + 1) / 2;
        Ok((0u64..1 << bits).map(move |c| Self::from_code(n, c)))
    }

    /// Each loop and each edge present independently with probability 1/2.
    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        Self::random_with(n, 0.5, 0.5, rng)
    }

    pub fn random_with<R: Rng + ?Sized>(n: usize, p_loop: f64, p_edge: f64, rng: &mut R) -> Self {
        let mut g = Self::with_default_labels(n);
        for i in 0..n {
            if rng.gen_bool(p_loop) {
                g.adj.set(i, i, true);
            }
            for j in i + 1..n {
                if rng.gen_bool(p_edge) {
                    g.adj.set(i, j, true);
                    g.adj.set(j, i, true);
                }
            }
        }
        g
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn index_of(&self, v: impl VertexRef) -> Result<usize> {
        v.resolve(&self.labels)
    }

    pub fn adjacency(&self) -> &BitMatrix {
        &self.adj
    }

    pub fn is_looped(&self, v: usize) -> bool {
        self.adj.get(v, v)
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        u != v && self.adj.get(u, v)
    }

    /// Neighbours other than `v` itself, ascending.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        self.adj.row(v).iter_ones().filter(|&w| w != v).collect()
    }

    /// No non-loop edges at `v`.
    pub fn is_isolated(&self, v: usize) -> bool {
        self.neighbors(v).is_empty()
    }

    pub fn looped_vertices(&self) -> Vec<usize> {
        (0..self.n()).filter(|&v| self.is_looped(v)).collect()
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n()).map(|v| self.neighbors(v).len()).sum::<usize>() / 2
    }

    pub fn set_loop(&mut self, v: impl VertexRef, looped: bool) -> Result<()> {
        let v = self.index_of(v)?;
        self.adj.set(v, v, looped);
        Ok(())
    }

    /// Sets adjacency of `u` and `w`; `u = w` sets the loop.
    pub fn set_edge(&mut self, u: impl VertexRef, w: impl VertexRef, present: bool) -> Result<()> {
        let u = self.index_of(u)?;
        let w = self.index_of(w)?;
        self.adj.set(u, w, present);
        self.adj.set(w, u, present);
        Ok(())
    }

    pub fn add_edge(&mut self, u: impl VertexRef, w: impl VertexRef) -> Result<()> {
        self.set_edge(u, w, true)
    }

    /// `G^v`: toggle the loop on every neighbour of `v` and toggle adjacency
    /// between every pair of distinct neighbours.
    pub fn local_complement(&self, v: impl VertexRef) -> Result<Self> {
        let v = self.index_of(v)?;
        let nbrs = self.neighbors(v);
        let mut g = self.clone();
        for &a in &nbrs {
            for &b in &nbrs {
                // covers the diagonal (a = b) and both (a,b), (b,a)
                g.adj.flip(a, b);
            }
        }
        Ok(g)
    }

    /// Applies local complementation at each vertex in turn.
    pub fn local_complement_seq<V: VertexRef>(&self, seq: impl IntoIterator<Item = V>) -> Result<Self> {
        let mut g = self.clone();
        for v in seq {
            g = g.local_complement(v)?;
        }
        Ok(g)
    }

    /// `G + v`: toggle the loop at `v`.
    pub fn loop_complement(&self, v: impl VertexRef) -> Result<Self> {
        let v = self.index_of(v)?;
        let mut g = self.clone();
        g.adj.flip(v, v);
        Ok(g)
    }

    /// `G[S]`, vertices kept in ascending index order.
    pub fn induced<V: VertexRef>(&self, s: impl IntoIterator<Item = V>) -> Result<Self> {
        let mut idx = s
            .into_iter()
            .map(|v| self.index_of(v))
            .collect::<Result<Vec<_>>>()?;
        idx.sort_unstable();
        idx.dedup();
        Ok(self.induced_sorted(&idx))
    }

    fn induced_sorted(&self, idx: &[usize]) -> Self {
        LoopedSimpleGraph {
            labels: idx.iter().map(|&i| self.labels[i].clone()).collect(),
            adj: self.adj.principal_submatrix(idx).expect("indices are valid"),
        }
    }

    /// `G[S]` for a bitmask over vertex indices (n ≤ 64).
    pub fn induced_mask(&self, mask: u64) -> Self {
        let idx: Vec<usize> = (0..self.n()).filter(|&i| (mask >> i) & 1 == 1).collect();
        self.induced_sorted(&idx)
    }

    /// `G − v`.
    pub fn remove_vertex(&self, v: impl VertexRef) -> Result<Self> {
        let v = self.index_of(v)?;
        let idx: Vec<usize> = (0..self.n()).filter(|&i| i != v).collect();
        Ok(self.induced_sorted(&idx))
    }

    /// `G(v)`, `G(v,ℓ)` or `G(v,ℓi)`.
    pub fn variant(&self, v: impl VertexRef, kind: VariantKind) -> Result<Self> {
        let v = self.index_of(v)?;
        let mut g = self.clone();
        match kind {
            VariantKind::Plain => g.adj.set(v, v, false),
            VariantKind::Loop => g.adj.set(v, v, true),
            VariantKind::LoopIsolate => {
                for w in self.neighbors(v) {
                    g.adj.set(v, w, false);
                    g.adj.set(w, v, false);
                }
                g.adj.set(v, v, true);
            }
        }
        Ok(g)
    }

    /// Pivot (looped `v`) or dual pivot (unlooped `v`); both equal `G^v`.
    pub fn pivot_op(&self, v: impl VertexRef, kind: PivotKind) -> Result<Self> {
        let v = self.index_of(v)?;
        match (kind, self.is_looped(v)) {
            (PivotKind::Pivot, false) => Err(Error::Undefined(format!(
                "pivot requires looped vertex `{}`",
                self.labels[v]
            ))),
            (PivotKind::DualPivot, true) => Err(Error::Undefined(format!(
                "dual pivot requires unlooped vertex `{}`",
                self.labels[v]
            ))),
            _ => self.local_complement(v),
        }
    }

    /// Same matrix, new labels.
    pub fn relabeled(&self, labels: Vec<String>) -> Result<Self> {
        Self::from_matrix(labels, self.adj.clone())
    }

    /// Vertex `i` of the result is vertex `order[i]` of `self`.
    pub fn reordered(&self, order: &[usize]) -> Result<Self> {
        let labels = order
            .iter()
            .map(|&i| {
                self.labels
                    .get(i)
                    .cloned()
                    .ok_or(Error::IndexOutOfRange { index: i, size: self.n() })
            })
            .collect::<Result<Vec<_>>>()?;
        let adj = BitMatrix::from_fn(order.len(), order.len(), |i, j| self.adj.get(order[i], order[j]));
        Self::from_matrix(labels, adj)
    }

    /// Nullity of `𝒜(G)[S]`.
    pub fn nullity_of(&self, s: &[usize]) -> Result<usize> {
        Ok(self.adj.principal_submatrix(s)?.nullity())
    }

    /// A bijection `p` with `other.adj[p(i)][p(j)] = self.adj[i][j]`, ignoring
    /// labels. Brute force, gated at 9 vertices.
    pub fn isomorphism(&self, other: &Self) -> Result<Option<Vec<usize>>> {
        gate("graph isomorphism size", 9, self.n().max(other.n()))?;
        if self.n() != other.n() || self.edge_count() != other.edge_count() {
            return Ok(None);
        }
        let key = |g: &Self, v: usize| (g.is_looped(v), g.neighbors(v).len());
        let mut a: Vec<_> = (0..self.n()).map(|v| key(self, v)).collect();
        let mut b: Vec<_> = (0..other.n()).map(|v| key(other, v)).collect();
        a.sort_unstable();
        b.sort_unstable();
        if a != b {
            return Ok(None);
        }
        let n = self.n();
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        fn extend(
            g: &LoopedSimpleGraph,
            h: &LoopedSimpleGraph,
            i: usize,
            map: &mut [usize],
            used: &mut [bool],
        ) -> bool {
            let n = g.n();
            if i == n {
                return true;
            }
            for c in 0..n {
                if used[c]
                    || g.is_looped(i) != h.is_looped(c)
                    || g.neighbors(i).len() != h.neighbors(c).len()
                {
                    continue;
                }
                if (0..i).any(|j| g.adj.get(i, j) != h.adj.get(c, map[j])) {
                    continue;
                }
                map[i] = c;
                used[c] = true;
                if extend(g, h, i + 1, map, used) {
                    return true;
                }
                used[c] = false;
            }
            false
        }
        Ok(extend(self, other, 0, &mut map, &mut used).then_some(map))
    }

    pub fn is_isomorphic(&self, other: &Self) -> Result<bool> {
        Ok(self.isomorphism(other)?.is_some())
    }

    pub fn to_multigraph(&self) -> MultiGraph {
        let mut m = MultiGraph::new(self.labels.clone()).expect("labels already distinct");
        for u in 0..self.n() {
            for w in u..self.n() {
                if self.adj.get(u, w) {
                    m.add_edge(u, w).expect("indices are valid");
                }
            }
        }
        m
    }
}

impl fmt::Debug for LoopedSimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LoopedSimpleGraph {{ labels: {:?}, adj: {:?} }}", self.labels, self.adj)
    }
}

/// Rebuilds the graph from the nullities of its principal submatrices on
/// vertex sets of size one and two.
///
/// Decoding table: `ν({v}) = 0` iff `v` is looped. For a pair, the adjacent
/// value of `ν({v,w})` is 0 unless both ends are looped, in which case the
/// non-adjacent value is 0 and the adjacent value is 1.
pub fn reconstruct_from_nullity_oracle(
    labels: Vec<String>,
    oracle: impl Fn(&[usize]) -> usize,
) -> Result<LoopedSimpleGraph> {
    let mut g = LoopedSimpleGraph::new(labels)?;
    let n = g.n();
    for v in 0..n {
        match oracle(&[v]) {
            0 => g.adj.set(v, v, true),
            1 => {}
            other => {
                return Err(Error::InconsistentOracle(format!(
                    "nullity {other} for singleton `{}`",
                    g.labels[v]
                )))
            }
        }
    }
    for v in 0..n {
        for w in v + 1..n {
            let nu = oracle(&[v, w]);
            let adjacent = match (g.is_looped(v), g.is_looped(w), nu) {
                (false, false, 0) => true,
                (false, false, 2) => false,
                (true, false, 0) | (false, true, 0) => true,
                (true, false, 1) | (false, true, 1) => false,
                (true, true, 1) => true,
                (true, true, 0) => false,
                _ => {
                    return Err(Error::InconsistentOracle(format!(
                        "nullity {nu} for pair `{}`, `{}`",
                        g.labels[v], g.labels[w]
                    )))
                }
            };
            if adjacent {
                g.adj.set(v, w, true);
                g.adj.set(w, v, true);
            }
        }
    }
    Ok(g)
}

/// An edge of a [`MultiGraph`]; `u == v` is a loop.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub label: String,
}

/// A graph that may carry loops and parallel edges. Edges are labelled so
/// they can serve as matroid ground elements.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiGraph {
    labels: Vec<String>,
    edges: Vec<Edge>,
}

impl MultiGraph {
    pub fn new<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        check_distinct(&labels)?;
        Ok(MultiGraph {
            labels,
            edges: Vec::new(),
        })
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn index_of(&self, v: impl VertexRef) -> Result<usize> {
        v.resolve(&self.labels)
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Adds an edge labelled `e<k>` where `k` is its position.
    pub fn add_edge(&mut self, u: impl VertexRef, v: impl VertexRef) -> Result<usize> {
        let label = format!("e{}", self.edges.len());
        self.add_labeled_edge(u, v, label)
    }

    pub fn add_labeled_edge(&mut self, u: impl VertexRef, v: impl VertexRef, label: impl Into<String>) -> Result<usize> {
        let u = self.index_of(u)?;
        let v = self.index_of(v)?;
        self.edges.push(Edge {
            u,
            v,
            label: label.into(),
        });
        Ok(self.edges.len() - 1)
    }

    pub fn edge_labels(&self) -> Vec<String> {
        self.edges.iter().map(|e| e.label.clone()).collect()
    }

    /// Degree with loops counted twice.
    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .map(|e| usize::from(e.u == v) + usize::from(e.v == v))
            .sum()
    }

    /// True when no vertex pair is repeated and no vertex carries two loops.
    pub fn is_simple(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.edges
            .iter()
            .all(|e| seen.insert((e.u.min(e.v), e.u.max(e.v))))
    }

    pub fn simplify(&self) -> LoopedSimpleGraph {
        let mut g = LoopedSimpleGraph::new(self.labels.clone()).expect("labels already distinct");
        for e in &self.edges {
            g.adj.set(e.u, e.v, true);
            g.adj.set(e.v, e.u, true);
        }
        g
    }

    /// Component index per vertex, numbered in order of first vertex.
    pub fn component_ids(&self) -> Vec<usize> {
        let n = self.n();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut c = x;
            while p[c] != r {
                let next = p[c];
                p[c] = r;
                c = next;
            }
            r
        }
        for e in &self.edges {
            let a = find(&mut parent, e.u);
            let b = find(&mut parent, e.v);
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut ids = vec![usize::MAX; n];
        let mut next = 0;
        let mut root_id = vec![usize::MAX; n];
        for v in 0..n {
            let r = find(&mut parent, v);
            if root_id[r] == usize::MAX {
                root_id[r] = next;
                next += 1;
            }
            ids[v] = root_id[r];
        }
        ids
    }

    /// Number of connected components, isolated vertices included.
    pub fn component_count(&self) -> usize {
        self.component_ids().into_iter().max().map_or(0, |m| m + 1)
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k3() -> LoopedSimpleGraph {
        let mut g = LoopedSimpleGraph::new(["a", "b", "c"]).unwrap();
        g.add_edge("a", "b").unwrap();
        g.add_edge("b", "c").unwrap();
        g.add_edge("a", "c").unwrap();
        g
    }

    #[test]
    fn simplify_collapses_parallels_and_loops() {
        let mut m = MultiGraph::new(["a", "b", "c"]).unwrap();
        for (u, v) in [("a", "b"), ("b", "c"), ("a", "c"), ("a", "b")] {
            m.add_edge(u, v).unwrap();
        }
        assert!(!m.is_simple());
        assert_eq!(m.simplify(), k3());

        let mut two_loops = MultiGraph::new(["v"]).unwrap();
        two_loops.add_edge("v", "v").unwrap();
        two_loops.add_edge("v", "v").unwrap();
        let s = two_loops.simplify();
        assert!(s.is_looped(0));
        assert_eq!(two_loops.degree(0), 4);
    }

    #[test]
    fn local_complement_of_triangle() {
        let g = k3().local_complement("a").unwrap();
        assert!(!g.is_looped(0));
        assert!(g.is_looped(1) && g.is_looped(2));
        assert!(!g.is_adjacent(1, 2));
        assert!(g.is_adjacent(0, 1) && g.is_adjacent(0, 2));
        assert_eq!(g.local_complement("a").unwrap(), k3());
    }

    #[test]
    fn local_complement_at_isolated_vertex() {
        let mut g = LoopedSimpleGraph::new(["a", "b"]).unwrap();
        g.set_loop("b", true).unwrap();
        assert_eq!(g.local_complement("a").unwrap(), g);
    }

    #[test]
    fn loop_complement_examples() {
        let g = k3().loop_complement("a").unwrap();
        assert!(g.is_looped(0));
        assert_eq!(g.loop_complement("a").unwrap(), k3());
    }

    #[test]
    fn induced_examples() {
        let g = k3();
        assert_eq!(g.induced(["a", "b", "c"]).unwrap(), g);
        let e = g.remove_vertex("c").unwrap();
        assert_eq!(e.labels(), ["a", "b"]);
        assert!(e.is_adjacent(0, 1));
        assert!(matches!(g.induced(["z"]), Err(Error::UnknownVertex(_))));
    }

    #[test]
    fn variants_of_triangle() {
        let g = k3();
        let k3l = g.variant("a", VariantKind::Loop).unwrap();
        assert_eq!(k3l, g.loop_complement("a").unwrap());
        assert_eq!(k3l.variant("a", VariantKind::Plain).unwrap(), g);
        let iso = g.variant("a", VariantKind::LoopIsolate).unwrap();
        assert!(iso.is_looped(0) && iso.is_isolated(0));
        assert!(iso.is_adjacent(1, 2));
    }

    #[test]
    fn pivot_definedness() {
        let g = k3();
        assert_eq!(
            g.pivot_op("a", PivotKind::DualPivot).unwrap(),
            g.local_complement("a").unwrap()
        );
        assert!(matches!(g.pivot_op("a", PivotKind::Pivot), Err(Error::Undefined(_))));
        let k3l = g.loop_complement("a").unwrap();
        assert_eq!(
            k3l.pivot_op("a", PivotKind::Pivot).unwrap(),
            k3l.local_complement("a").unwrap()
        );
    }

    #[test]
    fn reconstruction_table() {
        let mut g = LoopedSimpleGraph::new(["a", "b", "c", "d"]).unwrap();
        g.set_loop("a", true).unwrap();
        g.set_loop("b", true).unwrap();
        g.add_edge("a", "b").unwrap();
        g.add_edge("c", "d").unwrap();
        g.add_edge("a", "c").unwrap();
        let r = reconstruct_from_nullity_oracle(g.labels().to_vec(), |s| g.nullity_of(s).unwrap()).unwrap();
        assert_eq!(r, g);
        let bad = reconstruct_from_nullity_oracle(vec!["a".into()], |_| 3);
        assert!(matches!(bad, Err(Error::InconsistentOracle(_))));
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(LoopedSimpleGraph::all(4).unwrap().count(), 1024);
        assert_eq!(LoopedSimpleGraph::all(0).unwrap().count(), 1);
    }

    #[test]
    fn isomorphism_ignores_labels() {
        let g = k3().local_complement("a").unwrap();
        let h = k3().local_complement("c").unwrap();
        assert_ne!(g, h);
        assert!(g.is_isomorphic(&h).unwrap());
        assert!(!g.is_isomorphic(&k3()).unwrap());
    }

    #[test]
    fn components() {
        let mut m = MultiGraph::new(["a", "b", "c"]).unwrap();
        m.add_edge("a", "c").unwrap();
        assert_eq!(m.component_ids(), vec![0, 1, 0]);
        assert_eq!(m.component_count(), 2);
    }
}
