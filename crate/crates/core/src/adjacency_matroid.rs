//! Adjacency matroids `M_A(G)` and their minors, coloops, the trio of
//! variant matroids at a vertex, and the principal vertex tripartition.

use std::fmt;

use crate::binary_matroid::BinaryMatroid;
use crate::error::{Error, Result};
use crate::graph::{LoopedSimpleGraph, VariantKind, VertexRef};

/// The binary matroid represented by the adjacency matrix of `g`.
pub fn adjacency_matroid(g: &LoopedSimpleGraph) -> BinaryMatroid {
    BinaryMatroid::from_matrix(g.adjacency(), g.labels().to_vec()).expect("square matrix with distinct labels")
}

/// `M_A(G(v))`, `M_A(G(v,ℓ))` or `M_A(G(v,ℓi))`.
pub fn variant_matroid(g: &LoopedSimpleGraph, v: impl VertexRef, kind: VariantKind) -> Result<BinaryMatroid> {
    Ok(adjacency_matroid(&g.variant(v, kind)?))
}

/// A contraction computed by local complementation: `result` is
/// `M_A(witness_graph − v)`, and `witness_graph` is the input graph after
/// complementing at each vertex of `lc_sequence` in order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorDerivation {
    pub result: BinaryMatroid,
    pub witness_graph: LoopedSimpleGraph,
    pub lc_sequence: Vec<String>,
}

/// `M_A(G)/v` as the adjacency matroid of a locally complemented graph.
///
/// - `v` looped: `G^v − v`.
/// - `v` unlooped and isolated: `G − v`.
/// - `v` unlooped with an unlooped neighbour `w`: `(G^w)^v − v`.
/// - otherwise, with a looped neighbour `w`: `((G^v)^w)^v − v`.
///
/// The first qualifying neighbour in label order is used.
pub fn contract_via_lc(g: &LoopedSimpleGraph, v: impl VertexRef) -> Result<MinorDerivation> {
    let v = g.index_of(v)?;
    let nbrs = g.neighbors(v);
    let seq: Vec<usize> = if g.is_looped(v) {
        vec![v]
    } else if nbrs.is_empty() {
        vec![]
    } else if let Some(&w) = nbrs.iter().find(|&&w| !g.is_looped(w)) {
        vec![w, v]
    } else {
        vec![v, nbrs[0], v]
    };
    derive_with_sequence(g, v, &seq)
}

/// As [`contract_via_lc`] for an unlooped `v`, but through the given
/// neighbour `w` (unlooped `w` uses `(G^w)^v`, looped `w` uses
/// `((G^v)^w)^v`).
pub fn contract_via_neighbor(g: &LoopedSimpleGraph, v: impl VertexRef, w: impl VertexRef) -> Result<MinorDerivation> {
    let v = g.index_of(v)?;
    let w = g.index_of(w)?;
    if g.is_looped(v) || !g.is_adjacent(v, w) {
        return Err(Error::Precondition(format!(
            "`{}` must be an unlooped vertex adjacent to `{}`",
            g.label(v),
            g.label(w)
        )));
    }
    let seq = if g.is_looped(w) { vec![v, w, v] } else { vec![w, v] };
    derive_with_sequence(g, v, &seq)
}

fn derive_with_sequence(g: &LoopedSimpleGraph, v: usize, seq: &[usize]) -> Result<MinorDerivation> {
    let witness = g.local_complement_seq(seq.iter().copied())?;
    Ok(MinorDerivation {
        result: adjacency_matroid(&witness.remove_vertex(v)?),
        lc_sequence: seq.iter().map(|&i| g.label(i).to_string()).collect(),
        witness_graph: witness,
    })
}

/// `M_A(G) − v` via an induced subgraph: `M_A(G − v)` unless `v` is a
/// triple coloop, in which case deletion equals contraction and the
/// local-complementation route is used.
pub fn delete_via_subgraph(g: &LoopedSimpleGraph, v: impl VertexRef) -> Result<BinaryMatroid> {
    let v = g.index_of(v)?;
    if is_triple_coloop(g, v)? {
        Ok(contract_via_lc(g, v)?.result)
    } else {
        Ok(adjacency_matroid(&g.remove_vertex(v)?))
    }
}

/// Coloop of `M_A(G(v))`, `M_A(G(v,ℓ))` and `M_A(G(v,ℓi))` at once.
pub fn is_triple_coloop(g: &LoopedSimpleGraph, v: impl VertexRef) -> Result<bool> {
    let v = g.index_of(v)?;
    for kind in VariantKind::ALL {
        if !variant_matroid(g, v, kind)?.is_coloop(v)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The cycle-space form of the triple-coloop test:
/// `Z(G(v)) = Z(G(v,ℓ)) ⊊ Z(G(v,ℓi))`.
pub fn is_triple_coloop_by_cycle_spaces(g: &LoopedSimpleGraph, v: impl VertexRef) -> Result<bool> {
    let v = g.index_of(v)?;
    let plain = variant_matroid(g, v, VariantKind::Plain)?;
    let looped = variant_matroid(g, v, VariantKind::Loop)?;
    let iso = variant_matroid(g, v, VariantKind::LoopIsolate)?;
    Ok(plain.cycle_space() == looped.cycle_space()
        && looped.cycle_space().is_subspace_of(iso.cycle_space())
        && looped.nullity() < iso.nullity())
}

/// Which two of the three variant matroids at a vertex coincide.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trio {
    pub equal_pair: [VariantKind; 2],
    pub odd_one: VariantKind,
    /// Nullity of the two equal matroids.
    pub shared_nullity: usize,
    /// Nullity of the odd one; always `shared_nullity + 1`.
    pub odd_nullity: usize,
}

/// Finds the equal pair among `M_A(G(v))`, `M_A(G(v,ℓ))`, `M_A(G(v,ℓi))`
/// and checks that the odd one's cycle space contains the shared one with
/// one extra dimension.
pub fn trio(g: &LoopedSimpleGraph, v: impl VertexRef) -> Result<Trio> {
    let v = g.index_of(v)?;
    let ms = VariantKind::ALL
        .iter()
        .map(|&k| variant_matroid(g, v, k))
        .collect::<Result<Vec<_>>>()?;
    let eq = [ms[0] == ms[1], ms[0] == ms[2], ms[1] == ms[2]];
    let (pair, odd) = match eq {
        [true, false, false] => ([0, 1], 2),
        [false, true, false] => ([0, 2], 1),
        [false, false, true] => ([1, 2], 0),
        _ => {
            return Err(Error::Invariant(format!(
                "variant matroids at `{}` are not exactly two equal",
                g.label(v)
            )))
        }
    };
    let shared = &ms[pair[0]];
    let odd_m = &ms[odd];
    if !shared.cycle_space().is_subspace_of(odd_m.cycle_space()) || odd_m.nullity() != shared.nullity() + 1 {
        return Err(Error::Invariant(format!(
            "odd variant matroid at `{}` does not extend the shared cycle space by one dimension",
            g.label(v)
        )));
    }
    Ok(Trio {
        equal_pair: [VariantKind::ALL[pair[0]], VariantKind::ALL[pair[1]]],
        odd_one: VariantKind::ALL[odd],
        shared_nullity: shared.nullity(),
        odd_nullity: odd_m.nullity(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TripartitionCase {
    /// Coloop of both `M_A(G(v))` and `M_A(G(v,ℓ))`.
    Case1,
    /// Coloop of `M_A(G(v))` only.
    Case2,
    /// Coloop of `M_A(G(v,ℓ))` only.
    Case3,
}

impl TripartitionCase {
    pub fn name(self) -> &'static str {
        match self {
            TripartitionCase::Case1 => "case1",
            TripartitionCase::Case2 => "case2",
            TripartitionCase::Case3 => "case3",
        }
    }
}

impl fmt::Display for TripartitionCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A vertex's case together with the coloop evidence that decided it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Classification {
    pub case: TripartitionCase,
    /// Whether `v` is a coloop of `M_A(G(v))`.
    pub coloop_plain: bool,
    /// Whether `v` is a coloop of `M_A(G(v,ℓ))`.
    pub coloop_loop: bool,
}

pub fn classify_vertex(g: &LoopedSimpleGraph, v: impl VertexRef) -> Result<Classification> {
    let v = g.index_of(v)?;
    let coloop_plain = variant_matroid(g, v, VariantKind::Plain)?.is_coloop(v)?;
    let coloop_loop = variant_matroid(g, v, VariantKind::Loop)?.is_coloop(v)?;
    let case = match (coloop_plain, coloop_loop) {
        (true, true) => TripartitionCase::Case1,
        (true, false) => TripartitionCase::Case2,
        (false, true) => TripartitionCase::Case3,
        (false, false) => {
            return Err(Error::Invariant(format!(
                "`{}` is a coloop of neither M_A(G(v)) nor M_A(G(v,l))",
                g.label(v)
            )))
        }
    };
    Ok(Classification {
        case,
        coloop_plain,
        coloop_loop,
    })
}

/// `classify_vertex` for every vertex, in label order.
pub fn tripartition_report(g: &LoopedSimpleGraph) -> Result<Vec<(String, Classification)>> {
    (0..g.n())
        .map(|v| Ok((g.label(v).to_string(), classify_vertex(g, v)?)))
        .collect()
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
    fn triangle_matroids() {
        let m = adjacency_matroid(&k3());
        assert_eq!(m, BinaryMatroid::uniform(3, 2).unwrap());
        let d = contract_via_lc(&k3(), "a").unwrap();
        assert_eq!(d.lc_sequence, vec!["b", "a"]);
        assert_eq!(d.result, m.contract(0).unwrap());
        assert!(d.result.is_isomorphic(&BinaryMatroid::uniform(2, 1).unwrap()).unwrap());
    }

    #[test]
    fn path_endpoint_deletion() {
        let mut p2 = LoopedSimpleGraph::new(["v", "w"]).unwrap();
        p2.add_edge("v", "w").unwrap();
        let m = adjacency_matroid(&p2);
        assert!(m.circuits().unwrap().is_empty());
        let naive = adjacency_matroid(&p2.remove_vertex("v").unwrap());
        assert_ne!(m.delete(0).unwrap(), naive);
        assert!(is_triple_coloop(&p2, "v").unwrap());
        assert_eq!(delete_via_subgraph(&p2, "v").unwrap(), m.delete(0).unwrap());
    }

    #[test]
    fn trio_on_single_vertex() {
        let g = LoopedSimpleGraph::new(["v"]).unwrap();
        let t = trio(&g, "v").unwrap();
        assert_eq!(t.equal_pair, [VariantKind::Loop, VariantKind::LoopIsolate]);
        assert_eq!(t.odd_one, VariantKind::Plain);
        assert_eq!((t.shared_nullity, t.odd_nullity), (0, 1));
    }

    #[test]
    fn triangle_tripartition() {
        let report = tripartition_report(&k3()).unwrap();
        assert!(report.iter().all(|(_, c)| c.case == TripartitionCase::Case3));
        let t = trio(&k3(), "a").unwrap();
        assert_eq!(t.odd_one, VariantKind::Plain);
    }

    #[test]
    fn unknown_vertex_is_reported() {
        assert!(matches!(classify_vertex(&k3(), "z"), Err(Error::UnknownVertex(_))));
    }
}
