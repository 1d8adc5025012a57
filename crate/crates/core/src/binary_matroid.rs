//! Binary matroids stored as their cycle spaces.
//!
//! A binary matroid on `V` is determined by its cycle space `Z(M) ⊆ 2^V`,
//! so that subspace (in canonical form) is the only thing kept. Circuits,
//! rank, bases and so on are derived from it.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use crate::error::{gate, Error, Result};
use crate::gf2::{BitMatrix, BitVector, Subspace};
use crate::graph::{default_labels, MultiGraph};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryMatroid {
    ground: Vec<String>,
    cycles: Subspace,
}

fn check_labels(labels: &[String]) -> Result<()> {
    let mut seen = HashSet::new();
    for l in labels {
        if !seen.insert(l.as_str()) {
            return Err(Error::DuplicateLabel(l.clone()));
        }
    }
    Ok(())
}

impl BinaryMatroid {
    /// The matroid whose circuits are the minimal column dependencies of `a`.
    pub fn from_matrix(a: &BitMatrix, labels: Vec<String>) -> Result<Self> {
        if a.cols() != labels.len() {
            return Err(Error::DimensionMismatch {
                expected: labels.len(),
                found: a.cols(),
            });
        }
        check_labels(&labels)?;
        Ok(BinaryMatroid {
            ground: labels,
            cycles: a.nullspace(),
        })
    }

    pub fn from_subspace(w: Subspace, labels: Vec<String>) -> Result<Self> {
        if w.ambient_dim() != labels.len() {
            return Err(Error::DimensionMismatch {
                expected: labels.len(),
                found: w.ambient_dim(),
            });
        }
        check_labels(&labels)?;
        Ok(BinaryMatroid {
            ground: labels,
            cycles: w,
        })
    }

    /// `U_{n,n}`: no circuits.
    pub fn free(labels: Vec<String>) -> Result<Self> {
        let n = labels.len();
        Self::from_subspace(Subspace::zero(n), labels)
    }

    /// `U_{n,0}`: every element is a loop.
    pub fn all_loops(labels: Vec<String>) -> Result<Self> {
        let n = labels.len();
        Self::from_subspace(Subspace::full(n), labels)
    }

    /// `U_{n,r}` on labels `a, b, ...`, for the binary cases only:
    /// `r ∈ {0, 1, n−1, n}`.
    pub fn uniform(n: usize, r: usize) -> Result<Self> {
        let labels = default_labels(n);
        if r > n {
            return Err(Error::Precondition(format!("U_{{{n},{r}}} needs r ≤ n")));
        }
        if r == n {
            return Self::free(labels);
        }
        if r == 0 {
            return Self::all_loops(labels);
        }
        if r == n - 1 {
            // one circuit: the whole ground set
            return Self::from_subspace(Subspace::span(n, [BitVector::ones(n)])?, labels);
        }
        if r == 1 {
            // every pair is a circuit
            let pairs = (1..n).map(|i| BitVector::from_indices(n, [0, i]));
            return Self::from_subspace(Subspace::span(n, pairs)?, labels);
        }
        Err(Error::Precondition(format!("U_{{{n},{r}}} is not binary")))
    }

    /// `U_{1,1}` on a single named element.
    pub fn coloop(label: impl Into<String>) -> Self {
        Self::free(vec![label.into()]).expect("single label")
    }

    /// `U_{1,0}` on a single named element.
    pub fn loop_element(label: impl Into<String>) -> Self {
        Self::all_loops(vec![label.into()]).expect("single label")
    }

    /// Polygon (cycle) matroid of a multigraph, ground set = edge labels.
    pub fn polygon_matroid(g: &MultiGraph) -> Result<Self> {
        let m = g.edges().len();
        let mut inc = BitMatrix::zeros(g.n(), m);
        for (j, e) in g.edges().iter().enumerate() {
            // a loop flips the same entry twice and leaves a zero column
            inc.flip(e.u, j);
            inc.flip(e.v, j);
        }
        Self::from_matrix(&inc, g.edge_labels())
    }

    pub fn ground(&self) -> &[String] {
        &self.ground
    }

    pub fn size(&self) -> usize {
        self.ground.len()
    }

    pub fn cycle_space(&self) -> &Subspace {
        &self.cycles
    }

    pub fn nullity(&self) -> usize {
        self.cycles.dim()
    }

    pub fn rank(&self) -> usize {
        self.size() - self.nullity()
    }

    pub fn index_of(&self, v: &str) -> Result<usize> {
        self.ground
            .iter()
            .position(|l| l == v)
            .ok_or_else(|| Error::UnknownElement(v.to_string()))
    }

    fn check_index(&self, v: usize) -> Result<()> {
        if v < self.size() {
            Ok(())
        } else {
            Err(Error::UnknownElement(v.to_string()))
        }
    }

    pub fn labels_of(&self, s: &BitVector) -> Vec<String> {
        s.iter_ones().map(|i| self.ground[i].clone()).collect()
    }

    pub fn set_of<'a>(&self, labels: impl IntoIterator<Item = &'a str>) -> Result<BitVector> {
        let mut s = BitVector::zeros(self.size());
        for l in labels {
            s.set(self.index_of(l)?, true);
        }
        Ok(s)
    }

    /// Minimal nonempty supports of cycle-space vectors, sorted by size and
    /// then by element indices. Gated at cycle-space dimension 20.
    pub fn circuits(&self) -> Result<Vec<BitVector>> {
        gate("cycle space dimension for circuit enumeration", 20, self.nullity())?;
        let mut vecs = self.cycles.vectors()?;
        vecs.retain(|v| !v.is_zero());
        vecs.sort_by_cached_key(|v| (v.count_ones(), v.iter_ones().collect::<Vec<_>>()));
        let mut out: Vec<BitVector> = Vec::new();
        for v in vecs {
            if !out.iter().any(|c| c.is_subset_of(&v)) {
                out.push(v);
            }
        }
        Ok(out)
    }

    pub fn circuits_labeled(&self) -> Result<Vec<Vec<String>>> {
        Ok(self.circuits()?.iter().map(|c| self.labels_of(c)).collect())
    }

    /// `r(S) = |S| − dim(Z(M) ∩ 2^S)`.
    pub fn rank_of_set(&self, s: &BitVector) -> Result<usize> {
        if s.len() != self.size() {
            return Err(Error::DimensionMismatch {
                expected: self.size(),
                found: s.len(),
            });
        }
        Ok(s.count_ones() - self.cycles.restrict_to(s).dim())
    }

    pub fn rank_of<'a>(&self, labels: impl IntoIterator<Item = &'a str>) -> Result<usize> {
        self.rank_of_set(&self.set_of(labels)?)
    }

    pub fn is_independent(&self, s: &BitVector) -> Result<bool> {
        Ok(self.rank_of_set(s)? == s.count_ones())
    }

    pub fn dual(&self) -> Self {
        BinaryMatroid {
            ground: self.ground.clone(),
            cycles: self.cycles.orthogonal_complement(),
        }
    }

    fn without(&self, v: usize) -> Vec<String> {
        let mut g = self.ground.clone();
        g.remove(v);
        g
    }

    /// `M − v`: cycles avoiding `v`, with the coordinate dropped.
    pub fn delete(&self, v: usize) -> Result<Self> {
        self.check_index(v)?;
        let mut mask = BitVector::ones(self.size());
        mask.set(v, false);
        Ok(BinaryMatroid {
            ground: self.without(v),
            cycles: self.cycles.restrict_to(&mask).drop_coordinate(v),
        })
    }

    /// `M / v`: the projection of the cycle space forgetting `v`.
    pub fn contract(&self, v: usize) -> Result<Self> {
        self.check_index(v)?;
        Ok(BinaryMatroid {
            ground: self.without(v),
            cycles: self.cycles.drop_coordinate(v),
        })
    }

    pub fn delete_label(&self, v: &str) -> Result<Self> {
        self.delete(self.index_of(v)?)
    }

    pub fn contract_label(&self, v: &str) -> Result<Self> {
        self.contract(self.index_of(v)?)
    }

    /// `M|S`: delete everything outside `s`.
    pub fn restrict(&self, s: &BitVector) -> Result<Self> {
        let mut m = self.clone();
        for v in (0..self.size()).rev() {
            if !s.get(v) {
                m = m.delete(v)?;
            }
        }
        Ok(m)
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        let mine: HashSet<&str> = self.ground.iter().map(String::as_str).collect();
        if let Some(l) = other.ground.iter().find(|l| mine.contains(l.as_str())) {
            return Err(Error::LabelCollision(l.clone()));
        }
        let mut ground = self.ground.clone();
        ground.extend(other.ground.iter().cloned());
        Ok(BinaryMatroid {
            ground,
            cycles: self.cycles.direct_sum(&other.cycles),
        })
    }

    /// `{v}` is a circuit.
    pub fn is_loop(&self, v: usize) -> Result<bool> {
        self.check_index(v)?;
        Ok(self.cycles.contains(&BitVector::from_indices(self.size(), [v])))
    }

    /// No cycle-space vector has `v` in its support.
    pub fn is_coloop(&self, v: usize) -> Result<bool> {
        self.check_index(v)?;
        Ok(self.cycles.basis().iter().all(|b| !b.get(v)))
    }

    /// Same ground set (in any order) and same cycle space.
    pub fn equals(&self, other: &Self) -> bool {
        if self.ground == other.ground {
            return self.cycles == other.cycles;
        }
        match other.with_ground_order(&self.ground) {
            Ok(o) => o.cycles == self.cycles,
            Err(_) => false,
        }
    }

    /// The same matroid with its ground set listed in `order`.
    pub fn with_ground_order(&self, order: &[String]) -> Result<Self> {
        if order.len() != self.size() {
            return Err(Error::DimensionMismatch {
                expected: self.size(),
                found: order.len(),
            });
        }
        check_labels(order)?;
        // element i of self moves to position perm[i]
        let mut perm = vec![0; self.size()];
        for (i, l) in self.ground.iter().enumerate() {
            perm[i] = order
                .iter()
                .position(|o| o == l)
                .ok_or_else(|| Error::UnknownElement(l.clone()))?;
        }
        Ok(BinaryMatroid {
            ground: order.to_vec(),
            cycles: self.cycles.permute(&perm),
        })
    }

    pub fn relabeled(&self, labels: Vec<String>) -> Result<Self> {
        Self::from_subspace(self.cycles.clone(), labels)
    }

    /// A bijection `σ` (element `i` ↦ element `σ[i]` of `other`) carrying
    /// circuits onto circuits, if one exists. Gated at 8 elements.
    pub fn isomorphism(&self, other: &Self) -> Result<Option<Vec<usize>>> {
        gate("matroid isomorphism ground size", 8, self.size().max(other.size()))?;
        let n = self.size();
        if n != other.size() || self.rank() != other.rank() {
            return Ok(None);
        }
        let to_mask = |v: &BitVector| v.to_mask().expect("n ≤ 8");
        let ca: Vec<u64> = self.circuits()?.iter().map(to_mask).collect();
        let cb: Vec<u64> = other.circuits()?.iter().map(to_mask).collect();
        let sizes = |cs: &[u64]| {
            let mut s: Vec<u32> = cs.iter().map(|c| c.count_ones()).collect();
            s.sort_unstable();
            s
        };
        if ca.len() != cb.len() || sizes(&ca) != sizes(&cb) {
            return Ok(None);
        }
        // per-element signature: sorted sizes of the circuits through it
        let signature = |cs: &[u64], e: usize| {
            let mut s: Vec<u32> = cs
                .iter()
                .filter(|c| (*c >> e) & 1 == 1)
                .map(|c| c.count_ones())
                .collect();
            s.sort_unstable();
            s
        };
        let sig_a: Vec<_> = (0..n).map(|e| signature(&ca, e)).collect();
        let sig_b: Vec<_> = (0..n).map(|e| signature(&cb, e)).collect();
        let target: HashSet<u64> = cb.iter().copied().collect();
        // circuits of self grouped by their largest element
        let mut closing: Vec<Vec<u64>> = vec![Vec::new(); n];
        for &c in &ca {
            closing[63 - c.leading_zeros() as usize].push(c);
        }

        struct Search<'a> {
            n: usize,
            sig_a: &'a [Vec<u32>],
            sig_b: &'a [Vec<u32>],
            closing: &'a [Vec<u64>],
            target: &'a HashSet<u64>,
            map: Vec<usize>,
            used: Vec<bool>,
        }
        impl Search<'_> {
            fn image(&self, c: u64) -> u64 {
                let mut out = 0;
                let mut rest = c;
                while rest != 0 {
                    let e = rest.trailing_zeros() as usize;
                    out |= 1 << self.map[e];
                    rest &= rest - 1;
                }
                out
            }
            fn go(&mut self, i: usize) -> bool {
                if i == self.n {
                    return true;
                }
                for c in 0..self.n {
                    if self.used[c] || self.sig_a[i] != self.sig_b[c] {
                        continue;
                    }
                    self.map[i] = c;
                    self.used[c] = true;
                    let ok = self.closing[i].iter().all(|&cc| self.target.contains(&self.image(cc)));
                    if ok && self.go(i + 1) {
                        return true;
                    }
                    self.used[c] = false;
                }
                false
            }
        }
        let mut s = Search {
            n,
            sig_a: &sig_a,
            sig_b: &sig_b,
            closing: &closing,
            target: &target,
            map: vec![0; n],
            used: vec![false; n],
        };
        if !s.go(0) {
            return Ok(None);
        }
        let map = s.map;
        debug_assert_eq!(self.cycles.permute(&map), other.cycles);
        Ok(Some(map))
    }

    pub fn is_isomorphic(&self, other: &Self) -> Result<bool> {
        Ok(self.isomorphism(other)?.is_some())
    }

    /// All bases, as sets, in increasing order of bitmask. Gated at 20
    /// elements.
    pub fn bases(&self) -> Result<Vec<BitVector>> {
        gate("ground size for basis enumeration", 20, self.size())?;
        let n = self.size();
        let r = self.rank();
        let mut out = Vec::new();
        for mask in 0u64..1 << n {
            if mask.count_ones() as usize == r {
                let s = BitVector::from_mask(n, mask);
                if self.is_independent(&s)? {
                    out.push(s);
                }
            }
        }
        Ok(out)
    }

    /// All independent sets, in increasing order of bitmask. Gated at 20
    /// elements.
    pub fn independent_sets(&self) -> Result<Vec<BitVector>> {
        gate("ground size for independent-set enumeration", 20, self.size())?;
        let n = self.size();
        let mut out = Vec::new();
        for mask in 0u64..1 << n {
            let s = BitVector::from_mask(n, mask);
            if self.is_independent(&s)? {
                out.push(s);
            }
        }
        Ok(out)
    }

    /// Circuit-size histogram, handy for summaries.
    pub fn circuit_size_counts(&self) -> Result<BTreeMap<usize, usize>> {
        let mut h = BTreeMap::new();
        for c in self.circuits()? {
            *h.entry(c.count_ones()).or_insert(0) += 1;
        }
        Ok(h)
    }
}

impl fmt::Debug for BinaryMatroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryMatroid {{ ground: {:?}, cycles: {:?} }}", self.ground, self.cycles)
    }
}
