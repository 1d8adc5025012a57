//! Set systems and delta-matroids over small ground sets.
//!
//! A family is a sorted set of `u32` bitmasks over the ground-set indices.
//! Exhaustive operations are gated at 16 ground elements.

use std::collections::BTreeSet;
use std::fmt;

use crate::binary_matroid::BinaryMatroid;
use crate::error::{gate, Error, Result};
use crate::graph::{LoopedSimpleGraph, VertexRef};

pub const MAX_GROUND: usize = 16;

/// `(V, σ)` with `σ` a family of subsets of `V`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SetSystem {
    ground: Vec<String>,
    family: BTreeSet<u32>,
}

/// A single vertex flip.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FlipOp {
    /// `∗`
    Pivot,
    /// `∗̄`
    DualPivot,
    /// `+`
    LoopComplement,
}

fn submasks(mask: u32) -> impl Iterator<Item = u32> {
    // all submasks of `mask`, including 0 and `mask`
    let mut next = Some(mask);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 { None } else { Some((cur - 1) & mask) };
        Some(cur)
    })
}

impl SetSystem {
    pub fn new(ground: Vec<String>, family: impl IntoIterator<Item = u32>) -> Result<Self> {
        gate("set system ground size", MAX_GROUND, ground.len())?;
        let mut seen = BTreeSet::new();
        for l in &ground {
            if !seen.insert(l.as_str()) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        let full = Self::full_mask_for(ground.len());
        let family: BTreeSet<u32> = family.into_iter().collect();
        if let Some(bad) = family.iter().find(|&&y| y & !full != 0) {
            return Err(Error::IndexOutOfRange {
                index: 31 - bad.leading_zeros() as usize,
                size: ground.len(),
            });
        }
        Ok(SetSystem { ground, family })
    }

    /// Builds a system from sets written as label lists.
    pub fn from_label_sets<S: AsRef<str>>(ground: Vec<String>, sets: &[&[S]]) -> Result<Self> {
        let empty = SetSystem::new(ground.clone(), [])?;
        let family = sets
            .iter()
            .map(|s| empty.mask_of(s.iter().map(|x| x.as_ref())))
            .collect::<Result<Vec<_>>>()?;
        SetSystem::new(ground, family)
    }

    /// Every subset of the ground set.
    pub fn power_set(ground: Vec<String>) -> Result<Self> {
        let n = ground.len();
        gate("set system ground size", MAX_GROUND, n)?;
        SetSystem::new(ground, 0..=Self::full_mask_for(n))
    }

    fn full_mask_for(n: usize) -> u32 {
        if n == 0 {
            0
        } else {
            u32::MAX >> (32 - n)
        }
    }

    fn with_family(&self, family: impl IntoIterator<Item = u32>) -> Self {
        SetSystem {
            ground: self.ground.clone(),
            family: family.into_iter().collect(),
        }
    }

    pub fn ground(&self) -> &[String] {
        &self.ground
    }

    pub fn n(&self) -> usize {
        self.ground.len()
    }

    pub fn full_mask(&self) -> u32 {
        Self::full_mask_for(self.n())
    }

    pub fn family(&self) -> &BTreeSet<u32> {
        &self.family
    }

    pub fn len(&self) -> usize {
        self.family.len()
    }

    pub fn is_empty(&self) -> bool {
        self.family.is_empty()
    }

    pub fn contains(&self, y: u32) -> bool {
        self.family.contains(&y)
    }

    pub fn is_proper(&self) -> bool {
        !self.family.is_empty()
    }

    pub fn is_normal(&self) -> bool {
        self.contains(0)
    }

    pub fn index_of(&self, v: impl VertexRef) -> Result<usize> {
        v.resolve(&self.ground)
            .map_err(|e| match e {
                Error::UnknownVertex(s) => Error::UnknownElement(s),
                other => other,
            })
    }

    pub fn element(&self, v: impl VertexRef) -> Result<u32> {
        Ok(1 << self.index_of(v)?)
    }

    pub fn mask_of<'a>(&self, labels: impl IntoIterator<Item = &'a str>) -> Result<u32> {
        let mut m = 0;
        for l in labels {
            m |= self.element(l)?;
        }
        Ok(m)
    }

    pub fn labels_of(&self, y: u32) -> Vec<String> {
        (0..self.n())
            .filter(|i| (y >> i) & 1 == 1)
            .map(|i| self.ground[i].clone())
            .collect()
    }

    fn check_subset(&self, x: u32) -> Result<()> {
        if x & !self.full_mask() != 0 {
            Err(Error::UnknownElement(format!("bit {}", 31 - (x & !self.full_mask()).leading_zeros())))
        } else {
            Ok(())
        }
    }

    fn membership(&self) -> Vec<bool> {
        let mut t = vec![false; 1usize << self.n()];
        for &y in &self.family {
            t[y as usize] = true;
        }
        t
    }

    /// `D ∗ X = {Y Δ X}`.
    pub fn pivot(&self, x: u32) -> Result<Self> {
        self.check_subset(x)?;
        Ok(self.with_family(self.family.iter().map(|y| y ^ x)))
    }

    /// `D + X`: `Y` is kept iff `|{Z ∈ D : Y∖X ⊆ Z ⊆ Y}|` is odd.
    pub fn loop_complement(&self, x: u32) -> Result<Self> {
        self.check_subset(x)?;
        let member = self.membership();
        let out = (0..=self.full_mask()).filter(|&y| {
            let base = y & !x;
            submasks(y & x).filter(|t| member[(base | t) as usize]).count() % 2 == 1
        });
        Ok(self.with_family(out))
    }

    /// `D + v` as `D Δ {Y ∪ {v} | v ∉ Y ∈ D}`, computed without the parity
    /// count.
    pub fn loop_complement_single(&self, v: usize) -> Result<Self> {
        let bit = self.element(v)?;
        let mut out = self.family.clone();
        for &y in self.family.iter().filter(|&&y| y & bit == 0) {
            if !out.remove(&(y | bit)) {
                out.insert(y | bit);
            }
        }
        Ok(self.with_family(out))
    }

    /// `D ∗̄ X`: `Y` is kept iff `|{Z ∈ D : Y ⊆ Z ⊆ Y ∪ X}|` is odd.
    pub fn dual_pivot(&self, x: u32) -> Result<Self> {
        self.check_subset(x)?;
        let member = self.membership();
        let out = (0..=self.full_mask()).filter(|&y| {
            submasks(x & !y).filter(|t| member[(y | t) as usize]).count() % 2 == 1
        });
        Ok(self.with_family(out))
    }

    /// `D + X ∗ X + X`, the defining composite of the dual pivot.
    pub fn dual_pivot_composite(&self, x: u32) -> Result<Self> {
        self.loop_complement(x)?.pivot(x)?.loop_complement(x)
    }

    pub fn flip(&self, op: FlipOp, v: impl VertexRef) -> Result<Self> {
        let bit = self.element(v)?;
        match op {
            FlipOp::Pivot => self.pivot(bit),
            FlipOp::DualPivot => self.dual_pivot(bit),
            FlipOp::LoopComplement => self.loop_complement(bit),
        }
    }

    /// Applies the flips left to right.
    pub fn vertex_flip_sequence<V: VertexRef + Clone>(&self, ops: &[(FlipOp, V)]) -> Result<Self> {
        let mut d = self.clone();
        for (op, v) in ops {
            d = d.flip(*op, v.clone())?;
        }
        Ok(d)
    }

    /// Inclusion-minimal members.
    pub fn min_sys(&self) -> Result<Self> {
        if !self.is_proper() {
            return Err(Error::Improper);
        }
        let f: Vec<u32> = self.family.iter().copied().collect();
        Ok(self.with_family(
            f.iter()
                .copied()
                .filter(|&y| !f.iter().any(|&z| z != y && z & !y == 0)),
        ))
    }

    /// Inclusion-maximal members.
    pub fn max_sys(&self) -> Result<Self> {
        if !self.is_proper() {
            return Err(Error::Improper);
        }
        let f: Vec<u32> = self.family.iter().copied().collect();
        Ok(self.with_family(
            f.iter()
                .copied()
                .filter(|&y| !f.iter().any(|&z| z != y && y & !z == 0)),
        ))
    }

    /// `d_D(X) = min |X Δ Y|` over `Y ∈ D`.
    pub fn distance(&self, x: u32) -> Result<usize> {
        self.check_subset(x)?;
        self.family
            .iter()
            .map(|y| (x ^ y).count_ones() as usize)
            .min()
            .ok_or(Error::Improper)
    }

    pub fn is_equicardinal(&self) -> bool {
        let mut sizes = self.family.iter().map(|y| y.count_ones());
        match sizes.next() {
            None => true,
            Some(first) => sizes.all(|s| s == first),
        }
    }

    /// `v` lies in every member.
    pub fn is_coloop(&self, v: usize) -> Result<bool> {
        let bit = self.element(v)?;
        Ok(self.family.iter().all(|y| y & bit != 0))
    }

    /// `v` lies in no member.
    pub fn is_loop(&self, v: usize) -> Result<bool> {
        let bit = self.element(v)?;
        Ok(self.family.iter().all(|y| y & bit == 0))
    }

    /// Drops bit `v` from every mask in `fam`, shifting higher bits down.
    fn squeeze(v: usize, fam: impl Iterator<Item = u32>) -> BTreeSet<u32> {
        let low = (1u32 << v) - 1;
        fam.map(|y| (y & low) | ((y >> 1) & !low)).collect()
    }

    fn ground_without(&self, v: usize) -> Vec<String> {
        let mut g = self.ground.clone();
        g.remove(v);
        g
    }

    /// `D − v = D[V ∖ {v}]`. Deleting a coloop gives an improper system,
    /// which is returned as is.
    pub fn delete(&self, v: impl VertexRef) -> Result<Self> {
        let v = self.index_of(v)?;
        let bit = 1u32 << v;
        Ok(SetSystem {
            ground: self.ground_without(v),
            family: Self::squeeze(v, self.family.iter().copied().filter(|y| y & bit == 0)),
        })
    }

    /// `D / v = D ∗ v − v`.
    pub fn contract(&self, v: impl VertexRef) -> Result<Self> {
        let v = self.index_of(v)?;
        self.pivot(1 << v)?.delete(v)
    }

    /// `D ∼− v`: the members avoiding `v`, over the full ground set.
    pub fn tilde_minus(&self, v: impl VertexRef) -> Result<Self> {
        let bit = self.element(v)?;
        Ok(self.with_family(self.family.iter().copied().filter(|y| y & bit == 0)))
    }

    /// `D ∼/ v`: the members containing `v`, over the full ground set.
    pub fn tilde_contract(&self, v: impl VertexRef) -> Result<Self> {
        let bit = self.element(v)?;
        Ok(self.with_family(self.family.iter().copied().filter(|y| y & bit != 0)))
    }

    /// `(D ∼− v)` with `v` added to every member: for a basis family this is
    /// `(M − v) ⊕ U_{1,1}({v})` kept on the original ground set.
    pub fn with_coloop(&self, v: impl VertexRef) -> Result<Self> {
        let bit = self.element(v)?;
        Ok(self.with_family(self.family.iter().filter(|y| *y & bit == 0).map(|y| y | bit)))
    }

    /// Symmetric exchange axiom, checked exhaustively. Gated at 12 elements.
    pub fn is_delta_matroid(&self) -> Result<bool> {
        gate("ground size for exchange check", 12, self.n())?;
        if !self.is_proper() {
            return Ok(false);
        }
        let member = self.membership();
        for &x in &self.family {
            for &y in &self.family {
                let diff = x ^ y;
                let mut rest = diff;
                while rest != 0 {
                    let u = rest & rest.wrapping_neg();
                    rest &= rest - 1;
                    if member[(x ^ u) as usize] {
                        continue;
                    }
                    let mut others = diff & !u;
                    let mut found = false;
                    while others != 0 {
                        let w = others & others.wrapping_neg();
                        others &= others - 1;
                        if member[(x ^ u ^ w) as usize] {
                            found = true;
                            break;
                        }
                    }
                    if !found {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// The equivalent test: `min(D ∗ X)` is equicardinal for every `X`.
    /// Gated at 10 elements.
    pub fn is_delta_matroid_by_twists(&self) -> Result<bool> {
        gate("ground size for twist criterion", 10, self.n())?;
        if !self.is_proper() {
            return Ok(false);
        }
        for x in 0..=self.full_mask() {
            if !self.pivot(x)?.min_sys()?.is_equicardinal() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `𝒟_G`: the vertex sets with nonsingular principal submatrix.
    pub fn from_graph(g: &LoopedSimpleGraph) -> Result<Self> {
        gate("graph size for delta-matroid encoding", MAX_GROUND, g.n())?;
        let n = g.n();
        let adj = g.adjacency();
        let family = (0..=Self::full_mask_for(n)).filter(|&s| {
            let idx: Vec<usize> = (0..n).filter(|i| (s >> i) & 1 == 1).collect();
            adj.principal_submatrix(&idx).expect("indices in range").nullity() == 0
        });
        SetSystem::new(g.labels().to_vec(), family)
    }

    /// Inverts [`SetSystem::from_graph`]; fails with `NotGraphic` unless the
    /// decoded graph encodes back to `self`.
    pub fn to_graph(&self) -> Result<LoopedSimpleGraph> {
        if !self.is_normal() {
            return Err(Error::NotGraphic);
        }
        let mut g = LoopedSimpleGraph::new(self.ground.clone())?;
        let n = self.n();
        for u in 0..n {
            if self.contains(1 << u) {
                g.set_loop(u, true)?;
            }
        }
        for u in 0..n {
            for v in u + 1..n {
                let pair = self.contains((1 << u) | (1 << v));
                let both_loops = self.contains(1 << u) && self.contains(1 << v);
                if pair != both_loops {
                    g.add_edge(u, v)?;
                }
            }
        }
        if SetSystem::from_graph(&g)? != *self {
            return Err(Error::NotGraphic);
        }
        Ok(g)
    }

    /// `max(D)` as a matroid basis family.
    pub fn max_as_matroid(&self) -> Result<Self> {
        let m = self.max_sys()?;
        if !m.is_equicardinal() {
            return Err(Error::NotMatroid);
        }
        Ok(m)
    }

    /// The bases of a binary matroid as a set system on its ground set.
    pub fn from_matroid_bases(m: &BinaryMatroid) -> Result<Self> {
        gate("matroid size for basis family", MAX_GROUND, m.size())?;
        let bases = m
            .bases()?
            .iter()
            .map(|b| b.to_mask().expect("≤ 16 elements") as u32)
            .collect::<Vec<_>>();
        SetSystem::new(m.ground().to_vec(), bases)
    }

    /// Nullity `|V| − |B|` of a basis family.
    pub fn matroid_nullity(&self) -> Result<usize> {
        let b = self.family.iter().next().ok_or(Error::Improper)?;
        if !self.is_equicardinal() {
            return Err(Error::NotMatroid);
        }
        Ok(self.n() - b.count_ones() as usize)
    }

    /// Same system with the ground set listed in `order`.
    pub fn with_ground_order(&self, order: &[String]) -> Result<Self> {
        if order.len() != self.n() {
            return Err(Error::DimensionMismatch {
                expected: self.n(),
                found: order.len(),
            });
        }
        let pos = self
            .ground
            .iter()
            .map(|l| {
                order
                    .iter()
                    .position(|o| o == l)
                    .ok_or_else(|| Error::UnknownElement(l.clone()))
            })
            .collect::<Result<Vec<_>>>()?;
        let family = self.family.iter().map(|&y| {
            (0..self.n())
                .filter(|i| (y >> i) & 1 == 1)
                .fold(0u32, |acc, i| acc | (1 << pos[i]))
        });
        SetSystem::new(order.to_vec(), family)
    }

    /// Sets written as sorted label lists, in family order.
    pub fn labeled_family(&self) -> Vec<Vec<String>> {
        self.family.iter().map(|&y| self.labels_of(y)).collect()
    }
}

impl fmt::Debug for SetSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SetSystem {{ ground: {:?}, family: {:?} }}", self.ground, self.labeled_family())
    }
}

impl fmt::Display for SetSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, s) in self.labeled_family().iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{{{}}}", s.join(","))?;
        }
        f.write_str("}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::default_labels;

    fn k3() -> LoopedSimpleGraph {
        let mut g = LoopedSimpleGraph::new(["a", "b", "c"]).unwrap();
        g.add_edge("a", "b").unwrap();
        g.add_edge("b", "c").unwrap();
        g.add_edge("a", "c").unwrap();
        g
    }

    #[test]
    fn triangle_encoding() {
        let d = SetSystem::from_graph(&k3()).unwrap();
        // oracle: the 8 principal submatrices by hand
        assert_eq!(d.family().iter().copied().collect::<Vec<_>>(), vec![0, 0b011, 0b101, 0b110]);
        assert_eq!(d.to_graph().unwrap(), k3());
        assert!(d.is_delta_matroid().unwrap());
    }

    #[test]
    fn single_vertex_encodings() {
        let mut g = LoopedSimpleGraph::new(["v"]).unwrap();
        assert_eq!(SetSystem::from_graph(&g).unwrap().len(), 1);
        g.set_loop("v", true).unwrap();
        assert_eq!(
            SetSystem::from_graph(&g).unwrap().family().iter().copied().collect::<Vec<_>>(),
            vec![0, 1]
        );
    }

    #[test]
    fn loop_complement_rules_agree() {
        let d = SetSystem::new(vec!["v".into()], [0]).unwrap();
        let lc = d.loop_complement(1).unwrap();
        assert_eq!(lc.family().iter().copied().collect::<Vec<_>>(), vec![0, 1]);
        assert_eq!(lc, d.loop_complement_single(0).unwrap());
        assert_eq!(lc.loop_complement(1).unwrap(), d);
        // a set containing v whose v-free part is absent is kept
        let edge = SetSystem::new(default_labels(2), [0, 3]).unwrap();
        let looped = edge.loop_complement_single(0).unwrap();
        assert_eq!(looped.family().iter().copied().collect::<Vec<_>>(), vec![0, 1, 3]);
        assert_eq!(looped, edge.loop_complement(1).unwrap());
    }

    #[test]
    fn dual_pivot_of_nonempty_subsets() {
        let d = SetSystem::new(default_labels(3), 1..8).unwrap();
        assert!(d.is_delta_matroid().unwrap());
        let dp = d.dual_pivot(7).unwrap();
        assert_eq!(dp.family().iter().copied().collect::<Vec<_>>(), vec![0, 7]);
        assert_eq!(dp, d.dual_pivot_composite(7).unwrap());
        assert!(!dp.is_delta_matroid().unwrap());
        assert!(!dp.is_delta_matroid_by_twists().unwrap());
    }

    #[test]
    fn max_counterexample_for_general_systems() {
        let g: Vec<String> = ["u", "v", "w"].iter().map(|s| s.to_string()).collect();
        let d = SetSystem::from_label_sets(g, &[&["u"], &["v"], &["v", "w"]]).unwrap();
        let w = d.index_of("w").unwrap();
        let mx = d.max_sys().unwrap();
        assert!(!mx.is_coloop(w).unwrap());
        assert_eq!(mx.delete("w").unwrap().labeled_family(), vec![vec!["u".to_string()]]);
        assert_eq!(d.delete("w").unwrap().max_sys().unwrap().labeled_family().len(), 2);
    }

    #[test]
    fn minmax_and_distance() {
        let d = SetSystem::from_graph(&k3()).unwrap();
        assert_eq!(d.min_sys().unwrap().family().iter().copied().collect::<Vec<_>>(), vec![0]);
        let full = d.full_mask();
        assert_eq!(d.min_sys().unwrap(), d.pivot(full).unwrap().max_sys().unwrap().pivot(full).unwrap());
        assert_eq!(d.distance(0b111).unwrap(), 1);
        let empty = SetSystem::new(default_labels(2), []).unwrap();
        assert!(matches!(empty.distance(0), Err(Error::Improper)));
        assert!(matches!(empty.max_sys(), Err(Error::Improper)));
    }

    #[test]
    fn tilde_filters() {
        let d = SetSystem::new(vec!["v".into()], [0, 1]).unwrap();
        assert_eq!(d.tilde_minus("v").unwrap().family().iter().copied().collect::<Vec<_>>(), vec![0]);
        assert_eq!(d.tilde_contract("v").unwrap().family().iter().copied().collect::<Vec<_>>(), vec![1]);
        assert_eq!(d.delete("v").unwrap().n(), 0);
    }

    #[test]
    fn not_graphic_systems() {
        let d = SetSystem::new(default_labels(2), [1, 2]).unwrap();
        assert!(matches!(d.to_graph(), Err(Error::NotGraphic)));
        let d = SetSystem::new(default_labels(3), [0, 7]).unwrap();
        assert!(matches!(d.to_graph(), Err(Error::NotGraphic)));
    }

    #[test]
    fn max_as_matroid_examples() {
        let d = SetSystem::from_graph(&k3()).unwrap();
        assert_eq!(d.max_as_matroid().unwrap().len(), 3);
        let mut k3l = k3();
        k3l.set_loop("a", true).unwrap();
        assert_eq!(
            SetSystem::from_graph(&k3l).unwrap().max_as_matroid().unwrap().labeled_family(),
            vec![vec!["a", "b", "c"]]
        );
        let bad = SetSystem::new(default_labels(2), [1, 3, 0]).unwrap();
        assert!(bad.max_as_matroid().is_ok());
        let bad = SetSystem::new(default_labels(3), [1, 6]).unwrap();
        assert!(matches!(bad.max_as_matroid(), Err(Error::NotMatroid)));
    }
}
