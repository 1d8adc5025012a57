//! Exact bivariate integer polynomials, the interlace polynomial `q(G)`,
//! the Tutte polynomial `t(M)` and its leading term `λ_M`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::adjacency_matroid::adjacency_matroid;
use crate::binary_matroid::BinaryMatroid;
use crate::error::{gate, Result};
use crate::gf2::{BitMatrix, Subspace};
use crate::graph::LoopedSimpleGraph;

/// Largest vertex or ground-set size accepted by the subset expansions.
pub const MAX_SUBSET_SIZE: usize = 24;

/// `Σ c·x^i·y^j` with integer coefficients; zero terms are never stored.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct BivariatePolynomial {
    terms: BTreeMap<(u32, u32), i64>,
}

fn binomial_row(n: u32) -> Vec<i64> {
    let mut row = vec![1i64];
    for k in 0..n as usize {
        let next = row[k] * (n as i64 - k as i64) / (k as i64 + 1);
        row.push(next);
    }
    row
}

impl BivariatePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0, 0)
    }

    pub fn x() -> Self {
        Self::monomial(1, 1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(1, 0, 1)
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: i64, i: u32, j: u32) -> Self {
        let mut p = Self::zero();
        p.add_term(i, j, c);
        p
    }

    /// `(x − 1)^a (y − 1)^b`, expanded.
    pub fn shifted_monomial(a: u32, b: u32) -> Self {
        let ra = binomial_row(a);
        let rb = binomial_row(b);
        let mut p = Self::zero();
        for (i, ca) in ra.iter().enumerate() {
            let sa = if (a as usize - i).is_multiple_of(2) { 1 } else { -1 };
            for (j, cb) in rb.iter().enumerate() {
                let sb = if (b as usize - j).is_multiple_of(2) { 1 } else { -1 };
                p.add_term(i as u32, j as u32, sa * sb * ca * cb);
            }
        }
        p
    }

    pub fn add_term(&mut self, i: u32, j: u32, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.terms.entry((i, j)).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&(i, j));
        }
    }

    pub fn coefficient(&self, i: u32, j: u32) -> i64 {
        self.terms.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms `(i, j, c)` in descending `(i, j)` order.
    pub fn terms(&self) -> Vec<(u32, u32, i64)> {
        self.terms.iter().rev().map(|(&(i, j), &c)| (i, j, c)).collect()
    }

    pub fn scale(&self, k: i64) -> Self {
        let mut p = Self::zero();
        for (&(i, j), &c) in &self.terms {
            p.add_term(i, j, c * k);
        }
        p
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// `p(y, x)`.
    pub fn swap_xy(&self) -> Self {
        let mut p = Self::zero();
        for (&(i, j), &c) in &self.terms {
            p.add_term(j, i, c);
        }
        p
    }

    pub fn eval(&self, x: i64, y: i64) -> i64 {
        self.terms
            .iter()
            .map(|(&(i, j), &c)| c * x.pow(i) * y.pow(j))
            .sum()
    }

    /// A polynomial in `y` alone, as a list of coefficients by power.
    fn y_coefficients(&self) -> Option<Vec<i64>> {
        let mut out = Vec::new();
        for (&(i, j), &c) in &self.terms {
            if i != 0 {
                return None;
            }
            if out.len() <= j as usize {
                out.resize(j as usize + 1, 0);
            }
            out[j as usize] = c;
        }
        Some(out)
    }

    /// JSON-friendly `[i, j, c]` triples in display order.
    pub fn to_triples(&self) -> Vec<[i64; 3]> {
        self.terms()
            .into_iter()
            .map(|(i, j, c)| [i as i64, j as i64, c])
            .collect()
    }
}

impl fmt::Debug for BivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `x^2 + x + y`, `x^2 - 2 x + 2 y`, `0`.
impl fmt::Display for BivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (i, j, c)) in self.terms().into_iter().enumerate() {
            let mag = c.unsigned_abs();
            if k == 0 {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c < 0 { " - " } else { " + " })?;
            }
            let mut parts = Vec::new();
            if mag != 1 || (i == 0 && j == 0) {
                parts.push(mag.to_string());
            }
            match i {
                0 => {}
                1 => parts.push("x".into()),
                _ => parts.push(format!("x^{i}")),
            }
            match j {
                0 => {}
                1 => parts.push("y".into()),
                _ => parts.push(format!("y^{j}")),
            }
            f.write_str(&parts.join(" "))?;
        }
        Ok(())
    }
}

impl Add for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn add(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        let mut p = self.clone();
        for (&(i, j), &c) in &rhs.terms {
            p.add_term(i, j, c);
        }
        p
    }
}

impl Add for BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn add(self, rhs: BivariatePolynomial) -> BivariatePolynomial {
        &self + &rhs
    }
}

impl Neg for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn neg(self) -> BivariatePolynomial {
        self.scale(-1)
    }
}

impl Sub for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn sub(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        self + &(-rhs)
    }
}

impl Sub for BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn sub(self, rhs: BivariatePolynomial) -> BivariatePolynomial {
        &self - &rhs
    }
}

impl Mul for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn mul(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        let mut p = BivariatePolynomial::zero();
        for (&(i1, j1), &c1) in &self.terms {
            for (&(i2, j2), &c2) in &rhs.terms {
                p.add_term(i1 + i2, j1 + j2, c1 * c2);
            }
        }
        p
    }
}

impl Mul for BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn mul(self, rhs: BivariatePolynomial) -> BivariatePolynomial {
        &self * &rhs
    }
}

/// Sums `count · (x−1)^a (y−1)^b` over a histogram of exponent pairs.
fn expand_histogram(hist: &BTreeMap<(u32, u32), i64>) -> BivariatePolynomial {
    let mut p = BivariatePolynomial::zero();
    for (&(a, b), &count) in hist {
        p = &p + &BivariatePolynomial::shifted_monomial(a, b).scale(count);
    }
    p
}

/// GF(2) rank of a small matrix given as row bitmasks.
fn rank_of_rows(rows: &mut [u64]) -> u32 {
    let mut rank = 0;
    for i in 0..rows.len() {
        let pivot = rows[i];
        if pivot == 0 {
            continue;
        }
        rank += 1;
        let low = pivot & pivot.wrapping_neg();
        for r in rows[i + 1..].iter_mut() {
            if *r & low != 0 {
                *r ^= pivot;
            }
        }
    }
    rank
}

fn row_masks(m: &BitMatrix) -> Vec<u64> {
    (0..m.rows()).map(|i| m.row(i).to_mask().expect("at most 64 columns")).collect()
}

/// Nullity of the principal submatrix on `mask`, for matrices given as row
/// bitmasks.
fn principal_nullity(rows: &[u64], mask: u64) -> u32 {
    let mut sub: Vec<u64> = (0..rows.len())
        .filter(|i| (mask >> i) & 1 == 1)
        .map(|i| rows[i] & mask)
        .collect();
    mask.count_ones() - rank_of_rows(&mut sub)
}

/// `q(G) = Σ_S (x−1)^{|S|−ν(S)} (y−1)^{ν(S)}`, one elimination per subset.
pub fn interlace_subset(g: &LoopedSimpleGraph) -> Result<BivariatePolynomial> {
    gate("vertices for interlace subset expansion", MAX_SUBSET_SIZE, g.n())?;
    let rows = row_masks(g.adjacency());
    let mut hist = BTreeMap::new();
    for mask in 0u64..1 << g.n() {
        let nu = principal_nullity(&rows, mask);
        *hist.entry((mask.count_ones() - nu, nu)).or_insert(0) += 1;
    }
    Ok(expand_histogram(&hist))
}

/// `q(G)` by the local-complementation recursion:
///
/// 1. looped `v`: `q(G−v) + (x−1)·q(G^v−v)`;
/// 2. unlooped neighbours `v, w`, with `H = ((G^v)^w)^v`:
///    `q(G−v) + q(H−v) + ((x−1)²−1)·q(H−v−w)`;
/// 3. no loops and no edges: `y^n`.
pub fn interlace_recursive(g: &LoopedSimpleGraph) -> Result<BivariatePolynomial> {
    gate("vertices for interlace recursion", MAX_SUBSET_SIZE, g.n())?;
    let mut memo = HashMap::new();
    Ok(interlace_rec(g, &mut memo))
}

fn interlace_rec(g: &LoopedSimpleGraph, memo: &mut HashMap<BitMatrix, BivariatePolynomial>) -> BivariatePolynomial {
    if let Some(p) = memo.get(g.adjacency()) {
        return p.clone();
    }
    let xm1 = BivariatePolynomial::shifted_monomial(1, 0);
    let result = if let Some(&v) = g.looped_vertices().first() {
        let a = interlace_rec(&g.remove_vertex(v).expect("v exists"), memo);
        let h = g.local_complement(v).and_then(|h| h.remove_vertex(v)).expect("v exists");
        &a + &(&xm1 * &interlace_rec(&h, memo))
    } else if let Some((v, w)) = (0..g.n()).find_map(|v| g.neighbors(v).first().map(|&w| (v, w))) {
        let a = interlace_rec(&g.remove_vertex(v).expect("v exists"), memo);
        let h = g.local_complement_seq([v, w, v]).expect("vertices exist");
        let hv = h.remove_vertex(v).expect("v exists");
        let b = interlace_rec(&hv, memo);
        let hvw = h
            .induced((0..g.n()).filter(|&u| u != v && u != w))
            .expect("vertices exist");
        let c = interlace_rec(&hvw, memo);
        let factor = &xm1.pow(2) - &BivariatePolynomial::one();
        &(&a + &b) + &(&factor * &c)
    } else {
        BivariatePolynomial::monomial(1, 0, g.n() as u32)
    };
    memo.insert(g.adjacency().clone(), result.clone());
    result
}

/// A matrix whose columns represent `m`: its rows span the orthogonal
/// complement of the cycle space. Columns are returned as bitmasks.
fn representation_columns(m: &BinaryMatroid) -> Vec<u64> {
    let rows = m.cycle_space().orthogonal_complement();
    (0..m.size())
        .map(|e| {
            rows.basis()
                .iter()
                .enumerate()
                .filter(|(_, r)| r.get(e))
                .fold(0u64, |acc, (k, _)| acc | (1 << k))
        })
        .collect()
}

/// `t(M) = Σ_S (x−1)^{r(V)−r(S)} (y−1)^{|S|−r(S)}`.
///
/// Subsets are visited depth-first (include/exclude each element in turn)
/// while keeping a reduced basis of the chosen columns, so each step costs
/// one reduction.
pub fn tutte_subset(m: &BinaryMatroid) -> Result<BivariatePolynomial> {
    gate("ground size for Tutte subset expansion", MAX_SUBSET_SIZE, m.size())?;
    let cols = representation_columns(m);
    let rank_v = m.rank() as u32;
    let mut hist = BTreeMap::new();
    fn walk(
        cols: &[u64],
        k: usize,
        basis: &mut Vec<u64>,
        size: u32,
        rank_v: u32,
        hist: &mut BTreeMap<(u32, u32), i64>,
    ) {
        if k == cols.len() {
            let r = basis.len() as u32;
            *hist.entry((rank_v - r, size - r)).or_insert(0) += 1;
            return;
        }
        walk(cols, k + 1, basis, size, rank_v, hist);
        let mut c = cols[k];
        for &b in basis.iter() {
            let low = b & b.wrapping_neg();
            if c & low != 0 {
                c ^= b;
            }
        }
        if c == 0 {
            walk(cols, k + 1, basis, size + 1, rank_v, hist);
        } else {
            // keep the basis reduced on each pivot (lowest set bit)
            let low = c & c.wrapping_neg();
            let mut touched = 0u64;
            for (i, b) in basis.iter_mut().enumerate() {
                if *b & low != 0 {
                    *b ^= c;
                    touched |= 1 << i;
                }
            }
            basis.push(c);
            walk(cols, k + 1, basis, size + 1, rank_v, hist);
            basis.pop();
            for (i, b) in basis.iter_mut().enumerate() {
                if (touched >> i) & 1 == 1 {
                    *b ^= c;
                }
            }
        }
    }
    walk(&cols, 0, &mut Vec::new(), 0, rank_v, &mut hist);
    Ok(expand_histogram(&hist))
}

/// `t(M)` by deletion and contraction of the first element, memoised on
/// the cycle space.
pub fn tutte_recursive(m: &BinaryMatroid) -> Result<BivariatePolynomial> {
    gate("ground size for Tutte recursion", MAX_SUBSET_SIZE, m.size())?;
    let mut memo = HashMap::new();
    tutte_rec(m, &mut memo)
}

fn tutte_rec(m: &BinaryMatroid, memo: &mut HashMap<Subspace, BivariatePolynomial>) -> Result<BivariatePolynomial> {
    if m.size() == 0 {
        return Ok(BivariatePolynomial::one());
    }
    if let Some(p) = memo.get(m.cycle_space()) {
        return Ok(p.clone());
    }
    let p = if m.is_loop(0)? {
        &BivariatePolynomial::y() * &tutte_rec(&m.delete(0)?, memo)?
    } else if m.is_coloop(0)? {
        &BivariatePolynomial::x() * &tutte_rec(&m.contract(0)?, memo)?
    } else {
        &tutte_rec(&m.contract(0)?, memo)? + &tutte_rec(&m.delete(0)?, memo)?
    };
    memo.insert(m.cycle_space().clone(), p.clone());
    Ok(p)
}

/// `λ_M(y) = (y−1)^{|V|−r(V)}`, the `S = V` term of `t(M)`.
pub fn lambda_leading(m: &BinaryMatroid) -> BivariatePolynomial {
    BivariatePolynomial::shifted_monomial(0, m.nullity() as u32)
}

/// `(x−1)^{|S|} · λ(1 + (y−1)/(x−1))` for a `λ` of degree at most `|S|`,
/// written without fractions: `Σ c_j (x+y−2)^j (x−1)^{|S|−j}`.
pub fn substituted_lambda(lambda: &BivariatePolynomial, size: u32) -> BivariatePolynomial {
    let coeffs = lambda.y_coefficients().expect("λ is a polynomial in y");
    assert!(coeffs.len() as u32 <= size + 1, "λ has degree at most |S|");
    let s = &(&BivariatePolynomial::x() + &BivariatePolynomial::y()) - &BivariatePolynomial::constant(2);
    let mut out = BivariatePolynomial::zero();
    for (j, &c) in coeffs.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let term = &s.pow(j as u32) * &BivariatePolynomial::shifted_monomial(size - j as u32, 0);
        out = &out + &term.scale(c);
    }
    out
}

/// `q(G) = Σ_S (x−1)^{|S|} λ_{G[S]}(1 + (y−1)/(x−1))`, with `λ` taken from
/// the adjacency matroid of each induced subgraph.
pub fn q_from_lambda(g: &LoopedSimpleGraph) -> Result<BivariatePolynomial> {
    gate("vertices for lambda expansion", MAX_SUBSET_SIZE, g.n())?;
    let mut by_shape: BTreeMap<(u32, usize), i64> = BTreeMap::new();
    for mask in 0u64..1 << g.n() {
        let sub = g.induced_mask(mask);
        let nu = adjacency_matroid(&sub).nullity();
        *by_shape.entry((mask.count_ones(), nu)).or_insert(0) += 1;
    }
    let mut out = BivariatePolynomial::zero();
    for (&(size, nu), &count) in &by_shape {
        let lambda = BivariatePolynomial::shifted_monomial(0, nu as u32);
        out = &out + &substituted_lambda(&lambda, size).scale(count);
    }
    Ok(out)
}

/// The right-hand side of `q(G) − q(G−v) = Σ_{v∈S} (x−1)^{|S|} λ_{G[S]}(…)`.
pub fn lambda_sum_through(g: &LoopedSimpleGraph, v: usize) -> Result<BivariatePolynomial> {
    gate("vertices for lambda expansion", MAX_SUBSET_SIZE, g.n())?;
    let mut out = BivariatePolynomial::zero();
    for mask in (0u64..1 << g.n()).filter(|m| (m >> v) & 1 == 1) {
        let sub = g.induced_mask(mask);
        let lambda = lambda_leading(&adjacency_matroid(&sub));
        out = &out + &substituted_lambda(&lambda, mask.count_ones());
    }
    Ok(out)
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
    fn display_format() {
        let p = &(&BivariatePolynomial::x().pow(2) + &BivariatePolynomial::x()) + &BivariatePolynomial::y();
        assert_eq!(p.to_string(), "x^2 + x + y");
        assert_eq!(BivariatePolynomial::zero().to_string(), "0");
        assert_eq!(BivariatePolynomial::shifted_monomial(1, 0).to_string(), "x - 1");
        assert_eq!(BivariatePolynomial::monomial(3, 2, 1).to_string(), "3 x^2 y");
        assert_eq!(p.to_triples(), vec![[2, 0, 1], [1, 0, 1], [0, 1, 1]]);
    }

    #[test]
    fn shifted_monomial_matches_product() {
        let xm1 = &BivariatePolynomial::x() - &BivariatePolynomial::one();
        let ym1 = &BivariatePolynomial::y() - &BivariatePolynomial::one();
        assert_eq!(
            BivariatePolynomial::shifted_monomial(3, 2),
            &xm1.pow(3) * &ym1.pow(2)
        );
    }

    #[test]
    fn interlace_examples() {
        let iso = LoopedSimpleGraph::new(["a", "b"]).unwrap();
        assert_eq!(interlace_subset(&iso).unwrap().to_string(), "y^2");
        let mut lp = LoopedSimpleGraph::new(["a"]).unwrap();
        lp.set_loop("a", true).unwrap();
        assert_eq!(interlace_subset(&lp).unwrap(), BivariatePolynomial::x());
        let empty = LoopedSimpleGraph::new(Vec::<String>::new()).unwrap();
        assert_eq!(interlace_subset(&empty).unwrap(), BivariatePolynomial::one());
        assert_eq!(interlace_recursive(&empty).unwrap(), BivariatePolynomial::one());
        assert_eq!(q_from_lambda(&lp).unwrap(), BivariatePolynomial::x());
        let single = LoopedSimpleGraph::new(["a"]).unwrap();
        assert_eq!(interlace_recursive(&single).unwrap(), BivariatePolynomial::y());
    }

    #[test]
    fn interlace_of_an_edge() {
        // oracle: subsets ∅, {a}, {b}, {a,b} give 1, y−1, y−1, (x−1)^2
        let mut e = LoopedSimpleGraph::new(["a", "b"]).unwrap();
        e.add_edge("a", "b").unwrap();
        let q = interlace_subset(&e).unwrap();
        assert_eq!(q.to_string(), "x^2 - 2 x + 2 y");
        assert_eq!(interlace_recursive(&e).unwrap(), q);
        assert_eq!(q_from_lambda(&e).unwrap(), q);
    }

    #[test]
    fn tutte_examples() {
        assert_eq!(tutte_subset(&BinaryMatroid::coloop("a")).unwrap(), BivariatePolynomial::x());
        assert_eq!(tutte_subset(&BinaryMatroid::loop_element("a")).unwrap(), BivariatePolynomial::y());
        let t = tutte_subset(&adjacency_matroid(&k3())).unwrap();
        assert_eq!(t.to_string(), "x^2 + x + y");
        assert_eq!(tutte_recursive(&adjacency_matroid(&k3())).unwrap(), t);
        assert_eq!(
            tutte_recursive(&BinaryMatroid::uniform(4, 4).unwrap()).unwrap(),
            BivariatePolynomial::x().pow(4)
        );
        assert_eq!(
            tutte_recursive(&BinaryMatroid::uniform(3, 0).unwrap()).unwrap(),
            BivariatePolynomial::y().pow(3)
        );
    }

    #[test]
    fn lambda_examples() {
        assert_eq!(lambda_leading(&BinaryMatroid::uniform(3, 3).unwrap()), BivariatePolynomial::one());
        assert_eq!(
            lambda_leading(&BinaryMatroid::loop_element("a")).to_string(),
            "y - 1"
        );
        assert_eq!(lambda_leading(&adjacency_matroid(&k3())).to_string(), "y - 1");
    }
}
