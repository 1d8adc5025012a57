//! Bit-packed linear algebra over GF(2).
//!
//! Vectors are packed into `u64` words, least significant bit first. A
//! [`Subspace`] is always stored in reduced row-echelon form with ascending
//! pivots, so two subspaces are equal as sets exactly when their fields are
//! equal.

use std::fmt;

use crate::error::{Error, Result};

const WORD: usize = 64;

fn words_for(len: usize) -> usize {
    len.div_ceil(WORD)
}

/// A fixed-length vector over GF(2). Bits beyond `len` are always zero.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVector {
    len: usize,
    words: Vec<u64>,
}

impl BitVector {
    pub fn zeros(len: usize) -> Self {
        BitVector {
            len,
            words: vec![0; words_for(len)],
        }
    }

    pub fn ones(len: usize) -> Self {
        let mut v = Self::zeros(len);
        for w in v.words.iter_mut() {
            *w = !0;
        }
        v.clear_tail();
        v
    }

    /// Builds a vector with the given coordinates set. Panics if an index is
    /// out of range.
    pub fn from_indices<I: IntoIterator<Item = usize>>(len: usize, indices: I) -> Self {
        let mut v = Self::zeros(len);
        for i in indices {
            v.set(i, true);
        }
        v
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        Self::from_indices(
            bits.len(),
            bits.iter().enumerate().filter(|(_, b)| **b).map(|(i, _)| i),
        )
    }

    /// Low `len` bits of `mask`; `len` must not exceed 64.
    pub fn from_mask(len: usize, mask: u64) -> Self {
        assert!(len <= WORD, "from_mask supports at most 64 bits");
        let mut v = Self::zeros(len);
        if len > 0 {
            v.words[0] = mask;
            v.clear_tail();
        }
        v
    }

    /// The vector as a bitmask, if it fits in one word.
    pub fn to_mask(&self) -> Option<u64> {
        if self.len > WORD {
            return None;
        }
        Some(self.words.first().copied().unwrap_or(0))
    }

    fn clear_tail(&mut self) {
        let rem = self.len % WORD;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        (self.words[i / WORD] >> (i % WORD)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        let bit = 1u64 << (i % WORD);
        if value {
            self.words[i / WORD] |= bit;
        } else {
            self.words[i / WORD] &= !bit;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        self.words[i / WORD] ^= 1u64 << (i % WORD);
    }

    #[inline]
    pub fn xor_assign(&mut self, other: &BitVector) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= *b;
        }
    }

    pub fn xor(&self, other: &BitVector) -> BitVector {
        let mut out = self.clone();
        out.xor_assign(other);
        out
    }

    pub fn and(&self, other: &BitVector) -> BitVector {
        debug_assert_eq!(self.len, other.len);
        BitVector {
            len: self.len,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    pub fn not(&self) -> BitVector {
        let mut out = BitVector {
            len: self.len,
            words: self.words.iter().map(|w| !w).collect(),
        };
        out.clear_tail();
        out
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|w| *w == 0)
    }

    /// Standard GF(2) inner product: parity of the common support.
    pub fn dot(&self, other: &BitVector) -> bool {
        debug_assert_eq!(self.len, other.len);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum::<u32>()
            % 2
            == 1
    }

    pub fn is_subset_of(&self, other: &BitVector) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, w)| **w != 0)
            .map(|(i, w)| i * WORD + w.trailing_zeros() as usize)
    }

    /// Indices of the set bits, ascending.
    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    None
                } else {
                    let t = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    Some(wi * WORD + t)
                }
            })
        })
    }

    /// Drops coordinate `i`, shifting the later coordinates down by one.
    pub fn remove_coordinate(&self, i: usize) -> BitVector {
        assert!(i < self.len);
        BitVector::from_indices(
            self.len - 1,
            self.iter_ones()
                .filter(|&j| j != i)
                .map(|j| if j > i { j - 1 } else { j }),
        )
    }

    /// Keeps the listed coordinates, in the listed order.
    pub fn select(&self, coords: &[usize]) -> BitVector {
        BitVector::from_indices(
            coords.len(),
            coords
                .iter()
                .enumerate()
                .filter(|(_, &c)| self.get(c))
                .map(|(k, _)| k),
        )
    }

    /// Moves coordinate `i` to `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> BitVector {
        debug_assert_eq!(perm.len(), self.len);
        BitVector::from_indices(self.len, self.iter_ones().map(|i| perm[i]))
    }

    /// Concatenation `self ‖ other`.
    pub fn concat(&self, other: &BitVector) -> BitVector {
        let n = self.len;
        BitVector::from_indices(
            n + other.len,
            self.iter_ones().chain(other.iter_ones().map(|i| i + n)),
        )
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVector({self})")
    }
}

impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// Row-major bit-packed matrix over GF(2).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BitVector>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        BitMatrix {
            rows,
            cols,
            data: vec![BitVector::zeros(cols); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                if f(i, j) {
                    m.set(i, j, true);
                }
            }
        }
        m
    }

    /// Builds a matrix from row vectors. `cols` is needed to describe a
    /// matrix with no rows.
    pub fn from_rows(cols: usize, rows: Vec<BitVector>) -> Result<Self> {
        for r in &rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
        }
        Ok(BitMatrix {
            rows: rows.len(),
            cols,
            data: rows,
        })
    }

    /// Parses rows written as strings of `0`/`1`, e.g. `["011", "101"]`.
    pub fn from_strs(rows: &[&str]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(rows.len());
        for (i, r) in rows.iter().enumerate() {
            let mut v = BitVector::zeros(r.len());
            for (j, ch) in r.chars().enumerate() {
                match ch {
                    '0' => {}
                    '1' => v.set(j, true),
                    other => {
                        return Err(Error::Parse {
                            line: i + 1,
                            message: format!("unexpected matrix symbol `{other}`"),
                        })
                    }
                }
            }
            data.push(v);
        }
        Self::from_rows(cols, data)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.data[i].get(j)
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        self.data[i].set(j, value);
    }

    #[inline]
    pub fn flip(&mut self, i: usize, j: usize) {
        self.data[i].flip(j);
    }

    pub fn row(&self, i: usize) -> &BitVector {
        &self.data[i]
    }

    pub fn row_vectors(&self) -> &[BitVector] {
        &self.data
    }

    pub fn column(&self, j: usize) -> BitVector {
        BitVector::from_indices(self.rows, (0..self.rows).filter(|&i| self.get(i, j)))
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut t = BitMatrix::zeros(self.cols, self.rows);
        for (i, row) in self.data.iter().enumerate() {
            for j in row.iter_ones() {
                t.set(j, i, true);
            }
        }
        t
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && *self == self.transpose()
    }

    /// `self · v` for a column vector `v` of length `cols`.
    pub fn mul_vec(&self, v: &BitVector) -> BitVector {
        debug_assert_eq!(v.len(), self.cols);
        BitVector::from_indices(
            self.rows,
            self.data
                .iter()
                .enumerate()
                .filter(|(_, r)| r.dot(v))
                .map(|(i, _)| i),
        )
    }

    pub fn mul(&self, other: &BitMatrix) -> Result<BitMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = BitMatrix::zeros(self.rows, other.cols);
        for (i, row) in self.data.iter().enumerate() {
            for k in row.iter_ones() {
                out.data[i].xor_assign(&other.data[k]);
            }
        }
        Ok(out)
    }

    /// The square submatrix on rows and columns `s`, in the given order.
    pub fn principal_submatrix(&self, s: &[usize]) -> Result<BitMatrix> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: self.cols,
            });
        }
        for &i in s {
            if i >= self.rows {
                return Err(Error::IndexOutOfRange {
                    index: i,
                    size: self.rows,
                });
            }
        }
        Ok(BitMatrix {
            rows: s.len(),
            cols: s.len(),
            data: s.iter().map(|&i| self.data[i].select(s)).collect(),
        })
    }

    pub fn select_columns(&self, cols: &[usize]) -> Result<BitMatrix> {
        for &j in cols {
            if j >= self.cols {
                return Err(Error::IndexOutOfRange {
                    index: j,
                    size: self.cols,
                });
            }
        }
        Ok(BitMatrix {
            rows: self.rows,
            cols: cols.len(),
            data: self.data.iter().map(|r| r.select(cols)).collect(),
        })
    }

    /// Reduced row-echelon form: the nonzero reduced rows and their pivot
    /// columns, pivots ascending.
    pub fn rref(&self) -> (Vec<BitVector>, Vec<usize>) {
        rref_rows(self.data.clone(), self.cols)
    }

    pub fn rank(&self) -> usize {
        rank_of_rows(self.data.clone(), self.cols)
    }

    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }

    /// Right nullspace `{κ : self·κ = 0}` in canonical form.
    pub fn nullspace(&self) -> Subspace {
        let (rows, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::with_capacity(self.cols - pivots.len());
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = BitVector::zeros(self.cols);
            v.set(free, true);
            for (row, &p) in rows.iter().zip(&pivots) {
                if row.get(free) {
                    v.set(p, true);
                }
            }
            basis.push(v);
        }
        Subspace::canonical(self.cols, basis)
    }

    pub fn row_space(&self) -> Subspace {
        let (rows, _) = self.rref();
        Subspace {
            ambient_dim: self.cols,
            basis: rows,
        }
    }

    pub fn column_space(&self) -> Subspace {
        self.transpose().row_space()
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitMatrix {}x{} [", self.rows, self.cols)?;
        for (i, r) in self.data.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{r}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Display for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.data {
            writeln!(f, "{r}")?;
        }
        Ok(())
    }
}

fn rref_rows(mut rows: Vec<BitVector>, cols: usize) -> (Vec<BitVector>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut next = 0;
    for c in 0..cols {
        if next == rows.len() {
            break;
        }
        let Some(found) = (next..rows.len()).find(|&r| rows[r].get(c)) else {
            continue;
        };
        rows.swap(next, found);
        let pivot_row = rows[next].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != next && row.get(c) {
                row.xor_assign(&pivot_row);
            }
        }
        pivots.push(c);
        next += 1;
    }
    rows.truncate(next);
    (rows, pivots)
}

fn rank_of_rows(mut rows: Vec<BitVector>, cols: usize) -> usize {
    // forward elimination only
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows.len() {
            break;
        }
        let Some(found) = (rank..rows.len()).find(|&r| rows[r].get(c)) else {
            continue;
        };
        rows.swap(rank, found);
        let (head, tail) = rows.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        for row in tail.iter_mut() {
            if row.get(c) {
                row.xor_assign(pivot_row);
            }
        }
        rank += 1;
    }
    rank
}

/// A subspace of GF(2)^n in canonical reduced row-echelon form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<BitVector>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: (0..ambient_dim)
                .map(|i| BitVector::from_indices(ambient_dim, [i]))
                .collect(),
        }
    }

    /// The span of `vectors`, canonicalised.
    pub fn span<I: IntoIterator<Item = BitVector>>(ambient_dim: usize, vectors: I) -> Result<Self> {
        let vs: Vec<BitVector> = vectors.into_iter().collect();
        for v in &vs {
            if v.len() != ambient_dim {
                return Err(Error::DimensionMismatch {
                    expected: ambient_dim,
                    found: v.len(),
                });
            }
        }
        Ok(Self::canonical(ambient_dim, vs))
    }

    fn canonical(ambient_dim: usize, vectors: Vec<BitVector>) -> Self {
        let (basis, _) = rref_rows(vectors, ambient_dim);
        Subspace { ambient_dim, basis }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BitVector] {
        &self.basis
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.basis
            .iter()
            .map(|b| b.first_one().expect("basis vectors are nonzero"))
            .collect()
    }

    /// Reduces `v` against the basis; the result is zero iff `v` lies in the
    /// subspace.
    pub fn reduce(&self, v: &BitVector) -> BitVector {
        let mut r = v.clone();
        for b in &self.basis {
            let p = b.first_one().expect("basis vectors are nonzero");
            if r.get(p) {
                r.xor_assign(b);
            }
        }
        r
    }

    pub fn contains(&self, v: &BitVector) -> bool {
        v.len() == self.ambient_dim && self.reduce(v).is_zero()
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient_dim == other.ambient_dim && self.basis.iter().all(|b| other.contains(b))
    }

    pub fn as_matrix(&self) -> BitMatrix {
        BitMatrix {
            rows: self.basis.len(),
            cols: self.ambient_dim,
            data: self.basis.clone(),
        }
    }

    pub fn orthogonal_complement(&self) -> Subspace {
        self.as_matrix().nullspace()
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        Subspace::span(
            self.ambient_dim,
            self.basis.iter().chain(&other.basis).cloned(),
        )
    }

    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                found: other.ambient_dim,
            });
        }
        Ok(self
            .orthogonal_complement()
            .sum(&other.orthogonal_complement())?
            .orthogonal_complement())
    }

    /// The vectors of the subspace whose support lies inside `mask`.
    pub fn restrict_to(&self, mask: &BitVector) -> Subspace {
        let outside = mask.not();
        let mut vecs = self.basis.clone();
        for c in outside.iter_ones() {
            if let Some(pos) = vecs.iter().position(|v| v.get(c)) {
                let pivot = vecs.swap_remove(pos);
                for v in vecs.iter_mut() {
                    if v.get(c) {
                        v.xor_assign(&pivot);
                    }
                }
            }
        }
        Subspace::canonical(self.ambient_dim, vecs)
    }

    /// Image under the projection that forgets coordinate `i`.
    pub fn drop_coordinate(&self, i: usize) -> Subspace {
        Subspace::canonical(
            self.ambient_dim - 1,
            self.basis.iter().map(|b| b.remove_coordinate(i)).collect(),
        )
    }

    /// Image under the coordinate permutation `i ↦ perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Subspace {
        Subspace::canonical(
            self.ambient_dim,
            self.basis.iter().map(|b| b.permute(perm)).collect(),
        )
    }

    /// `self ⊕ other` inside GF(2)^(n+m), with `self` on the first `n`
    /// coordinates.
    pub fn direct_sum(&self, other: &Subspace) -> Subspace {
        let left = BitVector::zeros(self.ambient_dim);
        let right = BitVector::zeros(other.ambient_dim);
        let mut vecs: Vec<BitVector> = self.basis.iter().map(|b| b.concat(&right)).collect();
        vecs.extend(other.basis.iter().map(|b| left.concat(b)));
        Subspace::canonical(self.ambient_dim + other.ambient_dim, vecs)
    }

    /// All `2^dim` vectors, zero first. Gated at dimension 24.
    pub fn vectors(&self) -> Result<Vec<BitVector>> {
        crate::error::gate("subspace enumeration dimension", 24, self.dim())?;
        let mut out = Vec::with_capacity(1 << self.dim());
        out.push(BitVector::zeros(self.ambient_dim));
        for b in &self.basis {
            let k = out.len();
            for i in 0..k {
                out.push(out[i].xor(b));
            }
        }
        Ok(out)
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(n={}; ", self.ambient_dim)?;
        f.debug_list().entries(self.basis.iter()).finish()?;
        f.write_str(")")
    }
}

/// A symmetric `n × n` matrix whose nullspace equals the right nullspace of
/// `a` (`n = a.cols()`).
///
/// Row-reduce to `C = [I_r | C'']` up to a column permutation, then take
/// `[[I_r, C''], [C''ᵀ, C''ᵀ C'']]` and undo the permutation.
pub fn symmetrize_nullspace(a: &BitMatrix) -> BitMatrix {
    let n = a.cols();
    let (rows, pivots) = a.rref();
    let r = pivots.len();
    if r == 0 {
        return BitMatrix::zeros(n, n);
    }
    if r == n {
        return BitMatrix::identity(n);
    }
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let free: Vec<usize> = (0..n).filter(|&c| !is_pivot[c]).collect();
    // order[i] = original index of permuted position i
    let order: Vec<usize> = pivots.iter().chain(free.iter()).copied().collect();

    // C'' is r × (n − r)
    let c2 = BitMatrix::from_fn(r, n - r, |i, j| rows[i].get(free[j]));
    let c2t = c2.transpose();
    let c2t_c2 = c2t.mul(&c2).expect("shapes agree");

    let block = |i: usize, j: usize| -> bool {
        match (i < r, j < r) {
            (true, true) => i == j,
            (true, false) => c2.get(i, j - r),
            (false, true) => c2t.get(i - r, j),
            (false, false) => c2t_c2.get(i - r, j - r),
        }
    };
    let mut b = BitMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            if block(i, j) {
                b.set(order[i], order[j], true);
            }
        }
    }
    b
}
