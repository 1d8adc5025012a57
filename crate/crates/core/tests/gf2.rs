use adjmat::gf2::symmetrize_nullspace;
use adjmat::{BitMatrix, BitVector, Subspace};
use proptest::prelude::*;

fn matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = BitMatrix> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(|(r, c)| {
        proptest::collection::vec(any::<bool>(), r * c)
            .prop_map(move |bits| BitMatrix::from_fn(r, c, |i, j| bits[i * c + j]))
    })
}

fn matrix_with_cols(max_rows: usize, c: usize) -> impl Strategy<Value = BitMatrix> {
    (1..=max_rows).prop_flat_map(move |r| {
        proptest::collection::vec(any::<bool>(), r * c)
            .prop_map(move |bits| BitMatrix::from_fn(r, c, |i, j| bits[i * c + j]))
    })
}

/// Rank by plain elimination on integer rows.
fn oracle_rank(a: &BitMatrix) -> usize {
    let mut rows: Vec<u128> = (0..a.rows())
        .map(|i| (0..a.cols()).filter(|&j| a.get(i, j)).fold(0u128, |m, j| m | 1 << j))
        .collect();
    let mut rank = 0;
    for col in 0..a.cols() {
        if let Some(p) = (rank..rows.len()).find(|&r| rows[r] >> col & 1 == 1) {
            rows.swap(rank, p);
            for r in 0..rows.len() {
                if r != rank && rows[r] >> col & 1 == 1 {
                    rows[r] ^= rows[rank];
                }
            }
            rank += 1;
        }
    }
    rank
}

proptest! {
    #[test]
    fn rank_plus_nullity_is_width(a in matrix(10, 70)) {
        prop_assert_eq!(a.rank(), oracle_rank(&a));
        prop_assert_eq!(a.rank() + a.nullity(), a.cols());
        prop_assert_eq!(a.nullspace().dim(), a.nullity());
        prop_assert_eq!(a.transpose().rank(), a.rank());
    }

    #[test]
    fn nullspace_is_orthogonal_to_rows(a in matrix(8, 12)) {
        let ns = a.nullspace();
        for z in ns.basis() {
            prop_assert!(a.mul_vec(z).is_zero());
        }
        prop_assert_eq!(ns.orthogonal_complement(), a.row_space());
    }

    #[test]
    fn subspace_form_is_canonical(a in matrix(6, 9), shuffle in any::<u64>()) {
        let mut rows: Vec<BitVector> = a.row_vectors().to_vec();
        let k = (shuffle as usize) % rows.len();
        rows.rotate_left(k);
        if rows.len() > 1 {
            let extra = rows[0].xor(&rows[1]);
            rows.push(extra);
        }
        prop_assert_eq!(Subspace::span(a.cols(), rows).unwrap(), a.row_space());
    }

    #[test]
    fn dimension_formula((a, b) in (1..=8usize).prop_flat_map(|c| (matrix_with_cols(5, c), matrix_with_cols(5, c)))) {
        let (u, w) = (a.row_space(), b.row_space());
        let sum = u.sum(&w).unwrap();
        let meet = u.intersection(&w).unwrap();
        prop_assert_eq!(sum.dim() + meet.dim(), u.dim() + w.dim());
        prop_assert!(meet.is_subspace_of(&u) && meet.is_subspace_of(&w));
        prop_assert_eq!(u.orthogonal_complement().orthogonal_complement(), u);
    }

    #[test]
    fn symmetrized_matrix_keeps_nullspace(a in matrix(8, 8)) {
        let s = symmetrize_nullspace(&a);
        prop_assert!(s.is_symmetric());
        prop_assert_eq!(s.nullspace(), a.nullspace());
    }
}

#[test]
fn permuting_a_subspace_moves_coordinates() {
    let w = Subspace::span(3, [BitVector::from_indices(3, [0, 1])]).unwrap();
    let moved = w.permute(&[2, 0, 1]);
    assert_eq!(moved.basis(), &[BitVector::from_indices(3, [0, 2])]);
}
