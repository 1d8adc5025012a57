use std::collections::BTreeMap;

use adjmat::adjacency_matroid::adjacency_matroid;
use adjmat::format::{parse_graph, parse_multigraph};
use adjmat::polynomials::{
    interlace_recursive, interlace_subset, lambda_leading, q_from_lambda, tutte_recursive, tutte_subset,
    BivariatePolynomial,
};
use adjmat::{BinaryMatroid, BitMatrix, LoopedSimpleGraph};
use proptest::prelude::*;

/// Rank of a set of columns given as bitmasks of row indices.
fn rank(cols: impl IntoIterator<Item = u64>) -> u32 {
    let mut basis: Vec<u64> = Vec::new();
    for mut c in cols {
        for &b in &basis {
            c = c.min(c ^ b);
        }
        if c != 0 {
            basis.push(c);
            basis.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    basis.len() as u32
}

fn binomial(n: u32, k: u32) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

/// Σ over the histogram of `coef · (x−1)^a (y−1)^b`, expanded by hand.
fn expand(hist: &BTreeMap<(u32, u32), i64>) -> BivariatePolynomial {
    let mut p = BivariatePolynomial::zero();
    for (&(a, b), &coef) in hist {
        for i in 0..=a {
            for j in 0..=b {
                let sign = if (a - i + b - j) % 2 == 0 { 1 } else { -1 };
                p.add_term(i, j, coef * sign * binomial(a, i) * binomial(b, j));
            }
        }
    }
    p
}

/// `q(G)` straight from its subset expansion.
fn oracle_q(g: &LoopedSimpleGraph) -> BivariatePolynomial {
    let n = g.n();
    let a = g.adjacency();
    let mut hist = BTreeMap::new();
    for s in 0u64..1 << n {
        let idx: Vec<usize> = (0..n).filter(|i| s >> i & 1 == 1).collect();
        let cols = idx.iter().map(|&j| idx.iter().enumerate().filter(|(_, &i)| a.get(i, j)).fold(0, |m, (k, _)| m | 1 << k));
        let r = rank(cols);
        *hist.entry((r, idx.len() as u32 - r)).or_insert(0) += 1;
    }
    expand(&hist)
}

/// Tutte polynomial of the column matroid of `a` from the rank function.
fn oracle_tutte(a: &BitMatrix) -> BivariatePolynomial {
    let col = |j: usize| (0..a.rows()).filter(|&i| a.get(i, j)).fold(0u64, |m, i| m | 1 << i);
    let n = a.cols();
    let full = rank((0..n).map(col));
    let mut hist = BTreeMap::new();
    for s in 0u64..1 << n {
        let r = rank((0..n).filter(|j| s >> j & 1 == 1).map(col));
        *hist.entry((full - r, s.count_ones() - r)).or_insert(0) += 1;
    }
    expand(&hist)
}

fn graph(text: &str) -> LoopedSimpleGraph {
    parse_graph(text).unwrap().into_simple().0
}

const P3: &str = "vertices a b c\nedge a b\nedge b c\n";
const C4: &str = "vertices a b c d\nedge a b\nedge b c\nedge c d\nedge a d\n";
const K4: &str = "vertices a b c d\nedge a b\nedge a c\nedge a d\nedge b c\nedge b d\nedge c d\n";
const K3_LOOPED: &str = "vertices a b c\nloop c\nedge a b\nedge b c\nedge a c\n";
const PATH_TWO_LOOPS: &str = "vertices a b c d\nloop a\nloop b\nedge a b\nedge b c\nedge c d\n";

#[test]
fn frozen_interlace_values() {
    let cases = [
        (P3, "x^2 y + x^2 - 2 x y - 2 x + y^2 + 2 y"),
        (C4, "x^2 y^2 + 2 x^2 y + x^2 - 2 x y^2 - 4 x y - 2 x + 3 y^2 + 2 y"),
        (K4, "x^4 - 4 x^3 + 4 x^2 y + 8 x^2 - 8 x y - 8 x + 8 y"),
        (K3_LOOPED, "x^3 - 2 x + 2 y"),
        (PATH_TWO_LOOPS, "x^3 y + 2 x^3 - 3 x^2 y - 4 x^2 + x y^2 + 5 x y + x - y^2 - y"),
    ];
    for (text, expected) in cases {
        let g = graph(text);
        assert_eq!(oracle_q(&g).to_string(), expected, "oracle on {text:?}");
        assert_eq!(interlace_subset(&g).unwrap().to_string(), expected);
        assert_eq!(interlace_recursive(&g).unwrap().to_string(), expected);
        assert_eq!(q_from_lambda(&g).unwrap().to_string(), expected);
    }
}

#[test]
fn frozen_tutte_values() {
    let cases = [
        (P3, "x^2 + x y", "y - 1"),
        (C4, "x^2 + 2 x y + y^2", "y^2 - 2 y + 1"),
        (K4, "x^4", "1"),
        (K3_LOOPED, "x^3", "1"),
        (PATH_TWO_LOOPS, "x^3 + x^2 + x y", "y - 1"),
    ];
    for (text, tutte, lambda) in cases {
        let g = graph(text);
        let m = adjacency_matroid(&g);
        assert_eq!(oracle_tutte(g.adjacency()).to_string(), tutte, "oracle on {text:?}");
        assert_eq!(tutte_subset(&m).unwrap().to_string(), tutte);
        assert_eq!(tutte_recursive(&m).unwrap().to_string(), tutte);
        assert_eq!(lambda_leading(&m).to_string(), lambda);
    }
}

#[test]
fn tutte_of_complete_graph_polygon_matroid() {
    let k4 = parse_multigraph(K4).unwrap();
    let m = BinaryMatroid::polygon_matroid(&k4).unwrap();
    let expected = "x^3 + 3 x^2 + 4 x y + 2 x + y^3 + 3 y^2 + 2 y";
    assert_eq!(tutte_subset(&m).unwrap().to_string(), expected);
    assert_eq!(tutte_recursive(&m).unwrap().to_string(), expected);
}

fn random_graph(max_n: usize) -> impl Strategy<Value = LoopedSimpleGraph> {
    (0..=max_n, any::<u64>()).prop_map(|(n, seed)| {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        LoopedSimpleGraph::random(n, &mut rng)
    })
}

fn random_matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = BitMatrix> {
    (1..=max_rows, 0..=max_cols).prop_flat_map(|(r, c)| {
        proptest::collection::vec(any::<bool>(), r * c)
            .prop_map(move |bits| BitMatrix::from_fn(r, c, |i, j| bits[i * c + j]))
    })
}

proptest! {
    #[test]
    fn interlace_evaluators_match_oracle(g in random_graph(8)) {
        let q = oracle_q(&g);
        prop_assert_eq!(&interlace_subset(&g).unwrap(), &q);
        prop_assert_eq!(&interlace_recursive(&g).unwrap(), &q);
        prop_assert_eq!(&q_from_lambda(&g).unwrap(), &q);
        prop_assert_eq!(q.eval(2, 2), 1i64 << g.n());
    }

    #[test]
    fn tutte_evaluators_match_oracle(a in random_matrix(7, 12)) {
        let m = BinaryMatroid::from_matrix(&a, adjmat::graph::default_labels(a.cols())).unwrap();
        let t = oracle_tutte(&a);
        prop_assert_eq!(&tutte_subset(&m).unwrap(), &t);
        prop_assert_eq!(&tutte_recursive(&m).unwrap(), &t);
        prop_assert_eq!(tutte_subset(&m.dual()).unwrap(), t.swap_xy());
        prop_assert_eq!(t.eval(2, 2), 1i64 << a.cols());
    }

    #[test]
    fn polynomial_ring_laws(a in random_graph(4), b in random_graph(4)) {
        let p = interlace_subset(&a).unwrap();
        let q = interlace_subset(&b).unwrap();
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p + &q) - &q, p.clone());
        prop_assert_eq!((&p * &q).eval(3, -2), p.eval(3, -2) * q.eval(3, -2));
    }
}
