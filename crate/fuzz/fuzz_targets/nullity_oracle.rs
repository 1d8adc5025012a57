#![no_main]

use adjmat::graph::{default_labels, reconstruct_from_nullity_oracle};
use libfuzzer_sys::fuzz_target;

// The oracle answers from the input bytes, so it may be inconsistent; the
// decoder must either reject it or return a graph that reproduces every
// answer it was given.
fuzz_target!(|data: &[u8]| {
    let Some((&first, rest)) = data.split_first() else { return };
    let n = (first % 9) as usize;
    let answer = |s: &[usize]| -> usize {
        let key = s.iter().fold(0usize, |k, &v| k * 9 + v + 1);
        rest.get(key % rest.len().max(1)).map_or(0, |b| (b % 4) as usize)
    };
    if let Ok(g) = reconstruct_from_nullity_oracle(default_labels(n), answer) {
        for v in 0..n {
            assert_eq!(g.nullity_of(&[v]).unwrap(), answer(&[v]));
            for w in v + 1..n {
                assert_eq!(g.nullity_of(&[v, w]).unwrap(), answer(&[v, w]));
            }
        }
    }
});
