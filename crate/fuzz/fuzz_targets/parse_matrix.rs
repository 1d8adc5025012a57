#![no_main]

use adjmat::format::{matrix_to_text, parse_matrix};
use adjmat::gf2::symmetrize_nullspace;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(a) = parse_matrix(text) else { return };
    let text = matrix_to_text(&a);
    if a.rows() > 0 {
        assert_eq!(parse_matrix(&text).unwrap(), a);
    }
    if a.cols() <= 64 {
        let s = symmetrize_nullspace(&a);
        assert!(s.is_symmetric());
        assert_eq!(s.nullspace(), a.nullspace());
    }
});
