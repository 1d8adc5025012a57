#![no_main]

use adjmat::delta_matroid::SetSystem;
use adjmat::graph::default_labels;
use libfuzzer_sys::fuzz_target;

// byte 0 picks the ground size (up to 6); the remaining bits say which
// subsets belong to the family
fuzz_target!(|data: &[u8]| {
    let Some((&first, rest)) = data.split_first() else { return };
    let n = (first % 7) as usize;
    let family = (0u32..1 << n).filter(|&y| {
        let (byte, bit) = (y as usize / 8, y % 8);
        rest.get(byte).is_some_and(|b| b >> bit & 1 == 1)
    });
    let d = SetSystem::new(default_labels(n), family).unwrap();
    if let Ok(g) = d.to_graph() {
        assert!(d.is_normal());
        assert_eq!(SetSystem::from_graph(&g).unwrap(), d);
    }
});
