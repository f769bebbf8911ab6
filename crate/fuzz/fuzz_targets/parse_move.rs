#![no_main]

use gridfloer::{apply_move, GridDiagram, GridMove};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(m) = text.parse::<GridMove>() else { return };
    assert_eq!(m.to_string().parse::<GridMove>().unwrap(), m);
    // out-of-range indices must be refused, not panic
    let g = GridDiagram::new(5, &[0, 1, 2, 3, 4], &[2, 3, 4, 0, 1]).unwrap();
    let _ = apply_move(&g, m);
});
