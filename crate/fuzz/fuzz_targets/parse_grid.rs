#![no_main]

use gridfloer::{parse_grid, serialize_grid};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    // anything accepted must survive a round trip unchanged
    if let Ok(g) = parse_grid(text) {
        assert_eq!(parse_grid(&serialize_grid(&g)).unwrap(), g);
        let _ = gridfloer::link_summary(&g);
    }
});
