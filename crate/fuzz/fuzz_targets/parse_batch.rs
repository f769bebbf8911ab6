#![no_main]

use gridfloer::{parse_batch, serialize_batch};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let ok: Vec<_> = parse_batch(text).into_iter().filter_map(Result::ok).collect();
    let again: Vec<_> = parse_batch(&serialize_batch(&ok)).into_iter().map(Result::unwrap).collect();
    assert_eq!(again, ok);
});
