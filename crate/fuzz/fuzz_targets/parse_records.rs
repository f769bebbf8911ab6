#![no_main]

use gridfloer::record::parse_records;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(records) = parse_records(text) {
        let lines: String = records.iter().map(|r| r.to_line() + "\n").collect();
        assert_eq!(parse_records(&lines).unwrap(), records);
    }
});
