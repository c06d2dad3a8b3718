#![no_main]

use framerole::scorer::{read_semlink, write_semlink};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(map) = read_semlink(text) else { return };
    let again = read_semlink(&write_semlink(&map)).expect("written map parses");
    assert_eq!(again.len(), map.len());
});
