#![no_main]

use framerole::srl::{read_assignments, write_assignments};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(rows) = read_assignments(text) else { return };
    let again = read_assignments(&write_assignments(&rows)).expect("written assignments parse");
    assert_eq!(again, rows);
});
