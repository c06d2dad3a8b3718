#![no_main]

use framerole::scorer::{read_gold_tsv, write_gold_tsv};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(rows) = read_gold_tsv(text) else { return };
    assert_eq!(read_gold_tsv(&write_gold_tsv(&rows)).expect("written gold parses"), rows);
});
