#![no_main]

use framerole::scorer::{read_conll2009, score};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(sets) = read_conll2009(text) else { return };
    let r = score(&sets, &sets);
    assert_eq!(r.labeled_correct, r.predicted_total);
});
