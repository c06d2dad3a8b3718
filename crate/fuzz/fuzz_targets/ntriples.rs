#![no_main]

use std::collections::BTreeSet;

use framerole::lexicon::{parse_ntriples, write_canonical};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(triples) = parse_ntriples(text) else { return };
    let written = write_canonical(&triples);
    let again = parse_ntriples(&written).expect("canonical output parses");
    let a: BTreeSet<_> = triples.into_iter().collect();
    let b: BTreeSet<_> = again.into_iter().collect();
    assert_eq!(a, b);
    assert_eq!(write_canonical(&b), written);
});
