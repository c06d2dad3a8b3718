#![no_main]

use framerole::deps::{parse_conllu, write_conllu};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(graphs) = parse_conllu(text) else { return };
    for g in &graphs {
        let root = g.subtree_yield(g.root()).expect("root exists");
        assert_eq!(root.indices.len(), g.tokens().len());
    }
    let again = parse_conllu(&write_conllu(&graphs)).expect("written CoNLL-U parses");
    assert_eq!(again.len(), graphs.len());
    for (a, b) in again.iter().zip(&graphs) {
        assert_eq!(a.tokens(), b.tokens());
    }
});
