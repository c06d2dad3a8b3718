#![no_main]

use framerole::deps::{parse_corenlp_document, parse_corenlp_triples, write_corenlp_triples};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let _ = parse_corenlp_document(text);
    let Ok(graph) = parse_corenlp_triples(text) else { return };
    let again = parse_corenlp_triples(&write_corenlp_triples(&graph)).expect("written triples parse");
    assert_eq!(again.edges().len(), graph.edges().len());
});
