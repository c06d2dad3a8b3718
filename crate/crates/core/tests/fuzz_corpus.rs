//! Replays the checked-in fuzz seeds through the same checks the fuzz
//! targets make, so the seeds stay meaningful without a fuzzing toolchain.

use std::collections::BTreeSet;
use std::fs;
use std::path::PathBuf;

use framerole::deps::{parse_conllu, parse_corenlp_document, parse_corenlp_triples, write_conllu, write_corenlp_triples};
use framerole::heuristics::load_role_table;
use framerole::lexicon::{load_lexicon, parse_ntriples, write_canonical};
use framerole::scorer::{read_conll2009, read_gold_tsv, read_semlink, score, write_gold_tsv, write_semlink};
use framerole::srl::{parse_frame_annotations, read_assignments, write_assignments, write_frame_annotations};

fn seeds(target: &str) -> Vec<(String, String)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus").join(target);
    let mut out: Vec<(String, String)> = fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|e| e.unwrap().path())
        .map(|p| (p.file_name().unwrap().to_string_lossy().into_owned(), fs::read_to_string(&p).unwrap()))
        .collect();
    out.sort();
    assert!(!out.is_empty(), "no seeds for {target}");
    out
}

/// Runs `check` on every seed; returns how many seeds parsed.
fn replay(target: &str, check: impl Fn(&str) -> bool) -> usize {
    seeds(target).iter().filter(|(_, text)| check(text)).count()
}

#[test]
fn ntriples() {
    let ok = replay("ntriples", |text| {
        let Ok(triples) = parse_ntriples(text) else { return false };
        let written = write_canonical(&triples);
        let a: BTreeSet<_> = triples.into_iter().collect();
        let b: BTreeSet<_> = parse_ntriples(&written).unwrap().into_iter().collect();
        assert_eq!(a, b);
        true
    });
    assert_eq!(ok, 3);
}

#[test]
fn lexicon() {
    let ok = replay("lexicon", |text| {
        let Ok(store) = load_lexicon(text) else { return false };
        assert_eq!(load_lexicon(&store.serialize()).unwrap().stats(), store.stats());
        for sense in store.senses() {
            assert_eq!(store.most_frequent_senses(&sense.lemma).len(), store.senses_for_lemma(&sense.lemma).len());
        }
        true
    });
    // all but the cyclic one
    assert_eq!(ok, 6);
}

#[test]
fn conllu() {
    let ok = replay("conllu", |text| {
        let Ok(graphs) = parse_conllu(text) else { return false };
        let again = parse_conllu(&write_conllu(&graphs)).unwrap();
        assert_eq!(again.len(), graphs.len());
        for (a, b) in again.iter().zip(&graphs) {
            assert_eq!(a.tokens(), b.tokens());
        }
        true
    });
    assert_eq!(ok, 5);
}

#[test]
fn corenlp() {
    let ok = replay("corenlp", |text| {
        let _ = parse_corenlp_document(text);
        let Ok(graph) = parse_corenlp_triples(text) else { return false };
        let again = parse_corenlp_triples(&write_corenlp_triples(&graph)).unwrap();
        assert_eq!(again.edges().len(), graph.edges().len());
        true
    });
    // the two-sentence seed is one document, not one sentence
    assert_eq!(ok, 3);
}

#[test]
fn conll2009() {
    let ok = replay("conll2009", |text| {
        let Ok(sets) = read_conll2009(text) else { return false };
        let r = score(&sets, &sets);
        assert_eq!(r.labeled_correct, r.predicted_total);
        true
    });
    assert_eq!(ok, 2);
}

#[test]
fn gold_tsv() {
    let ok = replay("gold_tsv", |text| {
        let Ok(rows) = read_gold_tsv(text) else { return false };
        assert_eq!(read_gold_tsv(&write_gold_tsv(&rows)).unwrap(), rows);
        true
    });
    assert_eq!(ok, 2);
}

#[test]
fn semlink() {
    let ok = replay("semlink", |text| {
        let Ok(map) = read_semlink(text) else { return false };
        assert_eq!(read_semlink(&write_semlink(&map)).unwrap().len(), map.len());
        true
    });
    assert_eq!(ok, 1);
}

#[test]
fn role_table() {
    let ok = replay("role_table", |text| {
        let Ok(table) = load_role_table(Some(text)) else { return false };
        assert_eq!(load_role_table(Some(&table.to_config())).unwrap(), table);
        true
    });
    assert_eq!(ok, 1);
}

#[test]
fn frames_tsv() {
    let ok = replay("frames_tsv", |text| {
        let Ok(anns) = parse_frame_annotations(text) else { return false };
        assert_eq!(parse_frame_annotations(&write_frame_annotations(&anns)).unwrap(), anns);
        true
    });
    // token 0 is rejected
    assert_eq!(ok, 2);
}

#[test]
fn assignments_tsv() {
    let ok = replay("assignments_tsv", |text| {
        let Ok(rows) = read_assignments(text) else { return false };
        assert_eq!(read_assignments(&write_assignments(&rows)).unwrap(), rows);
        true
    });
    assert_eq!(ok, 2);
}
