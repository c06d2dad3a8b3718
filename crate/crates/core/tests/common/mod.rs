#![allow(dead_code)]

pub mod suites;

use std::path::PathBuf;

use framerole::lexicon::{load_lexicon, Iri, LexiconStore};

pub const VND: &str = "https://w3id.org/framester/vn/vn31/data/";
pub const IFACE: &str = "https://w3id.org/framester/data/interfacerole/";
pub const FN: &str = "https://w3id.org/framester/framenet/abox/frame/";

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

pub fn fixture(name: &str) -> String {
    std::fs::read_to_string(fixture_path(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

pub fn store(name: &str) -> LexiconStore {
    load_lexicon(&fixture(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

pub fn vnd(local: &str) -> Iri {
    Iri::new(format!("{VND}{local}")).unwrap()
}

pub fn iface(name: &str) -> Iri {
    Iri::new(format!("{IFACE}{name}")).unwrap()
}

pub fn frame(name: &str) -> Iri {
    Iri::new(format!("{FN}{name}")).unwrap()
}

/// Runs the CLI in-process and returns (exit code, stdout, stderr).
pub fn cli(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("framerole").chain(args.iter().copied());
    let code = framerole::cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}
