//! Knowledge-based semantic role labeling.
//!
//! Dependency-parsed sentences and frame annotations go in; role
//! assignments grounded in a Framester-style lexicon come out, either as
//! a role-oriented RDF graph or as a flat TSV. The crate also ships a
//! CoNLL-2009 style semantic-dependency scorer, a strict filler-containment
//! scorer and a two-system ensemble merge.
//!
//! ```
//! use framerole::{deps, heuristics::RoleTable, lexicon, srl};
//!
//! let store = lexicon::load_lexicon("").unwrap();
//! let graph = deps::parse_corenlp_triples("root, ROOT-0, runs-1").unwrap();
//! let out = srl::label_sentence(&graph, &[], &store, &RoleTable::default());
//! assert!(out.is_empty());
//! ```

pub mod cli;
pub mod deps;
pub mod ensemble;
pub mod heuristics;
pub mod kg;
pub mod lexicon;
pub mod scorer;
pub mod srl;
