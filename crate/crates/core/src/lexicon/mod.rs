//! Framester-style lexicon: N-Triples loading, the indexed store and the
//! sense, role, frame and preposition queries the labeler depends on.

mod ntriples;
mod remote;
mod store;
pub mod vocab;

use thiserror::Error;

pub use ntriples::{parse_line, parse_ntriples, write_canonical, Iri, IriError, Literal, ParseError, Term, Triple};
pub use remote::{cache_key, remote_fetch, FetchError, LexiconQuery};
pub use store::{
    load_lexicon, InterfaceRoleId, LexiconStats, LexiconStore, PrepSelection, SpecificRole, VerbSense,
};

#[derive(Debug, Error)]
pub enum LexiconError {
    #[error("parse error at {0}")]
    Parse(ParseError),
    #[error("cycle in {relation}: {}", .members.iter().map(Iri::as_str).collect::<Vec<_>>().join(" -> "))]
    Cycle {
        relation: &'static str,
        members: Vec<Iri>,
    },
    #[error("unknown role <{0}>")]
    UnknownRole(Iri),
    #[error("interface role name {name:?} used by both <{first}> and <{second}>")]
    DuplicateInterfaceRole { name: String, first: Iri, second: Iri },
    #[error("invalid value: {0}")]
    InvalidValue(String),
}

impl LexiconError {
    /// Structural violations of the loaded graph, as opposed to syntax or value errors.
    pub fn is_invariant_violation(&self) -> bool {
        matches!(self, LexiconError::Cycle { .. } | LexiconError::DuplicateInterfaceRole { .. })
    }
}
