//! Cached retrieval of lexicon fragments from a remote SPARQL endpoint.
//!
//! Each query is a `CONSTRUCT` so the endpoint answers in N-Triples that
//! [`load_lexicon`](super::load_lexicon) can read directly. Responses are
//! cached as `<sha256-hex>.nt` files keyed by endpoint and query text.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};
use thiserror::Error;

use super::ntriples::{parse_ntriples, Iri, ParseError};
use super::vocab;

#[derive(Debug, Error)]
pub enum FetchError {
    #[error("network error: {0}")]
    Network(String),
    #[error("cannot write cache entry {path}: {source}")]
    CacheWrite { path: PathBuf, source: io::Error },
    #[error("cannot read cache entry {path}: {source}")]
    CacheRead { path: PathBuf, source: io::Error },
    #[error("malformed response at {0}")]
    Parse(#[from] ParseError),
}

/// The named query templates, with their parameters bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LexiconQuery {
    /// Senses whose label is the lemma (any case).
    SensesForLemma { lemma: String },
    /// Senses of the lemma that `closeMatch` the frame.
    SensesForLemmaAndFrame { lemma: String, frame: Iri },
    /// Senses of the lemma with their WordNet tag counts.
    MostFrequentSenses { lemma: String },
    /// Specific roles of a sense and their `subsumedUnder` ancestry.
    RolesForSense { sense: Iri },
    /// Preposition selections of a sense.
    PrepSelections { sense: Iri },
}

fn escape_literal(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

impl LexiconQuery {
    pub fn name(&self) -> &'static str {
        match self {
            LexiconQuery::SensesForLemma { .. } => "senses",
            LexiconQuery::SensesForLemmaAndFrame { .. } => "senses-for-frame",
            LexiconQuery::MostFrequentSenses { .. } => "most-frequent",
            LexiconQuery::RolesForSense { .. } => "roles",
            LexiconQuery::PrepSelections { .. } => "preps",
        }
    }

    pub fn to_sparql(&self) -> String {
        let sense_head = format!(
            "?s <{ty}> ?t . ?s <{label}> ?l .",
            ty = vocab::RDF_TYPE,
            label = vocab::RDFS_LABEL
        );
        let sense_body = format!(
            "?s <{ty}> ?t . VALUES ?t {{ <{vn}> <{fs}> }} ?s <{label}> ?l .",
            ty = vocab::RDF_TYPE,
            vn = vocab::VN31_VERB_SENSE,
            fs = vocab::FSCHEMA_VERB_SENSE,
            label = vocab::RDFS_LABEL
        );
        match self {
            LexiconQuery::SensesForLemma { lemma } => format!(
                "CONSTRUCT {{ {sense_head} ?s <{cls}> ?c . }} WHERE {{ {sense_body} \
                 FILTER(LCASE(STR(?l)) = LCASE(\"{lemma}\")) OPTIONAL {{ ?s <{cls}> ?c }} }}",
                cls = vocab::VN31_IN_VERB_CLASS,
                lemma = escape_literal(lemma)
            ),
            LexiconQuery::SensesForLemmaAndFrame { lemma, frame } => format!(
                "CONSTRUCT {{ {sense_head} ?s <{cm}> <{frame}> . }} WHERE {{ {sense_body} \
                 ?s <{cm}> <{frame}> . FILTER(LCASE(STR(?l)) = LCASE(\"{lemma}\")) }}",
                cm = vocab::SKOS_CLOSE_MATCH,
                lemma = escape_literal(lemma)
            ),
            LexiconQuery::MostFrequentSenses { lemma } => format!(
                "CONSTRUCT {{ {sense_head} ?s <{cm}> ?w . ?w <{tc}> ?f . }} WHERE {{ {sense_body} \
                 ?s <{cm}> ?w . ?w <{tc}> ?f . FILTER(datatype(?f) = <{xsd}>) \
                 FILTER(LCASE(STR(?l)) = LCASE(\"{lemma}\")) }}",
                cm = vocab::SKOS_CLOSE_MATCH,
                tc = vocab::WN_TAG_COUNT,
                xsd = vocab::XSD_INT,
                lemma = escape_literal(lemma)
            ),
            LexiconQuery::RolesForSense { sense } => format!(
                "CONSTRUCT {{ ?r <{ty}> <{arg}> . ?r <{ivs}> <{sense}> . ?r <{label}> ?rl . \
                 ?a <{su}> ?b . ?b <{ty}> ?bt . ?b <{label}> ?bl . }} WHERE {{ \
                 ?r <{ty}> <{arg}> ; <{ivs}> <{sense}> . OPTIONAL {{ ?r <{label}> ?rl }} \
                 OPTIONAL {{ ?r <{su}>* ?a . ?a <{su}> ?b . OPTIONAL {{ ?b <{ty}> ?bt }} \
                 OPTIONAL {{ ?b <{label}> ?bl }} }} }}",
                ty = vocab::RDF_TYPE,
                arg = vocab::VN31_ARGUMENT,
                ivs = vocab::VN31_IN_VERB_SENSE,
                label = vocab::RDFS_LABEL,
                su = vocab::FSCHEMA_SUBSUMED_UNDER
            ),
            LexiconQuery::PrepSelections { sense } => format!(
                "CONSTRUCT {{ ?x <{ty}> <{sel}> . ?x <{hvs}> <{sense}> . ?x <{hp}> ?p . ?x <{hga}> ?g . }} \
                 WHERE {{ ?x <{ty}> <{sel}> ; <{hvs}> <{sense}> ; <{hp}> ?p ; <{hga}> ?g . }}",
                ty = vocab::RDF_TYPE,
                sel = vocab::VN_SENSE_PREP_SELECTION,
                hvs = vocab::VN_HAS_VERB_SENSE,
                hp = vocab::VN_HAS_PREPOSITION,
                hga = vocab::VN_HAS_GENERIC_ARGUMENT
            ),
        }
    }
}

/// Hex SHA-256 of `endpoint`, a newline, and the query text.
pub fn cache_key(endpoint_url: &str, query: &LexiconQuery) -> String {
    let mut hasher = Sha256::new();
    hasher.update(endpoint_url.as_bytes());
    hasher.update(b"\n");
    hasher.update(query.to_sparql().as_bytes());
    hex::encode(hasher.finalize())
}

/// Returns the cached N-Triples for `query`, fetching and caching on a miss.
///
/// A response that does not parse as N-Triples is returned as an error and
/// never cached. Writes go through a temporary file in `cache_dir` followed
/// by a rename, so concurrent fetchers cannot leave a partial entry behind.
pub fn remote_fetch(endpoint_url: &str, query: &LexiconQuery, cache_dir: &Path) -> Result<String, FetchError> {
    let path = cache_dir.join(format!("{}.nt", cache_key(endpoint_url, query)));
    match fs::read_to_string(&path) {
        Ok(text) => return Ok(text),
        Err(e) if e.kind() == io::ErrorKind::NotFound => {}
        Err(source) => return Err(FetchError::CacheRead { path, source }),
    }

    let body = http_get(endpoint_url, &query.to_sparql())?;
    parse_ntriples(&body)?;

    let write_err = |source| FetchError::CacheWrite {
        path: path.clone(),
        source,
    };
    fs::create_dir_all(cache_dir).map_err(write_err)?;
    let mut tmp = tempfile::NamedTempFile::new_in(cache_dir).map_err(write_err)?;
    tmp.write_all(body.as_bytes()).map_err(write_err)?;
    tmp.persist(&path).map_err(|e| write_err(e.error))?;
    Ok(body)
}

fn http_get(endpoint_url: &str, sparql: &str) -> Result<String, FetchError> {
    let mut response = ureq::get(endpoint_url)
        .query("query", sparql)
        .header("Accept", "application/n-triples")
        .call()
        .map_err(|e| FetchError::Network(e.to_string()))?;
    response
        .body_mut()
        .read_to_string()
        .map_err(|e| FetchError::Network(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cache_key_depends_on_endpoint_and_query() {
        let q = LexiconQuery::SensesForLemma { lemma: "conquer".into() };
        let other = LexiconQuery::SensesForLemma { lemma: "pour".into() };
        let a = cache_key("http://a/sparql", &q);
        assert_eq!(a.len(), 64);
        assert_eq!(a, cache_key("http://a/sparql", &q));
        assert_ne!(a, cache_key("http://b/sparql", &q));
        assert_ne!(a, cache_key("http://a/sparql", &other));
    }

    #[test]
    fn lemma_is_escaped_in_query_text() {
        let q = LexiconQuery::SensesForLemma { lemma: "a\"b".into() };
        assert!(q.to_sparql().contains("\"a\\\"b\""));
    }
}
