//! Role-oriented RDF output.
//!
//! Each predicate token with at least one assignment becomes an occurrence
//! node typed with its verb sense. Each assignment adds three triples: the
//! role edge from the occurrence to a filler node, the filler's label and
//! its token range as a single `"start:end"` literal.

use std::collections::{BTreeMap, BTreeSet};

use percent_encoding::{utf8_percent_encode, AsciiSet, NON_ALPHANUMERIC};
use thiserror::Error;

use crate::deps::DepGraph;
use crate::lexicon::vocab::{RDFS_LABEL, RDF_TYPE};
use crate::lexicon::{write_canonical, Iri, Literal, Triple};
use crate::srl::{RoleAssignment, RoleLabel};

pub const DEFAULT_BASE: &str = "https://w3id.org/framerole/data";
pub const NS: &str = "https://w3id.org/framerole/ns#";
pub const SPAN: &str = "https://w3id.org/framerole/ns#span";
pub const SPAN_DATATYPE: &str = "https://w3id.org/framerole/ns#TokenRange";

const SEGMENT: &AsciiSet = &NON_ALPHANUMERIC.remove(b'-').remove(b'_').remove(b'.');

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KgError {
    #[error("assignment for sentence {found:?} given with graph of sentence {expected:?}")]
    MismatchedSentence { expected: String, found: String },
    #[error("sentence {sentence}: token {token} not in the dependency graph")]
    UnknownToken { sentence: String, token: usize },
    #[error("invalid base IRI {0:?}")]
    InvalidBase(String),
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct KnowledgeGraph {
    triples: BTreeSet<Triple>,
    namespaces: BTreeMap<String, String>,
}

impl KnowledgeGraph {
    pub fn from_triples(triples: impl IntoIterator<Item = Triple>) -> Self {
        KnowledgeGraph {
            triples: triples.into_iter().collect(),
            namespaces: BTreeMap::new(),
        }
    }

    pub fn triples(&self) -> &BTreeSet<Triple> {
        &self.triples
    }

    pub fn namespaces(&self) -> &BTreeMap<String, String> {
        &self.namespaces
    }

    pub fn len(&self) -> usize {
        self.triples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triples.is_empty()
    }

    /// Adds every triple of `other`. Namespace maps are unioned.
    pub fn extend(&mut self, other: KnowledgeGraph) {
        self.triples.extend(other.triples);
        self.namespaces.extend(other.namespaces);
    }

    pub fn serialize(&self) -> String {
        write_canonical(&self.triples)
    }
}

fn segment(s: &str) -> String {
    utf8_percent_encode(s, SEGMENT).to_string()
}

fn iri(s: String) -> Iri {
    Iri::new(s).expect("minted IRIs are percent-encoded under a valid base")
}

pub fn occurrence_iri(base: &str, sentence_id: &str, token: usize) -> Iri {
    iri(format!("{base}/occ/{}/{token}", segment(sentence_id)))
}

pub fn filler_iri(base: &str, sentence_id: &str, predicate: usize, head: usize) -> Iri {
    iri(format!("{base}/filler/{}/{predicate}/{head}", segment(sentence_id)))
}

pub fn role_iri(base: &str, label: &RoleLabel) -> Iri {
    match label {
        RoleLabel::Specific(r) => r.clone(),
        RoleLabel::InterfaceFromLexicon(v) => v.id.clone(),
        RoleLabel::InterfaceFallback(c) => iri(format!("{base}/role/{}", c.name())),
    }
}

/// Builds the graph for one sentence with the default base.
pub fn build_graph(assignments: &[RoleAssignment], graph: &DepGraph) -> Result<KnowledgeGraph, KgError> {
    build_graph_with_base(assignments, graph, DEFAULT_BASE)
}

pub fn build_graph_with_base(
    assignments: &[RoleAssignment],
    graph: &DepGraph,
    base: &str,
) -> Result<KnowledgeGraph, KgError> {
    let base = base.trim_end_matches('/');
    if Iri::new(format!("{base}/x")).is_err() {
        return Err(KgError::InvalidBase(base.to_string()));
    }
    let sid = graph.sentence_id();
    let rdf_type = iri(RDF_TYPE.to_string());
    let label = iri(RDFS_LABEL.to_string());
    let span = iri(SPAN.to_string());
    let span_dt = iri(SPAN_DATATYPE.to_string());

    let mut kg = KnowledgeGraph::default();
    for a in assignments {
        if a.sentence_id != sid {
            return Err(KgError::MismatchedSentence {
                expected: sid.to_string(),
                found: a.sentence_id.clone(),
            });
        }
        for token in [a.predicate_token, a.filler_head] {
            if graph.token(token).is_none() {
                return Err(KgError::UnknownToken {
                    sentence: sid.to_string(),
                    token,
                });
            }
        }
        let occ = occurrence_iri(base, sid, a.predicate_token);
        let class = match &a.sense {
            Some(sense) => sense.clone(),
            None => iri(format!("{base}/predicate/{}", segment(&a.predicate_lemma))),
        };
        let filler = filler_iri(base, sid, a.predicate_token, a.filler_head);
        kg.triples.insert(Triple::new(occ.clone(), rdf_type.clone(), class));
        kg.triples.insert(Triple::new(occ, role_iri(base, &a.label), filler.clone()));
        kg.triples
            .insert(Triple::new(filler.clone(), label.clone(), Literal::plain(a.filler.text.clone())));
        kg.triples.insert(Triple::new(
            filler,
            span.clone(),
            Literal::typed(format!("{}:{}", a.filler.start, a.filler.end), span_dt.clone()),
        ));
    }
    if !kg.triples.is_empty() {
        for (prefix, ns) in [
            ("rdf", "http://www.w3.org/1999/02/22-rdf-syntax-ns#"),
            ("rdfs", "http://www.w3.org/2000/01/rdf-schema#"),
            ("fr", NS),
        ] {
            kg.namespaces.insert(prefix.to_string(), ns.to_string());
        }
        kg.namespaces.insert("data".to_string(), format!("{base}/"));
    }
    Ok(kg)
}
