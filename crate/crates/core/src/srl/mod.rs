//! Verb sense selection, role compatibility checking and sentence labeling.

mod compat;
mod label;
mod sense;
mod tsv;

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::deps::Span;
use crate::heuristics::InterfaceRole;
use crate::lexicon::{InterfaceRoleId, Iri};

pub use compat::check_compatibility;
pub use label::{label_sentence, label_sentence_with, LabelOptions};
pub use sense::{most_specific_frames, select_verb_sense};
pub use tsv::{
    parse_frame_annotations, read_assignments, write_assignments, write_frame_annotations, EXTERNAL_ROLE_NS,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {reason}")]
pub struct SrlError {
    pub line: usize,
    pub reason: String,
}

/// Frames evoked at one predicate token.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrameAnnotation {
    pub sentence_id: String,
    pub predicate_token: usize,
    /// May be empty: the token is a predicate but no frame was detected.
    pub frames: BTreeSet<Iri>,
}

/// Which branch of sense selection produced the sense.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    /// The lemma has exactly one sense.
    Monosemous,
    /// Exactly one sense of the lemma matches the most specific frames.
    FrameMatched,
    /// No usable frame evidence; the most frequent sense was taken.
    MostFrequentFallback,
    /// Several senses match the frames; the most frequent of them was taken.
    RankedIntersection,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SenseSelection {
    pub sense: Iri,
    pub provenance: Provenance,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum RoleLabel {
    /// A VerbNet specific role (or a generic argument chosen by preposition).
    Specific(Iri),
    /// A VerbNet interface role taken from the lexicon.
    InterfaceFromLexicon(InterfaceRoleId),
    /// The syntactic interface role, when the lexicon offers nothing compatible.
    InterfaceFallback(InterfaceRole),
}

impl RoleLabel {
    pub fn kind(&self) -> &'static str {
        match self {
            RoleLabel::Specific(_) => "specific",
            RoleLabel::InterfaceFromLexicon(_) => "lexicon",
            RoleLabel::InterfaceFallback(_) => "fallback",
        }
    }

    pub fn iri(&self) -> Option<&Iri> {
        match self {
            RoleLabel::Specific(iri) => Some(iri),
            RoleLabel::InterfaceFromLexicon(v) => Some(&v.id),
            RoleLabel::InterfaceFallback(_) => None,
        }
    }
}

impl fmt::Display for RoleLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RoleLabel::Specific(iri) => write!(f, "<{iri}>"),
            RoleLabel::InterfaceFromLexicon(v) => write!(f, "{}<{}>", v.name, v.id),
            RoleLabel::InterfaceFallback(c) => write!(f, "{c}"),
        }
    }
}

/// One labeled argument of one predicate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RoleAssignment {
    pub sentence_id: String,
    pub predicate_token: usize,
    pub predicate_lemma: String,
    pub sense: Option<Iri>,
    pub label: RoleLabel,
    /// Display name of the label (lexicon label, or the interface role name).
    pub role_name: String,
    pub filler_head: usize,
    /// `DepGraph::argument_span` of the filler head.
    pub filler: Span,
}

impl RoleAssignment {
    /// The key under which assignments are unique.
    pub fn key(&self) -> (&str, usize, usize) {
        (&self.sentence_id, self.predicate_token, self.filler_head)
    }
}
