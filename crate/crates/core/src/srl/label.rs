use std::collections::{BTreeMap, BTreeSet};

use crate::deps::DepGraph;
use crate::heuristics::RoleTable;
use crate::lexicon::{Iri, LexiconStore};

use super::{check_compatibility, select_verb_sense, FrameAnnotation, RoleAssignment, RoleLabel};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LabelOptions {
    /// When false, frame annotations still mark predicates but their frames
    /// are ignored, so polysemous verbs take the most frequent sense.
    pub use_frames: bool,
}

impl Default for LabelOptions {
    fn default() -> Self {
        LabelOptions { use_frames: true }
    }
}

pub fn label_sentence(
    graph: &DepGraph,
    annotations: &[FrameAnnotation],
    store: &LexiconStore,
    table: &RoleTable,
) -> Vec<RoleAssignment> {
    label_sentence_with(graph, annotations, store, table, LabelOptions::default())
}

/// Labels every predicate of one sentence.
///
/// Predicates are `VERB` tokens plus any annotated token, except tokens
/// attached as `aux` or `cop`. Each dependent whose relation maps to an
/// interface role is aligned, in token order, against the sense's lexicon
/// pairs; a pair is consumed by the first dependent it is compatible with.
pub fn label_sentence_with(
    graph: &DepGraph,
    annotations: &[FrameAnnotation],
    store: &LexiconStore,
    table: &RoleTable,
    options: LabelOptions,
) -> Vec<RoleAssignment> {
    let mut frames_at: BTreeMap<usize, BTreeSet<Iri>> = BTreeMap::new();
    for a in annotations.iter().filter(|a| a.sentence_id == graph.sentence_id()) {
        frames_at
            .entry(a.predicate_token)
            .or_default()
            .extend(a.frames.iter().cloned());
    }

    let mut out = Vec::new();
    for token in graph.tokens() {
        let annotated = frames_at.get(&token.index);
        if token.upos != "VERB" && annotated.is_none() {
            continue;
        }
        if graph
            .head_edge(token.index)
            .is_some_and(|e| matches!(e.relation.as_str(), "aux" | "cop"))
        {
            continue;
        }

        let lemma = token.lemma.to_lowercase();
        let no_frames = BTreeSet::new();
        let frames = match annotated {
            Some(f) if options.use_frames => f,
            _ => &no_frames,
        };
        let sense = select_verb_sense(&lemma, frames, store).map(|s| s.sense);
        let pairs = sense.as_ref().map(|s| store.roles_for_sense(s)).unwrap_or_default();
        let mut consumed = vec![false; pairs.len()];

        for edge in graph.dependents(token.index) {
            let Some(c1) = table.interface_role_of(&edge.label()) else {
                continue;
            };
            let Ok(filler) = graph.argument_span(edge.dependent) else {
                continue;
            };
            let prep = graph.preposition_of(token.index, edge.dependent);

            let mut label = RoleLabel::InterfaceFallback(c1);
            if let Some(sense) = &sense {
                for (i, (r1, v1)) in pairs.iter().enumerate() {
                    if consumed[i] {
                        continue;
                    }
                    let candidate = check_compatibility(c1, v1.as_ref(), Some(r1), prep.as_deref(), sense, store);
                    if !matches!(candidate, RoleLabel::InterfaceFallback(_)) {
                        consumed[i] = true;
                        label = candidate;
                        break;
                    }
                }
            }
            let role_name = match &label {
                RoleLabel::Specific(iri) => store.role_name(iri),
                RoleLabel::InterfaceFromLexicon(v) => v.name.clone(),
                RoleLabel::InterfaceFallback(c) => c.name().to_string(),
            };
            out.push(RoleAssignment {
                sentence_id: graph.sentence_id().to_string(),
                predicate_token: token.index,
                predicate_lemma: lemma.clone(),
                sense: sense.clone(),
                label,
                role_name,
                filler_head: edge.dependent,
                filler,
            });
        }
    }
    out.sort_by_key(|a| (a.predicate_token, a.filler_head));
    out
}
