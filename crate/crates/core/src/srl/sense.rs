use std::collections::BTreeSet;

use crate::lexicon::{Iri, LexiconStore};

use super::{Provenance, SenseSelection};

/// Members of `frames` that strictly subsume no other member.
pub fn most_specific_frames(frames: &BTreeSet<Iri>, store: &LexiconStore) -> BTreeSet<Iri> {
    frames
        .iter()
        .filter(|f| !frames.iter().any(|g| store.frame_subsumes(f, g)))
        .cloned()
        .collect()
}

/// Picks the verb sense for `lemma` given the frames detected at its token.
///
/// A lemma with one sense ignores the frames. For a polysemous lemma the
/// frames are reduced to their most specific members and matched against
/// the senses' frame mappings; with no match, the most frequent sense is
/// used, and with several matches the most frequent matching one.
pub fn select_verb_sense(lemma: &str, frames: &BTreeSet<Iri>, store: &LexiconStore) -> Option<SenseSelection> {
    let senses = store.senses_for_lemma(lemma);
    match senses.as_slice() {
        [] => return None,
        [only] => {
            return Some(SenseSelection {
                sense: only.id.clone(),
                provenance: Provenance::Monosemous,
            })
        }
        _ => {}
    }
    let ranking = store.most_frequent_senses(lemma);
    let most_frequent = || SenseSelection {
        sense: ranking[0].id.clone(),
        provenance: Provenance::MostFrequentFallback,
    };
    if frames.is_empty() {
        return Some(most_frequent());
    }
    let candidates: BTreeSet<&Iri> = most_specific_frames(frames, store)
        .iter()
        .flat_map(|f| store.senses_for_lemma_and_frame(lemma, f))
        .map(|s| &s.id)
        .collect();
    match candidates.len() {
        0 => Some(most_frequent()),
        1 => Some(SenseSelection {
            sense: (*candidates.iter().next()?).clone(),
            provenance: Provenance::FrameMatched,
        }),
        _ => ranking
            .iter()
            .find(|s| candidates.contains(&s.id))
            .map(|s| SenseSelection {
                sense: s.id.clone(),
                provenance: Provenance::RankedIntersection,
            }),
    }
}
