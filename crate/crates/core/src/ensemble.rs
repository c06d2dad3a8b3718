//! Union of two systems' role assignments.

use std::collections::{BTreeMap, BTreeSet};

use crate::srl::RoleAssignment;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SystemOutput {
    pub name: String,
    pub assignments: Vec<RoleAssignment>,
}

impl SystemOutput {
    pub fn new(name: impl Into<String>, assignments: Vec<RoleAssignment>) -> Self {
        SystemOutput {
            name: name.into(),
            assignments,
        }
    }
}

/// Which side keeps its assignment when both label the same
/// (sentence, predicate, filler head).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Precedence {
    #[default]
    Primary,
    Secondary,
}

pub fn merge(primary: &SystemOutput, secondary: &SystemOutput) -> SystemOutput {
    merge_with(primary, secondary, Precedence::Primary)
}

/// Keeps every assignment of the winning side and adds the other side's
/// assignments whose key is not already present. Within one side the first
/// assignment for a key is kept.
///
/// Sentences appear in order of first mention (primary first), and within a
/// sentence assignments are ordered by predicate token then filler head.
pub fn merge_with(primary: &SystemOutput, secondary: &SystemOutput, precedence: Precedence) -> SystemOutput {
    let (winner, loser) = match precedence {
        Precedence::Primary => (primary, secondary),
        Precedence::Secondary => (secondary, primary),
    };
    let mut sentence_rank: BTreeMap<&str, usize> = BTreeMap::new();
    for a in primary.assignments.iter().chain(&secondary.assignments) {
        let next = sentence_rank.len();
        sentence_rank.entry(a.sentence_id.as_str()).or_insert(next);
    }

    let mut seen: BTreeSet<(&str, usize, usize)> = BTreeSet::new();
    let mut merged: Vec<&RoleAssignment> = Vec::new();
    for a in winner.assignments.iter().chain(&loser.assignments) {
        if seen.insert(a.key()) {
            merged.push(a);
        }
    }
    merged.sort_by_key(|a| (sentence_rank[a.sentence_id.as_str()], a.predicate_token, a.filler_head));
    SystemOutput {
        name: format!("{}+{}", primary.name, secondary.name),
        assignments: merged.into_iter().cloned().collect(),
    }
}
