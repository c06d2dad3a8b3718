//! Semantic-dependency scoring in the CoNLL-2009 style, plus a strict
//! filler-containment scorer over VerbNet role names.

mod conll2009;
mod gold;
mod semlink;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::lexicon::LexiconStore;
use crate::srl::RoleAssignment;

pub use conll2009::{read_conll2009, write_conll2009, Conll2009Error};
pub use gold::{read_gold_tsv, write_gold_tsv, GoldError, GoldRow};
pub use semlink::{map_vn_to_pb, normalize_class, read_semlink, write_semlink, PbMapping, SemLinkError, SemLinkMap};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Target {
    Root,
    Token(usize),
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Target::Root => f.write_str("ROOT"),
            Target::Token(i) => write!(f, "{i}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SemanticDependency {
    pub sentence_id: String,
    pub predicate_token: usize,
    pub target: Target,
    /// The role label, or the predicate sense when the target is ROOT.
    pub label: String,
}

impl SemanticDependency {
    pub fn key(&self) -> (&str, usize, Target) {
        (&self.sentence_id, self.predicate_token, self.target)
    }
}

/// A predicate with its sense and (token, label) arguments.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PredicateArgSet {
    pub sentence_id: String,
    pub predicate_token: usize,
    pub sense: String,
    pub args: Vec<(usize, String)>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScoreReport {
    pub labeled_correct: usize,
    pub unlabeled_correct: usize,
    pub predicted_total: usize,
    pub gold_total: usize,
    pub labeled_precision: f64,
    pub labeled_recall: f64,
    pub labeled_f1: f64,
    pub unlabeled_precision: f64,
    pub unlabeled_recall: f64,
    pub unlabeled_f1: f64,
}

fn ratio(num: usize, den: usize) -> f64 {
    if den == 0 {
        0.0
    } else {
        num as f64 / den as f64
    }
}

fn f1(p: f64, r: f64) -> f64 {
    if p + r == 0.0 {
        0.0
    } else {
        2.0 * p * r / (p + r)
    }
}

impl ScoreReport {
    pub fn from_counts(labeled_correct: usize, unlabeled_correct: usize, predicted_total: usize, gold_total: usize) -> Self {
        let lp = ratio(labeled_correct, predicted_total);
        let lr = ratio(labeled_correct, gold_total);
        let up = ratio(unlabeled_correct, predicted_total);
        let ur = ratio(unlabeled_correct, gold_total);
        ScoreReport {
            labeled_correct,
            unlabeled_correct,
            predicted_total,
            gold_total,
            labeled_precision: lp,
            labeled_recall: lr,
            labeled_f1: f1(lp, lr),
            unlabeled_precision: up,
            unlabeled_recall: ur,
            unlabeled_f1: f1(up, ur),
        }
    }

    /// `metric<TAB>value` lines; ratios as percentages with two decimals.
    pub fn to_report(&self) -> String {
        let pct = |x: f64| format!("{:.2}", x * 100.0);
        let rows: [(&str, String); 10] = [
            ("labeled_precision", pct(self.labeled_precision)),
            ("labeled_recall", pct(self.labeled_recall)),
            ("labeled_f1", pct(self.labeled_f1)),
            ("unlabeled_precision", pct(self.unlabeled_precision)),
            ("unlabeled_recall", pct(self.unlabeled_recall)),
            ("unlabeled_f1", pct(self.unlabeled_f1)),
            ("labeled_correct", self.labeled_correct.to_string()),
            ("unlabeled_correct", self.unlabeled_correct.to_string()),
            ("predicted_total", self.predicted_total.to_string()),
            ("gold_total", self.gold_total.to_string()),
        ];
        rows.iter().map(|(k, v)| format!("{k}\t{v}\n")).collect()
    }
}

/// One ROOT dependency carrying the sense, then one per argument.
pub fn to_semantic_deps(sets: &[PredicateArgSet]) -> Vec<SemanticDependency> {
    let mut out = Vec::with_capacity(sets.iter().map(|s| 1 + s.args.len()).sum());
    for set in sets {
        out.push(SemanticDependency {
            sentence_id: set.sentence_id.clone(),
            predicate_token: set.predicate_token,
            target: Target::Root,
            label: set.sense.clone(),
        });
        for (token, label) in &set.args {
            out.push(SemanticDependency {
                sentence_id: set.sentence_id.clone(),
                predicate_token: set.predicate_token,
                target: Target::Token(*token),
                label: label.clone(),
            });
        }
    }
    out
}

type Keyed<'a> = BTreeMap<(&'a str, usize, Target), &'a str>;

/// Dependencies keyed by (sentence, predicate, target). A repeated key keeps
/// its first label; the readers reject repeats, so this only matters for
/// hand-built inputs.
fn keyed(deps: &[SemanticDependency]) -> Keyed<'_> {
    let mut map = BTreeMap::new();
    for d in deps {
        map.entry(d.key()).or_insert(d.label.as_str());
    }
    map
}

pub fn score(gold: &[PredicateArgSet], predicted: &[PredicateArgSet]) -> ScoreReport {
    let gold_deps = to_semantic_deps(gold);
    let pred_deps = to_semantic_deps(predicted);
    let g = keyed(&gold_deps);
    let p = keyed(&pred_deps);
    let mut labeled = 0;
    let mut unlabeled = 0;
    for (key, label) in &p {
        if let Some(gold_label) = g.get(key) {
            unlabeled += 1;
            if gold_label == label {
                labeled += 1;
            }
        }
    }
    ScoreReport::from_counts(labeled, unlabeled, p.len(), g.len())
}

fn words(s: &str) -> BTreeSet<&str> {
    s.split_whitespace().collect()
}

fn strict_match(gold: &GoldRow, pred: &RoleAssignment) -> bool {
    gold.sentence_id == pred.sentence_id
        && gold.verb.eq_ignore_ascii_case(&pred.predicate_lemma)
        && gold.vn_role == pred.role_name
        && words(&gold.filler).is_subset(&words(&pred.filler.text))
}

/// Strict scoring: a prediction matches a gold row when sentence, verb
/// lemma and role name agree and the predicted filler contains every
/// whitespace-separated word of the gold filler. Each row pairs with at
/// most one partner; the count is a maximum bipartite matching. The
/// unlabeled fields mirror the labeled ones.
pub fn score_strict(gold: &[GoldRow], predicted: &[RoleAssignment]) -> ScoreReport {
    let edges: Vec<Vec<usize>> = predicted
        .iter()
        .map(|p| (0..gold.len()).filter(|&g| strict_match(&gold[g], p)).collect())
        .collect();
    let mut owner: Vec<Option<usize>> = vec![None; gold.len()];
    let mut matched = 0;
    for p in 0..predicted.len() {
        let mut seen = vec![false; gold.len()];
        if augment(p, &edges, &mut owner, &mut seen) {
            matched += 1;
        }
    }
    ScoreReport::from_counts(matched, matched, predicted.len(), gold.len())
}

fn augment(p: usize, edges: &[Vec<usize>], owner: &mut [Option<usize>], seen: &mut [bool]) -> bool {
    for &g in &edges[p] {
        if seen[g] {
            continue;
        }
        seen[g] = true;
        if owner[g].is_none_or(|q| augment(q, edges, owner, seen)) {
            owner[g] = Some(p);
            return true;
        }
    }
    false
}

/// Converts role assignments to predicate argument sets for dependency
/// scoring. Arguments sit on the filler head. The predicate sense is
/// `<lemma>.01`. With a SemLink map and lexicon, role names are mapped to
/// PropBank labels through the sense's verb class; unmapped roles keep
/// their VerbNet name.
pub fn assignments_to_arg_sets(
    assignments: &[RoleAssignment],
    mapping: Option<(&SemLinkMap, &LexiconStore)>,
) -> Vec<PredicateArgSet> {
    let mut sets: Vec<PredicateArgSet> = Vec::new();
    let mut index: BTreeMap<(String, usize), usize> = BTreeMap::new();
    for a in assignments {
        let slot = *index
            .entry((a.sentence_id.clone(), a.predicate_token))
            .or_insert_with(|| {
                sets.push(PredicateArgSet {
                    sentence_id: a.sentence_id.clone(),
                    predicate_token: a.predicate_token,
                    sense: format!("{}.01", a.predicate_lemma),
                    args: Vec::new(),
                });
                sets.len() - 1
            });
        let set = &mut sets[slot];
        if set.args.iter().any(|(t, _)| *t == a.filler_head) {
            continue;
        }
        let label = mapping
            .and_then(|(map, store)| {
                let class = a.sense.as_ref().and_then(|s| store.sense(s))?.verb_class.as_ref()?;
                map.get(class.local_name(), &a.role_name).map(str::to_string)
            })
            .unwrap_or_else(|| a.role_name.clone());
        set.args.push((a.filler_head, label));
    }
    for set in &mut sets {
        set.args.sort();
    }
    sets
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(sid: &str, pred: usize, sense: &str, args: &[(usize, &str)]) -> PredicateArgSet {
        PredicateArgSet {
            sentence_id: sid.into(),
            predicate_token: pred,
            sense: sense.into(),
            args: args.iter().map(|(t, l)| (*t, l.to_string())).collect(),
        }
    }

    #[test]
    fn worked_example() {
        let gold = [set("1", 3, "verb.01", &[(2, "ARG0"), (5, "ARG1"), (9, "ARGM-TMP")])];
        let pred = [set("1", 3, "verb.02", &[(2, "ARG0"), (5, "ARG1"), (9, "ARGM-LOC")])];
        assert_eq!(to_semantic_deps(&gold).len(), 4);
        let r = score(&gold, &pred);
        assert_eq!(r.labeled_precision, 0.5);
        assert_eq!(r.unlabeled_precision, 1.0);
        assert!(r.to_report().contains("labeled_precision\t50.00\n"));
        assert!(r.to_report().contains("unlabeled_precision\t100.00\n"));
    }

    #[test]
    fn two_predicate_hand_count() {
        // gold: 2 ROOTs + 5 args = 7 deps
        let gold = [
            set("1", 2, "a.01", &[(1, "ARG0"), (3, "ARG1")]),
            set("1", 5, "b.01", &[(4, "ARG0"), (6, "ARG1"), (7, "ARGM-TMP")]),
        ];
        // predicted: 6 deps; unlabeled hits: ROOT@2, 1, ROOT@5, 4, 6; labeled misses ROOT@5
        let pred = [
            set("1", 2, "a.01", &[(1, "ARG0"), (8, "ARG1")]),
            set("1", 5, "b.02", &[(4, "ARG0"), (6, "ARG1")]),
        ];
        let r = score(&gold, &pred);
        assert_eq!((r.labeled_correct, r.unlabeled_correct, r.predicted_total, r.gold_total), (4, 5, 6, 7));
        assert_eq!(r.labeled_precision, 4.0 / 6.0);
        assert_eq!(r.labeled_recall, 4.0 / 7.0);
        assert_eq!(r.unlabeled_recall, 5.0 / 7.0);
    }

    #[test]
    fn zero_args_give_one_root() {
        assert_eq!(to_semantic_deps(&[set("1", 1, "x.01", &[])]).len(), 1);
        let empty = score(&[], &[]);
        assert_eq!(empty.labeled_f1, 0.0);
    }

    fn prediction(role: &str, filler: &str) -> RoleAssignment {
        RoleAssignment {
            sentence_id: "1".into(),
            predicate_token: 5,
            predicate_lemma: "total".into(),
            sense: None,
            label: crate::srl::RoleLabel::InterfaceFallback(crate::heuristics::InterfaceRole::Undergoer),
            role_name: role.into(),
            filler_head: 4,
            filler: crate::deps::Span {
                start: 1,
                end: 4,
                text: filler.into(),
                indices: vec![1, 2, 3, 4],
            },
        }
    }

    #[test]
    fn strict_containment() {
        let gold = [GoldRow {
            sentence_id: "1".into(),
            verb: "Total".into(),
            verb_class: "54.1-1".into(),
            vn_role: "Theme".into(),
            pb_role: "ARG1".into(),
            filler: "The Canadian pig herd".into(),
        }];
        let exact = score_strict(&gold, &[prediction("Theme", "The Canadian pig herd")]);
        assert_eq!(exact.labeled_f1, 1.0);
        let superset = score_strict(&gold, &[prediction("Theme", "The Canadian pig herd totaled")]);
        assert_eq!(superset.labeled_correct, 1);
        let partial = score_strict(&gold, &[prediction("Theme", "Canadian pig")]);
        assert_eq!(partial.labeled_correct, 0);
        let wrong_role = score_strict(&gold, &[prediction("Value", "The Canadian pig herd")]);
        assert_eq!(wrong_role.labeled_correct, 0);
        let lowercase = score_strict(&gold, &[prediction("Theme", "the Canadian pig herd")]);
        assert_eq!(lowercase.labeled_correct, 0);
    }

    #[test]
    fn strict_matching_is_one_to_one() {
        let row = |filler: &str| GoldRow {
            sentence_id: "1".into(),
            verb: "total".into(),
            verb_class: "54.1-1".into(),
            vn_role: "Theme".into(),
            pb_role: "ARG1".into(),
            filler: filler.into(),
        };
        // the broad prediction could take either gold row; the matching must
        // leave "pig" for the narrow one
        let gold = [row("pig"), row("The herd")];
        let pred = [prediction("Theme", "The pig herd"), prediction("Theme", "pig")];
        let r = score_strict(&gold, &pred);
        assert_eq!(r.labeled_correct, 2);
        let doubled = score_strict(&gold[..1], &pred);
        assert_eq!(doubled.labeled_correct, 1);
        assert_eq!(doubled.labeled_precision, 0.5);
    }
}
