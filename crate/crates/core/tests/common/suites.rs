//! Property suites shared by `properties` and `acceptance`. Each runs a
//! proptest runner and reports the first minimized failure as an error.

use std::collections::{BTreeMap, BTreeSet};

use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};

use framerole::deps::{DepEdge, DepGraph, Span, Token};
use framerole::ensemble::{merge, merge_with, Precedence, SystemOutput};
use framerole::heuristics::InterfaceRole;
use framerole::lexicon::vocab::{
    FSCHEMA_SUB_FRAME_OF, RDFS_LABEL, RDF_TYPE, SKOS_CLOSE_MATCH, VN31_VERB_SENSE, WN_TAG_COUNT, XSD_INT,
};
use framerole::lexicon::{parse_ntriples, write_canonical, Iri, Literal, LexiconStore, Term, Triple};
use framerole::scorer::{assignments_to_arg_sets, read_conll2009, score, write_conll2009, PredicateArgSet};
use framerole::srl::{most_specific_frames, select_verb_sense, Provenance, RoleAssignment, RoleLabel};

pub const CASES: u32 = 256;

fn run<S: Strategy>(strategy: S, test: impl Fn(S::Value) -> Result<(), TestCaseError>) -> Result<(), String> {
    let mut runner = TestRunner::new(Config {
        cases: CASES,
        failure_persistence: None,
        ..Config::default()
    });
    runner.run(&strategy, test).map_err(|e| e.to_string())
}

fn iri(s: &str) -> Iri {
    Iri::new(s).unwrap()
}

// ---- argument sets ----

const LABELS: [&str; 4] = ["ARG0", "ARG1", "ARG2", "ARGM-TMP"];
const SENSES: [&str; 3] = ["v.01", "v.02", "w.01"];

fn arg_set() -> impl Strategy<Value = (usize, String, BTreeMap<usize, String>)> {
    (
        1usize..=8,
        prop::sample::select(SENSES.to_vec()),
        prop::collection::btree_map(1usize..=10, prop::sample::select(LABELS.to_vec()), 0..=6),
    )
        .prop_map(|(p, s, args)| (p, s.to_string(), args.into_iter().map(|(t, l)| (t, l.to_string())).collect()))
}

/// Up to `max_preds` predicates over two sentences, one set per (sentence, predicate).
pub fn arg_sets(max_preds: usize) -> impl Strategy<Value = Vec<PredicateArgSet>> {
    prop::collection::vec((prop::sample::select(vec!["1", "2"]), arg_set()), 0..=max_preds).prop_map(|raw| {
        let mut seen = BTreeSet::new();
        raw.into_iter()
            .filter(|(sid, (p, _, _))| seen.insert((*sid, *p)))
            .map(|(sid, (p, sense, args))| PredicateArgSet {
                sentence_id: sid.to_string(),
                predicate_token: p,
                sense,
                args: args.into_iter().collect(),
            })
            .collect()
    })
}

fn dep_tuples(sets: &[PredicateArgSet]) -> BTreeSet<(String, usize, Option<usize>, String)> {
    let mut out = BTreeSet::new();
    for s in sets {
        out.insert((s.sentence_id.clone(), s.predicate_token, None, s.sense.clone()));
        for (t, l) in &s.args {
            out.insert((s.sentence_id.clone(), s.predicate_token, Some(*t), l.clone()));
        }
    }
    out
}

pub fn identity_scores_one() -> Result<(), String> {
    run(arg_sets(4).prop_filter("non-empty", |s| !s.is_empty()), |x| {
        let r = score(&x, &x);
        for v in [r.labeled_precision, r.labeled_recall, r.labeled_f1, r.unlabeled_precision, r.unlabeled_recall, r.unlabeled_f1] {
            prop_assert_eq!(v, 1.0);
        }
        Ok(())
    })
}

pub fn labeled_bounded_by_unlabeled() -> Result<(), String> {
    run((arg_sets(4), arg_sets(4)), |(g, p)| {
        let r = score(&g, &p);
        prop_assert!(r.labeled_correct <= r.unlabeled_correct);
        prop_assert!(r.labeled_precision <= r.unlabeled_precision);
        prop_assert!(r.labeled_recall <= r.unlabeled_recall);
        for v in [r.labeled_precision, r.labeled_recall, r.unlabeled_precision, r.unlabeled_recall] {
            prop_assert!((0.0..=1.0).contains(&v));
        }
        Ok(())
    })
}

/// Recounts matches by intersecting labeled and unlabeled dependency tuples.
pub fn score_matches_intersection_oracle() -> Result<(), String> {
    run((arg_sets(4), arg_sets(4)), |(g, p)| {
        let gd = dep_tuples(&g);
        let pd = dep_tuples(&p);
        let strip = |s: &BTreeSet<(String, usize, Option<usize>, String)>| -> BTreeSet<(String, usize, Option<usize>)> {
            s.iter().map(|(a, b, c, _)| (a.clone(), *b, *c)).collect()
        };
        let labeled = gd.intersection(&pd).count();
        let unlabeled = strip(&gd).intersection(&strip(&pd)).count();
        let r = score(&g, &p);
        prop_assert_eq!(r.labeled_correct, labeled);
        prop_assert_eq!(r.unlabeled_correct, unlabeled);
        prop_assert_eq!(r.predicted_total, pd.len());
        prop_assert_eq!(r.gold_total, gd.len());
        if !pd.is_empty() {
            prop_assert_eq!(r.labeled_precision, labeled as f64 / pd.len() as f64);
        }
        let swapped = score(&p, &g);
        prop_assert_eq!(swapped.labeled_recall, r.labeled_precision);
        prop_assert_eq!(swapped.unlabeled_precision, r.unlabeled_recall);
        prop_assert_eq!(swapped.labeled_f1, r.labeled_f1);
        Ok(())
    })
}

// ---- ensemble ----

const ROLE_NAMES: [&str; 4] = ["Agent", "Patient", "Theme", "Oblique"];

pub fn assignment(sid: &str, pred: usize, head: usize, role: &str) -> RoleAssignment {
    RoleAssignment {
        sentence_id: sid.to_string(),
        predicate_token: pred,
        // derived from the predicate so every side agrees on the ROOT sense
        predicate_lemma: format!("v{pred}"),
        sense: None,
        label: RoleLabel::InterfaceFallback(InterfaceRole::Oblique),
        role_name: role.to_string(),
        filler_head: head,
        filler: Span {
            start: head,
            end: head,
            text: format!("w{head}"),
            indices: vec![head],
        },
    }
}

pub fn assignments() -> impl Strategy<Value = Vec<RoleAssignment>> {
    prop::collection::vec(
        (prop::sample::select(vec!["a", "b", "c"]), 1usize..=4, 1usize..=6, prop::sample::select(ROLE_NAMES.to_vec())),
        0..=10,
    )
    .prop_map(|v| v.into_iter().map(|(s, p, h, r)| assignment(s, p, h, r)).collect())
}

fn keys(a: &[RoleAssignment]) -> BTreeSet<(String, usize, usize)> {
    a.iter().map(|a| (a.sentence_id.clone(), a.predicate_token, a.filler_head)).collect()
}

fn first_by_key(a: &[RoleAssignment]) -> BTreeMap<(String, usize, usize), &RoleAssignment> {
    let mut out = BTreeMap::new();
    for x in a {
        out.entry((x.sentence_id.clone(), x.predicate_token, x.filler_head)).or_insert(x);
    }
    out
}

fn gold_from(a: &[RoleAssignment]) -> Vec<PredicateArgSet> {
    assignments_to_arg_sets(a, None)
}

pub fn merge_laws() -> Result<(), String> {
    run((assignments(), assignments(), assignments()), |(a, b, g)| {
        let sa = SystemOutput::new("a", a.clone());
        let sb = SystemOutput::new("b", b.clone());
        let empty = SystemOutput::new("e", Vec::new());
        let m = merge(&sa, &sb);

        // superset of both key sets, nothing else, one assignment per key
        let mut both = keys(&a);
        both.extend(keys(&b));
        prop_assert_eq!(keys(&m.assignments), both);
        prop_assert_eq!(m.assignments.len(), keys(&m.assignments).len());
        // the primary's first assignment per key survives unchanged
        let merged = first_by_key(&m.assignments);
        for (k, x) in first_by_key(&a) {
            prop_assert_eq!(merged[&k], x);
        }
        let ms = merge_with(&sa, &sb, Precedence::Secondary);
        let merged_s = first_by_key(&ms.assignments);
        for (k, x) in first_by_key(&b) {
            prop_assert_eq!(merged_s[&k], x);
        }

        // idempotence
        prop_assert_eq!(&merge(&m, &sb).assignments, &m.assignments);
        prop_assert_eq!(keys(&merge(&sa, &sa).assignments), keys(&a));
        // empty side
        prop_assert_eq!(&merge(&sa, &empty).assignments, &merge(&empty, &sa).assignments);
        prop_assert_eq!(merge(&empty, &empty).assignments.len(), 0);

        // adding the secondary never lowers recall
        let gold = gold_from(&g);
        let before = score(&gold, &assignments_to_arg_sets(&a, None));
        let after = score(&gold, &assignments_to_arg_sets(&m.assignments, None));
        prop_assert!(after.unlabeled_recall >= before.unlabeled_recall);
        prop_assert!(after.labeled_recall >= before.labeled_recall);
        Ok(())
    })
}

// ---- round trips ----

fn iri_strategy() -> impl Strategy<Value = Iri> {
    ("[a-z]{1,6}", "[A-Za-z0-9_./#-]{0,12}").prop_map(|(host, path)| iri(&format!("http://{host}.org/{path}")))
}

fn blank_strategy() -> impl Strategy<Value = String> {
    "[A-Za-z][A-Za-z0-9_-]{0,6}"
}

fn literal_strategy() -> impl Strategy<Value = Literal> {
    let lexical = prop::collection::vec(
        prop_oneof![
            Just('"'),
            Just('\\'),
            Just('\n'),
            Just('\r'),
            Just('\t'),
            Just('é'),
            Just('語'),
            Just(' '),
            prop::char::range('a', 'z'),
        ],
        0..12,
    )
    .prop_map(|cs| cs.into_iter().collect::<String>());
    (lexical, 0u8..3, iri_strategy(), "[a-z]{1,3}(-[A-Za-z0-9]{1,4})?").prop_map(|(lex, kind, dt, lang)| {
        let mut lit = Literal::plain(lex);
        match kind {
            1 => lit.datatype = Some(dt),
            2 => lit.language = Some(lang),
            _ => {}
        }
        lit
    })
}

pub fn triple_strategy() -> impl Strategy<Value = Triple> {
    let subject = prop_oneof![iri_strategy().prop_map(Term::Iri), blank_strategy().prop_map(Term::Blank)];
    let object = prop_oneof![
        iri_strategy().prop_map(Term::Iri),
        blank_strategy().prop_map(Term::Blank),
        literal_strategy().prop_map(Term::Literal),
    ];
    (subject, iri_strategy(), object).prop_map(|(s, p, o)| Triple::new(s, p, o))
}

/// A right-branching chain of `n` tokens.
pub fn chain_graph(sid: &str, n: usize) -> DepGraph {
    let tokens = (1..=n)
        .map(|i| Token {
            index: i,
            form: format!("w{i}"),
            lemma: format!("l{i}"),
            upos: "NOUN".into(),
            space_after: true,
        })
        .collect();
    let edges = (1..=n).map(|i| DepEdge::new(if i == 1 { "root" } else { "dep" }, i - 1, i)).collect();
    DepGraph::new(sid, tokens, edges).unwrap()
}

pub fn round_trips() -> Result<(), String> {
    run(prop::collection::vec(triple_strategy(), 0..8), |ts| {
        let text = write_canonical(&ts);
        let back = parse_ntriples(&text).map_err(|e| TestCaseError::fail(format!("{e}\n{text}")))?;
        let a: BTreeSet<_> = ts.iter().cloned().collect();
        let b: BTreeSet<_> = back.into_iter().collect();
        prop_assert_eq!(a, b);
        Ok(())
    })?;
    run(arg_sets(4), |sets| {
        // sentences "1" and "2" with ten tokens each
        let graphs = [chain_graph("1", 10), chain_graph("2", 10)];
        let text = write_conll2009(&sets, &graphs).map_err(|e| TestCaseError::fail(e.to_string()))?;
        let back = read_conll2009(&text).map_err(|e| TestCaseError::fail(format!("{e}\n{text}")))?;
        let mut expected = sets.clone();
        expected.sort_by(|x, y| (&x.sentence_id, x.predicate_token).cmp(&(&y.sentence_id, y.predicate_token)));
        for s in &mut expected {
            s.args.sort();
        }
        prop_assert_eq!(back, expected);
        Ok(())
    })
}

// ---- frames ----

fn frame_iri(i: usize) -> Iri {
    iri(&format!("http://frames.test/F{i}"))
}

/// Frame DAG on `n` nodes: an edge (i, j) with i < j says frame i is a subframe of frame j.
fn dag() -> impl Strategy<Value = (usize, Vec<(usize, usize)>)> {
    (1usize..=6).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        let k = pairs.len();
        (Just(n), prop::sample::subsequence(pairs, 0..=k))
    })
}

fn frame_store(edges: &[(usize, usize)]) -> LexiconStore {
    let sub = iri(FSCHEMA_SUB_FRAME_OF);
    LexiconStore::from_triples(edges.iter().map(|&(i, j)| Triple::new(frame_iri(i), sub.clone(), frame_iri(j)))).unwrap()
}

/// `general[a][b]`: frame a is reachable upward from frame b.
fn closure(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<bool>> {
    let mut general = vec![vec![false; n]; n];
    for &(i, j) in edges {
        general[j][i] = true;
    }
    for k in 0..n {
        for a in 0..n {
            for b in 0..n {
                if general[a][k] && general[k][b] {
                    general[a][b] = true;
                }
            }
        }
    }
    general
}

pub fn most_specific_frames_oracle() -> Result<(), String> {
    let strategy = dag().prop_flat_map(|(n, edges)| (Just(n), Just(edges), prop::collection::btree_set(0..n, 0..=n)));
    run(strategy, |(n, edges, chosen)| {
        let store = frame_store(&edges);
        let general = closure(n, &edges);
        let expected: BTreeSet<Iri> = chosen
            .iter()
            .filter(|&&f| !chosen.iter().any(|&g| general[f][g]))
            .map(|&f| frame_iri(f))
            .collect();
        let input: BTreeSet<Iri> = chosen.iter().map(|&f| frame_iri(f)).collect();
        let got = most_specific_frames(&input, &store);
        prop_assert_eq!(&got, &expected);
        prop_assert!(got.is_subset(&input));
        prop_assert!(input.is_empty() || !got.is_empty());
        for a in &got {
            prop_assert!(!got.iter().any(|b| store.frame_subsumes(a, b)), "not an antichain");
        }
        for f in &input {
            prop_assert!(got.iter().any(|g| g == f || store.frame_subsumes(f, g)), "{} is not covered", f);
        }
        for (a, row) in general.iter().enumerate() {
            for (b, &expected) in row.iter().enumerate() {
                prop_assert_eq!(store.frame_subsumes(&frame_iri(a), &frame_iri(b)), expected);
            }
        }
        Ok(())
    })
}

// ---- sense selection ----

pub fn monosemous_ignores_frames() -> Result<(), String> {
    let strategy = (
        prop::collection::btree_set(0usize..8, 0..4),
        prop::collection::btree_set(0usize..8, 0..4),
        0u32..50,
        prop::collection::vec((0usize..8, 0u32..20), 0..4),
    );
    run(strategy, |(own, query, tag, others)| {
        let ty = iri(RDF_TYPE);
        let label = iri(RDFS_LABEL);
        let close = iri(SKOS_CLOSE_MATCH);
        let verb_sense = iri(VN31_VERB_SENSE);
        let mut triples = Vec::new();
        let mut add_sense = |id: Iri, lemma: &str, frames: &BTreeSet<usize>, tag: u32| {
            triples.push(Triple::new(id.clone(), ty.clone(), verb_sense.clone()));
            triples.push(Triple::new(id.clone(), label.clone(), Literal::plain(lemma)));
            triples.push(Triple::new(
                id.clone(),
                iri(WN_TAG_COUNT),
                Literal::typed(tag.to_string(), iri(XSD_INT)),
            ));
            for &f in frames {
                triples.push(Triple::new(id.clone(), close.clone(), frame_iri(f)));
            }
        };
        let solo = iri("http://senses.test/solo_1");
        add_sense(solo.clone(), "solo", &own, tag);
        for (k, (f, t)) in others.iter().enumerate() {
            add_sense(iri(&format!("http://senses.test/other_{k}")), "other", &BTreeSet::from([*f]), *t);
        }
        let store = LexiconStore::from_triples(triples).map_err(|e| TestCaseError::fail(e.to_string()))?;
        let frames: BTreeSet<Iri> = query.iter().map(|&f| frame_iri(f)).collect();
        let sel = select_verb_sense("solo", &frames, &store).ok_or_else(|| TestCaseError::fail("no sense"))?;
        prop_assert_eq!(sel.sense, solo);
        prop_assert_eq!(sel.provenance, Provenance::Monosemous);
        Ok(())
    })
}
