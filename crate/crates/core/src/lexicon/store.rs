use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use super::ntriples::{parse_ntriples, write_canonical, Iri, ParseError, Term, Triple};
use super::vocab;
use super::LexiconError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerbSense {
    pub id: Iri,
    /// Lowercased `rdfs:label`.
    pub lemma: String,
    pub verb_class: Option<Iri>,
    /// Sum of `xsd:int` tag counts attached to the sense or to any of its
    /// `skos:closeMatch` targets; 0 when there are none.
    pub tag_count: u64,
    /// All `skos:closeMatch` targets.
    pub frames: BTreeSet<Iri>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecificRole {
    pub id: Iri,
    pub name: String,
    pub in_sense: Iri,
    pub subsumed_under: Option<Iri>,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct InterfaceRoleId {
    pub id: Iri,
    pub name: String,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct PrepSelection {
    pub sense: Iri,
    pub preposition: String,
    pub argument: Iri,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct LexiconStats {
    pub triples: usize,
    pub senses: usize,
    pub roles: usize,
    pub interface_roles: usize,
    pub frame_edges: usize,
    pub prep_selections: usize,
}

/// Read-only indexed view over a Framester-style lexicon.
#[derive(Debug, Clone, Default)]
pub struct LexiconStore {
    triples: BTreeSet<Triple>,
    by_predicate: BTreeMap<Iri, Vec<(Term, Term)>>,
    senses: BTreeMap<Iri, VerbSense>,
    lemma_index: HashMap<String, Vec<Iri>>,
    lemma_frame_index: HashMap<(String, Iri), Vec<Iri>>,
    sense_roles: BTreeMap<Iri, BTreeSet<Iri>>,
    role_names: BTreeMap<Iri, String>,
    role_parents: BTreeMap<Iri, BTreeSet<Iri>>,
    interface_roles: BTreeMap<Iri, InterfaceRoleId>,
    frame_edges: BTreeSet<(Iri, Iri)>,
    frame_ancestors: BTreeMap<Iri, BTreeSet<Iri>>,
    preps: BTreeMap<(Iri, String), BTreeSet<Iri>>,
}

/// Parses N-Triples text and builds every derived index.
pub fn load_lexicon(ntriples_text: &str) -> Result<LexiconStore, LexiconError> {
    let triples = parse_ntriples(ntriples_text)?;
    LexiconStore::from_triples(triples)
}

impl LexiconStore {
    pub fn from_triples(triples: impl IntoIterator<Item = Triple>) -> Result<Self, LexiconError> {
        let triples: BTreeSet<Triple> = triples.into_iter().collect();
        let mut by_predicate: BTreeMap<Iri, Vec<(Term, Term)>> = BTreeMap::new();
        for t in &triples {
            by_predicate
                .entry(t.predicate.clone())
                .or_default()
                .push((t.subject.clone(), t.object.clone()));
        }
        let iri_pairs = |pred: &str| -> Vec<(Iri, Iri)> {
            by_predicate
                .iter()
                .filter(|(p, _)| p.as_str() == pred)
                .flat_map(|(_, pairs)| pairs.iter())
                .filter_map(|(s, o)| Some((s.as_iri()?.clone(), o.as_iri()?.clone())))
                .collect()
        };
        let pairs_of = |pred: &str| -> &[(Term, Term)] {
            by_predicate
                .iter()
                .find(|(p, _)| p.as_str() == pred)
                .map(|(_, v)| v.as_slice())
                .unwrap_or(&[])
        };

        let mut typed: BTreeMap<&str, BTreeSet<Term>> = BTreeMap::new();
        for (s, o) in pairs_of(vocab::RDF_TYPE) {
            if let Some(class) = o.as_iri() {
                typed.entry(class.as_str()).or_default().insert(s.clone());
            }
        }
        let iris_typed = |class: &str| -> BTreeSet<Iri> {
            typed
                .get(class)
                .into_iter()
                .flatten()
                .filter_map(|t| t.as_iri().cloned())
                .collect()
        };

        let mut labels: BTreeMap<Iri, BTreeSet<String>> = BTreeMap::new();
        for (s, o) in pairs_of(vocab::RDFS_LABEL) {
            if let (Some(s), Some(lit)) = (s.as_iri(), o.as_literal()) {
                labels.entry(s.clone()).or_default().insert(lit.lexical.clone());
            }
        }
        let name_of = |iri: &Iri| -> String {
            labels
                .get(iri)
                .and_then(|l| l.iter().next().cloned())
                .unwrap_or_else(|| iri.local_name().to_string())
        };

        let mut tag_counts: BTreeMap<Iri, u64> = BTreeMap::new();
        for (s, o) in pairs_of(vocab::WN_TAG_COUNT) {
            let (Some(s), Some(lit)) = (s.as_iri(), o.as_literal()) else {
                continue;
            };
            if lit.datatype.as_ref().map(Iri::as_str) != Some(vocab::XSD_INT) {
                continue;
            }
            let n: u64 = lit.lexical.trim().parse().map_err(|_| {
                LexiconError::InvalidValue(format!("tagCount {:?} on <{s}> is not a non-negative int", lit.lexical))
            })?;
            let slot = tag_counts.entry(s.clone()).or_default();
            *slot = slot.saturating_add(n);
        }

        let mut close_match: BTreeMap<Iri, BTreeSet<Iri>> = BTreeMap::new();
        for (s, o) in iri_pairs(vocab::SKOS_CLOSE_MATCH) {
            close_match.entry(s).or_default().insert(o);
        }
        let mut classes: BTreeMap<Iri, Iri> = BTreeMap::new();
        for (s, o) in iri_pairs(vocab::VN31_IN_VERB_CLASS) {
            classes.entry(s).or_insert(o);
        }

        let mut sense_ids = iris_typed(vocab::VN31_VERB_SENSE);
        sense_ids.extend(iris_typed(vocab::FSCHEMA_VERB_SENSE));
        let mut senses = BTreeMap::new();
        let mut lemma_index: HashMap<String, Vec<Iri>> = HashMap::new();
        let mut lemma_frame_index: HashMap<(String, Iri), Vec<Iri>> = HashMap::new();
        for id in sense_ids {
            let lemmas: BTreeSet<String> = labels
                .get(&id)
                .into_iter()
                .flatten()
                .map(|l| l.trim().to_lowercase())
                .filter(|l| !l.is_empty())
                .collect();
            // unlabeled senses cannot be reached by any lemma query
            let Some(lemma) = lemmas.iter().next().cloned() else {
                continue;
            };
            let frames = close_match.get(&id).cloned().unwrap_or_default();
            let tag_count = frames
                .iter()
                .filter_map(|f| tag_counts.get(f))
                .fold(tag_counts.get(&id).copied().unwrap_or(0), |acc, n| acc.saturating_add(*n));
            for l in &lemmas {
                lemma_index.entry(l.clone()).or_default().push(id.clone());
                for f in &frames {
                    lemma_frame_index
                        .entry((l.clone(), f.clone()))
                        .or_default()
                        .push(id.clone());
                }
            }
            senses.insert(
                id.clone(),
                VerbSense {
                    id: id.clone(),
                    lemma,
                    verb_class: classes.get(&id).cloned(),
                    tag_count,
                    frames,
                },
            );
        }

        let arguments = iris_typed(vocab::VN31_ARGUMENT);
        let mut sense_roles: BTreeMap<Iri, BTreeSet<Iri>> = BTreeMap::new();
        for (role, sense) in iri_pairs(vocab::VN31_IN_VERB_SENSE) {
            if arguments.contains(&role) {
                sense_roles.entry(sense).or_default().insert(role);
            }
        }

        let mut role_parents: BTreeMap<Iri, BTreeSet<Iri>> = BTreeMap::new();
        let mut role_names = BTreeMap::new();
        for (child, parent) in iri_pairs(vocab::FSCHEMA_SUBSUMED_UNDER) {
            role_names.insert(child.clone(), name_of(&child));
            role_names.insert(parent.clone(), name_of(&parent));
            role_parents.entry(child).or_default().insert(parent);
        }
        if let Some(cycle) = find_cycle(&role_parents) {
            return Err(LexiconError::Cycle {
                relation: "fschema:subsumedUnder",
                members: cycle,
            });
        }

        let mut interface_roles = BTreeMap::new();
        let mut seen_names: BTreeMap<String, Iri> = BTreeMap::new();
        for id in iris_typed(vocab::FSCHEMA_INTERFACE_ROLE) {
            let name = name_of(&id);
            if let Some(prev) = seen_names.insert(name.clone(), id.clone()) {
                return Err(LexiconError::DuplicateInterfaceRole {
                    name,
                    first: prev,
                    second: id,
                });
            }
            role_names.insert(id.clone(), name.clone());
            interface_roles.insert(id.clone(), InterfaceRoleId { id, name });
        }
        for role in &arguments {
            role_names.entry(role.clone()).or_insert_with(|| name_of(role));
        }

        let frame_edges: BTreeSet<(Iri, Iri)> = iri_pairs(vocab::FSCHEMA_SUB_FRAME_OF).into_iter().collect();
        let mut frame_parents: BTreeMap<Iri, BTreeSet<Iri>> = BTreeMap::new();
        for (child, parent) in &frame_edges {
            frame_parents.entry(child.clone()).or_default().insert(parent.clone());
        }
        if let Some(cycle) = find_cycle(&frame_parents) {
            return Err(LexiconError::Cycle {
                relation: "fschema:subFrameOf",
                members: cycle,
            });
        }
        let frame_ancestors = transitive_closure(&frame_parents);

        let mut preps: BTreeMap<(Iri, String), BTreeSet<Iri>> = BTreeMap::new();
        let mut selection_props: BTreeMap<(&Term, &str), Vec<Term>> = BTreeMap::new();
        for pred in [vocab::VN_HAS_VERB_SENSE, vocab::VN_HAS_PREPOSITION, vocab::VN_HAS_GENERIC_ARGUMENT] {
            for (s, o) in pairs_of(pred) {
                selection_props.entry((s, pred)).or_default().push(o.clone());
            }
        }
        let objects_of = |subject: &Term, pred: &'static str| -> Vec<Term> {
            selection_props.get(&(subject, pred)).cloned().unwrap_or_default()
        };
        for node in typed.get(vocab::VN_SENSE_PREP_SELECTION).into_iter().flatten() {
            let senses_of: Vec<Iri> = objects_of(node, vocab::VN_HAS_VERB_SENSE)
                .into_iter()
                .filter_map(|t| t.as_iri().cloned())
                .collect();
            let preps_of: Vec<String> = objects_of(node, vocab::VN_HAS_PREPOSITION)
                .into_iter()
                .filter_map(|t| match t {
                    Term::Iri(iri) => Some(iri.local_name().to_lowercase()),
                    Term::Literal(lit) => Some(lit.lexical.trim().to_lowercase()),
                    Term::Blank(_) => None,
                })
                .collect();
            let args_of: Vec<Iri> = objects_of(node, vocab::VN_HAS_GENERIC_ARGUMENT)
                .into_iter()
                .filter_map(|t| t.as_iri().cloned())
                .collect();
            for s in &senses_of {
                for p in &preps_of {
                    for a in &args_of {
                        preps.entry((s.clone(), p.clone())).or_default().insert(a.clone());
                    }
                }
            }
        }

        Ok(LexiconStore {
            triples,
            by_predicate,
            senses,
            lemma_index,
            lemma_frame_index,
            sense_roles,
            role_names,
            role_parents,
            interface_roles,
            frame_edges,
            frame_ancestors,
            preps,
        })
    }

    pub fn triples(&self) -> impl Iterator<Item = &Triple> {
        self.triples.iter()
    }

    /// Subject/object pairs for one predicate.
    pub fn with_predicate(&self, predicate: &Iri) -> &[(Term, Term)] {
        self.by_predicate.get(predicate).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn is_empty(&self) -> bool {
        self.triples.is_empty()
    }

    /// Canonical N-Triples for the whole store.
    pub fn serialize(&self) -> String {
        write_canonical(&self.triples)
    }

    pub fn stats(&self) -> LexiconStats {
        LexiconStats {
            triples: self.triples.len(),
            senses: self.senses.len(),
            roles: self.sense_roles.values().map(BTreeSet::len).sum(),
            interface_roles: self.interface_roles.len(),
            frame_edges: self.frame_edges.len(),
            prep_selections: self.preps.values().map(BTreeSet::len).sum(),
        }
    }

    pub fn sense(&self, id: &Iri) -> Option<&VerbSense> {
        self.senses.get(id)
    }

    pub fn senses(&self) -> impl Iterator<Item = &VerbSense> {
        self.senses.values()
    }

    pub fn interface_roles(&self) -> impl Iterator<Item = &InterfaceRoleId> {
        self.interface_roles.values()
    }

    pub fn interface_role(&self, id: &Iri) -> Option<&InterfaceRoleId> {
        self.interface_roles.get(id)
    }

    pub fn frame_edges(&self) -> &BTreeSet<(Iri, Iri)> {
        &self.frame_edges
    }

    /// Display name of any role or interface role: its `rdfs:label`, else its local name.
    pub fn role_name(&self, role: &Iri) -> String {
        self.role_names
            .get(role)
            .cloned()
            .unwrap_or_else(|| role.local_name().to_string())
    }

    /// Whole-lemma, case-insensitive match; senses in ascending IRI order.
    pub fn senses_for_lemma(&self, lemma: &str) -> Vec<&VerbSense> {
        self.lookup(self.lemma_index.get(&lemma.trim().to_lowercase()))
    }

    /// Every sense of the lemma ranked by tag count (descending), ties by IRI.
    pub fn most_frequent_senses(&self, lemma: &str) -> Vec<&VerbSense> {
        let mut ranked = self.senses_for_lemma(lemma);
        ranked.sort_by(|a, b| b.tag_count.cmp(&a.tag_count).then_with(|| a.id.cmp(&b.id)));
        ranked
    }

    pub fn senses_for_lemma_and_frame(&self, lemma: &str, frame: &Iri) -> Vec<&VerbSense> {
        self.lookup(
            self.lemma_frame_index
                .get(&(lemma.trim().to_lowercase(), frame.clone())),
        )
    }

    fn lookup(&self, ids: Option<&Vec<Iri>>) -> Vec<&VerbSense> {
        let mut out: Vec<&VerbSense> = ids
            .into_iter()
            .flatten()
            .filter_map(|id| self.senses.get(id))
            .collect();
        out.sort_by(|a, b| a.id.cmp(&b.id));
        out.dedup_by(|a, b| a.id == b.id);
        out
    }

    /// Specific roles of a sense, each with the nearest declared interface role
    /// above it in the `subsumedUnder` hierarchy (if any). Ascending role IRI.
    pub fn roles_for_sense(&self, sense: &Iri) -> Vec<(SpecificRole, Option<InterfaceRoleId>)> {
        let Some(roles) = self.sense_roles.get(sense) else {
            return Vec::new();
        };
        roles
            .iter()
            .map(|role| {
                let specific = SpecificRole {
                    id: role.clone(),
                    name: self.role_name(role),
                    in_sense: sense.clone(),
                    subsumed_under: self.parent_of(role).cloned(),
                };
                (specific, self.nearest_interface_role(role).cloned())
            })
            .collect()
    }

    fn parent_of(&self, role: &Iri) -> Option<&Iri> {
        self.role_parents.get(role).and_then(|p| p.iter().next())
    }

    fn nearest_interface_role(&self, role: &Iri) -> Option<&InterfaceRoleId> {
        // breadth-first, so the shallowest ancestor wins; ties go to the smaller IRI
        let mut queue: VecDeque<&Iri> = self.role_parents.get(role).into_iter().flatten().collect();
        let mut seen: BTreeSet<&Iri> = BTreeSet::new();
        while let Some(next) = queue.pop_front() {
            if !seen.insert(next) {
                continue;
            }
            if let Some(found) = self.interface_roles.get(next) {
                return Some(found);
            }
            queue.extend(self.role_parents.get(next).into_iter().flatten());
        }
        None
    }

    /// Every (sense, preposition, argument) selection, in sorted order.
    pub fn prep_selections(&self) -> impl Iterator<Item = PrepSelection> + '_ {
        self.preps.iter().flat_map(|((sense, prep), args)| {
            args.iter().map(move |a| PrepSelection {
                sense: sense.clone(),
                preposition: prep.clone(),
                argument: a.clone(),
            })
        })
    }

    /// Generic arguments selected by `preposition` for `sense`, ascending IRI.
    pub fn prep_argument(&self, sense: &Iri, preposition: &str) -> Vec<Iri> {
        self.preps
            .get(&(sense.clone(), preposition.to_string()))
            .map(|s| s.iter().cloned().collect())
            .unwrap_or_default()
    }

    /// Strict subsumption: `specific` reaches `general` through one or more subframe edges.
    pub fn frame_subsumes(&self, general: &Iri, specific: &Iri) -> bool {
        self.frame_ancestors
            .get(specific)
            .is_some_and(|a| a.contains(general))
    }

    /// Top of the `subsumedUnder` chain starting at `role`. Where a role has
    /// several parents the chain follows the smallest IRI.
    pub fn role_apex(&self, role: &Iri) -> Result<Iri, LexiconError> {
        if !self.role_names.contains_key(role) {
            return Err(LexiconError::UnknownRole(role.clone()));
        }
        let mut current = role;
        while let Some(parent) = self.parent_of(current) {
            current = parent;
        }
        Ok(current.clone())
    }
}

/// Returns the members of some cycle in a parent graph, or `None` if acyclic.
fn find_cycle(parents: &BTreeMap<Iri, BTreeSet<Iri>>) -> Option<Vec<Iri>> {
    #[derive(Clone, Copy, PartialEq)]
    enum Mark {
        Open,
        Done,
    }
    let mut marks: BTreeMap<&Iri, Mark> = BTreeMap::new();
    for start in parents.keys() {
        if marks.contains_key(start) {
            continue;
        }
        // iterative DFS; the stack holds (node, remaining parents)
        let mut path: Vec<&Iri> = vec![start];
        let mut stack: Vec<std::collections::btree_set::Iter<'_, Iri>> =
            vec![parents.get(start).map(|p| p.iter()).unwrap_or_default()];
        marks.insert(start, Mark::Open);
        while let Some(iter) = stack.last_mut() {
            match iter.next() {
                Some(next) => match marks.get(next) {
                    Some(Mark::Open) => {
                        let at = path.iter().position(|n| *n == next).unwrap_or(0);
                        return Some(path[at..].iter().map(|n| (*n).clone()).collect());
                    }
                    Some(Mark::Done) => {}
                    None => {
                        marks.insert(next, Mark::Open);
                        path.push(next);
                        stack.push(parents.get(next).map(|p| p.iter()).unwrap_or_default());
                    }
                },
                None => {
                    stack.pop();
                    if let Some(done) = path.pop() {
                        marks.insert(done, Mark::Done);
                    }
                }
            }
        }
    }
    None
}

fn transitive_closure(parents: &BTreeMap<Iri, BTreeSet<Iri>>) -> BTreeMap<Iri, BTreeSet<Iri>> {
    let mut memo: BTreeMap<Iri, BTreeSet<Iri>> = BTreeMap::new();
    for root in parents.keys() {
        let mut stack = vec![(root, false)];
        while let Some((node, expanded)) = stack.pop() {
            if memo.contains_key(node) {
                continue;
            }
            let ps = parents.get(node).into_iter().flatten();
            if expanded {
                let mut acc = BTreeSet::new();
                for p in ps {
                    acc.insert(p.clone());
                    acc.extend(memo.get(p).into_iter().flatten().cloned());
                }
                memo.insert(node.clone(), acc);
            } else {
                stack.push((node, true));
                stack.extend(ps.filter(|p| !memo.contains_key(*p)).map(|p| (p, false)));
            }
        }
    }
    memo
}

impl From<ParseError> for LexiconError {
    fn from(e: ParseError) -> Self {
        LexiconError::Parse(e)
    }
}
