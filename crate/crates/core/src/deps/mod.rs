//! Dependency graphs: ingestion from CoNLL-U and CoreNLP triple lines,
//! plus filler-span and preposition lookups.

mod conllu;
mod corenlp;

use std::collections::BTreeMap;

use thiserror::Error;

pub use conllu::{parse_conllu, write_conllu};
pub use corenlp::{parse_corenlp_document, parse_corenlp_triples, write_corenlp_triples};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DepsError {
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("malformed tree in sentence {sentence}: {reason}")]
    Tree { sentence: String, reason: String },
    #[error("no token {0}")]
    UnknownToken(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    /// 1-based position in the sentence.
    pub index: usize,
    pub form: String,
    pub lemma: String,
    pub upos: String,
    /// From `SpaceAfter=No` in CoNLL-U MISC; true otherwise.
    pub space_after: bool,
}

impl Token {
    /// A token as the CoreNLP triple format provides it: lemma is the
    /// lowercased form and the tag is unknown.
    pub fn bare(index: usize, form: impl Into<String>) -> Token {
        let form = form.into();
        Token {
            index,
            lemma: form.to_lowercase(),
            form,
            upos: "X".to_string(),
            space_after: true,
        }
    }
}

/// One labeled arc. `head == 0` is the virtual root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DepEdge {
    /// Base relation, e.g. `nmod` for `nmod:into`.
    pub relation: String,
    /// Subtype after the colon, if any.
    pub subtype: Option<String>,
    pub head: usize,
    pub dependent: usize,
}

impl DepEdge {
    pub fn new(label: &str, head: usize, dependent: usize) -> DepEdge {
        let (relation, subtype) = match label.split_once(':') {
            Some((base, sub)) if !sub.is_empty() => (base.to_string(), Some(sub.to_string())),
            _ => (label.trim_end_matches(':').to_string(), None),
        };
        DepEdge {
            relation,
            subtype,
            head,
            dependent,
        }
    }

    /// The relation as written, subtype included.
    pub fn label(&self) -> String {
        match &self.subtype {
            Some(sub) => format!("{}:{}", self.relation, sub),
            None => self.relation.clone(),
        }
    }
}

/// A contiguous token range and its surface text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Span {
    pub start: usize,
    pub end: usize,
    pub text: String,
    /// The exact token indices of the subtree, ascending.
    pub indices: Vec<usize>,
}

impl Span {
    pub fn contains(&self, index: usize) -> bool {
        (self.start..=self.end).contains(&index)
    }
}

/// A validated dependency tree: one root, one head per token, no cycles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DepGraph {
    sentence_id: String,
    tokens: Vec<Token>,
    edges: Vec<DepEdge>,
    position: BTreeMap<usize, usize>,
    head_edge: BTreeMap<usize, usize>,
    children: BTreeMap<usize, Vec<usize>>,
}

impl DepGraph {
    pub fn new(sentence_id: impl Into<String>, mut tokens: Vec<Token>, edges: Vec<DepEdge>) -> Result<DepGraph, DepsError> {
        let sentence_id = sentence_id.into();
        let tree_err = |reason: String| DepsError::Tree {
            sentence: sentence_id.clone(),
            reason,
        };
        tokens.sort_by_key(|t| t.index);
        let mut position = BTreeMap::new();
        for (i, t) in tokens.iter().enumerate() {
            if t.index == 0 {
                return Err(tree_err("token index 0 is reserved for the root".into()));
            }
            if t.form.is_empty() {
                return Err(tree_err(format!("token {} has an empty form", t.index)));
            }
            if position.insert(t.index, i).is_some() {
                return Err(tree_err(format!("duplicate token index {}", t.index)));
            }
        }
        if tokens.is_empty() {
            return Err(tree_err("no tokens".into()));
        }

        let mut head_edge = BTreeMap::new();
        let mut children: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        let mut roots = 0;
        for (i, e) in edges.iter().enumerate() {
            if e.dependent == 0 || e.dependent == e.head {
                return Err(tree_err(format!("invalid arc {} -> {}", e.head, e.dependent)));
            }
            if !position.contains_key(&e.dependent) {
                return Err(tree_err(format!("arc to unknown token {}", e.dependent)));
            }
            if e.head != 0 && !position.contains_key(&e.head) {
                return Err(tree_err(format!("arc from unknown token {}", e.head)));
            }
            if e.head == 0 {
                roots += 1;
            }
            if head_edge.insert(e.dependent, i).is_some() {
                return Err(tree_err(format!("token {} has two heads", e.dependent)));
            }
            children.entry(e.head).or_default().push(e.dependent);
        }
        match roots {
            0 => return Err(tree_err("no root arc".into())),
            1 => {}
            n => return Err(tree_err(format!("{n} root arcs"))),
        }
        if let Some(orphan) = tokens.iter().find(|t| !head_edge.contains_key(&t.index)) {
            return Err(tree_err(format!("token {} has no head", orphan.index)));
        }
        // every token must reach the root within |tokens| steps
        for t in &tokens {
            let mut node = t.index;
            let mut steps = 0;
            while node != 0 {
                node = edges[head_edge[&node]].head;
                steps += 1;
                if steps > tokens.len() {
                    return Err(tree_err(format!("cycle through token {}", t.index)));
                }
            }
        }
        for kids in children.values_mut() {
            kids.sort_unstable();
        }
        Ok(DepGraph {
            sentence_id,
            tokens,
            edges,
            position,
            head_edge,
            children,
        })
    }

    pub fn sentence_id(&self) -> &str {
        &self.sentence_id
    }

    pub fn tokens(&self) -> &[Token] {
        &self.tokens
    }

    pub fn edges(&self) -> &[DepEdge] {
        &self.edges
    }

    pub fn token(&self, index: usize) -> Option<&Token> {
        self.position.get(&index).map(|&i| &self.tokens[i])
    }

    /// The arc whose dependent is `index`.
    pub fn head_edge(&self, index: usize) -> Option<&DepEdge> {
        self.head_edge.get(&index).map(|&i| &self.edges[i])
    }

    pub fn root(&self) -> usize {
        self.children.get(&0).and_then(|c| c.first().copied()).unwrap_or(0)
    }

    /// Outgoing arcs of `head`, in dependent order.
    pub fn dependents(&self, head: usize) -> impl Iterator<Item = &DepEdge> {
        self.children
            .get(&head)
            .into_iter()
            .flatten()
            .filter_map(|d| self.head_edge(*d))
    }

    /// Replaces lemma, tag and spacing with those of a parse of the same
    /// sentence. Forms must agree at every shared index.
    pub fn with_morphology(mut self, sidecar: &DepGraph) -> Result<DepGraph, DepsError> {
        for t in &mut self.tokens {
            let Some(m) = sidecar.token(t.index) else {
                continue;
            };
            if m.form != t.form {
                return Err(DepsError::Tree {
                    sentence: self.sentence_id.clone(),
                    reason: format!("token {}: form {:?} differs from sidecar {:?}", t.index, t.form, m.form),
                });
            }
            t.lemma = m.lemma.clone();
            t.upos = m.upos.clone();
            t.space_after = m.space_after;
        }
        Ok(self)
    }

    /// Exact index set of the subtree rooted at `head`, ascending.
    pub fn subtree_indices(&self, head: usize) -> Result<Vec<usize>, DepsError> {
        if !self.position.contains_key(&head) {
            return Err(DepsError::UnknownToken(head));
        }
        let mut out = Vec::new();
        let mut stack = vec![head];
        while let Some(n) = stack.pop() {
            out.push(n);
            stack.extend(self.children.get(&n).into_iter().flatten());
        }
        out.sort_unstable();
        Ok(out)
    }

    /// Minimal contiguous cover of the subtree of `head`.
    pub fn subtree_yield(&self, head: usize) -> Result<Span, DepsError> {
        let indices = self.subtree_indices(head)?;
        let start = indices[0];
        let end = indices[indices.len() - 1];
        Ok(Span {
            start,
            end,
            text: self.surface(start, end),
            indices,
        })
    }

    /// Span of an argument headed at `head`: the subtree yield without the
    /// head's `case` markers, which name the relation rather than the entity.
    pub fn argument_span(&self, head: usize) -> Result<Span, DepsError> {
        let mut drop = Vec::new();
        for e in self.dependents(head).filter(|e| e.relation == "case") {
            drop.extend(self.subtree_indices(e.dependent)?);
        }
        let indices: Vec<usize> = self.subtree_indices(head)?.into_iter().filter(|i| !drop.contains(i)).collect();
        let start = indices[0];
        let end = indices[indices.len() - 1];
        Ok(Span {
            start,
            end,
            text: self.surface(start, end),
            indices,
        })
    }

    /// Surface text of the tokens in `[start, end]`, honoring `space_after`.
    pub fn surface(&self, start: usize, end: usize) -> String {
        let mut text = String::new();
        let mut pending_space = false;
        for t in self.tokens.iter().filter(|t| (start..=end).contains(&t.index)) {
            if pending_space {
                text.push(' ');
            }
            text.push_str(&t.form);
            pending_space = t.space_after;
        }
        text
    }

    /// Preposition marking the oblique `dependent` of `head`: the lemma of the
    /// dependent's `case` child, else the relation subtype (`nmod:into`).
    pub fn preposition_of(&self, head: usize, dependent: usize) -> Option<String> {
        let edge = self.head_edge(dependent)?;
        if edge.head != head || !is_oblique(&edge.relation) {
            return None;
        }
        if let Some(case) = self.dependents(dependent).find(|e| e.relation == "case") {
            let t = self.token(case.dependent)?;
            let word = if t.lemma.is_empty() || t.lemma == "_" { &t.form } else { &t.lemma };
            return Some(word.to_lowercase());
        }
        match edge.subtype.as_deref() {
            Some("poss" | "tmod" | "npmod") | None => None,
            Some(sub) => Some(sub.to_lowercase()),
        }
    }
}

fn is_oblique(relation: &str) -> bool {
    matches!(relation, "nmod" | "obl")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn listing() -> DepGraph {
        parse_corenlp_triples(
            "det, Spaniards-2, The-1,\nnsubj, conquered-3, Spaniards-2,\nroot, ROOT-0, conquered-3,\ndet, Incas-5, the-4,\ndobj, conquered-3, Incas-5\n",
        )
        .unwrap()
    }

    #[test]
    fn subtree_yield_covers_determiners() {
        let g = listing();
        let span = g.subtree_yield(2).unwrap();
        assert_eq!((span.start, span.end, span.text.as_str()), (1, 2, "The Spaniards"));
        let span = g.subtree_yield(5).unwrap();
        assert_eq!((span.start, span.end, span.text.as_str()), (4, 5, "the Incas"));
        let leaf = g.subtree_yield(1).unwrap();
        assert_eq!((leaf.start, leaf.end, leaf.text.as_str()), (1, 1, "The"));
        assert_eq!(g.subtree_yield(9), Err(DepsError::UnknownToken(9)));
    }

    #[test]
    fn argument_span_drops_case_markers() {
        let g = parse_corenlp_triples(
            "root, ROOT-0, conquered-1\nnmod, conquered-1, weapons-4\ncase, weapons-4, with-2\namod, weapons-4, sharp-3\n",
        )
        .unwrap();
        let span = g.argument_span(4).unwrap();
        assert_eq!((span.start, span.end, span.text.as_str()), (3, 4, "sharp weapons"));
        assert_eq!(g.subtree_yield(4).unwrap().text, "with sharp weapons");
        assert_eq!(g.argument_span(3).unwrap(), g.subtree_yield(3).unwrap());
    }

    #[test]
    fn root_subtree_covers_sentence() {
        let g = listing();
        let span = g.subtree_yield(g.root()).unwrap();
        assert_eq!(span.indices, vec![1, 2, 3, 4, 5]);
        assert_eq!(span.text, "The Spaniards conquered the Incas");
    }

    #[test]
    fn non_contiguous_subtree_uses_covering_range() {
        // 2 heads 1 and 4; 3 hangs off the root verb
        let tokens = (1..=4).map(|i| Token::bare(i, format!("w{i}"))).collect();
        let edges = vec![
            DepEdge::new("root", 0, 3),
            DepEdge::new("nsubj", 3, 2),
            DepEdge::new("det", 2, 1),
            DepEdge::new("nmod", 2, 4),
        ];
        let g = DepGraph::new("s", tokens, edges).unwrap();
        let span = g.subtree_yield(2).unwrap();
        assert_eq!((span.start, span.end), (1, 4));
        assert_eq!(span.indices, vec![1, 2, 4]);
    }

    #[test]
    fn preposition_from_case_child() {
        let g = parse_corenlp_triples(
            "root, ROOT-0, conquered-2\nnsubj, conquered-2, They-1\ndobj, conquered-2, them-3\nnmod, conquered-2, weapons-5\ncase, weapons-5, with-4\n",
        )
        .unwrap();
        assert_eq!(g.preposition_of(2, 5).as_deref(), Some("with"));
        assert_eq!(g.preposition_of(2, 3), None);
        // wrong head
        assert_eq!(g.preposition_of(3, 5), None);
    }

    #[test]
    fn preposition_from_relation_subtype() {
        let g = parse_corenlp_triples("root, ROOT-0, went-1\nnmod:into, went-1, town-2\nnmod:poss, town-2, his-3\n").unwrap();
        assert_eq!(g.preposition_of(1, 2).as_deref(), Some("into"));
        assert_eq!(g.preposition_of(2, 3), None);
        assert_eq!(g.head_edge(2).unwrap().relation, "nmod");
        assert_eq!(g.head_edge(2).unwrap().label(), "nmod:into");
    }

    #[test]
    fn rejects_cycles_and_orphans() {
        let tokens: Vec<Token> = (1..=3).map(|i| Token::bare(i, "w")).collect();
        let cyclic = vec![
            DepEdge::new("root", 0, 1),
            DepEdge::new("dep", 3, 2),
            DepEdge::new("dep", 2, 3),
        ];
        assert!(matches!(DepGraph::new("s", tokens.clone(), cyclic), Err(DepsError::Tree { .. })));
        let orphan = vec![DepEdge::new("root", 0, 1), DepEdge::new("dep", 1, 2)];
        assert!(matches!(DepGraph::new("s", tokens, orphan), Err(DepsError::Tree { .. })));
    }

    #[test]
    fn sidecar_supplies_morphology() {
        let sidecar = &parse_conllu(
            "1\tThe\tthe\tDET\t_\t_\t2\tdet\t_\t_\n2\tSpaniards\tSpaniard\tPROPN\t_\t_\t3\tnsubj\t_\t_\n3\tconquered\tconquer\tVERB\t_\t_\t0\troot\t_\t_\n4\tthe\tthe\tDET\t_\t_\t5\tdet\t_\t_\n5\tIncas\tInca\tPROPN\t_\t_\t3\tobj\t_\t_\n",
        )
        .unwrap()[0];
        let g = listing().with_morphology(sidecar).unwrap();
        assert_eq!(g.token(3).unwrap().lemma, "conquer");
        assert_eq!(g.token(3).unwrap().upos, "VERB");
        // arcs still come from the triples
        assert_eq!(g.head_edge(5).unwrap().relation, "dobj");
    }
}
