//! CoreNLP dependency triples, one arc per line, in either of the forms
//!
//! ```text
//! nsubj, conquered-3, Spaniards-2,
//! nsubj(conquered-3, Spaniards-2)
//! ```

use std::collections::BTreeMap;

use super::{DepEdge, DepGraph, DepsError, Token};

/// Parses one sentence. Blank lines are ignored.
pub fn parse_corenlp_triples(text: &str) -> Result<DepGraph, DepsError> {
    parse_lines(text.lines().enumerate().map(|(i, l)| (i + 1, l)), "1")
}

/// Parses several sentences separated by blank lines; ids are positional from 1.
pub fn parse_corenlp_document(text: &str) -> Result<Vec<DepGraph>, DepsError> {
    let mut out = Vec::new();
    let mut block: Vec<(usize, &str)> = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            if !block.is_empty() {
                out.push(parse_lines(block.drain(..), &(out.len() + 1).to_string())?);
            }
        } else {
            block.push((i + 1, line));
        }
    }
    if !block.is_empty() {
        out.push(parse_lines(block.into_iter(), &(out.len() + 1).to_string())?);
    }
    Ok(out)
}

/// Writes the `rel, Head-i, Dep-j` form, one arc per line in edge order.
pub fn write_corenlp_triples(graph: &DepGraph) -> String {
    let mut out = String::new();
    for e in graph.edges() {
        let head = match e.head {
            0 => "ROOT".to_string(),
            h => graph.token(h).map(|t| t.form.clone()).unwrap_or_default(),
        };
        let dep = graph.token(e.dependent).map(|t| t.form.as_str()).unwrap_or_default();
        out.push_str(&format!("{}, {}-{}, {}-{}\n", e.label(), head, e.head, dep, e.dependent));
    }
    out
}

fn parse_lines<'a>(lines: impl Iterator<Item = (usize, &'a str)>, sentence_id: &str) -> Result<DepGraph, DepsError> {
    let mut forms: BTreeMap<usize, String> = BTreeMap::new();
    let mut edges = Vec::new();
    let mut last_line = 0;
    for (line, raw) in lines {
        last_line = line;
        let entry = raw.trim();
        if entry.is_empty() {
            continue;
        }
        let (relation, (head_form, head), (dep_form, dep)) = parse_entry(entry).ok_or_else(|| DepsError::Parse {
            line,
            reason: format!("expected `rel, Form-Index, Form-Index`, got {entry:?}"),
        })?;
        if dep == 0 {
            return Err(DepsError::Parse {
                line,
                reason: "ROOT-0 used as a dependent".into(),
            });
        }
        for (form, idx) in [(head_form, head), (dep_form, dep)] {
            if idx == 0 {
                continue;
            }
            match forms.get(&idx) {
                Some(prev) if prev != form => {
                    return Err(DepsError::Parse {
                        line,
                        reason: format!("token {idx} is both {prev:?} and {form:?}"),
                    })
                }
                Some(_) => {}
                None => {
                    forms.insert(idx, form.to_string());
                }
            }
        }
        edges.push(DepEdge::new(relation, head, dep));
    }
    if edges.is_empty() {
        return Err(DepsError::Tree {
            sentence: sentence_id.to_string(),
            reason: format!("no arcs (through line {last_line})"),
        });
    }
    let tokens = forms.into_iter().map(|(i, f)| Token::bare(i, f)).collect();
    DepGraph::new(sentence_id, tokens, edges)
}

type Mention<'a> = (&'a str, usize);

fn parse_entry(entry: &str) -> Option<(&str, Mention<'_>, Mention<'_>)> {
    // rel(head, dep)
    if let Some(open) = entry.find('(') {
        let relation = entry[..open].trim();
        if entry.ends_with(')') && !relation.contains(',') && !relation.is_empty() {
            let (head, dep) = split_pair(&entry[open + 1..entry.len() - 1])?;
            return Some((relation, head, dep));
        }
    }
    let (relation, rest) = entry.split_once(',')?;
    let relation = relation.trim();
    if relation.is_empty() || relation.contains(char::is_whitespace) {
        return None;
    }
    let rest = rest.trim().trim_end_matches(',').trim_end();
    let (head, dep) = split_pair(rest)?;
    Some((relation, head, dep))
}

/// Splits `Head-i, Dep-j` at the first comma that leaves a mention on both sides.
fn split_pair(s: &str) -> Option<(Mention<'_>, Mention<'_>)> {
    s.match_indices(',').find_map(|(pos, _)| {
        let head = mention(s[..pos].trim())?;
        let dep = mention(s[pos + 1..].trim())?;
        Some((head, dep))
    })
}

fn mention(s: &str) -> Option<Mention<'_>> {
    let (form, index) = s.rsplit_once('-')?;
    if form.is_empty() || index.is_empty() || !index.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    Some((form, index.parse().ok()?))
}
