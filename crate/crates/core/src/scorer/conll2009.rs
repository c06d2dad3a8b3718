//! CoNLL-2009 column files.
//!
//! Columns: ID FORM LEMMA PLEMMA POS PPOS FEAT PFEAT HEAD PHEAD DEPREL
//! PDEPREL FILLPRED PRED APRED1..APREDn. The k-th row with FILLPRED `Y`
//! owns column APREDk. The format has no sentence ids, so sentences are
//! numbered from 1 in file order.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::deps::DepGraph;

use super::PredicateArgSet;

const FIXED: usize = 14;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Conll2009Error {
    #[error("conll2009 line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("conll2009 line {line}: {found} APRED columns for {predicates} predicates")]
    ColumnCount { line: usize, found: usize, predicates: usize },
    #[error("cannot write sentence {sentence}: {reason}")]
    Write { sentence: String, reason: String },
}

fn parse_err(line: usize, reason: impl Into<String>) -> Conll2009Error {
    Conll2009Error::Parse {
        line,
        reason: reason.into(),
    }
}

pub fn read_conll2009(text: &str) -> Result<Vec<PredicateArgSet>, Conll2009Error> {
    let mut out = Vec::new();
    let mut block: Vec<(usize, Vec<&str>)> = Vec::new();
    let mut sentence = 0usize;
    let lines: Vec<&str> = text.lines().collect();
    for (i, raw) in lines.iter().enumerate() {
        let row = raw.trim_end_matches('\r');
        if row.trim().is_empty() {
            if !block.is_empty() {
                sentence += 1;
                read_sentence(&sentence.to_string(), &block, &mut out)?;
                block.clear();
            }
            continue;
        }
        block.push((i + 1, row.split('\t').collect()));
    }
    if !block.is_empty() {
        sentence += 1;
        read_sentence(&sentence.to_string(), &block, &mut out)?;
    }
    Ok(out)
}

fn read_sentence(
    sentence_id: &str,
    rows: &[(usize, Vec<&str>)],
    out: &mut Vec<PredicateArgSet>,
) -> Result<(), Conll2009Error> {
    let mut predicates: Vec<(usize, String)> = Vec::new();
    for (n, (line, cols)) in rows.iter().enumerate() {
        if cols.len() < FIXED {
            return Err(parse_err(*line, format!("expected at least {FIXED} columns, found {}", cols.len())));
        }
        let id: usize = cols[0].parse().map_err(|_| parse_err(*line, format!("bad ID {:?}", cols[0])))?;
        if id != n + 1 {
            return Err(parse_err(*line, format!("ID {id} out of sequence, expected {}", n + 1)));
        }
        match (cols[12], cols[13]) {
            ("Y", "_") => return Err(parse_err(*line, "FILLPRED is Y but PRED is empty")),
            ("Y", sense) => predicates.push((id, sense.to_string())),
            ("_", "_") => {}
            ("_", _) => return Err(parse_err(*line, "PRED given without FILLPRED")),
            (other, _) => return Err(parse_err(*line, format!("FILLPRED must be Y or _, found {other:?}"))),
        }
    }
    let mut sets: Vec<PredicateArgSet> = predicates
        .into_iter()
        .map(|(token, sense)| PredicateArgSet {
            sentence_id: sentence_id.to_string(),
            predicate_token: token,
            sense,
            args: Vec::new(),
        })
        .collect();
    for (n, (line, cols)) in rows.iter().enumerate() {
        let found = cols.len() - FIXED;
        if found != sets.len() {
            return Err(Conll2009Error::ColumnCount {
                line: *line,
                found,
                predicates: sets.len(),
            });
        }
        for (k, cell) in cols[FIXED..].iter().enumerate() {
            if *cell != "_" {
                if cell.is_empty() {
                    return Err(parse_err(*line, "empty APRED cell"));
                }
                sets[k].args.push((n + 1, cell.to_string()));
            }
        }
    }
    out.extend(sets);
    Ok(())
}

fn cell_ok(s: &str) -> bool {
    !s.is_empty() && s != "_" && !s.chars().any(char::is_whitespace)
}

/// Writes one block per graph, in graph order. Argument sets are matched
/// to graphs by sentence id; sets naming unknown sentences or tokens are
/// rejected.
pub fn write_conll2009(sets: &[PredicateArgSet], graphs: &[DepGraph]) -> Result<String, Conll2009Error> {
    let mut by_sentence: BTreeMap<&str, Vec<&PredicateArgSet>> = BTreeMap::new();
    for s in sets {
        by_sentence.entry(s.sentence_id.as_str()).or_default().push(s);
    }
    let mut out = String::new();
    for graph in graphs {
        let sid = graph.sentence_id();
        let werr = |reason: String| Conll2009Error::Write {
            sentence: sid.to_string(),
            reason,
        };
        let mut preds = by_sentence.remove(sid).unwrap_or_default();
        preds.sort_by_key(|p| p.predicate_token);
        let mut columns: Vec<BTreeMap<usize, &str>> = Vec::with_capacity(preds.len());
        for (k, p) in preds.iter().enumerate() {
            if k > 0 && preds[k - 1].predicate_token == p.predicate_token {
                return Err(werr(format!("predicate {} given twice", p.predicate_token)));
            }
            if graph.token(p.predicate_token).is_none() {
                return Err(werr(format!("predicate token {} not in sentence", p.predicate_token)));
            }
            if !cell_ok(&p.sense) {
                return Err(werr(format!("unwritable sense {:?}", p.sense)));
            }
            let mut col = BTreeMap::new();
            for (t, label) in &p.args {
                if graph.token(*t).is_none() {
                    return Err(werr(format!("argument token {t} not in sentence")));
                }
                if !cell_ok(label) {
                    return Err(werr(format!("unwritable label {label:?}")));
                }
                if col.insert(*t, label.as_str()).is_some() {
                    return Err(werr(format!("argument token {t} given twice for predicate {}", p.predicate_token)));
                }
            }
            columns.push(col);
        }
        for tok in graph.tokens() {
            let (head, rel) = match graph.head_edge(tok.index) {
                Some(e) => (e.head, e.label()),
                None => (0, "_".to_string()),
            };
            let pred = preds.iter().find(|p| p.predicate_token == tok.index);
            let (fill, sense) = match pred {
                Some(p) => ("Y", p.sense.as_str()),
                None => ("_", "_"),
            };
            let mut row = vec![
                tok.index.to_string(),
                tok.form.clone(),
                tok.lemma.clone(),
                tok.lemma.clone(),
                tok.upos.clone(),
                tok.upos.clone(),
                "_".into(),
                "_".into(),
                head.to_string(),
                head.to_string(),
                rel.clone(),
                rel,
                fill.into(),
                sense.into(),
            ];
            row.extend(columns.iter().map(|c| c.get(&tok.index).copied().unwrap_or("_").to_string()));
            out.push_str(&row.join("\t"));
            out.push('\n');
        }
        out.push('\n');
    }
    if let Some(sid) = by_sentence.keys().next() {
        return Err(Conll2009Error::Write {
            sentence: sid.to_string(),
            reason: "no dependency graph for this sentence".into(),
        });
    }
    Ok(out)
}
