use super::{DepEdge, DepGraph, DepsError, Token};

/// Parses a CoNLL-U document. Multiword ranges (`1-2`) and empty nodes
/// (`1.1`) are skipped. A sentence takes its id from `# sent_id = ...`,
/// else its 1-based position in the file.
pub fn parse_conllu(text: &str) -> Result<Vec<DepGraph>, DepsError> {
    let mut out = Vec::new();
    let mut sent = Pending::default();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let row = raw.trim_end_matches(['\r', '\n']);
        if row.trim().is_empty() {
            sent.flush(&mut out)?;
            continue;
        }
        if let Some(comment) = row.strip_prefix('#') {
            if let Some((key, value)) = comment.split_once('=') {
                if key.trim() == "sent_id" {
                    sent.id = Some(value.trim().to_string());
                }
            }
            continue;
        }
        let cols: Vec<&str> = row.split('\t').collect();
        if cols.len() != 10 {
            return Err(DepsError::Parse {
                line,
                reason: format!("expected 10 tab-separated columns, found {}", cols.len()),
            });
        }
        if cols[0].contains(['-', '.']) {
            continue;
        }
        let number = |col: usize, what: &str| {
            cols[col].parse::<usize>().map_err(|_| DepsError::Parse {
                line,
                reason: format!("invalid {what} {:?}", cols[col]),
            })
        };
        let index = number(0, "ID")?;
        let head = number(6, "HEAD")?;
        let form = cols[1];
        let lemma = if cols[2] == "_" && form != "_" { form.to_lowercase() } else { cols[2].to_string() };
        let space_after = !cols[9].split('|').any(|f| f == "SpaceAfter=No");
        sent.tokens.push(Token {
            index,
            form: form.to_string(),
            lemma,
            upos: cols[3].to_string(),
            space_after,
        });
        sent.edges.push(DepEdge::new(cols[7], head, index));
        sent.first_line.get_or_insert(line);
    }
    sent.flush(&mut out)?;
    Ok(out)
}

#[derive(Default)]
struct Pending {
    id: Option<String>,
    tokens: Vec<Token>,
    edges: Vec<DepEdge>,
    first_line: Option<usize>,
}

impl Pending {
    fn flush(&mut self, out: &mut Vec<DepGraph>) -> Result<(), DepsError> {
        let taken = std::mem::take(self);
        if taken.tokens.is_empty() {
            // a comment block with no tokens carries no sentence
            return Ok(());
        }
        let id = taken.id.unwrap_or_else(|| (out.len() + 1).to_string());
        let graph = DepGraph::new(id, taken.tokens, taken.edges).map_err(|e| match e {
            DepsError::Tree { sentence, reason } => DepsError::Tree {
                sentence,
                reason: format!("{reason} (sentence starting at line {})", taken.first_line.unwrap_or(0)),
            },
            other => other,
        })?;
        out.push(graph);
        Ok(())
    }
}

/// Writes graphs as CoNLL-U with a `# sent_id` line per sentence.
/// XPOS, FEATS and DEPS are written as `_`.
pub fn write_conllu(graphs: &[DepGraph]) -> String {
    let mut out = String::new();
    for g in graphs {
        out.push_str(&format!("# sent_id = {}\n", g.sentence_id()));
        for t in g.tokens() {
            let e = g.head_edge(t.index).expect("validated graph");
            let misc = if t.space_after { "_" } else { "SpaceAfter=No" };
            out.push_str(&format!(
                "{}\t{}\t{}\t{}\t_\t_\t{}\t{}\t_\t{}\n",
                t.index,
                t.form,
                t.lemma,
                t.upos,
                e.head,
                e.label(),
                misc
            ));
        }
        out.push('\n');
    }
    out
}
