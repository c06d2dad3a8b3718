//! Tab-separated formats for frame annotations and role assignments.
//!
//! Frame annotations: `sentence_id  token_index  frame_iri`, one frame per
//! line; an empty or `_` frame marks the token as a predicate with no frame.
//!
//! Assignments: `sentence_id  predicate_token  predicate_lemma  role_name
//! filler_start  filler_end  filler_text`, optionally followed by
//! `filler_head  sense  label_kind  role_iri`. Lines starting with `#` are
//! comments. External systems may supply only the first seven columns; the
//! filler head then defaults to the last token of the span.

use std::collections::BTreeMap;

use percent_encoding::{utf8_percent_encode, NON_ALPHANUMERIC};

use crate::deps::Span;
use crate::heuristics::InterfaceRole;
use crate::lexicon::{InterfaceRoleId, Iri};

use super::{FrameAnnotation, RoleAssignment, RoleLabel, SrlError};

/// Namespace for role names read from seven-column files that are not interface roles.
pub const EXTERNAL_ROLE_NS: &str = "https://w3id.org/framerole/ext-role/";

const ASSIGNMENT_HEADER: &str =
    "#sentence_id\tpredicate_token\tpredicate_lemma\trole_name\tfiller_start\tfiller_end\tfiller_text\tfiller_head\tsense\tlabel_kind\trole_iri\n";

fn err(line: usize, reason: impl Into<String>) -> SrlError {
    SrlError {
        line,
        reason: reason.into(),
    }
}

pub fn parse_frame_annotations(text: &str) -> Result<Vec<FrameAnnotation>, SrlError> {
    let mut merged: BTreeMap<(String, usize), FrameAnnotation> = BTreeMap::new();
    let mut order: Vec<(String, usize)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let row = raw.trim_end_matches('\r');
        if row.trim().is_empty() || row.starts_with('#') {
            continue;
        }
        let cols: Vec<&str> = row.split('\t').collect();
        if !(2..=3).contains(&cols.len()) {
            return Err(err(line, format!("expected 3 tab-separated columns, found {}", cols.len())));
        }
        let sentence_id = cols[0].trim();
        if sentence_id.is_empty() {
            return Err(err(line, "empty sentence id"));
        }
        let token: usize = cols[1]
            .trim()
            .parse()
            .ok()
            .filter(|t| *t > 0)
            .ok_or_else(|| err(line, format!("invalid token index {:?}", cols[1])))?;
        let key = (sentence_id.to_string(), token);
        let entry = merged.entry(key.clone()).or_insert_with(|| {
            order.push(key);
            FrameAnnotation {
                sentence_id: sentence_id.to_string(),
                predicate_token: token,
                frames: Default::default(),
            }
        });
        let frame = cols.get(2).map(|f| f.trim()).unwrap_or("");
        if !frame.is_empty() && frame != "_" {
            let iri = Iri::new(frame).map_err(|e| err(line, e.to_string()))?;
            entry.frames.insert(iri);
        }
    }
    Ok(order.into_iter().filter_map(|k| merged.remove(&k)).collect())
}

pub fn write_frame_annotations(annotations: &[FrameAnnotation]) -> String {
    let mut out = String::new();
    for a in annotations {
        if a.frames.is_empty() {
            out.push_str(&format!("{}\t{}\t_\n", a.sentence_id, a.predicate_token));
        }
        for f in &a.frames {
            out.push_str(&format!("{}\t{}\t{}\n", a.sentence_id, a.predicate_token, f));
        }
    }
    out
}

pub fn write_assignments(assignments: &[RoleAssignment]) -> String {
    let mut out = String::from(ASSIGNMENT_HEADER);
    for a in assignments {
        let sense = a.sense.as_ref().map(Iri::as_str).unwrap_or("_");
        let role_iri = a.label.iri().map(Iri::as_str).unwrap_or("_");
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
            a.sentence_id,
            a.predicate_token,
            a.predicate_lemma,
            a.role_name,
            a.filler.start,
            a.filler.end,
            a.filler.text,
            a.filler_head,
            sense,
            a.label.kind(),
            role_iri
        ));
    }
    out
}

pub fn read_assignments(text: &str) -> Result<Vec<RoleAssignment>, SrlError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let row = raw.trim_end_matches('\r');
        if row.trim().is_empty() || row.starts_with('#') {
            continue;
        }
        let cols: Vec<&str> = row.split('\t').collect();
        if cols.len() != 7 && cols.len() != 11 {
            return Err(err(line, format!("expected 7 or 11 tab-separated columns, found {}", cols.len())));
        }
        let number = |col: usize, what: &str| -> Result<usize, SrlError> {
            cols[col]
                .trim()
                .parse()
                .ok()
                .filter(|n| *n > 0)
                .ok_or_else(|| err(line, format!("invalid {what} {:?}", cols[col])))
        };
        let predicate_token = number(1, "predicate_token")?;
        let start = number(4, "filler_start")?;
        let end = number(5, "filler_end")?;
        if start > end {
            return Err(err(line, format!("filler span {start}..{end} is reversed")));
        }
        let role_name = cols[3].trim().to_string();
        if role_name.is_empty() || cols[0].trim().is_empty() {
            return Err(err(line, "empty sentence id or role name"));
        }
        let (filler_head, sense, label) = if cols.len() == 11 {
            let head = number(7, "filler_head")?;
            let sense = match cols[8] {
                "_" => None,
                s => Some(Iri::new(s).map_err(|e| err(line, e.to_string()))?),
            };
            let iri = || Iri::new(cols[10]).map_err(|e| err(line, format!("role_iri: {e}")));
            let label = match cols[9] {
                "specific" => RoleLabel::Specific(iri()?),
                "lexicon" => RoleLabel::InterfaceFromLexicon(InterfaceRoleId {
                    id: iri()?,
                    name: role_name.clone(),
                }),
                "fallback" => RoleLabel::InterfaceFallback(
                    role_name.parse::<InterfaceRole>().map_err(|e| err(line, e.to_string()))?,
                ),
                other => return Err(err(line, format!("unknown label kind {other:?}"))),
            };
            (head, sense, label)
        } else {
            let label = match role_name.parse::<InterfaceRole>() {
                Ok(c) => RoleLabel::InterfaceFallback(c),
                Err(_) => RoleLabel::Specific(external_role_iri(&role_name)),
            };
            (end, None, label)
        };
        if !(start..=end).contains(&filler_head) {
            return Err(err(line, format!("filler head {filler_head} outside span {start}..{end}")));
        }
        out.push(RoleAssignment {
            sentence_id: cols[0].trim().to_string(),
            predicate_token,
            predicate_lemma: cols[2].trim().to_string(),
            sense,
            label,
            role_name,
            filler_head,
            filler: Span {
                start,
                end,
                text: cols[6].to_string(),
                indices: (start..=end).collect(),
            },
        });
    }
    Ok(out)
}

fn external_role_iri(name: &str) -> Iri {
    let encoded = utf8_percent_encode(name, NON_ALPHANUMERIC).to_string();
    Iri::new(format!("{EXTERNAL_ROLE_NS}{encoded}")).expect("percent-encoded IRI is valid")
}
