use thiserror::Error;

pub const GOLD_HEADER: &str = "sentence_id\tverb\tverb_class\tvn_role\tpb_role\tfiller";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("gold line {line}: {reason}")]
pub struct GoldError {
    pub line: usize,
    pub reason: String,
}

/// One annotated role of one verb, as in a SemLink-style gold table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldRow {
    pub sentence_id: String,
    pub verb: String,
    pub verb_class: String,
    pub vn_role: String,
    pub pb_role: String,
    pub filler: String,
}

/// `ARG0`..`ARG5`, `ARGA`, or `ARGM-<suffix>`.
pub(crate) fn is_pb_role(s: &str) -> bool {
    match s.strip_prefix("ARG") {
        Some(rest) if rest.len() == 1 => matches!(rest.as_bytes()[0], b'0'..=b'5' | b'A'),
        Some(rest) => rest
            .strip_prefix("M-")
            .is_some_and(|sfx| !sfx.is_empty() && sfx.chars().all(|c| c.is_ascii_alphanumeric() || c == '-')),
        None => false,
    }
}

/// Reads the six-column gold table. The first non-blank line must be the header.
pub fn read_gold_tsv(text: &str) -> Result<Vec<GoldRow>, GoldError> {
    let mut rows = Vec::new();
    let mut header_seen = false;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let row = raw.trim_end_matches('\r');
        if row.trim().is_empty() {
            continue;
        }
        let err = |reason: String| GoldError { line, reason };
        if !header_seen {
            if row != GOLD_HEADER {
                return Err(err(format!("expected header {GOLD_HEADER:?}")));
            }
            header_seen = true;
            continue;
        }
        let cols: Vec<&str> = row.split('\t').collect();
        if cols.len() != 6 {
            return Err(err(format!("expected 6 columns, found {}", cols.len())));
        }
        if cols[..5].iter().any(|c| c.trim().is_empty() || c.trim() != *c) {
            return Err(err("empty or padded key column".into()));
        }
        if !is_pb_role(cols[4]) {
            return Err(err(format!("{:?} is not a PropBank role", cols[4])));
        }
        if cols[5].trim().is_empty() {
            return Err(err("empty filler".into()));
        }
        rows.push(GoldRow {
            sentence_id: cols[0].into(),
            verb: cols[1].into(),
            verb_class: cols[2].into(),
            vn_role: cols[3].into(),
            pb_role: cols[4].into(),
            filler: cols[5].into(),
        });
    }
    Ok(rows)
}

pub fn write_gold_tsv(rows: &[GoldRow]) -> String {
    let mut out = format!("{GOLD_HEADER}\n");
    for r in rows {
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\t{}\t{}\n",
            r.sentence_id, r.verb, r.verb_class, r.vn_role, r.pb_role, r.filler
        ));
    }
    out
}
