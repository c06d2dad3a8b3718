//! VerbNet to PropBank role mapping.
//!
//! SemLink releases differ in layout, so the map is read from a plain
//! three-column TSV: `verb_class  vn_role  pb_role`. Lines starting with
//! `#` are comments. Converting a SemLink release into this layout is left
//! to an external script.

use std::collections::BTreeMap;

use thiserror::Error;

use super::gold::is_pb_role;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemLinkError {
    #[error("semlink line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("semlink line {line}: ({class}, {role}) already mapped to {previous}")]
    Conflict {
        line: usize,
        class: String,
        role: String,
        previous: String,
    },
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SemLinkMap {
    entries: BTreeMap<(String, String), String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PbMapping {
    Mapped(String),
    Unmapped { verb_class: String, vn_role: String },
}

/// Drops a leading member name from a class id, so `say-37.7-1` and
/// `37.7-1` name the same class.
pub fn normalize_class(class: &str) -> &str {
    match class.find(|c: char| c.is_ascii_digit()) {
        Some(i) if i > 0 && class[..i].ends_with('-') => &class[i..],
        _ => class,
    }
}

fn key(class: &str, role: &str) -> (String, String) {
    (normalize_class(class).to_string(), role.to_ascii_lowercase())
}

impl SemLinkMap {
    pub fn insert(&mut self, class: &str, role: &str, pb_role: &str) -> Option<String> {
        self.entries.insert(key(class, role), pb_role.to_string())
    }

    pub fn get(&self, class: &str, role: &str) -> Option<&str> {
        self.entries.get(&key(class, role)).map(String::as_str)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &str, &str)> {
        self.entries.iter().map(|((c, r), p)| (c.as_str(), r.as_str(), p.as_str()))
    }
}

pub fn read_semlink(text: &str) -> Result<SemLinkMap, SemLinkError> {
    let mut map = SemLinkMap::default();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let row = raw.trim();
        if row.is_empty() || row.starts_with('#') {
            continue;
        }
        let cols: Vec<&str> = row.split('\t').map(str::trim).collect();
        let parse = |reason: String| SemLinkError::Parse { line, reason };
        if cols.len() != 3 {
            return Err(parse(format!("expected 3 columns, found {}", cols.len())));
        }
        if cols[0].is_empty() || cols[1].is_empty() {
            return Err(parse("empty class or role".into()));
        }
        if !is_pb_role(cols[2]) {
            return Err(parse(format!("{:?} is not a PropBank role", cols[2])));
        }
        if let Some(previous) = map.get(cols[0], cols[1]) {
            if previous != cols[2] {
                return Err(SemLinkError::Conflict {
                    line,
                    class: cols[0].into(),
                    role: cols[1].into(),
                    previous: previous.into(),
                });
            }
        }
        map.insert(cols[0], cols[1], cols[2]);
    }
    Ok(map)
}

/// Writes the normalized map; role names come out lowercased.
pub fn write_semlink(map: &SemLinkMap) -> String {
    let mut out = String::from("# verb_class\tvn_role\tpb_role\n");
    for (c, r, p) in map.iter() {
        out.push_str(&format!("{c}\t{r}\t{p}\n"));
    }
    out
}

pub fn map_vn_to_pb<S: AsRef<str>>(rows: &[(S, S)], map: &SemLinkMap) -> Vec<PbMapping> {
    rows.iter()
        .map(|(class, role)| match map.get(class.as_ref(), role.as_ref()) {
            Some(pb) => PbMapping::Mapped(pb.to_string()),
            None => PbMapping::Unmapped {
                verb_class: class.as_ref().to_string(),
                vn_role: role.as_ref().to_string(),
            },
        })
        .collect()
}
