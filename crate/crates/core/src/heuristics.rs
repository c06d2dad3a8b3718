//! Dependency relation → interface role mapping.
//!
//! The table is an ordered rule list; the first rule whose pattern matches
//! the relation label wins. Config files hold one rule per line:
//!
//! ```text
//! # relation  role
//! dobj    Recipient
//! nmod*   Oblique
//! punct   none
//! %default
//! ```
//!
//! A trailing `*` makes the pattern a prefix match. `none` maps the relation
//! to no role. `%default` splices in the built-in rules at that position;
//! without it the file replaces the built-in table.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum InterfaceRole {
    Agent,
    Undergoer,
    Recipient,
    Eventuality,
    Oblique,
}

impl InterfaceRole {
    pub const ALL: [InterfaceRole; 5] = [
        InterfaceRole::Agent,
        InterfaceRole::Undergoer,
        InterfaceRole::Recipient,
        InterfaceRole::Eventuality,
        InterfaceRole::Oblique,
    ];

    pub fn name(self) -> &'static str {
        match self {
            InterfaceRole::Agent => "Agent",
            InterfaceRole::Undergoer => "Undergoer",
            InterfaceRole::Recipient => "Recipient",
            InterfaceRole::Eventuality => "Eventuality",
            InterfaceRole::Oblique => "Oblique",
        }
    }

    /// Member of the core set {Agent, Undergoer, Recipient, Eventuality}.
    pub fn is_core(self) -> bool {
        self != InterfaceRole::Oblique
    }
}

impl fmt::Display for InterfaceRole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{0:?} is not an interface role")]
pub struct UnknownInterfaceRole(pub String);

impl FromStr for InterfaceRole {
    type Err = UnknownInterfaceRole;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        InterfaceRole::ALL
            .into_iter()
            .find(|r| r.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| UnknownInterfaceRole(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("role table line {line}: {reason}")]
pub struct ConfigError {
    pub line: usize,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Pattern {
    Exact(String),
    Prefix(String),
}

impl Pattern {
    fn matches(&self, relation: &str) -> bool {
        match self {
            Pattern::Exact(p) => relation == p,
            Pattern::Prefix(p) => relation.starts_with(p.as_str()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rule {
    pub pattern: Pattern,
    pub role: Option<InterfaceRole>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RoleTable {
    rules: Vec<Rule>,
}

const DEFAULT_RULES: &[(&str, Option<InterfaceRole>)] = &[
    ("nsubjpass", Some(InterfaceRole::Undergoer)),
    ("nsubj:pass", Some(InterfaceRole::Undergoer)),
    ("csubjpass", Some(InterfaceRole::Undergoer)),
    ("csubj:pass", Some(InterfaceRole::Undergoer)),
    ("nsubj", Some(InterfaceRole::Agent)),
    ("agent", Some(InterfaceRole::Agent)),
    ("csubj", Some(InterfaceRole::Agent)),
    ("dobj", Some(InterfaceRole::Undergoer)),
    ("obj", Some(InterfaceRole::Undergoer)),
    ("iobj", Some(InterfaceRole::Recipient)),
    ("ccomp", Some(InterfaceRole::Eventuality)),
    ("xcomp", Some(InterfaceRole::Eventuality)),
    ("advcl", Some(InterfaceRole::Eventuality)),
    ("nmod*", Some(InterfaceRole::Oblique)),
    ("obl*", Some(InterfaceRole::Oblique)),
];

fn parse_pattern(p: &str) -> Pattern {
    match p.strip_suffix('*') {
        Some(prefix) => Pattern::Prefix(prefix.to_string()),
        None => Pattern::Exact(p.to_string()),
    }
}

fn default_rules() -> impl Iterator<Item = Rule> {
    DEFAULT_RULES.iter().map(|(p, role)| Rule {
        pattern: parse_pattern(p),
        role: *role,
    })
}

impl Default for RoleTable {
    fn default() -> Self {
        RoleTable {
            rules: default_rules().collect(),
        }
    }
}

impl RoleTable {
    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    /// Role of the first rule matching `relation` (the full label, subtype included).
    pub fn interface_role_of(&self, relation: &str) -> Option<InterfaceRole> {
        self.rules
            .iter()
            .find(|r| r.pattern.matches(relation))
            .and_then(|r| r.role)
    }

    /// Serializes to the config format; loading the result yields an equal table.
    pub fn to_config(&self) -> String {
        let mut out = String::new();
        for r in &self.rules {
            match &r.pattern {
                Pattern::Exact(p) => out.push_str(p),
                Pattern::Prefix(p) => {
                    out.push_str(p);
                    out.push('*');
                }
            }
            out.push('\t');
            out.push_str(r.role.map(InterfaceRole::name).unwrap_or("none"));
            out.push('\n');
        }
        out
    }
}

/// Parses a config, or returns the built-in table when `config_text` is `None`.
pub fn load_role_table(config_text: Option<&str>) -> Result<RoleTable, ConfigError> {
    let Some(text) = config_text else {
        return Ok(RoleTable::default());
    };
    let mut rules = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let entry = raw.trim();
        if entry.is_empty() || entry.starts_with('#') {
            continue;
        }
        if entry == "%default" {
            rules.extend(default_rules());
            continue;
        }
        let (pattern, role) = entry.split_once(char::is_whitespace).ok_or_else(|| ConfigError {
            line,
            reason: "expected relation and role separated by whitespace".into(),
        })?;
        let (pattern, role) = (pattern.trim(), role.trim());
        if pattern.is_empty() || pattern == "*" {
            return Err(ConfigError {
                line,
                reason: "empty relation pattern".into(),
            });
        }
        let role = if role.eq_ignore_ascii_case("none") {
            None
        } else {
            Some(role.parse::<InterfaceRole>().map_err(|e| ConfigError {
                line,
                reason: e.to_string(),
            })?)
        };
        rules.push(Rule {
            pattern: parse_pattern(pattern),
            role,
        });
    }
    if rules.is_empty() {
        return Err(ConfigError {
            line: text.lines().count(),
            reason: "table has no rules".into(),
        });
    }
    Ok(RoleTable { rules })
}
