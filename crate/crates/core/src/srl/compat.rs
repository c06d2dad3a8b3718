use crate::heuristics::InterfaceRole;
use crate::lexicon::{InterfaceRoleId, Iri, LexiconStore, SpecificRole};

use super::RoleLabel;

fn core_role(name: &str) -> Option<InterfaceRole> {
    name.parse::<InterfaceRole>().ok().filter(|r| r.is_core())
}

/// Reconciles the syntactic interface role `c1` of a dependent with one
/// lexicon pair (`v1`, `r1`) of the verb sense. Rules, first match wins:
///
/// 1. no lexicon pair: `c1`;
/// 2. `c1` and `v1` name the same core role: the specific role `r1`;
/// 3. both oblique and a preposition is known: the argument the sense
///    selects for that preposition, else `Oblique`;
/// 4. `c1` is Agent or Undergoer, `v1` differs, and the top of `v1`'s
///    subsumption chain is Theme: `v1`;
/// 5. otherwise `c1`.
pub fn check_compatibility(
    c1: InterfaceRole,
    v1: Option<&InterfaceRoleId>,
    r1: Option<&SpecificRole>,
    prep: Option<&str>,
    sense: &Iri,
    store: &LexiconStore,
) -> RoleLabel {
    let fallback = RoleLabel::InterfaceFallback(c1);
    let Some(v1) = v1 else {
        // covers rule 1; an r1 without an interface role offers nothing to align
        return fallback;
    };
    let v1_core = core_role(&v1.name);

    if let (true, Some(v), Some(r)) = (c1.is_core(), v1_core, r1) {
        if v == c1 {
            return RoleLabel::Specific(r.id.clone());
        }
    }

    if c1 == InterfaceRole::Oblique && v1.name.eq_ignore_ascii_case("Oblique") {
        if let Some(prep) = prep {
            return match store.prep_argument(sense, prep).into_iter().next() {
                Some(arg) => RoleLabel::Specific(arg),
                None => fallback,
            };
        }
    }

    if matches!(c1, InterfaceRole::Agent | InterfaceRole::Undergoer) && !v1.name.eq_ignore_ascii_case(c1.name()) {
        if let Ok(apex) = store.role_apex(&v1.id) {
            if store.role_name(&apex).eq_ignore_ascii_case("Theme") {
                return RoleLabel::InterfaceFromLexicon(v1.clone());
            }
        }
    }

    fallback
}
