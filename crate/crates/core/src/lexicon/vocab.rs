//! IRIs of the lexicon vocabulary.

pub const RDF_TYPE: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
pub const RDFS_LABEL: &str = "http://www.w3.org/2000/01/rdf-schema#label";
pub const SKOS_CLOSE_MATCH: &str = "http://www.w3.org/2004/02/skos/core#closeMatch";
pub const XSD_INT: &str = "http://www.w3.org/2001/XMLSchema#int";

pub const FSCHEMA: &str = "https://w3id.org/framester/schema/";
pub const FSCHEMA_SUBSUMED_UNDER: &str = "https://w3id.org/framester/schema/subsumedUnder";
pub const FSCHEMA_INTERFACE_ROLE: &str = "https://w3id.org/framester/schema/InterfaceRole";
pub const FSCHEMA_VERB_SENSE: &str = "https://w3id.org/framester/schema/VerbSense";
/// Frame-to-frame subsumption. Framester models this relation but publishes no
/// single predicate for it, so the store reads this one.
pub const FSCHEMA_SUB_FRAME_OF: &str = "https://w3id.org/framester/schema/subFrameOf";

pub const VN31SCHEMA: &str = "https://w3id.org/framester/vn/vn31/schema/";
pub const VN31_VERB_SENSE: &str = "https://w3id.org/framester/vn/vn31/schema/VerbSense";
pub const VN31_ARGUMENT: &str = "https://w3id.org/framester/vn/vn31/schema/Argument";
pub const VN31_IN_VERB_SENSE: &str = "https://w3id.org/framester/vn/vn31/schema/inVerbSense";
pub const VN31_IN_VERB_CLASS: &str = "https://w3id.org/framester/vn/vn31/schema/inVerbClass";

pub const VNSCHEMA: &str = "https://w3id.org/framester/vn/schema/";
pub const VN_SENSE_PREP_SELECTION: &str = "https://w3id.org/framester/vn/schema/SensePrepSelection";
pub const VN_HAS_GENERIC_ARGUMENT: &str = "https://w3id.org/framester/vn/schema/hasGenericArgument";
pub const VN_HAS_PREPOSITION: &str = "https://w3id.org/framester/vn/schema/hasPreposition";
pub const VN_HAS_VERB_SENSE: &str = "https://w3id.org/framester/vn/schema/hasVerbSense";

pub const WN_TAG_COUNT: &str = "https://w3id.org/framester/wn/wn30/schema/tagCount";

pub const VNDATA: &str = "https://w3id.org/framester/vn/vn31/data/";
pub const VNDATAPREP: &str = "https://w3id.org/framester/vn/vn31/data/prep/";
pub const FRAMENET: &str = "https://w3id.org/framester/framenet/abox/frame/";
