//! The `framerole` command line.
//!
//! Exit codes: 0 on success, 1 on usage or input errors, 2 when a loaded
//! resource violates a structural invariant (for example a subsumption cycle).

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use crate::deps::{parse_conllu, parse_corenlp_document, DepGraph};
use crate::ensemble::{merge_with, Precedence, SystemOutput};
use crate::heuristics::{load_role_table, RoleTable};
use crate::kg::{build_graph_with_base, KnowledgeGraph, DEFAULT_BASE};
use crate::lexicon::{load_lexicon, parse_ntriples, remote_fetch, LexiconError, LexiconQuery, LexiconStore};
use crate::scorer::{
    assignments_to_arg_sets, read_conll2009, read_gold_tsv, read_semlink, score, score_strict, ScoreReport,
};
use crate::srl::{
    label_sentence_with, parse_frame_annotations, read_assignments, select_verb_sense, write_assignments,
    FrameAnnotation, LabelOptions, RoleAssignment,
};

pub const CACHE_ENV: &str = "FRAMEROLE_CACHE";

#[derive(Debug, Parser)]
#[command(name = "framerole", version, about = "Knowledge-based semantic role labeling")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Label dependency-parsed sentences with semantic roles.
    Label(LabelArgs),
    /// Score predictions against gold annotations.
    Score(ScoreArgs),
    /// Merge two assignment files; the primary wins on conflicting keys.
    Merge(MergeArgs),
    /// Inspect a lexicon file.
    #[command(subcommand)]
    Lexicon(LexiconCommand),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Emit {
    Kg,
    Tsv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum InputFormat {
    Conllu,
    Triples,
}

#[derive(Debug, clap::Args)]
struct LabelArgs {
    /// CoNLL-U file, or CoreNLP dependency triples (one blank-line separated block per sentence).
    #[arg(long)]
    input: PathBuf,
    /// Input format; by default `.conllu` files are CoNLL-U and anything else is triples.
    #[arg(long, value_enum)]
    format: Option<InputFormat>,
    #[arg(long)]
    lexicon: PathBuf,
    /// Frame annotations: sentence id, token index, frame IRI.
    #[arg(long)]
    frames: Option<PathBuf>,
    /// Ignore the frames column of the annotations (predicates are still marked).
    #[arg(long)]
    no_frames: bool,
    /// CoNLL-U file supplying lemmas and POS tags for triples input.
    #[arg(long)]
    sidecar: Option<PathBuf>,
    #[arg(long)]
    role_table: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "kg")]
    emit: Emit,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value = DEFAULT_BASE)]
    base: String,
    /// SPARQL endpoint whose answers augment the local lexicon.
    #[arg(long)]
    endpoint: Option<String>,
    #[arg(long, env = CACHE_ENV)]
    cache_dir: Option<PathBuf>,
}

#[derive(Debug, clap::Args)]
struct ScoreArgs {
    #[arg(long)]
    gold: PathBuf,
    #[arg(long)]
    pred: PathBuf,
    /// Gold is a six-column gold TSV and pred an assignment TSV; fillers must contain every gold word.
    #[arg(long, conflicts_with = "semlink")]
    strict: bool,
    /// Pred is an assignment TSV whose roles are mapped to PropBank through this map.
    #[arg(long, requires = "lexicon")]
    semlink: Option<PathBuf>,
    /// Lexicon giving the verb class of each predicted sense.
    #[arg(long)]
    lexicon: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Prefer {
    Primary,
    Secondary,
}

#[derive(Debug, clap::Args)]
struct MergeArgs {
    #[arg(long)]
    primary: PathBuf,
    #[arg(long)]
    secondary: PathBuf,
    #[arg(long, value_enum, default_value = "primary")]
    prefer: Prefer,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum LexiconCommand {
    /// Load the file, check its invariants and print statistics.
    Validate { path: PathBuf },
    /// Show the sense chosen for a lemma, with optional frame IRIs.
    Senses {
        path: PathBuf,
        lemma: String,
        #[arg(long = "frame")]
        frames: Vec<String>,
    },
    /// Fetch the lexicon fragment for a lemma from an endpoint and print it.
    Fetch {
        #[arg(long)]
        endpoint: String,
        lemma: String,
        #[arg(long, env = CACHE_ENV)]
        cache_dir: PathBuf,
    },
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Invariant(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Input(_) => 1,
            Failure::Invariant(_) => 2,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Input(m) | Failure::Invariant(m) => m,
        }
    }
}

fn input(context: impl std::fmt::Display) -> impl FnOnce(String) -> Failure {
    move |e| Failure::Input(format!("{context}: {e}"))
}

impl From<(&Path, LexiconError)> for Failure {
    fn from((path, e): (&Path, LexiconError)) -> Self {
        let msg = format!("{}: {e}", path.display());
        if e.is_invariant_violation() {
            Failure::Invariant(msg)
        } else {
            Failure::Input(msg)
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn lexicon(path: &Path) -> Result<LexiconStore, Failure> {
    load_lexicon(&read(path)?).map_err(|e| Failure::from((path, e)))
}

/// Runs the command line and returns the process exit code.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(stderr, "{text}");
                return 1;
            }
            let _ = write!(stdout, "{text}");
            return 0;
        }
    };
    let result = match cli.command {
        Command::Label(args) => label(args, stdout),
        Command::Score(args) => score_cmd(args, stdout),
        Command::Merge(args) => merge_cmd(args, stdout),
        Command::Lexicon(cmd) => lexicon_cmd(cmd, stdout),
    };
    match result {
        Ok(()) => 0,
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message());
            f.code()
        }
    }
}

fn emit(out: Option<&Path>, text: &str, stdout: &mut dyn Write) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display()))),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Input(format!("stdout: {e}"))),
    }
}

fn read_graphs(path: &Path, format: Option<InputFormat>) -> Result<Vec<DepGraph>, Failure> {
    let format = format.unwrap_or(match path.extension().and_then(|e| e.to_str()) {
        Some("conllu") => InputFormat::Conllu,
        _ => InputFormat::Triples,
    });
    let text = read(path)?;
    let parsed = match format {
        InputFormat::Conllu => parse_conllu(&text),
        InputFormat::Triples => parse_corenlp_document(&text),
    };
    parsed.map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn label(args: LabelArgs, stdout: &mut dyn Write) -> Result<(), Failure> {
    let mut store = lexicon(&args.lexicon)?;
    let table = match &args.role_table {
        Some(p) => load_role_table(Some(&read(p)?)).map_err(|e| input(p.display())(e.to_string()))?,
        None => RoleTable::default(),
    };
    let annotations = match &args.frames {
        Some(p) => parse_frame_annotations(&read(p)?).map_err(|e| input(p.display())(e.to_string()))?,
        None => Vec::new(),
    };
    let mut graphs = read_graphs(&args.input, args.format)?;
    if let Some(sidecar_path) = &args.sidecar {
        let sidecar = parse_conllu(&read(sidecar_path)?).map_err(|e| input(sidecar_path.display())(e.to_string()))?;
        if sidecar.len() != graphs.len() {
            return Err(Failure::Input(format!(
                "{}: {} sentences, input has {}",
                sidecar_path.display(),
                sidecar.len(),
                graphs.len()
            )));
        }
        graphs = graphs
            .into_iter()
            .zip(&sidecar)
            .map(|(g, s)| g.with_morphology(s))
            .collect::<Result<_, _>>()
            .map_err(|e| input(sidecar_path.display())(e.to_string()))?;
    }
    if let Some(endpoint) = &args.endpoint {
        let cache = args
            .cache_dir
            .clone()
            .ok_or_else(|| Failure::Input(format!("--endpoint needs --cache-dir or {CACHE_ENV}")))?;
        store = augment(store, endpoint, &cache, &graphs, &annotations)?;
    }

    let options = LabelOptions {
        use_frames: !args.no_frames,
    };
    let per_sentence: Vec<Vec<RoleAssignment>> = graphs
        .par_iter()
        .map(|g| label_sentence_with(g, &annotations, &store, &table, options))
        .collect();

    let text = match args.emit {
        Emit::Tsv => write_assignments(&per_sentence.concat()),
        Emit::Kg => {
            let mut kg = KnowledgeGraph::default();
            for (g, rows) in graphs.iter().zip(&per_sentence) {
                let part = build_graph_with_base(rows, g, &args.base).map_err(|e| Failure::Input(e.to_string()))?;
                kg.extend(part);
            }
            kg.serialize()
        }
    };
    emit(args.out.as_deref(), &text, stdout)
}

/// Fetches, for every candidate predicate lemma, its senses, their roles and
/// preposition selections, and rebuilds the store with the union.
fn augment(
    store: LexiconStore,
    endpoint: &str,
    cache: &Path,
    graphs: &[DepGraph],
    annotations: &[FrameAnnotation],
) -> Result<LexiconStore, Failure> {
    let annotated: BTreeSet<(&str, usize)> = annotations
        .iter()
        .map(|a| (a.sentence_id.as_str(), a.predicate_token))
        .collect();
    let lemmas: BTreeSet<String> = graphs
        .iter()
        .flat_map(|g| {
            g.tokens()
                .iter()
                .filter(|t| t.upos == "VERB" || annotated.contains(&(g.sentence_id(), t.index)))
                .map(|t| t.lemma.to_lowercase())
        })
        .collect();
    let fetch = |q: LexiconQuery| {
        remote_fetch(endpoint, &q, cache)
            .map_err(|e| Failure::Input(format!("{endpoint} ({}): {e}", q.name())))
            .and_then(|text| parse_ntriples(&text).map_err(|e| Failure::Input(e.to_string())))
    };
    let mut triples: Vec<_> = store.triples().cloned().collect();
    for lemma in &lemmas {
        triples.extend(fetch(LexiconQuery::SensesForLemma { lemma: lemma.clone() })?);
        triples.extend(fetch(LexiconQuery::MostFrequentSenses { lemma: lemma.clone() })?);
    }
    let frames: BTreeSet<_> = annotations.iter().flat_map(|a| a.frames.iter().cloned()).collect();
    for lemma in &lemmas {
        for frame in &frames {
            triples.extend(fetch(LexiconQuery::SensesForLemmaAndFrame {
                lemma: lemma.clone(),
                frame: frame.clone(),
            })?);
        }
    }
    let partial = LexiconStore::from_triples(triples.clone()).map_err(|e| Failure::from((Path::new(endpoint), e)))?;
    let senses: BTreeSet<_> = lemmas
        .iter()
        .flat_map(|l| partial.senses_for_lemma(l).into_iter().map(|s| s.id.clone()))
        .collect();
    for sense in senses {
        triples.extend(fetch(LexiconQuery::RolesForSense { sense: sense.clone() })?);
        triples.extend(fetch(LexiconQuery::PrepSelections { sense })?);
    }
    LexiconStore::from_triples(triples).map_err(|e| Failure::from((Path::new(endpoint), e)))
}

fn score_cmd(args: ScoreArgs, stdout: &mut dyn Write) -> Result<(), Failure> {
    let gold_text = read(&args.gold)?;
    let pred_text = read(&args.pred)?;
    let gold_err = input(args.gold.display());
    let pred_err = input(args.pred.display());
    let report: ScoreReport = if args.strict {
        let gold = read_gold_tsv(&gold_text).map_err(|e| gold_err(e.to_string()))?;
        let pred = read_assignments(&pred_text).map_err(|e| pred_err(e.to_string()))?;
        score_strict(&gold, &pred)
    } else if let Some(semlink_path) = &args.semlink {
        let map = read_semlink(&read(semlink_path)?).map_err(|e| input(semlink_path.display())(e.to_string()))?;
        let lexicon_path = args.lexicon.as_deref().expect("clap enforces --lexicon with --semlink");
        let store = lexicon(lexicon_path)?;
        let gold = read_conll2009(&gold_text).map_err(|e| gold_err(e.to_string()))?;
        let pred = read_assignments(&pred_text).map_err(|e| pred_err(e.to_string()))?;
        score(&gold, &assignments_to_arg_sets(&pred, Some((&map, &store))))
    } else {
        let gold = read_conll2009(&gold_text).map_err(|e| gold_err(e.to_string()))?;
        let pred = read_conll2009(&pred_text).map_err(|e| pred_err(e.to_string()))?;
        score(&gold, &pred)
    };
    emit(None, &report.to_report(), stdout)
}

fn merge_cmd(args: MergeArgs, stdout: &mut dyn Write) -> Result<(), Failure> {
    let load = |path: &Path| -> Result<SystemOutput, Failure> {
        let rows = read_assignments(&read(path)?).map_err(|e| input(path.display())(e.to_string()))?;
        let name = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
        Ok(SystemOutput::new(name, rows))
    };
    let primary = load(&args.primary)?;
    let secondary = load(&args.secondary)?;
    let precedence = match args.prefer {
        Prefer::Primary => Precedence::Primary,
        Prefer::Secondary => Precedence::Secondary,
    };
    let merged = merge_with(&primary, &secondary, precedence);
    emit(args.out.as_deref(), &write_assignments(&merged.assignments), stdout)
}

fn lexicon_cmd(cmd: LexiconCommand, stdout: &mut dyn Write) -> Result<(), Failure> {
    match cmd {
        LexiconCommand::Validate { path } => {
            let store = lexicon(&path)?;
            let s = store.stats();
            let text = format!(
                "triples\t{}\nsenses\t{}\nroles\t{}\ninterface_roles\t{}\nframe_edges\t{}\nprep_selections\t{}\n",
                s.triples, s.senses, s.roles, s.interface_roles, s.frame_edges, s.prep_selections
            );
            emit(None, &text, stdout)
        }
        LexiconCommand::Senses { path, lemma, frames } => {
            let store = lexicon(&path)?;
            let frames = frames
                .iter()
                .map(|f| crate::lexicon::Iri::new(f).map_err(|e| Failure::Input(format!("--frame {f}: {e}"))))
                .collect::<Result<BTreeSet<_>, _>>()?;
            let mut text = String::new();
            for s in store.most_frequent_senses(&lemma) {
                text.push_str(&format!("{}\t{}\n", s.id, s.tag_count));
            }
            match select_verb_sense(&lemma, &frames, &store) {
                Some(sel) => text.push_str(&format!("selected\t{}\t{:?}\n", sel.sense, sel.provenance)),
                None => return Err(Failure::Input(format!("no sense for lemma {lemma:?}"))),
            }
            emit(None, &text, stdout)
        }
        LexiconCommand::Fetch {
            endpoint,
            lemma,
            cache_dir,
        } => {
            let q = LexiconQuery::SensesForLemma { lemma };
            let text = remote_fetch(&endpoint, &q, &cache_dir).map_err(|e| Failure::Input(e.to_string()))?;
            emit(None, &text, stdout)
        }
    }
}
