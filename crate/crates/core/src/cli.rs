//! The `stemrank` command-line tool.
//!
//! Every option can also be given in a `--config` file of `key = value`
//! lines, where keys are the long option names (`min-stem-matches = 2`).
//! Flags on the command line win over the file. Relative paths in the file
//! are resolved against the file's directory.
//!
//! Exit codes: 0 success, 1 usage error, 2 data or validation error.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufRead, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use sha2::{Digest, Sha256};

use crate::corpus::{self, load_sentences, TokenizerConfig};
use crate::error::Error;
use crate::eval::{self, CategorySpec};
use crate::lm::{self, Estimator, HistoryDenominator, UnigramDenominator};
use crate::ranker::{self, Ranker, RankerConfig, TiePolicy, RANKING_RULE};
use crate::stemmer::{self, StemRuleSet, Stemmer};
use crate::VERSION;

/// `--rules` value selecting the bundled Hindi rule file.
pub const BUILTIN_RULES: &str = "builtin:hindi";

#[derive(Debug, Parser)]
#[command(
    name = "stemrank",
    version,
    about = "Rank MT outputs with stem-trigram language models"
)]
struct Cli {
    /// `key = value` configuration file; command-line flags take precedence
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a trigram language model from a one-sentence-per-line corpus
    BuildLm(BuildLmArgs),
    /// Stem sentences read from standard input, one per line
    Stem(StemArgs),
    /// Rank the outputs of several MT engines for each source sentence
    Rank(RankArgs),
    /// Compare a ranked TSV with human judgments
    Evaluate(EvaluateArgs),
}

#[derive(Debug, Args)]
struct TokenizerArgs {
    /// Keep terminal punctuation attached to words
    #[arg(long)]
    no_strip_punct: bool,
    /// Characters split off the end of words [default: "।.?!|"]
    #[arg(long, value_name = "CHARS")]
    punct_set: Option<String>,
}

#[derive(Debug, Args)]
struct BuildLmArgs {
    /// Corpus file, one sentence per line
    #[arg(long, value_name = "PATH")]
    corpus: Option<PathBuf>,
    /// Output model file
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Stem every sentence before counting (needs --rules and --lexicon)
    #[arg(long)]
    stem: bool,
    /// Suffix rule file, or `builtin:hindi`
    #[arg(long, value_name = "PATH")]
    rules: Option<String>,
    /// Stemmer lexicon, one word per line
    #[arg(long, value_name = "PATH")]
    lexicon: Option<PathBuf>,
    /// Lowercase tokens before counting; use for the source-language model
    #[arg(long)]
    case_fold: bool,
    /// Worker threads for counting [default: all cores]
    #[arg(long, value_name = "N")]
    threads: Option<usize>,
    #[command(flatten)]
    tokenizer: TokenizerArgs,
}

#[derive(Debug, Args)]
struct StemArgs {
    /// Suffix rule file, or `builtin:hindi`
    #[arg(long, value_name = "PATH")]
    rules: Option<String>,
    /// Stemmer lexicon, one word per line
    #[arg(long, value_name = "PATH")]
    lexicon: Option<PathBuf>,
    #[command(flatten)]
    tokenizer: TokenizerArgs,
}

#[derive(Debug, Args)]
struct RankArgs {
    /// Source sentences, one per line
    #[arg(long, value_name = "PATH")]
    source: Option<PathBuf>,
    /// `engine_id<TAB>path` lines naming each engine's output file
    #[arg(long, value_name = "PATH")]
    manifest: Option<PathBuf>,
    /// Source-language model (built with --case-fold)
    #[arg(long, value_name = "PATH")]
    source_lm: Option<PathBuf>,
    /// Stemmed target-language model
    #[arg(long, value_name = "PATH")]
    stem_lm: Option<PathBuf>,
    /// `source<TAB>stem1,stem2` translation lexicon
    #[arg(long, value_name = "PATH")]
    bilingual_lexicon: Option<PathBuf>,
    /// Suffix rule file, or `builtin:hindi`
    #[arg(long, value_name = "PATH")]
    rules: Option<String>,
    /// Stemmer lexicon, one word per line
    #[arg(long, value_name = "PATH")]
    lexicon: Option<PathBuf>,
    /// Ranked TSV output
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Also write a JSON-lines trace of retained and registered trigrams
    #[arg(long, value_name = "PATH")]
    explain: Option<PathBuf>,
    /// Stems of a candidate trigram that must match source translations (1-3) [default: 1]
    #[arg(long, value_name = "N")]
    min_stem_matches: Option<usize>,
    /// Divide each score by the candidate's trigram count
    #[arg(long)]
    normalize_by_trigram_count: bool,
    /// Unigram denominator: tokens or vocabulary [default: tokens]
    #[arg(long, value_name = "KIND")]
    unigram_denominator: Option<String>,
    /// Bigram/trigram denominator: continuations or occurrences [default: continuations]
    #[arg(long, value_name = "KIND")]
    history_denominator: Option<String>,
    /// Worker threads [default: all cores]
    #[arg(long, value_name = "N")]
    threads: Option<usize>,
    #[command(flatten)]
    tokenizer: TokenizerArgs,
}

#[derive(Debug, Args)]
struct EvaluateArgs {
    /// Ranked TSV written by `rank`
    #[arg(long, value_name = "PATH")]
    ranked: Option<PathBuf>,
    /// Human judgments TSV
    #[arg(long, value_name = "PATH")]
    judgments: Option<PathBuf>,
    /// combined, web, toolkit, or NAME:E1,E2,... [default: combined]
    #[arg(long, value_name = "CATEGORY")]
    category: Option<String>,
    /// How rank-1 ties are counted: shared or first [default: shared]
    #[arg(long, value_name = "POLICY")]
    tie_policy: Option<String>,
    /// Text report output [default: stdout]
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
    /// JSON report output
    #[arg(long, value_name = "PATH")]
    json: Option<PathBuf>,
}

const KNOWN_KEYS: &[&str] = &[
    "corpus",
    "out",
    "stem",
    "rules",
    "lexicon",
    "case-fold",
    "threads",
    "no-strip-punct",
    "punct-set",
    "source",
    "manifest",
    "source-lm",
    "stem-lm",
    "bilingual-lexicon",
    "explain",
    "min-stem-matches",
    "normalize-by-trigram-count",
    "unigram-denominator",
    "history-denominator",
    "ranked",
    "judgments",
    "category",
    "tie-policy",
    "json",
];

#[derive(Debug)]
enum CliError {
    Usage(String),
    Data(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Config(msg) => CliError::Usage(msg),
            other => CliError::Data(other),
        }
    }
}

type CliResult<T> = Result<T, CliError>;

fn io_err(path: &Path) -> impl FnOnce(io::Error) -> CliError + '_ {
    move |e| CliError::Data(Error::io(path, e))
}

/// Values from the config file merged with command-line flags. Every value
/// actually used is recorded so it can be echoed into output headers.
struct Settings {
    file: BTreeMap<String, String>,
    base: PathBuf,
    used: BTreeMap<String, String>,
}

impl Settings {
    fn load(path: Option<&Path>) -> CliResult<Self> {
        let mut file = BTreeMap::new();
        let mut base = PathBuf::new();
        if let Some(path) = path {
            base = path.parent().map(Path::to_path_buf).unwrap_or_default();
            for (i, line) in corpus::read_lines(path)?.iter().enumerate() {
                let line = line.trim();
                if line.is_empty() || line.starts_with('#') {
                    continue;
                }
                let Some((key, value)) = line.split_once('=') else {
                    return Err(CliError::Usage(format!(
                        "{}:{}: expected key = value",
                        path.display(),
                        i + 1
                    )));
                };
                let key = key.trim().replace('_', "-");
                if !KNOWN_KEYS.contains(&key.as_str()) {
                    return Err(CliError::Usage(format!(
                        "{}:{}: unknown key {key:?}",
                        path.display(),
                        i + 1
                    )));
                }
                let value = value.trim();
                let value = value
                    .strip_prefix('"')
                    .and_then(|v| v.strip_suffix('"'))
                    .unwrap_or(value);
                file.insert(key, value.to_owned());
            }
        }
        Ok(Settings {
            file,
            base,
            used: BTreeMap::new(),
        })
    }

    fn record(&mut self, key: &str, value: impl ToString) {
        self.used.insert(key.to_owned(), value.to_string());
    }

    fn string(&mut self, key: &str, cli: Option<String>) -> Option<String> {
        let v = cli.or_else(|| self.file.get(key).cloned());
        if let Some(v) = &v {
            self.record(key, v);
        }
        v
    }

    fn path(&mut self, key: &str, cli: Option<PathBuf>) -> Option<PathBuf> {
        let v = cli.or_else(|| {
            self.file.get(key).map(|v| {
                let p = PathBuf::from(v);
                if p.is_relative() {
                    self.base.join(p)
                } else {
                    p
                }
            })
        });
        if let Some(p) = &v {
            self.record(key, p.display());
        }
        v
    }

    fn require_path(&mut self, key: &str, cli: Option<PathBuf>) -> CliResult<PathBuf> {
        self.path(key, cli)
            .ok_or_else(|| CliError::Usage(format!("--{key} is required")))
    }

    fn parsed<T>(&mut self, key: &str, cli: Option<T>, default: T) -> CliResult<T>
    where
        T: FromStr + ToString,
        T::Err: std::fmt::Display,
    {
        let v = match cli {
            Some(v) => v,
            None => match self.file.get(key) {
                Some(s) => s
                    .parse()
                    .map_err(|e| CliError::Usage(format!("bad value for {key}: {e}")))?,
                None => default,
            },
        };
        self.record(key, v.to_string());
        Ok(v)
    }

    fn flag(&mut self, key: &str, cli: bool) -> CliResult<bool> {
        let v = if cli {
            true
        } else {
            match self.file.get(key).map(String::as_str) {
                None => false,
                Some("true" | "yes" | "1") => true,
                Some("false" | "no" | "0") => false,
                Some(other) => {
                    return Err(CliError::Usage(format!("bad boolean for {key}: {other:?}")))
                }
            }
        };
        self.record(key, v);
        Ok(v)
    }

    fn rules(&mut self, cli: Option<String>) -> Option<String> {
        let v = cli.or_else(|| {
            self.file.get("rules").map(|v| {
                if v == BUILTIN_RULES || Path::new(v).is_absolute() {
                    v.clone()
                } else {
                    self.base.join(v).display().to_string()
                }
            })
        });
        if let Some(v) = &v {
            self.record("rules", v);
        }
        v
    }

    fn tokenizer(&mut self, args: TokenizerArgs) -> CliResult<TokenizerConfig> {
        let mut cfg = TokenizerConfig {
            strip_terminal_punct: !self.flag("no-strip-punct", args.no_strip_punct)?,
            ..TokenizerConfig::default()
        };
        if let Some(set) = self.string("punct-set", args.punct_set) {
            cfg.punct_set = set.chars().collect();
        }
        cfg.validate()?;
        Ok(cfg)
    }

    fn threads(&mut self, cli: Option<usize>) -> CliResult<usize> {
        let n = self.parsed("threads", cli, 0)?;
        Ok(n)
    }

    /// Header lines identifying the tool version and the effective settings.
    fn header(&self, command: &str, tie_policy: &str) -> Vec<String> {
        let echo: String = self
            .used
            .iter()
            .map(|(k, v)| format!("{k}={v}\n"))
            .collect();
        let hash = hex::encode(Sha256::digest(format!("command={command}\n{echo}")));
        let mut lines = vec![
            format!("stemrank {VERSION}"),
            format!("command {command}"),
            format!("config_hash {hash}"),
            format!("tie_policy {tie_policy}"),
        ];
        lines.extend(self.used.iter().map(|(k, v)| format!("config {k}={v}")));
        lines
    }

    fn header_json(&self, command: &str, tie_policy: &str) -> serde_json::Value {
        let header = self.header(command, tie_policy);
        serde_json::json!({
            "tool": format!("stemrank {VERSION}"),
            "command": command,
            "config_hash": header[2].trim_start_matches("config_hash "),
            "tie_policy": tie_policy,
            "config": self.used,
        })
    }
}

fn check_exists(paths: &[&Path]) -> CliResult<()> {
    for p in paths {
        if !p.exists() {
            return Err(CliError::Data(Error::io(
                *p,
                io::Error::new(io::ErrorKind::NotFound, "file not found"),
            )));
        }
    }
    Ok(())
}

fn load_rule_set(spec: &str) -> CliResult<StemRuleSet> {
    if spec == BUILTIN_RULES {
        Ok(StemRuleSet::starter_hindi())
    } else {
        Ok(stemmer::load_rules(Path::new(spec))?)
    }
}

fn rule_path(spec: &str) -> Option<&Path> {
    (spec != BUILTIN_RULES).then(|| Path::new(spec))
}

fn thread_pool(threads: usize) -> CliResult<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| CliError::Usage(format!("cannot start thread pool: {e}")))
}

fn create(path: &Path) -> CliResult<BufWriter<File>> {
    File::create(path).map(BufWriter::new).map_err(io_err(path))
}

fn build_lm(mut s: Settings, args: BuildLmArgs, stdout: &mut dyn Write) -> CliResult<()> {
    let corpus_path = s.require_path("corpus", args.corpus)?;
    let out = s.require_path("out", args.out)?;
    let stem = s.flag("stem", args.stem)?;
    let case_fold = s.flag("case-fold", args.case_fold)?;
    let threads = s.threads(args.threads)?;
    let tokenizer = s.tokenizer(args.tokenizer)?;
    let stemmer = if stem {
        let rules = s
            .rules(args.rules)
            .ok_or_else(|| CliError::Usage("--stem needs --rules".into()))?;
        let lexicon = s
            .path("lexicon", args.lexicon)
            .ok_or_else(|| CliError::Usage("--stem needs --lexicon".into()))?;
        let mut paths = vec![corpus_path.as_path(), lexicon.as_path()];
        paths.extend(rule_path(&rules));
        check_exists(&paths)?;
        Some(Stemmer::new(
            load_rule_set(&rules)?,
            stemmer::load_lexicon(&lexicon)?,
        ))
    } else {
        check_exists(&[&corpus_path])?;
        None
    };

    let mut sentences = load_sentences(&corpus_path, &tokenizer)?;
    if case_fold {
        sentences = sentences.iter().map(|s| s.case_folded()).collect();
    }
    if let Some(stemmer) = &stemmer {
        sentences = sentences.iter().map(|s| stemmer.stem_sentence(s)).collect();
    }
    let model = thread_pool(threads)?.install(|| lm::build_model_parallel(&sentences));
    s.used.remove("threads");
    lm::save_model_with_header(&model, &out, &s.header("build-lm", "n/a"))?;
    writeln!(
        stdout,
        "1-grams: {}, 2-grams: {}, 3-grams: {}",
        model.distinct(1),
        model.distinct(2),
        model.distinct(3)
    )
    .map_err(io_err(Path::new("<stdout>")))?;
    Ok(())
}

fn stem(
    mut s: Settings,
    args: StemArgs,
    stdin: &mut dyn BufRead,
    stdout: &mut dyn Write,
) -> CliResult<()> {
    let rules = s
        .rules(args.rules)
        .ok_or_else(|| CliError::Usage("--rules is required".into()))?;
    let lexicon = s.require_path("lexicon", args.lexicon)?;
    let tokenizer = s.tokenizer(args.tokenizer)?;
    let mut paths = vec![lexicon.as_path()];
    paths.extend(rule_path(&rules));
    check_exists(&paths)?;
    let stemmer = Stemmer::new(load_rule_set(&rules)?, stemmer::load_lexicon(&lexicon)?);

    let stdin_path = Path::new("<stdin>");
    let mut buf = Vec::new();
    stdin.read_to_end(&mut buf).map_err(io_err(stdin_path))?;
    for line in corpus::split_lines(&buf, stdin_path)? {
        let sentence = corpus::tokenize(&corpus::normalize(&line), &tokenizer);
        writeln!(stdout, "{}", stemmer.stem_sentence(&sentence))
            .map_err(io_err(Path::new("<stdout>")))?;
    }
    stdout.flush().map_err(io_err(Path::new("<stdout>")))?;
    Ok(())
}

/// Reads `engine_id<TAB>path` lines; relative paths are resolved against the
/// manifest's directory.
fn read_manifest(path: &Path) -> CliResult<Vec<(String, PathBuf)>> {
    let base = path.parent().unwrap_or(Path::new(""));
    let mut engines: Vec<(String, PathBuf)> = Vec::new();
    for (i, line) in corpus::read_lines(path)?.iter().enumerate() {
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = |msg: &str| CliError::Data(Error::parse(path, i + 1, msg));
        let (id, file) = line
            .split_once('\t')
            .ok_or_else(|| bad("missing TAB separator"))?;
        let (id, file) = (id.trim(), file.trim());
        if id.is_empty() || file.is_empty() {
            return Err(bad("empty engine id or path"));
        }
        if engines.iter().any(|(e, _)| e == id) {
            return Err(bad("duplicate engine id"));
        }
        engines.push((id.to_owned(), base.join(file)));
    }
    if engines.is_empty() {
        return Err(CliError::Data(Error::EmptyCandidates));
    }
    Ok(engines)
}

fn rank(mut s: Settings, args: RankArgs) -> CliResult<()> {
    let source = s.require_path("source", args.source)?;
    let manifest = s.require_path("manifest", args.manifest)?;
    let source_lm = s.require_path("source-lm", args.source_lm)?;
    let stem_lm = s.require_path("stem-lm", args.stem_lm)?;
    let bilingual = s.require_path("bilingual-lexicon", args.bilingual_lexicon)?;
    let rules = s
        .rules(args.rules)
        .ok_or_else(|| CliError::Usage("--rules is required".into()))?;
    let lexicon = s.require_path("lexicon", args.lexicon)?;
    let out = s.require_path("out", args.out)?;
    let explain = s.path("explain", args.explain);
    let config = RankerConfig {
        min_stem_matches: s.parsed("min-stem-matches", args.min_stem_matches, 1)?,
        normalize_by_trigram_count: s.flag(
            "normalize-by-trigram-count",
            args.normalize_by_trigram_count,
        )?,
    };
    config.validate()?;
    let estimator = Estimator {
        unigram: s.parsed(
            "unigram-denominator",
            args.unigram_denominator
                .map(|v| v.parse::<UnigramDenominator>())
                .transpose()?,
            UnigramDenominator::default(),
        )?,
        history: s.parsed(
            "history-denominator",
            args.history_denominator
                .map(|v| v.parse::<HistoryDenominator>())
                .transpose()?,
            HistoryDenominator::default(),
        )?,
    };
    let threads = s.threads(args.threads)?;
    let tokenizer = s.tokenizer(args.tokenizer)?;

    let mut paths = vec![
        source.as_path(),
        manifest.as_path(),
        source_lm.as_path(),
        stem_lm.as_path(),
        bilingual.as_path(),
        lexicon.as_path(),
    ];
    paths.extend(rule_path(&rules));
    check_exists(&paths)?;

    let engines_files = read_manifest(&manifest)?;
    let sources = load_sentences(&source, &tokenizer)?;
    let mut engines = Vec::with_capacity(engines_files.len());
    for (id, path) in &engines_files {
        let outputs = load_sentences(path, &tokenizer)?;
        if outputs.len() != sources.len() {
            return Err(CliError::Data(Error::Alignment {
                left_path: source.clone(),
                left: sources.len(),
                right_path: path.clone(),
                right: outputs.len(),
            }));
        }
        engines.push((id.clone(), outputs));
    }

    let ranker = Ranker::new(
        lm::load_model(&source_lm)?.with_estimator(estimator),
        lm::load_model(&stem_lm)?.with_estimator(estimator),
        corpus::load_bilingual_lexicon(&bilingual)?,
        Stemmer::new(load_rule_set(&rules)?, stemmer::load_lexicon(&lexicon)?),
        config,
    )?;
    let outcomes = thread_pool(threads)?.install(|| ranker.rank_test_set(&sources, &engines))?;

    // thread count never changes output bytes, so keep it out of the header
    s.used.remove("threads");
    ranker::write_ranked_tsv(create(&out)?, &outcomes, &s.header("rank", RANKING_RULE))
        .map_err(io_err(&out))?;
    if let Some(path) = explain {
        ranker::write_explain_jsonl(
            create(&path)?,
            &outcomes,
            &s.header_json("rank", RANKING_RULE),
        )
        .map_err(io_err(&path))?;
    }
    Ok(())
}

fn evaluate(mut s: Settings, args: EvaluateArgs, stdout: &mut dyn Write) -> CliResult<()> {
    let ranked = s.require_path("ranked", args.ranked)?;
    let judgments = s.require_path("judgments", args.judgments)?;
    let category = s.string("category", args.category).unwrap_or_else(|| {
        s.record("category", "combined");
        "combined".into()
    });
    let policy: TiePolicy = s.parsed(
        "tie-policy",
        args.tie_policy.map(|v| v.parse()).transpose()?,
        TiePolicy::default(),
    )?;
    let out = s.path("out", args.out);
    let json = s.path("json", args.json);
    check_exists(&[&ranked, &judgments])?;

    let system = eval::load_ranked_tsv(&ranked)?;
    let human = eval::load_judgments(&judgments)?;
    let present: std::collections::BTreeSet<&str> = system
        .values()
        .flat_map(|l| l.entries().iter().map(|e| e.engine_id.as_str()))
        .collect();
    let category = CategorySpec::resolve(&category, present)?;
    let report = eval::evaluate(&system, &human, &category, policy)?;

    let policy_text = policy.to_string();
    let mut text = String::new();
    for line in s.header("evaluate", &policy_text) {
        text.push_str(&format!("# {line}\n"));
    }
    text.push_str(&format!("# aggregation {}\n", eval::AGGREGATION));
    text.push_str(&report.render_table());
    match &out {
        Some(path) => std::fs::write(path, &text).map_err(io_err(path))?,
        None => stdout
            .write_all(text.as_bytes())
            .map_err(io_err(Path::new("<stdout>")))?,
    }
    if let Some(path) = json {
        let mut value = serde_json::to_value(&report).expect("report serializes");
        value["meta"] = s.header_json("evaluate", &policy_text);
        let mut body = serde_json::to_string_pretty(&value).expect("report serializes");
        body.push('\n');
        std::fs::write(&path, body).map_err(io_err(&path))?;
    }
    Ok(())
}

/// Runs the tool with explicit arguments and streams; returns the exit code.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn BufRead,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                stdout.write_all(rendered.as_bytes())
            } else {
                stderr.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    let result = Settings::load(cli.config.as_deref()).and_then(|settings| match cli.command {
        Command::BuildLm(a) => build_lm(settings, a, stdout),
        Command::Stem(a) => stem(settings, a, stdin, stdout),
        Command::Rank(a) => rank(settings, a),
        Command::Evaluate(a) => evaluate(settings, a, stdout),
    });
    match result {
        Ok(()) => 0,
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            1
        }
        Err(CliError::Data(err)) => {
            let _ = writeln!(stderr, "error: {err}");
            2
        }
    }
}

pub fn main() -> i32 {
    let stdin = io::stdin();
    let stdout = io::stdout();
    run(
        std::env::args_os(),
        &mut stdin.lock(),
        &mut stdout.lock(),
        &mut io::stderr(),
    )
}
