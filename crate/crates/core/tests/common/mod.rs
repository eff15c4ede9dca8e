//! Brute-force reference implementations used as test oracles. None of
//! these call into the library's counting, stemming or ranking code.
#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap, HashSet};

use rand::seq::SliceRandom;
use rand::Rng;
use stemrank::Sentence;

pub type Counts = HashMap<Vec<String>, u64>;

/// Slides a window of every width 1..=3 over every sentence.
pub fn brute_counts(corpus: &[Vec<String>]) -> Counts {
    let mut counts = Counts::new();
    for sent in corpus {
        for n in 1..=3 {
            if sent.len() < n {
                continue;
            }
            for start in 0..=sent.len() - n {
                *counts.entry(sent[start..start + n].to_vec()).or_insert(0) += 1;
            }
        }
    }
    counts
}

pub fn total_tokens(corpus: &[Vec<String>]) -> u64 {
    corpus.iter().map(|s| s.len() as u64).sum()
}

/// Number of times `history` is immediately followed by another token.
pub fn brute_continuations(corpus: &[Vec<String>], history: &[String]) -> u64 {
    let h = history.len();
    let mut n = 0;
    for sent in corpus {
        for start in 0..sent.len() {
            if start + h < sent.len() && sent[start..start + h] == *history {
                n += 1;
            }
        }
    }
    n
}

pub fn brute_unigram_prob(corpus: &[Vec<String>], w: &str) -> f64 {
    let total = total_tokens(corpus);
    if total == 0 {
        return 0.0;
    }
    let c = corpus.iter().flatten().filter(|t| *t == w).count();
    c as f64 / total as f64
}

/// MLE conditional probability of the last word of `ngram` given the rest,
/// dividing by how often the history is continued.
pub fn brute_cond_prob(corpus: &[Vec<String>], ngram: &[String]) -> f64 {
    brute_cond_prob_in(&brute_counts(corpus), corpus, ngram)
}

pub fn brute_cond_prob_in(counts: &Counts, corpus: &[Vec<String>], ngram: &[String]) -> f64 {
    let num = counts.get(ngram).copied().unwrap_or(0);
    if num == 0 {
        return 0.0;
    }
    num as f64 / brute_continuations(corpus, &ngram[..ngram.len() - 1]) as f64
}

/// Same as [`brute_cond_prob`] but dividing by the raw history count.
pub fn brute_cond_prob_occurrences(counts: &Counts, ngram: &[String]) -> f64 {
    let num = counts.get(ngram).copied().unwrap_or(0);
    let den = counts
        .get(&ngram[..ngram.len() - 1].to_vec())
        .copied()
        .unwrap_or(0);
    if den == 0 {
        0.0
    } else {
        num as f64 / den as f64
    }
}

pub fn random_corpus<R: Rng>(
    rng: &mut R,
    max_sentences: usize,
    max_len: usize,
    vocab: usize,
) -> Vec<Vec<String>> {
    let n = rng.gen_range(1..=max_sentences);
    (0..n)
        .map(|_| {
            let len = rng.gen_range(0..=max_len);
            (0..len)
                .map(|_| format!("w{}", rng.gen_range(0..vocab)))
                .collect()
        })
        .collect()
}

pub fn to_sentences(corpus: &[Vec<String>]) -> Vec<Sentence> {
    corpus
        .iter()
        .map(|s| Sentence::from_tokens(s).unwrap())
        .collect()
}

/// `(suffix, replacement, min_len)` rules in file order.
pub type RawRule = (String, String, usize);

/// Tries every rule and keeps the applicable one with the longest suffix;
/// among equally long suffixes the earliest in file order wins.
pub fn oracle_stem(word: &str, rules: &[RawRule], lexicon: &HashSet<String>) -> String {
    if lexicon.contains(word) {
        return word.to_owned();
    }
    let chars: Vec<char> = word.chars().collect();
    let mut best: Option<(usize, String)> = None;
    for (suffix, replacement, min_len) in rules {
        let sfx: Vec<char> = suffix.chars().collect();
        if sfx.len() > chars.len() || chars[chars.len() - sfx.len()..] != sfx[..] {
            continue;
        }
        let kept = chars.len() - sfx.len();
        if kept + replacement.chars().count() < *min_len {
            continue;
        }
        if best.as_ref().is_none_or(|(l, _)| sfx.len() > *l) {
            let stem: String = chars[..kept].iter().collect::<String>() + replacement;
            best = Some((sfx.len(), stem));
        }
    }
    best.map(|(_, s)| s).unwrap_or_else(|| word.to_owned())
}

pub fn rules_text(rules: &[RawRule]) -> String {
    rules
        .iter()
        .map(|(s, r, m)| {
            let r = if r.is_empty() { "-" } else { r.as_str() };
            format!("{s}\t{r}\t{m}\n")
        })
        .collect()
}

/// Random rules over a small alphabet with distinct suffixes.
pub fn random_rules<R: Rng>(rng: &mut R, n: usize, alphabet: &[char]) -> Vec<RawRule> {
    let mut seen = HashSet::new();
    let mut rules = Vec::new();
    while rules.len() < n {
        let len = rng.gen_range(1..=4);
        let suffix: String = (0..len).map(|_| *alphabet.choose(rng).unwrap()).collect();
        if !seen.insert(suffix.clone()) {
            continue;
        }
        let rlen = rng.gen_range(0..=2);
        let replacement: String = (0..rlen).map(|_| *alphabet.choose(rng).unwrap()).collect();
        if replacement == suffix {
            seen.remove(&suffix);
            continue;
        }
        rules.push((suffix, replacement, rng.gen_range(1..=3)));
    }
    rules
}

pub fn random_word<R: Rng>(rng: &mut R, alphabet: &[char]) -> String {
    let len = rng.gen_range(1..=8);
    (0..len).map(|_| *alphabet.choose(rng).unwrap()).collect()
}

/// Straight-line reimplementation of the ranking procedure for one source
/// sentence. Returns `(engine_id, score, rank)` best first.
pub struct BruteRankInput<'a> {
    pub source_corpus: &'a [Vec<String>],
    pub stem_corpus: &'a [Vec<String>],
    pub lexicon: &'a BTreeMap<String, Vec<String>>,
    pub rules: &'a [RawRule],
    pub stem_lexicon: &'a HashSet<String>,
    pub min_matches: usize,
}

pub fn brute_rank(
    input: &BruteRankInput,
    source: &[String],
    candidates: &[(String, Vec<String>)],
) -> Vec<(String, f64, usize)> {
    // Steps 1-2: source trigrams seen in the source corpus.
    let source_counts = brute_counts(input.source_corpus);
    let mut retained: Vec<Vec<String>> = Vec::new();
    for i in 0..source.len().saturating_sub(2) {
        let t = source[i..i + 3].to_vec();
        if source_counts.get(&t).copied().unwrap_or(0) > 0 && !retained.contains(&t) {
            retained.push(t);
        }
    }
    // Step 3: bag of translations.
    let mut bag: Vec<String> = Vec::new();
    for t in &retained {
        for w in t {
            if let Some(ts) = input.lexicon.get(&w.to_lowercase()) {
                bag.extend(ts.iter().cloned());
            }
        }
    }
    // Steps 4-6.
    let stem_counts = brute_counts(input.stem_corpus);
    let mut scored = Vec::new();
    for (id, cand) in candidates {
        let stems: Vec<String> = cand
            .iter()
            .map(|w| oracle_stem(w, input.rules, input.stem_lexicon))
            .collect();
        let mut score = 0.0;
        for i in 0..stems.len().saturating_sub(2) {
            let t = &stems[i..i + 3];
            let hits = t.iter().filter(|s| bag.contains(s)).count();
            if hits >= input.min_matches && !bag.is_empty() {
                score += brute_cond_prob_in(&stem_counts, input.stem_corpus, t);
            }
        }
        scored.push((id.clone(), score));
    }
    // Step 7: sort by score, competition ranks, input order within ties.
    let mut order: Vec<usize> = (0..scored.len()).collect();
    order.sort_by(|&a, &b| {
        scored[b]
            .1
            .partial_cmp(&scored[a].1)
            .unwrap()
            .then(a.cmp(&b))
    });
    order
        .into_iter()
        .map(|i| {
            let better = scored.iter().filter(|s| s.1 > scored[i].1).count();
            (scored[i].0.clone(), scored[i].1, better + 1)
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Fixtures

use stemrank::lm::NGramModel;
use stemrank::{
    BilingualLexicon, CandidateInput, Lexicon, Ranker, RankerConfig, StemRuleSet, Stemmer,
};

pub const HIMALAYA_SOURCE: &str = "The Indian Himalayan range is undoubtedly one of the most \
spectacular and impressive mountain ranges in the world .";

/// `(engine, candidate text)`. Every score comes out of the pipeline: each
/// candidate registers one stem trigram whose model probability is the
/// target value, plus trigrams that are absent from the stem model.
pub const HIMALAYA_CANDIDATES: [(&str, &str); 6] = [
    ("E1", "भारतीय हिमालय शृंखला दुनिया"),
    ("E2", "यह भारतीय हिमालयों शृंखला है"),
    ("E3", "सबसे भव्य पर्वत"),
    ("E4", "undoubtedly impressive world."),
    ("E5", "विश्व के में"),
    ("E6", "देखते ही बनती"),
];

pub const HIMALAYA_SCORES: [(&str, f64); 6] = [
    ("E1", 0.843723),
    ("E2", 0.843723),
    ("E3", 0.574318),
    ("E4", 0.0),
    ("E5", 0.293709),
    ("E6", 0.463309),
];

/// Stem-corpus sentences with repeat counts. For each history the two
/// continuations split 1,000,000 occurrences so the trigram probability
/// of the first is exactly `count / 1e6`.
pub fn himalaya_stem_corpus() -> Vec<(Vec<String>, u64)> {
    let groups = [
        (["भारतीय", "हिमालय"], "शृंखला", "क्षेत्र", 843_723u64),
        (["सबसे", "भव्य"], "पर्वत", "स्थान", 574_318),
        (["विश्व", "के"], "में", "से", 293_709),
        (["देखते", "ही"], "बनती", "थी", 463_309),
    ];
    let mut out = Vec::new();
    for ([h1, h2], hit, other, n) in groups {
        let s = |w: &str| vec![h1.to_string(), h2.to_string(), w.to_string()];
        out.push((s(hit), n));
        out.push((s(other), 1_000_000 - n));
    }
    out
}

pub fn himalaya_stem_model() -> NGramModel {
    let mut m = NGramModel::new();
    for (tokens, n) in himalaya_stem_corpus() {
        m.add_tokens(&tokens, n);
    }
    m
}

pub const HIMALAYA_LEXICON: &str =
    "indian\tभारतीय\nspectacular\tभव्य\nworld\tविश्व\nimpressive\tदेखते\n";
pub const HIMALAYA_RULES: &str = "ों\t-\n";

pub fn himalaya_ranker() -> Ranker {
    let source = stemrank::corpus::tokenize(HIMALAYA_SOURCE, &Default::default()).case_folded();
    let source_model = stemrank::lm::build_model([&source]);
    Ranker::new(
        source_model,
        himalaya_stem_model(),
        stemrank::corpus::parse_bilingual_lexicon(HIMALAYA_LEXICON, std::path::Path::new("lex"))
            .unwrap(),
        Stemmer::new(
            stemrank::stemmer::parse_rules(HIMALAYA_RULES, std::path::Path::new("rules")).unwrap(),
            Lexicon::new(),
        ),
        RankerConfig::default(),
    )
    .unwrap()
}

pub fn himalaya_candidates() -> Vec<CandidateInput> {
    HIMALAYA_CANDIDATES
        .iter()
        .map(|(id, text)| {
            CandidateInput::new(*id, stemrank::corpus::tokenize(text, &Default::default()))
        })
        .collect()
}

/// A source sentence and each engine's candidate tokens.
pub type TestSentence = (Vec<String>, Vec<(String, Vec<String>)>);

/// Synthetic data for comparing the ranker with [`brute_rank`].
pub struct Synthetic {
    pub source_corpus: Vec<Vec<String>>,
    pub stem_corpus: Vec<Vec<String>>,
    pub lexicon: BTreeMap<String, Vec<String>>,
    pub rules: Vec<RawRule>,
    pub stem_lexicon: HashSet<String>,
    pub tests: Vec<TestSentence>,
}

pub fn synthetic<R: Rng>(rng: &mut R, sentences: usize, engines: usize) -> Synthetic {
    let src_vocab: Vec<String> = (0..30).map(|i| format!("src{i}")).collect();
    let stems: Vec<String> = (0..10).map(|i| format!("स{i}")).collect();
    let suffixes = ["ों", "ता", "ने"];
    let rules: Vec<RawRule> = vec![
        ("ों".into(), String::new(), 1),
        ("ता".into(), String::new(), 2),
        ("ने".into(), "ना".into(), 1),
    ];
    let mut lexicon = BTreeMap::new();
    for w in &src_vocab {
        let k = rng.gen_range(1..=2);
        let ts: Vec<String> = (0..k).map(|_| stems.choose(rng).unwrap().clone()).collect();
        lexicon.insert(w.clone(), ts);
    }
    let stem_lexicon: HashSet<String> = [format!("{}ता", stems[0])].into();
    let src_sentence = |rng: &mut R| -> Vec<String> {
        let len = rng.gen_range(2..=8);
        (0..len)
            .map(|_| src_vocab[rng.gen_range(0..12)].clone())
            .collect()
    };
    let tgt_stems = |rng: &mut R| -> Vec<String> {
        let len = rng.gen_range(0..=7);
        (0..len)
            .map(|_| stems.choose(rng).unwrap().clone())
            .collect()
    };
    let source_corpus: Vec<Vec<String>> = (0..60).map(|_| src_sentence(rng)).collect();
    let stem_corpus: Vec<Vec<String>> = (0..80).map(|_| tgt_stems(rng)).collect();
    let mut tests = Vec::new();
    for _ in 0..sentences {
        let source = if rng.gen_bool(0.5) {
            source_corpus.choose(rng).unwrap().clone()
        } else {
            src_sentence(rng)
        };
        let cands = (0..engines)
            .map(|e| {
                let base = if rng.gen_bool(0.5) {
                    stem_corpus.choose(rng).unwrap().clone()
                } else {
                    tgt_stems(rng)
                };
                let words: Vec<String> = base
                    .into_iter()
                    .map(|s| {
                        if rng.gen_bool(0.4) {
                            format!("{s}{}", suffixes.choose(rng).unwrap())
                        } else {
                            s
                        }
                    })
                    .collect();
                (format!("E{}", e + 1), words)
            })
            .collect();
        tests.push((source, cands));
    }
    Synthetic {
        source_corpus,
        stem_corpus,
        lexicon,
        rules,
        stem_lexicon,
        tests,
    }
}

impl Synthetic {
    pub fn ranker(&self, min_stem_matches: usize) -> Ranker {
        let mut lex = BilingualLexicon::new();
        for (k, v) in &self.lexicon {
            lex.insert(k, v).unwrap();
        }
        Ranker::new(
            stemrank::lm::build_model(&to_sentences(&self.source_corpus)),
            stemrank::lm::build_model(&to_sentences(&self.stem_corpus)),
            lex,
            Stemmer::new(
                StemRuleSet::new(
                    self.rules
                        .iter()
                        .map(|(s, r, m)| stemrank::StemRule::new(s, r, *m).unwrap())
                        .collect(),
                )
                .unwrap(),
                self.stem_lexicon.iter().collect(),
            ),
            RankerConfig {
                min_stem_matches,
                ..Default::default()
            },
        )
        .unwrap()
    }

    pub fn brute_input(&self, min_matches: usize) -> BruteRankInput<'_> {
        BruteRankInput {
            source_corpus: &self.source_corpus,
            stem_corpus: &self.stem_corpus,
            lexicon: &self.lexicon,
            rules: &self.rules,
            stem_lexicon: &self.stem_lexicon,
            min_matches,
        }
    }
}

pub const ENGINES: [&str; 6] = ["E1", "E2", "E3", "E4", "E5", "E6"];
pub const WINS_SYSTEM: [u64; 6] = [407, 285, 145, 8, 256, 236];
pub const WINS_HUMAN: [u64; 6] = [376, 279, 140, 7, 205, 240];
pub const WINS_RHO: f64 = 0.942857142857143;

/// Ranked lists and judgments whose combined win counts are the two
/// columns above. Human wins are unique per sentence, so the sentence count
/// is the human total; the surplus system wins become shared first places.
pub fn win_count_fixture() -> (
    BTreeMap<usize, stemrank::RankedList>,
    Vec<stemrank::HumanJudgment>,
) {
    let flatten = |col: &[u64; 6]| -> Vec<usize> {
        col.iter()
            .enumerate()
            .flat_map(|(e, &n)| std::iter::repeat_n(e, n as usize))
            .collect()
    };
    let sys_wins = flatten(&WINS_SYSTEM);
    let hum_wins = flatten(&WINS_HUMAN);
    let n = hum_wins.len();
    let mut system_winners: Vec<Vec<usize>> = sys_wins[..n].iter().map(|&e| vec![e]).collect();
    for (i, &e) in sys_wins[n..].iter().enumerate() {
        assert_ne!(system_winners[i][0], e);
        system_winners[i].push(e);
    }
    let system = system_winners
        .iter()
        .enumerate()
        .map(|(i, winners)| {
            let list = stemrank::RankedList::from_scores(
                ENGINES.iter().enumerate().map(|(e, id)| {
                    let score = if winners.contains(&e) {
                        1.0
                    } else {
                        0.1 * e as f64
                    };
                    (*id, score)
                }),
                stemrank::ScoreOrder::HigherIsBetter,
            );
            (i, list)
        })
        .collect();
    let judgments = hum_wins
        .iter()
        .enumerate()
        .flat_map(|(i, &w)| {
            ENGINES.iter().enumerate().map(move |(e, id)| {
                let s = if e == w { 1 } else { 2 + (e % 3) as u8 };
                stemrank::HumanJudgment::new(i, id, [s; stemrank::eval::PARAMETER_COUNT]).unwrap()
            })
        })
        .collect();
    (system, judgments)
}

/// Independent win count: engines tied at the best category score.
pub fn brute_win_counts(lists: &[Vec<(String, f64)>], engines: &[&str]) -> BTreeMap<String, u64> {
    let mut out: BTreeMap<String, u64> = engines.iter().map(|e| (e.to_string(), 0)).collect();
    for list in lists {
        let kept: Vec<&(String, f64)> = list
            .iter()
            .filter(|(e, _)| engines.contains(&e.as_str()))
            .collect();
        let best = kept
            .iter()
            .map(|(_, s)| *s)
            .fold(f64::NEG_INFINITY, f64::max);
        for (e, s) in kept {
            if *s == best {
                *out.get_mut(e).unwrap() += 1;
            }
        }
    }
    out
}

/// Paths of the ranking fixture written to disk for the command-line tool.
pub struct HimalayaFiles {
    pub dir: std::path::PathBuf,
}

impl HimalayaFiles {
    /// Writes every input file; the source sentence and the candidates are
    /// repeated `repeat` times.
    pub fn write(dir: &std::path::Path, repeat: usize) -> Self {
        use std::fs;
        let source = stemrank::corpus::tokenize(HIMALAYA_SOURCE, &Default::default()).case_folded();
        stemrank::lm::save_model(
            &stemrank::lm::build_model([&source]),
            &dir.join("source.lm"),
        )
        .unwrap();
        stemrank::lm::save_model(&himalaya_stem_model(), &dir.join("stem.lm")).unwrap();
        fs::write(
            dir.join("source.txt"),
            format!("{HIMALAYA_SOURCE}\n").repeat(repeat),
        )
        .unwrap();
        let mut manifest = String::new();
        for (id, text) in HIMALAYA_CANDIDATES {
            fs::write(
                dir.join(format!("{id}.txt")),
                format!("{text}\n").repeat(repeat),
            )
            .unwrap();
            manifest.push_str(&format!("{id}\t{id}.txt\n"));
        }
        fs::write(dir.join("manifest.tsv"), manifest).unwrap();
        fs::write(dir.join("bilingual.tsv"), HIMALAYA_LEXICON).unwrap();
        fs::write(dir.join("rules.tsv"), HIMALAYA_RULES).unwrap();
        fs::write(dir.join("lexicon.txt"), "").unwrap();
        HimalayaFiles {
            dir: dir.to_path_buf(),
        }
    }

    pub fn path(&self, name: &str) -> String {
        self.dir.join(name).display().to_string()
    }

    /// `rank` arguments writing to `out`.
    pub fn rank_args(&self, out: &str) -> Vec<String> {
        let mut args: Vec<String> = vec!["stemrank".into(), "rank".into()];
        for (flag, file) in [
            ("--source", "source.txt"),
            ("--manifest", "manifest.tsv"),
            ("--source-lm", "source.lm"),
            ("--stem-lm", "stem.lm"),
            ("--bilingual-lexicon", "bilingual.tsv"),
            ("--rules", "rules.tsv"),
            ("--lexicon", "lexicon.txt"),
        ] {
            args.push(flag.into());
            args.push(self.path(file));
        }
        args.push("--out".into());
        args.push(self.path(out));
        args
    }
}

pub const HIMALAYA_ROWS: &str = "0\tE1\t0.843723000\t1
0\tE2\t0.843723000\t1
0\tE3\t0.574318000\t3
0\tE6\t0.463309000\t4
0\tE5\t0.293709000\t5
0\tE4\t0.000000000\t6
";

/// Runs the tool in-process: `(exit code, stdout, stderr)`.
pub fn run_cli<S: AsRef<str>>(args: &[S], stdin: &str) -> (i32, String, String) {
    let mut input = std::io::Cursor::new(stdin.as_bytes().to_vec());
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = stemrank::cli::run(
        args.iter().map(|a| a.as_ref().to_string()),
        &mut input,
        &mut out,
        &mut err,
    );
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

/// Data rows of a ranked TSV, without `#` header lines.
pub fn body(text: &str) -> String {
    text.lines()
        .filter(|l| !l.starts_with('#'))
        .map(|l| format!("{l}\n"))
        .collect()
}

/// Ranked TSV text for a map of lists.
pub fn ranked_tsv(lists: &BTreeMap<usize, stemrank::RankedList>) -> String {
    let mut out = String::new();
    for (i, list) in lists {
        for e in list.entries() {
            out.push_str(&format!(
                "{i}\t{}\t{:.9}\t{}\n",
                e.engine_id, e.score, e.rank
            ));
        }
    }
    out
}

/// Judgments TSV text.
pub fn judgments_tsv(judgments: &[stemrank::HumanJudgment]) -> String {
    judgments
        .iter()
        .map(|j| {
            let scores: Vec<String> = j.scores.iter().map(u8::to_string).collect();
            format!(
                "{}\t{}\t{}\n",
                j.sentence_index,
                j.engine_id,
                scores.join("\t")
            )
        })
        .collect()
}
