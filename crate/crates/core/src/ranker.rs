//! Ranking of candidate translations by cumulative stem-trigram probability.
//!
//! For one source sentence:
//!
//! 1. source trigrams are kept if the source-language model has seen them;
//! 2. the words of the kept trigrams are translated through the bilingual
//!    lexicon into a bag of target stems;
//! 3. each candidate's stem trigrams are registered when enough of their
//!    stems fall in that bag;
//! 4. a candidate's score is the sum of the stem model's trigram
//!    probabilities over its registered trigrams;
//! 5. candidates are sorted by descending score.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::io::{self, Write};
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::corpus::{BilingualLexicon, Sentence};
use crate::error::{Error, Result};
use crate::lm::{extract_ngrams, NGram, NGramModel};
use crate::stemmer::Stemmer;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RankerConfig {
    /// How many of a stem trigram's three stems must be lexicon translations
    /// of kept source words for the trigram to register (1 to 3).
    pub min_stem_matches: usize,
    /// Divide each score by the candidate's stem-trigram count.
    pub normalize_by_trigram_count: bool,
}

impl Default for RankerConfig {
    fn default() -> Self {
        RankerConfig {
            min_stem_matches: 1,
            normalize_by_trigram_count: false,
        }
    }
}

impl RankerConfig {
    pub fn validate(&self) -> Result<()> {
        if !(1..=3).contains(&self.min_stem_matches) {
            return Err(Error::Config(format!(
                "min_stem_matches must be 1, 2 or 3, got {}",
                self.min_stem_matches
            )));
        }
        Ok(())
    }
}

/// Which direction of a score is better.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScoreOrder {
    HigherIsBetter,
    LowerIsBetter,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RankedEntry {
    pub engine_id: String,
    pub score: f64,
    pub rank: usize,
}

/// Entries sorted best first. Equal scores share the best rank available
/// (1, 1, 3, ...) and keep their input order.
#[derive(Debug, Clone, PartialEq)]
pub struct RankedList {
    entries: Vec<RankedEntry>,
}

impl RankedList {
    pub fn from_scores<I, S>(scores: I, order: ScoreOrder) -> Self
    where
        I: IntoIterator<Item = (S, f64)>,
        S: Into<String>,
    {
        let mut entries: Vec<RankedEntry> = scores
            .into_iter()
            .map(|(id, score)| RankedEntry {
                engine_id: id.into(),
                // folds -0.0 into 0.0 so total_cmp agrees with ==
                score: score + 0.0,
                rank: 0,
            })
            .collect();
        // stable: ties keep input order
        entries.sort_by(|a, b| match order {
            ScoreOrder::HigherIsBetter => b.score.total_cmp(&a.score),
            ScoreOrder::LowerIsBetter => a.score.total_cmp(&b.score),
        });
        assign_competition_ranks(&mut entries, |a, b| a.score == b.score);
        RankedList { entries }
    }

    /// Wraps entries that are already sorted and ranked, e.g. read back from
    /// a ranked TSV file.
    pub fn from_ranked_entries(entries: Vec<RankedEntry>) -> Result<Self> {
        for (i, pair) in entries.windows(2).enumerate() {
            if pair[1].rank < pair[0].rank {
                return Err(Error::Validation(format!(
                    "ranked entries out of order at position {}",
                    i + 1
                )));
            }
        }
        if entries.first().is_some_and(|e| e.rank != 1) {
            return Err(Error::Validation(
                "ranked list does not start at rank 1".into(),
            ));
        }
        Ok(RankedList { entries })
    }

    pub fn entries(&self) -> &[RankedEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn rank_of(&self, engine_id: &str) -> Option<usize> {
        self.entries
            .iter()
            .find(|e| e.engine_id == engine_id)
            .map(|e| e.rank)
    }

    /// Keeps only the engines accepted by `keep` and re-ranks them. Entries
    /// that tied before still tie; relative order is unchanged.
    pub fn restrict<F: Fn(&str) -> bool>(&self, keep: F) -> RankedList {
        let mut entries: Vec<RankedEntry> = self
            .entries
            .iter()
            .filter(|e| keep(&e.engine_id))
            .cloned()
            .collect();
        assign_competition_ranks(&mut entries, |a, b| a.rank == b.rank);
        RankedList { entries }
    }

    /// Engines holding rank 1.
    pub fn winners(&self) -> impl Iterator<Item = &RankedEntry> {
        self.entries.iter().take_while(|e| e.rank == 1)
    }
}

fn assign_competition_ranks<F>(entries: &mut [RankedEntry], tied: F)
where
    F: Fn(&RankedEntry, &RankedEntry) -> bool,
{
    let mut ranks = Vec::with_capacity(entries.len());
    for i in 0..entries.len() {
        let rank = if i > 0 && tied(&entries[i - 1], &entries[i]) {
            ranks[i - 1]
        } else {
            i + 1
        };
        ranks.push(rank);
    }
    for (e, r) in entries.iter_mut().zip(ranks) {
        e.rank = r;
    }
}

/// Source trigrams that the source-language model has seen, deduplicated.
pub fn retain_source_trigrams(source: &Sentence, source_model: &NGramModel) -> BTreeSet<NGram> {
    extract_ngrams(&source.tokens, 3)
        .into_iter()
        .filter(|t| source_model.count_ngram(t) > 0)
        .collect()
}

/// Target stems reachable through the lexicon from any word of `retained`.
pub fn translation_bag<'a>(
    retained: &BTreeSet<NGram>,
    lexicon: &'a BilingualLexicon,
) -> HashSet<&'a str> {
    retained
        .iter()
        .flat_map(|t| t.words())
        .flat_map(|w| lexicon.lookup(w))
        .map(String::as_str)
        .collect()
}

/// Candidate stem trigrams with at least `min_stem_matches` stems in the
/// translation bag of `retained`, in candidate order with repeats kept.
pub fn register_stem_trigrams(
    retained: &BTreeSet<NGram>,
    candidate_stems: &[NGram],
    lexicon: &BilingualLexicon,
    config: &RankerConfig,
) -> Vec<NGram> {
    let bag = translation_bag(retained, lexicon);
    if bag.is_empty() {
        return Vec::new();
    }
    candidate_stems
        .iter()
        .filter(|t| {
            t.words()
                .iter()
                .filter(|w| bag.contains(w.as_str()))
                .count()
                >= config.min_stem_matches
        })
        .cloned()
        .collect()
}

/// Sum of trigram probabilities; unseen trigrams add 0.
pub fn score_candidate(registered: &[NGram], stem_model: &NGramModel) -> f64 {
    registered
        .iter()
        .fold(0.0, |acc, t| acc + stem_model.prob(t))
}

#[derive(Debug, Clone, PartialEq)]
pub struct CandidateInput {
    pub engine_id: String,
    pub sentence: Sentence,
}

impl CandidateInput {
    pub fn new(engine_id: impl Into<String>, sentence: Sentence) -> Self {
        CandidateInput {
            engine_id: engine_id.into(),
            sentence,
        }
    }
}

/// A scored candidate.
#[derive(Debug, Clone, PartialEq)]
pub struct CandidateTranslation {
    pub engine_id: String,
    pub sentence: Sentence,
    pub stem_trigrams: Vec<NGram>,
    pub registered: Vec<NGram>,
    pub score: f64,
}

/// Everything produced while ranking one source sentence.
#[derive(Debug, Clone, PartialEq)]
pub struct RankOutcome {
    pub retained: BTreeSet<NGram>,
    /// Candidates in input order.
    pub candidates: Vec<CandidateTranslation>,
    pub ranking: RankedList,
}

/// Models, lexicons and settings shared by every ranking call.
#[derive(Debug, Clone)]
pub struct Ranker {
    pub source_model: NGramModel,
    pub stem_model: NGramModel,
    pub lexicon: BilingualLexicon,
    pub stemmer: Stemmer,
    pub config: RankerConfig,
}

impl Ranker {
    pub fn new(
        source_model: NGramModel,
        stem_model: NGramModel,
        lexicon: BilingualLexicon,
        stemmer: Stemmer,
        config: RankerConfig,
    ) -> Result<Self> {
        config.validate()?;
        Ok(Ranker {
            source_model,
            stem_model,
            lexicon,
            stemmer,
            config,
        })
    }

    /// Ranks the candidate translations of `source`. The source side is
    /// case-folded before lookup.
    pub fn rank_candidates(
        &self,
        source: &Sentence,
        candidates: &[CandidateInput],
    ) -> Result<RankOutcome> {
        if candidates.is_empty() {
            return Err(Error::EmptyCandidates);
        }
        let retained = retain_source_trigrams(&source.case_folded(), &self.source_model);
        let scored: Vec<CandidateTranslation> = candidates
            .iter()
            .map(|c| {
                let stem_trigrams = self.stemmer.stem_trigrams(&c.sentence);
                let registered =
                    register_stem_trigrams(&retained, &stem_trigrams, &self.lexicon, &self.config);
                let mut score = score_candidate(&registered, &self.stem_model);
                if self.config.normalize_by_trigram_count {
                    score = if stem_trigrams.is_empty() {
                        0.0
                    } else {
                        score / stem_trigrams.len() as f64
                    };
                }
                CandidateTranslation {
                    engine_id: c.engine_id.clone(),
                    sentence: c.sentence.clone(),
                    stem_trigrams,
                    registered,
                    score,
                }
            })
            .collect();
        let ranking = RankedList::from_scores(
            scored.iter().map(|c| (c.engine_id.clone(), c.score)),
            ScoreOrder::HigherIsBetter,
        );
        Ok(RankOutcome {
            retained,
            candidates: scored,
            ranking,
        })
    }

    /// Ranks every sentence of a test set. `engines` pairs each engine id
    /// with its outputs, line-aligned with `sources`. Sentences are ranked in
    /// parallel on the current rayon pool; results are in input order.
    pub fn rank_test_set(
        &self,
        sources: &[Sentence],
        engines: &[(String, Vec<Sentence>)],
    ) -> Result<Vec<RankOutcome>> {
        if engines.is_empty() {
            return Err(Error::EmptyCandidates);
        }
        for (id, outputs) in engines {
            if outputs.len() != sources.len() {
                return Err(Error::Validation(format!(
                    "engine {id} has {} outputs for {} source sentences",
                    outputs.len(),
                    sources.len()
                )));
            }
        }
        sources
            .par_iter()
            .enumerate()
            .map(|(i, source)| {
                let candidates: Vec<CandidateInput> = engines
                    .iter()
                    .map(|(id, outputs)| CandidateInput::new(id.clone(), outputs[i].clone()))
                    .collect();
                self.rank_candidates(source, &candidates)
            })
            .collect()
    }
}

/// Tie handling when counting rank-1 wins.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TiePolicy {
    /// Every engine tied at rank 1 is a winner.
    #[default]
    Shared,
    /// Only the first rank-1 engine in input order wins.
    First,
}

impl FromStr for TiePolicy {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "shared" => Ok(TiePolicy::Shared),
            "first" => Ok(TiePolicy::First),
            other => Err(Error::Config(format!(
                "unknown tie policy {other:?} (expected shared or first)"
            ))),
        }
    }
}

impl fmt::Display for TiePolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TiePolicy::Shared => "shared",
            TiePolicy::First => "first",
        })
    }
}

/// How ties are ranked; written into output headers.
pub const RANKING_RULE: &str = "competition ranking (1,1,3), ties keep input order";

/// Writes `sentence_index<TAB>engine_id<TAB>score<TAB>rank` rows, best
/// first within each sentence. Header lines are prefixed with `# `.
pub fn write_ranked_tsv<W: Write>(
    mut out: W,
    outcomes: &[RankOutcome],
    header: &[String],
) -> io::Result<()> {
    for line in header {
        writeln!(out, "# {line}")?;
    }
    for (i, outcome) in outcomes.iter().enumerate() {
        for e in outcome.ranking.entries() {
            writeln!(out, "{i}\t{}\t{:.9}\t{}", e.engine_id, e.score, e.rank)?;
        }
    }
    out.flush()
}

#[derive(Serialize)]
struct ExplainRecord<'a> {
    sentence_index: usize,
    engine_id: &'a str,
    retained: Vec<String>,
    stem_trigrams: Vec<String>,
    registered: Vec<String>,
    score: f64,
    rank: usize,
}

/// One JSON object per candidate, preceded by a `{"meta": ...}` line.
pub fn write_explain_jsonl<W: Write>(
    mut out: W,
    outcomes: &[RankOutcome],
    meta: &serde_json::Value,
) -> io::Result<()> {
    serde_json::to_writer(&mut out, &serde_json::json!({ "meta": meta }))?;
    writeln!(out)?;
    for (i, outcome) in outcomes.iter().enumerate() {
        let retained: Vec<String> = outcome.retained.iter().map(NGram::text).collect();
        for c in &outcome.candidates {
            let record = ExplainRecord {
                sentence_index: i,
                engine_id: &c.engine_id,
                retained: retained.clone(),
                stem_trigrams: c.stem_trigrams.iter().map(NGram::text).collect(),
                registered: c.registered.iter().map(NGram::text).collect(),
                score: c.score,
                rank: outcome.ranking.rank_of(&c.engine_id).unwrap_or(0),
            };
            serde_json::to_writer(&mut out, &record)?;
            writeln!(out)?;
        }
    }
    out.flush()
}
