//! Order 1–3 n-gram counts with maximum-likelihood probabilities.
//!
//! No padding symbols are added at sentence boundaries and there is no
//! smoothing, so anything absent from the training text has probability 0.
//! Probabilities are always computed from stored counts on demand.
//!
//! Model file layout (UTF-8, LF):
//!
//! ```text
//! ## free-form metadata lines (ignored on load)
//! #total 3
//! #order 1
//! a	2
//! b	1
//! #order 2
//! a b	1
//! b a	1
//! #order 3
//! a b a	1
//! ```
//!
//! Inside a section lines are ordered by descending count, then by n-gram
//! text in codepoint order.

#![allow(clippy::tabs_in_doc_comments)]

use std::cmp::Reverse;
use std::collections::HashMap;
use std::fmt;
use std::io::{self, Write};
use std::path::Path;
use std::str::FromStr;

use rayon::prelude::*;

use crate::corpus::{split_lines, Sentence};
use crate::error::{Error, Result};

pub const MAX_ORDER: usize = 3;

/// A contiguous run of one to three tokens.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NGram {
    words: Vec<String>,
}

impl NGram {
    pub fn new<I, S>(words: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let words: Vec<String> = words.into_iter().map(Into::into).collect();
        if words.is_empty() || words.len() > MAX_ORDER {
            return Err(Error::Validation(format!(
                "n-gram order must be 1..={MAX_ORDER}, got {}",
                words.len()
            )));
        }
        if words
            .iter()
            .any(|w| w.is_empty() || w.contains(char::is_whitespace))
        {
            return Err(Error::Validation(format!(
                "invalid n-gram token in {words:?}"
            )));
        }
        Ok(NGram { words })
    }

    pub fn words(&self) -> &[String] {
        &self.words
    }

    pub fn order(&self) -> usize {
        self.words.len()
    }

    /// Tokens joined by single spaces; the key used in model files.
    pub fn text(&self) -> String {
        self.words.join(" ")
    }
}

impl fmt::Display for NGram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text())
    }
}

/// Every contiguous `n`-token window of `tokens`, in order.
///
/// Panics if `n` is not 1, 2 or 3.
pub fn extract_ngrams(tokens: &[String], n: usize) -> Vec<NGram> {
    assert!(
        (1..=MAX_ORDER).contains(&n),
        "n-gram order {n} out of range"
    );
    tokens
        .windows(n)
        .map(|w| NGram { words: w.to_vec() })
        .collect()
}

/// Denominator of the unigram estimate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum UnigramDenominator {
    /// Total number of tokens; unigram probabilities sum to 1.
    #[default]
    Tokens,
    /// Number of distinct unigrams.
    Vocabulary,
}

/// Denominator of the bigram and trigram estimates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum HistoryDenominator {
    /// Number of times the history is followed by another token. Conditional
    /// probabilities over the observed continuations of a history sum to 1.
    #[default]
    Continuations,
    /// Raw count of the history n-gram, including sentence-final
    /// occurrences that have no continuation.
    Occurrences,
}

macro_rules! impl_enum_str {
    ($ty:ty, $($variant:ident => $name:literal),+) => {
        impl FromStr for $ty {
            type Err = Error;
            fn from_str(s: &str) -> Result<Self> {
                match s {
                    $($name => Ok(<$ty>::$variant),)+
                    other => Err(Error::Config(format!(
                        concat!("unknown value {:?} (expected one of: ", $($name, " ",)+ ")"),
                        other
                    ))),
                }
            }
        }
        impl fmt::Display for $ty {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(match self { $(<$ty>::$variant => $name,)+ })
            }
        }
    };
}

impl_enum_str!(UnigramDenominator, Tokens => "tokens", Vocabulary => "vocabulary");
impl_enum_str!(HistoryDenominator, Continuations => "continuations", Occurrences => "occurrences");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Estimator {
    pub unigram: UnigramDenominator,
    pub history: HistoryDenominator,
}

/// N-gram counts for orders 1 to 3.
///
/// Counts are keyed by the space-joined n-gram text; tokens never contain
/// whitespace so the key is unambiguous.
#[derive(Debug, Clone, Default)]
pub struct NGramModel {
    counts: [HashMap<String, u64>; MAX_ORDER],
    // continuation counts of order-1 and order-2 histories
    followed: [HashMap<String, u64>; MAX_ORDER - 1],
    total_unigrams: u64,
    estimator: Estimator,
}

impl PartialEq for NGramModel {
    fn eq(&self, other: &Self) -> bool {
        self.total_unigrams == other.total_unigrams && self.counts == other.counts
    }
}

impl Eq for NGramModel {}

impl NGramModel {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_estimator(mut self, estimator: Estimator) -> Self {
        self.estimator = estimator;
        self
    }

    pub fn set_estimator(&mut self, estimator: Estimator) {
        self.estimator = estimator;
    }

    pub fn estimator(&self) -> Estimator {
        self.estimator
    }

    /// Counts every n-gram of `tokens`, `times` times over.
    pub fn add_tokens(&mut self, tokens: &[String], times: u64) {
        if times == 0 {
            return;
        }
        self.total_unigrams += tokens.len() as u64 * times;
        for n in 1..=MAX_ORDER {
            for window in tokens.windows(n) {
                *self.counts[n - 1].entry(window.join(" ")).or_insert(0) += times;
                if n > 1 {
                    let history = window[..n - 1].join(" ");
                    *self.followed[n - 2].entry(history).or_insert(0) += times;
                }
            }
        }
    }

    pub fn add_sentence(&mut self, sentence: &Sentence) {
        self.add_tokens(&sentence.tokens, 1);
    }

    /// Adds all counts of `other` into `self`.
    pub fn merge(&mut self, other: NGramModel) {
        self.total_unigrams += other.total_unigrams;
        for (mine, theirs) in self.counts.iter_mut().zip(other.counts) {
            for (k, v) in theirs {
                *mine.entry(k).or_insert(0) += v;
            }
        }
        for (mine, theirs) in self.followed.iter_mut().zip(other.followed) {
            for (k, v) in theirs {
                *mine.entry(k).or_insert(0) += v;
            }
        }
    }

    pub fn is_empty(&self) -> bool {
        self.total_unigrams == 0
    }

    pub fn total_unigrams(&self) -> u64 {
        self.total_unigrams
    }

    /// Number of distinct n-grams of the given order.
    pub fn distinct(&self, order: usize) -> usize {
        self.counts[order - 1].len()
    }

    pub fn count(&self, words: &[&str]) -> u64 {
        if words.is_empty() || words.len() > MAX_ORDER {
            return 0;
        }
        self.counts[words.len() - 1]
            .get(&words.join(" "))
            .copied()
            .unwrap_or(0)
    }

    pub fn count_ngram(&self, ngram: &NGram) -> u64 {
        self.counts[ngram.order() - 1]
            .get(&ngram.text())
            .copied()
            .unwrap_or(0)
    }

    /// `(n-gram text, count)` pairs of one order, in unspecified order.
    pub fn iter_order(&self, order: usize) -> impl Iterator<Item = (&str, u64)> {
        self.counts[order - 1].iter().map(|(k, &v)| (k.as_str(), v))
    }

    fn history_count(&self, history: &str, order: usize) -> u64 {
        let table = match self.estimator.history {
            HistoryDenominator::Continuations => &self.followed[order - 1],
            HistoryDenominator::Occurrences => &self.counts[order - 1],
        };
        table.get(history).copied().unwrap_or(0)
    }

    fn ratio(num: u64, den: u64) -> f64 {
        if den == 0 {
            0.0
        } else {
            num as f64 / den as f64
        }
    }

    pub fn unigram_prob(&self, word: &str) -> f64 {
        let den = match self.estimator.unigram {
            UnigramDenominator::Tokens => self.total_unigrams,
            UnigramDenominator::Vocabulary => self.counts[0].len() as u64,
        };
        Self::ratio(self.counts[0].get(word).copied().unwrap_or(0), den)
    }

    pub fn bigram_prob(&self, prev: &str, word: &str) -> f64 {
        let num = self.counts[1]
            .get(&format!("{prev} {word}"))
            .copied()
            .unwrap_or(0);
        if num == 0 {
            return 0.0;
        }
        Self::ratio(num, self.history_count(prev, 1))
    }

    pub fn trigram_prob(&self, first: &str, second: &str, word: &str) -> f64 {
        let num = self.counts[2]
            .get(&format!("{first} {second} {word}"))
            .copied()
            .unwrap_or(0);
        if num == 0 {
            return 0.0;
        }
        Self::ratio(num, self.history_count(&format!("{first} {second}"), 2))
    }

    pub fn prob(&self, ngram: &NGram) -> f64 {
        match ngram.words() {
            [w] => self.unigram_prob(w),
            [a, b] => self.bigram_prob(a, b),
            [a, b, c] => self.trigram_prob(a, b, c),
            _ => unreachable!("NGram order is always 1..=3"),
        }
    }

    /// Checks the structural invariants a model built from text always
    /// satisfies. Used when loading models from files.
    pub fn validate(&self) -> Result<()> {
        let sum: u64 = self.counts[0].values().sum();
        if sum != self.total_unigrams {
            return Err(Error::Validation(format!(
                "unigram counts sum to {sum} but total is {}",
                self.total_unigrams
            )));
        }
        for n in 2..=MAX_ORDER {
            for (key, &count) in &self.counts[n - 1] {
                let (prefix, _) = key.rsplit_once(' ').expect("order >= 2");
                let (_, suffix) = key.split_once(' ').expect("order >= 2");
                let prefix_count = self.counts[n - 2].get(prefix).copied().unwrap_or(0);
                let suffix_count = self.counts[n - 2].get(suffix).copied().unwrap_or(0);
                if prefix_count == 0 || suffix_count == 0 {
                    return Err(Error::Validation(format!(
                        "{n}-gram {key:?} has an unseen lower-order part"
                    )));
                }
                if count > prefix_count {
                    return Err(Error::Validation(format!(
                        "{n}-gram {key:?} count {count} exceeds prefix count {prefix_count}"
                    )));
                }
            }
        }
        Ok(())
    }

    fn rebuild_followed(&mut self) {
        for n in 2..=MAX_ORDER {
            let mut table = HashMap::new();
            for (key, &count) in &self.counts[n - 1] {
                let (prefix, _) = key.rsplit_once(' ').expect("order >= 2");
                *table.entry(prefix.to_owned()).or_insert(0) += count;
            }
            self.followed[n - 2] = table;
        }
    }

    /// Lines of one order sorted by descending count, ties by codepoint order.
    pub fn sorted_order(&self, order: usize) -> Vec<(&str, u64)> {
        let mut entries: Vec<(&str, u64)> = self.iter_order(order).collect();
        entries.sort_unstable_by_key(|&(k, c)| (Reverse(c), k));
        entries
    }

    /// Writes the canonical text form. Each `header` line is written with a
    /// leading `## `.
    pub fn write_to<W: Write>(&self, mut out: W, header: &[String]) -> io::Result<()> {
        for line in header {
            writeln!(out, "## {line}")?;
        }
        writeln!(out, "#total {}", self.total_unigrams)?;
        for order in 1..=MAX_ORDER {
            writeln!(out, "#order {order}")?;
            for (key, count) in self.sorted_order(order) {
                writeln!(out, "{key}\t{count}")?;
            }
        }
        out.flush()
    }

    pub fn to_text(&self) -> String {
        let mut buf = Vec::new();
        self.write_to(&mut buf, &[])
            .expect("writing to a Vec cannot fail");
        String::from_utf8(buf).expect("model text is UTF-8")
    }

    pub fn parse(text: &str, path: &Path) -> Result<Self> {
        let mut model = NGramModel::new();
        let mut total = None;
        let mut section: Option<usize> = None;
        let mut seen_sections = [false; MAX_ORDER];

        for (i, line) in text.lines().enumerate() {
            let lineno = i + 1;
            if line.is_empty() || line.starts_with("##") {
                continue;
            }
            if let Some(rest) = line.strip_prefix("#total ") {
                if total.is_some() {
                    return Err(Error::parse(path, lineno, "duplicate #total header"));
                }
                total = Some(
                    rest.trim()
                        .parse::<u64>()
                        .map_err(|_| Error::parse(path, lineno, format!("bad total {rest:?}")))?,
                );
                continue;
            }
            if let Some(rest) = line.strip_prefix("#order ") {
                let order = rest
                    .trim()
                    .parse::<usize>()
                    .ok()
                    .filter(|o| (1..=MAX_ORDER).contains(o))
                    .ok_or_else(|| Error::parse(path, lineno, format!("bad order {rest:?}")))?;
                if seen_sections[order - 1] {
                    return Err(Error::parse(
                        path,
                        lineno,
                        format!("duplicate section {order}"),
                    ));
                }
                seen_sections[order - 1] = true;
                section = Some(order);
                continue;
            }
            if line.starts_with('#') {
                return Err(Error::parse(
                    path,
                    lineno,
                    format!("unknown directive {line:?}"),
                ));
            }
            let order =
                section.ok_or_else(|| Error::parse(path, lineno, "n-gram line before #order"))?;
            let (key, count) = line
                .split_once('\t')
                .ok_or_else(|| Error::parse(path, lineno, "missing TAB separator"))?;
            let count = count
                .parse::<u64>()
                .ok()
                .filter(|&c| c > 0)
                .ok_or_else(|| Error::parse(path, lineno, format!("bad count {count:?}")))?;
            let words: Vec<&str> = key.split(' ').collect();
            if words.len() != order || words.iter().any(|w| w.is_empty() || w.contains('\t')) {
                return Err(Error::parse(
                    path,
                    lineno,
                    format!("expected {order} space-separated tokens, got {key:?}"),
                ));
            }
            if model.counts[order - 1]
                .insert(key.to_owned(), count)
                .is_some()
            {
                return Err(Error::parse(
                    path,
                    lineno,
                    format!("duplicate n-gram {key:?}"),
                ));
            }
        }

        model.total_unigrams =
            total.ok_or_else(|| Error::parse(path, 0, "missing #total header"))?;
        model
            .validate()
            .map_err(|e| Error::parse(path, 0, e.to_string()))?;
        model.rebuild_followed();
        Ok(model)
    }
}

/// Counts every sentence into a new model.
pub fn build_model<'a, I>(sentences: I) -> NGramModel
where
    I: IntoIterator<Item = &'a Sentence>,
{
    let mut model = NGramModel::new();
    for s in sentences {
        model.add_sentence(s);
    }
    model
}

/// Counts sentences in parallel shards on the current rayon pool and merges
/// the partial counts. The result equals [`build_model`] on the same input.
pub fn build_model_parallel(sentences: &[Sentence]) -> NGramModel {
    const SHARD: usize = 2048;
    sentences
        .par_chunks(SHARD)
        .map(build_model)
        .reduce(NGramModel::new, |mut a, b| {
            a.merge(b);
            a
        })
}

pub fn save_model(model: &NGramModel, path: &Path) -> Result<()> {
    save_model_with_header(model, path, &[])
}

pub fn save_model_with_header(model: &NGramModel, path: &Path, header: &[String]) -> Result<()> {
    let file = std::fs::File::create(path).map_err(|e| Error::io(path, e))?;
    model
        .write_to(io::BufWriter::new(file), header)
        .map_err(|e| Error::io(path, e))
}

pub fn load_model(path: &Path) -> Result<NGramModel> {
    let bytes = std::fs::read(path).map_err(|e| Error::io(path, e))?;
    let lines = split_lines(&bytes, path)?;
    NGramModel::parse(&lines.join("\n"), path)
}
