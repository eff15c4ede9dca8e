//! Loading, normalization, and tokenization of monolingual text, line-aligned
//! parallel corpora, and bilingual lexicons.
//!
//! All text is brought to Unicode NFC on the way in so that n-gram matching
//! downstream can compare tokens codepoint by codepoint. Input files may use
//! LF or CRLF line endings.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::path::Path;

use unicode_normalization::UnicodeNormalization;

use crate::error::{Error, Result};

/// Default set of terminal punctuation characters that get split off the end
/// of a token: danda, full stop, question mark, exclamation mark, and the
/// ASCII bar that is commonly typed in place of a danda.
pub const DEFAULT_PUNCT: [char; 5] = ['।', '.', '?', '!', '|'];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TokenizerConfig {
    pub strip_terminal_punct: bool,
    pub punct_set: BTreeSet<char>,
}

impl Default for TokenizerConfig {
    fn default() -> Self {
        TokenizerConfig {
            strip_terminal_punct: true,
            punct_set: DEFAULT_PUNCT.into_iter().collect(),
        }
    }
}

impl TokenizerConfig {
    /// Plain whitespace splitting with no punctuation handling.
    pub fn whitespace_only() -> Self {
        TokenizerConfig {
            strip_terminal_punct: false,
            punct_set: BTreeSet::new(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.strip_terminal_punct && self.punct_set.is_empty() {
            return Err(Error::Config(
                "punct_set must be non-empty when strip_terminal_punct is enabled".into(),
            ));
        }
        if self.punct_set.iter().any(|c| c.is_whitespace()) {
            return Err(Error::Config("punct_set may not contain whitespace".into()));
        }
        Ok(())
    }
}

/// A tokenized line of text.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Sentence {
    pub tokens: Vec<String>,
    pub raw: String,
}

impl Sentence {
    /// Builds a sentence directly from tokens. Tokens are NFC-normalized;
    /// empty tokens and tokens containing whitespace are rejected.
    pub fn from_tokens<I, S>(tokens: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let tokens = tokens
            .into_iter()
            .map(|t| {
                let t: String = t.as_ref().nfc().collect();
                if t.is_empty() || t.chars().any(char::is_whitespace) {
                    Err(Error::Validation(format!("invalid token {t:?}")))
                } else {
                    Ok(t)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        let raw = tokens.join(" ");
        Ok(Sentence { tokens, raw })
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    /// Lowercased copy, used for the source (English) side.
    pub fn case_folded(&self) -> Sentence {
        Sentence {
            tokens: self.tokens.iter().map(|t| fold_case(t)).collect(),
            raw: self.raw.clone(),
        }
    }
}

impl fmt::Display for Sentence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.tokens.join(" "))
    }
}

pub(crate) fn fold_case(s: &str) -> String {
    s.to_lowercase().nfc().collect()
}

/// NFC-normalizes `text`, drops line terminators, and trims surrounding
/// whitespace.
pub fn normalize(text: &str) -> String {
    let stripped: String = text.chars().filter(|&c| c != '\n' && c != '\r').collect();
    stripped.trim().nfc().collect()
}

/// Splits normalized text on whitespace runs. With `strip_terminal_punct`,
/// trailing punctuation characters glued to a word are split off one
/// character per token, so `"है।"` becomes `["है", "।"]`.
pub fn tokenize(text: &str, config: &TokenizerConfig) -> Sentence {
    let mut tokens = Vec::new();
    for word in text.split_whitespace() {
        if !config.strip_terminal_punct {
            tokens.push(word.to_owned());
            continue;
        }
        let mut head = word;
        let mut tail = Vec::new();
        while let Some(last) = head.chars().next_back() {
            if head.len() == last.len_utf8() || !config.punct_set.contains(&last) {
                break;
            }
            head = &head[..head.len() - last.len_utf8()];
            tail.push(last.to_string());
        }
        tokens.push(head.to_owned());
        tokens.extend(tail.into_iter().rev());
    }
    Sentence {
        tokens,
        raw: text.to_owned(),
    }
}

/// Reads a UTF-8 text file as lines. LF and CRLF terminators are accepted;
/// a final terminator does not produce an extra empty line. Invalid UTF-8 is
/// reported with the 1-based line number.
pub fn read_lines(path: &Path) -> Result<Vec<String>> {
    let bytes = std::fs::read(path).map_err(|e| Error::io(path, e))?;
    split_lines(&bytes, path)
}

pub(crate) fn split_lines(bytes: &[u8], path: &Path) -> Result<Vec<String>> {
    if bytes.is_empty() {
        return Ok(Vec::new());
    }
    let body = bytes.strip_suffix(b"\n").unwrap_or(bytes);
    body.split(|&b| b == b'\n')
        .enumerate()
        .map(|(i, line)| {
            let line = line.strip_suffix(b"\r").unwrap_or(line);
            std::str::from_utf8(line)
                .map(str::to_owned)
                .map_err(|_| Error::InvalidUtf8 {
                    path: path.to_owned(),
                    line: i + 1,
                })
        })
        .collect()
}

/// Loads a one-sentence-per-line file. Empty lines are kept as empty
/// sentences so line indices stay meaningful.
pub fn load_sentences(path: &Path, config: &TokenizerConfig) -> Result<Vec<Sentence>> {
    Ok(read_lines(path)?
        .iter()
        .map(|line| tokenize(&normalize(line), config))
        .collect())
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ParallelCorpus {
    pub pairs: Vec<(Sentence, Sentence)>,
}

impl ParallelCorpus {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn sources(&self) -> impl Iterator<Item = &Sentence> {
        self.pairs.iter().map(|(s, _)| s)
    }

    pub fn targets(&self) -> impl Iterator<Item = &Sentence> {
        self.pairs.iter().map(|(_, t)| t)
    }
}

/// Loads two line-aligned files; line `i` of `source_path` pairs with line
/// `i` of `target_path`.
pub fn load_parallel_corpus(
    source_path: &Path,
    target_path: &Path,
    config: &TokenizerConfig,
) -> Result<ParallelCorpus> {
    let source = load_sentences(source_path, config)?;
    let target = load_sentences(target_path, config)?;
    if source.len() != target.len() {
        return Err(Error::Alignment {
            left_path: source_path.to_owned(),
            left: source.len(),
            right_path: target_path.to_owned(),
            right: target.len(),
        });
    }
    Ok(ParallelCorpus {
        pairs: source.into_iter().zip(target).collect(),
    })
}

static EMPTY_SET: BTreeSet<String> = BTreeSet::new();

/// Source word to target-stem translation table.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BilingualLexicon {
    entries: HashMap<String, BTreeSet<String>>,
}

impl BilingualLexicon {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds translations for `source`, merging with any existing entry.
    /// Empty keys or targets are rejected.
    pub fn insert<I, S>(&mut self, source: &str, targets: I) -> Result<()>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let key = fold_case(source.trim());
        if key.is_empty() {
            return Err(Error::Validation("empty lexicon source word".into()));
        }
        let mut values = Vec::new();
        for t in targets {
            let t: String = t.as_ref().trim().nfc().collect();
            if t.is_empty() {
                return Err(Error::Validation(format!("empty translation for {key:?}")));
            }
            values.push(t);
        }
        if values.is_empty() {
            return Err(Error::Validation(format!("no translations for {key:?}")));
        }
        self.entries.entry(key).or_default().extend(values);
        Ok(())
    }

    /// Translations of `word`; unknown words yield the empty set.
    pub fn lookup(&self, word: &str) -> &BTreeSet<String> {
        if let Some(set) = self.entries.get(word) {
            return set;
        }
        self.entries.get(&fold_case(word)).unwrap_or(&EMPTY_SET)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&String, &BTreeSet<String>)> {
        self.entries.iter()
    }
}

/// Parses `source<TAB>target1,target2,...` lines. Blank lines and lines
/// starting with `#` are skipped.
pub fn parse_bilingual_lexicon(text: &str, path: &Path) -> Result<BilingualLexicon> {
    let mut lexicon = BilingualLexicon::new();
    for (i, line) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = line.strip_suffix('\r').unwrap_or(line);
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((source, targets)) = line.split_once('\t') else {
            return Err(Error::parse(path, lineno, "missing TAB separator"));
        };
        if source.trim().is_empty() {
            return Err(Error::parse(path, lineno, "empty source field"));
        }
        if targets.trim().is_empty() {
            return Err(Error::parse(path, lineno, "empty target field"));
        }
        let items: Vec<&str> = targets.split(',').map(str::trim).collect();
        if items.iter().any(|t| t.is_empty()) {
            return Err(Error::parse(path, lineno, "empty item in target list"));
        }
        lexicon
            .insert(source, items)
            .map_err(|e| Error::parse(path, lineno, e.to_string()))?;
    }
    Ok(lexicon)
}

pub fn load_bilingual_lexicon(path: &Path) -> Result<BilingualLexicon> {
    let lines = read_lines(path)?;
    parse_bilingual_lexicon(&lines.join("\n"), path)
}
