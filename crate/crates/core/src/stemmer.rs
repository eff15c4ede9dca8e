//! Lexicon-backed suffix-stripping stemmer.
//!
//! A word found in the lexicon is its own stem. Otherwise the longest
//! matching suffix rule is applied once; words that no rule matches are
//! returned as they are.

use std::collections::{HashMap, HashSet};
use std::path::Path;

use unicode_normalization::UnicodeNormalization;

use crate::corpus::{read_lines, Sentence};
use crate::error::{Error, Result};
use crate::lm::{extract_ngrams, NGram};

/// Hindi suffix rules bundled with the crate (see `data/hindi_rules.tsv`).
pub const STARTER_HINDI_RULES: &str = include_str!("../data/hindi_rules.tsv");

/// Marks an empty replacement in rule files.
const DELETE: &str = "-";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StemRule {
    pub suffix: String,
    pub replacement: String,
    /// Minimum length of the result, in codepoints.
    pub min_stem_len: usize,
}

impl StemRule {
    pub fn new(suffix: &str, replacement: &str, min_stem_len: usize) -> Result<Self> {
        let suffix: String = suffix.nfc().collect();
        let replacement: String = replacement.nfc().collect();
        if suffix.is_empty() {
            return Err(Error::Validation("empty suffix".into()));
        }
        if suffix == replacement {
            return Err(Error::Validation(format!(
                "rule {suffix:?} replaces the suffix with itself"
            )));
        }
        if min_stem_len == 0 {
            return Err(Error::Validation("min_stem_len must be positive".into()));
        }
        if suffix.contains(char::is_whitespace) || replacement.contains(char::is_whitespace) {
            return Err(Error::Validation("rules may not contain whitespace".into()));
        }
        Ok(StemRule {
            suffix,
            replacement,
            min_stem_len,
        })
    }

    pub fn suffix_len(&self) -> usize {
        self.suffix.chars().count()
    }

    /// The rewritten word, if the suffix matches and the result keeps at
    /// least `min_stem_len` codepoints.
    pub fn apply(&self, word: &str) -> Option<String> {
        let stem = word.strip_suffix(self.suffix.as_str())?;
        let len = stem.chars().count() + self.replacement.chars().count();
        (len >= self.min_stem_len).then(|| format!("{stem}{}", self.replacement))
    }
}

/// Rules ordered longest suffix first; equal lengths keep insertion order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct StemRuleSet {
    rules: Vec<StemRule>,
}

impl StemRuleSet {
    pub fn new(rules: Vec<StemRule>) -> Result<Self> {
        let mut seen = HashSet::new();
        for r in &rules {
            if !seen.insert(r.suffix.as_str()) {
                return Err(Error::Validation(format!(
                    "duplicate suffix {:?}",
                    r.suffix
                )));
            }
        }
        let mut rules = rules;
        rules.sort_by_key(|r| std::cmp::Reverse(r.suffix_len()));
        Ok(StemRuleSet { rules })
    }

    pub fn rules(&self) -> &[StemRule] {
        &self.rules
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    pub fn starter_hindi() -> Self {
        parse_rules(STARTER_HINDI_RULES, Path::new("<starter rules>"))
            .expect("bundled rule file is valid")
    }
}

/// Parses `suffix<TAB>replacement[<TAB>min_stem_len]` lines; `-` stands for
/// an empty replacement. Blank lines and `#` comments are skipped.
pub fn parse_rules(text: &str, path: &Path) -> Result<StemRuleSet> {
    let mut rules = Vec::new();
    let mut first_line: HashMap<String, usize> = HashMap::new();
    for (i, line) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = line.strip_suffix('\r').unwrap_or(line);
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        let (suffix, replacement, min_len) = match fields.as_slice() {
            [s, r] => (*s, *r, 1),
            [s, r, m] => {
                let m = m
                    .trim()
                    .parse::<usize>()
                    .map_err(|_| Error::parse(path, lineno, format!("bad min_stem_len {m:?}")))?;
                (*s, *r, m)
            }
            _ => {
                return Err(Error::parse(
                    path,
                    lineno,
                    format!("expected 2 or 3 TAB-separated fields, got {}", fields.len()),
                ))
            }
        };
        let replacement = if replacement.trim() == DELETE {
            ""
        } else {
            replacement.trim()
        };
        let rule = StemRule::new(suffix.trim(), replacement, min_len)
            .map_err(|e| Error::parse(path, lineno, e.to_string()))?;
        if let Some(prev) = first_line.insert(rule.suffix.clone(), lineno) {
            return Err(Error::parse(
                path,
                lineno,
                format!("duplicate suffix {:?} (first on line {prev})", rule.suffix),
            ));
        }
        rules.push(rule);
    }
    StemRuleSet::new(rules)
}

pub fn load_rules(path: &Path) -> Result<StemRuleSet> {
    parse_rules(&read_lines(path)?.join("\n"), path)
}

/// Known root and derived words; these are never stemmed.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Lexicon {
    words: HashSet<String>,
}

impl Lexicon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, word: &str) -> bool {
        let w: String = word.trim().nfc().collect();
        !w.is_empty() && self.words.insert(w)
    }

    pub fn contains(&self, word: &str) -> bool {
        self.words.contains(word)
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }
}

impl<S: AsRef<str>> FromIterator<S> for Lexicon {
    fn from_iter<I: IntoIterator<Item = S>>(iter: I) -> Self {
        let mut lex = Lexicon::new();
        for w in iter {
            lex.insert(w.as_ref());
        }
        lex
    }
}

/// One word per line, `#` comments.
pub fn load_lexicon(path: &Path) -> Result<Lexicon> {
    Ok(read_lines(path)?
        .iter()
        .filter(|l| !l.starts_with('#'))
        .collect())
}

#[derive(Debug, Clone, Default)]
pub struct Stemmer {
    pub rules: StemRuleSet,
    pub lexicon: Lexicon,
}

impl Stemmer {
    pub fn new(rules: StemRuleSet, lexicon: Lexicon) -> Self {
        Stemmer { rules, lexicon }
    }

    pub fn stem(&self, word: &str) -> String {
        if self.lexicon.contains(word) {
            return word.to_owned();
        }
        self.rules
            .rules
            .iter()
            .find_map(|r| r.apply(word))
            .unwrap_or_else(|| word.to_owned())
    }

    pub fn stem_sentence(&self, sentence: &Sentence) -> Sentence {
        Sentence {
            tokens: sentence.tokens.iter().map(|t| self.stem(t)).collect(),
            raw: sentence.raw.clone(),
        }
    }

    pub fn stem_trigrams(&self, sentence: &Sentence) -> Vec<NGram> {
        extract_ngrams(&self.stem_sentence(sentence).tokens, 3)
    }
}
