//! C interface to `stemrank`.
//!
//! Objects are opaque handles created by `*_load`/`*_new`/`*_build`
//! functions and released by the matching `*_free`. Every fallible call
//! returns a [`StemrankStatus`]; on failure a description is available from
//! [`stemrank_last_error_message`] on the same thread until the next call.
//! Strings are NUL-terminated UTF-8. Strings returned by the library must be
//! released with [`stemrank_string_free`].
//!
//! Text passed to the model, stemmer and ranker is tokenized with the
//! library's default tokenizer (NFC, whitespace split, terminal
//! punctuation detached).

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::ptr;

use stemrank::corpus::{self, TokenizerConfig};
use stemrank::eval::rank_correlation;
use stemrank::lm::{self, NGramModel};
use stemrank::stemmer::{self, StemRuleSet};
use stemrank::{CandidateInput, Error, Lexicon, Ranker, RankerConfig, Stemmer, WinCountTable};

/// Result of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StemrankStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Io = 3,
    Parse = 4,
    Alignment = 5,
    EmptyCandidates = 6,
    InvalidArgument = 7,
    Validation = 8,
    Panic = 9,
}

/// A trigram language model.
pub struct StemrankModel(NGramModel);

/// A suffix stemmer with its lexicon.
pub struct StemrankStemmer(Stemmer);

/// A candidate ranker.
pub struct StemrankRanker(Ranker);

struct Failure {
    status: StemrankStatus,
    message: String,
}

impl Failure {
    fn new(status: StemrankStatus, message: impl Into<String>) -> Self {
        Failure {
            status,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match &e {
            Error::Io { .. } => StemrankStatus::Io,
            Error::InvalidUtf8 { .. } => StemrankStatus::InvalidUtf8,
            Error::Parse { .. } => StemrankStatus::Parse,
            Error::Alignment { .. } => StemrankStatus::Alignment,
            Error::EmptyCandidates => StemrankStatus::EmptyCandidates,
            Error::Config(_) => StemrankStatus::InvalidArgument,
            Error::Validation(_) => StemrankStatus::Validation,
        };
        Failure::new(status, e.to_string())
    }
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(message: Option<String>) {
    let message =
        message.map(|m| CString::new(m.replace('\0', "\\0")).expect("interior NULs replaced"));
    LAST_ERROR.with(|slot| *slot.borrow_mut() = message);
}

/// Runs `f`, turning errors and panics into a status and a stored message.
fn guard<F: FnOnce() -> Result<(), Failure>>(f: F) -> StemrankStatus {
    set_last_error(None);
    let failure = match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => return StemrankStatus::Ok,
        Ok(Err(failure)) => failure,
        Err(payload) => {
            let what = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            Failure::new(StemrankStatus::Panic, format!("panic: {what}"))
        }
    };
    set_last_error(Some(failure.message));
    failure.status
}

unsafe fn str_arg<'a>(p: *const c_char, name: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure::new(
            StemrankStatus::NullPointer,
            format!("{name} is NULL"),
        ));
    }
    CStr::from_ptr(p).to_str().map_err(|_| {
        Failure::new(
            StemrankStatus::InvalidUtf8,
            format!("{name} is not valid UTF-8"),
        )
    })
}

unsafe fn opt_str_arg<'a>(p: *const c_char, name: &str) -> Result<Option<&'a str>, Failure> {
    if p.is_null() {
        Ok(None)
    } else {
        str_arg(p, name).map(Some)
    }
}

unsafe fn ref_arg<'a, T>(p: *const T, name: &str) -> Result<&'a T, Failure> {
    p.as_ref()
        .ok_or_else(|| Failure::new(StemrankStatus::NullPointer, format!("{name} is NULL")))
}

fn out_arg<T>(p: *mut T, name: &str) -> Result<(), Failure> {
    if p.is_null() {
        Err(Failure::new(
            StemrankStatus::NullPointer,
            format!("{name} is NULL"),
        ))
    } else {
        Ok(())
    }
}

unsafe fn str_array<'a>(
    p: *const *const c_char,
    len: usize,
    name: &str,
) -> Result<Vec<&'a str>, Failure> {
    if len == 0 {
        return Ok(Vec::new());
    }
    if p.is_null() {
        return Err(Failure::new(
            StemrankStatus::NullPointer,
            format!("{name} is NULL"),
        ));
    }
    std::slice::from_raw_parts(p, len)
        .iter()
        .enumerate()
        .map(|(i, &s)| str_arg(s, &format!("{name}[{i}]")))
        .collect()
}

fn check_order(n: usize) -> Result<(), Failure> {
    if (1..=lm::MAX_ORDER).contains(&n) {
        Ok(())
    } else {
        Err(Failure::new(
            StemrankStatus::InvalidArgument,
            format!("n-gram order must be 1 to 3, got {n}"),
        ))
    }
}

fn boxed<T>(value: T) -> *mut T {
    Box::into_raw(Box::new(value))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn stemrank_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message for the last failed call on this thread, or NULL. The pointer is
/// valid until the next library call on the same thread.
#[no_mangle]
pub extern "C" fn stemrank_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Releases a string returned by the library. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn stemrank_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Loads a model file written by `stemrank build-lm` or
/// [`stemrank_model_save`].
#[no_mangle]
pub unsafe extern "C" fn stemrank_model_load(
    path: *const c_char,
    out: *mut *mut StemrankModel,
) -> StemrankStatus {
    guard(|| {
        out_arg(out, "out")?;
        let path = str_arg(path, "path")?;
        let model = lm::load_model(Path::new(path))?;
        *out = boxed(StemrankModel(model));
        Ok(())
    })
}

/// Counts a one-sentence-per-line corpus. With `case_fold`, tokens are
/// lowercased first.
#[no_mangle]
pub unsafe extern "C" fn stemrank_model_build(
    corpus_path: *const c_char,
    case_fold: bool,
    out: *mut *mut StemrankModel,
) -> StemrankStatus {
    guard(|| {
        out_arg(out, "out")?;
        let path = str_arg(corpus_path, "corpus_path")?;
        let mut sentences = corpus::load_sentences(Path::new(path), &TokenizerConfig::default())?;
        if case_fold {
            sentences = sentences.iter().map(|s| s.case_folded()).collect();
        }
        *out = boxed(StemrankModel(lm::build_model_parallel(&sentences)));
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn stemrank_model_save(
    model: *const StemrankModel,
    path: *const c_char,
) -> StemrankStatus {
    guard(|| {
        let model = ref_arg(model, "model")?;
        let path = str_arg(path, "path")?;
        lm::save_model(&model.0, Path::new(path))?;
        Ok(())
    })
}

/// Probability of the last of `n` words (1 to 3) given the ones before it.
#[no_mangle]
pub unsafe extern "C" fn stemrank_model_prob(
    model: *const StemrankModel,
    words: *const *const c_char,
    n: usize,
    out: *mut f64,
) -> StemrankStatus {
    guard(|| {
        out_arg(out, "out")?;
        let model = ref_arg(model, "model")?;
        check_order(n)?;
        let w = str_array(words, n, "words")?;
        *out = match w.as_slice() {
            [a] => model.0.unigram_prob(a),
            [a, b] => model.0.bigram_prob(a, b),
            [a, b, c] => model.0.trigram_prob(a, b, c),
            _ => unreachable!("order checked"),
        };
        Ok(())
    })
}

/// Corpus count of an n-gram of `n` words (1 to 3).
#[no_mangle]
pub unsafe extern "C" fn stemrank_model_count(
    model: *const StemrankModel,
    words: *const *const c_char,
    n: usize,
    out: *mut u64,
) -> StemrankStatus {
    guard(|| {
        out_arg(out, "out")?;
        let model = ref_arg(model, "model")?;
        check_order(n)?;
        let w = str_array(words, n, "words")?;
        *out = model.0.count(&w);
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn stemrank_model_free(model: *mut StemrankModel) {
    if !model.is_null() {
        drop(Box::from_raw(model));
    }
}

fn rule_set(path: Option<&str>) -> Result<StemRuleSet, Failure> {
    Ok(match path {
        None => StemRuleSet::starter_hindi(),
        Some(p) => stemmer::load_rules(Path::new(p))?,
    })
}

fn lexicon(path: Option<&str>) -> Result<Lexicon, Failure> {
    Ok(match path {
        None => Lexicon::new(),
        Some(p) => stemmer::load_lexicon(Path::new(p))?,
    })
}

/// Loads a stemmer. A NULL `rules_path` selects the bundled Hindi rules; a
/// NULL `lexicon_path` means an empty lexicon.
#[no_mangle]
pub unsafe extern "C" fn stemrank_stemmer_load(
    rules_path: *const c_char,
    lexicon_path: *const c_char,
    out: *mut *mut StemrankStemmer,
) -> StemrankStatus {
    guard(|| {
        out_arg(out, "out")?;
        let rules = rule_set(opt_str_arg(rules_path, "rules_path")?)?;
        let lexicon = lexicon(opt_str_arg(lexicon_path, "lexicon_path")?)?;
        *out = boxed(StemrankStemmer(Stemmer::new(rules, lexicon)));
        Ok(())
    })
}

/// Stems one word. The result must be released with
/// [`stemrank_string_free`].
#[no_mangle]
pub unsafe extern "C" fn stemrank_stemmer_stem(
    stemmer: *const StemrankStemmer,
    word: *const c_char,
    out: *mut *mut c_char,
) -> StemrankStatus {
    guard(|| {
        out_arg(out, "out")?;
        let stemmer = ref_arg(stemmer, "stemmer")?;
        let word = corpus::normalize(str_arg(word, "word")?);
        let stem = stemmer.0.stem(&word);
        *out = CString::new(stem).expect("no NUL in input").into_raw();
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn stemrank_stemmer_free(stemmer: *mut StemrankStemmer) {
    if !stemmer.is_null() {
        drop(Box::from_raw(stemmer));
    }
}

/// Builds a ranker from model, lexicon and rule files. NULL `rules_path`
/// and `lexicon_path` behave as in [`stemrank_stemmer_load`].
#[no_mangle]
pub unsafe extern "C" fn stemrank_ranker_new(
    source_lm_path: *const c_char,
    stem_lm_path: *const c_char,
    bilingual_lexicon_path: *const c_char,
    rules_path: *const c_char,
    lexicon_path: *const c_char,
    min_stem_matches: usize,
    out: *mut *mut StemrankRanker,
) -> StemrankStatus {
    guard(|| {
        out_arg(out, "out")?;
        let source_lm = lm::load_model(Path::new(str_arg(source_lm_path, "source_lm_path")?))?;
        let stem_lm = lm::load_model(Path::new(str_arg(stem_lm_path, "stem_lm_path")?))?;
        let bilingual = corpus::load_bilingual_lexicon(Path::new(str_arg(
            bilingual_lexicon_path,
            "bilingual_lexicon_path",
        )?))?;
        let stemmer = Stemmer::new(
            rule_set(opt_str_arg(rules_path, "rules_path")?)?,
            lexicon(opt_str_arg(lexicon_path, "lexicon_path")?)?,
        );
        let config = RankerConfig {
            min_stem_matches,
            ..RankerConfig::default()
        };
        let ranker = Ranker::new(source_lm, stem_lm, bilingual, stemmer, config)?;
        *out = boxed(StemrankRanker(ranker));
        Ok(())
    })
}

/// Scores and ranks `n` candidate translations of `source`. `scores` and
/// `ranks` receive `n` values each, in candidate order; rank 1 is best and
/// tied candidates share a rank.
#[no_mangle]
pub unsafe extern "C" fn stemrank_ranker_rank(
    ranker: *const StemrankRanker,
    source: *const c_char,
    candidates: *const *const c_char,
    n: usize,
    scores: *mut f64,
    ranks: *mut usize,
) -> StemrankStatus {
    guard(|| {
        let ranker = ref_arg(ranker, "ranker")?;
        let cfg = TokenizerConfig::default();
        let source = corpus::tokenize(&corpus::normalize(str_arg(source, "source")?), &cfg);
        let texts = str_array(candidates, n, "candidates")?;
        if n > 0 {
            out_arg(scores, "scores")?;
            out_arg(ranks, "ranks")?;
        }
        let inputs: Vec<CandidateInput> = texts
            .iter()
            .enumerate()
            .map(|(i, t)| {
                CandidateInput::new(i.to_string(), corpus::tokenize(&corpus::normalize(t), &cfg))
            })
            .collect();
        let outcome = ranker.0.rank_candidates(&source, &inputs)?;
        let scores = std::slice::from_raw_parts_mut(scores, n);
        let ranks = std::slice::from_raw_parts_mut(ranks, n);
        for e in outcome.ranking.entries() {
            let i: usize = e.engine_id.parse().expect("ids are indices");
            scores[i] = e.score;
            ranks[i] = e.rank;
        }
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn stemrank_ranker_free(ranker: *mut StemrankRanker) {
    if !ranker.is_null() {
        drop(Box::from_raw(ranker));
    }
}

/// Spearman's rho between two win-count columns of length `n`, with
/// average ranks for ties. Fails with `Validation` when either column is
/// constant.
#[no_mangle]
pub unsafe extern "C" fn stemrank_spearman(
    a: *const u64,
    b: *const u64,
    n: usize,
    out: *mut f64,
) -> StemrankStatus {
    guard(|| {
        out_arg(out, "out")?;
        if n > 0 && (a.is_null() || b.is_null()) {
            return Err(Failure::new(
                StemrankStatus::NullPointer,
                "count array is NULL",
            ));
        }
        let column = |p: *const u64| -> WinCountTable {
            let values = if n == 0 {
                &[][..]
            } else {
                std::slice::from_raw_parts(p, n)
            };
            WinCountTable::from_counts(
                values.iter().enumerate().map(|(i, &c)| (i.to_string(), c)),
                0,
            )
        };
        *out = rank_correlation(&column(a), &column(b))?;
        Ok(())
    })
}
