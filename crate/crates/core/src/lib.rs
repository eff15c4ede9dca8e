//! Reference-free quality estimation for machine translation.
//!
//! Candidate translations of a source sentence are ranked by how much
//! probability a stemmed target-language trigram model assigns to those of
//! their stem trigrams that correspond, through a bilingual lexicon, to
//! source trigrams known to a source-language model.
//!
//! * [`corpus`] loads and tokenizes text, parallel corpora and lexicons.
//! * [`lm`] counts n-grams and computes maximum-likelihood probabilities.
//! * [`stemmer`] is a lexicon-backed suffix-stripping stemmer.
//! * [`ranker`] scores and ranks candidates.
//! * [`eval`] compares system rankings with human judgments.
//! * [`cli`] implements the `stemrank` command-line tool.

pub mod cli;
pub mod corpus;
pub mod error;
pub mod eval;
pub mod lm;
pub mod ranker;
pub mod stemmer;

pub use corpus::{BilingualLexicon, ParallelCorpus, Sentence, TokenizerConfig};
pub use error::{Error, Result};
pub use eval::{CategorySpec, EvalReport, HumanJudgment, WinCountTable};
pub use lm::{Estimator, HistoryDenominator, NGram, NGramModel, UnigramDenominator};
pub use ranker::{
    CandidateInput, CandidateTranslation, RankOutcome, RankedEntry, RankedList, Ranker,
    RankerConfig, ScoreOrder, TiePolicy,
};
pub use stemmer::{Lexicon, StemRule, StemRuleSet, Stemmer};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");
