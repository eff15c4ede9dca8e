//! Agreement between system rankings and human judgments.
//!
//! Human judgments score each output on eleven parameters using a 1–5 scale
//! where 1 is ideal and 5 is not acceptable. An output's human score is the
//! unweighted mean of its eleven scores; lower is better. Per category, the
//! number of sentences each engine wins is counted for both the system and
//! the human ranking, and the two tables are compared with Spearman's rho.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt::Write as _;
use std::path::Path;

use serde::Serialize;

use crate::corpus::read_lines;
use crate::error::{Error, Result};
use crate::ranker::{RankedEntry, RankedList, ScoreOrder, TiePolicy};

pub const PARAMETER_COUNT: usize = 11;

pub const AGGREGATION: &str = "unweighted mean of 11 parameter scores, lower is better";

/// Names of the eleven judged parameters, in column order.
pub const PARAMETERS: [&str; PARAMETER_COUNT] = [
    "gender and number of nouns",
    "proper nouns",
    "adjectives and adverbs",
    "lexical choice",
    "phrase and clause order",
    "punctuation",
    "tense",
    "voice",
    "semantics",
    "fluency",
    "overall quality",
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HumanJudgment {
    pub sentence_index: usize,
    pub engine_id: String,
    pub scores: [u8; PARAMETER_COUNT],
}

impl HumanJudgment {
    pub fn new(
        sentence_index: usize,
        engine_id: &str,
        scores: [u8; PARAMETER_COUNT],
    ) -> Result<Self> {
        if let Some(bad) = scores.iter().find(|s| !(1..=5).contains(*s)) {
            return Err(Error::Validation(format!("score {bad} outside 1..=5")));
        }
        if engine_id.is_empty() {
            return Err(Error::Validation("empty engine id".into()));
        }
        Ok(HumanJudgment {
            sentence_index,
            engine_id: engine_id.to_owned(),
            scores,
        })
    }

    pub fn mean(&self) -> f64 {
        self.scores.iter().map(|&s| f64::from(s)).sum::<f64>() / PARAMETER_COUNT as f64
    }
}

/// Parses `sentence_index<TAB>engine_id<TAB>s1<TAB>...<TAB>s11` lines.
/// Blank lines and `#` comments are skipped.
pub fn parse_judgments(text: &str, path: &Path) -> Result<Vec<HumanJudgment>> {
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    for (i, line) in text.lines().enumerate() {
        let lineno = i + 1;
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        if fields.len() != 2 + PARAMETER_COUNT {
            return Err(Error::parse(
                path,
                lineno,
                format!(
                    "expected {} columns, got {}",
                    2 + PARAMETER_COUNT,
                    fields.len()
                ),
            ));
        }
        let index = fields[0].trim().parse::<usize>().map_err(|_| {
            Error::parse(path, lineno, format!("bad sentence index {:?}", fields[0]))
        })?;
        let mut scores = [0u8; PARAMETER_COUNT];
        for (slot, field) in scores.iter_mut().zip(&fields[2..]) {
            *slot = field
                .trim()
                .parse::<u8>()
                .ok()
                .filter(|s| (1..=5).contains(s))
                .ok_or_else(|| {
                    Error::parse(path, lineno, format!("score {field:?} is not in 1..=5"))
                })?;
        }
        let engine = fields[1].trim();
        let judgment = HumanJudgment::new(index, engine, scores)
            .map_err(|e| Error::parse(path, lineno, e.to_string()))?;
        if !seen.insert((index, engine.to_owned())) {
            return Err(Error::parse(
                path,
                lineno,
                format!("duplicate judgment for sentence {index}, engine {engine}"),
            ));
        }
        out.push(judgment);
    }
    Ok(out)
}

pub fn load_judgments(path: &Path) -> Result<Vec<HumanJudgment>> {
    parse_judgments(&read_lines(path)?.join("\n"), path)
}

/// Ranks the judged outputs of one sentence by ascending mean score.
/// Reported scores are the means rounded to 4 decimal places.
pub fn human_rank(judgments: &[HumanJudgment]) -> RankedList {
    // rank on the exact score sums so equal means always tie
    let by_sum = RankedList::from_scores(
        judgments.iter().map(|j| {
            let sum: u32 = j.scores.iter().map(|&s| u32::from(s)).sum();
            (j.engine_id.clone(), f64::from(sum))
        }),
        ScoreOrder::LowerIsBetter,
    );
    let entries = by_sum
        .entries()
        .iter()
        .map(|e| RankedEntry {
            engine_id: e.engine_id.clone(),
            score: (e.score / PARAMETER_COUNT as f64 * 1e4).round() / 1e4,
            rank: e.rank,
        })
        .collect();
    RankedList::from_ranked_entries(entries).expect("ranks come from from_scores")
}

/// Human ranking of every judged sentence.
pub fn human_rankings(judgments: &[HumanJudgment]) -> BTreeMap<usize, RankedList> {
    let mut grouped: BTreeMap<usize, Vec<HumanJudgment>> = BTreeMap::new();
    for j in judgments {
        grouped.entry(j.sentence_index).or_default().push(j.clone());
    }
    grouped
        .into_iter()
        .map(|(i, js)| (i, human_rank(&js)))
        .collect()
}

/// A named subset of engines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CategorySpec {
    pub name: String,
    pub engines: Vec<String>,
}

pub const WEB_ENGINES: [&str; 3] = ["E1", "E2", "E3"];
pub const TOOLKIT_ENGINES: [&str; 3] = ["E4", "E5", "E6"];

impl CategorySpec {
    pub fn custom<I, S>(name: &str, engines: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut seen = BTreeSet::new();
        let mut list = Vec::new();
        for e in engines {
            let e: String = e.into();
            if e.is_empty() {
                return Err(Error::Config("empty engine id in category".into()));
            }
            if seen.insert(e.clone()) {
                list.push(e);
            }
        }
        if list.is_empty() {
            return Err(Error::Config(format!("category {name:?} has no engines")));
        }
        Ok(CategorySpec {
            name: name.to_owned(),
            engines: list,
        })
    }

    /// All engines present in the data, sorted.
    pub fn combined<'a, I: IntoIterator<Item = &'a str>>(present: I) -> Result<Self> {
        let engines: BTreeSet<&str> = present.into_iter().collect();
        Self::custom("combined", engines)
    }

    pub fn web() -> Self {
        Self::custom("web", WEB_ENGINES).expect("non-empty")
    }

    pub fn toolkit() -> Self {
        Self::custom("toolkit", TOOLKIT_ENGINES).expect("non-empty")
    }

    /// Resolves `combined`, `web`, `toolkit`, or `NAME:E1,E2,...`.
    pub fn resolve<'a, I: IntoIterator<Item = &'a str>>(spec: &str, present: I) -> Result<Self> {
        match spec {
            "combined" => Self::combined(present),
            "web" => Ok(Self::web()),
            "toolkit" => Ok(Self::toolkit()),
            other => match other.split_once(':') {
                Some((name, list)) if !name.is_empty() => {
                    Self::custom(name, list.split(',').map(str::trim))
                }
                _ => Err(Error::Config(format!(
                    "unknown category {other:?} (expected combined, web, toolkit or NAME:E1,E2)"
                ))),
            },
        }
    }

    pub fn contains(&self, engine: &str) -> bool {
        self.engines.iter().any(|e| e == engine)
    }

    pub fn title(&self) -> String {
        match self.name.as_str() {
            "combined" => "Ranking at Combined Category".into(),
            "web" => "Ranking at Web-Based Category".into(),
            "toolkit" => "Ranking at MT Toolkits Category".into(),
            other => format!("Ranking at {other} Category"),
        }
    }
}

/// Rank-1 counts per engine, in category order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WinCountTable {
    pub counts: Vec<(String, u64)>,
    pub sentences: usize,
}

impl WinCountTable {
    pub fn from_counts<I, S>(counts: I, sentences: usize) -> Self
    where
        I: IntoIterator<Item = (S, u64)>,
        S: Into<String>,
    {
        WinCountTable {
            counts: counts.into_iter().map(|(e, c)| (e.into(), c)).collect(),
            sentences,
        }
    }

    pub fn get(&self, engine: &str) -> Option<u64> {
        self.counts
            .iter()
            .find(|(e, _)| e == engine)
            .map(|&(_, c)| c)
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().map(|&(_, c)| c).sum()
    }

    pub fn to_map(&self) -> BTreeMap<String, u64> {
        self.counts.iter().cloned().collect()
    }
}

/// Counts, for each category engine, the sentences where it ranks first
/// once every list is restricted to the category.
pub fn win_counts<'a, I>(
    lists: I,
    category: &CategorySpec,
    policy: TiePolicy,
) -> Result<WinCountTable>
where
    I: IntoIterator<Item = (usize, &'a RankedList)>,
{
    let mut counts: Vec<(String, u64)> = category.engines.iter().map(|e| (e.clone(), 0)).collect();
    let mut sentences = 0;
    for (index, list) in lists {
        sentences += 1;
        for engine in &category.engines {
            if list.rank_of(engine).is_none() {
                return Err(Error::Validation(format!(
                    "sentence {index} has no entry for engine {engine}"
                )));
            }
        }
        let restricted = list.restrict(|e| category.contains(e));
        let winners: Vec<&RankedEntry> = match policy {
            TiePolicy::Shared => restricted.winners().collect(),
            TiePolicy::First => restricted.winners().take(1).collect(),
        };
        for w in winners {
            let slot = counts
                .iter_mut()
                .find(|(e, _)| *e == w.engine_id)
                .expect("restricted to category");
            slot.1 += 1;
        }
    }
    Ok(WinCountTable::from_counts(counts, sentences))
}

/// 1-based ranks with tied values sharing the mean of their positions.
pub fn average_ranks(values: &[f64]) -> Vec<f64> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| (values[a] + 0.0).total_cmp(&(values[b] + 0.0)));
    let mut ranks = vec![0.0; values.len()];
    let mut i = 0;
    while i < order.len() {
        let mut j = i;
        while j + 1 < order.len() && values[order[j + 1]] == values[order[i]] {
            j += 1;
        }
        let avg = (i + j) as f64 / 2.0 + 1.0;
        for &k in &order[i..=j] {
            ranks[k] = avg;
        }
        i = j + 1;
    }
    ranks
}

/// Spearman's rho between two win-count tables over the same engines, with
/// average ranks for ties. Undefined (an error) when either table has all
/// counts equal.
pub fn rank_correlation(a: &WinCountTable, b: &WinCountTable) -> Result<f64> {
    let a_set: BTreeSet<&str> = a.counts.iter().map(|(e, _)| e.as_str()).collect();
    let b_set: BTreeSet<&str> = b.counts.iter().map(|(e, _)| e.as_str()).collect();
    if a_set != b_set || a_set.len() != a.counts.len() || b_set.len() != b.counts.len() {
        return Err(Error::Validation(format!(
            "engine sets differ: {a_set:?} vs {b_set:?}"
        )));
    }
    let xs: Vec<f64> = a.counts.iter().map(|&(_, c)| c as f64).collect();
    let ys: Vec<f64> = a
        .counts
        .iter()
        .map(|(e, _)| b.get(e).expect("same engine set") as f64)
        .collect();
    let rx = average_ranks(&xs);
    let ry = average_ranks(&ys);
    let n = rx.len() as f64;
    let mx = rx.iter().sum::<f64>() / n;
    let my = ry.iter().sum::<f64>() / n;
    let (mut sxy, mut sxx, mut syy) = (0.0, 0.0, 0.0);
    for (x, y) in rx.iter().zip(&ry) {
        sxy += (x - mx) * (y - my);
        sxx += (x - mx) * (x - mx);
        syy += (y - my) * (y - my);
    }
    if sxx == 0.0 || syy == 0.0 {
        return Err(Error::Validation(
            "rank correlation is undefined when all counts are equal".into(),
        ));
    }
    Ok((sxy / (sxx * syy).sqrt()).clamp(-1.0, 1.0))
}

/// Reads a ranked TSV (`sentence_index<TAB>engine_id<TAB>score<TAB>rank`)
/// back into per-sentence ranked lists.
pub fn parse_ranked_tsv(text: &str, path: &Path) -> Result<BTreeMap<usize, RankedList>> {
    let mut grouped: BTreeMap<usize, Vec<RankedEntry>> = BTreeMap::new();
    let mut last_index = None;
    for (i, line) in text.lines().enumerate() {
        let lineno = i + 1;
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        let [index, engine, score, rank] = fields.as_slice() else {
            return Err(Error::parse(
                path,
                lineno,
                format!("expected 4 columns, got {}", fields.len()),
            ));
        };
        let index: usize = index
            .parse()
            .map_err(|_| Error::parse(path, lineno, format!("bad sentence index {index:?}")))?;
        let score: f64 = score
            .parse()
            .ok()
            .filter(|s: &f64| s.is_finite())
            .ok_or_else(|| Error::parse(path, lineno, format!("bad score {score:?}")))?;
        let rank: usize = rank
            .parse()
            .ok()
            .filter(|&r| r > 0)
            .ok_or_else(|| Error::parse(path, lineno, format!("bad rank {rank:?}")))?;
        if last_index != Some(index) && grouped.contains_key(&index) {
            return Err(Error::parse(
                path,
                lineno,
                format!("rows for sentence {index} are not contiguous"),
            ));
        }
        last_index = Some(index);
        let rows = grouped.entry(index).or_default();
        if rows.iter().any(|e| e.engine_id == *engine) {
            return Err(Error::parse(
                path,
                lineno,
                format!("duplicate engine {engine} for sentence {index}"),
            ));
        }
        rows.push(RankedEntry {
            engine_id: (*engine).to_owned(),
            score,
            rank,
        });
    }
    grouped
        .into_iter()
        .map(|(i, entries)| {
            RankedList::from_ranked_entries(entries)
                .map(|l| (i, l))
                .map_err(|e| Error::parse(path, 0, format!("sentence {i}: {e}")))
        })
        .collect()
}

pub fn load_ranked_tsv(path: &Path) -> Result<BTreeMap<usize, RankedList>> {
    parse_ranked_tsv(&read_lines(path)?.join("\n"), path)
}

/// Every (sentence, engine) pair of the category must appear on both sides.
pub fn check_coverage(
    system: &BTreeMap<usize, RankedList>,
    human: &BTreeMap<usize, RankedList>,
    category: &CategorySpec,
) -> Result<()> {
    let indices: BTreeSet<usize> = system.keys().chain(human.keys()).copied().collect();
    let mut missing = Vec::new();
    for i in indices {
        for engine in &category.engines {
            for (side, lists) in [("system", system), ("human", human)] {
                if lists.get(&i).and_then(|l| l.rank_of(engine)).is_none() {
                    missing.push(format!("{side}:({i},{engine})"));
                }
            }
        }
    }
    if missing.is_empty() {
        Ok(())
    } else {
        Err(Error::Validation(format!(
            "coverage mismatch, missing pairs: {}",
            missing.join(" ")
        )))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EvalReport {
    pub category: String,
    pub engines: Vec<String>,
    pub sentences: usize,
    pub win_counts_system: BTreeMap<String, u64>,
    pub win_counts_human: BTreeMap<String, u64>,
    /// `None` when the correlation is undefined.
    pub spearman_rho: Option<f64>,
    pub tie_policy: String,
    pub aggregation: String,
}

impl EvalReport {
    pub fn new(
        category: &CategorySpec,
        system: &WinCountTable,
        human: &WinCountTable,
        policy: TiePolicy,
    ) -> Self {
        EvalReport {
            category: category.name.clone(),
            engines: category.engines.clone(),
            sentences: system.sentences,
            win_counts_system: system.to_map(),
            win_counts_human: human.to_map(),
            spearman_rho: rank_correlation(system, human).ok(),
            tie_policy: policy.to_string(),
            aggregation: AGGREGATION.to_owned(),
        }
    }

    pub fn title(&self) -> String {
        CategorySpec {
            name: self.category.clone(),
            engines: vec![],
        }
        .title()
    }

    /// Tab-separated engine table with system and human win counts.
    pub fn render_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.title());
        let _ = writeln!(out, "Engine\tSTEM LM Ranking\tHuman Ranking");
        for e in &self.engines {
            let _ = writeln!(
                out,
                "{e}\t{}\t{}",
                self.win_counts_system.get(e).copied().unwrap_or(0),
                self.win_counts_human.get(e).copied().unwrap_or(0)
            );
        }
        match self.spearman_rho {
            Some(rho) => {
                let _ = writeln!(out, "Spearman rho\t{rho:.6}");
            }
            None => {
                let _ = writeln!(out, "Spearman rho\tundefined");
            }
        }
        out
    }
}

/// Evaluates system rankings against human judgments for one category.
pub fn evaluate(
    system: &BTreeMap<usize, RankedList>,
    judgments: &[HumanJudgment],
    category: &CategorySpec,
    policy: TiePolicy,
) -> Result<EvalReport> {
    let human = human_rankings(judgments);
    check_coverage(system, &human, category)?;
    let sys = win_counts(system.iter().map(|(&i, l)| (i, l)), category, policy)?;
    let hum = win_counts(human.iter().map(|(&i, l)| (i, l)), category, policy)?;
    Ok(EvalReport::new(category, &sys, &hum, policy))
}
