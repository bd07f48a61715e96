//! The spell-check driver.
//!
//! A word found in the lexicon is valid and gets no suggestions. Otherwise
//! every strategy is run, the results are merged (one entry per candidate,
//! best score kept), ranked and capped. Document checking classifies each
//! token, optionally fans the work out to a thread pool, and reassembles the
//! report in input order.

use std::collections::{HashMap, HashSet};
use std::io::BufRead;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::cache::{CacheStats, SuggestionCache};
use crate::conjoined;
use crate::distance::letter_distance;
use crate::edit::{self, Limit};
use crate::error::{Error, Result};
use crate::keyboard::{self, ConfusionMatrix};
use crate::letters::{contains_tamil, is_tamil_codepoint, normalize, tokenize, Alphabet, Word};
use crate::lexicon::{Lexicon, WordStore};
use crate::mayangoli::{self, MayangoliTable};
use crate::suggestion::{DefaultRanker, Ranker, Strategy, Suggestion};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EngineConfig {
    /// Edit distance for both the Norvig search and the keyboard search
    /// (the latter is clamped to the word length).
    pub edit_distance: usize,
    /// Cap on generated Norvig candidates; `None` is unbounded.
    pub limit: Limit,
    pub max_suggestions: usize,
    pub workers: usize,
    pub grantha: bool,
    pub cache: bool,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig {
            edit_distance: 2,
            limit: None,
            max_suggestions: 10,
            workers: 1,
            grantha: false,
            cache: true,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Valid,
    NonWord,
    NonTamil,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WordCheck {
    pub verdict: Verdict,
    pub suggestions: Vec<Suggestion>,
}

impl WordCheck {
    fn valid() -> Self {
        WordCheck { verdict: Verdict::Valid, suggestions: Vec::new() }
    }

    /// Valid, or a non-word that splits into two lexicon words.
    pub fn is_acceptable(&self) -> bool {
        match self.verdict {
            Verdict::NonWord => self.suggestions.iter().any(|s| s.strategy == Strategy::Conjoined),
            _ => true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TokenReport {
    pub token: String,
    pub verdict: Verdict,
    pub suggestions: Vec<Suggestion>,
}

impl TokenReport {
    /// A non-word without a conjoined reading.
    pub fn is_finding(&self) -> bool {
        self.verdict == Verdict::NonWord
            && !self.suggestions.iter().any(|s| s.strategy == Strategy::Conjoined)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct CheckReport {
    pub tokens: Vec<TokenReport>,
}

impl CheckReport {
    /// Tokens that are non-words without a conjoined reading.
    pub fn findings(&self) -> impl Iterator<Item = &TokenReport> {
        self.tokens.iter().filter(|t| t.is_finding())
    }

    pub fn is_clean(&self) -> bool {
        self.findings().next().is_none()
    }
}

/// Foreign word → Tamil replacement, matched case-insensitively.
#[derive(Debug, Clone, Default)]
pub struct ForeignDictionary {
    entries: HashMap<String, String>,
}

impl ForeignDictionary {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, foreign: &str, tamil: &str) {
        self.entries.insert(foreign.trim().to_lowercase(), normalize(tamil.trim()));
    }

    /// `foreign<TAB>tamil` per line; `#` comments and blank lines skipped.
    pub fn load<R: BufRead>(source: R) -> Result<Self> {
        let mut dict = Self::new();
        for (idx, line) in source.lines().enumerate() {
            let line = line?;
            let line = line.trim_start_matches('\u{FEFF}');
            if line.trim().is_empty() || line.trim_start().starts_with('#') {
                continue;
            }
            let (foreign, tamil) = line
                .split_once('\t')
                .ok_or_else(|| Error::parse(idx + 1, "expected foreign<TAB>tamil"))?;
            if foreign.trim().is_empty() || tamil.trim().is_empty() {
                return Err(Error::parse(idx + 1, "empty field"));
            }
            dict.insert(foreign, tamil);
        }
        Ok(dict)
    }

    pub fn lookup(&self, token: &str) -> Option<&str> {
        self.entries.get(&token.to_lowercase()).map(String::as_str)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Replacement for a token written in another script, if the parallel
/// dictionary has one. Tokens containing Tamil code points are never
/// substituted.
pub fn substitute_foreign(token: &str, parallel: &ForeignDictionary) -> Option<Suggestion> {
    if contains_tamil(token) {
        return None;
    }
    parallel
        .lookup(token)
        .map(|tamil| Suggestion::new(tamil, Strategy::Foreign, 0))
}

/// One word per line, NFC-normalized; `#` comments skipped.
pub fn load_stopwords<R: BufRead>(source: R) -> Result<HashSet<String>> {
    let mut out = HashSet::new();
    for line in source.lines() {
        let line = line?;
        let word = line.trim_start_matches('\u{FEFF}').trim();
        if !word.is_empty() && !word.starts_with('#') {
            out.insert(normalize(word));
        }
    }
    Ok(out)
}

fn is_word_char(ch: char) -> bool {
    ch.is_alphanumeric() || is_tamil_codepoint(ch)
}

/// Split text on whitespace and punctuation.
pub fn split_words(text: &str) -> Vec<&str> {
    text.split(|c: char| !is_word_char(c)).filter(|w| !w.is_empty()).collect()
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct EngineStats {
    pub cache: CacheStats,
    /// Number of times the strategies were actually run for a non-word.
    pub computations: u64,
}

pub struct EngineBuilder {
    lexicon: Arc<dyn WordStore>,
    config: EngineConfig,
    mayangoli: MayangoliTable,
    keyboard: ConfusionMatrix,
    foreign: ForeignDictionary,
    stopwords: HashSet<String>,
    ranker: Box<dyn Ranker>,
}

impl EngineBuilder {
    pub fn config(mut self, config: EngineConfig) -> Self {
        self.config = config;
        self
    }

    pub fn mayangoli(mut self, table: MayangoliTable) -> Self {
        self.mayangoli = table;
        self
    }

    pub fn keyboard(mut self, cm: ConfusionMatrix) -> Self {
        self.keyboard = cm;
        self
    }

    pub fn foreign(mut self, dict: ForeignDictionary) -> Self {
        self.foreign = dict;
        self
    }

    pub fn stopwords(mut self, words: HashSet<String>) -> Self {
        self.stopwords = words;
        self
    }

    pub fn ranker(mut self, ranker: impl Ranker + 'static) -> Self {
        self.ranker = Box::new(ranker);
        self
    }

    pub fn build(self) -> Result<Engine> {
        let config = self.config;
        if config.edit_distance < 1 {
            return Err(Error::EditDistanceTooSmall(config.edit_distance));
        }
        let pool = if config.workers > 1 {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(config.workers)
                .thread_name(|i| format!("spell-worker-{i}"))
                .build()
                .map_err(|e| Error::WorkerPool(e.to_string()))?;
            Some(pool)
        } else {
            None
        };
        Ok(Engine {
            lexicon: self.lexicon,
            alphabet: Alphabet::new(config.grantha),
            mayangoli: self.mayangoli,
            keyboard: self.keyboard,
            foreign: self.foreign,
            stopwords: self.stopwords,
            ranker: self.ranker,
            cache: SuggestionCache::new(),
            computations: AtomicU64::new(0),
            pool,
            config,
        })
    }
}

/// Lexicon, tables and configuration for checking words and documents.
///
/// All state is read-only after construction apart from the suggestion cache
/// and counters, so one engine can serve many threads.
pub struct Engine {
    lexicon: Arc<dyn WordStore>,
    alphabet: Alphabet,
    mayangoli: MayangoliTable,
    keyboard: ConfusionMatrix,
    foreign: ForeignDictionary,
    stopwords: HashSet<String>,
    ranker: Box<dyn Ranker>,
    cache: SuggestionCache,
    computations: AtomicU64,
    pool: Option<rayon::ThreadPool>,
    config: EngineConfig,
}

impl Engine {
    /// Builder with the default mayangoli table and Tamil-99 keyboard matrix.
    pub fn builder(lexicon: impl WordStore + 'static) -> EngineBuilder {
        Self::builder_shared(Arc::new(lexicon))
    }

    pub fn builder_shared(lexicon: Arc<dyn WordStore>) -> EngineBuilder {
        EngineBuilder {
            lexicon,
            config: EngineConfig::default(),
            mayangoli: MayangoliTable::default(),
            keyboard: ConfusionMatrix::tamil99(),
            foreign: ForeignDictionary::new(),
            stopwords: HashSet::new(),
            ranker: Box::new(DefaultRanker),
        }
    }

    pub fn new(lexicon: Lexicon) -> Result<Self> {
        Self::builder(lexicon).build()
    }

    pub fn config(&self) -> &EngineConfig {
        &self.config
    }

    pub fn lexicon(&self) -> &dyn WordStore {
        self.lexicon.as_ref()
    }

    pub fn stats(&self) -> EngineStats {
        EngineStats {
            cache: self.cache.stats(),
            computations: self.computations.load(Ordering::Relaxed),
        }
    }

    /// Forget cached suggestions and zero the counters.
    pub fn reset(&self) {
        self.cache.clear();
        self.computations.store(0, Ordering::Relaxed);
    }

    /// Valid if the word is in the lexicon, otherwise a non-word with ranked
    /// suggestions from every strategy.
    pub fn check_word(&self, word: &str) -> WordCheck {
        let word = normalize(word.trim());
        if self.lexicon.is_word(&word) {
            return WordCheck::valid();
        }
        let suggestions = if self.config.cache {
            self.cache.get_or_compute(&word, || self.compute(&word)).as_ref().clone()
        } else {
            self.compute(&word)
        };
        WordCheck { verdict: Verdict::NonWord, suggestions }
    }

    /// The uncached suggestion pipeline for a non-word.
    pub fn suggestions_for(&self, word: &str) -> Vec<Suggestion> {
        self.compute(&normalize(word))
    }

    fn compute(&self, word: &str) -> Vec<Suggestion> {
        self.computations.fetch_add(1, Ordering::Relaxed);
        let Ok(parsed) = Word::parse(word) else {
            return Vec::new();
        };
        if parsed.is_empty() {
            return Vec::new();
        }
        let lex = self.lexicon.as_ref();
        let mut found: Vec<Suggestion> = conjoined::recognize(&parsed, lex)
            .into_iter()
            .map(|pair| Suggestion::new(pair.rendering(), Strategy::Conjoined, 0))
            .collect();
        found.extend(mayangoli::suggest(&parsed, lex, &self.mayangoli));
        let ed = self.config.edit_distance.min(parsed.len());
        if let Ok(list) = keyboard::corrections(&parsed, lex, &self.keyboard, ed) {
            found.extend(list);
        }
        if let Ok(list) = edit::suggest(&parsed, lex, &self.alphabet, self.config.edit_distance, self.config.limit) {
            found.extend(list);
        }
        let mut merged = merge(word, found);
        self.ranker.rank(word, &mut merged);
        merged.truncate(self.config.max_suggestions);
        merged
    }

    fn check_token(&self, token: &str) -> TokenReport {
        let normalized = normalize(token);
        let (verdict, suggestions) = if !contains_tamil(&normalized) {
            let sub = substitute_foreign(&normalized, &self.foreign);
            (Verdict::NonTamil, sub.into_iter().collect())
        } else if self.stopwords.contains(&normalized)
            || !tokenize(&normalized).iter().any(|t| t.is_letter())
        {
            // stop words, and Tamil numerals or symbols with no letters
            (Verdict::Skipped, Vec::new())
        } else {
            let check = self.check_word(&normalized);
            (check.verdict, check.suggestions)
        };
        TokenReport { token: token.to_string(), verdict, suggestions }
    }

    /// Check every word of `text`. The report keeps input order whatever the
    /// worker count.
    pub fn check_text(&self, text: &str) -> CheckReport {
        let words = split_words(text);
        let tokens = match &self.pool {
            Some(pool) => pool.install(|| words.par_iter().map(|w| self.check_token(w)).collect()),
            None => words.iter().map(|w| self.check_token(w)).collect(),
        };
        CheckReport { tokens }
    }
}

/// One suggestion per candidate. Non-conjoined candidates are re-scored by
/// letter distance to the source; ties on a candidate keep the lower
/// (score, strategy).
fn merge(source: &str, found: Vec<Suggestion>) -> Vec<Suggestion> {
    let mut best: HashMap<String, Suggestion> = HashMap::new();
    for mut s in found {
        if s.strategy != Strategy::Conjoined {
            s.score = letter_distance(source, &s.candidate) as u32;
        }
        match best.get(&s.candidate) {
            Some(prev) if (prev.score, prev.strategy) <= (s.score, s.strategy) => {}
            _ => {
                best.insert(s.candidate.clone(), s);
            }
        }
    }
    best.into_values().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn engine(words: &[&str], config: EngineConfig) -> Engine {
        let lex: Lexicon = words.iter().collect();
        Engine::builder(lex).config(config).build().unwrap()
    }

    #[test]
    fn valid_word_has_no_suggestions() {
        let e = engine(&["பழம்"], EngineConfig::default());
        assert_eq!(e.check_word("பழம்"), WordCheck::valid());
        assert_eq!(e.stats().computations, 0);
    }

    #[test]
    fn mayangoli_non_word() {
        let e = engine(&["பழம்", "பலம்", "கல்"], EngineConfig::default());
        let c = e.check_word("பளம்");
        assert_eq!(c.verdict, Verdict::NonWord);
        assert!(c.suggestions.iter().any(|s| s.candidate == "பழம்" && s.strategy == Strategy::Mayangoli));
    }

    #[test]
    fn conjoined_is_acceptable() {
        let e = engine(&["தென்றல்", "காற்று"], EngineConfig::default());
        let c = e.check_word("தென்றல்காற்று");
        assert_eq!(c.verdict, Verdict::NonWord);
        assert_eq!(c.suggestions[0], Suggestion::new("தென்றல் காற்று", Strategy::Conjoined, 0));
        assert!(c.is_acceptable());
    }

    #[test]
    fn merge_keeps_best() {
        let merged = merge(
            "பளம்",
            vec![
                Suggestion::new("பழம்", Strategy::Edit, 1),
                Suggestion::new("பழம்", Strategy::Mayangoli, 1),
                Suggestion::new("பழம்", Strategy::Keyboard, 1),
            ],
        );
        assert_eq!(merged, [Suggestion::new("பழம்", Strategy::Mayangoli, 1)]);
    }

    #[test]
    fn text_classification() {
        let mut stop = HashSet::new();
        stop.insert("ஒரு".to_string());
        let lex: Lexicon = ["அன்பே", "சிவம்", "பழம்"].into_iter().collect();
        let e = Engine::builder(lex).stopwords(stop).build().unwrap();
        let r = e.check_text("அன்பே சிவம்.");
        assert!(r.tokens.iter().all(|t| t.verdict == Verdict::Valid));
        let r = e.check_text("hello, பளம் ஒரு ௧௨");
        let verdicts: Vec<_> = r.tokens.iter().map(|t| t.verdict).collect();
        assert_eq!(verdicts, [Verdict::NonTamil, Verdict::NonWord, Verdict::Skipped, Verdict::Skipped]);
        assert!(e.check_text("").tokens.is_empty());
    }

    #[test]
    fn foreign_lookup_is_case_insensitive() {
        let d = ForeignDictionary::load("computer\tகணினி\n# x\n".as_bytes()).unwrap();
        assert_eq!(substitute_foreign("computer", &d).unwrap().candidate, "கணினி");
        assert_eq!(substitute_foreign("Computer", &d).unwrap().candidate, "கணினி");
        assert!(substitute_foreign("keyboard", &d).is_none());
        assert!(ForeignDictionary::load("computer\n".as_bytes()).is_err());
    }

    #[test]
    fn cap_applies() {
        let config = EngineConfig { max_suggestions: 1, ..Default::default() };
        let e = engine(&["பழம்", "பலம்"], config);
        assert_eq!(e.check_word("பளம்").suggestions.len(), 1);
    }

    #[test]
    fn bad_config() {
        let config = EngineConfig { edit_distance: 0, ..Default::default() };
        assert!(Engine::builder(Lexicon::new()).config(config).build().is_err());
    }
}
