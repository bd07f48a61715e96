use std::fmt;

use serde::Serialize;

/// Which generator produced a suggestion. Declaration order is the merge
/// priority used when scores tie.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Strategy {
    Conjoined,
    Mayangoli,
    Keyboard,
    Edit,
    Foreign,
}

impl Strategy {
    pub fn name(self) -> &'static str {
        match self {
            Strategy::Conjoined => "conjoined",
            Strategy::Mayangoli => "mayangoli",
            Strategy::Keyboard => "keyboard",
            Strategy::Edit => "edit",
            Strategy::Foreign => "foreign",
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A replacement candidate. Lower scores are better.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Suggestion {
    pub candidate: String,
    pub strategy: Strategy,
    pub score: u32,
}

impl Suggestion {
    pub fn new(candidate: impl Into<String>, strategy: Strategy, score: u32) -> Self {
        Suggestion { candidate: candidate.into(), strategy, score }
    }

    fn sort_key(&self) -> (u32, Strategy, &str) {
        (self.score, self.strategy, &self.candidate)
    }
}

/// Orders a suggestion list in place. The default orders by score, then
/// strategy priority, then code point order of the candidate; a language-model
/// ranker would plug in here.
pub trait Ranker: Send + Sync {
    fn rank(&self, source: &str, suggestions: &mut [Suggestion]);
}

#[derive(Debug, Default, Clone, Copy)]
pub struct DefaultRanker;

impl Ranker for DefaultRanker {
    fn rank(&self, _source: &str, suggestions: &mut [Suggestion]) {
        suggestions.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    }
}
