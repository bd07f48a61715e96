//! Recognition of two lexicon words written as one.
//!
//! Two kinds of two-way split are tried: a plain split between letters, and an
//! ottru split that breaks an uyirmei letter into its mei (closing the left
//! half) and its uyir (opening the right half).

use crate::letters::{join_mei_uyir, Letter, MeiUyir, Word};
use crate::lexicon::WordStore;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SplitKind {
    Plain,
    Ottru,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SplitPair {
    pub left: String,
    pub right: String,
    pub kind: SplitKind,
}

impl SplitPair {
    fn new(left: String, right: String, kind: SplitKind) -> Self {
        SplitPair { left, right, kind }
    }

    /// Rebuild the original word: concatenation for plain splits, mei + uyir
    /// re-joined at the seam for ottru splits.
    pub fn rejoin(&self) -> Option<String> {
        match self.kind {
            SplitKind::Plain => Some(format!("{}{}", self.left, self.right)),
            SplitKind::Ottru => {
                let left = Word::parse(&self.left).ok()?;
                let right = Word::parse(&self.right).ok()?;
                let (mei, head) = left.letters().split_last()?;
                let (uyir, tail) = right.letters().split_first()?;
                let seam = join_mei_uyir(mei, uyir).ok()?;
                let mut out: String = head.iter().map(Letter::as_str).collect();
                out.push_str(seam.as_str());
                out.extend(tail.iter().map(Letter::as_str));
                Some(out)
            }
        }
    }

    /// The two halves separated by a space, offered as the replacement text.
    pub fn rendering(&self) -> String {
        format!("{} {}", self.left, self.right)
    }
}

fn concat(letters: &[Letter]) -> String {
    letters.iter().map(Letter::as_str).collect()
}

/// One pair per uyirmei letter, in position order.
pub fn generate_ottru_splits(word: &Word) -> Vec<SplitPair> {
    word.iter()
        .enumerate()
        .filter_map(|(idx, letter)| match letter.split() {
            MeiUyir::Pair { mei, uyir } => {
                let left = concat(&word[..idx]) + mei.as_str();
                let right = uyir.to_string() + &concat(&word[idx + 1..]);
                Some(SplitPair::new(left, right, SplitKind::Ottru))
            }
            MeiUyir::Single(_) => None,
        })
        .collect()
}

/// Every split between letters with both halves non-empty.
pub fn generate_plain_splits(word: &Word) -> Vec<SplitPair> {
    (1..word.len())
        .map(|i| SplitPair::new(concat(&word[..i]), concat(&word[i..]), SplitKind::Plain))
        .collect()
}

/// Splits whose halves are both lexicon words; plain splits first.
pub fn recognize(word: &Word, lex: &dyn WordStore) -> Vec<SplitPair> {
    let mut out: Vec<SplitPair> = Vec::new();
    for pair in generate_plain_splits(word).into_iter().chain(generate_ottru_splits(word)) {
        if lex.is_word(&pair.left)
            && lex.is_word(&pair.right)
            && !out.iter().any(|p| p.left == pair.left && p.right == pair.right)
        {
            out.push(pair);
        }
    }
    out
}
