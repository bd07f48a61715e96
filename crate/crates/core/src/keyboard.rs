//! Keyboard typo search.
//!
//! Candidates are produced by substituting letters with their keyboard
//! neighbours from a confusion matrix, at up to `ed` positions. Positions are
//! visited in increasing order so each set of positions is explored once, and
//! only matrix neighbours are tried instead of the whole alphabet. Insertions
//! and deletions are not modelled.

use std::io::BufRead;

use indexmap::IndexMap;

use crate::error::{Error, Result};
use crate::letters::{joins_cleanly, Letter, LetterKind, MeiUyir};
use crate::lexicon::WordStore;
use crate::suggestion::{Strategy, Suggestion};

const TAMIL99: &str = include_str!("../data/tamil99.cm");

/// Letter → ordered keyboard neighbours.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ConfusionMatrix {
    neighbors: IndexMap<String, Vec<String>>,
}

impl ConfusionMatrix {
    /// Build from raw entries. Keys are not required to be Tamil letters, but
    /// no key may list itself.
    pub fn from_entries<K, N, I>(entries: impl IntoIterator<Item = (K, I)>) -> Result<Self>
    where
        K: Into<String>,
        N: Into<String>,
        I: IntoIterator<Item = N>,
    {
        let mut neighbors = IndexMap::new();
        for (idx, (key, alts)) in entries.into_iter().enumerate() {
            let key = key.into();
            let alts: Vec<String> = alts.into_iter().map(Into::into).collect();
            if alts.contains(&key) {
                return Err(Error::parse(idx + 1, format!("{key} lists itself as a neighbour")));
            }
            neighbors.insert(key, alts);
        }
        Ok(ConfusionMatrix { neighbors })
    }

    /// Parse `letter<TAB>alt1 alt2 ...` lines; `#` comments and blank lines
    /// are skipped. Every field must be a single Tamil letter.
    pub fn load<R: BufRead>(source: R) -> Result<Self> {
        let mut neighbors: IndexMap<String, Vec<String>> = IndexMap::new();
        for (idx, line) in source.lines().enumerate() {
            let lineno = idx + 1;
            let line = line?;
            let line = line.trim_start_matches('\u{FEFF}').trim_end();
            if line.trim().is_empty() || line.trim_start().starts_with('#') {
                continue;
            }
            let (key, rest) = line
                .split_once('\t')
                .ok_or_else(|| Error::parse(lineno, "expected letter<TAB>neighbours"))?;
            let key = Letter::parse(key.trim())
                .map_err(|_| Error::parse(lineno, format!("not a Tamil letter: {key:?}")))?;
            let entry = neighbors.entry(key.as_str().to_string()).or_default();
            for alt in rest.split_whitespace() {
                let alt = Letter::parse(alt)
                    .map_err(|_| Error::parse(lineno, format!("not a Tamil letter: {alt:?}")))?;
                if alt == key {
                    return Err(Error::parse(lineno, format!("{key} lists itself as a neighbour")));
                }
                if !entry.iter().any(|a| a == alt.as_str()) {
                    entry.push(alt.as_str().to_string());
                }
            }
        }
        Ok(ConfusionMatrix { neighbors })
    }

    /// The shipped Tamil-99 adjacency matrix.
    pub fn tamil99() -> Self {
        Self::load(TAMIL99.as_bytes()).expect("bundled matrix parses")
    }

    pub fn len(&self) -> usize {
        self.neighbors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.neighbors.is_empty()
    }

    /// Raw entry for `key`, empty when unmapped.
    pub fn entry(&self, key: &str) -> &[String] {
        self.neighbors.get(key).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Neighbours of a letter. An exact entry wins; otherwise mei and uyirmei
    /// letters borrow the entry of their bare consonant, keeping their own
    /// vowel (`கா` with `க → ப` gives `பா`). Non-consonant neighbours are not
    /// carried over.
    pub fn neighbors(&self, letter: &str) -> Vec<String> {
        if let Some(list) = self.neighbors.get(letter) {
            return list.clone();
        }
        let Ok(parsed) = Letter::parse(letter) else {
            return Vec::new();
        };
        let Some(base) = parsed.consonant() else {
            return Vec::new();
        };
        let Some(list) = self.neighbors.get(base) else {
            return Vec::new();
        };
        let vowel = match parsed.split() {
            MeiUyir::Pair { uyir, .. } => uyir.as_str().chars().next(),
            MeiUyir::Single(_) => None,
        };
        list.iter()
            .filter_map(|n| {
                let n = Letter::parse(n).ok()?;
                let base = n.consonant()?;
                let out = match (parsed.kind(), vowel) {
                    (LetterKind::Mei, _) => Letter::mei_of(base),
                    (_, Some(v)) => Letter::uyirmei_of(base, v),
                    _ => return None,
                };
                (out != parsed).then(|| out.as_str().to_string())
            })
            .collect()
    }
}

fn check_range(len: usize, ed: usize) -> Result<()> {
    if ed < 1 || ed > len {
        return Err(Error::EditDistanceOutOfRange { ed, len });
    }
    Ok(())
}

/// All distinct words reachable by replacing letters with matrix neighbours
/// at between 1 and `ed` positions, in first-found order. The input word is
/// never included.
///
/// Requires `1 <= ed <= word.len()`.
pub fn generate_patterns<S: AsRef<str>>(word: &[S], cm: &ConfusionMatrix, ed: usize) -> Result<Vec<String>> {
    Ok(patterns_with_counts(word, cm, ed)?.into_keys().collect())
}

/// Like [`generate_patterns`], with the number of substituted positions.
fn patterns_with_counts<S: AsRef<str>>(
    word: &[S],
    cm: &ConfusionMatrix,
    ed: usize,
) -> Result<IndexMap<String, u32>> {
    check_range(word.len(), ed)?;
    let alternates: Vec<Vec<String>> = word.iter().map(|l| cm.neighbors(l.as_ref())).collect();
    let mut search = Search {
        letters: word.iter().map(AsRef::as_ref).collect(),
        alternates: &alternates,
        original: word.iter().map(AsRef::as_ref).collect(),
        found: IndexMap::new(),
    };
    search.explore(0, ed, 1);
    Ok(search.found)
}

struct Search<'a> {
    letters: Vec<&'a str>,
    alternates: &'a [Vec<String>],
    original: String,
    found: IndexMap<String, u32>,
}

impl<'a> Search<'a> {
    /// Substitute at each position >= `start`; every alternate at a position is
    /// recorded before any deeper combination built on it.
    fn explore(&mut self, start: usize, budget: usize, depth: u32) {
        for pos in start..self.letters.len() {
            let saved = self.letters[pos];
            let alternates = self.alternates;
            for alt in &alternates[pos] {
                self.letters[pos] = alt;
                if joins_cleanly(&self.letters) {
                    let cand = self.letters.concat();
                    if cand != self.original {
                        self.found.entry(cand).or_insert(depth);
                    }
                }
            }
            if budget > 1 {
                for alt in &alternates[pos] {
                    self.letters[pos] = alt;
                    self.explore(pos + 1, budget - 1, depth + 1);
                }
            }
            self.letters[pos] = saved;
        }
    }
}

/// Size of the unpruned substitution lattice: words of the same length that
/// differ at 1..=ed positions when any of `alphabet_size - 1` other letters
/// may stand at a position.
pub fn lattice_count(word_len: usize, alphabet_size: usize, ed: usize) -> u128 {
    let others = alphabet_size.saturating_sub(1) as u128;
    let mut total = 0u128;
    let mut binom = 1u128;
    for k in 1..=ed.min(word_len) {
        binom = binom * (word_len - k + 1) as u128 / k as u128;
        total += binom * others.pow(k as u32);
    }
    total
}

/// Patterns that are lexicon words, ranked by substitution count then code
/// point order.
pub fn corrections<S: AsRef<str>>(
    word: &[S],
    lex: &dyn WordStore,
    cm: &ConfusionMatrix,
    ed: usize,
) -> Result<Vec<Suggestion>> {
    let mut out: Vec<Suggestion> = patterns_with_counts(word, cm, ed)?
        .into_iter()
        .filter(|(c, _)| lex.is_word(c))
        .map(|(c, subs)| Suggestion::new(c, Strategy::Keyboard, subs))
        .collect();
    out.sort_by(|a, b| (a.score, &a.candidate).cmp(&(b.score, &b.candidate)));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::letters::Word;
    use crate::lexicon::Lexicon;

    fn ab() -> ConfusionMatrix {
        ConfusionMatrix::from_entries([("a", vec!["b"]), ("b", vec!["a"])]).unwrap()
    }

    #[test]
    fn latin_stand_in() {
        assert_eq!(generate_patterns(&["a", "b"], &ab(), 1).unwrap(), ["bb", "aa"]);
        assert_eq!(generate_patterns(&["a", "b"], &ab(), 2).unwrap(), ["bb", "ba", "aa"]);
        assert!(generate_patterns(&["x", "y"], &ab(), 2).unwrap().is_empty());
    }

    #[test]
    fn ed_range() {
        assert!(matches!(
            generate_patterns(&["a", "b"], &ab(), 3),
            Err(Error::EditDistanceOutOfRange { ed: 3, len: 2 })
        ));
        assert!(generate_patterns(&["a"], &ab(), 0).is_err());
        assert!(generate_patterns::<&str>(&[], &ab(), 1).is_err());
    }

    #[test]
    fn load_format() {
        let cm = ConfusionMatrix::load("# c\nக\tங த\n".as_bytes()).unwrap();
        assert_eq!(cm.entry("க"), ["ங", "த"]);
        assert!(cm.entry("ம").is_empty());
        assert!(cm.neighbors("அ").is_empty());
        assert!(matches!(ConfusionMatrix::load("க\tக\n".as_bytes()), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(ConfusionMatrix::load("\nகா\tx\n".as_bytes()), Err(Error::Parse { line: 2, .. })));
        assert!(ConfusionMatrix::load("க ங\n".as_bytes()).is_err());
    }

    #[test]
    fn uyirmei_borrows_consonant_entry() {
        let cm = ConfusionMatrix::load("ள\tழ ல அ\n".as_bytes()).unwrap();
        assert_eq!(cm.neighbors("ளா"), ["ழா", "லா"]);
        assert_eq!(cm.neighbors("ள்"), ["ழ்", "ல்"]);
        assert_eq!(cm.neighbors("ள"), ["ழ", "ல", "அ"]);
    }

    #[test]
    fn corrections_filter() {
        let lex: Lexicon = ["பழம்"].into_iter().collect();
        let cm = ConfusionMatrix::load("ள\tழ ல\n".as_bytes()).unwrap();
        let w = Word::parse("பளம்").unwrap();
        let got = corrections(&w, &lex, &cm, 1).unwrap();
        assert_eq!(got, [Suggestion::new("பழம்", Strategy::Keyboard, 1)]);
        assert!(corrections(&w, &lex, &ConfusionMatrix::default(), 1).unwrap().is_empty());
    }

    #[test]
    fn lattice() {
        assert_eq!(lattice_count(2, 2, 2), 3);
        assert_eq!(lattice_count(4, 5, 1), 16);
        assert_eq!(lattice_count(4, 5, 2), 16 + 6 * 16);
    }

    #[test]
    fn tamil99_is_symmetric() {
        let cm = ConfusionMatrix::tamil99();
        assert!(cm.len() > 25);
        for (k, alts) in &cm.neighbors {
            for a in alts {
                assert!(cm.entry(a).contains(k), "{k} -> {a}");
            }
        }
    }
}
