//! Confusable-letter ("mayangoli") alternates.
//!
//! Letters whose consonant belongs to one of the confusable series (ல/ழ/ள,
//! ர/ற, ந/ன/ண, ங/ஞ) are swapped for every other member of the series, keeping
//! the vowel, and the product over all such positions is taken.

use std::collections::HashSet;
use std::io::BufRead;

use itertools::Itertools;

use crate::distance::letter_distance;
use crate::error::{Error, Result};
use crate::letters::{join_mei_uyir, Letter, LetterKind, MeiUyir, Word};
use crate::lexicon::WordStore;
use crate::suggestion::{Strategy, Suggestion};

const DEFAULT_SERIES: [&[&str]; 4] = [
    &["ல்", "ழ்", "ள்"],
    &["ர்", "ற்"],
    &["ந்", "ன்", "ண்"],
    &["ங்", "ஞ்"],
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MayangoliTable {
    series: Vec<Vec<Letter>>,
}

impl Default for MayangoliTable {
    fn default() -> Self {
        let series = DEFAULT_SERIES
            .iter()
            .map(|s| s.iter().map(|m| Letter::parse(m).expect("table letter")).collect())
            .collect();
        MayangoliTable { series }
    }
}

impl MayangoliTable {
    /// Build from explicit series. Every entry must be a mei letter and no
    /// mei may appear in two series.
    pub fn new(series: Vec<Vec<Letter>>) -> Result<Self> {
        let mut seen = HashSet::new();
        for (idx, s) in series.iter().enumerate() {
            for m in s {
                if m.kind() != LetterKind::Mei {
                    return Err(Error::parse(idx + 1, format!("{m} is not a mei letter")));
                }
                if !seen.insert(m.as_str().to_string()) {
                    return Err(Error::parse(idx + 1, format!("{m} appears in more than one series")));
                }
            }
        }
        Ok(MayangoliTable { series })
    }

    /// Override file: one series per line, mei letters separated by spaces.
    /// Blank lines and `#` comments are skipped.
    pub fn load<R: BufRead>(source: R) -> Result<Self> {
        let mut series = Vec::new();
        let mut seen = HashSet::new();
        for (idx, line) in source.lines().enumerate() {
            let line = line?;
            let line = line.trim_start_matches('\u{FEFF}').trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut members = Vec::new();
            for item in line.split_whitespace() {
                let letter = Letter::parse(item)
                    .map_err(|_| Error::parse(idx + 1, format!("not a letter: {item:?}")))?;
                if letter.kind() != LetterKind::Mei {
                    return Err(Error::parse(idx + 1, format!("{item} is not a mei letter")));
                }
                if !seen.insert(letter.as_str().to_string()) {
                    return Err(Error::parse(idx + 1, format!("{item} appears in more than one series")));
                }
                members.push(letter);
            }
            series.push(members);
        }
        Ok(MayangoliTable { series })
    }

    pub fn series(&self) -> &[Vec<Letter>] {
        &self.series
    }

    fn locate(&self, mei: &Letter) -> Option<(usize, usize)> {
        self.series
            .iter()
            .enumerate()
            .find_map(|(r, s)| s.iter().position(|m| m == mei).map(|c| (r, c)))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MayangoliMatch {
    pub position: usize,
    pub series_index: usize,
    pub member_index: usize,
}

/// Positions of uyirmei letters whose mei is in some series. Letters that do
/// not decompose (uyir, ayudham, bare mei) are skipped.
pub fn find_letter_positions(word: &Word, table: &MayangoliTable) -> Vec<MayangoliMatch> {
    word.iter()
        .enumerate()
        .filter_map(|(position, letter)| match letter.split() {
            MeiUyir::Pair { mei, .. } => table.locate(&mei).map(|(r, c)| MayangoliMatch {
                position,
                series_index: r,
                member_index: c,
            }),
            MeiUyir::Single(_) => None,
        })
        .collect()
}

/// For each match, the letters formed by every mei of its series with the
/// original vowel, in series order (original included).
pub fn find_correspondents(word: &Word, matches: &[MayangoliMatch], table: &MayangoliTable) -> Vec<Vec<Letter>> {
    matches
        .iter()
        .map(|m| {
            let MeiUyir::Pair { uyir, .. } = word[m.position].split() else {
                unreachable!("matches only point at uyirmei letters")
            };
            table.series[m.series_index]
                .iter()
                .map(|mei| join_mei_uyir(mei, &uyir).expect("series holds mei letters"))
                .collect()
        })
        .collect()
}

/// Every combination of correspondents substituted into the word, minus the
/// word itself. Empty when no position matches.
pub fn generate_alternates(word: &Word, table: &MayangoliTable) -> Vec<String> {
    let matches = find_letter_positions(word, table);
    if matches.is_empty() {
        return Vec::new();
    }
    let classes = find_correspondents(word, &matches, table);
    let original = word.text();
    let mut letters: Vec<&str> = word.iter().map(Letter::as_str).collect();
    classes
        .iter()
        .multi_cartesian_product()
        .filter_map(|combo| {
            for (m, sub) in matches.iter().zip(&combo) {
                letters[m.position] = sub.as_str();
            }
            let alt = letters.concat();
            (alt != original).then_some(alt)
        })
        .collect()
}

/// Alternates that are lexicon words.
pub fn suggest(word: &Word, lex: &dyn WordStore, table: &MayangoliTable) -> Vec<Suggestion> {
    let source = word.text();
    generate_alternates(word, table)
        .into_iter()
        .filter(|alt| lex.is_word(alt))
        .map(|alt| {
            let score = letter_distance(&source, &alt) as u32;
            Suggestion::new(alt, Strategy::Mayangoli, score)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lexicon::Lexicon;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    #[test]
    fn default_table_shape() {
        let t = MayangoliTable::default();
        let sizes: Vec<_> = t.series().iter().map(Vec::len).collect();
        assert_eq!(sizes, [3, 2, 3, 2]);
    }

    #[test]
    fn positions() {
        let t = MayangoliTable::default();
        assert_eq!(
            find_letter_positions(&w("பளம்"), &t),
            [MayangoliMatch { position: 1, series_index: 0, member_index: 2 }]
        );
        assert_eq!(
            find_letter_positions(&w("கரை"), &t),
            [MayangoliMatch { position: 1, series_index: 1, member_index: 0 }]
        );
        // final ல் is a bare mei and is not decomposed
        assert!(find_letter_positions(&w("கடல்"), &t).is_empty());
    }

    #[test]
    fn correspondents() {
        let t = MayangoliTable::default();
        let word = w("பளம்");
        let m = find_letter_positions(&word, &t);
        let c = find_correspondents(&word, &m, &t);
        let texts: Vec<_> = c[0].iter().map(Letter::as_str).collect();
        assert_eq!(texts, ["ல", "ழ", "ள"]);

        let word = w("கீரை");
        let m = find_letter_positions(&word, &t);
        assert_eq!(m.len(), 1);
        let c = find_correspondents(&word, &m, &t);
        let texts: Vec<_> = c[0].iter().map(Letter::as_str).collect();
        assert_eq!(texts, ["ரை", "றை"]);
        assert!(find_correspondents(&word, &[], &t).is_empty());
    }

    #[test]
    fn alternates() {
        let t = MayangoliTable::default();
        let mut alts = generate_alternates(&w("பளம்"), &t);
        alts.sort();
        assert_eq!(alts, ["பலம்", "பழம்"]);
        assert!(generate_alternates(&w("அது"), &t).is_empty());
        // ள (3-member series) and ரு (2-member series)
        assert_eq!(generate_alternates(&w("உளரு"), &t).len(), 5);
    }

    #[test]
    fn suggestions_filter_by_lexicon() {
        let t = MayangoliTable::default();
        let lex: Lexicon = ["பழம்", "பலம்", "கல்"].into_iter().collect();
        let mut got: Vec<_> = suggest(&w("பளம்"), &lex, &t).into_iter().map(|s| s.candidate).collect();
        got.sort();
        assert_eq!(got, ["பலம்", "பழம்"]);
        assert!(suggest(&w("பளம்"), &Lexicon::new(), &t).is_empty());
        let got = suggest(&w("பழம்"), &lex, &t);
        assert!(got.iter().all(|s| s.candidate != "பழம்"));
    }

    #[test]
    fn override_file() {
        let t = MayangoliTable::load("# two series\nல் ள்\nர் ற்\n".as_bytes()).unwrap();
        assert_eq!(t.series().len(), 2);
        assert!(MayangoliTable::load("ல் ள்\nள் ழ்\n".as_bytes()).is_err());
        assert!(matches!(
            MayangoliTable::load("ல ள்\n".as_bytes()),
            Err(Error::Parse { line: 1, .. })
        ));
    }
}
