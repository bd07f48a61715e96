//! Norvig-style edit candidates over Tamil letters.
//!
//! One edit is a letter deletion, an adjacent transposition, a replacement by
//! an alphabet letter, or an insertion of an alphabet letter. Splits are the
//! standard `(word[..i], word[i..])` for `i in 0..=n`.
//!
//! Generation order is fixed (deletes, transposes, replaces, inserts; positions
//! left to right; alphabet order), so a capped result is deterministic.

use indexmap::IndexSet;

use crate::distance::damerau_levenshtein;
use crate::error::{Error, Result};
use crate::letters::{joins_cleanly, tokenize, Alphabet, Word};
use crate::lexicon::WordStore;
use crate::suggestion::{Strategy, Suggestion};

/// Upper bound on a candidate set. `None` is unbounded.
pub type Limit = Option<usize>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EditCandidateSet {
    pub candidates: IndexSet<String>,
    pub edit_distance: usize,
    pub limit: Limit,
}

impl EditCandidateSet {
    pub fn len(&self) -> usize {
        self.candidates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.candidates.is_empty()
    }

    pub fn contains(&self, candidate: &str) -> bool {
        self.candidates.contains(candidate)
    }
}

/// The raw (undeduplicated) one-edit lists, one per operation kind.
///
/// For an `n`-letter word and an alphabet of size `A` the list lengths are
/// exactly `n`, `n - 1`, `n * A` and `(n + 1) * A`.
#[derive(Debug, Clone, Default)]
pub struct EditOps {
    pub deletes: Vec<String>,
    pub transposes: Vec<String>,
    pub replaces: Vec<String>,
    pub inserts: Vec<String>,
}

pub fn edit_operations<S: AsRef<str>>(word: &[S], alphabet: &Alphabet) -> EditOps {
    let letters: Vec<&str> = word.iter().map(AsRef::as_ref).collect();
    let mut ops = EditOps::default();
    generate(&letters, alphabet, &mut |kind, parts| {
        let list = match kind {
            0 => &mut ops.deletes,
            1 => &mut ops.transposes,
            2 => &mut ops.replaces,
            _ => &mut ops.inserts,
        };
        list.push(parts.concat());
        true
    });
    ops
}

/// Drives `emit(kind, parts)` over every one-edit variant of `word` in the
/// fixed generation order. `kind` is 0..=3 for delete, transpose, replace,
/// insert. Stops as soon as `emit` returns false; returns whether it ran to
/// completion.
fn generate<'a>(
    word: &[&'a str],
    alphabet: &'a Alphabet,
    emit: &mut dyn FnMut(usize, &[&'a str]) -> bool,
) -> bool {
    let n = word.len();
    let mut buf: Vec<&str> = Vec::with_capacity(n + 1);
    for i in 0..n {
        buf.clear();
        buf.extend_from_slice(&word[..i]);
        buf.extend_from_slice(&word[i + 1..]);
        if !emit(0, &buf) {
            return false;
        }
    }
    for i in 0..n.saturating_sub(1) {
        buf.clear();
        buf.extend_from_slice(word);
        buf.swap(i, i + 1);
        if !emit(1, &buf) {
            return false;
        }
    }
    for i in 0..n {
        buf.clear();
        buf.extend_from_slice(word);
        for c in alphabet.letters() {
            buf[i] = c.as_str();
            if !emit(2, &buf) {
                return false;
            }
        }
    }
    for i in 0..=n {
        buf.clear();
        buf.extend_from_slice(&word[..i]);
        buf.push("");
        buf.extend_from_slice(&word[i..]);
        for c in alphabet.letters() {
            buf[i] = c.as_str();
            if !emit(3, &buf) {
                return false;
            }
        }
    }
    true
}

/// Adds the one-edit variants of `word` to `out` until `cap` is reached.
/// Variants that would not read back as the same letters are skipped.
fn extend_edits1(word: &[&str], alphabet: &Alphabet, out: &mut IndexSet<String>, cap: usize) -> bool {
    if out.len() >= cap {
        return false;
    }
    generate(word, alphabet, &mut |_, parts| {
        if joins_cleanly(parts) {
            out.insert(parts.concat());
        }
        out.len() < cap
    })
}

pub fn edits1(word: &Word, alphabet: &Alphabet, limit: Limit) -> Result<EditCandidateSet> {
    edits_n(word, alphabet, 1, limit)
}

/// Candidates `nedits` edits away: edits1 applied to every member of the
/// previous level. Every level honours the cap.
pub fn edits_n(word: &Word, alphabet: &Alphabet, nedits: usize, limit: Limit) -> Result<EditCandidateSet> {
    if nedits < 1 {
        return Err(Error::EditDistanceTooSmall(nedits));
    }
    if word.is_empty() {
        return Err(Error::EmptyWord);
    }
    let cap = limit.unwrap_or(usize::MAX);
    let source: Vec<&str> = word.iter().map(|l| l.as_str()).collect();
    let mut level = IndexSet::new();
    extend_edits1(&source, alphabet, &mut level, cap);
    for _ in 1..nedits {
        let mut next = IndexSet::new();
        for cand in &level {
            let letters = tokenize(cand);
            let letters: Vec<&str> = letters.iter().map(|t| t.text.as_str()).collect();
            if !extend_edits1(&letters, alphabet, &mut next, cap) {
                break;
            }
        }
        level = next;
    }
    Ok(EditCandidateSet { candidates: level, edit_distance: nedits, limit })
}

/// Lexicon words among `edits1(word)`, found by walking the trie instead of
/// materializing every replacement and insertion.
fn lexicon_edits1(word: &[&str], alphabet: &Alphabet, lex: &dyn WordStore, found: &mut IndexSet<String>) {
    let n = word.len();
    let mut buf: Vec<&str> = Vec::with_capacity(n + 1);
    let check = |parts: &[&str], found: &mut IndexSet<String>| {
        if joins_cleanly(parts) && lex.contains_letters(parts) {
            found.insert(parts.concat());
        }
    };
    for i in 0..n {
        buf.clear();
        buf.extend_from_slice(&word[..i]);
        buf.extend_from_slice(&word[i + 1..]);
        check(&buf, found);
    }
    for i in 0..n.saturating_sub(1) {
        buf.clear();
        buf.extend_from_slice(word);
        buf.swap(i, i + 1);
        check(&buf, found);
    }
    for i in 0..=n {
        let prefix = &word[..i];
        if !lex.prefix_exists(prefix) {
            break;
        }
        let mut next = Vec::new();
        lex.for_each_next_letter(prefix, &mut |c| {
            if alphabet.contains(c) {
                next.push(c.to_string());
            }
        });
        let mut parts: Vec<&str> = Vec::with_capacity(n + 1);
        for c in &next {
            if i < n {
                parts.clear();
                parts.extend_from_slice(prefix);
                parts.push(c);
                parts.extend_from_slice(&word[i + 1..]);
                check(&parts, found);
            }
            parts.clear();
            parts.extend_from_slice(prefix);
            parts.push(c);
            parts.extend_from_slice(&word[i..]);
            check(&parts, found);
        }
    }
}

/// Lexicon words within `nedits` edits of `word`, ranked by letter distance
/// then code point order. The source word itself is never returned.
///
/// With an unbounded limit the last edit level is searched through the trie,
/// which yields the same set as filtering [`edits_n`] but without generating
/// the full final level.
pub fn suggest(
    word: &Word,
    lex: &dyn WordStore,
    alphabet: &Alphabet,
    nedits: usize,
    limit: Limit,
) -> Result<Vec<Suggestion>> {
    if nedits < 1 {
        return Err(Error::EditDistanceTooSmall(nedits));
    }
    if word.is_empty() || lex.word_count() == 0 {
        return Ok(Vec::new());
    }
    let source = word.text();
    let found: IndexSet<String> = match limit {
        Some(_) => edits_n(word, alphabet, nedits, limit)?
            .candidates
            .into_iter()
            .filter(|c| lex.is_word(c))
            .collect(),
        None => {
            let frontier = if nedits == 1 {
                IndexSet::from([source.clone()])
            } else {
                edits_n(word, alphabet, nedits - 1, None)?.candidates
            };
            let mut found = IndexSet::new();
            for cand in &frontier {
                let letters = tokenize(cand);
                let letters: Vec<&str> = letters.iter().map(|t| t.text.as_str()).collect();
                lexicon_edits1(&letters, alphabet, lex, &mut found);
            }
            found
        }
    };
    let src: Vec<&str> = word.iter().map(|l| l.as_str()).collect();
    let mut out: Vec<Suggestion> = found
        .into_iter()
        .filter(|c| *c != source)
        .map(|c| {
            let letters = tokenize(&c);
            let letters: Vec<&str> = letters.iter().map(|t| t.text.as_str()).collect();
            let score = damerau_levenshtein(&src, &letters) as u32;
            Suggestion::new(c, Strategy::Edit, score)
        })
        .collect();
    out.sort_by(|a, b| (a.score, &a.candidate).cmp(&(b.score, &b.candidate)));
    Ok(out)
}
