//! Tamil script model.
//!
//! Everything above this module works on *letters* (grapheme clusters such as
//! `கா` or `ன்`), never on raw code points. This module screens code points,
//! segments text into letters, and decomposes uyirmei letters into their mei
//! and uyir parts.

use std::collections::HashSet;
use std::fmt;

use unicode_normalization::UnicodeNormalization;

use crate::error::{Error, Result};

/// Lowest code point accepted by [`is_tamil_codepoint`] (U+0B82).
pub const TAMIL_FIRST: u32 = 2946;
/// Highest code point accepted by [`is_tamil_codepoint`] (U+0BFA).
pub const TAMIL_LAST: u32 = 3066;

pub const AYUDHAM: char = '\u{0B83}';
pub const PULLI: char = '\u{0BCD}';

/// Independent vowels, paired with the vowel sign they take after a
/// consonant. அ has no sign (implicit vowel).
pub const UYIR: [(char, Option<char>); 12] = [
    ('அ', None),
    ('ஆ', Some('\u{0BBE}')),
    ('இ', Some('\u{0BBF}')),
    ('ஈ', Some('\u{0BC0}')),
    ('உ', Some('\u{0BC1}')),
    ('ஊ', Some('\u{0BC2}')),
    ('எ', Some('\u{0BC6}')),
    ('ஏ', Some('\u{0BC7}')),
    ('ஐ', Some('\u{0BC8}')),
    ('ஒ', Some('\u{0BCA}')),
    ('ஓ', Some('\u{0BCB}')),
    ('ஔ', Some('\u{0BCC}')),
];

/// The 18 native consonants in traditional order.
pub const CONSONANTS: [&str; 18] = [
    "க", "ங", "ச", "ஞ", "ட", "ண", "த", "ந", "ப", "ம", "ய", "ர", "ல", "வ", "ழ", "ள", "ற", "ன",
];

/// Grantha consonants. க்ஷ is a conjunct (க + pulli + ஷ) treated as one base.
pub const GRANTHA_CONSONANTS: [&str; 6] = ["ஜ", "ஷ", "ஸ", "ஹ", "க்ஷ", "ஶ"];

/// Grantha consonants whose pure (pulli) form is part of the 323-letter table.
/// The remaining two (க்ஷ், ஶ்) contribute uyirmei forms only, which is what
/// makes the extended table come to 247 + 72 + 4 = 323.
const GRANTHA_MEI_IN_TABLE: [&str; 4] = ["ஜ", "ஷ", "ஸ", "ஹ"];

const KSSA: &str = "க்ஷ";

/// The fast screening predicate: true iff `ch` lies in U+0B82..=U+0BFA.
#[inline]
pub fn is_tamil_codepoint(ch: char) -> bool {
    let cp = ch as u32;
    (TAMIL_FIRST..=TAMIL_LAST).contains(&cp)
}

/// True if the string contains at least one code point in the Tamil block.
pub fn contains_tamil(text: &str) -> bool {
    text.chars().any(is_tamil_codepoint)
}

/// NFC-normalize. Callers at the library boundary run this before tokenizing.
pub fn normalize(text: &str) -> String {
    text.nfc().collect()
}

fn is_consonant_char(ch: char) -> bool {
    matches!(ch,
        '\u{0B95}' | '\u{0B99}' | '\u{0B9A}' | '\u{0B9C}' | '\u{0B9E}' | '\u{0B9F}'
        | '\u{0BA3}' | '\u{0BA4}' | '\u{0BA8}' | '\u{0BA9}' | '\u{0BAA}' | '\u{0BAE}'
        | '\u{0BAF}'..='\u{0BB9}')
}

fn is_vowel_sign(ch: char) -> bool {
    UYIR.iter().any(|(_, sign)| *sign == Some(ch))
}

fn is_uyir_char(ch: char) -> bool {
    UYIR.iter().any(|(v, _)| *v == ch)
}

/// Combining marks of the Tamil block that cannot start a cluster.
fn is_combining_mark(ch: char) -> bool {
    matches!(ch, '\u{0B82}' | '\u{0BBE}'..='\u{0BCD}' | '\u{0BD7}')
}

fn sign_for_uyir(uyir: char) -> Option<Option<char>> {
    UYIR.iter().find(|(v, _)| *v == uyir).map(|(_, s)| *s)
}

fn uyir_for_sign(sign: Option<char>) -> Option<char> {
    UYIR.iter().find(|(_, s)| *s == sign).map(|(v, _)| *v)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub enum LetterKind {
    Uyir,
    Ayudham,
    Mei,
    UyirMei,
}

/// One Tamil letter (grapheme cluster).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    text: Box<str>,
    kind: LetterKind,
}

impl Letter {
    /// Parse a string holding exactly one Tamil letter.
    pub fn parse(text: &str) -> Result<Letter> {
        let text = normalize(text);
        let mut tokens = tokenize(&text).into_iter();
        match (tokens.next(), tokens.next()) {
            (Some(Token { kind: TokenKind::Letter(kind), text }), None) => Ok(Letter {
                text: text.into_boxed_str(),
                kind,
            }),
            _ => Err(Error::NotALetter(text)),
        }
    }

    pub fn as_str(&self) -> &str {
        &self.text
    }

    pub fn kind(&self) -> LetterKind {
        self.kind
    }

    pub fn is_uyirmei(&self) -> bool {
        self.kind == LetterKind::UyirMei
    }

    /// Base consonant of a Mei or UyirMei letter (`கா` → `க`).
    pub fn consonant(&self) -> Option<&str> {
        match self.kind {
            LetterKind::Mei => Some(&self.text[..self.text.len() - PULLI.len_utf8()]),
            LetterKind::UyirMei => {
                let last = self.text.chars().next_back()?;
                if is_vowel_sign(last) {
                    Some(&self.text[..self.text.len() - last.len_utf8()])
                } else {
                    Some(&self.text)
                }
            }
            _ => None,
        }
    }

    /// Decompose into (mei, uyir) for uyirmei letters; any other letter is
    /// returned whole.
    pub fn split(&self) -> MeiUyir {
        if self.kind != LetterKind::UyirMei {
            return MeiUyir::Single(self.clone());
        }
        let base = self.consonant().expect("uyirmei has a consonant");
        let sign = self.text[base.len()..].chars().next();
        let uyir = uyir_for_sign(sign).expect("vowel sign maps to an uyir");
        MeiUyir::Pair {
            mei: Letter::mei_of(base),
            uyir: Letter::uyir_of(uyir),
        }
    }

    pub(crate) fn mei_of(base: &str) -> Letter {
        let mut text = String::with_capacity(base.len() + 3);
        text.push_str(base);
        text.push(PULLI);
        Letter { text: text.into_boxed_str(), kind: LetterKind::Mei }
    }

    fn uyir_of(ch: char) -> Letter {
        Letter { text: ch.to_string().into_boxed_str(), kind: LetterKind::Uyir }
    }

    pub(crate) fn uyirmei_of(base: &str, uyir: char) -> Letter {
        let mut text = String::from(base);
        if let Some(Some(sign)) = sign_for_uyir(uyir) {
            text.push(sign);
        }
        Letter { text: text.into_boxed_str(), kind: LetterKind::UyirMei }
    }
}

impl AsRef<str> for Letter {
    fn as_ref(&self) -> &str {
        &self.text
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text)
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}({})", self.kind, self.text)
    }
}

/// Result of [`split_mei_uyir`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MeiUyir {
    Pair { mei: Letter, uyir: Letter },
    Single(Letter),
}

/// Split one letter given as text. Errors if `text` is not exactly one letter.
pub fn split_mei_uyir(text: &str) -> Result<MeiUyir> {
    Ok(Letter::parse(text)?.split())
}

/// Compose a mei and an uyir into the corresponding uyirmei letter.
pub fn join_mei_uyir(mei: &Letter, uyir: &Letter) -> Result<Letter> {
    if mei.kind != LetterKind::Mei {
        return Err(Error::ExpectedMei(mei.to_string()));
    }
    if uyir.kind != LetterKind::Uyir {
        return Err(Error::ExpectedUyir(uyir.to_string()));
    }
    let base = mei.consonant().expect("mei has a consonant");
    let vowel = uyir.text.chars().next().expect("uyir is one code point");
    Ok(Letter::uyirmei_of(base, vowel))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TokenKind {
    Letter(LetterKind),
    /// Any code point that is not part of a Tamil letter.
    Other,
    /// A vowel sign or pulli with no consonant to attach to.
    Malformed,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub text: String,
    pub kind: TokenKind,
}

impl Token {
    pub fn is_letter(&self) -> bool {
        matches!(self.kind, TokenKind::Letter(_))
    }
}

/// Greedy cluster segmentation. Concatenating the token texts gives back the
/// input exactly. Expects NFC input (see [`normalize`]).
pub fn tokenize(text: &str) -> Vec<Token> {
    let mut tokens = Vec::new();
    let mut rest = text;
    while let Some(ch) = rest.chars().next() {
        let (len, kind) = if is_consonant_char(ch) {
            let mut len = ch.len_utf8();
            // க + pulli + ஷ is the க்ஷ conjunct
            if rest.starts_with(KSSA) {
                len = KSSA.len();
            }
            match rest[len..].chars().next() {
                Some(PULLI) => (len + PULLI.len_utf8(), TokenKind::Letter(LetterKind::Mei)),
                Some(s) if is_vowel_sign(s) => {
                    (len + s.len_utf8(), TokenKind::Letter(LetterKind::UyirMei))
                }
                _ => (len, TokenKind::Letter(LetterKind::UyirMei)),
            }
        } else if is_uyir_char(ch) {
            (ch.len_utf8(), TokenKind::Letter(LetterKind::Uyir))
        } else if ch == AYUDHAM {
            (ch.len_utf8(), TokenKind::Letter(LetterKind::Ayudham))
        } else if is_combining_mark(ch) {
            (ch.len_utf8(), TokenKind::Malformed)
        } else {
            (ch.len_utf8(), TokenKind::Other)
        };
        tokens.push(Token { text: rest[..len].to_string(), kind });
        rest = &rest[len..];
    }
    tokens
}

/// True when writing `next` right after `prev` would re-segment into a
/// different letter (க் followed by ஷ reads back as the க்ஷ conjunct).
pub fn fuses(prev: &str, next: &str) -> bool {
    prev == "க்" && next.starts_with('ஷ')
}

/// True if the letter sequence reads back as the same letters once joined.
pub fn joins_cleanly<S: AsRef<str>>(letters: &[S]) -> bool {
    letters.windows(2).all(|w| !fuses(w[0].as_ref(), w[1].as_ref()))
}

/// A word as a sequence of letters.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    /// Normalize and segment `text`; fails if any cluster is not a Tamil letter.
    pub fn parse(text: &str) -> Result<Word> {
        let text = normalize(text);
        tokenize(&text)
            .into_iter()
            .map(|t| match t.kind {
                TokenKind::Letter(kind) => Ok(Letter { text: t.text.into_boxed_str(), kind }),
                _ => Err(Error::NotAWord(text.clone())),
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }

    pub fn from_letters(letters: Vec<Letter>) -> Word {
        Word(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn text(&self) -> String {
        self.0.iter().map(Letter::as_str).collect()
    }
}

impl std::ops::Deref for Word {
    type Target = [Letter];

    fn deref(&self) -> &[Letter] {
        &self.0
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            f.write_str(l.as_str())?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

/// An ordered letter set used as the replacement/insertion pool for edit
/// search.
#[derive(Debug, Clone)]
pub struct Alphabet {
    letters: Vec<Letter>,
    members: HashSet<Box<str>>,
    includes_grantha: bool,
}

impl Alphabet {
    /// The 247-letter table: 12 uyir, ayudham, 18 mei, 216 uyirmei.
    pub fn tamil() -> Alphabet {
        Self::build(false)
    }

    /// The 323-letter table: adds 72 Grantha uyirmei and 4 Grantha mei.
    pub fn with_grantha() -> Alphabet {
        Self::build(true)
    }

    pub fn new(includes_grantha: bool) -> Alphabet {
        Self::build(includes_grantha)
    }

    fn build(grantha: bool) -> Alphabet {
        let mut letters = Vec::with_capacity(if grantha { 323 } else { 247 });
        letters.extend(UYIR.iter().map(|(v, _)| Letter::uyir_of(*v)));
        letters.push(Letter { text: AYUDHAM.to_string().into_boxed_str(), kind: LetterKind::Ayudham });
        letters.extend(CONSONANTS.iter().map(|c| Letter::mei_of(c)));
        if grantha {
            letters.extend(GRANTHA_MEI_IN_TABLE.iter().map(|c| Letter::mei_of(c)));
        }
        let bases: Vec<&str> = if grantha {
            CONSONANTS.iter().chain(GRANTHA_CONSONANTS.iter()).copied().collect()
        } else {
            CONSONANTS.to_vec()
        };
        for base in bases {
            letters.extend(UYIR.iter().map(|(v, _)| Letter::uyirmei_of(base, *v)));
        }
        let mut alphabet = Alphabet::from_letters(letters);
        alphabet.includes_grantha = grantha;
        alphabet
    }

    /// An arbitrary alphabet; duplicates are dropped keeping first occurrence.
    pub fn from_letters(letters: impl IntoIterator<Item = Letter>) -> Alphabet {
        let mut members = HashSet::new();
        let letters: Vec<Letter> = letters
            .into_iter()
            .filter(|l| members.insert(l.text.clone()))
            .collect();
        Alphabet { letters, members, includes_grantha: false }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn contains(&self, letter: &str) -> bool {
        self.members.contains(letter)
    }

    pub fn includes_grantha(&self) -> bool {
        self.includes_grantha
    }
}
