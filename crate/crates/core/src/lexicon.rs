//! Letter-keyed trie word list.

use std::collections::BTreeMap;
use std::io::BufRead;

use crate::error::{Error, Result};
use crate::letters::{normalize, tokenize, Letter};

/// Membership and prefix queries over a word list.
///
/// Keys are letter texts (grapheme clusters), not code points. The in-memory
/// [`Lexicon`] is the only implementation shipped; the trait is the seam for
/// other stores.
pub trait WordStore: Send + Sync {
    /// Membership of a whole word, after NFC normalization. Empty is never a word.
    fn is_word(&self, word: &str) -> bool;

    /// Membership of an already segmented word.
    fn contains_letters(&self, letters: &[&str]) -> bool;

    /// True iff some stored word starts with `prefix` (letter-wise).
    fn prefix_exists(&self, prefix: &[&str]) -> bool;

    /// Calls `visit` with every letter that extends `prefix` toward some word.
    fn for_each_next_letter(&self, prefix: &[&str], visit: &mut dyn FnMut(&str));

    fn word_count(&self) -> usize;
}

#[derive(Debug, Default, Clone)]
struct Node {
    terminal: bool,
    children: BTreeMap<Box<str>, Node>,
}

#[derive(Debug, Default, Clone)]
pub struct Lexicon {
    root: Node,
    word_count: usize,
}

fn segment(word: &str) -> Vec<String> {
    tokenize(&normalize(word)).into_iter().map(|t| t.text).collect()
}

impl Lexicon {
    pub fn new() -> Self {
        Self::default()
    }

    /// Read a UTF-8 word list: one word per line, `#` comments and blank
    /// lines ignored.
    pub fn load_wordlist<R: BufRead>(source: R) -> Result<Self> {
        let mut lex = Lexicon::new();
        lex.extend_from_reader(source)?;
        Ok(lex)
    }

    pub fn extend_from_reader<R: BufRead>(&mut self, source: R) -> Result<()> {
        for (idx, line) in source.split(b'\n').enumerate() {
            let line = line?;
            let line = String::from_utf8(line)
                .map_err(|e| Error::parse(idx + 1, format!("invalid UTF-8: {e}")))?;
            let word = line.trim_start_matches('\u{FEFF}').trim();
            if word.is_empty() || word.starts_with('#') {
                continue;
            }
            self.add_word(word);
        }
        Ok(())
    }

    /// Insert a word; returns false if it was already present or empty.
    pub fn add_word(&mut self, word: &str) -> bool {
        let keys = segment(word.trim());
        if keys.is_empty() {
            return false;
        }
        let mut node = &mut self.root;
        for key in keys {
            node = node.children.entry(key.into_boxed_str()).or_default();
        }
        if node.terminal {
            return false;
        }
        node.terminal = true;
        self.word_count += 1;
        true
    }

    pub fn len(&self) -> usize {
        self.word_count
    }

    pub fn is_empty(&self) -> bool {
        self.word_count == 0
    }

    fn find<S: AsRef<str>>(&self, letters: &[S]) -> Option<&Node> {
        letters
            .iter()
            .try_fold(&self.root, |node, l| node.children.get(l.as_ref()))
    }

    /// Letter-prefix query taking parsed letters.
    pub fn has_prefix(&self, prefix: &[Letter]) -> bool {
        self.find(prefix).is_some_and(|_| self.word_count > 0)
    }

    /// All stored words in trie order.
    pub fn words(&self) -> Vec<String> {
        fn walk(node: &Node, buf: &mut String, out: &mut Vec<String>) {
            if node.terminal {
                out.push(buf.clone());
            }
            for (k, child) in &node.children {
                let len = buf.len();
                buf.push_str(k);
                walk(child, buf, out);
                buf.truncate(len);
            }
        }
        let mut out = Vec::with_capacity(self.word_count);
        walk(&self.root, &mut String::new(), &mut out);
        out
    }
}

impl WordStore for Lexicon {
    fn is_word(&self, word: &str) -> bool {
        let keys = segment(word);
        !keys.is_empty() && self.find(&keys).is_some_and(|n| n.terminal)
    }

    fn contains_letters(&self, letters: &[&str]) -> bool {
        !letters.is_empty() && self.find(letters).is_some_and(|n| n.terminal)
    }

    fn prefix_exists(&self, prefix: &[&str]) -> bool {
        // the root only counts as a prefix when something hangs off it
        self.word_count > 0 && self.find(prefix).is_some()
    }

    fn for_each_next_letter(&self, prefix: &[&str], visit: &mut dyn FnMut(&str)) {
        if let Some(node) = self.find(prefix) {
            for key in node.children.keys() {
                visit(key);
            }
        }
    }

    fn word_count(&self) -> usize {
        self.word_count
    }
}

impl<S: AsRef<str>> FromIterator<S> for Lexicon {
    fn from_iter<I: IntoIterator<Item = S>>(iter: I) -> Self {
        let mut lex = Lexicon::new();
        for w in iter {
            lex.add_word(w.as_ref());
        }
        lex
    }
}
