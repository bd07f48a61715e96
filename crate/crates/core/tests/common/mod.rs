//! Test-side reference implementations, written independently of the library.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};
use std::path::PathBuf;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tamil_spell_core::letters::joins_cleanly;
use tamil_spell_core::{Alphabet, Lexicon};

pub fn data_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

pub fn fixture_lexicon() -> Lexicon {
    let file = std::fs::File::open(data_path("fixture_lexicon.txt")).unwrap();
    Lexicon::load_wordlist(std::io::BufReader::new(file)).unwrap()
}

pub fn fixture_words() -> Vec<String> {
    std::fs::read_to_string(data_path("fixture_lexicon.txt"))
        .unwrap()
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(str::to_string)
        .collect()
}

/// Textbook Lowrance–Wagner distance over symbol indices. Inputs are short
/// (at most `MAX_LEN` symbols) and the alphabet at most `MAX_ALPHABET`.
pub fn dl_oracle(a: &[usize], b: &[usize], alphabet_size: usize) -> usize {
    const MAX_LEN: usize = 10;
    const MAX_ALPHABET: usize = 16;
    assert!(a.len() <= MAX_LEN && b.len() <= MAX_LEN && alphabet_size <= MAX_ALPHABET);
    let (n, m) = (a.len(), b.len());
    let inf = n + m;
    let mut d = [[0usize; MAX_LEN + 2]; MAX_LEN + 2];
    d[0][0] = inf;
    for i in 0..=n {
        d[i + 1][0] = inf;
        d[i + 1][1] = i;
    }
    for j in 0..=m {
        d[0][j + 1] = inf;
        d[1][j + 1] = j;
    }
    let mut last_row = [0usize; MAX_ALPHABET];
    for i in 1..=n {
        let mut last_col = 0;
        for j in 1..=m {
            let i1 = last_row[b[j - 1]];
            let j1 = last_col;
            let cost = if a[i - 1] == b[j - 1] {
                last_col = j;
                0
            } else {
                1
            };
            d[i + 1][j + 1] = (d[i][j] + cost)
                .min(d[i + 1][j] + 1)
                .min(d[i][j + 1] + 1)
                .min(d[i1][j1] + (i - i1 - 1) + 1 + (j - j1 - 1));
        }
        last_row[a[i - 1]] = i;
    }
    d[n + 1][m + 1]
}

/// Every string over `0..alphabet_size` of length `min_len..=max_len`.
pub fn all_strings(alphabet_size: usize, min_len: usize, max_len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut level: Vec<Vec<usize>> = vec![Vec::new()];
    for len in 0..=max_len {
        if len >= min_len {
            out.extend(level.iter().cloned());
        }
        level = level
            .iter()
            .flat_map(|s| {
                (0..alphabet_size).map(move |c| {
                    let mut t = s.clone();
                    t.push(c);
                    t
                })
            })
            .collect();
    }
    out
}

/// Brute-force neighbourhood: the members of `pool` (all strings over the
/// alphabet up to some length) within `d` edits of `word`.
pub fn edit_ball_oracle(word: &[usize], pool: &[Vec<usize>], alphabet_size: usize, d: usize) -> BTreeSet<Vec<usize>> {
    let lengths = word.len().saturating_sub(d)..=word.len() + d;
    pool.iter()
        .filter(|s| lengths.contains(&s.len()) && dl_oracle(word, s, alphabet_size) <= d)
        .cloned()
        .collect()
}

/// Brute-force substitution lattice: every same-length word differing from
/// `word` at 1..=ed positions where each differing letter is a neighbour of
/// the original letter there.
pub fn lattice_oracle(word: &[&str], cm: &HashMap<String, Vec<String>>, ed: usize) -> BTreeSet<String> {
    let choices: Vec<Vec<&str>> = word
        .iter()
        .map(|l| {
            let mut c = vec![*l];
            if let Some(ns) = cm.get(*l) {
                c.extend(ns.iter().map(String::as_str));
            }
            c
        })
        .collect();
    let mut out = BTreeSet::new();
    let mut idx = vec![0usize; word.len()];
    loop {
        let changed = idx.iter().filter(|&&i| i != 0).count();
        let letters: Vec<&str> = idx.iter().zip(&choices).map(|(&i, c)| c[i]).collect();
        let text: String = letters.concat();
        if (1..=ed).contains(&changed) && text != word.concat() && joins_cleanly(&letters) {
            out.insert(text);
        }
        let mut pos = 0;
        loop {
            if pos == word.len() {
                return out;
            }
            idx[pos] += 1;
            if idx[pos] < choices[pos].len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

/// A random word of `1..=max_len` letters that reads back as the same letters.
pub fn random_word(rng: &mut ChaCha8Rng, alphabet: &Alphabet, max_len: usize) -> Vec<String> {
    loop {
        let len = rng.random_range(1..=max_len);
        let letters: Vec<String> = (0..len)
            .map(|_| alphabet.letters()[rng.random_range(0..alphabet.len())].as_str().to_string())
            .collect();
        if joins_cleanly(&letters) {
            return letters;
        }
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Deterministic document of exactly `tokens` words: mostly lexicon words,
/// some misspellings drawn from a fixed pool, some English and numbers.
pub fn fixture_document(tokens: usize, seed: u64) -> String {
    let words = fixture_words();
    let mut rng = rng(seed);
    let swaps = [("ழ", "ள"), ("ள", "ல"), ("ல", "ழ"), ("ன", "ண"), ("ண", "ந"), ("ர", "ற"), ("ற", "ர")];
    let mut pool: Vec<String> = vec!["பளம்".into(), "தென்றல்காற்று".into(), "மரமடி".into()];
    while pool.len() < 40 {
        let w = &words[rng.random_range(0..words.len())];
        let (from, to) = swaps[rng.random_range(0..swaps.len())];
        let bad = w.replacen(from, to, 1);
        if bad != *w && !words.contains(&bad) && !pool.contains(&bad) {
            pool.push(bad);
        }
    }
    let foreign = ["computer", "the", "2024", "email", "ok"];
    let mut out = String::new();
    for i in 0..tokens {
        if i > 0 {
            out.push_str(if i % 13 == 0 { ".\n" } else { " " });
        }
        let roll = rng.random_range(0..100);
        let token = if roll < 80 {
            &words[rng.random_range(0..words.len())]
        } else if roll < 95 {
            &pool[rng.random_range(0..pool.len())]
        } else {
            foreign[rng.random_range(0..foreign.len())]
        };
        out.push_str(token);
    }
    out
}
