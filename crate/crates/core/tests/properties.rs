mod common;

use std::collections::{BTreeSet, HashSet};

use proptest::prelude::*;
use tamil_spell_core::conjoined::{generate_ottru_splits, generate_plain_splits};
use tamil_spell_core::distance::damerau_levenshtein;
use tamil_spell_core::edit::{edits1, edits_n, suggest};
use tamil_spell_core::keyboard::generate_patterns;
use tamil_spell_core::letters::{join_mei_uyir, joins_cleanly, normalize, tokenize};
use tamil_spell_core::mayangoli::{find_letter_positions, generate_alternates};
use tamil_spell_core::{
    Alphabet, ConfusionMatrix, Letter, Lexicon, MayangoliTable, MeiUyir, TokenKind, Word, WordStore,
};

use common::dl_oracle;

fn grantha() -> &'static Alphabet {
    static A: std::sync::OnceLock<Alphabet> = std::sync::OnceLock::new();
    A.get_or_init(Alphabet::with_grantha)
}

fn letter() -> impl Strategy<Value = String> {
    (0..323usize).prop_map(|i| grantha().letters()[i].as_str().to_string())
}

/// A letter sequence that reads back as itself.
fn word(max: usize) -> impl Strategy<Value = Vec<String>> {
    prop::collection::vec(letter(), 1..=max).prop_filter("fuses", |w| joins_cleanly(w))
}

fn small_alphabet() -> Vec<&'static str> {
    vec!["க", "கா", "ம்", "அ", "ழ", "ள"]
}

fn small_word(max: usize) -> impl Strategy<Value = Vec<&'static str>> {
    prop::collection::vec(prop::sample::select(small_alphabet()), 1..=max)
}

fn mixed_text() -> impl Strategy<Value = String> {
    let pieces = prop::sample::select(vec![
        "க", "ா", "்", "ி", "ஷ", "அ", "ஃ", "ொ", "a", " ", "1", "௧", "\u{0B92}\u{0BD7}", "ே", "ௗ", ".",
    ]);
    prop::collection::vec(pieces, 0..20).prop_map(|v| v.concat())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn tokenize_partitions_input(text in mixed_text()) {
        let norm = normalize(&text);
        let tokens = tokenize(&norm);
        let joined: String = tokens.iter().map(|t| t.text.as_str()).collect();
        prop_assert_eq!(&joined, &norm);
        for t in &tokens {
            prop_assert!(!t.text.is_empty());
            if let TokenKind::Letter(kind) = t.kind {
                prop_assert_eq!(Letter::parse(&t.text).unwrap().kind(), kind);
            }
        }
    }

    #[test]
    fn words_segment_back(w in word(8)) {
        let parsed = Word::parse(&w.concat()).unwrap();
        let got: Vec<&str> = parsed.iter().map(Letter::as_str).collect();
        prop_assert_eq!(got, w.iter().map(String::as_str).collect::<Vec<_>>());
    }

    #[test]
    fn split_join_round_trip(l in letter()) {
        let l = Letter::parse(&l).unwrap();
        match l.split() {
            MeiUyir::Pair { mei, uyir } => prop_assert_eq!(join_mei_uyir(&mei, &uyir).unwrap(), l),
            MeiUyir::Single(same) => prop_assert_eq!(same, l),
        }
    }

    #[test]
    fn lexicon_matches_set(
        words in prop::collection::vec(word(4), 0..30),
        probes in prop::collection::vec(word(4), 0..30),
    ) {
        let lex: Lexicon = words.iter().map(|w| w.concat()).collect();
        let set: HashSet<String> = words.iter().map(|w| w.concat()).collect();
        prop_assert_eq!(lex.len(), set.len());
        for p in probes.iter().chain(&words) {
            let text = p.concat();
            prop_assert_eq!(lex.is_word(&text), set.contains(&text));
            let refs: Vec<&str> = p.iter().map(String::as_str).collect();
            for k in 0..=refs.len() {
                let expect = words.iter().any(|w| w.len() >= k && w[..k] == p[..k]);
                prop_assert_eq!(lex.prefix_exists(&refs[..k]), expect);
            }
        }
    }

    #[test]
    fn splits_reconstruct(w in word(8)) {
        let parsed = Word::parse(&w.concat()).unwrap();
        let text = w.concat();
        let plain = generate_plain_splits(&parsed);
        prop_assert_eq!(plain.len(), w.len() - 1);
        for p in plain.iter().chain(&generate_ottru_splits(&parsed)) {
            prop_assert_eq!(p.rejoin(), Some(text.clone()));
        }
    }

    #[test]
    fn library_distance_matches_oracle(a in small_word(6), b in small_word(6)) {
        let alpha = small_alphabet();
        let idx = |w: &[&str]| -> Vec<usize> { w.iter().map(|l| alpha.iter().position(|x| x == l).unwrap()).collect() };
        prop_assert_eq!(damerau_levenshtein(&a, &b), dl_oracle(&idx(&a), &idx(&b), alpha.len()));
        prop_assert_eq!(damerau_levenshtein(&a, &b), damerau_levenshtein(&b, &a));
    }

    #[test]
    fn capped_edits1_is_prefix_of_uncapped(w in small_word(4), cap in 1usize..40) {
        let alphabet = Alphabet::from_letters(small_alphabet().into_iter().map(|s| Letter::parse(s).unwrap()));
        let word = Word::parse(&w.concat()).unwrap();
        let full = edits1(&word, &alphabet, None).unwrap();
        let capped = edits1(&word, &alphabet, Some(cap)).unwrap();
        prop_assert_eq!(capped.len(), cap.min(full.len()));
        let prefix: Vec<&String> = full.candidates.iter().take(cap).collect();
        prop_assert_eq!(capped.candidates.iter().collect::<Vec<_>>(), prefix);
        let two = edits_n(&word, &alphabet, 2, Some(cap)).unwrap();
        prop_assert!(two.len() <= cap);
    }

    #[test]
    fn trie_suggest_equals_filtered_edits(
        w in small_word(4),
        words in prop::collection::vec(small_word(5), 1..25),
        nedits in 1usize..=2,
    ) {
        let alphabet = Alphabet::from_letters(small_alphabet().into_iter().map(|s| Letter::parse(s).unwrap()));
        let lex: Lexicon = words.iter().map(|w| w.concat()).collect();
        let word = Word::parse(&w.concat()).unwrap();
        let got: BTreeSet<String> = suggest(&word, &lex, &alphabet, nedits, None)
            .unwrap()
            .into_iter()
            .map(|s| s.candidate)
            .collect();
        let want: BTreeSet<String> = edits_n(&word, &alphabet, nedits, None)
            .unwrap()
            .candidates
            .into_iter()
            .filter(|c| lex.is_word(c) && *c != w.concat())
            .collect();
        prop_assert_eq!(got, want);
    }

    #[test]
    fn mayangoli_product_count(w in word(6)) {
        let table = MayangoliTable::default();
        let parsed = Word::parse(&w.concat()).unwrap();
        let matches = find_letter_positions(&parsed, &table);
        let alts = generate_alternates(&parsed, &table);
        let expect = if matches.is_empty() {
            0
        } else {
            matches.iter().map(|m| table.series()[m.series_index].len()).product::<usize>() - 1
        };
        prop_assert_eq!(alts.len(), expect);
        let distinct: HashSet<&String> = alts.iter().collect();
        prop_assert_eq!(distinct.len(), alts.len());
        prop_assert!(!alts.contains(&w.concat()));
    }

    #[test]
    fn keyboard_patterns_are_neighbour_substitutions(w in word(5), ed in 1usize..=3) {
        let cm = ConfusionMatrix::tamil99();
        let ed = ed.min(w.len());
        let pats = generate_patterns(&w, &cm, ed).unwrap();
        let distinct: HashSet<&String> = pats.iter().collect();
        prop_assert_eq!(distinct.len(), pats.len());
        for p in &pats {
            prop_assert_ne!(p, &w.concat());
            let letters: Vec<String> = tokenize(p).into_iter().map(|t| t.text).collect();
            prop_assert_eq!(letters.len(), w.len());
            let diffs: Vec<usize> = (0..w.len()).filter(|&i| letters[i] != w[i]).collect();
            prop_assert!((1..=ed).contains(&diffs.len()));
            for i in diffs {
                prop_assert!(cm.neighbors(&w[i]).contains(&letters[i]));
            }
        }
    }
}
