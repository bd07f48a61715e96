//! Letter-level Damerau-Levenshtein distance.

use std::collections::HashMap;
use std::hash::Hash;

/// Unrestricted Damerau-Levenshtein distance (insert, delete, substitute,
/// adjacent transposition) using the Lowrance-Wagner recurrence.
pub fn damerau_levenshtein<T: Eq + Hash>(a: &[T], b: &[T]) -> usize {
    let (n, m) = (a.len(), b.len());
    let inf = n + m;
    let width = m + 2;
    let mut h = vec![0usize; (n + 2) * width];
    let at = |i: usize, j: usize| i * width + j;
    h[at(0, 0)] = inf;
    for i in 0..=n {
        h[at(i + 1, 0)] = inf;
        h[at(i + 1, 1)] = i;
    }
    for j in 0..=m {
        h[at(0, j + 1)] = inf;
        h[at(1, j + 1)] = j;
    }
    let mut last_row: HashMap<&T, usize> = HashMap::new();
    for i in 1..=n {
        let mut last_col = 0;
        for j in 1..=m {
            let i1 = last_row.get(&b[j - 1]).copied().unwrap_or(0);
            let j1 = last_col;
            let cost = if a[i - 1] == b[j - 1] {
                last_col = j;
                0
            } else {
                1
            };
            let v = (h[at(i, j)] + cost)
                .min(h[at(i + 1, j)] + 1)
                .min(h[at(i, j + 1)] + 1)
                .min(h[at(i1, j1)] + (i - i1 - 1) + 1 + (j - j1 - 1));
            h[at(i + 1, j + 1)] = v;
        }
        last_row.insert(&a[i - 1], i);
    }
    h[at(n + 1, m + 1)]
}

/// Distance between two strings measured in Tamil letters.
pub fn letter_distance(a: &str, b: &str) -> usize {
    let seg = |s: &str| -> Vec<String> {
        crate::letters::tokenize(s).into_iter().map(|t| t.text).collect()
    };
    damerau_levenshtein(&seg(a), &seg(b))
}
