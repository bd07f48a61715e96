//! Python bindings: `import tamil_spell`.

use std::collections::HashMap;
use std::fs::File;
use std::io::BufReader;
use std::path::PathBuf;

use pyo3::exceptions::{PyIOError, PyValueError};
use pyo3::prelude::*;
use tamil_spell_core::checker::TokenReport as CoreTokenReport;
use tamil_spell_core::{
    conjoined, distance, edit, keyboard, letters, mayangoli, Alphabet, ConfusionMatrix, EngineConfig,
    ForeignDictionary, LetterKind, MeiUyir, MayangoliTable, TokenKind, WordStore,
};

fn py_err(e: tamil_spell_core::Error) -> PyErr {
    match e {
        tamil_spell_core::Error::Io(e) => PyIOError::new_err(e.to_string()),
        other => PyValueError::new_err(other.to_string()),
    }
}

fn open(path: &PathBuf) -> PyResult<BufReader<File>> {
    File::open(path)
        .map(BufReader::new)
        .map_err(|e| PyIOError::new_err(format!("{}: {e}", path.display())))
}

fn word(text: &str) -> PyResult<letters::Word> {
    letters::Word::parse(text).map_err(py_err)
}

fn kind_name(kind: LetterKind) -> &'static str {
    match kind {
        LetterKind::Uyir => "uyir",
        LetterKind::Ayudham => "ayudham",
        LetterKind::Mei => "mei",
        LetterKind::UyirMei => "uyirmei",
    }
}

#[pyclass(frozen, get_all, skip_from_py_object, module = "tamil_spell")]
#[derive(Clone)]
struct Suggestion {
    candidate: String,
    strategy: String,
    score: u32,
}

#[pymethods]
impl Suggestion {
    fn __repr__(&self) -> String {
        format!("Suggestion(candidate='{}', strategy='{}', score={})", self.candidate, self.strategy, self.score)
    }
}

impl From<&tamil_spell_core::Suggestion> for Suggestion {
    fn from(s: &tamil_spell_core::Suggestion) -> Self {
        Suggestion { candidate: s.candidate.clone(), strategy: s.strategy.name().to_string(), score: s.score }
    }
}

fn suggestions(list: &[tamil_spell_core::Suggestion]) -> Vec<Suggestion> {
    list.iter().map(Suggestion::from).collect()
}

fn verdict_name(v: tamil_spell_core::Verdict) -> &'static str {
    use tamil_spell_core::Verdict::*;
    match v {
        Valid => "valid",
        NonWord => "non_word",
        NonTamil => "non_tamil",
        Skipped => "skipped",
    }
}

#[pyclass(frozen, get_all, module = "tamil_spell")]
struct TokenReport {
    token: String,
    verdict: String,
    suggestions: Vec<Suggestion>,
}

#[pymethods]
impl TokenReport {
    fn __repr__(&self) -> String {
        format!("TokenReport(token='{}', verdict='{}', suggestions={})", self.token, self.verdict, self.suggestions.len())
    }
}

impl From<CoreTokenReport> for TokenReport {
    fn from(t: CoreTokenReport) -> Self {
        TokenReport {
            token: t.token,
            verdict: verdict_name(t.verdict).to_string(),
            suggestions: suggestions(&t.suggestions),
        }
    }
}

/// A word list. Build from an iterable of words or load a file.
#[pyclass(skip_from_py_object, module = "tamil_spell")]
#[derive(Clone)]
struct Lexicon {
    inner: tamil_spell_core::Lexicon,
}

#[pymethods]
impl Lexicon {
    #[new]
    #[pyo3(signature = (words = Vec::new()))]
    fn new(words: Vec<String>) -> Self {
        Lexicon { inner: words.iter().collect() }
    }

    #[staticmethod]
    fn load(path: PathBuf) -> PyResult<Self> {
        let inner = tamil_spell_core::Lexicon::load_wordlist(open(&path)?).map_err(py_err)?;
        Ok(Lexicon { inner })
    }

    fn add(&mut self, word: &str) -> bool {
        self.inner.add_word(word)
    }

    fn is_word(&self, word: &str) -> bool {
        self.inner.is_word(word)
    }

    fn has_prefix(&self, prefix: &str) -> PyResult<bool> {
        Ok(self.inner.has_prefix(&word(prefix)?))
    }

    fn words(&self) -> Vec<String> {
        self.inner.words()
    }

    fn __contains__(&self, word: &str) -> bool {
        self.inner.is_word(word)
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }
}

/// The spell checker. Suggestions from every strategy are merged and ranked.
#[pyclass(frozen, module = "tamil_spell")]
struct Engine {
    inner: tamil_spell_core::Engine,
}

#[pymethods]
impl Engine {
    #[new]
    #[pyo3(signature = (
        lexicon, *, edit_distance = 2, limit = None, max_suggestions = 10, workers = 1,
        grantha = false, cache = true, keyboard = None, parallel = None, stopwords = None
    ))]
    #[allow(clippy::too_many_arguments)]
    fn new(
        lexicon: &Lexicon,
        edit_distance: usize,
        limit: Option<usize>,
        max_suggestions: usize,
        workers: usize,
        grantha: bool,
        cache: bool,
        keyboard: Option<PathBuf>,
        parallel: Option<HashMap<String, String>>,
        stopwords: Option<Vec<String>>,
    ) -> PyResult<Self> {
        let config = EngineConfig { edit_distance, limit, max_suggestions, workers, grantha, cache };
        let mut builder = tamil_spell_core::Engine::builder(lexicon.inner.clone()).config(config);
        if let Some(path) = keyboard {
            builder = builder.keyboard(ConfusionMatrix::load(open(&path)?).map_err(py_err)?);
        }
        if let Some(map) = parallel {
            let mut dict = ForeignDictionary::new();
            for (foreign, tamil) in &map {
                dict.insert(foreign, tamil);
            }
            builder = builder.foreign(dict);
        }
        if let Some(words) = stopwords {
            builder = builder.stopwords(words.iter().map(|w| letters::normalize(w)).collect());
        }
        Ok(Engine { inner: builder.build().map_err(py_err)? })
    }

    fn is_word(&self, word: &str) -> bool {
        self.inner.lexicon().is_word(word)
    }

    /// `(verdict, suggestions)` for a single word.
    fn check_word(&self, py: Python<'_>, word: &str) -> (String, Vec<Suggestion>) {
        let check = py.detach(|| self.inner.check_word(word));
        (verdict_name(check.verdict).to_string(), suggestions(&check.suggestions))
    }

    fn suggest(&self, py: Python<'_>, word: &str) -> Vec<Suggestion> {
        suggestions(&py.detach(|| self.inner.check_word(word)).suggestions)
    }

    fn check_text(&self, py: Python<'_>, text: &str) -> Vec<TokenReport> {
        let report = py.detach(|| self.inner.check_text(text));
        report.tokens.into_iter().map(TokenReport::from).collect()
    }

    /// Cache and computation counters.
    fn stats(&self) -> HashMap<&'static str, u64> {
        let s = self.inner.stats();
        HashMap::from([
            ("hits", s.cache.hits),
            ("misses", s.cache.misses),
            ("entries", s.cache.entries as u64),
            ("computations", s.computations),
        ])
    }

    fn reset(&self) {
        self.inner.reset()
    }
}

/// `(text, kind)` per cluster; kind is a letter kind, `other` or `malformed`.
#[pyfunction]
fn tokenize(text: &str) -> Vec<(String, &'static str)> {
    letters::tokenize(&letters::normalize(text))
        .into_iter()
        .map(|t| {
            let kind = match t.kind {
                TokenKind::Letter(k) => kind_name(k),
                TokenKind::Other => "other",
                TokenKind::Malformed => "malformed",
            };
            (t.text, kind)
        })
        .collect()
}

#[pyfunction]
fn letters_of(text: &str) -> PyResult<Vec<String>> {
    Ok(word(text)?.iter().map(|l| l.as_str().to_string()).collect())
}

/// `(mei, uyir)` for an uyirmei letter, `(letter,)` otherwise.
#[pyfunction]
fn split_mei_uyir(letter: &str) -> PyResult<Vec<String>> {
    Ok(match letters::split_mei_uyir(letter).map_err(py_err)? {
        MeiUyir::Pair { mei, uyir } => vec![mei.to_string(), uyir.to_string()],
        MeiUyir::Single(l) => vec![l.to_string()],
    })
}

#[pyfunction]
fn join_mei_uyir(mei: &str, uyir: &str) -> PyResult<String> {
    let mei = letters::Letter::parse(mei).map_err(py_err)?;
    let uyir = letters::Letter::parse(uyir).map_err(py_err)?;
    Ok(letters::join_mei_uyir(&mei, &uyir).map_err(py_err)?.to_string())
}

#[pyfunction]
fn is_tamil_codepoint(ch: char) -> bool {
    letters::is_tamil_codepoint(ch)
}

#[pyfunction]
#[pyo3(signature = (grantha = false))]
fn alphabet(grantha: bool) -> Vec<String> {
    Alphabet::new(grantha).letters().iter().map(|l| l.as_str().to_string()).collect()
}

/// Candidates exactly `nedits` rounds of single edits away.
#[pyfunction]
#[pyo3(signature = (text, nedits = 1, limit = None, grantha = false))]
fn edits(py: Python<'_>, text: &str, nedits: usize, limit: Option<usize>, grantha: bool) -> PyResult<Vec<String>> {
    let w = word(text)?;
    let set = py.detach(|| edit::edits_n(&w, &Alphabet::new(grantha), nedits, limit)).map_err(py_err)?;
    Ok(set.candidates.into_iter().collect())
}

#[pyfunction]
fn mayangoli_alternates(text: &str) -> PyResult<Vec<String>> {
    Ok(mayangoli::generate_alternates(&word(text)?, &MayangoliTable::default()))
}

#[pyfunction]
fn ottru_splits(text: &str) -> PyResult<Vec<(String, String)>> {
    Ok(conjoined::generate_ottru_splits(&word(text)?).into_iter().map(|p| (p.left, p.right)).collect())
}

#[pyfunction]
fn plain_splits(text: &str) -> PyResult<Vec<(String, String)>> {
    Ok(conjoined::generate_plain_splits(&word(text)?).into_iter().map(|p| (p.left, p.right)).collect())
}

/// Two-word readings of `text` against a lexicon.
#[pyfunction]
fn conjoined_splits(text: &str, lexicon: &Lexicon) -> PyResult<Vec<(String, String)>> {
    Ok(conjoined::recognize(&word(text)?, &lexicon.inner).into_iter().map(|p| (p.left, p.right)).collect())
}

/// Keyboard-neighbour substitutions of `text`; `neighbors` overrides the
/// bundled Tamil-99 matrix.
#[pyfunction]
#[pyo3(signature = (text, ed = 1, neighbors = None))]
fn keyboard_patterns(text: &str, ed: usize, neighbors: Option<Vec<(String, Vec<String>)>>) -> PyResult<Vec<String>> {
    let cm = match neighbors {
        Some(entries) => ConfusionMatrix::from_entries(entries).map_err(py_err)?,
        None => ConfusionMatrix::tamil99(),
    };
    let letters: Vec<String> = word(text)?.iter().map(|l| l.as_str().to_string()).collect();
    keyboard::generate_patterns(&letters, &cm, ed).map_err(py_err)
}

#[pyfunction]
fn lattice_count(word_len: usize, alphabet_size: usize, ed: usize) -> u128 {
    keyboard::lattice_count(word_len, alphabet_size, ed)
}

/// Damerau–Levenshtein distance counted in letters.
#[pyfunction]
fn letter_distance(a: &str, b: &str) -> usize {
    distance::letter_distance(a, b)
}

#[pymodule]
fn tamil_spell(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Engine>()?;
    m.add_class::<Lexicon>()?;
    m.add_class::<Suggestion>()?;
    m.add_class::<TokenReport>()?;
    m.add_function(wrap_pyfunction!(tokenize, m)?)?;
    m.add_function(wrap_pyfunction!(letters_of, m)?)?;
    m.add_function(wrap_pyfunction!(split_mei_uyir, m)?)?;
    m.add_function(wrap_pyfunction!(join_mei_uyir, m)?)?;
    m.add_function(wrap_pyfunction!(is_tamil_codepoint, m)?)?;
    m.add_function(wrap_pyfunction!(alphabet, m)?)?;
    m.add_function(wrap_pyfunction!(edits, m)?)?;
    m.add_function(wrap_pyfunction!(mayangoli_alternates, m)?)?;
    m.add_function(wrap_pyfunction!(ottru_splits, m)?)?;
    m.add_function(wrap_pyfunction!(plain_splits, m)?)?;
    m.add_function(wrap_pyfunction!(conjoined_splits, m)?)?;
    m.add_function(wrap_pyfunction!(keyboard_patterns, m)?)?;
    m.add_function(wrap_pyfunction!(lattice_count, m)?)?;
    m.add_function(wrap_pyfunction!(letter_distance, m)?)?;
    Ok(())
}
