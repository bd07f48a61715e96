//! Batch and interactive front ends for the Tamil spell checker.

use std::fs::File;
use std::io::{self, BufRead, BufReader, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{Context, Result};
use clap::Parser;
use tamil_spell_core::checker::{load_stopwords, split_words, CheckReport};
use tamil_spell_core::{
    ConfusionMatrix, Engine, EngineConfig, ForeignDictionary, Lexicon, Suggestion, Verdict,
};

/// Check Tamil text for misspellings.
///
/// With FILE arguments (or `-` for stdin) every file is checked and findings
/// are listed; the exit status is 1 if any file has a non-word. With `-i` an
/// interactive prompt reads one word per line.
#[derive(Debug, Clone, Parser)]
#[command(name = "tamil-spell", version)]
pub struct Args {
    /// Interactive prompt.
    #[arg(short = 'i', long = "interactive")]
    pub interactive: bool,

    /// Word list, one word per line. May be repeated.
    #[arg(long = "dict", value_name = "PATH", required = true)]
    pub dict: Vec<PathBuf>,

    /// Keyboard confusion matrix (`letter<TAB>neighbours`); defaults to Tamil-99.
    #[arg(long, value_name = "PATH")]
    pub cm: Option<PathBuf>,

    /// Parallel dictionary of `foreign<TAB>tamil` replacements.
    #[arg(long, value_name = "PATH")]
    pub parallel: Option<PathBuf>,

    /// Words that are never flagged.
    #[arg(long, value_name = "PATH")]
    pub stopwords: Option<PathBuf>,

    /// Edit distance for the edit and keyboard searches.
    #[arg(long, value_name = "N", default_value_t = 2)]
    pub ed: usize,

    /// Cap on generated edit candidates.
    #[arg(long, value_name = "N")]
    pub limit: Option<usize>,

    /// Worker threads for batch checking.
    #[arg(long, value_name = "N", default_value_t = 1)]
    pub workers: usize,

    /// Include Grantha letters in the edit alphabet.
    #[arg(long)]
    pub grantha: bool,

    /// One JSON array of token reports per file.
    #[arg(long)]
    pub json: bool,

    /// Print cache and timing counters to stderr.
    #[arg(long)]
    pub stats: bool,

    /// Files to check; `-` reads stdin.
    #[arg(value_name = "FILE")]
    pub files: Vec<PathBuf>,
}

fn open(path: &Path) -> Result<BufReader<File>> {
    let file = File::open(path).with_context(|| format!("cannot open {}", path.display()))?;
    Ok(BufReader::new(file))
}

pub fn build_engine(args: &Args) -> Result<Engine> {
    let mut lexicon = Lexicon::new();
    for path in &args.dict {
        lexicon
            .extend_from_reader(open(path)?)
            .with_context(|| format!("reading {}", path.display()))?;
    }
    let config = EngineConfig {
        edit_distance: args.ed,
        limit: args.limit,
        workers: args.workers.max(1),
        grantha: args.grantha,
        ..EngineConfig::default()
    };
    let mut builder = Engine::builder(lexicon).config(config);
    if let Some(path) = &args.cm {
        let cm = ConfusionMatrix::load(open(path)?).with_context(|| format!("reading {}", path.display()))?;
        builder = builder.keyboard(cm);
    }
    if let Some(path) = &args.parallel {
        let dict = ForeignDictionary::load(open(path)?).with_context(|| format!("reading {}", path.display()))?;
        builder = builder.foreign(dict);
    }
    if let Some(path) = &args.stopwords {
        let words = load_stopwords(open(path)?).with_context(|| format!("reading {}", path.display()))?;
        builder = builder.stopwords(words);
    }
    Ok(builder.build()?)
}

/// `(0) a, (1) b, ...`
pub fn numbered(suggestions: &[Suggestion]) -> String {
    suggestions
        .iter()
        .enumerate()
        .map(|(i, s)| format!("({i}) {}", s.candidate))
        .collect::<Vec<_>>()
        .join(", ")
}

/// 1-based line and column (in characters) of each word of `text`, in the
/// order [`split_words`] yields them.
fn positions(text: &str) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let (mut line, mut col, mut at) = (1, 1, 0);
    for word in split_words(text) {
        let offset = word.as_ptr() as usize - text.as_ptr() as usize;
        for ch in text[at..offset].chars() {
            if ch == '\n' {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
        }
        at = offset;
        out.push((line, col));
    }
    out
}

/// Column output: one line per flagged word and per foreign substitution.
pub fn write_findings<W: Write>(out: &mut W, name: &str, text: &str, report: &CheckReport) -> io::Result<()> {
    let pos = positions(text);
    for (i, token) in report.tokens.iter().enumerate() {
        let (line, col) = pos[i];
        if token.is_finding() {
            writeln!(out, "{name}:{line}:{col}\t{}\t{}", token.token, numbered(&token.suggestions))?;
        } else if token.verdict == Verdict::NonTamil {
            if let Some(s) = token.suggestions.first() {
                writeln!(out, "{name}:{line}:{col}\t{}\t=> {}", token.token, s.candidate)?;
            }
        }
    }
    Ok(())
}

fn read_input(path: &Path) -> Result<String> {
    let mut text = String::new();
    if path.as_os_str() == "-" {
        io::stdin().read_to_string(&mut text).context("reading stdin")?;
    } else {
        open(path)?
            .read_to_string(&mut text)
            .with_context(|| format!("reading {}", path.display()))?;
    }
    Ok(text)
}

/// Check every file; returns whether all were clean.
pub fn run_batch<W: Write>(engine: &Engine, args: &Args, out: &mut W) -> Result<bool> {
    let stdin = [PathBuf::from("-")];
    let files = if args.files.is_empty() { &stdin[..] } else { &args.files[..] };
    let mut clean = true;
    let mut tokens = 0;
    let mut non_words = 0;
    let start = Instant::now();
    for path in files {
        let text = read_input(path)?;
        let report = engine.check_text(&text);
        tokens += report.tokens.len();
        non_words += report.findings().count();
        clean &= report.is_clean();
        if args.json {
            serde_json::to_writer(&mut *out, &report)?;
            writeln!(out)?;
        } else {
            write_findings(out, &path.display().to_string(), &text, &report)?;
        }
    }
    out.flush()?;
    if args.stats {
        let stats = engine.stats();
        eprintln!(
            "tokens={tokens} non_words={non_words} computations={} cache_hits={} cache_misses={} elapsed_ms={:.1}",
            stats.computations,
            stats.cache.hits,
            stats.cache.misses,
            start.elapsed().as_secs_f64() * 1000.0
        );
    }
    Ok(clean)
}

pub const VALID: &str = "சரி";
pub const NO_SUGGESTIONS: &str = "(மாற்றங்கள் இல்லை)";

pub fn header(word: &str) -> String {
    format!("சொல் \"{word}\" மாற்றங்கள்")
}

/// Interactive loop: prompt `>> `, check each entered line, list numbered
/// suggestions for non-words, and echo the chosen replacement when an index
/// is entered after a list. Ends at EOF or `:q`.
pub fn repl<R: BufRead, W: Write>(engine: &Engine, input: R, out: &mut W) -> io::Result<()> {
    let mut last: Vec<Suggestion> = Vec::new();
    let mut lines = input.lines();
    loop {
        write!(out, ">> ")?;
        out.flush()?;
        let Some(line) = lines.next() else {
            writeln!(out)?;
            return Ok(());
        };
        let line = line?;
        let line = line.trim();
        if line == ":q" {
            return Ok(());
        }
        if line.is_empty() {
            continue;
        }
        if !last.is_empty() {
            if let Ok(idx) = line.parse::<usize>() {
                match last.get(idx) {
                    Some(s) => writeln!(out, "{}", s.candidate)?,
                    None => writeln!(out, "no suggestion ({idx}); choose 0-{}", last.len() - 1)?,
                }
                continue;
            }
        }
        for token in engine.check_text(line).tokens {
            match token.verdict {
                Verdict::Valid | Verdict::Skipped => writeln!(out, "{VALID}")?,
                Verdict::NonTamil if token.suggestions.is_empty() => writeln!(out, "{}", token.token)?,
                _ => {
                    writeln!(out, "{}", header(&token.token))?;
                    if token.suggestions.is_empty() {
                        writeln!(out, "{NO_SUGGESTIONS}")?;
                    } else {
                        writeln!(out, "{}", numbered(&token.suggestions))?;
                        last = token.suggestions;
                    }
                }
            }
        }
    }
}

pub fn run(args: Args) -> ExitCode {
    let engine = match build_engine(&args) {
        Ok(engine) => engine,
        Err(e) => {
            eprintln!("tamil-spell: {e:#}");
            return ExitCode::from(2);
        }
    };
    if args.interactive {
        let stdin = io::stdin();
        let mut stdout = io::stdout();
        return match repl(&engine, stdin.lock(), &mut stdout) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => {
                eprintln!("tamil-spell: {e}");
                ExitCode::from(2)
            }
        };
    }
    let mut stdout = io::stdout().lock();
    match run_batch(&engine, &args, &mut stdout) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("tamil-spell: {e:#}");
            ExitCode::from(2)
        }
    }
}
