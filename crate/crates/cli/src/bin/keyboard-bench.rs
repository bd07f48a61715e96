//! Size of the pruned keyboard search against the full substitution lattice,
//! as CSV on stdout with per-distance totals on stderr.

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{self, BufReader, Write};
use std::path::PathBuf;

use anyhow::{Context, Result};
use clap::Parser;
use tamil_spell_core::keyboard::{generate_patterns, lattice_count};
use tamil_spell_core::{Alphabet, ConfusionMatrix, Lexicon, Word};

#[derive(Debug, Parser)]
#[command(name = "keyboard-bench")]
struct Args {
    /// Word list to take sample words from.
    #[arg(long, value_name = "PATH")]
    dict: PathBuf,

    /// Keyboard confusion matrix; defaults to Tamil-99.
    #[arg(long, value_name = "PATH")]
    cm: Option<PathBuf>,

    /// Largest substitution count to measure.
    #[arg(long, value_name = "N", default_value_t = 3)]
    max_ed: usize,

    /// Size the lattice against the Grantha alphabet.
    #[arg(long)]
    grantha: bool,
}

fn main() -> Result<()> {
    match run(Args::parse()) {
        Err(e) if e.downcast_ref::<io::Error>().is_some_and(|e| e.kind() == io::ErrorKind::BrokenPipe) => Ok(()),
        other => other,
    }
}

fn run(args: Args) -> Result<()> {
    let open = |p: &PathBuf| File::open(p).map(BufReader::new).with_context(|| format!("cannot open {}", p.display()));
    let lexicon = Lexicon::load_wordlist(open(&args.dict)?)?;
    let cm = match &args.cm {
        Some(p) => ConfusionMatrix::load(open(p)?)?,
        None => ConfusionMatrix::tamil99(),
    };
    let alphabet = Alphabet::new(args.grantha).len();

    let mut totals: BTreeMap<usize, (u128, u128)> = BTreeMap::new();
    let mut out = io::stdout().lock();
    writeln!(out, "word,word_length,ed,pruned_count,lattice_count,ratio")?;
    for text in lexicon.words() {
        let word = Word::parse(&text)?;
        for ed in 1..=args.max_ed.min(word.len()) {
            let pruned = generate_patterns(&word, &cm, ed)?.len() as u128;
            let full = lattice_count(word.len(), alphabet, ed);
            writeln!(out, "{text},{},{ed},{pruned},{full},{:.6}", word.len(), pruned as f64 / full as f64)?;
            let t = totals.entry(ed).or_default();
            t.0 += pruned;
            t.1 += full;
        }
    }
    for (ed, (pruned, full)) in totals {
        eprintln!("ed={ed} pruned={pruned} lattice={full} ratio={:.6}", pruned as f64 / full as f64);
    }
    Ok(())
}
