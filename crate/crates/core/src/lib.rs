//! Tamil spelling correction.
//!
//! Words are handled as sequences of Tamil letters (grapheme clusters). A word
//! missing from the lexicon gets suggestions from four generators:
//!
//! - [`conjoined`]: two lexicon words written together (`தென்றல்காற்று`)
//! - [`mayangoli`]: confusable consonant series (ல/ழ/ள, ர/ற, ந/ன/ண, ங/ஞ)
//! - [`keyboard`]: keyboard-neighbour substitutions from a confusion matrix
//! - [`edit`]: deletes, transposes, replaces and inserts over the alphabet
//!
//! [`checker::Engine`] runs them, merges and ranks the results, and checks
//! whole documents with caching and an optional worker pool.
//!
//! ```
//! use tamil_spell_core::{Engine, Lexicon, Verdict};
//!
//! let lexicon: Lexicon = ["பழம்", "பலம்", "தென்றல்", "காற்று"].into_iter().collect();
//! let engine = Engine::new(lexicon).unwrap();
//!
//! let check = engine.check_word("பளம்");
//! assert_eq!(check.verdict, Verdict::NonWord);
//! assert!(check.suggestions.iter().any(|s| s.candidate == "பழம்"));
//! ```

pub mod cache;
pub mod checker;
pub mod conjoined;
pub mod distance;
pub mod edit;
pub mod error;
pub mod keyboard;
pub mod letters;
pub mod lexicon;
pub mod mayangoli;
pub mod suggestion;

pub use cache::{CacheStats, SuggestionCache};
pub use checker::{
    substitute_foreign, CheckReport, Engine, EngineBuilder, EngineConfig, EngineStats, ForeignDictionary,
    TokenReport, Verdict, WordCheck,
};
pub use conjoined::{SplitKind, SplitPair};
pub use edit::{EditCandidateSet, Limit};
pub use error::{Error, Result};
pub use keyboard::ConfusionMatrix;
pub use letters::{is_tamil_codepoint, Alphabet, Letter, LetterKind, MeiUyir, Token, TokenKind, Word};
pub use lexicon::{Lexicon, WordStore};
pub use mayangoli::{MayangoliMatch, MayangoliTable};
pub use suggestion::{DefaultRanker, Ranker, Strategy, Suggestion};
