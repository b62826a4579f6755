//! Regular-language kernel.
//!
//! Every (possibly infinite) set of words handled by this crate is a complete
//! [`Dfa`] over a shared [`Alphabet`]. Operations that build new languages
//! return automata in canonical form: minimal, with states numbered in
//! breadth-first order from the start state, visiting successors in alphabet
//! order. Two canonical automata over the same alphabet are structurally equal
//! exactly when they accept the same language.

mod compile;
mod dfa;
mod export;
mod minimize;
mod nfa;
mod words;

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

pub use compile::compile_regex;
pub use dfa::Dfa;
pub use export::DfaJson;
pub use words::Words;

/// Index of a symbol inside its [`Alphabet`].
pub type SymbolId = usize;

/// Tokens with a fixed meaning in the expression grammars; never valid symbols.
pub const RESERVED_TOKENS: [&str; 6] = ["EPS", "EMPTY", "I", "U", "hd", "tl"];

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AutomataError {
    #[error("automata are defined over different alphabets")]
    AlphabetMismatch,

    #[error("duplicate symbol `{0}` in alphabet")]
    DuplicateSymbol(String),

    #[error("`{0}` is a reserved token and cannot be used as a symbol")]
    ReservedSymbol(String),

    #[error("`{0}` is not a valid symbol name (letters, digits and `_` only)")]
    InvalidSymbolName(String),

    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),

    #[error("malformed automaton: {0}")]
    Malformed(String),
}

/// Returns true if `name` can be used as an alphabet symbol.
pub fn is_symbol_name(name: &str) -> bool {
    !name.is_empty() && name.chars().all(|c| c.is_alphanumeric() || c == '_')
}

/// An ordered finite set of named symbols.
///
/// Cloning is cheap; clones share storage and compare equal by pointer before
/// falling back to comparing the symbol lists.
#[derive(Clone)]
pub struct Alphabet(Arc<AlphabetInner>);

struct AlphabetInner {
    symbols: Vec<String>,
    index: HashMap<String, SymbolId>,
    single_chars: bool,
}

impl Alphabet {
    pub fn new<I, S>(symbols: I) -> Result<Self, AutomataError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut list = Vec::new();
        let mut index = HashMap::new();
        for sym in symbols {
            let sym = sym.into();
            if RESERVED_TOKENS.contains(&sym.as_str()) {
                return Err(AutomataError::ReservedSymbol(sym));
            }
            if !is_symbol_name(&sym) {
                return Err(AutomataError::InvalidSymbolName(sym));
            }
            if index.insert(sym.clone(), list.len()).is_some() {
                return Err(AutomataError::DuplicateSymbol(sym));
            }
            list.push(sym);
        }
        let single_chars = list.iter().all(|s| s.chars().count() == 1);
        Ok(Alphabet(Arc::new(AlphabetInner {
            symbols: list,
            index,
            single_chars,
        })))
    }

    pub fn len(&self) -> usize {
        self.0.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[String] {
        &self.0.symbols
    }

    pub fn symbol(&self, id: SymbolId) -> &str {
        &self.0.symbols[id]
    }

    pub fn index_of(&self, name: &str) -> Option<SymbolId> {
        self.0.index.get(name).copied()
    }

    pub fn ids(&self) -> std::ops::Range<SymbolId> {
        0..self.len()
    }

    /// Parses a word written either as whitespace/`·` separated symbol tokens
    /// or, when unambiguous, as symbols written back to back (`000`, `c1c1`).
    /// The empty word is written as `ε`, `EPS` or the empty string.
    pub fn parse_word(&self, text: &str) -> Result<Word, AutomataError> {
        let text = text.trim();
        if text.is_empty() || text == "ε" || text == "EPS" {
            return Ok(Word::empty());
        }
        let mut out = Vec::new();
        for piece in text.split(|c: char| c.is_whitespace() || c == '·') {
            if piece.is_empty() {
                continue;
            }
            if let Some(id) = self.index_of(piece) {
                out.push(id);
                continue;
            }
            self.split_compact(piece, &mut out)?;
        }
        Ok(Word(out))
    }

    // greedy longest match
    fn split_compact(&self, piece: &str, out: &mut Vec<SymbolId>) -> Result<(), AutomataError> {
        let mut rest = piece;
        while !rest.is_empty() {
            let best = self
                .0
                .symbols
                .iter()
                .enumerate()
                .filter(|(_, s)| rest.starts_with(s.as_str()))
                .max_by_key(|(_, s)| s.len());
            match best {
                Some((id, s)) => {
                    out.push(id);
                    rest = &rest[s.len()..];
                }
                None => return Err(AutomataError::UnknownSymbol(piece.to_string())),
            }
        }
        Ok(())
    }

    /// Renders a word; symbols are juxtaposed when every symbol of the
    /// alphabet is a single character and joined with `·` otherwise.
    pub fn render_word(&self, word: &Word) -> String {
        if word.is_empty() {
            return "ε".to_string();
        }
        let sep = if self.0.single_chars { "" } else { "·" };
        word.0
            .iter()
            .map(|&id| self.symbol(id))
            .collect::<Vec<_>>()
            .join(sep)
    }
}

impl PartialEq for Alphabet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.symbols == other.0.symbols
    }
}

impl Eq for Alphabet {}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.symbols.iter()).finish()
    }
}

/// A finite word over some alphabet, stored as symbol indexes.
///
/// Words order by length first and then lexicographically by symbol index.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(pub Vec<SymbolId>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn symbols(&self) -> &[SymbolId] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }
}

impl From<Vec<SymbolId>> for Word {
    fn from(v: Vec<SymbolId>) -> Self {
        Word(v)
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
