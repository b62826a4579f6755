//! Argumentation framework specifications: an argument language given as a
//! regex together with an attack expression.

mod combine;
mod finite;

use std::fmt;

use crate::automata::{compile_regex, Alphabet, Dfa, Word};
use crate::error::{Error, Result};
use crate::expr::{AttackExpr, ExprIssue, RegexAst};
use crate::semantics::{ArgSet, CompiledAttack};

pub use combine::{combine, Component, CrossAttack};
pub use finite::{encode_finite_af, FiniteAf};

/// A problem found while validating a specification.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SpecIssue {
    #[error("ε in argument language")]
    EpsilonArgument,

    #[error("argument language is empty")]
    EmptyArguments,

    #[error("argument regex uses unknown symbol {0}")]
    RegexSymbol(String),

    #[error("attack expression: {0}")]
    Attack(ExprIssue),
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub errors: Vec<SpecIssue>,
    pub warnings: Vec<SpecIssue>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.errors.is_empty()
    }
}

/// Checks the parts of a specification without building it.
pub fn validate_spec(alphabet: &Alphabet, argument_regex: &RegexAst, attack: &AttackExpr) -> ValidationReport {
    let mut report = ValidationReport::default();
    let unknown: Vec<&str> = argument_regex
        .symbols()
        .into_iter()
        .filter(|s| alphabet.index_of(s).is_none())
        .collect();
    report
        .errors
        .extend(unknown.iter().map(|s| SpecIssue::RegexSymbol(s.to_string())));
    report
        .errors
        .extend(attack.validate(alphabet).into_iter().map(SpecIssue::Attack));
    if unknown.is_empty() {
        let x = compile_regex(argument_regex, alphabet).expect("symbols checked");
        if x.contains(&Word::empty()) {
            report.errors.push(SpecIssue::EpsilonArgument);
        }
        if x.is_empty() {
            report.warnings.push(SpecIssue::EmptyArguments);
        }
    }
    report
}

/// A validated specification: the argument language `X` and the attack
/// expression, with both compiled.
#[derive(Debug, Clone)]
pub struct AfSpec {
    alphabet: Alphabet,
    argument_regex: RegexAst,
    arguments: Dfa,
    attack: AttackExpr,
    compiled: CompiledAttack,
    warnings: Vec<SpecIssue>,
}

impl AfSpec {
    pub fn new(alphabet: Alphabet, argument_regex: RegexAst, attack: AttackExpr) -> Result<Self> {
        let report = validate_spec(&alphabet, &argument_regex, &attack);
        if !report.is_ok() {
            return Err(Error::InvalidSpec(report.errors));
        }
        let arguments = compile_regex(&argument_regex, &alphabet)?;
        let compiled = CompiledAttack::compile(&attack, &alphabet)?;
        Ok(AfSpec {
            alphabet,
            argument_regex,
            arguments,
            attack,
            compiled,
            warnings: report.warnings,
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn argument_regex(&self) -> &RegexAst {
        &self.argument_regex
    }

    /// The argument language `X`.
    pub fn arguments(&self) -> ArgSet {
        ArgSet::from(self.arguments.clone())
    }

    pub fn argument_dfa(&self) -> &Dfa {
        &self.arguments
    }

    pub fn attack(&self) -> &AttackExpr {
        &self.attack
    }

    pub fn compiled_attack(&self) -> &CompiledAttack {
        &self.compiled
    }

    pub fn warnings(&self) -> &[SpecIssue] {
        &self.warnings
    }

    pub fn is_argument(&self, w: &Word) -> bool {
        self.arguments.contains(w)
    }

    pub fn parse_word(&self, text: &str) -> Result<Word> {
        Ok(self.alphabet.parse_word(text)?)
    }

    pub fn render_word(&self, w: &Word) -> String {
        self.alphabet.render_word(w)
    }

    /// Parses a regex over the spec alphabet into a set.
    pub fn set_from_regex(&self, text: &str) -> Result<ArgSet> {
        let r = crate::expr::parse_regex(text, &self.alphabet)?;
        Ok(ArgSet::new(compile_regex(&r, &self.alphabet)?))
    }

    pub fn set_from_words<'a, I: IntoIterator<Item = &'a Word>>(&self, words: I) -> ArgSet {
        ArgSet::from_words(&self.alphabet, words)
    }

    pub(crate) fn require_argument(&self, w: &Word) -> Result<()> {
        if self.is_argument(w) {
            Ok(())
        } else {
            Err(Error::NotAnArgument(self.render_word(w)))
        }
    }

    pub(crate) fn require_subset(&self, s: &Dfa) -> Result<()> {
        crate::semantics::check_alphabet(&self.alphabet, s)?;
        if s.is_subset(&self.arguments)? {
            Ok(())
        } else {
            Err(Error::NotSubset)
        }
    }

    /// `π⁻(S)`: the arguments attacking some member of `S`.
    pub fn attackers(&self, s: &ArgSet) -> Result<ArgSet> {
        self.require_subset(s)?;
        Ok(ArgSet::from(self.attackers_unchecked(s)?))
    }

    /// `π⁺(S)`: the arguments attacked by some member of `S`.
    pub fn attacked(&self, s: &ArgSet) -> Result<ArgSet> {
        self.require_subset(s)?;
        Ok(ArgSet::from(self.attacked_unchecked(s)?))
    }

    pub(crate) fn attackers_unchecked(&self, s: &Dfa) -> Result<Dfa> {
        Ok(self.compiled.forward(s)?.intersect(&self.arguments)?)
    }

    pub(crate) fn attacked_unchecked(&self, s: &Dfa) -> Result<Dfa> {
        Ok(self.compiled.inverse(s)?.intersect(&self.arguments)?)
    }

    /// Whether `u` attacks `v`.
    pub fn attacks(&self, u: &Word, v: &Word) -> Result<bool> {
        self.require_argument(u)?;
        self.require_argument(v)?;
        let att = self.attackers_unchecked(&Dfa::word(&self.alphabet, v))?;
        Ok(att.contains(u))
    }
}

impl fmt::Display for AfSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "alphabet: {}", self.alphabet.symbols().join(" "))?;
        writeln!(f, "arguments: {}", self.argument_regex)?;
        writeln!(f, "attack: {}", self.attack)
    }
}
