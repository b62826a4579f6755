use std::collections::BTreeSet;

use super::AfSpec;
use crate::automata::{is_symbol_name, Alphabet, RESERVED_TOKENS};
use crate::error::{Error, Result};
use crate::expr::{AttackExpr, RegexAst};

/// A finite framework: named arguments and attack pairs `(attacker, target)`
/// given as indexes into the name list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteAf {
    names: Vec<String>,
    attacks: BTreeSet<(usize, usize)>,
}

impl FiniteAf {
    pub fn new<I>(names: Vec<String>, attacks: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut seen = BTreeSet::new();
        for n in &names {
            if RESERVED_TOKENS.contains(&n.as_str()) {
                return Err(Error::InvalidFiniteAf(format!("`{n}` is a reserved token")));
            }
            if !is_symbol_name(n) {
                return Err(Error::InvalidFiniteAf(format!("`{n}` is not a valid argument name")));
            }
            if !seen.insert(n.as_str()) {
                return Err(Error::InvalidFiniteAf(format!("duplicate argument `{n}`")));
            }
        }
        let attacks: BTreeSet<(usize, usize)> = attacks.into_iter().collect();
        if let Some(&(x, y)) = attacks.iter().find(|&&(x, y)| x >= names.len() || y >= names.len()) {
            return Err(Error::InvalidFiniteAf(format!("attack ({x}, {y}) out of range")));
        }
        Ok(FiniteAf { names, attacks })
    }

    /// Builds a framework from attack pairs given by name.
    pub fn from_names<N, A>(names: N, attacks: A) -> Result<Self>
    where
        N: IntoIterator,
        N::Item: Into<String>,
        A: IntoIterator<Item = (String, String)>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let index = |n: &str| {
            names
                .iter()
                .position(|m| m == n)
                .ok_or_else(|| Error::InvalidFiniteAf(format!("unknown argument `{n}`")))
        };
        let pairs = attacks
            .into_iter()
            .map(|(x, y)| Ok((index(&x)?, index(&y)?)))
            .collect::<Result<Vec<_>>>()?;
        FiniteAf::new(names, pairs)
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn attacks(&self) -> &BTreeSet<(usize, usize)> {
        &self.attacks
    }

    pub fn attacks_pair(&self, x: usize, y: usize) -> bool {
        self.attacks.contains(&(x, y))
    }

    pub(crate) fn symbols_regex(&self) -> RegexAst {
        RegexAst::union_all(self.names.iter().map(RegexAst::symbol))
    }

    /// `{x·y : (x, y) attack}` as a regex.
    pub(crate) fn attack_regex(&self) -> RegexAst {
        RegexAst::union_all(self.attacks.iter().map(|&(x, y)| {
            RegexAst::concat(
                RegexAst::symbol(&self.names[x]),
                RegexAst::symbol(&self.names[y]),
            )
        }))
    }

    /// `hd((Σ·I) ∩ L_A)`
    pub(crate) fn attack_expr(&self) -> AttackExpr {
        AttackExpr::hd(AttackExpr::intersect(
            AttackExpr::concat_left(self.symbols_regex(), AttackExpr::Identity),
            self.attack_regex(),
        ))
    }
}

/// Encodes a finite framework with one symbol per argument.
pub fn encode_finite_af(f: &FiniteAf) -> Result<AfSpec> {
    let alphabet = Alphabet::new(f.names.iter().cloned())?;
    AfSpec::new(alphabet, f.symbols_regex(), f.attack_expr())
}
