//! Forward and inverse evaluation of attack expressions over regular sets.
//!
//! Forward evaluation `p(S)` gives the attackers of `S` before restriction to
//! the argument language. Inverse evaluation `p⁺(S)` gives every word `v`
//! with `p({v}) ∩ S ≠ ∅`, i.e. the words attacked by some member of `S`.

use std::ops::Deref;

use crate::automata::{compile_regex, Alphabet, AutomataError, Dfa, SymbolId, Word};
use crate::error::{Error, Result};
use crate::expr::{AttackExpr, RegexAst};

/// A regular set of words, held as a canonical automaton.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArgSet(Dfa);

impl ArgSet {
    pub fn new(dfa: Dfa) -> Self {
        ArgSet(dfa.minimize())
    }

    pub fn empty(alphabet: &Alphabet) -> Self {
        ArgSet(Dfa::empty(alphabet))
    }

    pub fn from_words<'a, I: IntoIterator<Item = &'a Word>>(alphabet: &Alphabet, words: I) -> Self {
        ArgSet(Dfa::from_words(alphabet, words))
    }

    pub fn singleton(alphabet: &Alphabet, word: &Word) -> Self {
        ArgSet(Dfa::word(alphabet, word))
    }

    pub fn dfa(&self) -> &Dfa {
        &self.0
    }

    pub fn into_dfa(self) -> Dfa {
        self.0
    }
}

impl Deref for ArgSet {
    type Target = Dfa;

    fn deref(&self) -> &Dfa {
        &self.0
    }
}

impl From<Dfa> for ArgSet {
    fn from(d: Dfa) -> Self {
        ArgSet::new(d)
    }
}

#[derive(Debug, Clone)]
struct CompiledK {
    dfa: Dfa,
    rev: Dfa,
}

impl CompiledK {
    fn new(r: &RegexAst, alphabet: &Alphabet) -> Result<Self, AutomataError> {
        let dfa = compile_regex(r, alphabet)?;
        let rev = dfa.reverse();
        Ok(CompiledK { dfa, rev })
    }
}

#[derive(Debug, Clone)]
enum Node {
    Sym(SymbolId),
    Identity,
    Union(Box<Node>, Box<Node>),
    ConcatRight(Box<Node>, CompiledK),
    ConcatLeft(CompiledK, Box<Node>),
    QuotientByK(Box<Node>, CompiledK),
    KQuotientBy(CompiledK, Box<Node>),
    IntersectK(Box<Node>, CompiledK),
    Hd(Box<Node>),
    Tl(Box<Node>),
}

/// An attack expression with its regex operands compiled once.
#[derive(Debug, Clone)]
pub struct CompiledAttack {
    alphabet: Alphabet,
    root: Node,
}

impl CompiledAttack {
    pub fn compile(e: &AttackExpr, alphabet: &Alphabet) -> Result<Self, AutomataError> {
        Ok(CompiledAttack {
            alphabet: alphabet.clone(),
            root: build(e, alphabet)?,
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn forward(&self, s: &Dfa) -> Result<Dfa, AutomataError> {
        self.check(s)?;
        forward(&self.root, s, &self.alphabet)
    }

    pub fn inverse(&self, s: &Dfa) -> Result<Dfa, AutomataError> {
        self.check(s)?;
        inverse(&self.root, s.clone(), &self.alphabet)
    }

    fn check(&self, s: &Dfa) -> Result<(), AutomataError> {
        if *s.alphabet() == self.alphabet {
            Ok(())
        } else {
            Err(AutomataError::AlphabetMismatch)
        }
    }
}

fn build(e: &AttackExpr, a: &Alphabet) -> Result<Node, AutomataError> {
    let sub = |p: &AttackExpr| build(p, a).map(Box::new);
    let k = |r: &RegexAst| CompiledK::new(r, a);
    Ok(match e {
        AttackExpr::Sym(name) => Node::Sym(
            a.index_of(name)
                .ok_or_else(|| AutomataError::UnknownSymbol(name.clone()))?,
        ),
        AttackExpr::Identity => Node::Identity,
        AttackExpr::Union(p, q) => Node::Union(sub(p)?, sub(q)?),
        AttackExpr::ConcatRight(p, r) => Node::ConcatRight(sub(p)?, k(r)?),
        AttackExpr::ConcatLeft(r, p) => Node::ConcatLeft(k(r)?, sub(p)?),
        AttackExpr::QuotientByK(p, r) => Node::QuotientByK(sub(p)?, k(r)?),
        AttackExpr::KQuotientBy(r, p) => Node::KQuotientBy(k(r)?, sub(p)?),
        AttackExpr::IntersectK(p, r) => Node::IntersectK(sub(p)?, k(r)?),
        AttackExpr::Hd(p) => Node::Hd(sub(p)?),
        AttackExpr::Tl(p) => Node::Tl(sub(p)?),
    })
}

fn forward(n: &Node, s: &Dfa, a: &Alphabet) -> Result<Dfa, AutomataError> {
    Ok(match n {
        Node::Sym(sym) => Dfa::symbol(a, *sym),
        Node::Identity => s.clone(),
        Node::Union(p, q) => forward(p, s, a)?.union(&forward(q, s, a)?)?,
        Node::ConcatRight(p, k) => forward(p, s, a)?.concat(&k.dfa)?,
        Node::ConcatLeft(k, p) => k.dfa.concat(&forward(p, s, a)?)?,
        Node::QuotientByK(p, k) => forward(p, s, a)?.quotient(&k.dfa)?,
        Node::KQuotientBy(k, p) => k.dfa.quotient(&forward(p, s, a)?)?,
        Node::IntersectK(p, k) => forward(p, s, a)?.intersect(&k.dfa)?,
        Node::Hd(p) => Dfa::symbols(a, forward(p, s, a)?.head()),
        Node::Tl(p) => forward(p, s, a)?.tail(),
    })
}

fn inverse(n: &Node, s: Dfa, a: &Alphabet) -> Result<Dfa, AutomataError> {
    let sigma = || Dfa::any_symbol(a);
    let all = || Dfa::universe(a);
    Ok(match n {
        // tl(S ∩ {σ}) · Σ*
        Node::Sym(sym) => s.intersect(&Dfa::symbol(a, *sym))?.tail().concat(&all())?,
        Node::Identity => s,
        Node::Union(p, q) => inverse(p, s.clone(), a)?.union(&inverse(q, s, a)?)?,
        Node::ConcatRight(p, k) => inverse(p, s.quotient(&k.dfa)?, a)?,
        // left quotient of S by K, via reversal
        Node::ConcatLeft(k, p) => inverse(p, s.reverse().quotient(&k.rev)?.reverse(), a)?,
        Node::QuotientByK(p, k) => inverse(p, s.concat(&k.dfa)?, a)?,
        // left quotient of K by S
        Node::KQuotientBy(k, p) => inverse(p, k.rev.quotient(&s.reverse())?.reverse(), a)?,
        Node::IntersectK(p, k) => inverse(p, s.intersect(&k.dfa)?, a)?,
        Node::Hd(p) => inverse(p, s.intersect(&sigma())?.concat(&all())?, a)?,
        Node::Tl(p) => inverse(p, sigma().concat(&s)?, a)?,
    })
}

/// `e(S)` without restriction to any argument language.
pub fn eval_forward(e: &AttackExpr, s: &ArgSet) -> Result<ArgSet> {
    let c = CompiledAttack::compile(e, s.alphabet())?;
    Ok(ArgSet(c.forward(s)?))
}

/// `e⁺(S)` without restriction to any argument language.
pub fn eval_inverse(e: &AttackExpr, s: &ArgSet) -> Result<ArgSet> {
    let c = CompiledAttack::compile(e, s.alphabet())?;
    Ok(ArgSet(c.inverse(s)?))
}

pub(crate) fn check_alphabet(expected: &Alphabet, s: &Dfa) -> Result<()> {
    if s.alphabet() == expected {
        Ok(())
    } else {
        Err(Error::Automata(AutomataError::AlphabetMismatch))
    }
}
