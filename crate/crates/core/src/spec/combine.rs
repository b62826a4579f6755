//! Combination of a finite framework and several specifications over
//! pairwise disjoint alphabets into one specification.

use std::collections::BTreeSet;

use super::{AfSpec, FiniteAf};
use crate::automata::{Alphabet, Word};
use crate::error::{Error, Result};
use crate::expr::{AttackExpr, RegexAst};

/// Identifies one component of a combination.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Component {
    Finite,
    Part(usize),
}

/// Attacks from arguments of one component on arguments of another. Each
/// word is written over the alphabet of its own component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossAttack {
    pub from: Component,
    pub to: Component,
    pub pairs: Vec<(Word, Word)>,
}

struct Piece<'a> {
    alphabet: Alphabet,
    regex: RegexAst,
    name: String,
    contains: Box<dyn Fn(&Word) -> bool + 'a>,
}

/// Builds the combined specification. The finite part keeps its own
/// encoding, every part has its attack restricted to its own arguments, and
/// each cross set contributes one attack term.
pub fn combine(finite: Option<&FiniteAf>, parts: &[AfSpec], cross: &[CrossAttack]) -> Result<AfSpec> {
    if finite.is_none() && parts.is_empty() {
        return Err(Error::Usage("nothing to combine".into()));
    }
    let finite_piece = finite
        .map(|f| -> Result<Piece> {
            Ok(Piece {
                alphabet: Alphabet::new(f.names().iter().cloned())?,
                regex: f.symbols_regex(),
                name: "finite".into(),
                contains: Box::new(move |w: &Word| w.len() == 1 && w.symbols()[0] < f.len()),
            })
        })
        .transpose()?;
    let part_pieces: Vec<Piece> = parts
        .iter()
        .enumerate()
        .map(|(i, p)| Piece {
            alphabet: p.alphabet().clone(),
            regex: p.argument_regex().clone(),
            name: format!("part {i}"),
            contains: Box::new(move |w: &Word| p.is_argument(w)),
        })
        .collect();
    let piece = |c: Component| -> Result<&Piece> {
        match c {
            Component::Finite => finite_piece
                .as_ref()
                .ok_or_else(|| Error::Usage("cross attack refers to a missing finite part".into())),
            Component::Part(i) => part_pieces
                .get(i)
                .ok_or_else(|| Error::Usage(format!("cross attack refers to missing part {i}"))),
        }
    };

    let mut symbols: Vec<String> = Vec::new();
    let mut seen = BTreeSet::new();
    for p in finite_piece.iter().chain(&part_pieces) {
        for s in p.alphabet.symbols() {
            if !seen.insert(s.clone()) {
                return Err(Error::AlphabetOverlap(s.clone()));
            }
            symbols.push(s.clone());
        }
    }
    let alphabet = Alphabet::new(symbols)?;

    let mut terms = Vec::new();
    if let Some(f) = finite {
        terms.push(f.attack_expr());
    }
    for (p, piece) in parts.iter().zip(&part_pieces) {
        let k = piece.regex.clone();
        let restricted = p.attack().map_leaves(&mut |leaf| {
            let guard = AttackExpr::intersect(AttackExpr::Identity, k.clone());
            match leaf {
                // hd(σ·(I ∩ K))
                AttackExpr::Sym(s) => AttackExpr::hd(AttackExpr::concat_left(RegexAst::symbol(s), guard)),
                _ => guard,
            }
        });
        terms.push(restricted);
    }
    for c in cross {
        if c.pairs.is_empty() {
            continue;
        }
        if c.from == c.to {
            return Err(Error::Usage("cross attacks must connect distinct components".into()));
        }
        let (from, to) = (piece(c.from)?, piece(c.to)?);
        let mut words = Vec::new();
        for (u, v) in &c.pairs {
            for (w, p) in [(u, from), (v, to)] {
                if !(p.contains)(w) {
                    return Err(Error::BadEndpoint {
                        component: p.name.clone(),
                        word: p.alphabet.render_word(w),
                    });
                }
            }
            let spell = |w: &Word, p: &Piece| {
                RegexAst::concat_all(w.symbols().iter().map(|&s| RegexAst::symbol(p.alphabet.symbol(s))))
            };
            words.push(RegexAst::concat(spell(u, from), spell(v, to)));
        }
        // (((K_i·I) ∩ L_ij) / K_j) ∩ K_i
        terms.push(AttackExpr::intersect(
            AttackExpr::quotient_by(
                AttackExpr::intersect(
                    AttackExpr::concat_left(from.regex.clone(), AttackExpr::Identity),
                    RegexAst::union_all(words),
                ),
                to.regex.clone(),
            ),
            from.regex.clone(),
        ));
    }

    let regex = RegexAst::union_all(finite_piece.iter().chain(&part_pieces).map(|p| p.regex.clone()));
    let attack = AttackExpr::union_all(terms).expect("at least one component");
    AfSpec::new(alphabet, regex, attack)
}
