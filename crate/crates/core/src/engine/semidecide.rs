//! Bounded semi-decision procedures for finitary frameworks.
//!
//! Both procedures walk the argument language in length-lexicographic order,
//! add the clauses contributed by each new argument and report `Proven` as
//! soon as the accumulated clauses are unsatisfiable.

use std::collections::{BTreeSet, HashMap};

use super::finitary::{attackers_of_word, WordAttackers, DEFAULT_ATTACKER_CAP};
use super::sat::{sat_solve, ClauseSet};
use crate::automata::Word;
use crate::error::{Error, Result};
use crate::spec::AfSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SemiStatus {
    Proven,
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemiDecisionResult {
    pub status: SemiStatus,
    /// Number of enumerated arguments when unsatisfiability was found, or
    /// when the budget (or a finite argument language) ran out.
    pub witness_k: usize,
    pub clauses: usize,
    pub variables: usize,
}

struct Attackers<'a> {
    spec: &'a AfSpec,
    cap: usize,
    memo: HashMap<Word, Vec<Word>>,
}

impl<'a> Attackers<'a> {
    fn new(spec: &'a AfSpec) -> Self {
        Attackers {
            spec,
            cap: DEFAULT_ATTACKER_CAP,
            memo: HashMap::new(),
        }
    }

    fn of(&mut self, w: &Word) -> Result<Vec<Word>> {
        if let Some(v) = self.memo.get(w) {
            return Ok(v.clone());
        }
        let list = match attackers_of_word(self.spec, w, self.cap)? {
            WordAttackers::Finite(v) => v,
            WordAttackers::NonFinitaryAt(w) => return Err(Error::NonFinitary(self.spec.render_word(&w))),
            WordAttackers::CapExceeded { word, cap } => {
                return Err(Error::CapExceeded {
                    word: self.spec.render_word(&word),
                    cap,
                })
            }
        };
        self.memo.insert(w.clone(), list.clone());
        Ok(list)
    }
}

fn result(status: SemiStatus, k: usize, c: &ClauseSet) -> SemiDecisionResult {
    SemiDecisionResult {
        status,
        witness_k: k,
        clauses: c.clauses().len(),
        variables: c.num_vars(),
    }
}

/// Semi-decides that the framework has no stable extension.
///
/// For each enumerated argument `z` it adds `¬z ∨ ¬y` for every attacker
/// `y` (conflict-freeness) and `z ∨ y₁ ∨ … ∨ yₙ` (z is in or attacked).
pub fn stable_empty_semidecide(spec: &AfSpec, budget: usize) -> Result<SemiDecisionResult> {
    let mut attackers = Attackers::new(spec);
    let mut cnf = ClauseSet::new();
    let mut k = 0;
    for w in spec.argument_dfa().words().take(budget) {
        k += 1;
        let z = cnf.var(&w);
        let att = attackers.of(&w)?;
        let mut range = vec![z];
        for y in &att {
            let vy = cnf.var(y);
            cnf.add_clause(vec![-z, -vy]);
            range.push(vy);
        }
        cnf.add_clause(range);
        if !sat_solve(&cnf).is_sat() {
            return Ok(result(SemiStatus::Proven, k, &cnf));
        }
    }
    Ok(result(SemiStatus::Unknown, k, &cnf))
}

/// Semi-decides that no word of the finite set `r` belongs to any
/// admissible set.
///
/// The tracked set starts as `r` and grows only with the enumerated
/// arguments. Each tracked `z` contributes conflict clauses and, for every
/// attacker `y`, a defence clause `¬z ∨ c₁ ∨ … ∨ cₘ` over the attackers of
/// `y`; one further clause requires some member of `r` to be chosen.
pub fn no_credulous_admissible(spec: &AfSpec, r: &[Word], budget: usize) -> Result<SemiDecisionResult> {
    for w in r {
        spec.require_argument(w)?;
    }
    let mut attackers = Attackers::new(spec);
    let mut cnf = ClauseSet::new();
    let mut tracked: BTreeSet<Word> = BTreeSet::new();

    let mut track = |w: &Word, cnf: &mut ClauseSet, attackers: &mut Attackers| -> Result<()> {
        if !tracked.insert(w.clone()) {
            return Ok(());
        }
        let z = cnf.var(w);
        for y in attackers.of(w)? {
            let vy = cnf.var(&y);
            cnf.add_clause(vec![-z, -vy]);
            let mut def = vec![-z];
            for c in attackers.of(&y)? {
                def.push(cnf.var(&c));
            }
            cnf.add_clause(def);
        }
        Ok(())
    };

    let mut sorted: Vec<Word> = r.to_vec();
    sorted.sort();
    sorted.dedup();
    for w in &sorted {
        cnf.var(w);
    }
    let in_r: Vec<i32> = sorted.iter().map(|w| cnf.var(w)).collect();
    cnf.add_clause(in_r);
    for w in &sorted {
        track(w, &mut cnf, &mut attackers)?;
    }
    if !sat_solve(&cnf).is_sat() {
        return Ok(result(SemiStatus::Proven, 0, &cnf));
    }

    let mut k = 0;
    for w in spec.argument_dfa().words().take(budget) {
        k += 1;
        track(&w, &mut cnf, &mut attackers)?;
        if !sat_solve(&cnf).is_sat() {
            return Ok(result(SemiStatus::Proven, k, &cnf));
        }
    }
    Ok(result(SemiStatus::Unknown, k, &cnf))
}
