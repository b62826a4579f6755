//! Decision procedures for the standard semantics over regular sets.

use crate::automata::{Dfa, Word};
use crate::error::Result;
use crate::semantics::ArgSet;
use crate::spec::AfSpec;

/// `S ∩ π⁻(S) = ∅`
pub fn is_conflict_free(spec: &AfSpec, s: &ArgSet) -> Result<bool> {
    spec.require_subset(s)?;
    conflict_free(spec, s)
}

fn conflict_free(spec: &AfSpec, s: &Dfa) -> Result<bool> {
    Ok(s.intersect(&spec.attackers_unchecked(s)?)?.is_empty())
}

/// `π⁻({x}) ⊆ π⁺(S)`
pub fn is_acceptable(spec: &AfSpec, x: &Word, s: &ArgSet) -> Result<bool> {
    spec.require_argument(x)?;
    spec.require_subset(s)?;
    let attackers = spec.attackers_unchecked(&Dfa::word(spec.alphabet(), x))?;
    Ok(attackers.is_subset(&spec.attacked_unchecked(s)?)?)
}

/// Conflict-free and `π⁻(S) ⊆ π⁺(S)`.
pub fn is_admissible(spec: &AfSpec, s: &ArgSet) -> Result<bool> {
    spec.require_subset(s)?;
    if !conflict_free(spec, s)? {
        return Ok(false);
    }
    let attackers = spec.attackers_unchecked(s)?;
    Ok(attackers.is_subset(&spec.attacked_unchecked(s)?)?)
}

/// Conflict-free and `S ∪ π⁺(S) = X`.
pub fn is_stable(spec: &AfSpec, s: &ArgSet) -> Result<bool> {
    spec.require_subset(s)?;
    if !conflict_free(spec, s)? {
        return Ok(false);
    }
    let covered = s.union(&spec.attacked_unchecked(s)?)?;
    Ok(covered.equivalent(spec.argument_dfa())?)
}

/// The characteristic function `F(S) = X ∖ π⁺(X ∖ π⁺(S))`.
pub fn characteristic(spec: &AfSpec, s: &ArgSet) -> Result<ArgSet> {
    spec.require_subset(s)?;
    characteristic_unchecked(spec, s)
}

pub(crate) fn characteristic_unchecked(spec: &AfSpec, s: &Dfa) -> Result<ArgSet> {
    let x = spec.argument_dfa();
    let undefended = x.difference(&spec.attacked_unchecked(s)?)?;
    Ok(ArgSet::new(x.difference(&spec.attacked_unchecked(&undefended)?)?))
}

/// Conflict-free and `F(S) = S`.
pub fn is_complete(spec: &AfSpec, s: &ArgSet) -> Result<bool> {
    spec.require_subset(s)?;
    if !conflict_free(spec, s)? {
        return Ok(false);
    }
    Ok(characteristic_unchecked(spec, s)?.equivalent(s)?)
}
