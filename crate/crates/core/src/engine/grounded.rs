use super::finitary::{finitary_syntactic, FinitaryStatus};
use crate::error::Result;
use crate::semantics::ArgSet;
use crate::spec::AfSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroundedStatus {
    /// The loop ended with no new unattacked arguments.
    Completed,
    /// The iteration bound was reached first; the extension is partial.
    Exhausted,
}

#[derive(Debug, Clone)]
pub struct GroundedResult {
    pub status: GroundedStatus,
    pub extension: ArgSet,
    /// Completed loop iterations.
    pub iterations: usize,
    /// The unattacked sets `Y_0, Y_1, …` added to the extension, in order.
    pub layers: Vec<ArgSet>,
    /// Syntactic finitary status of the spec; the layered construction is
    /// only guaranteed to reach the grounded extension for finitary frameworks.
    pub finitary: FinitaryStatus,
}

/// Layered grounded-extension construction: repeatedly collect unattacked
/// arguments and remove them together with everything they attack.
pub fn grounded(spec: &AfSpec, max_iter: usize) -> Result<GroundedResult> {
    let mut x = spec.argument_dfa().clone();
    let mut y = x.difference(&spec.attacked_unchecked(&x)?)?;
    let mut g = y.clone();
    let mut layers = vec![ArgSet::new(y.clone())];
    let mut k = 0;
    let status = loop {
        if y.is_empty() {
            break GroundedStatus::Completed;
        }
        if k >= max_iter {
            break GroundedStatus::Exhausted;
        }
        let removed = y.union(&spec.attacked_unchecked(&y)?)?;
        x = x.difference(&removed)?;
        y = x.difference(&spec.attacked_unchecked(&x)?)?;
        g = g.union(&y)?;
        layers.push(ArgSet::new(y.clone()));
        k += 1;
    };
    Ok(GroundedResult {
        status,
        extension: ArgSet::new(g),
        iterations: k,
        layers,
        finitary: finitary_syntactic(spec),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::{Alphabet, Word};
    use crate::expr::{parse_attack_expr, parse_regex};

    fn spec(a: &str) -> AfSpec {
        let alphabet = Alphabet::new(["0"]).unwrap();
        AfSpec::new(
            alphabet.clone(),
            parse_regex("0 0*", &alphabet).unwrap(),
            parse_attack_expr(a, &alphabet).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn terminates_on_periodic_framework() {
        let r = spec("((I & [0 (0 0 0)*]) . [0]) U tl(I & [0 0 (0 0 0)*]) U ((I & [0 0 (0 0 0)*]) . [0])");
        let res = grounded(&r, 10).unwrap();
        assert_eq!(res.status, GroundedStatus::Completed);
        assert_eq!(res.iterations, 2);
        assert_eq!(res.extension, r.set_from_regex("0 0 0 (0 0 0)* + 0 (0 0 0)*").unwrap());
        assert_eq!(res.finitary, FinitaryStatus::Unknown);
    }

    #[test]
    fn exhausts_on_unbounded_chain() {
        let u = spec("tl(I)");
        let res = grounded(&u, 4).unwrap();
        assert_eq!(res.status, GroundedStatus::Exhausted);
        assert_eq!(res.iterations, 4);
        let expected: Vec<Word> = [1, 3, 5, 7, 9].iter().map(|&n| Word(vec![0; n])).collect();
        assert_eq!(res.extension, u.set_from_words(&expected));
        assert_eq!(res.layers.len(), 5);
    }

    #[test]
    fn zero_budget_still_reports_first_layer() {
        let u = spec("tl(I)");
        let res = grounded(&u, 0).unwrap();
        assert_eq!(res.status, GroundedStatus::Exhausted);
        assert_eq!(res.extension, u.set_from_regex("0").unwrap());
        let selfish = spec("I");
        let res = grounded(&selfish, 0).unwrap();
        assert_eq!(res.status, GroundedStatus::Completed);
        assert!(res.extension.is_empty());
    }
}
