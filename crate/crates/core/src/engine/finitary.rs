use crate::automata::{Dfa, Word};
use crate::error::Result;
use crate::spec::AfSpec;

pub const DEFAULT_ATTACKER_CAP: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FinitaryStatus {
    /// No regex operand of the attack uses `*`, which suffices for every
    /// argument to have finitely many attackers.
    Guaranteed,
    /// The syntactic test is inconclusive.
    Unknown,
}

pub fn finitary_syntactic(spec: &AfSpec) -> FinitaryStatus {
    if spec.attack().restrictions_star_free() {
        FinitaryStatus::Guaranteed
    } else {
        FinitaryStatus::Unknown
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WordAttackers {
    /// Every attacker, in length-lexicographic order.
    Finite(Vec<Word>),
    NonFinitaryAt(Word),
    CapExceeded { word: Word, cap: usize },
}

/// The attackers of a single argument, enumerated when finite.
pub fn attackers_of_word(spec: &AfSpec, w: &Word, cap: usize) -> Result<WordAttackers> {
    spec.require_argument(w)?;
    let att = spec.attackers_unchecked(&Dfa::word(spec.alphabet(), w))?;
    if !att.is_finite_language() {
        return Ok(WordAttackers::NonFinitaryAt(w.clone()));
    }
    let words: Vec<Word> = att.words().take(cap + 1).collect();
    if words.len() > cap {
        return Ok(WordAttackers::CapExceeded { word: w.clone(), cap });
    }
    Ok(WordAttackers::Finite(words))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::Alphabet;
    use crate::expr::{parse_attack_expr, parse_regex};

    fn spec(x: &str, a: &str) -> AfSpec {
        let alphabet = Alphabet::new(["0"]).unwrap();
        AfSpec::new(
            alphabet.clone(),
            parse_regex(x, &alphabet).unwrap(),
            parse_attack_expr(a, &alphabet).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn syntactic_test() {
        assert_eq!(finitary_syntactic(&spec("0 0*", "tl(I)")), FinitaryStatus::Guaranteed);
        assert_eq!(finitary_syntactic(&spec("0 0*", "I . [0]")), FinitaryStatus::Guaranteed);
        assert_eq!(
            finitary_syntactic(&spec("0 0*", "I & [0 (0 0)*]")),
            FinitaryStatus::Unknown
        );
    }

    #[test]
    fn per_word_attackers() {
        let u = spec("0 0*", "tl(I)");
        let w = |t: &str| u.parse_word(t).unwrap();
        assert_eq!(attackers_of_word(&u, &w("0"), 10).unwrap(), WordAttackers::Finite(vec![]));
        assert_eq!(
            attackers_of_word(&u, &w("000"), 10).unwrap(),
            WordAttackers::Finite(vec![w("00")])
        );
        assert!(attackers_of_word(&u, &Word::empty(), 10).is_err());

        let s = spec("0 0*", "I");
        let w2 = s.parse_word("00").unwrap();
        assert_eq!(
            attackers_of_word(&s, &w2, 10).unwrap(),
            WordAttackers::Finite(vec![w2.clone()])
        );
        assert_eq!(
            attackers_of_word(&s, &w2, 0).unwrap(),
            WordAttackers::CapExceeded { word: w2, cap: 0 }
        );

        // every argument attacks 0
        let all = spec("0 0*", "(I & [0]) . [0*]");
        let zero = all.parse_word("0").unwrap();
        assert_eq!(
            attackers_of_word(&all, &zero, 10).unwrap(),
            WordAttackers::NonFinitaryAt(zero)
        );
    }
}
