use super::nfa::Nfa;
use super::{Alphabet, AutomataError, Dfa};
use crate::expr::RegexAst;

/// Compiles a regular expression into a canonical automaton via a Thompson
/// construction and subset construction.
pub fn compile_regex(regex: &RegexAst, alphabet: &Alphabet) -> Result<Dfa, AutomataError> {
    let mut nfa = Nfa::new(alphabet.len());
    let (start, end) = build(regex, alphabet, &mut nfa)?;
    nfa.starts.push(start);
    nfa.accepting[end] = true;
    Ok(nfa.determinize(alphabet))
}

fn build(r: &RegexAst, alphabet: &Alphabet, nfa: &mut Nfa) -> Result<(usize, usize), AutomataError> {
    Ok(match r {
        RegexAst::Empty => (nfa.add_state(false), nfa.add_state(false)),
        RegexAst::Epsilon => {
            let (s, e) = (nfa.add_state(false), nfa.add_state(false));
            nfa.add_eps(s, e);
            (s, e)
        }
        RegexAst::Symbol(name) => {
            let id = alphabet
                .index_of(name)
                .ok_or_else(|| AutomataError::UnknownSymbol(name.clone()))?;
            let (s, e) = (nfa.add_state(false), nfa.add_state(false));
            nfa.add_edge(s, id, e);
            (s, e)
        }
        RegexAst::Union(a, b) => {
            let (sa, ea) = build(a, alphabet, nfa)?;
            let (sb, eb) = build(b, alphabet, nfa)?;
            let (s, e) = (nfa.add_state(false), nfa.add_state(false));
            nfa.add_eps(s, sa);
            nfa.add_eps(s, sb);
            nfa.add_eps(ea, e);
            nfa.add_eps(eb, e);
            (s, e)
        }
        RegexAst::Concat(a, b) => {
            let (sa, ea) = build(a, alphabet, nfa)?;
            let (sb, eb) = build(b, alphabet, nfa)?;
            nfa.add_eps(ea, sb);
            (sa, eb)
        }
        RegexAst::Star(a) => {
            let (sa, ea) = build(a, alphabet, nfa)?;
            let (s, e) = (nfa.add_state(false), nfa.add_state(false));
            nfa.add_eps(s, sa);
            nfa.add_eps(s, e);
            nfa.add_eps(ea, sa);
            nfa.add_eps(ea, e);
            (s, e)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse_regex;

    #[test]
    fn compiles_periodic_language() {
        let a = Alphabet::new(["0"]).unwrap();
        let d = compile_regex(&parse_regex("0 (0 0 0)*", &a).unwrap(), &a).unwrap();
        let lens: Vec<usize> = d.words().take(4).map(|w| w.len()).collect();
        assert_eq!(lens, [1, 4, 7, 10]);
        assert_eq!(d.state_count(), 3);
    }

    #[test]
    fn unknown_symbol_is_rejected() {
        let a = Alphabet::new(["0"]).unwrap();
        let r = RegexAst::Symbol("x".into());
        assert_eq!(
            compile_regex(&r, &a),
            Err(AutomataError::UnknownSymbol("x".into()))
        );
    }
}
