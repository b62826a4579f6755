//! Length-lexicographic enumeration of accepted words.

use super::{Dfa, SymbolId, Word};

/// Lazy iterator over the words of a language, shortest first and
/// lexicographic by symbol index within a length.
pub struct Words<'a> {
    dfa: &'a Dfa,
    // rows[r][q]: some word of length exactly r leads from q to acceptance
    rows: Vec<Vec<bool>>,
    len: usize,
    started: bool,
    bound: Option<usize>,
    stack: Vec<(usize, SymbolId)>,
    current: Vec<SymbolId>,
    done: bool,
}

impl<'a> Words<'a> {
    pub(crate) fn new(dfa: &'a Dfa) -> Self {
        let finite = dfa.is_finite_language();
        Words {
            dfa,
            rows: vec![dfa.raw_accepting().to_vec()],
            len: 0,
            started: false,
            // in a finite language no accepted word is longer than the state count
            bound: finite.then(|| dfa.state_count()),
            stack: Vec::new(),
            current: Vec::new(),
            done: dfa.is_empty(),
        }
    }

    fn row(&mut self, r: usize) -> &[bool] {
        let dfa = self.dfa;
        while self.rows.len() <= r {
            let prev = self.rows.last().unwrap();
            let row = (0..dfa.state_count())
                .map(|q| dfa.alphabet().ids().any(|s| prev[dfa.step(q, s)]))
                .collect();
            self.rows.push(row);
        }
        &self.rows[r]
    }
}

impl Iterator for Words<'_> {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        let k = self.dfa.alphabet().len();
        loop {
            if self.done {
                return None;
            }
            if self.stack.is_empty() {
                if self.started {
                    self.len += 1;
                }
                self.started = true;
                if self.bound.is_some_and(|b| self.len > b) {
                    self.done = true;
                    return None;
                }
                let start = self.dfa.start();
                let len = self.len;
                if !self.row(len)[start] {
                    continue;
                }
                if len == 0 {
                    return Some(Word::empty());
                }
                self.current.clear();
                self.stack.push((start, 0));
            }
            let depth = self.stack.len() - 1;
            let remaining = self.len - depth;
            let (q, from) = *self.stack.last().unwrap();
            let dfa = self.dfa;
            let found = {
                let row = self.row(remaining - 1);
                (from..k).find(|&s| row[dfa.step(q, s)])
            };
            match found {
                None => {
                    self.stack.pop();
                    if !self.stack.is_empty() {
                        self.current.pop();
                    }
                }
                Some(s) => {
                    self.stack.last_mut().unwrap().1 = s + 1;
                    self.current.push(s);
                    if remaining == 1 {
                        let word = Word(self.current.clone());
                        self.current.pop();
                        return Some(word);
                    }
                    self.stack.push((self.dfa.step(q, s), 0));
                }
            }
        }
    }
}

impl Dfa {
    pub fn words(&self) -> Words<'_> {
        Words::new(self)
    }

    /// At most `max_count` accepted words of length at most `max_len`, in
    /// length-lexicographic order.
    pub fn enumerate_words(&self, max_count: usize, max_len: usize) -> Vec<Word> {
        self.words()
            .take_while(|w| w.len() <= max_len)
            .take(max_count)
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::Alphabet;

    #[test]
    fn enumerates_in_length_lex_order() {
        let a = Alphabet::new(["a", "b"]).unwrap();
        let all = Dfa::universe(&a);
        let got: Vec<String> = all.words().take(7).map(|w| a.render_word(&w)).collect();
        assert_eq!(got, ["ε", "a", "b", "aa", "ab", "ba", "bb"]);
    }

    #[test]
    fn skips_gaps_and_stops_on_finite() {
        let a = Alphabet::new(["0"]).unwrap();
        let l = Dfa::from_words(&a, &[Word(vec![0; 5]), Word(vec![0; 2])]);
        let got: Vec<usize> = l.words().map(|w| w.len()).collect();
        assert_eq!(got, [2, 5]);
        assert_eq!(Dfa::empty(&a).words().count(), 0);
        let evens = Dfa::word(&a, &Word(vec![0, 0])).star();
        assert_eq!(evens.enumerate_words(100, 6).len(), 4);
        assert_eq!(evens.enumerate_words(2, 100).len(), 2);
    }
}
