use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use super::minimize::canonicalize;
use super::nfa::Nfa;
use super::{Alphabet, AutomataError, SymbolId, Word};

/// A complete deterministic finite automaton.
///
/// Transitions are stored row-major: the successor of state `q` on symbol
/// `s` lives at `next[q * k + s]` where `k` is the alphabet size.
#[derive(Clone, PartialEq, Eq)]
pub struct Dfa {
    alphabet: Alphabet,
    start: usize,
    accepting: Vec<bool>,
    next: Vec<usize>,
}

impl Dfa {
    /// Builds an automaton from an explicit table (`table[q][s]` is the
    /// successor of `q` on `s`). The result is not canonicalized.
    pub fn new(
        alphabet: Alphabet,
        start: usize,
        accepting: &[usize],
        table: Vec<Vec<usize>>,
    ) -> Result<Self, AutomataError> {
        let n = table.len();
        let k = alphabet.len();
        if n == 0 {
            return Err(AutomataError::Malformed("no states".into()));
        }
        if start >= n {
            return Err(AutomataError::Malformed(format!("start state {start} out of range")));
        }
        let mut acc = vec![false; n];
        for &q in accepting {
            if q >= n {
                return Err(AutomataError::Malformed(format!("accepting state {q} out of range")));
            }
            acc[q] = true;
        }
        let mut next = Vec::with_capacity(n * k);
        for (q, row) in table.into_iter().enumerate() {
            if row.len() != k {
                return Err(AutomataError::Malformed(format!(
                    "state {q} has {} transitions, expected {k}",
                    row.len()
                )));
            }
            if let Some(&bad) = row.iter().find(|&&t| t >= n) {
                return Err(AutomataError::Malformed(format!("transition target {bad} out of range")));
            }
            next.extend(row);
        }
        Ok(Dfa {
            alphabet,
            start,
            accepting: acc,
            next,
        })
    }

    pub(crate) fn from_raw(alphabet: Alphabet, start: usize, accepting: Vec<bool>, next: Vec<usize>) -> Self {
        debug_assert_eq!(next.len(), accepting.len() * alphabet.len());
        Dfa {
            alphabet,
            start,
            accepting,
            next,
        }
    }

    pub fn empty(alphabet: &Alphabet) -> Self {
        let k = alphabet.len();
        Dfa::from_raw(alphabet.clone(), 0, vec![false], vec![0; k])
    }

    pub fn universe(alphabet: &Alphabet) -> Self {
        let k = alphabet.len();
        Dfa::from_raw(alphabet.clone(), 0, vec![true], vec![0; k])
    }

    pub fn epsilon(alphabet: &Alphabet) -> Self {
        Dfa::word(alphabet, &Word::empty())
    }

    pub fn symbol(alphabet: &Alphabet, sym: SymbolId) -> Self {
        Dfa::symbols(alphabet, [sym])
    }

    /// The language of one-letter words over the given symbols.
    pub fn symbols<I: IntoIterator<Item = SymbolId>>(alphabet: &Alphabet, syms: I) -> Self {
        let k = alphabet.len();
        let mut next = vec![2; 3 * k];
        for s in syms {
            next[s] = 1;
        }
        canonicalize(alphabet, 0, &[false, true, false], &next)
    }

    /// Σ, the language of all one-letter words.
    pub fn any_symbol(alphabet: &Alphabet) -> Self {
        Dfa::symbols(alphabet, alphabet.ids())
    }

    pub fn word(alphabet: &Alphabet, word: &Word) -> Self {
        Dfa::from_words(alphabet, std::slice::from_ref(word))
    }

    /// The finite language containing exactly the given words.
    pub fn from_words<'a, I>(alphabet: &Alphabet, words: I) -> Self
    where
        I: IntoIterator<Item = &'a Word>,
    {
        let k = alphabet.len();
        // trie with a shared dead state at index 0
        let mut next = vec![0; 2 * k];
        let mut accepting = vec![false, false];
        for w in words {
            let mut q = 1;
            for &s in w.symbols() {
                let t = next[q * k + s];
                q = if t == 0 {
                    let fresh = accepting.len();
                    accepting.push(false);
                    next.extend(std::iter::repeat(0).take(k));
                    next[q * k + s] = fresh;
                    fresh
                } else {
                    t
                };
            }
            accepting[q] = true;
        }
        canonicalize(alphabet, 1, &accepting, &next)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.accepting.len()
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn is_accepting(&self, q: usize) -> bool {
        self.accepting[q]
    }

    pub fn accepting_states(&self) -> Vec<usize> {
        (0..self.state_count()).filter(|&q| self.accepting[q]).collect()
    }

    pub fn step(&self, q: usize, sym: SymbolId) -> usize {
        self.next[q * self.alphabet.len() + sym]
    }

    /// All transitions as `(from, symbol, to)`, ordered by state then symbol.
    pub fn transitions(&self) -> impl Iterator<Item = (usize, SymbolId, usize)> + '_ {
        let k = self.alphabet.len();
        self.next.iter().enumerate().map(move |(i, &t)| (i / k, i % k, t))
    }

    pub(crate) fn raw_accepting(&self) -> &[bool] {
        &self.accepting
    }

    pub fn run(&self, syms: &[SymbolId]) -> usize {
        syms.iter().fold(self.start, |q, &s| self.step(q, s))
    }

    pub fn contains(&self, word: &Word) -> bool {
        self.accepting[self.run(word.symbols())]
    }

    /// Minimal automaton for the same language, in canonical numbering.
    pub fn minimize(&self) -> Dfa {
        canonicalize(&self.alphabet, self.start, &self.accepting, &self.next)
    }

    fn check_same(&self, other: &Dfa) -> Result<(), AutomataError> {
        if self.alphabet == other.alphabet {
            Ok(())
        } else {
            Err(AutomataError::AlphabetMismatch)
        }
    }

    fn product(&self, other: &Dfa, op: impl Fn(bool, bool) -> bool) -> Result<Dfa, AutomataError> {
        self.check_same(other)?;
        let k = self.alphabet.len();
        let n2 = other.state_count();
        let mut index = vec![usize::MAX; self.state_count() * n2];
        let mut pairs = vec![(self.start, other.start)];
        index[self.start * n2 + other.start] = 0;
        let mut next = Vec::new();
        let mut accepting = Vec::new();
        let mut i = 0;
        while i < pairs.len() {
            let (p, q) = pairs[i];
            accepting.push(op(self.accepting[p], other.accepting[q]));
            for s in 0..k {
                let (tp, tq) = (self.step(p, s), other.step(q, s));
                let slot = &mut index[tp * n2 + tq];
                if *slot == usize::MAX {
                    *slot = pairs.len();
                    pairs.push((tp, tq));
                }
                next.push(*slot);
            }
            i += 1;
        }
        Ok(canonicalize(&self.alphabet, 0, &accepting, &next))
    }

    pub fn union(&self, other: &Dfa) -> Result<Dfa, AutomataError> {
        self.product(other, |a, b| a || b)
    }

    pub fn intersect(&self, other: &Dfa) -> Result<Dfa, AutomataError> {
        self.product(other, |a, b| a && b)
    }

    pub fn difference(&self, other: &Dfa) -> Result<Dfa, AutomataError> {
        self.product(other, |a, b| a && !b)
    }

    pub fn complement(&self) -> Dfa {
        let accepting: Vec<bool> = self.accepting.iter().map(|a| !a).collect();
        canonicalize(&self.alphabet, self.start, &accepting, &self.next)
    }

    pub fn concat(&self, other: &Dfa) -> Result<Dfa, AutomataError> {
        self.check_same(other)?;
        let mut nfa = Nfa::new(self.alphabet.len());
        let a = nfa.embed(self);
        let b = nfa.embed(other);
        nfa.starts.push(a + self.start);
        for q in 0..self.state_count() {
            if self.accepting[q] {
                nfa.add_eps(a + q, b + other.start);
            }
        }
        for q in 0..other.state_count() {
            nfa.accepting[b + q] = other.accepting[q];
        }
        Ok(nfa.determinize(&self.alphabet))
    }

    pub fn star(&self) -> Dfa {
        let mut nfa = Nfa::new(self.alphabet.len());
        let hub = nfa.add_state(true);
        let a = nfa.embed(self);
        nfa.starts.push(hub);
        nfa.add_eps(hub, a + self.start);
        for q in 0..self.state_count() {
            if self.accepting[q] {
                nfa.add_eps(a + q, hub);
            }
        }
        nfa.determinize(&self.alphabet)
    }

    /// Right quotient `self / other = { u | ∃ v ∈ other. uv ∈ self }`.
    pub fn quotient(&self, other: &Dfa) -> Result<Dfa, AutomataError> {
        self.check_same(other)?;
        let k = self.alphabet.len();
        let (n1, n2) = (self.state_count(), other.state_count());
        let pred1 = self.predecessors();
        let pred2 = other.predecessors();
        let mut good = vec![false; n1 * n2];
        let mut queue = VecDeque::new();
        for p in 0..n1 {
            for q in 0..n2 {
                if self.accepting[p] && other.accepting[q] {
                    good[p * n2 + q] = true;
                    queue.push_back((p, q));
                }
            }
        }
        while let Some((p, q)) = queue.pop_front() {
            for s in 0..k {
                for &pp in &pred1[p * k + s] {
                    for &qq in &pred2[q * k + s] {
                        let slot = &mut good[pp * n2 + qq];
                        if !*slot {
                            *slot = true;
                            queue.push_back((pp, qq));
                        }
                    }
                }
            }
        }
        let accepting: Vec<bool> = (0..n1).map(|p| good[p * n2 + other.start]).collect();
        Ok(canonicalize(&self.alphabet, self.start, &accepting, &self.next))
    }

    pub fn reverse(&self) -> Dfa {
        let k = self.alphabet.len();
        let mut nfa = Nfa::new(k);
        for q in 0..self.state_count() {
            nfa.add_state(q == self.start);
        }
        for (q, s, t) in self.transitions() {
            nfa.add_edge(t, s, q);
        }
        nfa.starts = self.accepting_states();
        nfa.determinize(&self.alphabet)
    }

    /// First symbols of the nonempty words of the language.
    pub fn head(&self) -> BTreeSet<SymbolId> {
        let productive = self.productive();
        self.alphabet
            .ids()
            .filter(|&s| productive[self.step(self.start, s)])
            .collect()
    }

    /// `{ v | ∃ σ. σv ∈ L }`.
    pub fn tail(&self) -> Dfa {
        let mut nfa = Nfa::new(self.alphabet.len());
        let a = nfa.embed(self);
        for q in 0..self.state_count() {
            nfa.accepting[a + q] = self.accepting[q];
        }
        for s in self.alphabet.ids() {
            nfa.starts.push(a + self.step(self.start, s));
        }
        nfa.determinize(&self.alphabet)
    }

    pub fn is_empty(&self) -> bool {
        let reach = self.reachable();
        !(0..self.state_count()).any(|q| reach[q] && self.accepting[q])
    }

    pub fn is_universal(&self) -> bool {
        self.complement().is_empty()
    }

    pub fn is_subset(&self, other: &Dfa) -> Result<bool, AutomataError> {
        Ok(self.difference(other)?.is_empty())
    }

    /// Language equality.
    pub fn equivalent(&self, other: &Dfa) -> Result<bool, AutomataError> {
        self.check_same(other)?;
        Ok(self.minimize() == other.minimize())
    }

    pub fn is_finite_language(&self) -> bool {
        let reach = self.reachable();
        let prod = self.productive();
        let useful: Vec<bool> = (0..self.state_count()).map(|q| reach[q] && prod[q]).collect();
        // iterative three-colour DFS over useful states
        let k = self.alphabet.len();
        let mut colour = vec![0u8; self.state_count()];
        for root in 0..self.state_count() {
            if !useful[root] || colour[root] != 0 {
                continue;
            }
            let mut stack = vec![(root, 0usize)];
            colour[root] = 1;
            while let Some(top) = stack.last_mut() {
                let (q, s) = *top;
                if s == k {
                    colour[q] = 2;
                    stack.pop();
                    continue;
                }
                top.1 += 1;
                let t = self.step(q, s);
                if !useful[t] {
                    continue;
                }
                match colour[t] {
                    0 => {
                        colour[t] = 1;
                        stack.push((t, 0));
                    }
                    1 => return false,
                    _ => {}
                }
            }
        }
        true
    }

    pub(crate) fn reachable(&self) -> Vec<bool> {
        let mut seen = vec![false; self.state_count()];
        seen[self.start] = true;
        let mut stack = vec![self.start];
        while let Some(q) = stack.pop() {
            for s in self.alphabet.ids() {
                let t = self.step(q, s);
                if !seen[t] {
                    seen[t] = true;
                    stack.push(t);
                }
            }
        }
        seen
    }

    /// States from which some accepting state is reachable.
    pub(crate) fn productive(&self) -> Vec<bool> {
        let k = self.alphabet.len();
        let pred = self.predecessors();
        let mut seen = self.accepting.clone();
        let mut stack: Vec<usize> = self.accepting_states();
        while let Some(q) = stack.pop() {
            for s in 0..k {
                for &p in &pred[q * k + s] {
                    if !seen[p] {
                        seen[p] = true;
                        stack.push(p);
                    }
                }
            }
        }
        seen
    }

    // pred[t * k + s] lists the states stepping to t on s
    fn predecessors(&self) -> Vec<Vec<usize>> {
        let k = self.alphabet.len();
        let mut pred = vec![Vec::new(); self.state_count() * k];
        for (q, s, t) in self.transitions() {
            pred[t * k + s].push(q);
        }
        pred
    }
}

impl fmt::Debug for Dfa {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "Dfa {{ alphabet: {:?}, start: {}, accepting: {:?}",
            self.alphabet,
            self.start,
            self.accepting_states()
        )?;
        for q in 0..self.state_count() {
            let row: Vec<usize> = self.alphabet.ids().map(|s| self.step(q, s)).collect();
            writeln!(f, "  {q}: {row:?}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unary() -> Alphabet {
        Alphabet::new(["0"]).unwrap()
    }

    fn ab() -> Alphabet {
        Alphabet::new(["a", "b"]).unwrap()
    }

    fn w(a: &Alphabet, s: &str) -> Word {
        a.parse_word(s).unwrap()
    }

    #[test]
    fn constructors_are_canonical() {
        let a = ab();
        assert_eq!(Dfa::empty(&a).state_count(), 1);
        assert_eq!(Dfa::universe(&a).state_count(), 1);
        assert_eq!(Dfa::epsilon(&a).state_count(), 2);
        let words = Dfa::from_words(&a, &[w(&a, "ab"), w(&a, "b")]);
        assert!(words.contains(&w(&a, "ab")));
        assert!(words.contains(&w(&a, "b")));
        assert!(!words.contains(&w(&a, "a")));
        assert_eq!(words, words.minimize());
    }

    #[test]
    fn new_validates_table() {
        let a = ab();
        assert!(Dfa::new(a.clone(), 0, &[0], vec![vec![0]]).is_err());
        assert!(Dfa::new(a.clone(), 1, &[0], vec![vec![0, 0]]).is_err());
        assert!(Dfa::new(a.clone(), 0, &[0], vec![vec![0, 3]]).is_err());
        assert!(Dfa::new(a, 0, &[0], vec![vec![0, 0]]).is_ok());
    }

    #[test]
    fn boolean_operations() {
        let a = unary();
        let even = Dfa::new(a.clone(), 0, &[0], vec![vec![1], vec![0]]).unwrap();
        let odd = even.complement();
        assert!(odd.contains(&w(&a, "0")));
        assert!(even.union(&odd).unwrap().is_universal());
        assert!(even.intersect(&odd).unwrap().is_empty());
        assert!(even.is_subset(&Dfa::universe(&a)).unwrap());
        assert!(!Dfa::universe(&a).is_subset(&even).unwrap());
        let other = Dfa::empty(&ab());
        assert_eq!(even.union(&other), Err(AutomataError::AlphabetMismatch));
    }

    #[test]
    fn quotient_reverse_head_tail() {
        let a = ab();
        let l = Dfa::from_words(&a, &[w(&a, "aab"), w(&a, "ba")]);
        let q = l.quotient(&Dfa::symbol(&a, 1)).unwrap();
        assert_eq!(q, Dfa::word(&a, &w(&a, "aa")));
        let r = l.reverse();
        assert_eq!(r, Dfa::from_words(&a, &[w(&a, "baa"), w(&a, "ab")]));
        assert_eq!(l.head(), [0, 1].into_iter().collect());
        assert_eq!(l.tail(), Dfa::from_words(&a, &[w(&a, "ab"), w(&a, "a")]));
        assert!(Dfa::epsilon(&a).head().is_empty());
    }

    #[test]
    fn star_and_concat() {
        let a = unary();
        let two = Dfa::word(&a, &w(&a, "00"));
        let evens = two.star();
        assert!(evens.contains(&Word::empty()));
        assert!(evens.contains(&w(&a, "0000")));
        assert!(!evens.contains(&w(&a, "000")));
        let odds = Dfa::symbol(&a, 0).concat(&evens).unwrap();
        assert_eq!(odds, evens.complement());
        assert!(!evens.is_finite_language());
        assert!(two.is_finite_language());
        assert!(Dfa::empty(&a).is_finite_language());
    }

    #[test]
    fn empty_alphabet() {
        let a = Alphabet::new(Vec::<String>::new()).unwrap();
        let u = Dfa::universe(&a);
        assert_eq!(u, Dfa::epsilon(&a));
        assert!(u.star().contains(&Word::empty()));
        assert!(u.tail().is_empty());
    }
}
