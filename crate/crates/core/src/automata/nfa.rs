use std::collections::HashMap;

use super::minimize::canonicalize;
use super::{Alphabet, Dfa, SymbolId};

/// Nondeterministic automaton with ε-moves, used as an intermediate for
/// concatenation, star, reversal, tail and regex compilation.
pub(crate) struct Nfa {
    k: usize,
    pub starts: Vec<usize>,
    pub accepting: Vec<bool>,
    edges: Vec<Vec<(SymbolId, usize)>>,
    eps: Vec<Vec<usize>>,
}

impl Nfa {
    pub fn new(k: usize) -> Self {
        Nfa {
            k,
            starts: Vec::new(),
            accepting: Vec::new(),
            edges: Vec::new(),
            eps: Vec::new(),
        }
    }

    pub fn add_state(&mut self, accepting: bool) -> usize {
        self.accepting.push(accepting);
        self.edges.push(Vec::new());
        self.eps.push(Vec::new());
        self.accepting.len() - 1
    }

    pub fn add_edge(&mut self, from: usize, sym: SymbolId, to: usize) {
        self.edges[from].push((sym, to));
    }

    pub fn add_eps(&mut self, from: usize, to: usize) {
        self.eps[from].push(to);
    }

    /// Copies the transitions of `dfa` in as fresh non-accepting states and
    /// returns the offset of its state 0.
    pub fn embed(&mut self, dfa: &Dfa) -> usize {
        let base = self.accepting.len();
        for _ in 0..dfa.state_count() {
            self.add_state(false);
        }
        for (q, s, t) in dfa.transitions() {
            self.add_edge(base + q, s, base + t);
        }
        base
    }

    fn close(&self, set: &mut Vec<usize>, mark: &mut [bool]) {
        let mut stack: Vec<usize> = set.clone();
        while let Some(q) = stack.pop() {
            for &t in &self.eps[q] {
                if !mark[t] {
                    mark[t] = true;
                    set.push(t);
                    stack.push(t);
                }
            }
        }
        set.sort_unstable();
        for &q in set.iter() {
            mark[q] = false;
        }
    }

    /// Subset construction followed by canonical minimization.
    pub fn determinize(&self, alphabet: &Alphabet) -> Dfa {
        debug_assert_eq!(alphabet.len(), self.k);
        let n = self.accepting.len();
        let mut mark = vec![false; n];
        let mut initial = Vec::new();
        for &q in &self.starts {
            if !mark[q] {
                mark[q] = true;
                initial.push(q);
            }
        }
        self.close(&mut initial, &mut mark);

        let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut subsets = vec![initial.clone()];
        index.insert(initial, 0);
        let mut next = Vec::new();
        let mut accepting = Vec::new();
        let mut i = 0;
        while i < subsets.len() {
            let current = subsets[i].clone();
            accepting.push(current.iter().any(|&q| self.accepting[q]));
            for s in 0..self.k {
                let mut target = Vec::new();
                for &q in &current {
                    for &(sym, t) in &self.edges[q] {
                        if sym == s && !mark[t] {
                            mark[t] = true;
                            target.push(t);
                        }
                    }
                }
                self.close(&mut target, &mut mark);
                let id = match index.get(&target) {
                    Some(&id) => id,
                    None => {
                        let id = subsets.len();
                        index.insert(target.clone(), id);
                        subsets.push(target);
                        id
                    }
                };
                next.push(id);
            }
            i += 1;
        }
        canonicalize(alphabet, 0, &accepting, &next)
    }
}
