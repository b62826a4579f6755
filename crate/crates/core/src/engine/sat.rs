//! Clause sets over argument words and a small deterministic DPLL solver.
//!
//! Literals use the DIMACS convention: variable `v ≥ 1` is the literal `v`,
//! its negation is `-v`.

use std::collections::HashMap;

use crate::automata::Word;

/// CNF over variables that stand for argument words.
#[derive(Debug, Clone, Default)]
pub struct ClauseSet {
    words: Vec<Word>,
    index: HashMap<Word, i32>,
    clauses: Vec<Vec<i32>>,
}

impl ClauseSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// The variable for `w`, allocating the next index on first mention.
    pub fn var(&mut self, w: &Word) -> i32 {
        if let Some(&v) = self.index.get(w) {
            return v;
        }
        self.words.push(w.clone());
        let v = self.words.len() as i32;
        self.index.insert(w.clone(), v);
        v
    }

    pub fn lookup(&self, w: &Word) -> Option<i32> {
        self.index.get(w).copied()
    }

    pub fn word(&self, var: i32) -> &Word {
        &self.words[var as usize - 1]
    }

    pub fn add_clause(&mut self, clause: Vec<i32>) {
        debug_assert!(clause.iter().all(|&l| l != 0 && l.unsigned_abs() as usize <= self.words.len()));
        self.clauses.push(clause);
    }

    pub fn num_vars(&self) -> usize {
        self.words.len()
    }

    pub fn clauses(&self) -> &[Vec<i32>] {
        &self.clauses
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SatResult {
    /// `model[v - 1]` is the value of variable `v`.
    Satisfiable(Vec<bool>),
    Unsatisfiable,
}

impl SatResult {
    pub fn is_sat(&self) -> bool {
        matches!(self, SatResult::Satisfiable(_))
    }
}

pub fn sat_solve(c: &ClauseSet) -> SatResult {
    solve_cnf(c.num_vars(), c.clauses())
}

fn lit_slot(l: i32) -> usize {
    2 * (l.unsigned_abs() as usize - 1) + usize::from(l < 0)
}

struct Solver {
    clauses: Vec<Vec<i32>>,
    watches: Vec<Vec<usize>>,
    value: Vec<i8>,
    trail: Vec<i32>,
    head: usize,
}

impl Solver {
    fn lit_value(&self, l: i32) -> i8 {
        let v = self.value[l.unsigned_abs() as usize - 1];
        if l < 0 {
            -v
        } else {
            v
        }
    }

    fn assign(&mut self, l: i32) {
        self.value[l.unsigned_abs() as usize - 1] = if l > 0 { 1 } else { -1 };
        self.trail.push(l);
    }

    fn undo_to(&mut self, len: usize) {
        for l in self.trail.drain(len..) {
            self.value[l.unsigned_abs() as usize - 1] = 0;
        }
        self.head = self.head.min(len);
    }

    /// Two-watched-literal unit propagation; false on conflict.
    fn propagate(&mut self) -> bool {
        while self.head < self.trail.len() {
            let falsified = -self.trail[self.head];
            self.head += 1;
            let slot = lit_slot(falsified);
            let mut watching = std::mem::take(&mut self.watches[slot]);
            let mut i = 0;
            let mut ok = true;
            while i < watching.len() {
                let ci = watching[i];
                if self.clauses[ci][0] == falsified {
                    self.clauses[ci].swap(0, 1);
                }
                let other = self.clauses[ci][0];
                if self.lit_value(other) == 1 {
                    i += 1;
                    continue;
                }
                let replacement = (2..self.clauses[ci].len()).find(|&j| self.lit_value(self.clauses[ci][j]) != -1);
                if let Some(j) = replacement {
                    self.clauses[ci].swap(1, j);
                    let new_watch = self.clauses[ci][1];
                    self.watches[lit_slot(new_watch)].push(ci);
                    watching.swap_remove(i);
                    continue;
                }
                match self.lit_value(other) {
                    0 => self.assign(other),
                    _ => {
                        ok = false;
                        break;
                    }
                }
                i += 1;
            }
            self.watches[slot].extend(watching.drain(..));
            if !ok {
                return false;
            }
        }
        true
    }
}

/// Decides a CNF over variables `1..=num_vars`. Branches on the lowest
/// unassigned variable, trying true first, with chronological backtracking,
/// so results are reproducible.
pub fn solve_cnf(num_vars: usize, clauses: &[Vec<i32>]) -> SatResult {
    let mut s = Solver {
        clauses: Vec::new(),
        watches: vec![Vec::new(); 2 * num_vars],
        value: vec![0; num_vars],
        trail: Vec::new(),
        head: 0,
    };
    let mut units = Vec::new();
    for c in clauses {
        let mut c: Vec<i32> = c.clone();
        c.sort_unstable_by_key(|l| (l.unsigned_abs(), *l < 0));
        c.dedup();
        if c.windows(2).any(|p| p[0] == -p[1]) {
            continue;
        }
        match c.len() {
            0 => return SatResult::Unsatisfiable,
            1 => units.push(c[0]),
            _ => {
                let ci = s.clauses.len();
                s.watches[lit_slot(c[0])].push(ci);
                s.watches[lit_slot(c[1])].push(ci);
                s.clauses.push(c);
            }
        }
    }
    for u in units {
        match s.lit_value(u) {
            1 => {}
            -1 => return SatResult::Unsatisfiable,
            _ => s.assign(u),
        }
    }
    if !s.propagate() {
        return SatResult::Unsatisfiable;
    }

    // (trail length before the decision, decision variable, flipped)
    let mut decisions: Vec<(usize, i32, bool)> = Vec::new();
    loop {
        let Some(v) = (0..num_vars).find(|&v| s.value[v] == 0) else {
            return SatResult::Satisfiable(s.value.iter().map(|&x| x == 1).collect());
        };
        let var = v as i32 + 1;
        decisions.push((s.trail.len(), var, false));
        s.assign(var);
        while !s.propagate() {
            loop {
                match decisions.pop() {
                    None => return SatResult::Unsatisfiable,
                    Some((_, _, true)) => continue,
                    Some((len, var, false)) => {
                        s.undo_to(len);
                        decisions.push((len, var, true));
                        s.assign(-var);
                        break;
                    }
                }
            }
        }
    }
}
