//! JSON and Graphviz renderings of automata.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::{Alphabet, AutomataError, Dfa};

/// Serializable form of a [`Dfa`]. Transitions are `[from, symbol, to]`
/// triples sorted by state and then symbol index.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DfaJson {
    pub alphabet: Vec<String>,
    pub states: usize,
    pub start: usize,
    pub accepting: Vec<usize>,
    pub transitions: Vec<(usize, usize, usize)>,
}

impl From<&Dfa> for DfaJson {
    fn from(d: &Dfa) -> Self {
        DfaJson {
            alphabet: d.alphabet().symbols().to_vec(),
            states: d.state_count(),
            start: d.start(),
            accepting: d.accepting_states(),
            transitions: d.transitions().collect(),
        }
    }
}

impl DfaJson {
    /// Rebuilds the automaton over `alphabet`, which must list the same
    /// symbols in the same order.
    pub fn to_dfa(&self, alphabet: &Alphabet) -> Result<Dfa, AutomataError> {
        if alphabet.symbols() != self.alphabet.as_slice() {
            return Err(AutomataError::AlphabetMismatch);
        }
        let k = alphabet.len();
        let mut table = vec![vec![usize::MAX; k]; self.states];
        for &(q, s, t) in &self.transitions {
            if q >= self.states || s >= k {
                return Err(AutomataError::Malformed(format!("transition ({q}, {s}, {t}) out of range")));
            }
            table[q][s] = t;
        }
        if table.iter().flatten().any(|&t| t == usize::MAX) {
            return Err(AutomataError::Malformed("incomplete transition table".into()));
        }
        Dfa::new(alphabet.clone(), self.start, &self.accepting, table)
    }
}

impl Dfa {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&DfaJson::from(self)).expect("automaton serializes")
    }

    /// Graphviz rendering; parallel edges are merged into one labelled edge.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph dfa {\n  rankdir=LR;\n  __start [shape=point];\n");
        for q in 0..self.state_count() {
            let shape = if self.is_accepting(q) { "doublecircle" } else { "circle" };
            let _ = writeln!(out, "  q{q} [shape={shape}];");
        }
        let _ = writeln!(out, "  __start -> q{};", self.start());
        let mut edges: BTreeMap<(usize, usize), Vec<&str>> = BTreeMap::new();
        for (q, s, t) in self.transitions() {
            edges.entry((q, t)).or_default().push(self.alphabet().symbol(s));
        }
        for ((q, t), labels) in edges {
            let _ = writeln!(out, "  q{q} -> q{t} [label=\"{}\"];", labels.join(","));
        }
        out.push_str("}\n");
        out
    }
}
