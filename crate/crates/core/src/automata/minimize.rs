//! Hopcroft partition refinement and canonical renumbering.

use super::{Alphabet, Dfa};

/// Minimizes the automaton given by raw parts and renumbers its states in
/// breadth-first order from the start, exploring symbols in alphabet order.
pub(crate) fn canonicalize(alphabet: &Alphabet, start: usize, accepting: &[bool], next: &[usize]) -> Dfa {
    let k = alphabet.len();

    // restrict to reachable states, compacted in discovery order
    let mut id = vec![usize::MAX; accepting.len()];
    let mut order = vec![start];
    id[start] = 0;
    let mut i = 0;
    while i < order.len() {
        let q = order[i];
        for s in 0..k {
            let t = next[q * k + s];
            if id[t] == usize::MAX {
                id[t] = order.len();
                order.push(t);
            }
        }
        i += 1;
    }
    let n = order.len();
    let acc: Vec<bool> = order.iter().map(|&q| accepting[q]).collect();
    let mut delta = vec![0; n * k];
    for (new, &old) in order.iter().enumerate() {
        for s in 0..k {
            delta[new * k + s] = id[next[old * k + s]];
        }
    }

    let block_of = refine(n, k, &delta, &acc);

    // renumber blocks by BFS from the start block
    let blocks = block_of.iter().max().map_or(0, |m| m + 1);
    let mut rep = vec![usize::MAX; blocks];
    for q in (0..n).rev() {
        rep[block_of[q]] = q;
    }
    let mut new_id = vec![usize::MAX; blocks];
    let mut queue = vec![block_of[0]];
    new_id[block_of[0]] = 0;
    let mut out_next = Vec::with_capacity(blocks * k);
    let mut out_acc = Vec::with_capacity(blocks);
    let mut i = 0;
    while i < queue.len() {
        let b = queue[i];
        let q = rep[b];
        out_acc.push(acc[q]);
        for s in 0..k {
            let tb = block_of[delta[q * k + s]];
            if new_id[tb] == usize::MAX {
                new_id[tb] = queue.len();
                queue.push(tb);
            }
            out_next.push(new_id[tb]);
        }
        i += 1;
    }
    Dfa::from_raw(alphabet.clone(), 0, out_acc, out_next)
}

/// Returns the block index of every state in the coarsest partition that
/// respects acceptance and is stable under all transitions.
fn refine(n: usize, k: usize, delta: &[usize], acc: &[bool]) -> Vec<usize> {
    // inverse transitions in CSR form, keyed by (target, symbol)
    let mut offsets = vec![0usize; n * k + 1];
    for q in 0..n {
        for s in 0..k {
            offsets[delta[q * k + s] * k + s + 1] += 1;
        }
    }
    for i in 0..n * k {
        offsets[i + 1] += offsets[i];
    }
    let mut fill = offsets.clone();
    let mut preds = vec![0usize; n * k];
    for q in 0..n {
        for s in 0..k {
            let key = delta[q * k + s] * k + s;
            preds[fill[key]] = q;
            fill[key] += 1;
        }
    }

    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut block_of = vec![0usize; n];
    let (yes, no): (Vec<usize>, Vec<usize>) = (0..n).partition(|&q| acc[q]);
    for part in [yes, no] {
        if !part.is_empty() {
            for &q in &part {
                block_of[q] = blocks.len();
            }
            blocks.push(part);
        }
    }

    let mut in_work = vec![true; blocks.len()];
    let mut work: Vec<usize> = (0..blocks.len()).collect();
    let mut marked = vec![false; n];
    let mut marked_count = vec![0usize; blocks.len()];
    let mut touched = Vec::new();
    let mut marked_states = Vec::new();

    while let Some(a) = work.pop() {
        in_work[a] = false;
        let splitter = blocks[a].clone();
        for s in 0..k {
            for &t in &splitter {
                let key = t * k + s;
                for &p in &preds[offsets[key]..offsets[key + 1]] {
                    if !marked[p] {
                        marked[p] = true;
                        marked_states.push(p);
                        let b = block_of[p];
                        if marked_count[b] == 0 {
                            touched.push(b);
                        }
                        marked_count[b] += 1;
                    }
                }
            }
            for b in touched.drain(..) {
                if marked_count[b] < blocks[b].len() {
                    let (inside, outside): (Vec<usize>, Vec<usize>) =
                        blocks[b].iter().partition(|&&q| marked[q]);
                    let nb = blocks.len();
                    for &q in &inside {
                        block_of[q] = nb;
                    }
                    let smaller_is_new = inside.len() <= outside.len();
                    blocks[b] = outside;
                    blocks.push(inside);
                    marked_count.push(0);
                    if in_work[b] {
                        in_work.push(true);
                        work.push(nb);
                    } else if smaller_is_new {
                        in_work.push(true);
                        work.push(nb);
                    } else {
                        in_work.push(false);
                        in_work[b] = true;
                        work.push(b);
                    }
                }
                marked_count[b] = 0;
            }
            for p in marked_states.drain(..) {
                marked[p] = false;
            }
        }
    }
    block_of
}
