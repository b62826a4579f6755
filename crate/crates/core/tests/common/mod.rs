//! Brute-force oracles and random instance generators shared by the
//! integration tests and the acceptance harness.
#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use afspec::automata::{Alphabet, Dfa, Word};
use afspec::engine::{finite_oracle, grounded, is_admissible, is_complete, is_conflict_free, is_stable};
use afspec::expr::{AttackExpr, RegexAst};
use afspec::semantics::{eval_forward, eval_inverse, ArgSet};
use afspec::spec::{encode_finite_af, FiniteAf};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn fixture(name: &str) -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

pub fn alphabet(k: usize) -> Alphabet {
    Alphabet::new((0..k).map(|i| ["a", "b", "c", "d"][i])).unwrap()
}

/// Every word over `k` symbols of length at most `n`, shortest first.
pub fn words_upto(k: usize, n: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    let mut layer = vec![Word::empty()];
    for _ in 0..n {
        let mut next = Vec::new();
        for w in &layer {
            for s in 0..k {
                let mut v = w.0.clone();
                v.push(s);
                next.push(Word(v));
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

pub fn random_dfa(rng: &mut impl Rng, alphabet: &Alphabet, max_states: usize) -> Dfa {
    let n = rng.gen_range(1..=max_states);
    let table = (0..n)
        .map(|_| (0..alphabet.len()).map(|_| rng.gen_range(0..n)).collect())
        .collect();
    let accepting: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.4)).collect();
    Dfa::new(alphabet.clone(), rng.gen_range(0..n), &accepting, table).unwrap()
}

/// A language-preserving blow-up of `d`: its product with an unrelated
/// automaton whose acceptance is ignored.
pub fn inflate(rng: &mut impl Rng, d: &Dfa) -> Dfa {
    let noise = random_dfa(rng, d.alphabet(), 3);
    let (n, m) = (d.state_count(), noise.state_count());
    let k = d.alphabet().len();
    let table = (0..n * m)
        .map(|q| (0..k).map(|s| d.step(q / m, s) * m + noise.step(q % m, s)).collect())
        .collect();
    let accepting: Vec<usize> = (0..n * m).filter(|q| d.is_accepting(q / m)).collect();
    Dfa::new(d.alphabet().clone(), d.start() * m + noise.start(), &accepting, table).unwrap()
}

/// Whether some word leads from `qa` in `a` and `qb` in `b` to states that
/// are both accepting, found by a plain search over state pairs.
fn joint_accept(a: &Dfa, qa: usize, b: &Dfa, qb: usize) -> bool {
    let k = a.alphabet().len();
    let mut seen = vec![false; a.state_count() * b.state_count()];
    let mut queue = VecDeque::from([(qa, qb)]);
    seen[qa * b.state_count() + qb] = true;
    while let Some((p, q)) = queue.pop_front() {
        if a.is_accepting(p) && b.is_accepting(q) {
            return true;
        }
        for s in 0..k {
            let (p2, q2) = (a.step(p, s), b.step(q, s));
            if !std::mem::replace(&mut seen[p2 * b.state_count() + q2], true) {
                queue.push_back((p2, q2));
            }
        }
    }
    false
}

/// Whether `a` and `b` accept different languages, by searching the pair
/// graph for a reachable pair that disagrees on acceptance.
fn distinguishable(a: &Dfa, b: &Dfa) -> bool {
    let k = a.alphabet().len();
    let mut seen = vec![false; a.state_count() * b.state_count()];
    let mut queue = VecDeque::from([(a.start(), b.start())]);
    seen[a.start() * b.state_count() + b.start()] = true;
    while let Some((p, q)) = queue.pop_front() {
        if a.is_accepting(p) != b.is_accepting(q) {
            return true;
        }
        for s in 0..k {
            let (p2, q2) = (a.step(p, s), b.step(q, s));
            if !std::mem::replace(&mut seen[p2 * b.state_count() + q2], true) {
                queue.push_back((p2, q2));
            }
        }
    }
    false
}

#[derive(Debug, Default, Clone, Copy)]
pub struct Tally {
    pub checked: usize,
    pub violations: usize,
}

impl Tally {
    pub fn check(&mut self, ok: bool) {
        self.checked += 1;
        if !ok {
            self.violations += 1;
        }
    }
}

/// Membership of every kernel operation against definitions evaluated
/// word by word, for all words up to `max_len`.
pub fn kernel_oracle(seed: u64, instances: usize, max_len: usize) -> Tally {
    let mut rng = rng(seed);
    let mut t = Tally::default();
    for i in 0..instances {
        let k = 1 + i % 2;
        let sigma = alphabet(k);
        let a = random_dfa(&mut rng, &sigma, 4);
        let b = random_dfa(&mut rng, &sigma, 4);
        let in_a = |w: &[usize]| a.contains(&Word(w.to_vec()));
        let in_b = |w: &[usize]| b.contains(&Word(w.to_vec()));

        let union = a.union(&b).unwrap();
        let inter = a.intersect(&b).unwrap();
        let diff = a.difference(&b).unwrap();
        let comp = a.complement();
        let cat = a.concat(&b).unwrap();
        let star = a.star();
        let quot = a.quotient(&b).unwrap();
        let rev = a.reverse();
        let tail = a.tail();
        let min = a.minimize();

        let listed: Vec<Word> = a.enumerate_words(usize::MAX, max_len);
        let mut expected_list = Vec::new();

        for w in words_upto(k, max_len) {
            let s = &w.0[..];
            let (ia, ib) = (in_a(s), in_b(s));
            if ia {
                expected_list.push(w.clone());
            }
            t.check(union.contains(&w) == (ia || ib));
            t.check(inter.contains(&w) == (ia && ib));
            t.check(diff.contains(&w) == (ia && !ib));
            t.check(comp.contains(&w) == !ia);
            t.check(min.contains(&w) == ia);
            let split = (0..=s.len()).any(|j| in_a(&s[..j]) && in_b(&s[j..]));
            t.check(cat.contains(&w) == split);
            let mut reach = vec![false; s.len() + 1];
            reach[0] = true;
            for j in 1..=s.len() {
                reach[j] = (0..j).any(|i| reach[i] && in_a(&s[i..j]));
            }
            t.check(star.contains(&w) == reach[s.len()]);
            t.check(quot.contains(&w) == joint_accept(&a, a.run(s), &b, b.start()));
            let r: Vec<usize> = s.iter().rev().copied().collect();
            t.check(rev.contains(&w) == in_a(&r));
            let tl = (0..k).any(|sym| {
                let mut v = vec![sym];
                v.extend_from_slice(s);
                in_a(&v)
            });
            t.check(tail.contains(&w) == tl);
        }
        let universe = Dfa::universe(&sigma);
        let head: BTreeSet<usize> = (0..k)
            .filter(|&sym| joint_accept(&a, a.step(a.start(), sym), &universe, universe.start()))
            .collect();
        t.check(a.head() == head);
        t.check(listed == expected_list);
        t.check(a.is_empty() == !joint_accept(&a, a.start(), &universe, universe.start()));
    }
    t
}

/// Canonical structural equality against language equality on pairs that
/// are equivalent by construction about half of the time.
pub fn minimization_oracle(seed: u64, pairs: usize) -> Tally {
    let mut rng = rng(seed);
    let mut t = Tally::default();
    for i in 0..pairs {
        let sigma = alphabet(1 + i % 2);
        let a = random_dfa(&mut rng, &sigma, 4);
        let b = if i % 2 == 0 {
            inflate(&mut rng, &a)
        } else {
            random_dfa(&mut rng, &sigma, 4)
        };
        let same_language = !distinguishable(&a, &b);
        t.check((a.minimize() == b.minimize()) == same_language);
        t.check(a.equivalent(&b).unwrap() == same_language);
    }
    t
}

pub fn random_regex(rng: &mut impl Rng, syms: &[&str], depth: usize, allow_star: bool) -> RegexAst {
    if depth == 0 || rng.gen_bool(0.35) {
        return match rng.gen_range(0..10) {
            0 => RegexAst::Epsilon,
            _ => RegexAst::symbol(*syms.choose(rng).unwrap()),
        };
    }
    match rng.gen_range(0..if allow_star { 3 } else { 2 }) {
        0 => RegexAst::union(
            random_regex(rng, syms, depth - 1, allow_star),
            random_regex(rng, syms, depth - 1, allow_star),
        ),
        1 => RegexAst::concat(
            random_regex(rng, syms, depth - 1, allow_star),
            random_regex(rng, syms, depth - 1, allow_star),
        ),
        _ => RegexAst::star(random_regex(rng, syms, depth - 1, allow_star)),
    }
}

/// A random attack expression with at most `budget` operators.
pub fn random_attack(rng: &mut impl Rng, syms: &[&str], budget: usize, allow_star: bool) -> AttackExpr {
    if budget == 0 || rng.gen_bool(0.2) {
        return if rng.gen_bool(0.8) {
            AttackExpr::Identity
        } else {
            AttackExpr::sym(*syms.choose(rng).unwrap())
        };
    }
    let kr = random_regex(rng, syms, 2, allow_star);
    let b = budget - 1;
    match rng.gen_range(0..8) {
        0 => {
            let left = rng.gen_range(0..=b);
            let p = random_attack(rng, syms, left, allow_star);
            let q = random_attack(rng, syms, b - left, allow_star);
            AttackExpr::union(p, q)
        }
        1 => AttackExpr::concat_right(random_attack(rng, syms, b, allow_star), kr),
        2 => AttackExpr::concat_left(kr, random_attack(rng, syms, b, allow_star)),
        3 => AttackExpr::quotient_by(random_attack(rng, syms, b, allow_star), kr),
        4 => AttackExpr::k_quotient_by(kr, random_attack(rng, syms, b, allow_star)),
        5 => AttackExpr::intersect(random_attack(rng, syms, b, allow_star), kr),
        6 => AttackExpr::hd(random_attack(rng, syms, b, allow_star)),
        _ => AttackExpr::tl(random_attack(rng, syms, b, allow_star)),
    }
}

/// The shared corpus for the inversion and additivity suites: expressions
/// of size at most 4 over one or two symbols.
pub fn attack_corpus(seed: u64, count: usize) -> Vec<(Alphabet, AttackExpr)> {
    let mut rng = rng(seed);
    (0..count)
        .map(|i| {
            let syms: &[&str] = if i % 3 == 0 { &["a"] } else { &["a", "b"] };
            let e = random_attack(&mut rng, syms, 4, true);
            assert!(e.size() <= 4);
            (Alphabet::new(syms.iter().copied()).unwrap(), e)
        })
        .collect()
}

/// `u ∈ a({v})` exactly when `v ∈ a⁺({u})`, for all words up to `max_len`.
pub fn duality_oracle(corpus: &[(Alphabet, AttackExpr)], max_len: usize) -> Tally {
    let mut t = Tally::default();
    for (sigma, e) in corpus {
        let words = words_upto(sigma.len(), max_len);
        let fwd: Vec<ArgSet> = words
            .iter()
            .map(|v| eval_forward(e, &ArgSet::singleton(sigma, v)).unwrap())
            .collect();
        let inv: Vec<ArgSet> = words
            .iter()
            .map(|u| eval_inverse(e, &ArgSet::singleton(sigma, u)).unwrap())
            .collect();
        for (i, u) in words.iter().enumerate() {
            for (j, v) in words.iter().enumerate() {
                t.check(fwd[j].contains(u) == inv[i].contains(v));
            }
        }
    }
    t
}

fn random_set(rng: &mut impl Rng, sigma: &Alphabet) -> ArgSet {
    let syms: Vec<&str> = sigma.symbols().iter().map(String::as_str).collect();
    let r = random_regex(rng, &syms, 3, true);
    ArgSet::new(afspec::automata::compile_regex(&r, sigma).unwrap())
}

/// Additivity on nonempty sets and monotonicity (including the empty set)
/// of both the forward and the inverse mapping.
pub fn additivity_oracle(corpus: &[(Alphabet, AttackExpr)], seed: u64, samples: usize) -> Tally {
    let mut rng = rng(seed);
    let mut t = Tally::default();
    for (sigma, e) in corpus {
        let empty = ArgSet::empty(sigma);
        for _ in 0..samples {
            let s = random_set(&mut rng, sigma);
            let u = random_set(&mut rng, sigma);
            let su = ArgSet::new(s.union(&u).unwrap());
            for eval in [eval_forward, eval_inverse] {
                let (fs, fu, fsu) = (eval(e, &s).unwrap(), eval(e, &u).unwrap(), eval(e, &su).unwrap());
                if !s.is_empty() && !u.is_empty() {
                    t.check(fsu.equivalent(&fs.union(&fu).unwrap()).unwrap());
                }
                t.check(fs.is_subset(&fsu).unwrap());
                t.check(eval(e, &empty).unwrap().is_subset(&fs).unwrap());
            }
        }
    }
    t
}

pub fn random_finite_af(rng: &mut impl Rng, max_args: usize) -> FiniteAf {
    let n = rng.gen_range(1..=max_args);
    let names = (0..n).map(|i| format!("a{i}")).collect();
    let density = rng.gen_range(0.05..0.5);
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .filter(|_| rng.gen_bool(density))
        .collect();
    FiniteAf::new(names, pairs).unwrap()
}

pub fn mask_set(sigma: &Alphabet, mask: u32) -> ArgSet {
    let words: Vec<Word> = (0..sigma.len())
        .filter(|i| mask >> i & 1 == 1)
        .map(|i| Word(vec![i]))
        .collect();
    ArgSet::from_words(sigma, &words)
}

/// The four semantic checks on every subset, and the grounded extension,
/// of the encoding of random finite frameworks against the exhaustive
/// bitmask oracle.
pub fn finite_encoding_oracle(seed: u64, count: usize, max_args: usize) -> Tally {
    let mut rng = rng(seed);
    let mut t = Tally::default();
    for _ in 0..count {
        let f = random_finite_af(&mut rng, max_args);
        let o = finite_oracle(&f).unwrap();
        let spec = encode_finite_af(&f).unwrap();
        let sigma = spec.alphabet().clone();
        for mask in 0..1u32 << f.len() {
            let s = mask_set(&sigma, mask);
            t.check(is_conflict_free(&spec, &s).unwrap() == o.conflict_free.contains(&mask));
            t.check(is_admissible(&spec, &s).unwrap() == o.admissible.contains(&mask));
            t.check(is_stable(&spec, &s).unwrap() == o.stable.contains(&mask));
            t.check(is_complete(&spec, &s).unwrap() == o.complete.contains(&mask));
        }
        let g = grounded(&spec, 64).unwrap();
        t.check(g.extension.equivalent(&mask_set(&sigma, o.grounded)).unwrap());
    }
    t
}
