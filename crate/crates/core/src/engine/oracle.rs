//! Exhaustive semantics of small finite frameworks, used as ground truth.

use crate::error::{Error, Result};
use crate::spec::FiniteAf;

pub const ORACLE_MAX_ARGS: usize = 20;

/// Extension families of a finite framework. Sets are bitmasks over the
/// argument indexes; families are listed in increasing mask order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub conflict_free: Vec<u32>,
    pub admissible: Vec<u32>,
    pub complete: Vec<u32>,
    pub stable: Vec<u32>,
    pub grounded: u32,
}

struct Masks {
    attackers: Vec<u32>,
    targets: Vec<u32>,
    all: u32,
}

impl Masks {
    fn new(f: &FiniteAf) -> Self {
        let n = f.len();
        let mut attackers = vec![0u32; n];
        let mut targets = vec![0u32; n];
        for &(x, y) in f.attacks() {
            attackers[y] |= 1 << x;
            targets[x] |= 1 << y;
        }
        let all = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
        Masks { attackers, targets, all }
    }

    fn attacked(&self, s: u32) -> u32 {
        bits(s).fold(0, |acc, i| acc | self.targets[i])
    }

    fn characteristic(&self, s: u32) -> u32 {
        let plus = self.attacked(s);
        bits(self.all)
            .filter(|&i| self.attackers[i] & !plus == 0)
            .fold(0, |acc, i| acc | 1 << i)
    }
}

fn bits(m: u32) -> impl Iterator<Item = usize> {
    (0..32).filter(move |i| m >> i & 1 == 1)
}

pub fn finite_oracle(f: &FiniteAf) -> Result<OracleResult> {
    if f.len() > ORACLE_MAX_ARGS {
        return Err(Error::TooLarge(f.len(), ORACLE_MAX_ARGS));
    }
    let m = Masks::new(f);
    let mut out = OracleResult {
        conflict_free: Vec::new(),
        admissible: Vec::new(),
        complete: Vec::new(),
        stable: Vec::new(),
        grounded: 0,
    };
    for s in 0..=m.all {
        let plus = m.attacked(s);
        if s & plus != 0 {
            continue;
        }
        out.conflict_free.push(s);
        let fs = m.characteristic(s);
        if s & !fs == 0 {
            out.admissible.push(s);
        }
        if fs == s {
            out.complete.push(s);
        }
        if s | plus == m.all {
            out.stable.push(s);
        }
    }

    let mut g = 0;
    loop {
        let next = m.characteristic(g);
        if next == g {
            break;
        }
        g = next;
    }
    let least_complete = out.complete.iter().fold(m.all, |acc, &c| acc & c);
    assert_eq!(g, least_complete, "iterated and least complete grounded sets differ");
    out.grounded = g;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn af(n: usize, pairs: &[(usize, usize)]) -> FiniteAf {
        let names = (0..n).map(|i| format!("a{i}")).collect();
        FiniteAf::new(names, pairs.iter().copied()).unwrap()
    }

    #[test]
    fn four_cycle() {
        let r = finite_oracle(&af(4, &[(0, 1), (1, 2), (2, 3), (3, 0)])).unwrap();
        assert_eq!(r.stable, vec![0b0101, 0b1010]);
        assert_eq!(r.grounded, 0);
    }

    #[test]
    fn self_attacker_and_isolated() {
        let r = finite_oracle(&af(1, &[(0, 0)])).unwrap();
        assert_eq!(r.grounded, 0);
        assert!(r.stable.is_empty());
        let r = finite_oracle(&af(3, &[])).unwrap();
        assert_eq!(r.grounded, 0b111);
        assert_eq!(r.stable, vec![0b111]);
    }

    #[test]
    fn size_guard() {
        assert!(matches!(finite_oracle(&af(21, &[])), Err(Error::TooLarge(21, 20))));
    }
}
