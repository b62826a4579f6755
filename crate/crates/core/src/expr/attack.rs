use std::fmt;

use super::RegexAst;
use crate::automata::Alphabet;

/// Attack expression syntax tree.
///
/// `K` operands are plain regexes and so can never mention the identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum AttackExpr {
    Sym(String),
    Identity,
    Union(Box<AttackExpr>, Box<AttackExpr>),
    /// `p · K`
    ConcatRight(Box<AttackExpr>, RegexAst),
    /// `K · p`
    ConcatLeft(RegexAst, Box<AttackExpr>),
    /// `p / K`
    QuotientByK(Box<AttackExpr>, RegexAst),
    /// `K / p`
    KQuotientBy(RegexAst, Box<AttackExpr>),
    /// `p ∩ K`
    IntersectK(Box<AttackExpr>, RegexAst),
    Hd(Box<AttackExpr>),
    Tl(Box<AttackExpr>),
}

/// A problem found by [`AttackExpr::validate`].
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExprIssue {
    #[error("unknown symbol {0}")]
    UnknownSymbol(String),
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum ChainOp {
    Dot,
    Slash,
    Amp,
}

impl AttackExpr {
    pub fn sym(name: impl Into<String>) -> Self {
        AttackExpr::Sym(name.into())
    }

    pub fn union(p: AttackExpr, q: AttackExpr) -> Self {
        AttackExpr::Union(Box::new(p), Box::new(q))
    }

    pub fn union_all<I: IntoIterator<Item = AttackExpr>>(items: I) -> Option<Self> {
        items.into_iter().reduce(AttackExpr::union)
    }

    pub fn concat_right(p: AttackExpr, k: RegexAst) -> Self {
        AttackExpr::ConcatRight(Box::new(p), k)
    }

    pub fn concat_left(k: RegexAst, p: AttackExpr) -> Self {
        AttackExpr::ConcatLeft(k, Box::new(p))
    }

    pub fn quotient_by(p: AttackExpr, k: RegexAst) -> Self {
        AttackExpr::QuotientByK(Box::new(p), k)
    }

    pub fn k_quotient_by(k: RegexAst, p: AttackExpr) -> Self {
        AttackExpr::KQuotientBy(k, Box::new(p))
    }

    pub fn intersect(p: AttackExpr, k: RegexAst) -> Self {
        AttackExpr::IntersectK(Box::new(p), k)
    }

    pub fn hd(p: AttackExpr) -> Self {
        AttackExpr::Hd(Box::new(p))
    }

    pub fn tl(p: AttackExpr) -> Self {
        AttackExpr::Tl(Box::new(p))
    }

    /// Number of operator applications (every node except `Sym` and `I`).
    pub fn size(&self) -> usize {
        match self {
            AttackExpr::Sym(_) | AttackExpr::Identity => 0,
            AttackExpr::Union(p, q) => 1 + p.size() + q.size(),
            AttackExpr::ConcatRight(p, _)
            | AttackExpr::ConcatLeft(_, p)
            | AttackExpr::QuotientByK(p, _)
            | AttackExpr::KQuotientBy(_, p)
            | AttackExpr::IntersectK(p, _)
            | AttackExpr::Hd(p)
            | AttackExpr::Tl(p) => 1 + p.size(),
        }
    }

    pub fn contains_identity(&self) -> bool {
        match self {
            AttackExpr::Identity => true,
            AttackExpr::Sym(_) => false,
            AttackExpr::Union(p, q) => p.contains_identity() || q.contains_identity(),
            AttackExpr::ConcatRight(p, _)
            | AttackExpr::ConcatLeft(_, p)
            | AttackExpr::QuotientByK(p, _)
            | AttackExpr::KQuotientBy(_, p)
            | AttackExpr::IntersectK(p, _)
            | AttackExpr::Hd(p)
            | AttackExpr::Tl(p) => p.contains_identity(),
        }
    }

    /// The regex operands of the tree in pre-order.
    pub fn k_operands(&self) -> Vec<&RegexAst> {
        let mut out = Vec::new();
        self.collect_ks(&mut out);
        out
    }

    fn collect_ks<'a>(&'a self, out: &mut Vec<&'a RegexAst>) {
        match self {
            AttackExpr::Sym(_) | AttackExpr::Identity => {}
            AttackExpr::Union(p, q) => {
                p.collect_ks(out);
                q.collect_ks(out);
            }
            AttackExpr::ConcatRight(p, k)
            | AttackExpr::ConcatLeft(k, p)
            | AttackExpr::QuotientByK(p, k)
            | AttackExpr::KQuotientBy(k, p)
            | AttackExpr::IntersectK(p, k) => {
                out.push(k);
                p.collect_ks(out);
            }
            AttackExpr::Hd(p) | AttackExpr::Tl(p) => p.collect_ks(out),
        }
    }

    /// True when no regex operand uses `*`.
    pub fn restrictions_star_free(&self) -> bool {
        self.k_operands().iter().all(|k| !k.has_star())
    }

    /// Checks every symbol, both attack constants and symbols inside regex
    /// operands, against `alphabet`. An empty list means the tree is valid.
    pub fn validate(&self, alphabet: &Alphabet) -> Vec<ExprIssue> {
        let mut names = Vec::new();
        self.collect_sym_names(&mut names);
        for k in self.k_operands() {
            names.extend(k.symbols());
        }
        let mut issues: Vec<ExprIssue> = Vec::new();
        for n in names {
            let issue = ExprIssue::UnknownSymbol(n.to_string());
            if alphabet.index_of(n).is_none() && !issues.contains(&issue) {
                issues.push(issue);
            }
        }
        issues
    }

    fn collect_sym_names<'a>(&'a self, out: &mut Vec<&'a str>) {
        match self {
            AttackExpr::Sym(s) => out.push(s),
            AttackExpr::Identity => {}
            AttackExpr::Union(p, q) => {
                p.collect_sym_names(out);
                q.collect_sym_names(out);
            }
            AttackExpr::ConcatRight(p, _)
            | AttackExpr::ConcatLeft(_, p)
            | AttackExpr::QuotientByK(p, _)
            | AttackExpr::KQuotientBy(_, p)
            | AttackExpr::IntersectK(p, _)
            | AttackExpr::Hd(p)
            | AttackExpr::Tl(p) => p.collect_sym_names(out),
        }
    }

    /// Rebuilds the tree bottom-up, replacing each leaf (`Sym` or `I`).
    pub fn map_leaves(&self, f: &mut dyn FnMut(&AttackExpr) -> AttackExpr) -> AttackExpr {
        let mut sub = |p: &AttackExpr| Box::new(p.map_leaves(f));
        match self {
            AttackExpr::Sym(_) | AttackExpr::Identity => f(self),
            AttackExpr::Union(p, q) => {
                let p = sub(p);
                AttackExpr::Union(p, sub(q))
            }
            AttackExpr::ConcatRight(p, k) => AttackExpr::ConcatRight(sub(p), k.clone()),
            AttackExpr::ConcatLeft(k, p) => AttackExpr::ConcatLeft(k.clone(), sub(p)),
            AttackExpr::QuotientByK(p, k) => AttackExpr::QuotientByK(sub(p), k.clone()),
            AttackExpr::KQuotientBy(k, p) => AttackExpr::KQuotientBy(k.clone(), sub(p)),
            AttackExpr::IntersectK(p, k) => AttackExpr::IntersectK(sub(p), k.clone()),
            AttackExpr::Hd(p) => AttackExpr::Hd(sub(p)),
            AttackExpr::Tl(p) => AttackExpr::Tl(sub(p)),
        }
    }

    fn chain_op(&self) -> Option<ChainOp> {
        match self {
            AttackExpr::ConcatRight(..) | AttackExpr::ConcatLeft(..) => Some(ChainOp::Dot),
            AttackExpr::QuotientByK(..) | AttackExpr::KQuotientBy(..) => Some(ChainOp::Slash),
            AttackExpr::IntersectK(..) => Some(ChainOp::Amp),
            _ => None,
        }
    }

    // left operand of a chain: same-operator chains fold without parentheses
    fn fmt_left(&self, f: &mut fmt::Formatter<'_>, op: ChainOp) -> fmt::Result {
        match self.chain_op() {
            Some(o) if o == op => write!(f, "{self}"),
            _ => self.fmt_operand(f),
        }
    }

    fn fmt_operand(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.chain_op().is_some() || matches!(self, AttackExpr::Union(..)) {
            write!(f, "({self})")
        } else {
            write!(f, "{self}")
        }
    }
}

impl fmt::Display for AttackExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AttackExpr::Sym(s) => f.write_str(s),
            AttackExpr::Identity => f.write_str("I"),
            AttackExpr::Union(p, q) => {
                write!(f, "{p} U ")?;
                match **q {
                    AttackExpr::Union(..) => write!(f, "({q})"),
                    _ => write!(f, "{q}"),
                }
            }
            AttackExpr::ConcatRight(p, k) => {
                p.fmt_left(f, ChainOp::Dot)?;
                write!(f, " . [{k}]")
            }
            AttackExpr::ConcatLeft(k, p) => {
                write!(f, "[{k}] . ")?;
                p.fmt_operand(f)
            }
            AttackExpr::QuotientByK(p, k) => {
                p.fmt_left(f, ChainOp::Slash)?;
                write!(f, " / [{k}]")
            }
            AttackExpr::KQuotientBy(k, p) => {
                write!(f, "[{k}] / ")?;
                p.fmt_operand(f)
            }
            AttackExpr::IntersectK(p, k) => {
                p.fmt_left(f, ChainOp::Amp)?;
                write!(f, " & [{k}]")
            }
            AttackExpr::Hd(p) => write!(f, "hd({p})"),
            AttackExpr::Tl(p) => write!(f, "tl({p})"),
        }
    }
}
