use std::collections::BTreeSet;
use std::fmt;

/// Regular expression syntax tree. Symbols are referenced by name and
/// resolved against an alphabet when compiled.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RegexAst {
    Empty,
    Epsilon,
    Symbol(String),
    Union(Box<RegexAst>, Box<RegexAst>),
    Concat(Box<RegexAst>, Box<RegexAst>),
    Star(Box<RegexAst>),
}

impl RegexAst {
    pub fn symbol(name: impl Into<String>) -> Self {
        RegexAst::Symbol(name.into())
    }

    pub fn union(a: RegexAst, b: RegexAst) -> Self {
        RegexAst::Union(Box::new(a), Box::new(b))
    }

    pub fn concat(a: RegexAst, b: RegexAst) -> Self {
        RegexAst::Concat(Box::new(a), Box::new(b))
    }

    pub fn star(a: RegexAst) -> Self {
        RegexAst::Star(Box::new(a))
    }

    /// Left-folded union; `EMPTY` for no operands.
    pub fn union_all<I: IntoIterator<Item = RegexAst>>(items: I) -> Self {
        items
            .into_iter()
            .reduce(RegexAst::union)
            .unwrap_or(RegexAst::Empty)
    }

    /// Left-folded concatenation; `EPS` for no operands.
    pub fn concat_all<I: IntoIterator<Item = RegexAst>>(items: I) -> Self {
        items
            .into_iter()
            .reduce(RegexAst::concat)
            .unwrap_or(RegexAst::Epsilon)
    }

    pub fn symbols(&self) -> BTreeSet<&str> {
        let mut out = BTreeSet::new();
        self.collect_symbols(&mut out);
        out
    }

    fn collect_symbols<'a>(&'a self, out: &mut BTreeSet<&'a str>) {
        match self {
            RegexAst::Symbol(s) => {
                out.insert(s);
            }
            RegexAst::Union(a, b) | RegexAst::Concat(a, b) => {
                a.collect_symbols(out);
                b.collect_symbols(out);
            }
            RegexAst::Star(a) => a.collect_symbols(out),
            RegexAst::Empty | RegexAst::Epsilon => {}
        }
    }

    pub fn has_star(&self) -> bool {
        match self {
            RegexAst::Star(_) => true,
            RegexAst::Union(a, b) | RegexAst::Concat(a, b) => a.has_star() || b.has_star(),
            _ => false,
        }
    }

    fn prec(&self) -> u8 {
        match self {
            RegexAst::Union(..) => 0,
            RegexAst::Concat(..) => 1,
            RegexAst::Star(_) => 2,
            _ => 3,
        }
    }

    fn fmt_at(&self, f: &mut fmt::Formatter<'_>, ctx: u8) -> fmt::Result {
        let parens = self.prec() < ctx;
        if parens {
            f.write_str("(")?;
        }
        match self {
            RegexAst::Empty => f.write_str("EMPTY")?,
            RegexAst::Epsilon => f.write_str("EPS")?,
            RegexAst::Symbol(s) => f.write_str(s)?,
            RegexAst::Union(a, b) => {
                a.fmt_at(f, 0)?;
                f.write_str(" + ")?;
                b.fmt_at(f, 1)?;
            }
            RegexAst::Concat(a, b) => {
                a.fmt_at(f, 1)?;
                f.write_str(" ")?;
                b.fmt_at(f, 2)?;
            }
            RegexAst::Star(a) => {
                a.fmt_at(f, 3)?;
                f.write_str("*")?;
            }
        }
        if parens {
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Display for RegexAst {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_at(f, 0)
    }
}
