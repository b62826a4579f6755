use super::lexer::{lex, Tok};
use super::{AttackExpr, ParseError, ParseErrorKind, RegexAst};
use crate::automata::{Alphabet, RESERVED_TOKENS};

/// Parses a regular expression whose symbols must belong to `alphabet`.
pub fn parse_regex(text: &str, alphabet: &Alphabet) -> Result<RegexAst, ParseError> {
    let toks = lex(text)?;
    let mut p = Parser { toks: &toks, i: 0, alphabet };
    let r = p.regex()?;
    p.expect(Tok::Eof, "end of input")?;
    Ok(r)
}

/// Parses an attack expression over `alphabet`.
pub fn parse_attack_expr(text: &str, alphabet: &Alphabet) -> Result<AttackExpr, ParseError> {
    let toks = lex(text)?;
    let mut p = Parser { toks: &toks, i: 0, alphabet };
    let col = p.column();
    let e = p.aexpr()?;
    p.expect(Tok::Eof, "end of input")?;
    into_attack(e, col)
}

enum Operand {
    Attack(AttackExpr),
    Regex(RegexAst),
}

fn into_attack(op: Operand, column: usize) -> Result<AttackExpr, ParseError> {
    match op {
        Operand::Attack(e) => Ok(e),
        Operand::Regex(_) => Err(ParseError {
            column,
            kind: ParseErrorKind::Structure(
                "a bracketed regex is not an attack expression on its own".into(),
            ),
        }),
    }
}

struct Parser<'a> {
    toks: &'a [(Tok, usize)],
    i: usize,
    alphabet: &'a Alphabet,
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.i].0
    }

    fn column(&self) -> usize {
        self.toks[self.i].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.i].0.clone();
        if t != Tok::Eof {
            self.i += 1;
        }
        t
    }

    fn error(&self, kind: ParseErrorKind) -> ParseError {
        ParseError {
            column: self.column(),
            kind,
        }
    }

    fn unexpected(&self, expected: &str) -> ParseError {
        self.error(ParseErrorKind::Unexpected {
            expected: expected.to_string(),
            found: self.peek().describe(),
        })
    }

    fn expect(&mut self, tok: Tok, expected: &str) -> Result<(), ParseError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(self.unexpected(expected))
        }
    }

    fn symbol(&self, name: &str) -> Result<(), ParseError> {
        if RESERVED_TOKENS.contains(&name) {
            Err(self.error(ParseErrorKind::Reserved(name.to_string())))
        } else if self.alphabet.index_of(name).is_none() {
            Err(self.error(ParseErrorKind::UnknownSymbol(name.to_string())))
        } else {
            Ok(())
        }
    }

    fn regex(&mut self) -> Result<RegexAst, ParseError> {
        let mut r = self.term()?;
        while *self.peek() == Tok::Plus {
            self.bump();
            r = RegexAst::union(r, self.term()?);
        }
        Ok(r)
    }

    fn term(&mut self) -> Result<RegexAst, ParseError> {
        let mut r = self.factor()?;
        loop {
            match self.peek() {
                Tok::Dot => {
                    self.bump();
                    r = RegexAst::concat(r, self.factor()?);
                }
                Tok::Ident(_) | Tok::LParen => r = RegexAst::concat(r, self.factor()?),
                _ => return Ok(r),
            }
        }
    }

    fn factor(&mut self) -> Result<RegexAst, ParseError> {
        let mut r = self.atom()?;
        while *self.peek() == Tok::Star {
            self.bump();
            r = RegexAst::star(r);
        }
        Ok(r)
    }

    fn atom(&mut self) -> Result<RegexAst, ParseError> {
        match self.peek().clone() {
            Tok::Ident(name) if name == "EPS" => {
                self.bump();
                Ok(RegexAst::Epsilon)
            }
            Tok::Ident(name) if name == "EMPTY" => {
                self.bump();
                Ok(RegexAst::Empty)
            }
            Tok::Ident(name) => {
                self.symbol(&name)?;
                self.bump();
                Ok(RegexAst::Symbol(name))
            }
            Tok::LParen => {
                self.bump();
                let r = self.regex()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(r)
            }
            _ => Err(self.unexpected("a symbol, `EPS`, `EMPTY` or `(`")),
        }
    }

    fn aexpr(&mut self) -> Result<Operand, ParseError> {
        let col = self.column();
        let first = self.chain()?;
        if *self.peek() != Tok::Ident("U".into()) {
            return Ok(first);
        }
        let mut e = into_attack(first, col)?;
        while *self.peek() == Tok::Ident("U".into()) {
            self.bump();
            let col = self.column();
            let rhs = into_attack(self.chain()?, col)?;
            e = AttackExpr::union(e, rhs);
        }
        Ok(Operand::Attack(e))
    }

    fn chain_op(&self) -> Option<Tok> {
        match self.peek() {
            t @ (Tok::Dot | Tok::Slash | Tok::Amp) => Some(t.clone()),
            _ => None,
        }
    }

    fn chain(&mut self) -> Result<Operand, ParseError> {
        let mut acc = self.operand()?;
        let Some(op) = self.chain_op() else {
            return Ok(acc);
        };
        while let Some(next) = self.chain_op() {
            if next != op {
                return Err(self.error(ParseErrorKind::Structure(format!(
                    "cannot mix {} and {} in one chain; add parentheses",
                    op.describe(),
                    next.describe()
                ))));
            }
            let op_col = self.column();
            self.bump();
            let rhs = self.operand()?;
            acc = Operand::Attack(combine(&op, acc, rhs, op_col)?);
        }
        Ok(acc)
    }

    fn operand(&mut self) -> Result<Operand, ParseError> {
        match self.peek().clone() {
            Tok::Ident(name) if name == "I" => {
                self.bump();
                Ok(Operand::Attack(AttackExpr::Identity))
            }
            Tok::Ident(name) if name == "hd" || name == "tl" => {
                self.bump();
                self.expect(Tok::LParen, "`(`")?;
                let col = self.column();
                let inner = into_attack(self.aexpr()?, col)?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(Operand::Attack(if name == "hd" {
                    AttackExpr::hd(inner)
                } else {
                    AttackExpr::tl(inner)
                }))
            }
            Tok::Ident(name) => {
                self.symbol(&name)?;
                self.bump();
                Ok(Operand::Attack(AttackExpr::Sym(name)))
            }
            Tok::LBrack => {
                self.bump();
                let r = self.regex()?;
                self.expect(Tok::RBrack, "`]`")?;
                Ok(Operand::Regex(r))
            }
            Tok::LParen => {
                self.bump();
                let col = self.column();
                let inner = into_attack(self.aexpr()?, col)?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(Operand::Attack(inner))
            }
            _ => Err(self.unexpected("`I`, a symbol, `[`, `(`, `hd(` or `tl(`")),
        }
    }
}

fn combine(op: &Tok, lhs: Operand, rhs: Operand, column: usize) -> Result<AttackExpr, ParseError> {
    let structure = |msg: String| ParseError {
        column,
        kind: ParseErrorKind::Structure(msg),
    };
    match (lhs, rhs) {
        (Operand::Attack(p), Operand::Regex(k)) => Ok(match op {
            Tok::Dot => AttackExpr::concat_right(p, k),
            Tok::Slash => AttackExpr::quotient_by(p, k),
            _ => AttackExpr::intersect(p, k),
        }),
        (Operand::Regex(k), Operand::Attack(p)) => Ok(match op {
            Tok::Dot => AttackExpr::concat_left(k, p),
            Tok::Slash => AttackExpr::k_quotient_by(k, p),
            _ => AttackExpr::intersect(p, k),
        }),
        (Operand::Attack(_), Operand::Attack(_)) => Err(structure(format!(
            "both operands of {} are attack expressions; one must be a bracketed regex",
            op.describe()
        ))),
        (Operand::Regex(_), Operand::Regex(_)) => Err(structure(format!(
            "both operands of {} are bracketed regexes; one must be an attack expression",
            op.describe()
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unary() -> Alphabet {
        Alphabet::new(["0"]).unwrap()
    }

    fn s(n: &str) -> RegexAst {
        RegexAst::symbol(n)
    }

    #[test]
    fn parses_regex_precedence() {
        let a = unary();
        assert_eq!(
            parse_regex("0 0*", &a).unwrap(),
            RegexAst::concat(s("0"), RegexAst::star(s("0")))
        );
        assert_eq!(parse_regex("EPS", &a).unwrap(), RegexAst::Epsilon);
        assert_eq!(
            parse_regex("0 + 0.0", &a).unwrap(),
            RegexAst::union(s("0"), RegexAst::concat(s("0"), s("0")))
        );
        assert_eq!(
            parse_regex("0**", &a).unwrap(),
            RegexAst::star(RegexAst::star(s("0")))
        );
    }

    #[test]
    fn regex_errors_are_positioned() {
        let a = unary();
        let e = parse_regex("0 (0", &a).unwrap_err();
        assert_eq!(e.column, 5);
        let e = parse_regex("0 1", &a).unwrap_err();
        assert_eq!((e.column, e.kind), (3, ParseErrorKind::UnknownSymbol("1".into())));
        let e = parse_regex("0 I", &a).unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::Reserved("I".into()));
        assert!(parse_regex("", &a).is_err());
        assert!(parse_regex("0 )", &a).is_err());
    }

    #[test]
    fn parses_attack_forms() {
        let a = unary();
        assert_eq!(
            parse_attack_expr("tl(I)", &a).unwrap(),
            AttackExpr::tl(AttackExpr::Identity)
        );
        assert_eq!(
            parse_attack_expr("[0] & I", &a).unwrap(),
            AttackExpr::intersect(AttackExpr::Identity, s("0"))
        );
        assert_eq!(
            parse_attack_expr("[0] / I", &a).unwrap(),
            AttackExpr::k_quotient_by(s("0"), AttackExpr::Identity)
        );
        assert_eq!(
            parse_attack_expr("0 . [0]", &a).unwrap(),
            AttackExpr::concat_right(AttackExpr::sym("0"), s("0"))
        );
        let m = parse_attack_expr("((I & [0 (0 0)*]) . [0]) U tl(I & [0 0 (0 0)*])", &a).unwrap();
        assert_eq!(m.size(), 5);
        assert!(!m.restrictions_star_free());
    }

    #[test]
    fn attack_structure_errors() {
        let a = unary();
        for bad in ["I . I", "[0]", "[0] . [0]", "I . [0] & [0]", "I U", "hd I", "(I", "EPS", "I [0]"] {
            assert!(parse_attack_expr(bad, &a).is_err(), "{bad} should fail");
        }
        let e = parse_attack_expr("I . [0] / [0]", &a).unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::Structure(_)));
        assert_eq!(e.column, 9);
    }

    #[test]
    fn render_round_trips() {
        let a = Alphabet::new(["0", "c1"]).unwrap();
        for text in [
            "tl(I)",
            "I . [0]",
            "[0] . I . [c1]",
            "[0] / (I / [0])",
            "hd(I & [c1 c1*]) U 0 U (I U I)",
            "tl(tl(I & [0 (0 0 0)*])) . [0 0]",
        ] {
            let e = parse_attack_expr(text, &a).unwrap();
            assert_eq!(e.to_string(), text);
            assert_eq!(parse_attack_expr(&e.to_string(), &a).unwrap(), e);
        }
    }
}
