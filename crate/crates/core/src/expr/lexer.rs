use super::{ParseError, ParseErrorKind};

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Tok {
    Ident(String),
    LParen,
    RParen,
    LBrack,
    RBrack,
    Plus,
    Star,
    Dot,
    Slash,
    Amp,
    Eof,
}

impl Tok {
    pub fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::LBrack => "`[`".into(),
            Tok::RBrack => "`]`".into(),
            Tok::Plus => "`+`".into(),
            Tok::Star => "`*`".into(),
            Tok::Dot => "`.`".into(),
            Tok::Slash => "`/`".into(),
            Tok::Amp => "`&`".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

/// Splits `text` into tokens paired with their 1-based columns.
pub(crate) fn lex(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let mut out = Vec::new();
    let mut chars = text.chars().enumerate().peekable();
    while let Some((i, c)) = chars.next() {
        let col = i + 1;
        let tok = match c {
            c if c.is_whitespace() => continue,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '[' => Tok::LBrack,
            ']' => Tok::RBrack,
            '+' => Tok::Plus,
            '*' => Tok::Star,
            '.' | '·' => Tok::Dot,
            '/' => Tok::Slash,
            '&' => Tok::Amp,
            c if c.is_alphanumeric() || c == '_' => {
                let mut name = String::from(c);
                while let Some(&(_, d)) = chars.peek() {
                    if d.is_alphanumeric() || d == '_' {
                        name.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                Tok::Ident(name)
            }
            other => {
                return Err(ParseError {
                    column: col,
                    kind: ParseErrorKind::UnexpectedChar(other),
                })
            }
        };
        out.push((tok, col));
    }
    out.push((Tok::Eof, text.chars().count() + 1));
    Ok(out)
}
