//! Regular expressions and attack expressions: syntax trees, the textual
//! grammar, rendering and structural checks.
//!
//! Regex grammar (star binds tightest, then concatenation, then union):
//!
//! ```text
//! regex  := term ('+' term)*
//! term   := factor ('.'? factor)*
//! factor := atom '*'*
//! atom   := SYMBOL | 'EPS' | 'EMPTY' | '(' regex ')'
//! ```
//!
//! Attack grammar. Regex operands are always bracketed, `U` binds loosest and
//! chains of `.`, `/` and `&` are left-associative but may not mix operators:
//!
//! ```text
//! aexpr   := chain ('U' chain)*
//! chain   := operand (op operand)*        op is one of '.', '/', '&'
//! operand := 'I' | SYMBOL | '[' regex ']' | '(' aexpr ')'
//!          | 'hd' '(' aexpr ')' | 'tl' '(' aexpr ')'
//! ```

mod attack;
mod lexer;
mod parser;
mod regex;

pub use attack::{AttackExpr, ExprIssue};
pub use parser::{parse_attack_expr, parse_regex};
pub use regex::RegexAst;

/// Error produced while lexing or parsing, located at a 1-based column.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("column {column}: {kind}")]
pub struct ParseError {
    pub column: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseErrorKind {
    #[error("unexpected character `{0}`")]
    UnexpectedChar(char),

    #[error("expected {expected}, found {found}")]
    Unexpected { expected: String, found: String },

    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),

    #[error("reserved token `{0}` cannot appear here")]
    Reserved(String),

    #[error("{0}")]
    Structure(String),
}

pub fn render_regex(r: &RegexAst) -> String {
    r.to_string()
}

pub fn render_attack_expr(e: &AttackExpr) -> String {
    e.to_string()
}

pub fn expr_size(e: &AttackExpr) -> usize {
    e.size()
}

pub fn restrictions_star_free(e: &AttackExpr) -> bool {
    e.restrictions_star_free()
}

pub fn validate_attack_expr(e: &AttackExpr, alphabet: &crate::automata::Alphabet) -> Vec<ExprIssue> {
    e.validate(alphabet)
}
