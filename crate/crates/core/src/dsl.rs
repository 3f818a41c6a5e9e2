//! Text notation for space terms.
//!
//! ```text
//! expr     := fibrous ( "+" fibrous )*
//! fibrous  := atom ( "(" expr ")" atom )*
//! atom     := INT "p" | "p" | INT "*" atom
//!           | name ( "^" INT | "_" INT | "(" INT ( "," INT )* ")" )?
//!           | "[" expr "]"          grouping
//!           | "{" expr "}"          length-0 decomposition
//! ```
//!
//! Parenthesized groups are always running fibers, so a decomposition reads
//! exactly as it is usually written: `p(S^1)rosette(4)`, `T^2(2*T^2)T^2`.
//! Whitespace is insignificant. Names are checked against a catalog while
//! parsing so that mistakes are reported with their position.

use std::fmt;
use std::ops::Range;

use thiserror::Error;

use crate::catalog::{Catalog, ParamStyle};
use crate::term::{FibrousDecomposition, SpaceTerm};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParseErrorKind {
    /// A character that starts no token, or an integer literal too large.
    Lexical,
    /// A token out of place.
    Syntax,
    /// Running fibers not separated by transitional ones, or a decomposition
    /// that starts or ends with a running fiber.
    Alternation,
    UnknownName,
    /// Wrong number of parameters or a parameter outside its domain.
    Parameter,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{message} at {}..{}", span.start, span.end)]
pub struct ParseError {
    pub kind: ParseErrorKind,
    /// Byte range of the offending input.
    pub span: Range<usize>,
    pub message: String,
}

impl ParseError {
    fn new(kind: ParseErrorKind, span: Range<usize>, message: impl Into<String>) -> Self {
        Self {
            kind,
            span,
            message: message.into(),
        }
    }

    /// Multi-line report pointing at the offending span of `source`.
    pub fn diagnostic(&self, source: &str) -> String {
        let start = source[..self.span.start.min(source.len())].chars().count();
        let width = source
            .get(self.span.clone())
            .map_or(1, |s| s.chars().count().max(1));
        format!(
            "error: {}\n  {}\n  {}{}",
            self.message,
            source,
            " ".repeat(start),
            "^".repeat(width)
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(u64),
    Ident(String),
    Plus,
    Star,
    Caret,
    Underscore,
    Comma,
    LParen,
    RParen,
    LBracket,
    RBracket,
    LBrace,
    RBrace,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(n) => write!(f, "`{n}`"),
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Plus => f.write_str("`+`"),
            Tok::Star => f.write_str("`*`"),
            Tok::Caret => f.write_str("`^`"),
            Tok::Underscore => f.write_str("`_`"),
            Tok::Comma => f.write_str("`,`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::LBracket => f.write_str("`[`"),
            Tok::RBracket => f.write_str("`]`"),
            Tok::LBrace => f.write_str("`{`"),
            Tok::RBrace => f.write_str("`}`"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    span: Range<usize>,
}

fn lex(text: &str) -> Result<Vec<Token>, ParseError> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(start, c)) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
            continue;
        }
        if c.is_ascii_digit() {
            let mut end = start;
            while let Some(&(i, d)) = chars.peek() {
                if !d.is_ascii_digit() {
                    break;
                }
                end = i + 1;
                chars.next();
            }
            let n = text[start..end].parse::<u64>().map_err(|_| {
                ParseError::new(
                    ParseErrorKind::Lexical,
                    start..end,
                    "integer literal too large",
                )
            })?;
            out.push(Token {
                tok: Tok::Int(n),
                span: start..end,
            });
            continue;
        }
        if c.is_ascii_alphabetic() {
            let mut end = start;
            while let Some(&(i, d)) = chars.peek() {
                if !d.is_ascii_alphabetic() {
                    break;
                }
                end = i + 1;
                chars.next();
            }
            out.push(Token {
                tok: Tok::Ident(text[start..end].to_string()),
                span: start..end,
            });
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '_' => Tok::Underscore,
            ',' => Tok::Comma,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '[' => Tok::LBracket,
            ']' => Tok::RBracket,
            '{' => Tok::LBrace,
            '}' => Tok::RBrace,
            other => {
                return Err(ParseError::new(
                    ParseErrorKind::Lexical,
                    start..start + other.len_utf8(),
                    format!("unexpected character {other:?}"),
                ))
            }
        };
        chars.next();
        out.push(Token {
            tok,
            span: start..start + c.len_utf8(),
        });
    }
    out.push(Token {
        tok: Tok::End,
        span: text.len()..text.len(),
    });
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    catalog: &'a Catalog,
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.tokens[self.pos].tok
    }

    fn peek_at(&self, ahead: usize) -> &Tok {
        let i = (self.pos + ahead).min(self.tokens.len() - 1);
        &self.tokens[i].tok
    }

    fn span(&self) -> Range<usize> {
        self.tokens[self.pos].span.clone()
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if self.pos < self.tokens.len() - 1 {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<Token, ParseError> {
        if *self.peek() == want {
            Ok(self.bump())
        } else {
            Err(ParseError::new(
                ParseErrorKind::Syntax,
                self.span(),
                format!("expected {what}, found {}", self.peek()),
            ))
        }
    }

    fn expr(&mut self) -> Result<SpaceTerm, ParseError> {
        let mut parts = vec![self.fibrous()?];
        while *self.peek() == Tok::Plus {
            self.bump();
            parts.push(self.fibrous()?);
        }
        Ok(if parts.len() == 1 {
            parts.pop().unwrap()
        } else {
            SpaceTerm::Sum(parts)
        })
    }

    fn fibrous(&mut self) -> Result<SpaceTerm, ParseError> {
        if *self.peek() == Tok::LParen {
            return Err(ParseError::new(
                ParseErrorKind::Alternation,
                self.span(),
                "a decomposition cannot start with a running fiber",
            ));
        }
        let mut transitional = vec![self.atom()?];
        let mut running = Vec::new();
        while *self.peek() == Tok::LParen {
            let open = self.bump().span;
            running.push(self.expr()?);
            let close = self
                .expect(Tok::RParen, "`)` closing the running fiber")?
                .span;
            match self.peek() {
                Tok::LParen => {
                    return Err(ParseError::new(
                        ParseErrorKind::Alternation,
                        self.span(),
                        "two running fibers must be separated by a transitional fiber",
                    ))
                }
                Tok::End | Tok::Plus | Tok::RParen | Tok::RBracket | Tok::RBrace => {
                    return Err(ParseError::new(
                        ParseErrorKind::Alternation,
                        open.start..close.end,
                        "a decomposition cannot end with a running fiber",
                    ))
                }
                _ => transitional.push(self.atom()?),
            }
        }
        if running.is_empty() {
            return Ok(transitional.pop().unwrap());
        }
        Ok(SpaceTerm::Decomp(
            FibrousDecomposition::new(transitional, running).expect("parser alternates fibers"),
        ))
    }

    fn atom(&mut self) -> Result<SpaceTerm, ParseError> {
        let here = self.span();
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                match self.peek().clone() {
                    Tok::Ident(s) if s == "p" => {
                        self.bump();
                        Ok(SpaceTerm::Finite(n))
                    }
                    Tok::Star => {
                        self.bump();
                        if n == 0 {
                            return Err(ParseError::new(
                                ParseErrorKind::Parameter,
                                here,
                                "a multiplier must be positive",
                            ));
                        }
                        let base = self.atom()?;
                        Ok(SpaceTerm::multiple(n, base).expect("nonzero"))
                    }
                    other => Err(ParseError::new(
                        ParseErrorKind::Syntax,
                        self.span(),
                        format!("expected `p` or `*` after an integer, found {other}"),
                    )),
                }
            }
            Tok::Ident(name) => {
                self.bump();
                if name == "p" {
                    return Ok(SpaceTerm::point());
                }
                self.catalog_ref(name, here)
            }
            Tok::LBracket => {
                self.bump();
                let inner = self.expr()?;
                self.expect(Tok::RBracket, "`]`")?;
                Ok(inner)
            }
            Tok::LBrace => {
                self.bump();
                let inner = self.expr()?;
                self.expect(Tok::RBrace, "`}`")?;
                Ok(SpaceTerm::Decomp(FibrousDecomposition::trivial(inner)))
            }
            Tok::LParen => Err(ParseError::new(
                ParseErrorKind::Alternation,
                here,
                "expected a transitional fiber, found a running fiber",
            )),
            other => Err(ParseError::new(
                ParseErrorKind::Syntax,
                here,
                format!("expected a space, found {other}"),
            )),
        }
    }

    fn catalog_ref(
        &mut self,
        name: String,
        name_span: Range<usize>,
    ) -> Result<SpaceTerm, ParseError> {
        let mut params = Vec::new();
        let mut end = name_span.end;
        match self.peek() {
            Tok::Caret | Tok::Underscore => {
                self.bump();
                let t = self.bump();
                let Tok::Int(n) = t.tok else {
                    return Err(ParseError::new(
                        ParseErrorKind::Syntax,
                        t.span,
                        format!("expected an integer parameter, found {}", t.tok),
                    ));
                };
                params.push(n);
                end = t.span.end;
            }
            // `name(` followed by an integer list; a running fiber can never
            // be a bare integer, so this does not clash with decompositions
            Tok::LParen
                if matches!(self.peek_at(1), Tok::Int(_))
                    && matches!(self.peek_at(2), Tok::Comma | Tok::RParen) =>
            {
                self.bump();
                loop {
                    let t = self.bump();
                    let Tok::Int(n) = t.tok else {
                        return Err(ParseError::new(
                            ParseErrorKind::Syntax,
                            t.span,
                            format!("expected an integer parameter, found {}", t.tok),
                        ));
                    };
                    params.push(n);
                    let sep = self.bump();
                    match sep.tok {
                        Tok::Comma => continue,
                        Tok::RParen => {
                            end = sep.span.end;
                            break;
                        }
                        other => {
                            return Err(ParseError::new(
                                ParseErrorKind::Syntax,
                                sep.span,
                                format!("expected `,` or `)` in parameter list, found {other}"),
                            ))
                        }
                    }
                }
            }
            _ => {}
        }
        let Some(entry) = self.catalog.entry(&name) else {
            return Err(ParseError::new(
                ParseErrorKind::UnknownName,
                name_span,
                format!("unknown space `{name}`"),
            ));
        };
        entry.check_params(&params).map_err(|e| {
            ParseError::new(
                ParseErrorKind::Parameter,
                name_span.start..end,
                e.to_string(),
            )
        })?;
        Ok(SpaceTerm::catalog(name, params))
    }
}

/// Parses against the builtin catalog.
pub fn parse(text: &str) -> Result<SpaceTerm, ParseError> {
    parse_with(text, Catalog::builtin())
}

pub fn parse_with(text: &str, catalog: &Catalog) -> Result<SpaceTerm, ParseError> {
    let mut p = Parser {
        tokens: lex(text)?,
        pos: 0,
        catalog,
    };
    let term = p.expr()?;
    match p.peek() {
        Tok::End => Ok(term),
        Tok::Ident(_) | Tok::Int(_) | Tok::LBracket | Tok::LBrace => Err(ParseError::new(
            ParseErrorKind::Alternation,
            p.span(),
            "two transitional fibers must be separated by a running fiber",
        )),
        other => Err(ParseError::new(
            ParseErrorKind::Syntax,
            p.span(),
            format!("unexpected {other}"),
        )),
    }
}

/// Canonical text for a term; [`parse`] reads it back to an equal term.
pub fn render(term: &SpaceTerm) -> String {
    let mut out = String::new();
    write_expr(&mut out, term);
    out
}

fn write_expr(out: &mut String, term: &SpaceTerm) {
    match term {
        SpaceTerm::Sum(parts) => {
            for (i, part) in parts.iter().enumerate() {
                if i > 0 {
                    out.push_str(" + ");
                }
                write_fibrous(out, part);
            }
        }
        _ => write_fibrous(out, term),
    }
}

fn write_fibrous(out: &mut String, term: &SpaceTerm) {
    match term {
        SpaceTerm::Decomp(d) if !d.is_trivial() => {
            for (level, fiber) in d.fibers() {
                match level {
                    crate::term::FiberLevel::Transitional(_) => write_atom(out, fiber),
                    crate::term::FiberLevel::Running(_) => {
                        out.push('(');
                        write_expr(out, fiber);
                        out.push(')');
                    }
                }
            }
        }
        SpaceTerm::Sum(_) => {
            out.push('[');
            write_expr(out, term);
            out.push(']');
        }
        _ => write_atom(out, term),
    }
}

fn write_atom(out: &mut String, term: &SpaceTerm) {
    use std::fmt::Write;
    match term {
        SpaceTerm::Finite(1) => out.push('p'),
        SpaceTerm::Finite(n) => {
            let _ = write!(out, "{n}p");
        }
        SpaceTerm::Multiple(k, base) => {
            let _ = write!(out, "{k}*");
            write_atom(out, base);
        }
        SpaceTerm::CatalogRef(r) => {
            out.push_str(&r.name);
            let style = Catalog::builtin().entry(&r.name).map(|e| e.style);
            match (style, r.params.as_slice()) {
                (_, []) => {}
                (Some(ParamStyle::Superscript), [n]) => {
                    let _ = write!(out, "^{n}");
                }
                (Some(ParamStyle::Subscript), [n]) => {
                    let _ = write!(out, "_{n}");
                }
                (_, params) => {
                    let list: Vec<String> = params.iter().map(u64::to_string).collect();
                    let _ = write!(out, "({})", list.join(","));
                }
            }
        }
        SpaceTerm::Decomp(d) if d.is_trivial() => {
            out.push('{');
            write_expr(out, &d.transitional()[0]);
            out.push('}');
        }
        SpaceTerm::Decomp(_) | SpaceTerm::Sum(_) => {
            out.push('[');
            write_expr(out, term);
            out.push(']');
        }
    }
}
