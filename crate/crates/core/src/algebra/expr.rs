//! Parser for element expressions.
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := int | atom
//! atom   := 'p(' vid ')' | 's(' eid ('.' eid)* ')' | 'sx(' eid ('.' eid)* ')' | '(' expr ')'
//! ```
//!
//! `sx(mu)` is the ghost path `s_{mu^*}`. A bare integer `n` stands for `n`
//! times the unit, so `0` parses to zero. Whitespace is ignored.

use thiserror::Error;

use super::element::{Algebra, Element};
use crate::graph::{is_identifier_char, GraphError, Path};
use crate::ring::{Coeff, RingSpec};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExprError {
    #[error("column {col}: {msg}")]
    Syntax { col: usize, msg: String },
    #[error("column {col}: {source}")]
    Semantic {
        col: usize,
        #[source]
        source: GraphError,
    },
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Word(String),
    LParen,
    RParen,
    Plus,
    Minus,
    Star,
    Dot,
    End,
}

struct Lexer {
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ExprError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        let simple = match c {
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '.' => Some(Tok::Dot),
            _ => None,
        };
        if let Some(t) = simple {
            out.push((col, t));
            i += 1;
        } else if c.is_whitespace() {
            i += 1;
        } else if is_identifier_char(c) {
            let start = i;
            while i < chars.len() && is_identifier_char(chars[i]) {
                i += 1;
            }
            out.push((col, Tok::Word(chars[start..i].iter().collect())));
        } else {
            return Err(ExprError::Syntax { col, msg: format!("unexpected character `{c}`") });
        }
    }
    out.push((chars.len() + 1, Tok::End));
    Ok(out)
}

impl Lexer {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn col(&self) -> usize {
        self.toks[self.pos].0
    }

    fn bump(&mut self) -> (usize, Tok) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, t: Tok, what: &str) -> Result<(), ExprError> {
        if *self.peek() == t {
            self.bump();
            Ok(())
        } else {
            Err(self.error(&format!("expected `{what}`")))
        }
    }

    fn error(&self, msg: &str) -> ExprError {
        ExprError::Syntax { col: self.col(), msg: msg.to_string() }
    }
}

enum Factor {
    Scalar(Coeff),
    Elem(Element),
}

struct Parser<'a> {
    alg: &'a Algebra,
    lx: Lexer,
}

impl Parser<'_> {
    fn expr(&mut self) -> Result<Element, ExprError> {
        let mut negate = false;
        if *self.lx.peek() == Tok::Minus {
            self.lx.bump();
            negate = true;
        }
        let first = self.term()?;
        let mut acc = if negate { first.neg() } else { first };
        loop {
            match self.lx.peek() {
                Tok::Plus => {
                    self.lx.bump();
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.lx.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Element, ExprError> {
        let ring = self.alg.ring();
        let mut coeff: Coeff = 1;
        let mut elem: Option<Element> = None;
        loop {
            match self.factor()? {
                Factor::Scalar(c) => coeff = ring.mul(coeff, c),
                Factor::Elem(e) => {
                    elem = Some(match elem {
                        None => e,
                        Some(prev) => &prev * &e,
                    })
                }
            }
            if *self.lx.peek() == Tok::Star {
                self.lx.bump();
            } else {
                break;
            }
        }
        Ok(match elem {
            Some(e) => e.scale(coeff),
            None => self.alg.scalar(coeff),
        })
    }

    fn factor(&mut self) -> Result<Factor, ExprError> {
        let (col, tok) = self.lx.bump();
        match tok {
            Tok::LParen => {
                let e = self.expr()?;
                self.lx.expect(Tok::RParen, ")")?;
                Ok(Factor::Elem(e))
            }
            Tok::Word(w) if w.chars().all(|c| c.is_ascii_digit()) => {
                let value: i128 =
                    w.parse().map_err(|_| ExprError::Syntax { col, msg: "integer literal too large".into() })?;
                let ring = self.alg.ring();
                if ring == RingSpec::Integers && Coeff::try_from(value).is_err() {
                    return Err(ExprError::Syntax { col, msg: "integer literal too large".into() });
                }
                Ok(Factor::Scalar(ring.reduce(value)))
            }
            Tok::Word(w) if matches!(w.as_str(), "p" | "s" | "sx") => {
                self.lx.expect(Tok::LParen, "(")?;
                let g = self.alg.graph();
                let semantic = |col, source| ExprError::Semantic { col, source };
                let e = if w == "p" {
                    let (c, name) = self.ident()?;
                    self.alg.p(g.require_vertex(&name).map_err(|s| semantic(c, s))?)
                } else {
                    let (c0, first) = self.ident()?;
                    let mut edges = vec![g.require_edge(&first).map_err(|s| semantic(c0, s))?];
                    while *self.lx.peek() == Tok::Dot {
                        self.lx.bump();
                        let (c, name) = self.ident()?;
                        edges.push(g.require_edge(&name).map_err(|s| semantic(c, s))?);
                    }
                    let path = Path::from_edges(g, edges).map_err(|s| semantic(c0, s))?;
                    if w == "s" {
                        self.alg.path(&path)
                    } else {
                        self.alg.ghost(&path)
                    }
                };
                self.lx.expect(Tok::RParen, ")")?;
                Ok(Factor::Elem(e))
            }
            Tok::End => Err(ExprError::Syntax { col, msg: "unexpected end of expression".into() }),
            _ => Err(ExprError::Syntax { col, msg: "expected `p(`, `s(`, `sx(`, `(` or an integer".into() }),
        }
    }

    fn ident(&mut self) -> Result<(usize, String), ExprError> {
        match self.lx.bump() {
            (col, Tok::Word(w)) => Ok((col, w)),
            (col, _) => Err(ExprError::Syntax { col, msg: "expected identifier".into() }),
        }
    }
}

impl Algebra {
    /// Parses an expression into a normal-form element of this algebra.
    pub fn parse(&self, text: &str) -> Result<Element, ExprError> {
        let mut p = Parser { alg: self, lx: Lexer { toks: lex(text)?, pos: 0 } };
        let e = p.expr()?;
        if *p.lx.peek() != Tok::End {
            return Err(p.lx.error("unexpected trailing input"));
        }
        Ok(e)
    }
}
