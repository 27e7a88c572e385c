//! Text grammar for terms and constraints.
//!
//! ```text
//! variable   := "x" digits            (value >= 1)
//! term       := variable { ("*" | juxtaposition) variable }
//! constraint := term ("=" | "<=") term
//! ```
//!
//! Whitespace is insignificant around tokens. Juxtaposition `x1x2` is
//! legal input; canonical output always uses `*`. The tokenizer reads
//! maximal digit runs, so `x12` is variable 12, never `x1*x2`.
//!
//! `t <= s` is notation for `t*s = t` and desugars at parse time; the
//! core has no inequality type.

use crate::error::{Error, Result};
use crate::semilattice::{Equation, Term};

/// Parse a term such as `"x1x2x3"` or `"x2 * x2 * x1"` into its
/// normalized variable set.
pub fn parse_term(text: &str) -> Result<Term> {
    let mut lexer = Lexer::new(text);
    let term = lexer.term()?;
    lexer.skip_ws();
    if let Some((pos, c)) = lexer.peek() {
        return Err(err(pos, format!("unexpected character '{c}' after term")));
    }
    Ok(term)
}

/// Parse a constraint: `"t = s"` yields `Equation(t, s)` preserving side
/// order; `"t <= s"` desugars to `Equation(t*s, t)`.
pub fn parse_constraint(text: &str) -> Result<Equation> {
    let mut lexer = Lexer::new(text);
    let lhs = lexer.term()?;
    lexer.skip_ws();
    let (pos, relator) = lexer.relator()?;
    let rhs = lexer.term()?;
    lexer.skip_ws();
    if let Some((p, c)) = lexer.peek() {
        if c == '=' || c == '<' {
            return Err(err(p, "only one relator allowed per constraint".into()));
        }
        return Err(err(p, format!("unexpected character '{c}' after constraint")));
    }
    match relator {
        Relator::Equal => Ok(Equation::new(lhs, rhs)),
        Relator::LessEqual => {
            let _ = pos;
            Ok(Equation::new(lhs.product(&rhs), lhs))
        }
    }
}

/// Canonical rendering of a term: variables ascending, `*`-separated.
pub fn render_term(term: &Term) -> String {
    term.to_string()
}

/// Canonical rendering of an equation: `"lhs = rhs"`.
pub fn render_equation(eq: &Equation) -> String {
    eq.to_string()
}

enum Relator {
    Equal,
    LessEqual,
}

struct Lexer<'a> {
    text: &'a str,
    chars: std::iter::Peekable<std::str::CharIndices<'a>>,
}

fn err(position: usize, message: String) -> Error {
    Error::Parse { position, message }
}

impl<'a> Lexer<'a> {
    fn new(text: &'a str) -> Self {
        Self {
            text,
            chars: text.char_indices().peekable(),
        }
    }

    fn peek(&mut self) -> Option<(usize, char)> {
        self.chars.peek().copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some((_, c)) if c.is_whitespace()) {
            self.chars.next();
        }
    }

    fn variable(&mut self) -> Result<u32> {
        let (pos, c) = self
            .peek()
            .ok_or_else(|| err(self.text.len(), "expected variable, found end of input".into()))?;
        if c != 'x' {
            return Err(err(pos, format!("expected variable 'x<digits>', found '{c}'")));
        }
        self.chars.next();
        let digit_start = pos + 1;
        let mut value: u64 = 0;
        let mut digits = 0;
        while let Some((_, d)) = self.peek() {
            if let Some(v) = d.to_digit(10) {
                self.chars.next();
                digits += 1;
                value = value.saturating_mul(10).saturating_add(v as u64);
            } else {
                break;
            }
        }
        if digits == 0 {
            return Err(err(digit_start, "expected digits after 'x'".into()));
        }
        if value == 0 {
            return Err(err(pos, "variable index must be >= 1".into()));
        }
        if value > u32::MAX as u64 {
            return Err(err(pos, "variable index too large".into()));
        }
        Ok(value as u32)
    }

    fn term(&mut self) -> Result<Term> {
        self.skip_ws();
        let mut vars = vec![self.variable()?];
        loop {
            self.skip_ws();
            match self.peek() {
                Some((_, '*')) => {
                    self.chars.next();
                    self.skip_ws();
                    vars.push(self.variable()?);
                }
                Some((_, 'x')) => {
                    vars.push(self.variable()?);
                }
                _ => break,
            }
        }
        Term::new(vars)
    }

    fn relator(&mut self) -> Result<(usize, Relator)> {
        match self.peek() {
            Some((pos, '=')) => {
                self.chars.next();
                Ok((pos, Relator::Equal))
            }
            Some((pos, '<')) => {
                self.chars.next();
                match self.peek() {
                    Some((_, '=')) => {
                        self.chars.next();
                        Ok((pos, Relator::LessEqual))
                    }
                    _ => Err(err(pos, "expected '=' after '<'".into())),
                }
            }
            Some((pos, c)) => Err(err(pos, format!("expected '=' or '<=', found '{c}'"))),
            None => Err(err(self.text.len(), "missing relator".into())),
        }
    }
}
