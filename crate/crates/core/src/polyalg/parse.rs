//! Recursive-descent parser for polynomial text.
//!
//! ```text
//! expr     := ['-'] term { ('+' | '-') term }
//! term     := factor { '*' factor }
//! factor   := atom [ '^' nat ]
//! atom     := rational | var | '(' expr ')'
//! rational := nat [ '/' nat ]
//! ```
//!
//! Whitespace is ignored between tokens. Implicit multiplication (`2x`) is
//! a syntax error.

use num_bigint::BigInt;
use num_traits::Zero;

use super::polynomial::Polynomial;
use super::rational::Rational;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Nat(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Nat(n) => format!("number `{n}`"),
        Tok::Ident(s) => format!("identifier `{s}`"),
        Tok::Plus => "`+`".into(),
        Tok::Minus => "`-`".into(),
        Tok::Star => "`*`".into(),
        Tok::Slash => "`/`".into(),
        Tok::Caret => "`^`".into(),
        Tok::LParen => "`(`".into(),
        Tok::RParen => "`)`".into(),
        Tok::End => "end of input".into(),
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        let start = i;
        let tok = match b {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Tok::Nat(text[start..i].parse().unwrap())));
                continue;
            }
            c if c.is_ascii_alphabetic() => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(text[start..i].to_string())));
                continue;
            }
            _ => {
                let ch = text[i..].chars().next().unwrap();
                return Err(Error::Syntax {
                    pos: i,
                    msg: format!("unexpected character `{ch}`"),
                });
            }
        };
        out.push((start, tok));
        i += 1;
    }
    out.push((text.len(), Tok::End));
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    at: usize,
    names: &'a [String],
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn pos(&self) -> usize {
        self.toks[self.at].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].1.clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn unexpected(&self, wanted: &str) -> Error {
        Error::Syntax {
            pos: self.pos(),
            msg: format!("expected {wanted}, found {}", describe(self.peek())),
        }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let neg = if *self.peek() == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        let mut acc = self.term()?;
        if neg {
            acc = -&acc;
        }
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc += &self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc -= &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while *self.peek() == Tok::Star {
            self.bump();
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let pos = self.pos();
        let Tok::Nat(e) = self.peek().clone() else {
            return Err(Error::BadExponent { pos });
        };
        self.bump();
        if *self.peek() == Tok::Slash {
            return Err(Error::BadExponent { pos });
        }
        let e: u32 = e.try_into().map_err(|_| Error::BadExponent { pos })?;
        Ok(base.pow(e))
    }

    fn atom(&mut self) -> Result<Polynomial> {
        let n = self.names.len();
        match self.peek().clone() {
            Tok::Nat(num) => {
                self.bump();
                let mut q = Rational::from_integer(num);
                if *self.peek() == Tok::Slash {
                    self.bump();
                    let pos = self.pos();
                    let Tok::Nat(den) = self.peek().clone() else {
                        return Err(self.unexpected("a denominator"));
                    };
                    if den.is_zero() {
                        return Err(Error::Syntax {
                            pos,
                            msg: "zero denominator".into(),
                        });
                    }
                    self.bump();
                    q /= Rational::from_integer(den);
                }
                Ok(Polynomial::constant(n, q))
            }
            Tok::Ident(name) => {
                let pos = self.pos();
                let i = self
                    .names
                    .iter()
                    .position(|v| *v == name)
                    .ok_or(Error::UnknownVariable { pos, name })?;
                self.bump();
                Ok(Polynomial::var(n, i))
            }
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return Err(self.unexpected("`)`"));
                }
                self.bump();
                Ok(inner)
            }
            _ => Err(self.unexpected("a number, variable or `(`")),
        }
    }
}

/// Checks that names are distinct identifiers of the form `[A-Za-z][A-Za-z0-9_]*`.
pub fn validate_var_names<S: AsRef<str>>(names: &[S]) -> Result<()> {
    for (i, s) in names.iter().enumerate() {
        let s = s.as_ref();
        let mut chars = s.chars();
        let ok = chars.next().is_some_and(|c| c.is_ascii_alphabetic())
            && chars.all(|c| c.is_ascii_alphanumeric() || c == '_');
        if !ok {
            return Err(Error::InvalidVariables(format!("`{s}` is not a valid name")));
        }
        if names[..i].iter().any(|t| t.as_ref() == s) {
            return Err(Error::InvalidVariables(format!("`{s}` appears twice")));
        }
    }
    Ok(())
}

/// Parses `text` as a polynomial in `n` variables named `var_names`.
pub fn parse_poly<S: AsRef<str>>(text: &str, n: usize, var_names: &[S]) -> Result<Polynomial> {
    if var_names.len() != n {
        return Err(Error::InvalidVariables(format!(
            "{} names given for dimension {n}",
            var_names.len()
        )));
    }
    validate_var_names(var_names)?;
    let names: Vec<String> = var_names.iter().map(|s| s.as_ref().to_string()).collect();
    let mut p = Parser {
        toks: lex(text)?,
        at: 0,
        names: &names,
    };
    let out = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(p.unexpected("an operator or end of input"));
    }
    Ok(out)
}
