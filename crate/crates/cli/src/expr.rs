//! Recursive-descent parser for integer polynomials in `T` and `Y`.
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary ('*' unary)*
//! unary := ('+' | '-') unary | power
//! power := atom ('^' integer)?
//! atom  := integer | 'T' | 'Y' | '(' expr ')'
//! ```
//!
//! Juxtaposition is rejected: `2T` and `(Y)(Y)` are syntax errors.

use std::fmt;

use fibra_core::BiPoly;
use num_bigint::BigInt;
use thiserror::Error;

/// Largest accepted exponent.
pub const MAX_EXPONENT: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at offset {offset}: {message}")]
    SyntaxError { offset: usize, message: String },
    #[error("unknown variable {name:?} at offset {offset} (only T and Y are allowed)")]
    UnknownVariable { name: String, offset: usize },
}

impl ParseError {
    pub fn offset(&self) -> usize {
        match self {
            ParseError::SyntaxError { offset, .. } | ParseError::UnknownVariable { offset, .. } => {
                *offset
            }
        }
    }
}

/// A parsed polynomial with its source text.
#[derive(Clone, PartialEq, Eq)]
pub struct PolyExpr {
    pub source: String,
    pub poly: BiPoly,
}

impl std::str::FromStr for PolyExpr {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(PolyExpr {
            source: s.to_string(),
            poly: parse_poly(s)?,
        })
    }
}

impl fmt::Debug for PolyExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.source)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Var(char),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let start = i;
        match c {
            c if c.is_ascii_whitespace() => {
                i += 1;
                continue;
            }
            '0'..='9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let v: BigInt = src[start..i].parse().expect("digits");
                out.push((start, Tok::Int(v)));
                continue;
            }
            c if c.is_alphabetic() || c == '_' => {
                let rest = &src[start..];
                let len = rest
                    .char_indices()
                    .find(|(_, ch)| !(ch.is_alphanumeric() || *ch == '_'))
                    .map_or(rest.len(), |(k, _)| k);
                let name = &rest[..len];
                match name {
                    "T" | "Y" => out.push((start, Tok::Var(name.chars().next().unwrap()))),
                    _ => {
                        return Err(ParseError::UnknownVariable {
                            name: name.to_string(),
                            offset: start,
                        })
                    }
                }
                i += len;
                continue;
            }
            '+' => out.push((start, Tok::Plus)),
            '-' | '\u{2212}' => out.push((start, Tok::Minus)),
            '*' => out.push((start, Tok::Star)),
            '^' => out.push((start, Tok::Caret)),
            '(' => out.push((start, Tok::LParen)),
            ')' => out.push((start, Tok::RParen)),
            _ => {
                return Err(ParseError::SyntaxError {
                    offset: start,
                    message: format!("unexpected character {c:?}"),
                })
            }
        }
        i += c.len_utf8();
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn err<T>(&self, message: &str) -> Result<T, ParseError> {
        Err(ParseError::SyntaxError {
            offset: self.offset(),
            message: message.to_string(),
        })
    }

    fn expr(&mut self) -> Result<BiPoly, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<BiPoly, ParseError> {
        let mut acc = self.unary()?;
        while let Some(Tok::Star) = self.peek() {
            self.pos += 1;
            acc = acc.mul(&self.unary()?);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<BiPoly, ParseError> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                Ok(self.unary()?.neg())
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<BiPoly, ParseError> {
        let base = self.atom()?;
        let out = if let Some(Tok::Caret) = self.peek() {
            self.pos += 1;
            let at = self.offset();
            match self.peek().cloned() {
                Some(Tok::Int(e)) => {
                    self.pos += 1;
                    let e: usize = match usize::try_from(&e) {
                        Ok(e) if e <= MAX_EXPONENT => e,
                        _ => {
                            return Err(ParseError::SyntaxError {
                                offset: at,
                                message: format!("exponent above {MAX_EXPONENT}"),
                            })
                        }
                    };
                    base.pow(e)
                }
                _ => return self.err("expected a nonnegative integer exponent"),
            }
        } else {
            base
        };
        if matches!(
            self.peek(),
            Some(Tok::Int(_) | Tok::Var(_) | Tok::LParen)
        ) {
            return self.err("implicit multiplication is not allowed; use '*'");
        }
        Ok(out)
    }

    fn atom(&mut self) -> Result<BiPoly, ParseError> {
        match self.peek().cloned() {
            Some(Tok::Int(v)) => {
                self.pos += 1;
                Ok(BiPoly::constant(v))
            }
            Some(Tok::Var('T')) => {
                self.pos += 1;
                Ok(BiPoly::monomial(BigInt::from(1), 1, 0))
            }
            Some(Tok::Var(_)) => {
                self.pos += 1;
                Ok(BiPoly::monomial(BigInt::from(1), 0, 1))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                match self.peek() {
                    Some(Tok::RParen) => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    _ => self.err("expected ')'"),
                }
            }
            Some(_) => self.err("expected an integer, T, Y or '('"),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses and expands an integer polynomial in `T` and `Y`.
pub fn parse_poly(src: &str) -> Result<BiPoly, ParseError> {
    let mut p = Parser {
        toks: lex(src)?,
        pos: 0,
        end: src.len(),
    };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("unexpected trailing input");
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn coefficient_matrix() {
        let p = parse_poly("Y^3+Y-T").unwrap();
        assert_eq!(p.coeff(0, 3), BigInt::from(1));
        assert_eq!(p.coeff(0, 1), BigInt::from(1));
        assert_eq!(p.coeff(1, 0), BigInt::from(-1));
        assert_eq!(p, BiPoly::from_terms(&[(1, 0, 3), (1, 0, 1), (-1, 1, 0)]));
        let p = parse_poly("Y^2-T").unwrap();
        assert_eq!(p, BiPoly::from_terms(&[(1, 0, 2), (-1, 1, 0)]));
    }

    #[test]
    fn unknown_variable_offset() {
        assert_eq!(
            parse_poly("Y^2 - X"),
            Err(ParseError::UnknownVariable {
                name: "X".into(),
                offset: 6
            })
        );
    }

    #[test]
    fn syntax_errors() {
        assert_eq!(parse_poly("2T").unwrap_err().offset(), 1);
        assert_eq!(parse_poly("(Y)(Y)").unwrap_err().offset(), 3);
        assert_eq!(parse_poly("Y^").unwrap_err().offset(), 2);
        assert_eq!(parse_poly("Y^-1").unwrap_err().offset(), 2);
        assert_eq!(parse_poly("(Y+1").unwrap_err().offset(), 4);
        assert_eq!(parse_poly("Y + $").unwrap_err().offset(), 4);
        assert_eq!(parse_poly("").unwrap_err().offset(), 0);
        assert!(parse_poly("Y^5000").is_err());
    }

    #[test]
    fn expansion() {
        let p = parse_poly("(Y - T)^2 - -3*T*(2)").unwrap();
        assert_eq!(
            p,
            BiPoly::from_terms(&[(1, 0, 2), (-2, 1, 1), (1, 2, 0), (6, 1, 0)])
        );
        assert_eq!(parse_poly("-Y^2").unwrap(), BiPoly::from_terms(&[(-1, 0, 2)]));
        assert_eq!(parse_poly(" 2 ^ 3 ").unwrap(), BiPoly::from_terms(&[(8, 0, 0)]));
    }
}
