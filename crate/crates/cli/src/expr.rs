//! Exact parser for coordinate expressions in `t`.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary | implicit)*
//! unary  := ('+' | '-') unary | power
//! power  := atom ('^' unary)?
//! atom   := number | 't' | '(' expr ')'
//! ```
//!
//! Numbers are decimal literals with optional fraction and exponent, read
//! exactly. Exponents must evaluate to integer constants. `2t` and `3(t+1)`
//! are accepted as products.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, ToPrimitive, Zero};
use radical_reparam::{Polynomial, RationalFunction};

/// Exponents beyond this are rejected to keep expansion bounded.
const MAX_EXPONENT: i64 = 256;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("ParseError at column {column}: {message}")]
pub struct ParseError {
    /// 1-based character column.
    pub column: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Number(BigRational),
    T,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(src: &str) -> Result<Vec<(Token, usize)>, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        let tok = match c {
            _ if c.is_whitespace() => {
                i += 1;
                continue;
            }
            't' => Token::T,
            '+' => Token::Plus,
            '-' | '−' => Token::Minus,
            '*' | '·' => Token::Star,
            '/' => Token::Slash,
            '^' => Token::Caret,
            '(' => Token::LParen,
            ')' => Token::RParen,
            '0'..='9' | '.' => {
                let (value, next) = number(&chars, i)?;
                out.push((Token::Number(value), col));
                i = next;
                continue;
            }
            _ => return Err(ParseError { column: col, message: format!("unexpected character '{c}'") }),
        };
        out.push((tok, col));
        i += 1;
    }
    Ok(out)
}

fn number(chars: &[char], start: usize) -> Result<(BigRational, usize), ParseError> {
    let mut i = start;
    let mut digits = String::new();
    let mut frac_len = 0usize;
    while i < chars.len() && chars[i].is_ascii_digit() {
        digits.push(chars[i]);
        i += 1;
    }
    if i < chars.len() && chars[i] == '.' {
        i += 1;
        while i < chars.len() && chars[i].is_ascii_digit() {
            digits.push(chars[i]);
            frac_len += 1;
            i += 1;
        }
    }
    if digits.is_empty() {
        return Err(ParseError { column: start + 1, message: "malformed number".into() });
    }
    let mut exp: i64 = 0;
    if i < chars.len() && (chars[i] == 'e' || chars[i] == 'E') {
        let mut j = i + 1;
        let mut text = String::new();
        if j < chars.len() && (chars[j] == '+' || chars[j] == '-') {
            text.push(chars[j]);
            j += 1;
        }
        let digits_at = j;
        while j < chars.len() && chars[j].is_ascii_digit() {
            text.push(chars[j]);
            j += 1;
        }
        if j == digits_at {
            return Err(ParseError { column: i + 1, message: "malformed exponent".into() });
        }
        exp = text
            .parse()
            .ok()
            .filter(|e: &i64| e.abs() <= 1000)
            .ok_or_else(|| ParseError { column: i + 1, message: "exponent out of range".into() })?;
        i = j;
    }
    let mantissa: BigInt = digits.parse().expect("ascii digits");
    let shift = exp - frac_len as i64;
    let ten = BigInt::from(10);
    let value = if shift >= 0 {
        BigRational::from_integer(mantissa * Pow::pow(&ten, shift as u64))
    } else {
        BigRational::new(mantissa, Pow::pow(&ten, (-shift) as u64))
    };
    Ok((value, i))
}

struct Parser {
    tokens: Vec<(Token, usize)>,
    pos: usize,
    end_column: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(t, _)| t)
    }

    fn column(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end_column, |(_, c)| *c)
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError { column: self.column(), message: message.into() }
    }

    fn eat(&mut self, tok: &Token) -> bool {
        if self.peek() == Some(tok) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<RationalFunction, ParseError> {
        let mut acc = self.term()?;
        loop {
            if self.eat(&Token::Plus) {
                acc = &acc + &self.term()?;
            } else if self.eat(&Token::Minus) {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<RationalFunction, ParseError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(&Token::Star) {
                acc = &acc * &self.unary()?;
            } else if matches!(self.peek(), Some(Token::Slash)) {
                let column = self.column();
                self.pos += 1;
                let rhs = self.unary()?;
                acc = acc
                    .checked_div(&rhs)
                    .map_err(|_| ParseError { column, message: "division by zero".into() })?;
            } else if matches!(self.peek(), Some(Token::T | Token::LParen)) {
                acc = &acc * &self.power()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<RationalFunction, ParseError> {
        if self.eat(&Token::Minus) {
            return Ok(-&self.unary()?);
        }
        if self.eat(&Token::Plus) {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<RationalFunction, ParseError> {
        let base = self.atom()?;
        if !matches!(self.peek(), Some(Token::Caret)) {
            return Ok(base);
        }
        self.pos += 1;
        let column = self.column();
        let exponent = self.unary()?;
        let n = integer_constant(&exponent)
            .filter(|n| n.abs() <= MAX_EXPONENT)
            .ok_or_else(|| ParseError { column, message: format!("exponent must be an integer in [-{MAX_EXPONENT}, {MAX_EXPONENT}]") })?;
        base.powi(n as i32).map_err(|_| ParseError { column, message: "zero raised to a negative power".into() })
    }

    fn atom(&mut self) -> Result<RationalFunction, ParseError> {
        match self.peek().cloned() {
            Some(Token::Number(v)) => {
                self.pos += 1;
                Ok(RationalFunction::constant(v))
            }
            Some(Token::T) => {
                self.pos += 1;
                Ok(Polynomial::t().into())
            }
            Some(Token::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(&Token::RParen) {
                    return Err(self.error("expected ')'"));
                }
                Ok(inner)
            }
            Some(_) => Err(self.error("expected a number, 't' or '('")),
            None => Err(self.error("unexpected end of expression")),
        }
    }
}

fn integer_constant(f: &RationalFunction) -> Option<i64> {
    if !f.denominator().is_constant() {
        return None;
    }
    let num = f.numerator();
    if !num.is_constant() {
        return None;
    }
    let value = num.coeffs().first().cloned().unwrap_or_else(BigRational::zero);
    (value.denom().is_one()).then(|| value.numer().to_i64()).flatten()
}

/// Parses one coordinate into an exact rational function of `t`.
pub fn parse_expression(src: &str) -> Result<RationalFunction, ParseError> {
    let tokens = lex(src)?;
    if tokens.is_empty() {
        return Err(ParseError { column: 1, message: "empty expression".into() });
    }
    let mut parser = Parser { tokens, pos: 0, end_column: src.chars().count() + 1 };
    let value = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return Err(parser.error("unexpected trailing input"));
    }
    Ok(value)
}
