//! Numeral syntax.
//!
//! ```text
//! numeral  := sign? term (("+" | "-") term)*
//! term     := rational | rational "*"? base | base
//! base     := ("①" | "G1") ("^" exponent)?
//! exponent := srational | "(" srational ")"
//! rational := digits ("/" digits | "." digits)?
//! ```
//!
//! Whitespace is allowed between tokens and `−` (U+2212) is accepted as a minus
//! sign. Decimal literals are converted to exact rationals.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Pow, Signed, Zero};

use super::{GrossNumber, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyntaxError {
    /// Character offset of the offending input.
    pub position: usize,
    pub message: String,
}

impl SyntaxError {
    pub fn new(position: usize, message: impl Into<String>) -> Self {
        SyntaxError {
            position,
            message: message.into(),
        }
    }
}

impl fmt::Display for SyntaxError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SyntaxError at {}: {}", self.position, self.message)
    }
}

impl std::error::Error for SyntaxError {}

/// How ① is written on output.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Glyph {
    #[default]
    Circled,
    Ascii,
}

impl Glyph {
    pub fn symbol(self) -> &'static str {
        match self {
            Glyph::Circled => "①",
            Glyph::Ascii => "G1",
        }
    }
}

pub fn parse_numeral(text: &str) -> Result<GrossNumber, SyntaxError> {
    let mut p = Scanner::new(text);
    let mut terms = Vec::new();
    p.skip_ws();
    let mut negative = match p.peek() {
        Some('+') => {
            p.bump();
            false
        }
        Some(c) if is_minus(c) => {
            p.bump();
            true
        }
        _ => false,
    };
    loop {
        p.skip_ws();
        let (exponent, coefficient) = p.term()?;
        terms.push((exponent, if negative { -coefficient } else { coefficient }));
        p.skip_ws();
        negative = match p.peek() {
            None => break,
            Some('+') => false,
            Some(c) if is_minus(c) => true,
            Some(c) => return Err(p.error(format!("unexpected '{c}'"))),
        };
        p.bump();
    }
    Ok(GrossNumber::from_terms(terms))
}

pub fn format_numeral(x: &GrossNumber, glyph: Glyph) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, t) in x.terms().iter().enumerate() {
        if t.coefficient.is_negative() {
            out.push('-');
        } else if i > 0 {
            out.push('+');
        }
        let magnitude = t.coefficient.abs();
        if t.exponent.is_zero() {
            out.push_str(&magnitude.to_string());
            continue;
        }
        if !magnitude.is_one() {
            out.push_str(&magnitude.to_string());
        }
        out.push_str(glyph.symbol());
        if !t.exponent.is_one() {
            out.push('^');
            if t.exponent.is_integer() && !t.exponent.is_negative() {
                out.push_str(&t.exponent.to_string());
            } else {
                out.push('(');
                out.push_str(&t.exponent.to_string());
                out.push(')');
            }
        }
    }
    out
}

pub(crate) fn is_minus(c: char) -> bool {
    c == '-' || c == '\u{2212}'
}

struct Scanner {
    chars: Vec<char>,
    pos: usize,
}

impl Scanner {
    fn new(text: &str) -> Self {
        Scanner {
            chars: text.chars().collect(),
            pos: 0,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn peek_at(&self, offset: usize) -> Option<char> {
        self.chars.get(self.pos + offset).copied()
    }

    fn bump(&mut self) {
        self.pos += 1;
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn error(&self, message: impl Into<String>) -> SyntaxError {
        let message = message.into();
        if self.pos >= self.chars.len() {
            SyntaxError::new(self.pos, format!("{message} (at end of input)"))
        } else {
            SyntaxError::new(self.pos, message)
        }
    }

    fn at_base(&self) -> bool {
        match self.peek() {
            Some('①') => true,
            Some('G') => self.peek_at(1) == Some('1'),
            _ => false,
        }
    }

    fn term(&mut self) -> Result<(Rational, Rational), SyntaxError> {
        if self.at_base() {
            let exponent = self.base()?;
            return Ok((exponent, Rational::one()));
        }
        let coefficient = match self.rational()? {
            Some(r) => r,
            None => return Err(self.error("expected a number or ①")),
        };
        self.skip_ws();
        if self.peek() == Some('*') {
            self.bump();
            self.skip_ws();
            if !self.at_base() {
                return Err(self.error("expected ① after '*'"));
            }
        }
        if self.at_base() {
            let exponent = self.base()?;
            Ok((exponent, coefficient))
        } else {
            Ok((Rational::zero(), coefficient))
        }
    }

    fn base(&mut self) -> Result<Rational, SyntaxError> {
        if self.peek() == Some('①') {
            self.bump();
        } else {
            self.pos += 2;
        }
        self.skip_ws();
        if self.peek() != Some('^') {
            return Ok(Rational::one());
        }
        self.bump();
        self.skip_ws();
        let parenthesized = self.peek() == Some('(');
        if parenthesized {
            self.bump();
            self.skip_ws();
        }
        let negative = match self.peek() {
            Some(c) if is_minus(c) => {
                self.bump();
                self.skip_ws();
                true
            }
            Some('+') => {
                self.bump();
                self.skip_ws();
                false
            }
            _ => false,
        };
        let exponent = match self.rational()? {
            Some(r) => r,
            None => return Err(self.error("expected an exponent")),
        };
        if parenthesized {
            self.skip_ws();
            if self.peek() != Some(')') {
                return Err(self.error("expected ')'"));
            }
            self.bump();
        }
        Ok(if negative { -exponent } else { exponent })
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.chars[start..self.pos].iter().collect())
    }

    /// Unsigned rational literal; `None` when no digits are present.
    fn rational(&mut self) -> Result<Option<Rational>, SyntaxError> {
        let Some(int) = self.digits() else {
            return Ok(None);
        };
        let whole: BigInt = int.parse().expect("ascii digits");
        match self.peek() {
            Some('/') => {
                self.bump();
                let at = self.pos;
                let den = self
                    .digits()
                    .ok_or_else(|| self.error("expected denominator digits"))?;
                let den: BigInt = den.parse().expect("ascii digits");
                if den.is_zero() {
                    return Err(SyntaxError::new(at, "zero denominator"));
                }
                Ok(Some(Rational::new(whole, den)))
            }
            Some('.') if self.peek_at(1).is_some_and(|c| c.is_ascii_digit()) => {
                self.bump();
                let frac = self.digits().expect("checked digit");
                let scale = BigInt::from(10u32).pow(frac.len() as u32);
                let frac: BigInt = frac.parse().expect("ascii digits");
                Ok(Some(Rational::new(whole * &scale + frac, scale)))
            }
            _ => Ok(Some(Rational::from_integer(whole))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn pairs(x: &GrossNumber) -> Vec<(Rational, Rational)> {
        x.terms()
            .iter()
            .map(|t| (t.exponent.clone(), t.coefficient.clone()))
            .collect()
    }

    #[test]
    fn parses_worked_numerals() {
        let x = parse_numeral("2①+1").unwrap();
        assert_eq!(pairs(&x), vec![(q(1, 1), q(2, 1)), (q(0, 1), q(1, 1))]);
        assert!(parse_numeral("0").unwrap().is_zero());
        let y = parse_numeral("①^2 - ①^2 + 3").unwrap();
        assert_eq!(pairs(&y), vec![(q(0, 1), q(3, 1))]);
    }

    #[test]
    fn formats_canonically() {
        assert_eq!(parse_numeral("1+2①").unwrap().to_string(), "2①+1");
        assert_eq!(GrossNumber::zero().to_string(), "0");
        assert_eq!(GrossNumber::grossone_pow(2).to_string(), "①^2");
        assert_eq!(
            parse_numeral("-①^(1/2) - 1/3").unwrap().to_string(),
            "-①^(1/2)-1/3"
        );
        assert_eq!(parse_numeral("①^-1").unwrap().to_string(), "①^(-1)");
        assert_eq!(
            parse_numeral("1/999①-999").unwrap().to_ascii(),
            "1/999G1-999"
        );
    }

    #[test]
    fn accepts_variants() {
        let expected = parse_numeral("①^2-5/2").unwrap();
        for text in ["G1^2 - 2.5", "①^(2)−5/2", " 1*①^2 -2.50 ", "+①^+2-5/2"] {
            assert_eq!(parse_numeral(text).unwrap(), expected, "{text}");
        }
        assert_eq!(parse_numeral("0.125").unwrap(), GrossNumber::from(q(1, 8)));
        assert_eq!(parse_numeral("①^0").unwrap(), GrossNumber::one());
    }

    #[test]
    fn rejects_malformed() {
        let cases = [
            ("", 0),
            ("2①+", 3),
            ("①^", 2),
            ("1/0", 2),
            ("3 4", 2),
            ("①^(2", 4),
            ("2*3", 2),
            ("G2", 0),
            ("1..2", 1),
        ];
        for (text, pos) in cases {
            let err = parse_numeral(text).unwrap_err();
            assert_eq!(err.position, pos, "{text}: {err}");
        }
    }
}
