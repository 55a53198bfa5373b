//! Expression languages for the command line.
//!
//! Arithmetic (`eval`, and anywhere a number is expected):
//!
//! ```text
//! expr    := term (("+" | "-") term)*
//! term    := unary (("*" | "/") unary | power)*      juxtaposition multiplies: 2①, 3(①+1)
//! unary   := ("-" | "+") unary | power
//! power   := primary ("^" exponent)?
//! primary := number | "①" | "G1" | "(" expr ")"
//! ```
//!
//! A power of ① takes any rational exponent (`①^1/2` is `①^(1/2)`, as in the
//! numeral syntax); other bases take non-negative integer exponents. Division
//! is exact division.
//!
//! Sets (`card`, `measure`):
//!
//! ```text
//! set   := inter (("|" | "\") inter)*
//! inter := atom ("&" atom)*
//! atom  := "[" expr ".." expr "]" | "{" expr ("," expr)* "}" | "{" "}" | "(" set ")"
//!        | "iota(" set "," expr ")" | "reflect(" set "," expr ")" | "hull(" set ")"
//! ```
//!
//! Defined numerals (`define`): `sqrtfloor(κ)`, `logfloor(b, κ)`,
//! `invfloor(pow k, κ)`, `invfloor(exp b, κ)`, `invfloor(affine(a, c), κ)`.

use num_traits::{Signed, ToPrimitive, Zero};

use crate::derived::{define_by_inverse, DefinedNumeral, MonotoneFn};
use crate::gnum::{parse::is_minus, GrossNumber, Rational, SyntaxError};
use crate::sets::{IntervalSet, SetError};
use crate::Error;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(Rational),
    Base,
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
    LBrace,
    RBrace,
    Comma,
    DotDot,
    Pipe,
    Amp,
    Backslash,
    End,
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Num(r) => format!("number {r}"),
        Tok::Base => "①".into(),
        Tok::Ident(s) => format!("'{s}'"),
        Tok::End => "end of input".into(),
        other => format!("{other:?}"),
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, SyntaxError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let single = match c {
            '+' => Some(Tok::Plus),
            '*' | '·' | '×' => Some(Tok::Star),
            '/' => Some(Tok::Slash),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            '[' => Some(Tok::LBracket),
            ']' => Some(Tok::RBracket),
            '{' => Some(Tok::LBrace),
            '}' => Some(Tok::RBrace),
            ',' => Some(Tok::Comma),
            '|' | '∪' => Some(Tok::Pipe),
            '&' | '∩' => Some(Tok::Amp),
            '\\' | '∖' => Some(Tok::Backslash),
            '①' => Some(Tok::Base),
            c if is_minus(c) => Some(Tok::Minus),
            _ => None,
        };
        if let Some(t) = single {
            out.push((t, start));
            i += 1;
        } else if c == '.' && chars.get(i + 1) == Some(&'.') {
            out.push((Tok::DotDot, start));
            i += 2;
        } else if c == 'G' && chars.get(i + 1) == Some(&'1') {
            out.push((Tok::Base, start));
            i += 2;
        } else if c.is_ascii_digit() {
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let whole: String = chars[start..i].iter().collect();
            let mut value = Rational::from_integer(whole.parse().expect("digits"));
            if i + 1 < chars.len() && chars[i] == '.' && chars[i + 1].is_ascii_digit() {
                let frac_start = i + 1;
                i += 1;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let frac: String = chars[frac_start..i].iter().collect();
                let scale = num_traits::pow(num_bigint::BigInt::from(10), frac.len());
                value += Rational::new(frac.parse().expect("digits"), scale);
            }
            out.push((Tok::Num(value), start));
        } else if c.is_alphabetic() || c == '_' {
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), start));
        } else {
            return Err(SyntaxError::new(start, format!("unexpected '{c}'")));
        }
    }
    out.push((Tok::End, chars.len()));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    at: usize,
}

impl Parser {
    fn new(text: &str) -> Result<Self, Error> {
        Ok(Parser {
            toks: lex(text)?,
            at: 0,
        })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> usize {
        self.toks[self.at].1
    }

    fn next(&mut self) -> Tok {
        let t = self.toks[self.at].0.clone();
        if t != Tok::End {
            self.at += 1;
        }
        t
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == t {
            self.next();
            true
        } else {
            false
        }
    }

    fn syntax(&self, message: impl Into<String>) -> Error {
        Error::Syntax(SyntaxError::new(self.pos(), message))
    }

    fn expect(&mut self, t: Tok) -> Result<(), Error> {
        if self.eat(&t) {
            Ok(())
        } else {
            Err(self.syntax(format!(
                "expected {}, found {}",
                describe(&t),
                describe(self.peek())
            )))
        }
    }

    fn finish(&self) -> Result<(), Error> {
        match self.peek() {
            Tok::End => Ok(()),
            t => Err(self.syntax(format!("unexpected {}", describe(t)))),
        }
    }

    fn expr(&mut self) -> Result<GrossNumber, Error> {
        let mut acc = self.term()?;
        loop {
            if self.eat(&Tok::Plus) {
                acc = &acc + &self.term()?;
            } else if self.eat(&Tok::Minus) {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<GrossNumber, Error> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.next();
                    acc = &acc * &self.unary()?;
                }
                Tok::Slash => {
                    self.next();
                    let divisor = self.unary()?;
                    acc = acc.div_exact(&divisor)?;
                }
                Tok::Base | Tok::LParen => acc = &acc * &self.power()?,
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<GrossNumber, Error> {
        if self.eat(&Tok::Minus) {
            Ok(-self.unary()?)
        } else if self.eat(&Tok::Plus) {
            self.unary()
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<GrossNumber, Error> {
        let bare_base = self.peek() == &Tok::Base;
        let base = self.primary()?;
        if !self.eat(&Tok::Caret) {
            return Ok(base);
        }
        let at = self.pos();
        let exponent = self.exponent(bare_base)?;
        if bare_base {
            return Ok(GrossNumber::monomial(
                Rational::from_integer(1.into()),
                exponent,
            ));
        }
        let k = exponent
            .is_integer()
            .then(|| exponent.to_integer().to_u32())
            .flatten()
            .filter(|_| !exponent.is_negative())
            .ok_or_else(|| {
                Error::Domain(format!(
                    "exponent {exponent} at {at}: only powers of ① take non-integer or negative exponents"
                ))
            })?;
        Ok(base.pow(k))
    }

    /// `"(" expr ")"` (must be a finite rational) or a signed literal, which
    /// for a bare ① may be a fraction `p/q`.
    fn exponent(&mut self, fraction_allowed: bool) -> Result<Rational, Error> {
        if self.eat(&Tok::LParen) {
            let at = self.pos();
            let e = self.expr()?;
            self.expect(Tok::RParen)?;
            return e.to_rational().ok_or_else(|| {
                Error::Domain(format!(
                    "exponent at {at} must be a finite rational, got {e}"
                ))
            });
        }
        let negative = if self.eat(&Tok::Minus) {
            true
        } else {
            self.eat(&Tok::Plus);
            false
        };
        let Tok::Num(mut value) = self.next() else {
            self.at -= 1;
            return Err(self.syntax("expected an exponent"));
        };
        if fraction_allowed && self.peek() == &Tok::Slash {
            if let Some((Tok::Num(den), _)) = self.toks.get(self.at + 1) {
                if den.is_zero() {
                    return Err(Error::Arith(crate::gnum::ArithError::DivideByZero));
                }
                value /= den.clone();
                self.at += 2;
            }
        }
        Ok(if negative { -value } else { value })
    }

    fn primary(&mut self) -> Result<GrossNumber, Error> {
        match self.next() {
            Tok::Num(r) => Ok(GrossNumber::from(r)),
            Tok::Base => Ok(GrossNumber::grossone()),
            Tok::LParen => {
                let e = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            t => {
                self.at -= usize::from(t != Tok::End);
                Err(self.syntax(format!("expected a number, found {}", describe(&t))))
            }
        }
    }

    fn set(&mut self) -> Result<IntervalSet, Error> {
        let mut acc = self.set_inter()?;
        loop {
            if self.eat(&Tok::Pipe) {
                acc = acc.union(&self.set_inter()?);
            } else if self.eat(&Tok::Backslash) {
                acc = acc.difference(&self.set_inter()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn set_inter(&mut self) -> Result<IntervalSet, Error> {
        let mut acc = self.set_atom()?;
        while self.eat(&Tok::Amp) {
            acc = acc.intersect(&self.set_atom()?);
        }
        Ok(acc)
    }

    fn set_atom(&mut self) -> Result<IntervalSet, Error> {
        match self.next() {
            Tok::LBracket => {
                let lo = self.expr()?;
                self.expect(Tok::DotDot)?;
                let hi = self.expr()?;
                self.expect(Tok::RBracket)?;
                Ok(IntervalSet::interval(lo, hi)?)
            }
            Tok::LBrace => {
                let mut elements = Vec::new();
                if !self.eat(&Tok::RBrace) {
                    loop {
                        elements.push(self.expr()?);
                        if self.eat(&Tok::RBrace) {
                            break;
                        }
                        self.expect(Tok::Comma)?;
                    }
                }
                Ok(IntervalSet::from_elements(elements)?)
            }
            Tok::LParen => {
                let s = self.set()?;
                self.expect(Tok::RParen)?;
                Ok(s)
            }
            Tok::Ident(name) => {
                self.expect(Tok::LParen)?;
                let s = self.set()?;
                let result = match name.as_str() {
                    "iota" => {
                        self.expect(Tok::Comma)?;
                        s.iota(&self.expr()?)?
                    }
                    "reflect" => {
                        self.expect(Tok::Comma)?;
                        s.reflect(&self.expr()?)?
                    }
                    "hull" => IntervalSet::from(s.convex_hull()?),
                    _ => {
                        return Err(Error::Syntax(SyntaxError::new(
                            self.pos(),
                            format!("unknown set function '{name}'"),
                        )))
                    }
                };
                self.expect(Tok::RParen)?;
                Ok(result)
            }
            t => {
                self.at -= usize::from(t != Tok::End);
                Err(self.syntax(format!("expected a set, found {}", describe(&t))))
            }
        }
    }

    fn ident(&mut self) -> Result<String, Error> {
        match self.next() {
            Tok::Ident(s) => Ok(s),
            t => {
                self.at -= usize::from(t != Tok::End);
                Err(self.syntax(format!("expected a name, found {}", describe(&t))))
            }
        }
    }

    fn small_int(&self, x: &GrossNumber, what: &str) -> Result<u32, Error> {
        x.to_i64()
            .and_then(|n| u32::try_from(n).ok())
            .ok_or_else(|| {
                Error::Domain(format!(
                    "{what} must be a small non-negative integer, got {x}"
                ))
            })
    }

    fn defined(&mut self) -> Result<DefinedNumeral, Error> {
        let name = self.ident()?;
        self.expect(Tok::LParen)?;
        let g = match name.as_str() {
            "sqrtfloor" => MonotoneFn::Pow(2),
            "logfloor" => {
                let b = self.expr()?;
                self.expect(Tok::Comma)?;
                let b = b.to_bigint().ok_or_else(|| {
                    Error::Domain(format!("log base must be a finite integer, got {b}"))
                })?;
                MonotoneFn::exp_base(b)?
            }
            "invfloor" => {
                let g = match self.ident()?.as_str() {
                    "pow" => {
                        let k = self.expr()?;
                        MonotoneFn::pow(self.small_int(&k, "power")?)?
                    }
                    "exp" => {
                        let b = self.expr()?;
                        let b = b.to_bigint().ok_or_else(|| {
                            Error::Domain(format!("base must be a finite integer, got {b}"))
                        })?;
                        MonotoneFn::exp_base(b)?
                    }
                    "affine" => {
                        self.expect(Tok::LParen)?;
                        let slope = self.expr()?;
                        self.expect(Tok::Comma)?;
                        let intercept = self.expr()?;
                        self.expect(Tok::RParen)?;
                        let finite = |x: GrossNumber| {
                            x.to_rational().ok_or_else(|| {
                                Error::Domain(format!(
                                    "affine coefficients must be finite, got {x}"
                                ))
                            })
                        };
                        MonotoneFn::affine(finite(slope)?, finite(intercept)?)?
                    }
                    other => {
                        return Err(self.syntax(format!("unknown function family '{other}'")));
                    }
                };
                self.expect(Tok::Comma)?;
                g
            }
            other => return Err(self.syntax(format!("unknown definition form '{other}'"))),
        };
        let kappa = self.expr()?;
        self.expect(Tok::RParen)?;
        Ok(define_by_inverse(g, kappa)?)
    }
}

/// Evaluates an arithmetic expression over gross-numbers.
pub fn eval(text: &str) -> Result<GrossNumber, Error> {
    let mut p = Parser::new(text)?;
    let x = p.expr()?;
    p.finish()?;
    Ok(x)
}

pub fn parse_set(text: &str) -> Result<IntervalSet, Error> {
    let mut p = Parser::new(text)?;
    let s = p.set()?;
    p.finish()?;
    Ok(s)
}

pub fn parse_defined(text: &str) -> Result<DefinedNumeral, Error> {
    let mut p = Parser::new(text)?;
    let d = p.defined()?;
    p.finish()?;
    Ok(d)
}

/// Evaluates `text` and requires the result to be an integer.
pub fn eval_integer(text: &str) -> Result<GrossNumber, Error> {
    let x = eval(text)?;
    if x.is_integer() {
        Ok(x)
    } else {
        Err(SetError::NonIntegerEndpoint(x).into())
    }
}
