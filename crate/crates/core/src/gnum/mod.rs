//! Gross-numbers: finite sums `Σ cᵢ·①^pᵢ` with exact rational `cᵢ` and `pᵢ`.
//!
//! Values are kept in a canonical form (exponents strictly descending, no zero
//! coefficients, zero is the empty sum) so structural equality is numeric
//! equality. Every coefficient is a finite rational and ① exceeds every finite
//! value, so the order of two numbers is decided by the leading coefficient of
//! their difference.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub(crate) mod parse;

pub use parse::{format_numeral, parse_numeral, Glyph, SyntaxError};

pub type Rational = BigRational;

/// Three-way sign, ordered `Negative < Zero < Positive`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of_rational(r: &Rational) -> Sign {
        if r.is_zero() {
            Sign::Zero
        } else if r.is_positive() {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    pub fn negate(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }

    pub fn to_ordering(self) -> Ordering {
        match self {
            Sign::Negative => Ordering::Less,
            Sign::Zero => Ordering::Equal,
            Sign::Positive => Ordering::Greater,
        }
    }

    /// The relation symbol `<`, `=` or `>` this sign stands for.
    pub fn relation(self) -> &'static str {
        match self {
            Sign::Negative => "<",
            Sign::Zero => "=",
            Sign::Positive => ">",
        }
    }
}

impl From<Ordering> for Sign {
    fn from(o: Ordering) -> Self {
        match o {
            Ordering::Less => Sign::Negative,
            Ordering::Equal => Sign::Zero,
            Ordering::Greater => Sign::Positive,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Negative => "negative",
            Sign::Zero => "zero",
            Sign::Positive => "positive",
        })
    }
}

/// Classification flags of a gross-number.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct NumberClass {
    pub is_integer: bool,
    pub is_finite: bool,
    pub is_infinite: bool,
    pub is_infinitesimal: bool,
}

/// A single `coefficient·①^exponent` term.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub exponent: Rational,
    pub coefficient: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ArithError {
    DivideByZero,
    NotExact,
}

impl fmt::Display for ArithError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArithError::DivideByZero => f.write_str("DivideByZero"),
            ArithError::NotExact => f.write_str("NotExact"),
        }
    }
}

impl std::error::Error for ArithError {}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GrossNumber {
    terms: Vec<Term>,
}

impl GrossNumber {
    pub fn zero() -> Self {
        GrossNumber { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from(1)
    }

    /// The base ①.
    pub fn grossone() -> Self {
        Self::monomial(Rational::one(), Rational::one())
    }

    /// `coefficient·①^exponent`.
    pub fn monomial(coefficient: Rational, exponent: Rational) -> Self {
        if coefficient.is_zero() {
            return Self::zero();
        }
        GrossNumber {
            terms: vec![Term {
                exponent,
                coefficient,
            }],
        }
    }

    /// `①^exponent` for an integer exponent.
    pub fn grossone_pow(exponent: i64) -> Self {
        Self::monomial(Rational::one(), Rational::from_integer(exponent.into()))
    }

    /// Builds the canonical number from `(exponent, coefficient)` pairs in any
    /// order: like exponents are merged and zero coefficients dropped.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Rational, Rational)>,
    {
        let mut merged: BTreeMap<Rational, Rational> = BTreeMap::new();
        for (exponent, coefficient) in terms {
            *merged.entry(exponent).or_insert_with(Rational::zero) += coefficient;
        }
        let terms = merged
            .into_iter()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(exponent, coefficient)| Term {
                exponent,
                coefficient,
            })
            .collect();
        GrossNumber { terms }
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn max_exponent(&self) -> Option<&Rational> {
        self.terms.first().map(|t| &t.exponent)
    }

    pub fn min_exponent(&self) -> Option<&Rational> {
        self.terms.last().map(|t| &t.exponent)
    }

    /// Coefficient of `①^exponent` (zero when absent).
    pub fn coefficient(&self, exponent: &Rational) -> Rational {
        self.terms
            .iter()
            .find(|t| &t.exponent == exponent)
            .map(|t| t.coefficient.clone())
            .unwrap_or_else(Rational::zero)
    }

    pub fn sign(&self) -> Sign {
        self.terms
            .first()
            .map_or(Sign::Zero, |t| Sign::of_rational(&t.coefficient))
    }

    pub fn is_positive(&self) -> bool {
        self.sign() == Sign::Positive
    }

    pub fn is_negative(&self) -> bool {
        self.sign() == Sign::Negative
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    pub fn is_infinite(&self) -> bool {
        self.max_exponent().is_some_and(|e| e.is_positive())
    }

    /// Zero, or a nonzero value whose largest exponent is 0.
    pub fn is_finite(&self) -> bool {
        self.max_exponent().is_none_or(|e| e.is_zero())
    }

    pub fn is_infinitesimal(&self) -> bool {
        self.max_exponent().is_some_and(|e| e.is_negative())
    }

    /// Integrality with ① divisible by every finite positive integer: no
    /// negative exponents and an integer constant term. Coefficients of
    /// positive powers may be any rational.
    pub fn is_integer(&self) -> bool {
        self.terms.iter().all(|t| {
            if t.exponent.is_negative() {
                false
            } else if t.exponent.is_zero() {
                t.coefficient.is_integer()
            } else {
                true
            }
        })
    }

    pub fn is_positive_integer(&self) -> bool {
        self.is_positive() && self.is_integer()
    }

    pub fn classify(&self) -> NumberClass {
        NumberClass {
            is_integer: self.is_integer(),
            is_finite: self.is_finite(),
            is_infinite: self.is_infinite(),
            is_infinitesimal: self.is_infinitesimal(),
        }
    }

    /// Constant (exponent 0) coefficient.
    pub fn constant(&self) -> Rational {
        self.coefficient(&Rational::zero())
    }

    /// The value as a finite rational, if it is one.
    pub fn to_rational(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [t] if t.exponent.is_zero() => Some(t.coefficient.clone()),
            _ => None,
        }
    }

    /// The value as a finite integer, if it is one.
    pub fn to_bigint(&self) -> Option<BigInt> {
        self.to_rational()
            .filter(|r| r.is_integer())
            .map(|r| r.to_integer())
    }

    pub fn to_i64(&self) -> Option<i64> {
        self.to_bigint().and_then(|n| n.to_i64())
    }

    /// Non-negative integer power by repeated squaring.
    pub fn pow(&self, mut exponent: u32) -> Self {
        let mut base = self.clone();
        let mut acc = GrossNumber::one();
        while exponent > 0 {
            if exponent & 1 == 1 {
                acc = &acc * &base;
            }
            exponent >>= 1;
            if exponent > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact quotient `q` with `q·divisor = self`.
    ///
    /// Monomial divisors divide term by term. Otherwise long division runs on
    /// leading terms and stops with `NotExact` once a quotient term would fall
    /// below the lowest exponent an exact quotient can have. When neither
    /// operand has negative exponents the quotient must not have any either,
    /// so `(①+1)/①` is `NotExact` rather than `1+①^(-1)`.
    pub fn div_exact(&self, divisor: &GrossNumber) -> Result<GrossNumber, ArithError> {
        if divisor.is_zero() {
            return Err(ArithError::DivideByZero);
        }
        if self.is_zero() {
            return Ok(GrossNumber::zero());
        }
        let polynomial = [self, divisor]
            .iter()
            .all(|x| x.min_exponent().is_some_and(|e| !e.is_negative()));
        // q·y = x forces min(q) = min(x) − min(y)
        let mut floor = self.min_exponent().unwrap() - divisor.min_exponent().unwrap();
        if polynomial && floor.is_negative() {
            floor = Rational::zero();
        }

        let lead = divisor.leading().unwrap();
        let mut remainder = self.clone();
        let mut quotient = Vec::new();
        while let Some(r) = remainder.leading() {
            let exponent = &r.exponent - &lead.exponent;
            if exponent < floor {
                return Err(ArithError::NotExact);
            }
            let coefficient = &r.coefficient / &lead.coefficient;
            let step = GrossNumber::monomial(coefficient.clone(), exponent.clone());
            remainder = &remainder - &(&step * divisor);
            quotient.push((exponent, coefficient));
        }
        Ok(GrossNumber::from_terms(quotient))
    }

    /// Rendering with the ASCII token `G1` in place of ①.
    pub fn to_ascii(&self) -> String {
        format_numeral(self, Glyph::Ascii)
    }
}

/// Sign of `x − y`.
pub fn cmp(x: &GrossNumber, y: &GrossNumber) -> Sign {
    let (mut i, mut j) = (0, 0);
    let (a, b) = (&x.terms, &y.terms);
    loop {
        match (a.get(i), b.get(j)) {
            (None, None) => return Sign::Zero,
            (Some(s), None) => return Sign::of_rational(&s.coefficient),
            (None, Some(t)) => return Sign::of_rational(&t.coefficient).negate(),
            (Some(s), Some(t)) => match s.exponent.cmp(&t.exponent) {
                Ordering::Greater => return Sign::of_rational(&s.coefficient),
                Ordering::Less => return Sign::of_rational(&t.coefficient).negate(),
                Ordering::Equal => {
                    if s.coefficient != t.coefficient {
                        return s.coefficient.cmp(&t.coefficient).into();
                    }
                    i += 1;
                    j += 1;
                }
            },
        }
    }
}

impl Ord for GrossNumber {
    fn cmp(&self, other: &Self) -> Ordering {
        cmp(self, other).to_ordering()
    }
}

impl PartialOrd for GrossNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(Ord::cmp(self, other))
    }
}

fn merge(a: &[Term], b: &[Term], negate_b: bool) -> GrossNumber {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let rhs = |t: &Term| {
        if negate_b {
            -t.coefficient.clone()
        } else {
            t.coefficient.clone()
        }
    };
    while i < a.len() || j < b.len() {
        let order = match (a.get(i), b.get(j)) {
            (Some(s), Some(t)) => s.exponent.cmp(&t.exponent),
            (Some(_), None) => Ordering::Greater,
            _ => Ordering::Less,
        };
        match order {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push(Term {
                    exponent: b[j].exponent.clone(),
                    coefficient: rhs(&b[j]),
                });
                j += 1;
            }
            Ordering::Equal => {
                let coefficient = &a[i].coefficient + rhs(&b[j]);
                if !coefficient.is_zero() {
                    out.push(Term {
                        exponent: a[i].exponent.clone(),
                        coefficient,
                    });
                }
                i += 1;
                j += 1;
            }
        }
    }
    GrossNumber { terms: out }
}

impl Add<&GrossNumber> for &GrossNumber {
    type Output = GrossNumber;
    fn add(self, rhs: &GrossNumber) -> GrossNumber {
        merge(&self.terms, &rhs.terms, false)
    }
}

impl Sub<&GrossNumber> for &GrossNumber {
    type Output = GrossNumber;
    fn sub(self, rhs: &GrossNumber) -> GrossNumber {
        merge(&self.terms, &rhs.terms, true)
    }
}

impl Mul<&GrossNumber> for &GrossNumber {
    type Output = GrossNumber;
    fn mul(self, rhs: &GrossNumber) -> GrossNumber {
        if self.is_zero() || rhs.is_zero() {
            return GrossNumber::zero();
        }
        if rhs.terms.len() == 1 {
            // monomial: exponents shift uniformly, order is kept
            let t = &rhs.terms[0];
            let terms = self
                .terms
                .iter()
                .map(|s| Term {
                    exponent: &s.exponent + &t.exponent,
                    coefficient: &s.coefficient * &t.coefficient,
                })
                .collect();
            return GrossNumber { terms };
        }
        GrossNumber::from_terms(self.terms.iter().flat_map(|s| {
            rhs.terms
                .iter()
                .map(move |t| (&s.exponent + &t.exponent, &s.coefficient * &t.coefficient))
        }))
    }
}

impl Neg for &GrossNumber {
    type Output = GrossNumber;
    fn neg(self) -> GrossNumber {
        GrossNumber {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    exponent: t.exponent.clone(),
                    coefficient: -t.coefficient.clone(),
                })
                .collect(),
        }
    }
}

impl Neg for GrossNumber {
    type Output = GrossNumber;
    fn neg(self) -> GrossNumber {
        -&self
    }
}

macro_rules! forward_binop {
    ($($imp:ident $method:ident),*) => {$(
        impl $imp<GrossNumber> for GrossNumber {
            type Output = GrossNumber;
            fn $method(self, rhs: GrossNumber) -> GrossNumber {
                (&self).$method(&rhs)
            }
        }
        impl $imp<&GrossNumber> for GrossNumber {
            type Output = GrossNumber;
            fn $method(self, rhs: &GrossNumber) -> GrossNumber {
                (&self).$method(rhs)
            }
        }
        impl $imp<GrossNumber> for &GrossNumber {
            type Output = GrossNumber;
            fn $method(self, rhs: GrossNumber) -> GrossNumber {
                self.$method(&rhs)
            }
        }
    )*};
}

forward_binop!(Add add, Sub sub, Mul mul);

impl From<i64> for GrossNumber {
    fn from(n: i64) -> Self {
        Self::from(BigInt::from(n))
    }
}

impl From<BigInt> for GrossNumber {
    fn from(n: BigInt) -> Self {
        Self::from(Rational::from_integer(n))
    }
}

impl From<Rational> for GrossNumber {
    fn from(r: Rational) -> Self {
        Self::monomial(r, Rational::zero())
    }
}

impl fmt::Display for GrossNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_numeral(self, Glyph::Circled))
    }
}

impl FromStr for GrossNumber {
    type Err = SyntaxError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_numeral(s)
    }
}

impl Serialize for GrossNumber {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for GrossNumber {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        parse_numeral(&s).map_err(serde::de::Error::custom)
    }
}

/// Integer part of a rational toward negative infinity.
pub(crate) fn floor_rational(r: &Rational) -> BigInt {
    r.numer().div_floor(r.denom())
}
