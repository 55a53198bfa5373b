//! Numbers defined by inverting a strictly increasing function.
//!
//! For strictly increasing `g` on the positive integers and a positive integer
//! `κ ≥ g(1)`, the set `{x | g(x) ≤ κ}` is an initial segment `[1..x]` and `x`
//! is the only number with `g(x) ≤ κ < g(x+1)`. A [`DefinedNumeral`] records
//! `g` and `κ` without resolving `x`; for infinite `κ` such as ① the value
//! (e.g. ⌊√①⌋) has no gross-number form and supports comparison probes only.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::gnum::{cmp, floor_rational, GrossNumber, Rational, Sign};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DefinedError {
    InvalidFunction(String),
    NotPositiveInteger(GrossNumber),
    BelowRange,
    NotFinite,
    RegistryFull { limit: usize },
    DuplicateName(String),
}

impl fmt::Display for DefinedError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DefinedError::InvalidFunction(why) => write!(f, "InvalidFunction({why})"),
            DefinedError::NotPositiveInteger(x) => write!(f, "NotPositiveInteger({x})"),
            DefinedError::BelowRange => f.write_str("BelowRange"),
            DefinedError::NotFinite => f.write_str("NotFinite"),
            DefinedError::RegistryFull { limit } => write!(f, "RegistryFull({limit})"),
            DefinedError::DuplicateName(name) => write!(f, "DuplicateName({name})"),
        }
    }
}

impl std::error::Error for DefinedError {}

/// Strictly increasing functions on the positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MonotoneFn {
    /// `x^k`, `k ≥ 2`.
    Pow(u32),
    /// `b^x`, `b ≥ 2`.
    ExpBase(BigInt),
    /// `slope·x + intercept`, `slope > 0`.
    Affine {
        slope: Rational,
        intercept: Rational,
    },
}

impl MonotoneFn {
    pub fn pow(k: u32) -> Result<Self, DefinedError> {
        if k < 2 {
            return Err(DefinedError::InvalidFunction(format!(
                "pow {k}: exponent must be ≥ 2"
            )));
        }
        Ok(MonotoneFn::Pow(k))
    }

    pub fn exp_base(b: BigInt) -> Result<Self, DefinedError> {
        if b < BigInt::from(2) {
            return Err(DefinedError::InvalidFunction(format!(
                "exp {b}: base must be ≥ 2"
            )));
        }
        Ok(MonotoneFn::ExpBase(b))
    }

    pub fn affine(slope: Rational, intercept: Rational) -> Result<Self, DefinedError> {
        if !slope.is_positive() {
            return Err(DefinedError::InvalidFunction(format!(
                "affine: slope {slope} must be > 0"
            )));
        }
        Ok(MonotoneFn::Affine { slope, intercept })
    }

    /// `g(x)` as a gross-number, when it has one. `b^x` is only evaluated for
    /// finite `x` with at most a few thousand bits of result.
    pub fn eval(&self, x: &GrossNumber) -> Option<GrossNumber> {
        match self {
            MonotoneFn::Pow(k) => Some(x.pow(*k)),
            MonotoneFn::Affine { slope, intercept } => Some(
                &(x * &GrossNumber::from(slope.clone())) + &GrossNumber::from(intercept.clone()),
            ),
            MonotoneFn::ExpBase(b) => {
                let n = x.to_bigint()?.to_u32()?;
                (u64::from(n) * b.bits() <= 1 << 16)
                    .then(|| GrossNumber::from(num_traits::pow(b.clone(), n as usize)))
            }
        }
    }

    /// Sign of `g(x) − κ` for a positive integer `x`, or `None` when `g(x)`
    /// cannot be placed relative to `κ`.
    pub fn compare_at(&self, x: &GrossNumber, kappa: &GrossNumber) -> Option<Sign> {
        if let Some(gx) = self.eval(x) {
            return Some(cmp(&gx, kappa));
        }
        let MonotoneFn::ExpBase(b) = self else {
            return None;
        };
        let n = x.to_bigint()?;
        // b^n is finite here: it sits below any positive infinite κ, and a
        // finite κ is overtaken by repeated multiplication within log_b κ steps
        if kappa.is_infinite() {
            return Some(if kappa.is_positive() {
                Sign::Negative
            } else {
                Sign::Positive
            });
        }
        let k = floor_rational(&kappa.to_rational()?);
        let mut power = BigInt::one();
        let mut steps = BigInt::zero();
        while steps < n {
            power *= b;
            steps += 1;
            if power > k {
                return Some(Sign::Positive);
            }
        }
        Some(cmp(&GrossNumber::from(power), kappa))
    }

    /// `g(x+1) − g(x)`.
    pub fn gap(&self, x: &GrossNumber) -> Option<GrossNumber> {
        let next = x + &GrossNumber::one();
        Some(&self.eval(&next)? - &self.eval(x)?)
    }

    fn describe(&self, kappa: &str) -> String {
        match self {
            MonotoneFn::Pow(2) => format!("⌊√{kappa}⌋"),
            MonotoneFn::Pow(k) => format!("⌊{kappa}^(1/{k})⌋"),
            MonotoneFn::ExpBase(b) => format!("⌊log_{b} {kappa}⌋"),
            MonotoneFn::Affine { slope, intercept } => {
                format!("⌊({kappa}-({intercept}))/{slope}⌋")
            }
        }
    }
}

/// The `x` with `g(x) ≤ κ < g(x+1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DefinedNumeral {
    g: MonotoneFn,
    kappa: GrossNumber,
}

impl DefinedNumeral {
    pub fn g(&self) -> &MonotoneFn {
        &self.g
    }

    pub fn kappa(&self) -> &GrossNumber {
        &self.kappa
    }
}

impl fmt::Display for DefinedNumeral {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.g.describe(&self.kappa.to_string()))
    }
}

pub fn define_by_inverse(
    g: MonotoneFn,
    kappa: GrossNumber,
) -> Result<DefinedNumeral, DefinedError> {
    if !kappa.is_positive_integer() {
        return Err(DefinedError::NotPositiveInteger(kappa));
    }
    match g.compare_at(&GrossNumber::one(), &kappa) {
        Some(Sign::Positive) => Err(DefinedError::BelowRange),
        _ => Ok(DefinedNumeral { g, kappa }),
    }
}

/// Resolves a numeral with finite `κ` by doubling then bisection.
pub fn resolve_finite(d: &DefinedNumeral) -> Result<GrossNumber, DefinedError> {
    if !d.kappa.is_finite() {
        return Err(DefinedError::NotFinite);
    }
    let within = |x: &BigInt| {
        d.g.compare_at(&GrossNumber::from(x.clone()), &d.kappa)
            .expect("finite arguments are always comparable")
            != Sign::Positive
    };
    // invariant: g(lo) ≤ κ < g(hi)
    let mut lo = BigInt::one();
    let mut hi = BigInt::from(2);
    while within(&hi) {
        lo = hi.clone();
        hi *= 2;
    }
    while &hi - &lo > BigInt::one() {
        let mid: BigInt = (&lo + &hi) / 2;
        if within(&mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(GrossNumber::from(lo))
}

/// Places `d` relative to a positive integer `y`: `d < y` iff `κ < g(y)`,
/// `d > y` iff `g(y+1) ≤ κ`, equal otherwise. `None` means incomparable:
/// some `g` value could not be evaluated or `y` is not an integer ≥ 1.
pub fn cmp_defined(d: &DefinedNumeral, y: &GrossNumber) -> Option<Sign> {
    if cmp(y, &GrossNumber::one()) == Sign::Negative {
        return Some(Sign::Positive);
    }
    if !y.is_integer() {
        return None;
    }
    if d.g.compare_at(y, &d.kappa)? == Sign::Positive {
        return Some(Sign::Negative);
    }
    let next = y + &GrossNumber::one();
    Some(match d.g.compare_at(&next, &d.kappa)? {
        Sign::Positive => Sign::Zero,
        _ => Sign::Positive,
    })
}

/// A bounded collection of named definitions; each definition is one
/// finitely written instance, and the total is capped.
#[derive(Clone, Debug)]
pub struct DefinitionRegistry {
    limit: usize,
    entries: Vec<(String, DefinedNumeral)>,
}

impl DefinitionRegistry {
    pub const DEFAULT_LIMIT: usize = 64;

    pub fn with_limit(limit: usize) -> Self {
        DefinitionRegistry {
            limit,
            entries: Vec::new(),
        }
    }

    pub fn register(
        &mut self,
        name: &str,
        d: DefinedNumeral,
    ) -> Result<&DefinedNumeral, DefinedError> {
        if self.entries.iter().any(|(n, _)| n == name) {
            return Err(DefinedError::DuplicateName(name.to_string()));
        }
        if self.entries.len() >= self.limit {
            return Err(DefinedError::RegistryFull { limit: self.limit });
        }
        self.entries.push((name.to_string(), d));
        Ok(&self.entries.last().unwrap().1)
    }

    pub fn get(&self, name: &str) -> Option<&DefinedNumeral> {
        self.entries.iter().find(|(n, _)| n == name).map(|(_, d)| d)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl Default for DefinitionRegistry {
    fn default() -> Self {
        Self::with_limit(Self::DEFAULT_LIMIT)
    }
}
