//! Numeral systems as expressibility predicates.
//!
//! Three kinds are modelled:
//!
//! * `Piraha`: the numerals 1 and 2 only.
//! * `BoundedFinite { digits, base }`: 0 and the integers with
//!   `1 ≤ |n| ≤ base^digits − 1`, a `maxint`-style system.
//! * `GrossBudget { max_terms, coeff_digits, exp_digits }`: gross-numbers with
//!   at most `max_terms` terms, coefficient numerators and denominators of at
//!   most `coeff_digits` decimal digits, and integer exponents of at most
//!   `exp_digits` decimal digits.
//!
//! Each kind has a greatest expressible finite integer φ and, for
//! `GrossBudget`, a least expressible infinite integer ψ. The budgeted
//! description space is finite, so both can also be found by exhaustive
//! search, see [`scan_integers`].

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::batch::{self, Execution};
use crate::gnum::{GrossNumber, Rational};
use crate::measure::{canonical_measurement, MeasureError, Measurement};
use crate::sets::IntervalSet;

/// Default cap on the number of descriptions an exhaustive scan may visit.
pub const DEFAULT_SCAN_LIMIT: u128 = 5_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SystemError {
    InvalidSystem(String),
    NoFiniteNumerals,
    NoInfiniteNumerals,
    NotExpressible(GrossNumber),
    ScanTooLarge { size: u128, limit: u128 },
    Measure(MeasureError),
}

impl fmt::Display for SystemError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SystemError::InvalidSystem(why) => write!(f, "InvalidSystem({why})"),
            SystemError::NoFiniteNumerals => f.write_str("NoFiniteNumerals"),
            SystemError::NoInfiniteNumerals => f.write_str("NoInfiniteNumerals"),
            SystemError::NotExpressible(x) => write!(f, "NotExpressible({x})"),
            SystemError::ScanTooLarge { size, limit } => {
                write!(f, "ScanTooLarge({size} descriptions > {limit})")
            }
            SystemError::Measure(e) => e.fmt(f),
        }
    }
}

impl std::error::Error for SystemError {}

impl From<MeasureError> for SystemError {
    fn from(e: MeasureError) -> Self {
        SystemError::Measure(e)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NumeralSystem {
    Piraha,
    BoundedFinite {
        digits: u32,
        base: u32,
    },
    GrossBudget {
        max_terms: u32,
        coeff_digits: u32,
        exp_digits: u32,
    },
}

impl NumeralSystem {
    pub fn bounded_finite(digits: u32, base: u32) -> Result<Self, SystemError> {
        if digits == 0 || base < 2 {
            return Err(SystemError::InvalidSystem(format!(
                "finite:{digits}:{base} needs digits ≥ 1 and base ≥ 2"
            )));
        }
        Ok(NumeralSystem::BoundedFinite { digits, base })
    }

    pub fn gross_budget(
        max_terms: u32,
        coeff_digits: u32,
        exp_digits: u32,
    ) -> Result<Self, SystemError> {
        if max_terms == 0 || coeff_digits == 0 || exp_digits == 0 {
            return Err(SystemError::InvalidSystem(format!(
                "gross:{max_terms}:{coeff_digits}:{exp_digits} needs every budget ≥ 1"
            )));
        }
        Ok(NumeralSystem::GrossBudget {
            max_terms,
            coeff_digits,
            exp_digits,
        })
    }

    pub fn expressible(&self, x: &GrossNumber) -> bool {
        match *self {
            NumeralSystem::Piraha => x == &GrossNumber::from(1) || x == &GrossNumber::from(2),
            NumeralSystem::BoundedFinite { digits, base } => x
                .to_bigint()
                .is_some_and(|n| n.abs() <= largest(base, digits)),
            NumeralSystem::GrossBudget {
                max_terms,
                coeff_digits,
                exp_digits,
            } => {
                x.terms().len() <= max_terms as usize
                    && x.terms().iter().all(|t| {
                        t.exponent.is_integer()
                            && digit_count(t.exponent.numer()) <= exp_digits
                            && digit_count(t.coefficient.numer()) <= coeff_digits
                            && digit_count(t.coefficient.denom()) <= coeff_digits
                    })
            }
        }
    }

    /// φ: the greatest expressible finite positive integer.
    pub fn max_finite(&self) -> Result<GrossNumber, SystemError> {
        Ok(match *self {
            NumeralSystem::Piraha => GrossNumber::from(2),
            NumeralSystem::BoundedFinite { digits, base } => largest(base, digits).into(),
            NumeralSystem::GrossBudget { coeff_digits, .. } => largest(10, coeff_digits).into(),
        })
    }

    /// ψ: the least expressible infinite positive integer.
    ///
    /// The leading term of an infinite integer has exponent ≥ 1 and positive
    /// coefficient ≥ 1/M (M the largest coefficient numeral), and integrality
    /// leaves only the exponent-0 slot below ①, whose least value is −M.
    pub fn min_infinite(&self) -> Result<GrossNumber, SystemError> {
        match *self {
            NumeralSystem::GrossBudget {
                max_terms,
                coeff_digits,
                ..
            } => {
                let m = largest(10, coeff_digits);
                let lead =
                    GrossNumber::monomial(Rational::new(BigInt::one(), m.clone()), Rational::one());
                Ok(if max_terms >= 2 {
                    lead - GrossNumber::from(m)
                } else {
                    lead
                })
            }
            _ => Err(SystemError::NoInfiniteNumerals),
        }
    }

    /// Measures `s` with its canonical measurement, provided the system can
    /// write μ, every piece endpoint and offset, and every target endpoint.
    /// Zero offsets are the identity shift and need no numeral.
    pub fn measure_in(&self, s: &IntervalSet) -> Result<Measurement, SystemError> {
        let m = canonical_measurement(s)?;
        let mut written: Vec<&GrossNumber> = vec![m.mu()];
        for p in m.pieces() {
            written.extend([p.domain.lo(), p.domain.hi()]);
            if !p.offset.is_zero() {
                written.push(&p.offset);
            }
        }
        for part in m.target().parts() {
            written.extend([part.lo(), part.hi()]);
        }
        match written.into_iter().find(|x| !self.expressible(x)) {
            Some(x) => Err(SystemError::NotExpressible(x.clone())),
            None => Ok(m),
        }
    }
}

impl fmt::Display for NumeralSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NumeralSystem::Piraha => f.write_str("piraha"),
            NumeralSystem::BoundedFinite { digits, base } => write!(f, "finite:{digits}:{base}"),
            NumeralSystem::GrossBudget {
                max_terms,
                coeff_digits,
                exp_digits,
            } => write!(f, "gross:{max_terms}:{coeff_digits}:{exp_digits}"),
        }
    }
}

impl FromStr for NumeralSystem {
    type Err = SystemError;

    /// `piraha`, `finite:<digits>:<base>` or `gross:<terms>:<coeff_digits>:<exp_digits>`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || SystemError::InvalidSystem(format!("unrecognised system descriptor {s:?}"));
        let fields: Vec<&str> = s.trim().split(':').collect();
        let nums = |xs: &[&str]| -> Result<Vec<u32>, SystemError> {
            xs.iter()
                .map(|x| x.parse::<u32>().map_err(|_| bad()))
                .collect()
        };
        match fields.as_slice() {
            ["piraha"] => Ok(NumeralSystem::Piraha),
            ["finite", rest @ ..] if rest.len() == 2 => {
                let v = nums(rest)?;
                Self::bounded_finite(v[0], v[1])
            }
            ["gross", rest @ ..] if rest.len() == 3 => {
                let v = nums(rest)?;
                Self::gross_budget(v[0], v[1], v[2])
            }
            _ => Err(bad()),
        }
    }
}

/// `base^digits − 1`.
fn largest(base: u32, digits: u32) -> BigInt {
    num_traits::pow(BigInt::from(base), digits as usize) - 1
}

/// Decimal digits of `|n|`; zero has one digit.
pub(crate) fn digit_count(n: &BigInt) -> u32 {
    n.abs().to_string().len() as u32
}

/// The integer descriptions of a system, organised for enumeration: for each
/// admissible exponent (descending), the admissible coefficients.
struct IntegerSpace {
    max_terms: usize,
    slots: Vec<(Rational, Vec<Rational>)>,
}

impl IntegerSpace {
    fn new(sys: &NumeralSystem) -> Self {
        match *sys {
            NumeralSystem::Piraha => IntegerSpace {
                max_terms: 1,
                slots: vec![(
                    Rational::zero(),
                    vec![
                        Rational::from_integer(1.into()),
                        Rational::from_integer(2.into()),
                    ],
                )],
            },
            NumeralSystem::BoundedFinite { digits, base } => {
                let m = largest(base, digits);
                IntegerSpace {
                    max_terms: 1,
                    slots: vec![(Rational::zero(), signed_integers(&m))],
                }
            }
            NumeralSystem::GrossBudget {
                max_terms,
                coeff_digits,
                exp_digits,
            } => {
                let m = largest(10, coeff_digits);
                let e_max = largest(10, exp_digits).to_i64().unwrap_or(i64::MAX);
                let fractions = signed_fractions(&m);
                let mut slots: Vec<(Rational, Vec<Rational>)> = (1..=e_max)
                    .rev()
                    .map(|e| (Rational::from_integer(e.into()), fractions.clone()))
                    .collect();
                slots.push((Rational::zero(), signed_integers(&m)));
                IntegerSpace {
                    max_terms: max_terms as usize,
                    slots,
                }
            }
        }
    }

    /// Number of nonzero descriptions: Σ over exponent subsets of size
    /// ≤ max_terms of the product of coefficient counts.
    fn size(&self) -> u128 {
        // ways[k] = descriptions with exactly k terms among slots seen so far
        let mut ways = vec![0u128; self.max_terms + 1];
        ways[0] = 1;
        for (_, coeffs) in &self.slots {
            let n = coeffs.len() as u128;
            for k in (1..=self.max_terms).rev() {
                ways[k] = ways[k].saturating_add(ways[k - 1].saturating_mul(n));
            }
        }
        ways[1..]
            .iter()
            .fold(0u128, |acc, w| acc.saturating_add(*w))
    }

    /// Visits every nonzero description whose leading term is
    /// `slots[slot].1[coeff]`.
    fn visit_leading(&self, slot: usize, coeff: usize, visit: &mut dyn FnMut(GrossNumber)) {
        let mut terms = vec![(
            self.slots[slot].0.clone(),
            self.slots[slot].1[coeff].clone(),
        )];
        self.extend(slot + 1, &mut terms, visit);
    }

    fn extend(
        &self,
        from: usize,
        terms: &mut Vec<(Rational, Rational)>,
        visit: &mut dyn FnMut(GrossNumber),
    ) {
        visit(GrossNumber::from_terms(terms.iter().cloned()));
        if terms.len() == self.max_terms {
            return;
        }
        for slot in from..self.slots.len() {
            let (exponent, coeffs) = &self.slots[slot];
            for c in coeffs {
                terms.push((exponent.clone(), c.clone()));
                self.extend(slot + 1, terms, visit);
                terms.pop();
            }
        }
    }

    fn leading_choices(&self) -> Vec<(usize, usize)> {
        self.slots
            .iter()
            .enumerate()
            .flat_map(|(s, (_, coeffs))| (0..coeffs.len()).map(move |c| (s, c)))
            .collect()
    }
}

fn signed_integers(m: &BigInt) -> Vec<Rational> {
    let mut out = Vec::new();
    let mut n = BigInt::one();
    while &n <= m {
        out.push(Rational::from_integer(n.clone()));
        out.push(Rational::from_integer(-n.clone()));
        n += 1;
    }
    out
}

fn signed_fractions(m: &BigInt) -> Vec<Rational> {
    let mut out = Vec::new();
    let mut p = BigInt::one();
    while &p <= m {
        let mut q = BigInt::one();
        while &q <= m {
            if p.gcd(&q).is_one() {
                out.push(Rational::new(p.clone(), q.clone()));
                out.push(Rational::new(-p.clone(), q.clone()));
            }
            q += 1;
        }
        p += 1;
    }
    out
}

/// Number of nonzero integer descriptions [`scan_integers`] would visit.
pub fn integer_space_size(sys: &NumeralSystem) -> u128 {
    IntegerSpace::new(sys).size()
}

/// Every expressible integer satisfying `keep`, by exhaustive enumeration of
/// the system's descriptions. The result is sorted ascending. Zero is
/// included when `keep` accepts it.
pub fn scan_integers<F>(
    sys: &NumeralSystem,
    limit: u128,
    exec: Execution,
    keep: F,
) -> Result<Vec<GrossNumber>, SystemError>
where
    F: Fn(&GrossNumber) -> bool + Sync + Send,
{
    let space = IntegerSpace::new(sys);
    let size = space.size();
    if size > limit {
        return Err(SystemError::ScanTooLarge { size, limit });
    }
    let chunks = batch::map(&space.leading_choices(), exec, |&(slot, coeff)| {
        let mut found = Vec::new();
        space.visit_leading(slot, coeff, &mut |x| {
            if keep(&x) {
                found.push(x);
            }
        });
        found
    });
    let mut all: Vec<GrossNumber> = chunks.into_iter().flatten().collect();
    let zero = GrossNumber::zero();
    if keep(&zero) {
        all.push(zero);
    }
    all.sort();
    all.dedup();
    Ok(all)
}

/// φ found by exhaustive search.
pub fn scan_max_finite(
    sys: &NumeralSystem,
    limit: u128,
    exec: Execution,
) -> Result<GrossNumber, SystemError> {
    scan_integers(sys, limit, exec, |x| x.is_finite() && x.is_positive())?
        .pop()
        .ok_or(SystemError::NoFiniteNumerals)
}

/// ψ found by exhaustive search.
pub fn scan_min_infinite(
    sys: &NumeralSystem,
    limit: u128,
    exec: Execution,
) -> Result<GrossNumber, SystemError> {
    scan_integers(sys, limit, exec, |x| x.is_infinite() && x.is_positive())?
        .into_iter()
        .next()
        .ok_or(SystemError::NoInfiniteNumerals)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gnum::parse_numeral;

    fn g(s: &str) -> GrossNumber {
        parse_numeral(s).unwrap()
    }

    fn budget(t: u32, c: u32, e: u32) -> NumeralSystem {
        NumeralSystem::gross_budget(t, c, e).unwrap()
    }

    #[test]
    fn expressibility() {
        let p = NumeralSystem::Piraha;
        assert!(p.expressible(&g("2")));
        assert!(!p.expressible(&g("3")));
        assert!(!p.expressible(&g("0")));

        let f = NumeralSystem::bounded_finite(2, 10).unwrap();
        assert!(f.expressible(&g("99")));
        assert!(f.expressible(&g("-99")));
        assert!(f.expressible(&g("0")));
        assert!(!f.expressible(&g("100")));
        assert!(!f.expressible(&g("1/2")));
        assert!(!f.expressible(&g("①")));

        let b = budget(1, 2, 1);
        assert!(b.expressible(&g("①")));
        assert!(!b.expressible(&g("2①+1")));
        assert!(b.expressible(&g("99/98①^-9")));
        assert!(!b.expressible(&g("100①")));
        assert!(!b.expressible(&g("①^10")));
        assert!(!b.expressible(&g("①^(1/2)")));
    }

    #[test]
    fn phi() {
        assert_eq!(NumeralSystem::Piraha.max_finite().unwrap(), g("2"));
        assert_eq!(
            NumeralSystem::bounded_finite(2, 10)
                .unwrap()
                .max_finite()
                .unwrap(),
            g("99")
        );
        assert_eq!(
            NumeralSystem::bounded_finite(3, 2)
                .unwrap()
                .max_finite()
                .unwrap(),
            g("7")
        );
        assert_eq!(budget(4, 3, 2).max_finite().unwrap(), g("999"));
    }

    #[test]
    fn psi() {
        assert_eq!(budget(2, 3, 1).min_infinite().unwrap(), g("1/999①-999"));
        assert_eq!(budget(1, 3, 1).min_infinite().unwrap(), g("1/999①"));
        assert_eq!(
            NumeralSystem::Piraha.min_infinite(),
            Err(SystemError::NoInfiniteNumerals)
        );
        assert_eq!(
            NumeralSystem::bounded_finite(2, 10).unwrap().min_infinite(),
            Err(SystemError::NoInfiniteNumerals)
        );
    }

    #[test]
    fn scans_match_closed_forms() {
        for sys in [
            budget(1, 1, 1),
            budget(2, 1, 1),
            NumeralSystem::Piraha,
            NumeralSystem::bounded_finite(2, 10).unwrap(),
        ] {
            let limit = DEFAULT_SCAN_LIMIT;
            assert_eq!(
                scan_max_finite(&sys, limit, Execution::Parallel).unwrap(),
                sys.max_finite().unwrap(),
                "{sys}"
            );
            match sys.min_infinite() {
                Ok(psi) => assert_eq!(
                    scan_min_infinite(&sys, limit, Execution::Parallel).unwrap(),
                    psi
                ),
                Err(e) => assert_eq!(
                    scan_min_infinite(&sys, limit, Execution::Sequential),
                    Err(e)
                ),
            }
        }
    }

    #[test]
    fn space_size_and_limit() {
        // 9 positive exponents × 110 fractions + 18 integers
        assert_eq!(integer_space_size(&budget(1, 1, 1)), 9 * 110 + 18);
        assert_eq!(integer_space_size(&NumeralSystem::Piraha), 2);
        assert!(matches!(
            scan_integers(&budget(3, 2, 1), 1000, Execution::Sequential, |_| true),
            Err(SystemError::ScanTooLarge { .. })
        ));
        let all = scan_integers(
            &budget(2, 1, 1),
            DEFAULT_SCAN_LIMIT,
            Execution::Parallel,
            |_| true,
        )
        .unwrap();
        assert_eq!(all.len() as u128, integer_space_size(&budget(2, 1, 1)) + 1);
    }

    #[test]
    fn relative_measurement() {
        let p = NumeralSystem::Piraha;
        let two = IntervalSet::make_set([(g("1"), g("2"))]).unwrap();
        let m = p.measure_in(&two).unwrap();
        assert!(m.is_identity());
        assert_eq!(*m.mu(), g("2"));
        let three = IntervalSet::make_set([(g("1"), g("3"))]).unwrap();
        assert_eq!(
            p.measure_in(&three),
            Err(SystemError::NotExpressible(g("3")))
        );

        let b = budget(2, 3, 1);
        let whole = IntervalSet::make_set([(g("1"), g("①"))]).unwrap();
        let m = b.measure_in(&whole).unwrap();
        assert!(m.is_identity());
        assert_eq!(*m.mu(), g("①"));

        // the offset 1000 of the second piece is out of a 3-digit budget
        let gap = IntervalSet::make_set([(g("1"), g("1")), (g("1002"), g("1002"))]).unwrap();
        assert_eq!(
            b.measure_in(&gap),
            Err(SystemError::NotExpressible(g("1000")))
        );
    }

    #[test]
    fn descriptors() {
        assert_eq!(
            "piraha".parse::<NumeralSystem>().unwrap(),
            NumeralSystem::Piraha
        );
        assert_eq!(
            "finite:2:10".parse::<NumeralSystem>().unwrap(),
            NumeralSystem::bounded_finite(2, 10).unwrap()
        );
        assert_eq!(
            "gross:2:3:1".parse::<NumeralSystem>().unwrap(),
            budget(2, 3, 1)
        );
        for bad in [
            "",
            "finite:2",
            "finite:0:10",
            "finite:2:1",
            "gross:0:1:1",
            "roman",
            "gross:a:b:c",
        ] {
            assert!(bad.parse::<NumeralSystem>().is_err(), "{bad}");
        }
        assert_eq!(budget(2, 3, 1).to_string(), "gross:2:3:1");
    }
}
