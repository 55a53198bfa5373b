//! Semi-infinite strips reflected in vertical lines.
//!
//! A "half-plane" bounded by gross-numbers is a strip `[lo, hi] × I`.
//! Reflections in vertical lines act on abscissas only, so strips are
//! reduced to their x-interval for all computations; the y-interval is
//! carried along unchanged.
//!
//! [`classical`] replays the same construction with absorbing ±∞ endpoints
//! for comparison.

use std::fmt;

use crate::gnum::{GrossNumber, Sign};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GeometryError {
    EmptyInterval { lo: GrossNumber, hi: GrossNumber },
}

impl fmt::Display for GeometryError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeometryError::EmptyInterval { lo, hi } => write!(f, "EmptyInterval([{lo},{hi}])"),
        }
    }
}

impl std::error::Error for GeometryError {}

/// Closed interval `[lo, hi]` of gross-numbers, endpoints not necessarily
/// integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealInterval {
    lo: GrossNumber,
    hi: GrossNumber,
}

impl RealInterval {
    pub fn new(lo: GrossNumber, hi: GrossNumber) -> Result<Self, GeometryError> {
        if lo > hi {
            return Err(GeometryError::EmptyInterval { lo, hi });
        }
        Ok(RealInterval { lo, hi })
    }

    /// `[-r, r]`.
    pub fn symmetric(r: GrossNumber) -> Result<Self, GeometryError> {
        Self::new(-&r, r)
    }

    pub fn lo(&self) -> &GrossNumber {
        &self.lo
    }

    pub fn hi(&self) -> &GrossNumber {
        &self.hi
    }

    pub fn length(&self) -> GrossNumber {
        &self.hi - &self.lo
    }

    pub fn contains_interval(&self, inner: &RealInterval) -> bool {
        self.lo <= inner.lo && inner.hi <= self.hi
    }

    /// Image under `x ↦ −x + 2·axis`.
    pub fn reflect(&self, axis: &GrossNumber) -> RealInterval {
        let twice = axis + axis;
        RealInterval {
            lo: &twice - &self.hi,
            hi: &twice - &self.lo,
        }
    }
}

impl fmt::Display for RealInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.lo, self.hi)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Strip {
    pub x: RealInterval,
    pub y: RealInterval,
}

impl fmt::Display for Strip {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}×{}", self.x, self.y)
    }
}

/// Reflection in the vertical line through `axis_x`.
pub fn reflect_strip(s: &Strip, axis_x: &GrossNumber) -> Strip {
    Strip {
        x: s.x.reflect(axis_x),
        y: s.y.clone(),
    }
}

pub fn strip_subset(inner: &Strip, outer: &Strip) -> bool {
    outer.x.contains_interval(&inner.x) && outer.y.contains_interval(&inner.y)
}

/// The x-range of one strip lying outside another.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UncoveredExtent {
    /// Part of the inner x-range left of the outer one.
    pub left: Option<RealInterval>,
    /// Part of the inner x-range right of the outer one.
    pub right: Option<RealInterval>,
    /// Combined length of `left` and `right`.
    pub length: GrossNumber,
}

pub fn uncovered_extent(inner: &Strip, outer: &Strip) -> UncoveredExtent {
    let (a, b) = (&inner.x, &outer.x);
    let left = (a.lo < b.lo).then(|| RealInterval {
        lo: a.lo.clone(),
        hi: std::cmp::min(&a.hi, &b.lo).clone(),
    });
    let right = (a.hi > b.hi).then(|| RealInterval {
        lo: std::cmp::max(&a.lo, &b.hi).clone(),
        hi: a.hi.clone(),
    });
    let length = [&left, &right]
        .into_iter()
        .flatten()
        .fold(GrossNumber::zero(), |acc, r| &acc + &r.length());
    UncoveredExtent {
        left,
        right,
        length,
    }
}

/// Reflect `A = [−b, a] × [−c, c]` in `x = a` to get `C`, then `C` in `x = d`
/// to get `B`, and compare `B` with `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfPlaneReport {
    pub a_strip: Strip,
    pub c_strip: Strip,
    pub b_strip: Strip,
    pub b_subset_of_a: bool,
    pub uncovered: UncoveredExtent,
    pub classical: classical::ClassicalReport,
}

pub fn half_plane_demo(
    a: &GrossNumber,
    d: &GrossNumber,
    b: &GrossNumber,
    c: &GrossNumber,
) -> Result<HalfPlaneReport, GeometryError> {
    let a_strip = Strip {
        x: RealInterval::new(-b, a.clone())?,
        y: RealInterval::symmetric(c.clone())?,
    };
    let c_strip = reflect_strip(&a_strip, a);
    let b_strip = reflect_strip(&c_strip, d);
    let b_subset_of_a = strip_subset(&b_strip, &a_strip);
    let uncovered = uncovered_extent(&b_strip, &a_strip);
    let classical = classical::half_plane(a, d, b, c);
    Ok(HalfPlaneReport {
        a_strip,
        c_strip,
        b_strip,
        b_subset_of_a,
        uncovered,
        classical,
    })
}

pub mod classical {
    //! Endpoints read in the classical way: every infinite gross-number
    //! collapses to an absorbing `±∞`, which cannot tell `−b` from
    //! `−b − 2a + 2d`. Only used to contrast with the exact computation.

    use std::cmp::Ordering;
    use std::fmt;

    use super::Sign;
    use crate::gnum::{GrossNumber, Rational};

    #[derive(Clone, Debug, PartialEq, Eq)]
    pub enum Extended {
        NegInfinity,
        Finite(Rational),
        PosInfinity,
    }

    impl Extended {
        pub fn from_gross(x: &GrossNumber) -> Self {
            if x.is_infinite() {
                if x.sign() == Sign::Positive {
                    Extended::PosInfinity
                } else {
                    Extended::NegInfinity
                }
            } else {
                Extended::Finite(x.constant())
            }
        }

        fn neg(&self) -> Self {
            match self {
                Extended::NegInfinity => Extended::PosInfinity,
                Extended::Finite(r) => Extended::Finite(-r.clone()),
                Extended::PosInfinity => Extended::NegInfinity,
            }
        }

        fn add_finite(&self, r: &Rational) -> Self {
            match self {
                Extended::Finite(x) => Extended::Finite(x + r),
                inf => inf.clone(),
            }
        }

        fn rank(&self) -> u8 {
            match self {
                Extended::NegInfinity => 0,
                Extended::Finite(_) => 1,
                Extended::PosInfinity => 2,
            }
        }
    }

    impl PartialOrd for Extended {
        fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
            Some(self.cmp(other))
        }
    }

    impl Ord for Extended {
        /// Both infinities compare equal to themselves: `∞ = ∞ + 2a`.
        fn cmp(&self, other: &Self) -> Ordering {
            match (self, other) {
                (Extended::Finite(x), Extended::Finite(y)) => x.cmp(y),
                _ => self.rank().cmp(&other.rank()),
            }
        }
    }

    impl fmt::Display for Extended {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            match self {
                Extended::NegInfinity => f.write_str("-∞"),
                Extended::Finite(r) => write!(f, "{r}"),
                Extended::PosInfinity => f.write_str("+∞"),
            }
        }
    }

    #[derive(Clone, Debug, PartialEq, Eq)]
    pub struct ClassicalInterval {
        pub lo: Extended,
        pub hi: Extended,
    }

    impl ClassicalInterval {
        fn reflect(&self, axis: &Rational) -> Self {
            let twice = axis + axis;
            ClassicalInterval {
                lo: self.hi.neg().add_finite(&twice),
                hi: self.lo.neg().add_finite(&twice),
            }
        }

        fn contains(&self, inner: &ClassicalInterval) -> bool {
            self.lo <= inner.lo && inner.hi <= self.hi
        }
    }

    impl fmt::Display for ClassicalInterval {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            write!(f, "[{},{}]", self.lo, self.hi)
        }
    }

    #[derive(Clone, Debug, PartialEq, Eq)]
    pub struct ClassicalReport {
        pub a_x: ClassicalInterval,
        pub c_x: ClassicalInterval,
        pub b_x: ClassicalInterval,
        pub b_subset_of_a: bool,
    }

    /// The half-plane construction on abscissas with `b` (and `c`) read as
    /// `+∞`. The reflection axes `a` and `d` are taken by their finite part.
    pub fn half_plane(
        a: &GrossNumber,
        d: &GrossNumber,
        b: &GrossNumber,
        _c: &GrossNumber,
    ) -> ClassicalReport {
        let a_x = ClassicalInterval {
            lo: Extended::from_gross(&-b),
            hi: Extended::from_gross(a),
        };
        let c_x = a_x.reflect(&a.constant());
        let b_x = c_x.reflect(&d.constant());
        let b_subset_of_a = a_x.contains(&b_x);
        ClassicalReport {
            a_x,
            c_x,
            b_x,
            b_subset_of_a,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gnum::parse_numeral;

    fn g(s: &str) -> GrossNumber {
        parse_numeral(s).unwrap()
    }

    fn iv(lo: &str, hi: &str) -> RealInterval {
        RealInterval::new(g(lo), g(hi)).unwrap()
    }

    #[test]
    fn symbolic_reflections() {
        // A = [−b, a] × I with symbolic-looking finite stand-ins checked
        // against the closed forms C = [a, b+2a], B = [−b−2a+2d, −a+2d]
        let (a, b, d) = (g("3"), g("①^2"), g("-7/2"));
        let i = RealInterval::symmetric(g("①")).unwrap();
        let strip_a = Strip {
            x: RealInterval::new(-&b, a.clone()).unwrap(),
            y: i.clone(),
        };
        let strip_c = reflect_strip(&strip_a, &a);
        assert_eq!(
            strip_c.x,
            RealInterval::new(a.clone(), &b + &(&a + &a)).unwrap()
        );
        let strip_b = reflect_strip(&strip_c, &d);
        let two = GrossNumber::from(2);
        assert_eq!(
            strip_b.x,
            RealInterval::new(
                &(&(-&b) - &(&two * &a)) + &(&two * &d),
                &(-&a) + &(&two * &d)
            )
            .unwrap()
        );
        assert_eq!(strip_b.y, i);
        assert_eq!(reflect_strip(&strip_c, &a), strip_a);
    }

    #[test]
    fn unit_axis_configuration() {
        let r = half_plane_demo(&g("1"), &g("0"), &g("①"), &g("①")).unwrap();
        assert_eq!(r.c_strip.x, iv("1", "①+2"));
        assert_eq!(r.b_strip.x, iv("-①-2", "-1"));
        assert!(!r.b_subset_of_a);
        assert_eq!(r.uncovered.length, g("2"));
        assert_eq!(r.uncovered.left, Some(iv("-①-2", "-①")));
        assert_eq!(r.uncovered.right, None);
        assert!(r.uncovered.length.classify().is_finite);
        assert!(r.classical.b_subset_of_a);
    }

    #[test]
    fn subset_checks() {
        let i = RealInterval::symmetric(g("①")).unwrap();
        let a = Strip {
            x: iv("-①", "1"),
            y: i.clone(),
        };
        assert!(strip_subset(&a, &a));
        let unit = Strip {
            x: iv("0", "1"),
            y: iv("0", "1"),
        };
        let double = Strip {
            x: iv("0", "2"),
            y: iv("0", "2"),
        };
        assert!(strip_subset(&unit, &double));
        assert!(!strip_subset(&double, &unit));
        let nested = uncovered_extent(&unit, &double);
        assert!(nested.length.is_zero());
        assert_eq!(nested.left, None);

        let r = half_plane_demo(&g("5"), &g("1"), &g("①"), &g("①")).unwrap();
        assert_eq!(r.uncovered.length, g("8"));
        // both ends stick out when the inner range is wider
        let wide = Strip {
            x: iv("-3", "3"),
            y: i.clone(),
        };
        let narrow = Strip {
            x: iv("-1", "2"),
            y: i,
        };
        let ext = uncovered_extent(&wide, &narrow);
        assert_eq!(ext.length, g("3"));
        assert_eq!(ext.right, Some(iv("2", "3")));
    }

    #[test]
    fn rejects_empty_ranges() {
        assert!(RealInterval::new(g("2"), g("1")).is_err());
        assert!(half_plane_demo(&g("1"), &g("0"), &g("-5"), &g("①")).is_err());
    }
}
