//! Finite unions of gross-integer intervals.
//!
//! An [`IntervalSet`] is stored as a list of disjoint, non-adjacent intervals
//! sorted by their lower end, so every set has exactly one representation.
//! Endpoints may be infinite (`[1..①]`, `[-①..①]`, `[4..①^2-1]`); all endpoint
//! arithmetic is exact.

use std::fmt;

use crate::gnum::{cmp, GrossNumber, Sign};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SetError {
    NonIntegerEndpoint(GrossNumber),
    EmptyIntervalRejected { lo: GrossNumber, hi: GrossNumber },
    EmptySet,
    NotSubsetOfRange,
    NonIntegerOffset(GrossNumber),
    NotPositiveInteger(GrossNumber),
}

impl fmt::Display for SetError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SetError::NonIntegerEndpoint(x) => write!(f, "NonIntegerEndpoint({x})"),
            SetError::EmptyIntervalRejected { lo, hi } => {
                write!(f, "EmptyIntervalRejected([{lo}..{hi}])")
            }
            SetError::EmptySet => f.write_str("EmptySet"),
            SetError::NotSubsetOfRange => f.write_str("NotSubsetOfRange"),
            SetError::NonIntegerOffset(x) => write!(f, "NonIntegerOffset({x})"),
            SetError::NotPositiveInteger(x) => write!(f, "NotPositiveInteger({x})"),
        }
    }
}

impl std::error::Error for SetError {}

/// Orientation of an affine map `x ↦ ±x + offset`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    Preserve,
    Reverse,
}

/// The integers `k` with `lo ≤ k ≤ hi`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GrossInterval {
    lo: GrossNumber,
    hi: GrossNumber,
}

impl GrossInterval {
    pub fn new(lo: GrossNumber, hi: GrossNumber) -> Result<Self, SetError> {
        for end in [&lo, &hi] {
            if !end.is_integer() {
                return Err(SetError::NonIntegerEndpoint(end.clone()));
            }
        }
        if cmp(&lo, &hi) == Sign::Positive {
            return Err(SetError::EmptyIntervalRejected { lo, hi });
        }
        Ok(GrossInterval { lo, hi })
    }

    /// Caller guarantees integer endpoints with `lo ≤ hi`.
    pub(crate) fn new_unchecked(lo: GrossNumber, hi: GrossNumber) -> Self {
        debug_assert!(lo.is_integer() && hi.is_integer() && lo <= hi);
        GrossInterval { lo, hi }
    }

    pub fn singleton(x: GrossNumber) -> Result<Self, SetError> {
        Self::new(x.clone(), x)
    }

    /// `[1..n]` for a positive integer `n`.
    pub fn initial(n: GrossNumber) -> Result<Self, SetError> {
        if !n.is_positive_integer() {
            return Err(SetError::NotPositiveInteger(n));
        }
        Ok(GrossInterval {
            lo: GrossNumber::one(),
            hi: n,
        })
    }

    pub fn lo(&self) -> &GrossNumber {
        &self.lo
    }

    pub fn hi(&self) -> &GrossNumber {
        &self.hi
    }

    pub fn len(&self) -> GrossNumber {
        &(&self.hi - &self.lo) + &GrossNumber::one()
    }

    pub fn contains(&self, x: &GrossNumber) -> bool {
        x.is_integer() && self.lo <= *x && *x <= self.hi
    }

    pub fn shift(&self, offset: &GrossNumber) -> GrossInterval {
        GrossInterval {
            lo: &self.lo + offset,
            hi: &self.hi + offset,
        }
    }

    pub fn intersect(&self, other: &GrossInterval) -> Option<GrossInterval> {
        let lo = std::cmp::max(&self.lo, &other.lo);
        let hi = std::cmp::min(&self.hi, &other.hi);
        (lo <= hi).then(|| GrossInterval {
            lo: lo.clone(),
            hi: hi.clone(),
        })
    }
}

impl fmt::Display for GrossInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}..{}]", self.lo, self.hi)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntervalSet {
    parts: Vec<GrossInterval>,
}

impl IntervalSet {
    pub fn empty() -> Self {
        IntervalSet { parts: Vec::new() }
    }

    /// Normalizes any list of intervals: sorted, overlapping and adjacent
    /// intervals merged.
    pub fn from_intervals<I>(intervals: I) -> Self
    where
        I: IntoIterator<Item = GrossInterval>,
    {
        let mut parts: Vec<GrossInterval> = intervals.into_iter().collect();
        parts.sort_by(|a, b| a.lo.cmp(&b.lo));
        let one = GrossNumber::one();
        let mut merged: Vec<GrossInterval> = Vec::with_capacity(parts.len());
        for part in parts {
            if let Some(last) = merged.last_mut() {
                if part.lo <= &last.hi + &one {
                    if part.hi > last.hi {
                        last.hi = part.hi;
                    }
                    continue;
                }
            }
            merged.push(part);
        }
        IntervalSet { parts: merged }
    }

    /// Builds a set from `(lo, hi)` endpoint pairs, validating each interval.
    pub fn make_set<I>(pairs: I) -> Result<Self, SetError>
    where
        I: IntoIterator<Item = (GrossNumber, GrossNumber)>,
    {
        let intervals = pairs
            .into_iter()
            .map(|(lo, hi)| GrossInterval::new(lo, hi))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::from_intervals(intervals))
    }

    pub fn interval(lo: GrossNumber, hi: GrossNumber) -> Result<Self, SetError> {
        Ok(Self::from(GrossInterval::new(lo, hi)?))
    }

    /// `{x₁, x₂, …}` from individual integers.
    pub fn from_elements<I>(elements: I) -> Result<Self, SetError>
    where
        I: IntoIterator<Item = GrossNumber>,
    {
        let intervals = elements
            .into_iter()
            .map(GrossInterval::singleton)
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::from_intervals(intervals))
    }

    /// `[1..κ−1]`, the union of the initial segments `[1..n−1]` over `n ≤ κ`.
    /// Empty when `κ = 1`.
    pub fn union_initial_segments(kappa: &GrossNumber) -> Result<Self, SetError> {
        if !kappa.is_positive_integer() {
            return Err(SetError::NotPositiveInteger(kappa.clone()));
        }
        let hi = kappa - &GrossNumber::one();
        if hi.is_positive() {
            Ok(Self::from(GrossInterval::new_unchecked(
                GrossNumber::one(),
                hi,
            )))
        } else {
            Ok(Self::empty())
        }
    }

    pub fn parts(&self) -> &[GrossInterval] {
        &self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn contains(&self, x: &GrossNumber) -> bool {
        if !x.is_integer() {
            return false;
        }
        let idx = self.parts.partition_point(|p| p.lo <= *x);
        idx > 0 && *x <= self.parts[idx - 1].hi
    }

    pub fn union(&self, other: &IntervalSet) -> IntervalSet {
        Self::from_intervals(self.parts.iter().chain(&other.parts).cloned())
    }

    pub fn intersect(&self, other: &IntervalSet) -> IntervalSet {
        let (a, b) = (&self.parts, &other.parts);
        let (mut i, mut j) = (0, 0);
        let mut out = Vec::new();
        while i < a.len() && j < b.len() {
            if let Some(common) = a[i].intersect(&b[j]) {
                out.push(common);
            }
            if a[i].hi < b[j].hi {
                i += 1;
            } else {
                j += 1;
            }
        }
        // pieces of disjoint, non-adjacent inputs are already canonical
        IntervalSet { parts: out }
    }

    pub fn difference(&self, other: &IntervalSet) -> IntervalSet {
        let one = GrossNumber::one();
        let b = &other.parts;
        let mut out = Vec::new();
        let mut j = 0;
        for part in &self.parts {
            let mut lo = part.lo.clone();
            let hi = &part.hi;
            while j < b.len() && b[j].hi < lo {
                j += 1;
            }
            let mut k = j;
            while k < b.len() && b[k].lo <= *hi {
                if b[k].lo > lo {
                    out.push(GrossInterval::new_unchecked(lo.clone(), &b[k].lo - &one));
                }
                if b[k].hi >= lo {
                    lo = &b[k].hi + &one;
                }
                k += 1;
            }
            if lo <= *hi {
                out.push(GrossInterval::new_unchecked(lo, hi.clone()));
            }
        }
        IntervalSet { parts: out }
    }

    pub fn is_subset(&self, other: &IntervalSet) -> bool {
        self.difference(other).is_empty()
    }

    pub fn is_disjoint(&self, other: &IntervalSet) -> bool {
        self.intersect(other).is_empty()
    }

    /// Number of elements: the sum of `hi − lo + 1` over the parts.
    pub fn cardinality(&self) -> GrossNumber {
        self.parts
            .iter()
            .fold(GrossNumber::zero(), |acc, p| &acc + &p.len())
    }

    /// `(min, max)` of a nonempty set.
    pub fn extrema(&self) -> Result<(GrossNumber, GrossNumber), SetError> {
        match (self.parts.first(), self.parts.last()) {
            (Some(first), Some(last)) => Ok((first.lo.clone(), last.hi.clone())),
            _ => Err(SetError::EmptySet),
        }
    }

    pub fn min(&self) -> Result<GrossNumber, SetError> {
        self.extrema().map(|(lo, _)| lo)
    }

    pub fn max(&self) -> Result<GrossNumber, SetError> {
        self.extrema().map(|(_, hi)| hi)
    }

    /// `[min..max]`.
    pub fn convex_hull(&self) -> Result<GrossInterval, SetError> {
        let (lo, hi) = self.extrema()?;
        Ok(GrossInterval::new_unchecked(lo, hi))
    }

    fn check_within(&self, kappa: &GrossNumber) -> Result<(), SetError> {
        let range = IntervalSet::from(GrossInterval::initial(kappa.clone())?);
        if self.is_subset(&range) {
            Ok(())
        } else {
            Err(SetError::NotSubsetOfRange)
        }
    }

    /// `Some(σ)` iff the set is exactly `[1..σ]`. The set must lie in `[1..κ]`.
    pub fn is_initial_segment(&self, kappa: &GrossNumber) -> Result<Option<GrossNumber>, SetError> {
        self.check_within(kappa)?;
        Ok(match self.parts.as_slice() {
            [only] if only.lo == GrossNumber::one() => Some(only.hi.clone()),
            _ => None,
        })
    }

    /// `Some(ν)` iff the set is exactly `[ν..κ]`, decided by reflecting with
    /// `ι : x ↦ κ+1−x` and testing for an initial segment.
    pub fn is_final_segment(&self, kappa: &GrossNumber) -> Result<Option<GrossNumber>, SetError> {
        self.check_within(kappa)?;
        let shift = kappa + &GrossNumber::one();
        let mirrored = self.map_affine(Direction::Reverse, &shift)?;
        Ok(mirrored
            .is_initial_segment(kappa)?
            .map(|sigma| &shift - &sigma))
    }

    /// Image under `x ↦ x + offset` or `x ↦ −x + offset`.
    pub fn map_affine(
        &self,
        direction: Direction,
        offset: &GrossNumber,
    ) -> Result<IntervalSet, SetError> {
        if !offset.is_integer() {
            return Err(SetError::NonIntegerOffset(offset.clone()));
        }
        let parts = match direction {
            Direction::Preserve => self.parts.iter().map(|p| p.shift(offset)).collect(),
            Direction::Reverse => self
                .parts
                .iter()
                .rev()
                .map(|p| GrossInterval {
                    lo: offset - &p.hi,
                    hi: offset - &p.lo,
                })
                .collect(),
        };
        Ok(IntervalSet { parts })
    }

    /// `ι : x ↦ κ+1−x`, the order-reversing involution of `[1..κ]`.
    pub fn iota(&self, kappa: &GrossNumber) -> Result<IntervalSet, SetError> {
        self.map_affine(Direction::Reverse, &(kappa + &GrossNumber::one()))
    }

    /// Reflection `x ↦ −x + 2a` in the point `a`.
    pub fn reflect(&self, axis: &GrossNumber) -> Result<IntervalSet, SetError> {
        self.map_affine(Direction::Reverse, &(axis + axis))
    }

    /// Removes and returns the least element.
    pub(crate) fn pop_min(&mut self) -> Option<GrossNumber> {
        let first = self.parts.first_mut()?;
        let min = first.lo.clone();
        if first.lo == first.hi {
            self.parts.remove(0);
        } else {
            first.lo = &first.lo + &GrossNumber::one();
        }
        Some(min)
    }

    /// True when every endpoint is a finite integer.
    pub fn is_finite(&self) -> bool {
        self.parts
            .iter()
            .all(|p| p.lo.is_finite() && p.hi.is_finite())
    }
}

impl From<GrossInterval> for IntervalSet {
    fn from(interval: GrossInterval) -> Self {
        IntervalSet {
            parts: vec![interval],
        }
    }
}

impl fmt::Display for IntervalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("{}");
        }
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(" | ")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}
