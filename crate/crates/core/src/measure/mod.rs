//! Measurements: explicitly written bijections from `[1..μ]` onto a set.
//!
//! A [`Measurement`] is a list of order-preserving shifts. Piece domains tile
//! `[1..μ]` in order and the shifted images tile the target set, so `μ` is the
//! number of elements of the target. Pieces are kept merged (no two
//! consecutive pieces share an offset), which makes structural equality the
//! same as equality of the underlying maps.

use std::fmt;

use crate::gnum::GrossNumber;
use crate::sets::{GrossInterval, IntervalSet, SetError};

mod serial;

pub use serial::{from_json, from_text, to_json, to_text};

/// Default cap on single-element extractions in
/// [`min_extraction_measurement`].
pub const DEFAULT_EXTRACTION_BOUND: u64 = 100_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MeasureError {
    EmptySet,
    BoundExceeded { bound: u64 },
    OverlappingTargets,
    NotABijection(String),
    NotASubset,
    PreconditionViolated(Precondition),
    InvalidMeasurement(String),
    Set(SetError),
}

/// Which requirement of [`intersection_split`] failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Precondition {
    EqualCardinality,
    NonemptyIntersection,
    DistinctSets,
}

impl fmt::Display for Precondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Precondition::EqualCardinality => "♯A=♯B",
            Precondition::NonemptyIntersection => "A∩B≠∅",
            Precondition::DistinctSets => "A≠B",
        })
    }
}

impl fmt::Display for MeasureError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MeasureError::EmptySet => f.write_str("EmptySet"),
            MeasureError::BoundExceeded { bound } => write!(f, "BoundExceeded({bound})"),
            MeasureError::OverlappingTargets => f.write_str("OverlappingTargets"),
            MeasureError::NotABijection(why) => write!(f, "NotABijection({why})"),
            MeasureError::NotASubset => f.write_str("NotASubset"),
            MeasureError::PreconditionViolated(p) => write!(f, "PreconditionViolated({p})"),
            MeasureError::InvalidMeasurement(why) => write!(f, "InvalidMeasurement({why})"),
            MeasureError::Set(e) => e.fmt(f),
        }
    }
}

impl std::error::Error for MeasureError {}

impl From<SetError> for MeasureError {
    fn from(e: SetError) -> Self {
        match e {
            SetError::EmptySet => MeasureError::EmptySet,
            other => MeasureError::Set(other),
        }
    }
}

/// `x ↦ x + offset` on `domain`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffinePiece {
    pub domain: GrossInterval,
    pub offset: GrossNumber,
}

impl AffinePiece {
    pub fn new(domain: GrossInterval, offset: GrossNumber) -> Result<Self, MeasureError> {
        if !offset.is_integer() {
            return Err(SetError::NonIntegerOffset(offset).into());
        }
        Ok(AffinePiece { domain, offset })
    }

    pub fn image(&self) -> GrossInterval {
        self.domain.shift(&self.offset)
    }

    pub fn apply(&self, x: &GrossNumber) -> Option<GrossNumber> {
        self.domain.contains(x).then(|| x + &self.offset)
    }

    fn inverse(&self) -> AffinePiece {
        AffinePiece {
            domain: self.image(),
            offset: -&self.offset,
        }
    }
}

impl fmt::Display for AffinePiece {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ↦ {}", self.domain, self.image())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Measurement {
    mu: GrossNumber,
    pieces: Vec<AffinePiece>,
    target: IntervalSet,
}

impl Measurement {
    /// Validates that `pieces` tile `[1..mu]` in order with pairwise disjoint
    /// images, and derives the target from the images.
    pub fn new(mu: GrossNumber, pieces: Vec<AffinePiece>) -> Result<Self, MeasureError> {
        let invalid = |why: &str| MeasureError::InvalidMeasurement(why.to_string());
        if !mu.is_positive_integer() {
            return Err(invalid("mu must be a positive integer"));
        }
        let mut next = GrossNumber::one();
        for piece in &pieces {
            if !piece.offset.is_integer() {
                return Err(invalid("non-integer offset"));
            }
            if *piece.domain.lo() != next {
                return Err(invalid("piece domains do not tile [1..mu]"));
            }
            next = piece.domain.hi() + &GrossNumber::one();
        }
        if next != &mu + &GrossNumber::one() {
            return Err(invalid("piece domains do not cover [1..mu]"));
        }
        if !images_disjoint(&pieces) {
            return Err(invalid("piece images overlap"));
        }
        Ok(Self::assemble(mu, pieces))
    }

    /// Merges runs of equal offsets and computes the target. Caller has
    /// checked the tiling and disjointness invariants.
    fn assemble(mu: GrossNumber, pieces: Vec<AffinePiece>) -> Self {
        let mut merged: Vec<AffinePiece> = Vec::with_capacity(pieces.len());
        for piece in pieces {
            if let Some(last) = merged.last_mut() {
                if last.offset == piece.offset {
                    last.domain = GrossInterval::new_unchecked(
                        last.domain.lo().clone(),
                        piece.domain.hi().clone(),
                    );
                    continue;
                }
            }
            merged.push(piece);
        }
        let target = IntervalSet::from_intervals(merged.iter().map(AffinePiece::image));
        Measurement {
            mu,
            pieces: merged,
            target,
        }
    }

    pub fn mu(&self) -> &GrossNumber {
        &self.mu
    }

    pub fn pieces(&self) -> &[AffinePiece] {
        &self.pieces
    }

    pub fn target(&self) -> &IntervalSet {
        &self.target
    }

    /// Image of the index `i ∈ [1..μ]`.
    pub fn apply(&self, i: &GrossNumber) -> Option<GrossNumber> {
        let idx = self.pieces.partition_point(|p| p.domain.lo() <= i);
        idx.checked_sub(1).and_then(|k| self.pieces[k].apply(i))
    }

    /// Index of the target element `y`.
    pub fn inverse(&self, y: &GrossNumber) -> Option<GrossNumber> {
        self.pieces
            .iter()
            .find(|p| p.image().contains(y))
            .map(|p| y - &p.offset)
    }

    /// The inverse map as pieces over the target, sorted by target position.
    pub fn inverse_pieces(&self) -> Vec<AffinePiece> {
        let mut inv: Vec<AffinePiece> = self.pieces.iter().map(AffinePiece::inverse).collect();
        inv.sort_by(|a, b| a.domain.lo().cmp(b.domain.lo()));
        inv
    }

    pub fn is_identity(&self) -> bool {
        self.pieces.len() == 1 && self.pieces[0].offset.is_zero()
    }

    /// Every number written in the measurement: μ, piece endpoints, offsets
    /// and target endpoints.
    pub fn numerals(&self) -> Vec<&GrossNumber> {
        let mut out = vec![&self.mu];
        for p in &self.pieces {
            out.extend([p.domain.lo(), p.domain.hi(), &p.offset]);
        }
        for part in self.target.parts() {
            out.extend([part.lo(), part.hi()]);
        }
        out
    }
}

impl fmt::Display for Measurement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&to_text(self, crate::gnum::Glyph::Circled))
    }
}

fn images_disjoint(pieces: &[AffinePiece]) -> bool {
    let mut images: Vec<GrossInterval> = pieces.iter().map(AffinePiece::image).collect();
    images.sort_by(|a, b| a.lo().cmp(b.lo()));
    images.windows(2).all(|w| w[0].hi() < w[1].lo())
}

/// The order-preserving measurement of a nonempty set: its parts are
/// enumerated left to right, each from the next block of indices.
pub fn canonical_measurement(s: &IntervalSet) -> Result<Measurement, MeasureError> {
    if s.is_empty() {
        return Err(MeasureError::EmptySet);
    }
    let mut used = GrossNumber::zero();
    let mut pieces = Vec::with_capacity(s.parts().len());
    for part in s.parts() {
        let start = &used + &GrossNumber::one();
        let len = part.len();
        let end = &used + &len;
        let offset = part.lo() - &start;
        pieces.push(AffinePiece {
            domain: GrossInterval::new_unchecked(start, end.clone()),
            offset,
        });
        used = end;
    }
    Ok(Measurement {
        mu: used,
        pieces,
        target: s.clone(),
    })
}

/// Builds a measurement by repeatedly extracting the least remaining element:
/// `f(1) = min A₁`, `A_{n+1} = A_n \ {f(n)}`.
///
/// The loop runs literally for sets with finite endpoints, at most `bound`
/// extractions. Sets with infinite endpoints cannot be exhausted in finitely
/// many steps; for them the result is the closed form of the same
/// construction, which is [`canonical_measurement`].
pub fn min_extraction_measurement(
    s: &IntervalSet,
    bound: u64,
) -> Result<Measurement, MeasureError> {
    if s.is_empty() {
        return Err(MeasureError::EmptySet);
    }
    if !s.is_finite() {
        return canonical_measurement(s);
    }
    let size = s
        .cardinality()
        .to_bigint()
        .expect("finite endpoints give a finite count");
    if size > bound.into() {
        return Err(MeasureError::BoundExceeded { bound });
    }

    let mut remaining = s.clone();
    let mut pieces: Vec<AffinePiece> = Vec::new();
    let mut n = GrossNumber::zero();
    while let Some(min) = remaining.pop_min() {
        n = &n + &GrossNumber::one();
        let offset = &min - &n;
        match pieces.last_mut() {
            Some(last) if last.offset == offset => {
                last.domain = GrossInterval::new_unchecked(last.domain.lo().clone(), n.clone());
            }
            _ => pieces.push(AffinePiece {
                domain: GrossInterval::new_unchecked(n.clone(), n.clone()),
                offset,
            }),
        }
    }
    Ok(Measurement::assemble(n, pieces))
}

/// Measurement of `A ∪ R` from measurements of disjoint `A` and `R`: indices
/// of `R` are shifted past `♯A`.
pub fn concat(m_a: &Measurement, m_rest: &Measurement) -> Result<Measurement, MeasureError> {
    if !m_a.target.is_disjoint(&m_rest.target) {
        return Err(MeasureError::OverlappingTargets);
    }
    let shift = &m_a.mu;
    let mut pieces = m_a.pieces.clone();
    pieces.extend(m_rest.pieces.iter().map(|p| AffinePiece {
        domain: p.domain.shift(shift),
        offset: &p.offset - shift,
    }));
    Ok(Measurement::assemble(&m_a.mu + &m_rest.mu, pieces))
}

/// Composes piece lists: `outer ∘ inner`, over the part of `inner`'s domain
/// whose image lies in the domains of `outer`. Result is in `inner` order.
fn compose(inner: &[AffinePiece], outer: &[AffinePiece]) -> Vec<AffinePiece> {
    let mut out = Vec::new();
    for p in inner {
        let image = p.image();
        let mut hits: Vec<AffinePiece> = outer
            .iter()
            .filter_map(|q| {
                image.intersect(&q.domain).map(|common| AffinePiece {
                    domain: common.shift(&-&p.offset),
                    offset: &p.offset + &q.offset,
                })
            })
            .collect();
        hits.sort_by(|a, b| a.domain.lo().cmp(b.domain.lo()));
        out.extend(hits);
    }
    out
}

/// Carries a measurement of `m.target` along a piecewise-shift bijection onto
/// another set `T`, giving a measurement of `T` with the same `μ`.
pub fn transport(m: &Measurement, bijection: &[AffinePiece]) -> Result<Measurement, MeasureError> {
    let not_bijection = |why: &str| MeasureError::NotABijection(why.to_string());
    let domains: Vec<GrossInterval> = bijection.iter().map(|p| p.domain.clone()).collect();
    let mut sorted = domains.clone();
    sorted.sort_by(|a, b| a.lo().cmp(b.lo()));
    if sorted.windows(2).any(|w| w[0].hi() >= w[1].lo()) {
        return Err(not_bijection("domains overlap"));
    }
    if IntervalSet::from_intervals(domains) != m.target {
        return Err(not_bijection(
            "domains do not cover the measured set exactly",
        ));
    }
    if !images_disjoint(bijection) {
        return Err(not_bijection("images overlap"));
    }
    if bijection.iter().any(|p| !p.offset.is_integer()) {
        return Err(not_bijection("non-integer offset"));
    }
    let pieces = compose(&m.pieces, bijection);
    Ok(Measurement::assemble(m.mu.clone(), pieces))
}

/// Sign of `♯A − ♯B`. `Negative` or `Zero` means an injection `A → B` exists;
/// see [`injection`].
pub fn compare_measured(m_a: &Measurement, m_b: &Measurement) -> crate::gnum::Sign {
    crate::gnum::cmp(&m_a.mu, &m_b.mu)
}

/// The explicit injection `A → B` sending the `k`-th element of `A` to the
/// `k`-th element of `B` (`m_B ∘ m_A⁻¹`), when `♯A ≤ ♯B`.
pub fn injection(m_a: &Measurement, m_b: &Measurement) -> Option<Vec<AffinePiece>> {
    if m_a.mu > m_b.mu {
        return None;
    }
    Some(compose(&m_a.inverse_pieces(), &m_b.pieces))
}

/// Measurement of `E \ A` for `A ⊆ E`, with `μ = ♯E − ♯A`.
pub fn complement_measurement(
    m_e: &Measurement,
    m_a: &Measurement,
) -> Result<Measurement, MeasureError> {
    if !m_a.target.is_subset(&m_e.target) {
        return Err(MeasureError::NotASubset);
    }
    canonical_measurement(&m_e.target.difference(&m_a.target))
}

/// For `♯A = ♯B`, `A∩B ≠ ∅` and `A ≠ B`: measurements of `A \ (A∩B)` and
/// `B \ (A∩B)`. Both sets are nonempty and equally large.
pub fn intersection_split(
    m_a: &Measurement,
    m_b: &Measurement,
) -> Result<(Measurement, Measurement), MeasureError> {
    let violated = |p| Err(MeasureError::PreconditionViolated(p));
    if m_a.mu != m_b.mu {
        return violated(Precondition::EqualCardinality);
    }
    let common = m_a.target.intersect(&m_b.target);
    if common.is_empty() {
        return violated(Precondition::NonemptyIntersection);
    }
    if m_a.target == m_b.target {
        return violated(Precondition::DistinctSets);
    }
    let d_ab = canonical_measurement(&m_a.target.difference(&common))?;
    let d_ba = canonical_measurement(&m_b.target.difference(&common))?;
    Ok((d_ab, d_ba))
}
