//! Batch checks over many sets or measurements.
//!
//! Each function takes an [`Execution`] mode. With the `parallel` feature
//! (on by default) `Execution::Parallel` fans the batch out over rayon's
//! global pool; without it, both modes run sequentially.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::gnum::{cmp, GrossNumber, Sign};
use crate::measure::{self, compare_measured, MeasureError, Measurement};
use crate::sets::IntervalSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

impl Execution {
    /// True when this mode actually runs on more than one thread.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Execution::Parallel
    }
}

/// `items.map(f)` in the requested mode, preserving order.
pub fn map<T, R, F>(items: &[T], exec: Execution, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => items.par_iter().map(f).collect(),
        _ => items.iter().map(f).collect(),
    }
}

pub fn cardinalities(sets: &[IntervalSet], exec: Execution) -> Vec<GrossNumber> {
    map(sets, exec, IntervalSet::cardinality)
}

/// Compares the canonical and min-extraction measurements of each set index
/// by index. Returns the positions where they disagree or either fails.
pub fn extraction_mismatches(sets: &[IntervalSet], bound: u64, exec: Execution) -> Vec<usize> {
    let agree = |s: &IntervalSet| -> Result<bool, MeasureError> {
        let canonical = measure::canonical_measurement(s)?;
        let extracted = measure::min_extraction_measurement(s, bound)?;
        if canonical.mu() != extracted.mu() {
            return Ok(false);
        }
        let Some(mu) = canonical.mu().to_i64() else {
            return Ok(canonical == extracted);
        };
        Ok((1..=mu).all(|i| {
            let i = GrossNumber::from(i);
            canonical.apply(&i) == extracted.apply(&i)
        }))
    };
    map(sets, exec, |s| matches!(agree(s), Ok(true)))
        .into_iter()
        .enumerate()
        .filter_map(|(i, ok)| (!ok).then_some(i))
        .collect()
}

/// Positions of `(whole, part)` pairs where `part` is not a proper subset of
/// `whole` with strictly fewer elements.
pub fn proper_subset_violations(
    pairs: &[(IntervalSet, IntervalSet)],
    exec: Execution,
) -> Vec<usize> {
    let holds = |(whole, part): &(IntervalSet, IntervalSet)| {
        part.is_subset(whole)
            && part != whole
            && cmp(&part.cardinality(), &whole.cardinality()) == Sign::Negative
    };
    map(pairs, exec, holds)
        .into_iter()
        .enumerate()
        .filter_map(|(i, ok)| (!ok).then_some(i))
        .collect()
}

/// Positions of pairs that admit injections both ways but differ in size.
pub fn two_way_injection_violations(
    pairs: &[(Measurement, Measurement)],
    exec: Execution,
) -> Vec<usize> {
    let holds = |(a, b): &(Measurement, Measurement)| {
        let both_ways =
            compare_measured(a, b) != Sign::Positive && compare_measured(b, a) != Sign::Positive;
        !both_ways || (a.mu() == b.mu() && compare_measured(a, b) == Sign::Zero)
    };
    map(pairs, exec, holds)
        .into_iter()
        .enumerate()
        .filter_map(|(i, ok)| (!ok).then_some(i))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gnum::parse_numeral;
    use crate::measure::canonical_measurement;

    fn set(pairs: &[(&str, &str)]) -> IntervalSet {
        let g = |s: &str| parse_numeral(s).unwrap();
        IntervalSet::make_set(pairs.iter().map(|(a, b)| (g(a), g(b)))).unwrap()
    }

    #[test]
    fn modes_agree() {
        let sets: Vec<IntervalSet> = (1..40)
            .map(|n| {
                set(&[
                    ("1", &n.to_string()),
                    (&(n + 5).to_string(), &(2 * n + 5).to_string()),
                ])
            })
            .collect();
        for exec in [Execution::Sequential, Execution::Parallel] {
            assert!(extraction_mismatches(&sets, 1000, exec).is_empty());
        }
        assert_eq!(
            cardinalities(&sets, Execution::Sequential),
            cardinalities(&sets, Execution::Parallel)
        );
        // bound too small: every set is reported
        assert_eq!(
            extraction_mismatches(&sets[..3], 2, Execution::Parallel),
            vec![0, 1, 2]
        );
    }

    #[test]
    fn subset_and_injection_checks() {
        let pairs = vec![
            (set(&[("1", "①")]), set(&[("2", "①-1")])),
            (set(&[("1", "5")]), set(&[("1", "5")])),
            (set(&[("1", "5")]), set(&[("4", "6")])),
        ];
        assert_eq!(
            proper_subset_violations(&pairs, Execution::Parallel),
            vec![1, 2]
        );

        let m = |pairs: &[(&str, &str)]| canonical_measurement(&set(pairs)).unwrap();
        let ms = vec![
            (m(&[("1", "①")]), m(&[("5", "①+4")])),
            (m(&[("1", "①")]), m(&[("1", "①+1")])),
        ];
        assert!(two_way_injection_violations(&ms, Execution::Sequential).is_empty());
    }
}
