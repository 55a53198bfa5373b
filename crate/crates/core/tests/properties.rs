use std::collections::BTreeSet;

use grossone::derived::{cmp_defined, define_by_inverse, resolve_finite, DefinitionRegistry};
use grossone::geometry::{half_plane_demo, reflect_strip, RealInterval, Strip};
use grossone::gnum::{cmp, format_numeral, parse_numeral, Glyph};
use grossone::measure::{
    canonical_measurement, complement_measurement, concat, from_json, from_text, injection,
    to_json, to_text,
};
use grossone::numeral_system::NumeralSystem;
use grossone::sets::Direction;
use grossone::{GrossNumber, IntervalSet, Measurement, MonotoneFn, Rational, Sign};
use proptest::prelude::*;

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

fn int(n: i64) -> GrossNumber {
    GrossNumber::from(n)
}

fn g1() -> GrossNumber {
    GrossNumber::grossone()
}

fn rational() -> impl Strategy<Value = Rational> {
    (-30i64..=30, 1i64..=6).prop_map(|(n, d)| q(n, d))
}

fn exponent() -> impl Strategy<Value = Rational> {
    (-4i64..=6, prop::sample::select(vec![1i64, 2, 3])).prop_map(|(n, d)| q(n, d))
}

fn term_list() -> impl Strategy<Value = Vec<(Rational, Rational)>> {
    prop::collection::vec((exponent(), rational()), 0..5)
}

fn gross() -> impl Strategy<Value = GrossNumber> {
    term_list().prop_map(GrossNumber::from_terms)
}

/// Gross-numbers without negative exponents.
fn gross_nonneg() -> impl Strategy<Value = GrossNumber> {
    prop::collection::vec(((0i64..=4, 1i64..=2), rational()), 0..4)
        .prop_map(|ts| GrossNumber::from_terms(ts.into_iter().map(|((n, d), c)| (q(n, d), c))))
}

/// `a·① + b` with small integers.
fn linear(
    a: std::ops::RangeInclusive<i64>,
    b: std::ops::RangeInclusive<i64>,
) -> impl Strategy<Value = GrossNumber> {
    (a, b).prop_map(|(a, b)| &(&int(a) * &g1()) + &int(b))
}

const N: i64 = 200;

fn finite_set() -> impl Strategy<Value = IntervalSet> {
    prop::collection::vec((1..=N, 0i64..12), 0..6).prop_map(|pairs| {
        IntervalSet::make_set(
            pairs
                .into_iter()
                .map(|(lo, len)| (int(lo), int((lo + len).min(N)))),
        )
        .unwrap()
    })
}

/// Unions of intervals whose endpoints are `a① + b`, `a ∈ {0,1,2}`.
fn symbolic_set() -> impl Strategy<Value = IntervalSet> {
    prop::collection::vec((linear(0..=2, -20..=20), 0i64..15, any::<bool>()), 1..5).prop_map(
        |pairs| {
            IntervalSet::make_set(pairs.into_iter().map(|(lo, len, reach)| {
                // some intervals run from a finite point up to an infinite one
                let hi = if reach && lo.is_finite() {
                    &g1() - &int(len)
                } else {
                    &lo + &int(len)
                };
                if hi < lo {
                    (hi, lo)
                } else {
                    (lo, hi)
                }
            }))
            .unwrap()
        },
    )
}

fn elements(s: &IntervalSet) -> BTreeSet<i64> {
    s.parts()
        .iter()
        .flat_map(|p| p.lo().to_i64().unwrap()..=p.hi().to_i64().unwrap())
        .collect()
}

fn from_oracle(e: &BTreeSet<i64>) -> IntervalSet {
    IntervalSet::from_elements(e.iter().map(|&x| int(x))).unwrap()
}

fn check_measurement(m: &Measurement) {
    let one = GrossNumber::one();
    let mut next = one.clone();
    let mut images = IntervalSet::empty();
    for p in m.pieces() {
        assert_eq!(p.domain.lo(), &next, "pieces must tile [1..mu] in order");
        next = p.domain.hi() + &one;
        let image = IntervalSet::from(p.image());
        assert!(images.is_disjoint(&image), "images overlap");
        images = images.union(&image);
        for i in [p.domain.lo(), p.domain.hi()] {
            let y = m.apply(i).unwrap();
            assert!(m.target().contains(&y));
            assert_eq!(m.inverse(&y).as_ref(), Some(i));
        }
    }
    assert_eq!(next, m.mu() + &one);
    assert_eq!(&images, m.target());
}

proptest! {
    #[test]
    fn canonical_form_ignores_term_order(terms in term_list().prop_shuffle(), seed in any::<u64>()) {
        let mut shuffled = terms.clone();
        let k = (seed as usize) % (shuffled.len().max(1));
        shuffled.rotate_left(k);
        shuffled.reverse();
        prop_assert_eq!(GrossNumber::from_terms(terms), GrossNumber::from_terms(shuffled));
    }

    #[test]
    fn ring_laws(x in gross(), y in gross(), z in gross()) {
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&x - &x, GrossNumber::zero());
        prop_assert_eq!(&x * &GrossNumber::one(), x.clone());
    }

    #[test]
    fn order_matches_sign_of_difference(x in gross(), y in gross(), z in gross()) {
        prop_assert_eq!(cmp(&x, &y), (&x - &y).sign());
        prop_assert_eq!(cmp(&y, &x), cmp(&x, &y).negate());
        if cmp(&x, &y) != Sign::Positive && cmp(&y, &z) != Sign::Positive {
            prop_assert_ne!(cmp(&x, &z), Sign::Positive);
        }
        // translation invariance
        prop_assert_eq!(cmp(&(&x + &z), &(&y + &z)), cmp(&x, &y));
    }

    #[test]
    fn parse_format_round_trip(x in gross()) {
        prop_assert_eq!(parse_numeral(&x.to_string()).unwrap(), x.clone());
        prop_assert_eq!(parse_numeral(&format_numeral(&x, Glyph::Ascii)).unwrap(), x);
    }

    #[test]
    fn grossone_powers_dominate_finite_values(p in exponent(), c in rational()) {
        prop_assume!(p > Rational::from_integer(0.into()));
        let power = GrossNumber::monomial(Rational::from_integer(1.into()), p);
        prop_assert_eq!(cmp(&power, &GrossNumber::from(c)), Sign::Positive);
    }

    #[test]
    fn exact_division_undoes_multiplication(x in gross_nonneg(), y in gross_nonneg()) {
        prop_assume!(!y.is_zero());
        prop_assert_eq!((&x * &y).div_exact(&y).unwrap(), x);
    }

    #[test]
    fn set_operations_match_bitset_oracle(a in finite_set(), b in finite_set(), probe in 0..=N + 1) {
        let (ea, eb) = (elements(&a), elements(&b));
        prop_assert_eq!(a.union(&b), from_oracle(&ea.union(&eb).copied().collect()));
        prop_assert_eq!(a.intersect(&b), from_oracle(&ea.intersection(&eb).copied().collect()));
        prop_assert_eq!(a.difference(&b), from_oracle(&ea.difference(&eb).copied().collect()));
        prop_assert_eq!(a.is_subset(&b), ea.is_subset(&eb));
        prop_assert_eq!(a.is_disjoint(&b), ea.is_disjoint(&eb));
        prop_assert_eq!(a.cardinality(), int(ea.len() as i64));
        prop_assert_eq!(a.contains(&int(probe)), ea.contains(&probe));
        prop_assert_eq!(a.min().ok(), ea.first().map(|&x| int(x)));
        prop_assert_eq!(a.max().ok(), ea.last().map(|&x| int(x)));
        // canonical representation: adjacent runs are merged
        for w in a.parts().windows(2) {
            prop_assert!(&(w[0].hi() + &GrossNumber::one()) < w[1].lo());
        }
    }

    #[test]
    fn cardinality_is_additive(a in symbolic_set(), b in symbolic_set()) {
        prop_assert_eq!(
            a.cardinality(),
            &a.intersect(&b).cardinality() + &a.difference(&b).cardinality()
        );
        prop_assert_eq!(
            &a.union(&b).cardinality() + &a.intersect(&b).cardinality(),
            &a.cardinality() + &b.cardinality()
        );
    }

    #[test]
    fn the_part_is_less_than_the_whole(a in symbolic_set(), c in symbolic_set()) {
        let part = a.difference(&c);
        prop_assume!(part != a);
        prop_assert_eq!(cmp(&part.cardinality(), &a.cardinality()), Sign::Negative);
        let m_e = canonical_measurement(&a).unwrap();
        if !part.is_empty() {
            let m_part = canonical_measurement(&part).unwrap();
            let rest = complement_measurement(&m_e, &m_part).unwrap();
            prop_assert!(rest.mu().is_positive());
            prop_assert_eq!(cmp(m_part.mu(), m_e.mu()), Sign::Negative);
        }
    }

    #[test]
    fn affine_maps_preserve_size_and_reverse_order(a in symbolic_set(), offset in linear(-1..=1, -10..=10)) {
        let forward = a.map_affine(Direction::Preserve, &offset).unwrap();
        let backward = a.map_affine(Direction::Reverse, &offset).unwrap();
        prop_assert_eq!(forward.cardinality(), a.cardinality());
        prop_assert_eq!(backward.cardinality(), a.cardinality());
        let (lo, hi) = a.extrema().unwrap();
        prop_assert_eq!(backward.extrema().unwrap(), (&offset - &hi, &offset - &lo));
        prop_assert_eq!(forward.extrema().unwrap(), (&lo + &offset, &hi + &offset));
        prop_assert_eq!(a.iota(&g1()).unwrap().iota(&g1()).unwrap(), a.clone());
        prop_assert_eq!(backward.map_affine(Direction::Reverse, &offset).unwrap(), a);
    }

    #[test]
    fn initial_segments_are_recognised(a in symbolic_set()) {
        let kappa = &(&int(3) * &g1()) + &int(100);
        prop_assume!(a.is_subset(&IntervalSet::interval(int(1), kappa.clone()).unwrap()));
        let expected = (a.parts().len() == 1 && a.min().unwrap() == int(1)).then(|| a.cardinality());
        prop_assert_eq!(a.is_initial_segment(&kappa).unwrap(), expected);
    }

    #[test]
    fn measurements_are_well_formed(a in symbolic_set(), b in finite_set()) {
        let m = canonical_measurement(&a).unwrap();
        prop_assert_eq!(m.mu(), &a.cardinality());
        check_measurement(&m);
        prop_assert_eq!(from_text(&to_text(&m, Glyph::Circled)).unwrap(), m.clone());
        prop_assert_eq!(from_json(&to_json(&m, Glyph::Ascii)).unwrap(), m.clone());

        let shifted = b.map_affine(Direction::Preserve, &(&int(5) * &g1())).unwrap();
        if !shifted.is_empty() && shifted.is_disjoint(&a) {
            let m_b = canonical_measurement(&shifted).unwrap();
            let joined = concat(&m, &m_b).unwrap();
            check_measurement(&joined);
            prop_assert_eq!(joined.mu(), &(m.mu() + m_b.mu()));
            prop_assert_eq!(joined.target(), &a.union(&shifted));
        }
    }

    #[test]
    fn two_way_injections_force_equal_size(a in symbolic_set(), b in symbolic_set()) {
        let (m_a, m_b) = (canonical_measurement(&a).unwrap(), canonical_measurement(&b).unwrap());
        let there = injection(&m_a, &m_b);
        let back = injection(&m_b, &m_a);
        if there.is_some() && back.is_some() {
            prop_assert_eq!(m_a.mu(), m_b.mu());
        }
        if let Some(pieces) = there {
            // the k-th element of A goes to the k-th element of B
            for p in &pieces {
                let x = p.domain.lo();
                let k = m_a.inverse(x).unwrap();
                prop_assert_eq!(p.apply(x), m_b.apply(&k));
            }
        }
    }

    #[test]
    fn measuring_in_a_system_needs_expressible_numerals(
        a in finite_set(),
        digits in 1u32..=3,
        base in 2u32..=10,
        budget in (1u32..=2, 1u32..=3, 1u32..=1),
    ) {
        prop_assume!(!a.is_empty());
        let systems = [
            NumeralSystem::Piraha,
            NumeralSystem::bounded_finite(digits, base).unwrap(),
            NumeralSystem::gross_budget(budget.0, budget.1, budget.2).unwrap(),
        ];
        let m = canonical_measurement(&a).unwrap();
        for sys in systems {
            let all = m.numerals().into_iter().filter(|x| !x.is_zero()).all(|x| sys.expressible(x));
            prop_assert_eq!(sys.measure_in(&a).is_ok(), all, "{}", sys);
        }
    }

    #[test]
    fn larger_budgets_express_more(x in gross(), t in 1u32..=3, c in 1u32..=3, e in 1u32..=2, grow in 0usize..3) {
        let small = NumeralSystem::gross_budget(t, c, e).unwrap();
        let mut dims = [t, c, e];
        dims[grow] += 1;
        let large = NumeralSystem::gross_budget(dims[0], dims[1], dims[2]).unwrap();
        if small.expressible(&x) {
            prop_assert!(large.expressible(&x));
        }
    }

    #[test]
    fn finite_systems_stop_at_phi(digits in 1u32..=4, base in 2u32..=16) {
        let sys = NumeralSystem::bounded_finite(digits, base).unwrap();
        let phi = sys.max_finite().unwrap();
        prop_assert!(sys.expressible(&phi));
        prop_assert!(!sys.expressible(&(&phi + &GrossNumber::one())));
        prop_assert_eq!(phi, int(i64::from(base).pow(digits) - 1));
    }

    #[test]
    fn resolve_matches_linear_scan(kappa in 1i64..=1_000_000, family in 0usize..4) {
        let (g, step): (MonotoneFn, fn(i128) -> i128) = match family {
            0 => (MonotoneFn::pow(2).unwrap(), |x| x * x),
            1 => (MonotoneFn::pow(3).unwrap(), |x| x * x * x),
            2 => (MonotoneFn::exp_base(2.into()).unwrap(), |x| 1i128 << x),
            _ => (MonotoneFn::exp_base(10.into()).unwrap(), |x| 10i128.pow(x as u32)),
        };
        let kappa_big = i128::from(kappa);
        prop_assume!(step(1) <= kappa_big);
        let mut x = 1i128;
        while step(x + 1) <= kappa_big {
            x += 1;
        }
        let d = define_by_inverse(g, int(kappa)).unwrap();
        prop_assert_eq!(resolve_finite(&d).unwrap(), int(x as i64));
    }

    #[test]
    fn defined_comparisons_agree_with_resolution(kappa in 1i64..=100_000, y in 1i64..=400, k in 2u32..=3) {
        let d = define_by_inverse(MonotoneFn::pow(k).unwrap(), int(kappa)).unwrap();
        let x = resolve_finite(&d).unwrap();
        prop_assert_eq!(cmp_defined(&d, &int(y)), Some(cmp(&x, &int(y))));
    }

    #[test]
    fn sqrt_of_grossone_has_infinite_gaps(a in 1i64..=5, b in -50i64..=50) {
        let probe = &(&int(a) * &g1()) + &int(b);
        let gap = MonotoneFn::pow(2).unwrap().gap(&probe).unwrap();
        prop_assert_eq!(gap.clone(), &(&int(2) * &probe) + &GrossNumber::one());
        prop_assert!(gap.is_infinite());
    }

    #[test]
    fn reflection_preserves_length(lo in gross(), len in gross(), axis in gross()) {
        prop_assume!(!len.is_negative());
        let x = RealInterval::new(lo.clone(), &lo + &len).unwrap();
        let strip = Strip { x, y: RealInterval::symmetric(g1()).unwrap() };
        let image = reflect_strip(&strip, &axis);
        prop_assert_eq!(image.x.length(), strip.x.length());
        prop_assert_eq!(&image.y, &strip.y);
        prop_assert_eq!(reflect_strip(&image, &axis), strip);
    }

    #[test]
    fn reflected_half_plane_escapes(a in rational(), gap in 1i64..=20, scale in 1i64..=4, shift in -10i64..=10) {
        let a_g = GrossNumber::from(a);
        let d = &a_g - &GrossNumber::from(q(gap, 3));
        let b = &(&int(scale) * &g1()) + &int(shift);
        let report = half_plane_demo(&a_g, &d, &b, &g1()).unwrap();
        prop_assert!(!report.b_subset_of_a);
        prop_assert!(report.uncovered.length.is_positive());
        prop_assert_eq!(report.uncovered.length, &int(2) * &(&a_g - &d));
        prop_assert!(report.classical.b_subset_of_a);
    }
}

#[test]
fn registry_is_bounded() {
    let mut registry = DefinitionRegistry::with_limit(3);
    for i in 1..=3 {
        let d = define_by_inverse(MonotoneFn::pow(2).unwrap(), int(i)).unwrap();
        registry.register(&format!("d{i}"), d).unwrap();
    }
    let extra = define_by_inverse(MonotoneFn::pow(2).unwrap(), g1()).unwrap();
    assert!(registry.register("d4", extra).is_err());
    assert_eq!(registry.len(), 3);
}
