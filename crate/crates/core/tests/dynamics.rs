mod common;

use bowen_series::cuspidal::{
    accelerate, anchor_is_common_endpoint, cuspidal_type, geometric_length, geometric_length_in_chart, CuspType,
    CuspidalWord,
};
use bowen_series::expansion::{bs_step, cylinder, expand, locate};
use bowen_series::moebius::{BoundaryPoint, RealMoebius};
use bowen_series::polygon::{LabelledPolygon, Letter, Word};
use bowen_series::Result;
use proptest::prelude::*;

use common::{admissible, both, both_deep, modular, surd};

fn point(p: &LabelledPolygon, a: &bowen_series::harness::AlphaInput) -> BoundaryPoint {
    BoundaryPoint::from_real(&a.to_real(p.bits()))
}

fn words(p: &LabelledPolygon, letters: &Word) -> Vec<CuspidalWord> {
    accelerate(p, letters.letters().iter().map(|&a| Ok(a)))
        .collect::<Result<_>>()
        .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    /// Iterating the boundary map one step at a time reads off the same
    /// letters as the composed expansion.
    #[test]
    fn shift_conjugacy(which in 0usize..2, a in surd()) {
        let p = &both()[which];
        let xi = point(p, &a);
        let letters = expand(p, &xi, 40).unwrap();
        let mut x = xi;
        for (k, &expected) in letters.letters().iter().enumerate() {
            prop_assert_eq!(locate(p, &x).unwrap(), expected, "step {}", k);
            x = bs_step(p, &x).unwrap();
        }
    }

    #[test]
    fn expansions_never_backtrack(which in 0usize..2, a in surd()) {
        let p = &both_deep()[which];
        let w = expand(p, &point(p, &a), 300).unwrap();
        prop_assert!(w.check_admissible(p.alphabet()).is_ok());
    }

    /// Letters come from a deep expansion; the cylinders are then built at
    /// the working precision of each polygon.
    #[test]
    fn cylinders_nest_and_shrink(which in 0usize..2, a in surd()) {
        let deep = &both_deep()[which];
        let w = expand(deep, &point(deep, &a), 200).unwrap();
        for (p, strict) in [(deep, true), (&both()[which], false)] {
            let xi = point(p, &a);
            let tol = p.tau() * 10;
            let mut outer = cylinder(p, &w.prefix(1)).unwrap();
            for k in 2..=200 {
                if !strict && *outer.diameter() < p.tau() {
                    // below what the working precision resolves
                    break;
                }
                let inner = cylinder(p, &w.prefix(k)).unwrap();
                prop_assert!(outer.arc.contains_arc(&inner.arc, &tol), "depth {}", k);
                prop_assert!(inner.diameter() < outer.diameter(), "depth {}", k);
                prop_assert!(inner.arc.contains(&xi) || inner.arc.endpoint_distance(&xi) < tol);
                outer = inner;
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    /// The words reproduce the expansion, each is maximal, and the prefixes
    /// of each share the anchor endpoint.
    #[test]
    fn decomposition_is_faithful_and_maximal(which in 0usize..2, a in surd()) {
        let p = &both_deep()[which];
        let letters = expand(p, &point(p, &a), 500).unwrap();
        let ws = words(p, &letters);
        let joined: Vec<Letter> = ws.iter().flat_map(|w| w.word.letters().to_vec()).collect();
        // the last word may still be growing when the input stops
        prop_assert_eq!(&joined[..], letters.letters());
        for pair in ws.windows(2) {
            let mut longer = pair[0].word.clone();
            longer.push(pair[1].word.first().unwrap());
            prop_assert_eq!(cuspidal_type(p, &longer).unwrap(), CuspType::NotCuspidal);
            prop_assert_eq!(pair[1].start, pair[0].start + pair[0].len());
        }
        for w in ws.iter().filter(|w| w.len() >= 2) {
            prop_assert!(anchor_is_common_endpoint(p, w).unwrap());
        }
    }

    /// Moving the chart by the stabiliser of its cusp leaves `|W|` alone.
    #[test]
    fn length_is_chart_independent(which in 0usize..2, a in surd()) {
        let p = &both_deep()[which];
        let letters = expand(p, &point(p, &a), 200).unwrap();
        let tol = p.tau() * 10;
        for w in words(p, &letters).iter().filter(|w| w.len() >= 2) {
            let chart = p.chart(w.anchor_vertex(p));
            let cusp = &p.cusps()[chart.cusp];
            let base = geometric_length(p, w).unwrap();
            for k in [1i64, -1, 3] {
                let shift = RealMoebius::translation(&cusp.mu * k);
                let alt = chart.to_vertex(p.cusps()).compose(&shift);
                let l = geometric_length_in_chart(p, w, &alt).unwrap();
                prop_assert!(l.close_to(&base, &tol));
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    /// A random expansion: 200 uniformly chosen admissible letters. (Single
    /// points can sit close to a cusp and linger there for hundreds of
    /// letters while the cylinders shrink only like `1/n²`.)
    #[test]
    fn random_modular_expansions_are_tiny_by_depth_200(cs in prop::collection::vec(0usize..64, 200)) {
        let p = modular();
        let w = admissible(&p, &cs);
        let mut last = cylinder(&p, &w.prefix(1)).unwrap().diameter().clone();
        for k in 2..=200 {
            let d = cylinder(&p, &w.prefix(k)).unwrap().diameter().clone();
            if last < p.tau() {
                break;
            }
            prop_assert!(d < last, "depth {}", k);
            last = d;
        }
        prop_assert!(last.to_f64() < 1e-6);
    }
}
