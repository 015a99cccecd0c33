mod common;

use std::collections::BTreeSet;

use bowen_series::moebius::BoundaryPoint;
use bowen_series::numeric::Real;
use bowen_series::parabolic::{
    dirichlet_check, enumerate_in, enumerate_points, estimate_from, reduced_form, separation_constant,
    DirichletOutcome, Enumeration, ReducedForm,
};
use bowen_series::polygon::{LabelledPolygon, Word};

use common::{golden, modular, surds_in};

/// Reduced fractions in `[0, 1]` with denominator at most `n`.
fn farey(n: i64) -> BTreeSet<(i64, i64)> {
    (1..=n)
        .flat_map(|q| (0..=q).map(move |p| (p, q)))
        .filter(|&(p, q)| gcd(p, q) == 1)
        .collect()
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn fractions(p: &LabelledPolygon, e: &Enumeration) -> BTreeSet<(i64, i64)> {
    let tau = p.tau();
    e.points
        .iter()
        .map(|pt| {
            let q = pt.denominator.to_f64().round() as i64;
            let num = (&pt.point * &pt.denominator).to_f64().round() as i64;
            assert!(pt.denominator.close_to(&p.precision().int(q), &tau), "D = {:?}", pt.denominator);
            (num, q)
        })
        .collect()
}

#[test]
fn modular_points_are_the_farey_fractions() {
    let p = modular();
    let (zero, one) = (p.precision().zero(), p.precision().one());
    for q in 1..=50 {
        let e = enumerate_in(&p, &p.precision().int(q), &zero, &one).unwrap();
        assert!(e.complete);
        assert_eq!(e.len(), farey(q).len(), "Q = {q}");
        assert_eq!(fractions(&p, &e), farey(q), "Q = {q}");
    }
}

/// Every non-reduced spelling `(w·b, ζ′)` of an enumerated point reduces
/// back to the enumerated form.
#[test]
fn reduced_forms_round_trip() {
    for (p, q) in [(modular(), 40), (golden(), 25)] {
        let tau = p.tau() * 10;
        let e = enumerate_points(&p, &p.precision().int(q)).unwrap();
        assert_eq!(e.duplicates, 0);
        let mut spellings = 0;
        for pt in &e.points {
            assert_eq!(reduced_form(&p, &pt.form.word, pt.form.vertex).unwrap(), pt.form);
            assert!(pt.form.point(&p).finite().unwrap().close_to(&pt.point, &tau));
            assert!(pt.form.denominator(&p).close_to(&pt.denominator, &tau));
            let target = p.vertex(pt.form.vertex);
            for b in p.letters() {
                if pt.form.word.last().is_some_and(|m| b == p.inverse(m)) {
                    continue;
                }
                for v in 0..p.size() {
                    let img = BoundaryPoint::from_ext(&p.generator(b).apply(&p.vertex_ext(v)), p.bits());
                    if !img.approx_eq(target, &tau) {
                        continue;
                    }
                    let mut w = pt.form.word.clone();
                    w.push(b);
                    assert_eq!(reduced_form(&p, &w, v).unwrap(), pt.form);
                    spellings += 1;
                }
            }
        }
        assert!(spellings >= e.len(), "only {spellings} alternative spellings");
    }
}

#[test]
fn no_point_is_listed_twice() {
    for (p, q) in [(modular(), 100), (golden(), 60)] {
        let e = enumerate_points(&p, &p.precision().int(q)).unwrap();
        assert_eq!(e.duplicates, 0);
        for pair in e.points.windows(2) {
            assert!(&pair[1].point - &pair[0].point > p.tau());
            assert_ne!(pair[0].form, pair[1].form);
        }
    }
}

/// Both denominator inequalities for reduced forms, recomputed from the
/// definitions with the estimate's `κ₂`.
#[test]
fn denominator_ratios_respect_kappa2() {
    for (p, q) in [(modular(), 100), (golden(), 60)] {
        let e = enumerate_points(&p, &p.precision().int(q)).unwrap();
        let est = estimate_from(&p, &e, &[]).unwrap();
        assert!(est.kappa1.is_positive() && est.kappa2.is_positive());
        let floor = &est.kappa2 * &(p.precision().one() - p.tau());
        let mut checked = 0usize;
        for pt in e.points.iter().filter(|pt| !pt.form.word.is_empty()) {
            let d0 = &pt.denominator;
            let denom = |word: Word, vertex: usize| ReducedForm { word, vertex }.denominator(&p);
            for v in (0..p.size()).filter(|&v| v != pt.form.vertex) {
                let d1 = denom(pt.form.word.clone(), v);
                assert!(*d0 >= &floor * &d1, "{:?} vs vertex {v}", pt.form);
                checked += 1;
            }
            let last = pt.form.word.last().unwrap();
            for b in p.letters().filter(|&b| b != p.inverse(last)) {
                for v in 0..p.size() {
                    let img = BoundaryPoint::from_ext(&p.generator(b).apply(&p.vertex_ext(v)), p.bits());
                    if img.approx_eq(p.vertex(pt.form.vertex), &p.tau()) {
                        continue;
                    }
                    let mut w = pt.form.word.clone();
                    w.push(b);
                    let d2 = denom(w, v);
                    assert!(*d0 >= &floor * &d2, "{:?} then {b:?}, vertex {v}", pt.form);
                    checked += 1;
                }
            }
        }
        assert!(checked > 1000);
    }
}

/// Values from the first run at `Q = 200`, kept as regression bounds: `1`
/// for the modular group and `φ² = (3 + √5)/2` for the octagon.
const FROZEN_S0: [&str; 2] = ["modular", "golden"];

fn frozen(p: &LabelledPolygon, i: usize) -> Real {
    let pr = p.precision();
    match i {
        0 => pr.one(),
        _ => (pr.int(5).sqrt() + 3) / 2,
    }
}

#[test]
fn separation_holds_with_frozen_constant() {
    for (i, p) in [modular(), golden()].into_iter().enumerate() {
        let e = enumerate_points(&p, &p.precision().int(200)).unwrap();
        let s0 = frozen(&p, i);
        let slack = p.precision().one() - p.tau();
        let d_min = e.points.iter().map(|pt| pt.denominator.clone()).reduce(Real::min).unwrap();
        let mut pairs = 0usize;
        for (k, a) in e.points.iter().enumerate() {
            // beyond this gap no partner can violate the bound
            let reach = (&s0 * &a.denominator * &d_min).recip();
            for b in &e.points[k + 1..] {
                let gap = &b.point - &a.point;
                if gap >= reach {
                    break;
                }
                let lhs = &gap * &s0 * &a.denominator * &b.denominator;
                assert!(lhs >= slack, "{}: {} and {}", FROZEN_S0[i], a.point.to_f64(), b.point.to_f64());
                pairs += 1;
            }
        }
        assert!(pairs >= e.len() - 1);
        let est = separation_constant(&e);
        assert!(est <= &s0 * &(p.precision().one() + p.tau()), "{}: S₀ grew to {}", FROZEN_S0[i], est.to_f64());
    }
}

#[test]
fn separation_constant_grows_with_q() {
    let p = modular();
    let s100 = separation_constant(&enumerate_points(&p, &p.precision().int(100)).unwrap());
    let s200 = separation_constant(&enumerate_points(&p, &p.precision().int(200)).unwrap());
    // tangent Ford circles already give 1
    assert!(s100.close_to(&p.precision().one(), &p.tau()) || s100 > p.precision().one());
    assert!(s200 >= s100);
}

#[test]
fn eps0_shrinks_as_q_grows() {
    let p = modular();
    let alphas: Vec<Real> = surds_in(10, 0.05, 0.95, 3).iter().map(|a| a.to_real(p.bits())).collect();
    let (zero, one) = (p.precision().zero(), p.precision().one());
    let at = |q| {
        let e = enumerate_in(&p, &p.precision().int(q), &zero, &one).unwrap();
        estimate_from(&p, &e, &alphas).unwrap()
    };
    let (lo, hi) = (at(100), at(200));
    let (a, b) = (lo.eps0.unwrap(), hi.eps0.unwrap());
    assert!(b <= a, "{} then {}", a.to_f64(), b.to_f64());
    assert!(hi.s0 >= lo.s0);
}

#[test]
fn classical_dirichlet_on_modular() {
    let p = modular();
    let one = p.precision().one();
    for (k, a) in surds_in(20, -2.0, 2.0, 11).iter().enumerate() {
        let alpha = a.to_real(p.bits());
        let q = p.precision().int(50 + 47 * k as i64);
        let out = dirichlet_check(&p, &alpha, &q, &one).unwrap();
        let DirichletOutcome::Witness { denominator, value, .. } = out else { panic!("{}: {out:?}", a.label) };
        assert!(denominator <= q && value <= one);
    }
    let tiny = p.precision().real(1e-6);
    let alpha = surds_in(1, 0.1, 0.9, 5)[0].to_real(p.bits());
    match dirichlet_check(&p, &alpha, &p.precision().int(100), &tiny).unwrap() {
        DirichletOutcome::Failure { .. } => {}
        w => panic!("M = 1e-6 should not be attainable: {w:?}"),
    }
}
