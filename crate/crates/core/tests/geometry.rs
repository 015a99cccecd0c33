mod common;

use bowen_series::moebius::{BoundaryPoint, RealMoebius};
use bowen_series::numeric::{Complex, ExtReal, Precision, Real};
use proptest::prelude::*;

use common::{admissible, both, choices};

fn pr() -> Precision {
    Precision::default()
}

fn ten_tau() -> Real {
    pr().tau() * 10
}

/// `[[a, b], [c, (1 + bc)/a]]`.
fn unimodular() -> impl Strategy<Value = RealMoebius> {
    (0.2f64..5.0, -5.0f64..5.0, -5.0f64..5.0).prop_map(|(a, b, c)| {
        let p = pr();
        let (a, b, c) = (p.real(a), p.real(b), p.real(c));
        let d = (&b * &c + 1) / &a;
        RealMoebius::new(a, b, c, d)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn composition_keeps_determinant(g in unimodular(), h in unimodular()) {
        let det = g.compose(&h).det();
        prop_assert!(det.close_to(&pr().one(), &ten_tau()));
    }

    #[test]
    fn disc_model_is_a_homomorphism(g in unimodular(), h in unimodular()) {
        let lhs = g.compose(&h).to_disk();
        let rhs = g.to_disk().compose(&h.to_disk());
        prop_assert!(lhs.approx_eq(&rhs, &ten_tau()));
        prop_assert!(g.to_disk().to_half_plane().approx_eq(&g, &ten_tau()));
        prop_assert!(g.to_disk().det().close_to(&pr().one(), &ten_tau()));
    }

    #[test]
    fn boundary_action_commutes_with_cayley(g in unimodular(), x in -10.0f64..10.0) {
        let x = pr().real(x);
        let direct = BoundaryPoint::from_ext(&g.apply_real(&x), pr().bits);
        let via_disc = g.to_disk().apply_boundary(&BoundaryPoint::from_real(&x));
        prop_assert!(direct.approx_eq(&via_disc, &ten_tau()));
    }

    #[test]
    fn sign_is_canonical(g in unimodular()) {
        let [a, b, c, d] = g.coefficients().map(|x| -x.clone());
        let neg = RealMoebius::new(a, b, c, d);
        prop_assert_eq!(neg.coefficients(), g.coefficients());
    }

    #[test]
    fn inverse_undoes(g in unimodular(), x in -10.0f64..10.0) {
        let x = ExtReal::Finite(pr().real(x));
        let back = g.inverse().apply(&g.apply(&x));
        prop_assert!(back.finite().unwrap().close_to(x.finite().unwrap(), &ten_tau()));
    }

    /// `F(I_F) = I_{F⁻¹}` with equal radii, for generators and words.
    #[test]
    fn isometric_circles_are_exchanged(which in 0usize..2, cs in choices(8), t in 0.0f64..6.3) {
        let p = &both()[which];
        let w = admissible(p, &cs);
        let f = p.disk_word_map(w.letters());
        let (Ok(i_f), Ok(i_inv)) = (f.isometric_circle(), f.inverse().isometric_circle()) else {
            // β = 0: F is a rotation, which words of side pairings never are
            return Err(TestCaseError::fail("word map fixes the centre"));
        };
        prop_assert!(i_f.radius.close_to(&i_inv.radius, &ten_tau()));
        let (s, c) = pr().real(t).sin_cos();
        let z = Complex::new(&i_f.center.re + &(&i_f.radius * &c), &i_f.center.im + &(&i_f.radius * &s));
        let image = f.apply(&z);
        prop_assert!(image.dist(&i_inv.center).close_to(&i_inv.radius, &ten_tau()));
        prop_assert!(f.derivative_abs(&z).close_to(&pr().one(), &ten_tau()));
    }

    /// The image of `{Im z > t}` has diameter `1/(c²t)`: compare with the
    /// highest sampled image point, found by golden-section search.
    #[test]
    fn horoball_diameter_matches_images(g in unimodular(), t in 0.3f64..3.0) {
        prop_assume!(g.c().abs() > pr().real(1e-3));
        let t = pr().real(t);
        let height = |x: &Real| g.apply_complex(&Complex::new(x.clone(), t.clone())).im;
        let centre = -(g.d() / g.c());
        let reach = (g.c().abs().recip() + &t) * 4;
        let (mut lo, mut hi) = (&centre - &reach, &centre + &reach);
        let ratio = (pr().int(5).sqrt() - 1) / 2;
        for _ in 0..220 {
            let m1 = &hi - &(&(&hi - &lo) * &ratio);
            let m2 = &lo + &(&(&hi - &lo) * &ratio);
            if height(&m1) < height(&m2) { lo = m1 } else { hi = m2 }
        }
        let sup = height(&((&lo + &hi) / 2));
        let ExtReal::Finite(formula) = g.horoball_diameter(&t) else { unreachable!() };
        prop_assert!(sup.close_to(&formula, &ten_tau()), "{} vs {}", sup.to_f64(), formula.to_f64());
    }
}

#[test]
fn generators_exchange_their_sides() {
    for p in both() {
        for a in p.letters() {
            let f = p.disk_generator(a);
            let i_f = f.isometric_circle().unwrap();
            let i_inv = p.disk_generator(p.inverse(a)).isometric_circle().unwrap();
            assert!(i_f.radius.close_to(&i_inv.radius, &ten_tau()));
            // the side arc of â is carried onto the complement side of a
            let arc = p.arc(p.inverse(a)).image(f);
            let target = p.arc(a);
            assert!(arc.left.approx_eq(&target.right, &ten_tau()) || arc.right.approx_eq(&target.left, &ten_tau()));
        }
    }
}
