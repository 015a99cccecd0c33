//! Built-in groups. Matrices are given in the half-plane and conjugated into
//! the disc when the polygon is built.

use super::{GroupData, LabelledPolygon};
use crate::moebius::RealMoebius;
use crate::numeric::{Precision, Real};

fn labels(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

/// `PSL(2, ℤ)` as ambient lattice, coded through the free index-6 subgroup
/// `Γ(2) = ⟨z + 2, z/(2z + 1)⟩`. The polygon is the ideal quadrilateral with
/// vertices `−1, 0, 1, ∞`; one cusp class, `A = id`, `μ = 1`.
pub fn modular_data(precision: Precision) -> GroupData {
    let bits = precision.bits;
    let m = |v| RealMoebius::from_ints(v, bits);
    GroupData {
        name: "modular".into(),
        precision,
        labels: labels(&["a", "A", "b", "B"]),
        inverse: vec![1, 0, 3, 2],
        generators: vec![m([1, 2, 0, 1]), m([1, -2, 0, 1]), m([1, 0, 2, 1]), m([1, 0, -2, 1])],
        cusps: vec![(m([1, 0, 0, 1]), Real::int(1, bits))],
        // S, T, ST, TS, TST: with the identity, representatives of PSL(2,ℤ)/Γ(2)
        cosets: vec![
            m([0, -1, 1, 0]),
            m([1, 1, 0, 1]),
            m([0, -1, 1, 1]),
            m([1, -1, 1, 0]),
            m([1, 0, 1, 1]),
        ],
    }
}

pub fn preset_modular(precision: Precision) -> LabelledPolygon {
    LabelledPolygon::new(modular_data(precision)).expect("modular preset validates")
}

/// A non-arithmetic example: the free group on four generators pairing the
/// sides of the ideal octagon with vertices `0, ±1/φ, ±1, ±φ, ∞`, where `φ`
/// is the golden ratio. Traces such as `2φ³` are irrational, so the group is
/// not commensurable with `PSL(2, ℤ)`. The ambient lattice is the group
/// itself, which has five cusp classes.
pub fn golden_octagon_data(precision: Precision) -> GroupData {
    let bits = precision.bits;
    let one = Real::int(1, bits);
    let zero = Real::zero(bits);
    let phi = (Real::int(5, bits).sqrt() + 1) / 2;
    let phi2 = phi.square();
    let phi3 = &phi2 * &phi;
    let two_phi = &phi * 2;
    let two_phi2 = &phi2 * 2;

    let ga = RealMoebius::translation(two_phi.clone());
    let gb = RealMoebius::new(phi3.clone(), two_phi2.clone(), two_phi.clone(), phi3.clone());
    let gc = RealMoebius::new(phi3.clone(), two_phi.clone(), two_phi2, phi3);
    let gd = RealMoebius::new(one.clone(), zero.clone(), two_phi.clone(), one.clone());

    // z ↦ x − 1/z sends ∞ to x
    let chart = |x: &Real| RealMoebius::new(x.clone(), -&one, one.clone(), zero.clone());
    let width = |p: &RealMoebius, a: &RealMoebius| {
        let y = a.inverse().compose(p).compose(a);
        (y.b() / y.d()).abs()
    };
    let s = chart(&zero);
    let a_phi = chart(&phi);
    let a_one = chart(&one);
    let a_inv_phi = chart(&phi.recip());
    // the stabilisers of φ, 1 and 1/φ come from the vertex cycles φ ~ −φ,
    // 1 ~ −1 and 1/φ ~ −1/φ
    let mu_phi = width(&ga.compose(&gb.inverse()), &a_phi);
    let mu_one = width(&gb.compose(&gc.inverse()), &a_one);
    let mu_inv_phi = width(&gc.compose(&gd.inverse()), &a_inv_phi);
    let mu_zero = width(&gd, &s);

    GroupData {
        name: "golden-octagon".into(),
        precision,
        labels: labels(&["a", "A", "b", "B", "c", "C", "d", "D"]),
        inverse: vec![1, 0, 3, 2, 5, 4, 7, 6],
        generators: vec![
            ga.clone(),
            ga.inverse(),
            gb.clone(),
            gb.inverse(),
            gc.clone(),
            gc.inverse(),
            gd.clone(),
            gd.inverse(),
        ],
        cusps: vec![
            (RealMoebius::identity(bits), two_phi),
            (s, mu_zero),
            (a_phi, mu_phi),
            (a_one, mu_one),
            (a_inv_phi, mu_inv_phi),
        ],
        cosets: Vec::new(),
    }
}

pub fn preset_golden_octagon(precision: Precision) -> LabelledPolygon {
    LabelledPolygon::new(golden_octagon_data(precision)).expect("golden octagon validates")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::moebius::MoebiusKind;
    use crate::numeric::ExtReal;
    use crate::polygon::validate;

    #[test]
    fn modular_validates() {
        let report = validate(&modular_data(Precision::default()));
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn modular_vertices_and_order() {
        let p = preset_modular(Precision::default());
        let mut xs: Vec<f64> = (0..4).map(|i| p.vertex_ext(i).to_f64()).collect();
        xs.sort_by(f64::total_cmp);
        assert_eq!(xs, vec![-1.0, 0.0, 1.0, f64::INFINITY]);
        // clockwise: a = (1, ∞], b = (0, 1], B = (−1, 0], A = [−∞, −1]
        let order: Vec<&str> = (0..4).map(|i| p.label(p.letter_at(i))).collect();
        assert_eq!(order, vec!["a", "b", "B", "A"]);
        let a = p.alphabet().by_label("a").unwrap();
        assert!(p.vertex_ext(p.left_vertex(a)).is_infinite());
        assert_eq!(p.vertex_ext(p.right_vertex(a)).to_f64(), 1.0);
    }

    #[test]
    fn modular_vertex_cycles_are_parabolic() {
        let p = preset_modular(Precision::default());
        for a in p.letters() {
            let cycle = p.vertex_cycle(a);
            let g = p.word_map(&cycle);
            assert_eq!(g.classify(&p.tau()), MoebiusKind::Parabolic);
        }
        let a = p.alphabet().by_label("a").unwrap();
        let labels: Vec<&str> = p.vertex_cycle(a).iter().map(|&l| p.label(l)).collect();
        assert_eq!(labels, vec!["a", "B"]);
    }

    #[test]
    fn cusp_widths() {
        // Γ(2) has index 6: every cusp is twice as wide as in PSL(2, Z)
        let p = preset_modular(Precision::default());
        for v in 0..p.size() {
            assert!(p.cusp_width(v).close_to(&p.precision().int(2), &p.tau()), "vertex {v}");
        }
        let g = preset_golden_octagon(Precision::default());
        for v in 0..g.size() {
            let mu = &g.cusps()[g.chart(v).cusp].mu;
            assert!(g.cusp_width(v).close_to(mu, &g.tau()), "vertex {v}");
        }
    }

    #[test]
    fn replacing_a_generator_by_its_inverse_breaks_pairing() {
        let mut data = modular_data(Precision::default());
        data.generators[2] = data.generators[2].inverse();
        let report = validate(&data);
        assert!(!report.check("side pairing").unwrap().passed || !report.check("inverse pairs").unwrap().passed);
        assert!(!report.passed());
    }

    #[test]
    fn arcs_with_a_gap_fail_partition() {
        let mut data = modular_data(Precision::default());
        // z + 3 has a smaller isometric circle than z + 2: the arcs no longer meet
        let bits = data.precision.bits;
        data.generators[0] = RealMoebius::from_ints([1, 3, 0, 1], bits);
        data.generators[1] = RealMoebius::from_ints([1, -3, 0, 1], bits);
        let report = validate(&data);
        assert!(!report.check("arc partition").unwrap().passed, "{report}");
    }

    #[test]
    fn golden_octagon_validates() {
        let report = validate(&golden_octagon_data(Precision::default()));
        assert!(report.passed(), "{report}");
        let p = preset_golden_octagon(Precision::default());
        assert_eq!(p.cusps().len(), 5);
        let tr = p.generator(p.alphabet().by_label("b").unwrap()).trace();
        // 2φ³ = 4 + 2√5 is irrational
        assert!((tr.to_f64() - (4.0 + 2.0 * 5f64.sqrt())).abs() < 1e-12);
    }

    #[test]
    fn modular_denominator_of_zero() {
        let p = preset_modular(Precision::default());
        let v0 = p.vertex_index(&crate::moebius::BoundaryPoint::from_ext(
            &ExtReal::Finite(Real::zero(p.bits())),
            p.bits(),
        ));
        let chart = p.chart(v0.unwrap());
        let x = chart.to_vertex(p.cusps());
        assert_eq!(x.c().abs().to_f64(), 1.0);
    }
}
