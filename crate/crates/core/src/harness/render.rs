//! SVG pictures of the horoball packing: a circle of diameter `1/D²` tangent
//! to ℝ at every enumerated point, plus the cusp horoballs.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::numeric::Real;
use crate::parabolic::enumerate_in;
use crate::polygon::{Horoball, LabelledPolygon};

const WIDTH: f64 = 1000.0;
const MARGIN: f64 = 20.0;

/// Deterministic: identical inputs give byte-identical output.
pub fn render_ford(p: &LabelledPolygon, q_max: &Real, viewport: (&Real, &Real)) -> Result<String> {
    let (lo, hi) = viewport;
    if hi <= lo {
        return Err(Error::InvalidInput("empty viewport".into()));
    }
    let e = enumerate_in(p, q_max, lo, hi)?;
    let (x0, x1) = (lo.to_f64(), hi.to_f64());
    let scale = (WIDTH - 2.0 * MARGIN) / (x1 - x0);

    // circles, largest first
    let mut circles: Vec<(f64, f64)> = e
        .points
        .iter()
        .map(|pt| (pt.point.to_f64(), pt.denominator.square().recip().to_f64()))
        .collect();
    let mut lines = Vec::new();
    for c in p.cusps() {
        match c.horoball() {
            Horoball::AtInfinity { height } => lines.push(height.to_f64()),
            Horoball::Tangent { base, diameter } => {
                let (b, d) = (base.to_f64(), diameter.to_f64());
                if b + d / 2.0 >= x0 && b - d / 2.0 <= x1 {
                    circles.push((b, d));
                }
            }
        }
    }
    circles.sort_by(|a, b| b.1.total_cmp(&a.1).then(a.0.total_cmp(&b.0)));
    circles.dedup();

    let top = lines
        .iter()
        .copied()
        .chain(circles.iter().map(|c| c.1))
        .fold(0.0_f64, f64::max)
        .min(x1 - x0);
    let height = (top * scale + 2.0 * MARGIN).ceil().max(2.0 * MARGIN + 1.0);
    let ground = height - MARGIN;
    let sx = |x: f64| MARGIN + (x - x0) * scale;

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH:.0}" height="{height:.0}" viewBox="0 0 {WIDTH:.0} {height:.0}">"#
    );
    let _ = writeln!(svg, r#"<title>{} Q={}</title>"#, p.name(), q_max.to_decimal(12));
    let _ = writeln!(svg, r##"<rect width="100%" height="100%" fill="#ffffff"/>"##);
    let _ = writeln!(svg, r#"<g fill="none" stroke="black" stroke-width="0.6">"#);
    for h in lines {
        let y = ground - h * scale;
        let _ = writeln!(svg, r#"<line class="cusp" x1="{:.4}" y1="{y:.4}" x2="{:.4}" y2="{y:.4}"/>"#, sx(x0), sx(x1));
    }
    for (x, d) in &circles {
        let r = d * scale / 2.0;
        if r < 0.05 {
            continue;
        }
        let _ = writeln!(svg, r#"<circle cx="{:.4}" cy="{:.4}" r="{r:.4}"/>"#, sx(*x), ground - r);
    }
    let _ = writeln!(svg, "</g>");
    let _ = writeln!(
        svg,
        r#"<line x1="{:.4}" y1="{ground:.4}" x2="{:.4}" y2="{ground:.4}" stroke="black" stroke-width="1"/>"#,
        sx(x0),
        sx(x1)
    );
    svg.push_str("</svg>\n");
    Ok(svg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::Precision;
    use crate::polygon::preset_modular;

    #[test]
    fn modular_q5_is_deterministic() {
        let p = preset_modular(Precision::default());
        let (lo, hi) = (p.precision().zero(), p.precision().one());
        let a = render_ford(&p, &p.precision().int(5), (&lo, &hi)).unwrap();
        let b = render_ford(&p, &p.precision().int(5), (&lo, &hi)).unwrap();
        assert_eq!(a, b);
        // 11 Farey fractions, radius 1/(2q²) in view units
        assert_eq!(a.matches("<circle").count(), 11);
        assert!(a.contains(r#"class="cusp""#));
    }

    #[test]
    fn tiny_q_draws_only_the_cusp() {
        let p = preset_modular(Precision::default());
        let (lo, hi) = (p.precision().zero(), p.precision().one());
        let s = render_ford(&p, &p.precision().real(0.5), (&lo, &hi)).unwrap();
        assert_eq!(s.matches("<circle").count(), 0);
        assert_eq!(s.matches(r#"class="cusp""#).count(), 1);
    }
}
