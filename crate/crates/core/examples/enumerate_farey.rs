//! Parabolic points by denominator. For the modular group these are the
//! Farey fractions; for the octagon they are the orbits of its five cusps.
//!
//!     cargo run --example enumerate_farey [Q]

use bowen_series::numeric::Precision;
use bowen_series::parabolic::{enumerate_in, enumerate_points};
use bowen_series::polygon::{preset_golden_octagon, preset_modular};

fn main() -> bowen_series::Result<()> {
    let q: i64 = std::env::args().nth(1).map_or(Ok(7), |s| s.parse()).expect("Q is an integer");
    let pr = Precision::default();

    let p = preset_modular(pr);
    let e = enumerate_in(&p, &pr.int(q), &pr.zero(), &pr.one())?;
    let fractions: Vec<String> = e
        .points
        .iter()
        .map(|pt| {
            let d = pt.denominator.to_f64().round();
            format!("{}/{}", (pt.point.to_f64() * d).round(), d)
        })
        .collect();
    println!("modular, D ≤ {q} in [0, 1]: {} points", e.len());
    println!("  {}", fractions.join(" "));

    let p = preset_golden_octagon(pr);
    let e = enumerate_points(&p, &pr.int(q))?;
    println!("\ngolden octagon, D ≤ {q}: {} points, {} tree nodes", e.len(), e.nodes);
    for pt in e.points.iter().take(12) {
        println!(
            "  {:>10.6}  D = {:>8.4}  cusp {}  word {}",
            pt.point.to_f64(),
            pt.denominator.to_f64(),
            pt.cusp,
            pt.form.word.display(p.alphabet())
        );
    }
    Ok(())
}
