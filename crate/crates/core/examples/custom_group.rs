//! Describing a group of your own. `Γ(2)` on its own — rather than as a
//! subgroup of `PSL(2, ℤ)` — has three cusp classes, at `∞`, `0` and `±1`,
//! each of width 2. The file below says so, and the coding then runs as for
//! the built-in groups.
//!
//!     cargo run --example custom_group

use bowen_series::cuspidal::convergents;
use bowen_series::harness::AlphaInput;
use bowen_series::moebius::BoundaryPoint;
use bowen_series::polygon::{GroupFile, LabelledPolygon};

const GAMMA2: &str = r#"{
  "name": "gamma2",
  "d": 2,
  "letters": [
    { "label": "a", "inverse": "A", "generator_halfplane": ["1", "2", "0", "1"] },
    { "label": "A", "inverse": "a", "generator_halfplane": ["1", "-2", "0", "1"] },
    { "label": "b", "inverse": "B", "generator_halfplane": ["1", "0", "2", "1"] },
    { "label": "B", "inverse": "b", "generator_halfplane": ["1", "0", "-2", "1"] }
  ],
  "cusps": [
    { "A": ["1", "0", "0", "1"], "mu": "2" },
    { "A": ["0", "-1", "1", "0"], "mu": "2" },
    { "A": ["1", "-1", "1", "0"], "mu": "2" }
  ]
}"#;

fn main() -> bowen_series::Result<()> {
    let file = GroupFile::from_json(GAMMA2)?;
    let p = LabelledPolygon::new(file.to_data(None)?)?;
    println!("{}", p.validate());

    // a wrong width is caught
    let mut bad = file.clone();
    bad.cusps[1].mu = "3".into();
    match LabelledPolygon::new(bad.to_data(None)?) {
        Ok(q) => println!("μ = 3 at 0: {}", if q.validate().passed() { "accepted" } else { "rejected" }),
        Err(e) => println!("μ = 3 at 0: rejected ({e})"),
    }

    let alpha = AlphaInput::parse("-1+sqrt:2")?;
    let x = alpha.to_real(p.bits());
    println!("\nconvergents of {alpha}:");
    for rec in convergents(&p, &BoundaryPoint::from_real(&x)).take(8) {
        let rec = rec?;
        let Some(q) = rec.quality(&x) else { continue };
        println!(
            "  ζ = {:>12.8}  D = {:>6.1}  cusp {}  D²|α − ζ| = {:.4}",
            rec.point.to_f64(),
            rec.denominator.to_f64(),
            rec.cusp,
            q.to_f64()
        );
    }
    Ok(())
}
