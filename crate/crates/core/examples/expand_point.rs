//! Boundary expansion of a point, its shrinking cylinders, and decoding the
//! letters back into a point.
//!
//!     cargo run --example expand_point [ALPHA]
//!
//! ALPHA is a decimal, a fraction, or a quadratic surd such as `(1+sqrt:5)/2`.

use bowen_series::expansion::{cylinder, decode, expand};
use bowen_series::harness::AlphaInput;
use bowen_series::moebius::BoundaryPoint;
use bowen_series::numeric::Precision;
use bowen_series::polygon::{preset_golden_octagon, preset_modular};

fn main() -> bowen_series::Result<()> {
    let alpha = AlphaInput::parse(&std::env::args().nth(1).unwrap_or_else(|| "sqrt:2".into()))?;
    let pr = Precision::default();
    for p in [preset_modular(pr), preset_golden_octagon(pr)] {
        let xi = BoundaryPoint::from_real(&alpha.to_real(p.bits()));
        let w = expand(&p, &xi, 60)?;
        println!("{}: α = {alpha}", p.name());
        println!("  {}", w.display(p.alphabet()));
        for k in [1, 5, 10, 20, 40, 60] {
            let c = cylinder(&p, &w.prefix(k))?;
            println!("  depth {k:>2}: cylinder diameter {:.3e}", c.diameter().to_f64());
        }
        let back = decode(&p, w.letters().iter().copied(), 60, &pr.real(1e-12))?;
        let x = back.point.to_ext();
        println!(
            "  decoded after {} letters: {} (error ≤ {:.1e})\n",
            back.depth,
            x.to_decimal(15),
            back.error_bound.to_f64()
        );
    }
    Ok(())
}
