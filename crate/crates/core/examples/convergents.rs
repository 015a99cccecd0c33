//! Convergents `ζ_r` of a point: the parabolic point each cuspidal word
//! points at, its denominator, and how `D²|α − ζ_r|` compares with the
//! lower bound `1/(|W| + 2μ)`. The upper bound is `1/|W|`.
//!
//!     cargo run --example convergents [ALPHA]
//!
//! For the modular group the convergents are among the continued-fraction
//! convergents of α; the last column shows the fraction.

use bowen_series::cuspidal::convergents;
use bowen_series::harness::AlphaInput;
use bowen_series::moebius::BoundaryPoint;
use bowen_series::numeric::Precision;
use bowen_series::polygon::{preset_golden_octagon, preset_modular};

fn main() -> bowen_series::Result<()> {
    let alpha = AlphaInput::parse(&std::env::args().nth(1).unwrap_or_else(|| "(1+sqrt:13)/4".into()))?;
    let pr = Precision::default();
    for p in [preset_modular(pr), preset_golden_octagon(pr)] {
        let x = alpha.to_real(p.bits());
        let mu = p.mu_max().to_f64();
        println!("{}: α = {alpha}, μ = {mu:.4}", p.name());
        println!("  {:>3} {:>4} {:>8} {:>12} {:>10} {:>10}", "r", "|W|", "|W|_geo", "D", "D²|α−ζ|", "1/(|W|+2μ)");
        for rec in convergents(&p, &BoundaryPoint::from_real(&x)).take(14) {
            let rec = rec?;
            let Some(q) = rec.quality(&x) else { continue };
            let l = rec.length.to_f64();
            let mut line = format!(
                "  {:>3} {:>4} {:>8.4} {:>12.4} {:>10.6} {:>10.6}",
                rec.index,
                rec.word.len(),
                l,
                rec.denominator.to_f64(),
                q.to_f64(),
                1.0 / (l + 2.0 * mu)
            );
            if p.name() == "modular" {
                let (num, den) = ((rec.point.finite().unwrap() * &rec.denominator).to_f64(), rec.denominator.to_f64());
                line += &format!("  {}/{}", num.round(), den.round());
            }
            println!("{line}");
        }
        println!();
    }
    Ok(())
}
