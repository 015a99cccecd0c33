//! Dirichlet-type approximation: for each `Q` some parabolic point with
//! `D ≤ Q` lies within `M/(D·Q)` of α. With `M = 1` this is Dirichlet's
//! theorem for the modular group.
//!
//!     cargo run --example dirichlet [ALPHA] [M]

use bowen_series::harness::AlphaInput;
use bowen_series::numeric::Precision;
use bowen_series::parabolic::{dirichlet_check, DirichletOutcome};
use bowen_series::polygon::{preset_golden_octagon, preset_modular};

fn main() -> bowen_series::Result<()> {
    let mut args = std::env::args().skip(1);
    let alpha = AlphaInput::parse(&args.next().unwrap_or_else(|| "-1+sqrt:3".into()))?;
    let pr = Precision::default();
    let m = pr.parse(&args.next().unwrap_or_else(|| "1".into()))?;
    for p in [preset_modular(pr), preset_golden_octagon(pr)] {
        let x = alpha.to_real(p.bits());
        println!("{}: α = {alpha}, M = {}", p.name(), m.to_f64());
        for q in [10, 100, 1000] {
            match dirichlet_check(&p, &x, &pr.int(q), &m)? {
                DirichletOutcome::Witness { point, denominator, value } => println!(
                    "  Q = {q:>4}: x = {:.10}, D = {:.4}, |α − x|·D·Q = {:.4}",
                    point.to_f64(),
                    denominator.to_f64(),
                    value.to_f64()
                ),
                DirichletOutcome::Failure { best } => println!(
                    "  Q = {q:>4}: none; best |α − x|·D·Q = {}",
                    best.map_or("-".into(), |(_, _, v)| format!("{:.4}", v.to_f64()))
                ),
            }
        }
        println!();
    }
    Ok(())
}
