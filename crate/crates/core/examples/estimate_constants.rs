//! Numerical estimates of the group constants `S₀`, `κ₁`, `κ₂` and `ε₀` from
//! an enumeration, for a sample of quadratic irrationals.
//!
//!     cargo run --release --example estimate_constants [Q]

use bowen_series::harness::AlphaInput;
use bowen_series::numeric::{Precision, Real};
use bowen_series::parabolic::{default_window, estimate_constants};
use bowen_series::polygon::{preset_golden_octagon, preset_modular};

fn main() -> bowen_series::Result<()> {
    let q: i64 = std::env::args().nth(1).map_or(Ok(150), |s| s.parse()).expect("Q is an integer");
    let pr = Precision::default();
    let surds = ["-1+sqrt:2", "(-1+sqrt:6)/2", "(-3+sqrt:13)/4", "(1-sqrt:3)/2", "(-2+sqrt:7)/3", "(2-sqrt:11)/5"];
    for p in [preset_modular(pr), preset_golden_octagon(pr)] {
        let (lo, hi) = default_window(&p);
        let alphas: Vec<Real> = surds
            .iter()
            .map(|s| AlphaInput::parse(s).unwrap().to_real(p.bits()))
            .filter(|a| *a > lo && *a < hi)
            .collect();
        let est = estimate_constants(&p, &pr.int(q), &alphas)?;
        let show = |x: &Option<Real>| x.as_ref().map_or("-".into(), |x| format!("{:.4}", x.to_f64()));
        println!("{} at Q = {q} ({} points, {} α):", p.name(), est.points, est.alphas_used);
        println!("  S₀ = {:.4}", est.s0.to_f64());
        println!("  κ₁ = {:.4}", est.kappa1.to_f64());
        println!("  κ₂ = {:.4}", est.kappa2.to_f64());
        println!("  ε₀ = {}", show(&est.eps0));
        println!("  M  = {}\n", show(&est.m));
    }
    Ok(())
}
