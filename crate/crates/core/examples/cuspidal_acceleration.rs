//! Groups the letters of an expansion into maximal cuspidal words and prints
//! each word with its side, anchor cusp and geometric length.
//!
//!     cargo run --example cuspidal_acceleration [ALPHA]

use bowen_series::cuspidal::{accelerate, geometric_length};
use bowen_series::expansion::expansion;
use bowen_series::harness::AlphaInput;
use bowen_series::moebius::BoundaryPoint;
use bowen_series::numeric::Precision;
use bowen_series::polygon::{preset_golden_octagon, preset_modular};

fn main() -> bowen_series::Result<()> {
    let alpha = AlphaInput::parse(&std::env::args().nth(1).unwrap_or_else(|| "(1+sqrt:13)/7".into()))?;
    let pr = Precision::default();
    for p in [preset_modular(pr), preset_golden_octagon(pr)] {
        let xi = BoundaryPoint::from_real(&alpha.to_real(p.bits()));
        println!("{}: α = {alpha}", p.name());
        println!("  {:>3}  {:>5}  {:<24} {:>4}  {:>6}  |W|", "r", "start", "word", "side", "vertex");
        for (r, w) in accelerate(&p, expansion(&p, &xi)).take(12).enumerate() {
            let w = w?;
            let side = w.side.map_or("-".to_string(), |s| format!("{s:?}"));
            println!(
                "  {r:>3}  {:>5}  {:<24} {side:>4}  {:>6}  {:.4}",
                w.start,
                w.word.display(p.alphabet()).to_string(),
                w.anchor_vertex(&p),
                geometric_length(&p, &w)?.to_f64()
            );
        }
        println!();
    }
    Ok(())
}
