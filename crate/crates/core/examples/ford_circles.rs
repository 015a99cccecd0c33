//! Writes SVG pictures of the horoballs at parabolic points: Ford circles for
//! the modular group, and their analogue for the octagon.
//!
//!     cargo run --example ford_circles [OUT_DIR]

use std::path::PathBuf;

use bowen_series::numeric::Precision;
use bowen_series::polygon::{preset_golden_octagon, preset_modular};
use bowen_series::harness::render_ford;

fn main() -> bowen_series::Result<()> {
    let dir = std::env::args().nth(1).map_or_else(std::env::temp_dir, PathBuf::from);
    let pr = Precision::default();
    let modular = preset_modular(pr);
    let golden = preset_golden_octagon(pr);
    for (p, q, lo, hi) in [(&modular, 20, 0.0, 1.0), (&golden, 12, -1.0, 1.0)] {
        let svg = render_ford(p, &pr.int(q), (&pr.real(lo), &pr.real(hi)))?;
        let path = dir.join(format!("{}_horoballs.svg", p.name().replace(' ', "_")));
        std::fs::write(&path, &svg)?;
        println!("{}: {} circles -> {}", p.name(), svg.matches("<circle").count(), path.display());
    }
    Ok(())
}
