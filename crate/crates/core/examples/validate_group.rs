//! Validates the built-in groups and any group files given on the command line.
//!
//!     cargo run --example validate_group [FILE…]

use bowen_series::numeric::Precision;
use bowen_series::polygon::{load_group, preset_golden_octagon, preset_modular};

fn main() -> bowen_series::Result<()> {
    let pr = Precision::default();
    let mut groups = vec![preset_modular(pr), preset_golden_octagon(pr)];
    for path in std::env::args().skip(1) {
        groups.push(load_group(&path, None)?);
    }
    let mut ok = true;
    for p in &groups {
        let report = p.validate();
        println!("{report}");
        println!(
            "  {} letters, {} cusp classes, widths {:?}\n",
            p.size(),
            p.cusps().len(),
            (0..p.size()).map(|v| p.cusp_width(v).to_f64()).collect::<Vec<_>>()
        );
        ok &= report.passed();
    }
    std::process::exit(if ok { 0 } else { 1 });
}
