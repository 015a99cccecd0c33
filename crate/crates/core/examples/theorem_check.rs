//! Both parts of the approximation theorem for one group: every convergent
//! obeys `1/(|W_r| + 2μ) ≤ D²|α − ζ_r| ≤ κ₁⁻¹`, and every parabolic point with
//! `D²|α − x| < ε` and `D ≤ Q` is a convergent.
//!
//!     cargo run --release --example theorem_check [GROUP] [EPS]
//!
//! GROUP is `golden-octagon` (default), `modular`, or a group file. EPS
//! defaults to 0.1.
//!
//! The modular preset fails the lower bound: its `μ = 1` is the width of the
//! `PSL(2, ℤ)` cusp, while the coding group `Γ(2)` translates by 2.

use bowen_series::harness::{check_theorem, AlphaInput, TheoremConfig};
use bowen_series::polygon::GroupSource;

fn main() -> bowen_series::Result<()> {
    let mut args = std::env::args().skip(1);
    let source = GroupSource::parse(&args.next().unwrap_or_else(|| "golden-octagon".into()))?;
    let eps = args.next().unwrap_or_else(|| "0.1".into());
    let p = source.build(None)?;
    let alphas: Vec<AlphaInput> = ["(3-sqrt:11)/2", "(-3+sqrt:13)/2", "(1-sqrt:7)/4", "(-2+sqrt:6)/3"]
        .iter()
        .map(|s| AlphaInput::parse(s))
        .collect::<Result<_, _>>()?;
    let cfg = TheoremConfig {
        r_max: 15,
        epsilon: p.precision().parse(&eps)?,
        q_max: p.precision().int(150),
        max_doublings: 2,
    };
    let report = check_theorem(&source, None, &alphas, &cfg)?;
    println!("{report}");
    println!("part 1: {}  part 2: {}", report.part1_passed(), report.part2_passed());
    std::process::exit(if report.passed { 0 } else { 1 });
}
