//! The classical continued-fraction laws, checked in exact arithmetic:
//! `1/(a_{n+1} + 2) < q_n²|α − p_n/q_n| < 1/a_{n+1}`, and Legendre's theorem
//! by an exhaustive scan over denominators.
//!
//!     cargo run --example classical_laws [ALPHA…]

use bowen_series::harness::{check_classical_bounds, AlphaInput};

fn main() -> bowen_series::Result<()> {
    let mut args: Vec<String> = std::env::args().skip(1).collect();
    if args.is_empty() {
        args = ["sqrt:2", "(1+sqrt:5)/2", "(3+sqrt:7)/5", "3.14159265358979323846264338327950288"]
            .map(String::from)
            .to_vec();
    }
    let mut ok = true;
    for a in &args {
        let report = check_classical_bounds(&AlphaInput::parse(a)?, 20, 5000)?;
        println!("{report}");
        ok &= report.passed;
    }
    std::process::exit(if ok { 0 } else { 1 });
}
