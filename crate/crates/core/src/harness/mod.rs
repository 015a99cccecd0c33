//! Acceptance suites: the classical continued-fraction oracle, the theorem
//! checks for a group, and figure output.

pub mod alpha;
pub mod classical;
pub mod render;
pub mod theorem;

pub use alpha::{AlphaInput, Quadratic};
pub use classical::{check_classical_bounds, classical_cf, ClassicalCf, ClassicalReport};
pub use render::render_ford;
pub use theorem::{check_theorem, TheoremConfig, TheoremReport};
