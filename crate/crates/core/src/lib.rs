//! Bowen–Series coding of boundary points for Fuchsian groups with cusps,
//! and Diophantine approximation by parabolic points.
//!
//! A group is given by a labelled ideal polygon with side pairings
//! ([`polygon`]). Boundary points expand into admissible words under the
//! boundary map ([`expansion`]); grouping the letters into maximal cuspidal
//! words yields convergents and their geometric lengths ([`cuspidal`]).
//! [`parabolic`] enumerates parabolic points by denominator, and [`harness`]
//! checks the approximation laws against exact oracles.

pub mod cli;
pub mod cuspidal;
pub mod error;
pub mod expansion;
pub mod harness;
pub mod moebius;
pub mod numeric;
pub mod parabolic;
pub mod polygon;

pub use error::{Error, Result};
pub use numeric::{Precision, Real};
pub use polygon::{GroupSource, LabelledPolygon};
