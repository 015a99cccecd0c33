//! The Bowen-Series boundary map, boundary expansions and cylinder arcs.
//!
//! On the arc `[a]` the map applies `F_a⁻¹`. Iterating it codes a boundary
//! point as a no-backtracking word. To keep the rounding error from being
//! expanded step after step, the `k`-th letter is read off
//! `F_{a₀…a_{k−1}}⁻¹(ξ)` evaluated from the original point.

use crate::error::{Error, Result};
use crate::moebius::{BoundaryArc, BoundaryPoint, DiskMoebius};
use crate::numeric::Real;
use crate::polygon::{LabelledPolygon, Letter, Word};

/// The letter whose arc contains `ξ`, using the right-open convention even
/// at (or within rounding of) a vertex.
pub fn locate_right_open(p: &LabelledPolygon, xi: &BoundaryPoint) -> Letter {
    locate_angle(p, &xi.angle())
}

fn locate_angle(p: &LabelledPolygon, t: &Real) -> Letter {
    // the arc whose left end comes last before t (clockwise) contains t
    p.letters()
        .map(|a| (p.arc(a).offset_angle(t), a))
        .min_by(|x, y| x.0.total_cmp(&y.0))
        .map(|(_, a)| a)
        .expect("nonempty alphabet")
}

/// Strict version of [`locate_right_open`]: refuses points within `tol` of
/// a vertex.
pub fn locate_with_tolerance(p: &LabelledPolygon, xi: &BoundaryPoint, tol: &Real) -> Result<Letter> {
    let (vertex, dist) = nearest_vertex(p, xi);
    if dist <= *tol {
        return Err(Error::NearBoundaryAmbiguity {
            vertex,
            right_open: locate_right_open(p, xi).0,
            distance: dist.to_f64(),
        });
    }
    Ok(locate_right_open(p, xi))
}

/// The unique `a` with `ξ ∈ [a]`; errors within `τ` of an arc endpoint.
pub fn locate(p: &LabelledPolygon, xi: &BoundaryPoint) -> Result<Letter> {
    locate_with_tolerance(p, xi, &p.tau())
}

fn nearest_vertex(p: &LabelledPolygon, xi: &BoundaryPoint) -> (usize, Real) {
    p.vertices()
        .iter()
        .enumerate()
        .map(|(i, v)| (i, v.chord(xi)))
        .min_by(|x, y| x.1.total_cmp(&y.1))
        .expect("polygon has vertices")
}

/// One application of the boundary map.
pub fn bs_step(p: &LabelledPolygon, xi: &BoundaryPoint) -> Result<BoundaryPoint> {
    let a = locate(p, xi)?;
    Ok(p.disk_generator(a).inverse().apply_boundary(xi))
}

/// First `n` letters of the expansion of `ξ`.
pub fn expand(p: &LabelledPolygon, xi: &BoundaryPoint, n: usize) -> Result<Word> {
    expansion(p, xi).take(n).collect()
}

pub fn expansion<'a>(p: &'a LabelledPolygon, xi: &BoundaryPoint) -> Expansion<'a> {
    let min_arc = p
        .letters()
        .map(|a| p.arc(a).length().clone())
        .reduce(Real::min)
        .expect("nonempty alphabet");
    Expansion {
        polygon: p,
        xi: xi.clone(),
        inverse: DiskMoebius::identity(p.bits()),
        depth: 0,
        min_arc,
        failed: false,
    }
}

/// Lazy letter stream of a boundary expansion.
pub struct Expansion<'a> {
    polygon: &'a LabelledPolygon,
    xi: BoundaryPoint,
    /// `F_{a₀…a_{k−1}}⁻¹`
    inverse: DiskMoebius,
    depth: usize,
    min_arc: Real,
    failed: bool,
}

impl Expansion<'_> {
    pub fn depth(&self) -> usize {
        self.depth
    }

    /// Current point `BSᵏ(ξ)`.
    pub fn current(&self) -> BoundaryPoint {
        self.inverse.apply_boundary(&self.xi)
    }

    /// Bound on the rounding error of `current()`: coefficient errors grow
    /// linearly with the depth and are magnified by at most `(|α| + |β|)²`.
    pub fn error_bound(&self) -> Real {
        let p = self.polygon;
        let size = self.inverse.alpha.abs() + self.inverse.beta.abs();
        p.precision().ulp() * size.square() * (8 * (self.depth as i64 + 2))
    }

    fn step(&mut self) -> Result<Letter> {
        let p = self.polygon;
        let err = self.error_bound();
        if err > &self.min_arc / 4 {
            return Err(Error::PrecisionExhausted { depth: self.depth, bits: p.bits() });
        }
        let eta = self.current();
        let tol = p.tau().max(err);
        let a = locate_with_tolerance(p, &eta, &tol)?;
        self.inverse = p.disk_generator(a).inverse().compose(&self.inverse);
        self.depth += 1;
        Ok(a)
    }
}

impl Iterator for Expansion<'_> {
    type Item = Result<Letter>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.failed {
            return None;
        }
        let r = self.step();
        self.failed = r.is_err();
        Some(r)
    }
}

/// `[a₀…aₙ] = F_{a₀…a_{n−1}}[aₙ]`, with the map that produced it.
#[derive(Clone, Debug)]
pub struct CylinderArc {
    pub word: Word,
    pub arc: BoundaryArc,
    pub map: DiskMoebius,
}

impl CylinderArc {
    /// Angular length.
    pub fn diameter(&self) -> &Real {
        self.arc.length()
    }
}

pub fn cylinder(p: &LabelledPolygon, w: &Word) -> Result<CylinderArc> {
    w.check_admissible(p.alphabet())?;
    let (&last, prefix) = w
        .letters()
        .split_last()
        .ok_or_else(|| Error::InvalidInput("cylinder of the empty word".into()))?;
    let map = p.disk_word_map(prefix);
    Ok(CylinderArc { word: w.clone(), arc: p.arc(last).image(&map), map })
}

#[derive(Clone, Debug)]
pub struct Decoded {
    pub point: BoundaryPoint,
    /// Half the angular length of the last cylinder.
    pub error_bound: Real,
    pub depth: usize,
}

/// Midpoint of the first cylinder of the stream narrower than `resolution`.
pub fn decode<I>(p: &LabelledPolygon, letters: I, n_max: usize, resolution: &Real) -> Result<Decoded>
where
    I: IntoIterator<Item = Letter>,
{
    let mut map = DiskMoebius::identity(p.bits());
    let mut prev: Option<Letter> = None;
    for (k, a) in letters.into_iter().take(n_max).enumerate() {
        if prev.is_some_and(|b| p.inverse(b) == a) {
            return Err(Error::BacktrackingWord { position: k });
        }
        let arc = p.arc(a).image(&map);
        if arc.length() < resolution {
            return Ok(Decoded {
                point: arc.midpoint(),
                error_bound: arc.length() / 2,
                depth: k + 1,
            });
        }
        map = map.compose(p.disk_generator(a));
        prev = Some(a);
    }
    Err(Error::ResolutionNotReached { n_max })
}
