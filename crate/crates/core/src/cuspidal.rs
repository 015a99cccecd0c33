//! Cuspidal words, the cuspidal acceleration of an expansion, geometric
//! lengths, convergents and denominators.
//!
//! A word is right (left) cuspidal when every step satisfies
//! `o(a_{k+1}) = o(â_k) − 1` (`+ 1`). Such a word winds around a single
//! vertex `ξ_W`, shared as an endpoint by all of its prefix cylinders. The
//! acceleration cuts an expansion greedily into maximal cuspidal words
//! `W₀ W₁ …`; the convergents are `ζ_r = G_{W₀…W_{r−1}}·ξ_{W_r}`.

use std::iter::Peekable;

use crate::error::{Error, Result};
use crate::expansion::{expansion, Expansion};
use crate::moebius::{BoundaryPoint, RealMoebius};
use crate::numeric::{ExtReal, Real};
use crate::polygon::{LabelledPolygon, Letter, Word};

pub const DEFAULT_RUN_LIMIT: usize = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum Side {
    R,
    L,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CuspType {
    Right,
    Left,
    SingleLetter,
    NotCuspidal,
}

/// Type of the single step `a → b`, if it is cuspidal.
pub fn step_side(p: &LabelledPolygon, a: Letter, b: Letter) -> Option<Side> {
    let n = p.size();
    let o = p.order(p.inverse(a));
    let ob = p.order(b);
    if ob == (o + n - 1) % n {
        Some(Side::R)
    } else if ob == (o + 1) % n {
        Some(Side::L)
    } else {
        None
    }
}

pub fn cuspidal_type(p: &LabelledPolygon, w: &Word) -> Result<CuspType> {
    w.check_admissible(p.alphabet())?;
    let letters = w.letters();
    if letters.is_empty() {
        return Err(Error::InvalidInput("cuspidal type of the empty word".into()));
    }
    if letters.len() == 1 {
        return Ok(CuspType::SingleLetter);
    }
    let mut sides = letters.windows(2).map(|s| step_side(p, s[0], s[1]));
    let first = sides.next().flatten();
    Ok(match first {
        Some(side) if sides.all(|s| s == Some(side)) => match side {
            Side::R => CuspType::Right,
            Side::L => CuspType::Left,
        },
        _ => CuspType::NotCuspidal,
    })
}

/// A maximal cuspidal block of an expansion.
#[derive(Clone, Debug)]
pub struct CuspidalWord {
    pub word: Word,
    /// `None` for single letters, whose type is undefined.
    pub side: Option<Side>,
    /// Position of the first letter in the expansion.
    pub start: usize,
}

impl CuspidalWord {
    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// Index of the anchor vertex `ξ_W`: `ξ^R_{a₀}` for right and single-letter
    /// words, `ξ^L_{a₀}` for left words.
    pub fn anchor_vertex(&self, p: &LabelledPolygon) -> usize {
        let a0 = self.word.first().expect("nonempty");
        match self.side {
            Some(Side::L) => p.left_vertex(a0),
            _ => p.right_vertex(a0),
        }
    }
}

pub fn anchor(p: &LabelledPolygon, w: &CuspidalWord) -> BoundaryPoint {
    p.vertex(w.anchor_vertex(p)).clone()
}

/// Checks that every prefix cylinder of `w` has `ξ_W` as an endpoint.
pub fn anchor_is_common_endpoint(p: &LabelledPolygon, w: &CuspidalWord) -> Result<bool> {
    let xi = anchor(p, w);
    let tau = p.tau();
    for n in 1..=w.len() {
        let c = crate::expansion::cylinder(p, &w.word.prefix(n))?;
        if !(c.arc.left.approx_eq(&xi, &tau) || c.arc.right.approx_eq(&xi, &tau)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Greedy maximal cuspidal decomposition of a letter stream.
pub struct Accelerate<I: Iterator<Item = Result<Letter>>> {
    polygon_sides: Box<dyn Fn(Letter, Letter) -> Option<Side> + Send + Sync>,
    input: Peekable<I>,
    position: usize,
    limit: usize,
    failed: bool,
}

pub fn accelerate<I>(p: &LabelledPolygon, letters: I) -> Accelerate<I::IntoIter>
where
    I: IntoIterator<Item = Result<Letter>>,
{
    accelerate_with_limit(p, letters, DEFAULT_RUN_LIMIT)
}

pub fn accelerate_with_limit<I>(p: &LabelledPolygon, letters: I, limit: usize) -> Accelerate<I::IntoIter>
where
    I: IntoIterator<Item = Result<Letter>>,
{
    // the step table is tiny; copying it keeps the iterator free of borrows
    let n = p.size();
    let mut table = vec![None; n * n];
    for a in p.letters() {
        for b in p.letters() {
            table[a.0 * n + b.0] = step_side(p, a, b);
        }
    }
    Accelerate {
        polygon_sides: Box::new(move |a: Letter, b: Letter| table[a.0 * n + b.0]),
        input: letters.into_iter().peekable(),
        position: 0,
        limit,
        failed: false,
    }
}

impl<I: Iterator<Item = Result<Letter>>> Accelerate<I> {
    fn next_word(&mut self) -> Option<Result<CuspidalWord>> {
        let first = match self.input.next()? {
            Ok(a) => a,
            Err(e) => return Some(Err(e)),
        };
        let start = self.position;
        self.position += 1;
        let mut word = Word::new(vec![first]);
        let mut side: Option<Side> = None;
        loop {
            let b = match self.input.peek() {
                None => break,
                Some(Ok(b)) => *b,
                Some(Err(_)) => {
                    // maximality cannot be decided without the next letter
                    return Some(Err(self.input.next().expect("peeked").unwrap_err()));
                }
            };
            let last = word.last().expect("nonempty");
            match (self.polygon_sides)(last, b) {
                Some(s) if side.is_none() || side == Some(s) => {
                    side = Some(s);
                    word.push(b);
                    self.input.next();
                    self.position += 1;
                    if word.len() > self.limit {
                        return Some(Err(Error::SuspectedParabolicPoint { start, limit: self.limit }));
                    }
                }
                _ => break,
            }
        }
        Some(Ok(CuspidalWord { word, side, start }))
    }
}

impl<I: Iterator<Item = Result<Letter>>> Iterator for Accelerate<I> {
    type Item = Result<CuspidalWord>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.failed {
            return None;
        }
        let r = self.next_word()?;
        self.failed = r.is_err();
        Some(r)
    }
}

/// `|W|`: send `ξ_W` to `∞` through the vertex chart; the first side `s_{a₀}`
/// and the last geodesic `G_{a₀…a_{n−1}}(s_{aₙ})` become vertical lines, and
/// the length is the distance between them.
pub fn geometric_length(p: &LabelledPolygon, w: &CuspidalWord) -> Result<Real> {
    geometric_length_in_chart(p, w, &p.chart(w.anchor_vertex(p)).to_vertex(p.cusps()))
}

/// As [`geometric_length`], with an explicit chart `X` (`X·∞ = ξ_W`).
pub fn geometric_length_in_chart(p: &LabelledPolygon, w: &CuspidalWord, chart: &RealMoebius) -> Result<Real> {
    let bits = p.bits();
    let Some(side) = w.side else {
        return Ok(Real::zero(bits));
    };
    let letters = w.word.letters();
    let (&last, prefix) = letters.split_last().expect("nonempty");
    let far = |a: Letter| match side {
        Side::R => p.vertex(p.left_vertex(a)).to_ext(),
        Side::L => p.vertex(p.right_vertex(a)).to_ext(),
    };
    let back = chart.inverse();
    let x0 = back.apply(&far(letters[0]));
    let x1 = back.apply(&p.word_map(prefix).apply(&far(last)));
    match (x0, x1) {
        (ExtReal::Finite(x0), ExtReal::Finite(x1)) => Ok((x1 - x0).abs()),
        _ => Err(Error::VertexNotResolved { vertex: w.anchor_vertex(p) }),
    }
}

/// `D(G·z_k) = |c(G·A_k)|`.
pub fn denominator(p: &LabelledPolygon, g: &RealMoebius, k: usize) -> Real {
    g.compose(&p.cusps()[k].a).c().abs()
}

#[derive(Clone, Debug)]
pub struct ConvergentRecord {
    pub index: usize,
    /// Number of letters in `W₀ … W_{r−1}`.
    pub prefix_len: usize,
    pub word: CuspidalWord,
    pub point: ExtReal,
    pub boundary: BoundaryPoint,
    pub denominator: Real,
    pub length: Real,
    pub cusp: usize,
}

impl ConvergentRecord {
    /// `D²·|α − ζ_r|`; `None` when `ζ_r = ∞`.
    pub fn quality(&self, alpha: &Real) -> Option<Real> {
        let z = self.point.finite()?;
        Some(self.denominator.square() * (alpha - z).abs())
    }
}

/// Convergents of `α` in increasing `r`.
pub struct Convergents<'a> {
    polygon: &'a LabelledPolygon,
    words: Accelerate<Expansion<'a>>,
    prefix: RealMoebius,
    prefix_len: usize,
    index: usize,
}

pub fn convergents<'a>(p: &'a LabelledPolygon, alpha: &BoundaryPoint) -> Convergents<'a> {
    Convergents {
        polygon: p,
        words: accelerate(p, expansion(p, alpha)),
        prefix: RealMoebius::identity(p.bits()),
        prefix_len: 0,
        index: 0,
    }
}

impl Iterator for Convergents<'_> {
    type Item = Result<ConvergentRecord>;

    fn next(&mut self) -> Option<Self::Item> {
        let p = self.polygon;
        let w = match self.words.next()? {
            Ok(w) => w,
            Err(e) => return Some(Err(e)),
        };
        let v = w.anchor_vertex(p);
        let chart = p.chart(v);
        let x = self.prefix.compose(&chart.b).compose(&p.cusps()[chart.cusp].a);
        let point = x.apply(&ExtReal::Infinity);
        let length = match geometric_length(p, &w) {
            Ok(l) => l,
            Err(e) => return Some(Err(e)),
        };
        let rec = ConvergentRecord {
            index: self.index,
            prefix_len: self.prefix_len,
            boundary: BoundaryPoint::from_ext(&point, p.bits()),
            point,
            denominator: x.c().abs(),
            length,
            cusp: chart.cusp,
            word: w,
        };
        self.prefix = self.prefix.compose(&p.word_map(rec.word.word.letters()));
        self.prefix_len += rec.word.len();
        self.index += 1;
        Some(Ok(rec))
    }
}
