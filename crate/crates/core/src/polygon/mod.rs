//! Labelled ideal polygons: the alphabet, side pairings, boundary arcs,
//! vertices and cyclic order that drive the boundary expansion.

mod file;
mod presets;
mod validate;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::moebius::{BoundaryArc, BoundaryPoint, DiskMoebius, RealMoebius};
use crate::numeric::{ExtReal, Precision, Real};

pub use file::{load_group, save_group, GroupFile, GroupSource};
pub use presets::{golden_octagon_data, modular_data, preset_golden_octagon, preset_modular};
pub use validate::{validate, Check, ValidationReport};

/// Index of a letter in its alphabet.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Letter(pub usize);

/// `2d` labels with a fixed-point-free involution.
#[derive(Clone, Debug)]
pub struct Alphabet {
    labels: Vec<String>,
    inverse: Vec<Letter>,
}

impl Alphabet {
    pub fn new(labels: Vec<String>, inverse: Vec<usize>) -> Result<Self> {
        let n = labels.len();
        if n < 4 || n % 2 == 1 {
            return Err(Error::parse("letters", format!("need 2d >= 4 letters, got {n}")));
        }
        if inverse.len() != n {
            return Err(Error::parse("letters", "inverse table has wrong length"));
        }
        for (i, &j) in inverse.iter().enumerate() {
            if j >= n {
                return Err(Error::parse(format!("letters[{i}].inverse"), "unknown letter"));
            }
            if j == i {
                return Err(Error::parse(
                    format!("letters[{i}].inverse"),
                    format!("{} is its own inverse", labels[i]),
                ));
            }
            if inverse[j] != i {
                return Err(Error::parse(
                    format!("letters[{i}].inverse"),
                    format!("not an involution: {} -> {} -> {}", labels[i], labels[j], labels[inverse[j]]),
                ));
            }
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(Error::parse(format!("letters[{i}].label"), format!("duplicate label {l:?}")));
            }
        }
        Ok(Alphabet { labels, inverse: inverse.into_iter().map(Letter).collect() })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> {
        (0..self.labels.len()).map(Letter)
    }

    pub fn inverse(&self, a: Letter) -> Letter {
        self.inverse[a.0]
    }

    pub fn label(&self, a: Letter) -> &str {
        &self.labels[a.0]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn by_label(&self, label: &str) -> Option<Letter> {
        self.labels.iter().position(|l| l == label).map(Letter)
    }
}

/// A finite sequence of letters.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Option<Letter> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<Letter> {
        self.0.last().copied()
    }

    pub fn push(&mut self, a: Letter) {
        self.0.push(a);
    }

    pub fn pop(&mut self) -> Option<Letter> {
        self.0.pop()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn prefix(&self, n: usize) -> Word {
        Word(self.0[..n].to_vec())
    }

    /// Position of the first backtracking pair `a, â`.
    pub fn backtrack_position(&self, alphabet: &Alphabet) -> Option<usize> {
        self.0.windows(2).position(|w| w[1] == alphabet.inverse(w[0])).map(|i| i + 1)
    }

    pub fn check_admissible(&self, alphabet: &Alphabet) -> Result<()> {
        match self.backtrack_position(alphabet) {
            Some(position) => Err(Error::BacktrackingWord { position }),
            None => Ok(()),
        }
    }

    pub fn labels(&self, alphabet: &Alphabet) -> Vec<String> {
        self.0.iter().map(|&a| alphabet.label(a).to_string()).collect()
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> WordDisplay<'a> {
        WordDisplay { word: self, alphabet }
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

pub struct WordDisplay<'a> {
    word: &'a Word,
    alphabet: &'a Alphabet,
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return write!(f, "ε");
        }
        for (i, &a) in self.word.letters().iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", self.alphabet.label(a))?;
        }
        Ok(())
    }
}

/// Cusp representative of the ambient lattice: `z_k = A_k·∞`, with the
/// stabiliser of `∞` in `A_k⁻¹ Γ A_k` generated by `z ↦ z + μ_k`.
#[derive(Clone, Debug)]
pub struct CuspDatum {
    pub index: usize,
    pub a: RealMoebius,
    pub point: BoundaryPoint,
    pub mu: Real,
}

/// The horoball `B_k = A_k({Im z > 1})`.
#[derive(Clone, Debug)]
pub enum Horoball {
    AtInfinity { height: Real },
    Tangent { base: Real, diameter: Real },
}

impl CuspDatum {
    pub fn new(index: usize, a: RealMoebius, mu: Real) -> Self {
        let point = BoundaryPoint::from_ext(&a.apply(&ExtReal::Infinity), a.prec());
        CuspDatum { index, a, point, mu }
    }

    pub fn horoball(&self) -> Horoball {
        let one = Real::int(1, self.a.prec());
        match self.a.horoball_diameter(&one) {
            ExtReal::Infinity => Horoball::AtInfinity { height: self.a.a().square() },
            ExtReal::Finite(diameter) => {
                Horoball::Tangent { base: self.a.a() / self.a.c(), diameter }
            }
        }
    }
}

/// Raw group description: what a group file or a preset provides.
#[derive(Clone, Debug)]
pub struct GroupData {
    pub name: String,
    pub precision: Precision,
    pub labels: Vec<String>,
    pub inverse: Vec<usize>,
    /// Half-plane side pairings `G_a`, one per letter.
    pub generators: Vec<RealMoebius>,
    /// `(A_k, μ_k)` for each cusp class of the ambient lattice.
    pub cusps: Vec<(RealMoebius, Real)>,
    /// Extra elements of the ambient lattice used (with `Γ₀`-words) to reach
    /// the polygon vertices from the cusp points. The identity is implicit.
    pub cosets: Vec<RealMoebius>,
}

/// How a polygon vertex is written as `B·A_k·∞` with `B` in the ambient
/// lattice; `width` is the translation length of the vertex stabiliser in
/// `Γ₀`, measured in the chart `B A_k`.
#[derive(Clone, Debug)]
pub struct VertexChart {
    pub b: RealMoebius,
    pub cusp: usize,
    pub width: Real,
}

impl VertexChart {
    /// `X = B·A_k`, which sends `∞` to the vertex.
    pub fn to_vertex(&self, cusps: &[CuspDatum]) -> RealMoebius {
        self.b.compose(&cusps[self.cusp].a)
    }
}

/// A validated labelled ideal polygon.
#[derive(Clone, Debug)]
pub struct LabelledPolygon {
    data: GroupData,
    alphabet: Alphabet,
    disk: Vec<DiskMoebius>,
    arcs: Vec<BoundaryArc>,
    order: Vec<usize>,
    by_order: Vec<Letter>,
    vertices: Vec<BoundaryPoint>,
    cusps: Vec<CuspDatum>,
    charts: Vec<VertexChart>,
}

impl LabelledPolygon {
    /// Validates `data` and builds the polygon, or returns the failing report.
    pub fn new(data: GroupData) -> Result<Self> {
        let (report, geometry) = validate::analyse(&data);
        match geometry {
            Some(g) if report.passed() => Ok(LabelledPolygon {
                alphabet: g.alphabet,
                disk: g.disk,
                arcs: g.arcs,
                order: g.order,
                by_order: g.by_order,
                vertices: g.vertices,
                cusps: g.cusps,
                charts: g.charts.into_iter().map(|c| c.expect("validated")).collect(),
                data,
            }),
            _ => Err(Error::Validation(Box::new(report))),
        }
    }

    pub fn validate(&self) -> ValidationReport {
        validate::validate(&self.data)
    }

    pub fn data(&self) -> &GroupData {
        &self.data
    }

    pub fn name(&self) -> &str {
        &self.data.name
    }

    pub fn precision(&self) -> Precision {
        self.data.precision
    }

    pub fn bits(&self) -> u32 {
        self.data.precision.bits
    }

    pub fn tau(&self) -> Real {
        self.data.precision.tau()
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    /// Number of letters, `2d`.
    pub fn size(&self) -> usize {
        self.alphabet.len()
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> {
        self.alphabet.letters()
    }

    pub fn inverse(&self, a: Letter) -> Letter {
        self.alphabet.inverse(a)
    }

    pub fn label(&self, a: Letter) -> &str {
        self.alphabet.label(a)
    }

    /// `G_a`, the half-plane side pairing.
    pub fn generator(&self, a: Letter) -> &RealMoebius {
        &self.data.generators[a.0]
    }

    /// `F_a = φ G_a φ⁻¹`.
    pub fn disk_generator(&self, a: Letter) -> &DiskMoebius {
        &self.disk[a.0]
    }

    /// `[a]_𝔻`, the right-open arc on which the boundary map applies `F_a⁻¹`.
    pub fn arc(&self, a: Letter) -> &BoundaryArc {
        &self.arcs[a.0]
    }

    /// Cyclic position `o(a)`; increases clockwise, `o = 0` for the first letter.
    pub fn order(&self, a: Letter) -> usize {
        self.order[a.0]
    }

    pub fn letter_at(&self, o: usize) -> Letter {
        self.by_order[o % self.size()]
    }

    /// Vertex `i` is `ξ^R` of the letter at position `i`, i.e. `ξ^L` of the next.
    pub fn vertex(&self, i: usize) -> &BoundaryPoint {
        &self.vertices[i]
    }

    pub fn vertices(&self) -> &[BoundaryPoint] {
        &self.vertices
    }

    pub fn vertex_ext(&self, i: usize) -> ExtReal {
        self.vertices[i].to_ext()
    }

    /// Index of `ξ^R_a`.
    pub fn right_vertex(&self, a: Letter) -> usize {
        self.order(a)
    }

    /// Index of `ξ^L_a`.
    pub fn left_vertex(&self, a: Letter) -> usize {
        (self.order(a) + self.size() - 1) % self.size()
    }

    /// Is vertex `v` an endpoint of the side `s_a` (equivalently of `[a]`)?
    pub fn is_endpoint(&self, v: usize, a: Letter) -> bool {
        v == self.right_vertex(a) || v == self.left_vertex(a)
    }

    pub fn vertex_index(&self, p: &BoundaryPoint) -> Option<usize> {
        let tau = self.tau();
        self.vertices.iter().position(|v| v.approx_eq(p, &tau))
    }

    pub fn cusps(&self) -> &[CuspDatum] {
        &self.cusps
    }

    /// `max_k μ_k`.
    pub fn mu_max(&self) -> Real {
        self.cusps
            .iter()
            .map(|c| c.mu.clone())
            .reduce(Real::max)
            .expect("at least one cusp")
    }

    pub fn chart(&self, v: usize) -> &VertexChart {
        &self.charts[v]
    }

    /// `G_w = G_{a₀} ∘ … ∘ G_{aₙ}`.
    pub fn word_map(&self, w: &[Letter]) -> RealMoebius {
        w.iter()
            .fold(RealMoebius::identity(self.bits()), |acc, &a| acc.compose(self.generator(a)))
    }

    pub fn disk_word_map(&self, w: &[Letter]) -> DiskMoebius {
        w.iter()
            .fold(DiskMoebius::identity(self.bits()), |acc, &a| acc.compose(self.disk_generator(a)))
    }

    /// The vertex cycle transformation at `ξ^R_a`: the composition of the
    /// right cuspidal cycle `a₀ = a, o(a_{k+1}) = o(â_k) − 1` until it returns.
    pub fn vertex_cycle(&self, a: Letter) -> Vec<Letter> {
        validate::right_cycle(self.size(), &self.order, &self.by_order, &self.alphabet, a)
            .expect("validated polygon has closed cycles")
    }

    /// Translation length, in the chart of vertex `v`, of the primitive
    /// parabolic of this group fixing the vertex. For a group coded through a
    /// finite-index subgroup this is a multiple of the ambient `μ_k`.
    pub fn cusp_width(&self, v: usize) -> Real {
        let a = self.letters().find(|&a| self.right_vertex(a) == v).expect("every vertex ends a side");
        let x = self.chart(v).to_vertex(&self.cusps);
        let t = x.inverse().compose(&self.word_map(&self.vertex_cycle(a))).compose(&x);
        (t.b() / t.a()).abs()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn alphabet_rejects_non_involution() {
        assert!(Alphabet::new(labels(&["a", "A", "b", "B"]), vec![1, 0, 3, 2]).is_ok());
        let e = Alphabet::new(labels(&["a", "A", "b", "B"]), vec![1, 2, 3, 0]).unwrap_err();
        assert!(matches!(e, Error::Parse { .. }));
        let e = Alphabet::new(labels(&["a", "A", "b", "B"]), vec![0, 1, 3, 2]).unwrap_err();
        assert!(e.to_string().contains("own inverse"));
    }

    #[test]
    fn backtracking_detection() {
        let al = Alphabet::new(labels(&["a", "A", "b", "B"]), vec![1, 0, 3, 2]).unwrap();
        let w = Word::new(vec![Letter(0), Letter(2), Letter(3)]);
        assert_eq!(w.backtrack_position(&al), Some(2));
        let ok = Word::new(vec![Letter(0), Letter(0), Letter(2)]);
        assert!(ok.check_admissible(&al).is_ok());
        assert_eq!(ok.display(&al).to_string(), "a a b");
    }
}
