//! Parabolic points: reduced forms, a pruned enumeration of all points with
//! bounded denominator, and empirical estimates of the constants that govern
//! approximation by them.
//!
//! Every parabolic point is uniquely `G_{b₀…b_m}·ζ` with `ζ` a polygon vertex
//! that is not an endpoint of the side `e_{b̂_m}`. The enumeration walks those
//! reduced forms breadth first.
//!
//! Pruning uses `c(G_w X) = c_w·(a_X − e·c_X)` with `e = G_w⁻¹·∞`, the pole of
//! `G_w`, which lies in the closed arc `[m̂]` (`m` the last letter of `w`). So
//! every descendant of `w` has denominator at least `|c_w|·λ_m`, where `λ_m`
//! bounds `|a_X − e·c_X|` from below over continuations `X`. `λ_m` is first
//! estimated by a shallow search; each denominator found later is checked
//! against the bound of its ancestors, and a violation lowers `λ_m` and
//! restarts the walk, so the final result never relied on a false bound.

use rayon::prelude::*;
use serde::Serialize;

use crate::cuspidal::convergents;
use crate::error::{Error, Result};
use crate::moebius::{BoundaryPoint, RealMoebius};
use crate::numeric::{ExtReal, Real};
use crate::polygon::{LabelledPolygon, Letter, Word};

/// Depth of the search that seeds `λ_m`.
const LAMBDA_DEPTH: usize = 4;
pub const DEFAULT_BUDGET: usize = 20_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ReducedForm {
    pub word: Word,
    pub vertex: usize,
}

impl ReducedForm {
    /// `G_w·B_ζ·A_k`, which sends `∞` to the point.
    pub fn chart(&self, p: &LabelledPolygon) -> RealMoebius {
        let c = p.chart(self.vertex);
        p.word_map(self.word.letters()).compose(&c.to_vertex(p.cusps()))
    }

    pub fn point(&self, p: &LabelledPolygon) -> ExtReal {
        p.word_map(self.word.letters()).apply(&p.vertex_ext(self.vertex))
    }

    pub fn denominator(&self, p: &LabelledPolygon) -> Real {
        self.chart(p).c().abs()
    }
}

/// Rewrites `G_w·ζ` into reduced form: while `ζ` is an endpoint of `[â]` for
/// the last letter `a`, replace `(w·a, ζ)` by `(w, G_a·ζ)`. Side pairings map
/// endpoints to endpoints, so this is purely combinatorial.
pub fn reduced_form(p: &LabelledPolygon, w: &Word, vertex: usize) -> Result<ReducedForm> {
    w.check_admissible(p.alphabet())?;
    if vertex >= p.size() {
        return Err(Error::InvalidInput(format!("no vertex {vertex}")));
    }
    let mut word = w.clone();
    let mut v = vertex;
    while let Some(a) = word.last() {
        let ah = p.inverse(a);
        if v == p.right_vertex(ah) {
            v = p.left_vertex(a);
        } else if v == p.left_vertex(ah) {
            v = p.right_vertex(a);
        } else {
            break;
        }
        word.pop();
    }
    Ok(ReducedForm { word, vertex: v })
}

#[derive(Clone, Debug)]
pub struct ParabolicPoint {
    pub point: Real,
    pub denominator: Real,
    pub form: ReducedForm,
    pub cusp: usize,
}

#[derive(Clone, Debug, Serialize)]
struct PointLine {
    point: String,
    #[serde(rename = "D")]
    d: String,
    word: Vec<String>,
    vertex: String,
}

#[derive(Clone, Debug)]
pub struct Enumeration {
    pub q_max: Real,
    pub window: (Real, Real),
    /// Sorted by position.
    pub points: Vec<ParabolicPoint>,
    pub complete: bool,
    pub nodes: usize,
    pub restarts: usize,
    /// Points reached by two different reduced forms; always 0 unless the
    /// group data is inconsistent.
    pub duplicates: usize,
    /// The pruning constants the final walk used, per last letter.
    pub lambda: Vec<Real>,
    pub delta: Vec<Real>,
}

impl Enumeration {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// One JSON object per line.
    pub fn to_json_lines(&self, p: &LabelledPolygon) -> String {
        let mut out = String::new();
        for pt in &self.points {
            let line = PointLine {
                point: pt.point.to_decimal(40),
                d: pt.denominator.to_decimal(40),
                word: pt.form.word.labels(p.alphabet()),
                vertex: p.vertex_ext(pt.form.vertex).to_decimal(20),
            };
            out.push_str(&serde_json::to_string(&line).expect("serialisable"));
            out.push('\n');
        }
        out
    }

    /// Points within `radius` of `x`.
    pub fn near<'a>(&'a self, x: &'a Real, radius: &'a Real) -> impl Iterator<Item = &'a ParabolicPoint> {
        let lo = x - radius;
        let start = self.points.partition_point(|q| q.point < lo);
        self.points[start..].iter().take_while(move |q| (&q.point - x) <= *radius)
    }
}

#[derive(Clone, Debug)]
pub struct EnumerationConfig {
    pub q_max: Real,
    pub window: (Real, Real),
    pub budget: usize,
}

impl EnumerationConfig {
    /// Default window: the hull of the finite polygon vertices.
    pub fn new(p: &LabelledPolygon, q_max: Real) -> Self {
        EnumerationConfig { q_max, window: default_window(p), budget: DEFAULT_BUDGET }
    }

    pub fn window(mut self, lo: Real, hi: Real) -> Self {
        self.window = (lo, hi);
        self
    }

    pub fn budget(mut self, budget: usize) -> Self {
        self.budget = budget;
        self
    }
}

pub fn default_window(p: &LabelledPolygon) -> (Real, Real) {
    let finite: Vec<Real> = (0..p.size()).filter_map(|i| p.vertex_ext(i).finite().cloned()).collect();
    let lo = finite.iter().cloned().reduce(Real::min).expect("finite vertices");
    let hi = finite.iter().cloned().reduce(Real::max).expect("finite vertices");
    (lo, hi)
}

/// All parabolic points with `0 < D ≤ q_max` in the default window.
pub fn enumerate_points(p: &LabelledPolygon, q_max: &Real) -> Result<Enumeration> {
    enumerate_with(p, &EnumerationConfig::new(p, q_max.clone()))
}

pub fn enumerate_in(p: &LabelledPolygon, q_max: &Real, lo: &Real, hi: &Real) -> Result<Enumeration> {
    enumerate_with(p, &EnumerationConfig::new(p, q_max.clone()).window(lo.clone(), hi.clone()))
}

/// Which constant a bound was built from, and the factor it was multiplied by.
#[derive(Clone)]
struct Binding {
    slot: usize,
    factor: Real,
}

struct Node {
    word: Vec<Letter>,
    g: RealMoebius,
    /// Largest bound among the ancestors.
    bound: Real,
    binding: Option<Binding>,
}

struct Violation {
    slot: usize,
    ratio: Real,
}

pub fn enumerate_with(p: &LabelledPolygon, cfg: &EnumerationConfig) -> Result<Enumeration> {
    let (mut lambda, mut delta): (Vec<Real>, Vec<Real>) = p.letters().map(|m| estimate_bounds(p, m)).unzip();
    let n = p.size();
    let mut restarts = 0;
    loop {
        let constants: Vec<Real> = lambda.iter().chain(&delta).cloned().collect();
        match walk(p, cfg, &constants) {
            Ok(mut e) => {
                e.restarts = restarts;
                e.lambda = lambda;
                e.delta = delta;
                return if e.complete {
                    Ok(e)
                } else {
                    Err(Error::BudgetExceeded { budget: cfg.budget, partial: Box::new(e) })
                };
            }
            Err(violations) => {
                restarts += 1;
                for v in violations {
                    let lowered = v.ratio * 999 / 1000;
                    let slot = if v.slot < n { &mut lambda[v.slot] } else { &mut delta[v.slot - n] };
                    if lowered < *slot {
                        *slot = lowered;
                    }
                }
            }
        }
    }
}

/// Shallow estimates, over continuations `X` after the letter `m`, of
/// `min |a_X − e·c_X|` (`e` on the closed arc `[m̂]`) and of `min |c_X| > 0`.
fn estimate_bounds(p: &LabelledPolygon, m: Letter) -> (Real, Real) {
    let mh = p.inverse(m);
    let ends: Vec<Real> = [p.left_vertex(mh), p.right_vertex(mh)]
        .iter()
        .filter_map(|&v| p.vertex_ext(v).finite().cloned())
        .collect();
    let score = |x: &RealMoebius| -> Real {
        if x.c().is_zero() {
            return x.a().abs();
        }
        ends.iter()
            .map(|e| (x.a() - &(e * x.c())).abs())
            .reduce(Real::min)
            .expect("an arc has a finite endpoint")
    };
    let charts: Vec<RealMoebius> = (0..p.size()).map(|v| p.chart(v).to_vertex(p.cusps())).collect();
    let mut lambda: Option<Real> = None;
    let mut delta: Option<Real> = None;
    let mut consider = |x: RealMoebius| {
        let s = score(&x);
        if lambda.as_ref().is_none_or(|b| s < *b) {
            lambda = Some(s);
        }
        let c = x.c().abs();
        if c.is_positive() && delta.as_ref().is_none_or(|b| c < *b) {
            delta = Some(c);
        }
    };
    // u = ε: vertices not on [m̂]
    for (v, chart) in charts.iter().enumerate() {
        if !p.is_endpoint(v, mh) {
            consider(chart.clone());
        }
    }
    let mut layer: Vec<(Letter, RealMoebius)> =
        p.letters().filter(|&b| b != mh).map(|b| (b, p.generator(b).clone())).collect();
    for depth in 1..=LAMBDA_DEPTH {
        for (last, g) in &layer {
            let lh = p.inverse(*last);
            for (v, chart) in charts.iter().enumerate() {
                if !p.is_endpoint(v, lh) {
                    consider(g.compose(chart));
                }
            }
        }
        if depth == LAMBDA_DEPTH {
            break;
        }
        layer = layer
            .iter()
            .flat_map(|(last, g)| {
                let lh = p.inverse(*last);
                p.letters().filter(move |&b| b != lh).map(move |b| (b, g.compose(p.generator(b))))
            })
            .collect();
    }
    (lambda.expect("some continuation"), delta.expect("some finite continuation"))
}

/// Closed cylinder `[w]` in half-plane coordinates as `(lo, hi)`, with
/// `None` standing for an infinite end.
fn cylinder_interval(p: &LabelledPolygon, g: &RealMoebius, m: Letter) -> (Option<Real>, Option<Real>) {
    let mh = p.inverse(m);
    // the cylinder runs clockwise (downwards in ℝ) from G_w(ξ^R_m̂) to G_w(ξ^L_m̂)
    let top = g.apply(&p.vertex_ext(p.right_vertex(mh)));
    let bottom = g.apply(&p.vertex_ext(p.left_vertex(mh)));
    match (top, bottom) {
        (ExtReal::Infinity, ExtReal::Finite(b)) => (Some(b), None),
        (ExtReal::Finite(t), ExtReal::Infinity) => (None, Some(t)),
        (ExtReal::Finite(t), ExtReal::Finite(b)) => {
            if b <= t {
                (Some(b), Some(t))
            } else {
                // passes through ∞; only possible when the pole sits on an end
                (None, None)
            }
        }
        _ => (None, None),
    }
}

fn walk(p: &LabelledPolygon, cfg: &EnumerationConfig, constants: &[Real]) -> std::result::Result<Enumeration, Vec<Violation>> {
    let bits = p.bits();
    let tau = p.tau();
    let n = p.size();
    let (lo, hi) = (&cfg.window.0, &cfg.window.1);
    let lo_t = lo - &tau;
    let hi_t = hi + &tau;
    let q_t = &cfg.q_max + &tau;
    let charts: Vec<RealMoebius> = (0..n).map(|v| p.chart(v).to_vertex(p.cusps())).collect();
    // finite endpoints of the continuation arc after each letter (shared with [m̂])
    let k_ends: Vec<Vec<Real>> = p
        .letters()
        .map(|m| {
            let mh = p.inverse(m);
            [p.left_vertex(mh), p.right_vertex(mh)]
                .iter()
                .filter_map(|&v| p.vertex_ext(v).finite().cloned())
                .collect()
        })
        .collect();

    let emit = |g: &RealMoebius, word: &[Letter], v: usize, out: &mut Vec<ParabolicPoint>| {
        let x = g.compose(&charts[v]);
        if x.c().is_zero() {
            return None;
        }
        let d = x.c().abs();
        if d > q_t {
            return Some(d);
        }
        let point = x.a() / x.c();
        if point >= lo_t && point <= hi_t {
            out.push(ParabolicPoint {
                point,
                denominator: d.clone(),
                form: ReducedForm { word: Word::new(word.to_vec()), vertex: v },
                cusp: p.chart(v).cusp,
            });
        }
        Some(d)
    };

    let mut points = Vec::new();
    let root = RealMoebius::identity(bits);
    for v in 0..n {
        emit(&root, &[], v, &mut points);
    }
    let mut frontier: Vec<Node> = p
        .letters()
        .map(|a| Node { word: vec![a], g: p.generator(a).clone(), bound: Real::zero(bits), binding: None })
        .collect();
    let mut nodes = 1usize;
    let mut complete = true;

    while !frontier.is_empty() {
        nodes += frontier.len();
        if nodes > cfg.budget {
            complete = false;
            break;
        }
        let results: Vec<(Vec<ParabolicPoint>, Vec<Node>, Vec<Violation>)> = frontier
            .into_par_iter()
            .map(|node| {
                let mut pts = Vec::new();
                let mut kids = Vec::new();
                let mut bad = Vec::new();
                let m = *node.word.last().expect("nonempty");
                let mh = p.inverse(m);
                let (c_lo, c_hi) = cylinder_interval(p, &node.g, m);
                if c_hi.as_ref().is_some_and(|h| *h < lo_t) || c_lo.as_ref().is_some_and(|l| *l > hi_t) {
                    return (pts, kids, bad);
                }
                // D(G_w x) = |c_w·a_X + d_w·c_X| ≥ |c_w|·λ_m and ≥ |c_X|·min_K |c_w x + d_w|
                let c = node.g.c().abs();
                let mu = if node.g.c().is_zero() {
                    node.g.d().abs()
                } else {
                    k_ends[m.0]
                        .iter()
                        .map(|x| (node.g.c() * x + node.g.d()).abs())
                        .reduce(Real::min)
                        .expect("finite endpoint")
                };
                let mut bound = node.bound.clone();
                let mut binding = node.binding.clone();
                for (slot, factor) in [(m.0, c), (n + m.0, mu)] {
                    let b = &factor * &constants[slot];
                    if b > bound {
                        bound = b;
                        binding = Some(Binding { slot, factor });
                    }
                }
                if bound > q_t {
                    return (pts, kids, bad);
                }
                for v in 0..n {
                    if p.is_endpoint(v, mh) {
                        continue;
                    }
                    if let Some(d) = emit(&node.g, &node.word, v, &mut pts) {
                        if d < bound {
                            if let Some(b) = &binding {
                                bad.push(Violation { slot: b.slot, ratio: &d / &b.factor });
                            }
                        }
                    }
                }
                for b in p.letters() {
                    if b == mh {
                        continue;
                    }
                    let mut word = node.word.clone();
                    word.push(b);
                    kids.push(Node {
                        word,
                        g: node.g.compose(p.generator(b)),
                        bound: bound.clone(),
                        binding: binding.clone(),
                    });
                }
                (pts, kids, bad)
            })
            .collect();
        let mut next = Vec::new();
        let mut violations = Vec::new();
        for (pts, kids, bad) in results {
            points.extend(pts);
            next.extend(kids);
            violations.extend(bad);
        }
        if !violations.is_empty() {
            return Err(violations);
        }
        frontier = next;
    }

    points.sort_by(|x, y| x.point.total_cmp(&y.point).then_with(|| x.form.cmp(&y.form)));
    let mut deduped: Vec<ParabolicPoint> = Vec::with_capacity(points.len());
    let mut duplicates = 0;
    for pt in points {
        if let Some(prev) = deduped.last() {
            if BoundaryPoint::from_real(&prev.point).approx_eq(&BoundaryPoint::from_real(&pt.point), &tau) {
                duplicates += 1;
                if (pt.form.word.len(), &pt.form) < (prev.form.word.len(), &prev.form) {
                    *deduped.last_mut().expect("nonempty") = pt;
                }
                continue;
            }
        }
        deduped.push(pt);
    }
    Ok(Enumeration {
        q_max: cfg.q_max.clone(),
        window: cfg.window.clone(),
        points: deduped,
        complete,
        nodes,
        restarts: 0,
        duplicates,
        lambda: Vec::new(),
        delta: Vec::new(),
    })
}

#[derive(Clone, Debug)]
pub struct ConstantsEstimate {
    pub q_max: Real,
    pub points: usize,
    /// max `1/(|z − z′|·D·D′)` over distinct pairs.
    pub s0: Real,
    /// min `|ζ₀ − G_w⁻¹·∞|` over reduced forms.
    pub kappa1: Real,
    /// min of the two denominator ratios of reduced forms.
    pub kappa2: Real,
    /// min `D²|α − x|` over enumerated non-convergents, across the sample;
    /// `None` if no sample point saw a non-convergent.
    pub eps0: Option<Real>,
    /// max over the sample of `min_x |α − x|·D·Q`.
    pub m: Option<Real>,
    pub alphas_used: usize,
    pub alphas_skipped: usize,
}

/// Estimates the constants from an enumeration at bound `q_max` and a sample
/// of irrational `α` inside the default window.
pub fn estimate_constants(p: &LabelledPolygon, q_max: &Real, alphas: &[Real]) -> Result<ConstantsEstimate> {
    let e = enumerate_points(p, q_max)?;
    estimate_from(p, &e, alphas)
}

pub fn estimate_from(p: &LabelledPolygon, e: &Enumeration, alphas: &[Real]) -> Result<ConstantsEstimate> {
    if e.len() < 100 {
        return Err(Error::InsufficientData { found: e.len(), needed: 100 });
    }
    let bits = p.bits();
    let s0 = separation_constant(e);

    let mut kappa1: Option<Real> = None;
    let charts: Vec<RealMoebius> = (0..p.size()).map(|v| p.chart(v).to_vertex(p.cusps())).collect();
    let per_point: Vec<(Option<Real>, Option<Real>)> = e
        .points
        .par_iter()
        .filter(|pt| !pt.form.word.is_empty())
        .map(|pt| {
            let g = p.word_map(pt.form.word.letters());
            let z0 = p.vertex_ext(pt.form.vertex);
            let k1 = match (z0.finite(), g.pole()) {
                (Some(z), ExtReal::Finite(pole)) => Some((z - &pole).abs()),
                _ => None,
            };
            let d0 = &pt.denominator;
            let mut k2: Option<Real> = None;
            let mut take = |d: Real| {
                if d.is_positive() {
                    let r = d0 / &d;
                    if k2.as_ref().is_none_or(|b| r < *b) {
                        k2 = Some(r);
                    }
                }
            };
            for (v, chart) in charts.iter().enumerate() {
                if v != pt.form.vertex {
                    take(g.compose(chart).c().abs());
                }
            }
            let last = pt.form.word.last().expect("nonempty");
            let tau = p.tau();
            let z0_b = p.vertex(pt.form.vertex);
            for b in p.letters() {
                if b == p.inverse(last) {
                    continue;
                }
                let gb = g.compose(p.generator(b));
                for (v, chart) in charts.iter().enumerate() {
                    let img = BoundaryPoint::from_ext(&p.generator(b).apply(&p.vertex_ext(v)), bits);
                    if img.approx_eq(z0_b, &tau) {
                        continue;
                    }
                    take(gb.compose(chart).c().abs());
                }
            }
            (k1, k2)
        })
        .collect();
    let mut kappa2: Option<Real> = None;
    for (k1, k2) in per_point {
        if let Some(k) = k1 {
            if kappa1.as_ref().is_none_or(|b| k < *b) {
                kappa1 = Some(k);
            }
        }
        if let Some(k) = k2 {
            if kappa2.as_ref().is_none_or(|b| k < *b) {
                kappa2 = Some(k);
            }
        }
    }

    let samples: Vec<Option<(Option<Real>, Real)>> =
        alphas.par_iter().map(|alpha| alpha_statistics(p, e, alpha)).collect();
    let mut eps0: Option<Real> = None;
    let mut m: Option<Real> = None;
    let mut used = 0;
    for s in &samples {
        let Some((eps, def)) = s else { continue };
        used += 1;
        if let Some(eps) = eps {
            if eps0.as_ref().is_none_or(|b| eps < b) {
                eps0 = Some(eps.clone());
            }
        }
        if m.as_ref().is_none_or(|b| def > b) {
            m = Some(def.clone());
        }
    }

    Ok(ConstantsEstimate {
        q_max: e.q_max.clone(),
        points: e.len(),
        s0,
        kappa1: kappa1.unwrap_or_else(|| Real::zero(bits)),
        kappa2: kappa2.unwrap_or_else(|| Real::zero(bits)),
        eps0,
        m,
        alphas_used: used,
        alphas_skipped: alphas.len() - used,
    })
}

/// max `1/(|z − z′|·D·D′)`; pairs are scanned only while they could still
/// beat the running maximum.
pub fn separation_constant(e: &Enumeration) -> Real {
    let pts = &e.points;
    let bits = e.q_max.prec();
    let d_min = pts.iter().map(|p| p.denominator.clone()).reduce(Real::min).unwrap_or_else(|| Real::int(1, bits));
    let mut s = Real::zero(bits);
    for pair in pts.windows(2) {
        let v = ((&pair[1].point - &pair[0].point) * &pair[0].denominator * &pair[1].denominator).recip();
        s = s.max(v);
    }
    for i in 0..pts.len() {
        let reach = (&s * &pts[i].denominator * &d_min).recip();
        for j in i + 1..pts.len() {
            let gap = &pts[j].point - &pts[i].point;
            if gap >= reach {
                break;
            }
            let v = (&gap * &pts[i].denominator * &pts[j].denominator).recip();
            s = s.max(v);
        }
    }
    s
}

/// For one `α`: the best quality among enumerated points that are not
/// convergents (if any), and the Dirichlet deficiency. `None` when the
/// expansion of `α` fails before the convergents pass `Q`.
fn alpha_statistics(p: &LabelledPolygon, e: &Enumeration, alpha: &Real) -> Option<(Option<Real>, Real)> {
    let tau = p.tau();
    let zetas = convergent_points(p, alpha, &e.q_max).ok()?;
    let mut eps: Option<Real> = None;
    let mut def: Option<Real> = None;
    for pt in &e.points {
        let dist = (alpha - &pt.point).abs();
        let d = &dist * &pt.denominator * &e.q_max;
        if def.as_ref().is_none_or(|b| d < *b) {
            def = Some(d);
        }
        let quality = pt.denominator.square() * &dist;
        if eps.as_ref().is_some_and(|b| quality >= *b) {
            continue;
        }
        let b = BoundaryPoint::from_real(&pt.point);
        if !zetas.iter().any(|z| z.approx_eq(&b, &tau)) {
            eps = Some(quality);
        }
    }
    Some((eps, def?))
}

/// `ζ_r` with `|W_r| > 0`, continued until three of them exceed `q_max`.
pub fn convergent_points(p: &LabelledPolygon, alpha: &Real, q_max: &Real) -> Result<Vec<BoundaryPoint>> {
    let mut out = Vec::new();
    let mut beyond = 0;
    for rec in convergents(p, &BoundaryPoint::from_real(alpha)) {
        let rec = rec?;
        if !rec.length.is_positive() {
            continue;
        }
        if rec.denominator > *q_max {
            beyond += 1;
        }
        out.push(rec.boundary);
        if beyond >= 3 {
            break;
        }
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub enum DirichletOutcome {
    Witness { point: Real, denominator: Real, value: Real },
    Failure { best: Option<(Real, Real, Real)> },
}

impl DirichletOutcome {
    pub fn is_witness(&self) -> bool {
        matches!(self, DirichletOutcome::Witness { .. })
    }
}

/// Smallest positive denominator among the polygon vertices.
pub fn min_vertex_denominator(p: &LabelledPolygon) -> Real {
    (0..p.size())
        .map(|v| p.chart(v).to_vertex(p.cusps()).c().abs())
        .filter(|d| d.is_positive())
        .reduce(Real::min)
        .unwrap_or_else(|| Real::int(1, p.bits()))
}

/// Looks for `x = G·z_k` with `D ≤ Q` and `|α − x| ≤ M/(D·Q)`. Candidates
/// come from an enumeration of `[α − r, α + r]` with `r = M/(Q·D_min)`.
pub fn dirichlet_check(p: &LabelledPolygon, alpha: &Real, q: &Real, m: &Real) -> Result<DirichletOutcome> {
    let r = m / &(q * &min_vertex_denominator(p));
    let e = enumerate_in(p, q, &(alpha - &r), &(alpha + &r))?;
    Ok(dirichlet_from(&e, alpha, q, m))
}

pub fn dirichlet_from(e: &Enumeration, alpha: &Real, q: &Real, m: &Real) -> DirichletOutcome {
    let mut best: Option<(Real, Real, Real)> = None;
    for pt in &e.points {
        if pt.denominator > *q {
            continue;
        }
        let value = (alpha - &pt.point).abs() * &pt.denominator * q;
        if best.as_ref().is_none_or(|b| value < b.2) {
            best = Some((pt.point.clone(), pt.denominator.clone(), value));
        }
    }
    match best {
        Some((point, denominator, value)) if value <= *m => {
            DirichletOutcome::Witness { point, denominator, value }
        }
        best => DirichletOutcome::Failure { best },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::Precision;
    use crate::polygon::{preset_golden_octagon, preset_modular};

    /// Farey sequence of order n by the next-term recurrence.
    fn farey(n: i64) -> Vec<(i64, i64)> {
        let (mut a, mut b, mut c, mut d) = (0, 1, 1, n);
        let mut out = vec![(a, b)];
        while c <= n {
            let k = (n + b) / d;
            (a, b, c, d) = (c, d, k * c - a, k * d - b);
            out.push((a, b));
        }
        out
    }

    fn as_fractions(e: &Enumeration) -> Vec<(i64, i64)> {
        e.points
            .iter()
            .map(|pt| {
                let q = pt.denominator.to_f64().round() as i64;
                ((pt.point.to_f64() * q as f64).round() as i64, q)
            })
            .collect()
    }

    #[test]
    fn farey_oracle_itself() {
        assert_eq!(farey(5).len(), 11);
        assert_eq!(farey(5)[4], (2, 5));
    }

    #[test]
    fn modular_q5_unit_interval() {
        let p = preset_modular(Precision::default());
        let (zero, one) = (p.precision().zero(), p.precision().one());
        let e = enumerate_in(&p, &p.precision().int(5), &zero, &one).unwrap();
        assert_eq!(as_fractions(&e), farey(5));
        assert_eq!(e.duplicates, 0);
    }

    #[test]
    fn modular_matches_farey_up_to_30() {
        let p = preset_modular(Precision::default());
        let (zero, one) = (p.precision().zero(), p.precision().one());
        for q in [1, 2, 7, 13, 30] {
            let e = enumerate_in(&p, &p.precision().int(q), &zero, &one).unwrap();
            assert_eq!(as_fractions(&e), farey(q), "Q = {q}");
        }
    }

    #[test]
    fn reduced_forms_are_reduced_and_unique() {
        let p = preset_golden_octagon(Precision::default());
        let e = enumerate_points(&p, &p.precision().int(20)).unwrap();
        assert_eq!(e.duplicates, 0);
        for pt in &e.points {
            let again = reduced_form(&p, &pt.form.word, pt.form.vertex).unwrap();
            assert_eq!(again, pt.form);
            let x = pt.form.point(&p);
            assert!(x.finite().unwrap().close_to(&pt.point, &p.tau()));
        }
    }

    #[test]
    fn reduction_strips_trailing_letters() {
        let p = preset_modular(Precision::default());
        let a = p.alphabet().by_label("a").unwrap();
        let b = p.alphabet().by_label("b").unwrap();
        // G_a·(−1) = 1: −1 is an endpoint of [A]
        let minus_one = p.vertex_index(&BoundaryPoint::from_real(&p.precision().int(-1))).unwrap();
        let r = reduced_form(&p, &Word::new(vec![b, a]), minus_one).unwrap();
        assert_eq!(r.word, Word::new(vec![b]));
        assert_eq!(p.vertex_ext(r.vertex).to_f64(), 1.0);
        let before = Word::new(vec![b, a]);
        let x0 = p.word_map(before.letters()).apply(&p.vertex_ext(minus_one));
        assert!(x0.finite().unwrap().close_to(r.point(&p).finite().unwrap(), &p.tau()));
        // already reduced
        let zero = p.vertex_index(&BoundaryPoint::from_real(&p.precision().zero())).unwrap();
        let r = reduced_form(&p, &Word::empty(), zero).unwrap();
        assert_eq!(r, ReducedForm { word: Word::empty(), vertex: zero });
    }

    #[test]
    fn small_q_gives_only_vertices() {
        let p = preset_modular(Precision::default());
        let e = enumerate_points(&p, &p.precision().real(1.0)).unwrap();
        let xs: Vec<f64> = e.points.iter().map(|x| x.point.to_f64()).collect();
        assert_eq!(xs, vec![-1.0, 0.0, 1.0]);
        let e = enumerate_points(&p, &p.precision().real(0.5)).unwrap();
        assert!(e.is_empty());
    }

    #[test]
    fn budget_is_reported() {
        let p = preset_modular(Precision::default());
        let cfg = EnumerationConfig::new(&p, p.precision().int(200)).budget(50);
        match enumerate_with(&p, &cfg) {
            Err(Error::BudgetExceeded { partial, .. }) => assert!(!partial.complete),
            other => panic!("expected budget error, got {other:?}"),
        }
    }

    #[test]
    fn json_lines_shape() {
        let p = preset_modular(Precision::default());
        let (zero, one) = (p.precision().zero(), p.precision().one());
        let e = enumerate_in(&p, &p.precision().int(2), &zero, &one).unwrap();
        let text = e.to_json_lines(&p);
        let lines: Vec<serde_json::Value> = text.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
        assert_eq!(lines.len(), 3);
        assert_eq!(lines[1]["point"], "0.5");
        assert_eq!(lines[1]["D"], "2");
        assert!(lines[1]["word"].is_array());
    }

    #[test]
    fn dirichlet_classical() {
        let p = preset_modular(Precision::default());
        let alpha = Real::int(2, p.bits()).sqrt() - 1;
        let q = p.precision().int(100);
        let w = dirichlet_check(&p, &alpha, &q, &p.precision().one()).unwrap();
        assert!(w.is_witness());
        let tiny = p.precision().real(1e-6);
        let f = dirichlet_check(&p, &alpha, &q, &tiny).unwrap();
        assert!(!f.is_witness());
        // the same answer from an explicit wide enumeration
        let wide = enumerate_in(&p, &q, &p.precision().zero(), &p.precision().one()).unwrap();
        match dirichlet_from(&wide, &alpha, &q, &tiny) {
            DirichletOutcome::Failure { best: Some((_, d, v)) } => {
                assert!(d <= q);
                assert!(v > tiny);
            }
            other => panic!("expected failure, got {other:?}"),
        }
    }
}
