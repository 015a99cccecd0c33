use std::fmt;

use serde::Serialize;

use super::{Alphabet, CuspDatum, GroupData, Letter, VertexChart};
use crate::moebius::{BoundaryArc, BoundaryPoint, DiskMoebius, MoebiusKind, RealMoebius};
use crate::numeric::{ExtReal, Real};

/// Longest `Γ₀`-word tried when looking for a vertex chart.
const CHART_SEARCH_DEPTH: usize = 4;

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub residual: f64,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ValidationReport {
    pub group: String,
    pub checks: Vec<Check>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    fn push(&mut self, name: &str, passed: bool, residual: f64, detail: impl Into<String>) {
        self.checks.push(Check { name: name.into(), passed, residual, detail: detail.into() });
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "group {}", self.group)?;
        for c in &self.checks {
            let mark = if c.passed { "PASS" } else { "FAIL" };
            writeln!(f, "  {mark}  {:<22} residual {:<10.3e} {}", c.name, c.residual, c.detail)?;
        }
        Ok(())
    }
}

pub(super) struct Geometry {
    pub alphabet: Alphabet,
    pub disk: Vec<DiskMoebius>,
    pub arcs: Vec<BoundaryArc>,
    pub order: Vec<usize>,
    pub by_order: Vec<Letter>,
    pub vertices: Vec<BoundaryPoint>,
    pub cusps: Vec<CuspDatum>,
    pub charts: Vec<Option<VertexChart>>,
}

/// Checks every structural invariant of the group data. Never panics on bad
/// input; each failing invariant shows up as a failed [`Check`].
pub fn validate(data: &GroupData) -> ValidationReport {
    analyse(data).0
}

pub(super) fn right_cycle(
    n: usize,
    order: &[usize],
    by_order: &[Letter],
    alphabet: &Alphabet,
    start: Letter,
) -> Option<Vec<Letter>> {
    let mut cycle = vec![start];
    let mut cur = start;
    loop {
        let next = by_order[(order[alphabet.inverse(cur).0] + n - 1) % n];
        if next == start {
            return Some(cycle);
        }
        if cycle.len() > n {
            return None;
        }
        cycle.push(next);
        cur = next;
    }
}

fn max_f64(it: impl Iterator<Item = Real>) -> f64 {
    it.map(|r| r.to_f64()).fold(0.0, f64::max)
}

pub(super) fn analyse(data: &GroupData) -> (ValidationReport, Option<Geometry>) {
    let mut report = ValidationReport { group: data.name.clone(), checks: Vec::new() };
    let prec = data.precision;
    let bits = prec.bits;
    let tau = prec.tau();
    let tau_f = tau.to_f64();

    let alphabet = match Alphabet::new(data.labels.clone(), data.inverse.clone()) {
        Ok(a) => {
            report.push("involution", true, 0.0, format!("{} letters", a.len()));
            a
        }
        Err(e) => {
            report.push("involution", false, f64::NAN, e.to_string());
            return (report, None);
        }
    };
    let n = alphabet.len();
    if data.generators.len() != n {
        report.push(
            "generators",
            false,
            f64::NAN,
            format!("{} generators for {n} letters", data.generators.len()),
        );
        return (report, None);
    }

    let det_res = max_f64(data.generators.iter().map(|g| (g.det() - 1).abs()));
    report.push("determinant", det_res <= tau_f, det_res, "max |ad - bc - 1|");

    let inv_res = max_f64(alphabet.letters().map(|a| {
        let g = &data.generators[a.0];
        let h = data.generators[alphabet.inverse(a).0].inverse();
        let same = coefficient_gap(g, &h);
        let opp = coefficient_gap(g, &RealMoebius::new(-h.a(), -h.b(), -h.c(), -h.d()));
        same.min(opp)
    }));
    report.push("inverse pairs", inv_res <= tau_f, inv_res, "F_â = F_a⁻¹");

    let disk: Vec<DiskMoebius> = data.generators.iter().map(|g| g.to_disk()).collect();
    let mut circles = Vec::with_capacity(n);
    for a in alphabet.letters() {
        match disk[a.0].isometric_circle() {
            Ok(c) => circles.push(c),
            Err(_) => {
                report.push(
                    "isometric circles",
                    false,
                    f64::NAN,
                    format!("generator {} has beta = 0", alphabet.label(a)),
                );
                return (report, None);
            }
        }
    }
    let orth = max_f64(circles.iter().map(|c| (c.center.norm_sqr() - c.radius.square() - 1).abs()));
    report.push(
        "ideal vertices",
        orth <= tau_f,
        orth,
        "isometric circles orthogonal to the unit circle",
    );

    // [a] is cut out by the isometric circle of F_â.
    let arcs: Vec<BoundaryArc> =
        alphabet.letters().map(|a| circles[alphabet.inverse(a).0].boundary_arc()).collect();

    let mut offsets: Vec<(Real, Letter)> =
        alphabet.letters().map(|a| (arcs[0].offset(&arcs[a.0].left), a)).collect();
    offsets.sort_by(|x, y| x.0.total_cmp(&y.0));
    let by_order: Vec<Letter> = offsets.into_iter().map(|(_, a)| a).collect();
    let mut order = vec![0; n];
    for (i, a) in by_order.iter().enumerate() {
        order[a.0] = i;
    }

    let adjacency = max_f64((0..n).map(|i| {
        arcs[by_order[i].0].right.chord(&arcs[by_order[(i + 1) % n].0].left)
    }));
    let total = arcs.iter().fold(Real::zero(bits), |s, arc| s + arc.length());
    let two_pi = Real::pi(bits) * 2;
    let sum_res = (&total - &two_pi).abs().to_f64();
    let partition_ok = adjacency <= tau_f && sum_res <= 10.0 * tau_f;
    report.push(
        "arc partition",
        partition_ok,
        adjacency.max(sum_res),
        format!("arc lengths sum to {:.6}, clockwise order {}", total.to_f64(), {
            by_order.iter().map(|&a| alphabet.label(a)).collect::<Vec<_>>().join(" ")
        }),
    );

    let vertices: Vec<BoundaryPoint> = by_order.iter().map(|a| arcs[a.0].right.clone()).collect();

    let pairing = max_f64(alphabet.letters().flat_map(|a| {
        let ah = alphabet.inverse(a);
        let f = &disk[a.0];
        [
            f.apply_boundary(&arcs[ah.0].right).chord(&arcs[a.0].left),
            f.apply_boundary(&arcs[ah.0].left).chord(&arcs[a.0].right),
        ]
    }));
    report.push("side pairing", pairing <= tau_f, pairing, "F_a(s_â) = s_a with orientation");

    let mut action_bad = 0usize;
    for a in alphabet.letters() {
        let ah = alphabet.inverse(a);
        let outside = BoundaryArc::new(arcs[ah.0].right.clone(), arcs[ah.0].left.clone());
        for k in 1..8 {
            let t = outside.t_left() + &(outside.length() * k / 8);
            let img = disk[a.0].apply_boundary(&BoundaryPoint::from_angle(&t));
            if !arcs[a.0].contains(&img) {
                action_bad += 1;
            }
        }
    }
    report.push(
        "boundary action",
        action_bad == 0,
        action_bad as f64,
        "F_a maps the complement of [â] into [a] (sampled)",
    );

    if !partition_ok {
        return (report, None);
    }

    let mut cycles = Vec::with_capacity(n);
    let mut cycle_res = 0.0f64;
    let mut cycle_ok = true;
    for (i, &a) in by_order.iter().enumerate() {
        match right_cycle(n, &order, &by_order, &alphabet, a) {
            Some(c) => {
                let p = c.iter().fold(RealMoebius::identity(bits), |m, b| m.compose(&data.generators[b.0]));
                let fixed = BoundaryPoint::from_ext(&p.apply(&vertices[i].to_ext()), bits);
                let r = fixed.chord(&vertices[i]).to_f64();
                cycle_res = cycle_res.max(r);
                if p.classify(&tau) != MoebiusKind::Parabolic || r > tau_f {
                    cycle_ok = false;
                }
                cycles.push(Some(p));
            }
            None => {
                cycle_ok = false;
                cycles.push(None);
            }
        }
    }
    report.push("vertex cycles", cycle_ok, cycle_res, "each vertex cycle is parabolic and fixes its vertex");

    let cusp_det = max_f64(data.cusps.iter().map(|(a, _)| (a.det() - 1).abs()));
    let mu_ok = data.cusps.iter().all(|(_, mu)| mu.is_positive());
    report.push(
        "cusp data",
        !data.cusps.is_empty() && cusp_det <= tau_f && mu_ok,
        cusp_det,
        format!("{} cusp classes, det A_k = 1, μ_k > 0", data.cusps.len()),
    );
    let cusps: Vec<CuspDatum> = data
        .cusps
        .iter()
        .enumerate()
        .map(|(k, (a, mu))| CuspDatum::new(k, a.clone(), mu.clone()))
        .collect();

    let charts: Vec<Option<VertexChart>> = (0..n)
        .map(|i| {
            let p = cycles[i].as_ref()?;
            resolve_vertex(data, &alphabet, &cusps, &vertices[i], p)
        })
        .collect();
    let unresolved: Vec<usize> = (0..n).filter(|&i| charts[i].is_none()).collect();
    report.push(
        "vertex charts",
        unresolved.is_empty(),
        unresolved.len() as f64,
        if unresolved.is_empty() {
            "every vertex is B·A_k·∞ with μ_k dividing its Γ₀ width".to_string()
        } else {
            format!("unresolved vertices {unresolved:?}")
        },
    );
    let used: Vec<bool> =
        (0..cusps.len()).map(|k| charts.iter().flatten().any(|c| c.cusp == k)).collect();
    report.push(
        "cusp coverage",
        used.iter().all(|&u| u),
        used.iter().filter(|&&u| !u).count() as f64,
        "every cusp class occurs at a vertex",
    );

    let geometry = Geometry { alphabet, disk, arcs, order, by_order, vertices, cusps, charts };
    (report, Some(geometry))
}

fn coefficient_gap(g: &RealMoebius, h: &RealMoebius) -> Real {
    g.coefficients()
        .iter()
        .zip(h.coefficients())
        .map(|(x, y)| (*x - y).abs())
        .reduce(Real::max)
        .expect("four coefficients")
}

/// Finds `B = G_w·C` (with `C` the identity or a stored coset element) and a
/// cusp `k` such that `B·A_k·∞` is the vertex, and such that the `Γ₀` vertex
/// stabiliser, read in that chart, translates by a positive multiple of `μ_k`.
fn resolve_vertex(
    data: &GroupData,
    alphabet: &Alphabet,
    cusps: &[CuspDatum],
    vertex: &BoundaryPoint,
    cycle: &RealMoebius,
) -> Option<VertexChart> {
    let bits = data.precision.bits;
    let tau = data.precision.tau();
    let mut cosets = vec![RealMoebius::identity(bits)];
    cosets.extend(data.cosets.iter().cloned());

    let mut layer: Vec<(Option<Letter>, RealMoebius)> = vec![(None, RealMoebius::identity(bits))];
    for _ in 0..=CHART_SEARCH_DEPTH {
        for (_, g) in &layer {
            for c in &cosets {
                let b = g.compose(c);
                for cusp in cusps {
                    let x = b.compose(&cusp.a);
                    let at = BoundaryPoint::from_ext(&x.apply(&ExtReal::Infinity), bits);
                    if !at.approx_eq(vertex, &tau) {
                        continue;
                    }
                    let y = x.inverse().compose(cycle).compose(&x);
                    let unipotent = y.c().abs() <= tau && (y.a().abs() - 1).abs() <= tau;
                    if !unipotent {
                        continue;
                    }
                    let width = (y.b() / y.d()).abs();
                    let ratio = &width / &cusp.mu;
                    let m = ratio.round_to_integer()?;
                    let gap = (&ratio - &Real::from_integer(&m, bits)).abs();
                    if m > 0 && gap <= tau {
                        return Some(VertexChart { b, cusp: cusp.index, width });
                    }
                }
            }
        }
        let mut next = Vec::with_capacity(layer.len() * alphabet.len());
        for (last, g) in &layer {
            for a in alphabet.letters() {
                if last.is_some_and(|l| alphabet.inverse(l) == a) {
                    continue;
                }
                next.push((Some(a), g.compose(&data.generators[a.0])));
            }
        }
        layer = next;
    }
    None
}
