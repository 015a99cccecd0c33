//! Regular continued fractions and the two classical laws, checked in exact
//! arithmetic:
//!
//! * `1/(2 + a_{n+1}) ≤ q_n²·|α − p_n/q_n| ≤ 1/a_{n+1}`;
//! * every reduced `p/q` with `q²·|α − p/q| < 1/2` is a convergent.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;

use rug::{Integer, Rational};
use serde::Serialize;

use super::alpha::{AlphaInput, Quadratic};
use crate::error::{Error, Result};

pub const DEFAULT_SCAN: u64 = 10_000;

/// Partial quotients of `α` by the Gauss map, run exactly.
#[derive(Clone, Debug)]
pub struct PartialQuotients {
    rest: Option<Quadratic>,
}

impl PartialQuotients {
    pub fn new(alpha: &Quadratic) -> Self {
        PartialQuotients { rest: Some(alpha.clone()) }
    }
}

impl Iterator for PartialQuotients {
    type Item = Integer;

    fn next(&mut self) -> Option<Integer> {
        let x = self.rest.take()?;
        let a = x.floor();
        self.rest = x.sub_rational(&Rational::from(a.clone())).recip();
        Some(a)
    }
}

/// `p_n/q_n` from partial quotients.
pub struct Convergents<I> {
    quotients: I,
    prev: (Integer, Integer),
    cur: (Integer, Integer),
}

pub fn convergents_of<I: Iterator<Item = Integer>>(quotients: I) -> Convergents<I> {
    Convergents { quotients, prev: (Integer::new(), Integer::from(1)), cur: (Integer::from(1), Integer::new()) }
}

impl<I: Iterator<Item = Integer>> Iterator for Convergents<I> {
    type Item = (Integer, Integer);

    fn next(&mut self) -> Option<(Integer, Integer)> {
        let a = self.quotients.next()?;
        let p = Integer::from(&a * &self.cur.0) + &self.prev.0;
        let q = a * &self.cur.1 + &self.prev.1;
        self.prev = std::mem::replace(&mut self.cur, (p, q));
        Some(self.cur.clone())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassicalCf {
    pub a0: Integer,
    /// `a₁, a₂, …`
    pub quotients: Vec<Integer>,
    /// `(p_n, q_n)` for `n = 0, 1, …`
    pub convergents: Vec<(Integer, Integer)>,
}

impl ClassicalCf {
    /// `a_n`, with `a_0` at index 0.
    pub fn a(&self, n: usize) -> &Integer {
        if n == 0 {
            &self.a0
        } else {
            &self.quotients[n - 1]
        }
    }
}

impl fmt::Display for ClassicalCf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}", self.a0)?;
        for (i, a) in self.quotients.iter().enumerate() {
            write!(f, "{}{a}", if i == 0 { "; " } else { ", " })?;
        }
        write!(f, "]")
    }
}

/// `a₀; a₁ … a_{n_max}` and the matching convergents.
pub fn classical_cf(alpha: &Quadratic, n_max: usize) -> Result<ClassicalCf> {
    let qs: Vec<Integer> = PartialQuotients::new(alpha).take(n_max + 1).collect();
    if qs.len() <= n_max {
        return Err(Error::RationalDetected { partial_quotients: qs });
    }
    let convergents = convergents_of(qs.iter().cloned()).collect();
    let mut it = qs.into_iter();
    let a0 = it.next().expect("n_max + 1 ≥ 1 terms");
    Ok(ClassicalCf { a0, quotients: it.collect(), convergents })
}

/// `q²·|α − p/q|`, exactly.
fn quality(alpha: &Quadratic, p: &Integer, q: &Integer) -> Quadratic {
    let q2 = Rational::from(q.clone().square());
    alpha.sub_rational(&Rational::from((p.clone(), q.clone()))).abs().mul_rational(&q2)
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassicalRow {
    pub n: usize,
    pub p: String,
    pub q: String,
    pub a_next: String,
    pub value: f64,
    pub lower_ok: bool,
    pub upper_ok: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct LegendreScan {
    pub q_max: u64,
    /// Reduced `p/q` with `q²|α − p/q| < 1/2`.
    pub good: usize,
    /// Those among them that are not convergents, as `(p, q)`.
    pub failures: Vec<(String, String)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassicalReport {
    pub alpha: String,
    pub expansion: String,
    pub rows: Vec<ClassicalRow>,
    pub scan: LegendreScan,
    pub passed: bool,
}

impl fmt::Display for ClassicalReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "alpha = {}  cf = {}", self.alpha, self.expansion)?;
        writeln!(f, "{:>3}  {:>12}  {:>8}  {:>10}  {:>6} {:>6}", "n", "q_n", "a_n+1", "q²|α-p/q|", "lower", "upper")?;
        for r in &self.rows {
            writeln!(
                f,
                "{:>3}  {:>12}  {:>8}  {:>10.6}  {:>6} {:>6}",
                r.n,
                abbreviate(&r.q),
                abbreviate(&r.a_next),
                r.value,
                mark(r.lower_ok),
                mark(r.upper_ok)
            )?;
        }
        writeln!(
            f,
            "scan q ≤ {}: {} good approximations, {} not convergents",
            self.scan.q_max,
            self.scan.good,
            self.scan.failures.len()
        )?;
        for (p, q) in &self.scan.failures {
            writeln!(f, "  {p}/{q}")?;
        }
        write!(f, "{}", if self.passed { "PASS" } else { "FAIL" })
    }
}

fn mark(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "FAIL"
    }
}

fn abbreviate(s: &str) -> String {
    if s.len() <= 12 {
        s.to_string()
    } else {
        format!("{}…({}d)", &s[..6], s.len())
    }
}

/// Checks both laws for `n < n_max` and for every `q ≤ q_scan`.
pub fn check_classical_bounds(alpha: &AlphaInput, n_max: usize, q_scan: u64) -> Result<ClassicalReport> {
    let cf = classical_cf(&alpha.value, n_max)?;
    let rows: Vec<ClassicalRow> = (0..n_max)
        .map(|n| {
            let (p, q) = &cf.convergents[n];
            let a = cf.a(n + 1);
            let v = quality(&alpha.value, p, q);
            let lower = Rational::from((1, a.clone() + 2));
            let upper = Rational::from((1, a.clone()));
            ClassicalRow {
                n,
                p: p.to_string(),
                q: q.to_string(),
                a_next: a.to_string(),
                value: v.to_real(64).to_f64(),
                lower_ok: v.cmp_rational(&lower) != Ordering::Less,
                upper_ok: v.cmp_rational(&upper) != Ordering::Greater,
            }
        })
        .collect();
    let scan = legendre_scan(&alpha.value, q_scan);
    let passed = scan.failures.is_empty() && rows.iter().all(|r| r.lower_ok && r.upper_ok);
    Ok(ClassicalReport { alpha: alpha.label.clone(), expansion: cf.to_string(), rows, scan, passed })
}

/// For each `q ≤ q_max` only the nearest `p` can satisfy `|qα − p| < 1/(2q)`.
pub fn legendre_scan(alpha: &Quadratic, q_max: u64) -> LegendreScan {
    let convergents: HashSet<(Integer, Integer)> = convergents_of(PartialQuotients::new(alpha))
        .take_while(|(_, q)| *q <= q_max)
        .collect();
    let half = Rational::from((1, 2));
    let mut good = 0;
    let mut failures = Vec::new();
    for q in 1..=q_max {
        let qi = Integer::from(q);
        let p = alpha.mul_rational(&Rational::from(qi.clone())).add_rational(&half).floor();
        if Integer::from(p.gcd_ref(&qi)) != 1 {
            continue;
        }
        if quality(alpha, &p, &qi).cmp_rational(&half) == Ordering::Less {
            good += 1;
            if !convergents.contains(&(p.clone(), qi.clone())) {
                failures.push((p.to_string(), qi.to_string()));
            }
        }
    }
    LegendreScan { q_max, good, failures }
}
