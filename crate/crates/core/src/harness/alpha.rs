//! Exact inputs: rationals and quadratic irrationals `a + b√n`, and the
//! textual grammar used on the command line.
//!
//! ```text
//! 1.4142135623730950488      decimal, taken exactly
//! sqrt:2                     √2
//! (1+sqrt:5)/2               (p ± q*sqrt:N)/r, q optional
//! ```

use std::cmp::Ordering;
use std::fmt;

use rug::ops::Pow;
use rug::{Float, Integer, Rational};

use crate::error::{Error, Result};
use crate::numeric::Real;

/// `a + b√n` with rational `a`, `b`; `n` is never a perfect square unless
/// `b = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quadratic {
    a: Rational,
    b: Rational,
    n: Integer,
}

impl Quadratic {
    pub fn rational(a: Rational) -> Self {
        Quadratic { a, b: Rational::new(), n: Integer::new() }
    }

    /// `(p + q√n)/r`.
    pub fn surd(p: Integer, q: Integer, n: Integer, r: Integer) -> Result<Self> {
        if r == 0 {
            return Err(Error::InvalidInput("zero denominator".into()));
        }
        if n < 0 {
            return Err(Error::InvalidInput(format!("sqrt of negative number {n}")));
        }
        let a = Rational::from((p, r.clone()));
        if n.is_perfect_square() {
            let s = n.sqrt();
            return Ok(Quadratic::rational(a + Rational::from((q * s, r))));
        }
        Ok(Quadratic { a, b: Rational::from((q, r)), n })
    }

    pub fn is_rational(&self) -> bool {
        self.b == 0
    }

    pub fn rational_part(&self) -> &Rational {
        &self.a
    }

    pub fn surd_part(&self) -> (&Rational, &Integer) {
        (&self.b, &self.n)
    }

    pub fn signum(&self) -> Ordering {
        let sa = self.a.cmp0();
        let sb = self.b.cmp0();
        if sb == Ordering::Equal || sa == sb {
            return if sa == Ordering::Equal { sb } else { sa };
        }
        if sa == Ordering::Equal {
            return sb;
        }
        // opposite signs: the larger square wins
        let a2 = Rational::from(self.a.square_ref());
        let b2n = Rational::from(self.b.square_ref()) * &self.n;
        match a2.cmp(&b2n) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => Ordering::Equal,
        }
    }

    pub fn cmp_rational(&self, r: &Rational) -> Ordering {
        self.sub_rational(r).signum()
    }

    pub fn add_rational(&self, r: &Rational) -> Self {
        Quadratic { a: Rational::from(&self.a + r), b: self.b.clone(), n: self.n.clone() }
    }

    pub fn sub_rational(&self, r: &Rational) -> Self {
        Quadratic { a: Rational::from(&self.a - r), b: self.b.clone(), n: self.n.clone() }
    }

    pub fn mul_rational(&self, r: &Rational) -> Self {
        Quadratic { a: Rational::from(&self.a * r), b: Rational::from(&self.b * r), n: self.n.clone() }
    }

    pub fn neg(&self) -> Self {
        Quadratic { a: -self.a.clone(), b: -self.b.clone(), n: self.n.clone() }
    }

    pub fn abs(&self) -> Self {
        if self.signum() == Ordering::Less {
            self.neg()
        } else {
            self.clone()
        }
    }

    /// `1/(a + b√n) = (a − b√n)/(a² − b²n)`; `None` at zero.
    pub fn recip(&self) -> Option<Self> {
        if self.signum() == Ordering::Equal {
            return None;
        }
        let norm = Rational::from(self.a.square_ref()) - Rational::from(self.b.square_ref()) * &self.n;
        Some(Quadratic {
            a: Rational::from(&self.a / &norm),
            b: -Rational::from(&self.b / &norm),
            n: self.n.clone(),
        })
    }

    pub fn floor(&self) -> Integer {
        if self.is_rational() {
            return self.a.floor_ref().into();
        }
        let bits = 64 + self.a.numer().significant_bits().max(self.a.denom().significant_bits())
            + self.b.numer().significant_bits().max(self.b.denom().significant_bits())
            + self.n.significant_bits();
        let approx = self.to_float(bits);
        let mut f = approx.floor().to_integer().expect("finite");
        while self.cmp_rational(&Rational::from(f.clone())) == Ordering::Less {
            f -= 1;
        }
        while self.cmp_rational(&Rational::from(f.clone() + 1)) != Ordering::Less {
            f += 1;
        }
        f
    }

    fn to_float(&self, bits: u32) -> Float {
        let s = Float::with_val(bits, self.n.clone()).sqrt();
        Float::with_val(bits, &self.a) + Float::with_val(bits, &self.b) * s
    }

    /// Correctly rounded to `bits` (evaluated with guard bits).
    pub fn to_real(&self, bits: u32) -> Real {
        Real::from_float(Float::with_val(bits, self.to_float(bits + 64)))
    }
}

impl fmt::Display for Quadratic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            write!(f, "{}", self.a)
        } else {
            write!(f, "{} + {}·√{}", self.a, self.b, self.n)
        }
    }
}

/// A labelled exact input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaInput {
    pub label: String,
    pub value: Quadratic,
}

impl AlphaInput {
    pub fn parse(text: &str) -> Result<Self> {
        let value = parse_value(text.trim())
            .map_err(|m| Error::parse(format!("alpha {text:?}"), m))?;
        Ok(AlphaInput { label: text.trim().to_string(), value })
    }

    pub fn new(label: impl Into<String>, value: Quadratic) -> Self {
        AlphaInput { label: label.into(), value }
    }

    pub fn to_real(&self, bits: u32) -> Real {
        self.value.to_real(bits)
    }
}

impl fmt::Display for AlphaInput {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label)
    }
}

fn parse_value(s: &str) -> std::result::Result<Quadratic, String> {
    if let Some(n) = s.strip_prefix("sqrt:") {
        return surd_of(Integer::new(), Integer::from(1), parse_int(n)?, Integer::from(1));
    }
    if s.contains("sqrt:") {
        let (body, r) = match s.strip_prefix('(') {
            Some(rest) => {
                let (inner, tail) = rest.split_once(')').ok_or("missing ')'")?;
                let r = match tail {
                    "" => Integer::from(1),
                    t => parse_int(t.strip_prefix('/').ok_or("expected '/' after ')'")?)?,
                };
                (inner, r)
            }
            None => (s, Integer::from(1)),
        };
        // split "p±q*sqrt:N" at the sign before the surd term
        let at = body.find("sqrt:").expect("checked");
        let head = &body[..at];
        let n = parse_int(&body[at + 5..])?;
        let cut = head.rfind(['+', '-']).filter(|&i| i > 0).unwrap_or(0);
        let (p, coef) = head.split_at(cut);
        let p = if p.is_empty() { Integer::new() } else { parse_int(p)? };
        let coef = coef.strip_suffix('*').unwrap_or(coef);
        let q = match coef {
            "" | "+" => Integer::from(1),
            "-" => Integer::from(-1),
            c => parse_int(c.strip_prefix('+').unwrap_or(c))?,
        };
        return surd_of(p, q, n, r);
    }
    if let Some((num, den)) = s.split_once('/') {
        let den = parse_int(den)?;
        if den == 0 {
            return Err("zero denominator".into());
        }
        return Ok(Quadratic::rational(Rational::from((parse_int(num)?, den))));
    }
    parse_decimal(s).map(Quadratic::rational)
}

fn surd_of(p: Integer, q: Integer, n: Integer, r: Integer) -> std::result::Result<Quadratic, String> {
    Quadratic::surd(p, q, n, r).map_err(|e| e.to_string())
}

fn parse_int(s: &str) -> std::result::Result<Integer, String> {
    Integer::from_str_radix(s.trim(), 10).map_err(|_| format!("not an integer: {s:?}"))
}

pub fn parse_decimal(s: &str) -> std::result::Result<Rational, String> {
    let (neg, body) = match s.strip_prefix('-') {
        Some(b) => (true, b),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    let (int, frac) = body.split_once('.').unwrap_or((body, ""));
    if int.is_empty() && frac.is_empty()
        || !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit())
    {
        return Err(format!("not a decimal number: {s:?}"));
    }
    let digits = format!("{int}{frac}");
    let num = Integer::from_str_radix(if digits.is_empty() { "0" } else { &digits }, 10)
        .map_err(|e| e.to_string())?;
    let den = Integer::from(10).pow(frac.len() as u32);
    let r = Rational::from((num, den));
    Ok(if neg { -r } else { r })
}
