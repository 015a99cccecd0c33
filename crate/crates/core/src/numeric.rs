//! Scalar arithmetic at a configurable binary precision.
//!
//! Everything geometric in this crate is computed with [`Real`], a thin
//! wrapper over an MPFR float. A [`Precision`] carries the working bit count
//! together with the tolerance exponent: two quantities closer than
//! `τ = 2^-tolerance_exp` are treated as equal by every geometric predicate.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use rug::float::Constant;
use rug::ops::Pow;
use rug::{Float, Integer, Rational};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const DEFAULT_BITS: u32 = 256;

/// Working precision and the matching comparison tolerance.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Precision {
    pub bits: u32,
    pub tolerance_exp: u32,
}

impl Precision {
    /// `bits` of mantissa with the default tolerance `2^-(bits/2)`.
    pub fn new(bits: u32) -> Self {
        let bits = bits.max(32);
        Precision { bits, tolerance_exp: bits / 2 }
    }

    pub fn with_tolerance_exp(self, tolerance_exp: u32) -> Self {
        Precision { tolerance_exp, ..self }
    }

    /// Same relative tolerance, twice the bits. Used by retry-on-ambiguity.
    pub fn doubled(self) -> Self {
        Precision { bits: self.bits * 2, tolerance_exp: self.tolerance_exp * 2 }
    }

    pub fn tau(&self) -> Real {
        Real::pow2(-(self.tolerance_exp as i32), self.bits)
    }

    /// Unit roundoff `2^-bits`.
    pub fn ulp(&self) -> Real {
        Real::pow2(-(self.bits as i32), self.bits)
    }

    pub fn zero(&self) -> Real {
        Real::zero(self.bits)
    }

    pub fn one(&self) -> Real {
        Real::int(1, self.bits)
    }

    pub fn int(&self, v: i64) -> Real {
        Real::int(v, self.bits)
    }

    pub fn real(&self, v: f64) -> Real {
        Real::from_f64(v, self.bits)
    }

    pub fn parse(&self, s: &str) -> Result<Real> {
        Real::parse(s, self.bits)
    }
}

impl Default for Precision {
    fn default() -> Self {
        Precision::new(DEFAULT_BITS)
    }
}

/// A finite real scalar at some binary precision.
#[derive(Clone, PartialEq, PartialOrd)]
pub struct Real(Float);

impl Real {
    pub fn zero(bits: u32) -> Self {
        Real(Float::new(bits))
    }

    pub fn int(v: i64, bits: u32) -> Self {
        Real(Float::with_val(bits, v))
    }

    pub fn from_f64(v: f64, bits: u32) -> Self {
        Real(Float::with_val(bits, v))
    }

    pub fn from_integer(v: &Integer, bits: u32) -> Self {
        Real(Float::with_val(bits, v))
    }

    pub fn from_rational(v: &Rational, bits: u32) -> Self {
        Real(Float::with_val(bits, v))
    }

    pub fn from_float(v: Float) -> Self {
        Real(v)
    }

    /// `2^e`, exact.
    pub fn pow2(e: i32, bits: u32) -> Self {
        Real(Float::with_val(bits, Float::with_val(bits, 2).pow(e)))
    }

    pub fn pi(bits: u32) -> Self {
        Real(Float::with_val(bits, Constant::Pi))
    }

    /// Parses a decimal string (`"1.25"`, `"-3e-7"`, `"17"`).
    pub fn parse(s: &str, bits: u32) -> Result<Self> {
        let t = s.trim();
        let parsed = Float::parse(t).map_err(|e| Error::Parse {
            location: format!("number {t:?}"),
            message: e.to_string(),
        })?;
        let v = Float::with_val(bits, parsed);
        if !v.is_finite() {
            return Err(Error::Parse {
                location: format!("number {t:?}"),
                message: "not a finite number".into(),
            });
        }
        Ok(Real(v))
    }

    pub fn inner(&self) -> &Float {
        &self.0
    }

    pub fn prec(&self) -> u32 {
        self.0.prec()
    }

    pub fn with_prec(&self, bits: u32) -> Self {
        Real(Float::with_val(bits, &self.0))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.cmp0() == Some(Ordering::Less)
    }

    pub fn is_positive(&self) -> bool {
        self.0.cmp0() == Some(Ordering::Greater)
    }

    pub fn abs(&self) -> Self {
        Real(self.0.clone().abs())
    }

    pub fn sqrt(&self) -> Self {
        Real(self.0.clone().sqrt())
    }

    pub fn square(&self) -> Self {
        Real(self.0.clone().square())
    }

    pub fn recip(&self) -> Self {
        Real(self.0.clone().recip())
    }

    pub fn floor(&self) -> Self {
        Real(self.0.clone().floor())
    }

    /// `(sin self, cos self)`.
    pub fn sin_cos(&self) -> (Real, Real) {
        let bits = self.prec();
        let (s, c) = self.0.clone().sin_cos(Float::new(bits));
        (Real(s), Real(c))
    }

    /// `atan2(self, x)`, in `(-π, π]`.
    pub fn atan2(&self, x: &Real) -> Self {
        let bits = self.prec().max(x.prec());
        Real(Float::with_val(bits, self.0.atan2_ref(&x.0)))
    }

    pub fn min(self, other: Real) -> Real {
        if other < self {
            other
        } else {
            self
        }
    }

    pub fn max(self, other: Real) -> Real {
        if other > self {
            other
        } else {
            self
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64()
    }

    /// Nearest integer, when it is representable.
    pub fn round_to_integer(&self) -> Option<Integer> {
        self.0.to_integer()
    }

    /// Exact rational value of the binary float.
    pub fn to_rational(&self) -> Option<Rational> {
        self.0.to_rational()
    }

    /// Decimal rendering with `digits` significant digits.
    pub fn to_decimal(&self, digits: usize) -> String {
        if self.0.is_zero() {
            return "0".into();
        }
        let s = self.0.to_string_radix(10, Some(digits));
        tidy_decimal(&s)
    }

    /// Enough digits to reproduce the value at its own precision.
    pub fn to_decimal_full(&self) -> String {
        let digits = (self.prec() as f64 * std::f64::consts::LOG10_2).ceil() as usize + 2;
        self.to_decimal(digits)
    }

    /// `|self - other| <= tol`.
    pub fn close_to(&self, other: &Real, tol: &Real) -> bool {
        (self - other).abs() <= *tol
    }

    /// Three-way comparison that reports `Equal` inside `tol`.
    pub fn cmp_tol(&self, other: &Real, tol: &Real) -> Ordering {
        let d = self - other;
        if d.abs() <= *tol {
            Ordering::Equal
        } else if d.is_negative() {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }

    /// Total order for sorting; values are always finite here.
    pub fn total_cmp(&self, other: &Real) -> Ordering {
        self.partial_cmp(other).unwrap_or(Ordering::Equal)
    }
}

// MPFR prints "1.2500000e3"-style strings; turn them into plain decimals
// with no trailing zeros where that keeps the string short.
fn tidy_decimal(s: &str) -> String {
    let (mant, exp) = match s.split_once('e') {
        Some((m, e)) => (m.to_string(), e.parse::<i64>().unwrap_or(0)),
        None => (s.to_string(), 0),
    };
    let neg = mant.starts_with('-');
    let mant = mant.trim_start_matches('-');
    let (int_part, frac_part) = mant.split_once('.').unwrap_or((mant, ""));
    let digits: String = format!("{int_part}{frac_part}");
    let point = int_part.len() as i64 + exp;
    let body = if exp.abs() > 40 {
        let frac = frac_part.trim_end_matches('0');
        if frac.is_empty() {
            format!("{int_part}e{exp}")
        } else {
            format!("{int_part}.{frac}e{exp}")
        }
    } else if point <= 0 {
        let frac = format!("{}{}", "0".repeat((-point) as usize), digits);
        let frac = frac.trim_end_matches('0');
        if frac.is_empty() {
            "0".into()
        } else {
            format!("0.{frac}")
        }
    } else if point as usize >= digits.len() {
        format!("{}{}", digits, "0".repeat(point as usize - digits.len()))
    } else {
        let (i, f) = digits.split_at(point as usize);
        let f = f.trim_end_matches('0');
        if f.is_empty() {
            i.to_string()
        } else {
            format!("{i}.{f}")
        }
    };
    if neg && body != "0" {
        format!("-{body}")
    } else {
        body
    }
}

impl fmt::Debug for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_decimal(20))
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match f.precision() {
            Some(p) => write!(f, "{}", self.to_decimal(p.max(1))),
            None => write!(f, "{}", self.to_decimal(20)),
        }
    }
}

macro_rules! real_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<&Real> for &Real {
            type Output = Real;
            fn $m(self, rhs: &Real) -> Real {
                let bits = self.prec().max(rhs.prec());
                Real(Float::with_val(bits, $tr::$m(&self.0, &rhs.0)))
            }
        }
        impl $tr<Real> for Real {
            type Output = Real;
            fn $m(self, rhs: Real) -> Real {
                $tr::$m(&self, &rhs)
            }
        }
        impl $tr<&Real> for Real {
            type Output = Real;
            fn $m(self, rhs: &Real) -> Real {
                $tr::$m(&self, rhs)
            }
        }
        impl $tr<Real> for &Real {
            type Output = Real;
            fn $m(self, rhs: Real) -> Real {
                $tr::$m(self, &rhs)
            }
        }
        impl $tr<i64> for &Real {
            type Output = Real;
            fn $m(self, rhs: i64) -> Real {
                Real(Float::with_val(self.prec(), $tr::$m(&self.0, rhs)))
            }
        }
        impl $tr<i64> for Real {
            type Output = Real;
            fn $m(self, rhs: i64) -> Real {
                $tr::$m(&self, rhs)
            }
        }
    };
}

real_binop!(Add, add);
real_binop!(Sub, sub);
real_binop!(Mul, mul);
real_binop!(Div, div);

impl Neg for Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real(-self.0)
    }
}

impl Neg for &Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real(Float::with_val(self.prec(), -&self.0))
    }
}

impl PartialEq<i64> for Real {
    fn eq(&self, other: &i64) -> bool {
        self.0 == *other
    }
}

impl PartialOrd<i64> for Real {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        self.0.partial_cmp(other)
    }
}

/// A complex number with [`Real`] parts.
#[derive(Clone, PartialEq)]
pub struct Complex {
    pub re: Real,
    pub im: Real,
}

impl Complex {
    pub fn new(re: Real, im: Real) -> Self {
        Complex { re, im }
    }

    pub fn real(re: Real) -> Self {
        let bits = re.prec();
        Complex { re, im: Real::zero(bits) }
    }

    pub fn zero(bits: u32) -> Self {
        Complex { re: Real::zero(bits), im: Real::zero(bits) }
    }

    pub fn one(bits: u32) -> Self {
        Complex::real(Real::int(1, bits))
    }

    pub fn i(bits: u32) -> Self {
        Complex { re: Real::zero(bits), im: Real::int(1, bits) }
    }

    pub fn prec(&self) -> u32 {
        self.re.prec().max(self.im.prec())
    }

    pub fn conj(&self) -> Self {
        Complex { re: self.re.clone(), im: -&self.im }
    }

    pub fn norm_sqr(&self) -> Real {
        self.re.square() + self.im.square()
    }

    pub fn abs(&self) -> Real {
        // hypot avoids the intermediate overflow of norm_sqr().sqrt()
        let bits = self.prec();
        Real(Float::with_val(bits, self.re.0.hypot_ref(&self.im.0)))
    }

    pub fn scale(&self, s: &Real) -> Self {
        Complex { re: &self.re * s, im: &self.im * s }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn recip(&self) -> Self {
        let n = self.norm_sqr();
        Complex { re: &self.re / &n, im: -(&self.im / &n) }
    }

    pub fn dist(&self, other: &Complex) -> Real {
        (self - other).abs()
    }
}

impl fmt::Debug for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?} + {:?}i)", self.re, self.im)
    }
}

impl Add<&Complex> for &Complex {
    type Output = Complex;
    fn add(self, rhs: &Complex) -> Complex {
        Complex { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl Sub<&Complex> for &Complex {
    type Output = Complex;
    fn sub(self, rhs: &Complex) -> Complex {
        Complex { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl Mul<&Complex> for &Complex {
    type Output = Complex;
    fn mul(self, rhs: &Complex) -> Complex {
        Complex {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Div<&Complex> for &Complex {
    type Output = Complex;
    fn div(self, rhs: &Complex) -> Complex {
        let n = rhs.norm_sqr();
        let num = self * &rhs.conj();
        Complex { re: &num.re / &n, im: &num.im / &n }
    }
}

impl Neg for &Complex {
    type Output = Complex;
    fn neg(self) -> Complex {
        Complex { re: -&self.re, im: -&self.im }
    }
}

macro_rules! complex_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Complex> for Complex {
            type Output = Complex;
            fn $m(self, rhs: Complex) -> Complex {
                $tr::$m(&self, &rhs)
            }
        }
        impl $tr<&Complex> for Complex {
            type Output = Complex;
            fn $m(self, rhs: &Complex) -> Complex {
                $tr::$m(&self, rhs)
            }
        }
    };
}

complex_owned!(Add, add);
complex_owned!(Sub, sub);
complex_owned!(Mul, mul);
complex_owned!(Div, div);

/// A point of `ℝ ∪ {∞}`.
#[derive(Clone, PartialEq)]
pub enum ExtReal {
    Finite(Real),
    Infinity,
}

impl ExtReal {
    pub fn finite(&self) -> Option<&Real> {
        match self {
            ExtReal::Finite(x) => Some(x),
            ExtReal::Infinity => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ExtReal::Infinity)
    }

    pub fn to_decimal(&self, digits: usize) -> String {
        match self {
            ExtReal::Finite(x) => x.to_decimal(digits),
            ExtReal::Infinity => "inf".into(),
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            ExtReal::Finite(x) => x.to_f64(),
            ExtReal::Infinity => f64::INFINITY,
        }
    }
}

impl fmt::Debug for ExtReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtReal::Finite(x) => write!(f, "{x:?}"),
            ExtReal::Infinity => write!(f, "∞"),
        }
    }
}

impl From<Real> for ExtReal {
    fn from(x: Real) -> Self {
        ExtReal::Finite(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tau_matches_exponent() {
        let p = Precision::default();
        assert_eq!(p.tolerance_exp, 128);
        let t = p.tau();
        assert_eq!(t.to_f64(), 2f64.powi(-128));
    }

    #[test]
    fn parse_and_print() {
        let x = Real::parse("1.25", 128).unwrap();
        assert_eq!(x.to_decimal(10), "1.25");
        assert_eq!(Real::int(-300, 64).to_decimal(10), "-300");
        assert_eq!(Real::parse("0.001", 128).unwrap().to_decimal(5), "0.001");
        assert!(Real::parse("abc", 64).is_err());
    }

    #[test]
    fn sqrt_two_digits() {
        let r = Real::int(2, 256).sqrt();
        assert!(r.to_decimal(30).starts_with("1.41421356237309504880168872"));
    }

    #[test]
    fn complex_division_roundtrip() {
        let bits = 128;
        let a = Complex::new(Real::from_f64(0.3, bits), Real::from_f64(-1.7, bits));
        let b = Complex::new(Real::from_f64(2.5, bits), Real::from_f64(0.25, bits));
        let q = &a / &b;
        let back = &q * &b;
        assert!(back.dist(&a) < Real::pow2(-120, bits));
    }

    #[test]
    fn tolerant_compare() {
        let p = Precision::new(128);
        let one = p.one();
        let nudged = &one + &Real::pow2(-100, 128);
        assert_eq!(one.cmp_tol(&nudged, &p.tau()), Ordering::Equal);
        assert_eq!(one.cmp_tol(&p.int(2), &p.tau()), Ordering::Less);
    }
}
