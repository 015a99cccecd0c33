//! Möbius transformations in the upper half-plane and the unit disc.
//!
//! The two models are related by the Cayley map `φ(z) = (z − i)/(z + i)`.
//! Boundary points are kept in disc form so that `∞` needs no special case;
//! the half-plane form is derived on demand.

use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};
use crate::numeric::{Complex, ExtReal, Real};

/// `z ↦ (az + b)/(cz + d)` with real coefficients and `ad − bc = 1`.
///
/// Signs are normalised so that `c > 0`, or `c = 0` and `a > 0`.
#[derive(Clone, PartialEq)]
pub struct RealMoebius {
    a: Real,
    b: Real,
    c: Real,
    d: Real,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MoebiusKind {
    Identity,
    Parabolic,
    Elliptic,
    Hyperbolic,
}

impl RealMoebius {
    pub fn new(a: Real, b: Real, c: Real, d: Real) -> Self {
        let flip = c.is_negative() || (c.is_zero() && a.is_negative());
        if flip {
            RealMoebius { a: -a, b: -b, c: -c, d: -d }
        } else {
            RealMoebius { a, b, c, d }
        }
    }

    pub fn from_ints(m: [i64; 4], bits: u32) -> Self {
        let [a, b, c, d] = m.map(|v| Real::int(v, bits));
        RealMoebius::new(a, b, c, d)
    }

    pub fn identity(bits: u32) -> Self {
        RealMoebius::from_ints([1, 0, 0, 1], bits)
    }

    /// `z ↦ z + t`.
    pub fn translation(t: Real) -> Self {
        let bits = t.prec();
        RealMoebius::new(Real::int(1, bits), t, Real::zero(bits), Real::int(1, bits))
    }

    pub fn a(&self) -> &Real {
        &self.a
    }
    pub fn b(&self) -> &Real {
        &self.b
    }
    pub fn c(&self) -> &Real {
        &self.c
    }
    pub fn d(&self) -> &Real {
        &self.d
    }

    pub fn coefficients(&self) -> [&Real; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn prec(&self) -> u32 {
        self.a.prec()
    }

    pub fn det(&self) -> Real {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn trace(&self) -> Real {
        &self.a + &self.d
    }

    /// Action on `ℝ ∪ {∞}`.
    pub fn apply(&self, z: &ExtReal) -> ExtReal {
        match z {
            ExtReal::Infinity => {
                if self.c.is_zero() {
                    ExtReal::Infinity
                } else {
                    ExtReal::Finite(&self.a / &self.c)
                }
            }
            ExtReal::Finite(x) => {
                let den = &self.c * x + &self.d;
                if den.is_zero() {
                    ExtReal::Infinity
                } else {
                    ExtReal::Finite((&self.a * x + &self.b) / den)
                }
            }
        }
    }

    pub fn apply_real(&self, x: &Real) -> ExtReal {
        self.apply(&ExtReal::Finite(x.clone()))
    }

    /// Action on a point of the upper half-plane.
    pub fn apply_complex(&self, z: &Complex) -> Complex {
        let num = Complex::new(&self.a * &z.re + &self.b, &self.a * &z.im);
        let den = Complex::new(&self.c * &z.re + &self.d, &self.c * &z.im);
        &num / &den
    }

    /// Matrix product: `(self ∘ other)(z) = self(other(z))`.
    pub fn compose(&self, other: &RealMoebius) -> RealMoebius {
        RealMoebius::new(
            &self.a * &other.a + &self.b * &other.c,
            &self.a * &other.b + &self.b * &other.d,
            &self.c * &other.a + &self.d * &other.c,
            &self.c * &other.b + &self.d * &other.d,
        )
    }

    pub fn inverse(&self) -> RealMoebius {
        RealMoebius::new(self.d.clone(), -&self.b, -&self.c, self.a.clone())
    }

    /// `G⁻¹·∞`, the point sent to infinity.
    pub fn pole(&self) -> ExtReal {
        if self.c.is_zero() {
            ExtReal::Infinity
        } else {
            ExtReal::Finite(-(&self.d / &self.c))
        }
    }

    /// Trace classification with tolerance `tol` on `|tr| − 2`.
    pub fn classify(&self, tol: &Real) -> MoebiusKind {
        let t = self.trace().abs();
        let two = Real::int(2, t.prec());
        if t.close_to(&two, tol) {
            let id = RealMoebius::identity(self.prec());
            if self.approx_eq(&id, tol) {
                MoebiusKind::Identity
            } else {
                MoebiusKind::Parabolic
            }
        } else if t < two {
            MoebiusKind::Elliptic
        } else {
            MoebiusKind::Hyperbolic
        }
    }

    /// Equality as elements of `PSL(2, ℝ)`, coefficientwise within `tol`.
    pub fn approx_eq(&self, other: &RealMoebius, tol: &Real) -> bool {
        let same = self
            .coefficients()
            .iter()
            .zip(other.coefficients())
            .all(|(x, y)| x.close_to(y, tol));
        let opposite = self
            .coefficients()
            .iter()
            .zip(other.coefficients())
            .all(|(x, y)| x.close_to(&-y, tol));
        same || opposite
    }

    /// Conjugate into the disc by `φ`.
    pub fn to_disk(&self) -> DiskMoebius {
        let two = Real::int(2, self.prec());
        let alpha = Complex::new((&self.a + &self.d) / &two, (&self.b - &self.c) / &two);
        let beta = Complex::new((&self.a - &self.d) / &two, (&self.b + &self.c) / &two);
        DiskMoebius { alpha, beta }
    }

    /// Diameter of the image of the horoball `{Im z > t}`; `∞` when the image
    /// is again based at infinity.
    pub fn horoball_diameter(&self, t: &Real) -> ExtReal {
        if self.c.is_zero() {
            ExtReal::Infinity
        } else {
            ExtReal::Finite((t * self.c.square()).recip())
        }
    }
}

impl Mul<&RealMoebius> for &RealMoebius {
    type Output = RealMoebius;
    fn mul(self, rhs: &RealMoebius) -> RealMoebius {
        self.compose(rhs)
    }
}

impl fmt::Debug for RealMoebius {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:?}, {:?}; {:?}, {:?}]", self.a, self.b, self.c, self.d)
    }
}

/// `z ↦ (αz + β̄)/(βz + ᾱ)` with `|α|² − |β|² = 1`.
#[derive(Clone, PartialEq)]
pub struct DiskMoebius {
    pub alpha: Complex,
    pub beta: Complex,
}

impl DiskMoebius {
    pub fn new(alpha: Complex, beta: Complex) -> Self {
        DiskMoebius { alpha, beta }
    }

    pub fn identity(bits: u32) -> Self {
        DiskMoebius { alpha: Complex::one(bits), beta: Complex::zero(bits) }
    }

    pub fn prec(&self) -> u32 {
        self.alpha.prec()
    }

    pub fn det(&self) -> Real {
        self.alpha.norm_sqr() - self.beta.norm_sqr()
    }

    pub fn apply(&self, z: &Complex) -> Complex {
        let num = &(&self.alpha * z) + &self.beta.conj();
        let den = &(&self.beta * z) + &self.alpha.conj();
        &num / &den
    }

    /// `|F′(z)| = 1/|βz + ᾱ|²` (using the determinant normalisation).
    pub fn derivative_abs(&self, z: &Complex) -> Real {
        let den = &(&self.beta * z) + &self.alpha.conj();
        den.norm_sqr().recip()
    }

    pub fn apply_boundary(&self, p: &BoundaryPoint) -> BoundaryPoint {
        BoundaryPoint::from_disc(self.apply(p.disc()))
    }

    pub fn compose(&self, other: &DiskMoebius) -> DiskMoebius {
        let alpha = &(&self.alpha * &other.alpha) + &(&self.beta.conj() * &other.beta);
        let beta = &(&self.beta * &other.alpha) + &(&self.alpha.conj() * &other.beta);
        DiskMoebius { alpha, beta }
    }

    pub fn inverse(&self) -> DiskMoebius {
        DiskMoebius { alpha: self.alpha.conj(), beta: -&self.beta }
    }

    /// Conjugate back to the half-plane by `φ⁻¹`.
    pub fn to_half_plane(&self) -> RealMoebius {
        let (ar, ai) = (&self.alpha.re, &self.alpha.im);
        let (br, bi) = (&self.beta.re, &self.beta.im);
        RealMoebius::new(ar + br, ai + bi, bi - ai, ar - br)
    }

    pub fn isometric_circle(&self) -> Result<IsometricCircle> {
        if self.beta.is_zero() {
            return Err(Error::BetaZero);
        }
        let center = -&(&self.alpha.conj() / &self.beta);
        let radius = self.beta.abs().recip();
        Ok(IsometricCircle { center, radius })
    }

    pub fn approx_eq(&self, other: &DiskMoebius, tol: &Real) -> bool {
        let close = |x: &Complex, y: &Complex| x.dist(y) <= *tol;
        (close(&self.alpha, &other.alpha) && close(&self.beta, &other.beta))
            || (close(&self.alpha, &-&other.alpha) && close(&self.beta, &-&other.beta))
    }
}

impl Mul<&DiskMoebius> for &DiskMoebius {
    type Output = DiskMoebius;
    fn mul(self, rhs: &DiskMoebius) -> DiskMoebius {
        self.compose(rhs)
    }
}

impl fmt::Debug for DiskMoebius {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DiskMoebius(α={:?}, β={:?})", self.alpha, self.beta)
    }
}

/// The circle where `|F′| = 1`; `F` expands its interior.
#[derive(Clone, Debug)]
pub struct IsometricCircle {
    pub center: Complex,
    pub radius: Real,
}

impl IsometricCircle {
    /// The part of `∂𝔻` strictly inside the circle, as a clockwise arc.
    ///
    /// The intersection points are `ω(1 ± iρ)/|ω|²`, using `|ω|² = 1 + ρ²`.
    pub fn boundary_arc(&self) -> BoundaryArc {
        let w = &self.center;
        let n = w.norm_sqr();
        let rho = &self.radius;
        let left = Complex::new(&w.re - &(&w.im * rho), &w.im + &(&w.re * rho));
        let right = Complex::new(&w.re + &(&w.im * rho), &w.im - &(&w.re * rho));
        BoundaryArc::new(
            BoundaryPoint::from_disc(Complex::new(&left.re / &n, &left.im / &n)),
            BoundaryPoint::from_disc(Complex::new(&right.re / &n, &right.im / &n)),
        )
    }

    pub fn contains(&self, z: &Complex) -> bool {
        z.dist(&self.center) < self.radius
    }
}

/// `φ(z) = (z − i)/(z + i)`.
pub fn phi(z: &Complex) -> Complex {
    let i = Complex::i(z.prec());
    &(z - &i) / &(z + &i)
}

/// `φ⁻¹(w) = i(1 + w)/(1 − w)`.
pub fn phi_inv(w: &Complex) -> Complex {
    let bits = w.prec();
    let one = Complex::one(bits);
    let i = Complex::i(bits);
    &(&i * &(&one + w)) / &(&one - w)
}

/// A point of `∂𝔻`, stored as a unit complex number.
#[derive(Clone, PartialEq)]
pub struct BoundaryPoint {
    w: Complex,
}

impl BoundaryPoint {
    /// Projects onto the unit circle to shed accumulated rounding.
    pub fn from_disc(w: Complex) -> Self {
        let n = w.abs();
        BoundaryPoint { w: Complex::new(&w.re / &n, &w.im / &n) }
    }

    pub fn infinity(bits: u32) -> Self {
        BoundaryPoint { w: Complex::one(bits) }
    }

    /// `φ(x)` for real `x`: `((x² − 1) − 2ix)/(x² + 1)`.
    pub fn from_real(x: &Real) -> Self {
        let x2 = x.square();
        let den = &x2 + 1;
        BoundaryPoint { w: Complex::new((&x2 - 1) / &den, -(x * 2) / den) }
    }

    pub fn from_ext(z: &ExtReal, bits: u32) -> Self {
        match z {
            ExtReal::Finite(x) => BoundaryPoint::from_real(x),
            ExtReal::Infinity => BoundaryPoint::infinity(bits),
        }
    }

    /// `e^{−it}` for the clockwise parameter `t`.
    pub fn from_angle(t: &Real) -> Self {
        let (s, c) = t.sin_cos();
        BoundaryPoint { w: Complex::new(c, -s) }
    }

    pub fn disc(&self) -> &Complex {
        &self.w
    }

    pub fn prec(&self) -> u32 {
        self.w.prec()
    }

    /// Half-plane coordinate `φ⁻¹(w)`; exactly `∞` only at `w = 1`.
    pub fn to_ext(&self) -> ExtReal {
        let (u, v) = (&self.w.re, &self.w.im);
        // On the circle −v/(1 − u) = −(1 + u)/v; use the better-conditioned form.
        if u.is_negative() {
            ExtReal::Finite(-(v / (-(u - 1))))
        } else if v.is_zero() {
            ExtReal::Infinity
        } else {
            ExtReal::Finite(-((u + 1) / v))
        }
    }

    /// Clockwise parameter `t ∈ [0, 2π)` with `w = e^{−it}`.
    pub fn angle(&self) -> Real {
        let t = -(self.w.im.atan2(&self.w.re));
        if t.is_negative() {
            t + Real::pi(self.prec()) * 2
        } else {
            t
        }
    }

    pub fn chord(&self, other: &BoundaryPoint) -> Real {
        self.w.dist(&other.w)
    }

    pub fn approx_eq(&self, other: &BoundaryPoint, tol: &Real) -> bool {
        self.chord(other) <= *tol
    }
}

impl fmt::Debug for BoundaryPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.to_ext())
    }
}

/// A right-open boundary arc traversed clockwise from `left` (= inf, included)
/// to `right` (= sup, excluded).
#[derive(Clone, Debug)]
pub struct BoundaryArc {
    pub left: BoundaryPoint,
    pub right: BoundaryPoint,
    t_left: Real,
    length: Real,
}

impl BoundaryArc {
    pub fn new(left: BoundaryPoint, right: BoundaryPoint) -> Self {
        let t_left = left.angle();
        let t_right = right.angle();
        let mut length = &t_right - &t_left;
        if length.is_negative() {
            length = length + Real::pi(t_left.prec()) * 2;
        }
        BoundaryArc { left, right, t_left, length }
    }

    pub fn t_left(&self) -> &Real {
        &self.t_left
    }

    /// Angular length, in `[0, 2π)`.
    pub fn length(&self) -> &Real {
        &self.length
    }

    /// Clockwise angular offset of `p` from the left end, in `[0, 2π)`.
    pub fn offset(&self, p: &BoundaryPoint) -> Real {
        self.offset_angle(&p.angle())
    }

    pub fn offset_angle(&self, t: &Real) -> Real {
        let d = t - &self.t_left;
        if d.is_negative() {
            d + Real::pi(self.t_left.prec()) * 2
        } else {
            d
        }
    }

    /// Right-open membership: `left` belongs to the arc, `right` does not.
    pub fn contains(&self, p: &BoundaryPoint) -> bool {
        self.offset(p) < self.length
    }

    pub fn contains_angle(&self, t: &Real) -> bool {
        self.offset_angle(t) < self.length
    }

    /// Angular distance from `p` to the nearer endpoint.
    pub fn endpoint_distance(&self, p: &BoundaryPoint) -> Real {
        let off = self.offset(p);
        let two_pi = Real::pi(off.prec()) * 2;
        let to_left = off.clone().min(&two_pi - &off);
        let to_right = (&off - &self.length).abs();
        to_left.min(to_right)
    }

    pub fn midpoint(&self) -> BoundaryPoint {
        BoundaryPoint::from_angle(&(&self.t_left + &(&self.length / 2)))
    }

    /// Is `other` contained in `self` up to `tol` at the endpoints?
    pub fn contains_arc(&self, other: &BoundaryArc, tol: &Real) -> bool {
        let start = self.offset(&other.left);
        let two_pi = Real::pi(start.prec()) * 2;
        // wrap offsets just below 2π (left endpoints equal up to rounding) to 0
        let start = if (&two_pi - &start) <= *tol { Real::zero(start.prec()) } else { start };
        &start + &other.length <= &self.length + tol
    }

    /// Image under a disc map; boundary orientation is preserved.
    pub fn image(&self, f: &DiskMoebius) -> BoundaryArc {
        BoundaryArc::new(f.apply_boundary(&self.left), f.apply_boundary(&self.right))
    }
}
